#ifndef FGSC_ROOTSYSTEM_HPP
#define FGSC_ROOTSYSTEM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgsc/errors.hpp"

namespace fgsc {

// Element of the root lattice in simple-root coordinates (rank <= 4).
using WeightVec = std::array<int, 4>;

inline WeightVec wv_zero() { return WeightVec{0, 0, 0, 0}; }
inline WeightVec wv_add(const WeightVec &a, const WeightVec &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline WeightVec wv_sub(const WeightVec &a, const WeightVec &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline WeightVec wv_neg(const WeightVec &a) {
  return {-a[0], -a[1], -a[2], -a[3]};
}
inline bool wv_is_zero(const WeightVec &a) {
  return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0;
}

using Word = std::vector<int>; // generator letters, 0-based internally

// Cartan data for a finite root system of rank <= 4, with the Weyl group
// fully materialized: normal forms (lexicographically least reduced words),
// lengths, inversion sets, Cayley tables and Bruhat order.
//
// Supported: A1..A3, B2, C3, G2.  B2 convention: alpha_1 is the long root,
// <alpha_1, alpha_2^vee> = -2 and <alpha_2, alpha_1^vee> = -1, so the m=4
// braid pair is oriented as in the twisted braid relation it pins down.
class RootSystem {
public:
  using Elt = int; // index into the element table

  static RootSystem build(char type, int rank);
  static RootSystem build(const std::string &label); // "A2", "B2", ...

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  // --- roots ---
  int num_roots() const { return int(roots_.size()); }
  int num_positive() const { return num_pos_; }
  const WeightVec &root(int idx) const { return roots_[idx]; }
  // positive roots occupy indices [0, num_positive()); index i < rank is
  // the i-th simple root
  bool is_positive_root(int idx) const { return idx < num_pos_; }
  int root_index(const WeightVec &v) const; // -1 when v is not a root
  int negate_root(int idx) const { return neg_root_[idx]; }
  int cartan(int i, int j) const { return cartan_[i][j]; } // <alpha_j, alpha_i^vee>
  int pair_with_coroot(const WeightVec &lam, int i) const; // <lam, alpha_i^vee>
  WeightVec reflect(int i, const WeightVec &lam) const;

  // --- Weyl group ---
  int order() const { return int(lengths_.size()); }
  Elt identity() const { return 0; }
  Elt longest() const { return longest_; }
  int length(Elt w) const { return lengths_[w]; }
  Elt simple(int i) const { return right_mul_[0][i]; }
  Elt mul_gen(Elt w, int i) const { return right_mul_[w][i]; } // w * s_i
  Elt gen_mul(int i, Elt w) const { return left_mul_[w][i]; }  // s_i * w
  Elt mul(Elt a, Elt b) const;
  Elt inverse(Elt w) const { return inverse_[w]; }
  WeightVec act(Elt w, const WeightVec &lam) const;
  // w * alpha_root as a root index
  int act_on_root(Elt w, int root_idx) const { return root_action_[w][root_idx]; }

  bool right_descent(Elt w, int i) const {
    return length(mul_gen(w, i)) < length(w);
  }
  bool left_descent(Elt w, int i) const {
    return length(gen_mul(i, w)) < length(w);
  }

  // Lexicographically least reduced word; the canonical normal form.
  const Word &normal_form(Elt w) const { return normal_form_[w]; }
  Elt from_word(const Word &word) const;
  std::string word_string(const Word &word) const; // "121" (1-based letters)
  Word parse_word(const std::string &s) const;

  // Positive-root indices alpha with w^{-1} alpha < 0, sorted.
  const std::vector<int> &inversion_set(Elt w) const { return inversions_[w]; }

  // All reduced words, by descent recursion on ascending first letter.
  std::vector<Word> reduced_words(Elt w) const;

  // Strong Bruhat order, decided by the greedy subword scan of one fixed
  // reduced word of w.
  bool bruhat_leq(Elt u, Elt w) const { return bruhat_[w][u]; }

  // beta_k = s_{i_1}...s_{i_{k-1}} alpha_{i_k} for a reduced word; as a set
  // this is the inversion set of the product.
  std::vector<WeightVec> reflection_order(const Word &word) const;

  bool is_reduced(const Word &word) const;

  // Elements sorted by (length, normal form): the canonical iteration order.
  const std::vector<Elt> &by_length() const { return by_length_; }

private:
  RootSystem() = default;
  void generate();
  bool bruhat_scan(Elt u, Elt w) const;

  char type_ = 0;
  int rank_ = 0;
  std::array<std::array<int, 4>, 4> cartan_{}; // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<WeightVec> roots_;
  std::map<WeightVec, int> root_lookup_;
  std::vector<int> neg_root_;
  int num_pos_ = 0;

  std::vector<int> lengths_;
  std::vector<Word> normal_form_;
  std::vector<std::array<Elt, 4>> right_mul_;
  std::vector<std::array<Elt, 4>> left_mul_;
  std::vector<Elt> inverse_;
  std::vector<std::vector<int>> root_action_; // [w][root] -> root index
  std::vector<std::vector<int>> inversions_;
  std::vector<std::vector<bool>> bruhat_;
  std::vector<Elt> by_length_;
  Elt longest_ = 0;
};

} // namespace fgsc

#endif
