#include "fgsc/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fgsc {

namespace {

// Matrix of a group element acting on the root lattice, used only while
// generating the group (dedup key).
using Mat = std::array<std::array<int, 4>, 4>;

Mat mat_identity(int n) {
  Mat m{};
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

WeightVec mat_apply(const Mat &m, const WeightVec &v, int n) {
  WeightVec r = wv_zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
  return r;
}

} // namespace

RootSystem RootSystem::build(const std::string &label) {
  if (label.size() != 2 || label[1] < '1' || label[1] > '4')
    throw config_error("unsupported root system label: " + label);
  return build(label[0], label[1] - '0');
}

RootSystem RootSystem::build(char type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  auto &c = rs.cartan_;
  auto simply_laced_chain = [&](int n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        c[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
  };
  bool ok = false;
  if (type == 'A' && rank >= 1 && rank <= 3) {
    simply_laced_chain(rank);
    ok = true;
  } else if (type == 'B' && rank == 2) {
    // alpha_1 long: <alpha_1, alpha_2^vee> = -2, <alpha_2, alpha_1^vee> = -1
    c[0][0] = 2; c[0][1] = -1;
    c[1][0] = -2; c[1][1] = 2;
    ok = true;
  } else if (type == 'C' && rank == 3) {
    // alpha_3 long: <alpha_3, alpha_2^vee> = -2
    simply_laced_chain(3);
    c[1][2] = -2;
    ok = true;
  } else if (type == 'G' && rank == 2) {
    // alpha_1 short: <alpha_1, alpha_2^vee> = -1, <alpha_2, alpha_1^vee> = -3
    c[0][0] = 2; c[0][1] = -3;
    c[1][0] = -1; c[1][1] = 2;
    ok = true;
  }
  if (!ok)
    throw config_error("unsupported root system: " + std::string(1, type) +
                       std::to_string(rank));
  rs.generate();
  return rs;
}

int RootSystem::pair_with_coroot(const WeightVec &lam, int i) const {
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * lam[j];
  return p;
}

WeightVec RootSystem::reflect(int i, const WeightVec &lam) const {
  WeightVec r = lam;
  r[i] -= pair_with_coroot(lam, i);
  return r;
}

void RootSystem::generate() {
  // Roots: orbit closure of the simple roots under the simple reflections.
  std::set<WeightVec> seen;
  std::queue<WeightVec> todo;
  for (int i = 0; i < rank_; ++i) {
    WeightVec a = wv_zero();
    a[i] = 1;
    seen.insert(a);
    todo.push(a);
  }
  while (!todo.empty()) {
    WeightVec v = todo.front();
    todo.pop();
    for (int i = 0; i < rank_; ++i) {
      WeightVec r = reflect(i, v);
      if (seen.insert(r).second) todo.push(r);
    }
  }
  // Positive roots first (simple roots leading), then negatives, pairing
  // each positive index p with negative index num_pos + p.
  std::vector<WeightVec> pos;
  for (auto &v : seen) {
    bool nonneg = true;
    for (int i = 0; i < rank_; ++i) nonneg = nonneg && v[i] >= 0;
    if (nonneg) pos.push_back(v);
  }
  // height ascending, descending lex within a height: simple root i lands
  // at index i
  std::sort(pos.begin(), pos.end(), [&](const WeightVec &a, const WeightVec &b) {
    int ha = a[0] + a[1] + a[2] + a[3], hb = b[0] + b[1] + b[2] + b[3];
    if (ha != hb) return ha < hb;
    return a > b;
  });
  num_pos_ = int(pos.size());
  roots_ = pos;
  for (auto &v : pos) roots_.push_back(wv_neg(v));
  for (int k = 0; k < int(roots_.size()); ++k) root_lookup_[roots_[k]] = k;
  neg_root_.resize(roots_.size());
  for (int k = 0; k < num_pos_; ++k) {
    neg_root_[k] = k + num_pos_;
    neg_root_[k + num_pos_] = k;
  }

  // Weyl group: BFS over right multiplication, deduplicated by the action
  // matrix on the root lattice.
  std::map<Mat, Elt> table;
  std::vector<Mat> mats;
  Mat sgen[4];
  for (int i = 0; i < rank_; ++i) {
    Mat m = mat_identity(rank_);
    for (int j = 0; j < rank_; ++j) {
      WeightVec a = wv_zero();
      a[j] = 1;
      WeightVec r = reflect(i, a);
      for (int k = 0; k < rank_; ++k) m[k][j] = r[k];
    }
    sgen[i] = m;
  }
  auto mat_mul = [&](const Mat &a, const Mat &b) {
    Mat r{};
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
  };

  mats.push_back(mat_identity(rank_));
  table[mats[0]] = 0;
  lengths_.push_back(0);
  normal_form_.push_back({});
  std::queue<Elt> bfs;
  bfs.push(0);
  right_mul_.push_back({-1, -1, -1, -1});
  while (!bfs.empty()) {
    Elt w = bfs.front();
    bfs.pop();
    for (int i = 0; i < rank_; ++i) {
      Mat m = mat_mul(mats[w], sgen[i]);
      auto it = table.find(m);
      if (it == table.end()) {
        Elt nw = Elt(mats.size());
        mats.push_back(m);
        table[m] = nw;
        lengths_.push_back(lengths_[w] + 1);
        normal_form_.push_back({}); // filled below
        right_mul_.push_back({-1, -1, -1, -1});
        right_mul_[w][i] = nw;
        bfs.push(nw);
      } else {
        right_mul_[w][i] = it->second;
      }
    }
  }
  const int N = int(mats.size());

  // Left multiplication, inverses, root action.
  left_mul_.assign(N, {-1, -1, -1, -1});
  root_action_.assign(N, std::vector<int>(roots_.size()));
  inverse_.assign(N, -1);
  for (Elt w = 0; w < N; ++w) {
    for (int r = 0; r < int(roots_.size()); ++r)
      root_action_[w][r] = root_lookup_.at(mat_apply(mats[w], roots_[r], rank_));
  }
  for (Elt w = 0; w < N; ++w) {
    for (Elt u = 0; u < N; ++u) {
      if (mat_mul(mats[u], mats[w]) == mat_identity(rank_)) {
        inverse_[w] = u;
        break;
      }
    }
  }
  for (Elt w = 0; w < N; ++w)
    for (int i = 0; i < rank_; ++i)
      left_mul_[w][i] = inverse_[right_mul_[inverse_[w]][i]];

  // Normal forms: lexicographically least reduced word, built recursively
  // from the smallest left descent.
  std::vector<bool> done(N, false);
  done[0] = true;
  std::vector<Elt> order(N);
  for (Elt w = 0; w < N; ++w) order[w] = w;
  std::sort(order.begin(), order.end(),
            [&](Elt a, Elt b) { return lengths_[a] < lengths_[b]; });
  for (Elt w : order) {
    if (done[w]) continue;
    for (int i = 0; i < rank_; ++i) {
      Elt sw = left_mul_[w][i];
      if (lengths_[sw] < lengths_[w]) {
        normal_form_[w] = Word{i};
        auto &rest = normal_form_[sw];
        normal_form_[w].insert(normal_form_[w].end(), rest.begin(), rest.end());
        break;
      }
    }
    done[w] = true;
  }

  // Inversion sets: positive roots alpha with w^{-1} alpha < 0.
  inversions_.assign(N, {});
  for (Elt w = 0; w < N; ++w) {
    Elt wi = inverse_[w];
    for (int p = 0; p < num_pos_; ++p)
      if (root_action_[wi][p] >= num_pos_) inversions_[w].push_back(p);
  }

  longest_ = 0;
  for (Elt w = 0; w < N; ++w)
    if (lengths_[w] > lengths_[longest_]) longest_ = w;

  by_length_.resize(N);
  for (Elt w = 0; w < N; ++w) by_length_[w] = w;
  std::sort(by_length_.begin(), by_length_.end(), [&](Elt a, Elt b) {
    if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
    return normal_form_[a] < normal_form_[b];
  });

  // Bruhat order via the greedy subword scan.
  bruhat_.assign(N, std::vector<bool>(N, false));
  for (Elt w = 0; w < N; ++w)
    for (Elt u = 0; u < N; ++u) bruhat_[w][u] = bruhat_scan(u, w);
}

// u <= w iff scanning a reduced word of w from the right and greedily
// applying every letter that shortens the current element sends u to e.
bool RootSystem::bruhat_scan(Elt u, Elt w) const {
  if (lengths_[u] > lengths_[w]) return false;
  const Word &word = normal_form_[w];
  Elt v = u;
  for (int k = int(word.size()) - 1; k >= 0; --k) {
    Elt vs = right_mul_[v][word[k]];
    if (lengths_[vs] < lengths_[v]) v = vs;
  }
  return v == 0;
}

RootSystem::Elt RootSystem::mul(Elt a, Elt b) const {
  Elt r = a;
  for (int i : normal_form_[b]) r = right_mul_[r][i];
  return r;
}

WeightVec RootSystem::act(Elt w, const WeightVec &lam) const {
  WeightVec v = lam;
  const Word &word = normal_form_[w];
  for (int k = int(word.size()) - 1; k >= 0; --k) v = reflect(word[k], v);
  return v;
}

int RootSystem::root_index(const WeightVec &v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

RootSystem::Elt RootSystem::from_word(const Word &word) const {
  Elt r = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw config_error("generator index out of range");
    r = right_mul_[r][i];
  }
  return r;
}

std::string RootSystem::word_string(const Word &word) const {
  std::string s;
  for (int i : word) s += char('1' + i);
  return s;
}

Word RootSystem::parse_word(const std::string &s) const {
  Word w;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '1' || ch >= char('1' + rank_))
      throw config_error("bad generator letter in word: " + s);
    w.push_back(ch - '1');
  }
  return w;
}

bool RootSystem::is_reduced(const Word &word) const {
  return int(word.size()) == lengths_[from_word(word)];
}

std::vector<Word> RootSystem::reduced_words(Elt w) const {
  if (w == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 0; i < rank_; ++i) {
    Elt sw = left_mul_[w][i];
    if (lengths_[sw] < lengths_[w]) {
      for (auto &rest : reduced_words(sw)) {
        Word word{i};
        word.insert(word.end(), rest.begin(), rest.end());
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

std::vector<WeightVec> RootSystem::reflection_order(const Word &word) const {
  if (!is_reduced(word)) throw config_error("reflection_order: word not reduced");
  std::vector<WeightVec> betas;
  Elt prefix = 0;
  for (int k = 0; k < int(word.size()); ++k) {
    WeightVec a = wv_zero();
    a[word[k]] = 1;
    betas.push_back(act(prefix, a));
    prefix = right_mul_[prefix][word[k]];
  }
  return betas;
}

} // namespace fgsc
