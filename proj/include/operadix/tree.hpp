#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "operadix/scalar.hpp"

namespace operadix {

// Complete planar rooted n-ary tree, stored as its preorder word over
// {node, leaf}.  Every node has exactly n children, so the word determines
// the tree and equality is word equality.  The single-leaf word is the
// identity operation; a tree of weight w (w internal nodes) has
// 1 + w(n-1) leaves.  Leaf positions are 1-based left to right.
class planar_tree {
public:
  static constexpr std::uint8_t kLeaf = 0;
  static constexpr std::uint8_t kNode = 1;

  static planar_tree leaf(int n) {
    check_arity(n);
    return planar_tree(n, {kLeaf});
  }

  static planar_tree corolla(int n) {
    check_arity(n);
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n) + 1, kLeaf);
    w[0] = kNode;
    return planar_tree(n, std::move(w));
  }

  planar_tree(int n, std::vector<std::uint8_t> word) : n_(n), word_(std::move(word)) {
    check_arity(n_);
    std::size_t pos = 0;
    if (!consume(pos) || pos != word_.size())
      throw std::invalid_argument("planar_tree: word does not parse as one tree");
  }

  int arity_n() const { return n_; }
  bool is_leaf() const { return word_.size() == 1; }

  int weight() const {
    int w = 0;
    for (auto s : word_) w += (s == kNode);
    return w;
  }

  int leaf_count() const {
    return static_cast<int>(word_.size()) - weight();
  }

  const std::vector<std::uint8_t>& word() const { return word_; }

  // Replace leaf i (1-based, left to right) by `inner`.
  planar_tree graft(int i, const planar_tree& inner) const {
    if (inner.n_ != n_) throw std::invalid_argument("graft: arity mismatch");
    std::size_t pos = leaf_position(i);
    std::vector<std::uint8_t> out;
    out.reserve(word_.size() + inner.word_.size() - 1);
    out.insert(out.end(), word_.begin(), word_.begin() + static_cast<long>(pos));
    out.insert(out.end(), inner.word_.begin(), inner.word_.end());
    out.insert(out.end(), word_.begin() + static_cast<long>(pos) + 1, word_.end());
    planar_tree t(n_);
    t.word_ = std::move(out);
    return t;
  }

  // Number of internal nodes whose preorder position is strictly after
  // leaf i; this is the generator block the grafted word moves past, which
  // is what the Koszul sign counts.
  int nodes_after_leaf(int i) const {
    std::size_t pos = leaf_position(i);
    int cnt = 0;
    for (std::size_t k = pos + 1; k < word_.size(); ++k) cnt += (word_[k] == kNode);
    return cnt;
  }

  // Depth of each leaf in left-to-right order.
  std::vector<int> leaf_depths() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    std::vector<int> remaining;  // children still expected at each open node
    for (auto s : word_) {
      if (s == kNode) {
        if (!remaining.empty()) --remaining.back();
        remaining.push_back(n_);
      } else {
        if (!remaining.empty()) --remaining.back();
        out.push_back(static_cast<int>(remaining.size()));
      }
      while (!remaining.empty() && remaining.back() == 0) remaining.pop_back();
    }
    return out;
  }

  std::string sexpr() const {
    std::string out;
    std::size_t pos = 0;
    print(pos, out);
    return out;
  }

  // Parse the s-expression form: leaf `_`, internal node `(m c1 ... cn)`.
  static planar_tree parse_sexpr(int n, std::string_view s) {
    check_arity(n);
    std::size_t pos = 0;
    planar_tree t(n);
    t.word_.clear();
    parse_into(n, s, pos, t.word_);
    skip_ws(s, pos);
    if (pos != s.size())
      throw std::invalid_argument("planar_tree: trailing input after tree");
    return planar_tree(n, std::move(t.word_));
  }

  friend bool operator==(const planar_tree& a, const planar_tree& b) = default;

private:
  explicit planar_tree(int n) : n_(n) {}

  static void check_arity(int n) {
    if (n < 2) throw std::invalid_argument("planar_tree: arity must be >= 2");
  }

  bool consume(std::size_t& pos) const {
    if (pos >= word_.size()) return false;
    if (word_[pos++] == kLeaf) return true;
    for (int c = 0; c < n_; ++c)
      if (!consume(pos)) return false;
    return true;
  }

  std::size_t leaf_position(int i) const {
    if (i < 1 || i > leaf_count())
      throw std::out_of_range("planar_tree: leaf index out of range");
    int seen = 0;
    for (std::size_t pos = 0; pos < word_.size(); ++pos) {
      if (word_[pos] == kLeaf && ++seen == i) return pos;
    }
    throw std::logic_error("planar_tree: unreachable");
  }

  void print(std::size_t& pos, std::string& out) const {
    if (word_[pos++] == kLeaf) {
      out += '_';
      return;
    }
    out += "(m";
    for (int c = 0; c < n_; ++c) {
      out += ' ';
      print(pos, out);
    }
    out += ')';
  }

  static void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  static void parse_into(int n, std::string_view s, std::size_t& pos,
                         std::vector<std::uint8_t>& out) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("planar_tree: unexpected end");
    if (s[pos] == '_') {
      ++pos;
      out.push_back(kLeaf);
      return;
    }
    if (s[pos] != '(' || pos + 1 >= s.size() || s[pos + 1] != 'm')
      throw std::invalid_argument("planar_tree: expected '_' or '(m'");
    pos += 2;
    out.push_back(kNode);
    for (int c = 0; c < n; ++c) parse_into(n, s, pos, out);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')')
      throw std::invalid_argument("planar_tree: expected ')'");
    ++pos;
  }

  int n_;
  std::vector<std::uint8_t> word_;
};

// Path glex: graded by weight; equal weights compare leaf depth words, and
// at the first differing leaf the shallower leaf wins.  This puts the right
// comb on top of each weight component.
inline std::strong_ordering path_glex_compare(const planar_tree& a,
                                              const planar_tree& b) {
  if (a.arity_n() != b.arity_n())
    throw std::invalid_argument("path_glex_compare: arity mismatch");
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa <=> wb;
  auto da = a.leaf_depths(), db = b.leaf_depths();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] != db[i])
      return da[i] > db[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.word() <=> b.word();
}

struct path_glex_less {
  bool operator()(const planar_tree& a, const planar_tree& b) const {
    return path_glex_compare(a, b) == std::strong_ordering::less;
  }
};

struct path_glex_greater {
  bool operator()(const planar_tree& a, const planar_tree& b) const {
    return path_glex_compare(a, b) == std::strong_ordering::greater;
  }
};

// n-ary Catalan number: the number of complete planar rooted n-ary trees
// with w internal nodes, (1/(1+(n-1)w)) * C(nw, w).
inline bigint catalan(int n, int w) {
  if (n < 2) throw std::invalid_argument("catalan: arity must be >= 2");
  if (w < 0) throw std::invalid_argument("catalan: weight must be >= 0");
  bigint binom = 1;
  for (int k = 1; k <= w; ++k) {
    binom *= bigint(n) * w - (w - k);
    binom /= k;
  }
  bigint den = 1 + bigint(n - 1) * w;
  if (binom % den != 0) throw std::logic_error("catalan: non-integral quotient");
  return binom / den;
}

namespace detail {
// preorder words of all trees of each weight 0..w, built bottom-up by
// splitting w-1 internal nodes over the root's n children
inline std::vector<std::vector<std::vector<std::uint8_t>>> tree_words_up_to(int n,
                                                                            int w) {
  std::vector<std::vector<std::vector<std::uint8_t>>> table(
      static_cast<std::size_t>(w) + 1);
  table[0] = {{planar_tree::kLeaf}};
  for (int cur = 1; cur <= w; ++cur) {
    std::vector<std::uint8_t> word{planar_tree::kNode};
    auto rec = [&](auto&& self, int child, int left) -> void {
      if (child == n) {
        table[static_cast<std::size_t>(cur)].push_back(word);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        if (child == n - 1 && k != left) continue;
        for (const auto& sub : table[static_cast<std::size_t>(k)]) {
          std::size_t mark = word.size();
          word.insert(word.end(), sub.begin(), sub.end());
          self(self, child + 1, left - k);
          word.resize(mark);
        }
      }
    };
    rec(rec, 0, cur - 1);
  }
  return table;
}
}  // namespace detail

// All trees of weight w in ascending path glex order; the count equals
// catalan(n, w).
inline std::vector<planar_tree> enumerate_trees(int n, int w) {
  if (n < 2) throw std::invalid_argument("enumerate_trees: arity must be >= 2");
  if (w < 0) throw std::invalid_argument("enumerate_trees: weight must be >= 0");
  auto table = detail::tree_words_up_to(n, w);
  std::vector<planar_tree> out;
  out.reserve(table[static_cast<std::size_t>(w)].size());
  for (auto& wd : table[static_cast<std::size_t>(w)]) out.emplace_back(n, std::move(wd));
  std::sort(out.begin(), out.end(), path_glex_less{});
  return out;
}

}  // namespace operadix
