#include "fgi/diagrams/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fgi/errors.hpp"
#include "fgi/rational.hpp"

namespace fgi {

namespace {

template <class Tag>
struct Symbols;
template <>
struct Symbols<ReversionTag> {
  static constexpr const char* leaf = "L";
  static constexpr const char* node = "H";
};
template <>
struct Symbols<LagrangeGoodTag> {
  static constexpr const char* leaf = "G";
  static constexpr const char* node = "G";
};

template <class Tag>
std::string encode_multiset(const std::vector<Tree<Tag>>& ts) {
  std::string s;
  for (const auto& t : ts) {
    if (!s.empty()) s += ',';
    s += encode(t);
  }
  return s;
}

template <class Tag>
void sort_by_encoding(std::vector<Tree<Tag>>& ts) {
  std::vector<std::pair<std::string, Tree<Tag>>> keyed;
  keyed.reserve(ts.size());
  for (auto& t : ts) keyed.emplace_back(encode(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ts.clear();
  for (auto& [k, t] : keyed) ts.push_back(std::move(t));
}

template <class Tag>
std::uint64_t multiset_aut(const std::vector<Tree<Tag>>& ts) {
  std::map<std::string, std::pair<unsigned, std::uint64_t>> groups;
  for (const auto& t : ts) {
    auto& g = groups[encode(t)];
    ++g.first;
    g.second = aut_order(t);
  }
  std::uint64_t aut = 1;
  for (const auto& [enc, g] : groups) {
    aut = checked_mul(aut, checked_factorial(g.first));
    for (unsigned r = 0; r < g.first; ++r) aut = checked_mul(aut, g.second);
  }
  return aut;
}

template <class Tag>
std::vector<std::string> decoration_keys(const Circuit<Tag>& c) {
  std::vector<std::string> keys;
  for (const auto& d : c.decorations) keys.push_back("{" + encode_multiset(d) + "}");
  return keys;
}

// All multisets drawn from pool (indices non-decreasing) with total weight
// `target` and at least `min_count` members.
template <class T, class WeightFn, class Visit>
void multisets(const std::vector<T>& pool, WeightFn weight, unsigned target, unsigned min_count, Visit visit) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, unsigned remaining) -> void {
    if (remaining == 0) {
      if (chosen.size() >= min_count) {
        std::vector<T> members;
        for (std::size_t idx : chosen) members.push_back(pool[idx]);
        visit(std::move(members));
      }
      return;
    }
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      const unsigned w = weight(pool[idx]);
      if (w == 0 || w > remaining) continue;
      chosen.push_back(idx);
      self(self, idx, remaining - w);
      chosen.pop_back();
    }
  };
  rec(rec, 0, target);
}

template <class Tag>
struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed tree encoding '" + std::string(text) + "'");
  }
  bool eat(char ch) {
    if (pos < text.size() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  Tree<Tag> parse() {
    Tree<Tag> t;
    const std::string_view leaf = Symbols<Tag>::leaf;
    const std::string_view node = Symbols<Tag>::node;
    if (text.substr(pos, node.size()) == node && pos + node.size() < text.size() &&
        text[pos + node.size()] == '(') {
      pos += node.size() + 1;
      do {
        t.children.push_back(parse());
      } while (eat(','));
      if (!eat(')')) fail();
      if constexpr (std::is_same_v<Tag, ReversionTag>) {
        if (t.children.size() < 2) fail();
      }
      return t;
    }
    if (text.substr(pos, leaf.size()) != leaf) fail();
    pos += leaf.size();
    return t;
  }
};

}  // namespace

template <class Tag>
std::string encode(const Tree<Tag>& t) {
  if (t.children.empty()) return Symbols<Tag>::leaf;
  return std::string(Symbols<Tag>::node) + "(" + encode_multiset(t.children) + ")";
}

template <class Tag>
std::string encode(const Circuit<Tag>& c) {
  std::string s = "C[";
  const auto keys = decoration_keys(c);
  for (std::size_t q = 0; q < keys.size(); ++q) {
    if (q) s += '|';
    s += keys[q];
  }
  return s + "]";
}

template <class Tag>
Tree<Tag> canonicalize(Tree<Tag> t) {
  for (auto& c : t.children) c = canonicalize(std::move(c));
  sort_by_encoding(t.children);
  return t;
}

template <class Tag>
Circuit<Tag> canonicalize(Circuit<Tag> c) {
  if (c.decorations.empty()) throw std::invalid_argument("a circuit needs at least one vertex");
  for (auto& d : c.decorations) {
    for (auto& t : d) t = canonicalize(std::move(t));
    sort_by_encoding(d);
  }
  const auto keys = decoration_keys(c);
  const std::size_t p = keys.size();
  std::size_t best = 0;
  auto rotated_less = [&](std::size_t r, std::size_t s) {
    for (std::size_t q = 0; q < p; ++q) {
      const auto& a = keys[(r + q) % p];
      const auto& b = keys[(s + q) % p];
      if (a != b) return a < b;
    }
    return false;
  };
  for (std::size_t r = 1; r < p; ++r)
    if (rotated_less(r, best)) best = r;
  std::rotate(c.decorations.begin(), c.decorations.begin() + static_cast<std::ptrdiff_t>(best), c.decorations.end());
  return c;
}

TreeClass parse_tree_class(std::string_view text) {
  Parser<ReversionTag> p{text};
  TreeClass t = p.parse();
  if (p.pos != text.size()) p.fail();
  return canonicalize(std::move(t));
}

LGTreeClass parse_lg_tree_class(std::string_view text) {
  Parser<LagrangeGoodTag> p{text};
  LGTreeClass t = p.parse();
  if (p.pos != text.size()) p.fail();
  return canonicalize(std::move(t));
}

template <class Tag>
std::uint64_t aut_order(const Tree<Tag>& t) {
  return multiset_aut(t.children);
}

template <class Tag>
std::uint64_t aut_order(const Circuit<Tag>& c) {
  const Circuit<Tag> canon = canonicalize(c);
  const auto keys = decoration_keys(canon);
  const std::size_t p = keys.size();
  std::uint64_t rotations = 0;
  for (std::size_t r = 0; r < p; ++r) {
    bool same = true;
    for (std::size_t q = 0; q < p && same; ++q) same = keys[(r + q) % p] == keys[q];
    rotations += same;
  }
  std::uint64_t aut = rotations;
  for (const auto& d : canon.decorations) aut = checked_mul(aut, multiset_aut(d));
  return aut;
}

template <class Tag>
unsigned leaf_count(const Tree<Tag>& t) {
  if (t.children.empty()) return 1;
  unsigned s = 0;
  for (const auto& c : t.children) s += leaf_count(c);
  return s;
}

template <class Tag>
unsigned node_count(const Tree<Tag>& t) {
  unsigned s = 1;
  for (const auto& c : t.children) s += node_count(c);
  return s;
}

unsigned leaf_count(const ReversionCircuit& c) {
  unsigned s = 0;
  for (const auto& d : c.decorations)
    for (const auto& t : d) s += leaf_count(t);
  return s;
}

unsigned degree(const LGCircuitClass& c) {
  unsigned s = static_cast<unsigned>(c.length());
  for (const auto& d : c.decorations)
    for (const auto& t : d) s += node_count(t);
  return s;
}

unsigned half_lines(const TreeClass& t) { return 2 * node_count(t); }
unsigned half_lines(const LGTreeClass& t) { return 2 * node_count(t); }

unsigned half_lines(const ReversionCircuit& c) {
  unsigned s = 0;
  for (const auto& d : c.decorations) {
    s += 2;
    for (const auto& t : d) s += half_lines(t);
  }
  return s;
}

unsigned half_lines(const LGCircuitClass& c) { return 2 * degree(c); }

std::vector<TreeClass> enumerate_reversion_trees(unsigned max_leaves) {
  if (max_leaves == 0) throw std::invalid_argument("max_leaves must be positive");
  if (max_leaves > 12) throw resource_error("reversion tree enumeration limited to 12 leaves");
  std::vector<TreeClass> all{TreeClass{}};
  for (unsigned l = 2; l <= max_leaves; ++l) {
    const std::vector<TreeClass> pool = all;  // every tree has fewer than l leaves
    std::vector<TreeClass> fresh;
    multisets(pool, [](const TreeClass& t) { return leaf_count(t); }, l, 2,
              [&](std::vector<TreeClass> kids) { fresh.push_back(canonicalize(TreeClass{std::move(kids)})); });
    sort_by_encoding(fresh);
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return all;
}

std::vector<LGTreeClass> enumerate_lg_trees(unsigned max_nodes) {
  if (max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
  if (max_nodes > 14) throw resource_error("Lagrange-Good tree enumeration limited to 14 nodes");
  std::vector<LGTreeClass> all{LGTreeClass{}};
  for (unsigned s = 2; s <= max_nodes; ++s) {
    const std::vector<LGTreeClass> pool = all;
    std::vector<LGTreeClass> fresh;
    multisets(pool, [](const LGTreeClass& t) { return node_count(t); }, s - 1, 1,
              [&](std::vector<LGTreeClass> kids) { fresh.push_back(canonicalize(LGTreeClass{std::move(kids)})); });
    sort_by_encoding(fresh);
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return all;
}

namespace {

// decorations_by_weight[w] lists every admissible decoration of weight w;
// sequences of decorations with total weight T become circuits.
template <class Tag>
std::vector<Circuit<Tag>> circuits_from_decorations(
    const std::vector<std::vector<std::vector<Tree<Tag>>>>& decorations_by_weight, unsigned total) {
  std::map<std::string, Circuit<Tag>> found;
  std::vector<std::vector<Tree<Tag>>> seq;
  auto rec = [&](auto&& self, unsigned remaining) -> void {
    if (remaining == 0) {
      if (seq.empty()) return;
      Circuit<Tag> c = canonicalize(Circuit<Tag>{seq});
      found.emplace(encode(c), std::move(c));
      return;
    }
    for (unsigned w = 1; w <= remaining; ++w) {
      for (const auto& d : decorations_by_weight[w]) {
        seq.push_back(d);
        self(self, remaining - w);
        seq.pop_back();
      }
    }
  };
  rec(rec, total);
  std::vector<Circuit<Tag>> out;
  for (auto& [k, c] : found) out.push_back(std::move(c));
  return out;
}

}  // namespace

std::vector<LGCircuitClass> enumerate_lg_circuits(unsigned max_degree) {
  if (max_degree == 0) throw std::invalid_argument("max_degree must be positive");
  if (max_degree > 9) throw resource_error("Lagrange-Good circuit enumeration limited to degree 9");
  std::vector<LGTreeClass> trees = max_degree > 1 ? enumerate_lg_trees(max_degree - 1) : std::vector<LGTreeClass>{};
  // a circuit vertex of weight w carries trees with w-1 nodes in total
  std::vector<std::vector<std::vector<LGTreeClass>>> by_weight(max_degree + 1);
  by_weight[1].push_back({});
  for (unsigned w = 2; w <= max_degree; ++w) {
    multisets(trees, [](const LGTreeClass& t) { return node_count(t); }, w - 1, 1,
              [&](std::vector<LGTreeClass> d) { by_weight[w].push_back(std::move(d)); });
  }
  std::vector<LGCircuitClass> out;
  for (unsigned T = 1; T <= max_degree; ++T) {
    auto level = circuits_from_decorations(by_weight, T);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<ReversionCircuit> enumerate_reversion_circuits(unsigned max_leaves) {
  if (max_leaves == 0) throw std::invalid_argument("max_leaves must be positive");
  if (max_leaves > 8) throw resource_error("reversion circuit enumeration limited to 8 leaves");
  const std::vector<TreeClass> trees = enumerate_reversion_trees(max_leaves);
  std::vector<std::vector<std::vector<TreeClass>>> by_weight(max_leaves + 1);
  for (unsigned w = 1; w <= max_leaves; ++w) {
    multisets(trees, [](const TreeClass& t) { return leaf_count(t); }, w, 1,
              [&](std::vector<TreeClass> d) { by_weight[w].push_back(std::move(d)); });
  }
  std::vector<ReversionCircuit> out;
  for (unsigned T = 1; T <= max_leaves; ++T) {
    auto level = circuits_from_decorations(by_weight, T);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template std::string encode(const TreeClass&);
template std::string encode(const LGTreeClass&);
template std::string encode(const ReversionCircuit&);
template std::string encode(const LGCircuitClass&);
template TreeClass canonicalize(TreeClass);
template LGTreeClass canonicalize(LGTreeClass);
template ReversionCircuit canonicalize(ReversionCircuit);
template LGCircuitClass canonicalize(LGCircuitClass);
template std::uint64_t aut_order(const TreeClass&);
template std::uint64_t aut_order(const LGTreeClass&);
template std::uint64_t aut_order(const ReversionCircuit&);
template std::uint64_t aut_order(const LGCircuitClass&);
template unsigned leaf_count(const TreeClass&);
template unsigned leaf_count(const LGTreeClass&);
template unsigned node_count(const TreeClass&);
template unsigned node_count(const LGTreeClass&);

}  // namespace fgi
