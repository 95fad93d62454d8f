#include "fgi/diagrams/labeled.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fgi/errors.hpp"

namespace fgi {

namespace {

constexpr std::size_t npos = LabeledStructure::npos;

struct KindRule {
  BlockKind kind;
  Field point;
  Field leg;
  std::size_t min_legs;
  std::size_t max_legs;
};

std::vector<KindRule> kind_rules(Flavor flavor) {
  constexpr std::size_t any = static_cast<std::size_t>(-1);
  switch (flavor) {
    case Flavor::composition:
      return {{BlockKind::F, Field::sbar, Field::t, 1, any}, {BlockKind::G, Field::tbar, Field::u, 1, any}};
    case Flavor::reversion:
      return {{BlockKind::H, Field::ubar, Field::u, 2, any}, {BlockKind::Y, Field::ubar, Field::u, 0, 0}};
    case Flavor::lagrange_good:
      return {{BlockKind::XG, Field::ubar, Field::u, 0, any}};
  }
  return {};
}

const KindRule* rule_for(Flavor flavor, BlockKind kind) {
  static const auto comp = kind_rules(Flavor::composition);
  static const auto rev = kind_rules(Flavor::reversion);
  static const auto lg = kind_rules(Flavor::lagrange_good);
  const auto& rules = flavor == Flavor::composition ? comp : flavor == Flavor::reversion ? rev : lg;
  for (const auto& r : rules)
    if (r.kind == kind) return &r;
  return nullptr;
}

Field root_field(Flavor flavor) { return flavor == Flavor::composition ? Field::s : Field::u; }

bool is_barred(Field f) { return f == Field::sbar || f == Field::tbar || f == Field::ubar; }

Field partner(Field barred) {
  switch (barred) {
    case Field::sbar:
      return Field::s;
    case Field::tbar:
      return Field::t;
    default:
      return Field::u;
  }
}

std::size_t block_point(const LabeledStructure& s, std::size_t b) {
  for (std::size_t x : s.blocks[b])
    if (is_barred(s.field[x])) return x;
  return npos;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

void LabeledStructure::normalize() {
  std::vector<std::pair<std::vector<std::size_t>, BlockKind>> bs;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto blk = blocks[b];
    std::sort(blk.begin(), blk.end());
    bs.emplace_back(std::move(blk), block_kind[b]);
  }
  std::sort(bs.begin(), bs.end(), [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
  blocks.clear();
  block_kind.clear();
  for (auto& [blk, kind] : bs) {
    blocks.push_back(std::move(blk));
    block_kind.push_back(kind);
  }
}

std::vector<int> LabeledStructure::block_of() const {
  std::vector<int> bo(k, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t x : blocks[b]) bo.at(x) = static_cast<int>(b);
  return bo;
}

std::optional<std::string> validate(const LabeledStructure& s) {
  if (s.field.size() != s.k) return "field list length differs from ground set size";
  if (s.blocks.size() != s.block_kind.size()) return "every block needs a kind";
  std::vector<int> seen(s.k, 0);
  for (const auto& blk : s.blocks)
    for (std::size_t x : blk) {
      if (x >= s.k) return "block element outside the ground set";
      ++seen[x];
    }
  for (std::size_t x : s.rho_root) {
    if (x >= s.k) return "root map leaves the ground set";
    if (s.field[x] != root_field(s.flavor)) return "root map must land on external root-field half-lines";
    ++seen[x];
  }
  for (std::size_t x : s.rho_leaf) {
    if (x >= s.k) return "leaf map leaves the ground set";
    if (s.field[x] != Field::ubar) return "leaf map must land on external ubar half-lines";
    ++seen[x];
  }
  for (std::size_t x = 0; x < s.k; ++x) {
    if (seen[x] != 1) return "internal blocks and external legs must partition the ground set";
  }
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const KindRule* rule = rule_for(s.flavor, s.block_kind[b]);
    if (!rule) return "block kind not allowed for this flavor";
    std::size_t points = 0, legs = 0;
    for (std::size_t x : s.blocks[b]) {
      if (s.field[x] == rule->point) {
        ++points;
      } else if (s.field[x] == rule->leg) {
        ++legs;
      } else {
        return "block holds a half-line of a foreign field";
      }
    }
    if (points != 1) return "every block needs exactly one barred half-line";
    if (legs < rule->min_legs || legs > rule->max_legs) return "block leg count outside the allowed range";
  }
  if (s.has_contraction()) {
    if (s.contraction.size() != s.k) return "contraction must list every element";
    std::vector<int> hit(s.k, 0);
    for (std::size_t x = 0; x < s.k; ++x) {
      if (!is_barred(s.field[x])) {
        if (s.contraction[x] != npos) return "only barred half-lines are contracted from";
        continue;
      }
      const std::size_t y = s.contraction[x];
      if (y >= s.k || s.field[y] != partner(s.field[x])) return "contraction must pair a barred field with its partner";
      ++hit[y];
    }
    for (std::size_t y = 0; y < s.k; ++y) {
      if (!is_barred(s.field[y]) && hit[y] != 1) return "contraction must be a bijection";
    }
  }
  return std::nullopt;
}

LabeledStructure transport(const LabeledStructure& s, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != s.k) throw std::invalid_argument("transport needs a permutation of the ground set");
  LabeledStructure t;
  t.flavor = s.flavor;
  t.k = s.k;
  t.field.resize(s.k);
  for (std::size_t x = 0; x < s.k; ++x) t.field[sigma[x]] = s.field[x];
  for (const auto& blk : s.blocks) {
    std::vector<std::size_t> nb;
    for (std::size_t x : blk) nb.push_back(sigma[x]);
    t.blocks.push_back(std::move(nb));
  }
  t.block_kind = s.block_kind;
  for (std::size_t x : s.rho_root) t.rho_root.push_back(sigma[x]);
  for (std::size_t x : s.rho_leaf) t.rho_leaf.push_back(sigma[x]);
  if (s.has_contraction()) {
    t.contraction.assign(s.k, npos);
    for (std::size_t x = 0; x < s.k; ++x)
      if (s.contraction[x] != npos) t.contraction[sigma[x]] = sigma[s.contraction[x]];
  }
  t.normalize();
  return t;
}

bool is_connected(const LabeledStructure& s) {
  if (!s.has_contraction()) throw std::invalid_argument("connectivity needs a contraction scheme");
  const auto bo = s.block_of();
  const std::size_t nb = s.blocks.size();
  // derived vertices: blocks 0..nb-1, then one per external half-line
  std::vector<std::size_t> node(s.k);
  std::size_t next = nb;
  for (std::size_t x = 0; x < s.k; ++x) node[x] = bo[x] >= 0 ? static_cast<std::size_t>(bo[x]) : next++;
  if (next == 0) return true;
  UnionFind uf(next);
  for (std::size_t x = 0; x < s.k; ++x)
    if (s.contraction[x] != npos) uf.unite(node[x], node[s.contraction[x]]);
  const std::size_t r = uf.find(0);
  for (std::size_t v = 1; v < next; ++v)
    if (uf.find(v) != r) return false;
  return true;
}

void labeled_for_each(std::size_t k, Flavor flavor, std::size_t n_root, std::size_t n_leaf, LabeledLevel level,
                      const std::function<void(const LabeledStructure&)>& visit) {
  if (k > 10) throw resource_error("labeled enumeration is limited to ground sets of at most 10 elements");
  if (n_root + n_leaf > k) return;
  const auto rules = kind_rules(flavor);

  LabeledStructure cur;
  cur.flavor = flavor;
  cur.k = k;
  cur.field.assign(k, Field::u);
  std::vector<bool> used(k, false);

  auto emit_with_contractions = [&](LabeledStructure& s) {
    std::vector<std::vector<std::size_t>> barred(3), unbarred(3);
    auto slot = [](Field f) {
      return f == Field::sbar || f == Field::s ? 0 : f == Field::tbar || f == Field::t ? 1 : 2;
    };
    for (std::size_t x = 0; x < k; ++x) (is_barred(s.field[x]) ? barred : unbarred)[slot(s.field[x])].push_back(x);
    for (int t = 0; t < 3; ++t)
      if (barred[t].size() != unbarred[t].size()) return;
    if (level == LabeledLevel::pre_feynman) {
      visit(s);
      return;
    }
    s.contraction.assign(k, npos);
    auto rec = [&](auto&& self, int t) -> void {
      if (t == 3) {
        visit(s);
        return;
      }
      std::vector<std::size_t> perm = unbarred[t];
      do {
        for (std::size_t a = 0; a < perm.size(); ++a) s.contraction[barred[t][a]] = perm[a];
        self(self, t + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    s.contraction.clear();
  };

  auto partition = [&](auto&& self) -> void {
    std::size_t x = 0;
    while (x < k && used[x]) ++x;
    if (x == k) {
      LabeledStructure s = cur;
      s.normalize();
      emit_with_contractions(s);
      return;
    }
    std::vector<std::size_t> others;
    for (std::size_t y = x + 1; y < k; ++y)
      if (!used[y]) others.push_back(y);
    const std::size_t subsets = std::size_t{1} << others.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::size_t> blk{x};
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask >> i & 1u) blk.push_back(others[i]);
      const std::size_t legs = blk.size() - 1;
      for (const auto& rule : rules) {
        if (legs < rule.min_legs || legs > rule.max_legs) continue;
        for (std::size_t p : blk) {
          for (std::size_t y : blk) {
            cur.field[y] = y == p ? rule.point : rule.leg;
            used[y] = true;
          }
          cur.blocks.push_back(blk);
          cur.block_kind.push_back(rule.kind);
          self(self);
          cur.blocks.pop_back();
          cur.block_kind.pop_back();
          for (std::size_t y : blk) used[y] = false;
        }
      }
    }
  };

  auto choose_ext = [&](auto&& self, std::vector<std::size_t>& target, std::size_t want, Field f,
                        auto&& then) -> void {
    if (target.size() == want) {
      then();
      return;
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (used[x]) continue;
      used[x] = true;
      cur.field[x] = f;
      target.push_back(x);
      self(self, target, want, f, then);
      target.pop_back();
      used[x] = false;
    }
  };

  choose_ext(choose_ext, cur.rho_root, n_root, root_field(flavor), [&] {
    choose_ext(choose_ext, cur.rho_leaf, n_leaf, Field::ubar, [&] { partition(partition); });
  });
}

std::vector<LabeledStructure> labeled_enumerate(std::size_t k, Flavor flavor, std::size_t n_root, std::size_t n_leaf,
                                                LabeledLevel level, bool connected_only) {
  std::vector<LabeledStructure> out;
  labeled_for_each(k, flavor, n_root, n_leaf, level, [&](const LabeledStructure& s) {
    if (connected_only && !is_connected(s)) return;
    out.push_back(s);
  });
  return out;
}

std::uint64_t labeled_aut_order(const LabeledStructure& s, std::optional<std::vector<std::size_t>> movable) {
  std::vector<std::size_t> mv;
  if (movable) {
    mv = *movable;
  } else {
    mv.resize(s.k);
    std::iota(mv.begin(), mv.end(), 0);
  }
  std::sort(mv.begin(), mv.end());
  if (mv.size() > 12) throw resource_error("brute-force automorphism count limited to 12 movable labels");
  const auto bo = s.block_of();
  const std::size_t nb = s.blocks.size();
  std::vector<std::size_t> sigma(s.k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::size_t> images = mv;
  std::vector<int> bmap(nb), bused(nb);
  std::uint64_t count = 0;
  do {
    for (std::size_t a = 0; a < mv.size(); ++a) sigma[mv[a]] = images[a];
    bool ok = true;
    std::fill(bmap.begin(), bmap.end(), -1);
    std::fill(bused.begin(), bused.end(), 0);
    for (std::size_t x = 0; x < s.k && ok; ++x) {
      const std::size_t y = sigma[x];
      if (s.field[y] != s.field[x]) {
        ok = false;
      } else if (bo[x] < 0 || bo[y] < 0) {
        ok = bo[x] == bo[y];
      } else if (bmap[bo[x]] < 0) {
        if (bused[bo[y]] || s.block_kind[bo[x]] != s.block_kind[bo[y]]) {
          ok = false;
        } else {
          bmap[bo[x]] = bo[y];
          bused[bo[y]] = 1;
        }
      } else {
        ok = bmap[bo[x]] == bo[y];
      }
      if (ok && s.has_contraction() && s.contraction[x] != npos) ok = sigma[s.contraction[x]] == s.contraction[y];
    }
    for (std::size_t x : s.rho_root) ok = ok && sigma[x] == x;
    for (std::size_t x : s.rho_leaf) ok = ok && sigma[x] == x;
    count += ok;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

namespace {

template <class Tag>
std::optional<Tree<Tag>> subtree(const LabeledStructure& s, const std::vector<int>& bo,
                                 const std::vector<std::size_t>& inv, std::size_t b, std::vector<bool>& visited) {
  if (visited[b]) return std::nullopt;
  visited[b] = true;
  Tree<Tag> t;
  for (std::size_t y : s.blocks[b]) {
    if (s.field[y] != Field::u) continue;
    const std::size_t xbar = inv[y];
    if (xbar == npos || bo[xbar] < 0) return std::nullopt;
    auto child = subtree<Tag>(s, bo, inv, static_cast<std::size_t>(bo[xbar]), visited);
    if (!child) return std::nullopt;
    t.children.push_back(std::move(*child));
  }
  return t;
}

std::vector<std::size_t> inverse_contraction(const LabeledStructure& s) {
  std::vector<std::size_t> inv(s.k, npos);
  for (std::size_t x = 0; x < s.k; ++x)
    if (s.contraction[x] != npos) inv[s.contraction[x]] = x;
  return inv;
}

template <class Tag>
std::optional<Tree<Tag>> tree_of(const LabeledStructure& s, Flavor flavor) {
  if (s.flavor != flavor || !s.has_contraction() || s.rho_root.size() != 1 || !s.rho_leaf.empty()) return std::nullopt;
  if (!is_connected(s)) return std::nullopt;
  const auto bo = s.block_of();
  const auto inv = inverse_contraction(s);
  const std::size_t top = inv[s.rho_root[0]];
  if (top == npos || bo[top] < 0) return std::nullopt;
  std::vector<bool> visited(s.blocks.size(), false);
  auto t = subtree<Tag>(s, bo, inv, static_cast<std::size_t>(bo[top]), visited);
  if (!t) return std::nullopt;
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) return std::nullopt;
  return canonicalize(std::move(*t));
}

template <class Tag>
std::optional<Circuit<Tag>> circuit_of(const LabeledStructure& s, Flavor flavor) {
  if (s.flavor != flavor || !s.has_contraction() || !s.rho_root.empty() || !s.rho_leaf.empty()) return std::nullopt;
  if (s.blocks.empty() || !is_connected(s)) return std::nullopt;
  const auto bo = s.block_of();
  const auto inv = inverse_contraction(s);
  const std::size_t nb = s.blocks.size();
  auto parent = [&](std::size_t b) { return static_cast<std::size_t>(bo[s.contraction[block_point(s, b)]]); };

  std::vector<int> order(nb, -1);
  std::vector<std::size_t> walk;
  std::size_t b = 0;
  while (order[b] < 0) {
    order[b] = static_cast<int>(walk.size());
    walk.push_back(b);
    b = parent(b);
  }
  // walk[order[b]..] is the cycle, listed along contraction direction
  std::vector<std::size_t> cyc(walk.begin() + order[b], walk.end());
  std::reverse(cyc.begin(), cyc.end());
  const std::size_t p = cyc.size();

  std::vector<bool> visited(nb, false);
  for (std::size_t c : cyc) visited[c] = true;
  Circuit<Tag> out;
  for (std::size_t q = 0; q < p; ++q) {
    const std::size_t v = cyc[q];
    const std::size_t next = cyc[(q + 1) % p];
    bool skipped = false;
    std::vector<Tree<Tag>> decoration;
    for (std::size_t y : s.blocks[v]) {
      if (s.field[y] != Field::u) continue;
      const std::size_t w = static_cast<std::size_t>(bo[inv[y]]);
      if (!skipped && w == next && inv[y] == block_point(s, next)) {
        skipped = true;
        continue;
      }
      auto t = subtree<Tag>(s, bo, inv, w, visited);
      if (!t) return std::nullopt;
      decoration.push_back(std::move(*t));
    }
    if (!skipped) return std::nullopt;
    out.decorations.push_back(std::move(decoration));
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) return std::nullopt;
  return canonicalize(std::move(out));
}

}  // namespace

std::optional<TreeClass> reversion_tree_of(const LabeledStructure& s) {
  return tree_of<ReversionTag>(s, Flavor::reversion);
}
std::optional<LGTreeClass> lg_tree_of(const LabeledStructure& s) {
  return tree_of<LagrangeGoodTag>(s, Flavor::lagrange_good);
}
std::optional<ReversionCircuit> reversion_circuit_of(const LabeledStructure& s) {
  return circuit_of<ReversionTag>(s, Flavor::reversion);
}
std::optional<LGCircuitClass> lg_circuit_of(const LabeledStructure& s) {
  return circuit_of<LagrangeGoodTag>(s, Flavor::lagrange_good);
}

std::optional<CompositionClass> composition_class_of(const LabeledStructure& s) {
  if (s.flavor != Flavor::composition || s.rho_root.size() != 1) return std::nullopt;
  std::size_t f_blocks = 0, f_legs = 0, g_blocks = 0, u_legs = 0;
  CompositionClass c;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto legs = static_cast<unsigned>(s.blocks[b].size() - 1);
    if (s.block_kind[b] == BlockKind::F) {
      ++f_blocks;
      f_legs = legs;
    } else {
      ++g_blocks;
      u_legs += legs;
      ++c.g_profile[legs];
    }
  }
  if (f_blocks != 1 || g_blocks != f_legs || u_legs != s.rho_leaf.size()) return std::nullopt;
  return c;
}

std::optional<std::string> class_encoding_of(const LabeledStructure& s) {
  switch (s.flavor) {
    case Flavor::composition:
      if (auto c = composition_class_of(s)) return c->encoding();
      return std::nullopt;
    case Flavor::reversion:
      if (auto t = reversion_tree_of(s)) return encode(*t);
      if (auto c = reversion_circuit_of(s)) return encode(*c);
      return std::nullopt;
    case Flavor::lagrange_good:
      if (auto t = lg_tree_of(s)) return encode(*t);
      if (auto c = lg_circuit_of(s)) return encode(*c);
      return std::nullopt;
  }
  return std::nullopt;
}

LabeledStructure composition_realization(const CompositionClass& c) {
  const unsigned m = c.m();
  const unsigned d = c.degree();
  LabeledStructure s;
  s.flavor = Flavor::composition;
  s.k = 2 + 2 * m + 2 * d;
  s.field.assign(s.k, Field::u);
  std::size_t next = 0;
  s.field[next] = Field::s;
  s.rho_root.push_back(next++);
  std::vector<std::size_t> fblk{next};
  s.field[next++] = Field::sbar;
  for (unsigned r = 0; r < m; ++r) {
    fblk.push_back(next);
    s.field[next++] = Field::t;
  }
  s.blocks.push_back(fblk);
  s.block_kind.push_back(BlockKind::F);
  for (const auto& [q, mult] : c.g_profile) {
    for (unsigned r = 0; r < mult; ++r) {
      std::vector<std::size_t> gblk{next};
      s.field[next++] = Field::tbar;
      for (unsigned e = 0; e < q; ++e) {
        gblk.push_back(next);
        s.field[next++] = Field::u;
      }
      s.blocks.push_back(gblk);
      s.block_kind.push_back(BlockKind::G);
    }
  }
  for (unsigned j = 0; j < d; ++j) {
    s.field[next] = Field::ubar;
    s.rho_leaf.push_back(next++);
  }
  s.normalize();
  return s;
}

LabeledStructure composition_sixteen_element_example() {
  LabeledStructure s;
  s.flavor = Flavor::composition;
  s.k = 16;
  s.field.assign(16, Field::u);
  s.field[0] = Field::s;
  s.field[1] = Field::sbar;
  s.field[2] = s.field[3] = Field::t;
  s.field[4] = s.field[8] = Field::tbar;
  for (std::size_t x = 11; x < 16; ++x) s.field[x] = Field::ubar;
  s.blocks = {{1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10}};
  s.block_kind = {BlockKind::F, BlockKind::G, BlockKind::G};
  s.rho_root = {0};
  s.rho_leaf = {11, 12, 13, 14, 15};
  return s;
}

Series labeled_amplitude(const LabeledStructure& s, const SeriesSystem& f, const std::vector<std::size_t>& tau_root,
                         const std::vector<std::size_t>& tau_leaf, unsigned degree) {
  if (s.flavor == Flavor::composition) throw std::invalid_argument("labeled amplitudes cover reversion and Lagrange-Good");
  if (!s.has_contraction()) throw std::invalid_argument("labeled amplitude needs a contraction scheme");
  if (tau_root.size() != s.rho_root.size() || tau_leaf.size() != s.rho_leaf.size()) {
    throw std::invalid_argument("assignment maps must match the structure type");
  }
  const std::size_t n = f.size();
  const bool reversion = s.flavor == Flavor::reversion;
  Matrix a_inv = Matrix::identity(n);
  if (reversion) a_inv = CovarianceSpec(f.linear_part()).A_inv;

  std::vector<std::size_t> alpha(s.k, 0);
  std::vector<bool> fixed(s.k, false);
  for (std::size_t r = 0; r < tau_root.size(); ++r) {
    alpha[s.rho_root[r]] = tau_root.at(r);
    fixed[s.rho_root[r]] = true;
  }
  for (std::size_t r = 0; r < tau_leaf.size(); ++r) {
    alpha[s.rho_leaf[r]] = tau_leaf.at(r);
    fixed[s.rho_leaf[r]] = true;
  }
  std::vector<std::size_t> free_slots;
  for (std::size_t x = 0; x < s.k; ++x)
    if (!fixed[x]) free_slots.push_back(x);
  double work = 1;
  for (std::size_t i = 0; i < free_slots.size(); ++i) work *= static_cast<double>(n);
  if (work > double(1 << 22)) throw resource_error("labeled amplitude sweep too large");

  std::vector<std::size_t> points(s.blocks.size());
  for (std::size_t b = 0; b < s.blocks.size(); ++b) points[b] = block_point(s, b);

  Series total(n, degree);
  while (true) {
    Rational value = 1;
    for (std::size_t x = 0; x < s.k && value != 0; ++x)
      if (s.contraction[x] != npos) value *= a_inv(alpha[s.contraction[x]], alpha[x]);
    MultiIndex mono(n);
    for (std::size_t b = 0; b < s.blocks.size() && value != 0; ++b) {
      const std::size_t i = alpha[points[b]];
      std::vector<std::size_t> legs;
      for (std::size_t y : s.blocks[b])
        if (y != points[b]) legs.push_back(alpha[y]);
      switch (s.block_kind[b]) {
        case BlockKind::H:
          value *= -tensor_element(f[i], legs);
          break;
        case BlockKind::Y:
          ++mono[i];
          break;
        case BlockKind::XG:
          value *= tensor_element(f[i], legs);
          ++mono[i];
          break;
        default:
          break;
      }
    }
    if (value != 0) total.add_term_truncating(mono, value);
    std::size_t pos = 0;
    while (pos < free_slots.size() && ++alpha[free_slots[pos]] == n) alpha[free_slots[pos++]] = 0;
    if (pos == free_slots.size()) break;
  }
  return total;
}

VertexBoundCounts vertex_bound_counts(const LabeledStructure& s) {
  VertexBoundCounts c;
  c.half_lines = s.k;
  c.vertices = s.blocks.size() + s.rho_root.size() + s.rho_leaf.size();
  c.source_leaves = static_cast<std::size_t>(std::count(s.block_kind.begin(), s.block_kind.end(), BlockKind::Y));
  c.ubar_sources = s.rho_leaf.size();
  return c;
}

}  // namespace fgi
