#include <algorithm>
#include <map>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "fgi/diagrams/amplitudes.hpp"
#include "fgi/diagrams/labeled.hpp"
#include "fgi/errors.hpp"
#include "support/random_systems.hpp"

using namespace fgi;
using fgi::testing::Rng;

namespace {

std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

struct Orbits {
  std::map<std::string, std::uint64_t> size;
  std::map<std::string, LabeledStructure> representative;
  std::size_t unclassified = 0;
};

Orbits quotient(std::size_t k, Flavor flavor, std::size_t n_root, std::size_t n_leaf) {
  Orbits o;
  labeled_for_each(k, flavor, n_root, n_leaf, LabeledLevel::feynman, [&](const LabeledStructure& s) {
    if (!is_connected(s)) return;
    const auto enc = class_encoding_of(s);
    if (!enc) {
      ++o.unclassified;
      return;
    }
    if (o.size[*enc]++ == 0) o.representative.emplace(*enc, s);
  });
  return o;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  return p;
}

}  // namespace

TEST_CASE("small labeled structures", "[labeled]") {
  const auto empty = labeled_enumerate(0, Flavor::reversion, 0, 0, LabeledLevel::feynman, false);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].blocks.empty());
  CHECK_FALSE(validate(empty[0]).has_value());

  const auto two = labeled_enumerate(2, Flavor::reversion, 1, 0, LabeledLevel::feynman, true);
  CHECK(two.size() == 2);
  for (const auto& s : two) {
    CHECK_FALSE(validate(s).has_value());
    CHECK(class_encoding_of(s) == std::optional<std::string>("L"));
    CHECK(labeled_aut_order(s) == 1);
  }
  CHECK_THROWS_AS(labeled_enumerate(11, Flavor::reversion, 0, 0, LabeledLevel::feynman, false), resource_error);
}

TEST_CASE("reversion species quotient matches the direct enumerators", "[labeled][species]") {
  const auto trees = enumerate_reversion_trees(4);
  const auto circuits = enumerate_reversion_circuits(3);
  for (std::size_t k = 1; k <= 7; ++k) {
    std::map<std::string, std::uint64_t> expected;
    for (const auto& t : trees)
      if (half_lines(t) == k) expected.emplace(encode(t), aut_order(t));
    for (const auto& c : circuits)
      if (half_lines(c) == k) expected.emplace(encode(c), aut_order(c));

    const Orbits rooted = quotient(k, Flavor::reversion, 1, 0);
    const Orbits vacuum = quotient(k, Flavor::reversion, 0, 0);
    CHECK(rooted.unclassified == 0);
    CHECK(vacuum.unclassified == 0);

    std::map<std::string, std::uint64_t> got;
    Rational lhs = 0, rhs = 0;
    for (const Orbits* o : {&rooted, &vacuum})
      for (const auto& [enc, orbit] : o->size) {
        REQUIRE(factorial(k) % orbit == 0);
        got.emplace(enc, factorial(k) / orbit);
        rhs += Rational(static_cast<unsigned long>(orbit)) / Rational(static_cast<unsigned long>(factorial(k)));
      }
    for (const auto& [enc, aut] : expected) lhs += Rational(1) / Rational(static_cast<unsigned long>(aut));
    CHECK(got == expected);
    CHECK(lhs == rhs);

    if (k <= 6)
      for (const Orbits* o : {&rooted, &vacuum})
        for (const auto& [enc, s] : o->representative) CHECK(labeled_aut_order(s) == got.at(enc));
  }
}

TEST_CASE("Lagrange-Good species quotient matches the direct enumerators", "[labeled][species]") {
  const auto trees = enumerate_lg_trees(3);
  const auto circuits = enumerate_lg_circuits(3);
  for (std::size_t k = 1; k <= 6; ++k) {
    std::map<std::string, std::uint64_t> expected;
    for (const auto& t : trees)
      if (half_lines(t) == k) expected.emplace(encode(t), aut_order(t));
    for (const auto& c : circuits)
      if (half_lines(c) == k) expected.emplace(encode(c), aut_order(c));
    std::map<std::string, std::uint64_t> got;
    for (const Orbits& o : {quotient(k, Flavor::lagrange_good, 1, 0), quotient(k, Flavor::lagrange_good, 0, 0)}) {
      CHECK(o.unclassified == 0);
      for (const auto& [enc, orbit] : o.size) got.emplace(enc, factorial(k) / orbit);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("vertex-count bound on reversion structures", "[labeled][bound]") {
  for (std::size_t k = 0; k <= 7; ++k)
    for (std::size_t roots = 0; roots <= 2; ++roots)
      for (std::size_t leaves = 0; leaves + roots <= 2; ++leaves)
        labeled_for_each(k, Flavor::reversion, roots, leaves, LabeledLevel::feynman, [&](const LabeledStructure& s) {
          const VertexBoundCounts c = vertex_bound_counts(s);
          CHECK(c.half_lines == k);
          CHECK(c.vertex_bound_holds());
        });

  // counting half-lines instead of vertices is too strict: H(L,L) has six
  const Orbits rooted = quotient(6, Flavor::reversion, 1, 0);
  const LabeledStructure& s = rooted.representative.at("H(L,L)");
  const VertexBoundCounts c = vertex_bound_counts(s);
  CHECK(c.half_lines == 6);
  CHECK(c.source_leaves == 2);
  CHECK(c.vertex_bound_holds());
  CHECK_FALSE(c.half_line_bound_holds());
}

TEST_CASE("labeled amplitudes agree with class amplitudes and are relabeling invariant", "[labeled][amplitudes]") {
  Rng rng(41);
  const SeriesSystem f = testing::random_reversible(rng, 2, 5);
  ReversionRules rules(f, 4);
  for (std::size_t k : {2u, 4u, 6u}) {
    const Orbits o = quotient(k, Flavor::reversion, 1, 0);
    for (const auto& [enc, s] : o.representative)
      for (std::size_t i = 0; i < 2; ++i) {
        const Series amp = labeled_amplitude(s, f, {i}, {}, 4);
        CHECK(amp == rules.tree(parse_tree_class(enc), i));
        CHECK(labeled_amplitude(transport(s, random_permutation(rng, k)), f, {i}, {}, 4) == amp);
      }
  }
  for (const auto& [enc, s] : quotient(5, Flavor::reversion, 0, 0).representative) {
    const Series amp = labeled_amplitude(s, f, {}, {}, 4);
    CHECK(labeled_amplitude(transport(s, random_permutation(rng, 5)), f, {}, {}, 4) == amp);
  }

  const SeriesSystem g = testing::random_polynomial_system(rng, 2, 3, 3, 0.6);
  LagrangeGoodRules lg(g, 4);
  for (std::size_t k : {2u, 4u, 6u})
    for (const auto& [enc, s] : quotient(k, Flavor::lagrange_good, 1, 0).representative)
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(labeled_amplitude(s, g, {i}, {}, 4) == lg.tree(parse_lg_tree_class(enc), i));
        CHECK(labeled_amplitude(transport(s, random_permutation(rng, k)), g, {i}, {}, 4) ==
              lg.tree(parse_lg_tree_class(enc), i));
      }
}

TEST_CASE("composition structures", "[labeled][composition]") {
  const LabeledStructure ex = composition_sixteen_element_example();
  CHECK(ex.k == 16);
  CHECK_FALSE(validate(ex).has_value());
  const auto cls = composition_class_of(ex);
  REQUIRE(cls.has_value());
  CHECK(*cls == CompositionClass{{{2, 1}, {3, 1}}});
  CHECK(aut_order_composition(*cls) == 24);
  std::vector<std::size_t> internal(10);
  std::iota(internal.begin(), internal.end(), 1);
  CHECK(labeled_aut_order(ex, internal) == 24);

  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& c : enumerate_composition_classes(d)) {
      const LabeledStructure s = composition_realization(c);
      CHECK_FALSE(validate(s).has_value());
      CHECK(composition_class_of(s) == std::optional<CompositionClass>(c));
    }
}

TEST_CASE("validation and transport", "[labeled]") {
  Rng rng(42);
  const Orbits o = quotient(6, Flavor::reversion, 1, 0);
  const LabeledStructure s = o.representative.at("H(L,L)");
  CHECK_FALSE(validate(s).has_value());

  std::vector<std::size_t> id(s.k);
  std::iota(id.begin(), id.end(), 0);
  CHECK(transport(s, id) == s);
  const auto sigma = random_permutation(rng, s.k);
  std::vector<std::size_t> inv(s.k);
  for (std::size_t x = 0; x < s.k; ++x) inv[sigma[x]] = x;
  CHECK(transport(transport(s, sigma), inv) == s);
  CHECK_FALSE(validate(transport(s, sigma)).has_value());
  CHECK(class_encoding_of(transport(s, sigma)) == std::optional<std::string>("H(L,L)"));

  LabeledStructure broken = s;
  broken.field[broken.blocks[0][0]] = Field::t;
  CHECK(validate(broken).has_value());
  LabeledStructure bad_pairing = s;
  bad_pairing.contraction.assign(s.k, LabeledStructure::npos);
  CHECK(validate(bad_pairing).has_value());
}
