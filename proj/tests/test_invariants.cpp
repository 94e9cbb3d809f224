#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctlab/invariants.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace lctlab;
using testsupport::lct_2d_oracle;
using testsupport::random_ideal;
using testsupport::random_m_primary;
using testsupport::random_weights;

namespace {

ExponentVector ev(std::initializer_list<long> coords) {
  ExponentVector v;
  for (long c : coords) v.push_back(Rat(c));
  return v;
}

Weights w(std::initializer_list<const char*> entries) {
  std::vector<Rat> raw;
  for (const char* e : entries) raw.push_back(rat_parse(e));
  return Weights(std::move(raw));
}

}  // namespace

TEST_CASE("lct on hand-checked anchors") {
  CHECK(lct(build_polyhedron({ev({1, 0}), ev({0, 1})})) == 2);
  CHECK(lct(build_polyhedron({ev({2, 0}), ev({0, 3})})) == Rat(5) / 6);
  CHECK(lct(build_polyhedron({ev({3, 0}), ev({1, 1}), ev({0, 3})})) == 1);
  CHECK_THROWS_AS(lct(build_polyhedron({ev({1, 1})})), ValidationError);
}

TEST_CASE("lct_dual on hand-checked anchors") {
  CHECK(lct_dual(build_polyhedron({ev({1, 0}), ev({0, 1})})) == 2);
  CHECK(lct_dual(build_polyhedron({ev({2, 0}), ev({0, 3})})) == Rat(5) / 6);
  CHECK(lct_dual(build_polyhedron({ev({2, 0}), ev({1, 1}), ev({0, 2})})) == 1);
}

TEST_CASE("strong duality and the 2-d diagonal oracle on a random corpus") {
  SplitMix64 rng(8201);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng.next_below(3);
    const auto p = random_m_primary(rng, n, 6, 1 + rng.next_below(4));
    const Rat primal = lct(p);
    CHECK(primal == lct_dual(p));
    if (n == 2) CHECK(primal == lct_2d_oracle(p));
  }
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_m_primary(rng, 5, 5, 2);
    CHECK(lct(p) == lct_dual(p));
  }
}

TEST_CASE("lelong numbers") {
  CHECK(lelong_number(build_polyhedron({ev({2, 0}), ev({0, 3})})) == 2);
  CHECK(lelong_number(build_polyhedron({ev({1, 0}), ev({0, 1})})) == 1);
  CHECK(lelong_number(build_polyhedron({ev({3, 0}), ev({1, 1}), ev({0, 3})})) == 2);
}

TEST_CASE("masses via polarization match the designated cross-checks") {
  const auto q = build_polyhedron({ev({2, 0}), ev({0, 3})});
  CHECK(ma_mass(q, 2) == 6);
  CHECK(ma_mass(q, 1) == 2);
  const auto corner = build_polyhedron({ev({1, 0}), ev({0, 1})});
  for (std::size_t k = 0; k <= 2; ++k) CHECK(ma_mass(corner, k) == 1);
  CHECK_THROWS_AS(ma_mass(q, 3), std::invalid_argument);
  CHECK_THROWS_AS(ma_mass(build_polyhedron({ev({1, 1})}), 1), ValidationError);

  SplitMix64 rng(8202);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng.next_below(2);
    const auto p = random_m_primary(rng, n, 6, 2);
    CHECK(ma_mass(p, 0) == 1);
    CHECK(ma_mass(p, 1) == lelong_number(p));
    CHECK(ma_mass(p, n) == rat_factorial(static_cast<unsigned>(n)) * covolume(p).value);
  }
}

TEST_CASE("restricted thresholds") {
  SUBCASE("weighted closed form") {
    const auto entry = restricted_lct(SingularityModel{WeightedMonomial{w({"1", "2", "3"})}}, 2);
    CHECK(entry.value == Rat(3) / 2);
    CHECK(entry.exact);
  }
  SUBCASE("monomial k = 1 is the reciprocal Lelong number") {
    const SingularityModel m{
        MonomialIdeal(build_polyhedron({ev({2, 0}), ev({0, 3})}))};
    const auto entry = restricted_lct(m, 1);
    CHECK(entry.value == Rat(1) / 2);
    CHECK(entry.exact);
  }
  SUBCASE("generic line beats both coordinate axes") {
    const SingularityModel m{
        MonomialIdeal(build_polyhedron({ev({3, 0}), ev({1, 1}), ev({0, 3})}))};
    const auto entry = restricted_lct(m, 1);
    CHECK(entry.value == Rat(1) / 2);
    CHECK(entry.exact);
  }
  SUBCASE("monomial middle k is a certified lower bound") {
    const SingularityModel m{MonomialIdeal(build_polyhedron(
        {ev({6, 0, 0}), ev({0, 6, 0}), ev({0, 0, 6}), ev({1, 1, 1})}))};
    const auto entry = restricted_lct(m, 2);
    CHECK(!entry.exact);
    CHECK(entry.value == Rat(1) / 3);  // best coordinate plane {x^6, y^6}
  }
  SUBCASE("index validation") {
    const SingularityModel m{WeightedMonomial{w({"1", "2"})}};
    CHECK_THROWS_AS(restricted_lct(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(restricted_lct(m, 2), std::invalid_argument);
  }
}

TEST_CASE("invariant tables for hand-checked models") {
  SUBCASE("weighted (1,2)") {
    const auto t = invariant_table(SingularityModel{WeightedMonomial{w({"1", "2"})}});
    CHECK(t.c == ExtRat::of(Rat(3) / 2));
    CHECK(t.ck.size() == 1);
    CHECK(t.ck[0].value == 1);
    CHECK(t.e == std::vector<Rat>{1, 1, 2});
    CHECK(t.lelong == 1);
  }
  SUBCASE("monomial (x^2, y^3)") {
    const auto t = invariant_table(
        SingularityModel{MonomialIdeal(build_polyhedron({ev({2, 0}), ev({0, 3})}))});
    CHECK(t.c == ExtRat::of(Rat(5) / 6));
    CHECK(t.ck[0].value == Rat(1) / 2);
    CHECK(t.ck[0].exact);
    CHECK(t.e == std::vector<Rat>{1, 2, 6});
    CHECK(t.lelong == 2);
  }
  SUBCASE("weighted (1,1,5)") {
    const auto t = invariant_table(SingularityModel{WeightedMonomial{w({"1", "1", "5"})}});
    CHECK(t.c == ExtRat::of(Rat(11) / 5));
    CHECK(t.ck[0].value == 1);
    CHECK(t.ck[1].value == 2);
    CHECK(t.e == std::vector<Rat>{1, 1, 1, 5});
  }
  SUBCASE("truncation reports the untruncated germ with a flag") {
    const auto t = invariant_table(
        SingularityModel{TruncatedWeighted{w({"1", "2"}), Rat(5)}});
    CHECK(t.truncated);
    CHECK(t.c == ExtRat::of(Rat(3) / 2));
  }
}

TEST_CASE("weighted closed forms agree with the polyhedral pipeline") {
  SUBCASE("hand-checked values") {
    const auto a = weighted_invariants(w({"1", "1"}));
    CHECK(a.c == ExtRat::of(Rat(2)));
    CHECK(a.ck[0].value == 1);
    CHECK(a.e == std::vector<Rat>{1, 1, 1});
    const auto b = weighted_invariants(w({"2", "3"}));
    CHECK(b.c == ExtRat::of(Rat(5) / 6));
    CHECK(b.ck[0].value == Rat(1) / 2);
    CHECK(b.e == std::vector<Rat>{1, 2, 6});
    const auto c = weighted_invariants(w({"1", "2", "3"}));
    CHECK(c.c == ExtRat::of(Rat(11) / 6));
    CHECK(c.ck[0].value == 1);
    CHECK(c.ck[1].value == Rat(3) / 2);
    CHECK(c.e == std::vector<Rat>{1, 1, 2, 6});
    CHECK_THROWS_AS(weighted_invariants(Weights({Rat(0)})), ValidationError);
  }
  SUBCASE("random corpus against the axis-vertex polyhedron") {
    SplitMix64 rng(8203);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng.next_below(4);  // up to 5
      const Weights weights = random_weights(rng, n);
      const auto closed = weighted_invariants(weights);
      const auto poly = axis_polyhedron(weights);
      CHECK(closed.c == ExtRat::of(lct(poly)));
      CHECK(closed.lelong == lelong_number(poly));
      CHECK(closed.e == ma_masses(poly));
    }
  }
}

TEST_CASE("mass chain and threshold monotonicity on the random corpus") {
  SplitMix64 rng(8204);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.next_below(2);
    const SingularityModel m{random_ideal(rng, n, 6, 1 + rng.next_below(3))};
    const auto t = invariant_table(m);
    for (std::size_t k = 1; k < n; ++k) {
      CHECK(rat_pow(t.e[k], static_cast<unsigned>(k + 1)) <=
            rat_pow(t.e[k + 1], static_cast<unsigned>(k)));
    }
    for (std::size_t i = 1; i < t.ck.size(); ++i) {
      CHECK(t.ck[i - 1].value <= t.ck[i].value);
    }
    if (!t.ck.empty()) CHECK(ExtRat::of(t.ck.back().value) <= t.c);
  }
}
