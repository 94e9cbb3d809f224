#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctlab/bounds.hpp"
#include "lctlab/numeric.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace lctlab;
using namespace lctlab::numeric;

namespace {

ExponentVector ev(std::initializer_list<long> coords) {
  ExponentVector v;
  for (long c : coords) v.push_back(Rat(c));
  return v;
}

SingularityModel weighted(std::initializer_list<const char*> entries) {
  std::vector<Rat> raw;
  for (const char* e : entries) raw.push_back(rat_parse(e));
  return SingularityModel{WeightedMonomial{Weights(std::move(raw))}};
}

SingularityModel monomial(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<ExponentVector> rows;
  for (auto g : gens) rows.push_back(ev(g));
  return SingularityModel{MonomialIdeal(build_polyhedron(rows))};
}

}  // namespace

TEST_CASE("sublevel volumes in closed form") {
  // (1,1): the region is the polydisk of radius e^{-t}.
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(sublevel_volume(weighted({"1", "1"}), t, 1.0) ==
          doctest::Approx(M_PI * M_PI * std::exp(-4.0 * t)).epsilon(1e-12));
  }
  // n = 1: disk of radius e^{-t/a}.
  CHECK(sublevel_volume(weighted({"3"}), 2.0, 1.0) ==
        doctest::Approx(M_PI * std::exp(-2.0 * 2.0 / 3.0)).epsilon(1e-12));
  // Shallow t with r < 1 clips at the polydisk.
  CHECK(sublevel_volume(weighted({"1", "1"}), 0.1, 0.5) ==
        doctest::Approx(M_PI * M_PI * std::pow(std::min(0.25, std::exp(-0.2)), 2))
            .epsilon(1e-12));
  CHECK_THROWS_AS(sublevel_volume(weighted({"1"}), -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sublevel_volume(weighted({"1"}), 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("closed form matches an independent sampler within three sigma") {
  // weights (1,2) at t = 1: two-piece region, sampled test-side.
  const double exact = sublevel_volume(weighted({"1", "2"}), 1.0, 1.0);
  const std::uint64_t samples = 1000000;
  const double est = testsupport::weighted_sublevel_mc({1.0, 2.0}, 1.0, 1.0, samples, 555);
  const double p = est / (M_PI * M_PI);
  const double se = M_PI * M_PI * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  CHECK(std::abs(exact - est) <= 3.0 * se);
}

TEST_CASE("monomial sublevel volume is consistent with its decay rate") {
  NumericConfig cfg;
  cfg.samples = 400000;
  const auto m = monomial({{2, 0}, {0, 3}});
  const double v1 = sublevel_volume(m, 3.0, 1.0, cfg);
  const double v2 = sublevel_volume(m, 4.0, 1.0, cfg);
  // V ~ e^{-2ct} with c = 5/6 -> log-ratio per unit t about -5/3.
  const double rate = std::log(v2 / v1);
  CHECK(rate == doctest::Approx(-5.0 / 3.0).epsilon(0.08));
  // Deterministic for a fixed seed.
  CHECK(sublevel_volume(m, 3.0, 1.0, cfg) == v1);
}

TEST_CASE("decay regression recovers the threshold") {
  SUBCASE("weights (1,1): slope exactly 2") {
    std::vector<double> grid;
    for (double t = 2; t <= 10; t += 1) grid.push_back(t);
    const auto est = lct_estimate_decay(weighted({"1", "1"}), grid, 1.0);
    CHECK(std::abs(est.c_hat - 2.0) < 0.01);
    CHECK(est.stderr_ < 1e-10);
  }
  SUBCASE("weights (2,3): within 5% of 5/6") {
    std::vector<double> grid;
    for (double t = 5; t <= 40; t += 2.5) grid.push_back(t);
    const auto est = lct_estimate_decay(weighted({"2", "3"}), grid, 1.0);
    CHECK(std::abs(est.c_hat - 5.0 / 6.0) <= 0.05 * (5.0 / 6.0));
  }
  SUBCASE("monomial (x^2,y^3): within 5% of 5/6") {
    std::vector<double> grid;
    for (double t = 2; t <= 8; t += 0.75) grid.push_back(t);
    NumericConfig cfg;
    cfg.samples = 400000;
    const auto est = lct_estimate_decay(monomial({{2, 0}, {0, 3}}), grid, 1.0, cfg);
    CHECK(std::abs(est.c_hat - 5.0 / 6.0) <= 0.05 * (5.0 / 6.0));
  }
  SUBCASE("grid validation") {
    CHECK_THROWS_AS(lct_estimate_decay(weighted({"1"}), {1, 2, 3}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(lct_estimate_decay(weighted({"1"}), {1, 2, 3, 4, 4.5, 4.2}, 1.0),
                    std::invalid_argument);
  }
  SUBCASE("underflow is reported, not returned") {
    std::vector<double> grid;
    for (double t = 500; t < 1000; t += 50) grid.push_back(t);
    CHECK_THROWS_AS(lct_estimate_decay(weighted({"1", "1"}), grid, 1.0), ValidationError);
  }
}

TEST_CASE("integrability verdicts around the threshold") {
  const std::uint64_t samples = 400000;
  SUBCASE("weights (1,1), threshold 2") {
    CHECK(integrability_check(weighted({"1", "1"}), 1.5, samples, 99).verdict ==
          IntegrabilityVerdict::Finite);
    CHECK(integrability_check(weighted({"1", "1"}), 2.5, samples, 99).verdict ==
          IntegrabilityVerdict::Diverging);
  }
  SUBCASE("monomial (x^2,y^3), threshold 5/6") {
    CHECK(integrability_check(monomial({{2, 0}, {0, 3}}), 0.75, samples, 99).verdict ==
          IntegrabilityVerdict::Finite);
    CHECK(integrability_check(monomial({{2, 0}, {0, 3}}), 0.95, samples, 99).verdict ==
          IntegrabilityVerdict::Diverging);
  }
  SUBCASE("determinism") {
    const auto a = integrability_check(weighted({"1", "2"}), 1.2, 100000, 7);
    const auto b = integrability_check(weighted({"1", "2"}), 1.2, 100000, 7);
    CHECK(a.statistic == b.statistic);
  }
}

TEST_CASE("generic restriction estimates") {
  SUBCASE("the detector ideal: generic lines see 1/2, axes only 1/3") {
    const auto m = monomial({{3, 0}, {1, 1}, {0, 3}});
    const double est = generic_restriction_estimate(m, 1, 6, 424242);
    CHECK(est > 0.45);
    CHECK(est < 0.55);
    const auto axis = restrict_to(std::get<MonomialIdeal>(m).poly(), {0});
    REQUIRE(axis.has_value());
    CHECK(lct(*axis) == Rat(1) / 3);
  }
  SUBCASE("weighted (1,2,3), k = 2 approaches 3/2") {
    const double est = generic_restriction_estimate(weighted({"1", "2", "3"}), 2, 4, 11);
    CHECK(std::abs(est - 1.5) <= 0.075);
  }
  SUBCASE("weighted (1,1), k = 1: every line is equivalent") {
    const double est = generic_restriction_estimate(weighted({"1", "1"}), 1, 4, 11);
    CHECK(std::abs(est - 1.0) <= 0.05);
  }
  SUBCASE("monomial plane restriction stays near the plane threshold") {
    // (x^2, y^2, z^2): every 2-plane restriction has threshold 1.
    const auto m = monomial({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    const double est = generic_restriction_estimate(m, 2, 3, 77);
    CHECK(est > 0.8);
    CHECK(est < 1.2);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(generic_restriction_estimate(weighted({"1", "2"}), 2, 4, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(generic_restriction_estimate(weighted({"1", "2"}), 0, 4, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("slice energy closed form") {
  CHECK(slice_energy(weighted({"1", "1"}), {0.5, 0.0}) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-12));
  CHECK(slice_energy(weighted({"2", "1/2"}), {0.1, 0.0}) ==
        doctest::Approx(std::log(0.1)).epsilon(1e-12));
  CHECK(slice_energy(weighted({"1", "2"}), {0.5, 0.0}) ==
        doctest::Approx(2.0 * std::log(0.5)).epsilon(1e-12));
  // Truncation caps the level.
  const SingularityModel trunc{
      TruncatedWeighted{Weights({Rat(1), Rat(2)}), Rat(1)}};
  CHECK(slice_energy(trunc, {0.5, 0.0}) ==
        doctest::Approx(std::max(2.0 * std::log(0.5), -1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(slice_energy(weighted({"1", "2"}), {1.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(slice_energy(weighted({"1", "2", "3"}), {0.5, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("slice limit traces") {
  SUBCASE("inside the openness window the trace dies") {
    const auto trace = slice_limit_check(weighted({"1", "2"}), 1.25, 0.4, 20);
    CHECK(trace.verdict);
    CHECK(trace.values.back() < 1e-3);
  }
  SUBCASE("above the threshold the trace grows") {
    const auto trace = slice_limit_check(weighted({"1", "2"}), 1.6, 0.4, 20);
    CHECK(!trace.verdict);
  }
  SUBCASE("unit weights, lambda = 1.5 in (1, 2)") {
    CHECK(slice_limit_check(weighted({"1", "1"}), 1.5, 0.4, 20).verdict);
  }
  SUBCASE("n = 3 window via the two-variable slice integral") {
    // weights (1,1,2): window (c_2, c_2 + gain) = (2, 2.5), c = 2.5.
    CHECK(slice_limit_check(weighted({"1", "1", "2"}), 2.25, 0.4, 22).verdict);
    CHECK(!slice_limit_check(weighted({"1", "1", "2"}), 2.7, 0.4, 22).verdict);
  }
  SUBCASE("n = 3 evaluator matches brute-force quadrature") {
    // Compare h(w)|w|^2 against a 2-d Riemann sum of the slice integrand.
    const double lambda = 2.2, r = 0.4, w = 1.0 / 16.0;
    const auto trace = slice_limit_check(weighted({"1", "1", "2"}), lambda, r, 4);
    const double lib_value = trace.values[3];
    const double c_level = 2.0 * std::log(w);
    const double lo = std::log(r) - 18.0, hi = std::log(r);
    const int steps = 900;
    const double h = (hi - lo) / steps;
    double acc = 0;
    for (int i = 0; i < steps; ++i) {
      const double x1 = lo + (i + 0.5) * h;
      for (int j = 0; j < steps; ++j) {
        const double x2 = lo + (j + 0.5) * h;
        const double phi = std::max({x1, x2, c_level});
        acc += std::exp(2.0 * x1 + 2.0 * x2 - 2.0 * lambda * phi);
      }
    }
    const double quad = acc * h * h * 4.0 * M_PI * M_PI * w * w;
    CHECK(lib_value == doctest::Approx(quad).epsilon(5e-3));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(slice_limit_check(weighted({"1", "2"}), 1.25, 0.7, 20),
                    std::invalid_argument);
    CHECK_THROWS_AS(slice_limit_check(monomial({{2, 0}, {0, 3}}), 1.0, 0.4, 20),
                    std::invalid_argument);
    CHECK_THROWS_AS(slice_limit_check(weighted({"1", "1", "1", "2"}), 1.0, 0.4, 20),
                    std::invalid_argument);
  }
}

TEST_CASE("openness window consistency: trace verdicts bracket the threshold") {
  // For every n = 2 weighted model: true strictly inside (c_1, c_1 + gain),
  // false above c.
  const std::vector<std::pair<const char*, const char*>> weight_pairs = {
      {"1", "1"}, {"1", "2"}, {"2", "3"}, {"1", "4"}, {"1/2", "3"}};
  for (const auto& [a1, a2] : weight_pairs) {
    const auto model = weighted({a1, a2});
    const auto table = invariant_table(model);
    const double c1 = to_double(table.ck[0].value);
    const double gain = to_double(
        bounds::openness_gain(table.ck[0].value, 2, table.e[2]));
    const double c = to_double(table.c.value);
    for (double frac : {0.25, 0.5, 0.75}) {
      CHECK(slice_limit_check(model, c1 + frac * gain, 0.4, 30).verdict);
    }
    CHECK(!slice_limit_check(model, 1.05 * c, 0.4, 30).verdict);
    CHECK(!slice_limit_check(model, 1.2 * c, 0.4, 30).verdict);
  }
}
