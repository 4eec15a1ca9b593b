#include "aft/stepfn.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

using namespace aft;

namespace {

// w1*f1 + w2*f2 over the merged breakpoint set
EvenStepFunction combine(const EvenStepFunction& f1, double w1, const EvenStepFunction& f2,
                         double w2) {
  std::vector<double> bs = f1.breakpoints();
  bs.insert(bs.end(), f2.breakpoints().begin(), f2.breakpoints().end());
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<double> levels;
  double prev = 0.0;
  for (std::size_t i = 0; i <= bs.size(); ++i) {
    const double hi = i < bs.size() ? bs[i] : std::numbers::pi;
    const double mid = 0.5 * (prev + hi);
    levels.push_back(w1 * f1(mid) + w2 * f2(mid));
    prev = hi;
  }
  return EvenStepFunction(bs, levels, f1.normalized() && f2.normalized());
}

EvenStepFunction random_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nb(1, 3);
  std::uniform_real_distribution<double> bp(0.05, std::numbers::pi - 0.05);
  std::uniform_real_distribution<double> lv(-1.5, 1.5);
  const int count = nb(rng);
  std::vector<double> bs;
  for (int i = 0; i < count; ++i) bs.push_back(bp(rng));
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<double> levels;
  for (std::size_t i = 0; i <= bs.size(); ++i) levels.push_back(lv(rng));
  return EvenStepFunction(bs, levels);
}

}  // namespace

TEST_CASE("evenness and periodicity of evaluation") {
  std::mt19937_64 rng(13579);
  const auto f = random_step(rng);
  std::uniform_real_distribution<double> ts(-10.0, 10.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const double theta = ts(rng);
    REQUIRE(f(-theta) == f(theta));
    REQUIRE(f(theta + kTwoPi) == Catch::Approx(f(theta)).margin(1e-12));
  }
}

TEST_CASE("midpoint convention at breakpoints") {
  const auto g = EvenStepFunction::indicator(1.0);
  CHECK(g(1.0) == 0.5);            // average of 1 and 0
  CHECK(g(-1.0) == 0.5);           // mirrored breakpoint
  CHECK(g(1.0 + 5e-13) == 0.5);    // inside the 1e-12 hit tolerance
  CHECK(g(0.999) == 1.0);
  CHECK(g(1.001) == 0.0);
}

TEST_CASE("normalization subtracts the exact mean") {
  // constant function (the b = pi degenerate indicator) normalizes to zero
  const EvenStepFunction constant({}, {1.0});
  const auto zeroed = normalize_step(constant);
  CHECK(zeroed(0.3) == 0.0);
  CHECK(zeroed.mean() == 0.0);

  // indicator g_b: levels become 1 - b/pi and -b/pi
  const double b = 1.3;
  const auto f_b = normalize_step(EvenStepFunction::indicator(b));
  CHECK(f_b.levels()[0] == Catch::Approx(1.0 - b / std::numbers::pi).margin(1e-15));
  CHECK(f_b.levels()[1] == Catch::Approx(-b / std::numbers::pi).margin(1e-15));
  CHECK(std::abs(f_b.mean()) < 1e-16);
  CHECK(f_b.normalized());

  // idempotence
  const auto again = normalize_step(f_b);
  CHECK(std::abs(again.levels()[0] - f_b.levels()[0]) < 1e-15);
  CHECK(std::abs(again.levels()[1] - f_b.levels()[1]) < 1e-15);
}

TEST_CASE("step function construction rejects bad shapes") {
  CHECK_THROWS_AS(EvenStepFunction({0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvenStepFunction({-0.1}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvenStepFunction({3.5}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvenStepFunction({0.9, 0.4}, {1.0, 0.0, 2.0}), std::invalid_argument);
}

TEST_CASE("sample sums on aligned and generic grids") {
  // b on the sample lattice: the normalized sum collapses to zero
  const double b_aligned = kTwoPi * 7.0 / 100.0;
  const auto f_aligned = normalize_step(EvenStepFunction::indicator(b_aligned));
  CHECK(std::abs(sample_sum_F_N(f_aligned, 100)) < 1e-10);

  // b = 1, N = 4: one interior sample at level 1 - 1/pi, three at -1/pi
  const auto f_b = normalize_step(EvenStepFunction::indicator(1.0));
  const double expected = 1.0 - 4.0 / std::numbers::pi;
  CHECK(sample_sum_F_N(f_b, 4) == Catch::Approx(expected).margin(1e-12));
  CHECK(sample_sum_F_N(f_b, 4) ==
        Catch::Approx(-2.0 * bernoulli_frac(4.0 / kTwoPi)).margin(1e-12));

  const auto zero = normalize_step(EvenStepFunction::zero());
  CHECK(sample_sum_F_N(zero, 17) == 0.0);
}

TEST_CASE("counted sample sums agree with the literal loop") {
  std::mt19937_64 rng(86420);
  std::uniform_int_distribution<std::int64_t> ns(1, 3000);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = normalize_step(random_step(rng));
    const std::int64_t n = ns(rng);
    REQUIRE(sample_sum_F_N_counted(f, n) ==
            Catch::Approx(sample_sum_F_N(f, n)).margin(1e-9));
  }
  // small-N edges
  const auto f = normalize_step(EvenStepFunction::indicator(2.0));
  for (std::int64_t n = 1; n <= 12; ++n) {
    REQUIRE(sample_sum_F_N_counted(f, n) ==
            Catch::Approx(sample_sum_F_N(f, n)).margin(1e-12));
  }
}

TEST_CASE("sample-sum identity against the Bernoullian form") {
  CHECK(bernoulli_identity_check(1.0, 4) < 1e-12);
  // grid-aligned breakpoint: both sides vanish
  CHECK(bernoulli_identity_check(std::numbers::pi / 2.0, 8) < 1e-12);
  CHECK(std::abs(sample_sum_F_N(normalize_step(EvenStepFunction::indicator(std::numbers::pi / 2.0)), 8)) < 1e-12);

  std::mt19937_64 rng(24680);
  std::uniform_real_distribution<double> bs(1e-3, std::numbers::pi - 1e-3);
  std::uniform_int_distribution<std::int64_t> ns(1, 10000);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    worst = std::max(worst, bernoulli_identity_check(bs(rng), ns(rng)));
  }
  INFO("max deviation " << worst);
  CHECK(worst < 1e-9);
}

TEST_CASE("davenport partial sums") {
  const auto table = build_mobius_table(10000);
  for (std::int64_t k : {1LL, 10LL, 100LL, 5000LL}) {
    REQUIRE(davenport_partial(0.0, k, table) == 0.0);
  }
  // theta = 1/2: every term vanishes ({k/2} is 0 for all k)
  for (std::int64_t k : {100LL, 1000LL, 10000LL}) {
    REQUIRE(davenport_partial(0.5, k, table) == 0.0);
  }
  // theta = 1/4: the deviation from -1/pi shrinks decade over decade
  const double target = -1.0 / std::numbers::pi;
  const double dev3 = std::abs(davenport_partial(0.25, 1000, table) - target);
  const double dev4 = std::abs(davenport_partial(0.25, 10000, table) - target);
  INFO("dev at 1e3: " << dev3 << ", 1e4: " << dev4);
  CHECK(dev4 < dev3);

  const auto pairs = davenport_checkpoints(0.25, {100, 1000}, table);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].first == 100);
  CHECK(pairs[1].second == Catch::Approx(davenport_partial(0.25, 1000, table)));

  CHECK_THROWS_AS(davenport_partial(0.25, 100000, table), std::out_of_range);
}

TEST_CASE("step cosine coefficients approach the closed form") {
  const auto table = build_mobius_table(30000);
  const auto f_b = normalize_step(EvenStepFunction::indicator(1.0));
  for (int n = 1; n <= 3; ++n) {
    const double truth = 2.0 / (n * std::numbers::pi) * std::sin(static_cast<double>(n));
    const auto coarse = step_cosine_coeff(f_b, n, 1000, table);
    const auto fine = step_cosine_coeff(f_b, n, 10000, table);
    REQUIRE(std::abs(coarse.value - truth) < 6e-3);
    REQUIRE(std::abs(fine.value - truth) < 3e-3);
  }

  const auto zero = normalize_step(EvenStepFunction::zero());
  CHECK(step_cosine_coeff(zero, 1, 500, table).value == 0.0);

  // un-normalized input is a precondition violation
  CHECK_THROWS_AS(step_cosine_coeff(EvenStepFunction::indicator(1.0), 1, 100, table),
                  std::invalid_argument);
}

TEST_CASE("step coefficient extraction is linear") {
  const auto table = build_mobius_table(5000);
  const auto f1 = normalize_step(EvenStepFunction::indicator(0.8));
  const auto f2 = normalize_step(EvenStepFunction::indicator(2.2));
  const auto combo = combine(f1, 2.0, f2, -1.0);
  REQUIRE(combo.normalized());
  for (int n = 1; n <= 3; ++n) {
    const double lhs = step_cosine_coeff(combo, n, 1000, table).value;
    const double rhs = 2.0 * step_cosine_coeff(f1, n, 1000, table).value -
                       step_cosine_coeff(f2, n, 1000, table).value;
    REQUIRE(lhs == Catch::Approx(rhs).margin(1e-12));
  }
}

TEST_CASE("pnt chain report ties the small-theta pieces together") {
  const auto table = build_mobius_table(20000);

  const auto guarded = pnt_chain_report(table, 9999, 1e-4);
  CHECK(guarded.small_theta_guard);  // K * theta < 1
  CHECK(guarded.linear_identity_dev < 1e-12);
  CHECK(guarded.epsilon_bound >= guarded.half_mu_over_n_abs);

  const auto unguarded = pnt_chain_report(table, 10001, 1e-4);
  CHECK_FALSE(unguarded.small_theta_guard);

  // deterministic across runs
  const auto again = pnt_chain_report(table, 9999, 1e-4);
  CHECK(again.davenport_value == guarded.davenport_value);
  CHECK(again.mu_over_n_value == guarded.mu_over_n_value);
  CHECK(again.mertens_value == guarded.mertens_value);

  // the PNT surrogate trend: million-scale partials sit below thousand-scale
  const double at_1e3 = std::abs(mu_over_n_partial(table, 1000));
  const double at_2e4 = std::abs(mu_over_n_partial(table, 20000));
  CHECK(at_2e4 < at_1e3);
}
