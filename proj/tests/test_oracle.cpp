#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "adauc/oracle.hpp"

using namespace adauc;

namespace {

data::Dataset tiny_dataset(core::Prng& rng, std::size_t n, std::size_t d) {
  data::Dataset ds;
  ds.features = core::Matrix(n, d);
  for (double& v : ds.features.data) v = rng.uniform(0.0, 1.0);
  ds.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) ds.labels[i] = rng.uniform(0.0, 1.0) < 0.5 ? 1 : 0;
  ds.labels[0] = 1;
  ds.labels[1] = 0;
  data::validate(ds);
  return ds;
}

}  // namespace

TEST_CASE("verify_reformulation: two-point dataset and equal-score degeneracy") {
  core::Prng rng(1);
  const data::Dataset two = tiny_dataset(rng, 2, 3);
  const model::ScorerParams params = model::init(model::ScorerArch{{3, 1}}, 7);
  CHECK(oracle::verify_reformulation(two, params) <= 1e-8);

  // constant scorer: pairwise loss is exactly 1 and the reformulated value
  // must match it
  model::ScorerParams flat = params;
  flat.set_flat(core::Vector(flat.flat_size(), 0.0));
  const data::Dataset ds = tiny_dataset(rng, 10, 3);
  CHECK(oracle::verify_reformulation(ds, flat) <= 1e-10);
}

TEST_CASE("verify_reformulation: random instances stay within 1e-8") {
  core::Prng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(19);
    const std::size_t d = 2 + rng.below(3);
    const data::Dataset ds = tiny_dataset(rng, n, d);
    const model::ScorerArch arch =
        trial % 2 == 0 ? model::ScorerArch{{d, 1}} : model::ScorerArch{{d, 4, 1}};
    const model::ScorerParams params = model::init(arch, rng.next_u64());
    CHECK(oracle::verify_reformulation(ds, params) <= 1e-8);
  }
}

TEST_CASE("verify_stationarity_zeros: all constructions pass on a generic scorer") {
  core::Prng rng(3);
  const std::size_t d = 6;
  const double eps = 8.0 / 255.0;
  const model::ScorerParams params = model::init(model::ScorerArch{{d, 5, 1}}, 13);
  const objective::ObjectiveContext ctx{0.25, 0.0};
  const objective::AuxParams aux{0.4, 0.7, 0.3};
  core::Vector x0(d);
  for (double& v : x0) v = rng.uniform(2.0 * eps, 1.0 - 2.0 * eps);

  const oracle::StationarityZeros res = oracle::verify_stationarity_zeros(params, aux, ctx, x0, eps);
  CHECK(res.pass);
  CHECK(res.fosc_zero_grad <= 1e-10);
  CHECK(res.fosc_solved_interior <= 1e-10);
  CHECK(res.generic_fosc > 0.0);
  CHECK(res.corner_gap <= 1e-10);
  if (res.sign_stable) CHECK(res.fosc_boundary <= 1e-8);
}

TEST_CASE("estimate_gamma_star: flat scorer has no curvature") {
  core::Prng rng(4);
  const data::Dataset sample = tiny_dataset(rng, 20, 4);
  model::ScorerParams flat = model::init(model::ScorerArch{{4, 1}}, 0);
  flat.set_flat(core::Vector(flat.flat_size(), 0.0));
  const objective::ObjectiveContext ctx{0.4, 0.0};
  const objective::AuxParams aux{0.5, 0.5, 0.0};
  const double gamma_hat = oracle::estimate_gamma_star(flat, aux, ctx, sample, 200, 5);
  CHECK(gamma_hat >= 0.0);
  CHECK(gamma_hat <= 1e-9);
}

TEST_CASE("estimate_gamma_star probe matches the linear-scorer closed form") {
  // symbolic second derivative of g(sigmoid(w.x + b)) along u at fixed alpha:
  //   (q'(s) * s'(z)^2 + q(s) * s''(z)) * (w.u)^2
  const std::size_t d = 4;
  model::ScorerParams linear = model::init(model::ScorerArch{{d, 1}}, 0);
  core::Vector flat{0.8, -0.5, 1.2, 0.3, 0.1};
  linear.set_flat(flat);
  const double p = 0.3, a = 0.2, b = 0.6, alpha = 0.25;
  core::Prng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    core::Vector x(d), u(d);
    for (double& v : x) v = rng.uniform(0.1, 0.9);
    double norm_sq = 0.0;
    for (double& v : u) {
      v = rng.normal(0.0, 1.0);
      norm_sq += v * v;
    }
    for (double& v : u) v /= std::sqrt(norm_sq);
    const int y = trial % 2;

    double z = flat[d];
    double wu = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      z += flat[j] * x[j];
      wu += flat[j] * u[j];
    }
    const double s = 1.0 / (1.0 + std::exp(-z));
    const double sp = s * (1.0 - s);
    const double spp = sp * (1.0 - 2.0 * s);
    const double q = y == 1 ? 2.0 * (1.0 - p) * (s - a) - 2.0 * (1.0 + alpha) * (1.0 - p)
                            : 2.0 * p * (s - b) + 2.0 * (1.0 + alpha) * p;
    const double qp = y == 1 ? 2.0 * (1.0 - p) : 2.0 * p;
    const double expected = (qp * sp * sp + q * spp) * wu * wu;

    const double measured = oracle::g_second_difference(
        linear, p, a, b, alpha, x, u, 1e-3, y);
    CHECK(measured == doctest::Approx(expected).epsilon(1e-4));
  }
}

TEST_CASE("verify_strong_concavity: pure regularizer hits the bound exactly") {
  model::ScorerParams flat = model::init(model::ScorerArch{{3, 1}}, 0);
  flat.set_flat(core::Vector(flat.flat_size(), 0.0));
  const objective::AuxParams aux{0.5, 0.5, 0.0};
  const double gamma = 2.0;
  // f = const - gamma ||x||^2, second difference is exactly -2 gamma h^2,
  // which meets the margin = gamma bound with room to spare at the slack
  const oracle::ConcavityResult res =
      oracle::verify_strong_concavity(flat, aux, 0.5, gamma, gamma, 500, 7);
  CHECK(res.pass);
}

TEST_CASE("verify_strong_concavity: negative control finds violations at gamma=0") {
  model::ScorerParams curvy = model::init(model::ScorerArch{{4, 6, 1}}, 19);
  core::Vector flat = curvy.flat();
  for (double& v : flat) v *= 3.0;
  curvy.set_flat(flat);
  const objective::AuxParams aux{0.4, 0.6, 0.2};
  const oracle::ConcavityResult res =
      oracle::verify_strong_concavity(curvy, aux, 0.3, 0.0, 1.0, 500, 11);
  CHECK_FALSE(res.pass);
  CHECK(res.violations > 0);
}

TEST_CASE("verify_strong_concavity: gamma_hat plus margin passes") {
  core::Prng rng(12);
  const data::Dataset sample = tiny_dataset(rng, 30, 5);
  const model::ScorerParams params = model::init(model::ScorerArch{{5, 7, 1}}, 23);
  const objective::ObjectiveContext ctx{0.35, 0.0};
  const objective::AuxParams aux{0.5, 0.5, 0.1};
  const double gamma_hat = oracle::estimate_gamma_star(params, aux, ctx, sample, 500, 13);
  const oracle::ConcavityResult res =
      oracle::verify_strong_concavity(params, aux, ctx.p, gamma_hat + 1.0, 1.0, 500, 17);
  CHECK(res.pass);
}

TEST_CASE("verify_alpha_concavity: exact second difference, p=0.5 spot value") {
  double gap = 0.0;
  CHECK(oracle::verify_alpha_concavity(objective::ObjectiveContext{0.5, 0.0}, 500, 3, &gap));
  CHECK(gap <= 1e-12);

  // p = 0.5, h = 1: second difference is exactly -0.5
  const objective::ObjectiveContext ctx{0.5, 0.0};
  const objective::AuxParams base{0.3, 0.8, 0.0};
  objective::AuxParams plus = base, minus = base;
  plus.alpha = 1.0;
  minus.alpha = -1.0;
  const double second = objective::g_instance(ctx, plus, 0.7, 1) +
                        objective::g_instance(ctx, minus, 0.7, 1) -
                        2.0 * objective::g_instance(ctx, base, 0.7, 1);
  CHECK(second == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("fd_check_grad_f: quadratic-exactness of a flat scorer and MLP states") {
  model::ScorerParams flat = model::init(model::ScorerArch{{3, 1}}, 0);
  flat.set_flat(core::Vector(flat.flat_size(), 0.0));
  const objective::ObjectiveContext ctx{0.5, 1.5};
  const objective::AuxParams aux{0.2, 0.8, -0.3};
  CHECK(oracle::fd_check_grad_f(ctx, flat, aux, {0.3, 0.5, 0.7}, 0) <= 1e-9);

  core::Prng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const model::ScorerParams params = model::init(model::ScorerArch{{4, 5, 1}}, rng.next_u64());
    core::Vector x(4);
    for (double& v : x) v = rng.uniform(0.0, 1.0);
    const objective::ObjectiveContext c{0.3, 0.5};
    const objective::AuxParams a{0.4, 0.6, 0.2};
    CHECK(oracle::fd_check_grad_f(c, params, a, x, trial % 2) <= 1e-6);
  }
}

TEST_CASE("run_suite: every named suite passes and unknown names throw") {
  for (const std::string which : {"prop1", "lemma1", "concavity", "gradcheck"}) {
    const auto rows = oracle::run_suite(which, 1);
    for (const auto& row : rows) {
      INFO(row.suite, "/", row.check, " value ", row.value);
      CHECK(row.pass);
    }
  }
  CHECK_THROWS_AS(oracle::run_suite("bogus", 1), std::invalid_argument);
}
