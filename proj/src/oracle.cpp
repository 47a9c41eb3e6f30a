#include "adauc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adauc/attack.hpp"

namespace adauc::oracle {

namespace {

// Local transcription of the instance objective; deliberately separate from
// the objective module so the two routes can disagree when one is wrong.
double g_local(double p, double a, double b, double alpha, double s, int y) {
  const double curvature = p * (1.0 - p) * alpha * alpha;
  if (y == 1)
    return (1.0 - p) * (s - a) * (s - a) - 2.0 * (1.0 + alpha) * (1.0 - p) * s - curvature;
  return p * (s - b) * (s - b) + 2.0 * (1.0 + alpha) * p * s - curvature;
}

core::Vector random_unit(core::Prng& rng, std::size_t d) {
  core::Vector u(d);
  double norm_sq = 0.0;
  do {
    for (double& v : u) v = rng.normal(0.0, 1.0);
    norm_sq = core::l2_norm_sq(u);
  } while (norm_sq == 0.0);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& v : u) v *= inv;
  return u;
}

core::Vector random_box_point(core::Prng& rng, std::size_t d) {
  core::Vector x(d);
  for (double& v : x) v = rng.uniform(0.0, 1.0);
  return x;
}

/// Vertex of the exact quadratic through (t-s, t, t+s) samples.
double quadratic_vertex(double t, double s, double v_minus, double v_center, double v_plus) {
  const double denom = v_minus - 2.0 * v_center + v_plus;
  if (denom == 0.0) return t;
  return t + 0.5 * s * (v_minus - v_plus) / denom;
}

}  // namespace

double verify_reformulation(const data::Dataset& dataset, const model::ScorerParams& params) {
  const std::size_t n = dataset.size();
  if (n < 2 || n > 64) throw std::invalid_argument("verify_reformulation: dataset size out of range");

  core::Vector scores(n);
  for (std::size_t i = 0; i < n; ++i) scores[i] = model::score(params, dataset.row(i));

  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < n; ++i)
    (dataset.labels[i] == 1 ? pos : neg).push_back(scores[i]);
  if (pos.empty() || neg.empty())
    throw std::invalid_argument("verify_reformulation: both classes required");
  const double p = static_cast<double>(pos.size()) / static_cast<double>(n);
  const double pq = p * (1.0 - p);

  // route 1: the pairwise square loss, by literal double loop
  double loss = 0.0;
  for (double u : pos)
    for (double v : neg) loss += (1.0 - (u - v)) * (1.0 - (u - v));
  loss /= static_cast<double>(pos.size()) * static_cast<double>(neg.size());

  const auto mean_g = [&](double a, double b, double alpha) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      acc += g_local(p, a, b, alpha, scores[i], dataset.labels[i]);
    return acc / static_cast<double>(n);
  };

  // route 2a: closed-form optimizers (unclamped; scores are in (0,1) so the
  // optimum is interior)
  double mean_pos = 0.0, mean_neg = 0.0;
  for (double u : pos) mean_pos += u;
  for (double v : neg) mean_neg += v;
  mean_pos /= static_cast<double>(pos.size());
  mean_neg /= static_cast<double>(neg.size());
  const double minmax_closed = mean_g(mean_pos, mean_neg, mean_neg - mean_pos);

  // route 2b: nested zoom grid, then a sample-based quadratic vertex solve.
  // For fixed (a, b) the alpha problem is a concave 1-D quadratic.
  const auto inner_max = [&](double a, double b) {
    double lo = -1.0, hi = 1.0;
    double best_alpha = 0.0, best = -1e300;
    for (int level = 0; level < 7; ++level) {
      const int pts = 11;
      const double step = (hi - lo) / (pts - 1);
      for (int k = 0; k < pts; ++k) {
        const double alpha = lo + step * k;
        const double v = mean_g(a, b, alpha);
        if (v > best) {
          best = v;
          best_alpha = alpha;
        }
      }
      lo = std::max(-1.0, best_alpha - step);
      hi = std::min(1.0, best_alpha + step);
    }
    return std::pair<double, double>(best, best_alpha);
  };

  double a_lo = 0.0, a_hi = 1.0, b_lo = 0.0, b_hi = 1.0;
  double best_a = 0.5, best_b = 0.5, best_val = 1e300;
  for (int level = 0; level < 7; ++level) {
    const int pts = 9;
    const double a_step = (a_hi - a_lo) / (pts - 1);
    const double b_step = (b_hi - b_lo) / (pts - 1);
    for (int ia = 0; ia < pts; ++ia) {
      for (int ib = 0; ib < pts; ++ib) {
        const double a = a_lo + a_step * ia;
        const double b = b_lo + b_step * ib;
        const double v = inner_max(a, b).first;
        if (v < best_val) {
          best_val = v;
          best_a = a;
          best_b = b;
        }
      }
    }
    a_lo = std::max(0.0, best_a - a_step);
    a_hi = std::min(1.0, best_a + a_step);
    b_lo = std::max(0.0, best_b - b_step);
    b_hi = std::min(1.0, best_b + b_step);
  }
  double best_alpha = inner_max(best_a, best_b).second;

  // vertex solve per coordinate; g has no cross terms between a, b and alpha,
  // so one round lands on the exact stationary point
  const double vs = 0.25;
  const auto polish = [&](double t, double lo, double hi, bool maximize,
                          const std::function<double(double)>& fn) {
    const double v = quadratic_vertex(t, vs, fn(t - vs), fn(t), fn(t + vs));
    if (v < lo || v > hi) return t;  // boundary optimum: keep the grid point
    (void)maximize;
    return v;
  };
  best_a = polish(best_a, 0.0, 1.0, false,
                  [&](double a) { return mean_g(a, best_b, best_alpha); });
  best_b = polish(best_b, 0.0, 1.0, false,
                  [&](double b) { return mean_g(best_a, b, best_alpha); });
  best_alpha = polish(best_alpha, -1.0, 1.0, true,
                      [&](double alpha) { return mean_g(best_a, best_b, alpha); });
  const double minmax_grid = mean_g(best_a, best_b, best_alpha);

  // The raw min-max equals p(1-p)(loss - 1); map back before comparing.
  const double reformulated_closed = 1.0 + minmax_closed / pq;
  const double reformulated_grid = 1.0 + minmax_grid / pq;
  return std::max(std::abs(loss - reformulated_closed), std::abs(loss - reformulated_grid));
}

double fosc_by_corner_enumeration(const core::Vector& x, const core::Vector& x0,
                                  const core::Vector& grad_x, double eps) {
  const std::size_t d = x.size();
  if (d > 12) throw std::invalid_argument("corner enumeration limited to d <= 12");
  double best = -1e300;
  for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
    double val = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double corner = x0[j] + ((mask >> j) & 1 ? eps : -eps);
      val += (corner - x[j]) * grad_x[j];
    }
    best = std::max(best, val);
  }
  return best;
}

StationarityZeros verify_stationarity_zeros(const model::ScorerParams& params, const objective::AuxParams& aux,
                           const objective::ObjectiveContext& ctx, const core::Vector& x0,
                           double eps) {
  StationarityZeros result;
  const std::size_t d = x0.size();

  // condition (a), flat objective: a zero-weight scorer with gamma = 0 has
  // identically zero input gradient
  {
    model::ScorerArch arch{{d, 1}};
    model::ScorerParams zero = model::init(arch, 0);
    zero.set_flat(core::Vector(zero.flat_size(), 0.0));
    const objective::ObjectiveContext flat_ctx{ctx.p, 0.0};
    const objective::FGrad fg = objective::grad_f(flat_ctx, zero, aux, x0, 0);
    result.fosc_zero_grad = attack::fosc(x0, x0, fg.d_x, eps);
  }

  // condition (a), interior stationary point: linear scorer with x* parallel
  // to w and gamma solved so the regularizer cancels the score gradient
  {
    model::ScorerArch arch{{d, 1}};
    model::ScorerParams linear = model::init(arch, 0);
    core::Vector flat(linear.flat_size(), 0.0);
    for (std::size_t j = 0; j < d; ++j)
      flat[j] = 0.2 + 0.6 * static_cast<double>(j + 1) / static_cast<double>(d + 1);
    double w_max = 0.0;
    for (std::size_t j = 0; j < d; ++j) w_max = std::max(w_max, flat[j]);
    const double scale = 0.9 / w_max;
    core::Vector x_star(d);
    for (std::size_t j = 0; j < d; ++j) x_star[j] = scale * flat[j];
    double logit = 0.0;
    for (std::size_t j = 0; j < d; ++j) logit += flat[j] * x_star[j];
    flat[d] = -0.5 * logit;  // bias keeps the logit moderate
    linear.set_flat(flat);

    const objective::AuxParams solved_aux{0.0, 0.0, 0.0};
    const double s = model::score(linear, x_star);
    const double q = 2.0 * ctx.p * s + 2.0 * ctx.p;  // d g / d s for y = 0, b = alpha = 0
    const double sprime = s * (1.0 - s);
    const double gamma = q * sprime / (2.0 * scale);
    const objective::ObjectiveContext solved_ctx{ctx.p, gamma};
    const objective::FGrad fg = objective::grad_f(solved_ctx, linear, solved_aux, x_star, 0);
    result.fosc_solved_interior = attack::fosc(x_star, x_star, fg.d_x, eps);
  }

  // condition (b): iterate x = x0 + eps * sign(grad f(x)) to a fixed point
  {
    core::Vector x = x0;
    result.sign_stable = false;
    for (int iter = 0; iter < 64; ++iter) {
      const objective::FGrad fg = objective::grad_f(ctx, params, aux, x, 1);
      core::Vector next(d);
      for (std::size_t j = 0; j < d; ++j) {
        const double s = fg.d_x[j] > 0.0 ? eps : (fg.d_x[j] < 0.0 ? -eps : 0.0);
        next[j] = x0[j] + s;
      }
      if (next == x) {
        result.sign_stable = true;
        break;
      }
      x = next;
    }
    const objective::FGrad fg = objective::grad_f(ctx, params, aux, x, 1);
    result.fosc_boundary = attack::fosc(x, x0, fg.d_x, eps);
  }

  // generic interior point: strictly positive and equal to the corner max
  {
    core::Vector x = x0;
    for (double& v : x) v += 0.37 * eps;
    const objective::FGrad fg = objective::grad_f(ctx, params, aux, x, 1);
    result.generic_fosc = attack::fosc(x, x0, fg.d_x, eps);
    if (d <= 12) {
      const double corners = fosc_by_corner_enumeration(x, x0, fg.d_x, eps);
      result.corner_gap = std::abs(result.generic_fosc - corners);
    }
  }

  result.pass = result.fosc_zero_grad <= 1e-10 && result.fosc_solved_interior <= 1e-10 &&
                (!result.sign_stable || result.fosc_boundary <= 1e-8) &&
                result.generic_fosc > 0.0 && (d > 12 || result.corner_gap <= 1e-10);
  return result;
}

/// Directional second difference of the unregularized instance objective,
/// divided by h^2; an estimate of the curvature of g(h_theta(.)) along u.
double g_second_difference(const model::ScorerParams& params, double p, double a, double b,
                           double alpha, const core::Vector& x, const core::Vector& u,
                           double h, int y) {
  core::Vector x_plus = x, x_minus = x;
  core::axpy(h, u, x_plus);
  core::axpy(-h, u, x_minus);
  const double v_plus = g_local(p, a, b, alpha, model::score(params, x_plus), y);
  const double v_minus = g_local(p, a, b, alpha, model::score(params, x_minus), y);
  const double v_center = g_local(p, a, b, alpha, model::score(params, x), y);
  return (v_plus + v_minus - 2.0 * v_center) / (h * h);
}

double estimate_gamma_star(const model::ScorerParams& params, const objective::AuxParams& aux,
                           const objective::ObjectiveContext& ctx,
                           const data::Dataset& sample, int probes, std::uint64_t seed) {
  if (probes < 100) throw std::invalid_argument("estimate_gamma_star: need >= 100 probes");
  const std::size_t d = sample.dim();

  // alpha attaining max_alpha of the sample-mean objective (clamped)
  core::Vector scores(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    scores[i] = model::score(params, sample.row(i));
  double mean_pos = 0.0, mean_neg = 0.0;
  std::size_t n_pos = 0, n_neg = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (sample.labels[i] == 1) {
      mean_pos += scores[i];
      ++n_pos;
    } else {
      mean_neg += scores[i];
      ++n_neg;
    }
  }
  double alpha_star = 0.0;
  if (n_pos > 0 && n_neg > 0)
    alpha_star = core::clamp_scalar(mean_neg / static_cast<double>(n_neg) -
                                        mean_pos / static_cast<double>(n_pos),
                                    -1.0, 1.0);

  core::Prng rng(seed);
  const double h = 1e-3;
  double gamma_hat = 0.0;
  for (int probe = 0; probe < probes; ++probe) {
    const core::Vector x = random_box_point(rng, d);
    const core::Vector u = random_unit(rng, d);
    const int y = probe % 2;
    // curvature is affine in alpha, so its sup over [-1,1] sits at an endpoint
    for (double alpha : {-1.0, alpha_star, 1.0}) {
      const double curvature =
          g_second_difference(params, ctx.p, aux.a, aux.b, alpha, x, u, h, y);
      gamma_hat = std::max(gamma_hat, curvature);
    }
  }
  return std::max(0.0, gamma_hat);
}

ConcavityResult verify_strong_concavity(const model::ScorerParams& params,
                                        const objective::AuxParams& aux, double p,
                                        double gamma, double margin, int probes,
                                        std::uint64_t seed) {
  const std::size_t d = params.input_dim();
  core::Prng rng(seed);
  ConcavityResult result;
  result.worst_excess = -1e300;
  for (int probe = 0; probe < probes; ++probe) {
    const core::Vector x = random_box_point(rng, d);
    const core::Vector u = random_unit(rng, d);
    const double h = rng.uniform(1e-3, 1e-2);
    const int y = probe % 2;

    core::Vector x_plus = x, x_minus = x;
    core::axpy(h, u, x_plus);
    core::axpy(-h, u, x_minus);
    const auto f_at = [&](const core::Vector& pt) {
      return g_local(p, aux.a, aux.b, aux.alpha, model::score(params, pt), y) -
             gamma * core::l2_norm_sq(pt);
    };
    const double second_diff = f_at(x_plus) + f_at(x_minus) - 2.0 * f_at(x);
    const double bound = -2.0 * margin * h * h * (1.0 - 1e-3);
    const double excess = second_diff - bound;
    result.worst_excess = std::max(result.worst_excess, excess);
    if (second_diff > bound) ++result.violations;
  }
  result.pass = result.violations == 0;
  return result;
}

bool verify_alpha_concavity(const objective::ObjectiveContext& ctx, int probes,
                            std::uint64_t seed, double* worst_gap) {
  core::Prng rng(seed);
  double worst = 0.0;
  for (int probe = 0; probe < probes; ++probe) {
    objective::AuxParams aux;
    aux.a = rng.uniform(0.0, 1.0);
    aux.b = rng.uniform(0.0, 1.0);
    aux.alpha = rng.uniform(-0.5, 0.5);
    const double s = rng.uniform(0.0, 1.0);
    const int y = probe % 2;
    const double h = rng.uniform(0.0, 0.5);

    objective::AuxParams plus = aux, minus = aux;
    plus.alpha = aux.alpha + h;
    minus.alpha = aux.alpha - h;
    const double second_diff = objective::g_instance(ctx, plus, s, y) +
                               objective::g_instance(ctx, minus, s, y) -
                               2.0 * objective::g_instance(ctx, aux, s, y);
    const double expected = -2.0 * ctx.p * (1.0 - ctx.p) * h * h;
    worst = std::max(worst, std::abs(second_diff - expected));
  }
  if (worst_gap != nullptr) *worst_gap = worst;
  return worst <= 1e-12;
}

double fd_check_grad_f(const objective::ObjectiveContext& ctx,
                       const model::ScorerParams& params, const objective::AuxParams& aux,
                       const core::Vector& x, int y, double step) {
  const objective::FGrad analytic = objective::grad_f(ctx, params, aux, x, y);
  double worst = 0.0;
  const auto update = [&](double a, double fd) {
    const double denom = std::max({1.0, std::abs(a), std::abs(fd)});
    worst = std::max(worst, std::abs(a - fd) / denom);
  };
  const auto value = [&](const model::ScorerParams& pr, const objective::AuxParams& ax,
                         const core::Vector& pt) {
    return objective::f_instance(ctx, pr, ax, pt, y);
  };

  model::ScorerParams mutable_params = params;
  for (std::size_t i = 0; i < mutable_params.flat_size(); ++i) {
    mutable_params.add_flat(i, step);
    const double plus = value(mutable_params, aux, x);
    mutable_params.add_flat(i, -2.0 * step);
    const double minus = value(mutable_params, aux, x);
    mutable_params.add_flat(i, step);
    update(analytic.d_theta[i], (plus - minus) / (2.0 * step));
  }
  {
    objective::AuxParams shifted = aux;
    shifted.a = aux.a + step;
    const double plus = value(params, shifted, x);
    shifted.a = aux.a - step;
    const double minus = value(params, shifted, x);
    update(analytic.d_a, (plus - minus) / (2.0 * step));
  }
  {
    objective::AuxParams shifted = aux;
    shifted.b = aux.b + step;
    const double plus = value(params, shifted, x);
    shifted.b = aux.b - step;
    const double minus = value(params, shifted, x);
    update(analytic.d_b, (plus - minus) / (2.0 * step));
  }
  {
    objective::AuxParams shifted = aux;
    shifted.alpha = aux.alpha + step;
    const double plus = value(params, shifted, x);
    shifted.alpha = aux.alpha - step;
    const double minus = value(params, shifted, x);
    update(analytic.d_alpha, (plus - minus) / (2.0 * step));
  }
  core::Vector mutable_x = x;
  for (std::size_t j = 0; j < mutable_x.size(); ++j) {
    const double saved = mutable_x[j];
    mutable_x[j] = saved + step;
    const double plus = value(params, aux, mutable_x);
    mutable_x[j] = saved - step;
    const double minus = value(params, aux, mutable_x);
    mutable_x[j] = saved;
    update(analytic.d_x[j], (plus - minus) / (2.0 * step));
  }
  return worst;
}

namespace {

data::Dataset tiny_random_dataset(core::Prng& rng, std::size_t n, std::size_t d) {
  data::Dataset ds;
  ds.name = "oracle-tiny";
  ds.features = core::Matrix(n, d);
  for (double& v : ds.features.data) v = rng.uniform(0.0, 1.0);
  ds.labels.assign(n, 0);
  for (auto& y : ds.labels) y = rng.uniform(0.0, 1.0) < 0.5 ? 1 : 0;
  ds.labels[0] = 1;
  ds.labels[1] = 0;
  data::validate(ds);
  return ds;
}

objective::AuxParams random_aux(core::Prng& rng) {
  objective::AuxParams aux;
  aux.a = rng.uniform(0.0, 1.0);
  aux.b = rng.uniform(0.0, 1.0);
  aux.alpha = rng.uniform(-1.0, 1.0);
  return aux;
}

}  // namespace

std::vector<SuiteRow> run_suite(const std::string& which, std::uint64_t seed) {
  std::vector<SuiteRow> rows;
  const bool all = which == "all";

  if (all || which == "prop1") {
    core::Prng rng(seed);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + rng.below(19);  // 2..20
      const std::size_t d = 2 + rng.below(4);
      const data::Dataset ds = tiny_random_dataset(rng, n, d);
      const model::ScorerArch arch =
          trial % 2 == 0 ? model::ScorerArch{{d, 1}} : model::ScorerArch{{d, 5, 1}};
      const model::ScorerParams params = model::init(arch, rng.next_u64());
      worst = std::max(worst, verify_reformulation(ds, params));
    }
    rows.push_back({"prop1", "reformulation gap over 100 datasets", worst <= 1e-8, worst});
  }

  if (all || which == "lemma1") {
    core::Prng rng(seed + 1);
    const std::size_t d = 8;
    const double eps = 8.0 / 255.0;
    bool pass = true;
    double worst_corner = 0.0, worst_zero = 0.0, worst_boundary = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const model::ScorerParams params = model::init(model::ScorerArch{{d, 6, 1}}, rng.next_u64());
      const objective::ObjectiveContext ctx{0.3, 0.0};
      const objective::AuxParams aux = random_aux(rng);
      core::Vector x0(d);
      for (double& v : x0) v = rng.uniform(2.0 * eps, 1.0 - 2.0 * eps);
      const StationarityZeros res = verify_stationarity_zeros(params, aux, ctx, x0, eps);
      pass = pass && res.pass;
      worst_corner = std::max(worst_corner, res.corner_gap);
      worst_zero = std::max(worst_zero,
                            std::max(res.fosc_zero_grad, res.fosc_solved_interior));
      if (res.sign_stable) worst_boundary = std::max(worst_boundary, res.fosc_boundary);
    }
    rows.push_back({"lemma1", "stationary-point value", worst_zero <= 1e-10, worst_zero});
    rows.push_back({"lemma1", "boundary fixed-point value", worst_boundary <= 1e-8,
                    worst_boundary});
    rows.push_back({"lemma1", "corner enumeration gap", worst_corner <= 1e-10, worst_corner});
    rows.push_back({"lemma1", "all constructions", pass, pass ? 0.0 : 1.0});
  }

  if (all || which == "concavity") {
    core::Prng rng(seed + 2);
    const std::size_t d = 6;
    const data::Dataset sample = tiny_random_dataset(rng, 24, d);
    const model::ScorerParams params = model::init(model::ScorerArch{{d, 8, 1}}, 11);
    const objective::ObjectiveContext ctx{0.3, 0.0};
    const objective::AuxParams aux{0.6, 0.4, 0.2};

    const double gamma_hat = estimate_gamma_star(params, aux, ctx, sample, 1000, seed + 3);
    const ConcavityResult pos =
        verify_strong_concavity(params, aux, ctx.p, gamma_hat + 1.0, 1.0, 1000, seed + 4);
    rows.push_back({"concavity", "gamma_hat + 1 makes f strongly concave", pos.pass,
                    pos.worst_excess});

    // negative control: gamma = 0 on a scorer with visible curvature
    model::ScorerParams curvy = model::init(model::ScorerArch{{d, 8, 1}}, 12);
    {
      core::Vector flat = curvy.flat();
      for (double& v : flat) v *= 3.0;
      curvy.set_flat(flat);
    }
    const ConcavityResult neg =
        verify_strong_concavity(curvy, aux, ctx.p, 0.0, 1.0, 1000, seed + 5);
    rows.push_back({"concavity", "gamma = 0 violates somewhere (negative control)",
                    neg.violations > 0, static_cast<double>(neg.violations)});

    double worst_alpha = 0.0;
    bool alpha_pass = true;
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
      double gap = 0.0;
      alpha_pass =
          verify_alpha_concavity(objective::ObjectiveContext{p, 0.0}, 250, seed + 6, &gap) &&
          alpha_pass;
      worst_alpha = std::max(worst_alpha, gap);
    }
    rows.push_back({"concavity", "alpha second difference exact", alpha_pass, worst_alpha});
  }

  if (all || which == "gradcheck") {
    core::Prng rng(seed + 7);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t d = 2 + rng.below(6);
      const model::ScorerArch arch =
          trial % 2 == 0 ? model::ScorerArch{{d, 1}} : model::ScorerArch{{d, 6, 1}};
      const model::ScorerParams params = model::init(arch, rng.next_u64());
      const objective::ObjectiveContext ctx{rng.uniform(0.1, 0.9),
                                            trial % 3 == 0 ? 0.0 : rng.uniform(0.0, 2.0)};
      const objective::AuxParams aux = random_aux(rng);
      const core::Vector x = random_box_point(rng, d);
      const int y = trial % 2;
      worst = std::max(worst, fd_check_grad_f(ctx, params, aux, x, y));
    }
    rows.push_back({"gradcheck", "grad_f vs central differences (100 states)", worst <= 1e-6,
                    worst});
  }

  if (rows.empty())
    throw std::invalid_argument("unknown verify suite '" + which +
                                "' (want prop1|lemma1|concavity|gradcheck|all)");
  return rows;
}

}  // namespace adauc::oracle
