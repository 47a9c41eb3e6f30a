#include "adauc/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adauc::objective {

namespace {

constexpr double kDomainSlack = 1e-9;

struct ClassSplit {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
};

ClassSplit split_counts(const core::Vector& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("scores/labels length mismatch");
  ClassSplit split;
  for (int y : labels) {
    if (y != 0 && y != 1) throw std::invalid_argument("labels must be 0 or 1");
    if (y == 1)
      ++split.n_pos;
    else
      ++split.n_neg;
  }
  if (split.n_pos == 0 || split.n_neg == 0)
    throw std::invalid_argument("both classes must be present");
  return split;
}

}  // namespace

void check_domains(const AuxParams& aux) {
  if (aux.a < -kDomainSlack || aux.a > 1.0 + kDomainSlack ||
      aux.b < -kDomainSlack || aux.b > 1.0 + kDomainSlack)
    throw std::invalid_argument("aux a/b outside [0,1]");
  if (std::abs(aux.alpha) > 1.0 + kDomainSlack)
    throw std::invalid_argument("aux alpha outside [-1,1]");
}

void check_context(const ObjectiveContext& ctx) {
  if (!(ctx.p > 0.0 && ctx.p < 1.0))
    throw std::invalid_argument("context: p must be in (0,1)");
  if (!(ctx.gamma >= 0.0)) throw std::invalid_argument("context: gamma must be >= 0");
}

double auc_exact(const core::Vector& scores, const std::vector<int>& labels) {
  const ClassSplit split = split_counts(scores, labels);
  // average ranks over tie groups; index tiebreak keeps the sort total
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return a < b;
  });
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    // 1-based ranks i+1 .. j+1 share the average
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j + 1);
    for (std::size_t k = i; k <= j; ++k)
      if (labels[order[k]] == 1) rank_sum_pos += avg_rank;
    i = j + 1;
  }
  const double n_pos = static_cast<double>(split.n_pos);
  const double n_neg = static_cast<double>(split.n_neg);
  const double u_stat = rank_sum_pos - n_pos * (n_pos + 1.0) / 2.0;
  return u_stat / (n_pos * n_neg);
}

double pairwise_sq_loss(const core::Vector& scores, const std::vector<int>& labels) {
  const ClassSplit split = split_counts(scores, labels);
  // mean over pairs of (1 - s_i + s_j)^2
  //   = 1 + 2(mean_neg - mean_pos) + mean_pos(s^2) + mean_neg(s^2)
  //     - 2 mean_pos(s) mean_neg(s)
  double sum_pos = 0.0, sum_neg = 0.0, sq_pos = 0.0, sq_neg = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double s = scores[i];
    if (labels[i] == 1) {
      sum_pos += s;
      sq_pos += s * s;
    } else {
      sum_neg += s;
      sq_neg += s * s;
    }
  }
  const double n_pos = static_cast<double>(split.n_pos);
  const double n_neg = static_cast<double>(split.n_neg);
  const double mean_pos = sum_pos / n_pos;
  const double mean_neg = sum_neg / n_neg;
  return 1.0 + 2.0 * (mean_neg - mean_pos) + sq_pos / n_pos + sq_neg / n_neg -
         2.0 * mean_pos * mean_neg;
}

double g_instance(const ObjectiveContext& ctx, const AuxParams& aux, double s, int y) {
  if (y != 0 && y != 1) throw std::invalid_argument("g_instance: label must be 0 or 1");
  const double p = ctx.p;
  const double curvature = p * (1.0 - p) * aux.alpha * aux.alpha;
  if (y == 1)
    return (1.0 - p) * (s - aux.a) * (s - aux.a) -
           2.0 * (1.0 + aux.alpha) * (1.0 - p) * s - curvature;
  return p * (s - aux.b) * (s - aux.b) + 2.0 * (1.0 + aux.alpha) * p * s - curvature;
}

AuxParams closed_form_aux(const core::Vector& scores, const std::vector<int>& labels) {
  const ClassSplit split = split_counts(scores, labels);
  double sum_pos = 0.0, sum_neg = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == 1)
      sum_pos += scores[i];
    else
      sum_neg += scores[i];
  }
  const double mean_pos = sum_pos / static_cast<double>(split.n_pos);
  const double mean_neg = sum_neg / static_cast<double>(split.n_neg);
  AuxParams aux;
  aux.a = core::clamp_scalar(mean_pos, 0.0, 1.0);
  aux.b = core::clamp_scalar(mean_neg, 0.0, 1.0);
  aux.alpha = core::clamp_scalar(mean_neg - mean_pos, -1.0, 1.0);
  return aux;
}

double f_instance(const ObjectiveContext& ctx, const model::ScorerParams& params,
                  const AuxParams& aux, const core::Vector& x, int y) {
  const double s = model::score(params, x);
  return g_instance(ctx, aux, s, y) - ctx.gamma * core::l2_norm_sq(x);
}

FGrad grad_f(const ObjectiveContext& ctx, const model::ScorerParams& params,
             const AuxParams& aux, const core::Vector& x, int y) {
  if (y != 0 && y != 1) throw std::invalid_argument("grad_f: label must be 0 or 1");
  const model::ScoreGrad sg = model::score_with_grad(params, x);
  const double s = sg.score;
  const double p = ctx.p;

  FGrad out;
  out.score = s;
  out.value = g_instance(ctx, aux, s, y) - ctx.gamma * core::l2_norm_sq(x);

  double d_s;
  if (y == 1) {
    d_s = 2.0 * (1.0 - p) * (s - aux.a) - 2.0 * (1.0 + aux.alpha) * (1.0 - p);
    out.d_a = -2.0 * (1.0 - p) * (s - aux.a);
    out.d_b = 0.0;
    out.d_alpha = -2.0 * (1.0 - p) * s - 2.0 * p * (1.0 - p) * aux.alpha;
  } else {
    d_s = 2.0 * p * (s - aux.b) + 2.0 * (1.0 + aux.alpha) * p;
    out.d_a = 0.0;
    out.d_b = -2.0 * p * (s - aux.b);
    out.d_alpha = 2.0 * p * s - 2.0 * p * (1.0 - p) * aux.alpha;
  }

  out.d_theta = sg.grad.d_params;
  for (double& v : out.d_theta) v *= d_s;
  out.d_x = sg.grad.d_input;
  for (std::size_t j = 0; j < out.d_x.size(); ++j)
    out.d_x[j] = d_s * out.d_x[j] - 2.0 * ctx.gamma * x[j];
  return out;
}

double BatchGrad::w_grad_norm() const {
  double acc = 0.0;
  for (double v : d_theta) acc += v * v;
  acc += d_a * d_a + d_b * d_b;
  return std::sqrt(acc);
}

BatchGrad batch_objective(const ObjectiveContext& ctx, const model::ScorerParams& params,
                          const AuxParams& aux, const std::vector<core::Vector>& xs,
                          const std::vector<int>& ys, int threads) {
  if (xs.empty()) throw std::invalid_argument("batch_objective: empty batch");
  if (xs.size() != ys.size())
    throw std::invalid_argument("batch_objective: feature/label count mismatch");

  std::vector<FGrad> per_instance(xs.size());
  core::parallel_for(xs.size(), threads,
                     [&](std::size_t i) { per_instance[i] = grad_f(ctx, params, aux, xs[i], ys[i]); });

  BatchGrad out;
  out.d_theta.assign(params.flat_size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  for (const FGrad& fg : per_instance) {
    out.value += fg.value;
    core::axpy(1.0, fg.d_theta, out.d_theta);
    out.d_a += fg.d_a;
    out.d_b += fg.d_b;
    out.d_alpha += fg.d_alpha;
  }
  out.value *= inv_n;
  for (double& v : out.d_theta) v *= inv_n;
  out.d_a *= inv_n;
  out.d_b *= inv_n;
  out.d_alpha *= inv_n;
  return out;
}

}  // namespace adauc::objective
