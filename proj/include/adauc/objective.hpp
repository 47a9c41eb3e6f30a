#ifndef ADAUC_OBJECTIVE_HPP
#define ADAUC_OBJECTIVE_HPP

#include <vector>

#include "adauc/core.hpp"
#include "adauc/model.hpp"

namespace adauc::objective {

/// The reformulation scalars. a and b live in [0,1], alpha in [-1,1]; a and
/// b belong to the descent block w = (theta, a, b), alpha to the ascent block.
struct AuxParams {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
};

/// Throws if any field is outside its domain (beyond fp slack).
void check_domains(const AuxParams& aux);

/// p is the empirical positive fraction of the training split; gamma weights
/// the concavity regularizer -gamma * ||x||_2^2.
struct ObjectiveContext {
  double p = 0.5;
  double gamma = 0.0;
};

void check_context(const ObjectiveContext& ctx);

/// Exact AUC (Mann-Whitney), ties between a positive and a negative score
/// credited 0.5. Requires both classes present.
double auc_exact(const core::Vector& scores, const std::vector<int>& labels);

/// (1/(n+ n-)) sum_{i in P} sum_{j in N} (1 - (s_i - s_j))^2, computed via the
/// O(n) moment expansion.
double pairwise_sq_loss(const core::Vector& scores, const std::vector<int>& labels);

/// The instance-wise saddle objective:
///   (1-p)(s-a)^2 [y=1] + p(s-b)^2 [y=0]
///   + 2(1+alpha)(p s [y=0] - (1-p) s [y=1]) - p(1-p) alpha^2.
double g_instance(const ObjectiveContext& ctx, const AuxParams& aux, double s, int y);

/// a = mean positive score, b = mean negative score, alpha = b - a, each
/// clamped to its domain.
AuxParams closed_form_aux(const core::Vector& scores, const std::vector<int>& labels);

/// g minus gamma * ||x||_2^2 at the scored point.
double f_instance(const ObjectiveContext& ctx, const model::ScorerParams& params,
                  const AuxParams& aux, const core::Vector& x, int y);

/// Analytic gradients of f_instance for all blocks, plus the value and score.
struct FGrad {
  double value = 0.0;
  double score = 0.0;
  core::Vector d_theta;
  double d_a = 0.0;
  double d_b = 0.0;
  double d_alpha = 0.0;
  core::Vector d_x;
};

FGrad grad_f(const ObjectiveContext& ctx, const model::ScorerParams& params,
             const AuxParams& aux, const core::Vector& x, int y);

/// Batch mean of f_instance and of its (theta, a, b, alpha) gradients,
/// reduced in index order regardless of thread count.
struct BatchGrad {
  double value = 0.0;
  core::Vector d_theta;
  double d_a = 0.0;
  double d_b = 0.0;
  double d_alpha = 0.0;

  /// ||g(w)||_2 over the concatenated (theta, a, b) block.
  double w_grad_norm() const;
};

BatchGrad batch_objective(const ObjectiveContext& ctx, const model::ScorerParams& params,
                          const AuxParams& aux, const std::vector<core::Vector>& xs,
                          const std::vector<int>& ys, int threads = 1);

}  // namespace adauc::objective

#endif
