#ifndef ADAUC_ORACLE_HPP
#define ADAUC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adauc/data.hpp"
#include "adauc/model.hpp"
#include "adauc/objective.hpp"

namespace adauc::oracle {

// Brute-force verifiers for the analytic claims behind the objective and the
// attack. Each keeps its own reference computations (double loops, grid
// search, corner enumeration, second differences) so it shares nothing with
// the code it checks beyond the numeric core.

/// Saddle-point reformulation check on a small dataset. Computes the pairwise
/// square loss by literal double loop, and the min-max of the mean instance
/// objective twice: from the closed-form optimizers and by zoomed grid search
/// with an exact quadratic polish. The raw min-max equals p(1-p)*(loss - 1)
/// identically; the reformulated value is mapped back through that affine
/// correspondence before comparison. Returns the largest absolute gap.
double verify_reformulation(const data::Dataset& dataset, const model::ScorerParams& params);

struct StationarityZeros {
  bool pass = false;
  double fosc_zero_grad = 0.0;      // condition (a), flat objective
  double fosc_solved_interior = 0.0;  // condition (a), gamma-tuned stationary point
  double fosc_boundary = 0.0;       // condition (b), sign fixed point
  bool sign_stable = false;         // fixed-point iteration converged
  double generic_fosc = 0.0;        // strictly positive at a generic point
  double corner_gap = 0.0;          // closed form vs corner enumeration (d <= 12)
};

/// Checks both zero conditions of the stationarity value and cross-checks the
/// closed form against explicit corner enumeration.
StationarityZeros verify_stationarity_zeros(const model::ScorerParams& params, const objective::AuxParams& aux,
                           const objective::ObjectiveContext& ctx, const core::Vector& x0,
                           double eps);

/// Directional second difference of the unregularized instance objective at
/// (x, y), divided by h^2: the curvature estimate one probe contributes.
double g_second_difference(const model::ScorerParams& params, double p, double a, double b,
                           double alpha, const core::Vector& x, const core::Vector& u,
                           double h, int y);

/// Largest positive directional curvature of the unregularized instance
/// objective seen over random probes (points in the box, unit directions,
/// and alpha swept over its extremes plus the sample-level maximizer).
/// A lower estimate of the weak-concavity constant; never negative.
double estimate_gamma_star(const model::ScorerParams& params, const objective::AuxParams& aux,
                           const objective::ObjectiveContext& ctx,
                           const data::Dataset& sample, int probes, std::uint64_t seed);

struct ConcavityResult {
  bool pass = false;
  int violations = 0;
  double worst_excess = 0.0;  // most positive (second_diff + 2*margin*h^2*(1-1e-3))
};

/// Requires f(x+hu) + f(x-hu) - 2 f(x) <= -2*margin*h^2*(1 - 1e-3) on every
/// probe; call with gamma >= estimate_gamma_star(...) + margin.
ConcavityResult verify_strong_concavity(const model::ScorerParams& params,
                                        const objective::AuxParams& aux, double p,
                                        double gamma, double margin, int probes,
                                        std::uint64_t seed);

/// The alpha second difference of g equals -2 p (1-p) h^2 exactly; checked
/// over random states and nuisance parameters.
bool verify_alpha_concavity(const objective::ObjectiveContext& ctx, int probes,
                            std::uint64_t seed, double* worst_gap = nullptr);

/// Per-instance FOSC reference: maximizes <x' - x, grad> over the 2^d
/// corners of the eps-box around x0. Only valid for d <= 12 (cost 2^d).
double fosc_by_corner_enumeration(const core::Vector& x, const core::Vector& x0,
                                  const core::Vector& grad_x, double eps);

/// Gradient cross-check of the saddle objective: central finite differences
/// over theta, a, b, alpha, and x. Returns the worst
/// |analytic - fd| / max(1, |analytic|, |fd|).
double fd_check_grad_f(const objective::ObjectiveContext& ctx,
                       const model::ScorerParams& params, const objective::AuxParams& aux,
                       const core::Vector& x, int y, double step = 1e-5);

struct SuiteRow {
  std::string suite;
  std::string check;
  bool pass = false;
  double value = 0.0;
};

/// Runs one named suite (prop1 | lemma1 | concavity | gradcheck | all).
std::vector<SuiteRow> run_suite(const std::string& which, std::uint64_t seed);

}  // namespace adauc::oracle

#endif
