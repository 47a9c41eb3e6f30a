#ifndef ADAUC_ATTACK_HPP
#define ADAUC_ATTACK_HPP

#include <string>
#include <vector>

#include "adauc/core.hpp"
#include "adauc/data.hpp"
#include "adauc/model.hpp"
#include "adauc/objective.hpp"

namespace adauc::attack {

struct AttackConfig {
  double eps = 8.0 / 255.0;   // l-inf radius, feature units
  double beta = 2.0 / 255.0;  // PGD step size
  int k_steps = 10;
  double c_max = 0.0;   // FOSC ceiling for the schedule
  bool c_max_auto = true;  // derive c_max from the first training batch
  int t_prime = 1;      // control epoch for the schedule
  bool random_start = false;  // uniform start in the eps-ball (evaluation only)

  void check() const;
};

/// Adversarial batch with per-instance diagnostics. Every x_adv satisfies
/// ||x_adv - x0||_inf <= eps (+fp slack) and lies in [0,1]^d.
struct AdvBatch {
  std::vector<core::Vector> x0;
  std::vector<core::Vector> x_adv;
  core::Vector fosc;
  std::vector<int> steps_used;
};

/// First-order stationarity value of the inner maximization:
///   eps * ||grad_x||_1 - <x - x0, grad_x>,
/// the closed form of max_{x' in ball} <x' - x, grad_x>. Displacements are
/// clamped to [-eps, eps] before the inner product so the result is
/// non-negative despite fp rounding. Throws if x is outside the ball.
double fosc(const core::Vector& x, const core::Vector& x0, const core::Vector& grad_x,
            double eps);

/// Entrywise clamp to [x0 - eps, x0 + eps], then to [0, 1].
core::Vector project_ball(const core::Vector& x, const core::Vector& x0, double eps);

/// Single ascent step along sign(grad_x f), then box clamp.
core::Vector fgsm(const objective::ObjectiveContext& ctx, const model::ScorerParams& params,
                  const objective::AuxParams& aux, const core::Vector& x0, int y, double eps);

/// The masked inner loop: up to k_steps projected sign-gradient ascent steps
/// on f per instance; after each step the instance's FOSC is recomputed and
/// instances with FOSC <= c_t retire (when use_fosc_mask is set). Every
/// returned instance has fosc <= c_t or steps_used == k_steps.
AdvBatch pgd_fosc_batch(const objective::ObjectiveContext& ctx,
                        const model::ScorerParams& params, const objective::AuxParams& aux,
                        const std::vector<core::Vector>& xs, const std::vector<int>& ys,
                        const AttackConfig& cfg, double c_t, bool use_fosc_mask = true,
                        int threads = 1, core::Prng* start_rng = nullptr);

/// Evaluation attack spec: "clean", "fgsm", or "pgd-K".
struct AttackSpec {
  enum class Kind { kClean, kFgsm, kPgd };
  Kind kind = Kind::kClean;
  int k = 0;
  std::string name;

  static AttackSpec parse(const std::string& token);
};

/// Runs each spec at full strength (c_t = 0, K cap only) against the dataset.
/// Returns perturbed datasets in spec order.
std::vector<std::pair<std::string, data::Dataset>> attack_suite(
    const objective::ObjectiveContext& ctx, const model::ScorerParams& params,
    const objective::AuxParams& aux, const data::Dataset& dataset,
    const std::vector<std::string>& specs, const AttackConfig& cfg, int threads = 1,
    std::uint64_t seed = 0);

}  // namespace adauc::attack

#endif
