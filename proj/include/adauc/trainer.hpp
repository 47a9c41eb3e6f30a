#ifndef ADAUC_TRAINER_HPP
#define ADAUC_TRAINER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adauc/attack.hpp"
#include "adauc/data.hpp"
#include "adauc/model.hpp"
#include "adauc/objective.hpp"

namespace adauc::trainer {

enum class TrainMode { kNatural, kAtPlain, kAtFosc };

TrainMode parse_mode(const std::string& token);  // nt | at1 | at2
std::string mode_name(TrainMode mode);

struct TrainConfig {
  double eta_w = 0.01;
  double eta_alpha = 0.1;
  int batch_size = 128;
  int epochs = 0;
  int t_prime = -1;  // -1: defaults to max(1, epochs/2)
  double lr_decay_factor = 0.1;
  int lr_decay_every = 30;
  double lr_floor = 0.0;  // alternative step-decay reading: never decay below this
  double weight_decay = 5e-4;
  double momentum = 0.0;  // plain SGDA by default
  double gamma = 0.0;     // concavity regularizer weight
  std::uint64_t seed = 0;
  TrainMode mode = TrainMode::kNatural;
  std::string eval_attack;  // per-epoch attacked-AUC column when non-empty
  int threads = 1;

  void check() const;
};

struct EpochRecord {
  int epoch = 0;
  double objective = 0.0;
  double auc_clean = 0.0;
  double auc_attacked = -1.0;  // -1 when not evaluated
  double grad_norm_w = 0.0;
  double mean_fosc = 0.0;
  double c_t = 0.0;
};

struct TrainHistory {
  std::vector<EpochRecord> records;
};

/// c_t = max(0, c_max - t * c_max / t_prime); exactly 0 for all t >= t_prime.
double ct_schedule(int t, double c_max, int t_prime);

/// Momentum buffers for the optional heavy-ball variant; zero-initialized.
struct SgdaState {
  core::Vector v_theta;
  double v_a = 0.0;
  double v_b = 0.0;
  double v_alpha = 0.0;
};

/// Descent on (theta, a, b), ascent on alpha, then projection of a, b onto
/// [0,1] and alpha onto [-1,1]. Weight decay applies to theta only.
void sgda_step(model::ScorerParams& params, objective::AuxParams& aux,
               const objective::BatchGrad& grads, double eta_w, double eta_alpha,
               double weight_decay = 0.0, double momentum = 0.0, SgdaState* state = nullptr);

struct TrainResult {
  model::ScorerParams params;
  objective::AuxParams aux;
  TrainHistory history;
  objective::ObjectiveContext ctx;
  attack::AttackConfig attack_cfg;  // with any auto-derived c_max resolved
};

/// One full run: per epoch compute c_t, shuffle, per batch generate
/// adversarial examples per mode, take one SGDA step on the batch gradients,
/// then apply the step-decay schedule. Deterministic per seed.
TrainResult train(const data::Dataset& train_set, const data::Dataset* eval_set,
                  const model::ScorerArch& arch, attack::AttackConfig attack_cfg,
                  const TrainConfig& cfg);

/// Mean ||g(w)||_2 over the first and last 10% of epochs.
std::pair<double, double> stationarity_probe(const TrainHistory& history);

}  // namespace adauc::trainer

#endif
