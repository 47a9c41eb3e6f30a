#include "adauc/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adauc::trainer {

TrainMode parse_mode(const std::string& token) {
  if (token == "nt") return TrainMode::kNatural;
  if (token == "at1") return TrainMode::kAtPlain;
  if (token == "at2") return TrainMode::kAtFosc;
  throw std::invalid_argument("unknown training mode '" + token + "' (want nt|at1|at2)");
}

std::string mode_name(TrainMode mode) {
  switch (mode) {
    case TrainMode::kNatural: return "nt";
    case TrainMode::kAtPlain: return "at1";
    case TrainMode::kAtFosc: return "at2";
  }
  return "?";
}

void TrainConfig::check() const {
  if (!(eta_w > 0.0) || !(eta_alpha > 0.0))
    throw std::invalid_argument("train: learning rates must be positive");
  if (batch_size < 1) throw std::invalid_argument("train: batch_size must be >= 1");
  if (epochs < 0) throw std::invalid_argument("train: epochs must be >= 0");
  if (t_prime == 0 || t_prime < -1) throw std::invalid_argument("train: t_prime must be >= 1");
  if (!(lr_decay_factor > 0.0)) throw std::invalid_argument("train: decay factor must be > 0");
  if (lr_decay_every < 1) throw std::invalid_argument("train: lr_decay_every must be >= 1");
  if (lr_floor < 0.0) throw std::invalid_argument("train: lr_floor must be >= 0");
  if (weight_decay < 0.0) throw std::invalid_argument("train: weight_decay must be >= 0");
  if (momentum < 0.0 || momentum >= 1.0)
    throw std::invalid_argument("train: momentum must be in [0,1)");
  if (gamma < 0.0) throw std::invalid_argument("train: gamma must be >= 0");
  if (threads < 1) throw std::invalid_argument("train: threads must be >= 1");
}

double ct_schedule(int t, double c_max, int t_prime) {
  if (t < 0) throw std::invalid_argument("ct_schedule: t must be >= 0");
  if (t_prime < 1) throw std::invalid_argument("ct_schedule: t_prime must be >= 1");
  if (t >= t_prime) return 0.0;
  return std::max(0.0, c_max - static_cast<double>(t) * c_max / static_cast<double>(t_prime));
}

void sgda_step(model::ScorerParams& params, objective::AuxParams& aux,
               const objective::BatchGrad& grads, double eta_w, double eta_alpha,
               double weight_decay, double momentum, SgdaState* state) {
  core::Vector flat = params.flat();
  if (flat.size() != grads.d_theta.size())
    throw std::invalid_argument("sgda_step: gradient shape mismatch");

  if (momentum > 0.0) {
    if (state == nullptr) throw std::invalid_argument("sgda_step: momentum needs state");
    if (state->v_theta.empty()) state->v_theta.assign(flat.size(), 0.0);
    if (state->v_theta.size() != flat.size())
      throw std::invalid_argument("sgda_step: momentum state shape mismatch");
    for (std::size_t i = 0; i < flat.size(); ++i) {
      state->v_theta[i] = momentum * state->v_theta[i] +
                          (grads.d_theta[i] + weight_decay * flat[i]);
      flat[i] -= eta_w * state->v_theta[i];
    }
    state->v_a = momentum * state->v_a + grads.d_a;
    state->v_b = momentum * state->v_b + grads.d_b;
    state->v_alpha = momentum * state->v_alpha + grads.d_alpha;
    aux.a = core::clamp_scalar(aux.a - eta_w * state->v_a, 0.0, 1.0);
    aux.b = core::clamp_scalar(aux.b - eta_w * state->v_b, 0.0, 1.0);
    aux.alpha = core::clamp_scalar(aux.alpha + eta_alpha * state->v_alpha, -1.0, 1.0);
  } else {
    for (std::size_t i = 0; i < flat.size(); ++i)
      flat[i] -= eta_w * (grads.d_theta[i] + weight_decay * flat[i]);
    aux.a = core::clamp_scalar(aux.a - eta_w * grads.d_a, 0.0, 1.0);
    aux.b = core::clamp_scalar(aux.b - eta_w * grads.d_b, 0.0, 1.0);
    aux.alpha = core::clamp_scalar(aux.alpha + eta_alpha * grads.d_alpha, -1.0, 1.0);
  }
  params.set_flat(flat);
}

namespace {

double median_of(core::Vector values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double clean_auc(const model::ScorerParams& params, const data::Dataset& ds, int threads) {
  core::Vector scores(ds.size());
  core::parallel_for(ds.size(), threads,
                     [&](std::size_t i) { scores[i] = model::score(params, ds.row(i)); });
  return objective::auc_exact(scores, ds.labels);
}

double attacked_auc(const objective::ObjectiveContext& ctx, const model::ScorerParams& params,
                    const objective::AuxParams& aux, const data::Dataset& ds,
                    const std::string& spec, const attack::AttackConfig& cfg, int threads) {
  const auto suites = attack::attack_suite(ctx, params, aux, ds, {spec}, cfg, threads);
  return clean_auc(params, suites.front().second, threads);
}

}  // namespace

TrainResult train(const data::Dataset& train_set, const data::Dataset* eval_set,
                  const model::ScorerArch& arch, attack::AttackConfig attack_cfg,
                  const TrainConfig& cfg) {
  cfg.check();
  attack_cfg.check();
  if (!(train_set.p > 0.0 && train_set.p < 1.0))
    throw std::invalid_argument("train: training set needs both classes");

  TrainResult result;
  result.ctx = objective::ObjectiveContext{train_set.p, cfg.gamma};
  objective::check_context(result.ctx);
  result.params = model::init(arch, cfg.seed);
  result.aux = objective::AuxParams{0.5, 0.5, 0.0};

  const int t_prime = cfg.t_prime > 0 ? cfg.t_prime : std::max(1, cfg.epochs / 2);
  attack_cfg.t_prime = t_prime;

  // separate stream from model init so arch changes do not disturb batching
  core::Prng shuffle_rng(cfg.seed ^ 0x5DEECE66DULL);
  std::vector<std::size_t> order(train_set.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  double eta_w = cfg.eta_w;
  double eta_alpha = cfg.eta_alpha;
  SgdaState sgda_state;

  const data::Dataset& auc_set = eval_set != nullptr ? *eval_set : train_set;

  for (int t = 0; t < cfg.epochs; ++t) {
    shuffle_rng.shuffle(order);

    if (t == 0 && cfg.mode == TrainMode::kAtFosc && attack_cfg.c_max_auto) {
      // scale-free default: median FOSC of the first batch's clean points
      const std::size_t first = std::min<std::size_t>(
          static_cast<std::size_t>(cfg.batch_size), train_set.size());
      core::Vector initial_fosc(first);
      core::parallel_for(first, cfg.threads, [&](std::size_t i) {
        const core::Vector x = train_set.row(order[i]);
        const objective::FGrad fg =
            objective::grad_f(result.ctx, result.params, result.aux, x, train_set.labels[order[i]]);
        initial_fosc[i] = attack::fosc(x, x, fg.d_x, attack_cfg.eps);
      });
      attack_cfg.c_max = median_of(initial_fosc);
      attack_cfg.c_max_auto = false;
    }

    const double c_t =
        cfg.mode == TrainMode::kAtFosc ? ct_schedule(t, attack_cfg.c_max, t_prime) : 0.0;

    double objective_sum = 0.0;
    double grad_norm_sum = 0.0;
    double fosc_sum = 0.0;
    std::size_t fosc_count = 0;
    std::size_t n_batches = 0;

    for (std::size_t begin = 0; begin < order.size();
         begin += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t end =
          std::min(order.size(), begin + static_cast<std::size_t>(cfg.batch_size));
      std::vector<core::Vector> xs(end - begin);
      std::vector<int> ys(end - begin);
      for (std::size_t i = begin; i < end; ++i) {
        xs[i - begin] = train_set.row(order[i]);
        ys[i - begin] = train_set.labels[order[i]];
      }

      std::vector<core::Vector> adv_xs;
      if (cfg.mode == TrainMode::kNatural) {
        adv_xs = std::move(xs);
      } else {
        const bool use_mask = cfg.mode == TrainMode::kAtFosc;
        const double batch_ct = use_mask ? c_t : 0.0;
        attack::AdvBatch adv = attack::pgd_fosc_batch(
            result.ctx, result.params, result.aux, xs, ys, attack_cfg, batch_ct, use_mask,
            cfg.threads);
        for (double v : adv.fosc) fosc_sum += v;
        fosc_count += adv.fosc.size();
        adv_xs = std::move(adv.x_adv);
      }

      const objective::BatchGrad grads = objective::batch_objective(
          result.ctx, result.params, result.aux, adv_xs, ys, cfg.threads);
      objective_sum += grads.value;
      grad_norm_sum += grads.w_grad_norm();
      sgda_step(result.params, result.aux, grads, eta_w, eta_alpha, cfg.weight_decay,
                cfg.momentum, &sgda_state);
      ++n_batches;
    }

    EpochRecord record;
    record.epoch = t;
    record.objective = objective_sum / static_cast<double>(n_batches);
    record.grad_norm_w = grad_norm_sum / static_cast<double>(n_batches);
    record.mean_fosc = fosc_count > 0 ? fosc_sum / static_cast<double>(fosc_count) : 0.0;
    record.c_t = c_t;
    record.auc_clean = clean_auc(result.params, auc_set, cfg.threads);
    if (!cfg.eval_attack.empty())
      record.auc_attacked = attacked_auc(result.ctx, result.params, result.aux, auc_set,
                                         cfg.eval_attack, attack_cfg, cfg.threads);
    result.history.records.push_back(record);

    if ((t + 1) % cfg.lr_decay_every == 0) {
      eta_w = std::max(eta_w * cfg.lr_decay_factor, cfg.lr_floor);
      eta_alpha = std::max(eta_alpha * cfg.lr_decay_factor, cfg.lr_floor);
    }
  }

  result.attack_cfg = attack_cfg;
  return result;
}

std::pair<double, double> stationarity_probe(const TrainHistory& history) {
  const std::size_t n = history.records.size();
  if (n < 20) throw std::invalid_argument("stationarity_probe: need at least 20 epochs");
  const std::size_t window = std::max<std::size_t>(1, n / 10);
  double early = 0.0;
  double late = 0.0;
  for (std::size_t i = 0; i < window; ++i) {
    early += history.records[i].grad_norm_w;
    late += history.records[n - 1 - i].grad_norm_w;
  }
  return {early / static_cast<double>(window), late / static_cast<double>(window)};
}

}  // namespace adauc::trainer
