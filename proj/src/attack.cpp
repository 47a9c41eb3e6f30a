#include "adauc/attack.hpp"

#include <cmath>
#include <stdexcept>

namespace adauc::attack {

void AttackConfig::check() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("attack: eps must be in (0,1]");
  if (!(beta > 0.0 && beta <= eps))
    throw std::invalid_argument("attack: beta must satisfy 0 < beta <= eps");
  if (k_steps < 1) throw std::invalid_argument("attack: k_steps must be >= 1");
  if (!c_max_auto && c_max < 0.0) throw std::invalid_argument("attack: c_max must be >= 0");
  if (t_prime < 1) throw std::invalid_argument("attack: t_prime must be >= 1");
}

double fosc(const core::Vector& x, const core::Vector& x0, const core::Vector& grad_x,
            double eps) {
  if (x.size() != x0.size() || x.size() != grad_x.size())
    throw std::invalid_argument("fosc: length mismatch");
  if (core::linf_dist(x, x0) > eps + 1e-9)
    throw std::invalid_argument("fosc: point outside the eps-ball");
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = core::clamp_scalar(x[j] - x0[j], -eps, eps);
    acc += eps * std::abs(grad_x[j]) - d * grad_x[j];
  }
  return acc;
}

core::Vector project_ball(const core::Vector& x, const core::Vector& x0, double eps) {
  if (x.size() != x0.size()) throw std::invalid_argument("project_ball: length mismatch");
  core::Vector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double ball = std::max(x0[j] - eps, std::min(x[j], x0[j] + eps));
    out[j] = core::clamp_scalar(ball, 0.0, 1.0);
  }
  return out;
}

core::Vector fgsm(const objective::ObjectiveContext& ctx, const model::ScorerParams& params,
                  const objective::AuxParams& aux, const core::Vector& x0, int y, double eps) {
  const objective::FGrad fg = objective::grad_f(ctx, params, aux, x0, y);
  core::Vector out(x0.size());
  for (std::size_t j = 0; j < x0.size(); ++j) {
    const double step = fg.d_x[j] > 0.0 ? eps : (fg.d_x[j] < 0.0 ? -eps : 0.0);
    out[j] = core::clamp_scalar(x0[j] + step, 0.0, 1.0);
  }
  return out;
}

AdvBatch pgd_fosc_batch(const objective::ObjectiveContext& ctx,
                        const model::ScorerParams& params, const objective::AuxParams& aux,
                        const std::vector<core::Vector>& xs, const std::vector<int>& ys,
                        const AttackConfig& cfg, double c_t, bool use_fosc_mask, int threads,
                        core::Prng* start_rng) {
  cfg.check();
  if (xs.size() != ys.size()) throw std::invalid_argument("pgd: feature/label count mismatch");
  if (c_t < 0.0) throw std::invalid_argument("pgd: c_t must be >= 0");

  const std::size_t n = xs.size();
  AdvBatch batch;
  batch.x0 = xs;
  batch.x_adv = xs;
  batch.fosc.assign(n, 0.0);
  batch.steps_used.assign(n, 0);
  std::vector<char> active(n, 1);

  if (start_rng != nullptr) {
    // evaluation-only random start; draws are sequential so results do not
    // depend on the thread count
    for (std::size_t i = 0; i < n; ++i) {
      core::Vector x = xs[i];
      for (double& v : x) v += start_rng->uniform(-cfg.eps, cfg.eps);
      batch.x_adv[i] = project_ball(x, xs[i], cfg.eps);
    }
  }

  std::size_t n_active = n;
  for (int k = 0; k < cfg.k_steps && n_active > 0; ++k) {
    core::parallel_for(n, threads, [&](std::size_t i) {
      if (!active[i]) return;
      const objective::FGrad fg =
          objective::grad_f(ctx, params, aux, batch.x_adv[i], ys[i]);
      if (k >= 1) {
        // mask check happens between steps, against the FOSC of the point
        // produced by the previous step
        batch.fosc[i] = fosc(batch.x_adv[i], batch.x0[i], fg.d_x, cfg.eps);
        if (use_fosc_mask && batch.fosc[i] <= c_t) {
          active[i] = 0;
          return;
        }
      }
      core::Vector stepped(batch.x_adv[i]);
      for (std::size_t j = 0; j < stepped.size(); ++j) {
        const double s = fg.d_x[j] > 0.0 ? cfg.beta : (fg.d_x[j] < 0.0 ? -cfg.beta : 0.0);
        stepped[j] += s;
      }
      batch.x_adv[i] = project_ball(stepped, batch.x0[i], cfg.eps);
      batch.steps_used[i] += 1;
    });
    if (use_fosc_mask) {
      n_active = 0;
      for (std::size_t i = 0; i < n; ++i) n_active += active[i] ? 1 : 0;
    }
  }

  // final FOSC for instances that are still active at the step cap
  core::parallel_for(n, threads, [&](std::size_t i) {
    if (!active[i]) return;
    const objective::FGrad fg = objective::grad_f(ctx, params, aux, batch.x_adv[i], ys[i]);
    batch.fosc[i] = fosc(batch.x_adv[i], batch.x0[i], fg.d_x, cfg.eps);
  });
  return batch;
}

AttackSpec AttackSpec::parse(const std::string& token) {
  AttackSpec spec;
  spec.name = token;
  if (token == "clean") {
    spec.kind = Kind::kClean;
    return spec;
  }
  if (token == "fgsm") {
    spec.kind = Kind::kFgsm;
    return spec;
  }
  if (token.rfind("pgd-", 0) == 0) {
    const std::string digits = token.substr(4);
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      spec.kind = Kind::kPgd;
      spec.k = std::stoi(digits);
      if (spec.k >= 1) return spec;
    }
  }
  throw std::invalid_argument("unknown attack spec '" + token + "'");
}

std::vector<std::pair<std::string, data::Dataset>> attack_suite(
    const objective::ObjectiveContext& ctx, const model::ScorerParams& params,
    const objective::AuxParams& aux, const data::Dataset& dataset,
    const std::vector<std::string>& specs, const AttackConfig& cfg, int threads,
    std::uint64_t seed) {
  std::vector<std::pair<std::string, data::Dataset>> out;
  out.reserve(specs.size());

  std::vector<core::Vector> xs(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) xs[i] = dataset.row(i);

  for (const std::string& token : specs) {
    const AttackSpec spec = AttackSpec::parse(token);
    data::Dataset perturbed = dataset;
    switch (spec.kind) {
      case AttackSpec::Kind::kClean:
        break;
      case AttackSpec::Kind::kFgsm: {
        core::parallel_for(dataset.size(), threads, [&](std::size_t i) {
          const core::Vector adv = fgsm(ctx, params, aux, xs[i], dataset.labels[i], cfg.eps);
          std::copy(adv.begin(), adv.end(),
                    perturbed.features.data.begin() +
                        static_cast<std::ptrdiff_t>(i * dataset.dim()));
        });
        break;
      }
      case AttackSpec::Kind::kPgd: {
        AttackConfig run = cfg;
        run.k_steps = spec.k;
        core::Prng start_rng(seed);
        AdvBatch batch =
            pgd_fosc_batch(ctx, params, aux, xs, dataset.labels, run, /*c_t=*/0.0,
                           /*use_fosc_mask=*/true, threads,
                           cfg.random_start ? &start_rng : nullptr);
        for (std::size_t i = 0; i < dataset.size(); ++i)
          std::copy(batch.x_adv[i].begin(), batch.x_adv[i].end(),
                    perturbed.features.data.begin() +
                        static_cast<std::ptrdiff_t>(i * dataset.dim()));
        break;
      }
    }
    data::validate(perturbed);
    out.emplace_back(spec.name, std::move(perturbed));
  }
  return out;
}

}  // namespace adauc::attack
