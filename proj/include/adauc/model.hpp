#ifndef ADAUC_MODEL_HPP
#define ADAUC_MODEL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adauc/core.hpp"

namespace adauc::model {

/// Layer widths, input first, ending with a single output unit.
/// {d, 1} is a linear scorer; {d, h, 1} a one-hidden-layer MLP.
struct ScorerArch {
  std::vector<std::size_t> widths;
};

/// Feedforward scorer with tanh hidden units and a sigmoid output, so scores
/// live strictly inside (0, 1). The flat parameter view is layer-major,
/// row-major weights first, then the bias, per layer.
struct ScorerParams {
  ScorerArch arch;
  std::vector<core::Matrix> weights;  // weights[l]: widths[l+1] x widths[l]
  std::vector<core::Vector> biases;   // biases[l]: widths[l+1]

  std::size_t input_dim() const { return arch.widths.front(); }
  std::size_t flat_size() const;
  core::Vector flat() const;
  void set_flat(const core::Vector& v);
  double get_flat(std::size_t i) const;
  void add_flat(std::size_t i, double delta);
};

/// Gradients of one scalar quantity w.r.t. the flat parameters and the input.
struct GradBundle {
  core::Vector d_params;
  core::Vector d_input;
};

/// Forward value together with the gradients of the score itself.
struct ScoreGrad {
  double score = 0.0;
  GradBundle grad;
};

/// Glorot-uniform weights, zero biases; deterministic per seed.
ScorerParams init(const ScorerArch& arch, std::uint64_t seed);

double score(const ScorerParams& params, const core::Vector& x);

/// Exact reverse-mode gradients of (upstream * score).
GradBundle backprop(const ScorerParams& params, const core::Vector& x, double upstream);

ScoreGrad score_with_grad(const ScorerParams& params, const core::Vector& x);

/// A scalar objective of (params, x) together with its analytic gradient,
/// as exposed by the objective layer.
struct ObjectiveProbe {
  std::function<double(const ScorerParams&, const core::Vector&)> value;
  std::function<GradBundle(const ScorerParams&, const core::Vector&)> grad;
};

/// Central finite differences over every parameter and input coordinate.
/// Returns the worst error |analytic - fd| / max(1, |analytic|, |fd|).
double finite_diff_check(const ScorerParams& params, const core::Vector& x,
                         const ObjectiveProbe& probe, double step = 1e-5);

/// On-disk model state: "ADAUC1" magic, architecture, little-endian f64
/// parameter stream, then the saddle-point scalars needed to rebuild the
/// training-time objective (a, b, alpha, gamma, p).
struct Checkpoint {
  ScorerParams params;
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double p = 0.5;
};

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace adauc::model

#endif
