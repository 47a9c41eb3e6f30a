#include "adauc/model.hpp"

#include <cmath>
#include <stdexcept>

#include "adauc/io_util.hpp"

namespace adauc::model {

namespace {

void check_arch(const ScorerArch& arch) {
  if (arch.widths.size() < 2) throw std::invalid_argument("scorer arch needs at least two widths");
  if (arch.widths.back() != 1) throw std::invalid_argument("scorer arch must end with width 1");
  for (std::size_t w : arch.widths)
    if (w == 0) throw std::invalid_argument("scorer arch widths must be positive");
}

struct Forward {
  // activations[0] = x, activations[l+1] = layer l output after nonlinearity
  std::vector<core::Vector> activations;
  std::vector<core::Vector> preacts;
  double score = 0.0;
};

Forward run_forward(const ScorerParams& params, const core::Vector& x) {
  if (x.size() != params.input_dim())
    throw std::invalid_argument("score: input dimension mismatch");
  Forward fwd;
  const std::size_t n_layers = params.weights.size();
  fwd.activations.resize(n_layers + 1);
  fwd.preacts.resize(n_layers);
  fwd.activations[0] = x;
  for (std::size_t l = 0; l < n_layers; ++l) {
    core::Vector z = core::matvec(params.weights[l], fwd.activations[l]);
    core::axpy(1.0, params.biases[l], z);
    fwd.preacts[l] = z;
    core::Vector a(z.size());
    if (l + 1 == n_layers) {
      a[0] = core::sigmoid(z[0]);
    } else {
      for (std::size_t i = 0; i < z.size(); ++i) a[i] = std::tanh(z[i]);
    }
    fwd.activations[l + 1] = std::move(a);
  }
  fwd.score = fwd.activations.back()[0];
  return fwd;
}

}  // namespace

std::size_t ScorerParams::flat_size() const {
  std::size_t total = 0;
  for (std::size_t l = 0; l < weights.size(); ++l)
    total += weights[l].data.size() + biases[l].size();
  return total;
}

core::Vector ScorerParams::flat() const {
  core::Vector out;
  out.reserve(flat_size());
  for (std::size_t l = 0; l < weights.size(); ++l) {
    out.insert(out.end(), weights[l].data.begin(), weights[l].data.end());
    out.insert(out.end(), biases[l].begin(), biases[l].end());
  }
  return out;
}

void ScorerParams::set_flat(const core::Vector& v) {
  if (v.size() != flat_size()) throw std::invalid_argument("set_flat: length mismatch");
  std::size_t pos = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    for (double& w : weights[l].data) w = v[pos++];
    for (double& b : biases[l]) b = v[pos++];
  }
}

double ScorerParams::get_flat(std::size_t i) const {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (i < weights[l].data.size()) return weights[l].data[i];
    i -= weights[l].data.size();
    if (i < biases[l].size()) return biases[l][i];
    i -= biases[l].size();
  }
  throw std::out_of_range("get_flat: index out of range");
}

void ScorerParams::add_flat(std::size_t i, double delta) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (i < weights[l].data.size()) {
      weights[l].data[i] += delta;
      return;
    }
    i -= weights[l].data.size();
    if (i < biases[l].size()) {
      biases[l][i] += delta;
      return;
    }
    i -= biases[l].size();
  }
  throw std::out_of_range("add_flat: index out of range");
}

ScorerParams init(const ScorerArch& arch, std::uint64_t seed) {
  check_arch(arch);
  ScorerParams params;
  params.arch = arch;
  core::Prng rng(seed);
  const std::size_t n_layers = arch.widths.size() - 1;
  params.weights.reserve(n_layers);
  params.biases.reserve(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    const std::size_t fan_in = arch.widths[l];
    const std::size_t fan_out = arch.widths[l + 1];
    const double s = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    core::Matrix w(fan_out, fan_in);
    for (double& entry : w.data) entry = rng.uniform(-s, s);
    params.weights.push_back(std::move(w));
    params.biases.emplace_back(fan_out, 0.0);
  }
  return params;
}

double score(const ScorerParams& params, const core::Vector& x) {
  return run_forward(params, x).score;
}

GradBundle backprop(const ScorerParams& params, const core::Vector& x, double upstream) {
  if (!std::isfinite(upstream)) throw std::invalid_argument("backprop: non-finite upstream");
  GradBundle bundle = score_with_grad(params, x).grad;
  for (double& v : bundle.d_params) v *= upstream;
  for (double& v : bundle.d_input) v *= upstream;
  return bundle;
}

ScoreGrad score_with_grad(const ScorerParams& params, const core::Vector& x) {
  const Forward fwd = run_forward(params, x);
  const std::size_t n_layers = params.weights.size();

  ScoreGrad out;
  out.score = fwd.score;
  out.grad.d_params.assign(params.flat_size(), 0.0);

  // delta = d(score)/d(preact of current layer)
  core::Vector delta{fwd.score * (1.0 - fwd.score)};  // sigmoid'
  // flat layout offsets (layer-major, weights then bias)
  std::vector<std::size_t> offsets(n_layers, 0);
  std::size_t pos = 0;
  for (std::size_t l = 0; l < n_layers; ++l) {
    offsets[l] = pos;
    pos += params.weights[l].data.size() + params.biases[l].size();
  }

  for (std::size_t l = n_layers; l-- > 0;) {
    const core::Matrix& w = params.weights[l];
    const core::Vector& input = fwd.activations[l];
    double* d_w = out.grad.d_params.data() + offsets[l];
    double* d_b = d_w + w.data.size();
    for (std::size_t r = 0; r < w.rows; ++r) {
      for (std::size_t c = 0; c < w.cols; ++c) d_w[r * w.cols + c] = delta[r] * input[c];
      d_b[r] = delta[r];
    }
    // propagate to layer input: w^T delta, times tanh' for hidden layers
    core::Vector d_input(w.cols, 0.0);
    for (std::size_t c = 0; c < w.cols; ++c) {
      double acc = 0.0;
      for (std::size_t r = 0; r < w.rows; ++r) acc += w.at(r, c) * delta[r];
      d_input[c] = acc;
    }
    if (l > 0) {
      const core::Vector& hidden = fwd.activations[l];
      for (std::size_t c = 0; c < d_input.size(); ++c)
        d_input[c] *= 1.0 - hidden[c] * hidden[c];  // tanh'
      delta = std::move(d_input);
    } else {
      out.grad.d_input = std::move(d_input);
    }
  }
  return out;
}

double finite_diff_check(const ScorerParams& params, const core::Vector& x,
                         const ObjectiveProbe& probe, double step) {
  const GradBundle analytic = probe.grad(params, x);
  double worst = 0.0;
  const auto update = [&](double a, double fd) {
    const double denom = std::max({1.0, std::abs(a), std::abs(fd)});
    worst = std::max(worst, std::abs(a - fd) / denom);
  };

  ScorerParams mutable_params = params;
  for (std::size_t i = 0; i < mutable_params.flat_size(); ++i) {
    mutable_params.add_flat(i, step);
    const double plus = probe.value(mutable_params, x);
    mutable_params.add_flat(i, -2.0 * step);
    const double minus = probe.value(mutable_params, x);
    mutable_params.add_flat(i, step);
    update(analytic.d_params[i], (plus - minus) / (2.0 * step));
  }

  core::Vector mutable_x = x;
  for (std::size_t i = 0; i < mutable_x.size(); ++i) {
    const double saved = mutable_x[i];
    mutable_x[i] = saved + step;
    const double plus = probe.value(params, mutable_x);
    mutable_x[i] = saved - step;
    const double minus = probe.value(params, mutable_x);
    mutable_x[i] = saved;
    update(analytic.d_input[i], (plus - minus) / (2.0 * step));
  }
  return worst;
}

namespace {
constexpr char kMagic[] = "ADAUC1";
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  std::string out;
  out.append(kMagic, 6);
  io::put_u32_le(out, static_cast<std::uint32_t>(ckpt.params.arch.widths.size()));
  for (std::size_t w : ckpt.params.arch.widths)
    io::put_u32_le(out, static_cast<std::uint32_t>(w));
  for (double v : ckpt.params.flat()) io::put_f64_le(out, v);
  io::put_f64_le(out, ckpt.a);
  io::put_f64_le(out, ckpt.b);
  io::put_f64_le(out, ckpt.alpha);
  io::put_f64_le(out, ckpt.gamma);
  io::put_f64_le(out, ckpt.p);
  io::atomic_write_file(path, out);
}

Checkpoint load_checkpoint(const std::string& path) {
  const std::string bytes = io::read_file_bytes(path);
  io::ByteReader reader(bytes, path);
  if (reader.raw(6) != std::string(kMagic, 6))
    throw std::runtime_error(path + ": bad checkpoint magic");
  const std::uint32_t n_widths = reader.u32_le();
  if (n_widths < 2 || n_widths > 64)
    throw std::runtime_error(path + ": implausible architecture descriptor");
  ScorerArch arch;
  arch.widths.resize(n_widths);
  for (auto& w : arch.widths) w = reader.u32_le();
  check_arch(arch);

  Checkpoint ckpt;
  ckpt.params.arch = arch;
  for (std::size_t l = 0; l + 1 < arch.widths.size(); ++l) {
    ckpt.params.weights.emplace_back(arch.widths[l + 1], arch.widths[l]);
    ckpt.params.biases.emplace_back(arch.widths[l + 1], 0.0);
  }
  core::Vector flat(ckpt.params.flat_size());
  for (double& v : flat) v = reader.f64_le();
  ckpt.params.set_flat(flat);
  ckpt.a = reader.f64_le();
  ckpt.b = reader.f64_le();
  ckpt.alpha = reader.f64_le();
  ckpt.gamma = reader.f64_le();
  ckpt.p = reader.f64_le();
  if (!reader.done()) throw std::runtime_error(path + ": trailing bytes in checkpoint");
  return ckpt;
}

}  // namespace adauc::model
