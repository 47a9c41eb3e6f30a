#include "adauc/core.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace adauc::core {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Vector Matrix::row(std::size_t r) const {
  return Vector(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

double dot(const Vector& u, const Vector& v) {
  require(u.size() == v.size(), "dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

Vector matvec(const Matrix& m, const Vector& v) {
  require(m.cols == v.size(), "matvec: shape mismatch");
  Vector out(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double acc = 0.0;
    const double* row = m.data.data() + r * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

Vector sign(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] > 0.0 ? 1.0 : (v[i] < 0.0 ? -1.0 : 0.0);
  return out;
}

Vector clamp(const Vector& v, const Vector& lo, const Vector& hi) {
  require(v.size() == lo.size() && v.size() == hi.size(), "clamp: length mismatch");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(lo[i] <= hi[i], "clamp: bound inversion");
    out[i] = std::max(lo[i], std::min(v[i], hi[i]));
  }
  return out;
}

Vector clamp(const Vector& v, double lo, double hi) {
  require(lo <= hi, "clamp: bound inversion");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(lo, std::min(v[i], hi));
  return out;
}

double clamp_scalar(double x, double lo, double hi) {
  return std::max(lo, std::min(x, hi));
}

double l1_norm(const Vector& v) {
  double acc = 0.0;
  for (double x : v) acc += std::abs(x);
  return acc;
}

double l2_norm_sq(const Vector& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

double linf_dist(const Vector& u, const Vector& v) {
  require(u.size() == v.size(), "linf_dist: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = std::max(acc, std::abs(u[i] - v[i]));
  return acc;
}

void axpy(double a, const Vector& x, Vector& y) {
  require(x.size() == y.size(), "axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

double sigmoid(double z) {
  const double zc = clamp_scalar(z, -30.0, 30.0);
  return 1.0 / (1.0 + std::exp(-zc));
}

bool all_finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Prng::Prng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Prng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Prng::uniform(double lo, double hi) {
  const double u01 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + u01 * (hi - lo);
}

double Prng::normal(double mu, double sigma) {
  if (have_cached_) {
    have_cached_ = false;
    return mu + sigma * cached_;
  }
  double u, v, s;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  cached_ = v * m;
  have_cached_ = true;
  return mu + sigma * u * m;
}

std::uint64_t Prng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Prng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

void Prng::shuffle(std::vector<std::size_t>& idx) {
  if (idx.size() < 2) return;
  for (std::size_t i = idx.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(below(i + 1));
    std::swap(idx[i], idx[j]);
  }
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(n, threads <= 1 ? 1 : static_cast<std::size_t>(threads));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace adauc::core
