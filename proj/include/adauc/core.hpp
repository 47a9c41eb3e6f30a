#ifndef ADAUC_CORE_HPP
#define ADAUC_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace adauc::core {

using Vector = std::vector<double>;

/// Dense row-major matrix of f64.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vector data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  /// Copy of row r.
  Vector row(std::size_t r) const;
};

// All reductions below accumulate left to right in index order; results are
// bitwise reproducible for identical inputs.

double dot(const Vector& u, const Vector& v);
Vector matvec(const Matrix& m, const Vector& v);

/// Entrywise sign with sign(0) = 0.
Vector sign(const Vector& v);

Vector clamp(const Vector& v, const Vector& lo, const Vector& hi);
Vector clamp(const Vector& v, double lo, double hi);
double clamp_scalar(double x, double lo, double hi);

double l1_norm(const Vector& v);
double l2_norm_sq(const Vector& v);
double linf_dist(const Vector& u, const Vector& v);

/// y += a * x
void axpy(double a, const Vector& x, Vector& y);

/// Logistic sigmoid with the logit saturated to [-30, 30] so the result
/// stays strictly inside (0, 1) in f64.
double sigmoid(double z);

bool all_finite(const Vector& v);

/// xoshiro256++ with splitmix64 seeding. Identical seed gives an identical
/// stream on every platform. Single-owner: not safe to share across threads.
class Prng {
 public:
  explicit Prng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Gaussian via the Marsaglia polar method (caches the paired draw).
  double normal(double mu, double sigma);

  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// In-place Fisher-Yates.
  void shuffle(std::vector<std::size_t>& idx);

 private:
  std::uint64_t state_[4];
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Runs fn(i) for i in [0, n) across at most `threads` workers on contiguous
/// chunks. fn must be pure per index (disjoint writes only); results are then
/// independent of the thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace adauc::core

#endif
