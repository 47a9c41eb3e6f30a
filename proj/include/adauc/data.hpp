#ifndef ADAUC_DATA_HPP
#define ADAUC_DATA_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "adauc/core.hpp"

namespace adauc::data {

/// Feature box is [0,1]^d; labels are {0,1}; p is the exact positive
/// fraction. Invariants are checked on construction via validate().
struct Dataset {
  core::Matrix features;  // n x d
  std::vector<int> labels;
  double p = 0.0;
  std::string name;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return features.cols; }
  core::Vector row(std::size_t i) const { return features.row(i); }
};

/// Recomputes p and checks every type invariant; throws on violation.
void validate(Dataset& ds);

struct LongTailSpec {
  int n_classes = 10;
  int n_max = 5000;
  double imbalance = 0.01;  // least / most frequent class size
  std::set<int> positive_class_ids;
};

/// size_c = round(n_max * imbalance^(c / (n_classes - 1))), non-increasing.
std::vector<long> longtail_class_sizes(const LongTailSpec& spec);

struct BinarizeResult {
  long n_pos = 0;
  long n_neg = 0;
  double rho = 0.0;  // n_pos / n_neg
};

BinarizeResult binarize_longtail(const std::vector<long>& class_sizes,
                                 const std::set<int>& positive_class_ids);

/// Two Gaussian clusters `separation` sigmas apart along a random unit
/// direction, labels Bernoulli(rho), features min-max rescaled into [0,1]^d.
Dataset gen_synthetic_longtail(std::uint64_t seed, int n, int d, double rho, double separation);

/// Rows [0, n_head) and [n_head, n) as separate datasets. Used to carve a
/// held-out split from one generative draw, so both sides share the task.
std::pair<Dataset, Dataset> split_rows(const Dataset& ds, std::size_t n_head);

/// Raw instances grouped by source class, before long-tail subsampling.
struct ClassPool {
  std::size_t dim = 0;
  std::vector<std::vector<core::Vector>> classes;
};

ClassPool load_mnist_idx(const std::string& images_path, const std::string& labels_path);
ClassPool load_cifar10_bin(const std::string& path);

Dataset subsample_longtail(const ClassPool& pool, const LongTailSpec& spec, std::uint64_t seed);

/// Binarizes the whole pool without subsampling (source test splits).
Dataset binarize_pool(const ClassPool& pool, const std::set<int>& positive_class_ids,
                      std::uint64_t seed, const std::string& name);

void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace adauc::data

#endif
