#include "adauc/data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adauc/io_util.hpp"

namespace adauc::data {

namespace {

double label_mean(const std::vector<int>& labels) {
  double acc = 0.0;
  for (int y : labels) acc += y;
  return acc / static_cast<double>(labels.size());
}

}  // namespace

void validate(Dataset& ds) {
  const std::size_t n = ds.labels.size();
  if (n == 0) throw std::invalid_argument("dataset: empty");
  if (ds.features.rows != n)
    throw std::invalid_argument("dataset: feature/label count mismatch");
  for (int y : ds.labels)
    if (y != 0 && y != 1) throw std::invalid_argument("dataset: labels must be 0 or 1");
  for (double v : ds.features.data)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("dataset: feature outside [0,1]");
  ds.p = label_mean(ds.labels);
}

std::vector<long> longtail_class_sizes(const LongTailSpec& spec) {
  if (spec.n_classes < 2) throw std::invalid_argument("longtail: need at least 2 classes");
  if (!(spec.imbalance > 0.0 && spec.imbalance <= 1.0))
    throw std::invalid_argument("longtail: imbalance must be in (0,1]");
  std::vector<long> sizes(spec.n_classes);
  const double denom = static_cast<double>(spec.n_classes - 1);
  for (int c = 0; c < spec.n_classes; ++c) {
    const double frac = std::pow(spec.imbalance, static_cast<double>(c) / denom);
    sizes[c] = std::lround(static_cast<double>(spec.n_max) * frac);
  }
  return sizes;
}

BinarizeResult binarize_longtail(const std::vector<long>& class_sizes,
                                 const std::set<int>& positive_class_ids) {
  BinarizeResult out;
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    if (positive_class_ids.count(static_cast<int>(c)))
      out.n_pos += class_sizes[c];
    else
      out.n_neg += class_sizes[c];
  }
  if (out.n_pos == 0 || out.n_neg == 0)
    throw std::invalid_argument("binarize: one side of the split is empty");
  out.rho = static_cast<double>(out.n_pos) / static_cast<double>(out.n_neg);
  return out;
}

Dataset gen_synthetic_longtail(std::uint64_t seed, int n, int d, double rho, double separation) {
  if (n < 2) throw std::invalid_argument("gen_synthetic: need n >= 2");
  if (d < 2) throw std::invalid_argument("gen_synthetic: need d >= 2");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("gen_synthetic: rho must be in (0,1)");
  core::Prng rng(seed);

  core::Vector direction(d);
  for (double& v : direction) v = rng.normal(0.0, 1.0);
  const double norm = std::sqrt(core::l2_norm_sq(direction));
  for (double& v : direction) v /= norm;

  Dataset ds;
  ds.name = "synthetic";
  ds.features = core::Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  ds.labels.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int y = rng.uniform(0.0, 1.0) < rho ? 1 : 0;
    ds.labels[static_cast<std::size_t>(i)] = y;
    const double shift = (y == 1 ? 0.5 : -0.5) * separation;
    for (int j = 0; j < d; ++j)
      ds.features.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          shift * direction[static_cast<std::size_t>(j)] + rng.normal(0.0, 1.0);
  }
  // both classes must be present for any AUC-style objective
  if (std::count(ds.labels.begin(), ds.labels.end(), 1) == 0) ds.labels[0] = 1;
  if (std::count(ds.labels.begin(), ds.labels.end(), 0) == 0) ds.labels[0] = 0;

  // per-dimension min-max rescale into [0,1]
  for (int j = 0; j < d; ++j) {
    double lo = ds.features.at(0, static_cast<std::size_t>(j));
    double hi = lo;
    for (int i = 1; i < n; ++i) {
      const double v = ds.features.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double span = hi - lo;
    for (int i = 0; i < n; ++i) {
      double& v = ds.features.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      v = span > 0.0 ? core::clamp_scalar((v - lo) / span, 0.0, 1.0) : 0.5;
    }
  }
  validate(ds);
  return ds;
}

std::pair<Dataset, Dataset> split_rows(const Dataset& ds, std::size_t n_head) {
  if (n_head == 0 || n_head >= ds.size())
    throw std::invalid_argument("split_rows: head size must leave both sides nonempty");
  const std::size_t d = ds.dim();
  Dataset head, tail;
  head.name = ds.name;
  tail.name = ds.name;
  head.features = core::Matrix(n_head, d);
  tail.features = core::Matrix(ds.size() - n_head, d);
  std::copy(ds.features.data.begin(), ds.features.data.begin() + static_cast<std::ptrdiff_t>(n_head * d),
            head.features.data.begin());
  std::copy(ds.features.data.begin() + static_cast<std::ptrdiff_t>(n_head * d),
            ds.features.data.end(), tail.features.data.begin());
  head.labels.assign(ds.labels.begin(), ds.labels.begin() + static_cast<std::ptrdiff_t>(n_head));
  tail.labels.assign(ds.labels.begin() + static_cast<std::ptrdiff_t>(n_head), ds.labels.end());
  validate(head);
  validate(tail);
  return {std::move(head), std::move(tail)};
}

namespace {

constexpr std::uint32_t kIdxImagesMagic = 0x00000803;
constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;

}  // namespace

ClassPool load_mnist_idx(const std::string& images_path, const std::string& labels_path) {
  const std::string image_bytes = io::read_file_bytes(images_path);
  const std::string label_bytes = io::read_file_bytes(labels_path);
  io::ByteReader images(image_bytes, images_path);
  io::ByteReader labels(label_bytes, labels_path);

  const std::uint32_t image_magic = images.u32_be();
  if (image_magic != kIdxImagesMagic)
    throw std::runtime_error(images_path + ": bad IDX image magic");
  const std::uint32_t label_magic = labels.u32_be();
  if (label_magic != kIdxLabelsMagic)
    throw std::runtime_error(labels_path + ": bad IDX label magic");

  const std::uint32_t n_images = images.u32_be();
  const std::uint32_t rows = images.u32_be();
  const std::uint32_t cols = images.u32_be();
  const std::uint32_t n_labels = labels.u32_be();
  if (n_images != n_labels)
    throw std::runtime_error(images_path + ": image/label count mismatch");

  ClassPool pool;
  pool.dim = static_cast<std::size_t>(rows) * cols;
  for (std::uint32_t i = 0; i < n_images; ++i) {
    const std::string pixels = images.raw(pool.dim);
    const std::uint8_t label = labels.u8();
    if (pool.classes.size() <= label) pool.classes.resize(label + 1);
    core::Vector features(pool.dim);
    for (std::size_t j = 0; j < pool.dim; ++j)
      features[j] = static_cast<double>(static_cast<std::uint8_t>(pixels[j])) / 255.0;
    pool.classes[label].push_back(std::move(features));
  }
  if (!images.done()) throw std::runtime_error(images_path + ": trailing bytes");
  if (!labels.done()) throw std::runtime_error(labels_path + ": trailing bytes");
  return pool;
}

ClassPool load_cifar10_bin(const std::string& path) {
  const std::string bytes = io::read_file_bytes(path);
  constexpr std::size_t kRecord = 3073;  // 1 label byte + 32*32*3 pixels
  if (bytes.size() % kRecord != 0)
    throw std::runtime_error(path + ": length is not a multiple of 3073");
  ClassPool pool;
  pool.dim = kRecord - 1;
  io::ByteReader reader(bytes, path);
  const std::size_t n = bytes.size() / kRecord;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t label = reader.u8();
    const std::string pixels = reader.raw(pool.dim);
    if (pool.classes.size() <= label) pool.classes.resize(label + 1);
    core::Vector features(pool.dim);
    for (std::size_t j = 0; j < pool.dim; ++j)
      features[j] = static_cast<double>(static_cast<std::uint8_t>(pixels[j])) / 255.0;
    pool.classes[label].push_back(std::move(features));
  }
  return pool;
}

namespace {

Dataset assemble(const std::vector<const core::Vector*>& rows, const std::vector<int>& ys,
                 std::size_t dim, core::Prng& rng, const std::string& name) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);

  Dataset ds;
  ds.name = name;
  ds.features = core::Matrix(rows.size(), dim);
  ds.labels.resize(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const core::Vector& src = *rows[order[i]];
    std::copy(src.begin(), src.end(), ds.features.data.begin() + static_cast<std::ptrdiff_t>(i * dim));
    ds.labels[i] = ys[order[i]];
  }
  validate(ds);
  return ds;
}

}  // namespace

Dataset subsample_longtail(const ClassPool& pool, const LongTailSpec& spec, std::uint64_t seed) {
  const std::vector<long> sizes = longtail_class_sizes(spec);
  if (pool.classes.size() < static_cast<std::size_t>(spec.n_classes))
    throw std::invalid_argument("subsample: pool has fewer classes than spec");
  core::Prng rng(seed);

  std::vector<const core::Vector*> rows;
  std::vector<int> ys;
  for (int c = 0; c < spec.n_classes; ++c) {
    const auto& members = pool.classes[static_cast<std::size_t>(c)];
    const long want = sizes[static_cast<std::size_t>(c)];
    if (static_cast<long>(members.size()) < want)
      throw std::invalid_argument("subsample: insufficient pool for class " + std::to_string(c));
    std::vector<std::size_t> idx(members.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    rng.shuffle(idx);
    const int y = spec.positive_class_ids.count(c) ? 1 : 0;
    for (long k = 0; k < want; ++k) {
      rows.push_back(&members[idx[static_cast<std::size_t>(k)]]);
      ys.push_back(y);
    }
  }
  return assemble(rows, ys, pool.dim, rng, "longtail");
}

Dataset binarize_pool(const ClassPool& pool, const std::set<int>& positive_class_ids,
                      std::uint64_t seed, const std::string& name) {
  core::Prng rng(seed);
  std::vector<const core::Vector*> rows;
  std::vector<int> ys;
  for (std::size_t c = 0; c < pool.classes.size(); ++c) {
    const int y = positive_class_ids.count(static_cast<int>(c)) ? 1 : 0;
    for (const auto& member : pool.classes[c]) {
      rows.push_back(&member);
      ys.push_back(y);
    }
  }
  if (rows.empty()) throw std::invalid_argument("binarize_pool: empty pool");
  return assemble(rows, ys, pool.dim, rng, name);
}

namespace {
constexpr char kDatasetMagic[] = "ADSET1";
}

void save_dataset(const Dataset& ds, const std::string& path) {
  std::string out;
  out.append(kDatasetMagic, 6);
  io::put_f64_le(out, static_cast<double>(ds.size()));
  io::put_f64_le(out, static_cast<double>(ds.dim()));
  io::put_f64_le(out, ds.p);
  for (double v : ds.features.data) io::put_f64_le(out, v);
  for (int y : ds.labels) out.push_back(static_cast<char>(y));
  io::atomic_write_file(path, out);
}

Dataset load_dataset(const std::string& path) {
  const std::string bytes = io::read_file_bytes(path);
  io::ByteReader reader(bytes, path);
  if (reader.raw(6) != std::string(kDatasetMagic, 6))
    throw std::runtime_error(path + ": bad dataset magic");
  const double n_f = reader.f64_le();
  const double d_f = reader.f64_le();
  const double p = reader.f64_le();
  if (!(n_f >= 1.0) || !(d_f >= 1.0) || n_f != std::floor(n_f) || d_f != std::floor(d_f))
    throw std::runtime_error(path + ": corrupt dataset header");
  const std::size_t n = static_cast<std::size_t>(n_f);
  const std::size_t d = static_cast<std::size_t>(d_f);

  Dataset ds;
  ds.name = path;
  ds.features = core::Matrix(n, d);
  for (double& v : ds.features.data) v = reader.f64_le();
  ds.labels.resize(n);
  for (auto& y : ds.labels) y = reader.u8();
  if (!reader.done()) throw std::runtime_error(path + ": trailing bytes");
  validate(ds);
  if (ds.p != p) throw std::runtime_error(path + ": stored p does not match labels");
  return ds;
}

}  // namespace adauc::data
