#ifndef ADAUC_EVAL_HPP
#define ADAUC_EVAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "adauc/attack.hpp"
#include "adauc/data.hpp"
#include "adauc/model.hpp"
#include "adauc/trainer.hpp"

namespace adauc::eval {

/// One trained model entering the evaluation grid.
struct ModelEntry {
  std::string method;
  std::string mode;
  model::Checkpoint ckpt;
};

struct EvalCell {
  std::string method;
  std::string mode;
  std::string attack;
  double auc = 0.0;
};

/// Complete (model x attack) grid; cells appear in row-major input order.
struct EvalReport {
  std::vector<EvalCell> cells;
};

EvalReport evaluate_grid(const std::vector<ModelEntry>& models, const data::Dataset& dataset,
                         const std::vector<std::string>& attack_specs,
                         const attack::AttackConfig& cfg, int threads = 1,
                         std::uint64_t seed = 0);

struct ScoreHistogram {
  core::Vector bin_lo;
  core::Vector bin_hi;
  std::vector<long> pos_count;
  std::vector<long> neg_count;
  std::string attack;
  double auc = 0.0;  // AUC of the same scores the bins were filled from
};

ScoreHistogram score_histogram(const model::Checkpoint& ckpt, const data::Dataset& dataset,
                               const std::string& attack_spec, const attack::AttackConfig& cfg,
                               int n_bins, int threads = 1, std::uint64_t seed = 0);

// CSV artifacts carry `# key = value` header comments (the effective config)
// followed by a fixed column order; numbers print as 6-decimal fixed point.
// All writers go through a temp file + atomic rename.

void write_report_csv(const EvalReport& report, const std::string& path,
                      const std::vector<std::string>& header_comments);
void write_history_csv(const trainer::TrainHistory& history, const std::string& path,
                       const std::vector<std::string>& header_comments);
void write_histogram_csv(const ScoreHistogram& histogram, const std::string& path,
                         const std::vector<std::string>& header_comments);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// SVG 1.1, fixed 800x600 viewport, one polyline per series, axes and legend.
void write_svg_lines(const std::vector<Series>& series, const std::string& path,
                     const std::vector<std::string>& header_comments);

/// Parses a CSV produced by the writers above (skips # comments). Returns the
/// header names and the numeric rows.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<core::Vector> rows;
};

CsvTable read_numeric_csv(const std::string& path);

}  // namespace adauc::eval

#endif
