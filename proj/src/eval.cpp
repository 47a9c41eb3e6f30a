#include "adauc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "adauc/io_util.hpp"
#include "adauc/objective.hpp"

namespace adauc::eval {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

core::Vector score_all(const model::ScorerParams& params, const data::Dataset& ds,
                       int threads) {
  core::Vector scores(ds.size());
  core::parallel_for(ds.size(), threads,
                     [&](std::size_t i) { scores[i] = model::score(params, ds.row(i)); });
  return scores;
}

objective::ObjectiveContext context_of(const model::Checkpoint& ckpt) {
  objective::ObjectiveContext ctx{ckpt.p, ckpt.gamma};
  objective::check_context(ctx);
  return ctx;
}

objective::AuxParams aux_of(const model::Checkpoint& ckpt) {
  return objective::AuxParams{ckpt.a, ckpt.b, ckpt.alpha};
}

}  // namespace

EvalReport evaluate_grid(const std::vector<ModelEntry>& models, const data::Dataset& dataset,
                         const std::vector<std::string>& attack_specs,
                         const attack::AttackConfig& cfg, int threads, std::uint64_t seed) {
  for (const std::string& spec : attack_specs) attack::AttackSpec::parse(spec);
  EvalReport report;
  for (const ModelEntry& entry : models) {
    const auto ctx = context_of(entry.ckpt);
    const auto aux = aux_of(entry.ckpt);
    const auto perturbed =
        attack::attack_suite(ctx, entry.ckpt.params, aux, dataset, attack_specs, cfg,
                             threads, seed);
    for (const auto& [name, attacked] : perturbed) {
      EvalCell cell;
      cell.method = entry.method;
      cell.mode = entry.mode;
      cell.attack = name;
      cell.auc = objective::auc_exact(score_all(entry.ckpt.params, attacked, threads),
                                      attacked.labels);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

ScoreHistogram score_histogram(const model::Checkpoint& ckpt, const data::Dataset& dataset,
                               const std::string& attack_spec, const attack::AttackConfig& cfg,
                               int n_bins, int threads, std::uint64_t seed) {
  if (n_bins < 2) throw std::invalid_argument("score_histogram: n_bins must be >= 2");
  const auto ctx = context_of(ckpt);
  const auto aux = aux_of(ckpt);
  const auto perturbed =
      attack::attack_suite(ctx, ckpt.params, aux, dataset, {attack_spec}, cfg, threads, seed);
  const data::Dataset& attacked = perturbed.front().second;
  const core::Vector scores = score_all(ckpt.params, attacked, threads);

  ScoreHistogram hist;
  hist.attack = attack_spec;
  hist.auc = objective::auc_exact(scores, attacked.labels);
  hist.bin_lo.resize(n_bins);
  hist.bin_hi.resize(n_bins);
  hist.pos_count.assign(n_bins, 0);
  hist.neg_count.assign(n_bins, 0);
  const double width = 1.0 / static_cast<double>(n_bins);
  for (int b = 0; b < n_bins; ++b) {
    hist.bin_lo[b] = width * b;
    hist.bin_hi[b] = b + 1 == n_bins ? 1.0 : width * (b + 1);
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    int b = static_cast<int>(scores[i] / width);
    b = std::max(0, std::min(n_bins - 1, b));
    if (attacked.labels[i] == 1)
      ++hist.pos_count[b];
    else
      ++hist.neg_count[b];
  }
  return hist;
}

namespace {

std::string csv_preamble(const std::vector<std::string>& header_comments) {
  std::string out;
  for (const std::string& line : header_comments) out += "# " + line + "\n";
  return out;
}

}  // namespace

void write_report_csv(const EvalReport& report, const std::string& path,
                      const std::vector<std::string>& header_comments) {
  std::string out = csv_preamble(header_comments);
  out += "method,mode,attack,auc\n";
  for (const EvalCell& cell : report.cells)
    out += cell.method + "," + cell.mode + "," + cell.attack + "," + fixed6(cell.auc) + "\n";
  io::atomic_write_file(path, out);
}

void write_history_csv(const trainer::TrainHistory& history, const std::string& path,
                       const std::vector<std::string>& header_comments) {
  std::string out = csv_preamble(header_comments);
  out += "epoch,objective,auc_clean,auc_attacked,grad_norm_w,mean_fosc,c_t\n";
  for (const trainer::EpochRecord& r : history.records) {
    out += std::to_string(r.epoch) + "," + fixed6(r.objective) + "," + fixed6(r.auc_clean) +
           "," + fixed6(r.auc_attacked) + "," + fixed6(r.grad_norm_w) + "," +
           fixed6(r.mean_fosc) + "," + fixed6(r.c_t) + "\n";
  }
  io::atomic_write_file(path, out);
}

void write_histogram_csv(const ScoreHistogram& histogram, const std::string& path,
                         const std::vector<std::string>& header_comments) {
  std::string out = csv_preamble(header_comments);
  out += "bin_lo,bin_hi,pos_count,neg_count\n";
  for (std::size_t b = 0; b < histogram.bin_lo.size(); ++b) {
    out += fixed6(histogram.bin_lo[b]) + "," + fixed6(histogram.bin_hi[b]) + "," +
           std::to_string(histogram.pos_count[b]) + "," +
           std::to_string(histogram.neg_count[b]) + "\n";
  }
  io::atomic_write_file(path, out);
}

namespace {

constexpr int kSvgWidth = 800;
constexpr int kSvgHeight = 600;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 150;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

void write_svg_lines(const std::vector<Series>& series, const std::string& path,
                     const std::vector<std::string>& header_comments) {
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool have_point = false;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      if (!have_point) {
        x_min = x_max = x;
        y_min = y_max = y;
        have_point = true;
      } else {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
      }
    }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  const double plot_w = kSvgWidth - kMarginLeft - kMarginRight;
  const double plot_h = kSvgHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgWidth
      << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << " "
      << kSvgHeight << "\">\n";
  for (const std::string& line : header_comments) svg << "<!-- " << line << " -->\n";
  svg << "<rect width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
      << "\" fill=\"white\"/>\n";

  // axes
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
      << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // min/max tick labels
  svg << "<text x=\"" << kMarginLeft << "\" y=\"" << kSvgHeight - 20
      << "\" font-size=\"12\" text-anchor=\"middle\">" << fixed2(x_min) << "</text>\n";
  svg << "<text x=\"" << kMarginLeft + plot_w << "\" y=\"" << kSvgHeight - 20
      << "\" font-size=\"12\" text-anchor=\"middle\">" << fixed2(x_max) << "</text>\n";
  svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << kMarginTop + plot_h
      << "\" font-size=\"12\" text-anchor=\"end\">" << fixed2(y_min) << "</text>\n";
  svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << kMarginTop + 4
      << "\" font-size=\"12\" text-anchor=\"end\">" << fixed2(y_max) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (!series[s].points.empty()) {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : series[s].points)
        svg << fixed2(px(x)) << "," << fixed2(py(y)) << " ";
      svg << "\"/>\n";
    }
    // legend entry
    const double ly = kMarginTop + 16.0 * static_cast<double>(s + 1);
    svg << "<line x1=\"" << kMarginLeft + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\""
        << kMarginLeft + plot_w + 34 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << kMarginLeft + plot_w + 40 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << series[s].name << "</text>\n";
  }
  svg << "</svg>\n";
  io::atomic_write_file(path, svg.str());
}

CsvTable read_numeric_csv(const std::string& path) {
  const std::string bytes = io::read_file_bytes(path);
  std::istringstream in(bytes);
  CsvTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (!header_seen) {
      table.columns = fields;
      header_seen = true;
      continue;
    }
    core::Vector values;
    values.reserve(fields.size());
    for (const std::string& f : fields) {
      try {
        values.push_back(std::stod(f));
      } catch (const std::exception&) {
        values.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    table.rows.push_back(std::move(values));
  }
  if (!header_seen) throw std::runtime_error(path + ": no CSV header found");
  return table;
}

}  // namespace adauc::eval
