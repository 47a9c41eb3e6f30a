// adauc: adversarial AUC optimization toolkit for long-tail binary problems.
//
// Subcommands: gen-data, train, eval, verify, plot. All randomness flows from
// --seed; outputs are written atomically and carry the effective config as
// header comments (text formats). Option precedence is built-in defaults,
// then --config file entries, then explicit flags.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "adauc/attack.hpp"
#include "adauc/config.hpp"
#include "adauc/data.hpp"
#include "adauc/eval.hpp"
#include "adauc/io_util.hpp"
#include "adauc/model.hpp"
#include "adauc/oracle.hpp"
#include "adauc/trainer.hpp"

namespace {

using adauc::config::KeyValueConfig;

std::vector<std::string> split_csv_list(const std::string& raw) {
  std::vector<std::string> out;
  std::stringstream ss(raw);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

std::set<int> parse_class_ids(const std::string& raw) {
  std::set<int> ids;
  for (const std::string& token : split_csv_list(raw)) ids.insert(std::stoi(token));
  return ids;
}

/// Applies config-file values to options the user did not set on the command
/// line, preserving the defaults < file < flags precedence.
void apply_config_file(CLI::App* cmd, const KeyValueConfig& file_cfg) {
  for (CLI::Option* opt : cmd->get_options()) {
    if (opt->get_lnames().empty()) continue;
    std::string key = opt->get_lnames().front();
    for (char& c : key)
      if (c == '-') c = '_';
    if (opt->count() == 0 && file_cfg.has(key)) {
      opt->add_result(file_cfg.get_string(key));
      opt->run_callback();
    }
  }
}

/// Effective configuration of a subcommand: every long option with its final
/// value, sorted by key. Deterministic, so repeated runs emit identical files.
std::map<std::string, std::string> effective_config(const CLI::App* cmd) {
  std::map<std::string, std::string> out;
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->get_lnames().empty()) continue;
    std::string key = opt->get_lnames().front();
    if (key == "help" || key == "config") continue;
    for (char& c : key)
      if (c == '-') c = '_';  // echoed header doubles as config-file syntax
    std::string value;
    if (opt->count() > 0) {
      for (const std::string& result : opt->results()) {
        if (!value.empty()) value += ",";
        value += result;
      }
    } else {
      value = opt->get_default_str();
    }
    if (value.empty() && opt->count() == 0) continue;
    out[key] = value;
  }
  return out;
}

int resolve_threads(int threads_flag) {
  if (threads_flag > 0) return threads_flag;
  if (const char* env = std::getenv("ADAUC_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

struct GenDataArgs {
  std::string kind = "synthetic";
  std::uint64_t seed = 0;
  std::string out;
  std::string test_out;
  // synthetic
  int n = 2000;
  int dim = 8;
  double rho = 0.1;
  double separation = 4.0;
  int test_n = 1000;
  // long-tail subsampling
  std::string images, labels, test_images, test_labels;
  std::vector<std::string> bins, test_bins;
  int n_classes = 10;
  int n_max = 5000;
  double imbalance = 0.01;
  std::string positive_classes = "5,6,7,8,9";
};

int run_gen_data(const GenDataArgs& args, const std::map<std::string, std::string>& echo) {
  (void)echo;  // binary outputs have no comment region
  if (args.kind == "synthetic") {
    if (args.test_out.empty()) {
      const adauc::data::Dataset train = adauc::data::gen_synthetic_longtail(
          args.seed, args.n, args.dim, args.rho, args.separation);
      adauc::data::save_dataset(train, args.out);
      std::cout << "wrote " << args.out << " (n=" << train.size() << ", d=" << train.dim()
                << ", p=" << train.p << ")\n";
      return 0;
    }
    // one generative draw split in two, so train and test share the task
    const adauc::data::Dataset pool = adauc::data::gen_synthetic_longtail(
        args.seed, args.n + args.test_n, args.dim, args.rho, args.separation);
    auto [train, test] = adauc::data::split_rows(pool, static_cast<std::size_t>(args.n));
    adauc::data::save_dataset(train, args.out);
    adauc::data::save_dataset(test, args.test_out);
    std::cout << "wrote " << args.out << " (n=" << train.size() << ", d=" << train.dim()
              << ", p=" << train.p << ") and " << args.test_out << " (n=" << test.size()
              << ")\n";
    return 0;
  }

  adauc::data::LongTailSpec spec;
  spec.n_classes = args.n_classes;
  spec.n_max = args.n_max;
  spec.imbalance = args.imbalance;
  spec.positive_class_ids = parse_class_ids(args.positive_classes);

  adauc::data::ClassPool pool;
  adauc::data::ClassPool test_pool;
  bool have_test = false;
  if (args.kind == "mnist-lt") {
    if (args.images.empty() || args.labels.empty())
      throw std::runtime_error("gen-data mnist-lt needs --images and --labels");
    pool = adauc::data::load_mnist_idx(args.images, args.labels);
    if (!args.test_images.empty() && !args.test_labels.empty()) {
      test_pool = adauc::data::load_mnist_idx(args.test_images, args.test_labels);
      have_test = true;
    }
  } else if (args.kind == "cifar10-lt") {
    if (args.bins.empty()) throw std::runtime_error("gen-data cifar10-lt needs --bin");
    for (std::size_t i = 0; i < args.bins.size(); ++i) {
      adauc::data::ClassPool part = adauc::data::load_cifar10_bin(args.bins[i]);
      if (i == 0) {
        pool = std::move(part);
      } else {
        if (part.dim != pool.dim) throw std::runtime_error("cifar10 batches disagree on dim");
        if (part.classes.size() > pool.classes.size())
          pool.classes.resize(part.classes.size());
        for (std::size_t c = 0; c < part.classes.size(); ++c)
          for (auto& row : part.classes[c]) pool.classes[c].push_back(std::move(row));
      }
    }
    for (std::size_t i = 0; i < args.test_bins.size(); ++i) {
      adauc::data::ClassPool part = adauc::data::load_cifar10_bin(args.test_bins[i]);
      if (i == 0) {
        test_pool = std::move(part);
      } else {
        for (std::size_t c = 0; c < part.classes.size(); ++c)
          for (auto& row : part.classes[c]) test_pool.classes[c].push_back(std::move(row));
      }
      have_test = true;
    }
  } else {
    throw std::runtime_error("unknown gen-data kind '" + args.kind + "'");
  }

  adauc::data::Dataset train = adauc::data::subsample_longtail(pool, spec, args.seed);
  train.name = args.kind;
  adauc::data::save_dataset(train, args.out);
  std::cout << "wrote " << args.out << " (n=" << train.size() << ", d=" << train.dim()
            << ", p=" << train.p << ")\n";
  if (!args.test_out.empty()) {
    if (!have_test) throw std::runtime_error("--test-out given without test inputs");
    // test split: binarized in full, not long-tailed
    adauc::data::Dataset test = adauc::data::binarize_pool(
        test_pool, spec.positive_class_ids, args.seed + 1, args.kind + "-test");
    adauc::data::save_dataset(test, args.test_out);
    std::cout << "wrote " << args.test_out << " (n=" << test.size() << ")\n";
  }
  return 0;
}

struct TrainArgs {
  std::string data;
  std::string eval_data;
  std::string mode = "nt";
  std::string out_model;
  std::string out_history;
  std::string arch = "mlp";  // linear | mlp | widths like 8-16-1
  int hidden = 16;
  adauc::trainer::TrainConfig cfg;
  double eps = 8.0 / 255.0;
  double beta = 2.0 / 255.0;
  int k_steps = 10;
  std::string c_max = "auto";
};

int run_train(TrainArgs& args, const std::map<std::string, std::string>& echo, int threads) {
  const adauc::data::Dataset train_set = adauc::data::load_dataset(args.data);
  adauc::data::Dataset eval_set;
  const adauc::data::Dataset* eval_ptr = nullptr;
  if (!args.eval_data.empty()) {
    eval_set = adauc::data::load_dataset(args.eval_data);
    eval_ptr = &eval_set;
  }

  adauc::model::ScorerArch arch;
  if (args.arch == "linear") {
    arch.widths = {train_set.dim(), 1};
  } else if (args.arch == "mlp") {
    arch.widths = {train_set.dim(), static_cast<std::size_t>(args.hidden), 1};
  } else {
    for (const std::string& token : split_csv_list(args.arch))
      arch.widths.push_back(static_cast<std::size_t>(std::stoul(token)));
    if (arch.widths.empty() || arch.widths.front() != train_set.dim())
      throw std::runtime_error("--arch widths must start with the feature dimension");
  }

  adauc::attack::AttackConfig attack_cfg;
  attack_cfg.eps = args.eps;
  attack_cfg.beta = args.beta;
  attack_cfg.k_steps = args.k_steps;
  if (args.c_max == "auto") {
    attack_cfg.c_max_auto = true;
  } else {
    attack_cfg.c_max_auto = false;
    attack_cfg.c_max = std::stod(args.c_max);
  }

  args.cfg.mode = adauc::trainer::parse_mode(args.mode);
  args.cfg.threads = threads;
  const adauc::trainer::TrainResult result =
      adauc::trainer::train(train_set, eval_ptr, arch, attack_cfg, args.cfg);

  adauc::model::Checkpoint ckpt;
  ckpt.params = result.params;
  ckpt.a = result.aux.a;
  ckpt.b = result.aux.b;
  ckpt.alpha = result.aux.alpha;
  ckpt.gamma = result.ctx.gamma;
  ckpt.p = result.ctx.p;
  adauc::model::save_checkpoint(ckpt, args.out_model);

  if (!args.out_history.empty())
    adauc::eval::write_history_csv(result.history, args.out_history,
                                   adauc::config::echo_lines(echo));
  std::cout << "trained " << args.mode << " for " << args.cfg.epochs << " epochs";
  if (!result.history.records.empty())
    std::cout << " (final clean AUC " << result.history.records.back().auc_clean << ")";
  std::cout << "\n";
  return 0;
}

struct EvalArgs {
  std::vector<std::string> models;  // label=path
  std::string data;
  std::string attacks = "clean,fgsm,pgd-10";
  std::string out;
  double eps = 8.0 / 255.0;
  double beta = 2.0 / 255.0;
  std::uint64_t seed = 0;
  bool random_start = false;
  std::string histogram_out;           // optional score-distribution CSV
  std::string histogram_model;         // label; defaults to the first model
  std::string histogram_attack = "clean";
  int histogram_bins = 20;
};

int run_eval(const EvalArgs& args, const std::map<std::string, std::string>& echo,
             int threads) {
  const adauc::data::Dataset dataset = adauc::data::load_dataset(args.data);
  std::vector<adauc::eval::ModelEntry> entries;
  for (const std::string& spec : args.models) {
    const std::size_t eq = spec.find('=');
    adauc::eval::ModelEntry entry;
    entry.method = "adauc";
    entry.mode = eq == std::string::npos ? spec : spec.substr(0, eq);
    const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    entry.ckpt = adauc::model::load_checkpoint(path);
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw std::runtime_error("eval: at least one --model required");

  adauc::attack::AttackConfig cfg;
  cfg.eps = args.eps;
  cfg.beta = args.beta;
  cfg.c_max_auto = false;
  cfg.random_start = args.random_start;
  const adauc::eval::EvalReport report = adauc::eval::evaluate_grid(
      entries, dataset, split_csv_list(args.attacks), cfg, threads, args.seed);
  adauc::eval::write_report_csv(report, args.out, adauc::config::echo_lines(echo));
  std::cout << "wrote " << args.out << " (" << report.cells.size() << " cells)\n";

  if (!args.histogram_out.empty()) {
    const std::string want = args.histogram_model.empty() ? entries.front().mode
                                                          : args.histogram_model;
    const adauc::eval::ModelEntry* chosen = nullptr;
    for (const auto& entry : entries)
      if (entry.mode == want) chosen = &entry;
    if (chosen == nullptr)
      throw std::runtime_error("eval: --histogram-model '" + want + "' not among --model labels");
    const adauc::eval::ScoreHistogram hist =
        adauc::eval::score_histogram(chosen->ckpt, dataset, args.histogram_attack, cfg,
                                     args.histogram_bins, threads, args.seed);
    adauc::eval::write_histogram_csv(hist, args.histogram_out,
                                     adauc::config::echo_lines(echo));
    std::cout << "wrote " << args.histogram_out << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out,
               const std::map<std::string, std::string>& echo) {
  const std::vector<adauc::oracle::SuiteRow> rows = adauc::oracle::run_suite(suite, seed);
  bool all_pass = true;
  std::string csv;
  for (const std::string& line : adauc::config::echo_lines(echo)) csv += "# " + line + "\n";
  csv += "suite,check,pass,value\n";
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    std::ostringstream value;
    value.precision(12);
    value << row.value;
    std::cout << (row.pass ? "PASS" : "FAIL") << " [" << row.suite << "] " << row.check
              << " (value " << value.str() << ")\n";
    csv += row.suite + "," + row.check + "," + (row.pass ? "1" : "0") + "," + value.str() +
           "\n";
  }
  if (!out.empty()) adauc::io::atomic_write_file(out, csv);
  return all_pass ? 0 : 1;
}

int run_plot(const std::string& history, const std::string& histogram, const std::string& out,
             const std::map<std::string, std::string>& echo) {
  std::vector<adauc::eval::Series> series;
  if (!history.empty()) {
    const adauc::eval::CsvTable table = adauc::eval::read_numeric_csv(history);
    const auto column = [&](const std::string& name) -> int {
      for (std::size_t c = 0; c < table.columns.size(); ++c)
        if (table.columns[c] == name) return static_cast<int>(c);
      return -1;
    };
    const int epoch_col = column("epoch");
    if (epoch_col < 0) throw std::runtime_error(history + ": no epoch column");
    for (const std::string& name : {std::string("auc_clean"), std::string("auc_attacked")}) {
      const int col = column(name);
      if (col < 0) continue;
      adauc::eval::Series s;
      s.name = name;
      for (const auto& row : table.rows) {
        const double v = row[static_cast<std::size_t>(col)];
        if (v >= 0.0) s.points.emplace_back(row[static_cast<std::size_t>(epoch_col)], v);
      }
      if (!s.points.empty()) series.push_back(std::move(s));
    }
  } else if (!histogram.empty()) {
    const adauc::eval::CsvTable table = adauc::eval::read_numeric_csv(histogram);
    if (table.columns.size() < 4) throw std::runtime_error(histogram + ": not a histogram CSV");
    adauc::eval::Series pos, neg;
    pos.name = "positive";
    neg.name = "negative";
    for (const auto& row : table.rows) {
      const double mid = 0.5 * (row[0] + row[1]);
      pos.points.emplace_back(mid, row[2]);
      neg.points.emplace_back(mid, row[3]);
    }
    series.push_back(std::move(pos));
    series.push_back(std::move(neg));
  } else {
    throw std::runtime_error("plot: need --history or --histogram");
  }
  adauc::eval::write_svg_lines(series, out, adauc::config::echo_lines(echo));
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adversarial AUC optimization toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  int threads_flag = 0;
  app.add_option("--config", config_path, "flat key = value config file");
  app.add_option("--threads", threads_flag, "parallel fan-out (ADAUC_THREADS as fallback)");

  // gen-data
  GenDataArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen-data", "construct a dataset file");
  gen_cmd->add_option("--kind", gen.kind, "synthetic|mnist-lt|cifar10-lt")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "output dataset path")->required();
  gen_cmd->add_option("--test-out", gen.test_out, "optional test-set output path");
  gen_cmd->add_option("--n", gen.n, "synthetic: instances")->capture_default_str();
  gen_cmd->add_option("--dim", gen.dim, "synthetic: feature dimension")->capture_default_str();
  gen_cmd->add_option("--rho", gen.rho, "synthetic: positive fraction")->capture_default_str();
  gen_cmd->add_option("--separation", gen.separation, "synthetic: cluster separation (sigmas)")
      ->capture_default_str();
  gen_cmd->add_option("--test-n", gen.test_n, "synthetic: test instances")->capture_default_str();
  gen_cmd->add_option("--images", gen.images, "mnist-lt: train images (IDX)");
  gen_cmd->add_option("--labels", gen.labels, "mnist-lt: train labels (IDX)");
  gen_cmd->add_option("--test-images", gen.test_images, "mnist-lt: test images (IDX)");
  gen_cmd->add_option("--test-labels", gen.test_labels, "mnist-lt: test labels (IDX)");
  gen_cmd->add_option("--bin", gen.bins, "cifar10-lt: training batch file (repeatable)");
  gen_cmd->add_option("--test-bin", gen.test_bins, "cifar10-lt: test batch file (repeatable)");
  gen_cmd->add_option("--n-classes", gen.n_classes, "long-tail: class count")
      ->capture_default_str();
  gen_cmd->add_option("--n-max", gen.n_max, "long-tail: largest class size")
      ->capture_default_str();
  gen_cmd->add_option("--imbalance", gen.imbalance, "long-tail: least/most frequent ratio")
      ->capture_default_str();
  gen_cmd->add_option("--positive-classes", gen.positive_classes,
                      "long-tail: positive class ids, comma separated")
      ->capture_default_str();

  // train
  TrainArgs train;
  CLI::App* train_cmd = app.add_subcommand("train", "run one training mode");
  train_cmd->add_option("--data", train.data, "training dataset")->required();
  train_cmd->add_option("--eval-data", train.eval_data, "held-out dataset for history AUC");
  train_cmd->add_option("--mode", train.mode, "nt|at1|at2")->capture_default_str();
  train_cmd->add_option("--out-model", train.out_model, "checkpoint path")->required();
  train_cmd->add_option("--out-history", train.out_history, "history CSV path");
  train_cmd->add_option("--arch", train.arch, "linear|mlp|comma widths")->capture_default_str();
  train_cmd->add_option("--hidden", train.hidden, "mlp hidden width")->capture_default_str();
  train_cmd->add_option("--epochs", train.cfg.epochs, "training epochs")->capture_default_str();
  train_cmd->add_option("--batch-size", train.cfg.batch_size, "mini-batch size")
      ->capture_default_str();
  train_cmd->add_option("--eta-w", train.cfg.eta_w, "descent step size")->capture_default_str();
  train_cmd->add_option("--eta-alpha", train.cfg.eta_alpha, "ascent step size")
      ->capture_default_str();
  train_cmd->add_option("--weight-decay", train.cfg.weight_decay, "theta weight decay")
      ->capture_default_str();
  train_cmd->add_option("--momentum", train.cfg.momentum, "heavy-ball momentum (0 = plain)")
      ->capture_default_str();
  train_cmd->add_option("--gamma", train.cfg.gamma, "concavity regularizer weight")
      ->capture_default_str();
  train_cmd->add_option("--lr-decay-factor", train.cfg.lr_decay_factor, "step-decay factor")
      ->capture_default_str();
  train_cmd->add_option("--lr-decay-every", train.cfg.lr_decay_every, "epochs between decays")
      ->capture_default_str();
  train_cmd->add_option("--lr-floor", train.cfg.lr_floor, "lower bound for decayed rates")
      ->capture_default_str();
  train_cmd->add_option("--t-prime", train.cfg.t_prime, "control epoch (-1: epochs/2)")
      ->capture_default_str();
  train_cmd->add_option("--seed", train.cfg.seed, "RNG seed")->capture_default_str();
  train_cmd->add_option("--eval-attack", train.cfg.eval_attack,
                        "per-epoch attacked-AUC column, e.g. pgd-10");
  train_cmd->add_option("--eps", train.eps, "l-inf radius")->capture_default_str();
  train_cmd->add_option("--beta", train.beta, "PGD step size")->capture_default_str();
  train_cmd->add_option("--k-steps", train.k_steps, "PGD steps")->capture_default_str();
  train_cmd->add_option("--c-max", train.c_max, "FOSC ceiling (auto = first-batch median)")
      ->capture_default_str();

  // eval
  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "attack-grid evaluation");
  eval_cmd->add_option("--model", eval_args.models, "label=checkpoint (repeatable)")
      ->required();
  eval_cmd->add_option("--data", eval_args.data, "evaluation dataset")->required();
  eval_cmd->add_option("--attacks", eval_args.attacks, "comma list: clean,fgsm,pgd-K")
      ->capture_default_str();
  eval_cmd->add_option("--out", eval_args.out, "report CSV path")->required();
  eval_cmd->add_option("--eps", eval_args.eps, "l-inf radius")->capture_default_str();
  eval_cmd->add_option("--beta", eval_args.beta, "PGD step size")->capture_default_str();
  eval_cmd->add_option("--seed", eval_args.seed, "RNG seed (random starts)")
      ->capture_default_str();
  eval_cmd->add_flag("--random-start", eval_args.random_start,
                     "uniform start inside the eps-ball");
  eval_cmd->add_option("--histogram-out", eval_args.histogram_out,
                       "score-distribution CSV path (optional)");
  eval_cmd->add_option("--histogram-model", eval_args.histogram_model,
                       "model label for the histogram (default: first)");
  eval_cmd->add_option("--histogram-attack", eval_args.histogram_attack,
                       "attack spec for the histogram")
      ->capture_default_str();
  eval_cmd->add_option("--histogram-bins", eval_args.histogram_bins, "histogram bin count")
      ->capture_default_str();

  // verify
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the analytic verifiers");
  verify_cmd->add_option("--suite", verify_suite, "prop1|lemma1|concavity|gradcheck|all")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "pass/fail report CSV path");

  // plot
  std::string plot_history, plot_histogram, plot_out;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render CSV series as SVG");
  plot_cmd->add_option("--history", plot_history, "history CSV input");
  plot_cmd->add_option("--histogram", plot_histogram, "histogram CSV input");
  plot_cmd->add_option("--out", plot_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      const KeyValueConfig file_cfg = KeyValueConfig::from_file(config_path);
      for (CLI::App* sub : {gen_cmd, train_cmd, eval_cmd, verify_cmd, plot_cmd})
        if (sub->parsed()) apply_config_file(sub, file_cfg);
    }
    const int threads = resolve_threads(threads_flag);

    if (gen_cmd->parsed()) return run_gen_data(gen, effective_config(gen_cmd));
    if (train_cmd->parsed()) return run_train(train, effective_config(train_cmd), threads);
    if (eval_cmd->parsed()) return run_eval(eval_args, effective_config(eval_cmd), threads);
    if (verify_cmd->parsed())
      return run_verify(verify_suite, verify_seed, verify_out, effective_config(verify_cmd));
    if (plot_cmd->parsed())
      return run_plot(plot_history, plot_histogram, plot_out, effective_config(plot_cmd));
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
