#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "coarse/errors.hpp"
#include "coarse/inertness.hpp"
#include "coarse/io.hpp"
#include "coarse/ops.hpp"
#include "coarse/partition.hpp"
#include "coarse/representative.hpp"
#include "coarse/sequence.hpp"
#include "coarse/stpetersburg.hpp"

namespace coarse::cli {

namespace {

// Raised for flag combinations CLI11 cannot express; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PartitionFlags {
  bool fibonacci = false;
  std::optional<std::uint64_t> width;
  std::optional<std::string> eps;
  std::optional<std::string> bounds;
  std::optional<std::string> singleton;
  std::optional<std::string> spec_file;
  bool real = false;
  std::string rep = "median";
  std::string ties = "membership";
};

void add_partition_flags(CLI::App* app, PartitionFlags& f) {
  app->add_flag("--fibonacci", f.fibonacci, "Fibonacci-width integer partition");
  app->add_option("--width", f.width, "Fixed-width integer partition")
      ->check(CLI::PositiveNumber);
  app->add_option("--eps", f.eps, "Epsilon-growth real partition, e.g. 10 or 7/2");
  app->add_option("--bounds", f.bounds, "Explicit ascending boundaries, e.g. 0,3,6,17");
  app->add_option("--singleton", f.singleton, "Singleton partition of the lattice of this step");
  app->add_option("--spec", f.spec_file, "Partition spec JSON file")->check(CLI::ExistingFile);
  app->add_flag("--real", f.real, "Real domain for --bounds / --singleton");
  app->add_option("--rep", f.rep, "Representative policy")
      ->check(CLI::IsMember({"median", "min", "max"}));
  app->add_option("--ties", f.ties, "Tie rule for sums on a shared real boundary")
      ->check(CLI::IsMember({"membership", "strict"}));
}

std::vector<Number> split_numbers(const std::string& list) {
  std::vector<Number> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  return out;
}

PartitionSpec spec_from_flags(const PartitionFlags& f) {
  const int chosen = int(f.fibonacci) + int(f.width.has_value()) + int(f.eps.has_value()) +
                     int(f.bounds.has_value()) + int(f.singleton.has_value()) +
                     int(f.spec_file.has_value());
  if (chosen != 1) {
    throw UsageError(
        "exactly one of --fibonacci, --width, --eps, --bounds, --singleton, --spec is required");
  }
  const Domain domain = f.real ? Domain::Reals : Domain::Integers;
  if (f.fibonacci) return {Fibonacci{}, Domain::Integers};
  if (f.width) return {FixedWidth{*f.width}, Domain::Integers};
  if (f.eps) return {EpsilonGrowth{parse_number(*f.eps)}, Domain::Reals};
  if (f.bounds) return {ExplicitBounds{split_numbers(*f.bounds)}, domain};
  if (f.singleton) return {Singleton{parse_number(*f.singleton)}, domain};
  std::ifstream file(*f.spec_file);
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::exception& e) {
    throw ParseError(*f.spec_file + ": " + e.what());
  }
  return spec_from_json(j);
}

CoarseContext context_from_flags(const PartitionFlags& f) {
  return CoarseContext(Partition(spec_from_flags(f)), parse_policy(f.rep), parse_ties(f.ties));
}

// Left-aligned text table.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& r : rows) widths[c] = std::max(widths[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 == cells.size()) {
        out << cells[c] << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(widths[c])) << cells[c] << "  ";
      }
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---------------------------------------------------------------- partition

struct PartitionCmd {
  PartitionFlags flags;
  std::uint64_t cells = 10;
  std::string format = "table";
};

int cmd_partition(const PartitionCmd& cmd, std::ostream& out) {
  const Partition p(spec_from_flags(cmd.flags));
  const RepPolicy policy = parse_policy(cmd.flags.rep);
  std::uint64_t n = cmd.cells;
  if (auto count = p.cell_count()) n = std::min<std::uint64_t>(n, *count);

  if (cmd.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (CellIndex i = 1; i <= n; ++i) {
      const Cell c = p.cell_at(i);
      const std::string extent = c.domain == Domain::Integers
                                     ? c.size().get_str()
                                     : to_decimal(Number(c.upper - c.lower));
      rows.push_back({std::to_string(i), describe(c), extent,
                      to_decimal(representative(c, policy)),
                      to_decimal(margin_pos(c, policy)), to_decimal(margin_neg(c, policy))});
    }
    print_table(out, {"cell", "bounds", p.domain() == Domain::Integers ? "size" : "width", "rep",
                      "mu+", "mu-"},
                rows);
    return kOk;
  }
  if (cmd.format == "csv") {
    out << "cell,lower,upper,lower_closed,upper_closed,rep,margin_pos,margin_neg\n";
  }
  for (CellIndex i = 1; i <= n; ++i) {
    const Cell c = p.cell_at(i);
    if (cmd.format == "json") {
      Json j;
      j["cell"] = i;
      j["lower"] = to_string(c.lower);
      j["upper"] = to_string(c.upper);
      j["lower_closed"] = c.lower_closed;
      j["upper_closed"] = c.upper_closed;
      j["rep"] = to_string(representative(c, policy));
      j["margin_pos"] = to_string(margin_pos(c, policy));
      j["margin_neg"] = to_string(margin_neg(c, policy));
      out << j.dump() << '\n';
    } else {
      out << i << ',' << to_string(c.lower) << ',' << to_string(c.upper) << ','
          << (c.lower_closed ? "true" : "false") << ',' << (c.upper_closed ? "true" : "false")
          << ',' << to_string(representative(c, policy)) << ','
          << to_string(margin_pos(c, policy)) << ',' << to_string(margin_neg(c, policy)) << '\n';
    }
  }
  return kOk;
}

// --------------------------------------------------------------------- fold

struct FoldCmd {
  PartitionFlags flags;
  std::string input = "-";
  std::string format = "json";
};

std::vector<Number> read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_numbers(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  return read_numbers(file);
}

void print_trace(std::ostream& out, const FoldTrace& trace, const std::string& format) {
  if (format == "json") {
    write_trace_jsonl(out, trace);
  } else if (format == "csv") {
    write_trace_csv(out, trace);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : trace) {
      rows.push_back({std::to_string(s.n), to_decimal(s.x), std::to_string(s.x_cell),
                      to_decimal(s.s), std::to_string(s.s_cell), s.absorbed ? "yes" : "no"});
    }
    print_table(out, {"n", "x", "x_cell", "s", "s_cell", "absorbed"}, rows);
  }
}

int cmd_fold(const FoldCmd& cmd, std::istream& in, std::ostream& out) {
  const CoarseContext ctx = context_from_flags(cmd.flags);
  const auto xs = read_input(cmd.input, in);
  if (xs.empty()) throw Error("empty sequence");
  print_trace(out, coarse_fold(ctx, xs), cmd.format);
  return kOk;
}

// -------------------------------------------------------------------- inert

struct InertCmd {
  PartitionFlags flags;
  std::optional<std::string> constant;
  bool harmonic = false;
  std::vector<std::string> geometric;
  std::optional<std::string> from_file;
  std::uint64_t horizon = 1000;
  std::optional<std::string> bound;
};

int cmd_inert(const InertCmd& cmd, std::istream& in, std::ostream& out) {
  const int chosen = int(cmd.constant.has_value()) + int(cmd.harmonic) +
                     int(!cmd.geometric.empty()) + int(cmd.from_file.has_value());
  if (chosen != 1) {
    throw UsageError("exactly one of --const, --harmonic, --geometric, --from-file is required");
  }
  const CoarseContext ctx = context_from_flags(cmd.flags);
  Sequence gen;
  if (cmd.constant) {
    gen = constant(parse_number(*cmd.constant));
  } else if (cmd.harmonic) {
    gen = harmonic();
  } else if (!cmd.geometric.empty()) {
    gen = geometric(parse_number(cmd.geometric[0]), parse_number(cmd.geometric[1]));
  } else {
    auto xs = read_input(*cmd.from_file, in);
    if (xs.empty()) throw Error("empty sequence");
    gen = from_values(std::move(xs));
  }
  std::optional<Number> bound;
  if (cmd.bound) bound = parse_number(*cmd.bound);

  const InertVerdict v = detect_inert_stream(ctx, gen, cmd.horizon, bound);
  out << verdict_to_json(v).dump() << '\n';
  return is_inert(v) ? kOk : kNoVerdict;
}

// ------------------------------------------------------------------- stpete

struct StpeteCmd {
  std::string eps;
  std::uint64_t depth = 200;
  bool allow_small_eps = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned truncation = 64;
  std::string format = "table";
};

std::string verdict_text(const InertVerdict& v) {
  if (const auto* a = std::get_if<InertAt>(&v)) {
    return "inert at cell " + std::to_string(a->cell) + " from step " + std::to_string(a->step) +
           ", value " + to_decimal(a->value) + (a->certified ? " (certified)" : " (observed)");
  }
  const auto& n = std::get<NoVerdict>(v);
  return "no verdict within " + std::to_string(n.horizon) + " steps (" +
         std::to_string(n.cell_advances) + " cell advances)";
}

int cmd_stpete(const StpeteCmd& cmd, std::ostream& out) {
  const Number eps = parse_number(cmd.eps);
  if (eps < 2 && !cmd.allow_small_eps) {
    throw Error("--eps must be at least 2 for the inert-index formula (see --allow-small-eps)");
  }
  if (cmd.truncation == 0) throw Error("--truncation must be positive");

  std::optional<Comparison> comparison;
  ValuationReport report;
  if (cmd.trials > 0) {
    comparison = compare_valuations(eps, Gamble{cmd.truncation}, cmd.trials, cmd.seed, cmd.depth);
    report = comparison->expected;
  } else {
    report = coarse_value(eps, cmd.depth);
  }

  if (cmd.format == "json") {
    Json j = report_to_json(report);
    if (comparison) j["sampled"] = sampled_to_json(comparison->sampled);
    out << j.dump() << '\n';
    return kOk;
  }

  std::vector<std::vector<std::string>> rows = {
      {"epsilon", to_decimal(report.epsilon)},
      {"rounds folded", std::to_string(report.depth)},
      {"classical sum", to_decimal(report.classical_partial_sums.back()) + " (diverges)"},
      {"inert index (formula)", std::to_string(report.formula_index)},
      {"inert index (strict scan)",
       report.scan_index ? std::to_string(*report.scan_index) : "none"},
      {"agreement", report.agreement ? "yes" : "no"},
      {"coarse fold (strict margin)", verdict_text(report.coarse_verdict)},
      {"coarse fold (membership)", verdict_text(report.membership_verdict)},
  };
  if (comparison) {
    const auto& s = comparison->sampled;
    rows.push_back({"sampled trials", std::to_string(s.trials)});
    rows.push_back({"sampled seed", std::to_string(s.seed) + " (" + std::string(kRngName) + ")"});
    rows.push_back({"sampled truncation", std::to_string(s.truncation)});
    rows.push_back({"sampled mean payoff", to_decimal(s.mean)});
    rows.push_back({"sampled coarse fold", verdict_text(s.verdict) + " [exploratory]"});
  }
  print_table(out, {"quantity", "value"}, rows);
  return kOk;
}

}  // namespace

std::vector<Number> read_numbers(std::istream& in) {
  std::vector<Number> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_number(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Coarse-grained partitions, coarse addition and inertness detection", "coarse"};
  app.require_subcommand(1);

  PartitionCmd partition;
  auto* partition_app = app.add_subcommand("partition", "Print the cells of a partition");
  add_partition_flags(partition_app, partition.flags);
  partition_app->add_option("--cells", partition.cells, "Number of cells to print")
      ->check(CLI::PositiveNumber);
  partition_app->add_option("--format", partition.format)
      ->check(CLI::IsMember({"table", "json", "csv"}));

  FoldCmd fold;
  auto* fold_app = app.add_subcommand("fold", "Left-associative coarse fold of an input file");
  add_partition_flags(fold_app, fold.flags);
  fold_app->add_option("--input", fold.input, "Input file, one rational per line ('-' = stdin)");
  fold_app->add_option("--format", fold.format)->check(CLI::IsMember({"json", "csv", "table"}));

  InertCmd inert;
  auto* inert_app = app.add_subcommand("inert", "Inertness detection on a generated stream");
  add_partition_flags(inert_app, inert.flags);
  inert_app->add_option("--const", inert.constant, "Constant stream c");
  inert_app->add_flag("--harmonic", inert.harmonic, "Stream 1/t");
  inert_app->add_option("--geometric", inert.geometric, "Stream a*r^(t-1)")->expected(2);
  inert_app->add_option("--from-file", inert.from_file, "Finite stream from a file ('-' = stdin)");
  inert_app->add_option("--horizon", inert.horizon, "Maximum number of steps")
      ->check(CLI::PositiveNumber);
  inert_app->add_option("--bound", inert.bound, "Certified upper bound on every input");

  StpeteCmd stpete;
  auto* stpete_app = app.add_subcommand("stpete", "Coarse valuation of the St. Petersburg game");
  stpete_app->add_option("--eps", stpete.eps, "Partition parameter epsilon")->required();
  stpete_app->add_option("--depth", stpete.depth, "Rounds of expected increments to fold")
      ->check(CLI::PositiveNumber);
  stpete_app->add_flag("--allow-small-eps", stpete.allow_small_eps, "Permit epsilon < 2");
  stpete_app->add_option("--trials", stpete.trials, "Monte Carlo trials (0 = none)");
  stpete_app->add_option("--seed", stpete.seed, "Monte Carlo seed");
  stpete_app->add_option("--truncation", stpete.truncation, "Gamble truncation depth");
  stpete_app->add_option("--format", stpete.format)->check(CLI::IsMember({"table", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto used = app.get_subcommands();
    out << (used.empty() ? app.help() : used.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*partition_app) return cmd_partition(partition, out);
    if (*fold_app) return cmd_fold(fold, in, out);
    if (*inert_app) return cmd_inert(inert, in, out);
    if (*stpete_app) return cmd_stpete(stpete, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}

}  // namespace coarse::cli
