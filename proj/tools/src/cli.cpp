#include "deviant_cli/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "deviant/error.hpp"
#include "deviant/io.hpp"
#include "deviant/lkts.hpp"
#include "deviant/pipeline.hpp"
#include "deviant/plot.hpp"
#include "deviant/view_curve.hpp"

namespace deviant::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string input_format = "auto";
  std::string format = "json";
  std::string output;
  std::string plot;
  bool one_based = false;
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  double threshold = kDefaultThreshold;
  double bandwidth = kDefaultBandwidth;
  std::string view = "gaussian";
  std::string offset = "perpendicular";
  std::optional<int> turns;
  std::string sign = "any";

  bool iterative = false;
  std::optional<std::size_t> max_rounds;

  std::optional<std::size_t> anchor;
  bool at_most = false;
};

/// Raised for option combinations CLI11 cannot check on its own.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, SignFilter>& sign_names() {
  static const std::map<std::string, SignFilter> names{
      {"+", SignFilter::Plus},    {"plus", SignFilter::Plus}, {"-", SignFilter::Minus},
      {"minus", SignFilter::Minus}, {"any", SignFilter::Any}};
  return names;
}

std::string sign_label(SignFilter f) {
  switch (f) {
    case SignFilter::Plus: return "+";
    case SignFilter::Minus: return "-";
    case SignFilter::Any: break;
  }
  return "any";
}

void add_io_options(CLI::App& cmd, Options& o) {
  cmd.add_option("input", o.input, "Input file (CSV or JSON array); '-' reads stdin");
  cmd.add_option("--input-format", o.input_format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  cmd.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("-o,--output", o.output, "Write the report here instead of stdout");
  cmd.add_flag("--one-based", o.one_based, "Display indices starting at 1");
  cmd.add_option("--seed", o.seed, "Seed for randomized generators (scoring is deterministic)");
}

void add_scoring_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--view", o.view, "Evaluation view")
      ->check(CLI::IsMember({"linear", "gaussian", "curve"}));
  cmd.add_option("--bandwidth", o.bandwidth, "Angle similarity bandwidth (degrees squared)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--offset", o.offset, "Linear view offset")
      ->check(CLI::IsMember({"perpendicular", "vertical"}));
  cmd.add_option("--turns", o.turns, "Curve pattern turn count")->check(CLI::NonNegativeNumber);
  cmd.add_option("--sign", o.sign, "Curve pattern sign: +, - or any")
      ->check(CLI::IsMember({"+", "-", "plus", "minus", "any"}));
  cmd.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--plot", o.plot, "Write an SVG plot");
}

void add_threshold(CLI::App& cmd, Options& o) {
  cmd.add_option("--threshold", o.threshold, "IIR cut threshold")->check(CLI::PositiveNumber);
}

Series load(const Options& o) {
  const auto text = read_source(o.input);
  InputFormat fmt = guess_format(o.input, text);
  if (o.input_format == "csv") fmt = InputFormat::Csv;
  if (o.input_format == "json") fmt = InputFormat::Json;
  return parse_input(text, fmt);
}

ViewSpec make_view(const Options& o, const Series& s) {
  ViewSpec v;
  v.bandwidth = o.bandwidth;
  v.offset = o.offset == "vertical" ? OffsetMode::Vertical : OffsetMode::Perpendicular;
  if (o.view == "linear") {
    v.kind = ViewKind::Linear;
  } else if (o.view == "gaussian") {
    v.kind = ViewKind::Gaussian;
  } else {
    v.kind = ViewKind::Curve;
    if (!o.turns) {
      const auto hint = suggest_pattern(s);
      throw ConfigError("--view curve needs --turns (smoothed data suggests --turns " +
                        std::to_string(hint.turns) + ")");
    }
    v.pattern = {sign_names().at(o.sign), *o.turns};
  }
  return v;
}

std::map<std::string, ParamValue> scoring_params(const Options& o, const ViewSpec& v) {
  std::map<std::string, ParamValue> p;
  p["view"] = to_string(v.kind);
  if (v.kind != ViewKind::Gaussian) p["bandwidth"] = v.bandwidth;
  if (v.kind == ViewKind::Linear) p["offset"] = o.offset;
  if (v.kind == ViewKind::Curve) {
    p["pattern_sign"] = sign_label(v.pattern.sign);
    p["pattern_turns"] = static_cast<std::int64_t>(v.pattern.turns);
  }
  return p;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty())
    out << text;
  else
    write_file(o.output, text);
}

void emit_report(const Options& o, const ReportDocument& doc, std::ostream& out) {
  emit(o, o.format == "csv" ? to_csv(doc) : to_json(doc), out);
}

void run_iir(const Options& o, std::ostream& out) {
  const auto s = load(o);
  const auto report = iir_profile(s.values(), o.threshold);
  auto doc = make_report("iir", s, {}, report, o.one_based);
  doc.params["threshold"] = o.threshold;
  emit_report(o, doc, out);
  if (!o.plot.empty()) write_file(o.plot, render_svg(s, report.outliers, {}, {}));
}

void run_rdd(const Options& o, std::ostream& out) {
  const auto s = load(o);
  const auto view = make_view(o, s);
  const auto r = score(s, view, ExecutionPolicy{o.workers});
  auto doc = make_report("rdd", s, r.rdd, std::nullopt, o.one_based);
  doc.params = scoring_params(o, view);
  emit_report(o, doc, out);
  if (!o.plot.empty()) write_file(o.plot, render_svg(s, {}, r.rdd, {}));
}

void run_detect(const Options& o, std::ostream& out) {
  const auto s = load(o);
  const auto view = make_view(o, s);
  const ExecutionPolicy policy{o.workers};
  if (o.iterative) {
    const auto trace = detect_iterative(s, view, o.threshold, o.max_rounds, policy);
    auto doc = make_report("detect", s, trace, o.one_based);
    doc.params = scoring_params(o, view);
    doc.params["threshold"] = o.threshold;
    doc.params["iterative"] = true;
    if (o.max_rounds) doc.params["max_rounds"] = static_cast<std::int64_t>(*o.max_rounds);
    emit_report(o, doc, out);
    if (!o.plot.empty()) {
      std::vector<std::size_t> removed;
      for (const auto& r : trace.rounds) removed.insert(removed.end(), r.removed.begin(), r.removed.end());
      const auto rdd = trace.rounds.empty() ? std::vector<double>{}
                                            : trace.rounds.front().result.rdd.rdd;
      write_file(o.plot, render_svg(s, removed, rdd, {}));
    }
    return;
  }
  const auto result = detect(s, view, o.threshold, policy);
  auto doc = make_report("detect", s, result, o.one_based);
  doc.params = scoring_params(o, view);
  doc.params["threshold"] = o.threshold;
  emit_report(o, doc, out);
  if (!o.plot.empty()) render_plot(s, result, o.plot);
}

void run_lkts(const Options& o, std::ostream& out) {
  const auto s = load(o);
  if (!o.turns) throw ConfigError("lkts needs --turns");
  LktsOptions opts{sign_names().at(o.sign), o.at_most};
  std::optional<std::size_t> anchor = o.anchor;
  if (anchor && o.one_based) {
    if (*anchor == 0) throw ConfigError("--anchor is 1-based with --one-based");
    --*anchor;
  }
  const auto result = anchor ? lkts_through(s, *anchor, *o.turns, opts)
                             : lkts_from_start(s, *o.turns, opts);
  std::map<std::string, ParamValue> params{
      {"turns", static_cast<std::int64_t>(*o.turns)},
      {"sign", sign_label(opts.sign)},
      {"at_most", o.at_most}};
  if (o.anchor) params["anchor"] = static_cast<std::int64_t>(*o.anchor);
  emit(o, o.format == "csv" ? to_csv(result, s, o.one_based)
                            : to_json(result, s, params, o.one_based),
       out);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NegativeTurns:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::InvalidView:
      return kExitConfig;
    default:
      return kExitInput;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Outlier detection by relative deviation degree and the IIR cut", "deviant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "deviant 0.1.0");

  auto* iir = app.add_subcommand("iir", "Cut the raw values directly with the IIR rule");
  add_io_options(*iir, o);
  add_threshold(*iir, o);
  iir->add_option("--plot", o.plot, "Write an SVG plot");

  auto* rdd = app.add_subcommand("rdd", "Score every point under a view");
  add_io_options(*rdd, o);
  add_scoring_options(*rdd, o);

  auto* det = app.add_subcommand("detect", "Score under a view, then cut with the IIR rule");
  add_io_options(*det, o);
  add_scoring_options(*det, o);
  add_threshold(*det, o);
  det->add_flag("--iterative", o.iterative, "Remove outliers and rescore until none remain");
  det->add_option("--max-rounds", o.max_rounds, "Round limit for --iterative")
      ->check(CLI::PositiveNumber);

  auto* lk = app.add_subcommand("lkts", "Longest subsequence with a given number of turns");
  add_io_options(*lk, o);
  lk->add_option("--turns", o.turns, "Turn count")->required()->check(CLI::NonNegativeNumber);
  lk->add_option("--anchor", o.anchor, "Index the subsequence must pass through");
  lk->add_option("--sign", o.sign, "First extremum type: +, - or any")
      ->check(CLI::IsMember({"+", "-", "plus", "minus", "any"}));
  lk->add_flag("--at-most", o.at_most, "Allow fewer turns than requested");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*iir) run_iir(o, out);
    else if (*rdd) run_rdd(o, out);
    else if (*det) run_detect(o, out);
    else run_lkts(o, out);
  } catch (const ConfigError& e) {
    err << "deviant: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "deviant: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"deviant"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace deviant::cli
