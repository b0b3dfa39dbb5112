#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deviant/lkts.hpp"
#include "deviant/pipeline.hpp"
#include "deviant/series.hpp"

namespace deviant {

enum class InputFormat { Csv, Json };

/// CSV: one value per line, '#' starts a comment, blank lines are skipped.
/// The two-column form "x,y" is accepted when x runs 0, 1, 2, ... in order.
/// JSON: a flat array of numbers.
/// Throws ParseError (position = 1-based line for CSV, byte offset for JSON),
/// EmptyInput, or NonFiniteValue.
Series parse_input(std::string_view text, InputFormat format);

/// JSON when the path ends in ".json" or the text starts with '['; else CSV.
InputFormat guess_format(std::string_view path, std::string_view text);

/// Reads a whole file, or standard input for "-". Throws IoError.
std::string read_source(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

using ParamValue = std::variant<std::string, double, std::int64_t, bool>;

struct IirSection {
  std::vector<double> sorted_values;
  std::vector<std::size_t> sort_permutation;
  std::vector<double> delta;
  std::vector<double> er;
  std::vector<std::optional<double>> ihr;
  std::vector<double> iir;
  std::optional<std::size_t> cut_rank;
  double threshold = 0.0;
  friend bool operator==(const IirSection&, const IirSection&) = default;
};

struct RoundSection {
  std::vector<std::size_t> removed;
  std::vector<std::size_t> surviving;  ///< points scored this round
  std::vector<double> rdd;             ///< aligned with `surviving`
  friend bool operator==(const RoundSection&, const RoundSection&) = default;
};

/// Serializable result of one CLI run. Index-valued fields hold displayed
/// indices: shifted by `index_base` (0 or 1). Rank-valued fields (cut_rank)
/// are never shifted.
struct ReportDocument {
  std::string method;
  std::map<std::string, ParamValue> params;
  std::size_t n = 0;
  int index_base = 0;
  std::vector<double> values;
  std::vector<double> rdd;
  std::optional<IirSection> iir;
  std::vector<std::size_t> outliers;
  std::optional<std::vector<RoundSection>> rounds;
  std::optional<bool> converged;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(std::string method, const Series& s, const std::vector<double>& rdd,
                           const std::optional<IirReport>& iir, bool one_based);
ReportDocument make_report(std::string method, const Series& s, const DetectionResult& result,
                           bool one_based);
ReportDocument make_report(std::string method, const Series& s, const IterationTrace& trace,
                           bool one_based);

std::string to_json(const ReportDocument& doc);
/// Throws ParseError on malformed or incomplete documents.
ReportDocument report_from_json(std::string_view text);

/// One row per point: index,value,score,outlier. The score is the rdd, or the
/// raw value when no view was applied.
std::string to_csv(const ReportDocument& doc);

std::string to_json(const std::optional<SubsequenceResult>& result, const Series& s,
                    const std::map<std::string, ParamValue>& params, bool one_based);
std::string to_csv(const std::optional<SubsequenceResult>& result, const Series& s,
                   bool one_based);

}  // namespace deviant
