#include "deviant/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "deviant/error.hpp"
#include "json.hpp"

namespace deviant {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view v) {
  const auto ws = " \t\r\f\v";
  const auto b = v.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = v.find_last_not_of(ws);
  return v.substr(b, e - b + 1);
}

std::optional<double> parse_real(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double out = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return out;
}

[[noreturn]] void parse_fail(const std::string& what, std::size_t where) {
  throw Error(ErrorCode::ParseError, what, where);
}

Series parse_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      const auto v = parse_real(line);
      if (!v) parse_fail("line " + std::to_string(line_no) + ": not a number", line_no);
      values.push_back(*v);
      continue;
    }
    const auto xs = line.substr(0, comma);
    const auto ys = line.substr(comma + 1);
    if (ys.find(',') != std::string_view::npos)
      parse_fail("line " + std::to_string(line_no) + ": expected at most two columns", line_no);
    const auto x = parse_real(xs);
    const auto y = parse_real(ys);
    if (!x || !y) parse_fail("line " + std::to_string(line_no) + ": not a number", line_no);
    if (*x != static_cast<double>(values.size()))
      parse_fail("line " + std::to_string(line_no) + ": x must be " +
                     std::to_string(values.size()),
                 line_no);
    values.push_back(*y);
  }
  return Series(std::move(values));
}

Series parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) parse_fail("expected a JSON array of numbers", 0);
  std::vector<double> values;
  values.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number()) parse_fail("element " + std::to_string(i) + " is not a number", i);
    values.push_back(doc[i].get<double>());
  }
  return Series(std::move(values));
}

std::vector<std::size_t> shifted(std::vector<std::size_t> v, int base) {
  for (auto& x : v) x += static_cast<std::size_t>(base);
  return v;
}

std::vector<std::size_t> mapped(std::span<const std::size_t> idx,
                                std::span<const std::size_t> to_original) {
  std::vector<std::size_t> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(to_original[i]);
  return out;
}

IirSection make_section(const IirReport& r, int base) {
  return {r.sorted_values, shifted(r.sort_permutation, base), r.delta, r.er, r.ihr, r.iir,
          r.cut_rank, r.threshold};
}

json param_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

ParamValue param_from(const json& j, const std::string& key) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  parse_fail("param '" + key + "' has an unsupported type", 0);
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing key '") + key + "'", 0);
  return *it;
}

std::string sign_text(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::None: break;
  }
  return "none";
}

std::string real_text(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, end};
}

}  // namespace

Series parse_input(std::string_view text, InputFormat format) {
  return format == InputFormat::Json ? parse_json(text) : parse_csv(text);
}

InputFormat guess_format(std::string_view path, std::string_view text) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return InputFormat::Json;
  const auto t = trim(text);
  if (!t.empty() && t.front() == '[') return InputFormat::Json;
  return InputFormat::Csv;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

ReportDocument make_report(std::string method, const Series& s, const std::vector<double>& rdd,
                           const std::optional<IirReport>& iir, bool one_based) {
  ReportDocument doc;
  doc.method = std::move(method);
  doc.n = s.size();
  doc.index_base = one_based ? 1 : 0;
  doc.values.assign(s.begin(), s.end());
  doc.rdd = rdd;
  if (iir) {
    doc.iir = make_section(*iir, doc.index_base);
    doc.outliers = shifted(iir->outliers, doc.index_base);
  }
  return doc;
}

ReportDocument make_report(std::string method, const Series& s, const DetectionResult& result,
                           bool one_based) {
  auto doc = make_report(std::move(method), s, result.rdd.rdd, result.iir, one_based);
  doc.outliers = shifted(result.outliers, doc.index_base);
  return doc;
}

ReportDocument make_report(std::string method, const Series& s, const IterationTrace& trace,
                           bool one_based) {
  ReportDocument doc;
  doc.method = std::move(method);
  doc.n = s.size();
  doc.index_base = one_based ? 1 : 0;
  doc.values.assign(s.begin(), s.end());
  doc.converged = trace.converged;

  std::vector<RoundSection> rounds;
  std::vector<std::size_t> all_removed;
  for (const auto& round : trace.rounds) {
    RoundSection rs;
    rs.removed = shifted(round.removed, doc.index_base);
    rs.surviving = shifted(round.surviving, doc.index_base);
    rs.rdd = round.result.rdd.rdd;
    rounds.push_back(std::move(rs));
    all_removed.insert(all_removed.end(), round.removed.begin(), round.removed.end());
  }
  if (!trace.rounds.empty()) {
    const auto& first = trace.rounds.front();
    doc.rdd = first.result.rdd.rdd;
    auto section = make_section(first.result.iir, 0);
    section.sort_permutation =
        shifted(mapped(first.result.iir.sort_permutation, first.surviving), doc.index_base);
    doc.iir = std::move(section);
  }
  std::sort(all_removed.begin(), all_removed.end());
  doc.outliers = shifted(std::move(all_removed), doc.index_base);
  doc.rounds = std::move(rounds);
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  json j;
  j["method"] = doc.method;
  json params = json::object();
  for (const auto& [k, v] : doc.params) params[k] = param_json(v);
  j["params"] = std::move(params);
  j["n"] = doc.n;
  j["index_base"] = doc.index_base;
  j["values"] = doc.values;
  j["rdd"] = doc.rdd;
  if (doc.iir) {
    const auto& s = *doc.iir;
    json ihr = json::array();
    for (const auto& h : s.ihr) ihr.push_back(h ? json(*h) : json(nullptr));
    j["iir"] = {
        {"sorted_values", s.sorted_values},
        {"sort_permutation", s.sort_permutation},
        {"delta", s.delta},
        {"er", s.er},
        {"ihr", std::move(ihr)},
        {"iir", s.iir},
        {"cut_rank", s.cut_rank ? json(*s.cut_rank) : json(nullptr)},
        {"threshold", s.threshold},
    };
  } else {
    j["iir"] = nullptr;
  }
  j["outliers"] = doc.outliers;
  if (doc.rounds) {
    json rounds = json::array();
    for (const auto& r : *doc.rounds)
      rounds.push_back({{"removed", r.removed}, {"surviving", r.surviving}, {"rdd", r.rdd}});
    j["rounds"] = std::move(rounds);
  }
  if (doc.converged) j["converged"] = *doc.converged;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    ReportDocument doc;
    doc.method = field(j, "method").get<std::string>();
    for (const auto& [k, v] : field(j, "params").items()) doc.params[k] = param_from(v, k);
    doc.n = field(j, "n").get<std::size_t>();
    doc.index_base = field(j, "index_base").get<int>();
    doc.values = field(j, "values").get<std::vector<double>>();
    doc.rdd = field(j, "rdd").get<std::vector<double>>();
    if (const auto& s = field(j, "iir"); !s.is_null()) {
      IirSection sec;
      sec.sorted_values = field(s, "sorted_values").get<std::vector<double>>();
      sec.sort_permutation = field(s, "sort_permutation").get<std::vector<std::size_t>>();
      sec.delta = field(s, "delta").get<std::vector<double>>();
      sec.er = field(s, "er").get<std::vector<double>>();
      for (const auto& h : field(s, "ihr"))
        sec.ihr.push_back(h.is_null() ? std::nullopt : std::optional<double>(h.get<double>()));
      sec.iir = field(s, "iir").get<std::vector<double>>();
      if (const auto& c = field(s, "cut_rank"); !c.is_null()) sec.cut_rank = c.get<std::size_t>();
      sec.threshold = field(s, "threshold").get<double>();
      doc.iir = std::move(sec);
    }
    doc.outliers = field(j, "outliers").get<std::vector<std::size_t>>();
    if (const auto it = j.find("rounds"); it != j.end()) {
      std::vector<RoundSection> rounds;
      for (const auto& r : *it)
        rounds.push_back({field(r, "removed").get<std::vector<std::size_t>>(),
                          field(r, "surviving").get<std::vector<std::size_t>>(),
                          field(r, "rdd").get<std::vector<double>>()});
      doc.rounds = std::move(rounds);
    }
    if (const auto it = j.find("converged"); it != j.end()) doc.converged = it->get<bool>();
    return doc;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed report: ") + e.what(), 0);
  }
}

std::string to_csv(const ReportDocument& doc) {
  std::vector<bool> flagged(doc.values.size(), false);
  for (auto o : doc.outliers) {
    const auto i = o - static_cast<std::size_t>(doc.index_base);
    if (i < flagged.size()) flagged[i] = true;
  }
  std::string out = "index,value,score,outlier\n";
  for (std::size_t i = 0; i < doc.values.size(); ++i) {
    const double score = i < doc.rdd.size() ? doc.rdd[i] : doc.values[i];
    out += std::to_string(i + static_cast<std::size_t>(doc.index_base));
    out += ',' + real_text(doc.values[i]) + ',' + real_text(score) + ',';
    out += flagged[i] ? "1\n" : "0\n";
  }
  return out;
}

std::string to_json(const std::optional<SubsequenceResult>& result, const Series& s,
                    const std::map<std::string, ParamValue>& params, bool one_based) {
  const int base = one_based ? 1 : 0;
  json j;
  j["method"] = "lkts";
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = param_json(v);
  j["params"] = std::move(p);
  j["n"] = s.size();
  j["index_base"] = base;
  j["found"] = result.has_value();
  if (result) {
    j["indices"] = shifted(result->indices, base);
    std::vector<double> vals;
    for (auto i : result->indices) vals.push_back(s[i]);
    j["values"] = vals;
    j["length"] = result->length();
    j["sign"] = sign_text(result->sign);
    j["turns"] = result->turns;
  } else {
    j["indices"] = json::array();
    j["length"] = 0;
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const std::optional<SubsequenceResult>& result, const Series& s,
                   bool one_based) {
  std::vector<bool> in(s.size(), false);
  if (result)
    for (auto i : result->indices) in[i] = true;
  std::string out = "index,value,selected\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += std::to_string(i + (one_based ? 1 : 0)) + ',' + real_text(s[i]) + ',';
    out += in[i] ? "1\n" : "0\n";
  }
  return out;
}

}  // namespace deviant
