#include "gencover/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gencover {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::uint64_t parse_uint(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
    parse_fail("expected a nonnegative integer for " + what + ", got '" + tok + "'");
  return std::stoull(tok);
}

// Next line with content, trailing '\r' removed.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

std::uint64_t keyed_value(std::istream& in, std::size_t& lineno, const std::string& key) {
  std::string line;
  if (!next_line(in, line, lineno)) parse_fail("missing '" + key + "' line");
  std::istringstream ss(line);
  std::string k, v, extra;
  ss >> k >> v;
  if (k != key || v.empty() || (ss >> extra))
    parse_fail("line " + std::to_string(lineno) + ": expected '" + key + " <integer>'");
  return parse_uint(v, key);
}

Vec parse_row(const std::string& line, std::size_t len, std::uint32_t q, std::size_t lineno) {
  std::istringstream ss(line);
  Vec row;
  std::string tok;
  while (ss >> tok) {
    const auto v = parse_uint(tok, "an entry");
    if (v >= q)
      parse_fail("line " + std::to_string(lineno) + ": entry " + tok + " outside [0, " +
                 std::to_string(q) + ")");
    row.push_back(static_cast<Elem>(v));
  }
  if (row.size() != len)
    parse_fail("line " + std::to_string(lineno) + ": expected " + std::to_string(len) +
               " entries, got " + std::to_string(row.size()));
  return row;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  return in;
}

}  // namespace

LinearCode parse_code(std::istream& in) {
  std::size_t lineno = 0;
  const auto q = keyed_value(in, lineno, "q");
  const auto n = keyed_value(in, lineno, "n");
  const auto k = keyed_value(in, lineno, "k");
  if (q > 0xFFFFFFFFull) parse_fail("q too large");
  if (!is_prime(q)) throw Error(Errc::NonPrimeCharacteristic, "q = " + std::to_string(q) + " is not prime");
  if (n < 1) parse_fail("n must be positive");
  if (k > n) parse_fail("k must not exceed n");
  std::string line;
  std::string tag;
  if (next_line(in, line, lineno)) std::istringstream(line) >> tag;
  if (tag != "G" || line.find_last_not_of(" \t") != line.find('G'))
    parse_fail("line " + std::to_string(lineno) + ": expected 'G'");
  const auto field = Field::create(static_cast<std::uint32_t>(q));
  std::vector<Vec> rows;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (!next_line(in, line, lineno)) parse_fail("expected " + std::to_string(k) + " rows of G");
    rows.push_back(parse_row(line, n, static_cast<std::uint32_t>(q), lineno));
  }
  if (next_line(in, line, lineno)) parse_fail("line " + std::to_string(lineno) + ": trailing content");
  if (k == 0) return LinearCode::zero_code(field, n);
  return LinearCode::from_generator(Matrix::from_rows(field, n, rows));
}

LinearCode read_code_file(const std::string& path) {
  auto in = open_file(path);
  return parse_code(in);
}

void write_code(std::ostream& out, const LinearCode& code) {
  const Matrix& G = code.generator();
  out << "q " << code.field()->order() << "\nn " << code.n() << "\nk " << code.k() << "\nG\n";
  for (std::size_t i = 0; i < G.rows(); ++i) {
    for (std::size_t j = 0; j < G.cols(); ++j) out << (j ? " " : "") << G(i, j);
    out << "\n";
  }
}

std::vector<Vec> parse_syndromes(std::istream& in, std::size_t len, std::uint32_t q) {
  std::vector<Vec> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.back() == '\r') line.pop_back();
    out.push_back(parse_row(line, len, q, lineno));
  }
  if (out.empty()) parse_fail("syndrome file has no syndromes");
  return out;
}

std::vector<Vec> read_syndrome_file(const std::string& path, std::size_t len, std::uint32_t q) {
  auto in = open_file(path);
  return parse_syndromes(in, len, q);
}

nlohmann::json to_json(const RadiiReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"t", e.t},
                       {"value", e.value},
                       {"method", method_name(e.method)},
                       {"trivial", e.trivial},
                       {"witness_syndromes", e.witness_syndromes},
                       {"witness_columns", e.witness_columns}});
  return {{"n", report.n},
          {"k", report.k},
          {"q", report.q},
          {"method", method_name(report.method)},
          {"entries", entries}};
}

RadiiReport radii_report_from_json(const nlohmann::json& j) {
  try {
    auto method = [](const nlohmann::json& m) {
      auto parsed = parse_method(m.get<std::string>());
      if (!parsed) parse_fail("unknown method " + m.dump());
      return *parsed;
    };
    RadiiReport r;
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.q = j.at("q").get<std::uint32_t>();
    r.method = method(j.at("method"));
    for (const auto& e : j.at("entries")) {
      RadiusEntry entry;
      entry.t = e.at("t").get<std::size_t>();
      entry.value = e.at("value").get<std::size_t>();
      entry.method = method(e.at("method"));
      entry.trivial = e.at("trivial").get<bool>();
      entry.witness_syndromes = e.at("witness_syndromes").get<std::vector<Vec>>();
      entry.witness_columns = e.at("witness_columns").get<std::vector<std::size_t>>();
      r.entries.push_back(std::move(entry));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad radii JSON: ") + e.what());
  }
}

nlohmann::json to_json(const BatchPlan& plan) {
  std::vector<Vec> coeff;
  for (std::size_t i = 0; i < plan.coefficients.rows(); ++i)
    coeff.emplace_back(plan.coefficients.row(i).begin(), plan.coefficients.row(i).end());
  return {{"method", plan_method_name(plan.method)},
          {"size", plan.size()},
          {"columns", plan.columns},
          {"coefficients", coeff}};
}

BatchPlan batch_plan_from_json(const nlohmann::json& j, const FieldPtr& field) {
  try {
    const auto name = j.at("method").get<std::string>();
    if (name != "exact" && name != "greedy") parse_fail("unknown plan method " + name);
    auto columns = j.at("columns").get<std::vector<std::size_t>>();
    const auto rows = j.at("coefficients").get<std::vector<Vec>>();
    for (const auto& r : rows)
      if (r.size() != columns.size()) parse_fail("coefficient row length mismatch");
    Matrix coeff = rows.empty() ? Matrix(field, 0, columns.size())
                                : Matrix::from_rows(field, columns.size(), rows);
    if (j.at("size").get<std::size_t>() != columns.size()) parse_fail("size disagrees with columns");
    return BatchPlan{std::move(columns), std::move(coeff),
                     name == "exact" ? PlanMethod::Exact : PlanMethod::Greedy};
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad plan JSON: ") + e.what());
  }
}

bool operator==(const RadiusEntry& a, const RadiusEntry& b) {
  return a.t == b.t && a.value == b.value && a.method == b.method && a.trivial == b.trivial &&
         a.witness_syndromes == b.witness_syndromes && a.witness_columns == b.witness_columns;
}

bool operator==(const RadiiReport& a, const RadiiReport& b) {
  return a.n == b.n && a.k == b.k && a.q == b.q && a.method == b.method && a.entries == b.entries;
}

bool operator==(const BatchPlan& a, const BatchPlan& b) {
  return a.columns == b.columns && a.method == b.method && a.coefficients == b.coefficients;
}

}  // namespace gencover
