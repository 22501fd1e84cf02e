#include "geophase_tools/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace geophase::tools {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ResultTable::add_row(Row row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void ResultTable::append(const ResultTable& other) {
  if (other.columns_ != columns_) throw std::invalid_argument("appending mismatched tables");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

void ResultTable::set_meta(const std::string& key, std::string value) {
  for (auto& kv : meta_) {
    if (kv.first == key) {
      kv.second = std::move(value);
      return;
    }
  }
  meta_.emplace_back(key, std::move(value));
}

std::vector<double> ResultTable::numeric_column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw std::out_of_range("no column " + name);
  const auto idx = static_cast<std::size_t>(it - columns_.begin());
  std::vector<double> out;
  for (const auto& r : rows_) {
    if (const auto* d = std::get_if<double>(&r[idx])) {
      out.push_back(*d);
    } else if (const auto* i = std::get_if<std::int64_t>(&r[idx])) {
      out.push_back(static_cast<double>(*i));
    } else {
      throw std::invalid_argument("column " + name + " is not numeric");
    }
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return quote(std::get<std::string>(c));
}

}  // namespace

void write_csv(std::ostream& out, const ResultTable& table) {
  for (const auto& [k, v] : table.metadata()) {
    std::string line = v;
    std::replace(line.begin(), line.end(), '\n', ' ');
    out << "# " << k << ": " << line << '\n';
  }
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << quote(cols[i]);
  out << '\n';
  for (const auto& r : table.rows()) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << render(r[i]);
    out << '\n';
  }
}

double max_numeric_difference(const ResultTable& a, const ResultTable& b) {
  if (a.columns() != b.columns() || a.rows().size() != b.rows().size()) {
    throw std::invalid_argument("tables differ in shape");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    for (std::size_t c = 0; c < a.columns().size(); ++c) {
      const Cell& x = a.rows()[r][c];
      const Cell& y = b.rows()[r][c];
      if (x.index() != y.index()) throw std::invalid_argument("cell types differ");
      if (const auto* d = std::get_if<double>(&x)) {
        const double e = std::get<double>(y);
        if (std::isnan(*d) != std::isnan(e)) return std::numeric_limits<double>::infinity();
        if (!std::isnan(*d) && *d != e) worst = std::max(worst, std::abs(*d - e));
      } else if (const auto* i = std::get_if<std::int64_t>(&x)) {
        worst = std::max(worst, std::abs(static_cast<double>(*i - std::get<std::int64_t>(y))));
      } else if (x != y) {
        throw std::invalid_argument("text cells differ");
      }
    }
  }
  return worst;
}

}  // namespace geophase::tools
