#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace geophase::tools {

using Cell = std::variant<double, std::int64_t, std::string>;
using Row = std::vector<Cell>;

/// Rectangular result table plus an ordered metadata block.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  void add_row(Row row);
  void append(const ResultTable& other);
  void set_meta(const std::string& key, std::string value);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return meta_; }

  /// Numeric cells of column `name` as doubles (integers widened).
  std::vector<double> numeric_column(const std::string& name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// 17 significant digits, so the text parses back to the same double.
std::string format_number(double v);

/// `# key: value` lines, the header row, then the data rows.
void write_csv(std::ostream& out, const ResultTable& table);

/// Largest absolute difference over every numeric cell; throws if the two
/// tables differ in shape or in any non-numeric cell.
double max_numeric_difference(const ResultTable& a, const ResultTable& b);

}  // namespace geophase::tools
