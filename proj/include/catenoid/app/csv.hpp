#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace catenoid::csv {

//! 17 significant digits, '.' decimal, independent of the global locale.
std::string format_double(double v);

//! RFC-4180 field quoting (only when the field needs it).
std::string quote(std::string_view field);

//! Header plus rows; records end in CRLF.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

//! Writes text to path ("-" means stdout); throws std::runtime_error on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace catenoid::csv
