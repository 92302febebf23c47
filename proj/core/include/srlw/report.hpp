#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace srlw {

using Cell = std::variant<double, long long, std::string>;

/// Fixed 17-significant-digit rendering used for every CSV number.
std::string format_double(double value);

/// Tabular experiment output: ordered rows, named columns, flags such as
/// INFLATION or VIOLATION, and free-form warnings.
class ExperimentReport {
 public:
  ExperimentReport(std::string name, std::vector<std::string> columns);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  void add_row(std::vector<Cell> row);
  const Cell& at(std::size_t row, std::string_view column) const;
  double number(std::size_t row, std::string_view column) const;
  std::vector<double> column_values(std::string_view column) const;

  void set_flag(std::string flag);
  bool has_flag(std::string_view flag) const;
  const std::vector<std::string>& flags() const noexcept { return flags_; }

  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Written as the leading "# ..." comment line of the CSV.
  void set_config_line(std::string line) { config_line_ = std::move(line); }
  const std::string& config_line() const noexcept { return config_line_; }

  std::string to_csv() const;
  void write_csv(const std::filesystem::path& path) const;

 private:
  std::size_t column_index(std::string_view column) const;

  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::string> flags_;
  std::vector<std::string> warnings_;
  std::string config_line_;
};

}  // namespace srlw
