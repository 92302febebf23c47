#include "srlw/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "srlw/errors.hpp"

namespace srlw {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ExperimentReport::ExperimentReport(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

void ExperimentReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw PreconditionError("ExperimentReport: row width does not match the header");
  rows_.push_back(std::move(row));
}

std::size_t ExperimentReport::column_index(std::string_view column) const {
  auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end())
    throw PreconditionError("ExperimentReport: unknown column " + std::string(column));
  return static_cast<std::size_t>(std::distance(columns_.begin(), it));
}

const Cell& ExperimentReport::at(std::size_t row, std::string_view column) const {
  return rows_.at(row).at(column_index(column));
}

double ExperimentReport::number(std::size_t row, std::string_view column) const {
  const Cell& c = at(row, column);
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> ExperimentReport::column_values(std::string_view column) const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(number(r, column));
  return out;
}

void ExperimentReport::set_flag(std::string flag) {
  if (!has_flag(flag)) flags_.push_back(std::move(flag));
}

bool ExperimentReport::has_flag(std::string_view flag) const {
  return std::find(flags_.begin(), flags_.end(), flag) != flags_.end();
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "# " << (config_line_.empty() ? name_ : config_line_) << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              os << format_double(v);
            else
              os << v;
          },
          row[i]);
    }
    os << '\n';
  }
  return os.str();
}

void ExperimentReport::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << to_csv();
}

}  // namespace srlw
