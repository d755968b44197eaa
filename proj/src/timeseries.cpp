#include "smallscale/timeseries.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smallscale {

std::size_t TimeSeries::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::invalid_argument("TimeSeries: no column named '" + name + "'");
}

std::vector<double> TimeSeries::column(const std::string& name) const {
  const std::size_t i = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[i]);
  return out;
}

void TimeSeries::append_row(std::span<const double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("TimeSeries: row width mismatch");
  if (!rows.empty() && !(row[0] > rows.back()[0]))
    throw std::invalid_argument("TimeSeries: t must be strictly increasing");
  rows.emplace_back(row.begin(), row.end());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_timeseries_csv(const std::string& path, const TimeSeries& ts) {
  CsvWriter w(path, ts.columns, ts.metadata);
  for (const auto& r : ts.rows) w.write_row(r);
}

TimeSeries read_timeseries_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  TimeSeries ts;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
          while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.erase(s.begin());
          while (!s.empty() && (s.back() == ' ' || s.back() == '\r'))
            s.pop_back();
        };
        trim(key);
        trim(val);
        ts.metadata[key] = val;
      }
      continue;
    }
    std::stringstream ss(line);
    std::string tok;
    if (!have_header) {
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty() && tok.back() == '\r') tok.pop_back();
        ts.columns.push_back(tok);
      }
      have_header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
    if (row.size() != ts.columns.size())
      throw std::runtime_error("CSV row width mismatch in " + path);
    ts.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("CSV file has no header: " + path);
  return ts;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> columns,
                     std::map<std::string, std::string> metadata)
    : width_(columns.size()), path_(path) {
  file_ = std::fopen(path.c_str(), "wb");
  if (!file_) throw std::runtime_error("cannot open CSV for writing: " + path);
  for (const auto& [k, v] : metadata)
    std::fprintf(file_, "# %s = %s\n", k.c_str(), v.c_str());
  for (std::size_t i = 0; i < columns.size(); ++i)
    std::fprintf(file_, "%s%s", columns[i].c_str(),
                 i + 1 < columns.size() ? "," : "\n");
  std::fflush(file_);
}

CsvWriter::~CsvWriter() {
  if (file_) std::fclose(file_);
}

void CsvWriter::write_row(std::span<const double> row) {
  if (row.size() != width_)
    throw std::invalid_argument("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < row.size(); ++i)
    std::fprintf(file_, "%s%s", format_double(row[i]).c_str(),
                 i + 1 < row.size() ? "," : "\n");
  std::fflush(file_);
}

}  // namespace smallscale
