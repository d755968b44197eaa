#pragma once

#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace smallscale {

// Column-named time series. The first column is always "t" and must be
// strictly increasing.
struct TimeSeries {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> metadata;

  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  void append_row(std::span<const double> row);
};

// 17 significant digits: exact round trip for 64-bit values.
std::string format_double(double v);

void write_timeseries_csv(const std::string& path, const TimeSeries& ts);
TimeSeries read_timeseries_csv(const std::string& path);

// Streams rows to disk as they are produced; every row is flushed so a
// crashed run leaves a readable file.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> columns,
            std::map<std::string, std::string> metadata);
  ~CsvWriter();
  void write_row(std::span<const double> row);

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

 private:
  std::FILE* file_ = nullptr;
  std::size_t width_ = 0;
  std::string path_;
};

}  // namespace smallscale
