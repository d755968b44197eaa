#pragma once

#include <string>
#include <vector>

namespace smallscale {

// Field snapshot: a text header terminated by a blank line, then raw
// little-endian 64-bit floats in row-major order, one block per column.
struct Snapshot {
  int version = 1;
  std::string model;
  std::string grid_desc;  // e.g. "polar 128 256"
  double t = 0.0;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // one flat array per column
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

}  // namespace smallscale
