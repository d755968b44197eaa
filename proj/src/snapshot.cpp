#include "smallscale/snapshot.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "smallscale/timeseries.hpp"

namespace smallscale {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

void write_snapshot(const std::string& path, const Snapshot& snap) {
  if (snap.columns.size() != snap.data.size())
    throw std::invalid_argument("write_snapshot: columns/data mismatch");
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open snapshot for writing: " + path);
  std::fprintf(f, "smallscale snapshot %d\n", snap.version);
  std::fprintf(f, "model %s\n", snap.model.c_str());
  std::fprintf(f, "grid %s\n", snap.grid_desc.c_str());
  std::fprintf(f, "t %s\n", format_double(snap.t).c_str());
  std::fprintf(f, "columns");
  for (const auto& c : snap.columns) std::fprintf(f, " %s", c.c_str());
  std::fprintf(f, "\n");
  std::fprintf(f, "count %zu\n", snap.data.empty() ? 0 : snap.data[0].size());
  std::fprintf(f, "endian little\n\n");
  for (const auto& block : snap.data)
    std::fwrite(block.data(), sizeof(double), block.size(), f);
  std::fclose(f);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot: " + path);
  Snapshot s;
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::stringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "smallscale") {
      std::string tag;
      ss >> tag >> s.version;
      if (tag != "snapshot")
        throw std::runtime_error("not a snapshot file: " + path);
    } else if (key == "model") {
      ss >> s.model;
    } else if (key == "grid") {
      std::string rest;
      std::getline(ss, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(rest.begin());
      s.grid_desc = rest;
    } else if (key == "t") {
      ss >> s.t;
    } else if (key == "columns") {
      std::string c;
      while (ss >> c) s.columns.push_back(c);
    } else if (key == "count") {
      ss >> count;
    } else if (key == "endian") {
      std::string e;
      ss >> e;
      if (e != "little")
        throw std::runtime_error("unsupported byte order in " + path);
    } else {
      throw std::runtime_error("unknown snapshot header line: " + line);
    }
  }
  s.data.resize(s.columns.size());
  for (auto& block : s.data) {
    block.resize(count);
    in.read(reinterpret_cast<char*>(block.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
      throw std::runtime_error("snapshot data truncated: " + path);
  }
  return s;
}

}  // namespace smallscale
