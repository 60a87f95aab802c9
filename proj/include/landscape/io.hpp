#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landscape/prob.hpp"

namespace landscape::io {

enum class Format { csv, dat };

// Locale-independent number rendering: shortest round-trip form with a dot
// decimal separator, identical across runs.
std::string fmt(double v);
std::string fmt_fixed(double v, int decimals);

// Column-oriented table writer. In dat format the header becomes a comment
// line and cells are space separated (two-column plot-data style).
class TableWriter {
  public:
    TableWriter(std::string path, std::vector<std::string> header, Format format = Format::csv);
    ~TableWriter();

    TableWriter& row(const std::vector<std::string>& cells);
    void close();
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::string buffer_;
    std::size_t columns_;
    Format format_;
    bool closed_ = false;
};

std::string extension(Format format);

void write_distribution(const CostDistribution& dist, const std::string& path,
                        Format format = Format::csv);
void write_kernel(const NeighbourKernel& kernel, const std::string& path,
                  Format format = Format::csv);

// Reproducibility manifest for one CLI invocation.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::vector<std::string> outputs;
    double wall_seconds = 0.0;
};

void write_manifest(const RunManifest& manifest, const std::string& path);

}  // namespace landscape::io
