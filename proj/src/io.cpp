#include "landscape/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace landscape::io {

std::string fmt(double v) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string fmt_fixed(double v, int decimals) {
    std::array<char, 64> buf;
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
    return std::string(buf.data(), res.ptr);
}

std::string extension(Format format) { return format == Format::csv ? ".csv" : ".dat"; }

TableWriter::TableWriter(std::string path, std::vector<std::string> header, Format format)
    : path_(std::move(path)), columns_(header.size()), format_(format) {
    if (format_ == Format::dat) buffer_ += "# ";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) buffer_ += format_ == Format::csv ? "," : " ";
        buffer_ += header[i];
    }
    buffer_ += "\n";
}

TableWriter& TableWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) raise(errc::invalid_argument, "row width mismatch in " + path_);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += format_ == Format::csv ? "," : " ";
        buffer_ += cells[i];
    }
    buffer_ += "\n";
    return *this;
}

void TableWriter::close() {
    if (closed_) return;
    closed_ = true;
    std::ofstream out(path_, std::ios::binary);
    if (!out) raise(errc::io_failure, "cannot write " + path_);
    out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    if (!out) raise(errc::io_failure, "failed writing " + path_);
}

TableWriter::~TableWriter() {
    try {
        close();
    } catch (...) {
    }
}

void write_distribution(const CostDistribution& dist, const std::string& path, Format format) {
    TableWriter w(path, {"k", "p"}, format);
    for (int k = dist.range().k_opt; k <= dist.range().k_max; ++k)
        w.row({std::to_string(k), fmt(dist.p(k))});
    w.close();
}

void write_kernel(const NeighbourKernel& kernel, const std::string& path, Format format) {
    TableWriter w(path, {"k1", "k2", "pn"}, format);
    const CostRange& r = kernel.range();
    for (int k1 = r.k_opt; k1 <= r.k_max; ++k1) {
        if (!kernel.row_present(k1)) continue;
        for (int k2 = r.k_opt; k2 <= r.k_max; ++k2) {
            const double v = kernel.pn(k1, k2);
            if (v > 0.0) w.row({std::to_string(k1), std::to_string(k2), fmt(v)});
        }
    }
    w.close();
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    nlohmann::json j;
    j["command_line"] = manifest.command_line;
    j["seed"] = manifest.seed;
    j["tool_version"] = manifest.tool_version;
    j["outputs"] = manifest.outputs;
    j["wall_seconds"] = manifest.wall_seconds;
    std::ofstream out(path);
    if (!out) raise(errc::io_failure, "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace landscape::io
