#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ramosa::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
    int require_column(const std::string& name) const;
};

/// Read a CSV file. Lines starting with '#' are treated as comments and
/// skipped; the first remaining line is the header. No quoting support,
/// fields may not contain commas.
Table read_file(const std::filesystem::path& path);

Table parse(const std::string& text, const std::string& origin);

std::string join_row(const std::vector<std::string>& fields);

/// Doubles are rendered with enough digits to round-trip exactly.
std::string format_double(double v);

double parse_double(const std::string& field, const std::string& context);
long long parse_int(const std::string& field, const std::string& context);

} // namespace ramosa::csv

namespace ramosa {

/// Provenance line placed at the top of every generated table, so an output
/// file records the seed and configuration that produced it.
std::string provenance_line(std::uint64_t seed, const std::string& config_text);

/// FNV-1a over an arbitrary configuration string.
std::uint64_t config_hash(const std::string& text);

inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace ramosa
