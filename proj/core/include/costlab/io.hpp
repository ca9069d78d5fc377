#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace costlab {

/// Shortest decimal form that parses back to the same double ("7", "0.5",
/// "2.16e+05" style); used wherever round-trips must be bit-exact.
std::string format_double_shortest(double value);

/// printf "%.<sig>g" rendering; used for human-readable tables and CSV cells.
std::string format_sig(double value, int significant_digits);

/// Strict full-string double parse (errc::parse_failure on trailing junk).
double parse_double(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to `<path>.tmp` then renames, so a failed run never leaves a
/// partial file at the destination.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace costlab
