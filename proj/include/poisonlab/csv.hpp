#pragma once

#include <string>
#include <vector>

namespace poisonlab {

// Shortest decimal string that round-trips the double exactly (std::to_chars).
// All canonical serializations use this so identical values yield identical bytes.
std::string format_double(double v);

std::string csv_escape(const std::string& field);

// One CSV row with `\n` terminator; fields escaped as needed.
std::string csv_row(const std::vector<std::string>& fields);

// Minimal RFC-4180-ish parser: quoted fields, escaped quotes, `\n` / `\r\n` rows.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace poisonlab
