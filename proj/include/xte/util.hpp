#pragma once

#include <atomic>
#include <string>
#include <string_view>
#include <vector>

namespace xte {

// Warnings go to stderr so reports on stdout stay clean. Tests may silence them.
void set_log_enabled(bool on);
bool log_enabled();
void log_warn(const std::string& msg);
void log_info(const std::string& msg);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
std::vector<std::string> split_ws(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

// Whole file as a string; throws std::runtime_error if unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace xte
