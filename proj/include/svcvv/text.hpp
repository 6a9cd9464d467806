#pragma once

#include <string>
#include <vector>

namespace svcvv {

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char delim);

/// Strict full-token parse; `context` should say file:line for the message.
double parse_double(const std::string& token, const std::string& context);
long parse_long(const std::string& token, const std::string& context);

/// Shortest round-trip formatting for archival columns.
std::string fmt_full(double v);
/// Compact deterministic formatting for report columns.
std::string fmt_g(double v);

/// Whole file as lines; throws InputError when the file cannot be opened.
std::vector<std::string> read_lines(const std::string& path);

struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;  // 1-based, for error messages
};

/// key = value lines; '#' starts a comment; blank lines skipped.
std::vector<KeyValue> parse_key_values(const std::string& path);

}  // namespace svcvv
