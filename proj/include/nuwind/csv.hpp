#pragma once

#include <string>
#include <vector>

namespace nuwind::csv {

/// Split one CSV line on commas. No quoting support; none of the formats
/// written or read here embed commas in fields.
std::vector<std::string> split(const std::string& line);

std::string trim(const std::string& s);

/// Shortest round-trippable decimal representation, locale-independent.
/// Identical input bits always produce identical text.
std::string format(double value);

/// Row-oriented CSV assembly with deterministic number formatting.
class Writer {
public:
    void cell(const std::string& text);
    void cell(double value);
    void cell(long long value);
    void end_row();
    const std::string& str() const { return buffer_; }

private:
    std::string buffer_;
    bool row_open_ = false;
};

/// Write text to a file, replacing any previous content.
void write_file(const std::string& path, const std::string& content);

} // namespace nuwind::csv
