#include "nuwind/csv.hpp"

#include "nuwind/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace nuwind::csv {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format(double value) {
    if (std::isnan(value))
        return "nan";
    char buf[40];
    // %.17g always round-trips; prefer the shortest exact form.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, value);
        if (std::strtod(buf, nullptr) == value)
            break;
    }
    return buf;
}

void Writer::cell(const std::string& text) {
    if (row_open_)
        buffer_ += ',';
    buffer_ += text;
    row_open_ = true;
}

void Writer::cell(double value) { cell(format(value)); }

void Writer::cell(long long value) { cell(std::to_string(value)); }

void Writer::end_row() {
    buffer_ += '\n';
    row_open_ = false;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot open output file: " + path);
    out << content;
    if (!out)
        throw ConfigError("failed writing output file: " + path);
}

} // namespace nuwind::csv
