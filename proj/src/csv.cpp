#include "kitaev/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kitaev {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

CsvWriter::CsvWriter(std::string header) {
    columns_ = 1;
    for (char ch : header)
        if (ch == ',') ++columns_;
    buf_ = std::move(header);
    buf_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
        throw std::invalid_argument("CsvWriter: field count does not match header");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += fields[i];
    }
    buf_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace kitaev
