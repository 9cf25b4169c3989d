#pragma once

#include <string>
#include <vector>

namespace kitaev {

/// Fixed scientific notation with 17 significant digits: round-trip exact for
/// IEEE doubles, so identical data always serializes to identical bytes.
std::string format_double(double x);

/// Minimal CSV emitter with the output contract used by every subcommand:
/// comma separator, LF newlines, no trailing separator.
class CsvWriter {
public:
    explicit CsvWriter(std::string header);

    void add_row(const std::vector<std::string>& fields);

    const std::string& str() const { return buf_; }

    /// Write atomically-ish to `path` (binary mode, so bytes are exact).
    void write_file(const std::string& path) const;

private:
    std::string buf_;
    std::size_t columns_;
};

} // namespace kitaev
