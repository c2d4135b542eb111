#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dqw {

inline constexpr const char* kCsvSchemaVersion = "dqwalk-csv v1";

// Shortest representation that round-trips through a double.
std::string format_double(double v);
std::string format_int(long v);

// Line-oriented CSV writer: '#' comment lines, one header row per section,
// data rows of preformatted cells.  Output is byte-deterministic.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);

  private:
    std::ostream& out_;
};

struct CsvSection {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct CsvFile {
    std::vector<std::string> comments;
    std::vector<CsvSection> sections;
};

// Reads CSV as emitted by CsvWriter.  A non-numeric first field starts a
// new section header; '#' lines are collected as comments.
CsvFile read_csv(std::istream& in);

// Parses a cell written by format_double; throws dqw::Error on garbage.
double parse_double(const std::string& cell);

}  // namespace dqw
