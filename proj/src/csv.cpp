#include "dqw/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <system_error>

#include "dqw/errors.hpp"

namespace dqw {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_int(long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& text) {
    out_ << "# " << text << '\n';
}

void CsvWriter::header(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out_ << ',';
        out_ << names[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    header(cells);
}

double parse_double(const std::string& cell) {
    double v = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw Error("not a numeric CSV cell: '" + cell + "'");
    }
    return v;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool is_numeric(const std::string& cell) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    return res.ec == std::errc{} && res.ptr == cell.data() + cell.size();
}

}  // namespace

CsvFile read_csv(std::istream& in) {
    CsvFile file;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            file.comments.push_back(line);
            continue;
        }
        auto fields = split_fields(line);
        if (file.sections.empty() || !is_numeric(fields.front())) {
            file.sections.push_back({std::move(fields), {}});
        } else {
            file.sections.back().rows.push_back(std::move(fields));
        }
    }
    return file;
}

}  // namespace dqw
