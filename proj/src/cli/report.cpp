#include "qb/cli/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qb::cli {

std::string format_real(const Real& x) {
    // round to the working precision first; values computed with guard digits carry more
    Real y(x, Real::default_precision());
    // mpfr picks enough digits for an exact round trip when asked for 0
    return y.str(0, std::ios_base::scientific);
}

namespace {

std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void write_line(std::ostringstream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << quote(fields[i]);
    os << "\n";
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
    if (!out) throw IoError("write failed: " + p.string());
}

}  // namespace

std::string to_csv(const CsvTable& t) {
    std::ostringstream os;
    write_line(os, t.header);
    for (const auto& r : t.rows) write_line(os, r);
    return os.str();
}

CsvTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            lines.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) throw IoError("csv: unterminated quote");
    if (any) {
        row.push_back(std::move(field));
        lines.push_back(std::move(row));
    }
    CsvTable t;
    if (lines.empty()) return t;
    t.header = std::move(lines.front());
    t.rows.assign(std::make_move_iterator(lines.begin() + 1), std::make_move_iterator(lines.end()));
    for (const auto& r : t.rows)
        if (r.size() != t.header.size()) throw IoError("csv: row width differs from header");
    return t;
}

std::vector<std::string> emit_report(const Report& r, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
    std::vector<std::string> paths;
    for (const auto& [name, t] : r.tables) {
        auto p = std::filesystem::path(dir) / name;
        write_file(p, to_csv(t));
        paths.push_back(p.string());
    }
    for (const auto& [name, j] : r.documents) {
        auto p = std::filesystem::path(dir) / name;
        write_file(p, j.dump(2) + "\n");
        paths.push_back(p.string());
    }
    return paths;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qb::cli
