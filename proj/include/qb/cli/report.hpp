#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qb/numeric/mp.hpp"

namespace qb::cli {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

/// x rounded to the current precision, as a decimal that reads back to the same value.
std::string format_real(const Real& x);

/// RFC 4180 quoting where needed; "\n" line ends; header line always written.
std::string to_csv(const CsvTable& t);
CsvTable parse_csv(const std::string& text);

/// Named outputs of one run, written in insertion order.
struct Report {
    std::vector<std::pair<std::string, CsvTable>> tables;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> documents;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes every table and document under dir (created if missing); returns the paths.
std::vector<std::string> emit_report(const Report& r, const std::string& dir);

std::string read_file(const std::string& path);

}  // namespace qb::cli
