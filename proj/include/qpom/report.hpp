#ifndef QPOM_REPORT_HPP
#define QPOM_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qpom {

// Byte-stable report serialization: keys sorted (nlohmann's default object
// order), floating-point values at 17 significant digits.
void write_report(const nlohmann::json& j, std::ostream& out, int indent = 2);
std::string report_string(const nlohmann::json& j, int indent = 2);

// CSV with a header row; numeric cells at 17 significant digits.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string str() const;
};

std::string format_double(double v);

} // namespace qpom

#endif
