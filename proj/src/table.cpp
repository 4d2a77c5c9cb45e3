#include "hypstable/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace hypstable {

void DistributionTable::validate() const {
    if (grid.size() != values.size())
        throw std::invalid_argument("DistributionTable: grid/values mismatch");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument(
                "DistributionTable: grid must be strictly increasing");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || !std::isfinite(grid[i]))
            throw std::invalid_argument(
                "DistributionTable: non-finite entry at row " +
                std::to_string(i));
        if (values[i] < 0.0)
            throw std::invalid_argument(
                "DistributionTable: negative value at row " +
                std::to_string(i));
    }
    if (kind == Kind::Cdf) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (values[i] > values[i + 1])
                throw std::invalid_argument(
                    "DistributionTable: CDF must be nondecreasing");
        if (!values.empty() && values.back() > 1.0 + 1e-9)
            throw std::invalid_argument("DistributionTable: CDF exceeds 1");
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const DistributionTable& table) {
    table.validate();
    std::ostringstream out;
    out << "abscissa,value\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i)
        out << format_double(table.grid[i]) << ','
            << format_double(table.values[i]) << '\n';
    return out.str();
}

std::string to_json(const DistributionTable& table) {
    table.validate();
    nlohmann::ordered_json j;
    j["kind"] = table.kind == DistributionTable::Kind::Density ? "density"
                                                               : "cdf";
    j["total_mass"] = table.total_mass;
    j["grid"] = table.grid;
    j["values"] = table.values;
    return j.dump(2) + "\n";
}

DistributionTable table_from_csv(const std::string& csv) {
    DistributionTable t;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "abscissa,value")
        throw std::invalid_argument("table_from_csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("table_from_csv: malformed row");
        t.grid.push_back(std::strtod(line.substr(0, comma).c_str(), nullptr));
        t.values.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    return t;
}

}  // namespace hypstable
