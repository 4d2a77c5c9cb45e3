#pragma once

#include <string>
#include <vector>

#include "hypstable/precision.hpp"

namespace hypstable {

/// Tabulated law on an ordered grid: either density values or CDF values.
struct DistributionTable {
    enum class Kind { Density, Cdf };

    std::vector<double> grid;    // strictly increasing abscissae
    std::vector<double> values;  // same length as grid
    Kind kind = Kind::Density;
    double total_mass = 0.0;  // integral of the density / sup of the CDF

    /// Checks the structural invariants; throws std::invalid_argument.
    void validate() const;
};

/// Renders the table as CSV with a header line and 17-significant-digit
/// values; refuses non-finite entries. Empty tables yield a header-only CSV.
std::string to_csv(const DistributionTable& table);

/// Renders the table as JSON with a stable key order.
std::string to_json(const DistributionTable& table);

/// Parses CSV produced by to_csv back into a table (round-trip exact).
DistributionTable table_from_csv(const std::string& csv);

/// Formats one double with 17 significant digits (shortest exact form
/// is not required; round-trip through strtod is).
std::string format_double(double v);

}  // namespace hypstable
