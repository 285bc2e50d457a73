// Implementation of the transverse-variance region rows.

#include "boson/regions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace boson {

RegionRow hup_bounds(double total_spin, double xi, double jz_abs) {
    if (!(total_spin > 0.0))
        throw std::invalid_argument("hup_bounds: total spin must be positive");
    if (!(xi >= 1.0)) throw std::invalid_argument("hup_bounds: xi must be >= 1");
    if (!(jz_abs >= 0.0) || jz_abs > total_spin)
        throw std::invalid_argument("hup_bounds: |<Jz>| must lie in [0, J]");

    RegionRow row;
    row.jz_abs = jz_abs;
    row.squeeze_line = 0.5 * jz_abs;

    const double ceiling = total_spin * (total_spin + 1.0) - jz_abs * jz_abs;
    const double radicand = ceiling * ceiling - xi * jz_abs * jz_abs;
    if (radicand < 0.0) return row;  // excluded |<Jz>|: no real band

    const double spread = std::sqrt(radicand);
    row.lower = 0.5 * (ceiling - spread);
    row.upper = 0.5 * (ceiling + spread);
    row.feasible = true;
    return row;
}

std::vector<RegionRow> region_grid(double total_spin, double xi, int n_points) {
    if (n_points < 2) throw std::invalid_argument("region_grid: need at least two points");
    std::vector<RegionRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double jz = total_spin * static_cast<double>(i) /
                          static_cast<double>(n_points - 1);
        rows.push_back(hup_bounds(total_spin, xi, std::min(jz, total_spin)));
    }
    return rows;
}

namespace {

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

}  // namespace

std::string region_csv(const std::vector<RegionRow>& rows, double total_spin) {
    std::string out = "jz_over_J,lower_over_J,upper_over_J,squeeze_line_over_J,feasible\n";
    for (const RegionRow& row : rows) {
        out += format_value(row.jz_abs / total_spin);
        out += ',';
        if (row.lower) out += format_value(*row.lower / total_spin);
        out += ',';
        if (row.upper) out += format_value(*row.upper / total_spin);
        out += ',';
        out += format_value(row.squeeze_line / total_spin);
        out += ',';
        out += row.feasible ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace boson
