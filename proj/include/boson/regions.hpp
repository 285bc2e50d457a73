// Uncertainty-region bounds for the transverse spin variance: given total
// spin J, a product-bound strength xi, and |<Jz>|, the admissible Var(Jx)
// band follows from the product bound Var(Jx) Var(Jy) >= xi <Jz>^2 / 4
// combined with the sum ceiling Var(Jx) + Var(Jy) <= J(J+1) - <Jz>^2.
// The band's roots can turn complex, in which case that |<Jz>| value is
// excluded outright and the row is marked infeasible with absent bounds.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace boson {

struct RegionRow {
    double jz_abs = 0.0;
    std::optional<double> lower;
    std::optional<double> upper;
    double squeeze_line = 0.0;  // jz_abs / 2, the squeezing threshold
    bool feasible = false;
};

// Evaluates the band at a single |<Jz>| in [0, J].  Requires J > 0 and
// xi >= 1 (xi = 1 is the plain uncertainty product).
RegionRow hup_bounds(double total_spin, double xi, double jz_abs);

// Uniform grid of n_points rows over jz_abs in [0, J], endpoints included.
std::vector<RegionRow> region_grid(double total_spin, double xi, int n_points);

// CSV rendering, all columns normalized by J; infeasible rows leave the
// bound fields empty.  Header:
// jz_over_J,lower_over_J,upper_over_J,squeeze_line_over_J,feasible
std::string region_csv(const std::vector<RegionRow>& rows, double total_spin);

}  // namespace boson
