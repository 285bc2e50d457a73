// Truncated multi-mode bosonic Fock-space linear algebra: basis enumeration,
// state vectors and density operators with validated invariants, mode
// operators, tensor composition, partial trace, expectations and variances.
//
// Conventions used throughout the library:
//  - A product basis over M modes with per-mode cutoffs (c_0, ..., c_{M-1})
//    enumerates occupancies mixed-radix with mode 0 slowest, so
//    index = n_0 * prod_{j>0}(c_j+1) + ... + n_{M-1}.
//  - A fixed-total-number "sector" basis holds every occupancy vector with
//    sum(n) == N, listed in ascending lexicographic order (mode 0 slowest);
//    for two modes that is k = n_a = 0..N with |k>_a |N-k>_b at index k.
//  - All numerics are dense complex binary64; Hermitian eigenproblems go
//    through Eigen's SelfAdjointEigenSolver.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace boson {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Thrown when a constructed object violates a numerical invariant (trace,
// Hermiticity, positivity, normalization). Precondition violations (bad
// arguments) throw std::invalid_argument instead.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest |entry| of a matrix; zero for empty matrices.
double max_abs(const Matrix& m);

class FockBasis {
public:
    // Product basis with the given per-mode maximum occupancies (inclusive).
    explicit FockBasis(std::vector<int> cutoffs);

    // Fixed-total-number sector basis: every occupancy of `n_modes` modes
    // with total boson number exactly `total`.
    static FockBasis fixed_total(int n_modes, int total);

    int modes() const { return static_cast<int>(cutoffs_.size()); }
    int dim() const { return dim_; }
    const std::vector<int>& cutoffs() const { return cutoffs_; }

    bool is_sector() const { return sector_; }
    // Total boson number of a sector basis; -1 for product bases.
    int sector_total() const { return sector_total_; }

    // Occupancy vector of the basis state at `index`.
    std::vector<int> occupancy(int index) const;

    // Index of an occupancy vector, or -1 when it lies outside the basis
    // (out of cutoff range, or wrong total for a sector basis).
    int index_of(const std::vector<int>& occ) const;

    bool operator==(const FockBasis& other) const;
    bool operator!=(const FockBasis& other) const { return !(*this == other); }

private:
    FockBasis() = default;

    std::vector<int> cutoffs_;
    bool sector_ = false;
    int sector_total_ = -1;
    int dim_ = 0;
    std::vector<int> strides_;                   // product bases
    std::vector<std::vector<int>> occupancies_;  // sector bases
    std::map<std::vector<int>, int> index_map_;  // sector bases
};

class StateVector {
public:
    // Normalizes the amplitudes; throws invariant_error on a (near-)zero
    // vector or a length mismatch with the basis dimension.
    StateVector(FockBasis basis, Vector amps);

    const FockBasis& basis() const { return basis_; }
    const Vector& amps() const { return amps_; }

private:
    FockBasis basis_;
    Vector amps_;
};

class DensityOperator {
public:
    // Validates Hermiticity (1e-12 max elementwise), unit trace (1e-10),
    // positivity (smallest eigenvalue >= -1e-10) and purity <= 1 + 1e-10;
    // throws invariant_error naming the violated invariant.
    DensityOperator(FockBasis basis, Matrix matrix);

    static DensityOperator pure(const StateVector& psi);

    const FockBasis& basis() const { return basis_; }
    const Matrix& matrix() const { return matrix_; }

private:
    FockBasis basis_;
    Matrix matrix_;
};

class ModeOperator {
public:
    ModeOperator(FockBasis basis, Matrix matrix, bool hermitian_hint);

    const FockBasis& basis() const { return basis_; }
    const Matrix& matrix() const { return matrix_; }
    bool hermitian_hint() const { return hermitian_hint_; }

    ModeOperator adjoint() const;

    // Re-tags the operator as Hermitian after checking it numerically
    // (throws invariant_error beyond 1e-12 max elementwise deviation).
    ModeOperator assume_hermitian() const;

private:
    FockBasis basis_;
    Matrix matrix_;
    bool hermitian_hint_ = false;
};

// Operator algebra. Sums/differences of Hermitian operators keep the hint;
// products and complex scalings drop it (use assume_hermitian to re-tag
// symmetric constructions).
ModeOperator operator+(const ModeOperator& a, const ModeOperator& b);
ModeOperator operator-(const ModeOperator& a, const ModeOperator& b);
ModeOperator operator*(const ModeOperator& a, const ModeOperator& b);
ModeOperator operator*(complex scale, const ModeOperator& a);
ModeOperator operator*(double scale, const ModeOperator& a);

// Single-mode ladder operator <n-1|a|n> = sqrt(n) on the chosen mode,
// identity elsewhere. Defined on product bases only (it does not preserve a
// fixed-N sector); throws std::invalid_argument on sector bases.
ModeOperator annihilation_op(const FockBasis& basis, int mode);
ModeOperator creation_op(const FockBasis& basis, int mode);

// Occupancy-number operator of one mode; defined on both basis kinds.
ModeOperator number_op(const FockBasis& basis, int mode);
// Sum of all per-mode number operators.
ModeOperator total_number_op(const FockBasis& basis);

// Number-conserving hop: creation(to) * annihilation(from), built directly
// from occupancy actions so it is defined on sector bases as well.
ModeOperator hop_op(const FockBasis& basis, int from, int to);

ModeOperator identity_op(const FockBasis& basis);

// Kronecker composition (left factor slowest, matching mode ordering).
FockBasis tensor(const FockBasis& a, const FockBasis& b);
StateVector tensor(const StateVector& a, const StateVector& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

// Embeds an operator acting on a contiguous mode block [offset,
// offset + op.modes) of `full` as I (x) op (x) I.
ModeOperator embed_op(const ModeOperator& op, const FockBasis& full, int mode_offset);

// Maps a sector-basis state onto the product basis with per-mode cutoff
// equal to the sector total (identity on amplitudes, re-indexed).
StateVector embed_sector_state(const StateVector& psi);

// Re-embeds a product-basis density operator into a wider product basis
// (componentwise cutoffs >= the original); entries carry over by occupancy.
// Truncated ladder products clip matrix elements through the top level, so
// second moments of hopping or quadrature operators evaluated on a basis the
// state fills to the brim come out low; padding restores them exactly.
DensityOperator pad_density(const DensityOperator& rho, const std::vector<int>& cutoffs);

// Reduced density operator on the kept modes (ascending, non-empty, product
// bases only). Preserves trace and Hermiticity.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// Tr(O rho) / <psi|O|psi>.
complex expectation(const DensityOperator& rho, const ModeOperator& op);
complex expectation(const StateVector& psi, const ModeOperator& op);

// <O^2> - <O>^2, clamped to >= 0. Requires the Hermitian hint.
double variance(const DensityOperator& rho, const ModeOperator& op);
double variance(const StateVector& psi, const ModeOperator& op);

}  // namespace boson
