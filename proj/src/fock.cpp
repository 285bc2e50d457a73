#include "boson/fock.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace boson {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenvalueTol = 1e-10;
constexpr double kPurityTol = 1e-10;
constexpr double kNormTol = 1e-12;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_same_basis(const FockBasis& a, const FockBasis& b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": basis mismatch");
}

// Appends every occupancy of `modes` modes summing to `total`, ascending
// lexicographic with mode 0 slowest.
void enumerate_sector(int modes, int total, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
    if (modes == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int n = 0; n <= total; ++n) {
        prefix.push_back(n);
        enumerate_sector(modes - 1, total - n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

FockBasis::FockBasis(std::vector<int> cutoffs) {
    require(!cutoffs.empty(), "FockBasis: at least one mode required");
    for (int c : cutoffs) require(c >= 0, "FockBasis: cutoffs must be >= 0");
    cutoffs_ = std::move(cutoffs);
    strides_.assign(cutoffs_.size(), 1);
    long long dim = 1;
    for (int m = static_cast<int>(cutoffs_.size()) - 1; m >= 0; --m) {
        strides_[m] = static_cast<int>(dim);
        dim *= cutoffs_[m] + 1;
        require(dim <= 1 << 24, "FockBasis: dimension too large");
    }
    dim_ = static_cast<int>(dim);
}

FockBasis FockBasis::fixed_total(int n_modes, int total) {
    require(n_modes >= 1, "FockBasis::fixed_total: at least one mode required");
    require(total >= 0, "FockBasis::fixed_total: total must be >= 0");
    FockBasis b;
    b.sector_ = true;
    b.sector_total_ = total;
    b.cutoffs_.assign(n_modes, total);
    std::vector<int> prefix;
    enumerate_sector(n_modes, total, prefix, b.occupancies_);
    b.dim_ = static_cast<int>(b.occupancies_.size());
    for (int i = 0; i < b.dim_; ++i) b.index_map_[b.occupancies_[i]] = i;
    return b;
}

std::vector<int> FockBasis::occupancy(int index) const {
    require(index >= 0 && index < dim_, "FockBasis::occupancy: index out of range");
    if (sector_) return occupancies_[index];
    std::vector<int> occ(cutoffs_.size());
    for (size_t m = 0; m < cutoffs_.size(); ++m) {
        occ[m] = (index / strides_[m]) % (cutoffs_[m] + 1);
    }
    return occ;
}

int FockBasis::index_of(const std::vector<int>& occ) const {
    if (occ.size() != cutoffs_.size()) return -1;
    for (size_t m = 0; m < occ.size(); ++m) {
        if (occ[m] < 0 || occ[m] > cutoffs_[m]) return -1;
    }
    if (sector_) {
        auto it = index_map_.find(occ);
        return it == index_map_.end() ? -1 : it->second;
    }
    int index = 0;
    for (size_t m = 0; m < occ.size(); ++m) index += occ[m] * strides_[m];
    return index;
}

bool FockBasis::operator==(const FockBasis& other) const {
    return sector_ == other.sector_ && sector_total_ == other.sector_total_ &&
           cutoffs_ == other.cutoffs_;
}

StateVector::StateVector(FockBasis basis, Vector amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
    if (amps_.size() != basis_.dim()) {
        throw std::invalid_argument("StateVector: amplitude length does not match basis dim");
    }
    const double norm = amps_.norm();
    if (norm < 1e-14) throw invariant_error("StateVector: zero norm");
    amps_ /= norm;
    if (std::abs(amps_.norm() - 1.0) > kNormTol) {
        throw invariant_error("StateVector: normalization failed");
    }
}

DensityOperator::DensityOperator(FockBasis basis, Matrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    const int d = basis_.dim();
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("DensityOperator: matrix shape does not match basis dim");
    }
    const double herm = max_abs(matrix_ - matrix_.adjoint().eval());
    if (herm > kHermitianTol) {
        std::ostringstream os;
        os << "DensityOperator: not Hermitian (max deviation " << herm << ")";
        throw invariant_error(os.str());
    }
    const double trace_err = std::abs(matrix_.trace() - complex(1.0, 0.0));
    if (trace_err > kTraceTol) {
        std::ostringstream os;
        os << "DensityOperator: trace deviates from 1 by " << trace_err;
        throw invariant_error(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kEigenvalueTol) {
        std::ostringstream os;
        os << "DensityOperator: negative eigenvalue " << min_eig;
        throw invariant_error(os.str());
    }
    // tr(rho^2) = tr(rho^dag rho) = squared Frobenius norm for Hermitian rho.
    const double purity = matrix_.squaredNorm();
    if (purity > 1.0 + kPurityTol) {
        std::ostringstream os;
        os << "DensityOperator: purity " << purity << " exceeds 1";
        throw invariant_error(os.str());
    }
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
    return DensityOperator(psi.basis(), psi.amps() * psi.amps().adjoint());
}

ModeOperator::ModeOperator(FockBasis basis, Matrix matrix, bool hermitian_hint)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), hermitian_hint_(hermitian_hint) {
    if (matrix_.rows() != basis_.dim() || matrix_.cols() != basis_.dim()) {
        throw std::invalid_argument("ModeOperator: matrix shape does not match basis dim");
    }
}

ModeOperator ModeOperator::adjoint() const {
    return ModeOperator(basis_, matrix_.adjoint(), hermitian_hint_);
}

ModeOperator ModeOperator::assume_hermitian() const {
    const double herm = max_abs(matrix_ - matrix_.adjoint().eval());
    if (herm > kHermitianTol) {
        std::ostringstream os;
        os << "ModeOperator::assume_hermitian: deviation " << herm;
        throw invariant_error(os.str());
    }
    return ModeOperator(basis_, matrix_, true);
}

ModeOperator operator+(const ModeOperator& a, const ModeOperator& b) {
    check_same_basis(a.basis(), b.basis(), "operator+");
    return ModeOperator(a.basis(), a.matrix() + b.matrix(),
                        a.hermitian_hint() && b.hermitian_hint());
}

ModeOperator operator-(const ModeOperator& a, const ModeOperator& b) {
    check_same_basis(a.basis(), b.basis(), "operator-");
    return ModeOperator(a.basis(), a.matrix() - b.matrix(),
                        a.hermitian_hint() && b.hermitian_hint());
}

ModeOperator operator*(const ModeOperator& a, const ModeOperator& b) {
    check_same_basis(a.basis(), b.basis(), "operator*");
    return ModeOperator(a.basis(), a.matrix() * b.matrix(), false);
}

ModeOperator operator*(complex scale, const ModeOperator& a) {
    const bool hint = a.hermitian_hint() && scale.imag() == 0.0;
    return ModeOperator(a.basis(), scale * a.matrix(), hint);
}

ModeOperator operator*(double scale, const ModeOperator& a) {
    return ModeOperator(a.basis(), scale * a.matrix(), a.hermitian_hint());
}

ModeOperator annihilation_op(const FockBasis& basis, int mode) {
    require(mode >= 0 && mode < basis.modes(), "annihilation_op: mode index out of range");
    require(!basis.is_sector(),
            "annihilation_op: not defined on a fixed-N sector basis (use hop_op)");
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        std::vector<int> occ = basis.occupancy(i);
        const int n = occ[mode];
        if (n == 0) continue;
        occ[mode] = n - 1;
        m(basis.index_of(occ), i) = std::sqrt(static_cast<double>(n));
    }
    return ModeOperator(basis, std::move(m), false);
}

ModeOperator creation_op(const FockBasis& basis, int mode) {
    return annihilation_op(basis, mode).adjoint();
}

ModeOperator number_op(const FockBasis& basis, int mode) {
    require(mode >= 0 && mode < basis.modes(), "number_op: mode index out of range");
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        m(i, i) = static_cast<double>(basis.occupancy(i)[mode]);
    }
    return ModeOperator(basis, std::move(m), true);
}

ModeOperator total_number_op(const FockBasis& basis) {
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        const std::vector<int> occ = basis.occupancy(i);
        m(i, i) = static_cast<double>(std::accumulate(occ.begin(), occ.end(), 0));
    }
    return ModeOperator(basis, std::move(m), true);
}

ModeOperator hop_op(const FockBasis& basis, int from, int to) {
    require(from >= 0 && from < basis.modes(), "hop_op: `from` mode out of range");
    require(to >= 0 && to < basis.modes(), "hop_op: `to` mode out of range");
    if (from == to) return number_op(basis, from);
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        std::vector<int> occ = basis.occupancy(i);
        const int n_from = occ[from];
        if (n_from == 0) continue;
        occ[from] = n_from - 1;
        occ[to] += 1;
        const int j = basis.index_of(occ);
        if (j < 0) continue;  // clipped by the `to` cutoff
        m(j, i) = std::sqrt(static_cast<double>(n_from) * occ[to]);
    }
    return ModeOperator(basis, std::move(m), false);
}

ModeOperator identity_op(const FockBasis& basis) {
    return ModeOperator(basis, Matrix::Identity(basis.dim(), basis.dim()), true);
}

FockBasis tensor(const FockBasis& a, const FockBasis& b) {
    require(!a.is_sector() && !b.is_sector(), "tensor: product bases required");
    std::vector<int> cutoffs = a.cutoffs();
    cutoffs.insert(cutoffs.end(), b.cutoffs().begin(), b.cutoffs().end());
    return FockBasis(cutoffs);
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

}  // namespace

StateVector tensor(const StateVector& a, const StateVector& b) {
    return StateVector(tensor(a.basis(), b.basis()), kron(a.amps(), b.amps()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    return DensityOperator(tensor(a.basis(), b.basis()), kron(a.matrix(), b.matrix()));
}

ModeOperator embed_op(const ModeOperator& op, const FockBasis& full, int mode_offset) {
    require(!full.is_sector() && !op.basis().is_sector(), "embed_op: product bases required");
    const int block = op.basis().modes();
    require(mode_offset >= 0 && mode_offset + block <= full.modes(),
            "embed_op: mode block out of range");
    int left_dim = 1, right_dim = 1;
    for (int m = 0; m < mode_offset; ++m) left_dim *= full.cutoffs()[m] + 1;
    for (int m = mode_offset + block; m < full.modes(); ++m) right_dim *= full.cutoffs()[m] + 1;
    for (int m = 0; m < block; ++m) {
        require(full.cutoffs()[mode_offset + m] == op.basis().cutoffs()[m],
                "embed_op: cutoff mismatch in embedded block");
    }
    Matrix result = kron(Matrix::Identity(left_dim, left_dim),
                         kron(op.matrix(), Matrix::Identity(right_dim, right_dim)));
    return ModeOperator(full, std::move(result), op.hermitian_hint());
}

StateVector embed_sector_state(const StateVector& psi) {
    require(psi.basis().is_sector(), "embed_sector_state: sector-basis state required");
    const FockBasis& sector = psi.basis();
    FockBasis full{std::vector<int>(sector.modes(), sector.sector_total())};
    Vector amps = Vector::Zero(full.dim());
    for (int i = 0; i < sector.dim(); ++i) {
        amps(full.index_of(sector.occupancy(i))) = psi.amps()(i);
    }
    return StateVector(full, std::move(amps));
}

DensityOperator pad_density(const DensityOperator& rho, const std::vector<int>& cutoffs) {
    const FockBasis& basis = rho.basis();
    require(!basis.is_sector(), "pad_density: product basis required");
    require(static_cast<int>(cutoffs.size()) == basis.modes(),
            "pad_density: cutoff count must match the mode count");
    for (int m = 0; m < basis.modes(); ++m) {
        require(cutoffs[m] >= basis.cutoffs()[m],
                "pad_density: new cutoffs must not shrink the basis");
    }
    FockBasis wide{cutoffs};
    std::vector<int> map(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) map[i] = wide.index_of(basis.occupancy(i));
    Matrix out = Matrix::Zero(wide.dim(), wide.dim());
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j) out(map[i], map[j]) = rho.matrix()(i, j);
    return DensityOperator(std::move(wide), std::move(out));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    const FockBasis& basis = rho.basis();
    require(!basis.is_sector(), "partial_trace: product basis required");
    require(!keep.empty(), "partial_trace: keep set must be non-empty");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    require(std::unique(sorted.begin(), sorted.end()) == sorted.end(),
            "partial_trace: duplicate mode indices");
    for (int m : sorted) {
        require(m >= 0 && m < basis.modes(), "partial_trace: mode index out of range");
    }

    std::vector<int> traced;
    for (int m = 0; m < basis.modes(); ++m) {
        if (!std::binary_search(sorted.begin(), sorted.end(), m)) traced.push_back(m);
    }
    std::vector<int> keep_cutoffs;
    for (int m : sorted) keep_cutoffs.push_back(basis.cutoffs()[m]);
    FockBasis out_basis{keep_cutoffs};

    int traced_dim = 1;
    for (int m : traced) traced_dim *= basis.cutoffs()[m] + 1;

    std::vector<int> full_row(basis.modes()), full_col(basis.modes());
    Matrix out = Matrix::Zero(out_basis.dim(), out_basis.dim());
    for (int i = 0; i < out_basis.dim(); ++i) {
        const std::vector<int> occ_i = out_basis.occupancy(i);
        for (int j = 0; j < out_basis.dim(); ++j) {
            const std::vector<int> occ_j = out_basis.occupancy(j);
            complex sum = 0.0;
            for (int t = 0; t < traced_dim; ++t) {
                int rest = t;
                for (int k = static_cast<int>(traced.size()) - 1; k >= 0; --k) {
                    const int c = basis.cutoffs()[traced[k]] + 1;
                    full_row[traced[k]] = rest % c;
                    rest /= c;
                }
                for (size_t k = 0; k < sorted.size(); ++k) {
                    full_row[sorted[k]] = occ_i[k];
                    full_col[sorted[k]] = occ_j[k];
                }
                for (int m : traced) full_col[m] = full_row[m];
                sum += rho.matrix()(basis.index_of(full_row), basis.index_of(full_col));
            }
            out(i, j) = sum;
        }
    }
    return DensityOperator(out_basis, std::move(out));
}

complex expectation(const DensityOperator& rho, const ModeOperator& op) {
    check_same_basis(rho.basis(), op.basis(), "expectation");
    // Tr(O rho) = sum_ij O_ij rho_ji.
    return (op.matrix().array() * rho.matrix().transpose().array()).sum();
}

complex expectation(const StateVector& psi, const ModeOperator& op) {
    check_same_basis(psi.basis(), op.basis(), "expectation");
    return psi.amps().dot(op.matrix() * psi.amps());
}

double variance(const DensityOperator& rho, const ModeOperator& op) {
    check_same_basis(rho.basis(), op.basis(), "variance");
    require(op.hermitian_hint(), "variance: Hermitian operator required");
    const double mean = expectation(rho, op).real();
    const Matrix o_rho = op.matrix() * rho.matrix();
    const double second = (op.matrix().array() * o_rho.transpose().array()).sum().real();
    return std::max(0.0, second - mean * mean);
}

double variance(const StateVector& psi, const ModeOperator& op) {
    check_same_basis(psi.basis(), op.basis(), "variance");
    require(op.hermitian_hint(), "variance: Hermitian operator required");
    const Vector w = op.matrix() * psi.amps();
    const double mean = psi.amps().dot(w).real();
    return std::max(0.0, w.squaredNorm() - mean * mean);
}

}  // namespace boson
