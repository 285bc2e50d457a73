#include "boson/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace boson {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// sqrt(C(n, k)) evaluated in log space.
double sqrt_binomial(int n, int k) {
    return std::exp(0.5 * (log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

// |base|^power with the convention 0^0 = 1, tracking sign separately.
double signed_pow(double base, int power, int& sign) {
    if (power == 0) return 1.0;
    if (base == 0.0) return 0.0;
    if (base < 0.0 && power % 2 != 0) sign = -sign;
    return std::exp(power * std::log(std::abs(base)));
}

}  // namespace

const FockBasis& NamedState::basis() const {
    return is_pure() ? std::get<StateVector>(state).basis()
                     : std::get<DensityOperator>(state).basis();
}

const StateVector& NamedState::vector() const {
    if (!is_pure()) throw std::invalid_argument("NamedState::vector: state is mixed");
    return std::get<StateVector>(state);
}

DensityOperator NamedState::density() const {
    return is_pure() ? DensityOperator::pure(std::get<StateVector>(state))
                     : std::get<DensityOperator>(state);
}

int coherent_cutoff(double abs_alpha) {
    require(abs_alpha >= 0.0, "coherent_cutoff: |alpha| must be >= 0");
    return static_cast<int>(std::ceil(abs_alpha * abs_alpha + 8.0 * abs_alpha + 10.0));
}

StateVector coherent_state(complex alpha, int n_max) {
    require(n_max >= 0, "coherent_state: n_max must be >= 0");
    const double a2 = std::norm(alpha);
    Vector amps(n_max + 1);
    double raw_norm_sq = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double mag = std::exp(-0.5 * a2 + n * 0.5 * std::log(a2 == 0.0 ? 1.0 : a2) -
                                    0.5 * log_factorial(n));
        const complex value =
            (n == 0 || a2 > 0.0) ? mag * std::polar(1.0, n * std::arg(alpha)) : complex(0.0);
        amps(n) = (a2 == 0.0 && n > 0) ? complex(0.0) : value;
        raw_norm_sq += std::norm(amps(n));
    }
    const double deficit = 1.0 - raw_norm_sq;
    if (deficit >= 1e-10) {
        std::ostringstream os;
        os << "coherent_state: n_max " << n_max << " too small for |alpha| = "
           << std::abs(alpha) << " (norm deficit " << deficit << ")";
        throw std::invalid_argument(os.str());
    }
    return StateVector(FockBasis({n_max}), std::move(amps));
}

DensityOperator mixed_two_mode_coherent(double abs_alpha, int n_max) {
    require(abs_alpha >= 0.0, "mixed_two_mode_coherent: |alpha| must be >= 0");
    require(n_max >= 0, "mixed_two_mode_coherent: n_max must be >= 0");
    const double a2 = abs_alpha * abs_alpha;
    // Per-mode Poisson tail must satisfy the same truncation rule as the
    // coherent constructor; reuse it for the deficit check.
    coherent_state(complex(abs_alpha, 0.0), n_max);

    const FockBasis basis({n_max, n_max});
    const double log_a = a2 > 0.0 ? std::log(abs_alpha) : 0.0;
    Matrix rho = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        const std::vector<int> occ_i = basis.occupancy(i);  // (n, p)
        for (int j = 0; j < basis.dim(); ++j) {
            const std::vector<int> occ_j = basis.occupancy(j);  // (m, q)
            const int total = occ_i[0] + occ_i[1] + occ_j[0] + occ_j[1];
            if (occ_i[0] + occ_i[1] != occ_j[0] + occ_j[1]) continue;
            if (abs_alpha == 0.0 && total > 0) continue;
            rho(i, j) = std::exp(-2.0 * a2 + total * log_a -
                                 0.5 * (log_factorial(occ_i[0]) + log_factorial(occ_i[1]) +
                                        log_factorial(occ_j[0]) + log_factorial(occ_j[1])));
        }
    }
    return DensityOperator(basis, std::move(rho));
}

StateVector noon_state(int n_bosons, double theta) {
    require(n_bosons >= 1, "noon_state: N must be >= 1");
    const FockBasis basis = FockBasis::fixed_total(2, n_bosons);
    Vector amps = Vector::Zero(basis.dim());
    amps(basis.index_of({n_bosons, 0})) = std::cos(theta);
    amps(basis.index_of({0, n_bosons})) = std::sin(theta);
    return StateVector(basis, std::move(amps));
}

StateVector binomial_state(int n_bosons, double theta, double chi) {
    require(n_bosons >= 1, "binomial_state: N must be >= 1");
    const FockBasis basis = FockBasis::fixed_total(2, n_bosons);
    const double c = std::cos(theta), s = std::sin(theta);
    Vector amps = Vector::Zero(basis.dim());
    for (int k = 0; k <= n_bosons; ++k) {
        int sign = 1;
        const double mag =
            sqrt_binomial(n_bosons, k) * signed_pow(c, k, sign) * signed_pow(s, n_bosons - k, sign);
        amps(basis.index_of({k, n_bosons - k})) =
            sign * mag * std::polar(1.0, -chi * (2.0 * k - n_bosons) / 2.0);
    }
    return StateVector(basis, std::move(amps));
}

StateVector relative_phase_state(int n_bosons, int p) {
    require(n_bosons >= 1, "relative_phase_state: N must be >= 1");
    require(2 * std::abs(p) <= n_bosons, "relative_phase_state: p outside the allowed grid");
    const double theta_p = 2.0 * kPi * p / (n_bosons + 1.0);
    const FockBasis basis = FockBasis::fixed_total(2, n_bosons);
    Vector amps(basis.dim());
    for (int n_a = 0; n_a <= n_bosons; ++n_a) {
        amps(basis.index_of({n_a, n_bosons - n_a})) =
            std::polar(1.0 / std::sqrt(n_bosons + 1.0), (0.5 * n_bosons - n_a) * theta_p);
    }
    return StateVector(basis, std::move(amps));
}

namespace {

StateVector amplitude_table(const FockBasis& basis,
                            const std::vector<std::pair<std::vector<int>, complex>>& terms) {
    Vector amps = Vector::Zero(basis.dim());
    for (const auto& [occ, amp] : terms) amps(basis.index_of(occ)) = amp;
    return StateVector(basis, std::move(amps));
}

}  // namespace

std::vector<NamedState> bell_and_ghz() {
    std::vector<NamedState> family;
    const double r = 1.0 / std::sqrt(2.0);

    const FockBasis pair({1, 1});
    family.push_back({"bell_one_boson",
                      amplitude_table(pair, {{{0, 1}, r}, {{1, 0}, r}}),
                      {{"variant", 0.0}}});
    family.push_back({"bell_one_boson",
                      amplitude_table(pair, {{{0, 1}, r}, {{1, 0}, -r}}),
                      {{"variant", 1.0}}});

    const FockBasis four({1, 1, 1, 1});
    family.push_back({"bell_two_boson",
                      amplitude_table(four, {{{1, 0, 0, 1}, r}, {{0, 1, 1, 0}, -r}}),
                      {{"variant", 0.0}}});
    family.push_back({"bell_two_boson",
                      amplitude_table(four, {{{0, 1, 0, 1}, 1.0}}),
                      {{"variant", 1.0}}});
    family.push_back({"bell_two_boson",
                      amplitude_table(four, {{{1, 0, 0, 1}, r}, {{0, 1, 1, 0}, r}}),
                      {{"variant", 2.0}}});
    family.push_back({"bell_two_boson",
                      amplitude_table(four, {{{1, 0, 1, 0}, 1.0}}),
                      {{"variant", 3.0}}});

    const FockBasis three({1, 1, 1});
    family.push_back({"ghz",
                      amplitude_table(three, {{{1, 1, 1}, r}, {{0, 0, 0}, r}}),
                      {}});
    return family;
}

DensityOperator verstraete_state() {
    const FockBasis pair({1, 1});
    const FockBasis single({1});
    Matrix rho = Matrix::Zero(pair.dim(), pair.dim());
    const complex i_unit(0.0, 1.0);
    for (const complex omega : {complex(1.0), i_unit, complex(-1.0), -i_unit}) {
        Vector psi(2);
        psi << 1.0 / std::sqrt(2.0), omega / std::sqrt(2.0);
        const Matrix p = psi * psi.adjoint();
        const DensityOperator factor(single, p);
        rho += 0.25 * tensor(factor, factor).matrix();
    }
    return DensityOperator(pair, std::move(rho));
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("named_state: missing parameter --" + key);
    }
    return it->second;
}

double get_param_or(const std::map<std::string, double>& params, const std::string& key,
                    double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, double>& params, const std::string& key) {
    const double value = get_param(params, key);
    const int rounded = static_cast<int>(std::llround(value));
    if (std::abs(value - rounded) > 1e-9) {
        throw std::invalid_argument("named_state: parameter " + key + " must be an integer");
    }
    return rounded;
}

void attach_euler(NamedState& named, double alpha, double beta, double gamma) {
    named.params["euler_alpha"] = alpha;
    named.params["euler_beta"] = beta;
    named.params["euler_gamma"] = gamma;
}

}  // namespace

NamedState named_state(const std::string& label, const std::map<std::string, double>& params) {
    if (label == "fock") {
        const int n = int_param(params, "n");
        require(n >= 0, "named_state: fock occupancy must be >= 0");
        const int cutoff = static_cast<int>(get_param_or(params, "cutoff", n));
        require(cutoff >= n, "named_state: fock cutoff below occupancy");
        Vector amps = Vector::Zero(cutoff + 1);
        amps(n) = 1.0;
        return {label, StateVector(FockBasis({cutoff}), std::move(amps)),
                {{"n", static_cast<double>(n)}}};
    }
    if (label == "coherent") {
        const double abs_alpha = get_param(params, "abs_alpha");
        const int n_max = static_cast<int>(
            get_param_or(params, "n_max", coherent_cutoff(abs_alpha)));
        return {label, coherent_state(complex(abs_alpha, 0.0), n_max),
                {{"abs_alpha", abs_alpha}, {"n_max", static_cast<double>(n_max)}}};
    }
    if (label == "mixed_two_mode_coherent") {
        const double abs_alpha = get_param(params, "abs_alpha");
        const int n_max = static_cast<int>(
            get_param_or(params, "n_max", coherent_cutoff(abs_alpha)));
        return {label, mixed_two_mode_coherent(abs_alpha, n_max),
                {{"abs_alpha", abs_alpha}, {"n_max", static_cast<double>(n_max)}}};
    }
    if (label == "noon") {
        const int n = int_param(params, "N");
        const double theta = get_param(params, "theta");
        NamedState named{label, noon_state(n, theta),
                         {{"N", static_cast<double>(n)}, {"theta", theta}}};
        // The z-rotation by pi/4 symmetrizes the transverse variances (the
        // cross covariances vanish, so it averages them to N/4 exactly),
        // realizing the isotropic closed-form moment table at every N >= 2;
        // for N >= 3 the bare frame is already isotropic and the rotation
        // changes nothing.
        attach_euler(named, kPi / 4.0, 0.0, 0.0);
        return named;
    }
    if (label == "binomial") {
        const int n = int_param(params, "N");
        const double theta = get_param(params, "theta");
        const double chi = get_param_or(params, "chi", 0.0);
        NamedState named{label, binomial_state(n, theta, chi),
                         {{"N", static_cast<double>(n)}, {"theta", theta}, {"chi", chi}}};
        attach_euler(named, -kPi + chi, -2.0 * theta, -kPi);
        return named;
    }
    if (label == "relative_phase") {
        const int n = int_param(params, "N");
        const int p = int_param(params, "p");
        const double theta_p = 2.0 * kPi * p / (n + 1.0);
        NamedState named{label, relative_phase_state(n, p),
                         {{"N", static_cast<double>(n)}, {"p", static_cast<double>(p)}}};
        attach_euler(named, -kPi + theta_p, -kPi / 2.0, -kPi);
        return named;
    }
    if (label == "bell_one_boson" || label == "bell_two_boson" || label == "ghz") {
        const int variant =
            label == "ghz" ? 0 : static_cast<int>(get_param_or(params, "variant", 0.0));
        for (NamedState& named : bell_and_ghz()) {
            if (named.label == label &&
                static_cast<int>(get_param_or(named.params, "variant", 0.0)) == variant) {
                return std::move(named);
            }
        }
        throw std::invalid_argument("named_state: unknown variant for " + label);
    }
    if (label == "verstraete") {
        return {label, verstraete_state(), {}};
    }
    throw std::invalid_argument("named_state: unknown state label '" + label + "'");
}

}  // namespace boson
