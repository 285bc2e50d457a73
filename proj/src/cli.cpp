// Command-line driver: argument parsing with CLI11, document assembly with
// ordered JSON so identical invocations produce identical bytes, dispatch to
// the state/analysis/witness/region/process layers.

#include "boson/cli.hpp"

#include "boson/fock.hpp"
#include "boson/processes.hpp"
#include "boson/regions.hpp"
#include "boson/spin.hpp"
#include "boson/states.hpp"
#include "boson/witnesses.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace boson {

namespace {

using json = nlohmann::ordered_json;

json params_json(const std::string& label, const std::map<std::string, double>& params) {
    json out;
    out["label"] = label;
    for (const auto& [key, value] : params) out[key] = value;
    return out;
}

json verdict_json(const WitnessVerdict& v) {
    json out;
    out["name"] = v.name;
    out["lhs"] = v.lhs;
    out["rhs"] = v.rhs;
    out["triggered"] = v.triggered;
    out["paper_eq"] = v.paper_eq;
    out["applicable"] = v.applicable;
    return out;
}

// Two levels of headroom on product bases so hop/quadrature second moments
// are exact for states that fill a mode (mirrors witness_battery).
DensityOperator roomy_density(const NamedState& state) {
    DensityOperator rho = state.density();
    if (rho.basis().is_sector()) return rho;
    std::vector<int> cutoffs = rho.basis().cutoffs();
    for (int& c : cutoffs) c += 2;
    return pad_density(rho, cutoffs);
}

json describe_state(const NamedState& state) {
    const FockBasis& basis = state.basis();
    json doc;
    doc["state"] = params_json(state.label, state.params);
    json shape;
    shape["kind"] = basis.is_sector() ? "sector" : "product";
    shape["modes"] = basis.modes();
    shape["dim"] = basis.dim();
    if (basis.is_sector())
        shape["total"] = basis.sector_total();
    else
        shape["cutoffs"] = basis.cutoffs();
    doc["basis"] = shape;
    doc["pure"] = state.is_pure();
    doc["results"] = json::array();
    return doc;
}

json analyze_state(const NamedState& state) {
    if (state.basis().modes() < 2)
        throw std::invalid_argument("analyze: the state must span at least two modes");
    const DensityOperator rho = roomy_density(state);
    const SpinFrame storage = spin_frame(rho.basis(), 0, 1);

    json doc;
    doc["state"] = params_json(state.label, state.params);
    SpinFrame analysis = storage;
    if (state.params.count("euler_alpha")) {
        const std::array<double, 3> euler{state.params.at("euler_alpha"),
                                          state.params.at("euler_beta"),
                                          state.params.at("euler_gamma")};
        analysis = rotated_frame(storage,
                                 euler_to_spin_rotation(euler[0], euler[1], euler[2]));
        doc["frame"] = "designated";
        doc["euler"] = euler;
    } else {
        const PrincipalFrame principal =
            principal_axes(bloch_and_covariance(rho, storage), storage);
        analysis = principal.j_frame;
        doc["frame"] = "principal";
        doc["euler"] = principal.euler;
    }

    const BlochReport report = bloch_and_covariance(rho, analysis);
    doc["bloch"] = {report.mean(0), report.mean(1), report.mean(2)};
    doc["var"] = {report.cov(0, 0), report.cov(1, 1), report.cov(2, 2)};
    doc["total_number"] = expectation(rho, storage.n_total).real();
    doc["results"] = json::array();
    return doc;
}

json witness_state(const NamedState& state, bool all_verdicts) {
    json doc;
    doc["state"] = params_json(state.label, state.params);
    doc["results"] = json::array();
    for (const WitnessVerdict& v : witness_battery(state)) {
        if (all_verdicts || v.triggered) doc["results"].push_back(verdict_json(v));
    }
    return doc;
}

json region_document(const RunConfig& config, const std::vector<RegionRow>& rows) {
    json doc;
    json params;
    params["label"] = "region";
    params["J"] = config.total_spin;
    params["xi"] = config.xi;
    params["points"] = config.n_points;
    doc["state"] = params;
    doc["rows"] = json::array();
    for (const RegionRow& row : rows) {
        json r;
        r["jz_over_J"] = row.jz_abs / config.total_spin;
        r["lower_over_J"] = row.lower ? json(*row.lower / config.total_spin) : json();
        r["upper_over_J"] = row.upper ? json(*row.upper / config.total_spin) : json();
        r["squeeze_line_over_J"] = row.squeeze_line / config.total_spin;
        r["feasible"] = row.feasible;
        doc["rows"].push_back(std::move(r));
    }
    doc["results"] = json::array();
    return doc;
}

json process_document(const RunConfig& config) {
    const ProcessResult result =
        dowling_fock(config.n_reservoir, config.phi, config.kappa);
    json doc;
    json params;
    params["label"] = "dowling_fock";
    params["n"] = config.n_reservoir;
    params["phi"] = config.phi;
    params["kappa"] = config.kappa;
    doc["state"] = params;
    json observables;
    for (const auto& [key, value] : result.observables) observables[key] = value;
    doc["observables"] = observables;
    doc["stages"] = json::array();
    for (const auto& [label, duration] : result.stages)
        doc["stages"].push_back({label, duration});
    doc["results"] = json::array();
    return doc;
}

std::string suite_entry_name(const NamedState& state) {
    std::string name = state.label;
    const auto variant = state.params.find("variant");
    if (variant != state.params.end())
        name += "[" + std::to_string(static_cast<int>(variant->second)) + "]";
    return name;
}

json suite_document() {
    std::vector<NamedState> states;
    states.push_back(
        named_state("noon", {{"N", 4.0}, {"theta", std::numbers::pi / 4.0}}));
    states.push_back(named_state(
        "binomial", {{"N", 4.0}, {"theta", std::numbers::pi / 6.0}, {"chi", 0.0}}));
    states.push_back(named_state("relative_phase", {{"N", 8.0}, {"p", 0.0}}));
    states.push_back(
        named_state("mixed_two_mode_coherent", {{"abs_alpha", std::sqrt(2.0)}}));
    states.push_back(named_state("verstraete", {}));
    for (const NamedState& s : bell_and_ghz()) states.push_back(s);

    json doc;
    json params;
    params["label"] = "suite";
    params["states"] = static_cast<int>(states.size());
    doc["state"] = params;
    doc["results"] = json::array();
    for (const NamedState& state : states) {
        const std::string prefix = suite_entry_name(state);
        for (const WitnessVerdict& v : witness_battery(state)) {
            json entry = verdict_json(v);
            entry["name"] = prefix + "." + v.name;
            doc["results"].push_back(std::move(entry));
        }
    }
    return doc;
}

int emit(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        std::cerr << "usage error: cannot open output path " << *path << "\n";
        return 2;
    }
    out << text;
    if (!out) {
        std::cerr << "usage error: failed writing output path " << *path << "\n";
        return 2;
    }
    return 0;
}

int dispatch(const RunConfig& config) {
    std::string text;
    if (config.command == Command::region) {
        const std::vector<RegionRow> rows =
            region_grid(config.total_spin, config.xi, config.n_points);
        if (config.format == OutputFormat::csv)
            text = region_csv(rows, config.total_spin);
        else
            text = region_document(config, rows).dump(2) + "\n";
        return emit(text, config.output_path);
    }
    if (config.format == OutputFormat::csv)
        throw std::invalid_argument("csv output is defined for region data only");

    json doc;
    switch (config.command) {
        case Command::state:
            doc = describe_state(named_state(config.state_label, config.state_params));
            break;
        case Command::analyze:
            doc = analyze_state(named_state(config.state_label, config.state_params));
            break;
        case Command::witness:
            doc = witness_state(named_state(config.state_label, config.state_params),
                                config.all_verdicts);
            break;
        case Command::process:
            doc = process_document(config);
            break;
        case Command::suite:
            doc = suite_document();
            break;
        case Command::region:
            break;  // handled above
    }
    return emit(doc.dump(2) + "\n", config.output_path);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"two-mode bosonic entanglement laboratory"};

    std::string command;
    app.add_option("command", command, "state | analyze | witness | region | process | suite")
        ->required()
        ->check(CLI::IsMember({"state", "analyze", "witness", "region", "process", "suite"}));

    std::string state_label;
    int n_bosons = 0;
    double theta = 0.0, chi = 0.0, abs_alpha = 0.0;
    int phase_index = 0;
    auto* state_opt = app.add_option("--state", state_label, "catalog state label");
    auto* n_opt = app.add_option("--N", n_bosons, "total boson number");
    auto* theta_opt = app.add_option("--theta", theta, "polar angle (radians)");
    auto* chi_opt = app.add_option("--chi", chi, "azimuthal phase (radians)");
    auto* p_opt = app.add_option("--p", phase_index, "relative-phase index");
    auto* alpha_opt = app.add_option("--abs-alpha", abs_alpha, "coherent amplitude magnitude");

    RunConfig config;
    auto* j_opt = app.add_option("--J", config.total_spin, "total spin for region data");
    app.add_option("--xi", config.xi, "variance-product floor (>= 1)");
    app.add_option("--points", config.n_points, "region grid size");
    auto* phi_opt = app.add_option("--phi", config.phi, "free-stage phase (radians)");
    app.add_option("--kappa", config.kappa, "conversion coupling");
    auto* reservoir_opt = app.add_option("--n", config.n_reservoir, "reservoir occupation");
    app.add_option("--seed", config.seed, "rng seed (recorded; all commands deterministic)");
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    std::string out_path;
    auto* out_opt = app.add_option("--out", out_path, "output path (stdout otherwise)");
    app.add_flag("--all", config.all_verdicts,
                 "witness: include untriggered and inapplicable verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);
        std::cerr << "usage error: " << error.what() << "\n";
        return 2;
    }

    try {
        if (command == "state") config.command = Command::state;
        else if (command == "analyze") config.command = Command::analyze;
        else if (command == "witness") config.command = Command::witness;
        else if (command == "region") config.command = Command::region;
        else if (command == "process") config.command = Command::process;
        else config.command = Command::suite;

        config.format = (format == "csv") ? OutputFormat::csv : OutputFormat::json;
        if (out_opt->count() > 0) config.output_path = out_path;

        const bool needs_state = config.command == Command::state ||
                                 config.command == Command::analyze ||
                                 config.command == Command::witness;
        if (needs_state) {
            if (state_opt->count() == 0)
                throw std::invalid_argument("this command requires --state");
            config.state_label = state_label;
            if (n_opt->count() > 0) config.state_params["N"] = n_bosons;
            if (theta_opt->count() > 0) config.state_params["theta"] = theta;
            if (chi_opt->count() > 0) config.state_params["chi"] = chi;
            if (p_opt->count() > 0) config.state_params["p"] = phase_index;
            if (alpha_opt->count() > 0) config.state_params["abs_alpha"] = abs_alpha;
        }
        if (config.command == Command::region && j_opt->count() == 0)
            throw std::invalid_argument("region requires --J");
        if (config.command == Command::process) {
            if (reservoir_opt->count() == 0 || phi_opt->count() == 0)
                throw std::invalid_argument("process requires --n and --phi");
        }

        return dispatch(config);
    } catch (const invariant_error& error) {
        std::cerr << "invariant failure: " << error.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& error) {
        std::cerr << "usage error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}

}  // namespace boson
