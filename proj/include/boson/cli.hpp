// Command-line surface: builds catalog states, reports their spin moments,
// runs the entanglement-test battery, and emits region/process data as JSON
// or CSV.
//
// Grammar:
//   bosonlab <command> [--state LABEL --N INT --theta F --chi F --p INT
//                       --abs-alpha F] [--J F --xi F --points INT]
//                      [--phi F --kappa F --n INT] [--seed INT]
//                      [--format json|csv] [--out PATH] [--all]
// with command one of state | analyze | witness | region | process | suite.
//
// Exit codes: 0 success (output written), 2 usage error (unknown command or
// state label, malformed or missing parameters, unwritable output path),
// 1 numerical-invariant failure (diagnostic names the violated invariant).
//
// JSON documents always carry {state: {...params}, results: [{name, lhs,
// rhs, triggered, paper_eq, applicable}, ...]}; analyze adds bloch/var/euler
// arrays, region adds rows, process adds observables and stages.  CSV output
// is defined for region data only.  Identical argv yield byte-identical
// output.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace boson {

enum class Command { state, analyze, witness, region, process, suite };
enum class OutputFormat { json, csv };

struct RunConfig {
    Command command = Command::state;
    std::string state_label;
    std::map<std::string, double> state_params;
    double total_spin = 0.0;       // region --J
    double xi = 1.0;               // region --xi
    int n_points = 200;            // region --points
    double phi = 0.0;              // process --phi
    double kappa = 1.0;            // process --kappa
    int n_reservoir = 0;           // process --n
    bool all_verdicts = false;     // witness --all
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> output_path;
};

// Parses argv, dispatches, writes the document to --out or stdout, and
// returns the exit code described above.  Never throws.
int run(int argc, const char* const* argv);

}  // namespace boson
