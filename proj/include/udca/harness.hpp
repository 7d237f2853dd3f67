#pragma once

#include "udca/budget.hpp"
#include "udca/errors.hpp"
#include "udca/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace udca::cli {

/// Configuration for the randomized property harness. Reports echo every
/// field so any run can be reproduced from its own output.
struct HarnessConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t dim = 2;
    std::string system = "mnat";        // "mnat", "b4", or a JSON file path
    std::string generator = "zonotope"; // zonotope | gpolymatroid | mixed
    Budget budget = Budget::current();

    void validate() const;  // raises on bad fields
};

struct DecomposeArgs {
    std::string system_file;
    std::string p1_file;
    std::string p2_file;
    std::string z_text;                 // "1,2" or "[1,2]"
    std::string strategy = "iterative"; // iterative | vertex
    bool unchecked_system = false;      // skip unimodularity validation
    bool skip_class_check = false;
};

/// Property-false errors exit 1, unusable input or configuration exits 2.
int exit_code_for(const Error& e);

/// All commands print a JSON report to `out` and return the process exit
/// code: 0 property-true/success, 1 property-false with witness, 2 error.
int cmd_check(const std::string& kind, const std::vector<std::string>& files,
              std::ostream& out, const Budget& budget = Budget::current());
int cmd_examples(std::ostream& out, const Budget& budget = Budget::current());
int cmd_verify(const HarnessConfig& cfg, std::ostream& out);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  const Budget& budget = Budget::current());
int cmd_sum(const std::string& file1, const std::string& file2, std::ostream& out);
int cmd_hull(const std::string& file, std::ostream& out,
             const Budget& budget = Budget::current());
int cmd_lattice_points(const std::string& file, std::ostream& out,
                       const Budget& budget = Budget::current());

IntVec parse_point_text(const std::string& text);

}  // namespace udca::cli
