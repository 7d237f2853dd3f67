#include "udca/budget.hpp"
#include "udca/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int finish(int code, const std::string& json_out, const std::ostringstream& captured) {
    if (json_out.empty()) {
        std::cout << captured.str();
    } else {
        std::ofstream f(json_out);
        if (!f) {
            std::cerr << "cannot write " << json_out << "\n";
            return 2;
        }
        f << captured.str();
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact discrete-convexity toolkit: unimodular systems, lattice "
                 "Minkowski sums, class checks, and integral decompositions"};
    app.require_subcommand(1);

    std::string json_out;
    app.add_option("--json-out", json_out, "write the JSON report to a file instead of stdout");

    std::uint64_t budget_faces = 0, budget_hull = 0, budget_lattice = 0, budget_minors = 0;
    app.add_option("--budget-faces", budget_faces, "cap on enumerated faces");
    app.add_option("--budget-hull", budget_hull, "cap on hull candidate subsets");
    app.add_option("--budget-lattice", budget_lattice, "cap on lattice scan cells");
    app.add_option("--budget-minors", budget_minors, "cap on minors tested");

    // check
    auto* check = app.add_subcommand("check", "run one predicate on JSON input");
    std::string check_kind;
    std::vector<std::string> check_files;
    check->add_option("kind", check_kind, "unimodular|tu|class|mnat|lnat|nohole")->required();
    check->add_option("files", check_files, "input files")->required();

    // examples
    auto* examples = app.add_subcommand("examples", "reproduce the worked fixtures");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized closure/decomposition harness");
    udca::cli::HarnessConfig cfg;
    verify->add_option("--seed", cfg.seed, "PRNG seed (echoed in the report)");
    verify->add_option("--trials", cfg.trials, "number of random pairs");
    verify->add_option("--dim", cfg.dim, "ambient dimension (1..5)");
    verify->add_option("--system", cfg.system, "mnat, b4, or a system JSON file");
    verify->add_option("--generator", cfg.generator, "zonotope|gpolymatroid|mixed");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "integral decomposition of one point");
    udca::cli::DecomposeArgs dargs;
    decompose->add_option("system", dargs.system_file, "system JSON file")->required();
    decompose->add_option("p1", dargs.p1_file, "first polytope JSON file")->required();
    decompose->add_option("p2", dargs.p2_file, "second polytope JSON file")->required();
    decompose->add_option("z", dargs.z_text, "integer point, e.g. \"1,2\"")->required();
    decompose->add_option("--strategy", dargs.strategy, "iterative|vertex");
    decompose->add_flag("--unchecked-system", dargs.unchecked_system,
                        "skip the unimodularity validation of the system");
    decompose->add_flag("--skip-class-check", dargs.skip_class_check,
                        "skip the class membership preconditions");

    // sum / hull / lattice-points
    auto* sum = app.add_subcommand("sum", "Minkowski sum of two lattice sets");
    std::string sum_a, sum_b;
    sum->add_option("s1", sum_a, "first lattice set JSON")->required();
    sum->add_option("s2", sum_b, "second lattice set JSON")->required();

    auto* hull_cmd = app.add_subcommand("hull", "convex hull with derived H-representation");
    std::string hull_file;
    hull_cmd->add_option("input", hull_file, "lattice set or polytope JSON")->required();

    auto* lp = app.add_subcommand("lattice-points", "integer points of a polytope");
    std::string lp_file;
    lp->add_option("input", lp_file, "lattice set or polytope JSON")->required();

    CLI11_PARSE(app, argc, argv);

    udca::Budget budget = udca::Budget::current();
    if (budget_faces) budget.faces = budget_faces;
    if (budget_hull) budget.hull_subsets = budget_hull;
    if (budget_lattice) budget.lattice_box = budget_lattice;
    if (budget_minors) budget.minors = budget_minors;
    cfg.budget = budget;

    std::ostringstream captured;
    int code = 2;
    if (*check) code = udca::cli::cmd_check(check_kind, check_files, captured, budget);
    else if (*examples) code = udca::cli::cmd_examples(captured, budget);
    else if (*verify) code = udca::cli::cmd_verify(cfg, captured);
    else if (*decompose) code = udca::cli::cmd_decompose(dargs, captured, budget);
    else if (*sum) code = udca::cli::cmd_sum(sum_a, sum_b, captured);
    else if (*hull_cmd) code = udca::cli::cmd_hull(hull_file, captured, budget);
    else if (*lp) code = udca::cli::cmd_lattice_points(lp_file, captured, budget);
    return finish(code, json_out, captured);
}
