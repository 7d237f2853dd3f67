#include "udca/harness.hpp"

#include "udca/decompose.hpp"
#include "udca/generators.hpp"
#include "udca/linalg.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

namespace udca::cli {

namespace {

constexpr int kSchemaVersion = 1;

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

Json point_json(const IntVec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

Json error_report(const Error& e) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["error"] = Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    return j;
}

Json internal_error_report(const std::exception& e) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["error"] = Json{{"kind", "InternalError"}, {"message", e.what()}};
    return j;
}

bool property_false_kind(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotUnimodular:
        case ErrorKind::NotUnimodularTransform:
        case ErrorKind::NotSubmodular:
        case ErrorKind::NotSupermodular:
        case ErrorKind::NotParamodular:
        case ErrorKind::NotInSum:
        case ErrorKind::IntegralityFailure:
        case ErrorKind::ClassViolation:
        case ErrorKind::SpanFailure:
        case ErrorKind::FixtureMismatch:
            return true;
        default:
            return false;
    }
}

Json unimodular_witness(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() < n || rank(m) != n)
        return Json{{"reason", "rank-deficient"}, {"rank", rank(m)}};
    auto cols = first_combination(n);
    do {
        const Int det = determinant(m.columns_subset(cols));
        if (det != 0 && det != 1 && det != -1)
            return Json{{"reason", "bad maximal minor"},
                        {"columns", cols},
                        {"determinant", int_to_json(det)}};
    } while (next_combination(cols, m.cols()));
    return Json();
}

Json tu_witness(const IntMatrix& m) {
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        auto rows = first_combination(k);
        do {
            auto cols = first_combination(k);
            do {
                IntMatrix sub(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c)
                        sub.at(r, c) = m.at(rows[r], cols[c]);
                const Int det = determinant(sub);
                if (det != 0 && det != 1 && det != -1)
                    return Json{{"reason", "bad minor"},
                                {"rows", rows},
                                {"columns", cols},
                                {"determinant", int_to_json(det)}};
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return Json();
}

Json mnat_witness(const LatticeSet& s) {
    for (const IntVec& x : s.points()) {
        for (const IntVec& y : s.points()) {
            const Supports sup = supports(sub(x, y));
            for (std::size_t i : sup.positive) {
                IntVec xd = x;
                xd[i] -= 1;
                IntVec yu = y;
                yu[i] += 1;
                if (s.contains(xd) && s.contains(yu)) continue;
                bool fixed = false;
                for (std::size_t j : sup.negative) {
                    IntVec xj = xd;
                    xj[j] += 1;
                    IntVec yj = yu;
                    yj[j] -= 1;
                    if (s.contains(xj) && s.contains(yj)) {
                        fixed = true;
                        break;
                    }
                }
                if (!fixed)
                    return Json{{"x", point_json(x)}, {"y", point_json(y)}, {"index", i}};
            }
        }
    }
    return Json();
}

Json lnat_witness(const LatticeSet& s) {
    const auto& pts = s.points();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            IntVec up(s.dim()), down(s.dim());
            for (std::size_t i = 0; i < s.dim(); ++i) {
                const Int t = pts[a][i] + pts[b][i];
                up[i] = half_ceil(t);
                down[i] = half_floor(t);
            }
            if (!s.contains(up) || !s.contains(down)) {
                Json w;
                w["x"] = point_json(pts[a]);
                w["y"] = point_json(pts[b]);
                w["midpoint_ceil"] = point_json(up);
                w["midpoint_floor"] = point_json(down);
                w["ceil_missing"] = !s.contains(up);
                w["floor_missing"] = !s.contains(down);
                return w;
            }
        }
    return Json();
}

// Duplicate or negated columns never change the class; surface them
// anyway whenever a system comes in from a file.
Json system_diagnostics(const UnimodularSystem& sys) {
    const auto pairs = sys.redundant_column_pairs();
    if (pairs.empty()) return Json();
    Json arr = Json::array();
    for (const auto& [i, j] : pairs) arr.push_back(Json::array({i, j}));
    return Json{{"redundant_column_pairs", arr}};
}

Json class_witness_json(const ClassWitness& w) {
    Json j;
    if (w.kind == ClassWitness::Kind::FractionalVertex) {
        j["kind"] = "fractional_vertex";
        Json v = Json::array();
        for (const Rat& c : w.vertex) v.push_back(rat_to_json(c));
        j["vertex"] = v;
    } else {
        j["kind"] = "face_span_not_generated";
        j["face_vertex_indices"] = w.face_vertices;
        j["face_span"] = subspace_to_json(w.face_span);
    }
    return j;
}

}  // namespace

int exit_code_for(const Error& e) { return property_false_kind(e.kind()) ? 1 : 2; }

IntVec parse_point_text(const std::string& text) {
    std::string t = text;
    std::erase_if(t, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
    IntVec z;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            z.emplace_back(item);
        } catch (const std::exception&) {
            raise(ErrorKind::ParseError, "bad coordinate '" + item + "' in point");
        }
    }
    require(!z.empty(), ErrorKind::ParseError, "empty point");
    return z;
}

void HarnessConfig::validate() const {
    require(trials >= 1, ErrorKind::ParseError, "trials must be >= 1");
    require(dim >= 1 && dim <= 5, ErrorKind::ParseError, "dim must be in 1..5");
    require(generator == "zonotope" || generator == "gpolymatroid" || generator == "mixed",
            ErrorKind::ParseError, "generator must be zonotope, gpolymatroid, or mixed");
    require(budget.hull_subsets > 0 && budget.faces > 0 && budget.lattice_box > 0 &&
                budget.minors > 0,
            ErrorKind::ParseError, "budgets must be positive");
    if (generator != "zonotope")
        require(system == "mnat", ErrorKind::ParseError,
                "the g-polymatroid generator produces members of the mnat class only");
}

int cmd_check(const std::string& kind, const std::vector<std::string>& files,
              std::ostream& out, const Budget& budget) {
    Json report;
    report["schema"] = kSchemaVersion;
    report["check"] = kind;
    report["inputs"] = files;
    try {
        bool result = false;
        Json witness;
        if (kind == "unimodular") {
            require(files.size() == 1, ErrorKind::ParseError, "check unimodular needs one file");
            const IntMatrix m = matrix_from_json(load_json_file(files[0]));
            result = is_unimodular(m);
            if (!result) witness = unimodular_witness(m);
        } else if (kind == "tu") {
            require(files.size() == 1, ErrorKind::ParseError, "check tu needs one file");
            const IntMatrix m = matrix_from_json(load_json_file(files[0]));
            result = is_totally_unimodular(m, budget);
            if (!result) witness = tu_witness(m);
        } else if (kind == "class") {
            require(files.size() == 2, ErrorKind::ParseError,
                    "check class needs a system file and a polytope file");
            const UnimodularSystem sys = system_from_json(load_json_file(files[0]));
            const Polytope p = polytope_from_json(load_json_file(files[1]), budget);
            const Json diag = system_diagnostics(sys);
            if (!diag.is_null()) report["system_diagnostics"] = diag;
            const ClassCheckResult res = in_class(sys, p, budget);
            result = res.member;
            if (res.witness) witness = class_witness_json(*res.witness);
        } else if (kind == "mnat") {
            require(files.size() == 1, ErrorKind::ParseError, "check mnat needs one file");
            const LatticeSet s = lattice_set_from_json(load_json_file(files[0]));
            result = is_mnat_convex(s);
            if (!result) witness = mnat_witness(s);
        } else if (kind == "lnat") {
            require(files.size() == 1, ErrorKind::ParseError, "check lnat needs one file");
            const LatticeSet s = lattice_set_from_json(load_json_file(files[0]));
            result = is_lnat_convex(s);
            if (!result) witness = lnat_witness(s);
        } else if (kind == "nohole") {
            require(files.size() == 1, ErrorKind::ParseError, "check nohole needs one file");
            const LatticeSet s = lattice_set_from_json(load_json_file(files[0]));
            result = no_hole_check(s);
            if (!result) {
                const LatticeSet holes = lattice_points(hull(s, budget), budget);
                Json missing = Json::array();
                for (const IntVec& p : holes.points())
                    if (!s.contains(p)) missing.push_back(point_json(p));
                witness = Json{{"missing_points", missing}};
            }
        } else {
            raise(ErrorKind::ParseError, "unknown check kind '" + kind + "'");
        }
        report["result"] = result;
        if (!result && !witness.is_null()) report["witness"] = witness;
        emit(out, report);
        return result ? 0 : 1;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

namespace {

struct ExampleItem {
    std::string name;
    bool pass;
    Json detail;
};

LatticeSet ls2(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<IntVec> v;
    for (auto [a, b] : pts) v.push_back(IntVec{Int(a), Int(b)});
    return LatticeSet(2, std::move(v));
}

LatticeSet ls3(std::initializer_list<std::array<int, 3>> pts) {
    std::vector<IntVec> v;
    for (auto p : pts) v.push_back(IntVec{Int(p[0]), Int(p[1]), Int(p[2])});
    return LatticeSet(3, std::move(v));
}

}  // namespace

int cmd_examples(std::ostream& out, const Budget& budget) {
  try {
    std::vector<ExampleItem> items;
    auto add = [&items](std::string name, bool pass, Json detail = Json()) {
        items.push_back({std::move(name), pass, std::move(detail)});
    };

    const LatticeSet s1_2d = ls2({{0, 0}, {1, 1}});
    const LatticeSet s2_2d = ls2({{1, 0}, {0, 1}});
    const LatticeSet sum_2d = minkowski_sum(s1_2d, s2_2d);
    const LatticeSet expected_2d = ls2({{1, 0}, {0, 1}, {2, 1}, {1, 2}});
    add("planar_pair_sum", sum_2d == expected_2d, lattice_set_to_json(sum_2d));

    const LatticeSet filled_2d = lattice_points(hull(sum_2d, budget), budget);
    const IntVec hole{Int(1), Int(1)};
    add("planar_pair_hole",
        filled_2d.contains(hole) && !sum_2d.contains(hole) &&
            !sum_no_hole_check(s1_2d, s2_2d),
        Json{{"hole", Json::array({1, 1})}});

    const LatticeSet s1_3d = ls3({{{0, 0, 0}}, {{1, 1, 0}}});
    const LatticeSet s2_3d = ls3({{{0, 0, 0}}, {{0, 1, 1}}});
    const LatticeSet sum_3d = minkowski_sum(s1_3d, s2_3d);
    const LatticeSet expected_3d = ls3({{{0, 0, 0}}, {{0, 1, 1}}, {{1, 1, 0}}, {{1, 2, 1}}});
    add("spatial_pair_sum", sum_3d == expected_3d, lattice_set_to_json(sum_3d));
    add("spatial_pair_sum_no_hole", sum_no_hole_check(s1_3d, s2_3d));

    const IntVec lo{Int(0), Int(0), Int(0)}, hi_pt{Int(1), Int(2), Int(1)};
    IntVec mid_up(3), mid_down(3);
    for (std::size_t i = 0; i < 3; ++i) {
        mid_up[i] = half_ceil(lo[i] + hi_pt[i]);
        mid_down[i] = half_floor(lo[i] + hi_pt[i]);
    }
    add("spatial_pair_midpoint_violation",
        !is_lnat_convex(sum_3d) && mid_up == IntVec{Int(1), Int(1), Int(1)} &&
            mid_down == IntVec{Int(0), Int(1), Int(0)} && !sum_3d.contains(mid_up) &&
            !sum_3d.contains(mid_down),
        Json{{"midpoint_ceil", Json::array({1, 1, 1})},
             {"midpoint_floor", Json::array({0, 1, 0})}});
    add("spatial_pair_summands_lnat", is_lnat_convex(s1_3d) && is_lnat_convex(s2_3d));

    const IntMatrix mnat4_expected = IntMatrix::from_rows({
        {1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
        {0, 1, 0, 0, -1, 0, 0, 1, 1, 0},
        {0, 0, 1, 0, 0, -1, 0, -1, 0, 1},
        {0, 0, 0, 1, 0, 0, -1, 0, -1, -1},
    });
    const UnimodularSystem mnat4 = system_mnat(4);
    add("mnat_system_n4", mnat4.matrix() == mnat4_expected && is_unimodular(mnat4.matrix()),
        matrix_to_json(mnat4.matrix()));
    add("b4_system", is_unimodular(system_b4().matrix()) && rank(system_b4().matrix()) == 4,
        matrix_to_json(system_b4().matrix()));

    // Forcing the planar pair through the decomposition with the system of
    // its own segment directions: the coefficient solve leaks halves.
    bool integrality_failed = false;
    std::string failure_text;
    try {
        const UnimodularSystem smuggled = UnimodularSystem::unchecked(
            IntMatrix::from_rows({{1, -1}, {1, 1}}), "segment-directions");
        const Polytope p1 = hull(s1_2d, budget);
        const Polytope p2 = hull(s2_2d, budget);
        integral_decompose(smuggled, p1, p2, IntVec{Int(1), Int(1)}, {}, budget);
    } catch (const Error& e) {
        integrality_failed = e.kind() == ErrorKind::IntegralityFailure;
        failure_text = e.what();
    }
    add("planar_pair_integrality_failure", integrality_failed, Json(failure_text));

    bool rejected = false;
    try {
        UnimodularSystem::checked(IntMatrix::from_rows({{1, 1}, {1, -1}}));
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::NotUnimodular;
    }
    add("non_unimodular_system_rejected", rejected);

    Json report;
    report["schema"] = kSchemaVersion;
    Json jitems = Json::array();
    bool all_pass = true;
    for (const ExampleItem& item : items) {
        Json ji;
        ji["name"] = item.name;
        ji["pass"] = item.pass;
        if (!item.detail.is_null()) ji["detail"] = item.detail;
        jitems.push_back(ji);
        all_pass = all_pass && item.pass;
    }
    report["items"] = jitems;
    report["ok"] = all_pass;
    emit(out, report);
    return all_pass ? 0 : 1;
  } catch (const Error& e) {
    emit(out, error_report(e));
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit(out, internal_error_report(e));
    return 2;
  }
}

namespace {

UnimodularSystem resolve_system(const HarnessConfig& cfg) {
    if (cfg.system == "mnat") return system_mnat(cfg.dim);
    if (cfg.system == "b4") {
        require(cfg.dim == 4, ErrorKind::ParseError, "system b4 is 4-dimensional");
        return system_b4();
    }
    UnimodularSystem sys = system_from_json(load_json_file(cfg.system));
    require(sys.dim() == cfg.dim, ErrorKind::DimensionMismatch,
            "system dimension does not match --dim");
    return sys;
}

struct TrialInstance {
    Polytope polytope;
    Json description;
};

TrialInstance draw_zonotope(gen::Rng& rng, const UnimodularSystem& sys, std::size_t dim,
                            const Budget& budget) {
    const std::size_t max_generators = dim >= 4 ? 3 : 4;
    const gen::ZonotopeSpec spec = gen::random_zonotope_spec(rng, sys, max_generators, 2, 2);
    TrialInstance t{gen::realize_zonotope(sys, spec, budget), Json()};
    Json mults = Json::array();
    for (const Int& m : spec.multiplicities) mults.push_back(int_to_json(m));
    Json trans = Json::array();
    for (const Int& v : spec.translation) trans.push_back(int_to_json(v));
    t.description = Json{{"kind", "zonotope"},
                         {"columns", spec.columns},
                         {"multiplicities", mults},
                         {"translation", trans}};
    return t;
}

TrialInstance draw_gpolymatroid(gen::Rng& rng, std::size_t dim, const Budget& budget) {
    const std::int64_t range = dim <= 2 ? 3 : (dim == 3 ? 2 : 1);
    const std::int64_t width = dim <= 2 ? 3 : (dim == 3 ? 2 : 1);
    const gen::GPolymatroidSpec spec = gen::random_gpolymatroid(rng, dim, range, width);
    const LatticeSet pts = gpolymatroid_points(spec.rho, spec.mu);
    TrialInstance t{hull(pts, budget), Json()};
    t.description = Json{{"kind", "gpolymatroid"},
                         {"n", dim},
                         {"rho", set_function_to_json(spec.rho)},
                         {"mu", set_function_to_json(spec.mu)}};
    return t;
}

}  // namespace

int cmd_verify(const HarnessConfig& cfg, std::ostream& out) {
    try {
        cfg.validate();
        const UnimodularSystem sys = resolve_system(cfg);
        const bool mnat_checks = cfg.system == "mnat";
        gen::Rng rng(cfg.seed);

        Json results = Json::array();
        Json failures = Json::array();
        std::size_t total_points = 0, total_decompositions = 0, total_passes = 0;

        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            std::string kind = cfg.generator;
            if (kind == "mixed") kind = trial % 2 == 0 ? "zonotope" : "gpolymatroid";
            auto draw = [&](void) {
                return kind == "zonotope" ? draw_zonotope(rng, sys, cfg.dim, cfg.budget)
                                          : draw_gpolymatroid(rng, cfg.dim, cfg.budget);
            };
            Json record;
            record["trial"] = trial;
            record["generator"] = kind;
            try {
                const TrialInstance a = draw();
                const TrialInstance b = draw();
                record["p1"] = a.description;
                record["p2"] = b.description;
                const Dcp2Report rep = verify_dcp2(sys, a.polytope, b.polytope, cfg.budget);
                bool trial_ok = rep.ok;
                Json extra;
                if (mnat_checks) {
                    const LatticeSet brute = minkowski_sum(
                        lattice_points(a.polytope, cfg.budget),
                        lattice_points(b.polytope, cfg.budget));
                    const bool sum_mnat = is_mnat_convex(brute);
                    const bool sum_filled = no_hole_check(brute);
                    extra = Json{{"sum_mnat_convex", sum_mnat}, {"sum_no_hole", sum_filled}};
                    trial_ok = trial_ok && sum_mnat && sum_filled;
                }
                record["ok"] = trial_ok;
                record["lattice_points"] = rep.sum_lattice_count;
                record["decomposed"] = rep.decomposed_count;
                record["iterative_passes"] = rep.iterative_passes;
                if (!extra.is_null()) record["mnat_cross_checks"] = extra;
                total_points += rep.sum_lattice_count;
                total_decompositions += rep.decomposed_count;
                total_passes += rep.iterative_passes;
                if (!trial_ok) {
                    Json fail = record;
                    fail["dcp2"] = dcp2_report_to_json(rep);
                    fail["p1_polytope"] = polytope_to_json(a.polytope);
                    fail["p2_polytope"] = polytope_to_json(b.polytope);
                    failures.push_back(fail);
                }
            } catch (const std::exception& e) {
                record["ok"] = false;
                record["exception"] = e.what();
                failures.push_back(record);
            }
            results.push_back(record);
        }

        Json report;
        report["schema"] = kSchemaVersion;
        report["seed"] = cfg.seed;
        report["config"] = Json{{"trials", cfg.trials},
                                {"dim", cfg.dim},
                                {"system", cfg.system},
                                {"generator", cfg.generator}};
        report["totals"] = Json{{"lattice_points", total_points},
                                {"decompositions", total_decompositions},
                                {"iterative_passes", total_passes}};
        report["results"] = results;
        report["failures"] = failures;
        report["ok"] = failures.empty();
        emit(out, report);
        return failures.empty() ? 0 : 1;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out, const Budget& budget) {
    try {
        const UnimodularSystem sys =
            system_from_json(load_json_file(args.system_file), !args.unchecked_system);
        const Polytope p1 = polytope_from_json(load_json_file(args.p1_file), budget);
        const Polytope p2 = polytope_from_json(load_json_file(args.p2_file), budget);
        const IntVec z = parse_point_text(args.z_text);
        DecomposeOptions opts;
        if (args.strategy == "vertex") opts.strategy = SplitStrategy::Vertex;
        else require(args.strategy == "iterative", ErrorKind::ParseError,
                     "strategy must be iterative or vertex");
        opts.check_class = !args.skip_class_check;
        const Decomposition d = integral_decompose(sys, p1, p2, z, opts, budget);
        Json report;
        report["schema"] = kSchemaVersion;
        const Json diag = system_diagnostics(sys);
        if (!diag.is_null()) report["system_diagnostics"] = diag;
        report["decomposition"] = decomposition_to_json(d);
        emit(out, report);
        return 0;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

int cmd_sum(const std::string& file1, const std::string& file2, std::ostream& out) {
    try {
        const LatticeSet s1 = lattice_set_from_json(load_json_file(file1));
        const LatticeSet s2 = lattice_set_from_json(load_json_file(file2));
        Json report;
        report["schema"] = kSchemaVersion;
        report["sum"] = lattice_set_to_json(minkowski_sum(s1, s2));
        emit(out, report);
        return 0;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

int cmd_hull(const std::string& file, std::ostream& out, const Budget& budget) {
    try {
        const Json j = load_json_file(file);
        Polytope p = j.contains("points") ? hull(lattice_set_from_json(j), budget)
                                          : polytope_from_json(j, budget);
        Json report;
        report["schema"] = kSchemaVersion;
        report["polytope"] = polytope_to_json(p);
        emit(out, report);
        return 0;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

int cmd_lattice_points(const std::string& file, std::ostream& out, const Budget& budget) {
    try {
        const Json j = load_json_file(file);
        Polytope p = j.contains("points") ? hull(lattice_set_from_json(j), budget)
                                          : polytope_from_json(j, budget);
        Json report;
        report["schema"] = kSchemaVersion;
        report["lattice_points"] = lattice_set_to_json(lattice_points(p, budget));
        emit(out, report);
        return 0;
    } catch (const Error& e) {
        emit(out, error_report(e));
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(out, internal_error_report(e));
        return 2;
    }
}

}  // namespace udca::cli
