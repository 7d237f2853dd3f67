#include "udca/json_io.hpp"

#include "udca/errors.hpp"

#include <fstream>

namespace udca {

namespace {

const Int kJsonIntLimit = Int(1) << 53;

// Translate nlohmann's type/access exceptions into the ParseError the CLI
// exit contract expects.
template <typename F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        raise(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json int_to_json(const Int& v) {
    if (abs(v) < kJsonIntLimit) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            raise(ErrorKind::ParseError, "bad integer string '" + j.get<std::string>() + "'");
        }
    }
    raise(ErrorKind::ParseError, "expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& v) { return Json(format_rat(v)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception&) {
            raise(ErrorKind::ParseError, "bad rational string '" + j.get<std::string>() + "'");
        }
    }
    raise(ErrorKind::ParseError, "expected a rational (integer or \"p/q\" string)");
}

namespace {

Json int_vec_to_json(const IntVec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

IntVec int_vec_from_json(const Json& j) {
    require(j.is_array(), ErrorKind::ParseError, "expected an array of integers");
    IntVec v;
    for (const Json& x : j) v.push_back(int_from_json(x));
    return v;
}

Json rat_vec_to_json(const RatVec& v) {
    Json arr = Json::array();
    for (const Rat& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

RatVec rat_vec_from_json(const Json& j) {
    require(j.is_array(), ErrorKind::ParseError, "expected an array of rationals");
    RatVec v;
    for (const Json& x : j) v.push_back(rat_from_json(x));
    return v;
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(int_vec_to_json(m.row(r)));
    j["entries"] = entries;
    return j;
}

IntMatrix matrix_from_json(const Json& j) {
    return parsing("bad matrix", [&] {
        require(j.is_object() && j.contains("rows") && j.contains("cols") &&
                    j.contains("entries"),
                ErrorKind::ParseError, "matrix needs rows, cols, entries");
        std::vector<IntVec> rows;
        for (const Json& row : j.at("entries")) rows.push_back(int_vec_from_json(row));
        require(rows.size() == j.at("rows").get<std::size_t>(), ErrorKind::ParseError,
                "row count mismatch");
        IntMatrix m = IntMatrix::from_rows(rows);
        require(m.cols() == j.at("cols").get<std::size_t>(), ErrorKind::ParseError,
                "column count mismatch");
        return m;
    });
}

Json lattice_set_to_json(const LatticeSet& s) {
    Json j;
    j["dim"] = s.dim();
    Json pts = Json::array();
    for (const IntVec& p : s.points()) pts.push_back(int_vec_to_json(p));
    j["points"] = pts;
    return j;
}

LatticeSet lattice_set_from_json(const Json& j) {
    return parsing("bad lattice set", [&] {
        require(j.is_object() && j.contains("dim") && j.contains("points"),
                ErrorKind::ParseError, "lattice set needs dim and points");
        const std::size_t dim = j.at("dim").get<std::size_t>();
        require(dim >= 1, ErrorKind::ParseError, "dim must be >= 1");
        std::vector<IntVec> pts;
        for (const Json& p : j.at("points")) {
            IntVec v = int_vec_from_json(p);
            require(v.size() == dim, ErrorKind::ParseError, "point dimension mismatch");
            pts.push_back(std::move(v));
        }
        return LatticeSet(dim, std::move(pts));
    });
}

Json polytope_to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.ambient_dim();
    Json verts = Json::array();
    for (const RatVec& v : p.vertices()) verts.push_back(rat_vec_to_json(v));
    j["vertices"] = verts;
    Json facets = Json::array();
    for (const FacetIneq& f : p.facets()) {
        Json jf;
        jf["normal"] = int_vec_to_json(f.normal);
        jf["offset"] = int_to_json(f.offset);
        jf["tight"] = f.tight;
        facets.push_back(jf);
    }
    j["facets"] = facets;
    Json eqs = Json::array();
    for (const Equation& e : p.equations()) {
        Json je;
        je["normal"] = int_vec_to_json(e.normal);
        je["offset"] = int_to_json(e.offset);
        eqs.push_back(je);
    }
    j["equations"] = eqs;
    return j;
}

Polytope polytope_from_json(const Json& j, const Budget& budget) {
    std::vector<RatVec> pts = parsing("bad polytope", [&] {
        require(j.is_object() && j.contains("dim") && j.contains("vertices"),
                ErrorKind::ParseError, "polytope needs dim and vertices");
        const std::size_t dim = j.at("dim").get<std::size_t>();
        require(dim >= 1, ErrorKind::ParseError, "dim must be >= 1");
        std::vector<RatVec> out;
        for (const Json& v : j.at("vertices")) {
            RatVec p = rat_vec_from_json(v);
            require(p.size() == dim, ErrorKind::ParseError, "vertex dimension mismatch");
            out.push_back(std::move(p));
        }
        require(!out.empty(), ErrorKind::ParseError, "polytope needs at least one vertex");
        return out;
    });
    return hull(pts, budget);
}

Json system_to_json(const UnimodularSystem& sys) {
    Json j = matrix_to_json(sys.matrix());
    j["name"] = sys.name();
    return j;
}

UnimodularSystem system_from_json(const Json& j, bool checked) {
    IntMatrix m = matrix_from_json(j);
    std::string name = parsing("bad system name", [&] {
        return j.contains("name") ? j.at("name").get<std::string>() : std::string();
    });
    return checked ? UnimodularSystem::checked(std::move(m), std::move(name))
                   : UnimodularSystem::unchecked(std::move(m), std::move(name));
}

Json set_function_to_json(const SetFunction& f) {
    Json j = Json::object();
    for (unsigned mask = 0; mask < f.values.size(); ++mask)
        j[std::to_string(mask)] = int_to_json(f.values[mask]);
    return j;
}

SetFunction set_function_from_json(const Json& j, const std::string& key) {
    return parsing("bad set-function table", [&] {
        require(j.is_object() && j.contains("n") && j.contains(key), ErrorKind::ParseError,
                "set-function table needs n and " + key);
        SetFunction f;
        f.n = j.at("n").get<std::size_t>();
        require(f.n >= 1 && f.n <= 6, ErrorKind::ParseError, "set-function n out of range");
        f.values.resize(std::size_t{1} << f.n);
        const Json& table = j.at(key);
        for (unsigned mask = 0; mask < f.values.size(); ++mask) {
            const std::string k = std::to_string(mask);
            require(table.contains(k), ErrorKind::ParseError,
                    key + " is missing subset mask " + k);
            f.values[mask] = int_from_json(table.at(k));
        }
        return f;
    });
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const RatVec& row : s.basis()) basis.push_back(rat_vec_to_json(row));
    j["basis"] = basis;
    return j;
}

Json face_to_json(const Polytope& p, const Face& f) {
    Json j;
    j["vertex_indices"] = f.vertex_indices;
    Json verts = Json::array();
    for (std::size_t i : f.vertex_indices) verts.push_back(rat_vec_to_json(p.vertices()[i]));
    j["vertices"] = verts;
    j["dim"] = f.dim;
    j["lins"] = subspace_to_json(f.lins);
    return j;
}

Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["z"] = int_vec_to_json(d.z);
    j["x_star"] = int_vec_to_json(d.x_star);
    j["y_star"] = int_vec_to_json(d.y_star);
    j["x"] = rat_vec_to_json(d.x);
    j["y"] = rat_vec_to_json(d.y);
    j["x_circ"] = int_vec_to_json(d.x_circ);
    j["y_circ"] = int_vec_to_json(d.y_circ);
    j["face1_vertex_indices"] = d.face1.vertex_indices;
    j["face2_vertex_indices"] = d.face2.vertex_indices;
    j["d_z"] = int_vec_to_json(d.d_z);
    j["d_x"] = int_vec_to_json(d.d_x);
    j["d_y"] = int_vec_to_json(d.d_y);
    j["basis_columns"] = d.basis_columns;
    j["span1_count"] = d.span1_count;
    j["span_sum_count"] = d.span_sum_count;
    j["lambda"] = int_vec_to_json(d.lambda);
    j["potential_trace"] = d.potential_trace;
    Json checks = Json::array();
    for (const CheckItem& c : d.checklist) {
        Json jc;
        jc["label"] = c.label;
        jc["pass"] = c.pass;
        checks.push_back(jc);
    }
    j["checklist"] = checks;
    return j;
}

Json dcp2_report_to_json(const Dcp2Report& r) {
    Json j;
    j["ok"] = r.ok;
    j["class_p1_ok"] = r.class_p1_ok;
    j["class_p2_ok"] = r.class_p2_ok;
    j["class_sum_ok"] = r.class_sum_ok;
    j["lattice_sets_equal"] = r.lattice_sets_equal;
    j["sum_lattice_count"] = r.sum_lattice_count;
    j["brute_force_count"] = r.brute_force_count;
    j["decomposed_count"] = r.decomposed_count;
    j["iterative_passes"] = r.iterative_passes;
    j["structural_checks"] = r.structural_checks;
    j["structural_failures"] = r.structural_failures;
    Json cx = Json::array();
    for (const Dcp2Counterexample& c : r.counterexamples) {
        Json jc;
        jc["z"] = int_vec_to_json(c.z);
        jc["reason"] = c.reason;
        cx.push_back(jc);
    }
    j["counterexamples"] = cx;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        raise(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace udca
