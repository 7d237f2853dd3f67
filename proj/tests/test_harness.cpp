#include "udca/harness.hpp"
#include "udca/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace udca;
using namespace udca::cli;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("udca_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string write(const std::string& name, const Json& content) const {
        const std::string full = (path / name).string();
        std::ofstream f(full);
        f << content.dump();
        return full;
    }
};

Json planar_s1_json() {
    return Json{{"dim", 2}, {"points", Json::array({Json::array({0, 0}), Json::array({1, 1})})}};
}

Json planar_s2_json() {
    return Json{{"dim", 2}, {"points", Json::array({Json::array({1, 0}), Json::array({0, 1})})}};
}

Json run_to_json(const std::string& text) { return Json::parse(text); }

}  // namespace

TEST_CASE("point text parsing") {
    CHECK(parse_point_text("1,2") == IntVec{Int(1), Int(2)});
    CHECK(parse_point_text("[1, -2]") == IntVec{Int(1), Int(-2)});
    CHECK(parse_point_text("(3,-4,0)") == IntVec{Int(3), Int(-4), Int(0)});
    CHECK_THROWS_AS(parse_point_text("a,b"), Error);
    CHECK_THROWS_AS(parse_point_text(""), Error);
}

TEST_CASE("config validation") {
    HarnessConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = HarnessConfig{};
    cfg.dim = 7;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = HarnessConfig{};
    cfg.generator = "bogus";
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = HarnessConfig{};
    cfg.system = "b4";
    cfg.generator = "gpolymatroid";
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = HarnessConfig{};
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("check command exit codes and witnesses") {
    TempDir dir;
    const std::string good =
        dir.write("id.json", matrix_to_json(IntMatrix::identity(3)));
    const std::string bad =
        dir.write("bad.json", matrix_to_json(IntMatrix::from_rows({{1, 1}, {1, -1}})));

    std::ostringstream out;
    CHECK(cmd_check("unimodular", {good}, out) == 0);
    CHECK(run_to_json(out.str())["result"] == true);

    out.str("");
    CHECK(cmd_check("unimodular", {bad}, out) == 1);
    const Json rep = run_to_json(out.str());
    CHECK(rep["result"] == false);
    CHECK(rep["witness"]["determinant"] == -2);

    out.str("");
    CHECK(cmd_check("tu", {bad}, out) == 1);

    out.str("");
    CHECK(cmd_check("unimodular", {(dir.path / "missing.json").string()}, out) == 2);

    out.str("");
    CHECK(cmd_check("bogus-kind", {good}, out) == 2);
}

TEST_CASE("check command on lattice sets") {
    TempDir dir;
    const std::string spatial_sum = dir.write(
        "sum3.json",
        Json{{"dim", 3},
             {"points", Json::array({Json::array({0, 0, 0}), Json::array({0, 1, 1}),
                                     Json::array({1, 1, 0}), Json::array({1, 2, 1})})}});
    std::ostringstream out;
    CHECK(cmd_check("lnat", {spatial_sum}, out) == 1);
    const Json rep = run_to_json(out.str());
    CHECK(rep["witness"]["midpoint_ceil"] == Json::array({1, 1, 1}));
    CHECK(rep["witness"]["midpoint_floor"] == Json::array({0, 1, 0}));

    out.str("");
    CHECK(cmd_check("nohole", {spatial_sum}, out) == 0);

    out.str("");
    const std::string planar_sum = dir.write(
        "sum2.json",
        Json{{"dim", 2}, {"points", Json::array({Json::array({1, 0}), Json::array({0, 1}),
                                                 Json::array({2, 1}), Json::array({1, 2})})}});
    CHECK(cmd_check("nohole", {planar_sum}, out) == 1);
    CHECK(run_to_json(out.str())["witness"]["missing_points"] ==
          Json::array({Json::array({1, 1})}));

    out.str("");
    const std::string s1 = dir.write("s1.json", planar_s1_json());
    CHECK(cmd_check("mnat", {s1}, out) == 1);
    CHECK(run_to_json(out.str())["witness"].contains("index"));
}

TEST_CASE("class check against a polytope file") {
    TempDir dir;
    const std::string sys = dir.write("sys.json", system_to_json(system_mnat(2)));
    const std::string diag = dir.write(
        "diag.json", Json{{"dim", 2}, {"vertices", Json::array({Json::array({0, 0}),
                                                                Json::array({1, 1})})}});
    std::ostringstream out;
    CHECK(cmd_check("class", {sys, diag}, out) == 1);
    const Json rep = run_to_json(out.str());
    CHECK(rep["witness"]["kind"] == "face_span_not_generated");

    const std::string square = dir.write(
        "square.json",
        Json{{"dim", 2}, {"vertices", Json::array({Json::array({0, 0}), Json::array({1, 0}),
                                                   Json::array({0, 1}), Json::array({1, 1})})}});
    out.str("");
    CHECK(cmd_check("class", {sys, square}, out) == 0);
}

TEST_CASE("worked examples command") {
    std::ostringstream out;
    CHECK(cmd_examples(out) == 0);
    const Json rep = run_to_json(out.str());
    CHECK(rep["ok"] == true);
    CHECK(rep["items"].size() == 10);
}

TEST_CASE("verify reports are byte-stable under a fixed seed") {
    HarnessConfig cfg;
    cfg.seed = 99;
    cfg.trials = 4;
    cfg.dim = 2;
    cfg.generator = "mixed";
    std::ostringstream a, b;
    CHECK(cmd_verify(cfg, a) == 0);
    CHECK(cmd_verify(cfg, b) == 0);
    CHECK(a.str() == b.str());

    cfg.seed = 100;
    std::ostringstream c;
    CHECK(cmd_verify(cfg, c) == 0);
    CHECK(a.str() != c.str());

    const Json rep = run_to_json(a.str());
    CHECK(rep["schema"] == 1);
    CHECK(rep["seed"] == 99);
    CHECK(rep["results"].size() == 4);
}

TEST_CASE("decompose command end to end") {
    TempDir dir;
    const std::string sys = dir.write("sys.json", system_to_json(system_mnat(2)));
    const Json tri = Json{{"dim", 2}, {"vertices", Json::array({Json::array({0, 0}),
                                                                Json::array({1, 0}),
                                                                Json::array({0, 1})})}};
    const std::string p1 = dir.write("p1.json", tri);
    const std::string p2 = dir.write("p2.json", tri);

    DecomposeArgs args;
    args.system_file = sys;
    args.p1_file = p1;
    args.p2_file = p2;
    args.z_text = "1,1";
    std::ostringstream out;
    CHECK(cmd_decompose(args, out) == 0);
    const Json rep = run_to_json(out.str());
    CHECK(rep["decomposition"]["z"] == Json::array({1, 1}));

    args.strategy = "vertex";
    out.str("");
    CHECK(cmd_decompose(args, out) == 0);

    args.strategy = "sideways";
    out.str("");
    CHECK(cmd_decompose(args, out) == 2);

    // the crossed-segments negative control through the CLI path
    const std::string forced = dir.write(
        "forced.json", Json{{"rows", 2},
                            {"cols", 2},
                            {"entries", Json::array({Json::array({1, -1}), Json::array({1, 1})})}});
    const std::string seg1 = dir.write(
        "seg1.json", Json{{"dim", 2}, {"vertices", Json::array({Json::array({0, 0}),
                                                                Json::array({1, 1})})}});
    const std::string seg2 = dir.write(
        "seg2.json", Json{{"dim", 2}, {"vertices", Json::array({Json::array({1, 0}),
                                                                Json::array({0, 1})})}});
    DecomposeArgs bad;
    bad.system_file = forced;
    bad.p1_file = seg1;
    bad.p2_file = seg2;
    bad.z_text = "1,1";
    bad.unchecked_system = true;
    out.str("");
    CHECK(cmd_decompose(bad, out) == 1);
    CHECK(run_to_json(out.str())["error"]["kind"] == "IntegralityFailure");

    // the same system is rejected outright without the escape hatch
    bad.unchecked_system = false;
    out.str("");
    CHECK(cmd_decompose(bad, out) == 1);
    CHECK(run_to_json(out.str())["error"]["kind"] == "NotUnimodular");
}

TEST_CASE("sum, hull, and lattice-points commands") {
    TempDir dir;
    const std::string s1 = dir.write("s1.json", planar_s1_json());
    const std::string s2 = dir.write("s2.json", planar_s2_json());

    std::ostringstream out;
    CHECK(cmd_sum(s1, s2, out) == 0);
    const Json sum = run_to_json(out.str())["sum"];
    CHECK(sum["points"].size() == 4);

    const std::string sum_file = dir.write("sum.json", sum);
    out.str("");
    CHECK(cmd_hull(sum_file, out) == 0);
    const Json hull_rep = run_to_json(out.str())["polytope"];
    CHECK(hull_rep["vertices"].size() == 4);
    CHECK(hull_rep["facets"].size() == 4);

    out.str("");
    CHECK(cmd_lattice_points(sum_file, out) == 0);
    CHECK(run_to_json(out.str())["lattice_points"]["points"].size() == 5);
}
