#include "udca/decompose.hpp"
#include "udca/errors.hpp"
#include "udca/generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace udca;

namespace {

IntVec iv(std::initializer_list<int> xs) {
    IntVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RatVec> pts(std::initializer_list<std::initializer_list<int>> ps) {
    std::vector<RatVec> v;
    for (auto p : ps) {
        RatVec q;
        for (int x : p) q.emplace_back(x);
        v.push_back(std::move(q));
    }
    return v;
}

// Brute-force oracle: all integral pairs (a, b) with a in p1, b in p2,
// a + b = z.
std::vector<std::pair<IntVec, IntVec>> all_integral_pairs(const Polytope& p1,
                                                          const Polytope& p2,
                                                          const IntVec& z) {
    std::vector<std::pair<IntVec, IntVec>> out;
    const LatticeSet inside = lattice_points(p1);
    for (const IntVec& a : inside.points()) {
        const IntVec b = sub(z, a);
        if (p2.contains(b)) out.emplace_back(a, b);
    }
    return out;
}

void check_decomposition_invariants(const Decomposition& d, const Polytope& p1,
                                    const Polytope& p2) {
    CHECK(add(d.x, d.y) == to_rat(d.z));
    CHECK(add(d.x_star, d.y_star) == d.z);
    CHECK(d.d_z == sub(sub(d.z, d.x_circ), d.y_circ));
    CHECK(d.d_z == add(d.d_x, d.d_y));
    CHECK(d.x_star == add(d.x_circ, d.d_x));
    CHECK(d.y_star == add(d.y_circ, d.d_y));
    CHECK(p1.contains(d.x_star));
    CHECK(p2.contains(d.y_star));
    CHECK(intersection(d.face1.lins, d.face2.lins).dim() == 0);
    for (const CheckItem& c : d.checklist) CHECK(c.pass);
    for (std::size_t i = 1; i < d.potential_trace.size(); ++i)
        CHECK(d.potential_trace[i] < d.potential_trace[i - 1]);
    CHECK(d.span1_count <= d.span_sum_count);
    CHECK(d.span_sum_count <= d.basis_columns.size());
    CHECK(d.basis_columns.size() == d.z.size());
}

}  // namespace

TEST_CASE("splitting a point across two segments") {
    const Polytope p1 = hull(pts({{0, 0}, {1, 0}}));
    const Polytope p2 = hull(pts({{0, 0}, {0, 1}}));
    const RatVec z{Rat(1, 2), Rat(1, 2)};
    for (const SplitStrategy strategy : {SplitStrategy::Iterative, SplitStrategy::Vertex}) {
        const SplitResult r = split_point(p1, p2, z, strategy);
        CHECK(r.x == RatVec{Rat(1, 2), Rat(0)});
        CHECK(r.y == RatVec{Rat(0), Rat(1, 2)});
        CHECK(r.face1.lins.contains(iv({1, 0})));
        CHECK(r.face2.lins.contains(iv({0, 1})));
        CHECK(intersection(r.face1.lins, r.face2.lins).dim() == 0);
    }
}

TEST_CASE("splitting against a single point is trivial") {
    const Polytope p = hull(pts({{0, 0}, {2, 0}, {0, 2}}));
    const Polytope origin = hull(pts({{0, 0}}));
    const RatVec z{Rat(1, 2), Rat(1, 2)};
    const SplitResult r = split_point(p, origin, z, SplitStrategy::Iterative);
    CHECK(r.x == z);
    CHECK(r.y == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("splitting the crossed segments") {
    const Polytope p1 = hull(pts({{0, 0}, {1, 1}}));
    const Polytope p2 = hull(pts({{1, 0}, {0, 1}}));
    const RatVec z{Rat(1), Rat(1)};
    for (const SplitStrategy strategy : {SplitStrategy::Iterative, SplitStrategy::Vertex}) {
        const SplitResult r = split_point(p1, p2, z, strategy);
        CHECK(r.x == RatVec{Rat(1, 2), Rat(1, 2)});
        CHECK(r.y == RatVec{Rat(1, 2), Rat(1, 2)});
        CHECK(intersection(r.face1.lins, r.face2.lins).dim() == 0);
    }
    CHECK_THROWS_AS(split_point(p1, p2, RatVec{Rat(5), Rat(5)}, SplitStrategy::Iterative),
                    Error);
}

TEST_CASE("the iterative split walks off a shared edge direction") {
    const Polytope tri = hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    const SplitResult r =
        split_point(tri, tri, RatVec{Rat(1), Rat(1)}, SplitStrategy::Iterative);
    REQUIRE(r.potential_trace.size() == 2);
    CHECK(r.potential_trace[0] == 2);
    CHECK(r.potential_trace[1] == 0);
    CHECK(r.face1.dim == 0);
    CHECK(r.face2.dim == 0);
}

TEST_CASE("decomposing over two triangles") {
    const Polytope tri = hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    const UnimodularSystem sys = system_mnat(2);
    const IntVec z = iv({1, 1});
    const auto oracle = all_integral_pairs(tri, tri, z);
    REQUIRE(oracle.size() == 2);  // (1,0)+(0,1) and (0,1)+(1,0)
    for (const SplitStrategy strategy : {SplitStrategy::Iterative, SplitStrategy::Vertex}) {
        DecomposeOptions opts;
        opts.strategy = strategy;
        const Decomposition d = integral_decompose(sys, tri, tri, z, opts);
        check_decomposition_invariants(d, tri, tri);
        const bool matches_oracle =
            std::any_of(oracle.begin(), oracle.end(), [&](const auto& pair) {
                return pair.first == d.x_star && pair.second == d.y_star;
            });
        CHECK(matches_oracle);
    }
}

TEST_CASE("decomposing intervals") {
    const Polytope p1 = hull(pts({{0}, {2}}));
    const Polytope p2 = hull(pts({{0}, {3}}));
    const UnimodularSystem sys = system_mnat(1);
    const Decomposition d = integral_decompose(sys, p1, p2, iv({4}));
    check_decomposition_invariants(d, p1, p2);
    CHECK((d.x_star == iv({1}) || d.x_star == iv({2})));
    CHECK(add(d.x_star, d.y_star) == iv({4}));
}

TEST_CASE("a smuggled non-unimodular system fails at the coefficient step") {
    const Polytope p1 = hull(pts({{0, 0}, {1, 1}}));
    const Polytope p2 = hull(pts({{1, 0}, {0, 1}}));
    const UnimodularSystem smuggled =
        UnimodularSystem::unchecked(IntMatrix::from_rows({{1, -1}, {1, 1}}));
    CHECK_THROWS_AS(integral_decompose(smuggled, p1, p2, iv({1, 1})), Error);
    try {
        integral_decompose(smuggled, p1, p2, iv({1, 1}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IntegralityFailure);
    }
}

TEST_CASE("face spans outside the system surface as failures") {
    const Polytope p1 = hull(pts({{0, 0}, {1, 1}}));
    const Polytope p2 = hull(pts({{1, 0}, {0, 1}}));
    const UnimodularSystem sys = system_mnat(2);

    CHECK_THROWS_AS(integral_decompose(sys, p1, p2, iv({1, 1})), Error);
    try {
        integral_decompose(sys, p1, p2, iv({1, 1}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ClassViolation);
    }

    DecomposeOptions forced;
    forced.check_class = false;
    try {
        integral_decompose(sys, p1, p2, iv({1, 1}), forced);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SpanFailure);
    }
}

TEST_CASE("points outside the sum are rejected") {
    const Polytope tri = hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    try {
        integral_decompose(system_mnat(2), tri, tri, iv({9, 9}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInSum);
    }
}

TEST_CASE("every lattice point of random class sums decomposes under both strategies") {
    gen::Rng rng(111);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t dim = 2 + rng.index(2);
        const UnimodularSystem sys = system_mnat(dim);
        const Polytope p1 =
            gen::realize_zonotope(sys, gen::random_zonotope_spec(rng, sys, 3, 2, 1));
        const Polytope p2 =
            gen::realize_zonotope(sys, gen::random_zonotope_spec(rng, sys, 3, 2, 1));
        const SumContext ctx = prepare_sum(p1, p2);
        const LatticeSet sum_points = lattice_points(ctx.sum);
        for (const IntVec& z : sum_points.points()) {
            for (const SplitStrategy strategy :
                 {SplitStrategy::Iterative, SplitStrategy::Vertex}) {
                DecomposeOptions opts;
                opts.strategy = strategy;
                opts.check_class = false;
                const Decomposition d = integral_decompose(sys, p1, p2, ctx, z, opts);
                check_decomposition_invariants(d, p1, p2);
            }
        }
    }
}

TEST_CASE("regression: parallel-generator sums in dimension four") {
    // Five- and six-generator sums whose facet normals need 3x3 minors;
    // these once leaked phantom lattice points through missing facets.
    const UnimodularSystem sys = system_b4();
    {
        const Polytope p1 = translate(zonotope(sys, {4, 7, 8}, {Int(2), Int(2), Int(1)}),
                                      iv({0, -2, -2, 1}));
        const Polytope p2 =
            translate(zonotope(sys, {2, 4}, {Int(1), Int(1)}), iv({2, -1, 0, 2}));
        const Dcp2Report rep = verify_dcp2(sys, p1, p2);
        CHECK(rep.ok);
        CHECK(rep.sum_lattice_count == rep.brute_force_count);
    }
    {
        const Polytope p1 = translate(zonotope(sys, {0, 2, 7}, {Int(2), Int(2), Int(1)}),
                                      iv({0, 1, -1, 0}));
        const Polytope p2 = translate(zonotope(sys, {0, 3, 8}, {Int(1), Int(1), Int(2)}),
                                      iv({1, 0, 0, 2}));
        const Dcp2Report rep = verify_dcp2(sys, p1, p2);
        CHECK(rep.ok);
    }
}

TEST_CASE("closure verification on small fixed pairs") {
    const UnimodularSystem sys2 = system_mnat(2);
    const Polytope square = hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    const Polytope tri = hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    const Dcp2Report rep = verify_dcp2(sys2, square, tri);
    CHECK(rep.ok);
    CHECK(rep.class_sum_ok);
    CHECK(rep.lattice_sets_equal);
    CHECK(rep.sum_lattice_count == rep.brute_force_count);
    CHECK(rep.decomposed_count == rep.sum_lattice_count);
    CHECK(rep.counterexamples.empty());

    const UnimodularSystem sys1 = system_mnat(1);
    const Dcp2Report line =
        verify_dcp2(sys1, hull(pts({{0}, {1}})), hull(pts({{0}, {1}})));
    CHECK(line.ok);
    CHECK(line.sum_lattice_count == 3);

    // a segment whose direction the system cannot generate fails the
    // precondition and is reported, never silently skipped
    const Dcp2Report bad = verify_dcp2(sys2, hull(pts({{0, 0}, {1, 1}})), tri);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.counterexamples.empty());
}
