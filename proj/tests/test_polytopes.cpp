#include "udca/errors.hpp"
#include "udca/generators.hpp"
#include "udca/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace udca;

namespace {

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

IntVec iv(std::initializer_list<int> xs) {
    IntVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RatVec> pts(std::initializer_list<std::initializer_list<int>> ps) {
    std::vector<RatVec> v;
    for (auto p : ps) v.push_back(rv(p));
    return v;
}

const std::vector<RatVec> unit_square = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const std::vector<RatVec> triangle = pts({{0, 0}, {1, 0}, {0, 1}});

}  // namespace

TEST_CASE("hull drops interior points and keeps extremes") {
    std::vector<RatVec> input = unit_square;
    input.push_back({Rat(1, 2), Rat(1, 2)});
    const Polytope p = hull(input);
    CHECK(p.vertices() == hull(unit_square).vertices());
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    CHECK(p.dim() == 2);
    CHECK(p.equations().empty());
}

TEST_CASE("hull of the planar example sum is a quadrilateral") {
    const Polytope p = hull(pts({{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
    CHECK(p.vertices() == pts({{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
    CHECK(p.facets().size() == 4);
}

TEST_CASE("hull handles degenerate dimensions") {
    const Polytope point = hull(pts({{3, -2}}));
    CHECK(point.dim() == 0);
    CHECK(point.vertices().size() == 1);
    CHECK(point.facets().empty());
    CHECK(point.equations().size() == 2);
    CHECK(point.contains(rv({3, -2})));
    CHECK_FALSE(point.contains(rv({3, -1})));

    const Polytope seg = hull(pts({{0, 0, 0}, {2, 2, 2}, {1, 1, 1}}));
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.equations().size() == 2);
    CHECK(seg.facets().size() == 2);

    CHECK_THROWS_AS(hull(std::vector<RatVec>{}), Error);
}

TEST_CASE("hull respects its subset budget") {
    Budget tiny;
    tiny.hull_subsets = 2;
    CHECK_THROWS_AS(hull(unit_square, tiny), Error);
}

TEST_CASE("facet data is primitive and tight everywhere it claims") {
    gen::Rng rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 1 + rng.index(3);
        const LatticeSet s = gen::random_lattice_set(rng, dim, 7, 3);
        const Polytope p = hull(s);
        for (const FacetIneq& f : p.facets()) {
            IntVec all = f.normal;
            all.push_back(f.offset);
            CHECK(content(all) == 1);
            CHECK(!f.tight.empty());
            for (std::size_t i = 0; i < p.vertices().size(); ++i) {
                const bool on = dot(f.normal, p.vertices()[i]) == Rat(f.offset);
                const bool listed =
                    std::find(f.tight.begin(), f.tight.end(), i) != f.tight.end();
                CHECK(on == listed);
            }
        }
    }
}

TEST_CASE("lattice point scans") {
    const Polytope quad = hull(pts({{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
    const LatticeSet inside = lattice_points(quad);
    CHECK(inside.size() == 5);
    CHECK(inside.contains(iv({1, 1})));

    const Polytope cube = hull(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                    {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    CHECK(lattice_points(cube).size() == 8);

    const Polytope seg = hull(pts({{0, 0}, {3, 0}}));
    CHECK(lattice_points(seg).size() == 4);

    const Polytope diagonal = hull(pts({{0, 0}, {2, 2}}));
    CHECK(lattice_points(diagonal).size() == 3);

    const Polytope shifted = hull(std::vector<RatVec>{{Rat(1, 2), Rat(0)},
                                                      {Rat(1, 2), Rat(1, 2)}});
    CHECK(lattice_points(shifted).empty());

    Budget tiny;
    tiny.lattice_box = 3;
    CHECK_THROWS_AS(lattice_points(cube, tiny), Error);
}

TEST_CASE("integrality of polytopes") {
    CHECK(is_integer_polytope(hull(triangle)));
    CHECK_FALSE(is_integer_polytope(
        hull(std::vector<RatVec>{rv({0, 0}), {Rat(1, 2), Rat(1, 2)}, rv({1, 0})})));
    gen::Rng rng(82);
    for (int trial = 0; trial < 20; ++trial) {
        const LatticeSet s = gen::random_lattice_set(rng, 2, 6, 4);
        CHECK(is_integer_polytope(hull(s)));
    }
}

TEST_CASE("face enumeration counts") {
    CHECK(faces(hull(triangle)).size() == 7);
    CHECK(faces(hull(pts({{0, 0}, {1, 0}}))).size() == 3);
    CHECK(faces(hull(pts({{5, 5}}))).size() == 1);

    // every face of the cube is a choice of {min, max, free} per axis
    const Polytope cube = hull(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                    {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    const std::vector<Face> fs = faces(cube);
    CHECK(fs.size() == 27);
    std::set<std::vector<std::size_t>> listed;
    for (const Face& f : fs) listed.insert(f.vertex_indices);
    for (int pattern = 0; pattern < 27; ++pattern) {
        int digits[3] = {pattern % 3, (pattern / 3) % 3, (pattern / 9) % 3};
        std::vector<std::size_t> expect;
        for (std::size_t i = 0; i < cube.vertices().size(); ++i) {
            bool ok = true;
            for (int axis = 0; axis < 3; ++axis) {
                if (digits[axis] == 0 && cube.vertices()[i][axis] != 0) ok = false;
                if (digits[axis] == 1 && cube.vertices()[i][axis] != 1) ok = false;
            }
            if (ok) expect.push_back(i);
        }
        CHECK(listed.count(expect) == 1);
    }

    Budget tiny;
    tiny.faces = 5;
    CHECK_THROWS_AS(faces(cube, tiny), Error);
}

TEST_CASE("face direction spaces") {
    const Polytope square = hull(unit_square);
    for (const Face& f : faces(square)) {
        if (f.dim == 1) {
            const IntVec dir = primitive_signed(primitive_direction(
                sub(square.vertices()[f.vertex_indices[1]],
                    square.vertices()[f.vertex_indices[0]])));
            CHECK((dir == iv({1, 0}) || dir == iv({0, 1})));
            CHECK(f.lins.dim() == 1);
        }
    }
}

TEST_CASE("minimal faces") {
    const Polytope square = hull(unit_square);
    CHECK(minimal_face_containing(square, {Rat(1, 2), Rat(1, 2)}).dim == 2);
    const Face edge = minimal_face_containing(square, {Rat(1, 2), Rat(0)});
    CHECK(edge.dim == 1);
    CHECK(edge.vertex_indices.size() == 2);
    const Face corner = minimal_face_containing(square, rv({0, 0}));
    CHECK(corner.dim == 0);
    CHECK(corner.vertex_indices == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(minimal_face_containing(square, rv({5, 5})), Error);
}

TEST_CASE("relative interior points") {
    const Polytope square = hull(unit_square);
    const Face corner = minimal_face_containing(square, rv({0, 0}));
    CHECK(relative_interior_point(square, corner) == rv({0, 0}));

    const Polytope seg = hull(pts({{0, 0}, {2, 0}}));
    const Face whole = minimal_face_containing(seg, rv({1, 0}));
    CHECK(relative_interior_point(seg, whole) == rv({1, 0}));

    const Polytope tri = hull(triangle);
    const Face top = minimal_face_containing(tri, {Rat(1, 4), Rat(1, 4)});
    CHECK(relative_interior_point(tri, top) == RatVec{Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("a face is recovered from its relative interior point") {
    gen::Rng rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 1 + rng.index(3);
        const LatticeSet s = gen::random_lattice_set(rng, dim, 6, 2);
        const Polytope p = hull(s);
        for (const Face& f : faces(p)) {
            const RatVec c = relative_interior_point(p, f);
            CHECK(minimal_face_containing(p, c) == f);
            for (const FacetIneq& facet : p.facets()) {
                const bool face_on_facet =
                    std::includes(facet.tight.begin(), facet.tight.end(),
                                  f.vertex_indices.begin(), f.vertex_indices.end());
                if (!face_on_facet)
                    CHECK(dot(facet.normal, c) < Rat(facet.offset));
            }
        }
    }
}

TEST_CASE("minkowski sums of polytopes") {
    const Polytope sq =
        minkowski_sum_polytopes(hull(pts({{0, 0}, {1, 0}})), hull(pts({{0, 0}, {0, 1}})));
    CHECK(sq.vertices() == hull(unit_square).vertices());

    const Polytope para = minkowski_sum_polytopes(hull(pts({{0, 0, 0}, {1, 1, 0}})),
                                                  hull(pts({{0, 0, 0}, {0, 1, 1}})));
    CHECK(para.vertices().size() == 4);
    CHECK(para.dim() == 2);

    const Polytope tri = hull(triangle);
    CHECK(minkowski_sum_polytopes(tri, hull(pts({{0, 0}}))) == tri);
}

TEST_CASE("step intervals") {
    const Polytope square = hull(unit_square);
    const RatVec center{Rat(1, 2), Rat(1, 2)};
    const StepInterval s1 = max_step(square, center, rv({1, 0}));
    CHECK(*s1.lo == Rat(-1, 2));
    CHECK(*s1.hi == Rat(1, 2));

    const Polytope seg = hull(pts({{0, 0}, {1, 0}}));
    const StepInterval s2 = max_step(seg, rv({0, 0}), rv({1, 0}));
    CHECK(*s2.lo == 0);
    CHECK(*s2.hi == 1);

    const Polytope tri = hull(triangle);
    const StepInterval s3 = max_step(tri, {Rat(1, 4), Rat(1, 4)}, {Rat(1), Rat(-1)});
    CHECK(*s3.lo == Rat(-1, 4));
    CHECK(*s3.hi == Rat(1, 4));

    CHECK_THROWS_AS(max_step(square, center, rv({0, 0})), Error);
    CHECK_THROWS_AS(max_step(square, rv({7, 7}), rv({1, 0})), Error);

    // off-hull directions in a degenerate polytope pin the step to zero
    const Polytope flat = hull(pts({{0, 0}, {1, 0}}));
    const StepInterval s4 = max_step(flat, {Rat(1, 2), Rat(0)}, rv({0, 1}));
    CHECK(*s4.lo == 0);
    CHECK(*s4.hi == 0);
}

TEST_CASE("hull and lattice points agree with the filled-set predicate") {
    gen::Rng rng(84);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + rng.index(3);
        const LatticeSet s = gen::random_lattice_set(rng, dim, 6, 3);
        const LatticeSet filled = lattice_points(hull(s));
        for (const IntVec& p : s.points()) CHECK(filled.contains(p));
        CHECK((filled == s) == no_hole_check(s));
    }
}

TEST_CASE("translation shifts vertices and offsets consistently") {
    gen::Rng rng(85);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 1 + rng.index(3);
        const LatticeSet s = gen::random_lattice_set(rng, dim, 6, 3);
        IntVec t(dim);
        for (std::size_t i = 0; i < dim; ++i) t[i] = rng.uniform(-4, 4);
        const Polytope moved = translate(hull(s), t);
        std::vector<RatVec> shifted;
        for (const IntVec& p : s.points()) shifted.push_back(to_rat(add(p, t)));
        CHECK(moved == hull(shifted));
    }
}

TEST_CASE("four-dimensional hulls get their facets right") {
    std::vector<RatVec> cube;
    for (int mask = 0; mask < 16; ++mask) {
        RatVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1;
        cube.push_back(v);
    }
    const Polytope c4 = hull(cube);
    CHECK(c4.vertices().size() == 16);
    CHECK(c4.facets().size() == 8);
    CHECK(lattice_points(c4).size() == 16);

    std::vector<RatVec> cross;
    for (int i = 0; i < 4; ++i) {
        RatVec plus(4, Rat(0)), minus(4, Rat(0));
        plus[i] = 1;
        minus[i] = -1;
        cross.push_back(plus);
        cross.push_back(minus);
    }
    const Polytope x4 = hull(cross);
    CHECK(x4.vertices().size() == 8);
    CHECK(x4.facets().size() == 16);
    CHECK(lattice_points(x4).size() == 9);
}

TEST_CASE("purification walks to a vertex of an inequality system") {
    const Polytope square = hull(unit_square);
    HalfspaceSystem h;
    h.n = 2;
    for (const FacetIneq& f : square.facets()) h.ineqs.emplace_back(f.normal, f.offset);
    const RatVec v = purify_to_vertex(h, {Rat(1, 2), Rat(1, 3)});
    CHECK(square.contains(v));
    const auto there = std::find(square.vertices().begin(), square.vertices().end(), v);
    CHECK(there != square.vertices().end());
}
