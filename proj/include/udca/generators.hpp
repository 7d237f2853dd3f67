#pragma once

#include "udca/budget.hpp"
#include "udca/dc_classes.hpp"
#include "udca/lattice_set.hpp"
#include "udca/matrix.hpp"
#include "udca/polytope.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace udca::gen {

/// Seeded generator with hand-rolled sampling on top of mt19937_64, so the
/// same seed yields the same bytes on every platform (the standard leaves
/// std::uniform_int_distribution implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// Uniform in [0, n).
    std::size_t index(std::size_t n);

    bool flip() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

struct ZonotopeSpec {
    std::vector<std::size_t> columns;
    std::vector<Int> multiplicities;
    IntVec translation;
};

ZonotopeSpec random_zonotope_spec(Rng& rng, const UnimodularSystem& sys,
                                  std::size_t max_generators,
                                  std::int64_t max_multiplicity,
                                  std::int64_t max_translation);

Polytope realize_zonotope(const UnimodularSystem& sys, const ZonotopeSpec& spec,
                          const Budget& budget = Budget::current());

struct GPolymatroidSpec {
    SetFunction rho;
    SetFunction mu;
};

/// Random box-and-plank pair: the polyhedron l <= x <= u, r <= x(N) <= R
/// written through its canonical bound pair. Always paramodular; the
/// exhaustive certification in gpolymatroid_points re-checks it anyway.
GPolymatroidSpec random_gpolymatroid(Rng& rng, std::size_t n, std::int64_t coord_range,
                                     std::int64_t max_width);

LatticeSet random_lattice_set(Rng& rng, std::size_t dim, std::size_t max_points,
                              std::int64_t coord_range);

/// Product of random elementary integer operations on the identity:
/// always determinant +1 or -1.
IntMatrix random_unimodular_matrix(Rng& rng, std::size_t n, std::size_t op_count);

}  // namespace udca::gen
