#include "udca/generators.hpp"

#include "udca/errors.hpp"

#include <algorithm>
#include <numeric>

namespace udca::gen {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

std::size_t Rng::index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
}

ZonotopeSpec random_zonotope_spec(Rng& rng, const UnimodularSystem& sys,
                                  std::size_t max_generators,
                                  std::int64_t max_multiplicity,
                                  std::int64_t max_translation) {
    ZonotopeSpec spec;
    const std::size_t m = sys.matrix().cols();
    const std::size_t count =
        1 + rng.index(std::min(max_generators, m));
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t pick = rng.index(pool.size());
        spec.columns.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
        spec.multiplicities.emplace_back(rng.uniform(1, max_multiplicity));
    }
    std::sort(spec.columns.begin(), spec.columns.end());
    for (std::size_t i = 0; i < sys.dim(); ++i)
        spec.translation.emplace_back(rng.uniform(-max_translation, max_translation));
    return spec;
}

Polytope realize_zonotope(const UnimodularSystem& sys, const ZonotopeSpec& spec,
                          const Budget& budget) {
    return translate(zonotope(sys, spec.columns, spec.multiplicities, budget),
                     spec.translation);
}

GPolymatroidSpec random_gpolymatroid(Rng& rng, std::size_t n, std::int64_t coord_range,
                                     std::int64_t max_width) {
    std::vector<std::int64_t> lo(n), hi(n);
    std::int64_t lo_total = 0, hi_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = rng.uniform(-coord_range, coord_range);
        hi[i] = lo[i] + rng.uniform(0, max_width);
        lo_total += lo[i];
        hi_total += hi[i];
    }
    const std::int64_t plank_lo = rng.uniform(lo_total, hi_total);
    const std::int64_t plank_hi = rng.uniform(plank_lo, hi_total);

    GPolymatroidSpec spec;
    spec.rho.n = n;
    spec.mu.n = n;
    spec.rho.values.resize(std::size_t{1} << n);
    spec.mu.values.resize(std::size_t{1} << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::int64_t lo_in = 0, hi_in = 0, lo_out = 0, hi_out = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1u) {
                lo_in += lo[i];
                hi_in += hi[i];
            } else {
                lo_out += lo[i];
                hi_out += hi[i];
            }
        }
        spec.rho.values[mask] = Int(std::min(hi_in, plank_hi - lo_out));
        spec.mu.values[mask] = Int(std::max(lo_in, plank_lo - hi_out));
    }
    return spec;
}

LatticeSet random_lattice_set(Rng& rng, std::size_t dim, std::size_t max_points,
                              std::int64_t coord_range) {
    require(max_points >= 1, ErrorKind::EmptyInput, "need at least one point");
    const std::size_t count = 1 + rng.index(max_points);
    std::vector<IntVec> pts;
    for (std::size_t k = 0; k < count; ++k) {
        IntVec p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            p[i] = rng.uniform(-coord_range, coord_range);
        pts.push_back(std::move(p));
    }
    return LatticeSet(dim, std::move(pts));
}

IntMatrix random_unimodular_matrix(Rng& rng, std::size_t n, std::size_t op_count) {
    IntMatrix t = IntMatrix::identity(n);
    if (n < 2) return t;
    for (std::size_t k = 0; k < op_count; ++k) {
        switch (rng.index(3)) {
            case 0: {  // add +-1 times row i to row j
                const std::size_t i = rng.index(n);
                std::size_t j = rng.index(n - 1);
                if (j >= i) ++j;
                const Int f = rng.flip() ? 1 : -1;
                for (std::size_t c = 0; c < n; ++c) t.at(j, c) += f * t.at(i, c);
                break;
            }
            case 1: {  // swap two rows
                const std::size_t i = rng.index(n);
                std::size_t j = rng.index(n - 1);
                if (j >= i) ++j;
                for (std::size_t c = 0; c < n; ++c) std::swap(t.at(i, c), t.at(j, c));
                break;
            }
            default: {  // negate a row
                const std::size_t i = rng.index(n);
                for (std::size_t c = 0; c < n; ++c) t.at(i, c) = -t.at(i, c);
                break;
            }
        }
    }
    return t;
}

}  // namespace udca::gen
