#include "udca/dc_classes.hpp"

#include "udca/errors.hpp"

#include <algorithm>
#include <bit>

namespace udca {

UnimodularSystem UnimodularSystem::checked(IntMatrix m, std::string name) {
    require(is_unimodular(m), ErrorKind::NotUnimodular,
            "matrix is not unimodular (rank or a maximal minor fails)");
    return UnimodularSystem(std::move(m), std::move(name));
}

UnimodularSystem UnimodularSystem::unchecked(IntMatrix m, std::string name) {
    return UnimodularSystem(std::move(m), std::move(name));
}

std::vector<std::pair<std::size_t, std::size_t>>
UnimodularSystem::redundant_column_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < matrix_.cols(); ++i) {
        const IntVec a = matrix_.column(i);
        for (std::size_t j = i + 1; j < matrix_.cols(); ++j) {
            const IntVec b = matrix_.column(j);
            if (a == b || a == negate(b)) out.emplace_back(i, j);
        }
    }
    return out;
}

UnimodularSystem system_mnat(std::size_t n) {
    require(n >= 1, ErrorKind::DimensionMismatch, "dimension must be >= 1");
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        cols.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IntVec d(n, Int(0));
            d[i] = 1;
            d[j] = -1;
            cols.push_back(std::move(d));
        }
    return UnimodularSystem::checked(IntMatrix::from_columns(cols), "mnat");
}

UnimodularSystem system_b4() {
    const IntMatrix b = IntMatrix::from_rows({
        {1, 0, 0, 0, 1, 0, 0, 1, 1},
        {0, 1, 0, 0, 1, 1, 0, 0, 1},
        {0, 0, 1, 0, 0, 1, 1, 0, 1},
        {0, 0, 0, 1, 0, 0, 1, 1, 1},
    });
    return UnimodularSystem::checked(b, "b4");
}

UnimodularSystem transform(const UnimodularSystem& sys, const IntMatrix& t) {
    require(t.rows() == t.cols(), ErrorKind::NotUnimodularTransform,
            "transform must be square");
    require(t.rows() == sys.dim(), ErrorKind::DimensionMismatch,
            "transform dimension mismatch");
    const Int det = determinant(t);
    require(det == 1 || det == -1, ErrorKind::NotUnimodularTransform,
            "transform determinant must be +1 or -1");
    return UnimodularSystem::checked(t * sys.matrix(),
                                     sys.name().empty() ? "" : sys.name() + "'");
}

ClassCheckResult in_class(const UnimodularSystem& sys, const Polytope& p,
                          const Budget& budget) {
    require(sys.dim() == p.ambient_dim(), ErrorKind::DimensionMismatch,
            "system and polytope dimensions differ");
    ClassCheckResult res;
    for (const RatVec& v : p.vertices()) {
        if (std::any_of(v.begin(), v.end(),
                        [](const Rat& c) { return denominator(c) != 1; })) {
            res.witness = ClassWitness{ClassWitness::Kind::FractionalVertex, v, {}, Subspace(0)};
            return res;
        }
    }
    for (const Face& f : faces(p, budget)) {
        const auto inside = columns_inside_subspace(sys.matrix(), f.lins);
        if (span_of_columns(sys.matrix(), inside).dim() != f.dim) {
            res.witness = ClassWitness{ClassWitness::Kind::FaceSpanNotGenerated,
                                       {}, f.vertex_indices, f.lins};
            return res;
        }
    }
    res.member = true;
    return res;
}

bool edge_directions_check_mnat(const Polytope& p, const Budget& budget) {
    const std::size_t n = p.ambient_dim();
    const IntMatrix allowed = system_mnat(n).matrix();
    std::vector<IntVec> allowed_dirs;
    for (std::size_t j = 0; j < allowed.cols(); ++j)
        allowed_dirs.push_back(primitive_signed(allowed.column(j)));
    for (const Face& f : faces(p, budget)) {
        if (f.dim != 1) continue;
        const IntVec dir = primitive_signed(primitive_direction(
            sub(p.vertices()[f.vertex_indices.back()], p.vertices()[f.vertex_indices.front()])));
        if (std::find(allowed_dirs.begin(), allowed_dirs.end(), dir) == allowed_dirs.end())
            return false;
    }
    return true;
}

Polytope zonotope(const UnimodularSystem& sys, const std::vector<std::size_t>& selection,
                  const std::vector<Int>& multiplicities, const Budget& budget) {
    require(selection.size() == multiplicities.size(), ErrorKind::DimensionMismatch,
            "one multiplicity per selected column");
    const std::size_t n = sys.dim();
    const RatVec origin(n, Rat(0));
    Polytope acc = hull(std::vector<RatVec>{origin}, budget);
    for (std::size_t k = 0; k < selection.size(); ++k) {
        require(selection[k] < sys.matrix().cols(), ErrorKind::DimensionMismatch,
                "selected column out of range");
        require(multiplicities[k] > 0, ErrorKind::EmptyInput,
                "multiplicities must be positive");
        const IntVec end = scale(sys.matrix().column(selection[k]), multiplicities[k]);
        const Polytope segment = hull(std::vector<RatVec>{origin, to_rat(end)}, budget);
        acc = minkowski_sum_polytopes(acc, segment, budget);
    }
    return acc;
}

namespace {

std::string mask_to_string(unsigned mask, std::size_t n) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace

LatticeSet gpolymatroid_points(const SetFunction& rho, const SetFunction& mu) {
    require(rho.n == mu.n, ErrorKind::DimensionMismatch,
            "rho and mu must share a ground set");
    const std::size_t n = rho.n;
    require(n >= 1 && n <= 6, ErrorKind::SizeExceeded,
            "set-function tables are capped at n <= 6");
    const unsigned full = (1u << n) - 1u;
    require(rho.values.size() == (1u << n) && mu.values.size() == (1u << n),
            ErrorKind::DimensionMismatch, "table size must be 2^n");
    require(rho.at(0) == 0, ErrorKind::NotSubmodular, "rho(empty) must be 0");
    require(mu.at(0) == 0, ErrorKind::NotSupermodular, "mu(empty) must be 0");

    for (unsigned x = 0; x <= full; ++x) {
        for (unsigned y = 0; y <= full; ++y) {
            if (rho.at(x) + rho.at(y) < rho.at(x | y) + rho.at(x & y))
                raise(ErrorKind::NotSubmodular,
                      "rho violates submodularity at X=" + mask_to_string(x, n) +
                          ", Y=" + mask_to_string(y, n));
            if (mu.at(x) + mu.at(y) > mu.at(x | y) + mu.at(x & y))
                raise(ErrorKind::NotSupermodular,
                      "mu violates supermodularity at X=" + mask_to_string(x, n) +
                          ", Y=" + mask_to_string(y, n));
            if (rho.at(x) - mu.at(y) < rho.at(x & ~y) - mu.at(y & ~x))
                raise(ErrorKind::NotParamodular,
                      "pair violates paramodularity at X=" + mask_to_string(x, n) +
                          ", Y=" + mask_to_string(y, n));
        }
    }

    std::vector<IntVec> found;
    IntVec x(n), lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = mu.at(1u << i);
        hi[i] = rho.at(1u << i);
        x[i] = lo[i];
    }
    while (true) {
        bool inside = true;
        for (unsigned mask = 1; mask <= full && inside; ++mask) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u) s += x[i];
            inside = mu.at(mask) <= s && s <= rho.at(mask);
        }
        if (inside) found.push_back(x);
        std::size_t i = n;
        bool carried = false;
        while (i-- > 0) {
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
                carried = true;
                break;
            }
            if (i == 0) break;
        }
        if (!carried) break;
    }
    return LatticeSet(n, std::move(found));
}

}  // namespace udca
