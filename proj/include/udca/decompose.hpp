#pragma once

#include "udca/budget.hpp"
#include "udca/dc_classes.hpp"
#include "udca/polytope.hpp"

#include <string>
#include <vector>

namespace udca {

enum class SplitStrategy { Iterative, Vertex };

/// A Minkowski sum with, for every sum vertex, one witnessing pair of
/// summand vertex indices. Built once and shared across decompositions.
struct SumContext {
    Polytope sum;
    std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

SumContext prepare_sum(const Polytope& p1, const Polytope& p2,
                       const Budget& budget = Budget::current());

/// Split of z into x + y with x in p1, y in p2 and the direction spaces of
/// the minimal faces intersecting trivially. The iterative strategy starts
/// from a generic split and walks directions out of the intersection until
/// it is trivial, shrinking dim lins(F1) + dim lins(F2) every pass (the
/// trace records that potential). The vertex strategy instead purifies the
/// split to a vertex of p1 ∩ (z - p2).
struct SplitResult {
    RatVec x;
    RatVec y;
    Face face1;
    Face face2;
    std::vector<std::size_t> potential_trace;
};

SplitResult split_point(const Polytope& p1, const Polytope& p2, const RatVec& z,
                        SplitStrategy strategy,
                        const Budget& budget = Budget::current());
SplitResult split_point(const Polytope& p1, const Polytope& p2, const SumContext& ctx,
                        const RatVec& z, SplitStrategy strategy);

struct CheckItem {
    std::string label;
    bool pass = false;
};

/// Full witness record for one integral decomposition z = x* + y*.
struct Decomposition {
    IntVec z;
    IntVec x_star, y_star;
    RatVec x, y;
    IntVec x_circ, y_circ;
    Face face1, face2;
    IntVec d_z, d_x, d_y;
    std::vector<std::size_t> basis_columns;  // first span1_count inside lins(F1), ...
    std::size_t span1_count = 0;             // s
    std::size_t span_sum_count = 0;          // t
    IntVec lambda;
    std::vector<CheckItem> checklist;
    std::vector<std::size_t> potential_trace;
};

struct DecomposeOptions {
    SplitStrategy strategy = SplitStrategy::Iterative;
    bool check_class = true;
};

/// The constructive decomposition: split z, pick integral vertices of the
/// minimal faces, expand the offset in a column basis assembled inside
/// lins(F1), then lins(F1)+lins(F2), then all of R^n, and distribute the
/// integral coefficients back onto the two summands. IntegralityFailure
/// reports non-integral coefficients (the signature of a non-unimodular
/// system); SpanFailure propagates when a face span is not generated by
/// system columns.
Decomposition integral_decompose(const UnimodularSystem& sys, const Polytope& p1,
                                 const Polytope& p2, const IntVec& z,
                                 const DecomposeOptions& opts = {},
                                 const Budget& budget = Budget::current());
Decomposition integral_decompose(const UnimodularSystem& sys, const Polytope& p1,
                                 const Polytope& p2, const SumContext& ctx,
                                 const IntVec& z, const DecomposeOptions& opts = {},
                                 const Budget& budget = Budget::current());

struct Dcp2Counterexample {
    IntVec z;
    std::string reason;
};

/// verify_dcp2 output: class membership of the sum, lattice-set equality
/// against the brute-force sum, and one decomposition per lattice point
/// and strategy. Never a silent pass; failures carry the offending z.
struct Dcp2Report {
    bool ok = false;
    bool class_p1_ok = false;
    bool class_p2_ok = false;
    bool class_sum_ok = false;
    bool lattice_sets_equal = false;
    std::size_t sum_lattice_count = 0;
    std::size_t brute_force_count = 0;
    std::size_t decomposed_count = 0;
    std::size_t iterative_passes = 0;
    // One structural check per decomposition and strategy: the split's face
    // direction spaces intersect trivially and the iterative potential
    // strictly decreases pass over pass.
    std::size_t structural_checks = 0;
    std::size_t structural_failures = 0;
    std::vector<Dcp2Counterexample> counterexamples;
};

Dcp2Report verify_dcp2(const UnimodularSystem& sys, const Polytope& p1,
                       const Polytope& p2, const Budget& budget = Budget::current());

}  // namespace udca
