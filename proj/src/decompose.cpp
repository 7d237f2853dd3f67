#include "udca/decompose.hpp"

#include "udca/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace udca {

namespace {

/// z as an exact convex combination of vertices: walk a ray from the
/// lex-smallest vertex of the current minimal face through z to the
/// boundary and continue from the hit point. The minimal face shrinks
/// every pass, so at most dim(p)+1 vertices appear.
std::vector<std::pair<std::size_t, Rat>> convex_combination(const Polytope& p,
                                                            const RatVec& z) {
    std::vector<std::pair<std::size_t, Rat>> combo;
    RatVec c = z;
    Rat weight = 1;
    for (std::size_t guard = 0; guard <= p.dim() + 1; ++guard) {
        const Face f = minimal_face_containing(p, c);
        const std::size_t v_idx = f.vertex_indices.front();
        if (f.dim == 0) {
            combo.emplace_back(v_idx, weight);
            return combo;
        }
        const RatVec& v = p.vertices()[v_idx];
        const RatVec dir = sub(c, v);
        const StepInterval iv = max_step(p, c, dir);
        if (!iv.hi || *iv.hi <= 0)
            throw std::logic_error("convex combination: ray failed to reach the boundary");
        const Rat t = *iv.hi;
        combo.emplace_back(v_idx, weight * t / (1 + t));
        weight = weight / (1 + t);
        c = add(c, scale(dir, t));
    }
    throw std::logic_error("convex combination: face dimension failed to decrease");
}

struct InitialSplit {
    RatVec x;
    RatVec y;
};

InitialSplit split_from_provenance(const Polytope& p1, const Polytope& p2,
                                   const SumContext& ctx, const RatVec& z) {
    const auto combo = convex_combination(ctx.sum, z);
    const std::size_t n = p1.ambient_dim();
    RatVec x(n, Rat(0)), y(n, Rat(0));
    for (const auto& [sum_vertex, theta] : combo) {
        const auto& [i, j] = ctx.provenance[sum_vertex];
        x = add(x, scale(p1.vertices()[i], theta));
        y = add(y, scale(p2.vertices()[j], theta));
    }
    if (add(x, y) != z) throw std::logic_error("provenance split does not sum to z");
    return {std::move(x), std::move(y)};
}

// P1 ∩ (z - P2): rows of P1 as-is, rows of P2 reflected through z.
HalfspaceSystem intersection_system(const Polytope& p1, const Polytope& p2,
                                    const RatVec& z) {
    HalfspaceSystem h;
    h.n = p1.ambient_dim();
    for (const FacetIneq& f : p1.facets()) h.ineqs.emplace_back(f.normal, f.offset);
    for (const Equation& e : p1.equations()) h.eqs.emplace_back(e.normal, e.offset);
    auto reflect = [&](const IntVec& normal, const Int& offset) {
        RatVec row = to_rat(negate(normal));
        row.push_back(Rat(offset) - dot(normal, z));
        IntVec scaled = primitive_direction(row);
        Int b = scaled.back();
        scaled.pop_back();
        return std::make_pair(std::move(scaled), std::move(b));
    };
    for (const FacetIneq& f : p2.facets()) h.ineqs.push_back(reflect(f.normal, f.offset));
    for (const Equation& e : p2.equations()) h.eqs.push_back(reflect(e.normal, e.offset));
    return h;
}

SplitResult iterative_split(const Polytope& p1, const Polytope& p2, RatVec x, RatVec y) {
    Face f1 = minimal_face_containing(p1, x);
    Face f2 = minimal_face_containing(p2, y);
    std::vector<std::size_t> trace{f1.dim + f2.dim};
    const std::size_t max_passes = trace.front() + 1;
    for (std::size_t pass = 0; pass <= max_passes; ++pass) {
        const Subspace common = intersection(f1.lins, f2.lins);
        if (common.dim() == 0) {
            SplitResult r;
            r.x = std::move(x);
            r.y = std::move(y);
            r.face1 = std::move(f1);
            r.face2 = std::move(f2);
            r.potential_trace = std::move(trace);
            return r;
        }
        const IntVec dir_int = primitive_direction(common.basis().front());
        const RatVec dir = to_rat(dir_int);
        const StepInterval i1 = max_step(p1, x, dir);             // x + step*dir
        const StepInterval i2 = max_step(p2, y, to_rat(negate(dir_int)));  // y - step*dir
        if (!i1.hi || !i2.hi || !i1.lo || !i2.lo)
            throw std::logic_error("iterative split: unbounded step on a polytope");
        Rat step = std::min(*i1.hi, *i2.hi);
        if (step == 0) {
            step = std::max(*i1.lo, *i2.lo);
            if (step == 0)
                throw std::logic_error("iterative split: no feasible move along direction");
        }
        x = add(x, scale(dir, step));
        y = sub(y, scale(dir, step));
        f1 = minimal_face_containing(p1, x);
        f2 = minimal_face_containing(p2, y);
        const std::size_t potential = f1.dim + f2.dim;
        if (potential >= trace.back())
            throw std::logic_error("iterative split: potential failed to decrease");
        trace.push_back(potential);
    }
    throw std::logic_error("iterative split: potential failed to reach zero");
}

SplitResult vertex_split(const Polytope& p1, const Polytope& p2, const RatVec& z,
                         const RatVec& start_x) {
    const HalfspaceSystem h = intersection_system(p1, p2, z);
    SplitResult r;
    r.x = purify_to_vertex(h, start_x);
    r.y = sub(z, r.x);
    r.face1 = minimal_face_containing(p1, r.x);
    r.face2 = minimal_face_containing(p2, r.y);
    r.potential_trace = {r.face1.dim + r.face2.dim};
    if (intersection(r.face1.lins, r.face2.lins).dim() != 0)
        throw std::logic_error("vertex split: face direction spaces intersect");
    return r;
}

}  // namespace

SumContext prepare_sum(const Polytope& p1, const Polytope& p2, const Budget& budget) {
    SumContext ctx;
    ctx.sum = minkowski_sum_polytopes(p1, p2, budget);
    std::map<RatVec, std::size_t> second_index;
    for (std::size_t j = 0; j < p2.vertices().size(); ++j)
        second_index.emplace(p2.vertices()[j], j);
    for (const RatVec& w : ctx.sum.vertices()) {
        bool found = false;
        for (std::size_t i = 0; i < p1.vertices().size() && !found; ++i) {
            const auto it = second_index.find(sub(w, p1.vertices()[i]));
            if (it != second_index.end()) {
                ctx.provenance.emplace_back(i, it->second);
                found = true;
            }
        }
        if (!found) throw std::logic_error("sum vertex with no summand pair");
    }
    return ctx;
}

SplitResult split_point(const Polytope& p1, const Polytope& p2, const SumContext& ctx,
                        const RatVec& z, SplitStrategy strategy) {
    require(p1.ambient_dim() == p2.ambient_dim() && z.size() == p1.ambient_dim(),
            ErrorKind::DimensionMismatch, "split inputs disagree on dimension");
    require(ctx.sum.contains(z), ErrorKind::NotInSum,
            "z is not in the Minkowski sum of the two polytopes");
    InitialSplit init = split_from_provenance(p1, p2, ctx, z);
    if (strategy == SplitStrategy::Iterative)
        return iterative_split(p1, p2, std::move(init.x), std::move(init.y));
    return vertex_split(p1, p2, z, init.x);
}

SplitResult split_point(const Polytope& p1, const Polytope& p2, const RatVec& z,
                        SplitStrategy strategy, const Budget& budget) {
    return split_point(p1, p2, prepare_sum(p1, p2, budget), z, strategy);
}

Decomposition integral_decompose(const UnimodularSystem& sys, const Polytope& p1,
                                 const Polytope& p2, const SumContext& ctx,
                                 const IntVec& z, const DecomposeOptions& opts,
                                 const Budget& budget) {
    const std::size_t n = sys.dim();
    require(p1.ambient_dim() == n && p2.ambient_dim() == n && z.size() == n,
            ErrorKind::DimensionMismatch, "decompose inputs disagree on dimension");
    if (opts.check_class) {
        require(static_cast<bool>(in_class(sys, p1, budget)), ErrorKind::ClassViolation,
                "first polytope is not in the class of the system");
        require(static_cast<bool>(in_class(sys, p2, budget)), ErrorKind::ClassViolation,
                "second polytope is not in the class of the system");
    }

    Decomposition d;
    d.z = z;
    SplitResult split = split_point(p1, p2, ctx, to_rat(z), opts.strategy);
    d.x = split.x;
    d.y = split.y;
    d.face1 = split.face1;
    d.face2 = split.face2;
    d.potential_trace = split.potential_trace;

    auto integral_vertex = [](const Polytope& p, const Face& f) {
        for (std::size_t idx : f.vertex_indices)
            if (auto iv = to_int(p.vertices()[idx])) return *iv;
        raise(ErrorKind::ClassViolation, "face has no integral vertex");
    };
    d.x_circ = integral_vertex(p1, d.face1);
    d.y_circ = integral_vertex(p2, d.face2);
    d.d_z = sub(sub(z, d.x_circ), d.y_circ);

    auto check = [&d](const char* label, bool ok) {
        d.checklist.push_back({label, ok});
        return ok;
    };

    const Subspace& lins1 = d.face1.lins;
    const Subspace& lins2 = d.face2.lins;
    const Subspace span_pair = sum(lins1, lins2);
    if (!check("difference_in_face_span_sum", span_pair.contains(d.d_z)))
        throw std::logic_error("decompose: offset escaped the face span sum");

    const IntMatrix& a = sys.matrix();
    const auto cols1 = columns_inside_subspace(a, lins1);
    const auto cols2 = columns_inside_subspace(a, lins2);
    std::vector<std::size_t> all_cols(a.cols());
    std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
    std::vector<std::size_t> chosen = extend_basis(a, {}, cols1, lins1);
    d.span1_count = chosen.size();
    chosen = extend_basis(a, chosen, cols2, span_pair);
    d.span_sum_count = chosen.size();
    chosen = extend_basis(a, chosen, all_cols, Subspace::full(n));
    d.basis_columns = chosen;

    const RatVec lambda = solve_in_basis(a.columns_subset(chosen), d.d_z);
    bool coeffs_integral = true;
    bool tail_zero = true;
    std::string violation;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < d.span_sum_count) {
            if (denominator(lambda[i]) != 1) {
                coeffs_integral = false;
                violation = "coefficient " + format_rat(lambda[i]) + " on column " +
                            std::to_string(chosen[i]) + " is not an integer";
            }
        } else if (lambda[i] != 0) {
            tail_zero = false;
            violation = "coefficient on padding column " + std::to_string(chosen[i]) +
                        " is nonzero";
        }
    }
    check("coefficients_integral", coeffs_integral);
    check("tail_coefficients_zero", tail_zero);
    if (!coeffs_integral || !tail_zero)
        raise(ErrorKind::IntegralityFailure,
              violation + " (a non-unimodular system leaks fractions here)");

    d.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.lambda[i] = numerator(lambda[i]);
    d.d_x = IntVec(n, Int(0));
    d.d_y = IntVec(n, Int(0));
    for (std::size_t i = 0; i < d.span1_count; ++i)
        d.d_x = add(d.d_x, scale(a.column(chosen[i]), d.lambda[i]));
    for (std::size_t i = d.span1_count; i < d.span_sum_count; ++i)
        d.d_y = add(d.d_y, scale(a.column(chosen[i]), d.lambda[i]));
    d.x_star = add(d.x_circ, d.d_x);
    d.y_star = add(d.y_circ, d.d_y);

    if (!check("offsets_in_face_spans", lins1.contains(d.d_x) && lins2.contains(d.d_y)))
        throw std::logic_error("decompose: offsets escaped their face spans");
    if (!check("difference_split", add(d.d_x, d.d_y) == d.d_z))
        throw std::logic_error("decompose: offset split failed");
    if (!check("sum_reconstructs_target", add(d.x_star, d.y_star) == z))
        throw std::logic_error("decompose: parts do not sum to z");
    const RatVec residual_x = sub(d.x, to_rat(d.x_star));
    const RatVec residual_y = sub(to_rat(d.y_star), d.y);
    if (!check("residual_zero", residual_x == residual_y && is_zero(residual_x)))
        throw std::logic_error("decompose: residual is not zero");
    if (!check("parts_in_polytopes", p1.contains(d.x_star) && p2.contains(d.y_star)))
        throw std::logic_error("decompose: a part escaped its polytope");
    return d;
}

Decomposition integral_decompose(const UnimodularSystem& sys, const Polytope& p1,
                                 const Polytope& p2, const IntVec& z,
                                 const DecomposeOptions& opts, const Budget& budget) {
    return integral_decompose(sys, p1, p2, prepare_sum(p1, p2, budget), z, opts, budget);
}

Dcp2Report verify_dcp2(const UnimodularSystem& sys, const Polytope& p1,
                       const Polytope& p2, const Budget& budget) {
    Dcp2Report rep;
    rep.class_p1_ok = static_cast<bool>(in_class(sys, p1, budget));
    rep.class_p2_ok = static_cast<bool>(in_class(sys, p2, budget));
    if (!rep.class_p1_ok || !rep.class_p2_ok) {
        rep.counterexamples.push_back({{}, "precondition: an input polytope is not in the class"});
        return rep;
    }
    const SumContext ctx = prepare_sum(p1, p2, budget);
    rep.class_sum_ok = static_cast<bool>(in_class(sys, ctx.sum, budget));
    if (!rep.class_sum_ok)
        rep.counterexamples.push_back({{}, "sum polytope left the class"});

    const LatticeSet s1 = lattice_points(p1, budget);
    const LatticeSet s2 = lattice_points(p2, budget);
    const LatticeSet brute = minkowski_sum(s1, s2);
    const LatticeSet sum_points = lattice_points(ctx.sum, budget);
    rep.sum_lattice_count = sum_points.size();
    rep.brute_force_count = brute.size();
    rep.lattice_sets_equal = sum_points == brute;
    if (!rep.lattice_sets_equal) {
        for (const IntVec& z : sum_points.points())
            if (!brute.contains(z))
                rep.counterexamples.push_back({z, "lattice point of the sum is not a sum of lattice points"});
        for (const IntVec& z : brute.points())
            if (!sum_points.contains(z))
                rep.counterexamples.push_back({z, "brute-force sum point escaped the sum polytope"});
    }

    const DecomposeOptions iter_opts{SplitStrategy::Iterative, false};
    const DecomposeOptions vert_opts{SplitStrategy::Vertex, false};
    auto structurally_sound = [&rep](const Decomposition& d) {
        ++rep.structural_checks;
        bool sound = intersection(d.face1.lins, d.face2.lins).dim() == 0;
        for (std::size_t i = 1; i < d.potential_trace.size(); ++i)
            sound = sound && d.potential_trace[i] < d.potential_trace[i - 1];
        if (!sound) ++rep.structural_failures;
        return sound;
    };
    for (const IntVec& z : sum_points.points()) {
        try {
            const Decomposition di = integral_decompose(sys, p1, p2, ctx, z, iter_opts, budget);
            rep.iterative_passes += di.potential_trace.size() - 1;
            const Decomposition dv = integral_decompose(sys, p1, p2, ctx, z, vert_opts, budget);
            if (!structurally_sound(di) || !structurally_sound(dv)) {
                rep.counterexamples.push_back({z, "split lost its structural invariants"});
                continue;
            }
            const bool confirmed = s1.contains(di.x_star) && s2.contains(di.y_star) &&
                                   s1.contains(dv.x_star) && s2.contains(dv.y_star);
            if (!confirmed) {
                rep.counterexamples.push_back({z, "decomposition parts missing from the lattice sets"});
                continue;
            }
            ++rep.decomposed_count;
        } catch (const std::exception& e) {
            rep.counterexamples.push_back({z, e.what()});
        }
    }
    rep.ok = rep.class_p1_ok && rep.class_p2_ok && rep.class_sum_ok &&
             rep.lattice_sets_equal && rep.decomposed_count == rep.sum_lattice_count &&
             rep.counterexamples.empty();
    return rep;
}

}  // namespace udca
