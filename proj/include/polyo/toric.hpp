/**
 * @file toric.hpp
 * @brief The toric ideal J_P: the alpha monomial map over edge-interval and
 * hole variables, its kernel by elimination, and the comparison with I_P.
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/geometry.hpp"
#include "polyo/groebner.hpp"
#include "polyo/ideals.hpp"
#include "polyo/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace polyo {

/// F_k = {(i,j) in V(P) : i <= i_k, j <= j_k} for every corner e_k, each
/// sorted descending like vertex_set.
inline std::vector<std::vector<GridPoint>> f_sets(const CellCollection& P, const std::vector<GridPoint>& corners) {
    auto V = vertex_set(P);
    std::vector<std::vector<GridPoint>> out;
    for (GridPoint e : corners) {
        std::vector<GridPoint> F;
        for (GridPoint v : V)
            if (v.weakly_below(e)) F.push_back(v);
        out.push_back(std::move(F));
    }
    return out;
}

/// alpha(a) = h_H v_V prod_{a in F_k} w_k, where H and V are the maximal
/// horizontal and vertical edge intervals through a. Auxiliary variables are
/// numbered from 1 in the order of maximal_edge_intervals and of the corners.
struct AlphaAssignment {
    std::vector<EdgeInterval> horizontal;
    std::vector<EdgeInterval> vertical;
    std::vector<GridPoint> hole_corners;
    std::vector<GridPoint> vertices;  // vertex_set order
    std::vector<std::size_t> h_index;
    std::vector<std::size_t> v_index;
    std::vector<std::vector<std::size_t>> w_indices;

    /// h_1.., v_1.., w_1.. in that order.
    std::vector<Variable> aux_variables() const {
        std::vector<Variable> vars;
        for (std::size_t k = 0; k < horizontal.size(); ++k)
            vars.push_back(Variable::aux(Variable::Kind::h, static_cast<std::int64_t>(k + 1)));
        for (std::size_t k = 0; k < vertical.size(); ++k)
            vars.push_back(Variable::aux(Variable::Kind::v, static_cast<std::int64_t>(k + 1)));
        for (std::size_t k = 0; k < hole_corners.size(); ++k)
            vars.push_back(Variable::aux(Variable::Kind::w, static_cast<std::int64_t>(k + 1)));
        return vars;
    }

    /// Exponent vector of alpha(vertices[n]) over aux_variables().
    std::vector<std::uint32_t> exponents(std::size_t n) const {
        std::vector<std::uint32_t> e(horizontal.size() + vertical.size() + hole_corners.size(), 0);
        e[h_index.at(n)] = 1;
        e[horizontal.size() + v_index.at(n)] = 1;
        for (auto k : w_indices.at(n)) e[horizontal.size() + vertical.size() + k] = 1;
        return e;
    }
};

inline AlphaAssignment alpha(const CellCollection& P, const std::vector<GridPoint>& corners) {
    if (!classify(P).weakly_connected) throw PreconditionError("the toric ideal needs a weakly connected collection");
    AlphaAssignment A;
    A.horizontal = maximal_edge_intervals(P, Direction::horizontal);
    A.vertical = maximal_edge_intervals(P, Direction::vertical);
    A.hole_corners = corners;
    A.vertices = vertex_set(P);
    auto F = f_sets(P, corners);
    auto unique_interval = [](const std::vector<EdgeInterval>& ivs, GridPoint p) {
        std::optional<std::size_t> found;
        for (std::size_t k = 0; k < ivs.size(); ++k) {
            if (!ivs[k].contains(p)) continue;
            if (found) throw InternalError("vertex " + to_string(p) + " lies in two maximal edge intervals");
            found = k;
        }
        if (!found) throw InternalError("vertex " + to_string(p) + " lies in no maximal edge interval");
        return *found;
    };
    for (GridPoint a : A.vertices) {
        A.h_index.push_back(unique_interval(A.horizontal, a));
        A.v_index.push_back(unique_interval(A.vertical, a));
        std::vector<std::size_t> w;
        for (std::size_t k = 0; k < F.size(); ++k)
            if (std::binary_search(F[k].begin(), F[k].end(), a, std::greater<>{})) w.push_back(k);
        A.w_indices.push_back(std::move(w));
    }
    return A;
}

inline std::vector<GridPoint> hole_corners(const CellCollection& P) {
    std::vector<GridPoint> out;
    for (const auto& h : detect_holes(P)) out.push_back(h.corner);
    return out;
}

/// J_P = ker(x_a -> alpha(a)) in `target`, whose variables must be exactly
/// the x-variables of P. Computed by eliminating the auxiliaries from
/// <x_a - alpha(a)> under a block order (auxiliaries first, grevlex inside
/// each block). Holes default to the detected corners.
template <class F>
IdealHandle<F> polyo_toric(const CellCollection& P, const RingPtr<F>& target,
                           const std::optional<std::vector<GridPoint>>& holes = std::nullopt,
                           const ComputeLimits& limits = {}) {
    auto A = alpha(P, holes ? *holes : hole_corners(P));
    if (target->nvars() != A.vertices.size()) throw RingMismatchError("target ring is not the ring of P");
    for (GridPoint a : A.vertices)
        if (!target->contains(Variable::x(a))) throw RingMismatchError("target ring is not the ring of P");

    auto aux = A.aux_variables();
    const std::size_t block = aux.size();
    std::vector<Variable> vars = aux;
    for (const auto& v : target->variables()) vars.push_back(v);
    auto ring = make_ring(target->field(), std::move(vars), MonomialOrder::eliminating(block));

    const F& K = ring->field();
    std::vector<Polynomial<F>> gens;
    for (std::size_t n = 0; n < A.vertices.size(); ++n) {
        auto e = A.exponents(n);
        e.resize(ring->nvars(), 0);
        Monomial image(std::move(e));
        Monomial x = ring->monomial_of(Variable::x(A.vertices[n]));
        gens.push_back(Polynomial<F>::from_terms(ring, {{K.one(), x}, {K.neg(K.one()), image}}));
    }
    IdealHandle<F> graph(ring, std::move(gens));
    auto kernel = eliminate(graph, std::span<const Variable>(aux), limits);
    if (same_ring(kernel.ring(), target)) return kernel;
    std::vector<Polynomial<F>> moved;
    for (const auto& g : kernel.generators()) moved.push_back(transfer(g, target));
    return IdealHandle<F>(target, std::move(moved));
}

/// Image of f under x_a -> alpha(a), in a ring over the auxiliaries only.
template <class F>
Polynomial<F> alpha_image(const Polynomial<F>& f, const AlphaAssignment& A) {
    auto ring = make_ring(f.ring()->field(), A.aux_variables(), MonomialOrder::lex());
    std::vector<Polynomial<F>> images(f.ring()->nvars());
    for (std::size_t k = 0; k < f.ring()->nvars(); ++k) {
        const auto& v = f.ring()->variable(k);
        auto it = std::find(A.vertices.begin(), A.vertices.end(), v.point);
        if (v.kind != Variable::Kind::x || it == A.vertices.end()) {
            throw RingMismatchError("variable " + v.name() + " is not a vertex of the collection");
        }
        images[k] = Polynomial<F>::monomial(ring, Monomial(A.exponents(static_cast<std::size_t>(it - A.vertices.begin()))));
    }
    return substitute(f, std::span<const Polynomial<F>>(images), ring);
}

template <class F>
struct ToricComparison {
    bool equal = false;
    std::vector<Polynomial<F>> extra_generators;  // minimal generators of J_P of degree >= 3
    bool theorem_applies = false;                 // P simple and weakly connected
    IdealHandle<F> ideal;                         // I_P
    IdealHandle<F> toric;                         // J_P
};

/// Compares I_P and J_P. Both live in the vertex-ranked grevlex ring, which
/// lets J_P reuse the basis produced by the elimination.
template <class F>
ToricComparison<F> toric_compare(const CellCollection& P, F field,
                                 const std::optional<std::vector<GridPoint>>& holes = std::nullopt,
                                 const ComputeLimits& limits = {}) {
    auto cls = classify(P);
    if (!cls.weakly_connected) throw PreconditionError("the toric ideal needs a weakly connected collection");
    IdealOptions opts;
    opts.term_order = OrderKind::ranked_grevlex;
    auto I = polyo_ideal(P, std::move(field), opts);
    auto J = polyo_toric(P, I.ring(), holes, limits);
    bool equal = ideal_equal(I, J, limits);
    std::vector<Polynomial<F>> extra;
    if (!equal) {
        for (auto& g : minimal_generators(J, limits))
            if (g.total_degree() >= 3) extra.push_back(std::move(g));
    }
    return {equal, std::move(extra), cls.simple && cls.weakly_connected, std::move(I), std::move(J)};
}

}  // namespace polyo
