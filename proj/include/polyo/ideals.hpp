/**
 * @file ideals.hpp
 * @brief Inner 2-minors, the polyomino ideal I_P and the matrix M(P).
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/geometry.hpp"
#include "polyo/groebner.hpp"
#include "polyo/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polyo {

/// 1: vertex-ranked ring with the requested term order.
/// 2: convex-collection order, where the inner 2-minors are a reduced Groebner basis.
enum class RingChoice { ranked = 1, convex = 2 };

struct IdealOptions {
    RingChoice ring_choice = RingChoice::ranked;
    OrderKind term_order = OrderKind::ranked_lex;  // ranked_lex or ranked_grevlex
};

namespace detail {

// Doubly lexical ordering of the vertex incidence matrix (rows = occupied
// j values, columns = occupied i values). Rows and columns are re-sorted by
// their incidence vectors in turn until neither order changes.
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> doubly_lexical(
    const std::vector<GridPoint>& vertices) {
    std::set<GridPoint> member(vertices.begin(), vertices.end());
    std::set<std::int64_t> is, js;
    for (auto p : vertices) {
        is.insert(p.i);
        js.insert(p.j);
    }
    std::vector<std::int64_t> cols(is.begin(), is.end()), rows(js.begin(), js.end());
    auto row_key = [&](std::int64_t r) {
        std::vector<int> k;
        for (auto c : cols) k.push_back(member.contains({c, r}) ? 1 : 0);
        return k;
    };
    auto col_key = [&](std::int64_t c) {
        std::vector<int> k;
        for (auto r : rows) k.push_back(member.contains({c, r}) ? 1 : 0);
        return k;
    };
    for (std::size_t round = 0; round < 4 * (rows.size() + cols.size()) + 4; ++round) {
        auto old_rows = rows, old_cols = cols;
        std::stable_sort(rows.begin(), rows.end(), [&](auto x, auto y) { return row_key(x) < row_key(y); });
        std::stable_sort(cols.begin(), cols.end(), [&](auto x, auto y) { return col_key(x) < col_key(y); });
        if (rows == old_rows && cols == old_cols) break;
    }
    return {rows, cols};
}

// Variables for the convex-collection order: ranked by column position in
// the doubly lexical ordering, then by row position descending.
inline std::vector<GridPoint> convex_ranking(const std::vector<GridPoint>& vertices) {
    auto [rows, cols] = doubly_lexical(vertices);
    auto pos = [](const std::vector<std::int64_t>& v, std::int64_t x) {
        return std::find(v.begin(), v.end(), x) - v.begin();
    };
    std::vector<GridPoint> ranked = vertices;
    std::sort(ranked.begin(), ranked.end(), [&](GridPoint a, GridPoint b) {
        auto ca = pos(cols, a.i), cb = pos(cols, b.i);
        if (ca != cb) return ca < cb;
        return pos(rows, a.j) > pos(rows, b.j);
    });
    return ranked;
}

template <class F>
std::vector<Polynomial<F>> monic_sorted(std::vector<Polynomial<F>> gens) {
    for (auto& g : gens) g = g.monic();
    if (gens.empty()) return gens;
    const auto& ord = gens.front().ring()->order();
    std::sort(gens.begin(), gens.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
        return ord.compare(x.lead_monomial(), y.lead_monomial()) > 0;
    });
    return gens;
}

}  // namespace detail

/// x_a x_b - x_c x_d for the diagonal corners a, b and anti-diagonal corners c, d.
template <class F>
Polynomial<F> inner_minor(const Interval& iv, const RingPtr<F>& ring) {
    if (!iv.proper()) throw PreconditionError("inner minor of an improper interval");
    for (GridPoint p : {iv.a, iv.b, iv.anti_diagonal_upper_left(), iv.anti_diagonal_lower_right()}) {
        if (!ring->contains(Variable::x(p))) throw PreconditionError("corner " + to_string(p) + " is not a ring variable");
    }
    auto x = [&](GridPoint p) { return ring->monomial_of(Variable::x(p)); };
    return Polynomial<F>::binomial(ring, x(iv.a) * x(iv.b),
                                   x(iv.anti_diagonal_upper_left()) * x(iv.anti_diagonal_lower_right()));
}

/// Renders a binomial with its +1 term first, the way inner minors are printed.
template <class F>
std::string render_binomial(const Polynomial<F>& f) {
    if (f.size() == 2) {
        const F& K = f.ring()->field();
        const auto& t = f.terms();
        if (K.to_string(t[0].coeff) == "-1" && K.to_string(t[1].coeff) == "1") {
            return f.ring()->render(t[1].mono) + "-" + f.ring()->render(t[0].mono);
        }
    }
    return f.to_string();
}

/// Ring for P. The ranked choice uses vertex_set(P) order with lex or
/// grevlex. The convex choice requires a convex weakly connected P and is
/// checked on construction: the inner 2-minors must come back from Buchberger
/// unchanged, otherwise InternalError is raised.
template <class F>
RingPtr<F> build_ring(const CellCollection& P, F field, const IdealOptions& opts = {}) {
    auto V = vertex_set(P);
    std::vector<Variable> vars;
    if (opts.ring_choice == RingChoice::convex) {
        auto c = classify(P);
        if (!c.weakly_connected) throw PreconditionError("ring choice 2 needs a weakly connected collection");
        if (!c.convex) throw PreconditionError("ring choice 2 needs a convex collection");
        for (auto p : detail::convex_ranking(V)) vars.push_back(Variable::x(p));
        auto ring = make_ring(std::move(field), std::move(vars), MonomialOrder::convex());
        std::vector<Polynomial<F>> gens;
        for (const auto& iv : inner_intervals(P)) gens.push_back(inner_minor(iv, ring));
        auto expected = detail::monic_sorted(gens);
        if (buchberger_reduced(gens) != expected) {
            throw InternalError("convex-collection ranking does not make the inner 2-minors a reduced Groebner basis");
        }
        return ring;
    }
    for (auto p : V) vars.push_back(Variable::x(p));
    MonomialOrder order;
    switch (opts.term_order) {
        case OrderKind::ranked_lex: order = MonomialOrder::lex(); break;
        case OrderKind::ranked_grevlex: order = MonomialOrder::grevlex(); break;
        default: throw PreconditionError("term order must be lex or grevlex");
    }
    return make_ring(std::move(field), std::move(vars), order);
}

/// Inner 2-minors of P in `ring`, one per inner interval, in interval order.
template <class F>
std::vector<Polynomial<F>> inner_minors(const CellCollection& P, const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> gens;
    for (const auto& iv : inner_intervals(P)) gens.push_back(inner_minor(iv, ring));
    return gens;
}

/// I_P. Under the convex choice the reduced basis is known up front.
template <class F>
IdealHandle<F> polyo_ideal(const CellCollection& P, F field, const IdealOptions& opts = {}) {
    auto ring = build_ring(P, std::move(field), opts);
    auto gens = inner_minors(P, ring);
    if (opts.ring_choice == RingChoice::convex) {
        auto gb = detail::monic_sorted(gens);
        return IdealHandle<F>(ring, std::move(gens), std::move(gb));
    }
    return IdealHandle<F>(ring, std::move(gens));
}

/// M(P) over the bounding interval [(p,q),(r,s)]: s-q+1 rows with row 0 at
/// j = s, and r-p+1 columns with column 0 at i = p.
struct PolyoMatrix {
    GridPoint lower_left;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::optional<GridPoint>> entries;  // row-major

    const std::optional<GridPoint>& entry(std::int64_t r, std::int64_t c) const {
        return entries.at(static_cast<std::size_t>(r * cols + c));
    }
    /// Entry at grid position (i, j).
    const std::optional<GridPoint>& at(GridPoint p) const {
        std::int64_t r = lower_left.j + rows - 1 - p.j, c = p.i - lower_left.i;
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw PreconditionError("position outside the matrix");
        return entry(r, c);
    }

    /// Text layout with left-aligned columns, e.g. "| 0       x_(2,4) |".
    std::string render() const {
        std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
        auto text = [](const std::optional<GridPoint>& e) { return e ? Variable::x(*e).name() : std::string("0"); };
        for (std::int64_t r = 0; r < rows; ++r)
            for (std::int64_t c = 0; c < cols; ++c)
                width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], text(entry(r, c)).size());
        std::string out;
        for (std::int64_t r = 0; r < rows; ++r) {
            out += "|";
            for (std::int64_t c = 0; c < cols; ++c) {
                auto t = text(entry(r, c));
                out += " " + t + std::string(width[static_cast<std::size_t>(c)] - t.size(), ' ');
            }
            out += " |\n";
        }
        return out;
    }

    friend bool operator==(const PolyoMatrix&, const PolyoMatrix&) = default;
};

inline PolyoMatrix polyo_matrix(const CellCollection& P) {
    Interval box = P.bounding_interval();
    PolyoMatrix M;
    M.lower_left = box.a;
    M.rows = box.b.j - box.a.j + 1;
    M.cols = box.b.i - box.a.i + 1;
    M.entries.assign(static_cast<std::size_t>(M.rows * M.cols), std::nullopt);
    for (GridPoint v : vertex_set(P)) {
        std::int64_t r = box.b.j - v.j, c = v.i - box.a.i;
        M.entries[static_cast<std::size_t>(r * M.cols + c)] = v;
    }
    return M;
}

/// 2-minors of M over the row and column pairs of the inner intervals of P.
template <class F>
std::vector<Polynomial<F>> matrix_inner_minors(const PolyoMatrix& M, const CellCollection& P, const RingPtr<F>& ring) {
    if (!(M == polyo_matrix(P))) throw PreconditionError("matrix was not built from this collection");
    std::vector<Polynomial<F>> out;
    for (const auto& iv : inner_intervals(P)) {
        const auto &a = M.at(iv.a), &b = M.at(iv.b);
        const auto &c = M.at(iv.anti_diagonal_upper_left()), &d = M.at(iv.anti_diagonal_lower_right());
        if (!a || !b || !c || !d) throw InternalError("inner interval corner missing from the matrix");
        auto x = [&](GridPoint p) { return ring->monomial_of(Variable::x(p)); };
        out.push_back(Polynomial<F>::binomial(ring, x(*a) * x(*b), x(*c) * x(*d)));
    }
    return out;
}

/// Every nonzero 2x2 minor of M, literally,
/// sorted by leading monomial descending. Sign: lower-left times
/// upper-right entry positive. Differs from I_P for non-convex collections.
template <class F>
std::vector<Polynomial<F>> all_matrix_minors(const PolyoMatrix& M, const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> out;
    auto mono = [&](const std::optional<GridPoint>& p, const std::optional<GridPoint>& q) -> std::optional<Monomial> {
        if (!p || !q) return std::nullopt;
        return ring->monomial_of(Variable::x(*p)) * ring->monomial_of(Variable::x(*q));
    };
    const F& K = ring->field();
    for (std::int64_t r1 = 0; r1 < M.rows; ++r1)
        for (std::int64_t r2 = r1 + 1; r2 < M.rows; ++r2)
            for (std::int64_t c1 = 0; c1 < M.cols; ++c1)
                for (std::int64_t c2 = c1 + 1; c2 < M.cols; ++c2) {
                    // r2 is the lower row, so (r2,c1) and (r1,c2) form the diagonal.
                    auto diag = mono(M.entry(r2, c1), M.entry(r1, c2));
                    auto anti = mono(M.entry(r1, c1), M.entry(r2, c2));
                    std::vector<typename Polynomial<F>::Term> t;
                    if (diag) t.push_back({K.one(), *diag});
                    if (anti) t.push_back({K.neg(K.one()), *anti});
                    auto f = Polynomial<F>::from_terms(ring, std::move(t));
                    if (!f.is_zero()) out.push_back(std::move(f));
                }
    const auto& ord = ring->order();
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        return ord.compare(x.lead_monomial(), y.lead_monomial()) > 0;
    });
    return out;
}

}  // namespace polyo
