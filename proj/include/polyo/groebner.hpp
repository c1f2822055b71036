/**
 * @file groebner.hpp
 * @brief Buchberger engine: normal forms, reduced Groebner bases, ideal
 * membership and equality, elimination, initial ideals and minimal
 * generators of homogeneous ideals.
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

namespace polyo {

/// Budget for a computation. Exceeding any part raises ResourceLimitError.
struct ComputeLimits {
    std::size_t max_pairs = 0;  // 0: unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::stop_token stop;

    static ComputeLimits with_timeout(double seconds) {
        ComputeLimits l;
        if (seconds > 0) {
            l.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(seconds));
        }
        return l;
    }

    void check() const {
        if (stop.stop_requested()) throw ResourceLimitError("computation cancelled");
        if (deadline && std::chrono::steady_clock::now() > *deadline) throw ResourceLimitError("computation timed out");
    }
};

namespace detail {

// p - c*m*g where the leading terms cancel; both term lists strictly decreasing.
template <class F>
std::vector<typename Polynomial<F>::Term> subtract_multiple(const Ring<F>& ring,
                                                            std::span<const typename Polynomial<F>::Term> p,
                                                            const typename F::value_type& c, const Monomial& m,
                                                            std::span<const typename Polynomial<F>::Term> g) {
    using Term = typename Polynomial<F>::Term;
    const F& K = ring.field();
    const auto& ord = ring.order();
    std::vector<Term> out;
    out.reserve(p.size() + g.size());
    std::size_t a = 0, b = 0;
    while (a < p.size() || b < g.size()) {
        std::optional<Monomial> gm;
        if (b < g.size()) gm = g[b].mono * m;
        std::strong_ordering cmp = a == p.size()   ? std::strong_ordering::less
                                   : b == g.size() ? std::strong_ordering::greater
                                                   : ord.compare(p[a].mono, *gm);
        if (cmp > 0) {
            out.push_back(p[a++]);
        } else if (cmp < 0) {
            out.push_back({K.neg(K.mul(c, g[b].coeff)), std::move(*gm)});
            ++b;
        } else {
            auto s = K.sub(p[a].coeff, K.mul(c, g[b].coeff));
            if (!F::is_zero(s)) out.push_back({std::move(s), p[a].mono});
            ++a;
            ++b;
        }
    }
    return out;
}

template <class F>
void check_ring(const RingPtr<F>& ring, const Polynomial<F>& f) {
    if (!same_ring(ring, f.ring())) throw RingMismatchError("polynomial does not belong to the ring");
}

}  // namespace detail

template <class F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients;
    Polynomial<F> remainder;
};

/// Multivariate division. Terms are visited from the leading one down; each
/// is reduced by the first divisor (in sequence order) whose leading monomial
/// divides it. The quotients satisfy f = sum q_k g_k + remainder.
template <class F>
DivisionResult<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> G, const ComputeLimits& limits = {}) {
    using Term = typename Polynomial<F>::Term;
    const RingPtr<F>& ring = f.ring();
    const F& K = ring->field();
    for (const auto& g : G) detail::check_ring(ring, g);
    std::vector<std::vector<Term>> quot(G.size());
    std::vector<Term> rem;
    std::vector<Term> p = f.terms();
    std::size_t steps = 0;
    std::size_t head = 0;
    while (head < p.size()) {
        if ((++steps & 255) == 0) limits.check();
        const Term& lt = p[head];
        std::size_t k = 0;
        for (; k < G.size(); ++k)
            if (!G[k].is_zero() && G[k].lead_monomial().divides(lt.mono)) break;
        if (k == G.size()) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        auto c = K.div(lt.coeff, G[k].lead_coefficient());
        auto m = lt.mono.divided_by(G[k].lead_monomial());
        quot[k].push_back({c, m});
        std::span<const Term> tail(p.data() + head + 1, p.size() - head - 1);
        std::span<const Term> gtail(G[k].terms().data() + 1, G[k].size() - 1);
        p = detail::subtract_multiple<F>(*ring, tail, c, m, gtail);
        head = 0;
    }
    DivisionResult<F> out{{}, Polynomial<F>::from_sorted_terms(ring, std::move(rem))};
    out.quotients.reserve(G.size());
    for (auto& q : quot) out.quotients.push_back(Polynomial<F>::from_terms(ring, std::move(q)));
    return out;
}

/// Fully reduced remainder of f by G (see divide()).
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G, const ComputeLimits& limits = {}) {
    using Term = typename Polynomial<F>::Term;
    const RingPtr<F>& ring = f.ring();
    const F& K = ring->field();
    for (const auto& g : G) detail::check_ring(ring, g);
    std::vector<Term> rem;
    std::vector<Term> p = f.terms();
    std::size_t head = 0, steps = 0;
    while (head < p.size()) {
        if ((++steps & 255) == 0) limits.check();
        const Term& lt = p[head];
        const Polynomial<F>* red = nullptr;
        for (const auto& g : G) {
            if (!g.is_zero() && g.lead_monomial().divides(lt.mono)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        auto c = K.div(lt.coeff, red->lead_coefficient());
        auto m = lt.mono.divided_by(red->lead_monomial());
        std::span<const Term> tail(p.data() + head + 1, p.size() - head - 1);
        std::span<const Term> gtail(red->terms().data() + 1, red->size() - 1);
        p = detail::subtract_multiple<F>(*ring, tail, c, m, gtail);
        head = 0;
    }
    return Polynomial<F>::from_sorted_terms(ring, std::move(rem));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const ComputeLimits& limits = {}) {
    return normal_form(f, std::span<const Polynomial<F>>(G), limits);
}

/// S-polynomial of two nonzero polynomials.
template <class F>
Polynomial<F> spair(const Polynomial<F>& f, const Polynomial<F>& g) {
    Polynomial<F>::check_same(f, g);
    const F& K = f.ring()->field();
    Monomial l = f.lead_monomial().lcm(g.lead_monomial());
    auto a = f.times_term(K.inv(f.lead_coefficient()), l.divided_by(f.lead_monomial()));
    auto b = g.times_term(K.inv(g.lead_coefficient()), l.divided_by(g.lead_monomial()));
    return a - b;
}

/// Incremental Buchberger with Gebauer-Moeller pair pruning and sugar
/// selection. `complete(d)` stops before pairs of sugar above d, which makes
/// the basis a d-truncated Groebner basis when every input is homogeneous.
template <class F>
class GroebnerEngine {
public:
    GroebnerEngine(RingPtr<F> ring, ComputeLimits limits = {}) : ring_(std::move(ring)), limits_(std::move(limits)) {}

    /// Reduces `f` by the current basis and inserts the remainder if nonzero.
    void add(const Polynomial<F>& f) {
        detail::check_ring(ring_, f);
        auto h = reduce(f);
        if (h.is_zero()) return;
        insert(h.monic(), f.total_degree());
    }

    void complete(std::optional<std::uint64_t> max_sugar = std::nullopt) {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (before(pairs_[k], pairs_[best])) best = k;
            if (max_sugar && pairs_[best].sugar > *max_sugar) return;
            Pair p = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();

            limits_.check();
            ++processed_;
            if (limits_.max_pairs && processed_ > limits_.max_pairs) {
                throw ResourceLimitError("S-pair budget of " + std::to_string(limits_.max_pairs) + " exceeded");
            }
            auto h = reduce(spair(elems_[p.i].poly, elems_[p.j].poly));
            if (!h.is_zero()) insert(h.monic(), p.sugar);
        }
    }

    /// Full normal form with respect to the active basis elements.
    Polynomial<F> reduce(const Polynomial<F>& f) const {
        return normal_form(f, std::span<const Polynomial<F>>(active_), limits_);
    }

    /// Reduced basis: monic, inter-reduced, sorted by leading monomial descending.
    std::vector<Polynomial<F>> reduced_basis() const {
        std::vector<Polynomial<F>> out;
        out.reserve(active_.size());
        for (std::size_t k = 0; k < active_.size(); ++k) {
            const auto& g = active_[k];
            std::vector<Polynomial<F>> others;
            others.reserve(active_.size() - 1);
            for (std::size_t m = 0; m < active_.size(); ++m)
                if (m != k) others.push_back(active_[m]);
            auto lead = Polynomial<F>::monomial(ring_, g.lead_monomial(), g.lead_coefficient());
            auto tail = normal_form(g - lead, std::span<const Polynomial<F>>(others), limits_);
            out.push_back((lead + tail).monic());
        }
        const auto& ord = ring_->order();
        std::sort(out.begin(), out.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
            return ord.compare(x.lead_monomial(), y.lead_monomial()) > 0;
        });
        return out;
    }

    std::size_t pairs_processed() const { return processed_; }
    std::size_t basis_size() const { return active_.size(); }

private:
    struct Element {
        Polynomial<F> poly;
        std::uint64_t sugar;
        bool active;
    };
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint64_t sugar;
    };

    bool before(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (auto c = ring_->order().compare(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }

    Pair make_pair(std::size_t i, std::size_t j) const {
        const auto& li = elems_[i].poly.lead_monomial();
        const auto& lj = elems_[j].poly.lead_monomial();
        Monomial l = li.lcm(lj);
        std::uint64_t s = std::max(elems_[i].sugar + l.degree() - li.degree(), elems_[j].sugar + l.degree() - lj.degree());
        return {i, j, std::move(l), s};
    }

    // Gebauer-Moeller update for the new element h.
    void insert(Polynomial<F> h, std::uint64_t sugar) {
        const std::size_t hn = elems_.size();
        elems_.push_back({std::move(h), sugar, true});
        const Monomial& lh = elems_[hn].poly.lead_monomial();

        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < hn; ++k)
            if (elems_[k].active) fresh.push_back(make_pair(k, hn));

        // Chain criterion among the new pairs; coprime pairs survive this step
        // so they can shadow others, then get dropped by the product criterion.
        std::vector<char> keep(fresh.size(), 1);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            const Monomial& la = elems_[fresh[a].i].poly.lead_monomial();
            if (la.coprime(lh)) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) {
                    keep[a] = 0;
                    break;
                }
            }
        }
        std::vector<Pair> accepted;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            if (elems_[fresh[a].i].poly.lead_monomial().coprime(lh)) continue;
            accepted.push_back(std::move(fresh[a]));
        }

        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + accepted.size());
        for (auto& p : pairs_) {
            bool drop = false;
            if (lh.divides(p.lcm)) {
                Monomial lih = elems_[p.i].poly.lead_monomial().lcm(lh);
                Monomial ljh = elems_[p.j].poly.lead_monomial().lcm(lh);
                drop = lih != p.lcm && ljh != p.lcm;
            }
            if (!drop) kept.push_back(std::move(p));
        }
        for (auto& p : accepted) kept.push_back(std::move(p));
        pairs_ = std::move(kept);

        for (std::size_t k = 0; k < hn; ++k)
            if (elems_[k].active && lh.divides(elems_[k].poly.lead_monomial())) elems_[k].active = false;
        active_.clear();
        for (const auto& e : elems_)
            if (e.active) active_.push_back(e.poly);
    }

    RingPtr<F> ring_;
    ComputeLimits limits_;
    std::vector<Element> elems_;
    std::vector<Polynomial<F>> active_;
    std::vector<Pair> pairs_;
    std::size_t processed_ = 0;
};

/// Reduced Groebner basis of <F> under the ring's order.
template <class F>
std::vector<Polynomial<F>> buchberger_reduced(std::span<const Polynomial<F>> gens, const ComputeLimits& limits = {}) {
    std::vector<Polynomial<F>> nonzero;
    for (const auto& f : gens)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return {};
    for (const auto& f : nonzero) Polynomial<F>::check_same(nonzero.front(), f);
    GroebnerEngine<F> engine(nonzero.front().ring(), limits);
    for (const auto& f : nonzero) engine.add(f);
    engine.complete();
    return engine.reduced_basis();
}

template <class F>
std::vector<Polynomial<F>> buchberger_reduced(const std::vector<Polynomial<F>>& gens, const ComputeLimits& limits = {}) {
    return buchberger_reduced(std::span<const Polynomial<F>>(gens), limits);
}

/// Generators in a ring plus a lazily computed reduced Groebner basis under
/// the ring's order. Copies share the cache; the cache is filled at most once.
template <class F>
class IdealHandle {
public:
    IdealHandle(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
        : state_(std::make_shared<State>(std::move(ring), std::move(gens))) {
        for (const auto& g : state_->gens) detail::check_ring(state_->ring, g);
    }

    /// For callers that already hold the reduced basis (elimination results).
    IdealHandle(RingPtr<F> ring, std::vector<Polynomial<F>> gens, std::vector<Polynomial<F>> reduced_basis)
        : IdealHandle(std::move(ring), std::move(gens)) {
        state_->gb = std::make_shared<const std::vector<Polynomial<F>>>(std::move(reduced_basis));
    }

    const RingPtr<F>& ring() const { return state_->ring; }
    const std::vector<Polynomial<F>>& generators() const { return state_->gens; }

    bool has_cached_basis() const {
        std::lock_guard lock(state_->mutex);
        return state_->gb != nullptr;
    }

    const std::vector<Polynomial<F>>& groebner_basis(const ComputeLimits& limits = {}) const {
        std::lock_guard lock(state_->mutex);
        if (!state_->gb) {
            state_->gb = std::make_shared<const std::vector<Polynomial<F>>>(buchberger_reduced(state_->gens, limits));
        }
        return *state_->gb;
    }

private:
    struct State {
        State(RingPtr<F> r, std::vector<Polynomial<F>> g) : ring(std::move(r)), gens(std::move(g)) {}
        RingPtr<F> ring;
        std::vector<Polynomial<F>> gens;
        std::mutex mutex;
        std::shared_ptr<const std::vector<Polynomial<F>>> gb;
    };
    std::shared_ptr<State> state_;
};

template <class F>
bool member(const Polynomial<F>& f, const IdealHandle<F>& I, const ComputeLimits& limits = {}) {
    detail::check_ring(I.ring(), f);
    return normal_form(f, I.groebner_basis(limits), limits).is_zero();
}

template <class F>
bool ideal_equal(const IdealHandle<F>& I, const IdealHandle<F>& J, const ComputeLimits& limits = {}) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatchError("ideals live in different rings");
    return I.groebner_basis(limits) == J.groebner_basis(limits);
}

/// Intersection of I with the subring on the variables after the block. The
/// ring must use an elimination order whose leading block is exactly `block`.
/// The result lives in a graded reverse lex ring on the remaining variables.
template <class F>
IdealHandle<F> eliminate(const IdealHandle<F>& I, std::span<const Variable> block, const ComputeLimits& limits = {}) {
    const auto& ring = *I.ring();
    const auto& ord = ring.order();
    if (ord.kind != OrderKind::elimination || ord.block != block.size()) {
        throw PreconditionError("ring order is not an elimination order for the requested block");
    }
    for (const auto& v : block) {
        if (!ring.contains(v) || ring.index_of(v) >= ord.block) {
            throw PreconditionError("variable " + v.name() + " is not in the leading elimination block");
        }
    }
    std::vector<Variable> rest(ring.variables().begin() + static_cast<std::ptrdiff_t>(ord.block), ring.variables().end());
    auto sub = make_ring(ring.field(), std::move(rest), MonomialOrder::grevlex());
    std::vector<Polynomial<F>> kept;
    for (const auto& g : I.groebner_basis(limits))
        if (!g.involves_block(ord.block)) kept.push_back(transfer(g, sub));
    auto basis = kept;
    return IdealHandle<F>(sub, std::move(kept), std::move(basis));
}

/// Minimal generators of the initial ideal, sorted descending.
template <class F>
std::vector<Monomial> initial_ideal(const IdealHandle<F>& I, const ComputeLimits& limits = {}) {
    std::vector<Monomial> out;
    for (const auto& g : I.groebner_basis(limits)) out.push_back(g.lead_monomial());
    return out;
}

/// Minimal homogeneous generating set, built degree by degree from the
/// ideal's generators. A candidate is dropped when it already lies in the
/// ideal of the members kept so far.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const IdealHandle<F>& I, const ComputeLimits& limits = {}) {
    std::vector<Polynomial<F>> candidates;
    for (const auto& g : I.generators()) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw PreconditionError("minimal generators require homogeneous generators");
        candidates.push_back(g);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.total_degree() < b.total_degree(); });
    GroebnerEngine<F> engine(I.ring(), limits);
    std::vector<Polynomial<F>> kept;
    std::optional<std::uint64_t> degree;
    for (const auto& c : candidates) {
        if (degree != c.total_degree()) {
            degree = c.total_degree();
            engine.complete(degree);
        }
        if (engine.reduce(c).is_zero()) continue;
        engine.add(c);
        kept.push_back(c);
    }
    return kept;
}

}  // namespace polyo
