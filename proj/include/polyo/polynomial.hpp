/**
 * @file polynomial.hpp
 * @brief Variables, monomials, monomial orders, rings and sparse polynomials.
 *
 * A ring fixes an ordered universe of variables; index 0 is the top-ranked
 * variable. Monomials are dense exponent vectors over that universe, and a
 * polynomial keeps its terms strictly decreasing under the ring's order with
 * no zero coefficients.
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/field.hpp"
#include "polyo/geometry.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polyo {

/// A ring variable: x_(i,j) for a vertex, or an auxiliary h_k, v_k, w_k
/// (toric map) or s_k, t_k (edge ring).
struct Variable {
    enum class Kind : std::uint8_t { x, h, v, w, s, t };

    Kind kind = Kind::x;
    GridPoint point{};       // x only
    std::int64_t index = 0;  // auxiliaries only

    static Variable x(GridPoint p) { return {Kind::x, p, 0}; }
    static Variable aux(Kind k, std::int64_t idx) { return {k, {}, idx}; }

    std::string name() const {
        switch (kind) {
            case Kind::x: return "x_(" + std::to_string(point.i) + "," + std::to_string(point.j) + ")";
            case Kind::h: return "h_" + std::to_string(index);
            case Kind::v: return "v_" + std::to_string(index);
            case Kind::w: return "w_" + std::to_string(index);
            case Kind::s: return "s_" + std::to_string(index);
            case Kind::t: return "t_" + std::to_string(index);
        }
        return "?";
    }

    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;
};

struct VariableHash {
    std::size_t operator()(const Variable& v) const noexcept {
        return GridPointHash{}(v.point) ^ (static_cast<std::size_t>(v.kind) * 0x9E3779B1u) ^
               (static_cast<std::size_t>(v.index) << 7);
    }
};

/// Exponent vector over a ring's universe, with cached total degree and a
/// 64-bit support mask (bit k % 64 set when variable k occurs).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { recompute(); }

    static Monomial variable(std::size_t nvars, std::size_t k, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps_.at(k) = e;
        m.recompute();
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
    std::span<const std::uint32_t> exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t mask() const { return mask_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& o) const {
        if (degree_ > o.degree_ || (mask_ & ~o.mask_) != 0) return false;
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k] > o.exps_[k]) return false;
        return true;
    }

    bool coprime(const Monomial& o) const {
        if ((mask_ & o.mask_) == 0) return true;
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k] != 0 && o.exps_[k] != 0) return false;
        return true;
    }

    bool squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
    }

    std::uint64_t degree_in(std::size_t begin, std::size_t end) const {
        std::uint64_t d = 0;
        for (std::size_t k = begin; k < end; ++k) d += exps_[k];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
        r.degree_ = degree_ + o.degree_;
        r.mask_ = mask_ | o.mask_;
        return r;
    }

    /// Exact quotient; requires `o.divides(*this)`.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= o.exps_[k];
        r.recompute();
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] = std::max(exps_[k], o.exps_[k]);
        r.recompute();
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.mask_ == b.mask_ && a.exps_ == b.exps_;
    }

private:
    void recompute() {
        degree_ = 0;
        mask_ = 0;
        for (std::size_t k = 0; k < exps_.size(); ++k) {
            degree_ += exps_[k];
            if (exps_[k]) mask_ |= std::uint64_t{1} << (k % 64);
        }
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
    std::uint64_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = m.degree();
        for (auto e : m.exponents()) h = h * 1000003u ^ e;
        return h;
    }
};

enum class OrderKind {
    ranked_lex,         // lex over the ring ranking
    ranked_grevlex,     // graded reverse lex over the ring ranking
    elimination,        // grevlex on the first `block` variables, then grevlex on the rest
    convex_collection,  // lex over a ranking chosen so inner 2-minors form a reduced Groebner basis
};

inline std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::ranked_lex: return "lex";
        case OrderKind::ranked_grevlex: return "grevlex";
        case OrderKind::elimination: return "elimination";
        case OrderKind::convex_collection: return "convex";
    }
    return "?";
}

struct MonomialOrder {
    OrderKind kind = OrderKind::ranked_lex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::ranked_lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::ranked_grevlex, 0}; }
    static MonomialOrder eliminating(std::size_t leading_block) { return {OrderKind::elimination, leading_block}; }
    static MonomialOrder convex() { return {OrderKind::convex_collection, 0}; }

    bool is_degree_compatible() const { return kind == OrderKind::ranked_grevlex; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) throw RingMismatchError("monomials over different universes");
        switch (kind) {
            case OrderKind::ranked_lex:
            case OrderKind::convex_collection: return lex_range(a, b, 0, a.size());
            case OrderKind::ranked_grevlex: {
                if (auto c = a.degree() <=> b.degree(); c != 0) return c;
                return revlex_range(a, b, 0, a.size());
            }
            case OrderKind::elimination: {
                const std::size_t n = a.size(), k = std::min(block, n);
                if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
                return grevlex_range(a, b, k, n);
            }
        }
        return std::strong_ordering::equal;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    static std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            if (a[k] != b[k]) return a[k] <=> b[k];
        return std::strong_ordering::equal;
    }
    // Higher exponent on the lowest-ranked differing variable means smaller.
    static std::strong_ordering revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t k = hi; k > lo; --k)
            if (a[k - 1] != b[k - 1]) return b[k - 1] <=> a[k - 1];
        return std::strong_ordering::equal;
    }
    static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        if (auto c = a.degree_in(lo, hi) <=> b.degree_in(lo, hi); c != 0) return c;
        return revlex_range(a, b, lo, hi);
    }
};

/// Coefficient field, ordered variable universe, and monomial order.
template <class F>
class Ring {
public:
    Ring(F field, std::vector<Variable> vars, MonomialOrder order)
        : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (!index_.emplace(vars_[k], k).second) {
                throw PreconditionError("duplicate variable " + vars_[k].name() + " in ring");
            }
        }
        if (order_.kind == OrderKind::elimination && order_.block > vars_.size()) {
            throw PreconditionError("elimination block larger than the ring");
        }
    }

    const F& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& variable(std::size_t k) const { return vars_.at(k); }

    bool contains(const Variable& v) const { return index_.contains(v); }
    std::size_t index_of(const Variable& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw PreconditionError("variable " + v.name() + " is not in the ring");
        return it->second;
    }

    Monomial one() const { return Monomial(vars_.size()); }
    Monomial monomial_of(const Variable& v, std::uint32_t e = 1) const {
        return Monomial::variable(vars_.size(), index_of(v), e);
    }

    /// Renders like "QQ[x_(4,4), x_(4,3), ...]".
    std::string describe() const {
        std::string out = field_.name() + "[";
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (k) out += ", ";
            out += vars_[k].name();
        }
        return out + "]";
    }

    std::string render(const Monomial& m) const {
        if (m.is_one()) return "1";
        std::string out;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (!m[k]) continue;
            out += vars_[k].name();
            if (m[k] > 1) out += "^" + std::to_string(m[k]);
        }
        return out;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field_ == b.field_ && a.order_ == b.order_ && a.vars_ == b.vars_;
    }

private:
    F field_;
    std::vector<Variable> vars_;
    MonomialOrder order_;
    std::unordered_map<Variable, std::size_t, VariableHash> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<Variable> vars, MonomialOrder order) {
    return std::make_shared<const Ring<F>>(std::move(field), std::move(vars), order);
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

template <class F>
class Polynomial {
public:
    using Coeff = typename F::value_type;

    struct Term {
        Coeff coeff;
        Monomial mono;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    /// Normalizes arbitrary terms: sorts, combines duplicates, drops zeros.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        for (const Term& t : terms)
            if (t.mono.size() != p.ring_->nvars()) throw RingMismatchError("monomial outside the ring's universe");
        const auto& ord = p.ring_->order();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& x, const Term& y) { return ord.compare(x.mono, y.mono) > 0; });
        const F& K = p.ring_->field();
        for (Term& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = K.add(p.terms_.back().coeff, t.coeff);
                if (F::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!F::is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    /// Trusted constructor for terms already strictly decreasing and nonzero.
    static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    static Polynomial monomial(RingPtr<F> ring, Monomial m, Coeff c) {
        Polynomial p(std::move(ring));
        if (!F::is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }
    static Polynomial monomial(RingPtr<F> ring, Monomial m) {
        auto one = ring->field().one();
        return monomial(std::move(ring), std::move(m), std::move(one));
    }
    static Polynomial constant(RingPtr<F> ring, Coeff c) {
        auto m = ring->one();
        return monomial(std::move(ring), std::move(m), std::move(c));
    }
    static Polynomial variable(RingPtr<F> ring, const Variable& v) {
        auto m = ring->monomial_of(v);
        return monomial(std::move(ring), std::move(m));
    }

    /// x^a - x^b
    static Polynomial binomial(RingPtr<F> ring, const Monomial& plus, const Monomial& minus) {
        const F& K = ring->field();
        return from_terms(ring, {{K.one(), plus}, {K.neg(K.one()), minus}});
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& lead_term() const {
        if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
        return terms_.front();
    }
    const Monomial& lead_monomial() const { return lead_term().mono; }
    const Coeff& lead_coefficient() const { return lead_term().coeff; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    /// True when some term involves a variable of index < `block`.
    bool involves_block(std::size_t block) const {
        for (const Term& t : terms_)
            for (std::size_t k = 0; k < block && k < t.mono.size(); ++k)
                if (t.mono[k]) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        const F& K = ring_->field();
        for (Term& t : r.terms_) t.coeff = K.neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        check_same(f, g);
        const F& K = f.ring_->field();
        std::vector<Term> prod;
        prod.reserve(f.size() * g.size());
        for (const Term& s : f.terms_)
            for (const Term& t : g.terms_) prod.push_back({K.mul(s.coeff, t.coeff), s.mono * t.mono});
        return from_terms(f.ring_, std::move(prod));
    }

    /// c * m * f, which keeps the term order, so no re-sorting is needed.
    Polynomial times_term(const Coeff& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (F::is_zero(c)) return r;
        const F& K = ring_->field();
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({K.mul(c, t.coeff), t.mono * m});
        return r;
    }

    Polynomial scaled(const Coeff& c) const { return times_term(c, ring_->one()); }

    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const {
        if (is_zero() || F::is_one(lead_coefficient())) return *this;
        return scaled(ring_->field().inv(lead_coefficient()));
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
    }

    /// Text form: "x_(4,3)x_(3,2)-x_(4,2)x_(3,3)".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        const F& K = ring_->field();
        std::string out;
        for (std::size_t n = 0; n < terms_.size(); ++n) {
            const Term& t = terms_[n];
            std::string c = K.to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (negative) out += "-";
            else if (n) out += "+";
            bool unit = c == "1";
            if (!unit || t.mono.is_one()) out += c.find('/') != std::string::npos && !t.mono.is_one() ? "(" + c + ")" : c;
            if (!t.mono.is_one()) out += ring_->render(t.mono);
        }
        return out;
    }

    static void check_same(const Polynomial& f, const Polynomial& g) {
        if (!same_ring(f.ring_, g.ring_)) throw RingMismatchError("polynomials belong to different rings");
    }

private:
    static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
        check_same(f, g);
        const F& K = f.ring_->field();
        const auto& ord = f.ring_->order();
        Polynomial r(f.ring_);
        r.terms_.reserve(f.size() + g.size());
        std::size_t a = 0, b = 0;
        while (a < f.size() || b < g.size()) {
            std::strong_ordering c = a == f.size()   ? std::strong_ordering::less
                                     : b == g.size() ? std::strong_ordering::greater
                                                     : ord.compare(f.terms_[a].mono, g.terms_[b].mono);
            if (c > 0) {
                r.terms_.push_back(f.terms_[a++]);
            } else if (c < 0) {
                const Term& t = g.terms_[b++];
                r.terms_.push_back({subtract ? K.neg(t.coeff) : t.coeff, t.mono});
            } else {
                Coeff s = subtract ? K.sub(f.terms_[a].coeff, g.terms_[b].coeff)
                                   : K.add(f.terms_[a].coeff, g.terms_[b].coeff);
                if (!F::is_zero(s)) r.terms_.push_back({std::move(s), f.terms_[a].mono});
                ++a;
                ++b;
            }
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

/// Ring homomorphism given by images of every source variable (in source
/// ring order). Each image must live in `target`.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, std::span<const Polynomial<F>> images, const RingPtr<F>& target) {
    if (images.size() != f.ring()->nvars()) throw PreconditionError("substitution needs one image per variable");
    Polynomial<F> result(target);
    for (const auto& t : f.terms()) {
        Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
        for (std::size_t k = 0; k < t.mono.size(); ++k)
            for (std::uint32_t e = 0; e < t.mono[k]; ++e) term = term * images[k];
        result = result + term;
    }
    return result;
}

/// Moves a polynomial into another ring that contains all of its variables.
template <class F>
Polynomial<F> transfer(const Polynomial<F>& f, const RingPtr<F>& target) {
    if (same_ring(f.ring(), target)) return f;
    const auto& src = *f.ring();
    std::vector<std::size_t> map(src.nvars(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < src.nvars(); ++k)
        if (target->contains(src.variable(k))) map[k] = target->index_of(src.variable(k));
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t k = 0; k < src.nvars(); ++k) {
            if (!t.mono[k]) continue;
            if (map[k] == static_cast<std::size_t>(-1)) {
                throw RingMismatchError("variable " + src.variable(k).name() + " missing from target ring");
            }
            e[map[k]] = t.mono[k];
        }
        terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial<F>::from_terms(target, std::move(terms));
}

}  // namespace polyo
