/**
 * @file hilbert.hpp
 * @brief Hilbert series of S/I through the initial ideal of I.
 */
#pragma once

#include "polyo/error.hpp"
#include "polyo/groebner.hpp"
#include "polyo/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polyo {

/// Integer polynomial in T, coefficient k at index k, no trailing zeros.
/// Arithmetic is overflow-checked.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }
    static IntPoly constant(std::int64_t a) { return IntPoly({a}); }
    /// 1 - T^d
    static IntPoly one_minus_power(std::size_t d) {
        std::vector<std::int64_t> c(d + 1, 0);
        c[0] += 1;
        c[d] -= 1;
        return IntPoly(std::move(c));
    }

    const std::vector<std::int64_t>& coefficients() const { return c_; }
    std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

    std::int64_t at_one() const {
        std::int64_t s = 0;
        for (auto a : c_) s = checked_add(s, a);
        return s;
    }

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g) {
        std::vector<std::int64_t> c(std::max(f.c_.size(), g.c_.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked_add(f[k], g[k]);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<std::int64_t> c(f.c_.size() + g.c_.size() - 1, 0);
        for (std::size_t a = 0; a < f.c_.size(); ++a)
            for (std::size_t b = 0; b < g.c_.size(); ++b) c[a + b] = checked_add(c[a + b], checked_mul(f.c_[a], g.c_[b]));
        return IntPoly(std::move(c));
    }
    /// T^k * f
    IntPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<std::int64_t> c(k, 0);
        c.insert(c.end(), c_.begin(), c_.end());
        return IntPoly(std::move(c));
    }
    /// Exact quotient by (1 - T); requires at_one() == 0.
    IntPoly divided_by_one_minus_t() const {
        if (at_one() != 0) throw InternalError("polynomial is not divisible by 1 - T");
        std::vector<std::int64_t> q;
        std::int64_t run = 0;
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
            run = checked_add(run, c_[k]);
            q.push_back(run);
        }
        return IntPoly(std::move(q));
    }

    /// "1 + 12T + 50T^2"
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            std::int64_t a = c_[k];
            if (a == 0) continue;
            std::uint64_t mag = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
            if (out.empty()) out += a < 0 ? "-" : "";
            else out += a < 0 ? " - " : " + ";
            if (mag != 1 || k == 0) out += std::to_string(mag);
            if (k >= 1) out += "T";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("Hilbert numerator coefficient overflow");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("Hilbert numerator coefficient overflow");
        return r;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<std::int64_t> c_;
};

namespace detail {

// Drops generators divisible by another one; result sorted by exponents.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                            b.exponents().end());
    });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(m));
    }
    return out;
}

class NumeratorRecursion {
public:
    explicit NumeratorRecursion(const ComputeLimits& limits) : limits_(limits) {}

    IntPoly run(std::vector<Monomial> gens) {
        gens = minimalize(std::move(gens));
        if (gens.empty()) return IntPoly::constant(1);
        if (gens.front().is_one()) return {};

        std::vector<std::vector<std::uint32_t>> key;
        for (const auto& m : gens) key.emplace_back(m.exponents().begin(), m.exponents().end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if ((calls_++ & 1023) == 0) limits_.check();

        IntPoly result;
        bool coprime = true;
        for (std::size_t a = 0; a < gens.size() && coprime; ++a)
            for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) coprime = gens[a].coprime(gens[b]);
        if (coprime) {
            result = IntPoly::constant(1);
            for (const auto& m : gens) result = result * IntPoly::one_minus_power(m.degree());
        } else {
            // Most frequent variable among non-linear generators, ties to the
            // highest-ranked (lowest index).
            const std::size_t n = gens.front().size();
            std::vector<std::size_t> freq(n, 0);
            for (const auto& m : gens) {
                if (m.degree() < 2) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (m[k]) ++freq[k];
            }
            std::size_t x = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());

            // N(M) = N(M + <x>) + T * N(M : x)
            Monomial var = Monomial::variable(n, x);
            std::vector<Monomial> plus{var}, colon;
            for (const auto& m : gens) {
                if (!m[x]) plus.push_back(m);
                colon.push_back(m[x] ? m.divided_by(var) : m);
            }
            result = run(std::move(plus)) + run(std::move(colon)).shifted(1);
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    const ComputeLimits& limits_;
    std::map<std::vector<std::vector<std::uint32_t>>, IntPoly> memo_;
    std::size_t calls_ = 0;
};

}  // namespace detail

/// Numerator N(T) with HS(S/M) = N(T) / (1 - T)^nvars, where M is generated
/// by `gens` (each of size nvars).
inline IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars, const ComputeLimits& limits = {}) {
    for (const auto& m : gens)
        if (m.size() != nvars) throw PreconditionError("monomial generator outside the ring");
    return detail::NumeratorRecursion(limits).run(gens);
}

struct HilbertSeries {
    IntPoly numerator;
    std::size_t denominator_exponent = 0;

    /// Coefficients of the power series up to T^degree.
    std::vector<std::int64_t> expand(std::size_t degree) const {
        std::vector<std::int64_t> s(degree + 1, 0);
        for (std::size_t k = 0; k <= degree; ++k) s[k] = numerator[k];
        for (std::size_t d = 0; d < denominator_exponent; ++d)
            for (std::size_t k = 1; k <= degree; ++k) s[k] += s[k - 1];  // multiply by 1/(1-T)
        return s;
    }

    std::string to_string() const {
        return "(" + numerator.to_string() + ")/(1 - T)^" + std::to_string(denominator_exponent);
    }

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Cancels (1 - T) factors from N(T)/(1 - T)^d until N(1) != 0 or d = 0.
inline HilbertSeries reduce_series(IntPoly numerator, std::size_t d) {
    while (d > 0 && !numerator.is_zero() && numerator.at_one() == 0) {
        numerator = numerator.divided_by_one_minus_t();
        --d;
    }
    return {std::move(numerator), d};
}

/// Reduced Hilbert series of S/I for homogeneous I.
template <class F>
HilbertSeries reduced_hilbert_series(const IdealHandle<F>& I, const ComputeLimits& limits = {}) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) throw PreconditionError("Hilbert series needs a homogeneous ideal");
    auto lead = initial_ideal(I, limits);
    const std::size_t n = I.ring()->nvars();
    return reduce_series(hilbert_numerator(lead, n, limits), n);
}

}  // namespace polyo
