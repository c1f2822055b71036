// Small rings and random polynomials for the algebra tests.
#pragma once

#include "polyo/polynomial.hpp"

#include <random>
#include <vector>

namespace testdata {

using namespace polyo;

// Auxiliary variables t_0..t_{n-1}, handy for rings not tied to a collection.
inline std::vector<Variable> tvars(std::size_t n) {
    std::vector<Variable> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(Variable::aux(Variable::Kind::t, static_cast<std::int64_t>(k)));
    return v;
}

template <class F>
RingPtr<F> small_ring(F field, std::size_t n, MonomialOrder order) {
    return make_ring(std::move(field), tvars(n), order);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    std::vector<std::uint32_t> ex(n);
    for (auto& x : ex) x = e(rng);
    return Monomial(std::move(ex));
}

template <class F>
Polynomial<F> random_poly(std::mt19937_64& rng, const RingPtr<F>& ring, std::size_t max_terms, std::uint32_t max_exp = 2) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::vector<typename Polynomial<F>::Term> t;
    for (std::size_t k = count(rng); k > 0; --k)
        t.push_back({ring->field().from_int(coeff(rng)), random_monomial(rng, ring->nvars(), max_exp)});
    return Polynomial<F>::from_terms(ring, std::move(t));
}

// Homogeneous of the given degree.
template <class F>
Polynomial<F> random_homogeneous(std::mt19937_64& rng, const RingPtr<F>& ring, std::size_t terms, std::uint32_t degree) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    std::vector<typename Polynomial<F>::Term> t;
    for (std::size_t k = 0; k < terms; ++k) {
        std::vector<std::uint32_t> ex(ring->nvars(), 0);
        for (std::uint32_t d = 0; d < degree; ++d) ++ex[var(rng)];
        t.push_back({ring->field().from_int(coeff(rng)), Monomial(std::move(ex))});
    }
    return Polynomial<F>::from_terms(ring, std::move(t));
}

// Every exponent vector in n variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t k, std::uint32_t left) -> void {
        if (k + 1 == n) {
            e[k] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t x = 0; x <= left; ++x) {
            e[k] = x;
            self(self, k + 1, left - x);
        }
    };
    if (n == 0) {
        if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t k = 0; k <= d; ++k) {
        auto m = monomials_of_degree(n, k);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

}  // namespace testdata
