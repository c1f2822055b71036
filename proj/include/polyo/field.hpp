/**
 * @file field.hpp
 * @brief Coefficient fields: exact rationals (GMP) and prime fields F_p.
 *
 * A field object carries whatever runtime data it needs (the prime) and
 * performs all arithmetic; values are plain data.
 */
#pragma once

#include "polyo/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>

namespace polyo {

class RationalField {
public:
    using value_type = mpq_class;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long n) const { return value_type(n); }

    static bool is_zero(const value_type& x) { return sgn(x) == 0; }
    static bool is_one(const value_type& x) { return x == 1; }

    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type inv(const value_type& x) const {
        if (is_zero(x)) throw InternalError("division by zero in QQ");
        return 1 / x;
    }
    value_type div(const value_type& x, const value_type& y) const { return mul(x, inv(y)); }

    /// Canonical text: reduced numerator/denominator, denominator omitted when 1.
    static std::string to_string(const value_type& x) { return x.get_str(); }

    std::string name() const { return "QQ"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

namespace detail {

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// Z/pZ for a prime p < 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;

    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p >= (1u << 31) || !detail::is_prime(p)) {
            throw PreconditionError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
        }
    }

    std::uint32_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long n) const {
        long r = n % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    static bool is_zero(value_type x) { return x == 0; }
    static bool is_one(value_type x) { return x == 1; }

    value_type add(value_type x, value_type y) const {
        std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type x, value_type y) const { return x >= y ? x - y : x + p_ - y; }
    value_type mul(value_type x, value_type y) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(x) * y % p_);
    }
    value_type neg(value_type x) const { return x == 0 ? 0 : p_ - x; }
    value_type inv(value_type x) const {
        if (x == 0) throw InternalError("division by zero in F_p");
        // Fermat: x^(p-2)
        std::uint64_t result = 1, base = x, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    value_type div(value_type x, value_type y) const { return mul(x, inv(y)); }

    /// Symmetric representative, so -1 prints as "-1".
    std::string to_string(value_type x) const {
        if (x > p_ / 2) return "-" + std::to_string(p_ - x);
        return std::to_string(x);
    }

    std::string name() const { return "ZZ/" + std::to_string(p_); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// Runtime description of a field, as selected on the command line.
struct FieldSpec {
    enum class Kind { rational, prime } kind = Kind::rational;
    std::uint32_t prime = PrimeField::kDefaultPrime;

    static FieldSpec rational() { return {}; }
    static FieldSpec prime_field(std::uint32_t p = PrimeField::kDefaultPrime) { return {Kind::prime, p}; }

    /// Accepts "qq", "QQ", "fp", "fp:<prime>", "zz/<prime>".
    static FieldSpec parse(const std::string& text) {
        std::string t;
        for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (t == "qq" || t == "q" || t.empty()) return rational();
        std::string digits;
        if (t == "fp") return prime_field();
        if (t.rfind("fp:", 0) == 0) digits = t.substr(3);
        else if (t.rfind("zz/", 0) == 0) digits = t.substr(3);
        else throw ParseError("unknown field '" + text + "' (expected qq or fp:<prime>)");
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
            throw ParseError("invalid prime in field '" + text + "'");
        }
        std::uint64_t p = std::stoull(digits);
        if (p >= (1u << 31) || !detail::is_prime(p)) {
            throw ParseError("field characteristic " + digits + " is not a prime below 2^31");
        }
        return prime_field(static_cast<std::uint32_t>(p));
    }

    std::string to_string() const { return kind == Kind::rational ? "qq" : "fp:" + std::to_string(prime); }
};

/// Calls `f` with a concrete field object for the spec.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
    if (spec.kind == FieldSpec::Kind::rational) return f(RationalField{});
    return f(PrimeField{spec.prime});
}

}  // namespace polyo
