#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "homrine/errors.hpp"

namespace homrine {

/// Arbitrary-precision rational. Always kept in lowest terms with a positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Residue field Z/pZ for a prime p.
///
/// The modulus is process-wide (thread-local) state set through FpScope; a
/// single run works over exactly one prime field, which matches the one
/// field-block-per-file input model. Elements store the canonical residue in
/// [0, p).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(std::int64_t x) : v_(reduce(x)) {}  // NOLINT: implicit by design, mirrors Rational(int)

    static std::int64_t modulus() {
        if (modulus_ == 0) throw Error("prime field used with no modulus configured");
        return modulus_;
    }
    static bool has_modulus() { return modulus_ != 0; }

    std::int64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw(add(a.v_, b.v_)); }
    friend Fp operator-(Fp a, Fp b) { return from_raw(sub(a.v_, b.v_)); }
    friend Fp operator*(Fp a, Fp b) { return from_raw(mul(a.v_, b.v_)); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }

    Fp& operator+=(Fp o) { v_ = add(v_, o.v_); return *this; }
    Fp& operator-=(Fp o) { v_ = sub(v_, o.v_); return *this; }
    Fp& operator*=(Fp o) { v_ = mul(v_, o.v_); return *this; }
    Fp& operator/=(Fp o) { *this = *this / o; return *this; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
    /// Order by canonical residue; used only for deterministic sorting.
    friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw SingularError("inverse of 0 in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1, r = modulus(), new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (r != 1) throw SingularError("non-invertible residue (modulus not prime?)");
        return Fp(t);
    }

private:
    friend class FpScope;
    static Fp from_raw(std::int64_t v) { Fp f; f.v_ = v; return f; }
    static std::int64_t reduce(std::int64_t x) {
        std::int64_t p = modulus();
        std::int64_t r = x % p;
        return r < 0 ? r + p : r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) { return (a + b) % modulus(); }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r = (a - b) % modulus();
        return r < 0 ? r + modulus() : r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % modulus());
    }

    static thread_local std::int64_t modulus_;
    std::int64_t v_;
};

inline thread_local std::int64_t Fp::modulus_ = 0;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// RAII guard configuring the prime modulus for Fp within a scope.
class FpScope {
public:
    explicit FpScope(std::int64_t p) : saved_(Fp::modulus_) {
        if (!is_prime(p)) throw ParseError("field modulus " + std::to_string(p) + " is not prime");
        Fp::modulus_ = p;
    }
    ~FpScope() { Fp::modulus_ = saved_; }
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

private:
    std::int64_t saved_;
};

// ---------------------------------------------------------------------------
// Parsing and formatting. Scalars travel as exact "p" or "p/q" decimal strings.
// ---------------------------------------------------------------------------

namespace detail {

inline bool parse_integer_token(const std::string& s, std::size_t& pos, std::string& out) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == digits_start) return false;
    out = s.substr(start, pos - start);
    return true;
}

// Splits "p" or "p/q" into exact integer tokens; rejects anything else.
inline void split_fraction(const std::string& s, std::string& num, std::string& den) {
    std::size_t pos = 0;
    if (!parse_integer_token(s, pos, num)) throw ParseError("bad scalar '" + s + "'");
    den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("bad scalar '" + s + "'");
        ++pos;
        if (!parse_integer_token(s, pos, den) || pos != s.size())
            throw ParseError("bad scalar '" + s + "'");
    }
}

}  // namespace detail

inline Rational parse_rational(const std::string& s) {
    std::string num, den;
    detail::split_fraction(s, num, den);
    BigInt n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    if (d < 0) { n = -n; d = -d; }
    return Rational(n, d);
}

inline Fp parse_fp(const std::string& s) {
    std::string num, den;
    detail::split_fraction(s, num, den);
    BigInt p(Fp::modulus());
    BigInt n = BigInt(num) % p, d = BigInt(den) % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw ParseError("denominator of '" + s + "' vanishes mod " + p.str());
    return Fp(static_cast<std::int64_t>(n)) / Fp(static_cast<std::int64_t>(d));
}

template <class K>
K parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) { return parse_rational(s); }
template <>
inline Fp parse_scalar<Fp>(const std::string& s) { return parse_fp(s); }

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

template <class K>
bool is_zero(const K& x) { return x == K(0); }

template <class K>
const char* field_kind();
template <>
inline const char* field_kind<Rational>() { return "rational"; }
template <>
inline const char* field_kind<Fp>() { return "prime"; }

// ---------------------------------------------------------------------------
// Roots of a monic polynomial that lie in the base field.
//
// Rational case: clear denominators and enumerate numerator/denominator
// divisor candidates per the rational root theorem. Prime field case:
// exhaustive residue scan.
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
K eval_poly(const std::vector<K>& coeffs, const K& x) {
    K acc(0);
    for (const K& c : coeffs) acc = acc * x + c;
    return acc;
}

/// All positive divisors of |n| (n != 0), via trial division.
inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Distinct roots in Q of a polynomial with rational coefficients
/// (leading coefficient first).
inline std::vector<Rational> field_roots(std::vector<Rational> coeffs) {
    std::vector<Rational> roots;
    while (!coeffs.empty() && coeffs.front() == 0) coeffs.erase(coeffs.begin());
    if (coeffs.size() <= 1) return roots;
    // zero roots: deflate trailing zero coefficients
    bool zero_root = false;
    while (coeffs.size() > 1 && coeffs.back() == 0) {
        zero_root = true;
        coeffs.pop_back();
    }
    if (zero_root) roots.emplace_back(0);
    if (coeffs.size() <= 1) return roots;

    BigInt lcm = 1;
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<BigInt> ic;
    ic.reserve(coeffs.size());
    for (const auto& c : coeffs) ic.push_back(numerator(c) * (lcm / denominator(c)));

    const auto ps = detail::positive_divisors(ic.back());
    const auto qs = detail::positive_divisors(ic.front());
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (detail::eval_poly(coeffs, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Distinct roots in F_p, by scanning every residue.
inline std::vector<Fp> field_roots(std::vector<Fp> coeffs) {
    std::vector<Fp> roots;
    while (!coeffs.empty() && coeffs.front() == Fp(0)) coeffs.erase(coeffs.begin());
    if (coeffs.size() <= 1) return roots;
    for (std::int64_t r = 0; r < Fp::modulus(); ++r) {
        Fp x(r);
        if (detail::eval_poly(coeffs, x) == Fp(0)) roots.push_back(x);
    }
    return roots;
}

}  // namespace homrine
