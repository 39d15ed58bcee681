#pragma once

// Exact Laurent polynomials in q^(1/*), t^(1/*), z^(1/*) with rational
// coefficients, and weights of the form X^e * P with X = t^(-1/2) z - t^(1/2) z^(-1).

#include <array>
#include <map>
#include <optional>
#include <string>

#include "plumb/arith.hpp"

namespace plumb {

struct Mono {
    Rat q, t, z;
    bool operator<(const Mono& o) const {
        if (q != o.q) return q < o.q;
        if (t != o.t) return t < o.t;
        return z < o.z;
    }
    bool operator==(const Mono& o) const { return q == o.q && t == o.t && z == o.z; }
};

class LaurentQTZ {
public:
    LaurentQTZ() = default;
    static LaurentQTZ constant(const Rat& c);
    static LaurentQTZ monomial(const Rat& c, const Rat& q, const Rat& t, const Rat& z);
    static LaurentQTZ X();  // t^(-1/2) z - t^(1/2) z^(-1)

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Rat coeff(const Rat& q, const Rat& t, const Rat& z) const;
    void add_term(const Rat& c, const Mono& m);

    LaurentQTZ& operator+=(const LaurentQTZ& o);
    LaurentQTZ& operator-=(const LaurentQTZ& o);
    LaurentQTZ operator+(const LaurentQTZ& o) const;
    LaurentQTZ operator-(const LaurentQTZ& o) const;
    LaurentQTZ operator-() const;
    LaurentQTZ operator*(const LaurentQTZ& o) const;
    LaurentQTZ operator*(const Rat& c) const;
    bool operator==(const LaurentQTZ& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentQTZ& o) const { return !(*this == o); }

    LaurentQTZ shift(const Rat& q, const Rat& t, const Rat& z) const;  // times q^a t^b z^c
    LaurentQTZ pow(int n) const;                                       // n >= 0
    LaurentQTZ invert_t() const;                                        // t -> t^-1
    LaurentQTZ invert_z() const;                                        // z -> z^-1
    LaurentQTZ at_t1() const;
    LaurentQTZ at_z1() const;
    LaurentQTZ at_q1() const;
    LaurentQTZ truncate_q(const Rat& max_q) const;  // keep q-exponents <= max_q
    // coefficient of z^c as a polynomial in q, t
    LaurentQTZ z_coefficient(const Rat& c) const;
    Rat min_q() const;  // requires nonzero

    std::string to_string() const;

private:
    std::map<Mono, Rat> terms_;
};

// X^e * P.  Equality is as elements of the fraction field.
class KnotWeight {
public:
    KnotWeight() = default;
    KnotWeight(long e, LaurentQTZ p) : e_(e), p_(std::move(p)) {}

    long e() const { return e_; }
    const LaurentQTZ& P() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    // representative with P not divisible by X (or P = 0 with e = 0)
    KnotWeight canonical() const;
    KnotWeight mul_X(long n) const { return {e_ + n, p_}; }

    KnotWeight operator+(const KnotWeight& o) const;
    KnotWeight operator-(const KnotWeight& o) const;
    KnotWeight operator*(const KnotWeight& o) const;
    KnotWeight operator*(const Rat& c) const { return {e_, p_ * c}; }
    KnotWeight& operator+=(const KnotWeight& o) { return *this = *this + o; }
    bool operator==(const KnotWeight& o) const;
    bool operator!=(const KnotWeight& o) const { return !(*this == o); }

    // t -> t^-1 and z -> z^-1 together (X -> -X)
    KnotWeight invert_tz() const;
    // canonical form, then t = 1 in P (X printed as z - z^-1)
    KnotWeight at_t1() const;
    KnotWeight at_q1() const { return {e_, p_.at_q1()}; }
    KnotWeight truncate_q(const Rat& max_q) const { return {e_, p_.truncate_q(max_q)}; }

    std::string to_string() const;

private:
    long e_ = 0;
    LaurentQTZ p_;
};

// P / X if X divides P
std::optional<LaurentQTZ> divide_by_X(const LaurentQTZ& p);

}  // namespace plumb
