#include "plumb/laurent.hpp"

#include <optional>
#include <sstream>

#include "plumb/errors.hpp"

namespace plumb {

LaurentQTZ LaurentQTZ::constant(const Rat& c) { return monomial(c, 0, 0, 0); }

LaurentQTZ LaurentQTZ::monomial(const Rat& c, const Rat& q, const Rat& t, const Rat& z) {
    LaurentQTZ p;
    p.add_term(c, {q, t, z});
    return p;
}

LaurentQTZ LaurentQTZ::X() {
    return monomial(1, 0, Rat(-1, 2), 1) + monomial(-1, 0, Rat(1, 2), -1);
}

Rat LaurentQTZ::coeff(const Rat& q, const Rat& t, const Rat& z) const {
    auto it = terms_.find({q, t, z});
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentQTZ::add_term(const Rat& c, const Mono& m) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentQTZ& LaurentQTZ::operator+=(const LaurentQTZ& o) {
    for (auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

LaurentQTZ& LaurentQTZ::operator-=(const LaurentQTZ& o) {
    for (auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

LaurentQTZ LaurentQTZ::operator+(const LaurentQTZ& o) const {
    LaurentQTZ r = *this;
    return r += o;
}

LaurentQTZ LaurentQTZ::operator-(const LaurentQTZ& o) const {
    LaurentQTZ r = *this;
    return r -= o;
}

LaurentQTZ LaurentQTZ::operator-() const { return *this * Rat(-1); }

LaurentQTZ LaurentQTZ::operator*(const LaurentQTZ& o) const {
    LaurentQTZ r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, {m1.q + m2.q, m1.t + m2.t, m1.z + m2.z});
    return r;
}

LaurentQTZ LaurentQTZ::operator*(const Rat& c) const {
    LaurentQTZ r;
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

LaurentQTZ LaurentQTZ::shift(const Rat& q, const Rat& t, const Rat& z) const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.terms_.emplace(Mono{m.q + q, m.t + t, m.z + z}, c);
    return r;
}

LaurentQTZ LaurentQTZ::pow(int n) const {
    if (n < 0) throw InvalidArgument("negative power of a Laurent polynomial");
    LaurentQTZ r = constant(1), b = *this;
    for (; n; n >>= 1) {
        if (n & 1) r = r * b;
        if (n > 1) b = b * b;
    }
    return r;
}

LaurentQTZ LaurentQTZ::invert_t() const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.add_term(c, {m.q, -m.t, m.z});
    return r;
}

LaurentQTZ LaurentQTZ::invert_z() const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.add_term(c, {m.q, m.t, -m.z});
    return r;
}

LaurentQTZ LaurentQTZ::at_t1() const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.add_term(c, {m.q, 0, m.z});
    return r;
}

LaurentQTZ LaurentQTZ::at_z1() const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.add_term(c, {m.q, m.t, 0});
    return r;
}

LaurentQTZ LaurentQTZ::at_q1() const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_) r.add_term(c, {0, m.t, m.z});
    return r;
}

LaurentQTZ LaurentQTZ::truncate_q(const Rat& max_q) const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_)
        if (m.q <= max_q) r.terms_.emplace(m, c);
    return r;
}

LaurentQTZ LaurentQTZ::z_coefficient(const Rat& zc) const {
    LaurentQTZ r;
    for (auto& [m, c] : terms_)
        if (m.z == zc) r.add_term(c, {m.q, m.t, 0});
    return r;
}

Rat LaurentQTZ::min_q() const {
    if (terms_.empty()) throw InvalidArgument("min_q of zero");
    return terms_.begin()->first.q;
}

namespace {

std::string power(const char* var, const Rat& e) {
    if (e == 0) return "";
    std::string s = var;
    if (e == 1) return s;
    if (is_integer(e)) return s + "^" + e.get_str();
    return s + "^(" + e.get_str() + ")";
}

}  // namespace

std::string LaurentQTZ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string mono;
        for (auto p : {power("q", m.q), power("t", m.t), power("z", m.z)})
            if (!p.empty()) mono += (mono.empty() ? "" : "*") + p;
        Rat a = abs(c);
        bool negc = c < 0;
        if (first)
            os << (negc ? "-" : "");
        else
            os << (negc ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- KnotWeight

std::optional<LaurentQTZ> divide_by_X(const LaurentQTZ& p) {
    // X = t^(-1/2) z (1 - y), y = t z^-2.  Group monomials along the y direction.
    struct Key {
        Rat q, t, z;
        bool operator<(const Key& o) const {
            if (q != o.q) return q < o.q;
            if (t != o.t) return t < o.t;
            return z < o.z;
        }
    };
    std::map<Key, std::map<long, Rat>> cls;
    for (auto& [m, c] : p.terms()) {
        Int f = floor_int(m.z / 2);
        long j = -checked_ll(f);
        // monomial = key * y^j
        Key k{m.q, m.t - j, m.z + 2 * j};
        cls[k][j] += c;
    }
    LaurentQTZ quo;
    for (auto& [k, poly] : cls) {
        Rat run = 0;
        for (auto& [j, c] : poly) {
            (void)j;
            run += c;
        }
        if (run != 0) return std::nullopt;
        // q_j = sum_{i <= j} p_i, nonzero only on [min j, max j)
        long lo = poly.begin()->first, hi = poly.rbegin()->first;
        Rat acc = 0;
        for (long j = lo; j < hi; ++j) {
            auto it = poly.find(j);
            if (it != poly.end()) acc += it->second;
            if (acc != 0) quo.add_term(acc, {k.q, k.t + j, k.z - 2 * j});
        }
    }
    return quo.shift(0, Rat(1, 2), -1);
}

KnotWeight KnotWeight::canonical() const {
    if (p_.is_zero()) return {0, {}};
    KnotWeight r = *this;
    for (;;) {
        auto d = divide_by_X(r.p_);
        if (!d) return r;
        r.p_ = std::move(*d);
        ++r.e_;
    }
}

namespace {

LaurentQTZ times_X_pow(const LaurentQTZ& p, long n) { return n == 0 ? p : p * LaurentQTZ::X().pow(static_cast<int>(n)); }

}  // namespace

KnotWeight KnotWeight::operator+(const KnotWeight& o) const {
    if (p_.is_zero()) return o;
    if (o.p_.is_zero()) return *this;
    long m = std::min(e_, o.e_);
    return KnotWeight(m, times_X_pow(p_, e_ - m) + times_X_pow(o.p_, o.e_ - m)).canonical();
}

KnotWeight KnotWeight::operator-(const KnotWeight& o) const { return *this + o * Rat(-1); }

KnotWeight KnotWeight::operator*(const KnotWeight& o) const { return KnotWeight(e_ + o.e_, p_ * o.p_).canonical(); }

bool KnotWeight::operator==(const KnotWeight& o) const {
    if (p_.is_zero() || o.p_.is_zero()) return p_.is_zero() && o.p_.is_zero();
    long m = std::min(e_, o.e_);
    return times_X_pow(p_, e_ - m) == times_X_pow(o.p_, o.e_ - m);
}

KnotWeight KnotWeight::invert_tz() const {
    LaurentQTZ p = p_.invert_t().invert_z();
    if (e_ % 2 != 0) p = -p;
    return {e_, p};
}

KnotWeight KnotWeight::at_t1() const {
    KnotWeight c = canonical();
    return {c.e_, c.p_.at_t1()};
}

std::string KnotWeight::to_string() const {
    if (p_.is_zero()) return "0";
    if (e_ == 0) return p_.to_string();
    return "X^" + std::to_string(e_) + "*(" + p_.to_string() + ")";
}

}  // namespace plumb
