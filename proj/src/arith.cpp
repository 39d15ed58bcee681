#include "plumb/arith.hpp"

#include <algorithm>
#include <sstream>

#include "plumb/errors.hpp"

namespace plumb {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long checked_ll(const Int& v) {
    if (!v.fits_slong_p()) throw InvalidArgument("integer overflow: " + v.get_str());
    return v.get_si();
}

long checked_ll(const Rat& v) {
    if (v.get_den() != 1) throw InvalidArgument("expected integer, got " + v.get_str());
    return checked_ll(Int(v.get_num()));
}

Int determinant(const IMat& m) {
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<Int> a(m.a.begin(), m.a.end());
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

std::vector<Int> leading_minors(const IMat& m) {
    // Bareiss without pivoting: the k-th pivot is the k-th leading minor.  A zero
    // pivot ends elimination; later minors are then computed directly.
    const int n = m.n;
    std::vector<Int> out;
    out.reserve(n);
    std::vector<Int> a(m.a.begin(), m.a.end());
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            for (int kk = k; kk < n; ++kk) {
                IMat sub(kk + 1);
                for (int i = 0; i <= kk; ++i)
                    for (int j = 0; j <= kk; ++j) sub(i, j) = m(i, j);
                out.push_back(determinant(sub));
            }
            return out;
        }
        out.push_back(at(k, k));
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return out;
}

QMat inverse(const IMat& m) {
    const int n = m.n;
    QMat a(n), inv(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = Rat(m(i, j));
        inv(i, i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw InvalidArgument("singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat piv = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

IVec mul(const IMat& m, const IVec& v) {
    IVec r(m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m(i, j) * v[j];
    return r;
}

QVec mul(const QMat& m, const IVec& v) {
    QVec r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

QVec mul(const QMat& m, const QVec& v) {
    QVec r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m(i, j) * v[j];
    return r;
}

long dot(const IVec& a, const IVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat quad(const QMat& m, const IVec& v) { return dot(mul(m, v), v); }
Rat quad(const QMat& m, const QVec& v) { return dot(mul(m, v), v); }

IVec add(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
IVec sub(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
IVec scale(long c, const IVec& a) {
    IVec r(a);
    for (auto& x : r) x *= c;
    return r;
}
IVec neg(const IVec& a) { return scale(-1, a); }
IVec unit(int n, int i) {
    IVec r(n, 0);
    r[i] = 1;
    return r;
}
IVec ones(int n) { return IVec(n, 1); }

// ---------------------------------------------------------------- Hermite form

ColumnHNF column_hnf(int rows, const std::vector<IVec>& gens) {
    ColumnHNF h;
    h.rows = rows;
    std::vector<std::vector<Int>> c;
    for (const auto& g : gens) c.emplace_back(g.begin(), g.end());
    const int ncols = static_cast<int>(c.size());
    int k = 0;
    for (int r = 0; r < rows && k < ncols; ++r) {
        // gcd-combine columns k..ncols-1 on row r into column k
        for (int j = k + 1; j < ncols; ++j) {
            if (c[j][r] == 0) continue;
            if (c[k][r] == 0) {
                std::swap(c[k], c[j]);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c[k][r].get_mpz_t(),
                       c[j][r].get_mpz_t());
            Int ak = c[k][r] / g, aj = c[j][r] / g;
            std::vector<Int> nk(rows), nj(rows);
            for (int i = 0; i < rows; ++i) {
                nk[i] = s * c[k][i] + t * c[j][i];
                nj[i] = -aj * c[k][i] + ak * c[j][i];
            }
            c[k] = std::move(nk);
            c[j] = std::move(nj);
        }
        if (c[k][r] == 0) continue;
        if (c[k][r] < 0)
            for (auto& x : c[k]) x = -x;
        h.pivot_row.push_back(r);
        ++k;
    }
    if (k != ncols) throw InvalidArgument("column_hnf: dependent generators");
    // reduce earlier pivot rows so the form is unique
    for (int kk = 0; kk < k; ++kk) {
        int r = h.pivot_row[kk];
        for (int j = 0; j < kk; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), c[j][r].get_mpz_t(), c[kk][r].get_mpz_t());
            if (q != 0)
                for (int i = 0; i < rows; ++i) c[j][i] -= q * c[kk][i];
        }
    }
    h.cols = k;
    h.col = std::move(c);
    return h;
}

IVec ColumnHNF::reduce(const IVec& v) const {
    std::vector<Int> w(v.begin(), v.end());
    for (int k = 0; k < cols; ++k) {
        int r = pivot_row[k];
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w[r].get_mpz_t(), col[k][r].get_mpz_t());
        if (q != 0)
            for (int i = 0; i < rows; ++i) w[i] -= q * col[k][i];
    }
    IVec out(rows);
    for (int i = 0; i < rows; ++i) out[i] = checked_ll(w[i]);
    return out;
}

bool ColumnHNF::contains(const IVec& v) const {
    IVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

std::vector<Int> smith_invariants(const IMat& m) {
    const int n = m.n;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::vector<Int> d;
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry in the trailing block becomes the pivot
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                for (int r = t; r < n; ++r) d.push_back(0);
                return d;
            }
            std::swap(a[t], a[pi]);
            for (int i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                Int q = a[i][t] / a[t][t];
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = a[t][j] / a[t][t];
                for (int i = t; i < n; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition
            int bad_i = -1;
            for (int i = t + 1; i < n && bad_i < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad_i = i;
                        break;
                    }
            if (bad_i < 0) break;
            for (int j = t; j < n; ++j) a[t][j] += a[bad_i][j];
        }
        d.push_back(abs(a[t][t]));
    }
    return d;
}

// ---------------------------------------------------------------- formatting

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t += ch;
    // accept the unicode minus produced by some editors
    std::string u;
    for (size_t i = 0; i < t.size(); ++i) {
        if (static_cast<unsigned char>(t[i]) == 0xE2 && i + 2 < t.size() &&
            static_cast<unsigned char>(t[i + 1]) == 0x88 &&
            static_cast<unsigned char>(t[i + 2]) == 0x92) {
            u += '-';
            i += 2;
        } else {
            u += t[i];
        }
    }
    if (u.empty() || r.set_str(u, 10) != 0) throw SchemaError("bad rational '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw SchemaError("zero denominator in '" + s + "'");
    return r;
}

Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}
Int ceil_int(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}
Rat floor_rat(const Rat& r) { return Rat(floor_int(r)); }
bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace plumb
