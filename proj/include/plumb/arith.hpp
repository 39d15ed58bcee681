#pragma once

// Exact integer / rational linear algebra used throughout.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace plumb {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<long>;
using QVec = std::vector<Rat>;

struct IMat {
    int n = 0;
    std::vector<long> a;

    IMat() = default;
    explicit IMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
    long& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
};

struct QMat {
    int n = 0;
    std::vector<Rat> a;

    QMat() = default;
    explicit QMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
    Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

long floor_div(long a, long b);
long checked_ll(const Int& v);
long checked_ll(const Rat& v);  // requires an integer value

Int determinant(const IMat& m);
// k-th leading principal minors, k = 1..n (Bareiss, exact)
std::vector<Int> leading_minors(const IMat& m);
QMat inverse(const IMat& m);  // throws InvalidArgument if singular

IVec mul(const IMat& m, const IVec& v);
QVec mul(const QMat& m, const IVec& v);
QVec mul(const QMat& m, const QVec& v);
long dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat quad(const QMat& m, const IVec& v);  // v^T m v
Rat quad(const QMat& m, const QVec& v);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(long c, const IVec& a);
IVec neg(const IVec& a);
IVec unit(int n, int i);
IVec ones(int n);

// Column Hermite form of the lattice spanned by the columns of an integer
// rows x cols matrix with independent columns.  Column k has zeros above
// pivot_row[k] and a positive pivot there.
struct ColumnHNF {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> col;  // col[k][r]
    std::vector<int> pivot_row;

    // unique representative of v modulo the lattice: 0 <= v[pivot_row[k]] < pivot
    IVec reduce(const IVec& v) const;
    bool contains(const IVec& v) const;  // v in lattice
};

// generators given as columns: gens[k] is a vector of length rows
ColumnHNF column_hnf(int rows, const std::vector<IVec>& gens);

// Smith invariant factors (diagonal, including 1s) of a square integer matrix
std::vector<Int> smith_invariants(const IMat& m);

std::string to_string(const Rat& r);
std::string to_string(const IVec& v);
Rat parse_rat(const std::string& s);

Rat floor_rat(const Rat& r);  // as rational integer
Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);
bool is_integer(const Rat& r);
Rat frac(long num, long den);  // canonicalized num/den

}  // namespace plumb
