#pragma once

#include <optional>
#include <vector>

#include "dunkl/cyclotomic.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Dense rational matrix, row major.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static QMat identity(int n);
    QMat transposed() const;
    bool operator==(const QMat& o) const = default;
};

QMat mat_mul(const QMat& a, const QMat& b);
std::vector<Rational> mat_vec(const QMat& a, const std::vector<Rational>& v);

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
int rank(const QMat& m);
inline int corank(const QMat& m) { return m.cols - rank(m); }

// Rank over Q(eta) by straightforward Gaussian elimination.
int rank(std::vector<std::vector<CycNumber>> m);

// Basis of the right kernel {v : Mv = 0}.
std::vector<std::vector<Rational>> kernel_basis(const QMat& m);

// One solution of Mx = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const QMat& m, const std::vector<Rational>& b);

bool invertible(const QMat& m);
QMat inverse(const QMat& m); // throws SingularParameter(-1) if singular

Rational determinant(QMat m);

} // namespace dunkl
