#include "dunkl/linalg.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transposed() const {
    QMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    if (a.cols != b.rows) throw HypothesisViolation("mat_mul: shape mismatch");
    QMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

std::vector<Rational> mat_vec(const QMat& a, const std::vector<Rational>& v) {
    if (a.cols != static_cast<int>(v.size())) throw HypothesisViolation("mat_vec: shape mismatch");
    std::vector<Rational> out(a.rows, Rational(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

int rank(const QMat& m) {
    // Clear denominators row by row, then run Bareiss.
    std::vector<std::vector<Integer>> z(m.rows, std::vector<Integer>(m.cols));
    for (int r = 0; r < m.rows; ++r) {
        Integer l = 1;
        for (int c = 0; c < m.cols; ++c) l = lcm(l, m.at(r, c).get_den());
        for (int c = 0; c < m.cols; ++c) {
            Rational v = m.at(r, c) * Rational(l);
            z[r][c] = v.get_num();
        }
    }
    int rk = 0;
    Integer prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (z[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(z[piv], z[row]);
        for (int r = row + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                z[r][c] = (z[row][col] * z[r][c] - z[r][col] * z[row][c]) / prev;
            z[r][col] = 0;
        }
        prev = z[row][col];
        ++row;
        ++rk;
    }
    return rk;
}

int rank(std::vector<std::vector<CycNumber>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rk]);
        CycNumber inv = m[rk][col].inverse();
        for (int c = col; c < cols; ++c) m[rk][c] = m[rk][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rk || m[r][col].is_zero()) continue;
            CycNumber f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[rk][c];
        }
        ++rk;
    }
    return rk;
}

namespace {

// Gauss-Jordan over Q; returns pivot column per row (-1 free rows removed).
std::vector<int> rref_inplace(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int freec = 0; freec < m.cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[freec] = 1;
        for (std::size_t prow = 0; prow < pivots.size(); ++prow)
            v[pivots[prow]] = -r.at(static_cast<int>(prow), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMat& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw HypothesisViolation("solve: shape mismatch");
    QMat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = rref_inplace(aug);
    for (int c : pivots)
        if (c == m.cols) return std::nullopt; // inconsistent
    std::vector<Rational> x(m.cols, Rational(0));
    for (std::size_t prow = 0; prow < pivots.size(); ++prow)
        x[pivots[prow]] = aug.at(static_cast<int>(prow), m.cols);
    return x;
}

bool invertible(const QMat& m) { return m.rows == m.cols && rank(m) == m.rows; }

QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw HypothesisViolation("inverse: matrix not square");
    QMat aug(m.rows, 2 * m.cols);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols + r) = 1;
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != m.rows || pivots.back() >= m.cols)
        throw SingularParameter(-1);
    QMat out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = aug.at(r, m.cols + c);
    return out;
}

Rational determinant(QMat m) {
    if (m.rows != m.cols) throw HypothesisViolation("determinant: matrix not square");
    Rational det = 1;
    for (int col = 0; col < m.cols; ++col) {
        int piv = -1;
        for (int r = col; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) * inv;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

} // namespace dunkl
