#include "preriesz/linalg.hpp"

#include <algorithm>

namespace preriesz {

namespace {

struct Echelon {
    QMatrix m;                       // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan with deterministic pivoting: scan columns left to right, pick
// the first row with a nonzero entry.  Exact division keeps everything tight.
Echelon rref(QMatrix m) {
    Echelon e;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t found = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r) {
            if (m.at(r, c) != 0) { found = r; break; }
        }
        if (found == m.rows()) continue;
        if (found != pr) {
            for (std::size_t cc = 0; cc < m.cols(); ++cc)
                std::swap(m.at(found, cc), m.at(pr, cc));
        }
        const Rat piv = m.at(pr, c);
        for (std::size_t cc = 0; cc < m.cols(); ++cc) m.at(pr, cc) /= piv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            const Rat f = m.at(r, c);
            for (std::size_t cc = 0; cc < m.cols(); ++cc)
                m.at(r, cc) -= f * m.at(pr, cc);
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.m = std::move(m);
    return e;
}

QMatrix augment(const QMatrix& m, const QVector& b) {
    QMatrix a(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a.at(r, c) = m.at(r, c);
        a.at(r, m.cols()) = b[r];
    }
    return a;
}

} // namespace

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).pivot_cols.size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) {
        std::vector<QVector> basis;
        for (std::size_t c = 0; c < n; ++c) {
            QVector v(n, Rat(0));
            v[c] = 1;
            basis.push_back(v);
        }
        return basis;
    }
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVector v(n, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.m.at(i, free);
        basis.push_back(primitive(v, /*normalize_sign=*/true));
    }
    return basis;
}

std::optional<QVector> solve_any(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows()) throw ArgumentError("solve: rhs dimension mismatch");
    Echelon e = rref(augment(m, b));
    for (std::size_t c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt; // pivot in rhs column: inconsistent
    QVector x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        x[e.pivot_cols[i]] = e.m.at(i, m.cols());
    return x;
}

std::optional<QVector> solve_unique(const QMatrix& m, const QVector& b) {
    auto x = solve_any(m, b);
    if (!x) return std::nullopt;
    if (rank(m) != m.cols()) return std::nullopt;
    return x;
}

bool linearly_independent(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return true;
    return rank(QMatrix::from_rows(vectors)) == vectors.size();
}

} // namespace preriesz
