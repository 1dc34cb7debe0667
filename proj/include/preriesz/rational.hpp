#ifndef PRERIESZ_RATIONAL_HPP
#define PRERIESZ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "preriesz/errors.hpp"

namespace preriesz {

// Exact arbitrary-precision rational scalar.  GMP keeps values canonical
// (gcd-reduced, positive denominator) through arithmetic; construction from
// raw numerator/denominator goes through rat() below so canonical form holds
// everywhere.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Parses "p/q" or "p".  Rejects empty strings, junk and zero denominators.
Rat parse_rat(const std::string& text);

// Serializes canonically: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& value);

using QVector = std::vector<Rat>;

QVector qvec(std::initializer_list<long> entries);

bool is_zero(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rat& c, const QVector& v);
QVector negate(const QVector& v);
Rat dot(const QVector& a, const QVector& b);

// Strict lexicographic order used for all canonical sorts.
bool lex_less(const QVector& a, const QVector& b);

std::string vec_str(const QVector& v);

// Clears denominators and divides by the gcd of the numerators.  The
// direction is preserved (rays are one-sided); pass normalize_sign to flip
// the vector so its first nonzero entry is positive (lines, hyperplane
// normals).  Zero vectors are returned unchanged.
QVector primitive(const QVector& v, bool normalize_sign = false);

// Dense row-major matrix of rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    QVector col(std::size_t c) const;
    QMatrix transposed() const;

    QVector apply(const QVector& x) const;          // A x
    QVector apply_transposed(const QVector& y) const; // A^T y

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

} // namespace preriesz

#endif
