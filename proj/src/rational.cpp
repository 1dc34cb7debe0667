#include "preriesz/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace preriesz {

Rat rat(long num, long den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw ParseError("malformed rational '" + text + "'");
    if (slash == std::string::npos) {
        Rat r(mpz_class(num));
        return r;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in rational '" + text + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& value) {
    return value.get_str();
}

QVector qvec(std::initializer_list<long> entries) {
    QVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

QVector add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw ArgumentError("vector dimension mismatch in add");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw ArgumentError("vector dimension mismatch in sub");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector scale(const Rat& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

QVector negate(const QVector& v) {
    return scale(Rat(-1), v);
}

Rat dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw ArgumentError("vector dimension mismatch in dot");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const QVector& a, const QVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string vec_str(const QVector& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << rat_str(v[i]);
    }
    out << ")";
    return out.str();
}

QVector primitive(const QVector& v, bool normalize_sign) {
    if (is_zero(v)) return v;
    mpz_class lcm_den(1);
    for (const Rat& x : v) {
        mpz_class d = x.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g(0);
    for (const Rat& x : v) {
        mpz_class num = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        ints.push_back(num);
    }
    int sign = 1;
    if (normalize_sign) {
        for (const mpz_class& z : ints) {
            if (z != 0) { sign = (z < 0) ? -1 : 1; break; }
        }
    }
    QVector out;
    out.reserve(v.size());
    for (const mpz_class& z : ints) out.emplace_back(sign * z / g);
    return out;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw ArgumentError("ragged rows in matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

QVector QMatrix::col(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QVector QMatrix::apply(const QVector& x) const {
    if (x.size() != cols_) throw ArgumentError("matrix-vector dimension mismatch");
    QVector y(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
}

QVector QMatrix::apply_transposed(const QVector& y) const {
    if (y.size() != rows_) throw ArgumentError("matrix-vector dimension mismatch");
    QVector x(cols_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) x[c] += at(r, c) * y[r];
    return x;
}

} // namespace preriesz
