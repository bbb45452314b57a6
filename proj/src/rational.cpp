#include "reftype/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace reftype {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(trim(s.substr(0, slash)), text);
        std::int64_t den = parse_int(trim(s.substr(slash + 1)), text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool negative = !ip.empty() && ip.front() == '-';
        if (negative) ip.remove_prefix(1);
        if (fp.size() > 15 || (ip.empty() && fp.empty()))
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
        std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
        if (whole < 0 || frac < 0)
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        Rational r = Rational(whole) + Rational(frac, scale);
        return negative ? -r : r;
    }
    return Rational(parse_int(s, text));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational rational_gcd(const std::vector<Rational>& values) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    for (const Rational& v : values) {
        if (v == 0) continue;
        // gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), normalised afterwards.
        std::int64_t a = num, b = den;
        std::int64_t c = v.numerator() < 0 ? -v.numerator() : v.numerator();
        std::int64_t d = v.denominator();
        std::int64_t l = std::lcm(b, d);
        num = std::gcd(a * (l / b), c * (l / d));
        den = l;
        std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return Rational(num, den);
}

bool sqrt_sum_leq(const Rational& a, const Rational& b, const Rational& c) {
    // sqrt(a) + sqrt(b) <= sqrt(c)  <=>  2 sqrt(ab) <= c - a - b
    Rational slack = c - a - b;
    if (slack < 0) return false;
    return 4 * a * b <= slack * slack;
}

bool sqrt_leq_sum(const Rational& x, const Rational& a, const Rational& b) {
    // sqrt(x) <= sqrt(a) + sqrt(b)  <=>  x - a - b <= 2 sqrt(ab)
    Rational excess = x - a - b;
    if (excess <= 0) return true;
    return excess * excess <= 4 * a * b;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m(rank, c), m(pivot, c));
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (m(r, col) == 0) continue;
            Rational f = m(r, col) / m(rank, col);
            for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

bool RationalMatrix::is_integral() const {
    for (const Rational& x : data_)
        if (x.denominator() != 1) return false;
    return true;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("matrix is singular");
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(a(col, c), a(pivot, c));
            std::swap(inv(col, c), inv(pivot, c));
        }
        Rational p = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace reftype
