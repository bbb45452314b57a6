#pragma once

// Exact rational scalars, vectors and small dense matrices.

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace reftype {

/// Exact rational number backed by boost::rational<int64_t>.
///
/// The wrapper exists because boost's mixed-type comparison templates recurse
/// under C++20 rewritten comparisons (boost < 1.75). Every operator here takes
/// two Rationals; integers convert implicitly.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : v_(num, den) {}

    std::int64_t numerator() const { return v_.numerator(); }
    std::int64_t denominator() const { return v_.denominator(); }
    double to_double() const { return boost::rational_cast<double>(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b.v_ < a.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b.v_ < a.v_); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a.v_ < b.v_); }

private:
    boost::rational<std::int64_t> v_;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and finite decimals such as "-1.25".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/4,0".
std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// Generator of the subgroup of Q spanned by the given values (nonnegative).
Rational rational_gcd(const std::vector<Rational>& values);

/// Decides sqrt(a) + sqrt(b) <= sqrt(c) exactly for nonnegative a, b, c.
bool sqrt_sum_leq(const Rational& a, const Rational& b, const Rational& c);
/// Decides sqrt(x) <= sqrt(a) + sqrt(b) exactly for nonnegative x, a, b.
bool sqrt_leq_sum(const Rational& x, const Rational& a, const Rational& b);

struct RationalHash {
    std::size_t operator()(const Rational& r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.numerator());
        return h ^ (std::hash<std::int64_t>{}(r.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

/// Row-major dense matrix over Q. Only what the lattice and root code need.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    std::size_t rank() const;
    bool is_integral() const;
    /// Throws std::invalid_argument when singular or not square.
    RationalMatrix inverse() const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace reftype
