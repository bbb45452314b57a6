#pragma once

#include "reftype/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace reftype {

enum class Family { A, B, C, D };

char family_char(Family f);
Family parse_family(const std::string& s);

struct LieType {
    Family family;
    int rank;

    /// Throws std::invalid_argument unless rank >= 1 (A), >= 2 (B, C), >= 4 (D).
    void validate() const;
    std::string name() const;  // "A2", "D4", ...
    bool operator==(const LieType&) const = default;
};

/// A vector in the ambient Euclidean space of a root system, exact coordinates.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit WeightVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    WeightVec& operator+=(const WeightVec& o);
    WeightVec& operator-=(const WeightVec& o);
    WeightVec& operator*=(const Rational& s);
    friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
    friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
    friend WeightVec operator*(const Rational& s, WeightVec a) { return a *= s; }
    WeightVec operator-() const;

    bool operator==(const WeightVec& o) const { return coords_ == o.coords_; }
    /// Lexicographic on coordinates, used only to get deterministic orders.
    bool operator<(const WeightVec& o) const { return coords_ < o.coords_; }

    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

struct WeightVecHash {
    std::size_t operator()(const WeightVec& v) const noexcept;
};

/// Integer labels l_i = 2 k(x, a_i) / k(a_i, a_i).
struct DynkinLabels {
    std::vector<int> labels;

    DynkinLabels() = default;
    explicit DynkinLabels(std::vector<int> l) : labels(std::move(l)) {}

    std::size_t size() const { return labels.size(); }
    int operator[](std::size_t i) const { return labels[i]; }
    int& operator[](std::size_t i) { return labels[i]; }
    bool is_dominant() const;

    /// Compact form "0013" when every label is a single digit, else "1,12,0".
    std::string to_string() const;
    static DynkinLabels parse(const std::string& text, std::size_t rank);

    auto operator<=>(const DynkinLabels&) const = default;
    bool operator==(const DynkinLabels&) const = default;
};

struct DynkinLabelsHash {
    std::size_t operator()(const DynkinLabels& l) const noexcept;
};

enum class NamedRootKind { A, B, C, Ctilde, D };

class RootSystem {
public:
    explicit RootSystem(LieType t);

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank; }
    std::size_t ambient_dim() const { return dim_; }

    const std::vector<WeightVec>& simple_roots() const { return simple_; }
    const WeightVec& simple_root(int i) const { return simple_.at(static_cast<std::size_t>(i)); }
    /// Index into roots() of simple root i (0-based).
    std::size_t simple_index(int i) const { return simple_index_.at(static_cast<std::size_t>(i)); }

    const std::vector<WeightVec>& roots() const { return roots_; }
    const WeightVec& root(std::size_t i) const { return roots_.at(i); }
    std::size_t num_roots() const { return roots_.size(); }
    std::size_t num_positive() const { return roots_.size() / 2; }
    bool is_positive(std::size_t i) const { return i < num_positive(); }
    /// Index of the negative of root i.
    std::size_t negation(std::size_t i) const {
        return i < num_positive() ? i + num_positive() : i - num_positive();
    }
    std::optional<std::size_t> index_of(const WeightVec& v) const;
    /// Coefficients of root i over the simple roots.
    const std::vector<int>& simple_coefficients(std::size_t i) const { return coeffs_.at(i); }

    /// The invariant form, normalised so that short roots have k(a, a) = 2.
    Rational pairing(const WeightVec& a, const WeightVec& b) const;
    Rational norm_sq(const WeightVec& a) const { return pairing(a, a); }
    /// 2 k(x, a) / k(a, a) for any nonzero a.
    Rational coroot_pairing(const WeightVec& x, const WeightVec& a) const;

    const WeightVec& delta() const { return delta_; }
    const std::vector<WeightVec>& fundamental_weights() const { return fundamental_; }

    /// Throws std::invalid_argument if some label is not an integer.
    DynkinLabels to_labels(const WeightVec& x) const;
    WeightVec from_labels(const DynkinLabels& labels) const;
    /// Labels as rationals, no integrality requirement.
    std::vector<Rational> rational_labels(const WeightVec& x) const;

    /// Labels of simple root i, i.e. row i of the Cartan matrix read as a weight.
    const DynkinLabels& simple_root_labels(int i) const { return simple_labels_.at(static_cast<std::size_t>(i)); }
    /// Quadratic form on label coordinates: pairing(from_labels(a), from_labels(b)).
    Rational label_pairing(const DynkinLabels& a, const DynkinLabels& b) const;

    WeightVec dual_root(const WeightVec& alpha) const;
    /// The roots alpha^A_l, alpha^B_l, ... used to write down bases of subsystems.
    /// l is 1-based as in the usual notation.
    WeightVec named_root(NamedRootKind kind, int l) const;

    /// Squared length class of a root: 2 for short, larger for long.
    bool is_long(std::size_t i) const;

private:
    LieType type_;
    std::size_t dim_ = 0;
    Rational scale_{1};
    std::vector<WeightVec> simple_;
    std::vector<std::size_t> simple_index_;
    std::vector<WeightVec> roots_;
    std::vector<std::vector<int>> coeffs_;
    std::unordered_map<WeightVec, std::size_t, WeightVecHash> index_;
    WeightVec delta_;
    std::vector<WeightVec> fundamental_;
    std::vector<DynkinLabels> simple_labels_;
    RationalMatrix label_gram_;
    Rational short_norm_{2};
};

RootSystem build_root_system(LieType t);

}  // namespace reftype
