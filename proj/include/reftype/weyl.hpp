#pragma once

#include "reftype/rootsys.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reftype {

/// Reflection in the hyperplane orthogonal to the root alpha.
WeightVec reflect(const RootSystem& rs, const WeightVec& alpha, const WeightVec& x);

using RootPerm = std::vector<std::uint8_t>;

struct RootPermHash {
    std::size_t operator()(const RootPerm& p) const noexcept;
};

struct WeylElement {
    RootPerm perm;  // perm[i] = index of w(root i)
    int sign = 1;
    int length = 0;  // word length in the simple reflections
};

/// The Weyl group, enumerated completely. Elements are addressed by index;
/// index 0 is the identity and indices follow breadth-first (length) order.
/// The group keeps its own copy of the root system.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& root_system() const { return rs_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& element(std::size_t w) const { return elements_.at(w); }
    std::size_t identity() const { return 0; }
    /// Element index of the simple reflection s_i (0-based i).
    std::size_t generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
    int sign(std::size_t w) const { return elements_[w].sign; }

    std::size_t compose(std::size_t a, std::size_t b) const;  // a after b
    std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
    std::size_t find(const RootPerm& perm) const;  // throws if absent
    /// Element index of the reflection in root i.
    std::size_t reflection(std::size_t root) const;

    std::size_t apply_root(std::size_t w, std::size_t root) const { return elements_[w].perm[root]; }
    WeightVec apply(std::size_t w, const WeightVec& x) const;
    /// Integer matrix of w in ambient coordinates, row-major.
    const std::vector<int>& matrix(std::size_t w) const { return matrices_.at(w); }

    std::vector<WeightVec> orbit(const WeightVec& x) const;
    /// Returns (w(x), w) with w(x) dominant.
    std::pair<WeightVec, std::size_t> dominant_representative(const WeightVec& x) const;
    std::vector<std::size_t> setwise_stabilizer(const std::vector<std::size_t>& root_set) const;
    /// One representative (of minimal length) per right coset H w.
    /// Throws std::invalid_argument if H is not a subgroup.
    std::vector<std::size_t> coset_representatives(const std::vector<std::size_t>& subgroup) const;

    /// Image of a set of root indices, sorted.
    std::vector<std::size_t> apply_set(std::size_t w, const std::vector<std::size_t>& root_set) const;

private:
    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::vector<std::vector<int>> matrices_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<RootPerm, std::size_t, RootPermHash> index_;
};

WeylGroup generate_group(const RootSystem& rs);

}  // namespace reftype
