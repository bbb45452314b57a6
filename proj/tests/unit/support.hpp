#pragma once

#include "reftype/costrat.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace doctest {
template <>
struct StringMaker<reftype::Rational> {
    static String convert(const reftype::Rational& r) { return reftype::to_string(r).c_str(); }
};
template <>
struct StringMaker<reftype::DynkinLabels> {
    static String convert(const reftype::DynkinLabels& l) { return ("[" + l.to_string() + "]").c_str(); }
};
template <>
struct StringMaker<reftype::WeightVec> {
    static String convert(const reftype::WeightVec& v) { return v.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

using namespace reftype;

inline RootSystem rs_of(char family, int rank) { return RootSystem(LieType{parse_family(std::string(1, family)), rank}); }

inline DynkinLabels L(const std::string& text, std::size_t rank) { return DynkinLabels::parse(text, rank); }

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Simple-root coordinates of a weight, rational.
inline std::vector<Rational> simple_coords(const RootSystem& rs, const WeightVec& x) {
    std::vector<Rational> c;
    for (int j = 0; j < rs.rank(); ++j) {
        const WeightVec& a = rs.simple_root(j);
        c.push_back(2 * rs.pairing(x, rs.fundamental_weights()[static_cast<std::size_t>(j)]) / rs.norm_sq(a));
    }
    return c;
}

/// The map eta -> (#even - #odd) subsets of `roots` summing to eta, by
/// walking over all 2^k subsets.
inline std::map<WeightVec, long> brute_subset_sums(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    std::map<WeightVec, long> out;
    const std::size_t k = roots.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        WeightVec eta(rs.ambient_dim());
        int parity = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ul << i)) {
                eta += rs.root(roots[i]);
                ++parity;
            }
        out[eta] += (parity % 2 == 0) ? 1 : -1;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// All dominant label vectors with entries in [0, bound].
inline std::vector<DynkinLabels> label_box(int rank, int bound) {
    std::vector<DynkinLabels> out;
    std::vector<int> cur(static_cast<std::size_t>(rank), 0);
    while (true) {
        out.emplace_back(cur);
        int pos = rank - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == bound) cur[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace testing
