#pragma once

#include "reftype/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reftype {

/// Finitely supported integer-valued function on the weight space.
/// Zero values are never stored.
class WeightedSum {
public:
    using Map = std::unordered_map<WeightVec, std::int64_t, WeightVecHash>;

    void add(const WeightVec& x, std::int64_t value);
    std::int64_t at(const WeightVec& x) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Map& entries() const { return entries_; }
    /// Entries sorted by coordinates, for deterministic output.
    std::vector<std::pair<WeightVec, std::int64_t>> sorted() const;
    std::int64_t total() const;
    /// Largest squared norm over the support (0 when empty).
    Rational max_norm_sq(const RootSystem& rs) const;

    bool operator==(const WeightedSum& o) const { return entries_ == o.entries_; }

private:
    Map entries_;
};

/// V(eta) = #{even subsets D of the complement with lambda_D = eta}
///        - #{odd subsets ...}, where lambda_D sums (q/p) alpha over D.
WeightedSum subset_sums(const RootSystem& rs, const std::vector<PQRatio>& pq,
                        const std::vector<std::size_t>& complement);

/// Vt(xi) = sum over right coset representatives w' of W_gamma of V(w' xi).
WeightedSum symmetrize(const WeylGroup& wg, const std::vector<std::size_t>& gamma, const WeightedSum& v);

/// All dominant lambda with |lambda + delta| <= sqrt(max_norm_sq) + |delta|.
std::vector<DynkinLabels> candidate_dominants(const RootSystem& rs, const Rational& max_norm_sq);

struct CoeffTable {
    std::string class_label;
    std::map<DynkinLabels, Rational> entries;  // C/N per dominant lambda, nonzero only
    std::int64_t reduction_factor = 1;         // |W_gamma|

    bool all_integral() const;
};

std::vector<std::size_t> complement_of(const RootSystem& rs, const std::vector<std::size_t>& gamma);

/// Reduced coefficients for the subsystem gamma (any representative).
CoeffTable coeff_table_for(const WeylGroup& wg, const std::vector<std::size_t>& gamma, const std::string& label,
                           const std::vector<PQRatio>& pq);

/// Throws std::invalid_argument if the class does not belong to wg's root system.
CoeffTable coeff_table(const WeylGroup& wg, const SubsystemClass& cls, const std::vector<PQRatio>& pq);

/// Simply connected shortcut (all q/p = 1).
std::vector<PQRatio> trivial_pq(const RootSystem& rs);

}  // namespace reftype
