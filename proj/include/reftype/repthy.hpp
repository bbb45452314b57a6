#pragma once

#include "reftype/rootsys.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace reftype {

/// Dominant part of the weight system of the irreducible module with highest
/// weight `highest`, with multiplicities.
struct WeightSystem {
    DynkinLabels highest;
    std::map<DynkinLabels, std::int64_t> dominant_entries;
};

/// Freudenthal recursion. Results are memoised per (type, highest weight);
/// the cache is safe to use from several threads.
/// Throws std::invalid_argument for a non-dominant highest weight.
const WeightSystem& dominant_weight_system(const RootSystem& rs, const DynkinLabels& highest);

std::int64_t weyl_dim(const RootSystem& rs, const DynkinLabels& lambda);

/// s_i acting on label coordinates.
DynkinLabels reflect_labels(const RootSystem& rs, int i, const DynkinLabels& x);

/// Dominant representative of x together with the sign of a Weyl element
/// carrying x there.
std::pair<DynkinLabels, int> dominant_labels(const RootSystem& rs, const DynkinLabels& x);

/// W-orbit of x in label coordinates, sorted.
std::vector<DynkinLabels> label_orbit(const RootSystem& rs, const DynkinLabels& x);

/// sign(w) if w(lambda + mu' + delta) = lambda' + delta for some w, else 0.
int tau(const RootSystem& rs, const DynkinLabels& lambda, const DynkinLabels& lambda_prime,
        const DynkinLabels& mu_prime);

/// Sum of tau over the W-orbit of mu.
std::int64_t orbit_sum_T(const RootSystem& rs, const DynkinLabels& lambda, const DynkinLabels& lambda_prime,
                         const DynkinLabels& mu);

/// Multiplicity of lambda' in (lambda'') x (lambda).
std::int64_t tensor_coeff(const RootSystem& rs, const DynkinLabels& lambda2, const DynkinLabels& lambda,
                          const DynkinLabels& lambda_prime);

DynkinLabels add_labels(const DynkinLabels& a, const DynkinLabels& b);
DynkinLabels sub_labels(const DynkinLabels& a, const DynkinLabels& b);
DynkinLabels delta_labels(const RootSystem& rs);

}  // namespace reftype
