#pragma once

#include "reftype/relcoeff.hpp"
#include "reftype/repthy.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reftype {

/// Reduced D coefficients over the union of the dominant weight systems of
/// the table's support. Zero values are kept so the support is explicit.
struct DCoeffTable {
    std::string class_label;
    std::map<DynkinLabels, Rational> entries;
};

DCoeffTable d_coeffs(const RootSystem& rs, const CoeffTable& table);
/// Same, checking that the table belongs to the class.
DCoeffTable d_coeffs(const RootSystem& rs, const SubsystemClass& cls, const CoeffTable& table);

/// Normalised K entry sum_mu D(mu) T_{lambda lambda'}(mu).
Rational k_entry(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda_prime,
                 const DynkinLabels& lambda);

/// lambda is stable when lambda + mu' is dominant for every mu' in the W-orbit
/// of every mu in the support of d. For such lambda the K row is read off
/// directly from d.
bool is_stable(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda);

/// The value predicted for a stable row: D(mu) if lambda' - lambda lies in the
/// orbit of mu, else 0.
Rational stable_k_entry(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda_prime,
                        const DynkinLabels& lambda);

/// Dominant lambda with |lambda + delta|^2 <= bound_sq, sorted.
std::vector<DynkinLabels> dominant_weights_within(const RootSystem& rs, const Rational& bound_sq);

struct KBlock {
    std::string class_label;
    Rational cutoff;
    std::vector<DynkinLabels> rows;  // every lambda inside the window
    std::map<std::pair<DynkinLabels, DynkinLabels>, Rational> entries;  // (lambda', lambda) -> value
    std::set<DynkinLabels> possibly_incomplete;  // rows whose support may leave the window
};

/// All normalised entries with |lambda + delta|, |lambda' + delta| <= cutoff.
KBlock k_block(const RootSystem& rs, const DCoeffTable& d, const Rational& cutoff);

struct HbarConfig {
    double hbar = 1.0;
    int dim_G = 0;
};

struct NormRatio {
    Rational exponent;  // multiply by hbar
    double value;
};

/// N_{lambda'} / N_lambda = exp(hbar (|lambda'+delta|^2 - |lambda+delta|^2) / 2).
NormRatio norm_ratio(const RootSystem& rs, const HbarConfig& cfg, const DynkinLabels& lambda_prime,
                     const DynkinLabels& lambda);

struct LinearConstraint {
    std::string class_label;
    DynkinLabels lambda;
    std::vector<std::pair<DynkinLabels, Rational>> coefficients;  // over lambda'
    bool possibly_incomplete = false;
};

/// Finite truncation of the conditions cutting out the subspace attached to
/// the class at index r0 of the poset: one row per class r not >= r0 and per
/// lambda inside the window. The full class is never a source of rows.
std::vector<LinearConstraint> vanishing_system(const WeylGroup& wg, const ClassPoset& poset, std::size_t r0,
                                               const Rational& cutoff, const std::vector<PQRatio>& pq);

}  // namespace reftype
