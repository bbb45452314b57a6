#include "reftype/costrat.hpp"

#include <cmath>
#include <stdexcept>

namespace reftype {

DCoeffTable d_coeffs(const RootSystem& rs, const CoeffTable& table) {
    DCoeffTable d;
    d.class_label = table.class_label;
    for (const auto& [lambda2, c] : table.entries)
        for (const auto& [mu, m] : dominant_weight_system(rs, lambda2).dominant_entries)
            d.entries[mu] += c * Rational(m);
    return d;
}

DCoeffTable d_coeffs(const RootSystem& rs, const SubsystemClass& cls, const CoeffTable& table) {
    if (cls.label != table.class_label)
        throw std::invalid_argument("coefficient table for '" + table.class_label + "' does not belong to class '" +
                                    cls.label + "'");
    return d_coeffs(rs, table);
}

Rational k_entry(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda_prime,
                 const DynkinLabels& lambda) {
    Rational total(0);
    for (const auto& [mu, value] : d.entries) {
        if (value == 0) continue;
        std::int64_t t = orbit_sum_T(rs, lambda, lambda_prime, mu);
        if (t != 0) total += value * Rational(t);
    }
    return total;
}

bool is_stable(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda) {
    for (const auto& [mu, value] : d.entries)
        for (const auto& mp : label_orbit(rs, mu))
            if (!add_labels(lambda, mp).is_dominant()) return false;
    return true;
}

Rational stable_k_entry(const RootSystem& rs, const DCoeffTable& d, const DynkinLabels& lambda_prime,
                        const DynkinLabels& lambda) {
    const DynkinLabels diff = sub_labels(lambda_prime, lambda);
    Rational total(0);
    for (const auto& [mu, value] : d.entries) {
        // Distinct dominant mu have disjoint orbits, so at most one term fires.
        if (dominant_labels(rs, diff).first == mu) total += value;
    }
    return total;
}

std::vector<DynkinLabels> dominant_weights_within(const RootSystem& rs, const Rational& bound_sq) {
    std::vector<DynkinLabels> out;
    if (bound_sq < 0) return out;
    const int n = rs.rank();
    std::vector<int> limit;
    for (int i = 0; i < n; ++i) {
        double w = std::sqrt(rs.norm_sq(rs.fundamental_weights()[static_cast<std::size_t>(i)]).to_double());
        limit.push_back(static_cast<int>(std::floor(std::sqrt(bound_sq.to_double()) / w)) + 1);
    }
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> shifted = cur;
        for (int& s : shifted) s += 1;
        if (rs.label_pairing(DynkinLabels(shifted), DynkinLabels(shifted)) <= bound_sq) out.emplace_back(cur);
        int pos = n - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == limit[static_cast<std::size_t>(pos)]) {
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

KBlock k_block(const RootSystem& rs, const DCoeffTable& d, const Rational& cutoff) {
    if (cutoff < 0) throw std::invalid_argument("k_block: cutoff must be nonnegative");
    KBlock block;
    block.class_label = d.class_label;
    block.cutoff = cutoff;
    const Rational bound_sq = cutoff * cutoff;
    block.rows = dominant_weights_within(rs, bound_sq);
    const DynkinLabels delta = delta_labels(rs);

    // Orbit points of the support, each carrying its D value.
    std::vector<std::pair<DynkinLabels, Rational>> shifts;
    Rational max_shift_sq(0);
    for (const auto& [mu, value] : d.entries) {
        if (value == 0) continue;
        for (const auto& mp : label_orbit(rs, mu)) shifts.emplace_back(mp, value);
        max_shift_sq = std::max(max_shift_sq, rs.label_pairing(mu, mu));
    }

    for (const auto& lambda : block.rows) {
        const DynkinLabels base = add_labels(lambda, delta);
        std::map<DynkinLabels, Rational> row;
        for (const auto& [mp, value] : shifts) {
            auto [dom, sign] = dominant_labels(rs, add_labels(base, mp));
            bool regular = true;
            for (std::size_t i = 0; i < dom.size(); ++i)
                if (dom[i] == 0) regular = false;
            if (!regular) continue;
            row[sub_labels(dom, delta)] += Rational(sign) * value;
        }
        for (const auto& [lp, value] : row) {
            if (value == 0) continue;
            DynkinLabels lp_shift = add_labels(lp, delta);
            if (rs.label_pairing(lp_shift, lp_shift) > bound_sq) continue;
            block.entries[{lp, lambda}] = value;
        }
        if (!sqrt_sum_leq(rs.label_pairing(base, base), max_shift_sq, bound_sq))
            block.possibly_incomplete.insert(lambda);
    }
    return block;
}

NormRatio norm_ratio(const RootSystem& rs, const HbarConfig& cfg, const DynkinLabels& lambda_prime,
                     const DynkinLabels& lambda) {
    if (!(cfg.hbar > 0)) throw std::invalid_argument("norm_ratio: hbar must be positive");
    const DynkinLabels delta = delta_labels(rs);
    const DynkinLabels a = add_labels(lambda_prime, delta);
    const DynkinLabels b = add_labels(lambda, delta);
    Rational exponent = (rs.label_pairing(a, a) - rs.label_pairing(b, b)) / 2;
    return NormRatio{exponent, std::exp(cfg.hbar * exponent.to_double())};
}

std::vector<LinearConstraint> vanishing_system(const WeylGroup& wg, const ClassPoset& poset, std::size_t r0,
                                               const Rational& cutoff, const std::vector<PQRatio>& pq) {
    if (r0 >= poset.classes.size()) throw std::invalid_argument("vanishing_system: class index out of range");
    const RootSystem& rs = wg.root_system();
    std::vector<LinearConstraint> out;
    for (std::size_t r = 0; r < poset.classes.size(); ++r) {
        const SubsystemClass& cls = poset.classes[r];
        if (poset.leq[r0][r] || cls.is_full) continue;
        DCoeffTable d = d_coeffs(rs, coeff_table(wg, cls, pq));
        KBlock block = k_block(rs, d, cutoff);
        for (const auto& lambda : block.rows) {
            LinearConstraint row;
            row.class_label = cls.label;
            row.lambda = lambda;
            row.possibly_incomplete = block.possibly_incomplete.count(lambda) > 0;
            for (const auto& [key, value] : block.entries)
                if (key.second == lambda) row.coefficients.emplace_back(key.first, value);
            out.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace reftype
