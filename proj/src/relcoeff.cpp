#include "reftype/relcoeff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reftype {

void WeightedSum::add(const WeightVec& x, std::int64_t value) {
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(x, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

std::int64_t WeightedSum::at(const WeightVec& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<WeightVec, std::int64_t>> WeightedSum::sorted() const {
    std::vector<std::pair<WeightVec, std::int64_t>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::int64_t WeightedSum::total() const {
    std::int64_t s = 0;
    for (const auto& [x, v] : entries_) s += v;
    return s;
}

Rational WeightedSum::max_norm_sq(const RootSystem& rs) const {
    Rational m(0);
    for (const auto& [x, v] : entries_) m = std::max(m, rs.norm_sq(x));
    return m;
}

WeightedSum subset_sums(const RootSystem& rs, const std::vector<PQRatio>& pq,
                        const std::vector<std::size_t>& complement) {
    WeightedSum acc;
    acc.add(WeightVec(rs.ambient_dim()), 1);
    for (std::size_t c : complement) {
        WeightVec step = pq.at(c).q_over_p() * rs.root(c);
        WeightedSum next = acc;
        for (const auto& [eta, v] : acc.entries()) next.add(eta + step, -v);
        acc = std::move(next);
    }
    return acc;
}

WeightedSum symmetrize(const WeylGroup& wg, const std::vector<std::size_t>& gamma, const WeightedSum& v) {
    auto stabilizer = wg.setwise_stabilizer(gamma);
    auto reps = wg.coset_representatives(stabilizer);
    WeightedSum out;
    // Vt(xi) = sum_{w'} V(w' xi): every eta in supp V contributes at w'^{-1} eta.
    for (std::size_t w : reps) {
        std::size_t winv = wg.inverse(w);
        for (const auto& [eta, value] : v.entries()) out.add(wg.apply(winv, eta), value);
    }
    return out;
}

std::vector<DynkinLabels> candidate_dominants(const RootSystem& rs, const Rational& max_norm_sq) {
    const int n = rs.rank();
    const Rational delta_sq = rs.norm_sq(rs.delta());
    // lambda + delta = sum (a_i + 1) w_i and all (w_i, w_j) >= 0, hence
    // (a_i + 1)^2 |w_i|^2 <= |lambda + delta|^2 <= (M + |delta|)^2.
    const double bound = std::sqrt(max_norm_sq.to_double()) +
                         std::sqrt(delta_sq.to_double());
    std::vector<int> limit;
    for (int i = 0; i < n; ++i) {
        double w = std::sqrt(rs.norm_sq(rs.fundamental_weights()[static_cast<std::size_t>(i)]).to_double());
        limit.push_back(static_cast<int>(std::floor(bound / w)) + 1);
    }
    std::vector<DynkinLabels> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> shifted = cur;
        for (int& s : shifted) s += 1;
        Rational norm = rs.label_pairing(DynkinLabels(shifted), DynkinLabels(shifted));
        if (sqrt_leq_sum(norm, max_norm_sq, delta_sq)) out.emplace_back(cur);
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

bool CoeffTable::all_integral() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return is_integral(e.second); });
}

std::vector<std::size_t> complement_of(const RootSystem& rs, const std::vector<std::size_t>& gamma) {
    std::vector<bool> member(rs.num_roots(), false);
    for (std::size_t r : gamma) member.at(r) = true;
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rs.num_roots(); ++r)
        if (!member[r]) out.push_back(r);
    return out;
}

CoeffTable coeff_table_for(const WeylGroup& wg, const std::vector<std::size_t>& gamma, const std::string& label,
                           const std::vector<PQRatio>& pq) {
    const RootSystem& rs = wg.root_system();
    WeightedSum v = subset_sums(rs, pq, complement_of(rs, gamma));
    WeightedSum vt = symmetrize(wg, gamma, v);

    CoeffTable table;
    table.class_label = label;
    table.reduction_factor = static_cast<std::int64_t>(wg.setwise_stabilizer(gamma).size());

    const WeightVec& delta = rs.delta();
    for (const DynkinLabels& lambda : candidate_dominants(rs, v.max_norm_sq(rs))) {
        WeightVec shifted = rs.from_labels(lambda) + delta;
        std::int64_t sum = 0;
        for (std::size_t w = 0; w < wg.order(); ++w) {
            std::int64_t value = vt.at(wg.apply(w, shifted) - delta);
            if (value != 0) sum += wg.sign(w) * value;
        }
        if (sum != 0) table.entries.emplace(lambda, Rational(sum));
    }
    return table;
}

CoeffTable coeff_table(const WeylGroup& wg, const SubsystemClass& cls, const std::vector<PQRatio>& pq) {
    const RootSystem& rs = wg.root_system();
    for (std::size_t r : cls.representative.root_indices)
        if (r >= rs.num_roots()) throw std::invalid_argument("class '" + cls.label + "' is not from this root system");
    for (const auto& b : cls.base)
        if (b.dim() != rs.ambient_dim() || !rs.index_of(b))
            throw std::invalid_argument("class '" + cls.label + "' is not from this root system");
    if (pq.size() != rs.num_roots()) throw std::invalid_argument("pq map does not match the root system");
    return coeff_table_for(wg, cls.representative.root_indices, cls.label, pq);
}

std::vector<PQRatio> trivial_pq(const RootSystem& rs) { return std::vector<PQRatio>(rs.num_roots()); }

}  // namespace reftype
