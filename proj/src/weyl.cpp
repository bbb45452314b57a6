#include "reftype/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace reftype {

namespace {
constexpr std::size_t kMaxGroupOrder = 100000;
}

WeightVec reflect(const RootSystem& rs, const WeightVec& alpha, const WeightVec& x) {
    if (!rs.index_of(alpha)) throw std::invalid_argument("reflect: not a root: " + alpha.to_string());
    return x - rs.coroot_pairing(x, alpha) * alpha;
}

std::size_t RootPermHash::operator()(const RootPerm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : p) h = (h ^ b) * 1099511628211ULL;
    return h;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
    const std::size_t nroots = rs_.num_roots();
    if (nroots > 255) throw std::invalid_argument("root system too large for the permutation encoding");
    const int n = rs_.rank();

    std::vector<RootPerm> gens;
    for (int i = 0; i < n; ++i) {
        const WeightVec& a = rs_.simple_root(i);
        RootPerm p(nroots);
        for (std::size_t j = 0; j < nroots; ++j)
            p[j] = static_cast<std::uint8_t>(*rs_.index_of(reflect(rs_, a, rs_.root(j))));
        gens.push_back(std::move(p));
    }

    RootPerm id(nroots);
    for (std::size_t j = 0; j < nroots; ++j) id[j] = static_cast<std::uint8_t>(j);
    elements_.push_back({id, 1, 0});
    index_.emplace(id, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (const RootPerm& s : gens) {
            RootPerm h(nroots);
            const RootPerm& g = elements_[head].perm;
            for (std::size_t j = 0; j < nroots; ++j) h[j] = s[g[j]];
            if (index_.count(h)) continue;
            if (elements_.size() >= kMaxGroupOrder)
                throw std::invalid_argument("Weyl group of " + rs_.lie_type().name() + " is too large to enumerate");
            int len = elements_[head].length + 1;
            index_.emplace(h, elements_.size());
            elements_.push_back({std::move(h), (len % 2) ? -1 : 1, len});
        }
    }
    for (const RootPerm& s : gens) generators_.push_back(index_.at(s));

    inverse_.resize(elements_.size());
    for (std::size_t w = 0; w < elements_.size(); ++w) {
        RootPerm inv(nroots);
        for (std::size_t j = 0; j < nroots; ++j) inv[elements_[w].perm[j]] = static_cast<std::uint8_t>(j);
        inverse_[w] = index_.at(inv);
    }

    // Linear action: the matrix sending the simple roots (and, for type A, the
    // all-ones direction) to their images.
    const std::size_t dim = rs_.ambient_dim();
    RationalMatrix basis(dim, dim);
    for (int j = 0; j < n; ++j)
        for (std::size_t r = 0; r < dim; ++r) basis(r, static_cast<std::size_t>(j)) = rs_.simple_root(j)[r];
    if (dim > static_cast<std::size_t>(n))
        for (std::size_t r = 0; r < dim; ++r) basis(r, dim - 1) = 1;
    RationalMatrix basis_inv = basis.inverse();
    matrices_.reserve(elements_.size());
    for (const auto& e : elements_) {
        RationalMatrix img = basis;
        for (int j = 0; j < n; ++j) {
            const WeightVec& r = rs_.root(e.perm[rs_.simple_index(j)]);
            for (std::size_t row = 0; row < dim; ++row) img(row, static_cast<std::size_t>(j)) = r[row];
        }
        RationalMatrix m = img * basis_inv;
        if (!m.is_integral()) throw std::logic_error("Weyl group element with non-integral matrix");
        std::vector<int> flat(dim * dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) flat[r * dim + c] = static_cast<int>(m(r, c).numerator());
        matrices_.push_back(std::move(flat));
    }
}

std::size_t WeylGroup::compose(std::size_t a, std::size_t b) const {
    const RootPerm& pa = elements_.at(a).perm;
    const RootPerm& pb = elements_.at(b).perm;
    RootPerm out(pa.size());
    for (std::size_t j = 0; j < pa.size(); ++j) out[j] = pa[pb[j]];
    return index_.at(out);
}

std::size_t WeylGroup::find(const RootPerm& perm) const {
    auto it = index_.find(perm);
    if (it == index_.end()) throw std::invalid_argument("permutation is not a Weyl group element");
    return it->second;
}

std::size_t WeylGroup::reflection(std::size_t root) const {
    const WeightVec& a = rs_.root(root);
    RootPerm p(rs_.num_roots());
    for (std::size_t j = 0; j < p.size(); ++j)
        p[j] = static_cast<std::uint8_t>(*rs_.index_of(reflect(rs_, a, rs_.root(j))));
    return find(p);
}

WeightVec WeylGroup::apply(std::size_t w, const WeightVec& x) const {
    const std::size_t dim = rs_.ambient_dim();
    if (x.dim() != dim) throw std::invalid_argument("weight dimension mismatch");
    const std::vector<int>& m = matrices_.at(w);
    WeightVec out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        Rational s(0);
        for (std::size_t c = 0; c < dim; ++c) {
            int e = m[r * dim + c];
            if (e == 1) s += x[c];
            else if (e == -1) s -= x[c];
            else if (e != 0) s += e * x[c];
        }
        out[r] = s;
    }
    return out;
}

std::vector<WeightVec> WeylGroup::orbit(const WeightVec& x) const {
    std::set<WeightVec> seen;
    for (std::size_t w = 0; w < order(); ++w) seen.insert(apply(w, x));
    return {seen.begin(), seen.end()};
}

std::pair<WeightVec, std::size_t> WeylGroup::dominant_representative(const WeightVec& x) const {
    WeightVec cur = x;
    std::size_t w = identity();
    const int n = rs_.rank();
    while (true) {
        int bad = -1;
        for (int i = 0; i < n; ++i) {
            if (rs_.coroot_pairing(cur, rs_.simple_root(i)) < 0) {
                bad = i;
                break;
            }
        }
        if (bad < 0) return {cur, w};
        cur = reflect(rs_, rs_.simple_root(bad), cur);
        w = compose(generator(bad), w);
    }
}

std::vector<std::size_t> WeylGroup::apply_set(std::size_t w, const std::vector<std::size_t>& root_set) const {
    std::vector<std::size_t> out;
    out.reserve(root_set.size());
    for (std::size_t r : root_set) out.push_back(apply_root(w, r));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> WeylGroup::setwise_stabilizer(const std::vector<std::size_t>& root_set) const {
    std::vector<bool> member(rs_.num_roots(), false);
    for (std::size_t r : root_set) member.at(r) = true;
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < order(); ++w) {
        bool ok = true;
        for (std::size_t r : root_set)
            if (!member[apply_root(w, r)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<std::size_t> WeylGroup::coset_representatives(const std::vector<std::size_t>& subgroup) const {
    std::vector<bool> in_h(order(), false);
    for (std::size_t h : subgroup) in_h.at(h) = true;
    std::size_t hsize = static_cast<std::size_t>(std::count(in_h.begin(), in_h.end(), true));
    if (!in_h[identity()]) throw std::invalid_argument("coset_representatives: subset lacks the identity");
    if (hsize != order()) {
        std::vector<std::size_t> members;
        for (std::size_t w = 0; w < order(); ++w)
            if (in_h[w]) members.push_back(w);
        for (std::size_t a : members)
            for (std::size_t b : members)
                if (!in_h[compose(a, b)])
                    throw std::invalid_argument("coset_representatives: subset is not closed under composition");
    }
    std::vector<bool> covered(order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t w = 0; w < order(); ++w) {
        if (covered[w]) continue;
        reps.push_back(w);
        for (std::size_t h = 0; h < order(); ++h)
            if (in_h[h]) covered[compose(h, w)] = true;
    }
    return reps;
}

WeylGroup generate_group(const RootSystem& rs) { return WeylGroup(rs); }

}  // namespace reftype
