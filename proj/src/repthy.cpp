#include "reftype/repthy.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace reftype {

DynkinLabels add_labels(const DynkinLabels& a, const DynkinLabels& b) {
    DynkinLabels out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

DynkinLabels sub_labels(const DynkinLabels& a, const DynkinLabels& b) {
    DynkinLabels out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

DynkinLabels delta_labels(const RootSystem& rs) {
    return DynkinLabels(std::vector<int>(static_cast<std::size_t>(rs.rank()), 1));
}

DynkinLabels reflect_labels(const RootSystem& rs, int i, const DynkinLabels& x) {
    const DynkinLabels& a = rs.simple_root_labels(i);
    DynkinLabels out = x;
    int c = x[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * a[j];
    return out;
}

std::pair<DynkinLabels, int> dominant_labels(const RootSystem& rs, const DynkinLabels& x) {
    DynkinLabels cur = x;
    int sign = 1;
    while (true) {
        int bad = -1;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (cur[i] < 0) {
                bad = static_cast<int>(i);
                break;
            }
        if (bad < 0) return {cur, sign};
        cur = reflect_labels(rs, bad, cur);
        sign = -sign;
    }
}

std::vector<DynkinLabels> label_orbit(const RootSystem& rs, const DynkinLabels& x) {
    std::set<DynkinLabels> seen{x};
    std::deque<DynkinLabels> queue{x};
    while (!queue.empty()) {
        DynkinLabels cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            DynkinLabels img = reflect_labels(rs, i, cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

std::vector<DynkinLabels> positive_root_labels(const RootSystem& rs) {
    std::vector<DynkinLabels> out;
    for (std::size_t i = 0; i < rs.num_positive(); ++i) out.push_back(rs.to_labels(rs.root(i)));
    return out;
}

std::unique_ptr<WeightSystem> freudenthal(const RootSystem& rs, const DynkinLabels& highest) {
    const auto pos = positive_root_labels(rs);
    const DynkinLabels delta = delta_labels(rs);

    // Dominant weights below the highest one: descending by positive roots
    // stays inside the dominant set (every dominant mu < lambda has a dominant
    // neighbour mu + alpha below lambda).
    std::set<DynkinLabels> dominant{highest};
    std::deque<DynkinLabels> queue{highest};
    while (!queue.empty()) {
        DynkinLabels mu = queue.front();
        queue.pop_front();
        for (const auto& a : pos) {
            DynkinLabels nu = sub_labels(mu, a);
            if (nu.is_dominant() && dominant.insert(nu).second) queue.push_back(nu);
        }
    }

    auto height = [&](const DynkinLabels& mu) {
        WeightVec diff = rs.from_labels(sub_labels(highest, mu));
        Rational h(0);
        for (int j = 0; j < rs.rank(); ++j)
            h += 2 * rs.pairing(diff, rs.fundamental_weights()[static_cast<std::size_t>(j)]) /
                 rs.norm_sq(rs.simple_root(j));
        return h;
    };
    std::vector<std::pair<Rational, DynkinLabels>> order;
    for (const auto& mu : dominant) order.emplace_back(height(mu), mu);
    std::sort(order.begin(), order.end());

    auto ws = std::make_unique<WeightSystem>();
    ws->highest = highest;
    const DynkinLabels top = add_labels(highest, delta);
    const Rational top_norm = rs.label_pairing(top, top);
    for (const auto& [h, mu] : order) {
        if (h == 0) {
            ws->dominant_entries[mu] = 1;
            continue;
        }
        Rational sum(0);
        for (const auto& a : pos) {
            DynkinLabels nu = mu;
            while (true) {
                nu = add_labels(nu, a);
                auto it = ws->dominant_entries.find(dominant_labels(rs, nu).first);
                if (it == ws->dominant_entries.end()) break;
                sum += Rational(it->second) * rs.label_pairing(nu, a);
            }
        }
        DynkinLabels shifted = add_labels(mu, delta);
        Rational m = 2 * sum / (top_norm - rs.label_pairing(shifted, shifted));
        if (!is_integral(m) || m <= 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
        ws->dominant_entries[mu] = m.numerator();
    }
    return ws;
}

std::mutex cache_mutex;
std::map<std::tuple<char, int, DynkinLabels>, std::unique_ptr<WeightSystem>> cache;

}  // namespace

const WeightSystem& dominant_weight_system(const RootSystem& rs, const DynkinLabels& highest) {
    if (highest.size() != static_cast<std::size_t>(rs.rank()))
        throw std::invalid_argument("highest weight has the wrong number of labels");
    if (!highest.is_dominant())
        throw std::invalid_argument("highest weight " + highest.to_string() + " is not dominant");
    auto key = std::make_tuple(family_char(rs.lie_type().family), rs.rank(), highest);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto computed = freudenthal(rs, highest);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, std::move(computed));
    return *it->second;
}

std::int64_t weyl_dim(const RootSystem& rs, const DynkinLabels& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight");
    const DynkinLabels delta = delta_labels(rs);
    const DynkinLabels shifted = add_labels(lambda, delta);
    Rational dim(1);
    for (const auto& a : positive_root_labels(rs)) dim *= rs.label_pairing(shifted, a) / rs.label_pairing(delta, a);
    if (!is_integral(dim)) throw std::logic_error("Weyl dimension formula gave a non-integer");
    return dim.numerator();
}

int tau(const RootSystem& rs, const DynkinLabels& lambda, const DynkinLabels& lambda_prime,
        const DynkinLabels& mu_prime) {
    const DynkinLabels delta = delta_labels(rs);
    auto [dom, sign] = dominant_labels(rs, add_labels(add_labels(lambda, mu_prime), delta));
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i] == 0) return 0;
    return dom == add_labels(lambda_prime, delta) ? sign : 0;
}

std::int64_t orbit_sum_T(const RootSystem& rs, const DynkinLabels& lambda, const DynkinLabels& lambda_prime,
                         const DynkinLabels& mu) {
    std::int64_t total = 0;
    for (const auto& mp : label_orbit(rs, mu)) total += tau(rs, lambda, lambda_prime, mp);
    return total;
}

std::int64_t tensor_coeff(const RootSystem& rs, const DynkinLabels& lambda2, const DynkinLabels& lambda,
                          const DynkinLabels& lambda_prime) {
    if (!lambda2.is_dominant() || !lambda.is_dominant() || !lambda_prime.is_dominant())
        throw std::invalid_argument("tensor_coeff needs dominant weights");
    std::int64_t total = 0;
    for (const auto& [mu, m] : dominant_weight_system(rs, lambda2).dominant_entries)
        total += m * orbit_sum_T(rs, lambda, lambda_prime, mu);
    return total;
}

}  // namespace reftype
