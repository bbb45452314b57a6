#include "reftype/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace reftype {

char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown Lie family '" + s + "' (expected A, B, C or D)");
}

void LieType::validate() const {
    int min_rank = 1;
    if (family == Family::B || family == Family::C) min_rank = 2;
    if (family == Family::D) min_rank = 4;
    if (rank < min_rank || rank > 8)
        throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for family " +
                                    std::string(1, family_char(family)) + " (allowed " +
                                    std::to_string(min_rank) + "..8)");
}

std::string LieType::name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

bool WeightVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    if (o.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
    if (o.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

WeightVec& WeightVec::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

WeightVec WeightVec::operator-() const {
    WeightVec r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

std::string WeightVec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += reftype::to_string(coords_[i]);
    }
    return out + ")";
}

std::size_t WeightVecHash::operator()(const WeightVec& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    RationalHash rh;
    for (const auto& c : v.coords()) h = (h ^ rh(c)) * 1099511628211ULL;
    return h;
}

bool DynkinLabels::is_dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l >= 0; });
}

std::string DynkinLabels::to_string() const {
    bool compact = std::all_of(labels.begin(), labels.end(), [](int l) { return l >= 0 && l <= 9; });
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!compact && i) out += ",";
        out += std::to_string(labels[i]);
    }
    return out;
}

DynkinLabels DynkinLabels::parse(const std::string& text, std::size_t rank) {
    std::vector<int> out;
    bool digits = text.size() == rank &&
                  std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits) {
        for (char c : text) out.push_back(c - '0');
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                out.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed Dynkin labels '" + text + "'");
            }
        }
    }
    if (out.size() != rank)
        throw std::invalid_argument("Dynkin labels '" + text + "' do not have " + std::to_string(rank) + " entries");
    return DynkinLabels(std::move(out));
}

std::size_t DynkinLabelsHash::operator()(const DynkinLabels& l) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : l.labels) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ULL;
    return h;
}

namespace {

WeightVec unit(std::size_t dim, std::size_t i, int s = 1) {
    WeightVec v(dim);
    v[i] = s;
    return v;
}

std::vector<WeightVec> standard_simple_roots(const LieType& t, std::size_t dim) {
    const int n = t.rank;
    std::vector<WeightVec> simple;
    int chain = (t.family == Family::A) ? n : n - 1;
    for (int i = 0; i < chain; ++i)
        simple.push_back(unit(dim, static_cast<std::size_t>(i)) - unit(dim, static_cast<std::size_t>(i + 1)));
    const auto last = static_cast<std::size_t>(n - 1);
    switch (t.family) {
        case Family::A: break;
        case Family::B: simple.push_back(unit(dim, last)); break;
        case Family::C: simple.push_back(unit(dim, last, 2)); break;
        case Family::D: simple.push_back(unit(dim, last - 1) + unit(dim, last)); break;
    }
    return simple;
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t) {
    type_.validate();
    const int n = type_.rank;
    dim_ = static_cast<std::size_t>(type_.family == Family::A ? n + 1 : n);
    // With the plain dot product the short roots of B_n have length 1.
    scale_ = (type_.family == Family::B) ? Rational(2) : Rational(1);
    simple_ = standard_simple_roots(type_, dim_);

    // Fundamental weights: w_i = sum_j X_ij a_j with <w_i, a_k^vee> = delta_ik.
    RationalMatrix cart(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) cart(k, j) = coroot_pairing(simple_[j], simple_[k]);
    RationalMatrix x = cart.transpose().inverse();
    for (int i = 0; i < n; ++i) {
        WeightVec w(dim_);
        for (int j = 0; j < n; ++j) w += x(i, j) * simple_[j];
        fundamental_.push_back(std::move(w));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        for (int j = 0; j < n; ++j) row.push_back(static_cast<int>(cart(j, i).numerator()));
        simple_labels_.emplace_back(std::move(row));
    }
    label_gram_ = RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) label_gram_(a, b) = pairing(fundamental_[a], fundamental_[b]);

    // Close the simple roots under the simple reflections.
    std::unordered_map<WeightVec, bool, WeightVecHash> seen;
    std::deque<WeightVec> queue;
    for (const auto& a : simple_) {
        for (const WeightVec& r : {a, -a})
            if (seen.emplace(r, true).second) queue.push_back(r);
    }
    std::vector<WeightVec> all;
    while (!queue.empty()) {
        WeightVec r = queue.front();
        queue.pop_front();
        all.push_back(r);
        for (const auto& a : simple_) {
            WeightVec img = r - coroot_pairing(r, a) * a;
            if (seen.emplace(img, true).second) queue.push_back(img);
        }
    }

    auto coefficients = [&](const WeightVec& r) {
        std::vector<int> c;
        for (int j = 0; j < n; ++j) {
            Rational v = 2 * pairing(r, fundamental_[j]) / pairing(simple_[j], simple_[j]);
            if (!is_integral(v)) throw std::logic_error("root is not an integral combination of simple roots");
            c.push_back(static_cast<int>(v.numerator()));
        }
        return c;
    };

    std::vector<WeightVec> positives;
    for (const auto& r : all) {
        auto c = coefficients(r);
        bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](int v) { return v <= 0; });
        if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign simple coefficients");
        if (nonneg) positives.push_back(r);
    }
    std::sort(positives.begin(), positives.end());
    roots_ = positives;
    for (const auto& p : positives) roots_.push_back(-p);
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        index_.emplace(roots_[i], i);
        coeffs_.push_back(coefficients(roots_[i]));
    }
    for (const auto& a : simple_) simple_index_.push_back(index_.at(a));

    delta_ = WeightVec(dim_);
    for (std::size_t i = 0; i < num_positive(); ++i) delta_ += roots_[i];
    delta_ *= Rational(1, 2);
}

std::optional<std::size_t> RootSystem::index_of(const WeightVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Rational RootSystem::pairing(const WeightVec& a, const WeightVec& b) const {
    if (a.dim() != dim_ || b.dim() != dim_)
        throw std::invalid_argument("pairing: vector dimension does not match the root system");
    Rational s(0);
    for (std::size_t i = 0; i < dim_; ++i) s += a[i] * b[i];
    return scale_ * s;
}

Rational RootSystem::coroot_pairing(const WeightVec& x, const WeightVec& a) const {
    return 2 * pairing(x, a) / pairing(a, a);
}

std::vector<Rational> RootSystem::rational_labels(const WeightVec& x) const {
    std::vector<Rational> out;
    for (const auto& a : simple_) out.push_back(coroot_pairing(x, a));
    return out;
}

DynkinLabels RootSystem::to_labels(const WeightVec& x) const {
    std::vector<int> out;
    for (const Rational& l : rational_labels(x)) {
        if (!is_integral(l)) throw std::invalid_argument("not a lattice weight: " + x.to_string());
        out.push_back(static_cast<int>(l.numerator()));
    }
    return DynkinLabels(std::move(out));
}

WeightVec RootSystem::from_labels(const DynkinLabels& labels) const {
    if (labels.size() != static_cast<std::size_t>(rank()))
        throw std::invalid_argument("label vector has wrong length");
    WeightVec w(dim_);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != 0) w += Rational(labels[i]) * fundamental_[i];
    return w;
}

Rational RootSystem::label_pairing(const DynkinLabels& a, const DynkinLabels& b) const {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += Rational(a[i] * b[j]) * label_gram_(i, j);
    }
    return s;
}

WeightVec RootSystem::dual_root(const WeightVec& alpha) const {
    if (!index_of(alpha)) throw std::invalid_argument("dual_root: not a root: " + alpha.to_string());
    return (Rational(2) / pairing(alpha, alpha)) * alpha;
}

bool RootSystem::is_long(std::size_t i) const { return norm_sq(root(i)) > short_norm_; }

WeightVec RootSystem::named_root(NamedRootKind kind, int l) const {
    const int n = rank();
    int upper = 0;  // largest admissible l
    switch (kind) {
        case NamedRootKind::A: upper = n; break;
        case NamedRootKind::B:
        case NamedRootKind::C:
        case NamedRootKind::Ctilde: upper = n - 1; break;
        case NamedRootKind::D: upper = n - 3; break;
    }
    if (l < 1 || l > upper)
        throw std::invalid_argument("named_root: index " + std::to_string(l) + " out of range");
    std::vector<int> coeff(static_cast<std::size_t>(n), 0);
    auto set = [&](int from, int to, int value) {  // 1-based inclusive
        for (int i = from; i <= to; ++i) coeff[static_cast<std::size_t>(i - 1)] = value;
    };
    switch (kind) {
        case NamedRootKind::A: set(l, n, 1); break;
        case NamedRootKind::B: set(l + 1, n, 2); set(l, l, 1); break;
        case NamedRootKind::C: set(l, n - 1, 2); set(n, n, 1); break;
        case NamedRootKind::Ctilde: set(l + 1, n - 1, 2); set(l, l, 1); set(n, n, 1); break;
        case NamedRootKind::D: set(l + 1, n - 2, 2); set(l, l, 1); set(n - 1, n, 1); break;
    }
    WeightVec r(dim_);
    for (int i = 0; i < n; ++i)
        if (coeff[static_cast<std::size_t>(i)] != 0) r += Rational(coeff[static_cast<std::size_t>(i)]) * simple_[i];
    if (!index_of(r)) throw std::invalid_argument("named_root: combination is not a root of " + type_.name());
    return r;
}

RootSystem build_root_system(LieType t) { return RootSystem(t); }

}  // namespace reftype
