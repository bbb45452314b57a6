#include "reftype/subsys.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reftype {

RootSubsystem span_subsystem(const RootSystem& rs, const std::vector<WeightVec>& base) {
    std::set<std::size_t> members;
    for (const auto& b : base) {
        auto idx = rs.index_of(b);
        if (!idx) throw std::invalid_argument("span_subsystem: not a root: " + b.to_string());
        members.insert(*idx);
        members.insert(rs.negation(*idx));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> current(members.begin(), members.end());
        for (std::size_t a : current)
            for (std::size_t b : current) {
                std::size_t img = *rs.index_of(reflect(rs, rs.root(a), rs.root(b)));
                if (members.insert(img).second) grew = true;
            }
    }
    RootSubsystem out;
    out.root_indices.assign(members.begin(), members.end());
    out.closed = is_closed(rs, out.root_indices);
    return out;
}

bool is_root_subsystem(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    std::vector<bool> member(rs.num_roots(), false);
    for (std::size_t r : roots) member.at(r) = true;
    for (std::size_t a : roots)
        for (std::size_t b : roots)
            if (!member[*rs.index_of(reflect(rs, rs.root(a), rs.root(b)))]) return false;
    return true;
}

bool is_closed(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    std::vector<bool> member(rs.num_roots(), false);
    for (std::size_t r : roots) member.at(r) = true;
    for (std::size_t a : roots)
        for (std::size_t b : roots) {
            auto sum = rs.index_of(rs.root(a) + rs.root(b));
            if (sum && !member[*sum]) return false;
        }
    return true;
}

std::vector<std::size_t> canonical_key(const WeylGroup& wg, const std::vector<std::size_t>& roots) {
    std::vector<std::size_t> best = wg.apply_set(wg.identity(), roots);
    for (std::size_t w = 1; w < wg.order(); ++w) {
        auto img = wg.apply_set(w, roots);
        if (img < best) best = std::move(img);
    }
    return best;
}

std::optional<std::size_t> are_conjugate(const WeylGroup& wg, const std::vector<std::size_t>& g1,
                                         const std::vector<std::size_t>& g2) {
    if (g1.size() != g2.size()) return std::nullopt;
    std::vector<std::size_t> target = g2;
    std::sort(target.begin(), target.end());
    for (std::size_t w = 0; w < wg.order(); ++w)
        if (wg.apply_set(w, g1) == target) return w;
    return std::nullopt;
}

namespace {

int kind_rank(char k) {
    switch (k) {
        case 'A': return 0;
        case 'D': return 1;
        default: return 2;
    }
}

struct Tuple {
    std::vector<int> a, d, k;
};

// All nondecreasing sequences with entries >= min_part whose cost is <= budget.
void partitions(int min_part, int budget, const std::function<int(int)>& cost, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    int start = cur.empty() ? min_part : cur.back();
    for (int part = start; cost(part) <= budget; ++part) {
        cur.push_back(part);
        partitions(min_part, budget - cost(part), cost, cur, out);
        cur.pop_back();
    }
}

int sum_cost(const std::vector<int>& v, int extra_per_part) {
    int s = 0;
    for (int x : v) s += x + extra_per_part;
    return s;
}

std::vector<Tuple> admissible_tuples(const LieType& t) {
    const int n = t.rank;
    std::vector<Tuple> out;
    std::vector<int> cur;
    std::vector<std::vector<int>> a_parts, d_parts, k_parts;
    // For A_n the last A-factor needs no separating node, hence budget n + 1.
    int a_budget = (t.family == Family::A) ? n + 1 : n;
    partitions(1, a_budget, [](int i) { return i + 1; }, cur, a_parts);
    if (t.family == Family::A) {
        for (auto& a : a_parts) out.push_back({a, {}, {}});
        return out;
    }
    partitions(2, n, [](int j) { return j; }, cur, d_parts);
    if (t.family == Family::D) {
        for (auto& a : a_parts)
            for (auto& d : d_parts)
                if (sum_cost(a, 1) + sum_cost(d, 0) <= n) out.push_back({a, d, {}});
        return out;
    }
    partitions(1, n, [](int k) { return k; }, cur, k_parts);
    for (auto& a : a_parts)
        for (auto& d : d_parts)
            for (auto& k : k_parts)
                if (sum_cost(a, 1) + sum_cost(d, 0) + sum_cost(k, 0) <= n) out.push_back({a, d, k});
    return out;
}

// Base of the subsystem attached to a tuple, written in simple and named roots.
std::vector<WeightVec> tuple_base(const RootSystem& rs, const Tuple& tp) {
    const LieType& t = rs.lie_type();
    const int n = t.rank;
    auto simple = [&](int l) { return rs.simple_root(l - 1); };
    std::vector<WeightVec> base;
    int p = 1;
    for (int i : tp.a) {
        for (int l = p; l < p + i; ++l) base.push_back(simple(l));
        p += i + 1;
    }
    int m = p - 1;
    if (t.family == Family::D) {
        for (std::size_t f = 0; f < tp.d.size(); ++f) {
            int j = tp.d[f];
            if (f + 1 == tp.d.size()) {
                for (int l = n - j + 1; l <= n; ++l) base.push_back(simple(l));
            } else {
                base.push_back(simple(m + 1));
                base.push_back(-rs.named_root(NamedRootKind::D, m + 1));
                for (int l = m + 2; l <= m + j - 1; ++l) base.push_back(simple(l));
                m += j;
            }
        }
        return base;
    }
    if (t.family == Family::A) return base;
    NamedRootKind fork = (t.family == Family::B) ? NamedRootKind::B : NamedRootKind::Ctilde;
    for (int j : tp.d) {
        base.push_back(simple(m + 1));
        base.push_back(-rs.named_root(fork, m + 1));
        for (int l = m + 2; l <= m + j - 1; ++l) base.push_back(simple(l));
        m += j;
    }
    NamedRootKind tail = (t.family == Family::B) ? NamedRootKind::A : NamedRootKind::C;
    int end = n;
    for (std::size_t f = 0; f < tp.k.size(); ++f) {
        int k = tp.k[f];
        int start = end - k + 1;
        if (f == 0) {
            for (int l = start; l <= n; ++l) base.push_back(simple(l));
        } else {
            base.push_back(-rs.named_root(tail, start));
            for (int l = start; l <= start + k - 2; ++l) base.push_back(simple(l));
        }
        end = start - 1;
    }
    return base;
}

std::vector<Factor> tuple_factors(const LieType& t, const Tuple& tp) {
    std::vector<Factor> f;
    for (int i : tp.a) f.push_back({'A', i});
    for (int j : tp.d) f.push_back({'D', j});
    char tail = (t.family == Family::C) ? 'C' : 'B';
    for (int k : tp.k) f.push_back({tail, k});
    return f;
}

bool is_full_tuple(const LieType& t, const Tuple& tp) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return tp.a.size() == 1 && tp.a[0] == n;
        case Family::D: return tp.a.empty() && tp.d.size() == 1 && tp.d[0] == n;
        default: return tp.a.empty() && tp.d.empty() && tp.k.size() == 1 && tp.k[0] == n;
    }
}

}  // namespace

std::string factor_label(std::vector<Factor> factors) {
    if (factors.empty()) return "0";
    std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) {
        if (kind_rank(x.kind) != kind_rank(y.kind)) return kind_rank(x.kind) < kind_rank(y.kind);
        return x.size < y.size;
    });
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "+";
        out += factors[i].kind;
        out += std::to_string(factors[i].size);
    }
    return out;
}

std::string normalize_class_label(const std::string& text, const LieType& t) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2295 (circled plus) is three bytes in UTF-8.
        if (text.compare(i, 3, "\xE2\x8A\x95") == 0) {
            s += '+';
            i += 2;
        } else if (text[i] != ' ' && text[i] != '_') {
            s += text[i];
        }
    }
    if (s == "0" || s.empty() || s == "empty") return "0";
    if (s == "full" || s == "Sigma") return t.name();
    std::vector<Factor> factors;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '+')) {
        if (item.size() < 2) throw std::invalid_argument("malformed class label '" + text + "'");
        char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(item[0])));
        if (kind != 'A' && kind != 'B' && kind != 'C' && kind != 'D')
            throw std::invalid_argument("malformed class label '" + text + "'");
        int size = 0;
        try {
            std::size_t used = 0;
            size = std::stoi(item.substr(1), &used);
            if (used != item.size() - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed class label '" + text + "'");
        }
        factors.push_back({kind, size});
    }
    return factor_label(factors);
}

std::vector<SubsystemClass> enumerate_classes(const WeylGroup& wg) {
    const RootSystem& rs = wg.root_system();
    const LieType& t = rs.lie_type();
    std::vector<SubsystemClass> classes;
    for (const Tuple& tp : admissible_tuples(t)) {
        SubsystemClass c;
        c.factors = tuple_factors(t, tp);
        c.label = factor_label(c.factors);
        c.is_full = is_full_tuple(t, tp);
        if (c.is_full) c.label = t.name();
        c.base = tuple_base(rs, tp);
        c.representative = span_subsystem(rs, c.base);
        c.representative.label = c.label;
        c.canonical_key = canonical_key(wg, c.representative.root_indices);
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const SubsystemClass& x, const SubsystemClass& y) {
        if (x.representative.size() != y.representative.size())
            return x.representative.size() < y.representative.size();
        return x.label < y.label;
    });
    return classes;
}

const SubsystemClass& find_class(const std::vector<SubsystemClass>& classes, const std::string& label,
                                 const LieType& t) {
    std::string key = normalize_class_label(label, t);
    for (const auto& c : classes)
        if (c.label == key) return c;
    throw std::invalid_argument("unknown class label '" + label + "' for " + t.name());
}

bool class_leq(const WeylGroup& wg, const SubsystemClass& r1, const SubsystemClass& r2) {
    const RootSystem& rs = wg.root_system();
    const auto& g1 = r1.representative.root_indices;
    const auto& g2 = r2.representative.root_indices;
    if (g1.size() > g2.size()) return false;
    auto count_long = [&](const std::vector<std::size_t>& g) {
        return std::count_if(g.begin(), g.end(), [&](std::size_t i) { return rs.is_long(i); });
    };
    if (count_long(g1) > count_long(g2)) return false;
    std::vector<bool> member(rs.num_roots(), false);
    for (std::size_t r : g2) member[r] = true;
    for (std::size_t w = 0; w < wg.order(); ++w) {
        bool inside = true;
        for (std::size_t r : g1)
            if (!member[wg.apply_root(w, r)]) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

ClassPoset build_poset(const WeylGroup& wg, std::vector<SubsystemClass> classes) {
    ClassPoset poset;
    const std::size_t n = classes.size();
    poset.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) poset.leq[a][b] = (a == b) || class_leq(wg, classes[a], classes[b]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !poset.leq[a][b]) continue;
            bool covered = true;
            for (std::size_t c = 0; c < n && covered; ++c)
                if (c != a && c != b && poset.leq[a][c] && poset.leq[c][b]) covered = false;
            if (covered) poset.hasse_edges.emplace_back(a, b);
        }
    poset.classes = std::move(classes);
    return poset;
}

std::string to_dot(const ClassPoset& poset, const std::string& title) {
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (std::size_t i = 0; i < poset.classes.size(); ++i) {
        const auto& c = poset.classes[i];
        os << "  n" << i << " [label=\"" << c.label << "\"";
        if (c.closed())
            os << ", style=filled, fillcolor=black, fontcolor=white";
        else
            os << ", style=solid";
        os << "];\n";
    }
    for (const auto& [lo, hi] : poset.hasse_edges) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace reftype
