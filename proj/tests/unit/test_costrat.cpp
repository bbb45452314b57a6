#include "support.hpp"

#include <cmath>
#include <set>

using namespace reftype;
using testing::L;
using testing::rs_of;

namespace {

struct Fixture {
    WeylGroup wg;
    std::vector<SubsystemClass> classes;

    explicit Fixture(const RootSystem& rs) : wg(rs), classes(enumerate_classes(wg)) {}

    const RootSystem& rs() const { return wg.root_system(); }
    const SubsystemClass& cls(const std::string& label) const { return find_class(classes, label, rs().lie_type()); }
    CoeffTable table(const std::string& label) const { return coeff_table(wg, cls(label), trivial_pq(rs())); }
    DCoeffTable d(const std::string& label) const { return d_coeffs(rs(), cls(label), table(label)); }
};

// Orbit-form stability and the stable-row value, computed on ambient vectors.
bool oracle_stable(const WeylGroup& wg, const DCoeffTable& d, const DynkinLabels& lambda) {
    const RootSystem& rs = wg.root_system();
    for (const auto& [mu, value] : d.entries)
        for (const auto& y : wg.orbit(rs.from_labels(mu)))
            if (!(rs.to_labels(rs.from_labels(lambda) + y).is_dominant())) return false;
    return true;
}

Rational oracle_stable_entry(const WeylGroup& wg, const DCoeffTable& d, const DynkinLabels& lp, const DynkinLabels& l) {
    const RootSystem& rs = wg.root_system();
    WeightVec diff = rs.from_labels(lp) - rs.from_labels(l);
    for (const auto& [mu, value] : d.entries) {
        auto orbit = wg.orbit(rs.from_labels(mu));
        if (std::find(orbit.begin(), orbit.end(), diff) != orbit.end()) return value;
    }
    return Rational(0);
}

}  // namespace

TEST_CASE("D coefficients for SU(2), SU(3) and Spin(7)") {
    Fixture su2(rs_of('A', 1));
    CHECK(su2.d("0").entries == std::map<DynkinLabels, Rational>{{DynkinLabels({0}), 2}, {DynkinLabels({2}), -1}});

    Fixture su3(rs_of('A', 2));
    auto d3 = su3.d("0").entries;
    CHECK(d3.at(L("00", 2)) == Rational(6));
    CHECK(d3.at(L("11", 2)) == Rational(-2));
    CHECK(d3.at(L("22", 2)) == Rational(-1));
    CHECK(d3.at(L("03", 2)) == Rational(2));
    CHECK(d3.at(L("30", 2)) == Rational(2));

    Fixture spin7(rs_of('B', 3));
    auto d7 = spin7.d("D3").entries;
    CHECK(d7.at(L("000", 3)) == Rational(8));
    CHECK(d7.at(L("010", 3)) == Rational(2));
    CHECK(d7.at(L("100", 3)) == Rational(-4));

    CHECK_THROWS_AS(d_coeffs(su3.rs(), su3.cls("A1"), su3.table("0")), std::invalid_argument);
}

TEST_CASE("D support and dominance-maximal entries") {
    for (const auto& t : std::vector<LieType>{{Family::A, 2}, {Family::B, 2}, {Family::A, 3}, {Family::C, 3}}) {
        CAPTURE(t.name());
        Fixture f{RootSystem{t}};
        const RootSystem& rs = f.rs();
        for (const auto& cls : f.classes) {
            CAPTURE(cls.label);
            auto table = coeff_table(f.wg, cls, trivial_pq(rs));
            auto d = d_coeffs(rs, cls, table);
            std::set<DynkinLabels> support;
            for (const auto& [l2, c] : table.entries)
                for (const auto& [mu, m] : dominant_weight_system(rs, l2).dominant_entries) support.insert(mu);
            std::set<DynkinLabels> keys;
            for (const auto& [mu, v] : d.entries) keys.insert(mu);
            CHECK(keys == support);

            // A table weight not below any other table weight keeps its coefficient.
            for (const auto& [lam, c] : table.entries) {
                bool maximal = true;
                for (const auto& [other, c2] : table.entries) {
                    if (other == lam) continue;
                    auto coords = testing::simple_coords(rs, rs.from_labels(other) - rs.from_labels(lam));
                    bool above = true;
                    for (const auto& x : coords) above = above && is_integral(x) && x >= 0;
                    if (above) maximal = false;
                }
                if (maximal) CHECK(d.entries.at(lam) == c);
            }

            // Summing D over full orbits reproduces the dimension sum rule.
            Rational total(0);
            for (const auto& [mu, v] : d.entries) total += v * Rational(static_cast<std::int64_t>(label_orbit(rs, mu).size()));
            if (!cls.is_full) CHECK(total == Rational(0));
        }
    }
}

TEST_CASE("K entries for SU(2)") {
    Fixture su2(rs_of('A', 1));
    auto d = su2.d("0");
    const DynkinLabels four({4});
    CHECK(k_entry(su2.rs(), d, DynkinLabels({6}), four) == Rational(-1));
    CHECK(k_entry(su2.rs(), d, four, four) == Rational(2));
    CHECK(k_entry(su2.rs(), d, DynkinLabels({2}), four) == Rational(-1));
    CHECK(k_entry(su2.rs(), d, DynkinLabels({8}), four) == Rational(0));
    CHECK_FALSE(is_stable(su2.rs(), d, DynkinLabels({0})));
    CHECK_FALSE(is_stable(su2.rs(), d, DynkinLabels({1})));
    CHECK(is_stable(su2.rs(), d, DynkinLabels({2})));
    CHECK(is_stable(su2.rs(), d, four));
    // At lambda = 0 the orbit point -2 reflects back onto 0 with sign -1: 2 + (-1)(-1).
    CHECK(k_entry(su2.rs(), d, DynkinLabels({0}), DynkinLabels({0})) == Rational(3));
}

TEST_CASE("stable rows follow the closed form") {
    for (const auto& t : std::vector<LieType>{{Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::A, 3}}) {
        CAPTURE(t.name());
        Fixture f{RootSystem{t}};
        const RootSystem& rs = f.rs();
        for (const auto& cls : f.classes) {
            if (cls.is_full) continue;
            CAPTURE(cls.label);
            auto d = d_coeffs(rs, cls, coeff_table(f.wg, cls, trivial_pq(rs)));
            const int bound = rs.rank() <= 2 ? 9 : 7;
            for (const auto& lambda : testing::label_box(rs.rank(), bound)) {
                bool stable = is_stable(rs, d, lambda);
                CHECK(stable == oracle_stable(f.wg, d, lambda));
                if (!stable) continue;
                CAPTURE(lambda);
                for (const auto& [mu, v] : d.entries)
                    for (const auto& mp : label_orbit(rs, mu)) {
                        DynkinLabels lp = add_labels(lambda, mp);
                        CHECK(k_entry(rs, d, lp, lambda) == oracle_stable_entry(f.wg, d, lp, lambda));
                        CHECK(stable_k_entry(rs, d, lp, lambda) == k_entry(rs, d, lp, lambda));
                    }
                // Off the shifted orbits the row vanishes.
                DynkinLabels far = lambda;
                far.labels[0] += 40;
                CHECK(k_entry(rs, d, far, lambda) == Rational(0));
            }
        }
    }
}

TEST_CASE("K blocks") {
    Fixture su2(rs_of('A', 1));
    auto d = su2.d("0");
    CHECK(k_block(su2.rs(), d, Rational(1, 2)).rows.empty());
    CHECK(k_block(su2.rs(), d, Rational(1, 2)).entries.empty());
    CHECK_THROWS_AS(k_block(su2.rs(), d, Rational(-1)), std::invalid_argument);

    auto block = k_block(su2.rs(), d, Rational(7));
    CHECK(block.rows.size() == 9);
    CHECK(block.rows.back() == DynkinLabels({8}));
    std::map<DynkinLabels, Rational> row4;
    for (const auto& [key, v] : block.entries)
        if (key.second == DynkinLabels({4})) row4[key.first] = v;
    CHECK(row4 == std::map<DynkinLabels, Rational>{{DynkinLabels({2}), -1}, {DynkinLabels({4}), 2}, {DynkinLabels({6}), -1}});
    CHECK(block.possibly_incomplete.count(DynkinLabels({8})) == 1);
    CHECK(block.possibly_incomplete.count(DynkinLabels({4})) == 0);

    // Every block entry equals the direct evaluation, and nothing nonzero is missing.
    Fixture b2(rs_of('B', 2));
    for (const auto& cls : b2.classes) {
        if (cls.is_full) continue;
        CAPTURE(cls.label);
        auto db = b2.d(cls.label);
        auto kb = k_block(b2.rs(), db, Rational(6));
        const Rational bound_sq(36);
        auto shifted_norm = [&](const DynkinLabels& l) {
            DynkinLabels s = add_labels(l, delta_labels(b2.rs()));
            return b2.rs().label_pairing(s, s);
        };
        for (const auto& lam : kb.rows) CHECK(shifted_norm(lam) <= bound_sq);
        for (const auto& lam : kb.rows)
            for (const auto& lp : kb.rows) {
                auto it = kb.entries.find({lp, lam});
                Rational v = it == kb.entries.end() ? Rational(0) : it->second;
                CHECK(v == k_entry(b2.rs(), db, lp, lam));
            }
    }
}

TEST_CASE("norm ratios") {
    RootSystem a1 = rs_of('A', 1);
    HbarConfig cfg;
    auto same = norm_ratio(a1, cfg, DynkinLabels({3}), DynkinLabels({3}));
    CHECK(same.exponent == Rational(0));
    CHECK(same.value == doctest::Approx(1.0));
    auto up = norm_ratio(a1, cfg, DynkinLabels({2}), DynkinLabels({0}));
    CHECK(up.exponent == Rational(2));
    CHECK(up.value == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
    cfg.hbar = 0.25;
    auto a = norm_ratio(a1, cfg, DynkinLabels({5}), DynkinLabels({1}));
    auto b = norm_ratio(a1, cfg, DynkinLabels({1}), DynkinLabels({5}));
    CHECK(a.exponent == -b.exponent);
    CHECK(a.value * b.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("truncated vanishing systems") {
    Fixture su2(rs_of('A', 1));
    auto poset = build_poset(su2.wg, su2.classes);
    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < poset.classes.size(); ++i) {
        if (poset.classes[i].is_full) top = i;
        if (poset.classes[i].representative.size() == 0) bottom = i;
    }
    const auto pq = trivial_pq(su2.rs());
    CHECK(vanishing_system(su2.wg, poset, bottom, Rational(7), pq).empty());
    auto rows = vanishing_system(su2.wg, poset, top, Rational(7), pq);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) CHECK(row.class_label == "0");
    const auto& r4 = rows[4];
    CHECK(r4.lambda == DynkinLabels({4}));
    CHECK(r4.coefficients == std::vector<std::pair<DynkinLabels, Rational>>{
                                 {DynkinLabels({2}), -1}, {DynkinLabels({4}), 2}, {DynkinLabels({6}), -1}});
    CHECK_FALSE(r4.possibly_incomplete);

    // Rows come from exactly the classes not above r0.
    Fixture b3(rs_of('B', 3));
    auto pb = build_poset(b3.wg, b3.classes);
    for (std::size_t r0 = 0; r0 < pb.classes.size(); ++r0) {
        std::set<std::string> expected;
        for (std::size_t r = 0; r < pb.classes.size(); ++r)
            if (!pb.leq[r0][r] && !pb.classes[r].is_full) expected.insert(pb.classes[r].label);
        std::set<std::string> seen;
        for (const auto& row : vanishing_system(b3.wg, pb, r0, Rational(6), trivial_pq(b3.rs()))) seen.insert(row.class_label);
        CHECK(seen == expected);
    }
}

TEST_CASE("D tables do not depend on the representative") {
    Fixture c3(rs_of('C', 3));
    for (const auto& cls : c3.classes) {
        auto base = c3.d(cls.label);
        for (int trial = 0; trial < 3; ++trial) {
            std::size_t w = static_cast<std::size_t>(testing::uniform(0, static_cast<int>(c3.wg.order()) - 1));
            auto other = coeff_table_for(c3.wg, c3.wg.apply_set(w, cls.representative.root_indices), cls.label,
                                         trivial_pq(c3.rs()));
            CHECK(d_coeffs(c3.rs(), other).entries == base.entries);
        }
    }
}
