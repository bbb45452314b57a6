#include "support.hpp"

#include <set>

using namespace reftype;
using testing::rs_of;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Order of the signed-permutation model of each family.
std::size_t model_order(const LieType& t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return (std::size_t{1} << n) * factorial(n);
        case Family::D: return (std::size_t{1} << (n - 1)) * factorial(n);
    }
    return 0;
}

// The matrix of w acting on the ambient space is a signed permutation matrix.
bool is_signed_permutation(const std::vector<int>& m, std::size_t dim, int* det_sign_flips) {
    int flips = 0;
    for (std::size_t r = 0; r < dim; ++r) {
        int nonzero = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            int v = m[r * dim + c];
            if (v != 0) {
                if (v != 1 && v != -1) return false;
                ++nonzero;
                if (v == -1) ++flips;
            }
        }
        if (nonzero != 1) return false;
    }
    *det_sign_flips = flips;
    return true;
}

}  // namespace

TEST_CASE("group orders match the signed-permutation models") {
    std::vector<LieType> types = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                  {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::B, 4},
                                  {Family::D, 4}, {Family::D, 5}};
    for (const auto& t : types) {
        CAPTURE(t.name());
        WeylGroup wg(RootSystem{t});
        CHECK(wg.order() == model_order(t));
        std::set<std::vector<int>> matrices;
        for (std::size_t w = 0; w < wg.order(); ++w) {
            int flips = 0;
            CHECK(is_signed_permutation(wg.matrix(w), wg.root_system().ambient_dim(), &flips));
            if (t.family == Family::D) CHECK(flips % 2 == 0);
            if (t.family == Family::A) CHECK(flips == 0);
            matrices.insert(wg.matrix(w));
        }
        CHECK(matrices.size() == wg.order());
    }
    CHECK(WeylGroup(rs_of('A', 1)).order() == 2);
    CHECK(WeylGroup(rs_of('A', 2)).order() == 6);
    CHECK(WeylGroup(rs_of('D', 4)).order() == 192);
}

TEST_CASE("sign is a homomorphism and respects negation") {
    WeylGroup wg(rs_of('B', 3));
    const RootSystem& rs = wg.root_system();
    for (int i = 0; i < rs.rank(); ++i) CHECK(wg.sign(wg.generator(i)) == -1);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t a = static_cast<std::size_t>(testing::uniform(0, static_cast<int>(wg.order()) - 1));
        std::size_t b = static_cast<std::size_t>(testing::uniform(0, static_cast<int>(wg.order()) - 1));
        CHECK(wg.sign(wg.compose(a, b)) == wg.sign(a) * wg.sign(b));
        CHECK(wg.compose(a, wg.inverse(a)) == wg.identity());
        for (std::size_t r = 0; r < rs.num_roots(); ++r)
            CHECK(wg.apply_root(a, rs.negation(r)) == rs.negation(wg.apply_root(a, r)));
        // Composition agrees with the linear action.
        WeightVec x = rs.from_labels(DynkinLabels({testing::uniform(-3, 3), testing::uniform(-3, 3), testing::uniform(-3, 3)}));
        CHECK(wg.apply(wg.compose(a, b), x) == wg.apply(a, wg.apply(b, x)));
    }
    for (std::size_t w = 0; w < wg.order(); ++w) CHECK(wg.sign(w) == ((wg.element(w).length % 2) ? -1 : 1));
}

TEST_CASE("reflections") {
    RootSystem c2 = rs_of('C', 2);
    const WeightVec& alpha = c2.simple_root(0);
    const WeightVec& beta = c2.simple_root(1);
    CHECK(reflect(c2, alpha, alpha) == -alpha);
    CHECK(reflect(c2, alpha, beta) == beta + Rational(2) * alpha);
    // 3(e1 + e2) is orthogonal to alpha = e1 - e2 and is not a root.
    WeightVec fixed(std::vector<Rational>{3, 3});
    CHECK(c2.pairing(alpha, fixed) == Rational(0));
    CHECK(reflect(c2, alpha, fixed) == fixed);
    for (const auto& a : c2.roots())
        for (const auto& b : c2.roots()) {
            CHECK(c2.index_of(reflect(c2, a, b)).has_value());
            CHECK(reflect(c2, a, reflect(c2, a, b)) == b);
        }
    CHECK_THROWS_AS(reflect(c2, fixed, alpha), std::invalid_argument);
}

TEST_CASE("reflection of a conjugated root is the conjugated reflection") {
    for (const auto& t : std::vector<LieType>{{Family::A, 3}, {Family::C, 3}, {Family::D, 4}}) {
        WeylGroup wg(RootSystem{t});
        const RootSystem& rs = wg.root_system();
        for (std::size_t w = 0; w < wg.order(); w += 7)
            for (int i = 0; i < rs.rank(); ++i) {
                std::size_t image = wg.apply_root(w, rs.simple_index(i));
                CHECK(wg.reflection(image) == wg.compose(w, wg.compose(wg.generator(i), wg.inverse(w))));
            }
    }
}

TEST_CASE("orbits and dominant representatives") {
    WeylGroup a1(rs_of('A', 1));
    CHECK(a1.orbit(WeightVec(2)).size() == 1);
    const RootSystem& r1 = a1.root_system();
    auto orb = a1.orbit(r1.from_labels(DynkinLabels({2})));
    std::set<DynkinLabels> labels;
    for (const auto& x : orb) labels.insert(r1.to_labels(x));
    CHECK(labels == std::set<DynkinLabels>{DynkinLabels({2}), DynkinLabels({-2})});
    auto [dom1, w1] = a1.dominant_representative(r1.from_labels(DynkinLabels({-2})));
    CHECK(r1.to_labels(dom1) == DynkinLabels({2}));
    CHECK(a1.sign(w1) == -1);

    WeylGroup a2(rs_of('A', 2));
    const RootSystem& r2 = a2.root_system();
    CHECK(a2.orbit(r2.delta()).size() == 6);
    auto [dom, w] = a2.dominant_representative(-r2.delta());
    CHECK(dom == r2.delta());
    CHECK(a2.apply(w, -r2.delta()) == r2.delta());
    CHECK(a2.element(w).length == 3);
    CHECK(a2.sign(w) == -1);
    auto [same, id] = a2.dominant_representative(r2.delta());
    CHECK(same == r2.delta());
    CHECK(id == a2.identity());

    WeylGroup b3(rs_of('B', 3));
    const RootSystem& r3 = b3.root_system();
    for (int trial = 0; trial < 50; ++trial) {
        WeightVec x = r3.from_labels(DynkinLabels({testing::uniform(-4, 4), testing::uniform(-4, 4), testing::uniform(-4, 4)}));
        auto o = b3.orbit(x);
        CHECK(b3.order() % o.size() == 0);
        int dominant = 0;
        for (const auto& y : o) dominant += r3.to_labels(y).is_dominant() ? 1 : 0;
        CHECK(dominant == 1);
        CHECK(r3.to_labels(b3.dominant_representative(x).first).is_dominant());
    }
}

TEST_CASE("stabilizers and coset representatives") {
    WeylGroup a2(rs_of('A', 2));
    const RootSystem& rs = a2.root_system();
    std::vector<std::size_t> all(a2.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    CHECK(a2.setwise_stabilizer({}).size() == 6);
    std::vector<std::size_t> sigma(rs.num_roots());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
    CHECK(a2.setwise_stabilizer(sigma).size() == 6);
    std::vector<std::size_t> a1 = {rs.simple_index(0), rs.negation(rs.simple_index(0))};
    std::sort(a1.begin(), a1.end());
    auto stab = a2.setwise_stabilizer(a1);
    CHECK(stab.size() == 2);
    CHECK(std::find(stab.begin(), stab.end(), a2.generator(0)) != stab.end());

    CHECK(a2.coset_representatives(all) == std::vector<std::size_t>{a2.identity()});
    CHECK(a2.coset_representatives({a2.identity()}).size() == 6);
    auto reps = a2.coset_representatives(stab);
    CHECK(reps.size() == 3);
    CHECK(reps.front() == a2.identity());
    // Pairwise in distinct right cosets H w.
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            std::size_t q = a2.compose(reps[i], a2.inverse(reps[j]));
            CHECK(std::find(stab.begin(), stab.end(), q) == stab.end());
        }
    CHECK_THROWS_AS(a2.coset_representatives({a2.identity(), a2.generator(0), a2.generator(1)}), std::invalid_argument);
}
