#pragma once

#include "reftype/weyl.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reftype {

struct RootSubsystem {
    std::vector<std::size_t> root_indices;  // sorted
    bool closed = true;
    std::string label;

    std::size_t size() const { return root_indices.size(); }
};

/// One simple factor of a subsystem, e.g. {'B', 2}.
struct Factor {
    char kind;
    int size;
    bool operator==(const Factor&) const = default;
};

struct SubsystemClass {
    std::string label;
    std::vector<Factor> factors;
    std::vector<WeightVec> base;
    RootSubsystem representative;
    std::vector<std::size_t> canonical_key;
    bool is_full = false;

    bool closed() const { return representative.closed; }
};

struct ClassPoset {
    std::vector<SubsystemClass> classes;
    std::vector<std::vector<bool>> leq;  // leq[a][b] iff class a <= class b
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // (lower, upper) covering pairs
};

/// Smallest set containing base (and its negatives) stable under the
/// reflections of its own elements.
RootSubsystem span_subsystem(const RootSystem& rs, const std::vector<WeightVec>& base);

/// Reflection invariance test for an arbitrary set of root indices.
bool is_root_subsystem(const RootSystem& rs, const std::vector<std::size_t>& roots);
bool is_closed(const RootSystem& rs, const std::vector<std::size_t>& roots);

std::vector<std::size_t> canonical_key(const WeylGroup& wg, const std::vector<std::size_t>& roots);

/// Witness w with w(g1) = g2, if any.
std::optional<std::size_t> are_conjugate(const WeylGroup& wg, const std::vector<std::size_t>& g1,
                                         const std::vector<std::size_t>& g2);

/// Label from factors: A-factors, then D-factors, then B/C-factors, each by size.
std::string factor_label(std::vector<Factor> factors);
/// Normalises user input such as "B1+A1", "A1⊕B1" or "full".
std::string normalize_class_label(const std::string& text, const LieType& t);

/// One class per admissible tuple of the classical-series classification,
/// ordered by (cardinality, label). The full system is included.
std::vector<SubsystemClass> enumerate_classes(const WeylGroup& wg);

const SubsystemClass& find_class(const std::vector<SubsystemClass>& classes, const std::string& label,
                                 const LieType& t);

bool class_leq(const WeylGroup& wg, const SubsystemClass& r1, const SubsystemClass& r2);

ClassPoset build_poset(const WeylGroup& wg, std::vector<SubsystemClass> classes);

/// Graphviz rendering of the covering relation. Closed classes are filled.
std::string to_dot(const ClassPoset& poset, const std::string& title);

}  // namespace reftype
