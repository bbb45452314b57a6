#pragma once

#include "reftype/costrat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reftype {

/// One transcribed table: for each row lambda, a (C/N, D) pair per class.
/// Empty cells are std::nullopt and compare equal to zero.
struct GoldenGroup {
    std::string name;  // e.g. "Spin(8)"
    LieType type;
    std::vector<std::string> classes;  // labels as written in the table
    struct Row {
        DynkinLabels lambda;
        std::vector<std::optional<std::int64_t>> cells;  // 2 * classes.size()
    };
    std::vector<Row> rows;
};

/// Parses the plain-text table format of data/golden/*.tbl.
GoldenGroup parse_golden(const std::string& text, const std::string& origin);
GoldenGroup load_golden_file(const std::string& path);
/// All *.tbl files of a directory, sorted by file name.
std::vector<GoldenGroup> load_corpus(const std::string& dir);

struct Mismatch {
    std::string group;
    std::string class_label;
    std::string lambda;  // as written in the corpus
    std::string column;  // "C/N" or "D"
    std::string expected;
    std::string got;
};

struct GroupReport {
    std::string group;
    std::size_t cells_checked = 0;
    /// Position map used to read corpus labels: ours[perm[i]] = corpus[i].
    std::vector<int> label_permutation;
    bool permutation_searched = false;  // true when several labelings were tried (D4)
    std::vector<Mismatch> mismatches;
};

/// Recomputes every class of the table and compares cell by cell. Rows of the
/// computation that are nonzero but absent from the table are mismatches too.
/// For D4 the three outer nodes are matched first on the trivial class column.
GroupReport verify_group(const GoldenGroup& golden);

}  // namespace reftype
