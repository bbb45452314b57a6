#pragma once

// Serialization of computed tables. JSON documents keep every rational as a
// string ("3", "-1/2") so that parsing them back is lossless.

#include "reftype/costrat.hpp"
#include "reftype/golden.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reftype {

struct GroupInfo {
    LieType type;
    std::string kernel = "sc";
    bool operator==(const GroupInfo&) const = default;
};

struct TableRow {
    DynkinLabels lambda;
    Rational c_over_n;
    Rational d;
    bool operator==(const TableRow&) const = default;
};

// kind is "coeffs" (rows over the support of C/N) or "dcoeffs" (rows over the
// support of D, zeros included).
struct TableReport {
    std::string kind;
    GroupInfo group;
    std::string class_label;
    std::vector<TableRow> rows;
    bool operator==(const TableReport&) const = default;
};

TableReport make_coeff_report(const GroupInfo& g, const CoeffTable& c, const DCoeffTable& d);
TableReport make_dcoeff_report(const GroupInfo& g, const CoeffTable& c, const DCoeffTable& d);

std::string to_json(const TableReport& r);
std::string to_csv(const TableReport& r);
std::string to_text(const TableReport& r);
TableReport parse_table_report(const std::string& json_text);

struct KBlockEntry {
    DynkinLabels lambda_prime;
    DynkinLabels lambda;
    Rational value;                  // normalised entry
    std::optional<Rational> exponent;  // norm-ratio exponent, only with hbar
    std::optional<double> scaled;      // value times the norm ratio, only with hbar
    bool operator==(const KBlockEntry&) const = default;
};

struct KBlockReport {
    GroupInfo group;
    std::string class_label;
    Rational cutoff;
    std::optional<double> hbar;
    std::vector<DynkinLabels> rows;
    std::vector<DynkinLabels> possibly_incomplete;
    std::vector<KBlockEntry> entries;  // sorted by (lambda, lambda')
    bool operator==(const KBlockReport&) const = default;
};

KBlockReport make_kblock_report(const RootSystem& rs, const GroupInfo& g, const KBlock& block,
                                std::optional<double> hbar);
std::string to_json(const KBlockReport& r);
std::string to_csv(const KBlockReport& r);
std::string to_text(const KBlockReport& r);
KBlockReport parse_kblock_report(const std::string& json_text);

struct ClassSummary {
    std::string label;
    std::size_t cardinality = 0;
    bool closed = true;
    bool full = false;
    bool operator==(const ClassSummary&) const = default;
};

struct ClassListReport {
    GroupInfo group;
    std::vector<ClassSummary> classes;
    bool operator==(const ClassListReport&) const = default;
};

ClassListReport make_class_list(const GroupInfo& g, const std::vector<SubsystemClass>& classes);
std::string to_json(const ClassListReport& r);
std::string to_csv(const ClassListReport& r);
std::string to_text(const ClassListReport& r);
ClassListReport parse_class_list(const std::string& json_text);

std::string verify_summary(const std::vector<GroupReport>& reports);

}  // namespace reftype
