#include "reftype/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace reftype {

using Json = nlohmann::ordered_json;

namespace {

Json group_json(const GroupInfo& g) {
    return Json{{"family", std::string(1, family_char(g.type.family))},
                {"rank", g.type.rank},
                {"kernel", g.kernel}};
}

GroupInfo group_from(const Json& j) {
    GroupInfo g;
    g.type.family = parse_family(j.at("family").get<std::string>());
    g.type.rank = j.at("rank").get<int>();
    g.kernel = j.at("kernel").get<std::string>();
    return g;
}

Json labels_json(const DynkinLabels& l) { return Json(l.labels); }

DynkinLabels labels_from(const Json& j) { return DynkinLabels(j.get<std::vector<int>>()); }

Rational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

std::string csv_labels(const DynkinLabels& l) {
    std::string s = l.to_string();
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

Rational lookup(const std::map<DynkinLabels, Rational>& m, const DynkinLabels& key) {
    auto it = m.find(key);
    return it == m.end() ? Rational(0) : it->second;
}

// Simple fixed-width table: first column left aligned, the others right aligned.
std::string render_columns(const std::vector<std::vector<std::string>>& cells) {
    if (cells.empty()) return {};
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i == 0)
                out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
            else
                out << "  " << std::right << std::setw(static_cast<int>(width[i])) << row[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string group_heading(const GroupInfo& g) { return g.type.name() + " (kernel " + g.kernel + ")"; }

}  // namespace

TableReport make_coeff_report(const GroupInfo& g, const CoeffTable& c, const DCoeffTable& d) {
    TableReport r{"coeffs", g, c.class_label, {}};
    for (const auto& [lambda, value] : c.entries) r.rows.push_back({lambda, value, lookup(d.entries, lambda)});
    return r;
}

TableReport make_dcoeff_report(const GroupInfo& g, const CoeffTable& c, const DCoeffTable& d) {
    TableReport r{"dcoeffs", g, d.class_label, {}};
    for (const auto& [mu, value] : d.entries) r.rows.push_back({mu, lookup(c.entries, mu), value});
    return r;
}

std::string to_json(const TableReport& r) {
    Json entries = Json::array();
    for (const auto& row : r.rows)
        entries.push_back(
            {{"lambda", labels_json(row.lambda)}, {"c_over_n", to_string(row.c_over_n)}, {"d", to_string(row.d)}});
    Json doc{{"kind", r.kind}, {"group", group_json(r.group)}, {"class", r.class_label}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

TableReport parse_table_report(const std::string& json_text) {
    Json doc = parse_document(json_text);
    TableReport r;
    try {
        r.kind = doc.value("kind", std::string("coeffs"));
        r.group = group_from(doc.at("group"));
        r.class_label = doc.at("class").get<std::string>();
        for (const auto& e : doc.at("entries"))
            r.rows.push_back({labels_from(e.at("lambda")), rational_from(e.at("c_over_n")), rational_from(e.at("d"))});
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("unexpected table document: ") + e.what());
    }
    return r;
}

std::string to_csv(const TableReport& r) {
    const bool coeffs = r.kind == "coeffs";
    std::ostringstream out;
    out << (coeffs ? "lambda,c_over_n\n" : "lambda,d\n");
    for (const auto& row : r.rows)
        out << csv_labels(row.lambda) << ',' << to_string(coeffs ? row.c_over_n : row.d) << '\n';
    return out.str();
}

std::string to_text(const TableReport& r) {
    std::vector<std::vector<std::string>> cells{{"lambda", "C/N", "D"}};
    for (const auto& row : r.rows) cells.push_back({row.lambda.to_string(), to_string(row.c_over_n), to_string(row.d)});
    return group_heading(r.group) + ", class " + r.class_label + "\n" + render_columns(cells);
}

KBlockReport make_kblock_report(const RootSystem& rs, const GroupInfo& g, const KBlock& block,
                                std::optional<double> hbar) {
    KBlockReport r;
    r.group = g;
    r.class_label = block.class_label;
    r.cutoff = block.cutoff;
    r.hbar = hbar;
    r.rows = block.rows;
    r.possibly_incomplete.assign(block.possibly_incomplete.begin(), block.possibly_incomplete.end());
    std::optional<HbarConfig> cfg;
    if (hbar) cfg = HbarConfig{*hbar, 0};
    for (const auto& [key, value] : block.entries) {
        KBlockEntry e{key.first, key.second, value, std::nullopt, std::nullopt};
        if (cfg) {
            NormRatio nr = norm_ratio(rs, *cfg, key.first, key.second);
            e.exponent = nr.exponent;
            e.scaled = value.to_double() * nr.value;
        }
        r.entries.push_back(std::move(e));
    }
    std::stable_sort(r.entries.begin(), r.entries.end(), [](const KBlockEntry& a, const KBlockEntry& b) {
        return std::tie(a.lambda, a.lambda_prime) < std::tie(b.lambda, b.lambda_prime);
    });
    return r;
}

std::string to_json(const KBlockReport& r) {
    Json rows = Json::array();
    for (const auto& l : r.rows) rows.push_back(labels_json(l));
    Json incomplete = Json::array();
    for (const auto& l : r.possibly_incomplete) incomplete.push_back(labels_json(l));
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json item{{"lambda", labels_json(e.lambda)}, {"lambda_prime", labels_json(e.lambda_prime)},
                  {"k", to_string(e.value)}};
        if (e.exponent) item["exponent"] = to_string(*e.exponent);
        if (e.scaled) item["scaled"] = *e.scaled;
        entries.push_back(std::move(item));
    }
    Json doc{{"kind", "kblock"}, {"group", group_json(r.group)}, {"class", r.class_label},
             {"cutoff", to_string(r.cutoff)}};
    if (r.hbar) doc["hbar"] = *r.hbar;
    doc["rows"] = rows;
    doc["possibly_incomplete"] = incomplete;
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

KBlockReport parse_kblock_report(const std::string& json_text) {
    Json doc = parse_document(json_text);
    KBlockReport r;
    try {
        r.group = group_from(doc.at("group"));
        r.class_label = doc.at("class").get<std::string>();
        r.cutoff = rational_from(doc.at("cutoff"));
        if (doc.contains("hbar")) r.hbar = doc.at("hbar").get<double>();
        for (const auto& l : doc.at("rows")) r.rows.push_back(labels_from(l));
        for (const auto& l : doc.at("possibly_incomplete")) r.possibly_incomplete.push_back(labels_from(l));
        for (const auto& e : doc.at("entries")) {
            KBlockEntry item{labels_from(e.at("lambda_prime")), labels_from(e.at("lambda")), rational_from(e.at("k")),
                             std::nullopt, std::nullopt};
            if (e.contains("exponent")) item.exponent = rational_from(e.at("exponent"));
            if (e.contains("scaled")) item.scaled = e.at("scaled").get<double>();
            r.entries.push_back(std::move(item));
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("unexpected kblock document: ") + e.what());
    }
    return r;
}

std::string to_csv(const KBlockReport& r) {
    std::ostringstream out;
    out << "lambda,lambda_prime,k,possibly_incomplete";
    if (r.hbar) out << ",exponent,scaled";
    out << '\n';
    out << std::setprecision(17);
    for (const auto& e : r.entries) {
        bool inc = std::binary_search(r.possibly_incomplete.begin(), r.possibly_incomplete.end(), e.lambda);
        out << csv_labels(e.lambda) << ',' << csv_labels(e.lambda_prime) << ',' << to_string(e.value) << ','
            << (inc ? 1 : 0);
        if (r.hbar) out << ',' << (e.exponent ? to_string(*e.exponent) : "") << ',' << (e.scaled ? *e.scaled : 0.0);
        out << '\n';
    }
    return out.str();
}

std::string to_text(const KBlockReport& r) {
    std::ostringstream head;
    head << group_heading(r.group) << ", class " << r.class_label << ", cutoff " << to_string(r.cutoff);
    if (r.hbar) head << ", hbar " << *r.hbar;
    head << '\n';
    std::vector<std::vector<std::string>> cells{{"lambda", "lambda'", "K"}};
    if (r.hbar) cells.front().push_back("scaled");
    for (const auto& e : r.entries) {
        bool inc = std::binary_search(r.possibly_incomplete.begin(), r.possibly_incomplete.end(), e.lambda);
        std::vector<std::string> row{e.lambda.to_string() + (inc ? "*" : ""), e.lambda_prime.to_string(),
                                     to_string(e.value)};
        if (r.hbar) {
            std::ostringstream s;
            s << std::setprecision(10) << (e.scaled ? *e.scaled : 0.0);
            row.push_back(s.str());
        }
        cells.push_back(std::move(row));
    }
    std::string text = head.str() + render_columns(cells);
    if (!r.possibly_incomplete.empty()) text += "* row may extend beyond the cutoff\n";
    return text;
}

ClassListReport make_class_list(const GroupInfo& g, const std::vector<SubsystemClass>& classes) {
    ClassListReport r{g, {}};
    for (const auto& c : classes) r.classes.push_back({c.label, c.representative.size(), c.closed(), c.is_full});
    return r;
}

std::string to_json(const ClassListReport& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"label", c.label}, {"cardinality", c.cardinality}, {"closed", c.closed}, {"full", c.full}});
    Json doc{{"kind", "subsystems"}, {"group", group_json(r.group)}, {"classes", classes}};
    return doc.dump(2) + "\n";
}

ClassListReport parse_class_list(const std::string& json_text) {
    Json doc = parse_document(json_text);
    ClassListReport r;
    try {
        r.group = group_from(doc.at("group"));
        for (const auto& c : doc.at("classes"))
            r.classes.push_back({c.at("label").get<std::string>(), c.at("cardinality").get<std::size_t>(),
                                 c.at("closed").get<bool>(), c.at("full").get<bool>()});
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("unexpected class list document: ") + e.what());
    }
    return r;
}

std::string to_csv(const ClassListReport& r) {
    std::ostringstream out;
    out << "label,cardinality,closed\n";
    for (const auto& c : r.classes) out << c.label << ',' << c.cardinality << ',' << (c.closed ? 1 : 0) << '\n';
    return out.str();
}

std::string to_text(const ClassListReport& r) {
    std::vector<std::vector<std::string>> cells{{"class", "roots", "closed"}};
    for (const auto& c : r.classes)
        cells.push_back({c.label, std::to_string(c.cardinality), c.closed ? "yes" : "no"});
    return group_heading(r.group) + ": " + std::to_string(r.classes.size()) + " classes\n" + render_columns(cells);
}

std::string verify_summary(const std::vector<GroupReport>& reports) {
    std::ostringstream out;
    std::size_t cells = 0, bad = 0;
    for (const auto& g : reports) {
        cells += g.cells_checked;
        bad += g.mismatches.size();
        out << g.group << ": " << g.cells_checked << " cells, " << g.mismatches.size() << " mismatches";
        bool identity = true;
        for (std::size_t i = 0; i < g.label_permutation.size(); ++i)
            if (g.label_permutation[i] != static_cast<int>(i)) identity = false;
        if (g.permutation_searched) {
            out << ", node labeling ";
            for (int p : g.label_permutation) out << p + 1;
            if (identity) out << " (identity)";
        } else if (!identity) {
            out << ", node labeling ";
            for (int p : g.label_permutation) out << p + 1;
        }
        out << '\n';
        for (const auto& m : g.mismatches)
            out << "  mismatch " << m.group << " class " << m.class_label << " lambda " << m.lambda << " " << m.column
                << ": expected " << m.expected << ", got " << m.got << '\n';
    }
    out << "total: " << reports.size() << " groups, " << cells << " cells, " << bad << " mismatches\n";
    return out.str();
}

}  // namespace reftype
