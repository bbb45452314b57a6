#include "reftype/cli.hpp"

#include "reftype/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef REFTYPE_DEFAULT_CORPUS
#define REFTYPE_DEFAULT_CORPUS "data/golden"
#endif

namespace reftype::cli {

std::string default_corpus_dir() { return REFTYPE_DEFAULT_CORPUS; }

namespace {

// Everything a subcommand may ask for. Unused fields are simply ignored.
struct Options {
    std::string family;
    int rank = 0;
    std::string class_label;
    std::string kernel = "sc";
    std::string format;
    std::optional<double> hbar;
    std::string cutoff = "8";
    std::string out_path;
    std::string point;
    std::string corpus;
};

struct Context {
    LieType type;
    RootSystem rs;
    WeylGroup wg;
    ExpKernel kernel;
    std::vector<PQRatio> pq;
    std::vector<SubsystemClass> classes;

    explicit Context(const Options& o)
        : type(make_type(o)),
          rs(type),
          wg(rs),
          kernel(load_kernel(o.kernel, rs)),
          pq(pq_map(wg, kernel)),
          classes(enumerate_classes(wg)) {}

    GroupInfo info() const { return GroupInfo{type, kernel.name}; }

    const SubsystemClass& cls(const std::string& label) const {
        if (label.empty()) throw std::invalid_argument("--class is required");
        return find_class(classes, label, type);
    }

    static LieType make_type(const Options& o) {
        if (o.family.empty()) throw std::invalid_argument("--family is required");
        LieType t{parse_family(o.family), o.rank};
        t.validate();
        return t;
    }

    static ExpKernel load_kernel(const std::string& spec, const RootSystem& rs) {
        if (spec == "sc" || spec == "simply-connected" || spec == "so-odd") return kernel_preset(spec, rs);
        return load_kernel_file(spec, rs);
    }
};

std::string require_format(const std::string& given, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
    std::string f = given.empty() ? fallback : given;
    for (const char* a : allowed)
        if (f == a) return f;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw std::invalid_argument("format '" + f + "' is not available here (use " + list + ")");
}

std::string cmd_subsystems(const Options& o) {
    Context ctx(o);
    auto report = make_class_list(ctx.info(), ctx.classes);
    std::string f = require_format(o.format, "text", {"text", "json", "csv"});
    if (f == "json") return to_json(report);
    if (f == "csv") return to_csv(report);
    return to_text(report);
}

std::string cmd_hasse(const Options& o) {
    Context ctx(o);
    ClassPoset poset = build_poset(ctx.wg, ctx.classes);
    std::string f = require_format(o.format, "dot", {"dot", "text", "json"});
    if (f == "dot") return to_dot(poset, ctx.type.name());
    if (f == "json") {
        nlohmann::ordered_json doc;
        doc["kind"] = "hasse";
        doc["group"] = {{"family", std::string(1, family_char(ctx.type.family))},
                        {"rank", ctx.type.rank},
                        {"kernel", ctx.kernel.name}};
        nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
        for (const auto& c : poset.classes) nodes.push_back({{"label", c.label}, {"closed", c.closed()}});
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& [lo, hi] : poset.hasse_edges)
            edges.push_back({poset.classes[lo].label, poset.classes[hi].label});
        doc["classes"] = nodes;
        doc["covers"] = edges;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& [lo, hi] : poset.hasse_edges)
        os << poset.classes[lo].label << " < " << poset.classes[hi].label << '\n';
    return os.str();
}

std::string cmd_coeffs(const Options& o, bool d_table) {
    Context ctx(o);
    const SubsystemClass& cls = ctx.cls(o.class_label);
    CoeffTable c = coeff_table(ctx.wg, cls, ctx.pq);
    DCoeffTable d = d_coeffs(ctx.rs, cls, c);
    TableReport report = d_table ? make_dcoeff_report(ctx.info(), c, d) : make_coeff_report(ctx.info(), c, d);
    std::string f = require_format(o.format, "text", {"text", "json", "csv"});
    if (f == "json") return to_json(report);
    if (f == "csv") return to_csv(report);
    std::string text = to_text(report);
    if (!c.all_integral()) text += "note: some C/N values are not integers\n";
    return text;
}

std::string cmd_kblock(const Options& o) {
    Context ctx(o);
    const SubsystemClass& cls = ctx.cls(o.class_label);
    Rational cutoff = parse_rational(o.cutoff);
    if (o.hbar && !(*o.hbar > 0)) throw std::invalid_argument("--hbar must be positive");
    DCoeffTable d = d_coeffs(ctx.rs, cls, coeff_table(ctx.wg, cls, ctx.pq));
    KBlock block = k_block(ctx.rs, d, cutoff);
    KBlockReport report = make_kblock_report(ctx.rs, ctx.info(), block, o.hbar);
    std::string f = require_format(o.format, "text", {"text", "json", "csv"});
    if (f == "json") return to_json(report);
    if (f == "csv") return to_csv(report);
    return to_text(report);
}

std::string root_coeffs(const RootSystem& rs, std::size_t i) {
    std::string s;
    for (int c : rs.simple_coefficients(i)) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s;
}

std::string cmd_pq(const Options& o) {
    Context ctx(o);
    std::string f = require_format(o.format, "text", {"text", "json", "csv"});
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    std::ostringstream text;
    if (f == "csv") text << "root,length,p,q\n";
    if (f == "text") text << ctx.type.name() << " (kernel " << ctx.kernel.name << ")\n";
    for (std::size_t i = 0; i < ctx.rs.num_positive(); ++i) {
        const PQRatio& r = ctx.pq[i];
        const char* length = ctx.rs.is_long(i) ? "long" : "short";
        const std::string coeffs = root_coeffs(ctx.rs, i);
        if (f == "json")
            roots.push_back({{"root", ctx.rs.simple_coefficients(i)}, {"length", length}, {"p", r.p}, {"q", r.q}});
        else if (f == "csv")
            text << '"' << coeffs << "\"," << length << ',' << r.p << ',' << r.q << '\n';
        else
            text << "  (" << coeffs << ") " << length << "  p/q = " << r.p << '/' << r.q << '\n';
    }
    if (f != "json") return text.str();
    nlohmann::ordered_json doc;
    doc["kind"] = "pq";
    doc["group"] = {{"family", std::string(1, family_char(ctx.type.family))},
                    {"rank", ctx.type.rank},
                    {"kernel", ctx.kernel.name}};
    doc["roots"] = roots;
    return doc.dump(2) + "\n";
}

std::string cmd_gammax(const Options& o) {
    Context ctx(o);
    if (o.point.empty()) throw std::invalid_argument("--point is required");
    TorusPoint x = parse_torus_point(o.point, ctx.type.rank);
    RootSubsystem g = gamma_x(ctx.rs, ctx.pq, x);
    std::string label = "(unlisted)";
    const auto key = canonical_key(ctx.wg, g.root_indices);
    for (const auto& c : ctx.classes)
        if (c.canonical_key == key) label = c.label;

    std::string f = require_format(o.format, "text", {"text", "json"});
    if (f == "json") {
        nlohmann::ordered_json roots = nlohmann::ordered_json::array();
        for (std::size_t i : g.root_indices) roots.push_back(ctx.rs.simple_coefficients(i));
        nlohmann::ordered_json doc;
        doc["kind"] = "gammax";
        doc["group"] = {{"family", std::string(1, family_char(ctx.type.family))},
                        {"rank", ctx.type.rank},
                        {"kernel", ctx.kernel.name}};
        doc["point"] = o.point;
        doc["indices"] = g.root_indices;
        doc["roots"] = roots;
        doc["class"] = label;
        doc["closed"] = g.closed;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "class " << label << (g.closed ? " (closed)" : " (not closed)") << ", " << g.size() << " roots\n";
    os << "indices";
    for (std::size_t i : g.root_indices) os << ' ' << i;
    os << '\n';
    for (std::size_t i : g.root_indices)
        if (ctx.rs.is_positive(i)) os << "  (" << root_coeffs(ctx.rs, i) << ")\n";
    return os.str();
}

std::string cmd_vanishing(const Options& o) {
    Context ctx(o);
    const SubsystemClass& target = ctx.cls(o.class_label);
    ClassPoset poset = build_poset(ctx.wg, ctx.classes);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < poset.classes.size(); ++i)
        if (poset.classes[i].label == target.label) r0 = i;
    auto rows = vanishing_system(ctx.wg, poset, r0, parse_rational(o.cutoff), ctx.pq);
    std::string f = require_format(o.format, "text", {"text", "json"});
    if (f == "json") {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& [lp, v] : r.coefficients) coeffs.push_back({{"lambda_prime", lp.labels}, {"k", to_string(v)}});
            list.push_back({{"class", r.class_label},
                            {"lambda", r.lambda.labels},
                            {"possibly_incomplete", r.possibly_incomplete},
                            {"coefficients", coeffs}});
        }
        nlohmann::ordered_json doc;
        doc["kind"] = "vanishing";
        doc["target"] = target.label;
        doc["cutoff"] = o.cutoff;
        doc["constraints"] = list;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "conditions for class " << target.label << " (truncated at cutoff " << o.cutoff << "): " << rows.size()
       << " rows\n";
    for (const auto& r : rows) {
        os << "[" << r.class_label << "] lambda=" << r.lambda.to_string() << (r.possibly_incomplete ? "*" : "") << ":";
        if (r.coefficients.empty()) os << " (empty)";
        for (const auto& [lp, v] : r.coefficients) os << ' ' << to_string(v) << "*H(" << lp.to_string() << ')';
        os << " = 0\n";
    }
    return os.str();
}

int cmd_verify(const Options& o, std::string& text) {
    std::string dir = o.corpus.empty() ? default_corpus_dir() : o.corpus;
    std::vector<GroupReport> reports;
    for (const auto& g : load_corpus(dir)) reports.push_back(verify_group(g));
    if (reports.empty()) throw std::invalid_argument("corpus directory '" + dir + "' holds no .tbl files");
    text = verify_summary(reports);
    for (const auto& r : reports)
        if (!r.mismatches.empty()) return kMismatch;
    return kOk;
}

void add_group_options(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "Lie family: A, B, C or D")->required();
    sub->add_option("--rank", o.rank, "rank of the root system")->required();
    sub->add_option("--kernel", o.kernel, "kernel of exp: sc, so-odd or a matrix file")->capture_default_str();
    sub->add_option("--format", o.format, "output format: text, json, csv or dot");
    sub->add_option("--out", o.out_path, "write the result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Reflection types, relation coefficients and K-blocks of compact Lie groups", "reftype"};
    app.require_subcommand(1);

    auto* subsystems = app.add_subcommand("subsystems", "list the conjugacy classes of root subsystems");
    add_group_options(subsystems, o);
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the class poset");
    add_group_options(hasse, o);
    auto* coeffs = app.add_subcommand("coeffs", "reduced relation coefficients C/N of a class");
    add_group_options(coeffs, o);
    coeffs->add_option("--class", o.class_label, "class label such as A1+B1, 0 or full")->required();
    auto* dcoeffs = app.add_subcommand("dcoeffs", "reduced D coefficients of a class");
    add_group_options(dcoeffs, o);
    dcoeffs->add_option("--class", o.class_label, "class label")->required();
    auto* kblock = app.add_subcommand("kblock", "normalised K-matrix block inside a norm window");
    add_group_options(kblock, o);
    kblock->add_option("--class", o.class_label, "class label")->required();
    kblock->add_option("--cutoff", o.cutoff, "window radius for |lambda + delta|")->capture_default_str();
    kblock->add_option("--hbar", o.hbar, "also print entries scaled by the norm ratio");
    auto* pq = app.add_subcommand("pq", "p/q ratio of every positive root");
    add_group_options(pq, o);
    auto* gammax = app.add_subcommand("gammax", "roots fixing a torus point");
    add_group_options(gammax, o);
    gammax->add_option("--point", o.point, "point as \"A=a1,...;B=b1,...\"")->required();
    auto* vanishing = app.add_subcommand("vanishing", "truncated linear conditions attached to a class");
    add_group_options(vanishing, o);
    vanishing->add_option("--class", o.class_label, "class label")->required();
    vanishing->add_option("--cutoff", o.cutoff, "window radius")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "recompute the golden tables and report differences");
    verify->add_option("--corpus", o.corpus, "directory of .tbl files")->default_str(default_corpus_dir());
    verify->add_option("--out", o.out_path, "write the report to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_msg, e_msg;
        int code = app.exit(e, o_msg, e_msg);
        out << o_msg.str();
        err << e_msg.str();
        return code == 0 ? kOk : kUsage;
    }

    std::string text;
    int code = kOk;
    try {
        if (*subsystems) text = cmd_subsystems(o);
        else if (*hasse) text = cmd_hasse(o);
        else if (*coeffs) text = cmd_coeffs(o, false);
        else if (*dcoeffs) text = cmd_coeffs(o, true);
        else if (*kblock) text = cmd_kblock(o);
        else if (*pq) text = cmd_pq(o);
        else if (*gammax) text = cmd_gammax(o);
        else if (*vanishing) text = cmd_vanishing(o);
        else if (*verify) code = cmd_verify(o, text);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.out_path << "'\n";
            return kUsage;
        }
        file << text;
    }
    if (code == kMismatch) err << "verification failed\n";
    return code;
}

}  // namespace reftype::cli
