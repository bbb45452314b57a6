#include "reftype/cli.hpp"
#include "reftype/costrat.hpp"
#include "reftype/golden.hpp"
#include "reftype/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace reftype;

namespace {

// Groups are addressed by (family letter, rank, kernel) from Python.
struct Group {
    WeylGroup wg;
    ExpKernel kernel;
    std::vector<PQRatio> pq;
    std::vector<SubsystemClass> classes;

    Group(const std::string& family, int rank, const std::string& kernel_spec)
        : wg(RootSystem(LieType{parse_family(family), rank})),
          kernel(load(kernel_spec, wg.root_system())),
          pq(pq_map(wg, kernel)),
          classes(enumerate_classes(wg)) {}

    const RootSystem& rs() const { return wg.root_system(); }
    const SubsystemClass& cls(const std::string& label) const { return find_class(classes, label, rs().lie_type()); }

    static ExpKernel load(const std::string& spec, const RootSystem& rs) {
        if (spec == "sc" || spec == "simply-connected" || spec == "so-odd") return kernel_preset(spec, rs);
        return load_kernel_file(spec, rs);
    }
};

py::object fraction(const Rational& r) {
    static py::object frac = py::module_::import("fractions").attr("Fraction");
    return frac(r.numerator(), r.denominator());
}

py::tuple labels(const DynkinLabels& l) { return py::cast(l.labels); }

py::dict rational_map(const std::map<DynkinLabels, Rational>& m) {
    py::dict out;
    for (const auto& [k, v] : m) out[labels(k)] = fraction(v);
    return out;
}

DynkinLabels to_labels(const std::vector<int>& v, const RootSystem& rs) {
    if (static_cast<int>(v.size()) != rs.rank()) throw std::invalid_argument("expected " + std::to_string(rs.rank()) + " labels");
    return DynkinLabels(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reflection types, relation coefficients and K-matrix blocks for classical compact Lie groups.";

    py::register_exception<std::invalid_argument>(m, "ReftypeError", PyExc_ValueError);

    m.def(
        "subsystems",
        [](const std::string& family, int rank) {
            Group g(family, rank, "sc");
            py::list out;
            for (const auto& c : g.classes)
                out.append(py::dict(py::arg("label") = c.label, py::arg("cardinality") = c.representative.size(),
                                    py::arg("closed") = c.closed(), py::arg("full") = c.is_full));
            return out;
        },
        py::arg("family"), py::arg("rank"), "Conjugacy classes of root subsystems, smallest first.");

    m.def(
        "hasse_dot",
        [](const std::string& family, int rank) {
            Group g(family, rank, "sc");
            return to_dot(build_poset(g.wg, g.classes), g.rs().lie_type().name());
        },
        py::arg("family"), py::arg("rank"));

    m.def(
        "coeffs",
        [](const std::string& family, int rank, const std::string& cls, const std::string& kernel) {
            Group g(family, rank, kernel);
            return rational_map(coeff_table(g.wg, g.cls(cls), g.pq).entries);
        },
        py::arg("family"), py::arg("rank"), py::arg("cls"), py::arg("kernel") = "sc",
        "Reduced C/N coefficients keyed by Dynkin label tuples.");

    m.def(
        "dcoeffs",
        [](const std::string& family, int rank, const std::string& cls, const std::string& kernel) {
            Group g(family, rank, kernel);
            const auto& c = g.cls(cls);
            return rational_map(d_coeffs(g.rs(), c, coeff_table(g.wg, c, g.pq)).entries);
        },
        py::arg("family"), py::arg("rank"), py::arg("cls"), py::arg("kernel") = "sc");

    m.def(
        "reduction_factor",
        [](const std::string& family, int rank, const std::string& cls) {
            Group g(family, rank, "sc");
            return coeff_table(g.wg, g.cls(cls), g.pq).reduction_factor;
        },
        py::arg("family"), py::arg("rank"), py::arg("cls"));

    m.def(
        "kblock",
        [](const std::string& family, int rank, const std::string& cls, const std::string& cutoff,
           const std::string& kernel) {
            Group g(family, rank, kernel);
            const auto& c = g.cls(cls);
            KBlock b = k_block(g.rs(), d_coeffs(g.rs(), c, coeff_table(g.wg, c, g.pq)), parse_rational(cutoff));
            py::dict entries;
            for (const auto& [key, v] : b.entries) entries[py::make_tuple(labels(key.first), labels(key.second))] = fraction(v);
            py::list rows, incomplete;
            for (const auto& r : b.rows) rows.append(labels(r));
            for (const auto& r : b.possibly_incomplete) incomplete.append(labels(r));
            return py::dict(py::arg("rows") = rows, py::arg("entries") = entries,
                            py::arg("possibly_incomplete") = incomplete);
        },
        py::arg("family"), py::arg("rank"), py::arg("cls"), py::arg("cutoff") = "8", py::arg("kernel") = "sc",
        "Normalised K entries keyed by (lambda', lambda).");

    m.def(
        "pq",
        [](const std::string& family, int rank, const std::string& kernel) {
            Group g(family, rank, kernel);
            py::list out;
            for (std::size_t i = 0; i < g.rs().num_positive(); ++i)
                out.append(py::make_tuple(py::cast(g.rs().simple_coefficients(i)), g.pq[i].p, g.pq[i].q));
            return out;
        },
        py::arg("family"), py::arg("rank"), py::arg("kernel") = "sc",
        "(simple-root coefficients, p, q) for each positive root.");

    m.def(
        "gamma_x",
        [](const std::string& family, int rank, const std::string& point, const std::string& kernel) {
            Group g(family, rank, kernel);
            RootSubsystem s = gamma_x(g.rs(), g.pq, parse_torus_point(point, rank));
            auto key = canonical_key(g.wg, s.root_indices);
            std::string label = "(unlisted)";
            for (const auto& c : g.classes)
                if (c.canonical_key == key) label = c.label;
            py::list roots;
            for (std::size_t r : s.root_indices) roots.append(py::cast(g.rs().simple_coefficients(r)));
            return py::dict(py::arg("label") = label, py::arg("closed") = s.closed, py::arg("roots") = roots);
        },
        py::arg("family"), py::arg("rank"), py::arg("point"), py::arg("kernel") = "sc");

    m.def(
        "weyl_dim",
        [](const std::string& family, int rank, const std::vector<int>& lambda) {
            RootSystem rs(LieType{parse_family(family), rank});
            return weyl_dim(rs, to_labels(lambda, rs));
        },
        py::arg("family"), py::arg("rank"), py::arg("labels"));

    m.def(
        "weight_system",
        [](const std::string& family, int rank, const std::vector<int>& lambda) {
            RootSystem rs(LieType{parse_family(family), rank});
            py::dict out;
            for (const auto& [mu, mult] : dominant_weight_system(rs, to_labels(lambda, rs)).dominant_entries)
                out[labels(mu)] = mult;
            return out;
        },
        py::arg("family"), py::arg("rank"), py::arg("labels"), "Dominant weights with multiplicities.");

    m.def(
        "tensor_coeff",
        [](const std::string& family, int rank, const std::vector<int>& a, const std::vector<int>& b,
           const std::vector<int>& c) {
            RootSystem rs(LieType{parse_family(family), rank});
            return tensor_coeff(rs, to_labels(a, rs), to_labels(b, rs), to_labels(c, rs));
        },
        py::arg("family"), py::arg("rank"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "verify",
        [](const std::string& corpus) {
            py::list out;
            for (const auto& golden : load_corpus(corpus.empty() ? cli::default_corpus_dir() : corpus)) {
                GroupReport r = verify_group(golden);
                out.append(py::dict(py::arg("group") = r.group, py::arg("cells") = r.cells_checked,
                                    py::arg("mismatches") = r.mismatches.size()));
            }
            return out;
        },
        py::arg("corpus") = "", "Recompute every table of the golden corpus.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in-process; returns (exit code, stdout, stderr).");
}
