#include "dgv/catalog.hpp"
#include "dgv/dec_wbar.hpp"
#include "dgv/dg_homotopy.hpp"
#include "dgv/dg_io.hpp"
#include "dgv/double_nerve.hpp"
#include "dgv/formula.hpp"
#include "dgv/reflection.hpp"
#include "dgv/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dgv;

namespace {

py::dict group_dict(const GroupTable& t) {
    py::dict d;
    d["elements"] = t.elements;
    d["op"] = t.op;
    d["identity"] = t.elements[t.identity];
    return d;
}

}  // namespace

PYBIND11_MODULE(_dgv, m) {
    m.doc() = "double groupoid and (bi)simplicial verification engine";

    py::class_<DoubleGroupoid>(m, "DoubleGroupoid")
        .def_property_readonly("n_objects", &DoubleGroupoid::n_obj)
        .def_property_readonly("n_hmors", &DoubleGroupoid::n_h)
        .def_property_readonly("n_vmors", &DoubleGroupoid::n_v)
        .def_property_readonly("n_squares", &DoubleGroupoid::n_sq)
        .def("to_json", &dg_to_json)
        .def("__repr__", [](const DoubleGroupoid& g) {
            return "<DoubleGroupoid objects=" + std::to_string(g.n_obj()) +
                   " squares=" + std::to_string(g.n_sq()) + ">";
        });

    m.def("build", &build_catalog, py::arg("expr"),
          "build a catalog structure, e.g. build('deloop Z3')");
    m.def("from_json", &dg_from_json);

    m.def("validate", [](const DoubleGroupoid& g) {
        ValidationReport rep = validate_axioms(g);
        py::dict d;
        d["ok"] = rep.ok();
        d["is_groupoid"] = rep.is_groupoid;
        py::list v;
        for (const auto& viol : rep.violations) {
            py::dict e;
            e["law"] = viol.law;
            e["witness"] = viol.witness;
            v.append(e);
        }
        d["violations"] = v;
        return d;
    });

    m.def("filling", [](const DoubleGroupoid& g) {
        FillingReport rep = check_filling(g);
        py::dict d;
        d["ok"] = rep.ok;
        d["variants_agree"] = check_filling_variants(g) == rep.ok;
        return d;
    });

    m.def("pi", [](const DoubleGroupoid& g, int base) {
        py::dict d;
        d["pi0_classes"] = pi0(g).size();
        d["pi1"] = group_dict(pi1(g, base).table);
        d["pi2"] = group_dict(pi2(g, base).table);
        return d;
    }, py::arg("g"), py::arg("base") = 0);

    m.def("theorem_51", [](const DoubleGroupoid& g) {
        TriReport rep = theorem_51_suite(g);
        py::dict d;
        d["i"] = rep.i;
        d["ii"] = rep.ii;
        d["iii"] = rep.iii;
        d["agree"] = rep.agree();
        return d;
    });

    m.def("theorem_53", [](const DoubleGroupoid& g) { return theorem_53_suite(g).ok; });

    m.def("theorem_63", [](const DoubleGroupoid& g) {
        RoundTripReport rep = theorem_63_suite(g);
        py::dict d;
        d["iso"] = rep.iso_ok;
        d["epsilon_identity"] = rep.epsilon_identity;
        d["pp_epsilon_identity"] = rep.pp_epsilon_identity;
        return d;
    });

    m.def("reflect_dec_nerve", [](const std::string& group) {
        auto L = std::make_shared<NerveView>(group_as_category(parse_group(group)), 10);
        auto K = std::make_shared<DecView>(L, 4, 4);
        Certification cert = certify(K, 3, 3);
        if (!cert.valid()) throw std::runtime_error("not certifiable: " + cert.describe());
        return pp(cert).g;
    }, py::arg("group"), "PP(Dec(nerve Gamma)) as a double groupoid");

    m.def("verify_theorems", []() {
        TheoremsRun run = verify_theorems();
        py::list items;
        for (const auto& it : run.items) {
            py::dict d;
            d["suite"] = it.suite;
            d["subject"] = it.subject;
            d["pass"] = it.pass;
            d["detail"] = it.detail;
            items.append(d);
        }
        py::dict out;
        out["ok"] = run.ok();
        out["items"] = items;
        return out;
    });

    m.def("verify_formulas", [](const std::vector<int>& grids, const std::string& only) {
        py::list items;
        bool ok = true;
        for (const auto& entry : formula_catalog()) {
            if (!only.empty() && entry.name != only) continue;
            AuditReport rep = audit_entry(entry, grids);
            ok = ok && rep.ok();
            py::dict d;
            d["name"] = rep.name;
            d["coverage"] = rep.coverage;
            d["consistency"] = rep.consistency;
            d["boundary"] = rep.boundary;
            d["barycentric"] = rep.barycentric;
            items.append(d);
        }
        py::dict out;
        out["ok"] = ok;
        out["reports"] = items;
        return out;
    }, py::arg("grids") = std::vector<int>{16, 17}, py::arg("only") = std::string());
}
