#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbzhu/verify.hpp"

namespace py = pybind11;
using namespace fbz;

PYBIND11_MODULE(_fbzhu, m) {
    m.doc() = "exact level-n Zhu algebra computations for the rank-one free boson";

    m.def("parse", [](const std::string& s) { return print_element(parse_element(s)); });

    m.def("basis", [](int N) {
        std::vector<std::string> out;
        for (int id : basis_ids_of_weight(N)) out.push_back(mono_str(id));
        return out;
    });

    m.def("partition_count", &partition_count);

    m.def("mul", [](const std::string& lhs, const std::string& rhs, int level) {
        return print_element(star_n(parse_element(lhs), parse_element(rhs), level));
    }, py::arg("lhs"), py::arg("rhs"), py::arg("level") = 2);

    m.def("circ", [](const std::string& lhs, const std::string& rhs, int level) {
        return print_element(circ_n(parse_element(lhs), parse_element(rhs), level));
    }, py::arg("lhs"), py::arg("rhs"), py::arg("level") = 2);

    m.def("member", [](const std::string& elem, int level, int max_weight) {
        FockVec v = parse_element(elem);
        int M = max_weight > 0 ? max_weight : v.top_weight() + 2 * level + 2;
        MembershipOutcome out = membership(v, level, M);
        py::dict d;
        d["proven"] = out.proven;
        d["cutoff"] = out.cutoff;
        if (out.proven) d["certificate"] = certificate_json(out.cert);
        else d["residual"] = out.residual;
        return d;
    }, py::arg("elem"), py::arg("level") = 2, py::arg("max_weight") = -1);

    m.def("reduce", [](const std::string& elem) {
        Reduction r = reduce_level2(parse_element(elem));
        py::dict d;
        d["poly"] = r.poly.str();
        d["certificate"] = certificate_json(r.cert);
        return d;
    });

    m.def("witness", [](const std::string& expr, int level) -> py::object {
        auto w = nonmembership_witness(parse_genpoly(expr), level);
        if (!w) return py::none();
        return py::str(w->text);
    }, py::arg("expr"), py::arg("level") = 2);

    m.def("normal_form", [](const std::string& expr) {
        return normal_form(parse_genpoly(expr)).str();
    });

    m.def("a2_mul", [](const std::string& p, const std::string& q) {
        return multiply_in_A2(parse_genpoly(p), parse_genpoly(q)).str();
    });

    m.def("structure_map", [](const std::string& p) {
        return a2_structure_map(normal_form(parse_genpoly(p))).str();
    });

    m.def("verify", [](const std::string& id, int budget) {
        Budget b;
        b.ceiling = budget;
        EntryResult r = verify(id, b);
        py::dict d;
        d["id"] = r.id;
        d["status"] = status_str(r.status);
        d["cutoff"] = r.cutoff;
        d["detail"] = r.detail;
        return d;
    }, py::arg("id"), py::arg("budget") = 64);

    m.def("verify_all", [](int budget, const std::string& only) {
        Budget b;
        b.ceiling = budget;
        return report_json(verify_all(b, only));
    }, py::arg("budget") = 64, py::arg("only") = "");

    m.def("registry_ids", [] {
        std::vector<std::string> out;
        for (auto& e : registry_list()) out.push_back(e.id);
        return out;
    });

    m.def("conjecture_probe", [](int n, int M) { return probe_json(conjecture_probe(n, M)); });
}
