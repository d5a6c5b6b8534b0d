#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planarlam/bijection.hpp"
#include "planarlam/counting.hpp"
#include "planarlam/dot.hpp"
#include "planarlam/enumerate.hpp"
#include "planarlam/map_io.hpp"
#include "planarlam/term_io.hpp"

namespace py = pybind11;
using namespace planarlam;

namespace {

// exact integers cross the boundary as Python ints via their decimal form
py::int_ to_py(const mpz_class& v) {
    std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

LinearTerm parsed_npt(const std::string& text) {
    LinearTerm t = parse_term(text);
    require_npt(t);
    return t;
}

}  // namespace

PYBIND11_MODULE(planarlam, m) {
    m.doc() = "rooted planar maps and normal planar lambda terms";

    m.def("canonical_term", [](const std::string& text) {
        return print_term(parse_term(text));
    }, "parse a term and print its canonical form");

    m.def("is_planar", [](const std::string& text) {
        return is_planar(parse_term(text));
    });

    m.def("alpha_equal", [](const std::string& a, const std::string& b) {
        return alpha_equal(parse_term(a), parse_term(b));
    });

    m.def("term_size", [](const std::string& text) {
        LinearTerm t = parse_term(text);
        auto c = color(t, ColorKind::Normal);
        if (!c) throw std::invalid_argument("term is not normal");
        return (*c)->size();
    }, "size of a normal term (leaf count)");

    m.def("handle_count", [](const std::string& text) {
        LinearTerm t = parsed_npt(text);
        return static_cast<int>(
            outer_neutral_handles(t, *color(t, ColorKind::Normal)).size());
    });

    m.def("enumerate_terms", [](int size, int degree) {
        std::vector<std::string> out;
        for (const auto& [t, c] : enumerate_npt(size, degree))
            out.push_back(print_term(t));
        return out;
    });

    m.def("count_normal", [](int n, int i) {
        return to_py(count_tables(n, i).normal(n, i));
    });
    m.def("count_neutral", [](int n, int i) {
        return to_py(count_tables(n, i).neutral(n, i));
    });
    m.def("tutte_count", [](int n) { return to_py(tutte_count(n)); });
    m.def("series_coefficients", [](int max_n) {
        py::list out;
        for (const auto& v : closed_form_r0(max_n)) out.append(to_py(v));
        return out;
    }, "closed-form coefficients z^1..z^max_n");

    m.def("compose_fun_open", [](const std::string& a, const std::string& b) {
        return print_term(compose_fun_open(parsed_npt(a), parsed_npt(b)));
    });
    m.def("decompose_fun_open", [](const std::string& t) {
        auto [a, b] = decompose_fun_open(parsed_npt(t));
        return py::make_tuple(print_term(a), print_term(b));
    });
    m.def("compose_val_open", [](const std::string& t, int k) {
        return print_term(compose_val_open(parsed_npt(t), k));
    });
    m.def("decompose_val_open", [](const std::string& t) {
        auto [a, k] = decompose_val_open(parsed_npt(t));
        return py::make_tuple(print_term(a), k);
    });

    m.def("term_to_map", [](const std::string& text) {
        LinearTerm t = parsed_npt(text);
        return print_map(term_to_map(t, *color(t, ColorKind::Normal)));
    }, "map file text for a normal planar term with one free variable");
    m.def("map_to_term", [](const std::string& map_text) {
        return print_term(map_to_term(parse_map(map_text)).first);
    });

    m.def("verify_bijection", [](int max_size) {
        BijectionReport r = verify_bijection(max_size);
        return py::make_tuple(r.ok, r.terms_checked, r.maps_checked, r.failures);
    });

    m.def("render_term_dot", [](const std::string& text) {
        LinearTerm t = parse_term(text);
        auto c = color(t, ColorKind::Normal);
        if (!c) throw std::invalid_argument("term is not normal");
        return emit_dot_diagram(t, *c);
    });
    m.def("render_map_dot", [](const std::string& map_text) {
        return emit_dot_map(parse_map(map_text));
    });
}
