#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "seqalg/checks.hpp"
#include "seqalg/cli.hpp"
#include "seqalg/eval.hpp"
#include "seqalg/registry.hpp"

namespace py = pybind11;
using namespace seqalg;

namespace {

std::vector<std::string> py_terms(const std::string& expr, std::size_t n,
                                  const std::string& field, bool whole) {
    ExprPtr e = parse(expr);
    std::vector<std::string> out;
    out.reserve(n);
    auto render_seq = [&](const auto& s) {
        if (whole) {
            for (const Integer& v : s.take_whole(n)) out.push_back(v.get_str());
        } else {
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(
                    field_traits<std::decay_t<decltype(s.nth(0))>>::to_string(
                        s.nth(i)));
        }
    };
    if (field == "rational") {
        render_seq(eval_rational(*e));
    } else if (field == "gaussian") {
        render_seq(eval_gaussian(*e));
    } else if (field == "bivariate") {
        Biv s = eval_bivariate(*e);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(field_traits<Poly>::to_string(s.nth(i)));
    } else {
        throw Error(ErrorKind::Domain,
                    "field must be rational, gaussian, or bivariate");
    }
    return out;
}

TriangleMode mode_from_string(const std::string& mode) {
    if (mode == "rows") return TriangleMode::Rows;
    if (mode == "rows-e2o") return TriangleMode::RowsE2o;
    if (mode == "diagonals") return TriangleMode::Diagonals;
    if (mode == "diagonals-e2o") return TriangleMode::DiagonalsE2o;
    throw Error(ErrorKind::Domain,
                "mode must be rows, rows-e2o, diagonals, or diagonals-e2o");
}

std::vector<std::vector<std::string>> py_triangle(const std::string& expr,
                                                  std::size_t from,
                                                  std::size_t to,
                                                  const std::string& mode) {
    if (from > to) throw Error(ErrorKind::Domain, "empty row range");
    ExprPtr e = parse(expr);
    Biv rows = triangle_view(*e, mode_from_string(mode));
    std::vector<std::vector<std::string>> out;
    for (const auto& row : select(rows, spec_range(from, to))) {
        std::vector<std::string> r;
        r.reserve(row.size());
        for (const Rational& v : row) r.push_back(v.str());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::tuple<std::string, bool, std::string>> py_check(
    const std::string& suite) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_check_suite(suite))
        out.emplace_back(r.name, r.passed, r.detail);
    return out;
}

std::tuple<int, std::string, std::string> py_run(
    const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

PYBIND11_MODULE(_seqalg, m) {
    m.doc() = "Exact lazy power-series (sequence algebra) kernel";

    static py::exception<Error> eval_error(m, "EvalError");
    static py::exception<SyntaxError> parse_error(m, "ParseError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SyntaxError& e) {
            parse_error(e.what());
        } catch (const Error& e) {
            eval_error(e.what());
        }
    });

    m.def("terms", &py_terms, py::arg("expr"), py::arg("n") = 10,
          py::arg("field") = "rational", py::arg("whole") = false,
          "First n coefficients of a sequence expression, as exact strings.");
    m.def("triangle", &py_triangle, py::arg("expr"), py::arg("from_") = 1,
          py::arg("to") = 6, py::arg("mode") = "rows",
          "Coefficient triangle of a bivariate expression; row r of the "
          "result holds the first spec[r] entries, spec = [from_..to].");
    m.def(
        "names",
        [] { return registry_names(); },
        "All registry names with their defining expressions.");
    m.def("check", &py_check, py::arg("suite"),
          "Runs a verification suite; returns (name, passed, detail) rows.");
    m.def("run", &py_run, py::arg("args"),
          "Runs the command-line front end; returns (exit_code, out, err).");
}
