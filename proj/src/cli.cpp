#include "seqalg/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

#include "seqalg/checks.hpp"
#include "seqalg/eval.hpp"
#include "seqalg/registry.hpp"

namespace seqalg {

namespace {

struct Options {
    std::string command;
    std::string expr;
    std::string suite;
    std::size_t n = 10;
    std::size_t spec_from = 1, spec_to = 6;
    bool whole = false;
    bool biv = false;
    bool gaussian = false;
    enum class TriMode { Plain, E2o, Diag, DiagE2o } tri = TriMode::Plain;
};

std::size_t parse_count(const std::string& s, const char* flag) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (...) {
        pos = 0;
    }
    if (pos != s.size())
        throw Error(ErrorKind::Domain,
                    std::string(flag) + " expects a non-negative integer");
    return static_cast<std::size_t>(v);
}

void parse_spec_range(const std::string& s, Options& o) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw Error(ErrorKind::Domain, "--spec expects the form a..b");
    o.spec_from = parse_count(s.substr(0, dots), "--spec");
    o.spec_to = parse_count(s.substr(dots + 2), "--spec");
    if (o.spec_from > o.spec_to)
        throw Error(ErrorKind::Domain, "--spec range is empty");
}

Options parse_args(const std::vector<std::string>& args) {
    if (args.empty())
        throw Error(ErrorKind::Domain,
                    "usage: seqalg {terms|triangle|names|check} ...");
    Options o;
    o.command = args[0];
    std::vector<std::string> positional;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&]() -> const std::string& {
            if (i + 1 >= args.size())
                throw Error(ErrorKind::Domain, a + " expects a value");
            return args[++i];
        };
        if (a == "-n") {
            o.n = parse_count(value(), "-n");
        } else if (a == "--spec") {
            parse_spec_range(value(), o);
        } else if (a == "--field") {
            const std::string& f = value();
            if (f == "rational")
                o.gaussian = false;
            else if (f == "gaussian")
                o.gaussian = true;
            else
                throw Error(ErrorKind::Domain,
                            "--field expects rational or gaussian");
        } else if (a == "--whole") {
            o.whole = true;
        } else if (a == "--biv") {
            o.biv = true;
        } else if (a == "--e2o") {
            o.tri = Options::TriMode::E2o;
        } else if (a == "--diag") {
            o.tri = Options::TriMode::Diag;
        } else if (a == "--diag-e2o") {
            o.tri = Options::TriMode::DiagE2o;
        } else if (!a.empty() && a[0] == '-' && a.size() > 1 &&
                   !std::isdigit(static_cast<unsigned char>(a[1]))) {
            throw Error(ErrorKind::Domain, "unknown flag " + a);
        } else {
            positional.push_back(a);
        }
    }
    if (o.command == "terms" || o.command == "triangle") {
        if (positional.size() != 1)
            throw Error(ErrorKind::Domain,
                        o.command + " expects exactly one expression");
        o.expr = positional[0];
    } else if (o.command == "check") {
        if (positional.size() != 1)
            throw Error(ErrorKind::Domain, "check expects a suite name");
        o.suite = positional[0];
    } else if (o.command == "names") {
        if (!positional.empty())
            throw Error(ErrorKind::Domain, "names takes no arguments");
    } else {
        throw Error(ErrorKind::Domain, "unknown command '" + o.command + "'");
    }
    if (o.gaussian && o.biv)
        throw Error(ErrorKind::Domain,
                    "--biv is only available with rational coefficients");
    return o;
}

template <class C>
std::string whole_line(const Seq<C>& s, std::size_t n) {
    std::vector<Integer> w = s.take_whole(n);
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += w[i].get_str();
    }
    return out + "]";
}

int cmd_terms(const Options& o, std::ostream& out) {
    ExprPtr e = parse(o.expr);
    if (o.biv) {
        Biv s = eval_bivariate(*e);
        out << seq_to_string(s, o.n) << "\n";
    } else if (o.gaussian) {
        Seq<Gaussian> s = eval_gaussian(*e);
        out << (o.whole ? whole_line(s, o.n) : seq_to_string(s, o.n)) << "\n";
    } else {
        Seq<Rational> s = eval_rational(*e);
        out << (o.whole ? whole_line(s, o.n) : seq_to_string(s, o.n)) << "\n";
    }
    return 0;
}

TriangleMode to_mode(Options::TriMode m) {
    switch (m) {
    case Options::TriMode::Plain: return TriangleMode::Rows;
    case Options::TriMode::E2o: return TriangleMode::RowsE2o;
    case Options::TriMode::Diag: return TriangleMode::Diagonals;
    case Options::TriMode::DiagE2o: return TriangleMode::DiagonalsE2o;
    }
    return TriangleMode::Rows;
}

int cmd_triangle(const Options& o, std::ostream& out) {
    ExprPtr e = parse(o.expr);
    Biv rows = triangle_view(*e, to_mode(o.tri));
    std::vector<std::size_t> spec = spec_range(o.spec_from, o.spec_to);
    if (o.whole) {
        for (const auto& row : select_w(rows, spec)) {
            std::string line = "[";
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) line += ",";
                line += row[j].get_str();
            }
            out << line << "]\n";
        }
    } else {
        for (const auto& row : select(rows, spec)) {
            std::string line = "[";
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) line += ",";
                line += row[j].str();
            }
            out << line << "]\n";
        }
    }
    return 0;
}

int cmd_names(std::ostream& out) {
    for (const auto& [name, def] : registry_names())
        out << name << " = " << def << "\n";
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    std::vector<CheckResult> results = run_check_suite(o.suite);
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            out << "PASS " << r.name << "\n";
        } else {
            out << "FAIL " << r.name;
            if (!r.detail.empty()) out << ": " << r.detail;
            out << "\n";
        }
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        Options o = parse_args(args);
        if (o.command == "terms") return cmd_terms(o, out);
        if (o.command == "triangle") return cmd_triangle(o, out);
        if (o.command == "names") return cmd_names(out);
        return cmd_check(o, out);
    } catch (const SyntaxError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace seqalg
