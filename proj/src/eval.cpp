#include "seqalg/eval.hpp"

#include <type_traits>

#include "seqalg/registry.hpp"

namespace seqalg {

namespace {

template <class C>
C scalar_of(const Seq<C>& s, const char* what) {
    if (s.is_finite()) {
        std::uint64_t len = *s.finite_len();
        bool constant = true;
        for (std::uint64_t i = 1; i < len; ++i)
            if (!field_traits<C>::is_zero(s.nth(i))) {
                constant = false;
                break;
            }
        if (constant) return s.nth(0);
    }
    throw Error(ErrorKind::Domain, std::string(what) + " must be a constant");
}

long integer_to_long(const Integer& n) {
    if (!n.fits_slong_p())
        throw Error(ErrorKind::Domain, "exponent out of range");
    return n.get_si();
}

template <class C>
Seq<C> eval_expr(const Expr& e) {
    using S = Seq<C>;
    constexpr bool biv = std::is_same_v<C, Poly>;
    constexpr bool gaussian = std::is_same_v<C, Gaussian>;

    switch (e.kind) {
    case Expr::Kind::Num:
        return S(C(field_traits<C>::from_integer(e.num)));

    case Expr::Kind::Ident: {
        if constexpr (gaussian) {
            if (e.name == "i") return S(Gaussian::i());
        }
        std::optional<S> found;
        if constexpr (biv)
            found = lookup_bivariate(e.name);
        else
            found = lookup_univariate<C>(e.name);
        if (found) return *found;
        if (!biv && (e.name == "u" || e.name == "z"))
            throw Error(ErrorKind::UnknownName,
                        "'" + e.name + "' is only available in bivariate mode");
        if (!gaussian && e.name == "i")
            throw Error(ErrorKind::UnknownName,
                        "'i' is only available with gaussian coefficients");
        throw Error(ErrorKind::UnknownName, "unknown name '" + e.name + "'");
    }

    case Expr::Kind::Neg:
        return -eval_expr<C>(*e.args[0]);

    case Expr::Kind::Bin: {
        if (e.op == '^') {
            S base = eval_expr<C>(*e.args[0]);
            C r = scalar_of(eval_expr<C>(*e.args[1]), "exponent");
            try {
                long n = integer_to_long(field_traits<C>::to_whole(r));
                return pow_int(base, n);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::NotWhole &&
                    err.kind() != ErrorKind::NotReal)
                    throw;
            }
            return pow_f(base, r);
        }
        S l = eval_expr<C>(*e.args[0]);
        S r = eval_expr<C>(*e.args[1]);
        switch (e.op) {
        case '+': return l + r;
        case '-': return l - r;
        case '*': return l * r;
        case '/': return l / r;
        case 'o': return compose(l, r);
        }
        throw Error(ErrorKind::Domain, "unknown operator");
    }

    case Expr::Kind::Call: {
        auto arity = [&](std::size_t n) {
            if (e.args.size() != n)
                throw Error(ErrorKind::Domain,
                            e.name + " expects " + std::to_string(n) +
                                " argument(s)");
        };
        const std::string& f = e.name;
        if (f == "deriv") { arity(1); return deriv(eval_expr<C>(*e.args[0])); }
        if (f == "integ") { arity(1); return integ(eval_expr<C>(*e.args[0])); }
        if (f == "sqroot") { arity(1); return sqroot(eval_expr<C>(*e.args[0])); }
        if (f == "converse") { arity(1); return converse(eval_expr<C>(*e.args[0])); }
        if (f == "e2o") { arity(1); return e2o(eval_expr<C>(*e.args[0])); }
        if (f == "o2e") { arity(1); return o2e(eval_expr<C>(*e.args[0])); }
        if (f == "lg") { arity(1); return log_seq(eval_expr<C>(*e.args[0])); }
        if (f == "delta") { arity(1); return delta(eval_expr<C>(*e.args[0])); }
        if (f == "sigma") { arity(1); return sigma(eval_expr<C>(*e.args[0])); }
        if (f == "h2i") { arity(1); return h2i(eval_expr<C>(*e.args[0])); }
        if (f == "i2h") { arity(1); return i2h(eval_expr<C>(*e.args[0])); }
        if (f == "shuffle") {
            arity(2);
            return shuffle(eval_expr<C>(*e.args[0]), eval_expr<C>(*e.args[1]));
        }
        if (f == "hadamard") {
            arity(2);
            return hadamard(eval_expr<C>(*e.args[0]), eval_expr<C>(*e.args[1]));
        }
        if (f == "infiltration") {
            arity(2);
            return infiltration(eval_expr<C>(*e.args[0]),
                                eval_expr<C>(*e.args[1]));
        }
        if (f == "pow") {
            arity(2);
            return pow_f(eval_expr<C>(*e.args[0]),
                         scalar_of(eval_expr<C>(*e.args[1]), "exponent"));
        }
        if (f == "dz" || f == "du") {
            arity(1);
            if constexpr (biv) {
                Seq<Poly> a = eval_expr<C>(*e.args[0]);
                return f == "dz" ? dz(a) : du(a);
            }
            throw Error(ErrorKind::Domain,
                        f + " is only available in bivariate mode");
        }
        if (f == "unDiag" || f == "unDiagE2o")
            throw Error(ErrorKind::Domain,
                        f + " is only valid as the outermost operator of the "
                            "triangle command");
        throw Error(ErrorKind::UnknownName, "unknown function '" + f + "'");
    }
    }
    throw Error(ErrorKind::Domain, "malformed expression");
}

} // namespace

Seq<Rational> eval_rational(const Expr& e) { return eval_expr<Rational>(e); }
Seq<Gaussian> eval_gaussian(const Expr& e) { return eval_expr<Gaussian>(e); }
Biv eval_bivariate(const Expr& e) { return eval_expr<Poly>(e); }

Biv triangle_view(const Expr& e, TriangleMode mode) {
    const Expr* body = &e;
    if (body->kind == Expr::Kind::Call &&
        (body->name == "unDiag" || body->name == "unDiagE2o")) {
        if (body->args.size() != 1)
            throw Error(ErrorKind::Domain,
                        body->name + " expects 1 argument(s)");
        mode = body->name == "unDiag" ? TriangleMode::Rows
                                      : TriangleMode::RowsE2o;
        body = body->args[0].get();
    }
    Biv s = eval_bivariate(*body);
    switch (mode) {
    case TriangleMode::Rows: return un_diag(s);
    case TriangleMode::RowsE2o: return un_diag_e2o(s);
    case TriangleMode::Diagonals: return pad_tri(s);
    case TriangleMode::DiagonalsE2o:
        return pad_tri(Biv::from_fn(
            [s](std::uint64_t n) { return e2o(s.nth(n)); }));
    }
    throw Error(ErrorKind::Domain, "unknown triangle mode");
}

} // namespace seqalg
