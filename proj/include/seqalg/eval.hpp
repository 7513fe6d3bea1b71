#pragma once

#include "seqalg/bivariate.hpp"
#include "seqalg/expr.hpp"

namespace seqalg {

// Expression evaluation in the three modes.  Mode rules: `u`/`z`, `dz`,
// `du` only in bivariate mode; `i` only with gaussian coefficients;
// `unDiag`/`unDiagE2o` only as the outermost operator of the triangle
// command (handled there, rejected here).
Seq<Rational> eval_rational(const Expr& e);
Seq<Gaussian> eval_gaussian(const Expr& e);
Biv eval_bivariate(const Expr& e);

enum class TriangleMode { Rows, RowsE2o, Diagonals, DiagonalsE2o };

// Evaluates a bivariate expression and returns the requested triangle view
// (rows of the coefficient triangle, optionally de-exponentialised, or the
// padded diagonals themselves).  A top-level `unDiag`/`unDiagE2o` call in
// the expression selects the corresponding row view, overriding `mode`.
Biv triangle_view(const Expr& e, TriangleMode mode);

} // namespace seqalg
