#pragma once

#include <memory>
#include <string>
#include <vector>

#include "seqalg/rational.hpp"

namespace seqalg {

// Surface-syntax AST.  Precedence (tightest first): ^, o, * /, + - with a
// prefix minus binding between * / and + -.
struct Expr {
    enum class Kind { Num, Ident, Neg, Bin, Call };

    Kind kind;
    Integer num;                               // Num
    std::string name;                          // Ident, Call
    char op = 0;                               // Bin: one of + - * / ^ o
    std::vector<std::shared_ptr<Expr>> args;   // Neg (1), Bin (2), Call (n)
};

using ExprPtr = std::shared_ptr<Expr>;

// Parses an expression; throws SyntaxError with a byte offset on failure.
ExprPtr parse(const std::string& src);

// Renders an AST with minimal parentheses; parse(render(e)) == e.
std::string render(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

} // namespace seqalg
