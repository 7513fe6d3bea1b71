#include "seqalg/expr.hpp"

#include <cctype>

#include "seqalg/errors.hpp"

namespace seqalg {

namespace {

ExprPtr mk_num(Integer v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Num;
    e->num = std::move(v);
    return e;
}

ExprPtr mk_ident(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Ident;
    e->name = std::move(name);
    return e;
}

ExprPtr mk_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->args = {std::move(a)};
    return e;
}

ExprPtr mk_bin(char op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Bin;
    e->op = op;
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr mk_call(std::string name, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->name = std::move(name);
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = additive();
        skip_ws();
        if (pos_ != src_.size())
            throw SyntaxError(pos_, "end of input or an operator");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // The word `o` is the composition operator when followed by something
    // that cannot continue an identifier.
    bool at_compose() {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != 'o') return false;
        std::size_t next = pos_ + 1;
        if (next < src_.size() &&
            (std::isalnum(static_cast<unsigned char>(src_[next])) || src_[next] == '_'))
            return false;
        return true;
    }

    ExprPtr additive() {
        ExprPtr e = multiplicative();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                e = mk_bin(c, e, multiplicative());
            } else {
                return e;
            }
        }
    }

    ExprPtr multiplicative() {
        ExprPtr e = unary();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                e = mk_bin(c, e, unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (peek() == '-') {
            ++pos_;
            return mk_neg(unary());
        }
        return composition();
    }

    ExprPtr composition() {
        ExprPtr e = power();
        while (at_compose()) {
            ++pos_;
            e = mk_bin('o', e, power());
        }
        return e;
    }

    ExprPtr power() {
        ExprPtr e = atom();
        if (peek() == '^') {
            ++pos_;
            // right associative; allow a leading minus on the exponent
            ExprPtr rhs;
            if (peek() == '-') {
                ++pos_;
                rhs = mk_neg(power_operand());
            } else {
                rhs = power_operand();
            }
            e = mk_bin('^', e, rhs);
        }
        return e;
    }

    ExprPtr power_operand() {
        ExprPtr e = atom();
        if (peek() == '^') {
            ++pos_;
            ExprPtr rhs = peek() == '-' ? (++pos_, mk_neg(power_operand()))
                                        : power_operand();
            e = mk_bin('^', e, rhs);
        }
        return e;
    }

    ExprPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = additive();
            if (!consume(')')) throw SyntaxError(pos_, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            if (at_compose())
                throw SyntaxError(pos_, "an operand (found composition operator)");
            return identifier();
        }
        throw SyntaxError(pos_, "a number, name, or '('");
    }

    ExprPtr number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return mk_num(Integer(src_.substr(start, pos_ - start)));
    }

    ExprPtr identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (peek() == '(') {
            ++pos_;
            std::vector<ExprPtr> args;
            if (peek() != ')') {
                args.push_back(additive());
                while (consume(',')) args.push_back(additive());
            }
            if (!consume(')')) throw SyntaxError(pos_, "')' or ','");
            return mk_call(std::move(name), std::move(args));
        }
        return mk_ident(std::move(name));
    }
};

int precedence_of(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Bin:
        switch (e.op) {
        case '+': case '-': return 1;
        case '*': case '/': return 3;
        case 'o': return 5;
        case '^': return 6;
        }
        return 0;
    case Expr::Kind::Neg:
        return 2;
    default:
        return 7;
    }
}

void render_into(const Expr& e, std::string& out);

void render_child(const Expr& child, int min_prec, std::string& out) {
    bool parens = precedence_of(child) < min_prec;
    if (parens) out += "(";
    render_into(child, out);
    if (parens) out += ")";
}

void render_into(const Expr& e, std::string& out) {
    switch (e.kind) {
    case Expr::Kind::Num:
        out += e.num.get_str();
        return;
    case Expr::Kind::Ident:
        out += e.name;
        return;
    case Expr::Kind::Neg:
        // prefix minus binds looser than * and /, so those operands (and
        // nested negations) must be parenthesised to survive a reparse
        out += "-";
        render_child(*e.args[0], 4, out);
        return;
    case Expr::Kind::Bin: {
        int p = precedence_of(e);
        // left-associative chains reuse the operator's own level on the
        // left and require one tighter on the right ('^' handled as a
        // single non-chained level with a parenthesised right side)
        if (e.op == '^') {
            render_child(*e.args[0], 7, out);
            out += "^";
            render_child(*e.args[1], 7, out);
        } else {
            render_child(*e.args[0], p, out);
            out += (e.op == 'o') ? " o " : std::string(1, e.op);
            render_child(*e.args[1], p + 1, out);
        }
        return;
    }
    case Expr::Kind::Call: {
        out += e.name;
        out += "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i) out += ",";
            render_into(*e.args[i], out);
        }
        out += ")";
        return;
    }
    }
}

} // namespace

ExprPtr parse(const std::string& src) { return Parser(src).run(); }

std::string render(const Expr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Expr::Kind::Num:
        return a.num == b.num;
    case Expr::Kind::Ident:
        return a.name == b.name;
    case Expr::Kind::Neg:
        return expr_equal(*a.args[0], *b.args[0]);
    case Expr::Kind::Bin:
        if (a.op != b.op) return false;
        return expr_equal(*a.args[0], *b.args[0]) &&
               expr_equal(*a.args[1], *b.args[1]);
    case Expr::Kind::Call:
        if (a.name != b.name || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!expr_equal(*a.args[i], *b.args[i])) return false;
        return true;
    }
    return false;
}

} // namespace seqalg
