#pragma once

#include <map>
#include <memory>
#include <string>

#include "qcong/bigrat.hpp"
#include "qcong/errors.hpp"

namespace qcong {

// Integer assignments for claim symbols (n, d, p, r, summation index k, ...).
// a and e never appear here: they stay symbolic in the coefficient field.
using Assignment = std::map<std::string, long>;

// Arithmetic expression over named integer symbols with exact rational
// evaluation. Small closed grammar: constants, symbols, + - * /, integer
// powers, unary minus.
class Expr {
public:
    enum class Op { Const, Sym, Add, Sub, Mul, Div, Pow, Neg };

    static Expr constant(BigRat c);
    static Expr constant(long c) { return constant(BigRat(c)); }
    static Expr sym(std::string name);
    static Expr add(Expr l, Expr r);
    static Expr sub(Expr l, Expr r);
    static Expr mul(Expr l, Expr r);
    static Expr div(Expr l, Expr r);
    static Expr pow(Expr base, long exponent);
    static Expr neg(Expr x);

    Expr();

    Op op() const { return node_->op; }
    const BigRat& const_value() const { return node_->value; }
    const std::string& sym_name() const { return node_->name; }
    long pow_exponent() const { return node_->exponent; }
    Expr left() const { return Expr(node_->l); }
    Expr right() const { return Expr(node_->r); }

    // Exact evaluation; throws UnresolvedSymbol, ZeroDenominator.
    BigRat eval(const Assignment& asg) const;
    // Evaluation that must land on an integer; throws NonIntegral otherwise.
    long eval_int(const Assignment& asg) const;

    // Syntactic degree in the symbol `k` (upper bound); division by a
    // k-dependent expression is rejected with ValidationError.
    int degree_in(const std::string& k) const;
    bool mentions(const std::string& name) const;

    bool is_const_value(long v) const {
        return op() == Op::Const && node_->value == BigRat(v);
    }

    std::string str() const; // parenthesized, reparseable

private:
    struct Node {
        Op op = Op::Const;
        BigRat value;      // Const
        std::string name;  // Sym
        long exponent = 0; // Pow
        std::shared_ptr<const Node> l, r;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace qcong
