#include "qcong/expr.hpp"

#include <algorithm>

namespace qcong {

Expr::Expr() {
    static const auto zero = [] {
        auto n = std::make_shared<Node>();
        n->op = Op::Const;
        return n;
    }();
    node_ = zero;
}

Expr Expr::constant(BigRat c) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = std::move(c);
    return Expr(std::move(n));
}

Expr Expr::sym(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Sym;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::add(Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->op = Op::Add;
    n->l = l.node_;
    n->r = r.node_;
    return Expr(std::move(n));
}

Expr Expr::sub(Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->op = Op::Sub;
    n->l = l.node_;
    n->r = r.node_;
    return Expr(std::move(n));
}

Expr Expr::mul(Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->op = Op::Mul;
    n->l = l.node_;
    n->r = r.node_;
    return Expr(std::move(n));
}

Expr Expr::div(Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->op = Op::Div;
    n->l = l.node_;
    n->r = r.node_;
    return Expr(std::move(n));
}

Expr Expr::pow(Expr base, long exponent) {
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->l = base.node_;
    n->exponent = exponent;
    return Expr(std::move(n));
}

Expr Expr::neg(Expr x) {
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->l = x.node_;
    return Expr(std::move(n));
}

BigRat Expr::eval(const Assignment& asg) const {
    switch (op()) {
        case Op::Const: return node_->value;
        case Op::Sym: {
            auto it = asg.find(node_->name);
            if (it == asg.end()) throw UnresolvedSymbol(node_->name);
            return BigRat(it->second);
        }
        case Op::Add: return left().eval(asg) + right().eval(asg);
        case Op::Sub: return left().eval(asg) - right().eval(asg);
        case Op::Mul: return left().eval(asg) * right().eval(asg);
        case Op::Div: {
            BigRat den = right().eval(asg);
            if (den.is_zero()) throw ZeroDenominator("division by zero in '" + str() + "'");
            return left().eval(asg) / den;
        }
        case Op::Pow: return left().eval(asg).pow(node_->exponent);
        case Op::Neg: return -left().eval(asg);
    }
    throw Error("unreachable");
}

long Expr::eval_int(const Assignment& asg) const {
    BigRat v = eval(asg);
    if (!v.is_integer())
        throw NonIntegral("expression '" + str() + "' evaluates to non-integer " + v.str());
    return v.to_long();
}

int Expr::degree_in(const std::string& k) const {
    switch (op()) {
        case Op::Const: return 0;
        case Op::Sym: return node_->name == k ? 1 : 0;
        case Op::Add:
        case Op::Sub: return std::max(left().degree_in(k), right().degree_in(k));
        case Op::Mul: return left().degree_in(k) + right().degree_in(k);
        case Op::Div:
            if (right().degree_in(k) != 0)
                throw ValidationError("division by '" + right().str() + "' depending on " + k);
            return left().degree_in(k);
        case Op::Pow: {
            int b = left().degree_in(k);
            if (b == 0) return 0;
            if (node_->exponent < 0)
                throw ValidationError("negative power of expression depending on " + k);
            return b * static_cast<int>(node_->exponent);
        }
        case Op::Neg: return left().degree_in(k);
    }
    throw Error("unreachable");
}

bool Expr::mentions(const std::string& name) const {
    switch (op()) {
        case Op::Const: return false;
        case Op::Sym: return node_->name == name;
        case Op::Pow:
        case Op::Neg: return left().mentions(name);
        default: return left().mentions(name) || right().mentions(name);
    }
}

std::string Expr::str() const {
    switch (op()) {
        case Op::Const: return node_->value.str();
        case Op::Sym: return node_->name;
        case Op::Add: return "(" + left().str() + "+" + right().str() + ")";
        case Op::Sub: return "(" + left().str() + "-" + right().str() + ")";
        case Op::Mul: return "(" + left().str() + "*" + right().str() + ")";
        case Op::Div: return "(" + left().str() + "/" + right().str() + ")";
        case Op::Pow: return "(" + left().str() + "^" + std::to_string(node_->exponent) + ")";
        case Op::Neg: return "(-" + left().str() + ")";
    }
    throw Error("unreachable");
}

} // namespace qcong
