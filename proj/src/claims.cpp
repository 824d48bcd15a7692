#include "qcong/claims.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Type { Ident, Number, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at(const std::string& text) const { return tok_.text == text; }
    bool at_ident() const { return tok_.type == Token::Type::Ident; }
    bool at_number() const { return tok_.type == Token::Type::Number; }
    bool at_end() const { return tok_.type == Token::Type::End; }

    Token expect(const std::string& text) {
        if (tok_.text != text) fail("expected '" + text + "', found '" + shown() + "'");
        return next();
    }
    Token expect_ident() {
        if (!at_ident()) fail("expected identifier, found '" + shown() + "'");
        return next();
    }
    Token expect_number() {
        if (!at_number()) fail("expected number, found '" + shown() + "'");
        return next();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg, tok_.line, tok_.col);
    }

private:
    std::string shown() const { return tok_.type == Token::Type::End ? "<end>" : tok_.text; }

    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Type::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                take();
            tok_ = {Token::Type::Ident, src_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                take();
            tok_ = {Token::Type::Number, src_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        // multi-char punctuation
        for (const char* p : {"..", ">=", "<="}) {
            if (src_.compare(pos_, 2, p) == 0) {
                take();
                take();
                tok_ = {Token::Type::Punct, p, tok_.line, tok_.col};
                return;
            }
        }
        static const std::string singles = "()[];,*/+-^=_:<>";
        if (singles.find(c) != std::string::npos) {
            take();
            tok_ = {Token::Type::Punct, std::string(1, c), tok_.line, tok_.col};
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    void take() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

Expr parse_expr(Lexer& lex);

Expr parse_atom(Lexer& lex) {
    if (lex.at("(")) {
        lex.next();
        Expr e = parse_expr(lex);
        lex.expect(")");
        return e;
    }
    if (lex.at_number()) return Expr::constant(BigRat(lex.next().text));
    if (lex.at_ident()) return Expr::sym(lex.next().text);
    lex.fail("expected expression");
}

Expr parse_power(Lexer& lex) {
    Expr base = parse_atom(lex);
    if (lex.at("^")) {
        lex.next();
        bool neg = false;
        if (lex.at("-")) {
            lex.next();
            neg = true;
        }
        long e = std::stol(lex.expect_number().text);
        return Expr::pow(base, neg ? -e : e);
    }
    return base;
}

Expr parse_unary(Lexer& lex) {
    if (lex.at("-")) {
        lex.next();
        return Expr::neg(parse_unary(lex));
    }
    return parse_power(lex);
}

Expr parse_mul(Lexer& lex) {
    Expr e = parse_unary(lex);
    while (lex.at("*") || lex.at("/")) {
        bool mul = lex.at("*");
        lex.next();
        Expr r = parse_unary(lex);
        e = mul ? Expr::mul(e, r) : Expr::div(e, r);
    }
    return e;
}

Expr parse_expr(Lexer& lex) {
    Expr e = parse_mul(lex);
    while (lex.at("+") || lex.at("-")) {
        bool add = lex.at("+");
        lex.next();
        Expr r = parse_mul(lex);
        e = add ? Expr::add(e, r) : Expr::sub(e, r);
    }
    return e;
}

// "^" INT or "^" "(" expr ")" after q / a / e
Expr parse_exponent_piece(Lexer& lex) {
    if (lex.at("(")) {
        lex.next();
        Expr e = parse_expr(lex);
        lex.expect(")");
        return e;
    }
    bool neg = false;
    if (lex.at("-")) {
        lex.next();
        neg = true;
    }
    Expr e = Expr::constant(BigRat(lex.expect_number().text));
    return neg ? Expr::neg(e) : e;
}

// ---------------------------------------------------------------------------
// Monomial bases: [-] part { ("*"|"/") part }, part in {q[^..], a, e, NUMBER}
// ---------------------------------------------------------------------------

Mono parse_mono(Lexer& lex) {
    Mono m;
    if (lex.at("-")) {
        lex.next();
        m.coef = -m.coef;
    }
    bool first = true;
    bool invert = false;
    while (true) {
        if (lex.at("q")) {
            lex.next();
            Expr e = Expr::constant(1L);
            if (lex.at("^")) {
                lex.next();
                e = parse_exponent_piece(lex);
            }
            if (m.q_exp.is_const_value(0))
                m.q_exp = invert ? Expr::neg(e) : e;
            else
                m.q_exp = invert ? Expr::sub(m.q_exp, e) : Expr::add(m.q_exp, e);
        } else if (lex.at("a")) {
            lex.next();
            m.a_exp += invert ? -1 : 1;
        } else if (lex.at("e")) {
            lex.next();
            m.e_exp += invert ? -1 : 1;
        } else if (lex.at_number()) {
            BigRat v(lex.next().text);
            m.coef = invert ? m.coef / v : m.coef * v;
        } else if (first) {
            lex.fail("expected monomial base (q, a, e, or a number)");
        } else {
            break;
        }
        first = false;
        if (lex.at("*")) {
            lex.next();
            invert = false;
        } else if (lex.at("/")) {
            lex.next();
            invert = true;
        } else {
            break;
        }
    }
    return m;
}

// subscript after '_': "k" | INT | "(" expr ")"
Expr parse_subscript(Lexer& lex) {
    if (lex.at("(")) {
        lex.next();
        Expr e = parse_expr(lex);
        lex.expect(")");
        return e;
    }
    if (lex.at_number()) return Expr::constant(BigRat(lex.next().text));
    return Expr::sym(lex.expect_ident().text);
}

int parse_int_power(Lexer& lex) { // optional "^" INT
    if (!lex.at("^")) return 1;
    lex.next();
    return static_cast<int>(std::stol(lex.expect_number().text));
}

// ---------------------------------------------------------------------------
// Terms and factors
// ---------------------------------------------------------------------------

SumSpec parse_sum(Lexer& lex);

Factor parse_factor(Lexer& lex) {
    Factor f;
    if (lex.at("[")) {
        lex.next();
        f.kind = Factor::Kind::Bracket;
        f.form = parse_expr(lex);
        lex.expect("]");
        if (lex.at("_")) {
            lex.next();
            lex.expect("q");
            lex.expect("^");
            f.bqexp = parse_exponent_piece(lex);
        }
        return f;
    }
    if (lex.at("poch") || lex.at("pochinf")) {
        bool inf = lex.at("pochinf");
        lex.next();
        f.kind = inf ? Factor::Kind::PochInf : Factor::Kind::Poch;
        lex.expect("(");
        f.bases.push_back(parse_mono(lex));
        while (lex.at(",")) {
            lex.next();
            f.bases.push_back(parse_mono(lex));
        }
        lex.expect(";");
        Mono stepm = parse_mono(lex);
        if (!stepm.coef.is_one() || stepm.a_exp || stepm.e_exp)
            lex.fail("q-shifted factorial step must be a pure q-power");
        f.step = stepm.q_exp;
        lex.expect(")");
        if (!inf) {
            lex.expect("_");
            f.length = parse_subscript(lex);
        }
        f.power = parse_int_power(lex);
        return f;
    }
    if (lex.at("rpoch")) {
        lex.next();
        f.kind = Factor::Kind::RPoch;
        lex.expect("(");
        f.form = parse_expr(lex);
        lex.expect(")");
        lex.expect("_");
        lex.expect("k");
        f.power = parse_int_power(lex);
        return f;
    }
    if (lex.at("gammap")) {
        lex.next();
        f.kind = Factor::Kind::GammaP;
        lex.expect("(");
        f.form = parse_expr(lex);
        lex.expect(")");
        return f;
    }
    if (lex.at("q")) {
        lex.next();
        f.kind = Factor::Kind::QPow;
        f.form = Expr::constant(1L);
        if (lex.at("^")) {
            lex.next();
            f.form = parse_exponent_piece(lex);
        }
        return f;
    }
    if (lex.at("a") || lex.at("e")) {
        f.kind = Factor::Kind::ParamPow;
        f.param = lex.next().text[0];
        f.form = Expr::constant(1L);
        if (lex.at("^")) {
            lex.next();
            f.form = parse_exponent_piece(lex);
        }
        return f;
    }
    if (lex.at_number()) {
        BigRat v(lex.next().text);
        if (lex.at("^")) {
            lex.next();
            if (lex.at("k")) {
                lex.next();
                f.kind = Factor::Kind::ExpK;
                f.value = v;
                return f;
            }
            bool neg = false;
            if (lex.at("-")) {
                lex.next();
                neg = true;
            }
            long e = std::stol(lex.expect_number().text);
            f.kind = Factor::Kind::Const;
            f.value = v.pow(neg ? -e : e);
            return f;
        }
        f.kind = Factor::Kind::Const;
        f.value = v;
        return f;
    }
    if (lex.at("(")) {
        lex.next();
        if (lex.at("sum")) {
            f.kind = Factor::Kind::Nested;
            f.nested = std::make_shared<SumSpec>(parse_sum(lex));
            lex.expect(")");
            return f;
        }
        if (lex.at("-")) {
            // "(-1)^(expr)"
            lex.next();
            Token one = lex.expect_number();
            if (one.text != "1") lex.fail("expected '(-1)^...'");
            lex.expect(")");
            lex.expect("^");
            f.kind = Factor::Kind::NegOnePow;
            f.form = parse_exponent_piece(lex);
            return f;
        }
        // binomial (mono - mono)
        f.kind = Factor::Kind::Binomial;
        f.bases.push_back(parse_mono(lex));
        lex.expect("-");
        f.bases.push_back(parse_mono(lex));
        lex.expect(")");
        return f;
    }
    if (lex.at_ident()) {
        f.kind = Factor::Kind::SymVal;
        f.sym = lex.next().text;
        return f;
    }
    lex.fail("expected a factor");
}

Term parse_term(Lexer& lex) {
    Term t;
    if (lex.at("-")) {
        lex.next();
        Factor neg;
        neg.kind = Factor::Kind::Const;
        neg.value = BigRat(-1L);
        t.push_back({neg, false});
    }
    t.push_back({parse_factor(lex), false});
    while (lex.at("*") || lex.at("/")) {
        bool inverted = lex.at("/");
        lex.next();
        t.push_back({parse_factor(lex), inverted});
    }
    return t;
}

SumSpec parse_sum(Lexer& lex) {
    SumSpec s;
    lex.expect("sum");
    s.var = lex.expect_ident().text;
    lex.expect("=");
    Token zero = lex.expect_number();
    if (zero.text != "0") lex.fail("sums start at k = 0");
    lex.expect("..");
    if (lex.at("inf")) {
        lex.next();
        s.infinite = true;
    } else {
        s.upper = parse_expr(lex);
    }
    lex.expect("of");
    s.term = parse_term(lex);
    return s;
}

// ---------------------------------------------------------------------------
// Conditions and modulus
// ---------------------------------------------------------------------------

Condition parse_condition(Lexer& lex) {
    Condition c;
    c.sym = lex.expect_ident().text;
    if (lex.at("even")) {
        lex.next();
        c.type = Condition::Type::Even;
    } else if (lex.at("odd")) {
        lex.next();
        c.type = Condition::Type::Odd;
    } else if (lex.at("prime")) {
        lex.next();
        c.type = Condition::Type::Prime;
    } else if (lex.at(">=")) {
        lex.next();
        c.type = Condition::Type::Ge;
        c.rhs = parse_expr(lex);
    } else if (lex.at("=")) {
        lex.next();
        c.type = Condition::Type::Eq;
        c.rhs = parse_expr(lex);
        if (lex.at("(")) {
            lex.next();
            lex.expect("mod");
            c.type = Condition::Type::Residue;
            c.modulus = parse_expr(lex);
            lex.expect(")");
        }
    } else {
        lex.fail("expected condition (even / odd / prime / >= / =)");
    }
    return c;
}

std::vector<ModFactor> parse_modulus(Lexer& lex) {
    std::vector<ModFactor> mods;
    while (true) {
        ModFactor m;
        if (lex.at("Phi")) {
            lex.next();
            m.kind = ModFactor::Kind::Phi;
            lex.expect("(");
            m.arg = parse_expr(lex);
            lex.expect(")");
        } else if (lex.at("[")) {
            lex.next();
            m.kind = ModFactor::Kind::QInt;
            m.arg = parse_expr(lex);
            lex.expect("]");
        } else if (lex.at("p")) {
            lex.next();
            m.kind = ModFactor::Kind::PPow;
        } else if (lex.at("(")) {
            lex.next();
            if (lex.at("1")) {
                lex.next();
                lex.expect("-");
                lex.expect("a");
                lex.expect("*");
                lex.expect("q");
                lex.expect("^");
                m.kind = ModFactor::Kind::OneMinusAQn;
                m.arg = parse_exponent_piece(lex);
            } else {
                lex.expect("a");
                lex.expect("-");
                lex.expect("q");
                lex.expect("^");
                m.kind = ModFactor::Kind::AMinusQn;
                m.arg = parse_exponent_piece(lex);
            }
            lex.expect(")");
        } else {
            lex.fail("expected modulus factor (Phi(...), [...], (1-a*q^n), (a-q^n), p)");
        }
        if (lex.at("^")) {
            lex.next();
            m.mult = static_cast<int>(std::stol(lex.expect_number().text));
        }
        mods.push_back(std::move(m));
        if (!lex.at("*")) break;
        lex.next();
    }
    return mods;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void check_k_free(const Expr& e, const std::string& var, const std::string& what) {
    if (e.mentions(var))
        throw ValidationError(what + " must not depend on the summation index " + var);
}

void validate_summand(const Term& term, const std::string& var, ClaimKind kind) {
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        switch (f.kind) {
            case Factor::Kind::Bracket:
                if (f.form.degree_in(var) > 1)
                    throw ValidationError("bracket form must be linear in " + var);
                check_k_free(f.bqexp, var, "bracket base");
                break;
            case Factor::Kind::Poch:
                if (kind == ClaimKind::PadicCongruence)
                    throw ValidationError("q-shifted factorials are not allowed in p-adic claims");
                for (const auto& b : f.bases) check_k_free(b.q_exp, var, "factorial base");
                check_k_free(f.step, var, "factorial step");
                if (f.length.degree_in(var) > 1)
                    throw ValidationError("factorial length must be linear in " + var);
                break;
            case Factor::Kind::QPow:
                if (f.form.degree_in(var) > 2)
                    throw ValidationError("q-power exponent degree > 2 in " + var);
                break;
            case Factor::Kind::RPoch:
                if (kind != ClaimKind::PadicCongruence)
                    throw ValidationError("rpoch is only allowed in p-adic claims");
                check_k_free(f.form, var, "rising-factorial base");
                break;
            case Factor::Kind::ExpK:
                if (kind != ClaimKind::PadicCongruence)
                    throw ValidationError("c^k factors are only allowed in p-adic claims");
                break;
            case Factor::Kind::Const:
                break;
            default:
                throw ValidationError("factor kind not allowed under a sum");
        }
    }
}

void validate_rhs(const Term& term, const std::string& var, ClaimKind kind) {
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        switch (f.kind) {
            case Factor::Kind::Nested:
                if (kind == ClaimKind::PadicCongruence)
                    throw ValidationError("nested sums are not allowed in p-adic claims");
                validate_summand(f.nested->term, f.nested->var, kind);
                break;
            case Factor::Kind::GammaP:
                if (kind != ClaimKind::PadicCongruence)
                    throw ValidationError("gammap is only allowed in p-adic claims");
                break;
            case Factor::Kind::PochInf:
                if (kind != ClaimKind::SeriesIdentity)
                    throw ValidationError("infinite products are only allowed in series claims");
                for (const auto& b : f.bases) {
                    check_k_free(b.q_exp, var, "infinite-product base");
                    if (b.a_exp || b.e_exp)
                        throw ValidationError("infinite-product bases must be pure q-powers");
                }
                check_k_free(f.step, var, "infinite-product step");
                break;
            case Factor::Kind::Poch:
                for (const auto& b : f.bases) check_k_free(b.q_exp, var, "factorial base");
                check_k_free(f.step, var, "factorial step");
                check_k_free(f.length, var, "closed-form factorial length");
                break;
            case Factor::Kind::Bracket:
                check_k_free(f.form, var, "bracket form");
                check_k_free(f.bqexp, var, "bracket base");
                break;
            case Factor::Kind::QPow:
            case Factor::Kind::ParamPow:
            case Factor::Kind::NegOnePow:
                check_k_free(f.form, var, "closed-form exponent");
                break;
            case Factor::Kind::Binomial:
                for (const auto& b : f.bases) check_k_free(b.q_exp, var, "binomial side");
                break;
            case Factor::Kind::Const:
            case Factor::Kind::SymVal:
                break;
            default:
                throw ValidationError("factor kind not allowed on a right-hand side");
        }
    }
}

void validate_claim(const Claim& c) {
    if (c.name.empty()) throw ValidationError("claim has no name");
    bool has_mod = !c.modulus.empty();
    switch (c.kind) {
        case ClaimKind::Congruence:
            if (!has_mod) throw ValidationError(c.name + ": congruence claims need a modulus");
            for (const auto& m : c.modulus)
                if (m.kind == ModFactor::Kind::PPow)
                    throw ValidationError(c.name + ": p^r modulus belongs to p-adic claims");
            break;
        case ClaimKind::SeriesIdentity:
            if (has_mod) throw ValidationError(c.name + ": series identities have no modulus");
            if (!c.rhs) throw ValidationError(c.name + ": series identities need a right-hand side");
            break;
        case ClaimKind::PadicCongruence:
            if (!has_mod) throw ValidationError(c.name + ": p-adic claims need a modulus p^r");
            for (const auto& m : c.modulus)
                if (m.kind != ModFactor::Kind::PPow)
                    throw ValidationError(c.name + ": p-adic modulus must be a power of p");
            break;
    }
    validate_summand(c.lhs.term, c.lhs.var, c.kind);
    if (c.rhs) validate_rhs(*c.rhs, c.lhs.var, c.kind);
}

} // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

Claim parse_claim(const std::string& text, const std::string& source_name) {
    Lexer lex(text);
    Claim c;
    c.source_file = source_name;
    lex.expect("claim");
    c.name = lex.expect_ident().text;
    bool saw_lhs = false;
    while (!lex.at_end()) {
        Token kw = lex.expect_ident();
        lex.expect(":");
        if (kw.text == "kind") {
            Token v = lex.expect_ident();
            if (v.text == "congruence")
                c.kind = ClaimKind::Congruence;
            else if (v.text == "series")
                c.kind = ClaimKind::SeriesIdentity;
            else if (v.text == "padic")
                c.kind = ClaimKind::PadicCongruence;
            else
                throw SyntaxError("unknown kind '" + v.text + "'", v.line, v.col);
        } else if (kw.text == "status") {
            Token v = lex.expect_ident();
            if (v.text == "theorem")
                c.status = ClaimStatus::Theorem;
            else if (v.text == "conjecture")
                c.status = ClaimStatus::Conjecture;
            else if (v.text == "expected_failure")
                c.status = ClaimStatus::ExpectedFailure;
            else
                throw SyntaxError("unknown status '" + v.text + "'", v.line, v.col);
        } else if (kw.text == "require") {
            c.conditions.push_back(parse_condition(lex));
            while (lex.at(",")) {
                lex.next();
                c.conditions.push_back(parse_condition(lex));
            }
        } else if (kw.text == "lhs") {
            c.lhs = parse_sum(lex);
            saw_lhs = true;
        } else if (kw.text == "rhs") {
            c.rhs = parse_term(lex);
        } else if (kw.text == "mod") {
            c.modulus = parse_modulus(lex);
        } else {
            throw SyntaxError("unknown section '" + kw.text + "'", kw.line, kw.col);
        }
    }
    if (!saw_lhs) throw ValidationError(c.name + ": claim has no lhs");
    validate_claim(c);
    return c;
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

std::string print_mono(const Mono& m) {
    std::ostringstream os;
    BigRat coef = m.coef;
    if (coef == BigRat(-1L) && (m.a_exp || m.e_exp || !m.q_exp.is_const_value(0))) {
        os << "-";
        coef = BigRat(1);
    }
    bool printed = false;
    if (!coef.is_one() || (!m.a_exp && !m.e_exp && m.q_exp.is_const_value(0))) {
        os << coef.str();
        printed = true;
    }
    if (!m.q_exp.is_const_value(0)) {
        if (printed) os << "*";
        os << "q^(" << m.q_exp.str() << ")";
        printed = true;
    }
    for (int i = 0; i < m.a_exp; ++i) {
        os << (printed ? "*" : "") << "a";
        printed = true;
    }
    for (int i = 0; i > m.a_exp; --i) os << "/a";
    if (m.a_exp < 0) printed = true;
    for (int i = 0; i < m.e_exp; ++i) {
        os << (printed ? "*" : "") << "e";
        printed = true;
    }
    for (int i = 0; i > m.e_exp; --i) os << "/e";
    return os.str();
}

std::string print_term(const Term& t);

std::string print_factor(const Factor& f) {
    std::ostringstream os;
    switch (f.kind) {
        case Factor::Kind::Bracket:
            os << "[" << f.form.str() << "]";
            if (!f.bqexp.is_const_value(1)) os << "_q^(" << f.bqexp.str() << ")";
            break;
        case Factor::Kind::Poch:
        case Factor::Kind::PochInf: {
            os << (f.kind == Factor::Kind::Poch ? "poch(" : "pochinf(");
            for (size_t i = 0; i < f.bases.size(); ++i)
                os << (i ? ", " : "") << print_mono(f.bases[i]);
            os << " ; q^(" << f.step.str() << "))";
            if (f.kind == Factor::Kind::Poch) os << "_(" << f.length.str() << ")";
            if (f.power != 1) os << "^" << f.power;
            break;
        }
        case Factor::Kind::RPoch:
            os << "rpoch(" << f.form.str() << ")_k";
            if (f.power != 1) os << "^" << f.power;
            break;
        case Factor::Kind::GammaP:
            os << "gammap(" << f.form.str() << ")";
            break;
        case Factor::Kind::QPow:
            os << "q^(" << f.form.str() << ")";
            break;
        case Factor::Kind::ParamPow:
            os << f.param << "^(" << f.form.str() << ")";
            break;
        case Factor::Kind::Const:
            os << f.value.str();
            break;
        case Factor::Kind::ExpK:
            os << f.value.str() << "^k";
            break;
        case Factor::Kind::NegOnePow:
            os << "(-1)^(" << f.form.str() << ")";
            break;
        case Factor::Kind::SymVal:
            os << f.sym;
            break;
        case Factor::Kind::Binomial:
            os << "(" << print_mono(f.bases[0]) << " - " << print_mono(f.bases[1]) << ")";
            break;
        case Factor::Kind::Nested:
            os << "(sum " << f.nested->var << " = 0 .. "
               << (f.nested->infinite ? std::string("inf") : f.nested->upper.str()) << " of "
               << print_term(f.nested->term) << ")";
            break;
    }
    return os.str();
}

std::string print_term(const Term& t) {
    std::ostringstream os;
    size_t start = 0;
    // A leading constant -1 factor came from a leading '-'; print it back the
    // same way so reparsing rebuilds the identical factor list.
    if (t.size() > 1 && !t[0].inverted && !t[1].inverted &&
        t[0].factor.kind == Factor::Kind::Const && t[0].factor.value == BigRat(-1L)) {
        os << "-";
        start = 1;
    }
    for (size_t i = start; i < t.size(); ++i) {
        if (i > start) os << (t[i].inverted ? " / " : " * ");
        os << print_factor(t[i].factor);
    }
    return os.str();
}

std::string print_condition(const Condition& c) {
    switch (c.type) {
        case Condition::Type::Even: return c.sym + " even";
        case Condition::Type::Odd: return c.sym + " odd";
        case Condition::Type::Prime: return c.sym + " prime";
        case Condition::Type::Ge: return c.sym + " >= " + c.rhs.str();
        case Condition::Type::Eq: return c.sym + " = " + c.rhs.str();
        case Condition::Type::Residue:
            return c.sym + " = " + c.rhs.str() + " (mod " + c.modulus.str() + ")";
    }
    return "";
}

} // namespace

std::string Condition::str() const { return print_condition(*this); }

std::string print_claim(const Claim& c) {
    std::ostringstream os;
    os << "claim " << c.name << "\n";
    os << "kind: "
       << (c.kind == ClaimKind::Congruence ? "congruence"
           : c.kind == ClaimKind::SeriesIdentity ? "series" : "padic")
       << "\n";
    os << "status: "
       << (c.status == ClaimStatus::Theorem ? "theorem"
           : c.status == ClaimStatus::Conjecture ? "conjecture" : "expected_failure")
       << "\n";
    if (!c.conditions.empty()) {
        os << "require: ";
        for (size_t i = 0; i < c.conditions.size(); ++i)
            os << (i ? ", " : "") << print_condition(c.conditions[i]);
        os << "\n";
    }
    os << "lhs: sum " << c.lhs.var << " = 0 .. "
       << (c.lhs.infinite ? std::string("inf") : c.lhs.upper.str()) << " of "
       << print_term(c.lhs.term) << "\n";
    if (c.rhs) os << "rhs: " << print_term(*c.rhs) << "\n";
    if (!c.modulus.empty()) {
        os << "mod: ";
        for (size_t i = 0; i < c.modulus.size(); ++i) {
            const auto& m = c.modulus[i];
            if (i) os << "*";
            switch (m.kind) {
                case ModFactor::Kind::Phi: os << "Phi(" << m.arg.str() << ")"; break;
                case ModFactor::Kind::QInt: os << "[" << m.arg.str() << "]"; break;
                case ModFactor::Kind::OneMinusAQn: os << "(1-a*q^(" << m.arg.str() << "))"; break;
                case ModFactor::Kind::AMinusQn: os << "(a-q^(" << m.arg.str() << "))"; break;
                case ModFactor::Kind::PPow: os << "p"; break;
            }
            if (m.mult != 1) os << "^" << m.mult;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Conditions / instantiation
// ---------------------------------------------------------------------------

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

bool Condition::holds(const Assignment& asg) const {
    auto it = asg.find(sym);
    if (it == asg.end()) throw UnresolvedSymbol(sym);
    long v = it->second;
    switch (type) {
        case Type::Even: return v % 2 == 0;
        case Type::Odd: return v % 2 != 0;
        case Type::Prime: return is_prime_long(v);
        case Type::Ge: return v >= rhs.eval_int(asg);
        case Type::Eq: return v == rhs.eval_int(asg);
        case Type::Residue: {
            long m = modulus.eval_int(asg);
            if (m <= 0) throw ValidationError("residue modulus must be positive");
            long r = (v - rhs.eval_int(asg)) % m;
            return r == 0;
        }
    }
    return false;
}

namespace {

void collect_syms(const Expr& e, std::set<std::string>* out) {
    switch (e.op()) {
        case Expr::Op::Sym: out->insert(e.sym_name()); break;
        case Expr::Op::Const: break;
        case Expr::Op::Neg:
        case Expr::Op::Pow: collect_syms(e.left(), out); break;
        default:
            collect_syms(e.left(), out);
            collect_syms(e.right(), out);
    }
}

void collect_term_syms(const Term& t, std::set<std::string>* out);

void collect_factor_syms(const Factor& f, std::set<std::string>* out) {
    collect_syms(f.form, out);
    collect_syms(f.bqexp, out);
    collect_syms(f.step, out);
    collect_syms(f.length, out);
    for (const auto& b : f.bases) collect_syms(b.q_exp, out);
    if (f.nested) {
        if (!f.nested->infinite) collect_syms(f.nested->upper, out);
        collect_term_syms(f.nested->term, out);
        out->erase(f.nested->var);
    }
    if (f.kind == Factor::Kind::SymVal) out->insert(f.sym);
}

void collect_term_syms(const Term& t, std::set<std::string>* out) {
    for (const auto& tf : t) collect_factor_syms(tf.factor, out);
}

} // namespace

std::vector<std::string> free_symbols(const Claim& c) {
    std::set<std::string> syms;
    for (const auto& cond : c.conditions) {
        syms.insert(cond.sym);
        collect_syms(cond.rhs, &syms);
        collect_syms(cond.modulus, &syms);
    }
    if (!c.lhs.infinite) collect_syms(c.lhs.upper, &syms);
    collect_term_syms(c.lhs.term, &syms);
    if (c.rhs) collect_term_syms(*c.rhs, &syms);
    for (const auto& m : c.modulus) collect_syms(m.arg, &syms);
    syms.erase(c.lhs.var);
    return {syms.begin(), syms.end()};
}

ConcreteClaim instantiate(const Claim& c, const Assignment& asg) {
    for (const auto& sym : free_symbols(c))
        if (!asg.count(sym)) throw UnresolvedSymbol(sym);
    for (const auto& cond : c.conditions)
        if (!cond.holds(asg))
            throw SideConditionViolated(c.name + ": condition '" + cond.str() + "' fails");
    ConcreteClaim cc;
    cc.claim = &c;
    cc.assignments = asg;
    if (!c.lhs.infinite) {
        BigRat u = c.lhs.upper.eval(asg);
        if (!u.is_integer())
            throw NonIntegralBound(c.name + ": upper bound " + c.lhs.upper.str() +
                                   " evaluates to " + u.str());
        long uv = u.to_long();
        if (uv < 0)
            throw NonIntegralBound(c.name + ": upper bound is negative (" + u.str() + ")");
        cc.upper = uv;
    }
    // Base q-exponents, steps, and closed-form lengths must resolve to
    // integers (a non-integer signals a mis-stated claim instance).
    auto check_term = [&](const Term& t, bool is_summand) {
        Assignment probe = asg;
        probe["k"] = 0;
        for (const auto& tf : t) {
            const Factor& f = tf.factor;
            if (f.kind == Factor::Kind::Poch || f.kind == Factor::Kind::PochInf) {
                for (const auto& b : f.bases) (void)b.q_exp.eval_int(probe);
                long step = f.step.eval_int(probe);
                if (step <= 0)
                    throw NonIntegralBound(c.name + ": factorial step must be positive");
                if (f.kind == Factor::Kind::Poch && !is_summand) {
                    long len = f.length.eval_int(probe);
                    if (len < 0)
                        throw NonIntegralBound(c.name + ": factorial length is negative");
                }
            }
            if (f.kind == Factor::Kind::QPow && !is_summand) (void)f.form.eval_int(probe);
            if (f.kind == Factor::Kind::ParamPow || f.kind == Factor::Kind::NegOnePow)
                (void)f.form.eval_int(probe);
        }
    };
    check_term(c.lhs.term, true);
    if (c.rhs) {
        for (const auto& tf : *c.rhs)
            if (tf.factor.kind == Factor::Kind::Nested) check_term(tf.factor.nested->term, true);
        check_term(*c.rhs, false);
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<Claim> registry_load(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!fs::exists(dir)) throw Error("claims directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".qclaim")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Claim> claims;
    std::set<std::string> names;
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        Claim c;
        try {
            c = parse_claim(buf.str(), path.filename().string());
        } catch (const Error& e) {
            throw Error(path.filename().string() + ": " + e.what());
        }
        if (!names.insert(c.name).second) throw DuplicateClaim(c.name);
        claims.push_back(std::move(c));
    }
    return claims;
}

std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::Congruence: return "congruence";
        case ClaimKind::SeriesIdentity: return "series";
        case ClaimKind::PadicCongruence: return "padic";
    }
    return "?";
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Theorem: return "theorem";
        case ClaimStatus::Conjecture: return "conjecture";
        case ClaimStatus::ExpectedFailure: return "expected_failure";
    }
    return "?";
}

} // namespace qcong
