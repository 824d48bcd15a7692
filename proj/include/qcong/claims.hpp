#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcong/expr.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

enum class ClaimKind { Congruence, SeriesIdentity, PadicCongruence };
enum class ClaimStatus { Theorem, Conjecture, ExpectedFailure };

// Side condition on the integer symbols of a claim.
struct Condition {
    enum class Type { Even, Odd, Prime, Ge, Eq, Residue };
    Type type = Type::Even;
    std::string sym;
    Expr rhs;      // Eq / Residue target, Ge bound
    Expr modulus;  // Residue only

    bool holds(const Assignment& asg) const;
    std::string str() const;
};

struct SumSpec;

// One multiplicative factor of a term. A closed set of shapes: everything the
// paper's sums, closed forms, and p-adic specializations need.
struct Factor {
    enum class Kind {
        Bracket,   // [form] or [form]_q^(b)
        Poch,      // poch(base, ... ; step)_length ^power
        PochInf,   // pochinf(base, ... ; step) ^power       (series RHS)
        RPoch,     // rpoch(x)_k ^power — rising factorial (x)_k, rational x
        GammaP,    // gammap(x) — Morita's p-adic Gamma at rational x
        QPow,      // q^(expr) or q
        ParamPow,  // a^(expr) / e^(expr)
        Const,     // rational constant
        ExpK,      // c^k, rational c
        NegOnePow, // (-1)^(expr)
        SymVal,    // value of an integer symbol (e.g. p) as a factor
        Binomial,  // (mono - mono), e.g. (1 - a^(n))
        Nested,    // (sum ...) — truncated sum as an RHS factor
    };

    Kind kind = Kind::Const;
    Expr form;               // Bracket form; QPow/ParamPow/NegOnePow exponent; RPoch/GammaP argument
    Expr bqexp = Expr::constant(1L); // Bracket base exponent
    std::vector<Mono> bases; // Poch/PochInf bases; Binomial{left, right}
    Expr step = Expr::constant(1L);  // Poch/PochInf step exponent
    Expr length;             // Poch subscript
    int power = 1;           // Poch/PochInf/RPoch repetition
    BigRat value{1};         // Const value, ExpK base
    char param = 'a';        // ParamPow: which parameter
    std::string sym;         // SymVal
    std::shared_ptr<SumSpec> nested;
};

struct TermFactor {
    Factor factor;
    bool inverted = false; // came after '/'
};

using Term = std::vector<TermFactor>;

// sum k = 0 .. upper of term   (upper may be "inf" for series claims)
struct SumSpec {
    std::string var = "k";
    Expr upper;
    bool infinite = false;
    Term term;
};

struct ModFactor {
    enum class Kind { Phi, QInt, OneMinusAQn, AMinusQn, PPow };
    Kind kind = Kind::Phi;
    Expr arg; // Phi/QInt order or parametric q-exponent; unused for PPow
    int mult = 1;
};

struct Claim {
    std::string name;
    ClaimKind kind = ClaimKind::Congruence;
    ClaimStatus status = ClaimStatus::Theorem;
    std::vector<Condition> conditions;
    SumSpec lhs;
    std::optional<Term> rhs; // absent = 0 (congruences) — series claims require it
    std::vector<ModFactor> modulus;
    std::string source_file;
};

// A claim together with a concrete assignment that passed validation.
struct ConcreteClaim {
    const Claim* claim = nullptr;
    Assignment assignments;
    long upper = -1; // resolved upper bound; -1 when the sum is infinite
};

// Parse one claim from text. Throws SyntaxError / ValidationError.
Claim parse_claim(const std::string& text, const std::string& source_name = "<string>");

// Canonical text form; parse(print(parse(x))) == parse(x).
std::string print_claim(const Claim& c);

// Resolve and validate an assignment against a claim.
// Throws SideConditionViolated / NonIntegralBound / UnresolvedSymbol.
ConcreteClaim instantiate(const Claim& c, const Assignment& asg);

// Free integer symbols a claim needs assigned (k and the parameters a, e are
// never included).
std::vector<std::string> free_symbols(const Claim& c);

// Load every *.qclaim file in a directory (sorted by filename).
// Throws DuplicateClaim and propagates parse errors with file names.
std::vector<Claim> registry_load(const std::string& dir);

std::string to_string(ClaimKind k);
std::string to_string(ClaimStatus s);

} // namespace qcong
