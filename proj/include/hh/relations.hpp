#pragma once

#include "hh/cocycles.hpp"
#include "hh/products.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct BadRelation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Centre elements usable in relations and generator lists:
//   eps[i] = (a_i abar_i)^N, f[i] = a_i abar_i + abar_i a_i,
//   atop = a(abar a)^{N-1} and btop = abar(a abar)^{N-1} (m = 1 only).
enum class CentreName { Eps, F, ATop, BTop };

struct Atom {
    bool is_cocycle = true;
    NamedCocycleId id;
    CentreName centre = CentreName::Eps;
    int index = 0;
    auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a, int m);

// Integer combination of words in atoms. The empty word is the unit.
using Poly = std::map<std::vector<Atom>, long>;

std::string to_string(const Poly& p, int m);

struct RelationExpr {
    std::string text;         // instantiated source line
    std::vector<Poly> sides;  // sides[0] = sides[1] = ...
};

// Parameters visible to the fixture language: m, N, S = N(N+1)/2 and the characteristic.
struct FixtureParams {
    int m, N;
    unsigned characteristic;
    static FixtureParams of(const Algebra& A) { return {A.m(), A.N(), A.field().characteristic()}; }
};

// One line of a fixture file, with its loops and conditions expanded.
//   [KIND] [for V in LO..HI]* [if COND]* : BODY
// KIND is gen, quotient, qrel or rel (the default, in which case the clause part and
// colon may be omitted). COND is char|N, char!|N, char=P, char!=P or a comparison of
// integer expressions. A gen/quotient body is a comma separated list of atoms; a rel
// body is SIDE = SIDE (= SIDE)*.
struct FixtureLine {
    std::string kind;
    std::vector<RelationExpr> relations;  // rel, qrel
    std::vector<Atom> atoms;              // gen, quotient
};

std::vector<FixtureLine> parse_fixture_line(const std::string& line, const FixtureParams& P);
RelationExpr parse_relation(const std::string& text, const FixtureParams& P);

struct Presentation {
    std::string source;
    std::vector<Atom> generators;           // includes degree-0 ones; 1 is implicit
    std::vector<Atom> quotient_generators;  // non-nilpotent ones
    std::vector<RelationExpr> quotient_relations;
    std::vector<RelationExpr> relations;
};

Presentation load_presentation(const std::string& path, const FixtureParams& P);
// data directory: HH_DATA env var, else the compiled-in default
std::string data_dir();
// fixture file holding the generator theorem for these parameters; throws NoClosedForm
// for m = 1, N = 1
std::string presentation_file(const Algebra& A);
std::vector<RelationExpr> load_relations(const std::string& path, const FixtureParams& P);

// Evaluates words in atoms as cohomology classes, caching cocycles and liftings.
class Evaluator {
public:
    explicit Evaluator(const HomComplex& H);

    const HomComplex& complex() const { return *H_; }
    const Products& products() const { return P_; }

    int degree(const Atom& a) const { return a.is_cocycle ? a.id.n : 0; }
    AlgebraElement centre_value(const Atom& a) const;
    const Cochain& cocycle(const NamedCocycleId& id);
    const Lifting& lifting(const NamedCocycleId& id, int q);

    Cochain unit() const;
    // x * a: cup with the atom's lifting, or the centre action
    Cochain times(const Cochain& x, const Atom& a);
    Cochain word(const std::vector<Atom>& w);
    // nullopt for the zero polynomial; throws DegreeMismatch for inhomogeneous input
    std::optional<Cochain> evaluate(const Poly& p);

private:
    const HomComplex* H_;
    Products P_;
    std::map<NamedCocycleId, Cochain> cocycles_;
    std::map<NamedCocycleId, Lifting> liftings_;
};

}  // namespace hh
