#pragma once

#include "hh/relations.hpp"

#include <string>
#include <vector>

namespace hh {

struct RelationResult {
    std::string text;
    int degree = -1;  // -1 when every side is the zero polynomial
    bool holds = false;
    std::string message;
    std::vector<Vector> side_coords;
};

// throws DegreeMismatch when a side is inhomogeneous or the sides have different degrees
RelationResult verify_relation(Evaluator& E, const RelationExpr& rel);

struct GenerationDegree {
    int d = 0;
    std::size_t span = 0, hh = 0;
    bool pass = false;
};

struct GenerationReport {
    std::vector<GenerationDegree> degrees;
    std::string message;
    bool pass = false;
};

// span of all products of the generators (degree-0 generators acting as coefficients)
// against dim HH^d, for d = 0..cap
GenerationReport verify_generation(Evaluator& E, const std::vector<Atom>& generators, int cap);

struct GeneratorNilpotence {
    Atom generator;
    NilpotenceResult result;
    bool expected_nilpotent = false;
    bool ok = false;
};

struct QuotientDegree {
    int d = 0;
    std::size_t hh = 0;        // dim HH^d
    std::size_t ideal = 0;     // dim of the degree-d part of the ideal of nilpotent generators
    std::size_t combined = 0;  // dim (ideal + monomials in the quotient generators)
    long monomials = 0;        // number of monomials of degree d in the quotient generators
    long expected = 0;         // Hilbert function of the stated quotient in degree d
    bool pass = false;
};

struct QuotientReport {
    std::vector<GeneratorNilpotence> generators;
    std::vector<RelationResult> relations;
    std::vector<QuotientDegree> degrees;
    bool generators_ok = false, relations_ok = false, counts_ok = false;
    bool pass = false;
};

QuotientReport verify_quotient_mod_nilpotence(Evaluator& E, const Presentation& P, int cap);

// default power/degree cap
inline int default_cap(int m) { return 2 * m + 4; }

}  // namespace hh
