#pragma once

#include "hh/homcomplex.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct InadmissibleId : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadCocycleName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { Chi, Pi, Phi, Psi, F, E, Theta, Omega };

std::string family_name(Family f);

// index: alpha/beta/gamma/delta/sigma/tau, the vertex j, or r when m = 1.
// s: exponent for F and E families, 0 otherwise.
struct NamedCocycleId {
    Family family = Family::Chi;
    int n = 0;
    int index = 0;
    int s = 0;
    auto operator<=>(const NamedCocycleId&) const = default;
};

// stable text names: chi[2,0], F[2,1,1], omega[1,j=2], theta[4] (m=2), F[4,1] (m=1)
std::string to_string(const NamedCocycleId& id, int m);
NamedCocycleId parse_cocycle_id(const std::string& text, int m);

// value c * path at the generator (i, r) of P^n
struct CocycleTerm {
    int i = 0;
    int r = 0;
    int path = 0;
    long c = 1;
};

struct CaseContext {
    const Algebra* A;
    int m, N;
    unsigned characteristic;
    int n, p, t;
    bool divides;  // char | N
};

// One family of one basis proposition: which ids exist in degree n and what they send
// the generators to.
struct CocycleRule {
    Family family;
    std::function<std::vector<std::pair<int, int>>(const CaseContext&)> ids;  // (index, s)
    std::function<std::vector<CocycleTerm>(const CaseContext&, int index, int s)> terms;
};

struct CaseTable {
    std::string name;
    std::vector<CocycleRule> rules;
};

// throws NoClosedForm for m = 1, N = 1 (no basis table)
CaseTable case_table(const Algebra& A);
CaseContext case_context(const Algebra& A, int n);

std::vector<NamedCocycleId> paper_basis(const Algebra& A, int n);

Cochain named_cocycle(const HomComplex& H, const NamedCocycleId& id);
Cochain named_cocycle(const HomComplex& H, const CaseTable& table, const NamedCocycleId& id);

struct BasisReport {
    int n = 0;
    std::size_t family_size = 0;
    std::size_t hh_dimension = 0;
    std::size_t class_rank = 0;
    bool all_cocycles = true;
    bool independent = true;
    bool cardinality = true;
    bool pass = true;
    std::optional<NamedCocycleId> offending;
    std::string message;
};

BasisReport verify_paper_basis(const HomComplex& H, int n);
BasisReport verify_paper_basis(const HomComplex& H, const CaseTable& table, int n);

// coordinates of a class of HH^n in the named basis; nullopt when the named family does
// not span (it is dependent at some parameters) or there is no table
std::optional<std::vector<std::pair<NamedCocycleId, Scalar>>> named_decomposition(const HomComplex& H, int n,
                                                                                   const Vector& coords);

}  // namespace hh
