#pragma once

#include "hh/homcomplex.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <variant>
#include <vector>

namespace hh {

struct LiftingInfeasible : std::logic_error {
    using std::logic_error::logic_error;
};
struct NotCentral : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Chain map L^q : P^{q+n} -> P^q over f. maps[q][pos] is the image of the generator at
// `pos` of P^{q+n}.
struct Lifting {
    int n = 0;
    Cochain cocycle;
    std::vector<std::vector<ResolutionElement>> maps;

    int computed() const { return static_cast<int>(maps.size()) - 1; }
};

struct LiftingCheck {
    bool augmentation_ok = true;     // d^0 L^0 = f
    std::vector<bool> square_ok;     // d^q L^q = L^{q-1} d^{q+n}, index q (entry 0 unused)
    bool pass() const;
};

struct NilpotentAt {
    int k;
};
struct NonzeroUpTo {
    int cap;
};
using NilpotenceResult = std::variant<NilpotentAt, NonzeroUpTo>;

// Cup products computed from solver liftings. Solvers for the blocks e_i P^q e_j are
// shared across all cocycles of one HomComplex.
class Products {
public:
    explicit Products(const HomComplex& H);

    const HomComplex& complex() const { return *H_; }

    Lifting lift(const Cochain& f, int q_max) const;
    // extend an existing lifting up to q_max
    void extend(Lifting& L, int q_max) const;
    LiftingCheck check(const Lifting& L) const;

    // L^q applied to an arbitrary element of P^{q+n}
    ResolutionElement apply(const Lifting& L, int q, const ResolutionElement& x) const;

    // eta (deg n) cup theta = eta o L^n(theta)
    Cochain cup(const Cochain& eta, const Cochain& theta) const;
    Cochain cup(const Cochain& eta, const Lifting& theta) const;

    Cochain scalar_action(const AlgebraElement& z, const Cochain& f) const;
    NilpotenceResult is_nilpotent(const Cochain& f, int power_cap) const;

    // class coordinates, convenience
    Vector coords(const Cochain& f) const { return H_->reduce_mod_coboundaries(f); }

private:
    struct Block {
        std::vector<std::size_t> cols;            // Projective indices of the unknowns
        std::map<std::size_t, std::size_t> rows;  // P^{q-1} index (or path id at q = 0) -> row
        LinearSolver solver;
    };
    const Block& block(int q, int i, int j) const;
    ResolutionElement solve_one(int q, int i, int j, const std::vector<std::pair<std::size_t, Scalar>>& rhs) const;

    const HomComplex* H_;
    const Resolution* R_;
    const Algebra* A_;
    mutable std::map<std::tuple<int, int, int>, std::unique_ptr<Block>> blocks_;
};

// left * x * right for basis paths; terms that vanish are dropped
ResolutionElement multiply(const Resolution& R, int left, const ResolutionElement& x, int right);

}  // namespace hh
