#pragma once

#include "hh/matrix.hpp"
#include "hh/resolution.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hh {

struct NotACocycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Hom(P^n, Lambda) with coordinates (summand position, basis path of e_i Lambda e_target).
class CochainSpace {
public:
    CochainSpace(const Resolution& R, int n);

    int degree() const { return n_; }
    std::size_t dimension() const { return offsets_.back(); }
    std::size_t summand_count() const { return offsets_.size() - 1; }
    std::size_t index(int pos, int path) const;  // throws if path is not in e_i Lambda e_target
    struct Coordinate {
        int pos, path;
    };
    Coordinate coordinate(std::size_t idx) const { return coords_[idx]; }
    const std::vector<int>& paths(int pos) const;

private:
    const Algebra* A_;
    int n_;
    std::vector<std::size_t> offsets_;
    std::vector<Coordinate> coords_;
    std::vector<int> sources_, targets_;
    std::vector<int> local_;
};

// values[pos] lies in e_i Lambda e_target of that summand
struct Cochain {
    int n = 0;
    std::vector<AlgebraElement> values;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain scaled(const Scalar& c) const;
    bool operator==(const Cochain& o) const;
};

struct CohomologyGroup {
    int n = 0;
    std::size_t dimension = 0;
    std::size_t coboundary_rank = 0;
    std::vector<Cochain> representatives;
    std::vector<Vector> representative_vectors;
    std::vector<Vector> coboundary_basis;
    LinearSolver reducer;  // columns: coboundary basis then representatives
};

class HomComplex {
public:
    explicit HomComplex(const Resolution& R);

    const Resolution& resolution() const { return *R_; }
    const Algebra& algebra() const { return R_->algebra(); }

    const CochainSpace& space(int n) const;
    // matrix of f -> f o d^n, from Hom(P^{n-1}) to Hom(P^n); n >= 1
    const Matrix& induced_matrix(int n) const;
    std::size_t induced_rank(int n) const;  // 0 for n = 0
    std::size_t kernel_dimension(int n) const;
    std::size_t hh_dimension(int n) const;
    const CohomologyGroup& cohomology_basis(int n) const;

    Vector to_vector(const Cochain& f) const;
    Cochain from_vector(int n, const Vector& v) const;
    Cochain zero(int n) const;
    // cochain with a single value at the given summand
    Cochain single(int n, int pos, const AlgebraElement& value) const;

    // f applied to an element of P^n
    AlgebraElement evaluate(const Cochain& f, const ResolutionElement& x) const;
    Cochain coboundary(const Cochain& f) const;
    bool is_cocycle(const Cochain& f) const;
    Vector reduce_mod_coboundaries(const Cochain& f) const;
    // representative combination for given class coordinates
    Cochain class_representative(int n, const Vector& coords) const;

private:
    const Resolution* R_;
    mutable std::vector<std::unique_ptr<CochainSpace>> spaces_;
    mutable std::vector<std::unique_ptr<Matrix>> matrices_;
    mutable std::vector<std::optional<std::size_t>> ranks_;
    mutable std::vector<std::unique_ptr<CohomologyGroup>> groups_;
};

}  // namespace hh
