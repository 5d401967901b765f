#pragma once

#include "hh/algebra.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hh {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct DegreeZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The generator e_i (x)_r e_{i+n-2r} of P^n. The offset n-2r is kept as an integer.
struct Summand {
    int n = 0, i = 0, r = 0;
    int offset() const { return n - 2 * r; }
    auto operator<=>(const Summand&) const = default;
};

// One term c * left (summand) right of a generator image under the differential.
struct DiffTerm {
    Scalar c;
    int left;   // basis path ending at the summand's first vertex
    int pos;    // summand position in P^{n-1}
    int right;  // basis path starting at the summand's target vertex
};

// Underlying vector space of P^n: basis left (summand) right.
class Projective {
public:
    Projective(const Algebra& A, int n);

    int degree() const { return n_; }
    std::size_t summand_count() const { return summands_.size(); }
    const Summand& summand(int pos) const { return summands_[pos]; }
    int target(int pos) const { return targets_[pos]; }
    std::size_t dimension() const { return offsets_.back(); }

    std::size_t index(int pos, int left, int right) const;
    struct Entry {
        int pos, left, right;
    };
    Entry decode(std::size_t idx) const;

private:
    const Algebra* A_;
    int n_;
    std::vector<Summand> summands_;
    std::vector<int> targets_;
    std::vector<std::size_t> offsets_;
    std::vector<int> end_idx_, start_idx_;
};

struct ResolutionElement {
    int n = 0;
    std::map<std::size_t, Scalar> terms;  // Projective index -> coefficient

    bool is_zero() const { return terms.empty(); }
    void add(std::size_t idx, const Scalar& c);
    ResolutionElement& operator+=(const ResolutionElement& o);
    bool operator==(const ResolutionElement& o) const;
};

// Formal combination of arrow words in the path algebra KQ (not reduced).
// Arrows are coded 2*i for a_i and 2*i+1 for abar_i.
struct GElement {
    int n = 0, r = 0, i = 0;
    std::map<std::vector<int>, Scalar> value;

    GElement& operator+=(const GElement& o);
    bool operator==(const GElement& o) const;
};

struct ExactnessDegree {
    int n;
    std::size_t rank, expected;
    bool complex_ok;
    bool pass;
};

class Resolution {
public:
    explicit Resolution(const Algebra& A);

    const Algebra& algebra() const { return *A_; }
    int m() const { return A_->m(); }

    // position of the summand (i, r) in P^n, i reduced mod m
    int pos(int n, int i, int r) const { return A_->vertex(i) * (n + 1) + r; }
    std::vector<Summand> projective(int n) const;
    const Projective& layout(int n) const;

    // image of the generator at `pos` of P^n (n >= 1) as terms in P^{n-1}
    const std::vector<DiffTerm>& image(int n, int pos) const;

    ResolutionElement generator(int n, int pos) const;
    ResolutionElement differential_apply(const ResolutionElement& x) const;
    AlgebraElement augmentation(const ResolutionElement& x) const;

    GElement g_element(int n, int r, int i) const;

    // rank of the differential on the underlying vector spaces; n = 0 is the augmentation
    std::size_t differential_rank(int n) const;
    std::vector<ExactnessDegree> exactness_check(int n_max) const;

private:
    std::vector<DiffTerm> build_image(int n, int pos) const;

    const Algebra* A_;
    mutable std::vector<std::unique_ptr<Projective>> layouts_;
    mutable std::vector<std::vector<std::vector<DiffTerm>>> images_;
    mutable std::map<std::tuple<int, int, int>, GElement> gcache_;
};

}  // namespace hh
