#pragma once

#include "hh/homcomplex.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hh {

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle based on the bar complex reduced over the vertex subalgebra:
//   C^n = Hom_{S-S}(rad^{(x)_S n}, Lambda),
// with coordinates (radical word p_1..p_n, basis path q from s(p_1) to t(p_n)).
// Only the algebra's multiplication is used, not the minimal resolution.

// feasibility bound on dim C^n: HH_MAX_COORDS, default 100000
std::size_t max_bar_coordinates();

std::size_t bar_cochain_dimension(const Algebra& A, int n);

// throws TooLarge when dim C^n exceeds the bound
std::size_t bar_hh_dimension(const Algebra& A, int n);
std::size_t bar_hh_dimension(const Algebra& A, int n, std::size_t bound);

// delta^{n+1} delta^n on every basis cochain of C^n
bool bar_square_zero(const Algebra& A, int n);

struct BarDegree {
    int n = 0;
    bool feasible = false;
    std::size_t bar = 0, minimal = 0;
    bool match = false;
};

struct BarReport {
    std::vector<BarDegree> degrees;
    bool pass = false;  // every feasible degree matches
};

BarReport bar_cross_check(const HomComplex& H, int n_max);

}  // namespace hh
