#pragma once

#include "hh/algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct UnsupportedM : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoClosedForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// n = p*m + t with 0 <= t <= m-1
struct DegreeDecomposition {
    int n = 0, p = 0, t = 0;
    static DegreeDecomposition of(int n, int m);
};

// Classifiers used by the case tables. Residues are in 0..3.
struct CaseKey {
    int m = 0;
    DegreeDecomposition d;
    bool m_even = false;
    bool t_even = false;
    bool t_last = false;  // t == m-1
    int p_mod4 = 0, t_mod4 = 0, m_mod4 = 0;
    bool char_divides_N = false;
    bool char_is_2 = false;

    static CaseKey classify(int m, int N, unsigned characteristic, int n);
};

bool char_divides(unsigned characteristic, int N);

long hom_dim_formula(int m, int N, int n);
long kernel_dim_formula(int m, int N, unsigned characteristic, int n);  // dim ker d^{n+1}
long hh_dim_formula(int m, int N, unsigned characteristic, int n);

struct CentreElement {
    std::string label;
    AlgebraElement value;
};
std::vector<CentreElement> centre_basis_formula(const Algebra& A);

}  // namespace hh
