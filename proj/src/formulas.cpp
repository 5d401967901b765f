#include "hh/formulas.hpp"

namespace hh {

namespace {

int mod4(long x) { return static_cast<int>(((x % 4) + 4) % 4); }

void check_params(int m, int N, int n) {
    if (m < 1 || N < 1) throw InvalidParams("need m >= 1 and N >= 1");
    if (n < 0) throw InvalidParams("negative degree");
}

// kernel tables, char does not divide N
long kernel_coprime(const CaseKey& k, long m, long N) {
    const long p = k.d.p, t = k.d.t;
    const long base = (2 * p + 1) * (m * N + 1);
    const long E = m * (N - 1);
    if (k.m_even) {
        if (k.t_last) return base + E + 2;
        return k.t_even ? base : base + E;
    }
    if (k.char_is_2) {
        if (k.t_last) return p % 2 == 0 ? base + 2 : base + E + 2;
        return (p + t) % 2 == 0 ? base : base + E;
    }
    const long b = (2 * p + 1) * m * N;
    if (k.t_last) {
        if (p % 2 == 1) return b + E + (p + 1) / 2;
        return k.t_mod4 == 0 ? b + p / 2 + 3 : b + p / 2 + 2;
    }
    if (p % 2 == 0) {
        if (k.t_even) return k.t_mod4 == 0 ? b + p / 2 + 1 : b + p / 2;
        return k.t_mod4 == 1 ? b + E + p / 2 + 1 : b + E + p / 2;
    }
    if (k.t_even) return mod4(m + t) == 1 ? b + E + (p + 1) / 2 : b + E + (p - 1) / 2;
    return k.t_mod4 == k.m_mod4 ? b + (p - 1) / 2 : b + (p + 1) / 2;
}

// kernel tables, char divides N
long kernel_divides(const CaseKey& k, long m, long N) {
    const long p = k.d.p, t = k.d.t;
    const long base = (2 * p + 1) * (m * N + 1);
    if (k.m_even) {
        if (k.t_last) return (2 * p + 2) * (m * N + 1);
        return k.t_even ? base : (2 * p + 2) * m * N + 2 * p;
    }
    if (k.char_is_2) {
        if (k.t_last) return p % 2 == 0 ? base + 2 : (2 * p + 2) * (m * N + 1);
        return (p + t) % 2 == 0 ? base : (2 * p + 2) * m * N + 2 * p;
    }
    const long b1 = (2 * p + 1) * m * N;
    const long b2 = (2 * p + 2) * m * N;
    if (k.t_last) {
        if (k.p_mod4 == 3) return b2 + (p + 1) / 2;
        if (k.p_mod4 == 1) return b2 + (p - 1) / 2;
        return k.t_mod4 == 0 ? b1 + p / 2 + 3 : b1 + p / 2 + 2;
    }
    if (p % 2 == 0) {
        if (k.t_even) return k.t_mod4 == 0 ? b1 + p / 2 + 1 : b1 + p / 2;
        if (k.p_mod4 == 0) return b2 + p / 2;
        return k.t_mod4 == 1 ? b2 + p / 2 + 1 : b2 + p / 2 - 1;
    }
    if (k.t_even) {
        if (k.p_mod4 == 1) return b2 + (p - 1) / 2;
        return mod4(m + t) == 1 ? b2 + (p + 1) / 2 : b2 + (p - 3) / 2;
    }
    return k.t_mod4 == k.m_mod4 ? b1 + (p - 1) / 2 : b1 + (p + 1) / 2;
}

// m odd, char != 2, char does not divide N: correction added to m(N-1)+p
long odd_coprime_shift(const CaseKey& k) {
    const long p = k.d.p, t = k.d.t, m = k.m;
    if (k.t_last) return p % 2 == 0 ? 3 : 1;
    if (t == 0) {
        if (p % 2 == 0) return 1;
        return ((m - 1) / 2) % 2 == 0 ? 3 : 1;
    }
    if (k.t_even) {
        if (p % 2 == 0) return 1;
        return mod4(m + t) == 3 ? -1 : 1;
    }
    if (p % 2 == 1) return 0;
    return k.t_mod4 == 1 ? 2 : 0;
}

// m odd, char != 2, char divides N: correction added to mN+p
long odd_divides_shift(const CaseKey& k) {
    const long p = k.d.p, t = k.d.t, m = k.m;
    if (k.t_last) {
        if (p % 2 == 0) return mod4(p + m) == 1 ? 3 : 2;
        return k.p_mod4 == 1 ? 0 : 1;
    }
    if (t == 0) {
        if (k.p_mod4 <= 1) return 1;
        if (k.p_mod4 == 2) return 0;
        return k.m_mod4 == 1 ? 3 : 0;
    }
    if (k.t_even) {
        if (p % 2 == 0) return mod4(p + t) == 0 ? 1 : 0;
        const bool r1 = mod4(m + t) == 1;
        if (k.p_mod4 == 1) return r1 ? 0 : -1;
        return r1 ? 1 : -2;
    }
    if (k.p_mod4 == 0) return k.t_mod4 == 1 ? 1 : 0;
    if (k.p_mod4 == 2) return k.t_mod4 == 1 ? 2 : -1;
    return mod4(p + m - t) == 1 ? -1 : 0;
}

}  // namespace

DegreeDecomposition DegreeDecomposition::of(int n, int m) {
    if (m < 1) throw InvalidParams("need m >= 1");
    if (n < 0) throw InvalidParams("negative degree");
    return {n, n / m, n % m};
}

bool char_divides(unsigned characteristic, int N) {
    return characteristic != 0 && N % static_cast<long>(characteristic) == 0;
}

CaseKey CaseKey::classify(int m, int N, unsigned characteristic, int n) {
    check_params(m, N, n);
    CaseKey k;
    k.m = m;
    k.d = DegreeDecomposition::of(n, m);
    k.m_even = m % 2 == 0;
    k.t_even = k.d.t % 2 == 0;
    k.t_last = k.d.t == m - 1;
    k.p_mod4 = mod4(k.d.p);
    k.t_mod4 = mod4(k.d.t);
    k.m_mod4 = mod4(m);
    k.char_divides_N = char_divides(characteristic, N);
    k.char_is_2 = characteristic == 2;
    return k;
}

long hom_dim_formula(int m, int N, int n) {
    check_params(m, N, n);
    if (m <= 2) return 4L * N * (n + 1);
    auto d = DegreeDecomposition::of(n, m);
    const long mN = static_cast<long>(m) * N;
    return d.t == m - 1 ? (4L * d.p + 4) * mN : (4L * d.p + 2) * mN;
}

long kernel_dim_formula(int m, int N, unsigned characteristic, int n) {
    check_params(m, N, n);
    if (m < 3) throw UnsupportedM("kernel tables are stated for m >= 3 only");
    CaseKey k = CaseKey::classify(m, N, characteristic, n);
    return k.char_divides_N ? kernel_divides(k, m, N) : kernel_coprime(k, m, N);
}

long hh_dim_formula(int m, int N, unsigned characteristic, int n) {
    check_params(m, N, n);
    const long mN = static_cast<long>(m) * N;
    const bool div = char_divides(characteristic, N);
    if (m == 1) {
        if (n == 0) return N + 3;
        if (N == 1) throw NoClosedForm("no dimension table for m = 1, N = 1 in positive degree");
        if (characteristic == 2) return N + 4L * n + 3;
        if (!div) return N + n + 2;
        return (mod4(n) == 1 || mod4(n) == 2) ? N + n + 2 : N + n + 3;
    }
    if (n == 0) return mN + 1;
    if (m == 2) {
        if (N == 1) return 2L * (n + 1);
        return div ? 2L * N + 2L * n + 1 : 2L * N + 2L * n;
    }
    CaseKey k = CaseKey::classify(m, N, characteristic, n);
    const long p = k.d.p;
    if (k.m_even || k.char_is_2) {
        if (!div) return (k.t_last ? 4 * p + 4 : 4 * p + 2) + m * (N - 1L);
        return (k.t_last ? 4 * p + 3 : 4 * p + 1) + mN;
    }
    if (!div) return m * (N - 1L) + p + odd_coprime_shift(k);
    return mN + p + odd_divides_shift(k);
}

std::vector<CentreElement> centre_basis_formula(const Algebra& A) {
    const int m = A.m(), N = A.N();
    std::vector<CentreElement> out;
    out.push_back({"1", A.unit()});
    if (m == 1) {
        out.push_back({"(a abar)^" + std::to_string(N), A.element(A.socle(0))});
        for (int s = 1; s < N; ++s) {
            AlgebraElement z = A.element(A.pow_ab(0, s));
            z += A.element(A.pow_ba(0, s));
            out.push_back({"(a abar)^" + std::to_string(s) + "+(abar a)^" + std::to_string(s), z});
        }
        out.push_back({"a(abar a)^" + std::to_string(N - 1), A.element(A.a_head(0, N - 1))});
        out.push_back({"abar(a abar)^" + std::to_string(N - 1), A.element(A.b_head(0, N - 1))});
        return out;
    }
    for (int i = 0; i < m; ++i) {
        const std::string si = std::to_string(i);
        out.push_back({"(a" + si + " abar" + si + ")^" + std::to_string(N), A.element(A.socle(i))});
        for (int s = 1; s < N; ++s) {
            AlgebraElement z = A.element(A.pow_ab(i, s));
            z += A.element(A.pow_ba(i + 1, s));
            const std::string ss = std::to_string(s);
            out.push_back({"(a" + si + " abar" + si + ")^" + ss + "+(abar" + si + " a" + si + ")^" + ss, z});
        }
    }
    return out;
}

}  // namespace hh
