#include "hh/cocycles.hpp"

#include "hh/formulas.hpp"

#include <algorithm>
#include <regex>

namespace hh {

namespace {

using IdList = std::vector<std::pair<int, int>>;
using Terms = std::vector<CocycleTerm>;

long sgn(long e) { return e % 2 == 0 ? 1 : -1; }
bool even(long x) { return x % 2 == 0; }

IdList range(int lo, int hi) {
    IdList out;
    for (int k = lo; k <= hi; ++k) out.push_back({k, 0});
    return out;
}

IdList with_exponents(int lo, int hi, int N) {
    IdList out;
    for (int j = lo; j <= hi; ++j)
        for (int s = 1; s <= N - 1; ++s) out.push_back({j, s});
    return out;
}

IdList when(bool c, IdList l) { return c ? l : IdList{}; }

// r of the summand e_i (x) e_{i+k} in P^n
int r_of(const CaseContext& c, long k) {
    if (!even(c.n - k) || k < -c.n || k > c.n) throw std::logic_error("offset outside P^n");
    return static_cast<int>((c.n - k) / 2);
}

// the same value at e_i (x) e_{i+k} for every vertex i
Terms every_vertex(const CaseContext& c, long k, const std::function<int(int)>& path,
                   const std::function<long(int)>& sign) {
    Terms out;
    const int r = r_of(c, k);
    for (int i = 0; i < c.m; ++i) out.push_back({i, r, path(i), sign(i)});
    return out;
}

// chi and pi share these index sets in the odd cases; parity selects which family
IdList odd_m_deltas(const CaseContext& c, bool chi, bool char2) {
    IdList out;
    const int p = c.p, t = c.t, m = c.m;
    if (t % 2 == 1) {
        for (int a = 0; a <= p - 1; ++a) {
            bool odd = (a + (m - t) / 2) % 2 == 1;
            if (char2 || odd == chi) out.push_back({p - 2 * a - 1, 0});
        }
    } else {
        for (int a = 0; a <= p; ++a) {
            bool ev = (a + t / 2) % 2 == 0;
            if (char2 || ev == chi) out.push_back({p - 2 * a, 0});
        }
    }
    return out;
}

CocycleRule chi_rule(IdList (*ids)(const CaseContext&), long (*sign)(const CaseContext&, int, int)) {
    return {Family::Chi, ids, [sign](const CaseContext& c, int a, int) {
                const Algebra& A = *c.A;
                return every_vertex(c, static_cast<long>(a) * c.m, [&](int i) { return A.idem(i); },
                                    [&](int i) { return sign(c, a, i); });
            }};
}

CocycleRule pi_rule(IdList (*ids)(const CaseContext&)) {
    return {Family::Pi, ids, [](const CaseContext& c, int a, int) {
                return Terms{{0, r_of(c, static_cast<long>(a) * c.m), c.A->socle(0), 1}};
            }};
}

// F_{n,j,s}: e_j (x) e_j -> (a_j abar_j)^s, e_{j+1} (x) e_{j+1} -> sign (abar_j a_j)^s
CocycleRule f_rule(bool signed_) {
    return {Family::F,
            [](const CaseContext& c) { return when(c.n % 2 == 0, with_exponents(0, c.m - 1, c.N)); },
            [signed_](const CaseContext& c, int j, int s) {
                const Algebra& A = *c.A;
                const int r = r_of(c, 0);
                const long sg = signed_ ? sgn(c.n / 2) : 1;
                return Terms{{j, r, A.pow_ab(j, s), 1}, {A.vertex(j + 1), r, A.pow_ba(j + 1, s), sg}};
            }};
}

CocycleRule theta_rule(IdList (*ids)(const CaseContext&)) {
    return {Family::Theta, ids,
            [](const CaseContext& c, int j, int) { return Terms{{j, r_of(c, 0), c.A->socle(j), 1}}; }};
}

// E_{n,j,s}: e_j (x) e_{j+1} -> (a_j abar_j)^s a_j
CocycleRule e_rule() {
    return {Family::E,
            [](const CaseContext& c) { return when(c.n % 2 == 1, with_exponents(0, c.m - 1, c.N)); },
            [](const CaseContext& c, int j, int s) { return Terms{{j, r_of(c, 1), c.A->a_head(j, s), 1}}; }};
}

CocycleRule omega_rule(IdList (*ids)(const CaseContext&)) {
    return {Family::Omega, ids,
            [](const CaseContext& c, int j, int) { return Terms{{j, r_of(c, 1), c.A->a_head(j, 0), 1}}; }};
}

// phi at e_i (x) e_{i+sigma m+1} and psi at e_i (x) e_{i+tau m-1}; long = (.)^{N-1} heads
CocycleRule phi_rule(std::function<IdList(const CaseContext&)> ids, bool long_, long (*sign)(const CaseContext&, int, int)) {
    return {Family::Phi, std::move(ids), [long_, sign](const CaseContext& c, int g, int) {
                const Algebra& A = *c.A;
                const int k = long_ ? c.N - 1 : 0;
                return every_vertex(c, static_cast<long>(g) * c.m + 1, [&](int i) { return A.a_head(i, k); },
                                    [&](int i) { return sign(c, g, i); });
            }};
}

CocycleRule psi_rule(std::function<IdList(const CaseContext&)> ids, bool long_, long (*sign)(const CaseContext&, int, int)) {
    return {Family::Psi, std::move(ids), [long_, sign](const CaseContext& c, int b, int) {
                const Algebra& A = *c.A;
                const int k = long_ ? c.N - 1 : 0;
                return every_vertex(c, static_cast<long>(b) * c.m - 1, [&](int i) { return A.b_head(i, k); },
                                    [&](int i) { return sign(c, b, i); });
            }};
}

long unsigned_vertex(const CaseContext&, int, int) { return 1; }

// ---- m >= 4 even --------------------------------------------------------------

CaseTable table_m_even() {
    CaseTable T{"m even, m >= 4", {}};
    T.rules.push_back(chi_rule([](const CaseContext& c) { return when(c.n % 2 == 0, range(-c.p, c.p)); },
                               [](const CaseContext& c, int a, int i) {
                                   return sgn((c.n / 2 - static_cast<long>(a) * (c.m / 2)) * i);
                               }));
    T.rules.push_back(pi_rule([](const CaseContext& c) { return when(c.n % 2 == 0, range(-c.p, c.p)); }));
    T.rules.push_back(f_rule(true));
    T.rules.push_back(theta_rule([](const CaseContext& c) { return when(c.n % 2 == 0 && c.divides, range(1, c.m - 1)); }));
    auto phi_sign = [](const CaseContext& c, int g, int i) {
        return sgn((c.n - 1 - static_cast<long>(g) * c.m) / 2 * i);
    };
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) {
            if (c.n % 2 == 0) return IdList{};
            IdList l = range(-c.p, -1);
            if (c.t == c.m - 1) l.push_back({-c.p - 1, 0});
            return l;
        },
        true, phi_sign));
    T.rules.push_back(phi_rule([](const CaseContext& c) { return when(c.n % 2 == 1, range(0, c.p)); }, false, phi_sign));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) {
            if (c.n % 2 == 0) return IdList{};
            IdList l = range(1, c.p);
            if (c.t == c.m - 1) l.push_back({c.p + 1, 0});
            return l;
        },
        true, phi_sign));
    T.rules.push_back(psi_rule([](const CaseContext& c) { return when(c.n % 2 == 1, range(-c.p, 0)); }, false, phi_sign));
    T.rules.push_back(e_rule());
    T.rules.push_back(omega_rule([](const CaseContext& c) { return when(c.n % 2 == 1 && c.divides, range(1, c.m - 1)); }));
    return T;
}

// ---- m >= 3 odd, char != 2 ----------------------------------------------------

// gamma/beta admissibility for the odd-degree phi and psi families
bool odd_parity(const CaseContext& c, int x) {
    if (c.t % 2 == 1) return even(x + (c.t - 1) / 2);
    return even(x + (c.m - 1) / 2 + c.t / 2);
}

CaseTable table_m_odd() {
    CaseTable T{"m odd, m >= 3, char != 2", {}};
    T.rules.push_back(chi_rule([](const CaseContext& c) { return when(c.n % 2 == 0, odd_m_deltas(c, true, false)); },
                               unsigned_vertex));
    T.rules.push_back(pi_rule([](const CaseContext& c) {
        if (c.n % 2 == 0) return odd_m_deltas(c, false, false);
        if (c.t == 0) return IdList{{c.p, 0}, {-c.p, 0}};
        return IdList{};
    }));
    T.rules.push_back(f_rule(true));
    // degree m-1 type classes: sigma = -(p+1), tau = p+1 when n is even and t = m-1
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) { return when(c.n % 2 == 0 && c.t == c.m - 1, IdList{{-(c.p + 1), 0}}); }, true,
        unsigned_vertex));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) { return when(c.n % 2 == 0 && c.t == c.m - 1, IdList{{c.p + 1, 0}}); }, true,
        unsigned_vertex));
    T.rules.push_back(theta_rule([](const CaseContext& c) {
        if (c.n % 2 == 1 || !c.divides) return IdList{};
        return (c.n / 2) % 2 == 0 ? range(0, c.m - 1) : range(1, c.m - 1);
    }));
    // odd degree phi: long image
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) {
            IdList l;
            if (c.n % 2 == 0) return l;
            const int p = c.p, t = c.t;
            for (int g = -2; g <= p + 1; ++g) {
                if (t % 2 == 1) {
                    if (2 * g > p && g <= p && odd_parity(c, g)) l.push_back({p - 2 * g, 0});
                } else if (t != c.m - 1) {
                    if (g <= p - 1 && 2 * g > p - 1 && odd_parity(c, g)) l.push_back({p - 2 * g - 1, 0});
                } else if (g <= p && 2 * g > p - 1 && even(g)) {
                    l.push_back({p - 2 * g - 1, 0});
                }
            }
            return l;
        },
        true, unsigned_vertex));
    // odd degree phi: short image
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) {
            IdList l;
            if (c.n % 2 == 0) return l;
            const int p = c.p, t = c.t;
            for (int g = 0; g <= p + 1; ++g) {
                if (t % 2 == 1) {
                    if (2 * g <= p && odd_parity(c, g)) l.push_back({p - 2 * g, 0});
                } else if (2 * g <= p - 1 && odd_parity(c, g)) {
                    l.push_back({p - 2 * g - 1, 0});
                }
            }
            return l;
        },
        false, unsigned_vertex));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) {
            IdList l;
            if (c.n % 2 == 0) return l;
            const int p = c.p, t = c.t;
            for (int b = -2; b <= p + 1; ++b) {
                if (t % 2 == 1) {
                    if (2 * b < p && b >= 0 && odd_parity(c, b)) l.push_back({p - 2 * b, 0});
                } else if (t != c.m - 1) {
                    if (b >= 0 && 2 * b < p - 1 && odd_parity(c, b)) l.push_back({p - 2 * b - 1, 0});
                } else if (b >= -1 && 2 * b < p - 1 && even(b)) {
                    l.push_back({p - 2 * b - 1, 0});
                }
            }
            return l;
        },
        true, unsigned_vertex));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) {
            IdList l;
            if (c.n % 2 == 0) return l;
            const int p = c.p, t = c.t;
            for (int b = -2; b <= p + 1; ++b) {
                if (t % 2 == 1) {
                    if (2 * b >= p && b <= p && odd_parity(c, b)) l.push_back({p - 2 * b, 0});
                } else if (b <= p - 1 && 2 * b >= p - 1 && odd_parity(c, b)) {
                    l.push_back({p - 2 * b - 1, 0});
                }
            }
            return l;
        },
        false, unsigned_vertex));
    T.rules.push_back(e_rule());
    T.rules.push_back(omega_rule([](const CaseContext& c) {
        if (c.n % 2 == 0 || !c.divides) return IdList{};
        return ((c.n - 1) / 2) % 2 == 1 ? range(0, c.m - 1) : range(1, c.m - 1);
    }));
    return T;
}

// ---- m >= 3 odd, char 2 -------------------------------------------------------

CaseTable table_m_odd_char2() {
    CaseTable T{"m odd, m >= 3, char 2", {}};
    T.rules.push_back(chi_rule([](const CaseContext& c) { return odd_m_deltas(c, true, true); }, unsigned_vertex));
    T.rules.push_back(pi_rule([](const CaseContext& c) { return odd_m_deltas(c, false, true); }));
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) {
            IdList l;
            const int p = c.p;
            for (int g = 0; g <= p + 1; ++g) {
                if (c.t % 2 == 1) {
                    if (2 * g <= p) l.push_back({p - 2 * g, 0});
                } else if (2 * g <= p - 1) {
                    l.push_back({p - 2 * g - 1, 0});
                }
            }
            return l;
        },
        false, unsigned_vertex));
    T.rules.push_back(phi_rule(
        [](const CaseContext& c) {
            IdList l;
            const int p = c.p;
            for (int g = 0; g <= p + 1; ++g) {
                if (c.t % 2 == 1) {
                    if (2 * g > p && g <= p) l.push_back({p - 2 * g, 0});
                } else if (c.t != c.m - 1) {
                    if (g <= p - 1 && 2 * g > p - 1) l.push_back({p - 2 * g - 1, 0});
                } else if (2 * g > p - 1 && g <= p) {
                    l.push_back({p - 2 * g - 1, 0});
                }
            }
            return l;
        },
        true, unsigned_vertex));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) {
            IdList l;
            const int p = c.p;
            for (int b = -2; b <= p + 1; ++b) {
                if (c.t % 2 == 1) {
                    if (2 * b >= p && b <= p) l.push_back({p - 2 * b, 0});
                } else if (c.t != c.m - 1) {
                    if (b <= p - 1 && 2 * b >= p - 1) l.push_back({p - 2 * b - 1, 0});
                } else if (2 * b >= p - 1 && b <= p - 1) {
                    l.push_back({p - 2 * b - 1, 0});
                }
            }
            return l;
        },
        false, unsigned_vertex));
    T.rules.push_back(psi_rule(
        [](const CaseContext& c) {
            IdList l;
            const int p = c.p;
            for (int b = -2; b <= p + 1; ++b) {
                if (c.t % 2 == 1) {
                    if (2 * b < p && b >= 0) l.push_back({p - 2 * b, 0});
                } else if (c.t != c.m - 1) {
                    if (b >= 0 && 2 * b < p - 1) l.push_back({p - 2 * b - 1, 0});
                } else if (2 * b < p - 1 && b >= -1) {
                    l.push_back({p - 2 * b - 1, 0});
                }
            }
            return l;
        },
        true, unsigned_vertex));
    T.rules.push_back(f_rule(false));
    T.rules.push_back(theta_rule([](const CaseContext& c) { return when(c.n % 2 == 0 && c.divides, range(1, c.m - 1)); }));
    T.rules.push_back(e_rule());
    T.rules.push_back(omega_rule([](const CaseContext& c) { return when(c.n % 2 == 1 && c.divides, range(1, c.m - 1)); }));
    return T;
}

// ---- m = 2 --------------------------------------------------------------------

CaseTable table_m2() {
    CaseTable T{"m = 2", {}};
    T.rules.push_back(chi_rule([](const CaseContext& c) { return when(c.n % 2 == 0, range(-c.p, c.p)); },
                               [](const CaseContext& c, int a, int i) { return sgn((c.n / 2 - a) * static_cast<long>(i)); }));
    T.rules.push_back(pi_rule([](const CaseContext& c) { return when(c.n % 2 == 0, range(-c.p, c.p)); }));
    // F_{n,0,s} and F_{n,1,s}: both at offset 0
    T.rules.push_back(f_rule(true));
    T.rules.push_back({Family::Theta, [](const CaseContext& c) { return when(c.n % 2 == 0 && c.divides, IdList{{1, 0}}); },
                       [](const CaseContext& c, int, int) { return Terms{{1, r_of(c, 0), c.A->socle(1), 1}}; }});
    // offsets 2g+1 = g*m+1 and 2b+1 = (b+1)*m-1; psi is indexed by b
    auto phi_sign = [](const CaseContext& c, int g, int i) { return sgn(((c.n - 1) / 2 - g) * static_cast<long>(i)); };
    T.rules.push_back(phi_rule([](const CaseContext& c) { return when(c.n % 2 == 1, range(-c.p - 1, -1)); }, true, phi_sign));
    T.rules.push_back(phi_rule([](const CaseContext& c) { return when(c.n % 2 == 1, range(0, c.p)); }, false, phi_sign));
    auto psi_terms = [](bool long_) {
        return [long_](const CaseContext& c, int b, int) {
            const Algebra& A = *c.A;
            const int k = long_ ? c.N - 1 : 0;
            return every_vertex(c, 2L * b + 1, [&](int i) { return A.b_head(i, k); },
                                [&](int i) { return sgn(((c.n + 1) / 2 - b) * static_cast<long>(i)); });
        };
    };
    T.rules.push_back({Family::Psi, [](const CaseContext& c) { return when(c.n % 2 == 1, range(0, c.p)); }, psi_terms(true)});
    T.rules.push_back({Family::Psi, [](const CaseContext& c) { return when(c.n % 2 == 1, range(-c.p - 1, -1)); }, psi_terms(false)});
    // E_{n,j,s}: e_j (x) e_{j-1} -> abar (a abar)^s out of vertex j
    T.rules.push_back({Family::E, [](const CaseContext& c) { return when(c.n % 2 == 1, with_exponents(0, 1, c.N)); },
                       [](const CaseContext& c, int j, int s) { return Terms{{j, r_of(c, -1), c.A->b_head(j, s), 1}}; }});
    T.rules.push_back({Family::Omega, [](const CaseContext& c) { return when(c.n % 2 == 1 && c.divides, IdList{{0, 0}}); },
                       [](const CaseContext& c, int, int) { return Terms{{0, r_of(c, 1), c.A->a_head(0, 0), 1}}; }});
    return T;
}

// ---- m = 1, N > 1 -------------------------------------------------------------

IdList rs(int lo, int hi, int parity) {  // parity -1: any
    IdList out;
    for (int r = std::max(lo, 0); r <= hi; ++r)
        if (parity < 0 || r % 2 == parity) out.push_back({r, 0});
    return out;
}

CocycleRule m1_rule(Family f, std::function<IdList(const CaseContext&)> ids, std::function<int(const Algebra&)> path) {
    return {f, std::move(ids), [path](const CaseContext& c, int r, int) { return Terms{{0, r, path(*c.A), 1}}; }};
}

int a_short(const Algebra& A) { return A.a_head(0, 0); }
int a_long(const Algebra& A) { return A.a_head(0, A.N() - 1); }
int b_short(const Algebra& A) { return A.b_head(0, 0); }
int b_long(const Algebra& A) { return A.b_head(0, A.N() - 1); }
int top(const Algebra& A) { return A.socle(0); }
int unit0(const Algebra& A) { return A.idem(0); }

CaseTable table_m1() {
    CaseTable T{"m = 1, N > 1, char != 2", {}};
    // chi only in even degree: in odd degree these maps are not cocycles
    T.rules.push_back(m1_rule(Family::Chi, [](const CaseContext& c) { return when(c.n % 2 == 0, rs(0, c.n, 0)); }, unit0));
    T.rules.push_back(m1_rule(Family::Psi, [](const CaseContext& c) { return when(c.n % 2 == 0, IdList{{0, 0}}); }, b_long));
    T.rules.push_back(m1_rule(Family::Phi, [](const CaseContext& c) { return when(c.n % 2 == 0, IdList{{c.n, 0}}); }, a_long));
    T.rules.push_back(m1_rule(Family::Pi, [](const CaseContext& c) { return when(c.n % 2 == 0, rs(1, c.n, 1)); }, top));
    T.rules.push_back({Family::F, [](const CaseContext& c) { return when(c.n % 2 == 0, with_exponents(0, 0, c.N)); },
                       [](const CaseContext& c, int, int s) {
                           const Algebra& A = *c.A;
                           return Terms{{0, c.n / 2, A.pow_ab(0, s), 1}, {0, c.n / 2, A.pow_ba(0, s), sgn(c.n / 2)}};
                       }});
    T.rules.push_back({Family::Theta, [](const CaseContext& c) { return when(c.n % 4 == 0 && c.divides, IdList{{0, 0}}); },
                       [](const CaseContext& c, int, int) { return Terms{{0, c.n / 2, c.A->socle(0), 1}}; }});
    T.rules.push_back(m1_rule(Family::Phi, [](const CaseContext& c) { return when(c.n % 2 == 1, rs(0, (c.n - 1) / 2, 0)); }, a_short));
    T.rules.push_back(m1_rule(Family::Phi, [](const CaseContext& c) { return when(c.n % 2 == 1, rs((c.n + 1) / 2, c.n - 1, 0)); }, a_long));
    T.rules.push_back(m1_rule(Family::Psi, [](const CaseContext& c) { return when(c.n % 2 == 1, rs(1, (c.n - 1) / 2, 1)); }, b_long));
    T.rules.push_back(m1_rule(Family::Psi, [](const CaseContext& c) { return when(c.n % 2 == 1, rs((c.n + 1) / 2, c.n, 1)); }, b_short));
    T.rules.push_back(m1_rule(Family::Pi, [](const CaseContext& c) { return when(c.n % 2 == 1, IdList{{0, 0}, {c.n, 0}}); }, top));
    T.rules.push_back({Family::E, [](const CaseContext& c) { return when(c.n % 2 == 1, with_exponents(0, 0, c.N)); },
                       [](const CaseContext& c, int, int s) { return Terms{{0, (c.n - 1) / 2, c.A->a_head(0, s), 1}}; }});
    T.rules.push_back(m1_rule(Family::Psi,
                              [](const CaseContext& c) { return when(c.n % 4 == 3 && c.divides, IdList{{(c.n + 1) / 2, 0}}); },
                              b_short));
    return T;
}

CaseTable table_m1_char2() {
    CaseTable T{"m = 1, N > 1, char 2", {}};
    T.rules.push_back(m1_rule(Family::Chi, [](const CaseContext& c) { return rs(0, c.n, -1); }, unit0));
    T.rules.push_back(m1_rule(Family::Pi, [](const CaseContext& c) { return rs(0, c.n, -1); }, top));
    T.rules.push_back(m1_rule(Family::Phi, [](const CaseContext& c) { return rs(0, c.n % 2 == 0 ? (c.n - 2) / 2 : (c.n - 1) / 2, -1); }, a_short));
    T.rules.push_back(m1_rule(Family::Phi, [](const CaseContext& c) { return rs(c.n % 2 == 0 ? c.n / 2 : (c.n + 1) / 2, c.n, -1); }, a_long));
    T.rules.push_back(m1_rule(Family::Psi, [](const CaseContext& c) { return rs(0, c.n % 2 == 0 ? c.n / 2 : (c.n - 1) / 2, -1); }, b_long));
    T.rules.push_back(m1_rule(Family::Psi, [](const CaseContext& c) { return rs(c.n % 2 == 0 ? (c.n + 2) / 2 : (c.n + 1) / 2, c.n, -1); }, b_short));
    T.rules.push_back({Family::F, [](const CaseContext& c) { return when(c.n % 2 == 0, with_exponents(0, 0, c.N)); },
                       [](const CaseContext& c, int, int s) {
                           const Algebra& A = *c.A;
                           return Terms{{0, c.n / 2, A.pow_ab(0, s), 1}, {0, c.n / 2, A.pow_ba(0, s), 1}};
                       }});
    T.rules.push_back({Family::E, [](const CaseContext& c) { return when(c.n % 2 == 1, with_exponents(0, 0, c.N)); },
                       [](const CaseContext& c, int, int s) { return Terms{{0, (c.n + 1) / 2, c.A->b_head(0, s), 1}}; }});
    return T;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Chi: return "chi";
        case Family::Pi: return "pi";
        case Family::Phi: return "phi";
        case Family::Psi: return "psi";
        case Family::F: return "F";
        case Family::E: return "E";
        case Family::Theta: return "theta";
        case Family::Omega: return "omega";
    }
    return "?";
}

std::string to_string(const NamedCocycleId& id, int m) {
    const std::string f = family_name(id.family), n = std::to_string(id.n);
    const std::string k = std::to_string(id.index), s = std::to_string(id.s);
    switch (id.family) {
        case Family::F:
        case Family::E:
            return m == 1 ? f + "[" + n + "," + s + "]" : f + "[" + n + "," + k + "," + s + "]";
        case Family::Theta:
        case Family::Omega:
            return m <= 2 ? f + "[" + n + "]" : f + "[" + n + ",j=" + k + "]";
        default:
            return f + "[" + n + "," + k + "]";
    }
}

NamedCocycleId parse_cocycle_id(const std::string& text, int m) {
    static const std::regex re(R"(^\s*([A-Za-z]+)\[([^\]]*)\]\s*$)");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw BadCocycleName("cannot parse cocycle name: " + text);
    NamedCocycleId id;
    const std::string f = mt[1];
    const std::vector<std::pair<std::string, Family>> names = {
        {"chi", Family::Chi}, {"pi", Family::Pi},       {"phi", Family::Phi},     {"psi", Family::Psi},
        {"F", Family::F},     {"E", Family::E},         {"theta", Family::Theta}, {"omega", Family::Omega}};
    auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == f; });
    if (it == names.end()) throw BadCocycleName("unknown family: " + f);
    id.family = it->second;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : std::string(mt[2])) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    parts.push_back(cur);
    auto num = [&](const std::string& s) {
        std::string v = s.rfind("j=", 0) == 0 ? s.substr(2) : s;
        try {
            std::size_t used = 0;
            int x = std::stoi(v, &used);
            if (used != v.size()) throw BadCocycleName("bad number in " + text);
            return x;
        } catch (const std::logic_error&) {
            throw BadCocycleName("bad number in " + text);
        }
    };
    if (parts.empty() || parts[0].empty()) throw BadCocycleName("missing degree in " + text);
    id.n = num(parts[0]);
    const bool es = id.family == Family::E || id.family == Family::F;
    const bool single = id.family == Family::Theta || id.family == Family::Omega;
    if (es && m == 1) {
        if (parts.size() != 2) throw BadCocycleName("expected " + f + "[n,s]");
        id.s = num(parts[1]);
    } else if (es) {
        if (parts.size() != 3) throw BadCocycleName("expected " + f + "[n,j,s]");
        id.index = num(parts[1]);
        id.s = num(parts[2]);
    } else if (single && m <= 2) {
        if (parts.size() != 1) throw BadCocycleName("expected " + f + "[n]");
        if (m == 2) id.index = id.family == Family::Theta ? 1 : 0;
    } else {
        if (parts.size() != 2) throw BadCocycleName("expected " + f + "[n,index]");
        if (m == 1 && id.family == Family::Pi && (parts[1] == "+" || parts[1] == "-"))
            id.index = parts[1] == "+" ? 0 : id.n;
        else
            id.index = num(parts[1]);
    }
    return id;
}

CaseContext case_context(const Algebra& A, int n) {
    if (n < 0) throw InvalidParams("negative degree");
    auto d = DegreeDecomposition::of(n, A.m());
    const unsigned ch = A.field().characteristic();
    return {&A, A.m(), A.N(), ch, n, d.p, d.t, char_divides(ch, A.N())};
}

CaseTable case_table(const Algebra& A) {
    const int m = A.m();
    const bool two = A.field().characteristic() == 2;
    if (m == 1) {
        if (A.N() == 1) throw NoClosedForm("no cocycle basis table for m = 1, N = 1");
        return two ? table_m1_char2() : table_m1();
    }
    if (m == 2) return table_m2();
    if (m % 2 == 0) return table_m_even();
    return two ? table_m_odd_char2() : table_m_odd();
}

std::vector<NamedCocycleId> paper_basis(const Algebra& A, int n) {
    if (n < 1) throw InvalidParams("paper bases start in degree 1");
    CaseTable T = case_table(A);
    CaseContext c = case_context(A, n);
    std::vector<NamedCocycleId> out;
    for (const auto& rule : T.rules)
        for (auto [k, s] : rule.ids(c)) out.push_back({rule.family, n, k, s});
    return out;
}

Cochain named_cocycle(const HomComplex& H, const NamedCocycleId& id) {
    return named_cocycle(H, case_table(H.algebra()), id);
}

Cochain named_cocycle(const HomComplex& H, const CaseTable& table, const NamedCocycleId& id) {
    const Algebra& A = H.algebra();
    if (id.n < 1) throw InadmissibleId("named cocycles start in degree 1");
    CaseContext c = case_context(A, id.n);
    for (const auto& rule : table.rules) {
        if (rule.family != id.family) continue;
        auto ids = rule.ids(c);
        if (std::find(ids.begin(), ids.end(), std::pair<int, int>{id.index, id.s}) == ids.end()) continue;
        Terms terms = rule.terms(c, id.index, id.s);
        Cochain f = H.zero(id.n);
        const Resolution& R = H.resolution();
        for (const auto& t : terms) f.values.at(R.pos(id.n, t.i, t.r)).add(t.path, A.field().from_int(t.c));
        H.to_vector(f);  // checks every value lies in the right e_i Lambda e_j
        return f;
    }
    throw InadmissibleId(to_string(id, A.m()) + " is not in the basis table " + table.name);
}

BasisReport verify_paper_basis(const HomComplex& H, int n) {
    return verify_paper_basis(H, case_table(H.algebra()), n);
}

BasisReport verify_paper_basis(const HomComplex& H, const CaseTable& table, int n) {
    const Algebra& A = H.algebra();
    BasisReport rep;
    rep.n = n;
    CaseContext c = case_context(A, n);
    std::vector<NamedCocycleId> ids;
    for (const auto& rule : table.rules)
        for (auto [k, s] : rule.ids(c)) ids.push_back({rule.family, n, k, s});
    rep.family_size = ids.size();
    rep.hh_dimension = H.hh_dimension(n);
    std::vector<Vector> classes;
    for (const auto& id : ids) {
        Cochain f = named_cocycle(H, table, id);
        if (!H.is_cocycle(f)) {
            rep.all_cocycles = false;
            if (!rep.offending) {
                rep.offending = id;
                rep.message = to_string(id, A.m()) + " is not a cocycle";
            }
            continue;
        }
        Vector v = H.reduce_mod_coboundaries(f);
        if (is_zero(v) && !rep.offending) {
            rep.offending = id;
            rep.message = to_string(id, A.m()) + " is a coboundary";
        }
        classes.push_back(std::move(v));
    }
    if (!classes.empty()) {
        Matrix M = Matrix::from_columns(classes, rep.hh_dimension, A.field());
        rep.class_rank = rank(M);
        if (rep.class_rank < classes.size()) {
            rep.independent = false;
            if (!rep.offending) {
                // first id whose class depends on the earlier ones
                std::vector<Vector> prefix;
                for (std::size_t k = 0; k < classes.size(); ++k) {
                    prefix.push_back(classes[k]);
                    if (rank(Matrix::from_columns(prefix, rep.hh_dimension, A.field())) < prefix.size()) {
                        rep.offending = ids[k];
                        rep.message = to_string(ids[k], A.m()) + " depends on earlier classes";
                        break;
                    }
                }
            }
        }
    }
    rep.cardinality = rep.family_size == rep.hh_dimension;
    if (!rep.cardinality && rep.message.empty())
        rep.message = "family has " + std::to_string(rep.family_size) + " elements, HH^" + std::to_string(n) +
                      " has dimension " + std::to_string(rep.hh_dimension);
    rep.pass = rep.all_cocycles && rep.independent && rep.cardinality;
    return rep;
}

std::optional<std::vector<std::pair<NamedCocycleId, Scalar>>> named_decomposition(const HomComplex& H, int n,
                                                                                   const Vector& coords) {
    const Algebra& A = H.algebra();
    CaseTable table;
    try {
        table = case_table(A);
    } catch (const NoClosedForm&) {
        return std::nullopt;
    }
    const std::size_t dim = H.hh_dimension(n);
    if (coords.size() != dim) throw DimensionMismatch("coordinate vector has the wrong length");
    CaseContext c = case_context(A, n);
    std::vector<NamedCocycleId> ids;
    std::vector<Vector> classes;
    for (const auto& rule : table.rules)
        for (auto [k, s] : rule.ids(c)) {
            ids.push_back({rule.family, n, k, s});
            classes.push_back(H.reduce_mod_coboundaries(named_cocycle(H, table, ids.back())));
        }
    if (ids.size() != dim) return std::nullopt;
    std::vector<std::pair<NamedCocycleId, Scalar>> out;
    if (dim == 0) return out;
    Matrix M = Matrix::from_columns(classes, dim, A.field());
    if (rank(M) < dim) return std::nullopt;
    auto x = solve_linear(M, coords);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < ids.size(); ++k)
        if (!(*x)[k].is_zero()) out.emplace_back(ids[k], (*x)[k]);
    return out;
}

}  // namespace hh
