#include "hh/liftings.hpp"

#include <functional>
#include <optional>

namespace hh {

namespace {

// Value tables are written as sums of terms  c * left (e_u (x) e_{u+o}) right  in P^q.
// Words use 'a' for a and 'b' for abar; the left word ends at u, the right word starts
// at u+o. A '!' marks a word with a negative exponent (the term is absent).
struct Term {
    long c;
    std::string left;
    long u, o;
    std::string right;
};
using Terms = std::vector<Term>;

enum class Kind { MEvenN1, MEven, M2 };

struct Ctx {
    const Algebra& A;
    const Resolution& R;
    Kind kind;
    int m, N, n, q;
};

long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string rep(const char* w, long k) {
    if (k < 0) return "!";
    std::string s;
    for (long t = 0; t < k; ++t) s += w;
    return s;
}
std::string ab(long k) { return rep("ab", k); }
std::string ba(long k) { return rep("ba", k); }

long net(const std::string& w) {
    long d = 0;
    for (char ch : w) d += ch == 'a' ? 1 : ch == 'b' ? -1 : 0;
    return d;
}

AlgebraElement word_value(const Algebra& A, long start, const std::string& w) {
    if (w.find('!') != std::string::npos) return {};
    if (w.empty()) return A.element(A.idem(A.vertex(start)));
    std::vector<Arrow> arrows;
    long x = start;
    for (char ch : w) {
        if (ch == 'a') {
            arrows.push_back({ArrowType::A, A.vertex(x)});
            ++x;
        } else {
            arrows.push_back({ArrowType::B, A.vertex(x - 1)});
            --x;
        }
    }
    return A.normal_form(A.vertex(start), arrows);
}

void scale(Terms& ts, long c) {
    for (Term& t : ts) t.c *= c;
}

// offset d of the target generator when the domain generator sits at offset o and the
// cocycle at offset `shift`; nullopt when o is not of that form
std::optional<long> shifted(const Ctx& c, long o, long shift) {
    const long d = o - shift;
    if (d > c.q || d < -c.q || (c.q - d) % 2 != 0) return std::nullopt;
    return d;
}

Terms chi_terms(const Ctx& c, long alpha, long i, long d) {
    const long sig = sgn((c.n - alpha * c.m) / 2 * i);
    const int N = c.N;
    if (c.kind == Kind::MEvenN1 || d * alpha >= 0) return {{sig, "", i, d, ""}};
    if (std::abs(d) > 2) return {};
    if (alpha < 0 && d == 2) return {{sig, ab(N - 1), i, 2, ba(N - 1)}};
    if (alpha > 0 && d == -2) return {{sig, ba(N - 1), i, -2, ab(N - 1)}};
    const long s1 = sgn((c.q + 1) / 2);
    Terms out;
    if (alpha < 0 && d == 1) {
        for (long k = 0; k <= N - 1; ++k) out.push_back({1, ab(k), i, 1, ba(N - k - 1)});
        for (long k = 0; k <= N - 2; ++k) out.push_back({s1, ab(k) + "a", i + 1, -1, "a" + ba(N - k - 2)});
    } else if (alpha > 0 && d == -1) {
        for (long k = 0; k <= N - 1; ++k) out.push_back({1, ba(k), i, -1, ab(N - k - 1)});
        for (long k = 0; k <= N - 2; ++k) out.push_back({s1, ba(k) + "b", i - 1, 1, "b" + ab(N - k - 2)});
    }
    scale(out, sig);
    return out;
}

Terms pi_terms(const Ctx& c, long alpha, long i, long d) {
    if (c.A.vertex(i) != 0) return {};
    const int N = c.N;
    if (c.kind == Kind::MEvenN1) return {{1, "ab", 0, d, ""}};
    if (alpha * d >= 0) return {{1, ab(N), 0, d, ""}};
    if (d == 1 && alpha < 0) return {{1, ab(N), 0, 1, ba(N - 1)}};
    if (d == -1 && alpha > 0) return {{1, ab(N), 0, -1, ab(N - 1)}};
    return {};
}

Terms f_terms(const Ctx& c, long j, long s, long i, long d) {
    if (c.A.vertex(i) == c.A.vertex(j)) return {{1, ab(s), i, d, ""}};
    if (c.A.vertex(i) == c.A.vertex(j + 1)) return {{sgn(c.n / 2), ba(s), i, d, ""}};
    return {};
}

Terms theta_terms(const Ctx& c, long j, long i, long d) {
    if (c.A.vertex(i) == c.A.vertex(j)) return {{1, ab(c.N), i, d, ""}};
    return {};
}

Terms phi_terms(const Ctx& c, long g, long i, long d) {
    const int N = c.N;
    const long q = c.q;
    if (c.kind == Kind::MEvenN1) return {{sgn((c.n - 1 - g * c.m) / 2 * i + q), "", i, d, "a"}};
    const bool m2 = c.kind == Kind::M2;
    const long sig = sgn((c.n - 1 - g * c.m) / 2 * i);
    const long s1 = sgn((q + 1) / 2);
    Terms out;
    if (g < 0) {
        if (d > 1) return {};
        if (d == 1) return {{-sig, ab(N - 1), i, 1, "a" + ba(N - 1)}};
        return {{m2 ? sig : sgn(q) * sig, "", i, d, "a" + ba(N - 1)}};
    }
    if (g > 0) {
        if (d >= 0) return {{sgn(q) * sig, "", i, d, "a"}};
        if (d == -1) {
            for (long k = 0; k <= N - 1; ++k) out.push_back({1, ba(k), i, -1, ab(N - k - 1) + "a"});
            for (long k = 0; k <= N - 2; ++k) out.push_back({s1, ba(k) + "b", i - 1, 1, ba(N - k - 1)});
            scale(out, m2 ? -sgn(q) * sig : -sig);
            return out;
        }
        if (d == -2) return {{m2 ? sgn(q) * sig : sig, ba(N - 1), i, -2, ab(N - 1) + "a"}};
        return {};
    }
    const long sq = sgn(q) * sig;
    if (d == q) return {{sq, "", i, d, "a"}};
    if (d >= 0) return {{sq, "", i, d, "a"}, {-sig * (N - 1), "", i, d + 2, "b" + ab(N - 1)}};
    if (d < -1) return {{sq * N, "", i, d, "a" + ba(N - 1)}};
    for (long k = 1; k <= N - 1; ++k)
        for (long v = 0; v <= k - 1; ++v) {
            out.push_back({1, ab(v), i, 1, "b" + ab(N - v - 1)});
            out.push_back({s1, ab(v) + "a", i + 1, -1, ab(N - v - 1)});
            out.push_back({s1, ba(v) + "b", i - 1, 1, ba(N - v - 1)});
            out.push_back({1, ba(v), i, -1, "a" + ba(N - v - 1)});
        }
    for (long k = 0; k <= N - 1; ++k) out.push_back({1, ba(k), i, -1, "a" + ba(N - k - 1)});
    scale(out, -sig);
    return out;
}

// shape: +1 for the family whose cocycle value is the long path, -1 for the short one,
// 0 for the special index
Terms psi_terms(const Ctx& c, long b, int shape, long i, long d) {
    const int N = c.N;
    const long q = c.q;
    if (c.kind == Kind::MEvenN1) return {{sgn((c.n - 1 - b * c.m) / 2 * i), "", i, d, "b"}};
    const long sig = c.kind == Kind::M2 ? sgn(((c.n + 1) / 2 - b) * i) : sgn((c.n - 1 - b * c.m) / 2 * i);
    const long s1 = sgn((q + 1) / 2);
    Terms out;
    if (shape > 0) {
        if (d < -1) return {};
        if (d == -1) return {{sig, ba(N - 1), i, -1, "b" + ab(N - 1)}};
        return {{sig, "", i, d, "b" + ab(N - 1)}};
    }
    if (shape < 0) {
        if (d < 1) return {{sig, "", i, d, "b"}};
        if (d == 1) {
            for (long k = 0; k <= N - 1; ++k) out.push_back({1, ab(k), i, 1, "b" + ab(N - k - 1)});
            for (long k = 0; k <= N - 2; ++k) out.push_back({s1, ab(k) + "a", i + 1, -1, ab(N - k - 1)});
            scale(out, sig);
            return out;
        }
        if (d == 2) return {{sig, ab(N - 1), i, 2, ba(N - 1) + "b"}};
        return {};
    }
    const long s0 = sgn((c.n - 1) / 2 * i);
    if (d == -q) return {{s0, "", i, d, "b"}};
    if (d <= 0) return {{s0, "", i, d, "b"}, {-s0 * sgn(q) * (N - 1), "", i, d - 2, "a" + ba(N - 1)}};
    if (d > 1) return {{s0 * N, "", i, d, "b" + ab(N - 1)}};
    for (long k = 1; k <= N - 1; ++k)
        for (long v = 0; v <= k - 1; ++v) {
            out.push_back({1, ba(v), i, -1, "a" + ba(N - v - 1)});
            out.push_back({s1, ba(v) + "b", i - 1, 1, ba(N - v - 1)});
            out.push_back({s1, ab(v) + "a", i + 1, -1, ab(N - v - 1)});
            out.push_back({1, ab(v), i, 1, "b" + ab(N - v - 1)});
        }
    for (long k = 0; k <= N - 1; ++k) out.push_back({1, ab(k), i, 1, "b" + ab(N - k - 1)});
    scale(out, s0);
    return out;
}

Terms e_terms(const Ctx& c, long j, long s, long i, long o) {
    const int N = c.N;
    const long q = c.q;
    const long s1 = sgn((q + 1) / 2);
    const auto at = [&](long v) { return c.A.vertex(i) == c.A.vertex(v); };
    Terms out;
    if (c.kind == Kind::MEven) {
        if (q % 2 == 0) {
            if (at(j) && o == 1) return {{1, ab(s), j, 0, "a"}};
            return {};
        }
        if (at(j) && o == 0) {
            for (long k = 0; k <= N - s; ++k)
                for (long v = k; v <= N - s; ++v) {
                    out.push_back({1, ab(v + s), j, 1, "b" + ab(N - v - 1)});
                    out.push_back({s1, ab(v + s) + "a", j + 1, -1, ab(N - v - 1)});
                }
        } else if (at(j + 1) && o == 0) {
            for (long k = 0; k <= N - s - 1; ++k)
                for (long v = k; v <= N - s; ++v) {
                    out.push_back({s1, ba(v + s) + "b", j, 1, ba(N - v - 1)});
                    out.push_back({1, ba(v + s + 1), j + 1, -1, "a" + ba(N - v - 2)});
                }
            scale(out, sgn((c.n - 1) / 2));
        }
        return out;
    }
    // m = 2: the cocycle sits at offset -1
    if (q % 2 == 0) {
        if (at(j) && o == -1) return {{1, ba(s), j, 0, "b"}};
        return {};
    }
    if (at(j) && o == 0) {
        for (long k = 0; k <= N - s; ++k)
            for (long v = k; v <= N - s; ++v) {
                out.push_back({1, ba(v + s), j, -1, "a" + ba(N - v - 1)});
                out.push_back({s1, ba(v + s) + "a", j - 1, 1, ba(N - v - 1)});
            }
    } else if (at(j - 1) && o == 0) {
        for (long k = 0; k <= N - s - 1; ++k)
            for (long v = k; v <= N - s; ++v) {
                out.push_back({s1, ab(v + s) + "a", j, 1, ab(N - v - 1)});
                out.push_back({1, ab(v + s + 1), j + 1, -1, "b" + ab(N - v - 2)});
            }
        scale(out, sgn((c.n - 1) / 2));
    }
    return out;
}

Terms omega_terms(const Ctx& c, long j, long i, long o) {
    const int N = c.N;
    const long q = c.q;
    const auto at = [&](long v) { return c.A.vertex(i) == c.A.vertex(v); };
    Terms out;
    if (q % 2 == 1) {
        if (at(j) && o == 0) {
            for (long k = 1; k <= N - 1; ++k)
                for (long v = 0; v <= k - 1; ++v) {
                    out.push_back({sgn((q - 1) / 2), ab(v) + "a", j + 1, -1, ab(N - v - 1)});
                    out.push_back({-1, ab(v), j, 1, "b" + ab(N - v - 1)});
                }
            return out;
        }
        if (at(j + 1) && o == 0) {
            for (long k = 1; k <= N - 1; ++k)
                for (long v = 0; v <= k - 1; ++v) {
                    out.push_back({1, ba(v + 1), j + 1, -1, "a" + ba(N - v - 2)});
                    out.push_back({sgn((q + 1) / 2), ba(v) + "b", j, 1, ba(N - v - 1)});
                }
            scale(out, sgn((c.n + 1) / 2));
            return out;
        }
        for (long v = 1; v <= (q + 1) / 2; ++v)
            if (at(j - v) && o == 2 * v) {
                out.push_back({sgn(v + (q + 1) / 2), "a", j - v + 1, 2 * v - 1, ""});
                out.push_back({1, "", j - v, 2 * v + 1, "b" + ab(N - 1)});
                scale(out, sgn((c.n - 1) / 2 * v));
                return out;
            }
        return out;
    }
    for (long v = 0; v <= q / 2; ++v)
        if (at(j - v) && o == 2 * v + 1) {
            out.push_back({1, "", j - v, 2 * v, "a"});
            out.push_back({-sgn(v + q / 2), "b" + ab(N - 1), j - v - 1, 2 * v + 2, ""});
            scale(out, sgn((c.n - 1) / 2 * v));
            return out;
        }
    return out;
}

Kind kind_of(const Algebra& A) {
    if (A.m() == 2 && A.N() > 1) return Kind::M2;
    if (A.m() >= 4 && A.m() % 2 == 0) return A.N() == 1 ? Kind::MEvenN1 : Kind::MEven;
    throw NoLiftingTable("no closed-form liftings for m = " + std::to_string(A.m()) + ", N = " +
                         std::to_string(A.N()));
}

// terms of L^q(id) at the domain generator (i, o) of P^{q+n}
Terms table_terms(const Ctx& c, const NamedCocycleId& id, long i, long o) {
    const long m = c.m;
    const bool m2 = c.kind == Kind::M2;
    std::optional<long> d;
    switch (id.family) {
        case Family::Chi:
            if ((d = shifted(c, o, id.index * m))) return chi_terms(c, id.index, i, *d);
            return {};
        case Family::Pi:
            if ((d = shifted(c, o, id.index * m))) return pi_terms(c, id.index, i, *d);
            return {};
        case Family::F:
            if (c.kind == Kind::MEvenN1) break;
            if ((d = shifted(c, o, 0))) return f_terms(c, id.index, id.s, i, *d);
            return {};
        case Family::Theta:
            if (c.kind == Kind::MEvenN1) break;
            if ((d = shifted(c, o, 0))) return theta_terms(c, id.index, i, *d);
            return {};
        case Family::Phi:
            if ((d = shifted(c, o, id.index * m + 1))) return phi_terms(c, id.index, i, *d);
            return {};
        case Family::Psi: {
            const long shift = m2 ? 2 * id.index + 1 : id.index * m - 1;
            int shape;
            if (m2) shape = id.index >= 0 ? 1 : id.index == -1 ? 0 : -1;
            else shape = id.index > 0 ? 1 : id.index == 0 ? 0 : -1;
            if ((d = shifted(c, o, shift))) return psi_terms(c, id.index, shape, i, *d);
            return {};
        }
        case Family::E:
            if (c.kind == Kind::MEvenN1) break;
            return e_terms(c, id.index, id.s, i, o);
        case Family::Omega:
            if (c.kind == Kind::MEvenN1) break;
            return omega_terms(c, id.index, i, o);
    }
    throw NoLiftingTable("no closed-form lifting for " + to_string(id, c.m));
}

}  // namespace

bool has_lifting_table(const Algebra& A) {
    return (A.m() == 2 && A.N() > 1) || (A.m() >= 4 && A.m() % 2 == 0);
}

Lifting table_lifting(const HomComplex& H, const NamedCocycleId& id, int q_max) {
    const Algebra& A = H.algebra();
    const Resolution& R = H.resolution();
    const Kind kind = kind_of(A);
    Lifting L;
    L.n = id.n;
    L.cocycle = named_cocycle(H, id);
    for (int q = 0; q <= q_max; ++q) {
        Ctx c{A, R, kind, A.m(), A.N(), id.n, q};
        const Projective& dom = R.layout(q + id.n);
        const Projective& cod = R.layout(q);
        std::vector<ResolutionElement> level;
        for (std::size_t p = 0; p < dom.summand_count(); ++p) {
            const Summand& S = dom.summand(static_cast<int>(p));
            ResolutionElement y;
            y.n = q;
            for (const Term& t : table_terms(c, id, S.i, S.offset())) {
                // generators outside P^q do not exist
                if (t.c == 0 || t.o > q || t.o < -q || (q - t.o) % 2 != 0) continue;
                const int pos = R.pos(q, static_cast<int>(A.vertex(t.u)), static_cast<int>((q - t.o) / 2));
                AlgebraElement l = word_value(A, t.u - net(t.left), t.left);
                AlgebraElement r = word_value(A, t.u + t.o, t.right);
                const Scalar k = A.field().from_int(t.c);
                for (const auto& [lp, lc] : l.terms)
                    for (const auto& [rp, rc] : r.terms) y.add(cod.index(pos, lp, rp), k * lc * rc);
            }
            level.push_back(std::move(y));
        }
        L.maps.push_back(std::move(level));
    }
    return L;
}

ConformanceReport lifting_conformance(const HomComplex& H, int max_degree) {
    const Algebra& A = H.algebra();
    Products P(H);
    ConformanceReport out;
    std::vector<std::vector<NamedCocycleId>> basis(max_degree + 1);
    std::map<NamedCocycleId, Lifting> table, solver;
    for (int k = 1; k <= max_degree; ++k) {
        basis[k] = paper_basis(A, k);
        for (const auto& id : basis[k]) {
            Lifting L = table_lifting(H, id, max_degree);
            LiftingCheck chk = P.check(L);
            out.liftings.push_back({id, chk.pass()});
            table.emplace(id, std::move(L));
            solver.emplace(id, P.lift(named_cocycle(H, id), max_degree));
        }
    }
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& eta : basis[n]) {
            const Cochain& f = table.at(eta).cocycle;
            for (int k = 1; k <= max_degree; ++k)
                for (const auto& theta : basis[k]) {
                    Vector a = H.reduce_mod_coboundaries(P.cup(f, table.at(theta)));
                    Vector b = H.reduce_mod_coboundaries(P.cup(f, solver.at(theta)));
                    ConformancePair pr{eta, theta, a == b};
                    if (!pr.match) ++out.mismatches;
                    out.pairs.push_back(pr);
                }
        }
    out.pass = out.mismatches == 0 && !out.pairs.empty();
    return out;
}

}  // namespace hh
