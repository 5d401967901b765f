// One line per acceptance criterion; exit status 1 when any criterion fails.
#include "hh/formulas.hpp"
#include "hh/liftings.hpp"
#include "hh/oracle.hpp"
#include "hh/verification.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace hh;

namespace {

struct Session {
    Algebra A;
    Resolution R;
    HomComplex H;
    Session(int m, int N, unsigned c) : A(m, N, Field::create(c)), R(A), H(R) {}
};

std::string point(int m, int N, unsigned c) {
    return "(" + std::to_string(m) + "," + std::to_string(N) + ",char " + std::to_string(c) + ")";
}

// collects failing cases; keeps the first few for the report line
struct Outcome {
    std::size_t checked = 0;
    std::vector<std::string> failed;
    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failed.push_back(what);
    }
    std::string detail() const {
        std::ostringstream s;
        s << checked << " checks, " << failed.size() << " failed";
        for (std::size_t k = 0; k < failed.size() && k < 6; ++k) s << (k ? "; " : ": ") << failed[k];
        if (failed.size() > 6) s << "; ...";
        return s.str();
    }
};

const std::vector<unsigned> grid_chars{0, 2, 3, 5};

Outcome hom_dimensions() {
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N) {
            Session S(m, N, 0);
            for (int n = 0; n <= 2 * m + 3; ++n) {
                long expect;
                if (m <= 2) {
                    expect = 4L * N * (n + 1);
                } else {
                    const int p = n / m, t = n % m;
                    expect = (t != m - 1 ? 4L * p + 2 : 4L * p + 4) * m * N;
                }
                o.check(static_cast<long>(S.H.space(n).dimension()) == expect,
                        point(m, N, 0) + " n=" + std::to_string(n));
            }
        }
    return o;
}

Outcome complex_and_exactness() {
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N) {
            Session S(m, N, 0);
            for (int n = 2; n <= 2 * m + 3; ++n) {
                bool ok = true;
                const int count = static_cast<int>(S.R.layout(n).summand_count());
                for (int pos = 0; pos < count && ok; ++pos)
                    ok = S.R.differential_apply(S.R.differential_apply(S.R.generator(n, pos))).is_zero();
                o.check(ok, "d^2 at " + point(m, N, 0) + " n=" + std::to_string(n));
            }
        }
    for (int m = 1; m <= 4; ++m)
        for (int N = 1; N <= 2; ++N)
            for (unsigned c : {0u, 2u}) {
                Session S(m, N, c);
                for (const auto& d : S.R.exactness_check(6))
                    o.check(d.pass, "exactness at " + point(m, N, c) + " n=" + std::to_string(d.n));
            }
    return o;
}

Outcome hh_dimensions() {
    Outcome o;
    auto run = [&](int m, int N, unsigned c, bool kernels) {
        Session S(m, N, c);
        for (int n = 0; n <= 2 * m + 3; ++n) {
            o.check(static_cast<long>(S.H.hh_dimension(n)) == hh_dim_formula(m, N, c, n),
                    "HH^" + std::to_string(n) + " at " + point(m, N, c) + ": " + std::to_string(S.H.hh_dimension(n)) +
                        " vs " + std::to_string(hh_dim_formula(m, N, c, n)));
            if (kernels)
                o.check(static_cast<long>(S.H.kernel_dimension(n)) == kernel_dim_formula(m, N, c, n),
                        "ker at " + point(m, N, c) + " n=" + std::to_string(n));
        }
    };
    for (int m = 3; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N)
            for (unsigned c : grid_chars) run(m, N, c, true);
    for (int N = 1; N <= 3; ++N)
        for (unsigned c : grid_chars) run(2, N, c, false);
    for (int N = 2; N <= 3; ++N)
        for (unsigned c : grid_chars) run(1, N, c, false);
    return o;
}

Outcome centre() {
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N)
            for (unsigned c : grid_chars) {
                Session S(m, N, c);
                const auto z = centre_basis_formula(S.A);
                const std::size_t expect = m == 1 ? N + 3 : static_cast<std::size_t>(N * m + 1);
                std::vector<Vector> cols;
                bool central = true;
                for (const auto& e : z) {
                    central = central && S.A.is_central(e.value);
                    Vector v(S.A.dimension(), S.A.field().zero());
                    for (const auto& [p, s] : e.value.terms) v[p] = s;
                    cols.push_back(v);
                }
                const std::size_t r = rank(Matrix::from_columns(cols, S.A.dimension(), S.A.field()));
                const bool ok = central && z.size() == expect && r == expect && S.A.centre().size() == expect &&
                                S.H.hh_dimension(0) == expect;
                o.check(ok, point(m, N, c));
            }
    return o;
}

Outcome oracle() {
    Outcome o;
    struct P {
        int m, N, n;
    };
    for (P k : {P{1, 1, 5}, P{1, 2, 4}, P{2, 1, 4}, P{3, 1, 3}})
        for (unsigned c : {0u, 2u}) {
            Session S(k.m, k.N, c);
            for (const auto& d : bar_cross_check(S.H, k.n).degrees)
                o.check(d.feasible && d.match, point(k.m, k.N, c) + " n=" + std::to_string(d.n) +
                                                   (d.feasible ? "" : " infeasible"));
        }
    return o;
}

Outcome paper_bases() {
    Outcome o;
    for (auto [m, N] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {3, 1}, {3, 2}, {5, 2}, {2, 1}, {2, 2}, {1, 2}})
        for (unsigned c : {0u, 2u, 3u}) {
            Session S(m, N, c);
            for (int n = 1; n <= 2 * m + 2; ++n) {
                BasisReport r = verify_paper_basis(S.H, n);
                o.check(r.pass, point(m, N, c) + " n=" + std::to_string(n) + (r.message.empty() ? "" : " " + r.message));
            }
        }
    return o;
}

Outcome product_identities() {
    Outcome o;
    for (int N : {2, 3})
        for (unsigned c : {0u, 2u, 3u}) {
            Session S(4, N, c);
            Evaluator E(S.H);
            for (const auto& r : load_relations(data_dir() + "/relations/lemmas_m_even.txt", FixtureParams::of(S.A)))
                o.check(verify_relation(E, r).holds, point(4, N, c) + " " + r.text);
        }
    for (unsigned c : {0u, 2u}) {
        Session S(4, 2, c);
        Evaluator E(S.H);
        for (const auto& r : load_presentation(presentation_file(S.A), FixtureParams::of(S.A)).relations)
            o.check(verify_relation(E, r).holds, point(4, 2, c) + " " + r.text);
    }
    return o;
}

Outcome generation() {
    Outcome o;
    struct P {
        int m, N;
        unsigned c;
    };
    for (P k : {P{4, 1, 0}, P{4, 2, 0}, P{3, 1, 0}, P{3, 1, 2}, P{3, 1, 5}, P{3, 2, 0}, P{3, 2, 2}, P{3, 2, 5}, P{2, 2, 0},
                P{1, 2, 0}, P{1, 2, 2}}) {
        Session S(k.m, k.N, k.c);
        Evaluator E(S.H);
        Presentation P = load_presentation(presentation_file(S.A), FixtureParams::of(S.A));
        GenerationReport g = verify_generation(E, P.generators, 2 * k.m + 2);
        o.check(g.pass, point(k.m, k.N, k.c) + " " + g.message);
    }
    return o;
}

Outcome quotients() {
    Outcome o;
    struct P {
        int m, N;
        unsigned c;
        int cap;
    };
    for (P k : {P{4, 1, 0, 12}, P{4, 2, 0, 12}, P{3, 1, 0, 12}, P{2, 2, 0, 8}, P{1, 2, 2, 6}}) {
        Session S(k.m, k.N, k.c);
        Evaluator E(S.H);
        Presentation P = load_presentation(presentation_file(S.A), FixtureParams::of(S.A));
        QuotientReport q = verify_quotient_mod_nilpotence(E, P, k.cap);
        o.check(q.generators_ok, point(k.m, k.N, k.c) + " nilpotence of generators");
        for (const auto& r : q.relations) o.check(r.holds, point(k.m, k.N, k.c) + " " + r.text);
        o.check(q.relations_ok, point(k.m, k.N, k.c) + " relations");
        std::string bad;
        for (const auto& d : q.degrees)
            if (!d.pass) bad += (bad.empty() ? "" : ",") + std::to_string(d.d);
        o.check(q.counts_ok, point(k.m, k.N, k.c) + " Hilbert counts, degrees " + bad);
    }
    return o;
}

Outcome liftings() {
    Outcome o;
    struct P {
        int m, N;
    };
    for (P k : {P{4, 1}, P{4, 2}, P{2, 2}}) {
        Session S(k.m, k.N, 0);
        ConformanceReport r = lifting_conformance(S.H, 4);
        std::string bad;
        for (const auto& l : r.liftings)
            if (!l.valid) bad += (bad.empty() ? "" : ",") + to_string(l.id, k.m);
        o.check(r.mismatches == 0, point(k.m, k.N, 0) + " " + std::to_string(r.mismatches) + " of " +
                                       std::to_string(r.pairs.size()) + " products differ");
        o.check(bad.empty(), point(k.m, k.N, 0) + " table liftings failing the chain map equations: " + bad);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "Hom dimensions", hom_dimensions},
        {2, "complex and exactness", complex_and_exactness},
        {3, "HH dimensions vs closed forms", hh_dimensions},
        {4, "centre", centre},
        {5, "bar oracle equivalence", oracle},
        {6, "named cocycle bases", paper_bases},
        {7, "product identities", product_identities},
        {8, "generation", generation},
        {9, "quotients modulo nilpotence", quotients},
        {10, "lifting table conformance", liftings},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = error.empty() && o.failed.empty() && o.checked > 0;
        failures += !pass;
        std::printf("criterion %2d %s: %s (%s) [%.1fs]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    error.empty() ? o.detail().c_str() : ("error: " + error).c_str(), secs);
        if (verbose)
            for (const auto& f : o.failed) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
