#include "hh/verification.hpp"

#include <algorithm>
#include <sstream>

namespace hh {

namespace {

SparseEchelon::Row sparse(const Vector& v) {
    SparseEchelon::Row r;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) r.emplace_back(k, v[k]);
    return r;
}

// growing subspace of HH^d with clean class representatives for its basis
struct Span {
    int d;
    SparseEchelon ech;
    std::vector<Cochain> reps;
    Span(int d_, std::size_t dim) : d(d_), ech(dim) {}
    bool add(const HomComplex& H, const Vector& coords) {
        if (!ech.insert(sparse(coords))) return false;
        reps.push_back(H.class_representative(d, coords));
        return true;
    }
};

bool nilpotent(const NilpotenceResult& r) { return std::holds_alternative<NilpotentAt>(r); }

}  // namespace

RelationResult verify_relation(Evaluator& E, const RelationExpr& rel) {
    const HomComplex& H = E.complex();
    const int m = H.algebra().m();
    RelationResult out;
    out.text = rel.text;
    std::vector<std::optional<Cochain>> vals;
    try {
        for (const Poly& p : rel.sides) {
            vals.push_back(E.evaluate(p));
            if (!vals.back()) continue;
            if (out.degree >= 0 && vals.back()->n != out.degree)
                throw DegreeMismatch("sides of '" + rel.text + "' have different degrees");
            out.degree = vals.back()->n;
        }
    } catch (const InadmissibleId& e) {
        out.message = e.what();
        return out;
    }
    if (out.degree < 0) {
        out.holds = true;
        return out;
    }
    const std::size_t dim = H.hh_dimension(out.degree);
    for (const auto& v : vals)
        out.side_coords.push_back(v ? H.reduce_mod_coboundaries(*v) : Vector(dim, H.algebra().field().zero()));
    out.holds = true;
    for (std::size_t k = 1; k < out.side_coords.size(); ++k)
        if (out.side_coords[k] != out.side_coords[0]) {
            out.holds = false;
            std::ostringstream s;
            s << "side " << k + 1 << " (" << to_string(rel.sides[k], m) << ") differs from side 1 ("
              << to_string(rel.sides[0], m) << ")";
            out.message = s.str();
            break;
        }
    return out;
}

GenerationReport verify_generation(Evaluator& E, const std::vector<Atom>& generators, int cap) {
    const HomComplex& H = E.complex();
    std::vector<Atom> zero, positive;
    for (const Atom& g : generators) (E.degree(g) == 0 ? zero : positive).push_back(g);

    GenerationReport out;
    out.pass = true;
    std::vector<Span> spans;
    for (int d = 0; d <= cap; ++d) {
        Span S(d, H.hh_dimension(d));
        if (d == 0) S.add(H, H.reduce_mod_coboundaries(E.unit()));
        for (const Atom& g : positive) {
            const int k = E.degree(g);
            if (k > d) continue;
            for (const Cochain& x : spans[d - k].reps) S.add(H, H.reduce_mod_coboundaries(E.times(x, g)));
        }
        // close under the degree-0 generators
        for (std::size_t t = 0; t < S.reps.size(); ++t)
            for (const Atom& z : zero) {
                Cochain y = E.times(S.reps[t], z);
                S.add(H, H.reduce_mod_coboundaries(y));
            }
        GenerationDegree g{d, S.reps.size(), H.hh_dimension(d), false};
        g.pass = g.span == g.hh;
        if (!g.pass && out.pass) {
            std::ostringstream s;
            s << "degree " << d << ": span " << g.span << " < dim HH " << g.hh;
            out.message = s.str();
        }
        out.pass = out.pass && g.pass;
        out.degrees.push_back(g);
        spans.push_back(std::move(S));
    }
    return out;
}

QuotientReport verify_quotient_mod_nilpotence(Evaluator& E, const Presentation& P, int cap) {
    const HomComplex& H = E.complex();
    const int N = H.algebra().N();
    QuotientReport out;

    // (a) nilpotence of every listed generator
    std::vector<Atom> nil;
    out.generators_ok = true;
    // a generator expected to be nilpotent may need up to about the Loewy length 2N+1 of
    // powers (centre coefficients), whatever its degree; non-nilpotent ones are only
    // followed up to the degree cap
    auto power_cap = [&](const Atom& g, bool expect_nilpotent) {
        const int k = E.degree(g);
        if (k == 0) return 2 * N + 2;
        return expect_nilpotent ? std::max(2 * N + 2, cap / k) : std::max(2, cap / k);
    };
    for (const Atom& g : P.generators) {
        const bool quotient = std::count(P.quotient_generators.begin(), P.quotient_generators.end(), g) > 0;
        Cochain f = E.word({g});
        GeneratorNilpotence r{g, E.products().is_nilpotent(f, power_cap(g, !quotient)), !quotient, false};
        r.ok = nilpotent(r.result) == r.expected_nilpotent;
        out.generators_ok = out.generators_ok && r.ok;
        if (!quotient) nil.push_back(g);
        out.generators.push_back(r);
    }
    for (const Atom& g : P.quotient_generators)
        if (std::count(P.generators.begin(), P.generators.end(), g) == 0) {
            GeneratorNilpotence r{g, E.products().is_nilpotent(E.word({g}), power_cap(g, false)), false, false};
            r.ok = !nilpotent(r.result);
            out.generators_ok = out.generators_ok && r.ok;
            out.generators.push_back(r);
        }

    // (b) the stated relations
    out.relations_ok = true;
    int rel_degree = -1;
    for (const RelationExpr& r : P.quotient_relations) {
        out.relations.push_back(verify_relation(E, r));
        out.relations_ok = out.relations_ok && out.relations.back().holds;
        rel_degree = out.relations.back().degree;
    }
    if (P.quotient_relations.size() > 1) out.relations_ok = false;  // Hilbert count below assumes one

    // (c) Hilbert counts. monomials[d] holds (cochain, index of the last generator used)
    std::vector<int> w;
    for (const Atom& g : P.quotient_generators) w.push_back(E.degree(g));
    std::vector<long> count(cap + 1, 0);
    count[0] = 1;
    for (int wk : w)
        for (int d = wk; d <= cap; ++d) count[d] += count[d - wk];

    std::vector<std::vector<std::pair<Cochain, std::size_t>>> mono(cap + 1);
    mono[0].emplace_back(E.unit(), 0);
    out.counts_ok = true;
    for (int d = 0; d <= cap; ++d) {
        for (std::size_t k = 0; k < P.quotient_generators.size(); ++k) {
            if (w[k] > d || w[k] == 0) continue;
            for (const auto& [x, last] : mono[d - w[k]])
                if (last <= k) mono[d].emplace_back(E.times(x, P.quotient_generators[k]), k);
        }
        QuotientDegree q;
        q.d = d;
        q.hh = H.hh_dimension(d);
        SparseEchelon ech(q.hh);
        for (const Atom& g : nil) {
            const int k = E.degree(g);
            if (k > d) continue;
            for (const Cochain& b : H.cohomology_basis(d - k).representatives)
                ech.insert(sparse(H.reduce_mod_coboundaries(E.times(b, g))));
        }
        q.ideal = ech.rank();
        for (const auto& [x, last] : mono[d]) ech.insert(sparse(H.reduce_mod_coboundaries(x)));
        q.combined = ech.rank();
        q.monomials = static_cast<long>(mono[d].size());
        q.expected = count[d] - (rel_degree > 0 && d >= rel_degree ? count[d - rel_degree] : 0);
        q.pass = static_cast<long>(q.combined - q.ideal) == q.expected && q.combined == q.hh;
        out.counts_ok = out.counts_ok && q.pass;
        out.degrees.push_back(q);
    }
    out.pass = out.generators_ok && out.relations_ok && out.counts_ok;
    return out;
}

}  // namespace hh
