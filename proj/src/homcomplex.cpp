#include "hh/homcomplex.hpp"

namespace hh {

CochainSpace::CochainSpace(const Resolution& R, int n) : A_(&R.algebra()), n_(n) {
    const Algebra& A = *A_;
    const Projective& P = R.layout(n);
    offsets_.push_back(0);
    local_.assign(A.dimension(), -1);
    for (int i = 0; i < A.m(); ++i)
        for (int j = 0; j < A.m(); ++j) {
            const auto& b = A.basis(i, j);
            for (std::size_t k = 0; k < b.size(); ++k) local_[b[k]] = static_cast<int>(k);
        }
    for (std::size_t p = 0; p < P.summand_count(); ++p) {
        const int pos = static_cast<int>(p);
        sources_.push_back(P.summand(pos).i);
        targets_.push_back(P.target(pos));
        for (int path : A.basis(P.summand(pos).i, P.target(pos))) coords_.push_back({pos, path});
        offsets_.push_back(coords_.size());
    }
}

const std::vector<int>& CochainSpace::paths(int pos) const {
    return A_->basis(sources_[pos], targets_[pos]);
}

std::size_t CochainSpace::index(int pos, int path) const {
    if (A_->source(path) != sources_[pos] || A_->target(path) != targets_[pos])
        throw IndexOutOfRange("value path does not lie in e_i Lambda e_target");
    return offsets_[pos] + local_[path];
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (values.size() != o.values.size() || n != o.n) throw DimensionMismatch("cochain degree mismatch");
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (values.size() != o.values.size() || n != o.n) throw DimensionMismatch("cochain degree mismatch");
    for (std::size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
    return *this;
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain r{n, {}};
    for (const auto& v : values) r.values.push_back(v.scaled(c));
    return r;
}

bool Cochain::operator==(const Cochain& o) const { return n == o.n && values == o.values; }

HomComplex::HomComplex(const Resolution& R) : R_(&R) {}

const CochainSpace& HomComplex::space(int n) const {
    if (static_cast<int>(spaces_.size()) <= n) spaces_.resize(n + 1);
    if (!spaces_[n]) spaces_[n] = std::make_unique<CochainSpace>(*R_, n);
    return *spaces_[n];
}

const Matrix& HomComplex::induced_matrix(int n) const {
    if (n < 1) throw DegreeZero("induced matrices start in degree 1");
    if (static_cast<int>(matrices_.size()) <= n) matrices_.resize(n + 1);
    if (matrices_[n]) return *matrices_[n];
    const Algebra& A = algebra();
    const CochainSpace& S = space(n - 1);
    const CochainSpace& T = space(n);
    auto M = std::make_unique<Matrix>(T.dimension(), S.dimension(), A.field());
    const Projective& P = R_->layout(n);
    for (std::size_t p = 0; p < P.summand_count(); ++p) {
        const int pos = static_cast<int>(p);
        for (const DiffTerm& t : R_->image(n, pos))
            for (int b : S.paths(t.pos)) {
                auto lb = A.mul(t.left, b);
                if (!lb) continue;
                auto z = A.mul(*lb, t.right);
                if (!z) continue;
                M->at(T.index(pos, *z), S.index(t.pos, b)) += t.c;
            }
    }
    matrices_[n] = std::move(M);
    return *matrices_[n];
}

std::size_t HomComplex::induced_rank(int n) const {
    if (n == 0) return 0;
    if (static_cast<int>(ranks_.size()) <= n) ranks_.resize(n + 1);
    if (!ranks_[n]) ranks_[n] = rank(induced_matrix(n));
    return *ranks_[n];
}

std::size_t HomComplex::kernel_dimension(int n) const {
    return space(n).dimension() - induced_rank(n + 1);
}

std::size_t HomComplex::hh_dimension(int n) const {
    return kernel_dimension(n) - induced_rank(n);
}

const CohomologyGroup& HomComplex::cohomology_basis(int n) const {
    if (static_cast<int>(groups_.size()) <= n) groups_.resize(n + 1);
    if (groups_[n]) return *groups_[n];
    const Field& F = algebra().field();
    const std::size_t dim = space(n).dimension();
    auto G = std::make_unique<CohomologyGroup>();
    G->n = n;
    if (n >= 1) {
        const Matrix& D = induced_matrix(n);
        for (std::size_t c : pivot_columns(D)) G->coboundary_basis.push_back(D.column(c));
    }
    G->coboundary_rank = G->coboundary_basis.size();
    std::vector<Vector> kernel = rank_nullspace(induced_matrix(n + 1)).nullspace;
    std::vector<Vector> cols = G->coboundary_basis;
    cols.insert(cols.end(), kernel.begin(), kernel.end());
    Matrix M = Matrix::from_columns(cols, dim, F);
    std::vector<Vector> basis = G->coboundary_basis;
    for (std::size_t c : pivot_columns(M))
        if (c >= G->coboundary_rank) {
            G->representative_vectors.push_back(cols[c]);
            G->representatives.push_back(from_vector(n, cols[c]));
            basis.push_back(cols[c]);
        }
    G->dimension = G->representatives.size();
    G->reducer = LinearSolver(Matrix::from_columns(basis, dim, F));
    groups_[n] = std::move(G);
    return *groups_[n];
}

Vector HomComplex::to_vector(const Cochain& f) const {
    const CochainSpace& S = space(f.n);
    if (f.values.size() != S.summand_count()) throw DimensionMismatch("cochain has wrong summand count");
    Vector v(S.dimension(), algebra().field().zero());
    for (std::size_t p = 0; p < f.values.size(); ++p)
        for (const auto& [path, c] : f.values[p].terms) v[S.index(static_cast<int>(p), path)] = c;
    return v;
}

Cochain HomComplex::from_vector(int n, const Vector& v) const {
    const CochainSpace& S = space(n);
    if (v.size() != S.dimension()) throw DimensionMismatch("coordinate vector has wrong length");
    Cochain f = zero(n);
    for (std::size_t k = 0; k < v.size(); ++k) {
        auto c = S.coordinate(k);
        f.values[c.pos].add(c.path, v[k]);
    }
    return f;
}

Cochain HomComplex::zero(int n) const {
    return Cochain{n, std::vector<AlgebraElement>(space(n).summand_count())};
}

Cochain HomComplex::single(int n, int pos, const AlgebraElement& value) const {
    Cochain f = zero(n);
    f.values.at(pos) = value;
    to_vector(f);  // validates vertices
    return f;
}

AlgebraElement HomComplex::evaluate(const Cochain& f, const ResolutionElement& x) const {
    if (f.n != x.n) throw DimensionMismatch("cochain and element degrees differ");
    const Algebra& A = algebra();
    const Projective& P = R_->layout(x.n);
    AlgebraElement out;
    for (const auto& [idx, c] : x.terms) {
        auto e = P.decode(idx);
        for (const auto& [path, v] : f.values[e.pos].terms) {
            auto l = A.mul(e.left, path);
            if (!l) continue;
            auto z = A.mul(*l, e.right);
            if (z) out.add(*z, c * v);
        }
    }
    return out;
}

Cochain HomComplex::coboundary(const Cochain& f) const {
    return from_vector(f.n + 1, induced_matrix(f.n + 1).apply(to_vector(f)));
}

bool HomComplex::is_cocycle(const Cochain& f) const {
    return is_zero(induced_matrix(f.n + 1).apply(to_vector(f)));
}

Vector HomComplex::reduce_mod_coboundaries(const Cochain& f) const {
    Vector v = to_vector(f);
    if (!is_zero(induced_matrix(f.n + 1).apply(v))) throw NotACocycle("cochain is not a cocycle");
    const CohomologyGroup& G = cohomology_basis(f.n);
    auto x = G.reducer.solve(v);
    if (!x) throw std::logic_error("cocycle outside the computed kernel");
    return Vector(x->begin() + static_cast<long>(G.coboundary_rank), x->end());
}

Cochain HomComplex::class_representative(int n, const Vector& coords) const {
    const CohomologyGroup& G = cohomology_basis(n);
    if (coords.size() != G.dimension) throw DimensionMismatch("class coordinates have wrong length");
    Cochain f = zero(n);
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) f += G.representatives[k].scaled(coords[k]);
    return f;
}

}  // namespace hh
