#include "hh/products.hpp"

namespace hh {

bool LiftingCheck::pass() const {
    if (!augmentation_ok) return false;
    for (std::size_t q = 1; q < square_ok.size(); ++q)
        if (!square_ok[q]) return false;
    return true;
}

ResolutionElement multiply(const Resolution& R, int left, const ResolutionElement& x, int right) {
    const Algebra& A = R.algebra();
    const Projective& P = R.layout(x.n);
    ResolutionElement y;
    y.n = x.n;
    for (const auto& [idx, c] : x.terms) {
        auto e = P.decode(idx);
        auto l = A.mul(left, e.left);
        if (!l) continue;
        auto r = A.mul(e.right, right);
        if (!r) continue;
        y.add(P.index(e.pos, *l, *r), c);
    }
    return y;
}

Products::Products(const HomComplex& H) : H_(&H), R_(&H.resolution()), A_(&H.algebra()) {}

const Products::Block& Products::block(int q, int i, int j) const {
    auto key = std::make_tuple(q, i, j);
    if (auto it = blocks_.find(key); it != blocks_.end()) return *it->second;
    const Algebra& A = *A_;
    const Projective& P = R_->layout(q);
    auto b = std::make_unique<Block>();
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> images;
    for (std::size_t p = 0; p < P.summand_count(); ++p) {
        const int pos = static_cast<int>(p);
        for (int left : A.basis(i, P.summand(pos).i))
            for (int right : A.basis(P.target(pos), j)) {
                const std::size_t idx = P.index(pos, left, right);
                b->cols.push_back(idx);
                std::vector<std::pair<std::size_t, Scalar>> img;
                if (q == 0) {
                    if (auto z = A.mul(left, right)) img.emplace_back(static_cast<std::size_t>(*z), A.field().one());
                } else {
                    ResolutionElement x;
                    x.n = q;
                    x.add(idx, A.field().one());
                    for (const auto& [k, c] : R_->differential_apply(x).terms) img.emplace_back(k, c);
                }
                for (const auto& [k, c] : img) b->rows.emplace(k, b->rows.size());
                images.push_back(std::move(img));
            }
    }
    Matrix M(b->rows.size(), b->cols.size(), A.field());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [k, v] : images[c]) M.at(b->rows.at(k), c) = v;
    b->solver = LinearSolver(M);
    return *blocks_.emplace(key, std::move(b)).first->second;
}

ResolutionElement Products::solve_one(int q, int i, int j,
                                      const std::vector<std::pair<std::size_t, Scalar>>& rhs) const {
    const Block& b = block(q, i, j);
    ResolutionElement out;
    out.n = q;
    std::vector<std::pair<std::size_t, Scalar>> local;
    for (const auto& [k, v] : rhs) {
        if (v.is_zero()) continue;
        auto it = b.rows.find(k);
        if (it == b.rows.end()) throw LiftingInfeasible("right-hand side leaves the image of the block");
        local.emplace_back(it->second, v);
    }
    if (local.empty()) return out;
    auto x = b.solver.solve_sparse(local);
    if (!x) throw LiftingInfeasible("no solution for a lifting block");
    for (const auto& [c, v] : *x) out.add(b.cols[c], v);
    return out;
}

Lifting Products::lift(const Cochain& f, int q_max) const {
    if (!H_->is_cocycle(f)) throw NotACocycle("lifting needs a cocycle");
    Lifting L;
    L.n = f.n;
    L.cocycle = f;
    extend(L, q_max);
    auto c = check(L);
    if (!c.pass()) throw LiftingInfeasible("constructed lifting fails its defining equations");
    return L;
}

void Products::extend(Lifting& L, int q_max) const {
    for (int q = L.computed() + 1; q <= q_max; ++q) {
        const Projective& P = R_->layout(q + L.n);
        std::vector<ResolutionElement> level;
        level.reserve(P.summand_count());
        for (std::size_t p = 0; p < P.summand_count(); ++p) {
            const int pos = static_cast<int>(p);
            const int i = P.summand(pos).i, j = P.target(pos);
            std::vector<std::pair<std::size_t, Scalar>> rhs;
            if (q == 0) {
                for (const auto& [path, c] : L.cocycle.values[pos].terms) rhs.emplace_back(path, c);
            } else {
                ResolutionElement y;
                y.n = q - 1;
                for (const DiffTerm& t : R_->image(q + L.n, pos)) {
                    ResolutionElement z = multiply(*R_, t.left, L.maps[q - 1][t.pos], t.right);
                    for (const auto& [k, c] : z.terms) y.add(k, c * t.c);
                }
                for (const auto& [k, c] : y.terms) rhs.emplace_back(k, c);
            }
            level.push_back(solve_one(q, i, j, rhs));
        }
        L.maps.push_back(std::move(level));
    }
}

LiftingCheck Products::check(const Lifting& L) const {
    LiftingCheck out;
    if (L.maps.empty()) return out;
    const Projective& P0 = R_->layout(L.n);
    for (std::size_t p = 0; p < P0.summand_count(); ++p)
        if (!(R_->augmentation(L.maps[0][p]) == L.cocycle.values[p])) out.augmentation_ok = false;
    out.square_ok.assign(L.maps.size(), true);
    for (int q = 1; q <= L.computed(); ++q) {
        const Projective& P = R_->layout(q + L.n);
        for (std::size_t p = 0; p < P.summand_count(); ++p) {
            const int pos = static_cast<int>(p);
            ResolutionElement lhs = R_->differential_apply(L.maps[q][pos]);
            ResolutionElement rhs = apply(L, q - 1, R_->differential_apply(R_->generator(q + L.n, pos)));
            if (!(lhs == rhs)) {
                out.square_ok[q] = false;
                break;
            }
        }
    }
    return out;
}

ResolutionElement Products::apply(const Lifting& L, int q, const ResolutionElement& x) const {
    if (q > L.computed()) throw IndexOutOfRange("lifting not computed that far");
    if (x.n != q + L.n) throw DimensionMismatch("element degree does not match the lifting");
    const Projective& P = R_->layout(x.n);
    ResolutionElement y;
    y.n = q;
    for (const auto& [idx, c] : x.terms) {
        auto e = P.decode(idx);
        ResolutionElement z = multiply(*R_, e.left, L.maps[q][e.pos], e.right);
        for (auto& [k, v] : z.terms) y.add(k, v * c);
    }
    return y;
}

Cochain Products::cup(const Cochain& eta, const Lifting& theta) const {
    if (theta.computed() < eta.n) throw IndexOutOfRange("lifting too short for this product");
    const int d = eta.n + theta.n;
    Cochain out = H_->zero(d);
    for (std::size_t p = 0; p < out.values.size(); ++p) out.values[p] = H_->evaluate(eta, theta.maps[eta.n][p]);
    return out;
}

Cochain Products::cup(const Cochain& eta, const Cochain& theta) const {
    if (!H_->is_cocycle(eta)) throw NotACocycle("left factor is not a cocycle");
    return cup(eta, lift(theta, eta.n));
}

Cochain Products::scalar_action(const AlgebraElement& z, const Cochain& f) const {
    if (!A_->is_central(z)) throw NotCentral("coefficient is not central");
    Cochain out{f.n, {}};
    for (const auto& v : f.values) out.values.push_back(A_->multiply(z, v));
    return out;
}

NilpotenceResult Products::is_nilpotent(const Cochain& f, int power_cap) const {
    if (is_zero(coords(f))) return NilpotentAt{1};
    Lifting L = lift(f, 0);
    Cochain power = f;
    for (int k = 2; k <= power_cap; ++k) {
        extend(L, power.n);
        power = cup(power, L);
        if (is_zero(coords(power))) return NilpotentAt{k};
    }
    return NonzeroUpTo{power_cap};
}

}  // namespace hh
