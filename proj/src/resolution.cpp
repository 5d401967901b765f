#include "hh/resolution.hpp"

#include "hh/matrix.hpp"

#include <algorithm>

namespace hh {

namespace {
inline long sign(long e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace

Projective::Projective(const Algebra& A, int n) : A_(&A), n_(n) {
    offsets_.push_back(0);
    for (int i = 0; i < A.m(); ++i)
        for (int r = 0; r <= n; ++r) {
            summands_.push_back({n, i, r});
            int t = A.vertex(i + n - 2 * r);
            targets_.push_back(t);
            offsets_.push_back(offsets_.back() + A.ending_at(i).size() * A.starting_at(t).size());
        }
    end_idx_.assign(A.dimension(), -1);
    start_idx_.assign(A.dimension(), -1);
    for (int v = 0; v < A.m(); ++v) {
        const auto& e = A.ending_at(v);
        for (std::size_t k = 0; k < e.size(); ++k) end_idx_[e[k]] = static_cast<int>(k);
        const auto& s = A.starting_at(v);
        for (std::size_t k = 0; k < s.size(); ++k) start_idx_[s[k]] = static_cast<int>(k);
    }
}

std::size_t Projective::index(int pos, int left, int right) const {
    const Summand& s = summands_[pos];
    if (A_->target(left) != s.i || A_->source(right) != targets_[pos])
        throw IndexOutOfRange("coefficient paths do not match the summand vertices");
    return offsets_[pos] + end_idx_[left] * A_->starting_at(targets_[pos]).size() + start_idx_[right];
}

Projective::Entry Projective::decode(std::size_t idx) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
    int pos = static_cast<int>(it - offsets_.begin()) - 1;
    std::size_t local = idx - offsets_[pos];
    const auto& rights = A_->starting_at(targets_[pos]);
    const auto& lefts = A_->ending_at(summands_[pos].i);
    return {pos, lefts[local / rights.size()], rights[local % rights.size()]};
}

void ResolutionElement::add(std::size_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

ResolutionElement& ResolutionElement::operator+=(const ResolutionElement& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

bool ResolutionElement::operator==(const ResolutionElement& o) const {
    if (n != o.n || terms.size() != o.terms.size()) return false;
    for (const auto& [k, c] : terms) {
        auto it = o.terms.find(k);
        if (it == o.terms.end() || it->second != c) return false;
    }
    return true;
}

GElement& GElement::operator+=(const GElement& o) {
    for (const auto& [w, c] : o.value) {
        auto it = value.find(w);
        if (it == value.end()) {
            if (!c.is_zero()) value.emplace(w, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero()) value.erase(it);
    }
    return *this;
}

bool GElement::operator==(const GElement& o) const {
    if (value.size() != o.value.size()) return false;
    for (const auto& [w, c] : value) {
        auto it = o.value.find(w);
        if (it == o.value.end() || it->second != c) return false;
    }
    return true;
}

Resolution::Resolution(const Algebra& A) : A_(&A) {}

std::vector<Summand> Resolution::projective(int n) const {
    std::vector<Summand> out;
    for (int i = 0; i < m(); ++i)
        for (int r = 0; r <= n; ++r) out.push_back({n, i, r});
    return out;
}

const Projective& Resolution::layout(int n) const {
    if (static_cast<int>(layouts_.size()) <= n) layouts_.resize(n + 1);
    if (!layouts_[n]) layouts_[n] = std::make_unique<Projective>(*A_, n);
    return *layouts_[n];
}

std::vector<DiffTerm> Resolution::build_image(int n, int p) const {
    const Algebra& A = *A_;
    const int N = A.N();
    const Field& F = A.field();
    const Summand s = layout(n).summand(p);
    const int i = s.i, r = s.r, k = s.offset();
    const int tgt = A.vertex(i + k);
    std::vector<DiffTerm> out;
    auto put = [&](long c, int left, int vi, int rr, int right) {
        if (rr < 0 || rr > n - 1) return;
        out.push_back({F.from_int(c), left, pos(n - 1, vi, rr), right});
    };
    if (k > 0) {
        put(1, A.idem(i), i, r, A.a_head(i + k - 1, 0));
        put(sign(n + r), A.a_head(i, 0), i + 1, r, A.idem(tgt));
        put(sign(n + r), A.b_head(i, N - 1), i - 1, r - 1, A.idem(tgt));
        put(sign(n), A.idem(i), i, r - 1, A.b_head(i + k + 1, N - 1));
    } else if (k < 0) {
        put(1, A.idem(i), i, r, A.a_head(i + k - 1, N - 1));
        put(sign(n + r), A.a_head(i, N - 1), i + 1, r, A.idem(tgt));
        put(sign(n + r), A.b_head(i, 0), i - 1, r - 1, A.idem(tgt));
        put(sign(n), A.idem(i), i, r - 1, A.b_head(i + k + 1, 0));
    } else {
        const int h = n / 2;
        const long sg = sign(h);
        for (int kk = 0; kk < N; ++kk) {
            put(1, A.pow_ba(i, kk), i, h, A.a_head(i - 1, N - kk - 1));
            put(sg, A.b_head(i, kk), i - 1, h - 1, A.pow_ba(i, N - kk - 1));
            put(sg, A.a_head(i, kk), i + 1, h, A.pow_ab(i, N - kk - 1));
            put(1, A.pow_ab(i, kk), i, h - 1, A.b_head(i + 1, N - kk - 1));
        }
    }
    return out;
}

const std::vector<DiffTerm>& Resolution::image(int n, int p) const {
    if (n < 1) throw DegreeZero("the differential starts in degree 1");
    if (static_cast<int>(images_.size()) <= n) images_.resize(n + 1);
    auto& v = images_[n];
    if (v.empty()) {
        const int cnt = static_cast<int>(layout(n).summand_count());
        for (int q = 0; q < cnt; ++q) v.push_back(build_image(n, q));
    }
    return v[p];
}

ResolutionElement Resolution::generator(int n, int p) const {
    ResolutionElement x;
    x.n = n;
    const Projective& P = layout(n);
    const Summand& s = P.summand(p);
    x.add(P.index(p, A_->idem(s.i), A_->idem(P.target(p))), A_->field().one());
    return x;
}

ResolutionElement Resolution::differential_apply(const ResolutionElement& x) const {
    if (x.n < 1) throw DegreeZero("degree-0 elements go through the augmentation");
    const Projective& P = layout(x.n);
    const Projective& Q = layout(x.n - 1);
    ResolutionElement y;
    y.n = x.n - 1;
    for (const auto& [idx, c] : x.terms) {
        auto e = P.decode(idx);
        for (const DiffTerm& t : image(x.n, e.pos)) {
            auto l = A_->mul(e.left, t.left);
            if (!l) continue;
            auto r = A_->mul(t.right, e.right);
            if (!r) continue;
            y.add(Q.index(t.pos, *l, *r), c * t.c);
        }
    }
    return y;
}

AlgebraElement Resolution::augmentation(const ResolutionElement& x) const {
    if (x.n != 0) throw IndexOutOfRange("augmentation needs a degree-0 element");
    const Projective& P = layout(0);
    AlgebraElement out;
    for (const auto& [idx, c] : x.terms) {
        auto e = P.decode(idx);
        if (auto p = A_->mul(e.left, e.right)) out.add(*p, c);
    }
    return out;
}

GElement Resolution::g_element(int n, int r, int i) const {
    if (n < 0 || r < 0 || r > n) throw IndexOutOfRange("need 0 <= r <= n");
    i = A_->vertex(i);
    auto key = std::make_tuple(n, r, i);
    if (auto it = gcache_.find(key); it != gcache_.end()) return it->second;
    const Field& F = A_->field();
    const int N = A_->N();
    GElement g;
    g.n = n;
    g.r = r;
    g.i = i;
    if (n == 0) {
        g.value.emplace(std::vector<int>{}, F.one());
        gcache_.emplace(key, g);
        return g;
    }
    // append an alternating run of `len` arrows, first of type `first` (0 = a, 1 = abar)
    auto extend = [&](const GElement& h, int first, int len, long c) {
        GElement out;
        const int end = A_->vertex(h.i + (h.n - 2 * h.r));
        for (const auto& [w, v] : h.value) {
            std::vector<int> word = w;
            int at = end, t = first;
            for (int k = 0; k < len; ++k) {
                if (t == 0) {
                    word.push_back(2 * at);
                    at = A_->vertex(at + 1);
                } else {
                    word.push_back(2 * A_->vertex(at - 1) + 1);
                    at = A_->vertex(at - 1);
                }
                t ^= 1;
            }
            out.value.emplace(std::move(word), v * F.from_int(c));
        }
        return out;
    };
    const int k = n - 2 * r;
    const long sn = sign(n);
    GElement acc;
    if (r <= n - 1) {
        GElement h = g_element(n - 1, r, i);
        acc += extend(h, 0, k > 0 ? 1 : 2 * N - 1, 1);
    }
    if (r >= 1) {
        GElement h = g_element(n - 1, r - 1, i);
        acc += extend(h, 1, k >= 0 ? 2 * N - 1 : 1, k == 0 ? 1 : sn);
    }
    g.value = std::move(acc.value);
    gcache_.emplace(key, g);
    return g;
}

std::size_t Resolution::differential_rank(int n) const {
    const Algebra& A = *A_;
    const Projective& P = layout(n);
    if (n == 0) {
        SparseEchelon E(A.dimension());
        for (std::size_t idx = 0; idx < P.dimension(); ++idx) {
            auto e = P.decode(idx);
            if (auto p = A.mul(e.left, e.right))
                E.insert({{static_cast<std::size_t>(*p), A.field().one()}});
        }
        return E.rank();
    }
    const Projective& Q = layout(n - 1);
    SparseEchelon E(Q.dimension());
    for (std::size_t idx = 0; idx < P.dimension(); ++idx) {
        ResolutionElement x;
        x.n = n;
        x.add(idx, A.field().one());
        ResolutionElement y = differential_apply(x);
        SparseEchelon::Row row(y.terms.begin(), y.terms.end());
        E.insert(std::move(row));
    }
    return E.rank();
}

std::vector<ExactnessDegree> Resolution::exactness_check(int n_max) const {
    std::vector<ExactnessDegree> out;
    std::size_t prev_rank = differential_rank(0);
    bool surjective = prev_rank == A_->dimension();
    for (int n = 1; n <= n_max; ++n) {
        std::size_t rk = differential_rank(n);
        std::size_t expected = layout(n - 1).dimension() - prev_rank;
        bool cx = true;
        for (std::size_t p = 0; p < layout(n).summand_count() && cx; ++p) {
            ResolutionElement y = differential_apply(generator(n, static_cast<int>(p)));
            if (n == 1)
                cx = augmentation(y).is_zero();
            else
                cx = differential_apply(y).is_zero();
        }
        out.push_back({n, rk, expected, cx, cx && rk == expected && (n > 1 || surjective)});
        prev_rank = rk;
    }
    return out;
}

}  // namespace hh
