#include "hh/algebra.hpp"

#include "hh/matrix.hpp"

#include <algorithm>

namespace hh {

void AlgebraElement::add(int path, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(path);
    if (it == terms.end()) {
        terms.emplace(path, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [p, c] : o.terms) add(p, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [p, c] : o.terms) add(p, -c);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [p, v] : terms) r.terms.emplace(p, v * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [p, c] : terms) {
        auto it = o.terms.find(p);
        if (it == o.terms.end() || it->second != c) return false;
    }
    return true;
}

Algebra::Algebra(int m, int N, Field field) : m_(m), N_(N), field_(field) {
    if (m < 1 || N < 1) throw InvalidParams("need m >= 1 and N >= 1");
    for (int v = 0; v < m; ++v) {
        paths_.push_back({v, Shape::Idem, 0});
        for (int k = 1; k < N; ++k) paths_.push_back({v, Shape::PowAB, k});
        for (int k = 1; k < N; ++k) paths_.push_back({v, Shape::PowBA, k});
        paths_.push_back({v, Shape::Socle, 0});
        for (int k = 0; k < N; ++k) paths_.push_back({v, Shape::AHead, k});
        for (int k = 0; k < N; ++k) paths_.push_back({v, Shape::BHead, k});
    }
    between_.assign(m * m, {});
    ending_.assign(m, {});
    starting_.assign(m, {});
    for (int id = 0; id < static_cast<int>(paths_.size()); ++id) {
        const BasisPath& p = paths_[id];
        index_.emplace(p, id);
        Info in{p.source, 0, ArrowType::A, ArrowType::B};
        switch (p.shape) {
            case Shape::Idem: break;
            case Shape::PowAB: in.length = 2 * p.k; break;
            case Shape::PowBA:
                in.length = 2 * p.k;
                in.first = ArrowType::B;
                in.last = ArrowType::A;
                break;
            case Shape::Socle: in.length = 2 * N; break;
            case Shape::AHead:
                in.length = 2 * p.k + 1;
                in.last = ArrowType::A;
                in.target = vertex(p.source + 1);
                break;
            case Shape::BHead:
                in.length = 2 * p.k + 1;
                in.first = ArrowType::B;
                in.target = vertex(p.source - 1);
                break;
        }
        info_.push_back(in);
        between_[p.source * m + in.target].push_back(id);
        ending_[in.target].push_back(id);
        starting_[p.source].push_back(id);
    }
    const int B = static_cast<int>(paths_.size());
    table_.assign(static_cast<std::size_t>(B) * B, -1);
    for (int x = 0; x < B; ++x)
        for (int y = 0; y < B; ++y) {
            const Info &ix = info_[x], &iy = info_[y];
            if (ix.target != paths_[y].source) continue;
            int r;
            if (ix.length == 0)
                r = y;
            else if (iy.length == 0)
                r = x;
            else if (ix.length + iy.length > 2 * N || ix.last == iy.first)
                continue;
            else
                r = make_path(paths_[x].source, ix.first, ix.length + iy.length);
            table_[static_cast<std::size_t>(x) * B + y] = r;
        }
}

int Algebra::id(const BasisPath& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidParams("not a basis path for these parameters");
    return it->second;
}

int Algebra::make_path(int source, ArrowType first, int length) const {
    if (length == 0) return id({source, Shape::Idem, 0});
    if (length == 2 * N_) return id({source, Shape::Socle, 0});
    if (length % 2 == 0)
        return id({source, first == ArrowType::A ? Shape::PowAB : Shape::PowBA, length / 2});
    return id({source, first == ArrowType::A ? Shape::AHead : Shape::BHead, (length - 1) / 2});
}

int Algebra::pow_ab(int v, int k) const {
    if (k == 0) return idem(v);
    if (k == N_) return socle(v);
    return id({vertex(v), Shape::PowAB, k});
}

int Algebra::pow_ba(int v, int k) const {
    if (k == 0) return idem(v);
    if (k == N_) return socle(v);
    return id({vertex(v), Shape::PowBA, k});
}

AlgebraElement Algebra::element(int path, long c) const {
    AlgebraElement e;
    e.add(path, field_.from_int(c));
    return e;
}

AlgebraElement Algebra::unit() const {
    AlgebraElement e;
    for (int v = 0; v < m_; ++v) e.add(idem(v), field_.one());
    return e;
}

AlgebraElement Algebra::normal_form(int start, const std::vector<Arrow>& word) const {
    int v = vertex(start);
    for (const Arrow& a : word) {
        int expect = a.type == ArrowType::A ? vertex(a.index) : vertex(a.index + 1);
        if (expect != v) throw NonComposableWord("arrow does not start at the current vertex");
        v = a.type == ArrowType::A ? vertex(a.index + 1) : vertex(a.index);
    }
    AlgebraElement out;
    if (static_cast<int>(word.size()) > 2 * N_) return out;
    for (std::size_t k = 1; k < word.size(); ++k)
        if (word[k].type == word[k - 1].type) return out;
    ArrowType first = word.empty() ? ArrowType::A : word.front().type;
    out.add(make_path(vertex(start), first, static_cast<int>(word.size())), field_.one());
    return out;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [p, c] : x.terms)
        for (const auto& [q, d] : y.terms)
            if (auto r = mul(p, q)) out.add(*r, c * d);
    return out;
}

AlgebraElement Algebra::multiply(int path, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [q, d] : y.terms)
        if (auto r = mul(path, q)) out.add(*r, d);
    return out;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, int path) const {
    AlgebraElement out;
    for (const auto& [p, c] : x.terms)
        if (auto r = mul(p, path)) out.add(*r, c);
    return out;
}

bool Algebra::radical_membership(const AlgebraElement& x) const {
    return std::none_of(x.terms.begin(), x.terms.end(),
                        [&](const auto& t) { return paths_[t.first].shape == Shape::Idem; });
}

namespace {
std::vector<int> generators(const Algebra& A) {
    std::vector<int> g;
    for (int v = 0; v < A.m(); ++v) {
        g.push_back(A.idem(v));
        g.push_back(A.a_head(v, 0));
        g.push_back(A.b_head(v, 0));
    }
    return g;
}
}  // namespace

bool Algebra::is_central(const AlgebraElement& z) const {
    for (int g : generators(*this)) {
        AlgebraElement d = multiply(z, g);
        d -= multiply(g, z);
        if (!d.is_zero()) return false;
    }
    return true;
}

std::vector<AlgebraElement> Algebra::centre() const {
    const auto gens = generators(*this);
    const std::size_t B = paths_.size();
    Matrix M(gens.size() * B, B, field_);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t b = 0; b < B; ++b) {
            int bi = static_cast<int>(b);
            if (auto r = mul(bi, gens[g])) M.at(g * B + *r, b) += field_.one();
            if (auto r = mul(gens[g], bi)) M.at(g * B + *r, b) -= field_.one();
        }
    std::vector<AlgebraElement> out;
    for (const auto& v : rank_nullspace(M).nullspace) {
        AlgebraElement z;
        for (std::size_t b = 0; b < B; ++b) z.add(static_cast<int>(b), v[b]);
        out.push_back(std::move(z));
    }
    return out;
}

std::string Algebra::render(int id) const {
    const BasisPath& p = paths_[id];
    const std::string i = std::to_string(p.source);
    const std::string im = std::to_string(vertex(p.source - 1));
    switch (p.shape) {
        case Shape::Idem: return "e" + i;
        case Shape::PowAB: return "(a" + i + " abar" + i + ")^" + std::to_string(p.k);
        case Shape::PowBA: return "(abar" + im + " a" + im + ")^" + std::to_string(p.k);
        case Shape::Socle: return "(a" + i + " abar" + i + ")^" + std::to_string(N_);
        case Shape::AHead:
            if (p.k == 0) return "a" + i;
            return "a" + i + "(abar" + i + " a" + i + ")^" + std::to_string(p.k);
        case Shape::BHead:
            if (p.k == 0) return "abar" + im;
            return "abar" + im + "(a" + im + " abar" + im + ")^" + std::to_string(p.k);
    }
    return "?";
}

std::string Algebra::render(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : x.terms) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (neg) cs.erase(0, 1);
        if (cs != "1") s += cs + "*";
        s += render(p);
    }
    return s;
}

}  // namespace hh
