#include "hh/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace hh {

namespace {

using Key = std::vector<int>;  // radical word followed by the value path
using Column = std::map<Key, Scalar>;

struct Bar {
    const Algebra& A;
    std::vector<int> rad;                            // radical basis paths
    std::vector<std::vector<int>> rad_from, rad_to;  // by source / target vertex
    std::vector<std::vector<std::pair<int, int>>> factors;
    std::vector<std::pair<int, int>> weight;  // (#a, #abar) of each basis path

    explicit Bar(const Algebra& A_) : A(A_) {
        const int m = A.m(), B = static_cast<int>(A.dimension());
        rad_from.assign(m, {});
        rad_to.assign(m, {});
        factors.assign(B, {});
        weight.assign(B, {0, 0});
        for (int p = 0; p < B; ++p) {
            const BasisPath& bp = A.path(p);
            switch (bp.shape) {
                case Shape::Idem: weight[p] = {0, 0}; break;
                case Shape::PowAB:
                case Shape::PowBA: weight[p] = {bp.k, bp.k}; break;
                case Shape::Socle: weight[p] = {A.N(), A.N()}; break;
                case Shape::AHead: weight[p] = {bp.k + 1, bp.k}; break;
                case Shape::BHead: weight[p] = {bp.k, bp.k + 1}; break;
            }
            if (A.length(p) == 0) continue;
            rad.push_back(p);
            rad_from[A.source(p)].push_back(p);
            rad_to[A.target(p)].push_back(p);
        }
        for (int x : rad)
            for (int y : rad)
                if (auto z = A.mul(x, y)) factors[*z].emplace_back(x, y);
    }

    // every basis cochain of C^n, split by the bigrading
    std::map<std::pair<int, int>, std::vector<Key>> basis(int n) const {
        std::map<std::pair<int, int>, std::vector<Key>> out;
        Key w;
        auto emit = [&](int s, int t) {
            int wa = 0, wb = 0;
            for (int p : w) {
                wa += weight[p].first;
                wb += weight[p].second;
            }
            for (int q : A.basis(s, t)) {
                Key k = w;
                k.push_back(q);
                out[{wa - weight[q].first, wb - weight[q].second}].push_back(std::move(k));
            }
        };
        auto grow = [&](auto& self, int s, int v) -> void {
            if (static_cast<int>(w.size()) == n) {
                emit(s, v);
                return;
            }
            for (int p : rad_from[v]) {
                w.push_back(p);
                self(self, s, A.target(p));
                w.pop_back();
            }
        };
        for (int v = 0; v < A.m(); ++v) grow(grow, v, v);
        return out;
    }

    std::size_t dimension(int n) const {
        const int m = A.m();
        // count[s][t] = number of radical words of the current length from s to t
        std::vector<std::vector<std::size_t>> count(m, std::vector<std::size_t>(m, 0));
        for (int v = 0; v < m; ++v) count[v][v] = 1;
        for (int k = 0; k < n; ++k) {
            std::vector<std::vector<std::size_t>> next(m, std::vector<std::size_t>(m, 0));
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t)
                    if (count[s][t])
                        for (int p : rad_from[t]) next[s][A.target(p)] += count[s][t];
            count = std::move(next);
        }
        std::size_t d = 0;
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) d += count[s][t] * A.basis(s, t).size();
        return d;
    }

    // coboundary of the basis cochain dual to (w, q)
    Column delta(const Key& key) const {
        const Field& F = A.field();
        const int n = static_cast<int>(key.size()) - 1;
        const int q = key.back();
        const int s = n == 0 ? A.source(q) : A.source(key.front());
        const int t = n == 0 ? A.source(q) : A.target(key[n - 1]);
        Column out;
        auto add = [&](Key k, long c) {
            auto [it, fresh] = out.try_emplace(std::move(k), F.from_int(c));
            if (!fresh) {
                it->second += F.from_int(c);
                if (it->second.is_zero()) out.erase(it);
            }
        };
        for (int p : rad_to[s])
            if (auto r = A.mul(p, q)) {
                Key k{p};
                k.insert(k.end(), key.begin(), key.end() - 1);
                k.push_back(*r);
                add(std::move(k), 1);
            }
        for (int i = 0; i < n; ++i)
            for (auto [x, y] : factors[key[i]]) {
                Key k(key.begin(), key.begin() + i);
                k.push_back(x);
                k.push_back(y);
                k.insert(k.end(), key.begin() + i + 1, key.end());
                add(std::move(k), (i + 1) % 2 ? -1 : 1);
            }
        for (int p : rad_from[t])
            if (auto r = A.mul(q, p)) {
                Key k(key.begin(), key.end() - 1);
                k.push_back(p);
                k.push_back(*r);
                add(std::move(k), (n + 1) % 2 ? -1 : 1);
            }
        return out;
    }

    std::size_t coboundary_rank(int n) const {
        if (n < 0) return 0;
        std::size_t total = 0;
        for (const auto& [grade, keys] : basis(n)) {
            std::map<Key, std::size_t> row_index;
            std::vector<Column> cols;
            cols.reserve(keys.size());
            for (const Key& k : keys) {
                cols.push_back(delta(k));
                for (const auto& [r, c] : cols.back()) row_index.try_emplace(r, row_index.size());
            }
            SparseEchelon ech(row_index.size());
            for (const Column& c : cols) {
                SparseEchelon::Row row;
                for (const auto& [r, v] : c) row.emplace_back(row_index.at(r), v);
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!row.empty()) ech.insert(std::move(row));
            }
            total += ech.rank();
        }
        return total;
    }
};

}  // namespace

std::size_t max_bar_coordinates() {
    if (const char* e = std::getenv("HH_MAX_COORDS")) {
        try {
            return static_cast<std::size_t>(std::stoull(e));
        } catch (const std::exception&) {
        }
    }
    return 100000;
}

std::size_t bar_cochain_dimension(const Algebra& A, int n) { return Bar(A).dimension(n); }

std::size_t bar_hh_dimension(const Algebra& A, int n) { return bar_hh_dimension(A, n, max_bar_coordinates()); }

std::size_t bar_hh_dimension(const Algebra& A, int n, std::size_t bound) {
    if (n < 0) throw std::invalid_argument("negative degree");
    Bar B(A);
    const std::size_t dim = B.dimension(n);
    if (dim > bound)
        throw TooLarge("bar cochain space C^" + std::to_string(n) + " has " + std::to_string(dim) +
                       " coordinates, bound " + std::to_string(bound));
    return dim - B.coboundary_rank(n) - B.coboundary_rank(n - 1);
}

bool bar_square_zero(const Algebra& A, int n) {
    Bar B(A);
    const Field& F = A.field();
    for (const auto& [grade, keys] : B.basis(n))
        for (const Key& k : keys) {
            Column acc;
            for (const auto& [r, c] : B.delta(k))
                for (const auto& [r2, c2] : B.delta(r)) {
                    auto [it, fresh] = acc.try_emplace(r2, F.zero());
                    it->second += c * c2;
                }
            for (const auto& [r, c] : acc)
                if (!c.is_zero()) return false;
        }
    return true;
}

BarReport bar_cross_check(const HomComplex& H, int n_max) {
    const Algebra& A = H.algebra();
    const std::size_t bound = max_bar_coordinates();
    Bar B(A);
    BarReport out;
    out.pass = true;
    std::size_t prev_rank = 0;
    bool prev_known = false;
    for (int n = 0; n <= n_max; ++n) {
        BarDegree d;
        d.n = n;
        d.minimal = H.hh_dimension(n);
        const std::size_t dim = B.dimension(n);
        d.feasible = dim <= bound;
        if (d.feasible) {
            const std::size_t below = n == 0 ? 0 : (prev_known ? prev_rank : B.coboundary_rank(n - 1));
            const std::size_t here = B.coboundary_rank(n);
            d.bar = dim - here - below;
            d.match = d.bar == d.minimal;
            out.pass = out.pass && d.match;
            prev_rank = here;
            prev_known = true;
        } else {
            prev_known = false;
        }
        out.degrees.push_back(d);
    }
    return out;
}

}  // namespace hh
