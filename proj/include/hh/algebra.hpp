#pragma once

#include "hh/field.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonComposableWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AlgebraParams {
    int m = 1;
    int N = 1;
    Field field;
};

// Declaration order is the basis order.
enum class Shape : std::uint8_t { Idem, PowAB, PowBA, Socle, AHead, BHead };

struct BasisPath {
    int source = 0;
    Shape shape = Shape::Idem;
    int k = 0;  // exponent; 0 for Idem and Socle
    auto operator<=>(const BasisPath&) const = default;
};

enum class ArrowType : std::uint8_t { A, B };

// a_i : i -> i+1, abar_i : i+1 -> i
struct Arrow {
    ArrowType type;
    int index;
};

// Formal combination of basis paths, keyed by basis index. No zero coefficients.
struct AlgebraElement {
    std::map<int, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(int path, const Scalar& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const;
};

class Algebra {
public:
    Algebra(int m, int N, Field field);
    static Algebra create(int m, int N, Field field) { return Algebra(m, N, field); }

    int m() const { return m_; }
    int N() const { return N_; }
    const Field& field() const { return field_; }
    AlgebraParams params() const { return {m_, N_, field_}; }

    int vertex(long v) const { return static_cast<int>(((v % m_) + m_) % m_); }

    std::size_t dimension() const { return paths_.size(); }
    const BasisPath& path(int id) const { return paths_[id]; }
    int id(const BasisPath& p) const;
    int target(int id) const { return info_[id].target; }
    int source(int id) const { return paths_[id].source; }
    int length(int id) const { return info_[id].length; }

    // ordered ids of the basis of e_i Λ e_j
    const std::vector<int>& basis(int i, int j) const { return between_[i * m_ + j]; }
    // ids of basis paths ending at v (Λ e_v), and starting at v (e_v Λ)
    const std::vector<int>& ending_at(int v) const { return ending_[v]; }
    const std::vector<int>& starting_at(int v) const { return starting_[v]; }

    // product of two basis paths: another basis path (coefficient 1) or nothing
    std::optional<int> mul(int x, int y) const {
        int r = table_[static_cast<std::size_t>(x) * paths_.size() + y];
        return r < 0 ? std::nullopt : std::optional<int>(r);
    }

    int idem(int v) const { return id({vertex(v), Shape::Idem, 0}); }
    int pow_ab(int v, int k) const;   // (a_v abar_v)^k, k in 0..N
    int pow_ba(int v, int k) const;   // (abar_{v-1} a_{v-1})^k, k in 0..N
    int socle(int v) const { return id({vertex(v), Shape::Socle, 0}); }
    int a_head(int v, int k) const { return id({vertex(v), Shape::AHead, k}); }
    int b_head(int v, int k) const { return id({vertex(v), Shape::BHead, k}); }

    AlgebraElement element(int path, long c = 1) const;
    AlgebraElement unit() const;
    AlgebraElement normal_form(int start, const std::vector<Arrow>& word) const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement multiply(int path, const AlgebraElement& y) const;
    AlgebraElement multiply(const AlgebraElement& x, int path) const;

    bool radical_membership(const AlgebraElement& x) const;
    bool is_central(const AlgebraElement& z) const;
    // basis of the commutant of the generators e_i, a_i, abar_i
    std::vector<AlgebraElement> centre() const;

    std::string render(int id) const;
    std::string render(const AlgebraElement& x) const;

private:
    struct Info {
        int target;
        int length;
        ArrowType first, last;
    };
    int make_path(int source, ArrowType first, int length) const;

    int m_, N_;
    Field field_;
    std::vector<BasisPath> paths_;
    std::vector<Info> info_;
    std::map<BasisPath, int> index_;
    std::vector<std::vector<int>> between_, ending_, starting_;
    std::vector<int> table_;
};

}  // namespace hh
