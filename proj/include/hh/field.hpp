#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hh {

struct CompositeCharacteristic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

class Scalar;

// Either Q (characteristic 0) or F_p.
class Field {
public:
    Field() = default;
    static Field create(unsigned characteristic);

    unsigned characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_fraction(long num, long den) const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(unsigned p) : p_(p) {}
    unsigned p_ = 0;
};

// Exact field element. Characteristic 0 values are GMP rationals, characteristic p
// values are residues in [0, p). A characteristic-0 value meeting a characteristic-p
// value is mapped into F_p first (its denominator must be prime to p); this is what lets
// integer literals mix freely with residues.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v, unsigned p);
    Scalar(const mpq_class& q, unsigned p);

    unsigned characteristic() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    // a += b*c without temporaries on the residue path
    void add_mul(const Scalar& b, const Scalar& c);

    // residue in [0,p) or the rational itself
    std::int64_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }
    std::string to_string() const;

private:
    void promote_to(unsigned p);
    unsigned unify(const Scalar& o);

    unsigned p_ = 0;
    std::int64_t r_ = 0;
    mpq_class q_;
};

bool is_prime(unsigned n);

}  // namespace hh
