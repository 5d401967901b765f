#include "hh/field.hpp"

namespace hh {

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
        b = static_cast<std::int64_t>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

std::int64_t reduce_mpz(const mpz_class& z, unsigned p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::int64_t>(r.get_ui());
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::create(unsigned characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw CompositeCharacteristic("characteristic " + std::to_string(characteristic) +
                                      " is neither 0 nor prime");
    return Field(characteristic);
}

Scalar Field::zero() const { return Scalar(0, p_); }
Scalar Field::one() const { return Scalar(1, p_); }
Scalar Field::from_int(long v) const { return Scalar(v, p_); }
Scalar Field::from_fraction(long num, long den) const {
    return Scalar(mpq_class(num, den), p_);
}

Scalar::Scalar(long v, unsigned p) : p_(p) {
    if (p_) {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        r_ = r < 0 ? r + p_ : r;
    } else {
        q_ = v;
    }
}

Scalar::Scalar(const mpq_class& q, unsigned p) : p_(0), q_(q) {
    q_.canonicalize();
    if (p) promote_to(p);
}

void Scalar::promote_to(unsigned p) {
    std::int64_t den = reduce_mpz(q_.get_den(), p);
    if (den == 0) throw FieldMismatch("denominator vanishes in characteristic " + std::to_string(p));
    std::int64_t num = reduce_mpz(q_.get_num(), p);
    r_ = static_cast<std::int64_t>((__int128)num * mod_pow(den, p - 2, p) % p);
    p_ = p;
    q_ = 0;
}

unsigned Scalar::unify(const Scalar& o) {
    if (p_ == o.p_) return p_;
    if (p_ == 0) {
        promote_to(o.p_);
        return p_;
    }
    if (o.p_ == 0) return p_;
    throw FieldMismatch("scalars from different characteristics");
}

namespace {
// o seen in characteristic p (o.p_ is p or 0)
std::int64_t residue_of(const Scalar& o, unsigned p) {
    if (o.characteristic() == p) return o.residue();
    return Scalar(o.rational(), p).residue();
}
}  // namespace

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_)
        r.r_ = r_ ? p_ - r_ : 0;
    else
        r.q_ = -q_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    unsigned p = unify(o);
    if (p) {
        r_ += residue_of(o, p);
        if (r_ >= p) r_ -= p;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    unsigned p = unify(o);
    if (p) {
        r_ -= residue_of(o, p);
        if (r_ < 0) r_ += p;
    } else {
        q_ -= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    unsigned p = unify(o);
    if (p)
        r_ = r_ * residue_of(o, p) % p;
    else
        q_ *= o.q_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r = *this;
    if (p_)
        r.r_ = mod_pow(r_, p_ - 2, p_);
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    unify(o);
    Scalar oo = o;
    if (p_ && oo.p_ == 0) oo.promote_to(p_);
    return *this *= oo.inverse();
}

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
    if (p_ && b.p_ == p_ && c.p_ == p_) {
        r_ = (r_ + b.r_ * c.r_) % p_;
        return;
    }
    if (p_ == 0 && b.p_ == 0 && c.p_ == 0) {
        mpq_class t = b.q_ * c.q_;
        q_ += t;
        return;
    }
    *this += b * c;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
    Scalar x = a;
    x -= b;
    return x.is_zero();
}

std::string Scalar::to_string() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

}  // namespace hh
