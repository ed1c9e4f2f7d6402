#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

#include "trop/errors.hpp"

namespace trop {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Tag { NegInf, Real, Ghost };

/// An element of the extended tropical semiring: a real magnitude, a ghost
/// magnitude, or -inf.  Magnitudes are exact rationals; equality is decided
/// exactly, which is what makes tie-ghostification (a (+) a = a^g) reliable.
class Scalar {
public:
    Scalar() : tag_(Tag::NegInf) {}

    static Scalar neg_inf() { return Scalar{}; }
    static Scalar real(Rational a) { return Scalar(Tag::Real, std::move(a)); }
    static Scalar ghost(Rational a) { return Scalar(Tag::Ghost, std::move(a)); }

    Tag tag() const { return tag_; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_real() const { return tag_ == Tag::Real; }
    bool has_ghost_tag() const { return tag_ == Tag::Ghost; }

    /// pre: !is_neg_inf()
    const Rational& magnitude() const { return mag_; }

    bool operator==(const Scalar& o) const {
        return tag_ == o.tag_ && (tag_ == Tag::NegInf || mag_ == o.mag_);
    }

    /// Total order: -inf least, then by magnitude, and at equal magnitude
    /// the real element precedes its ghost.
    std::strong_ordering operator<=>(const Scalar& o) const {
        if (tag_ == Tag::NegInf || o.tag_ == Tag::NegInf) {
            return rank_of(tag_) <=> rank_of(o.tag_);
        }
        if (mag_ < o.mag_) return std::strong_ordering::less;
        if (mag_ > o.mag_) return std::strong_ordering::greater;
        return rank_of(tag_) <=> rank_of(o.tag_);
    }

private:
    Scalar(Tag t, Rational a) : tag_(t), mag_(std::move(a)) {}

    static int rank_of(Tag t) {
        switch (t) {
            case Tag::NegInf: return 0;
            case Tag::Real: return 1;
            case Tag::Ghost: return 2;
        }
        return 0;
    }

    Tag tag_;
    Rational mag_;
};

/// Image of the max-plus projection: a real magnitude or -inf, never ghost.
class MaxPlus {
public:
    MaxPlus() : finite_(false) {}
    static MaxPlus neg_inf() { return MaxPlus{}; }
    static MaxPlus of(Rational a) { return MaxPlus(std::move(a)); }

    bool is_neg_inf() const { return !finite_; }
    const Rational& value() const { return val_; }

    bool operator==(const MaxPlus& o) const {
        return finite_ == o.finite_ && (!finite_ || val_ == o.val_);
    }

private:
    explicit MaxPlus(Rational a) : finite_(true), val_(std::move(a)) {}
    bool finite_;
    Rational val_;
};

/// Max-plus arithmetic on the projection image.
MaxPlus mp_add(const MaxPlus& x, const MaxPlus& y);
MaxPlus mp_mul(const MaxPlus& x, const MaxPlus& y);

/// x (+) y: order-maximum, except equal magnitudes ghostify.
Scalar add(const Scalar& x, const Scalar& y);

/// x (.) y: magnitudes add; ghost tags absorb; -inf annihilates.
Scalar mul(const Scalar& x, const Scalar& y);

/// x / y: magnitudes subtract; ghost tags absorb.  Throws DomainError when
/// y = -inf.
Scalar div(const Scalar& x, const Scalar& y);

/// The ghost map: real elements acquire the ghost tag, ghosts and -inf are
/// fixed.
Scalar ghost(const Scalar& x);

/// The max-plus projection pi, stripping the ghost tag.
MaxPlus realize(const Scalar& x);

/// pi as a map back into the semiring (real-tagged image); convenient when a
/// projected value re-enters tropical arithmetic.
Scalar project(const Scalar& x);

/// Membership in the ghost part U-bar = R^g union {-inf}.
bool is_ghost(const Scalar& x);

/// Canonical text form: `p/q` (integers without denominator), ghost suffix
/// `g`, `-inf`.
std::string to_string(const Scalar& x);
std::string to_string(const MaxPlus& x);

/// Parses the canonical text form.  Throws ParseError.
Scalar parse_scalar(std::string_view token);

inline Scalar operator+(const Scalar& x, const Scalar& y) { return add(x, y); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return mul(x, y); }
inline Scalar operator/(const Scalar& x, const Scalar& y) { return div(x, y); }

}  // namespace trop
