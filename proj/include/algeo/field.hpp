#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "algeo/errors.hpp"

namespace algeo {

enum class FieldKind { rational, prime };

/// A field descriptor: the rationals, or F_p with p a prime >= 5
/// (so that 2 and 3 are invertible).
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::uint64_t modulus = 0; // nonzero iff kind == prime

    static FieldSpec rationals() { return {FieldKind::rational, 0}; }
    static FieldSpec prime(std::uint64_t p); // throws ValidationError unless p prime, p >= 5

    bool operator==(const FieldSpec &) const = default;
    std::string str() const;
};

/// An exact field element in canonical form: a reduced fraction with
/// positive denominator, or a residue in [0, p).  Immutable value type.
class Scalar {
  public:
    Scalar() = default; // 0 in Q
    explicit Scalar(FieldSpec spec);

    static Scalar zero(const FieldSpec &spec) { return Scalar(spec); }
    static Scalar one(const FieldSpec &spec);
    static Scalar from_int(const FieldSpec &spec, long long v);
    /// Grammar: -?[0-9]+(/[0-9]+)?
    static Scalar from_string(const FieldSpec &spec, std::string_view text);

    FieldSpec spec() const;
    bool is_zero() const;
    std::string str() const;

    Scalar operator-() const;
    Scalar inv() const; // throws DivisionByZero on 0

    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// this += a*b, avoiding one temporary on the hot contraction path.
    void add_mul(const Scalar &a, const Scalar &b);

  private:
    struct Residue {
        std::uint64_t v = 0;
        std::uint64_t p = 0;
        bool operator==(const Residue &) const = default;
    };
    std::variant<mpq_class, Residue> v_;

    void require_same(const Scalar &o) const;
};

bool is_prime_u64(std::uint64_t n);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p); // throws DivisionByZero on 0

} // namespace algeo
