#include "algeo/field.hpp"

#include <charconv>

namespace algeo {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == d)
            return true;
        if (n % d == 0)
            return false;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0)
        throw DivisionByZero();
    return powmod_u64(a, p - 2, p);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 5 || !is_prime_u64(p))
        throw ValidationError("prime field modulus must be a prime >= 5, got " + std::to_string(p));
    return {FieldKind::prime, p};
}

std::string FieldSpec::str() const {
    return kind == FieldKind::rational ? "Q" : "F_" + std::to_string(modulus);
}

Scalar::Scalar(FieldSpec spec) {
    if (spec.kind == FieldKind::prime)
        v_ = Residue{0, spec.modulus};
    else
        v_ = mpq_class(0);
}

Scalar Scalar::one(const FieldSpec &spec) { return from_int(spec, 1); }

Scalar Scalar::from_int(const FieldSpec &spec, long long v) {
    Scalar s(spec);
    if (spec.kind == FieldKind::prime) {
        auto &r = std::get<Residue>(s.v_);
        long long m = v % static_cast<long long>(spec.modulus);
        if (m < 0)
            m += static_cast<long long>(spec.modulus);
        r.v = static_cast<std::uint64_t>(m);
    } else {
        std::get<mpq_class>(s.v_) = mpq_class(static_cast<long>(v));
    }
    return s;
}

Scalar Scalar::from_string(const FieldSpec &spec, std::string_view text) {
    // -?[0-9]+(/[0-9]+)?
    auto bad = [&] { throw ParseError("malformed scalar literal: '" + std::string(text) + "'"); };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty())
            bad();
        for (char c : den)
            if (c < '0' || c > '9')
                bad();
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        bad();
    for (char c : digits)
        if (c < '0' || c > '9')
            bad();

    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0)
        throw DivisionByZero("scalar literal with zero denominator: '" + std::string(text) + "'");

    Scalar s(spec);
    if (spec.kind == FieldKind::prime) {
        mpz_class p(static_cast<unsigned long>(spec.modulus));
        mpz_class nr = n % p, dr = d % p;
        if (nr < 0)
            nr += p;
        std::uint64_t nv = nr.get_ui();
        std::uint64_t dv = dr.get_ui();
        if (dv == 0)
            throw DivisionByZero("denominator divisible by " + std::to_string(spec.modulus));
        std::get<Residue>(s.v_).v = mulmod_u64(nv, invmod_u64(dv, spec.modulus), spec.modulus);
    } else {
        mpq_class q(n, d);
        q.canonicalize();
        std::get<mpq_class>(s.v_) = q;
    }
    return s;
}

FieldSpec Scalar::spec() const {
    if (auto *r = std::get_if<Residue>(&v_))
        return {FieldKind::prime, r->p};
    return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
    if (auto *r = std::get_if<Residue>(&v_))
        return r->v == 0;
    return std::get<mpq_class>(v_) == 0;
}

std::string Scalar::str() const {
    if (auto *r = std::get_if<Residue>(&v_))
        return std::to_string(r->v);
    return std::get<mpq_class>(v_).get_str();
}

void Scalar::require_same(const Scalar &o) const {
    if (v_.index() != o.v_.index())
        throw MixedFields();
    if (auto *r = std::get_if<Residue>(&v_))
        if (r->p != std::get<Residue>(o.v_).p)
            throw MixedFields();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (auto *r = std::get_if<Residue>(&s.v_))
        r->v = r->v == 0 ? 0 : r->p - r->v;
    else
        std::get<mpq_class>(s.v_) = -std::get<mpq_class>(s.v_);
    return s;
}

Scalar Scalar::inv() const {
    Scalar s = *this;
    if (auto *r = std::get_if<Residue>(&s.v_)) {
        r->v = invmod_u64(r->v, r->p);
    } else {
        auto &q = std::get<mpq_class>(s.v_);
        if (q == 0)
            throw DivisionByZero();
        q = 1 / q;
    }
    return s;
}

Scalar &Scalar::operator+=(const Scalar &o) {
    require_same(o);
    if (auto *r = std::get_if<Residue>(&v_)) {
        r->v += std::get<Residue>(o.v_).v;
        if (r->v >= r->p)
            r->v -= r->p;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    require_same(o);
    if (auto *r = std::get_if<Residue>(&v_)) {
        std::uint64_t ov = std::get<Residue>(o.v_).v;
        r->v = r->v >= ov ? r->v - ov : r->v + r->p - ov;
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    require_same(o);
    if (auto *r = std::get_if<Residue>(&v_))
        r->v = mulmod_u64(r->v, std::get<Residue>(o.v_).v, r->p);
    else
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
    require_same(o);
    return *this *= o.inv();
}

bool Scalar::operator==(const Scalar &o) const {
    require_same(o);
    if (auto *r = std::get_if<Residue>(&v_))
        return r->v == std::get<Residue>(o.v_).v;
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

void Scalar::add_mul(const Scalar &a, const Scalar &b) {
    a.require_same(b);
    require_same(a);
    if (auto *r = std::get_if<Residue>(&v_)) {
        std::uint64_t prod = mulmod_u64(std::get<Residue>(a.v_).v, std::get<Residue>(b.v_).v, r->p);
        r->v += prod;
        if (r->v >= r->p)
            r->v -= r->p;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_);
    }
}

} // namespace algeo
