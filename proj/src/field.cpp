#include "titsforge/field.hpp"

#include <cstdlib>

namespace titsforge {

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p < 5)
        throw InvalidField("prime field modulus must be >= 5, got " + std::to_string(p));
    if (p >= (std::int64_t(1) << 31))
        throw InvalidField("prime field modulus too large: " + std::to_string(p));
    if (!is_prime_int(p))
        throw InvalidField(std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

std::int64_t egcd_inverse(std::int64_t a, std::int64_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
    std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    // r0 = gcd(a, p) = 1 since p is prime and a != 0 mod p
    return ((s0 % p) + p) % p;
}

namespace {
std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}
} // namespace

Scalar Scalar::from_int(const FieldSpec& spec, std::int64_t n) {
    if (spec.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    return Scalar(mod_norm(n, spec.modulus()), spec.modulus());
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class v) {
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::residue(std::int64_t value, std::int64_t p) {
    return Scalar(mod_norm(value, p), p);
}

Scalar Scalar::parse(const FieldSpec& spec, const std::string& text) {
    try {
        if (spec.is_prime()) {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) throw ParseError("trailing characters in scalar '" + text + "'");
            return residue(v, spec.modulus());
        }
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            mpq_class q(text, 10);
            q.canonicalize();
            return Scalar(std::move(q));
        }
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    } catch (const std::invalid_argument&) {
        throw ParseError("cannot parse scalar '" + text + "' over " + spec.name());
    }
}

FieldSpec Scalar::spec() const {
    return is_res() ? FieldSpec::prime(res().p) : FieldSpec::rationals();
}

bool Scalar::is_zero() const {
    return is_res() ? res().v == 0 : std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
    return is_res() ? res().v == 1 : std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (is_res() != o.is_res() || (is_res() && res().p != o.res().p))
        throw SpecMismatch("scalar field mismatch: " + spec().name() + " vs " + o.spec().name());
}

Scalar Scalar::operator-() const {
    if (is_res()) return Scalar(res().v == 0 ? 0 : res().p - res().v, res().p);
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (is_res()) {
        auto& r = std::get<Residue>(v_);
        r.v = mod_norm(r.v + o.res().v, r.p);
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (is_res()) {
        auto& r = std::get<Residue>(v_);
        r.v = mod_norm(r.v - o.res().v, r.p);
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (is_res()) {
        auto& r = std::get<Residue>(v_);
        r.v = mulmod(r.v, o.res().v, r.p);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_res()) return Scalar(egcd_inverse(res().v, res().p), res().p);
    const auto& q = std::get<mpq_class>(v_);
    if (q == 0) throw DivisionByZero("inverse of 0 in Q");
    return Scalar(mpq_class(1 / q));
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.is_res()) return a.res().v == b.res().v;
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::str() const {
    if (is_res()) return std::to_string(res().v);
    return std::get<mpq_class>(v_).get_str();
}

std::int64_t Scalar::residue_value() const {
    if (!is_res()) throw SpecMismatch("residue_value on a rational scalar");
    return res().v;
}

const mpq_class& Scalar::rational_value() const {
    if (is_res()) throw SpecMismatch("rational_value on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.is_res()) {
        if (a.res().v < b.res().v) return -1;
        return a.res().v == b.res().v ? 0 : 1;
    }
    return cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
}

Scalar small_inverse(int n, const FieldSpec& spec) {
    if (n != 2 && n != 3 && n != 6)
        throw Error("small_inverse defined only for 2, 3, 6");
    return Scalar::from_int(spec, n).inverse();
}

} // namespace titsforge
