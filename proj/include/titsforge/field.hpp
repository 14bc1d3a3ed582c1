#ifndef TITSFORGE_FIELD_HPP
#define TITSFORGE_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "titsforge/errors.hpp"

namespace titsforge {

enum class FieldKind { Rationals, Prime };

/// Identifies the base field: the rationals, or a prime field F_p with p >= 5.
/// Characteristic 2 and 3 are rejected at construction and never rechecked.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime(std::int64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rationals; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    std::int64_t modulus() const { return p_; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    std::string name() const;

private:
    FieldSpec(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::int64_t p_;
};

/// An exact element of Q or of F_p. Rationals are kept in lowest terms with a
/// positive denominator, so equality is structural. Immutable value type.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& spec) { return from_int(spec, 0); }
    static Scalar one(const FieldSpec& spec) { return from_int(spec, 1); }
    static Scalar from_int(const FieldSpec& spec, std::int64_t n);
    static Scalar rational(std::int64_t num, std::int64_t den = 1);
    static Scalar rational(mpq_class v);
    static Scalar residue(std::int64_t value, std::int64_t p);
    /// Accepts "n", "-n" or "n/d" for rationals, a decimal residue for F_p.
    static Scalar parse(const FieldSpec& spec, const std::string& text);

    FieldSpec spec() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    /// Throws SpecMismatch when the operands live in different fields.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: "n" or "n/d" over Q, the residue digits over F_p.
    std::string str() const;

    std::int64_t residue_value() const;
    const mpq_class& rational_value() const;

    /// Total order used for deterministic witness selection. Rationals by
    /// value, residues by canonical representative.
    static int compare(const Scalar& a, const Scalar& b);

private:
    struct Residue {
        std::int64_t v;
        std::int64_t p;
    };
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    Scalar(std::int64_t v, std::int64_t p) : v_(Residue{v, p}) {}
    const Residue& res() const { return std::get<Residue>(v_); }
    bool is_res() const { return std::holds_alternative<Residue>(v_); }
    void check_same(const Scalar& o) const;

    std::variant<mpq_class, Residue> v_;
};

/// Inverse of n (n in {2, 3, 6}) in the given field; always defined because
/// the characteristic is neither 2 nor 3.
Scalar small_inverse(int n, const FieldSpec& spec);

/// Extended-gcd modular inverse, 0 < a < p. Throws DivisionByZero for a == 0.
std::int64_t egcd_inverse(std::int64_t a, std::int64_t p);

bool is_prime_int(std::int64_t n);

} // namespace titsforge

#endif
