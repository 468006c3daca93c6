#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "evoternary/errors.hpp"
#include "evoternary/rng.hpp"

namespace evoternary {

enum class FieldKind { Rational, Prime };

class FieldElement;

/// Coefficient field: the rationals, or the integers modulo a prime p < 2^61.
class FieldSpec {
public:
    static FieldSpec rational() { return FieldSpec(FieldKind::Rational, 0); }
    /// Validates p by trial division; throws InvariantError otherwise.
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    /// Prime fields only.
    std::uint64_t modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const;

    /// Accepts `-?digits(/digits)?`. Rationals are reduced to lowest terms with
    /// positive denominator; prime-field values are reduced modulo p.
    FieldElement parse(std::string_view text) const;

    /// Rational: numerator in [-9, 9], denominator in [1, 9].
    /// Prime: uniform residue. With nonzero set, redraws until nonzero.
    FieldElement sample(SeededRng& rng, bool nonzero = false) const;

    std::string name() const;  // "rational" or "F<p>"

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    friend class FieldElement;

    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;  // 0 for the rational field
};

/// A field element in canonical form: rationals in lowest terms with positive
/// denominator, prime-field values as residues in [0, p). Elements carry their
/// field; mixing fields throws FieldMismatchError.
class FieldElement {
public:
    FieldElement() = default;  // rational zero

    FieldSpec field() const {
        return p_ == 0 ? FieldSpec::rational() : FieldSpec(FieldKind::Prime, p_);
    }
    bool is_rational() const { return p_ == 0; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;  // throws DivisionByZeroError on zero

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.p_ != b.p_) return false;
        return a.p_ == 0 ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Canonical text; FieldSpec::parse(str()) reproduces the element.
    std::string str() const;

    /// Valid only for rational elements.
    const mpq_class& rational_value() const { return rat_; }
    /// Valid only for prime-field elements.
    std::uint64_t residue() const { return res_; }

private:
    friend class FieldSpec;

    explicit FieldElement(mpq_class v) : rat_(std::move(v)) {}
    FieldElement(std::uint64_t res, std::uint64_t p) : res_(res), p_(p) {}

    void require_same(const FieldElement& o) const {
        if (p_ != o.p_) throw FieldMismatchError();
    }

    mpq_class rat_{0};
    std::uint64_t res_ = 0;
    std::uint64_t p_ = 0;  // 0 marks a rational element
};

/// Deterministic trial-division primality test.
bool is_prime_u64(std::uint64_t n);

}  // namespace evoternary
