#include "evoternary/field.hpp"

#include <cctype>
#include <cstdlib>

namespace evoternary {

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 61;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Inverse of a modulo p for 0 < a < p, p prime. Extended Euclid on signed
// 64-bit values; all intermediates stay below p < 2^61.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Residue of an arbitrary-precision integer; mpz handles literals of any length.
std::uint64_t residue_of_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class m;
    mpz_mod_ui(m.get_mpz_t(), v.get_mpz_t(), p);  // result in [0, p)
    return m.get_ui();
}

struct ParsedFraction {
    mpz_class num;
    mpz_class den;  // 1 when no '/' present
};

ParsedFraction parse_fraction(std::string_view text) {
    const std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    const std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw ParseError("invalid field element '" + s + "'");
    const std::string num_text = s.substr(0, i);

    std::string den_text = "1";
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("invalid field element '" + s + "'");
        const std::size_t den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size())
            throw ParseError("invalid field element '" + s + "'");
        den_text = s.substr(den_begin);
    }

    ParsedFraction out;
    out.num = mpz_class(num_text, 10);
    out.den = mpz_class(den_text, 10);
    if (out.den == 0) throw ParseError("zero denominator in '" + s + "'");
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= kModulusLimit)
        throw InvariantError("modulus " + std::to_string(p) + " exceeds 2^61 - 1");
    if (!is_prime_u64(p)) throw InvariantError("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

std::uint64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::Prime) throw InvariantError("rational field has no modulus");
    return p_;
}

FieldElement FieldSpec::zero() const {
    return kind_ == FieldKind::Rational ? FieldElement(mpq_class(0)) : FieldElement(0, p_);
}

FieldElement FieldSpec::one() const {
    return kind_ == FieldKind::Rational ? FieldElement(mpq_class(1)) : FieldElement(1 % p_, p_);
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
    if (kind_ == FieldKind::Rational) return FieldElement(mpq_class(static_cast<long>(v)));
    auto r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p_));
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return FieldElement(static_cast<std::uint64_t>(r), p_);
}

FieldElement FieldSpec::parse(std::string_view text) const {
    ParsedFraction f = parse_fraction(text);
    if (kind_ == FieldKind::Rational) {
        mpq_class q(f.num, f.den);
        q.canonicalize();
        return FieldElement(std::move(q));
    }
    const std::uint64_t den = residue_of_mpz(f.den, p_);
    if (den == 0)
        throw ParseError("denominator of '" + std::string(text) + "' vanishes modulo " +
                         std::to_string(p_));
    const std::uint64_t num = residue_of_mpz(f.num, p_);
    return FieldElement(mulmod(num, invmod(den, p_), p_), p_);
}

FieldElement FieldSpec::sample(SeededRng& rng, bool nonzero) const {
    for (;;) {
        FieldElement v = zero();
        if (kind_ == FieldKind::Rational) {
            const std::int64_t num = rng.range(-9, 9);
            const std::int64_t den = rng.range(1, 9);
            mpq_class q(static_cast<long>(num), static_cast<long>(den));
            q.canonicalize();
            v = FieldElement(std::move(q));
        } else {
            v = FieldElement(rng.below(p_), p_);
        }
        if (!nonzero || !v.is_zero()) return v;
    }
}

std::string FieldSpec::name() const {
    return kind_ == FieldKind::Rational ? "rational" : "F" + std::to_string(p_);
}

bool FieldElement::is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }

bool FieldElement::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

FieldElement FieldElement::operator-() const {
    if (p_ == 0) return FieldElement(mpq_class(-rat_));
    return FieldElement(res_ == 0 ? 0 : p_ - res_, p_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (p_ == 0) return FieldElement(mpq_class(1 / rat_));
    return FieldElement(invmod(res_, p_), p_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same(o);
    if (p_ == 0) {
        rat_ += o.rat_;
    } else {
        res_ += o.res_;  // both < p < 2^61, no overflow
        if (res_ >= p_) res_ -= p_;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same(o);
    if (p_ == 0) {
        rat_ -= o.rat_;
    } else {
        res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p_ - o.res_;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same(o);
    if (p_ == 0) {
        rat_ *= o.rat_;
    } else {
        res_ = mulmod(res_, o.res_, p_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    require_same(o);
    return *this *= o.inverse();
}

std::string FieldElement::str() const {
    if (p_ == 0) return rat_.get_str();  // "n" or "n/d", canonical
    return std::to_string(res_);
}

}  // namespace evoternary
