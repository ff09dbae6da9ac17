#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "a" or "a/b" text for a rational.
std::string to_string(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);

/// Tag for exact arithmetic over the rationals.
struct RationalField {
    using value_type = Rational;
    static constexpr const char* label = "rational";
};

/// The prime field F_p for a prime 2^31 < p < 2^32, so products of two
/// reduced residues fit in 64 bits.
class PrimeField {
public:
    using value_type = std::uint64_t;
    static constexpr const char* label = "prime";
    static constexpr std::uint64_t default_prime = 4294967291ULL;  // 2^32 - 5

    explicit PrimeField(std::uint64_t p = default_prime);

    /// Honors SECANT_WITNESS_PRIME when set, else the default prime.
    static PrimeField from_environment();

    std::uint64_t prime() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const;

    /// Image of a rational under Z_(p) -> F_p. Throws InputError when p
    /// divides the denominator.
    std::uint64_t reduce(const Rational& value) const;
    std::uint64_t reduce(const Integer& value) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

}  // namespace powsum
