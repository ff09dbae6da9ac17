#include <cstdlib>
#include <string>

#include "powsum/errors.hpp"
#include "powsum/scalar.hpp"

namespace powsum {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    Rational value;
    if (value.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
    if (value.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p <= (1ULL << 31) || p >= (1ULL << 32))
        throw InputError("prime must lie strictly between 2^31 and 2^32, got " + std::to_string(p));
    Integer z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw InputError(std::to_string(p) + " is not prime");
}

PrimeField PrimeField::from_environment() {
    const char* env = std::getenv("SECANT_WITNESS_PRIME");
    if (env == nullptr || *env == '\0') return PrimeField();
    char* end = nullptr;
    const unsigned long long p = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw InputError("SECANT_WITNESS_PRIME is not an integer");
    return PrimeField(p);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InputError("inverse of zero in F_p");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::reduce(const Integer& value) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p_);
    return r.get_ui();
}

std::uint64_t PrimeField::reduce(const Rational& value) const {
    const std::uint64_t den = reduce(value.get_den());
    if (den == 0) throw InputError("denominator divisible by the field prime");
    return mul(reduce(value.get_num()), inv(den));
}

}  // namespace powsum
