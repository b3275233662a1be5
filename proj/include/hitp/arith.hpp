#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitp/error.hpp"

namespace hitp {

/// Residues mod p. Every prime accepted by PrimeModulus fits in a byte, so
/// dense matrices store one byte per entry.
using Scalar = std::uint8_t;

/// Odd prime p < 256.
class PrimeModulus {
  public:
    static constexpr unsigned kMax = 255;

    explicit constexpr PrimeModulus(unsigned p) : p_(p)
    {
        if (p == 2)
            throw EvenPrimeError("p = 2 is not supported: the degree conventions (deg t_i = 2) need an odd prime");
        if (p < 2 || p > kMax || !is_prime(p))
            throw DomainError("p must be an odd prime below 256, got " + std::to_string(p));
    }

    [[nodiscard]] constexpr unsigned value() const noexcept { return p_; }
    constexpr operator unsigned() const noexcept { return p_; }

    [[nodiscard]] Scalar reduce(std::int64_t x) const noexcept
    {
        const auto p = static_cast<std::int64_t>(p_);
        x %= p;
        return static_cast<Scalar>(x < 0 ? x + p : x);
    }
    [[nodiscard]] Scalar add(Scalar a, Scalar b) const noexcept
    {
        unsigned s = unsigned(a) + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] Scalar sub(Scalar a, Scalar b) const noexcept
    {
        return static_cast<Scalar>(a >= b ? a - b : a + p_ - b);
    }
    [[nodiscard]] Scalar neg(Scalar a) const noexcept { return static_cast<Scalar>(a == 0 ? 0 : p_ - a); }
    [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept
    {
        return static_cast<Scalar>((unsigned(a) * b) % p_);
    }
    [[nodiscard]] Scalar pow(Scalar a, std::uint64_t e) const noexcept
    {
        unsigned result = 1 % p_, base = a % p_;
        while (e) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Scalar>(result);
    }
    /// Multiplicative inverse via Fermat; a must be nonzero.
    [[nodiscard]] Scalar inv(Scalar a) const
    {
        if (a % p_ == 0)
            throw DomainError("zero has no inverse mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend constexpr bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }

    static constexpr bool is_prime(unsigned n) noexcept
    {
        if (n < 2)
            return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

  private:
    unsigned p_;
};

/// Base-p digits, least significant first. The expansion of 0 is {0}.
using PAdicExpansion = std::vector<unsigned>;

inline PAdicExpansion p_digits(std::uint64_t n, PrimeModulus p)
{
    if (n == 0)
        return {0};
    PAdicExpansion digits;
    while (n > 0) {
        digits.push_back(static_cast<unsigned>(n % p));
        n /= p;
    }
    return digits;
}

/// Inverse of p_digits.
inline std::uint64_t p_value(const PAdicExpansion& digits, PrimeModulus p)
{
    std::uint64_t value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        value = value * p + *it;
    return value;
}

/// The s-th base-p digit of n (0 beyond the expansion).
constexpr unsigned p_digit(std::uint64_t n, unsigned s, unsigned p) noexcept
{
    while (s-- > 0 && n > 0)
        n /= p;
    return static_cast<unsigned>(n % p);
}

inline unsigned digit_sum(std::uint64_t n, PrimeModulus p)
{
    unsigned sum = 0;
    for (; n > 0; n /= p)
        sum += static_cast<unsigned>(n % p);
    return sum;
}

/// p^s as an integer.
constexpr std::uint64_t ipow(std::uint64_t base, unsigned e) noexcept
{
    std::uint64_t r = 1;
    while (e--)
        r *= base;
    return r;
}

namespace detail {
// binom(a, b) mod p for single digits a, b < p.
inline Scalar small_binom(unsigned a, unsigned b, PrimeModulus p)
{
    if (b > a)
        return 0;
    // Products of at most p-1 factors below p; reduce as we go.
    unsigned num = 1, den = 1;
    for (unsigned i = 0; i < b; ++i) {
        num = num * (a - i) % p;
        den = den * (i + 1) % p;
    }
    return p.mul(static_cast<Scalar>(num), p.inv(static_cast<Scalar>(den)));
}
} // namespace detail

/// binom(n, k) mod p by Lucas' theorem: the product of digitwise binomials.
inline Scalar lucas_binom(std::uint64_t n, std::uint64_t k, PrimeModulus p)
{
    if (k > n)
        return 0;
    Scalar acc = 1;
    while (k > 0) {
        unsigned nd = static_cast<unsigned>(n % p), kd = static_cast<unsigned>(k % p);
        if (kd > nd)
            return 0;
        acc = p.mul(acc, detail::small_binom(nd, kd, p));
        n /= p;
        k /= p;
    }
    return acc;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// Smallest g >= 2 generating (Z/p)^*.
inline Scalar primitive_root(PrimeModulus p)
{
    const auto qs = prime_divisors(p - 1);
    for (unsigned g = 2; g < p; ++g) {
        bool ok = true;
        for (unsigned q : qs) {
            if (p.pow(static_cast<Scalar>(g), (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return static_cast<Scalar>(g);
    }
    throw ConsistencyError("no primitive root mod " + std::to_string(unsigned(p)));
}

} // namespace hitp
