#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cbid {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is always stored as 0/1. Arithmetic never overflows; the storage grows
/// as needed.
class BigRational {
public:
    BigRational() = default;

    template <std::integral I>
    BigRational(I value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>)
            value_ = mpq_class(static_cast<long>(value));
        else
            value_ = mpq_class(static_cast<unsigned long>(value));
    }

    explicit BigRational(const mpz_class& integer) : value_(integer) {}

    /// Throws std::domain_error when `denominator` is zero.
    BigRational(const mpz_class& numerator, const mpz_class& denominator);

    explicit BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Accepts "n" or "n/d" with an optional leading sign.
    static BigRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational abs() const;
    BigRational inverse() const;

    std::string str() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    friend BigRational operator-(const BigRational& value);

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

} // namespace cbid
