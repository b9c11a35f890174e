#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace cbid {

/// Largest number of variables a polynomial ring may have.
inline constexpr std::size_t kMaxArity = 16;

/// Largest exponent a single variable may carry.
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponents of one monomial, one entry per ring variable.
///
/// Ordering is pure lexicographic with variable 0 most significant. Unused
/// slots past `size()` are always zero, so whole-array comparison is the
/// lexicographic order for vectors of equal arity.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t arity);
    ExponentVector(std::initializer_list<std::uint32_t> exponents);

    std::size_t size() const { return arity_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, std::uint32_t value);

    std::uint64_t total_degree() const;
    bool is_zero() const;

    /// True when every exponent of *this is <= the corresponding one of `other`.
    bool divides(const ExponentVector& other) const;

    /// Throws std::overflow_error if an exponent exceeds kMaxExponent.
    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    /// Requires b.divides(a).
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

    friend ExponentVector min(const ExponentVector& a, const ExponentVector& b);
    friend ExponentVector max(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b)
    {
        return a.exps_ <=> b.exps_;
    }

    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxArity> exps_{};
    std::uint8_t arity_ = 0;
};

} // namespace cbid
