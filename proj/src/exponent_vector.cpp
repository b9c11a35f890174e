#include "cbid/exponent_vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbid {

ExponentVector::ExponentVector(std::size_t arity)
{
    if (arity > kMaxArity)
        throw std::invalid_argument("ExponentVector: arity " + std::to_string(arity) + " exceeds " +
                                    std::to_string(kMaxArity));
    arity_ = static_cast<std::uint8_t>(arity);
}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> exponents)
    : ExponentVector(exponents.size())
{
    std::size_t i = 0;
    for (auto e : exponents)
        set(i++, e);
}

void ExponentVector::set(std::size_t i, std::uint32_t value)
{
    if (i >= arity_)
        throw std::out_of_range("ExponentVector: index out of range");
    if (value > kMaxExponent)
        throw std::overflow_error("ExponentVector: exponent overflow");
    exps_[i] = static_cast<std::uint16_t>(value);
}

std::uint64_t ExponentVector::total_degree() const
{
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < arity_; ++i)
        d += exps_[i];
    return d;
}

bool ExponentVector::is_zero() const
{
    return std::all_of(exps_.begin(), exps_.begin() + arity_, [](auto e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const
{
    for (std::size_t i = 0; i < arity_; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) {
        std::uint32_t s = std::uint32_t{a.exps_[i]} + b.exps_[i];
        if (s > kMaxExponent)
            throw std::overflow_error("ExponentVector: exponent overflow");
        r.exps_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) {
        if (b.exps_[i] > a.exps_[i])
            throw std::domain_error("ExponentVector: negative exponent in difference");
        r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
    }
    return r;
}

ExponentVector min(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i)
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
}

ExponentVector max(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i)
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

std::size_t ExponentVector::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < arity_; ++i) {
        h ^= exps_[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace cbid
