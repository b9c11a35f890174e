#include "cbid/big_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cbid {

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0)
        throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    auto is_integer_literal = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size())
            return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s[0] == '+')
            s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("BigRational: malformed literal '" + std::string(text) + "'");
    return BigRational(to_mpz(num), to_mpz(den));
}

BigRational BigRational::abs() const
{
    BigRational r;
    r.value_ = ::abs(value_);
    return r;
}

BigRational BigRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("BigRational: inverse of zero");
    return BigRational(value_.get_den(), value_.get_num());
}

std::string BigRational::str() const { return value_.get_str(10); }

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("BigRational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational operator-(const BigRational& value)
{
    BigRational r;
    r.value_ = -value.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.str(); }

} // namespace cbid
