#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cbid/identity.hpp"
#include "cbid/verify.hpp"

namespace cbid {

enum class PolyOrder {
    lex_descending,   ///< the interchange order: leading term first
    degree_ascending, ///< by total degree, lex-descending within a degree
};

/// `3*x^2*y - 3/2*y + 1`; "0" for the zero polynomial.
std::string format_poly(const SparsePoly& p, std::span<const std::string> names,
                        PolyOrder order = PolyOrder::lex_descending);

/// The numerator alone when the denominator is 1, else `(num)/(den)`.
std::string format_rf(const RationalFunction& f, std::span<const std::string> names,
                      PolyOrder order = PolyOrder::lex_descending);

/// Parses + - * / ^ ( ), integer literals and the given variable names.
/// Exponents are integers and may be negative. Throws std::invalid_argument.
RationalFunction parse_rf(std::string_view text, std::span<const std::string> names);

/// `x + (1 - x) = 1`, terms in stored order, polynomials by ascending degree.
std::string render_plain(const Identity& id);

/// LaTeX with \binom for binomial coefficients and \frac for quotients.
std::string render_latex(const Identity& id);

nlohmann::json identity_to_json(const Identity& id);
nlohmann::json report_to_json(const VerificationReport& report, std::span<const std::string> names);

/// The content of an identity document, parsed back into canonical terms.
struct IdentityDocument {
    Family family = Family::cb;
    std::vector<std::int64_t> params;
    std::size_t arity = 0;
    std::optional<RationalFunction> constraint;
    std::vector<RationalFunction> lhs;
    std::vector<RationalFunction> rhs;
};

IdentityDocument identity_from_json(const nlohmann::json& doc);

} // namespace cbid
