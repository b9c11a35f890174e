#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cbid/identity.hpp"
#include "cbid/verify.hpp"

namespace cbid {

/// Orders (m_1, ..., m_n) of the operator prod_t (-d/dx_t)^{m_t}.
class OperatorOrders {
public:
    /// Throws std::invalid_argument on a negative order.
    explicit OperatorOrders(std::vector<std::int64_t> orders);

    std::size_t size() const { return orders_.size(); }
    std::int64_t operator[](std::size_t i) const { return orders_[i]; }
    std::span<const std::int64_t> values() const { return orders_; }
    std::int64_t total() const;

    /// prod_t m_t!
    BigRational factorial_product() const;

private:
    std::vector<std::int64_t> orders_;
};

/// prod_t (-d/dx_t)^{m_t} f, differentiating one variable at a time from
/// index 0 upward and normalizing after every step.
RationalFunction apply_operator(const RationalFunction& f, const OperatorOrders& orders);

/// Applies the operator to a product term by the general Leibniz rule,
/// distributing each variable's order over the factors that depend on it.
/// Every resulting summand is returned as its own term (factors of exponent
/// 1, coefficient = product of the multinomial splits).
std::vector<Term> apply_operator_leibniz(const Term& term, const OperatorOrders& orders);

struct Derivation {
    /// The operator applied to the base identity in n variables, divided by
    /// prod m_t!. Reported under the inverse_n family with params = orders.
    Identity identity;
    /// verdict = holds iff the derived identity is exactly zero-sum AND its
    /// term multisets equal those of build_inverse_n. On a multiset mismatch
    /// with a zero sum, `residual` carries the first offending term.
    VerificationReport report;
    bool verifies = false;
    /// Per base term, the Leibniz summands add up to apply_operator(term).
    bool leibniz_consistent = false;
    bool matches_closed_form = false;
    std::optional<RationalFunction> offending_term;
};

Derivation derive_inverse_identity(std::span<const std::int64_t> orders);

/// x_i -> 1/x_i in every term and factor. Throws std::invalid_argument for
/// conditional identities.
Identity invert_variables(const Identity& id);

/// First term of `a` without a partner in `b` (multiset difference), or of
/// `b` without one in `a`; nullopt when the multisets agree.
std::optional<RationalFunction> first_unmatched_term(std::vector<RationalFunction> a, std::vector<RationalFunction> b);

} // namespace cbid
