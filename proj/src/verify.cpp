#include "cbid/verify.hpp"

#include <stdexcept>

namespace cbid {

std::string_view method_name(Method m) { return m == Method::exact ? "exact" : "modp"; }
std::string_view verdict_name(Verdict v) { return v == Verdict::holds ? "holds" : "fails"; }

std::vector<RationalFunction> difference_terms(const Identity& id)
{
    std::vector<RationalFunction> terms;
    terms.reserve(id.lhs().size() + id.rhs().size());
    for (const auto& t : id.lhs())
        terms.push_back(t.value());
    for (const auto& t : id.rhs())
        terms.push_back(rf_neg(t.value()));
    if (const auto& p = id.parametrization()) {
        for (auto& t : terms) {
            try {
                t = rf_substitute(t, p->variable, p->value);
            } catch (const std::domain_error& e) {
                throw std::logic_error(id.label() + ": parametrization is singular on a term (" + e.what() + ")");
            }
        }
    }
    return terms;
}

VerificationReport verify_exact(const Identity& id)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.family = id.family();
    report.params = id.params();
    report.method = Method::exact;

    std::vector<RationalFunction> terms = difference_terms(id);
    UnreducedSum sum = rf_sum_unreduced(terms, id.arity());
    if (sum.numerator.is_zero()) {
        report.verdict = Verdict::holds;
    } else {
        report.verdict = Verdict::fails;
        report.residual = rf_normalize(std::move(sum.numerator), std::move(sum.denominator));
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace cbid
