#include "cbid/builders.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "cbid/combinatorics.hpp"

namespace cbid {

namespace {

using Kind = CoefficientForm::Kind;

void require_non_negative(std::span<const std::int64_t> values)
{
    for (auto v : values)
        if (v < 0)
            throw ParameterError("parameters must be non-negative");
}

void require_order_vector(std::span<const std::int64_t> orders)
{
    if (orders.size() < 2)
        throw ParameterError("need at least two orders (n >= 2)");
    if (orders.size() > kMaxArity)
        throw ParameterError("too many variables (at most " + std::to_string(kMaxArity) + ")");
    require_non_negative(orders);
}

RationalFunction var(std::size_t arity, std::size_t i) { return RationalFunction::variable(arity, i); }

RationalFunction one_minus_x() { return RationalFunction(SparsePoly::constant(1, 1) - SparsePoly::variable(1, 0)); }

RationalFunction sum_of_variables(std::size_t n)
{
    SparsePoly s(n);
    for (std::size_t i = 0; i < n; ++i)
        s = s + SparsePoly::variable(n, i);
    return RationalFunction(s);
}

// S_{n,n}: product of all variables.
SparsePoly elementary_top(std::size_t n)
{
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i)
        e.set(i, 1);
    return SparsePoly::monomial(e, 1);
}

// S_{n-1,n}: sum of the products that skip one variable.
SparsePoly elementary_skip_one(std::size_t n)
{
    SparsePoly s(n);
    for (std::size_t t = 0; t < n; ++t) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i)
            e.set(i, i == t ? 0 : 1);
        s = s + SparsePoly::monomial(e, 1);
    }
    return s;
}

Term plain_term(std::size_t arity, BigRational c, std::vector<Factor> factors, PowerCache* cache = nullptr)
{
    return Term(std::move(c), {}, std::move(factors), arity, cache);
}

Term binomial_term(std::size_t arity, std::int64_t n, std::int64_t r, int sign, std::vector<Factor> factors,
                   PowerCache* cache = nullptr)
{
    BigRational c = rat_binomial(n, r);
    if (sign < 0)
        c = -c;
    return Term(std::move(c), {Kind::binomial, {n, r}}, std::move(factors), arity, cache);
}

Term multinomial_term(std::size_t arity, std::vector<std::int64_t> orders, std::vector<Factor> factors,
                      PowerCache* cache = nullptr)
{
    BigRational c = multinomial(orders);
    return Term(std::move(c), {Kind::multinomial, std::move(orders)}, std::move(factors), arity, cache);
}

// Enumerates every index vector with 0 <= i_j <= bounds[j] for j != skip;
// entry `skip` is set to bounds[skip].
void for_each_index(std::span<const std::int64_t> bounds, std::size_t skip,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn)
{
    std::vector<std::int64_t> idx(bounds.size(), 0);
    idx[skip] = bounds[skip];
    while (true) {
        fn(idx);
        std::size_t j = bounds.size();
        while (j-- > 0) {
            if (j == skip)
                continue;
            if (idx[j] < bounds[j]) {
                ++idx[j];
                break;
            }
            idx[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            return;
    }
}

std::int64_t others_sum(const std::vector<std::int64_t>& idx, std::size_t skip)
{
    std::int64_t s = 0;
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != skip)
            s += idx[j];
    return s;
}

std::vector<std::int64_t> to_vector(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

// sum_t sum_{i_j<=m_j, j!=t} multinomial * prod_{j!=t} x_j^{m_j-i_j+1} * ratio^{m_t + sum i + 1};
// with no ratio the last factor is dropped.
std::vector<Term> product_expansion(std::span<const std::int64_t> m, const std::optional<RationalFunction>& ratio,
                                    PowerCache& cache)
{
    const std::size_t n = m.size();
    std::vector<Term> terms;
    for (std::size_t t = 0; t < n; ++t) {
        for_each_index(m, t, [&](const std::vector<std::int64_t>& idx) {
            std::vector<Factor> factors;
            for (std::size_t j = 0; j < n; ++j)
                if (j != t)
                    factors.push_back({var(n, j), m[j] - idx[j] + 1});
            if (ratio)
                factors.push_back({*ratio, m[t] + others_sum(idx, t) + 1});
            terms.push_back(multinomial_term(n, idx, std::move(factors), &cache));
        });
    }
    return terms;
}

Term monomial_product_term(std::span<const std::int64_t> m)
{
    const std::size_t n = m.size();
    std::vector<Factor> factors;
    for (std::size_t j = 0; j < n; ++j)
        factors.push_back({var(n, j), m[j] + 1});
    return plain_term(n, 1, std::move(factors));
}

void push_nonzero(std::vector<Term>& terms, Term t)
{
    if (!t.coefficient().is_zero())
        terms.push_back(std::move(t));
}

} // namespace

Identity build_cb(std::int64_t k, std::int64_t m)
{
    require_non_negative(std::array{k, m});
    const RationalFunction x = var(1, 0), y = one_minus_x();
    std::vector<Term> lhs;
    for (std::int64_t i = 0; i <= m; ++i)
        lhs.push_back(binomial_term(1, k + i, k, +1, {{x, k + 1}, {y, i}}));
    for (std::int64_t i = 0; i <= k; ++i)
        lhs.push_back(binomial_term(1, m + i, m, +1, {{y, m + 1}, {x, i}}));
    std::vector<Term> rhs{plain_term(1, 1, {})};
    return Identity(Family::cb, {k, m}, 1, std::move(lhs), std::move(rhs));
}

Identity build_homogeneous(std::int64_t k, std::int64_t m)
{
    require_non_negative(std::array{k, m});
    const RationalFunction x = var(2, 0), y = var(2, 1);
    const RationalFunction ratio = rf_div(x * y, x + y);
    PowerCache cache;
    std::vector<Term> lhs;
    for (std::int64_t i = 0; i <= m; ++i)
        lhs.push_back(binomial_term(2, k + i, k, +1, {{x, m - i + 1}, {ratio, k + i + 1}}, &cache));
    for (std::int64_t i = 0; i <= k; ++i)
        lhs.push_back(binomial_term(2, m + i, m, +1, {{y, k - i + 1}, {ratio, m + i + 1}}, &cache));
    std::vector<Term> rhs{plain_term(2, 1, {{x, m + 1}, {y, k + 1}})};
    return Identity(Family::homogeneous, {k, m}, 2, std::move(lhs), std::move(rhs));
}

Identity build_gkp(std::int64_t k, std::int64_t m)
{
    require_non_negative(std::array{k, m});
    const RationalFunction x = var(2, 0), y = var(2, 1);
    std::vector<Term> lhs;
    for (std::int64_t i = 0; i <= m; ++i)
        lhs.push_back(binomial_term(2, k + i, k, +1, {{x, m - i + 1}}));
    for (std::int64_t i = 0; i <= k; ++i)
        lhs.push_back(binomial_term(2, m + i, m, +1, {{y, k - i + 1}}));
    std::vector<Term> rhs{plain_term(2, 1, {{x, m + 1}, {y, k + 1}})};

    SparsePoly px = SparsePoly::variable(2, 0), py = SparsePoly::variable(2, 1);
    SparsePoly constraint = px * py - px - py;
    Parametrization param{1, rf_div(x, x - RationalFunction::constant(2, 1))};
    return Identity(Family::gkp, {k, m}, 2, std::move(lhs), std::move(rhs), std::move(constraint),
                    std::move(param));
}

Identity build_base_n(std::int64_t n)
{
    if (n < 2)
        throw ParameterError("base_n needs n >= 2");
    if (n > static_cast<std::int64_t>(kMaxArity))
        throw ParameterError("too many variables (at most " + std::to_string(kMaxArity) + ")");
    const auto arity = static_cast<std::size_t>(n);
    const RationalFunction s = sum_of_variables(arity);
    std::vector<Factor> all;
    for (std::size_t j = 0; j < arity; ++j)
        all.push_back({var(arity, j), -1});
    std::vector<Term> lhs{plain_term(arity, 1, all)};
    std::vector<Term> rhs;
    for (std::size_t t = 0; t < arity; ++t) {
        std::vector<Factor> factors;
        for (std::size_t j = 0; j < arity; ++j)
            if (j != t)
                factors.push_back({var(arity, j), -1});
        factors.push_back({s, -1});
        rhs.push_back(plain_term(arity, 1, std::move(factors)));
    }
    return Identity(Family::base_n, {n}, arity, std::move(lhs), std::move(rhs));
}

Identity build_inverse_n(std::span<const std::int64_t> m)
{
    require_order_vector(m);
    const std::size_t n = m.size();
    const RationalFunction s = sum_of_variables(n);
    PowerCache cache;
    std::vector<Factor> lhs_factors;
    for (std::size_t j = 0; j < n; ++j)
        lhs_factors.push_back({var(n, j), -(m[j] + 1)});
    std::vector<Term> lhs{plain_term(n, 1, std::move(lhs_factors))};
    std::vector<Term> rhs;
    for (std::size_t t = 0; t < n; ++t) {
        for_each_index(m, t, [&](const std::vector<std::int64_t>& idx) {
            std::vector<Factor> factors;
            for (std::size_t j = 0; j < n; ++j)
                if (j != t)
                    factors.push_back({var(n, j), -(m[j] - idx[j] + 1)});
            factors.push_back({s, -(others_sum(idx, t) + m[t] + 1)});
            rhs.push_back(multinomial_term(n, idx, std::move(factors), &cache));
        });
    }
    return Identity(Family::inverse_n, to_vector(m), n, std::move(lhs), std::move(rhs));
}

Identity build_n_powers(std::span<const std::int64_t> m)
{
    require_order_vector(m);
    const std::size_t n = m.size();
    const RationalFunction ratio = rf_normalize(elementary_top(n), elementary_skip_one(n));
    PowerCache cache;
    std::vector<Term> lhs = product_expansion(m, ratio, cache);
    std::vector<Term> rhs{monomial_product_term(m)};
    return Identity(Family::n_powers, to_vector(m), n, std::move(lhs), std::move(rhs));
}

Identity build_knuth3(std::int64_t m1, std::int64_t m2, std::int64_t m3)
{
    const std::array<std::int64_t, 3> m{m1, m2, m3};
    require_non_negative(m);
    PowerCache cache;
    std::vector<Term> lhs = product_expansion(m, std::nullopt, cache);
    std::vector<Term> rhs{monomial_product_term(m)};

    SparsePoly x = SparsePoly::variable(3, 0), y = SparsePoly::variable(3, 1), z = SparsePoly::variable(3, 2);
    SparsePoly constraint = x * y * z - x * y - y * z - z * x;
    Parametrization param{2, rf_normalize(x * y, x * y - x - y)};
    return Identity(Family::knuth3, {m1, m2, m3}, 3, std::move(lhs), std::move(rhs), std::move(constraint),
                    std::move(param));
}

Identity build_s2_one(std::int64_t m1, std::int64_t m2, std::int64_t m3)
{
    const std::array<std::int64_t, 3> m{m1, m2, m3};
    require_non_negative(m);
    std::vector<Term> lhs;
    // For each t the other two variables a, b are taken in cyclic order; a
    // carries b's summation index and b carries a's, while x_t carries both.
    for (std::size_t t = 0; t < 3; ++t) {
        const std::size_t a = (t + 1) % 3, b = (t + 2) % 3;
        const RationalFunction pair = var(3, a) * var(3, b);
        for (std::int64_t ia = 0; ia <= m[a]; ++ia) {
            for (std::int64_t ib = 0; ib <= m[b]; ++ib) {
                std::vector<std::int64_t> orders(3);
                orders[t] = m[t];
                orders[a] = ia;
                orders[b] = ib;
                lhs.push_back(multinomial_term(
                    3, std::move(orders),
                    {{pair, m[t] + 1}, {var(3, a), ib}, {var(3, b), ia}, {var(3, t), ia + ib}}));
            }
        }
    }
    std::vector<Term> rhs{plain_term(3, 1, {})};

    SparsePoly x = SparsePoly::variable(3, 0), y = SparsePoly::variable(3, 1), z = SparsePoly::variable(3, 2);
    SparsePoly one = SparsePoly::constant(3, 1);
    SparsePoly constraint = x * y + y * z + z * x - one;
    Parametrization param{2, rf_normalize(one - x * y, x + y)};
    return Identity(Family::s2_one, {m1, m2, m3}, 3, std::move(lhs), std::move(rhs), std::move(constraint),
                    std::move(param));
}

Identity build_transformed(std::span<const std::int64_t> m)
{
    require_order_vector(m);
    const std::size_t n = m.size();
    const RationalFunction total = sum_of_variables(n);
    const std::int64_t order_sum = std::accumulate(m.begin(), m.end(), std::int64_t{0});
    PowerCache cache;
    std::vector<Term> lhs;
    for (std::size_t t = 0; t < n; ++t) {
        for_each_index(m, t, [&](const std::vector<std::int64_t>& idx) {
            std::vector<Factor> factors{{var(n, t), m[t] + 1}};
            std::int64_t remaining = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == t)
                    continue;
                if (idx[j] > 0)
                    factors.push_back({var(n, j), idx[j]});
                remaining += m[j] - idx[j];
            }
            if (remaining > 0)
                factors.push_back({total, remaining});
            lhs.push_back(multinomial_term(n, idx, std::move(factors), &cache));
        });
    }
    std::vector<Term> rhs{plain_term(n, 1, {{total, order_sum + 1}}, &cache)};
    return Identity(Family::transformed, to_vector(m), n, std::move(lhs), std::move(rhs));
}

Identity build_three_param(std::int64_t m, std::int64_t r, std::int64_t k, std::int64_t l)
{
    require_non_negative(std::array{m, r, k, l});
    if (m - r + k - l != 0)
        throw ParameterError("parameter constraint violated");
    const RationalFunction x = var(1, 0), y = one_minus_x();
    std::vector<Term> lhs;
    for (std::int64_t i = 0; i <= k; ++i)
        if (m + i >= r)
            push_nonzero(lhs, binomial_term(1, m + i, r, +1, {{y, r + 1}, {x, i + m - r}}));
    for (std::int64_t i = 0; i <= m; ++i)
        if (k + i >= l)
            push_nonzero(lhs, binomial_term(1, k + i, l, +1, {{x, l + 1}, {y, i + k - l}}));

    std::vector<Term> rhs{plain_term(1, 1, {})};
    if (m - r > 0) {
        for (std::int64_t i = 0; i <= m - r - 1; ++i)
            rhs.push_back(binomial_term(1, m, i, -1, {{x, i}, {y, m - i}}));
    } else if (k - l > 0) {
        for (std::int64_t i = 0; i <= k - l - 1; ++i)
            rhs.push_back(binomial_term(1, k, i, -1, {{y, i}, {x, k - i}}));
    }
    return Identity(Family::three_param, {m, r, k, l}, 1, std::move(lhs), std::move(rhs));
}

Identity build_ks27(std::int64_t m, std::int64_t r)
{
    require_non_negative(std::array{m, r});
    if (m <= r)
        throw ParameterError("empty identity");
    const RationalFunction x = var(1, 0), y = one_minus_x();
    std::vector<Term> lhs, rhs;
    for (std::int64_t j = 0; j <= m - r - 1; ++j)
        lhs.push_back(binomial_term(1, j + r, r, +1, {{x, j}}));
    for (std::int64_t i = 0; i <= m - r - 1; ++i)
        rhs.push_back(binomial_term(1, m, i, +1, {{x, i}, {y, m - r - i - 1}}));
    return Identity(Family::ks27, {m, r}, 1, std::move(lhs), std::move(rhs));
}

Identity build_identity(Family family, std::span<const std::int64_t> p)
{
    auto expect = [&](std::size_t count) {
        if (p.size() != count)
            throw ParameterError(std::string(family_name(family)) + " takes " + std::to_string(count) +
                                 " parameters, got " + std::to_string(p.size()));
    };
    switch (family) {
    case Family::cb: expect(2); return build_cb(p[0], p[1]);
    case Family::homogeneous: expect(2); return build_homogeneous(p[0], p[1]);
    case Family::gkp: expect(2); return build_gkp(p[0], p[1]);
    case Family::base_n: expect(1); return build_base_n(p[0]);
    case Family::inverse_n: return build_inverse_n(p);
    case Family::n_powers: return build_n_powers(p);
    case Family::knuth3: expect(3); return build_knuth3(p[0], p[1], p[2]);
    case Family::s2_one: expect(3); return build_s2_one(p[0], p[1], p[2]);
    case Family::transformed: return build_transformed(p);
    case Family::three_param: expect(4); return build_three_param(p[0], p[1], p[2], p[3]);
    case Family::ks27: expect(2); return build_ks27(p[0], p[1]);
    }
    throw std::logic_error("build_identity: unknown family");
}

} // namespace cbid
