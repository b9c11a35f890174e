#include "cbid/rational_function.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cbid/poly_gcd.hpp"

namespace cbid {

namespace {

void check_arity(const RationalFunction& a, const RationalFunction& b, const char* op)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument(std::string(op) + ": arity mismatch");
}

SparsePoly divide_or_throw(const SparsePoly& a, const SparsePoly& b)
{
    auto q = poly_divide_exact(a, b);
    if (!q)
        throw std::logic_error("rational_function: expected exact division failed");
    return std::move(*q);
}

// Coefficients of p as a polynomial in `var`: degree -> coefficient free of var.
std::map<std::uint32_t, SparsePoly> split_by_degree(const SparsePoly& p, std::size_t var)
{
    std::map<std::uint32_t, std::vector<SparsePoly::Term>> buckets;
    for (const auto& [e, c] : p.terms()) {
        ExponentVector z = e;
        z.set(var, 0);
        buckets[e[var]].emplace_back(z, c);
    }
    std::map<std::uint32_t, SparsePoly> out;
    for (auto& [d, terms] : buckets)
        out.emplace(d, SparsePoly::from_terms(p.arity(), std::move(terms)));
    return out;
}

int compare_polys(const SparsePoly& a, const SparsePoly& b)
{
    auto ta = a.terms(), tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = ta[i].first <=> tb[i].first; c != 0)
            return c < 0 ? -1 : 1;
        if (auto c = ta[i].second <=> tb[i].second; c != 0)
            return c < 0 ? -1 : 1;
    }
    if (ta.size() != tb.size())
        return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

struct PolyHash {
    std::size_t operator()(const SparsePoly& p) const
    {
        std::size_t h = p.size();
        for (const auto& [e, c] : p.terms()) {
            h ^= e.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= mpz_get_ui(c.raw().get_num_mpz_t()) + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

RationalFunction::RationalFunction(std::size_t arity)
    : num_(arity), den_(SparsePoly::constant(arity, BigRational(1)))
{
}

RationalFunction::RationalFunction(const SparsePoly& poly)
    : RationalFunction(rf_from_coprime(poly, SparsePoly::constant(poly.arity(), BigRational(1))))
{
}

RationalFunction RationalFunction::constant(std::size_t arity, const BigRational& c)
{
    return RationalFunction(SparsePoly::constant(arity, c));
}

RationalFunction RationalFunction::variable(std::size_t arity, std::size_t index)
{
    return RationalFunction(SparsePoly::variable(arity, index));
}

RationalFunction rf_from_coprime(SparsePoly num, SparsePoly den)
{
    if (num.arity() != den.arity())
        throw std::invalid_argument("rf_normalize: arity mismatch");
    if (den.is_zero())
        throw std::domain_error("rf_normalize: zero denominator");
    if (num.is_zero())
        return RationalFunction(num.arity());

    // Scale both by L/G so coefficients are integers with joint content 1.
    mpz_class l = 1, g = 0;
    for (const SparsePoly* p : {&num, &den})
        for (const auto& t : p->terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.raw().get_den_mpz_t());
    for (const SparsePoly* p : {&num, &den})
        for (const auto& t : p->terms()) {
            mpz_class v = t.second.raw().get_num() * (l / t.second.raw().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    BigRational factor(l, g);
    if (den.leading_term().second.sign() < 0)
        factor = -factor;
    if (!factor.is_one()) {
        num = poly_scale(num, factor);
        den = poly_scale(den, factor);
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction rf_normalize(SparsePoly num, SparsePoly den)
{
    if (num.arity() != den.arity())
        throw std::invalid_argument("rf_normalize: arity mismatch");
    if (den.is_zero())
        throw std::domain_error("rf_normalize: zero denominator");
    if (num.is_zero() || den.is_constant())
        return rf_from_coprime(std::move(num), std::move(den));
    SparsePoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = divide_or_throw(num, g);
        den = divide_or_throw(den, g);
    }
    return rf_from_coprime(std::move(num), std::move(den));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b)
{
    check_arity(a, b, "rf_add");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.denominator() == b.denominator())
        return rf_normalize(a.numerator() + b.numerator(), a.denominator());

    // gcd(t, b*d/g) = gcd(t, g) for reduced inputs, so only g needs testing.
    SparsePoly g = poly_gcd(a.denominator(), b.denominator());
    SparsePoly ad = divide_or_throw(a.denominator(), g);
    SparsePoly bd = divide_or_throw(b.denominator(), g);
    SparsePoly num = a.numerator() * bd + b.numerator() * ad;
    SparsePoly den = a.denominator() * bd;
    if (!g.is_constant() && !num.is_zero()) {
        SparsePoly g2 = poly_gcd(num, g);
        if (!g2.is_constant()) {
            num = divide_or_throw(num, g2);
            den = divide_or_throw(den, g2);
        }
    }
    return rf_from_coprime(std::move(num), std::move(den));
}

RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) { return rf_add(a, rf_neg(b)); }

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b)
{
    check_arity(a, b, "rf_mul");
    if (a.is_zero() || b.is_zero())
        return RationalFunction(a.arity());
    SparsePoly an = a.numerator(), ad = a.denominator();
    SparsePoly bn = b.numerator(), bd = b.denominator();
    if (!an.is_constant() && !bd.is_constant()) {
        SparsePoly g = poly_gcd(an, bd);
        if (!g.is_constant()) {
            an = divide_or_throw(an, g);
            bd = divide_or_throw(bd, g);
        }
    }
    if (!bn.is_constant() && !ad.is_constant()) {
        SparsePoly g = poly_gcd(bn, ad);
        if (!g.is_constant()) {
            bn = divide_or_throw(bn, g);
            ad = divide_or_throw(ad, g);
        }
    }
    return rf_from_coprime(an * bn, ad * bd);
}

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b)
{
    return rf_mul(a, rf_pow(b, -1));
}

RationalFunction rf_neg(const RationalFunction& a)
{
    if (a.is_zero())
        return a;
    return rf_from_coprime(poly_neg(a.numerator()), a.denominator());
}

RationalFunction rf_scale(const RationalFunction& a, const BigRational& c)
{
    if (c.is_zero() || a.is_zero())
        return RationalFunction(a.arity());
    return rf_from_coprime(poly_scale(a.numerator(), c), a.denominator());
}

RationalFunction rf_pow(const RationalFunction& a, std::int64_t e)
{
    if (e < 0) {
        if (a.is_zero())
            throw std::domain_error("rf_pow: zero raised to a negative power");
        return rf_pow(rf_from_coprime(a.denominator(), a.numerator()), -e);
    }
    if (e > kMaxExponent)
        throw std::overflow_error("rf_pow: exponent too large");
    const auto k = static_cast<std::uint32_t>(e);
    return rf_from_coprime(poly_pow(a.numerator(), k), poly_pow(a.denominator(), k));
}

RationalFunction rf_partial_derivative(const RationalFunction& f, std::size_t var)
{
    if (var >= f.arity())
        throw std::out_of_range("rf_partial_derivative: variable index " + std::to_string(var) +
                                " out of range for arity " + std::to_string(f.arity()));
    const SparsePoly& a = f.numerator();
    const SparsePoly& b = f.denominator();
    SparsePoly da = poly_partial_derivative(a, var);
    SparsePoly db = poly_partial_derivative(b, var);
    if (db.is_zero())
        return rf_normalize(std::move(da), b);

    // (a'b - ab')/b^2 with g = gcd(b, b') cancelled up front.
    SparsePoly g = poly_gcd(b, db);
    SparsePoly b_over_g = divide_or_throw(b, g);
    SparsePoly db_over_g = divide_or_throw(db, g);
    SparsePoly num = da * b_over_g - a * db_over_g;
    SparsePoly den = b * b_over_g;
    return rf_normalize(std::move(num), std::move(den));
}

RationalFunction rf_substitute(const RationalFunction& f, std::size_t var, const RationalFunction& g)
{
    check_arity(f, g, "rf_substitute");
    if (var >= f.arity())
        throw std::out_of_range("rf_substitute: variable index out of range");
    const std::uint32_t dn = f.numerator().degree(var);
    const std::uint32_t dd = f.denominator().degree(var);
    if (dn == 0 && dd == 0)
        return f;
    const std::uint32_t top = std::max(dn, dd);

    // p(g_num/g_den) * g_den^top, a polynomial.
    std::vector<SparsePoly> num_pow{SparsePoly::constant(f.arity(), BigRational(1))};
    std::vector<SparsePoly> den_pow{SparsePoly::constant(f.arity(), BigRational(1))};
    for (std::uint32_t k = 1; k <= top; ++k) {
        num_pow.push_back(num_pow.back() * g.numerator());
        den_pow.push_back(den_pow.back() * g.denominator());
    }
    auto cleared = [&](const SparsePoly& p) {
        SparsePoly out(p.arity());
        for (const auto& [d, coeff] : split_by_degree(p, var))
            out = out + coeff * num_pow[d] * den_pow[top - d];
        return out;
    };
    SparsePoly num = cleared(f.numerator());
    SparsePoly den = cleared(f.denominator());
    if (den.is_zero())
        throw std::domain_error("substitution hits pole identically");
    return rf_normalize(std::move(num), std::move(den));
}

RationalFunction rf_invert_variables(const RationalFunction& f)
{
    const std::size_t n = f.arity();
    auto reflect = [n](const SparsePoly& p, ExponentVector& degrees) {
        degrees = ExponentVector(n);
        for (std::size_t v = 0; v < n; ++v)
            degrees.set(v, p.degree(v));
        std::vector<SparsePoly::Term> out;
        out.reserve(p.size());
        for (const auto& [e, c] : p.terms())
            out.emplace_back(degrees - e, c);
        return SparsePoly::from_terms(n, std::move(out));
    };
    ExponentVector num_deg, den_deg;
    SparsePoly num = reflect(f.numerator(), num_deg);
    SparsePoly den = reflect(f.denominator(), den_deg);
    if (den.is_zero())
        throw std::domain_error("rf_invert_variables: denominator vanishes identically");

    // f(1/x) = num * x^den_deg / (den * x^num_deg).
    ExponentVector num_shift(n), den_shift(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (den_deg[v] > num_deg[v])
            num_shift.set(v, den_deg[v] - num_deg[v]);
        else
            den_shift.set(v, num_deg[v] - den_deg[v]);
    }
    return rf_normalize(poly_shift(num, num_shift), poly_shift(den, den_shift));
}

UnreducedSum rf_sum_unreduced(std::span<const RationalFunction> terms, std::size_t arity)
{
    UnreducedSum out{SparsePoly(arity), SparsePoly::constant(arity, BigRational(1))};
    if (terms.empty())
        return out;

    // Each denominator = scalar * monomial * primitive part.
    struct Split {
        BigRational scalar; // multiplies the numerator
        ExponentVector mono;
        std::size_t group;
    };
    std::vector<Split> splits;
    splits.reserve(terms.size());
    std::vector<SparsePoly> groups;
    std::unordered_map<SparsePoly, std::size_t, PolyHash> group_index;
    ExponentVector mono_lcm(arity);

    for (const auto& t : terms) {
        if (t.arity() != arity)
            throw std::invalid_argument("rf_sum: term arity mismatch");
        const SparsePoly& den = t.denominator();
        ExponentVector mono = poly_monomial_content(den);
        SparsePoly prim = *poly_divide_exact(den, SparsePoly::monomial(mono, BigRational(1)));
        BigRational factor = make_primitive(prim); // prim = factor * (den / x^mono)
        auto [it, inserted] = group_index.try_emplace(prim, groups.size());
        if (inserted)
            groups.push_back(prim);
        splits.push_back({factor, mono, it->second});
        mono_lcm = max(mono_lcm, mono);
    }

    // Least common multiple of the primitive parts, largest first.
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return groups[x].total_degree() > groups[y].total_degree();
    });
    SparsePoly lcm = groups[order.front()];
    std::vector<std::optional<SparsePoly>> cofactor(groups.size());
    std::vector<int> generation(groups.size(), -1);
    int current = 0;
    cofactor[order.front()] = SparsePoly::constant(arity, BigRational(1));
    generation[order.front()] = current;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const SparsePoly& p = groups[order[k]];
        if (auto q = poly_divide_exact(lcm, p)) {
            cofactor[order[k]] = std::move(*q);
            generation[order[k]] = current;
            continue;
        }
        SparsePoly g = poly_gcd(lcm, p);
        lcm = lcm * *poly_divide_exact(p, g);
        ++current;
    }

    std::vector<SparsePoly> grouped(groups.size(), SparsePoly(arity));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& s = splits[i];
        SparsePoly contribution = poly_shift(poly_scale(terms[i].numerator(), s.scalar), mono_lcm - s.mono);
        grouped[s.group] = grouped[s.group] + contribution;
    }
    SparsePoly numerator(arity);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (grouped[gi].is_zero())
            continue;
        if (generation[gi] != current)
            cofactor[gi] = *poly_divide_exact(lcm, groups[gi]);
        numerator = numerator + grouped[gi] * *cofactor[gi];
    }
    out.numerator = std::move(numerator);
    out.denominator = poly_shift(lcm, mono_lcm);
    return out;
}

RationalFunction rf_sum(std::span<const RationalFunction> terms, std::size_t arity)
{
    UnreducedSum s = rf_sum_unreduced(terms, arity);
    return rf_normalize(std::move(s.numerator), std::move(s.denominator));
}

std::optional<BigRational> rf_eval(const RationalFunction& f, std::span<const BigRational> point)
{
    BigRational den = poly_eval(f.denominator(), point);
    if (den.is_zero())
        return std::nullopt;
    return poly_eval(f.numerator(), point) / den;
}

RationalFunction rf_remap(const RationalFunction& f, std::size_t arity, std::span<const std::size_t> map)
{
    return rf_normalize(poly_remap(f.numerator(), arity, map), poly_remap(f.denominator(), arity, map));
}

bool rf_less(const RationalFunction& a, const RationalFunction& b)
{
    if (a.arity() != b.arity())
        return a.arity() < b.arity();
    int c = compare_polys(a.numerator(), b.numerator());
    if (c != 0)
        return c < 0;
    return compare_polys(a.denominator(), b.denominator()) < 0;
}

bool same_term_multiset(std::vector<RationalFunction> a, std::vector<RationalFunction> b)
{
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end(), rf_less);
    std::sort(b.begin(), b.end(), rf_less);
    return a == b;
}

} // namespace cbid
