#include "cbid/poly_gcd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace cbid {

namespace {

// Integer polynomial in the same sparse layout as SparsePoly.
struct IntPoly {
    std::size_t arity = 1;
    std::vector<std::pair<ExponentVector, mpz_class>> terms; // ascending lex

    bool is_zero() const { return terms.empty(); }
    const mpz_class& lc() const { return terms.back().second; }

    std::uint32_t degree(std::size_t v) const
    {
        std::uint32_t d = 0;
        for (const auto& t : terms)
            d = std::max(d, t.first[v]);
        return d;
    }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first.is_zero()); }
};

void canonicalize(IntPoly& p)
{
    auto& t = p.terms;
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        mpz_class sum = t[i].second;
        while (j < t.size() && t[j].first == t[i].first)
            sum += t[j++].second;
        if (sum != 0) {
            t[out].first = t[i].first;
            t[out].second = sum;
            ++out;
        }
        i = j;
    }
    t.resize(out);
}

mpz_class content(const IntPoly& p)
{
    mpz_class g = 0;
    for (const auto& t : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void divide_ground(IntPoly& p, const mpz_class& c)
{
    for (auto& t : p.terms)
        mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
}

void make_lc_positive(IntPoly& p)
{
    if (!p.is_zero() && sgn(p.lc()) < 0)
        for (auto& t : p.terms)
            t.second = -t.second;
}

IntPoly primitive(IntPoly p)
{
    mpz_class c = content(p);
    if (c != 0 && c != 1)
        divide_ground(p, c);
    make_lc_positive(p);
    return p;
}

IntPoly constant_poly(std::size_t arity, const mpz_class& c)
{
    IntPoly p{arity, {}};
    if (c != 0)
        p.terms.emplace_back(ExponentVector(arity), c);
    return p;
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    IntPoly r{a.arity, {}};
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            r.terms.emplace_back(ea + eb, ca * cb);
    canonicalize(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b)
{
    IntPoly r = a;
    for (const auto& [e, c] : b.terms)
        r.terms.emplace_back(e, -c);
    canonicalize(r);
    return r;
}

IntPoly shift(IntPoly p, const ExponentVector& s)
{
    for (auto& t : p.terms)
        t.first = t.first + s;
    return p;
}

ExponentVector monomial_content(const IntPoly& p)
{
    ExponentVector m = p.terms.front().first;
    for (const auto& t : p.terms)
        m = min(m, t.first);
    return m;
}

IntPoly unshift(IntPoly p, const ExponentVector& s)
{
    for (auto& t : p.terms)
        t.first = t.first - s;
    return p;
}

// Exact quotient over Z, or nullopt.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero())
        return IntPoly{a.arity, {}};
    const auto& [be, bc] = b.terms.back();
    if (!be.divides(a.terms.back().first) || !b.terms.front().first.divides(a.terms.front().first))
        return std::nullopt;
    for (std::size_t v = 0; v < a.arity; ++v)
        if (a.degree(v) < b.degree(v))
            return std::nullopt;

    std::map<ExponentVector, mpz_class> rem;
    for (const auto& t : a.terms)
        rem.emplace_hint(rem.end(), t.first, t.second);
    IntPoly q{a.arity, {}};
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!be.divides(top->first) || !mpz_divisible_p(top->second.get_mpz_t(), bc.get_mpz_t()))
            return std::nullopt;
        ExponentVector qe = top->first - be;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), bc.get_mpz_t());
        for (const auto& [e, c] : b.terms) {
            auto [it, inserted] = rem.try_emplace(e + qe);
            it->second -= qc * c;
            if (it->second == 0)
                rem.erase(it);
        }
        q.terms.emplace_back(std::move(qe), std::move(qc));
    }
    std::reverse(q.terms.begin(), q.terms.end());
    return q;
}

IntPoly to_int(const SparsePoly& p)
{
    mpz_class l = 1;
    for (const auto& t : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.raw().get_den_mpz_t());
    IntPoly r{p.arity(), {}};
    r.terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        mpz_class v = c.raw().get_num() * (l / c.raw().get_den());
        r.terms.emplace_back(e, std::move(v));
    }
    return primitive(std::move(r));
}

SparsePoly to_sparse(const IntPoly& p)
{
    std::vector<SparsePoly::Term> out;
    out.reserve(p.terms.size());
    for (const auto& [e, c] : p.terms)
        out.emplace_back(e, BigRational(c));
    return SparsePoly::from_canonical_terms(p.arity, std::move(out));
}

// ---------------------------------------------------------------- heuristic

constexpr int kHeuristicAttempts = 6;

struct GcdTriple {
    IntPoly h, cff, cfg;
};

mpz_class max_norm(const IntPoly& p)
{
    mpz_class m = 0;
    for (const auto& t : p.terms)
        if (mpz_cmpabs(t.second.get_mpz_t(), m.get_mpz_t()) > 0)
            m = abs(t.second);
    return m;
}

IntPoly eval_at(const IntPoly& p, std::size_t v, const mpz_class& x)
{
    IntPoly r{p.arity, {}};
    r.terms.reserve(p.terms.size());
    std::vector<mpz_class> powers{1};
    for (const auto& [e, c] : p.terms) {
        while (powers.size() <= e[v])
            powers.push_back(powers.back() * x);
        ExponentVector k = e;
        k.set(v, 0);
        r.terms.emplace_back(k, c * powers[e[v]]);
    }
    canonicalize(r);
    return r;
}

// Rebuilds a polynomial in variable v from its image at v = x, reading
// coefficients as balanced base-x digits.
IntPoly interpolate(IntPoly h, std::size_t v, const mpz_class& x)
{
    IntPoly out{h.arity, {}};
    mpz_class half = x / 2;
    std::uint32_t power = 0;
    while (!h.is_zero()) {
        IntPoly rest{h.arity, {}};
        for (auto& [e, c] : h.terms) {
            mpz_class digit;
            mpz_fdiv_r(digit.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
            if (digit > half)
                digit -= x;
            if (digit != 0) {
                ExponentVector k = e;
                k.set(v, power);
                out.terms.emplace_back(k, digit);
            }
            mpz_class q = c - digit;
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
            if (q != 0)
                rest.terms.emplace_back(e, std::move(q));
        }
        h = std::move(rest);
        ++power;
    }
    canonicalize(out);
    make_lc_positive(out);
    return out;
}

std::optional<GcdTriple> heuristic(const IntPoly& f0, const IntPoly& g0, std::size_t var)
{
    const std::size_t n = f0.arity;
    while (var < n && f0.degree(var) == 0 && g0.degree(var) == 0)
        ++var;
    if (var == n) {
        mpz_class a = f0.is_zero() ? mpz_class(0) : f0.terms[0].second;
        mpz_class b = g0.is_zero() ? mpz_class(0) : g0.terms[0].second;
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return GcdTriple{constant_poly(n, h), constant_poly(n, a / h), constant_poly(n, b / h)};
    }

    mpz_class common;
    mpz_class cf = content(f0), cg = content(g0);
    mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    IntPoly f = f0, g = g0;
    divide_ground(f, common);
    divide_ground(g, common);

    auto scale = [&](IntPoly p) {
        for (auto& t : p.terms)
            t.second *= common;
        return p;
    };

    mpz_class f_norm = max_norm(f), g_norm = max_norm(g);
    mpz_class bound = 2 * std::min(f_norm, g_norm) + 29;
    mpz_class root = sqrt(bound);
    mpz_class x = std::min(bound, mpz_class(99 * root));
    mpz_class alt = 2 * std::min(mpz_class(f_norm / abs(f.lc())), mpz_class(g_norm / abs(g.lc()))) + 2;
    x = std::max(x, alt);

    for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
        IntPoly ff = eval_at(f, var, x);
        IntPoly gg = eval_at(g, var, x);
        if (!ff.is_zero() && !gg.is_zero()) {
            auto sub_result = heuristic(ff, gg, var + 1);
            if (!sub_result)
                return std::nullopt;

            IntPoly h = primitive(interpolate(sub_result->h, var, x));
            if (auto cff = divide_exact(f, h))
                if (auto cfg = divide_exact(g, h))
                    return GcdTriple{scale(std::move(h)), std::move(*cff), std::move(*cfg)};

            IntPoly cff = interpolate(sub_result->cff, var, x);
            if (!cff.is_zero())
                if (auto h2 = divide_exact(f, cff))
                    if (auto cfg = divide_exact(g, *h2))
                        return GcdTriple{scale(std::move(*h2)), std::move(cff), std::move(*cfg)};

            IntPoly cfg = interpolate(sub_result->cfg, var, x);
            if (!cfg.is_zero())
                if (auto h3 = divide_exact(g, cfg))
                    if (auto cff2 = divide_exact(f, *h3))
                        return GcdTriple{scale(std::move(*h3)), std::move(*cff2), std::move(cfg)};
        }
        mpz_class r = sqrt(sqrt(x));
        x = 73794 * x * r / 27011;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------- PRS

IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);

// Coefficient of v^k in p, as a polynomial free of v.
IntPoly coefficient_in(const IntPoly& p, std::size_t v, std::uint32_t k)
{
    IntPoly r{p.arity, {}};
    for (const auto& [e, c] : p.terms)
        if (e[v] == k) {
            ExponentVector z = e;
            z.set(v, 0);
            r.terms.emplace_back(z, c);
        }
    canonicalize(r);
    return r;
}

IntPoly content_in(const IntPoly& p, std::size_t v)
{
    std::map<std::uint32_t, bool> seen;
    for (const auto& t : p.terms)
        seen[t.first[v]] = true;
    IntPoly g{p.arity, {}};
    for (const auto& [k, unused] : seen) {
        g = gcd_prs(g, coefficient_in(p, v, k));
        if (g.is_constant() && !g.is_zero())
            break;
    }
    return g;
}

IntPoly pseudo_remainder(IntPoly r, const IntPoly& b, std::size_t v)
{
    const std::uint32_t db = b.degree(v);
    const IntPoly lb = coefficient_in(b, v, db);
    while (!r.is_zero() && r.degree(v) >= db) {
        const std::uint32_t dr = r.degree(v);
        IntPoly lr = coefficient_in(r, v, dr);
        ExponentVector s(r.arity);
        s.set(v, dr - db);
        r = sub(mul(lb, r), mul(shift(lr, s), b));
    }
    return r;
}

IntPoly gcd_prs(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero())
        return primitive(b);
    if (b.is_zero())
        return primitive(a);

    std::size_t v = 0;
    while (v < a.arity && a.degree(v) == 0 && b.degree(v) == 0)
        ++v;
    if (v == a.arity) {
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), a.terms[0].second.get_mpz_t(), b.terms[0].second.get_mpz_t());
        return constant_poly(a.arity, h);
    }

    IntPoly ca = content_in(a, v), cb = content_in(b, v);
    IntPoly c = gcd_prs(ca, cb);
    IntPoly pa = *divide_exact(a, ca);
    IntPoly pb = *divide_exact(b, cb);
    if (pa.degree(v) < pb.degree(v))
        std::swap(pa, pb);
    while (!pb.is_zero()) {
        IntPoly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = IntPoly{a.arity, {}};
        } else {
            pb = *divide_exact(r, content_in(r, v));
        }
    }
    pa = primitive(pa);
    IntPoly result = mul(c, pa);
    make_lc_positive(result);
    return result;
}

// ------------------------------------------------------------- entry point

bool supports_disjoint(const IntPoly& a, const IntPoly& b)
{
    for (std::size_t v = 0; v < a.arity; ++v)
        if (a.degree(v) > 0 && b.degree(v) > 0)
            return false;
    return true;
}

bool degree_dominated(const IntPoly& small, const IntPoly& big)
{
    for (std::size_t v = 0; v < small.arity; ++v)
        if (small.degree(v) > big.degree(v))
            return false;
    return true;
}

IntPoly gcd_primitive_parts(const IntPoly& a, const IntPoly& b)
{
    const std::size_t n = a.arity;
    if (a.is_constant() || b.is_constant() || supports_disjoint(a, b))
        return constant_poly(n, 1);
    if (a.terms == b.terms)
        return a;
    if (degree_dominated(a, b) && divide_exact(b, a))
        return a;
    if (degree_dominated(b, a) && divide_exact(a, b))
        return b;
    if (auto r = heuristic(a, b, 0)) {
        IntPoly h = primitive(std::move(r->h));
        return h;
    }
    return gcd_prs(a, b);
}

} // namespace

BigRational make_primitive(SparsePoly& p)
{
    if (p.is_zero())
        return BigRational(1);
    mpz_class l = 1, g = 0;
    for (const auto& t : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.raw().get_den_mpz_t());
    for (const auto& t : p.terms()) {
        mpz_class v = t.second.raw().get_num() * (l / t.second.raw().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    BigRational factor(l, g);
    if (p.leading_term().second.sign() < 0)
        factor = -factor;
    if (!factor.is_one())
        p = poly_scale(p, factor);
    return factor;
}

SparsePoly poly_gcd(const SparsePoly& a, const SparsePoly& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("poly_gcd: arity mismatch");
    if (a.is_zero() && b.is_zero())
        return SparsePoly(a.arity());
    if (a.is_zero() || b.is_zero()) {
        SparsePoly r = a.is_zero() ? b : a;
        make_primitive(r);
        return r;
    }
    IntPoly ia = to_int(a), ib = to_int(b);
    ExponentVector ma = monomial_content(ia), mb = monomial_content(ib);
    ExponentVector mono = min(ma, mb);
    IntPoly h = gcd_primitive_parts(unshift(std::move(ia), ma), unshift(std::move(ib), mb));
    return to_sparse(shift(std::move(h), mono));
}

namespace detail {

std::optional<SparsePoly> poly_gcd_heuristic(const SparsePoly& a, const SparsePoly& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("poly_gcd_heuristic: arity mismatch");
    if (a.is_zero() || b.is_zero())
        return poly_gcd(a, b);
    auto r = heuristic(to_int(a), to_int(b), 0);
    if (!r)
        return std::nullopt;
    return to_sparse(primitive(std::move(r->h)));
}

SparsePoly poly_gcd_prs(const SparsePoly& a, const SparsePoly& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("poly_gcd_prs: arity mismatch");
    return to_sparse(gcd_prs(to_int(a), to_int(b)));
}

} // namespace detail

} // namespace cbid
