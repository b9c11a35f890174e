#include "cbid/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cbid {

namespace {

using PolyTerm = SparsePoly::Term;

std::vector<const PolyTerm*> ordered_terms(const SparsePoly& p, PolyOrder order)
{
    std::vector<const PolyTerm*> out;
    for (const auto& t : p.terms())
        out.push_back(&t);
    std::reverse(out.begin(), out.end());
    if (order == PolyOrder::degree_ascending)
        std::stable_sort(out.begin(), out.end(), [](const PolyTerm* a, const PolyTerm* b) {
            return a->first.total_degree() < b->first.total_degree();
        });
    return out;
}

// |c| * monomial; the sign is written by the caller.
std::string format_monomial(const ExponentVector& e, const BigRational& magnitude, std::span<const std::string> names)
{
    std::string out;
    const bool constant = e.is_zero();
    if (constant || !magnitude.is_one())
        out = magnitude.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += names[i];
        if (e[i] > 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string latex_name(const std::string& name)
{
    std::size_t split = name.find_first_of("0123456789");
    if (split == std::string::npos)
        return name;
    return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_number(const BigRational& magnitude)
{
    if (magnitude.is_integer())
        return magnitude.numerator().get_str();
    return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

std::string latex_monomial(const ExponentVector& e, const BigRational& magnitude, std::span<const std::string> names)
{
    std::string out;
    if (e.is_zero() || !magnitude.is_one())
        out = latex_number(magnitude);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += latex_name(names[i]);
        if (e[i] > 1)
            out += "^{" + std::to_string(e[i]) + "}";
    }
    return out;
}

template <class MonomialFn>
std::string join_poly(const SparsePoly& p, PolyOrder order, MonomialFn&& monomial)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const PolyTerm* t : ordered_terms(p, order)) {
        const bool negative = t->second.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += monomial(t->first, t->second.abs());
        first = false;
    }
    return out;
}

std::string latex_poly(const SparsePoly& p, std::span<const std::string> names)
{
    return join_poly(p, PolyOrder::degree_ascending,
                     [&](const ExponentVector& e, const BigRational& c) { return latex_monomial(e, c, names); });
}

bool is_bare_monomial(const RationalFunction& f)
{
    return f.is_polynomial() && f.numerator().is_monomial() && f.denominator().leading_term().second.is_one();
}

std::string latex_rf(const RationalFunction& f, std::span<const std::string> names)
{
    if (f.denominator().is_constant() && f.denominator().leading_term().second.is_one())
        return latex_poly(f.numerator(), names);
    return "\\frac{" + latex_poly(f.numerator(), names) + "}{" + latex_poly(f.denominator(), names) + "}";
}

std::string latex_power(const RationalFunction& base, std::int64_t e, std::span<const std::string> names)
{
    const bool single_variable = is_bare_monomial(base) && base.numerator().leading_term().first.total_degree() == 1 &&
                                 base.numerator().leading_term().second.is_one();
    std::string b = latex_rf(base, names);
    if (!single_variable && e != 1)
        b = "\\left(" + b + "\\right)";
    else if (!single_variable && !is_bare_monomial(base))
        b = "\\left(" + b + "\\right)";
    if (e != 1)
        b += "^{" + std::to_string(e) + "}";
    return b;
}

std::string latex_coefficient(const Term& t)
{
    const auto& form = t.form();
    if (form.kind == CoefficientForm::Kind::binomial)
        return "\\binom{" + std::to_string(form.args[0]) + "}{" + std::to_string(form.args[1]) + "}";
    if (form.kind == CoefficientForm::Kind::multinomial) {
        if (t.coefficient().abs().is_one())
            return "";
        std::int64_t total = 0;
        for (auto a : form.args)
            total += a;
        if (form.args.size() == 2)
            return "\\binom{" + std::to_string(total) + "}{" + std::to_string(form.args[0]) + "}";
        total = 0;
        std::string den;
        for (auto a : form.args) {
            total += a;
            den += (den.empty() ? "" : "\\,") + std::to_string(a) + "!";
        }
        return "\\frac{" + std::to_string(total) + "!}{" + den + "}";
    }
    return t.coefficient().abs().is_one() ? "" : latex_number(t.coefficient().abs());
}

// The magnitude of the term; whether it is negative is reported through `negative`.
std::string latex_term(const Term& t, std::span<const std::string> names, bool& negative)
{
    negative = t.coefficient().sign() < 0;
    std::vector<std::string> up, down;
    for (const auto& f : t.factors()) {
        if (f.exponent > 0)
            up.push_back(latex_power(f.base, f.exponent, names));
        else if (f.exponent < 0)
            down.push_back(latex_power(f.base, -f.exponent, names));
    }
    auto product = [](const std::vector<std::string>& parts) {
        std::string s;
        for (const auto& p : parts)
            s += (s.empty() ? "" : " ") + p;
        return s;
    };
    std::string coefficient = latex_coefficient(t);
    std::string body;
    if (!down.empty())
        body = "\\frac{" + (up.empty() ? std::string("1") : product(up)) + "}{" + product(down) + "}";
    else
        body = product(up);
    if (coefficient.empty())
        return body.empty() ? "1" : body;
    return body.empty() ? coefficient : coefficient + " " + body;
}

std::string latex_side(const std::vector<Term>& side, std::span<const std::string> names)
{
    if (side.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
        bool negative = false;
        std::string t = latex_term(side[i], names, negative);
        if (i == 0)
            out += negative ? "-" + t : t;
        else
            out += (negative ? " - " : " + ") + t;
    }
    return out;
}

std::string plain_side(const std::vector<Term>& side, std::span<const std::string> names)
{
    if (side.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
        const RationalFunction& v = side[i].value();
        if (is_bare_monomial(v)) {
            const auto& [e, c] = v.numerator().leading_term();
            const bool negative = c.sign() < 0;
            std::string m = format_monomial(e, c.abs(), names);
            if (i == 0)
                out += negative ? "-" + m : m;
            else
                out += (negative ? " - " : " + ") + m;
        } else {
            out += (i == 0 ? "(" : " + (") + format_rf(v, names, PolyOrder::degree_ascending) + ")";
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    RationalFunction parse()
    {
        RationalFunction r = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr()
    {
        RationalFunction r(names_.size());
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        r = term();
        if (negate)
            r = rf_neg(r);
        while (true) {
            if (accept('+'))
                r = rf_add(r, term());
            else if (accept('-'))
                r = rf_sub(r, term());
            else
                return r;
        }
    }

    RationalFunction term()
    {
        RationalFunction r = power();
        while (true) {
            if (accept('*')) {
                r = rf_mul(r, power());
            } else if (accept('/')) {
                RationalFunction d = power();
                if (d.is_zero())
                    fail("division by zero");
                r = rf_div(r, d);
            } else {
                return r;
            }
        }
    }

    RationalFunction power()
    {
        RationalFunction base = atom();
        if (!accept('^'))
            return base;
        bool negative = accept('-');
        skip();
        std::int64_t e = integer();
        if (negative && base.is_zero())
            fail("zero to a negative power");
        return rf_pow(base, negative ? -e : e);
    }

    std::int64_t integer()
    {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (begin == pos_)
            fail("expected an integer");
        if (pos_ - begin > 9)
            fail("exponent too large");
        return std::stoll(std::string(text_.substr(begin, pos_ - begin)));
    }

    RationalFunction atom()
    {
        skip();
        if (accept('(')) {
            RationalFunction r = expr();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        const std::size_t begin = pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return RationalFunction::constant(names_.size(),
                                              BigRational(mpz_class(std::string(text_.substr(begin, pos_ - begin)))));
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (begin == pos_)
            fail("expected a number, variable or '('");
        const std::string_view name = text_.substr(begin, pos_ - begin);
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return RationalFunction::variable(names_.size(), i);
        fail("unknown variable '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

std::string format_poly(const SparsePoly& p, std::span<const std::string> names, PolyOrder order)
{
    if (names.size() < p.arity())
        throw std::invalid_argument("format_poly: too few variable names");
    return join_poly(p, order,
                     [&](const ExponentVector& e, const BigRational& c) { return format_monomial(e, c, names); });
}

std::string format_rf(const RationalFunction& f, std::span<const std::string> names, PolyOrder order)
{
    const SparsePoly& den = f.denominator();
    if (den.is_constant() && den.leading_term().second.is_one())
        return format_poly(f.numerator(), names, order);
    return "(" + format_poly(f.numerator(), names, order) + ")/(" + format_poly(den, names, order) + ")";
}

RationalFunction parse_rf(std::string_view text, std::span<const std::string> names)
{
    if (names.empty())
        throw std::invalid_argument("parse_rf: no variable names");
    return Parser(text, names).parse();
}

std::string render_plain(const Identity& id)
{
    const auto names = id.variable_names();
    std::string out = plain_side(id.lhs(), names) + " = " + plain_side(id.rhs(), names);
    if (id.constraint())
        out += "  [on " + format_poly(*id.constraint(), names, PolyOrder::lex_descending) + " = 0]";
    return out;
}

std::string render_latex(const Identity& id)
{
    const auto names = id.variable_names();
    std::string out = latex_side(id.lhs(), names) + " = " + latex_side(id.rhs(), names);
    if (id.constraint())
        out += " \\quad \\text{on } " + latex_poly(*id.constraint(), names) + " = 0";
    return out;
}

nlohmann::json identity_to_json(const Identity& id)
{
    const auto names = id.variable_names();
    nlohmann::json doc;
    doc["family"] = std::string(family_name(id.family()));
    doc["params"] = id.params();
    doc["arity"] = id.arity();
    doc["constraint"] = id.constraint() ? nlohmann::json(format_poly(*id.constraint(), names)) : nlohmann::json();
    auto side = [&](const std::vector<Term>& terms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : terms)
            arr.push_back(format_rf(t.value(), names));
        return arr;
    };
    doc["lhs"] = side(id.lhs());
    doc["rhs"] = side(id.rhs());
    return doc;
}

nlohmann::json report_to_json(const VerificationReport& report, std::span<const std::string> names)
{
    nlohmann::json doc;
    doc["family"] = std::string(family_name(report.family));
    doc["params"] = report.params;
    doc["method"] = std::string(method_name(report.method));
    doc["verdict"] = std::string(verdict_name(report.verdict));
    doc["residual"] = report.residual ? nlohmann::json(format_rf(*report.residual, names)) : nlohmann::json();
    doc["trials"] = report.trials ? nlohmann::json(*report.trials) : nlohmann::json();
    doc["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json();
    doc["elapsed_ms"] = report.elapsed.count();
    return doc;
}

IdentityDocument identity_from_json(const nlohmann::json& doc)
{
    IdentityDocument out;
    const auto family = family_from_name(doc.at("family").get<std::string>());
    if (!family)
        throw std::invalid_argument("unknown family in identity document");
    out.family = *family;
    out.params = doc.at("params").get<std::vector<std::int64_t>>();
    out.arity = doc.at("arity").get<std::size_t>();
    const auto names = family_variable_names(out.family, out.arity);
    if (!doc.at("constraint").is_null())
        out.constraint = parse_rf(doc.at("constraint").get<std::string>(), names);
    for (const auto& s : doc.at("lhs"))
        out.lhs.push_back(parse_rf(s.get<std::string>(), names));
    for (const auto& s : doc.at("rhs"))
        out.rhs.push_back(parse_rf(s.get<std::string>(), names));
    return out;
}

} // namespace cbid
