#include "ehrq/render.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

namespace ehrq {

namespace {

struct Style {
    bool latex = false;
};

std::string power(std::string_view var, std::int64_t exp, const Style& style) {
    std::ostringstream out;
    out << var;
    if (exp != 1) {
        if (style.latex)
            out << "^{" << exp << "}";
        else
            out << "^" << exp;
    }
    return out.str();
}

// One rendered addend: sign handled by the caller, body excludes it.
struct Addend {
    bool negative;
    std::string body;
};

std::string join(const std::vector<Addend>& addends) {
    if (addends.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < addends.size(); ++i) {
        if (i == 0)
            out << (addends[i].negative ? "-" : "");
        else
            out << (addends[i].negative ? " - " : " + ");
        out << addends[i].body;
    }
    return out.str();
}

Addend monomial_addend(const Int& coeff, std::string_view var, std::int64_t exp,
                       const Style& style) {
    const bool negative = coeff < 0;
    const Int magnitude = negative ? Int(-coeff) : coeff;
    std::ostringstream body;
    if (exp == 0) {
        body << magnitude.str();
    } else {
        if (magnitude != 1) body << magnitude.str();
        body << power(var, exp, style);
    }
    return {negative, body.str()};
}

std::string render_qlaurent(const QLaurent& p, std::string_view var, const Style& style) {
    std::vector<Addend> addends;
    for (const auto& [exp, c] : p.terms()) addends.push_back(monomial_addend(c, var, exp, style));
    return join(addends);
}

// Shared renderer for QTPoly and QTSeries: q-Laurent coefficients grouped
// by ascending t-exponent.
std::string render_grouped(const std::map<std::int64_t, QLaurent>& groups, const Style& style) {
    std::vector<Addend> addends;
    for (const auto& [r, part] : groups) {
        if (part.is_zero()) continue;
        if (r == 0) {
            // Constant-in-t group: splice its terms into the top-level sum.
            for (const auto& [exp, c] : part.terms())
                addends.push_back(monomial_addend(c, "q", exp, style));
            continue;
        }
        const std::string t_part = power("t", r, style);
        if (part.term_count() == 1) {
            const auto& [exp, c] = *part.terms().begin();
            Addend a = monomial_addend(c, "q", exp, style);
            if (exp == 0) {
                const Int magnitude = a.negative ? Int(-c) : c;
                a.body = magnitude == 1 ? t_part : magnitude.str() + t_part;
            } else {
                a.body += " " + t_part;
            }
            addends.push_back(a);
            continue;
        }
        // Factor out the sign when every coefficient is negative.
        bool all_negative = true;
        for (const auto& [exp, c] : part.terms()) all_negative = all_negative && c < 0;
        const QLaurent inner = all_negative ? -part : part;
        addends.push_back({all_negative, "(" + render_qlaurent(inner, "q", style) + ")" + t_part});
    }
    return join(addends);
}

std::map<std::int64_t, QLaurent> groups_of(const QTPoly& p) {
    std::map<std::int64_t, QLaurent> groups;
    for (const auto& [key, c] : p.terms()) groups[key.first].add_term(key.second, c);
    return groups;
}

std::map<std::int64_t, QLaurent> groups_of(const QTSeries& s) {
    std::map<std::int64_t, QLaurent> groups;
    for (std::size_t r = 0; r < s.coeffs().size(); ++r)
        if (!s.coeffs()[r].is_zero()) groups[static_cast<std::int64_t>(r)] = s.coeffs()[r];
    return groups;
}

std::string render_denominator(const std::vector<std::int64_t>& factors, const Style& style) {
    // Equal factors collapse into a power, e.g. (1 - t)^4.
    std::map<std::int64_t, int> multiplicity;
    for (std::int64_t e : factors) ++multiplicity[e];
    std::ostringstream out;
    for (const auto& [e, m] : multiplicity) {
        out << "(1 - ";
        if (e != 0) out << power("q", e, style) << " ";
        out << "t)";
        if (m != 1) {
            if (style.latex)
                out << "^{" << m << "}";
            else
                out << "^" << m;
        }
    }
    return out.str();
}

std::string render_rational(const QTRational& r, const Style& style) {
    const std::string num = render_grouped(groups_of(r.numerator), style);
    if (r.denominator.empty()) return num;
    const std::string den = render_denominator(r.denominator, style);
    if (style.latex) return "\\frac{" + num + "}{" + den + "}";
    const bool wrap = r.numerator.term_count() > 1;
    return (wrap ? "(" + num + ")" : num) + " / " + den;
}

nlohmann::json qlaurent_json(const QLaurent& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, c] : p.terms()) terms.push_back({{"exp", exp}, {"coeff", c.str()}});
    return {{"terms", terms}};
}

}  // namespace

std::string to_plain(const QLaurent& p, std::string_view var) {
    return render_qlaurent(p, var, {});
}

std::string to_plain(const QTPoly& p) { return render_grouped(groups_of(p), {}); }

std::string to_plain(const QTSeries& s) { return render_grouped(groups_of(s), {}); }

std::string to_plain(const QTRational& r) { return render_rational(r, {}); }

std::string to_latex(const QLaurent& p, std::string_view var) {
    return render_qlaurent(p, var, {.latex = true});
}

std::string to_latex(const QTPoly& p) { return render_grouped(groups_of(p), {.latex = true}); }

std::string to_latex(const QTSeries& s) { return render_grouped(groups_of(s), {.latex = true}); }

std::string to_latex(const QTRational& r) { return render_rational(r, {.latex = true}); }

nlohmann::json to_json(const QLaurent& p) { return qlaurent_json(p); }

nlohmann::json to_json(const QTPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"t", key.first}, {"q", key.second}, {"coeff", c.str()}});
    return {{"terms", terms}};
}

nlohmann::json to_json(const QTSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& part : s.coeffs()) coeffs.push_back(qlaurent_json(part));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const QTRational& r) {
    return {{"numerator", to_json(r.numerator)}, {"denominator", r.denominator}};
}

}  // namespace ehrq
