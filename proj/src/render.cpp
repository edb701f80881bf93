#include "powsum/render.hpp"

#include <map>

#include <json.hpp>

namespace powsum {

namespace {

using ordered_json = nlohmann::ordered_json;

// Largest power accepted by parse_polynomial; storage is dense.
constexpr std::size_t max_power = 1u << 16;

std::string plain_term(const Rational& magnitude, std::size_t power) {
    std::string out;
    const bool unit = magnitude == Rational(1);
    if (power == 0)
        return magnitude.to_string();
    if (!unit)
        out = magnitude.to_string() + "*";
    out += "n";
    if (power > 1)
        out += "^" + std::to_string(power);
    return out;
}

std::string latex_coefficient(const Rational& magnitude) {
    if (magnitude.is_integer())
        return magnitude.numerator().get_str();
    return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

std::string latex_term(const Rational& magnitude, std::size_t power) {
    if (power == 0)
        return latex_coefficient(magnitude);
    std::string out;
    if (magnitude != Rational(1))
        out = latex_coefficient(magnitude) + " ";
    out += "n";
    if (power > 1)
        out += "^{" + std::to_string(power) + "}";
    return out;
}

template <typename TermFn>
std::string join_terms(const Polynomial& p, TermFn term) {
    if (p.is_zero())
        return "0";
    const auto coeffs = p.coefficients();
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term(negative ? -c : c, i);
    }
    return out;
}

std::string structured(const Polynomial& p) {
    ordered_json doc;
    if (auto deg = p.degree())
        doc["degree"] = *deg;
    else
        doc["degree"] = nullptr;
    ordered_json coeffs = ordered_json::array();
    const auto cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero())
            continue;
        coeffs.push_back(ordered_json{{"power", i}, {"value", cs[i].to_string()}});
    }
    doc["coefficients"] = std::move(coeffs);
    return doc.dump();
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("structured polynomial: " + where + ": " + what);
}

}  // namespace

std::optional<RenderStyle> parse_render_style(std::string_view name) {
    if (name == "plain")
        return RenderStyle::plain;
    if (name == "latex")
        return RenderStyle::latex;
    if (name == "structured")
        return RenderStyle::structured;
    return std::nullopt;
}

std::string render_polynomial(const Polynomial& p, RenderStyle style) {
    switch (style) {
        case RenderStyle::plain:
            return join_terms(p, plain_term);
        case RenderStyle::latex:
            return join_terms(p, latex_term);
        case RenderStyle::structured:
            return structured(p);
    }
    return {};
}

Polynomial parse_polynomial(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("byte " + std::to_string(e.byte), "not valid JSON");
    }
    if (!doc.is_object())
        fail("document", "expected an object");
    for (const auto& item : doc.items()) {
        if (item.key() != "degree" && item.key() != "coefficients")
            fail(item.key(), "unknown field");
    }
    if (!doc.contains("degree"))
        fail("degree", "missing");
    if (!doc.contains("coefficients"))
        fail("coefficients", "missing");

    const auto& degree = doc["degree"];
    if (!degree.is_null() && !degree.is_number_unsigned())
        fail("degree", "expected a non-negative integer or null");

    const auto& entries = doc["coefficients"];
    if (!entries.is_array())
        fail("coefficients", "expected an array");

    std::map<std::size_t, Rational> terms;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "coefficients[" + std::to_string(i) + "]";
        const auto& entry = entries[i];
        if (!entry.is_object())
            fail(where, "expected an object");
        for (const auto& item : entry.items()) {
            if (item.key() != "power" && item.key() != "value")
                fail(where + "." + item.key(), "unknown field");
        }
        if (!entry.contains("power") || !entry["power"].is_number_unsigned())
            fail(where + ".power", "expected a non-negative integer");
        if (!entry.contains("value") || !entry["value"].is_string())
            fail(where + ".value", "expected a \"p/q\" string");

        const auto power = entry["power"].get<std::size_t>();
        if (power > max_power)
            fail(where + ".power", "power " + std::to_string(power) + " exceeds " + std::to_string(max_power));
        Rational value;
        try {
            value = Rational::parse(entry["value"].get<std::string>());
        } catch (const ParseError& e) {
            fail(where + ".value", e.what());
        }
        if (!terms.emplace(power, std::move(value)).second)
            fail(where + ".power", "duplicate power " + std::to_string(power));
    }

    std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (auto& [power, value] : terms)
        coeffs[power] = value;
    Polynomial p(std::move(coeffs));

    const auto actual = p.degree();
    if (degree.is_null() ? actual.has_value() : (!actual || *actual != degree.get<std::size_t>()))
        fail("degree", "does not match the highest nonzero power");
    return p;
}

}  // namespace powsum
