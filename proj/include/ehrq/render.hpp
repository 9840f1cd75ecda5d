#pragma once

#include "ehrq/qlaurent.hpp"
#include "ehrq/qtpoly.hpp"
#include "ehrq/qtrational.hpp"
#include "ehrq/qtseries.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ehrq {

// Plain-text rendering, e.g. "1 + 11t + 11t^2 + t^3" or "q^-2 + 1 + q".
std::string to_plain(const QLaurent& p, std::string_view var = "q");
std::string to_plain(const QTPoly& p);
std::string to_plain(const QTSeries& s);
std::string to_plain(const QTRational& r);

// LaTeX rendering; exponents are braced, rationals use \frac.
std::string to_latex(const QLaurent& p, std::string_view var = "q");
std::string to_latex(const QTPoly& p);
std::string to_latex(const QTSeries& s);
std::string to_latex(const QTRational& r);

// JSON rendering with coefficients as decimal strings.
nlohmann::json to_json(const QLaurent& p);
nlohmann::json to_json(const QTPoly& p);
nlohmann::json to_json(const QTSeries& s);
nlohmann::json to_json(const QTRational& r);

}  // namespace ehrq
