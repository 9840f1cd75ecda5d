#include "ehrq/polytope_json.hpp"

#include <stdexcept>

namespace ehrq {

LatticePolytope polytope_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("polytope JSON must be an object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        throw std::invalid_argument("polytope JSON requires an integer \"dim\"");
    const int dim = j.at("dim").get<int>();

    if (j.contains("family")) {
        const auto name = j.at("family").get<std::string>();
        const auto f = family_from_name(name);
        if (!f) throw std::invalid_argument("unknown polytope family \"" + name + "\"");
        return LatticePolytope::family(*f, dim);
    }
    if (!j.contains("inequalities"))
        throw std::invalid_argument("polytope JSON requires \"family\" or \"inequalities\"");

    std::vector<HalfSpace> rows;
    for (const auto& row : j.at("inequalities")) {
        HalfSpace h;
        h.coeffs = row.at("coeffs").get<std::vector<std::int64_t>>();
        h.rhs = row.at("rhs").get<std::int64_t>();
        rows.push_back(std::move(h));
    }
    return LatticePolytope::halfspaces(dim, std::move(rows));
}

nlohmann::json polytope_to_json(const LatticePolytope& p) {
    if (p.family_tag()) return {{"family", family_name(*p.family_tag())}, {"dim", p.dim()}};
    nlohmann::json rows = nlohmann::json::array();
    for (const HalfSpace& h : p.rows()) rows.push_back({{"coeffs", h.coeffs}, {"rhs", h.rhs}});
    return {{"dim", p.dim()}, {"inequalities", rows}};
}

}  // namespace ehrq
