#pragma once

#include <string>

#include <json.hpp>

#include "secant/multipoly.hpp"
#include "secant/rational.hpp"
#include "secant/relations.hpp"

namespace secant {

inline nlohmann::json to_json(const Rational& q) { return q.to_string(); }

// A bivariate polynomial as a list of {m_exp, g_exp, coeff} records, lowest
// monomial first (deterministic order).
inline nlohmann::json to_json(const BivarPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mo, c] : p.terms())
        arr.push_back({{"m_exp", mo.e[0]}, {"g_exp", mo.e[1]}, {"coeff", c.to_string()}});
    return arr;
}

template <class R>
inline nlohmann::json series_to_json(const TruncatedSeries<R>& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k < s.order(); ++k)
        arr.push_back({{"exponent", k}, {"coeff", to_json(s.coeff(k))}});
    return arr;
}

inline nlohmann::json to_json(const CoeffBundle& b) {
    return {{"d", b.d},
            {"P_alpha", to_json(b.p_alpha)},
            {"P_beta", to_json(b.p_beta)},
            {"P_gamma", to_json(b.p_gamma)},
            {"P_c", to_json(b.p_c)},
            {"P_delta0", to_json(b.p_delta0)}};
}

}  // namespace secant
