#pragma once

#include <json.hpp>

#include "picard/automorphism.hpp"
#include "picard/certify.hpp"
#include "picard/domain.hpp"
#include "picard/gaussian.hpp"
#include "picard/geometry.hpp"
#include "picard/reduction.hpp"

// JSON wire formats: GaussianInt and complex numbers as [re, im]; matrices as
// 3x3 nested row-major arrays; hyperquadric points as {"z1": [..], "z2": [..]}.

namespace picard {

inline void to_json(nlohmann::json& j, const GaussianInt& g) {
    j = nlohmann::json::array({g.re, g.im});
}

inline void from_json(const nlohmann::json& j, GaussianInt& g) {
    g.re = j.at(0).get<std::int64_t>();
    g.im = j.at(1).get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const ExactMatrix3& m) {
    j = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c) row.push_back(m.at(r, c));
        j.push_back(std::move(row));
    }
}

inline void from_json(const nlohmann::json& j, ExactMatrix3& m) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = j.at(static_cast<std::size_t>(r))
                                                     .at(static_cast<std::size_t>(c))
                                                     .get<GaussianInt>();
}

inline nlohmann::json complex_to_json(const ComplexF& v) {
    return nlohmann::json::array({v.real(), v.imag()});
}

inline ComplexF complex_from_json(const nlohmann::json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline void to_json(nlohmann::json& j, const AutMatrix& m) {
    j = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c) row.push_back(complex_to_json(m.at(r, c)));
        j.push_back(std::move(row));
    }
}

inline void to_json(nlohmann::json& j, const PointD2& z) {
    j = {{"z1", complex_to_json(z.z1)}, {"z2", complex_to_json(z.z2)}};
}

inline void from_json(const nlohmann::json& j, PointD2& z) {
    z = PointD2(complex_from_json(j.at("z1")), complex_from_json(j.at("z2")));
}

inline void to_json(nlohmann::json& j, const PointB2& w) {
    j = {{"w1", complex_to_json(w.w1)}, {"w2", complex_to_json(w.w2)}};
}

inline void to_json(nlohmann::json& j, const AutParams& p) {
    j = {{"delta", p.delta},
         {"beta", complex_to_json(p.beta)},
         {"r", p.r},
         {"gamma", complex_to_json(p.gamma)}};
}

inline void to_json(nlohmann::json& j, const MembershipReport& rep) {
    j = {{"in_set", rep.in_set},
         {"prism_margins", rep.prism_margins},
         {"q_margins", rep.q_margins},
         {"min_margin", rep.min_margin()}};
}

inline void to_json(nlohmann::json& j, const CertReport& rep) {
    j = {{"item", rep.item},
         {"status", rep.certified ? "certified" : "failed"},
         {"min_value", rep.min_value},
         {"grid_spec", rep.grid_spec},
         {"detail", rep.detail}};
    if (rep.argmin) j["argmin"] = *rep.argmin;
}

inline void to_json(nlohmann::json& j, const ReductionResult& res) {
    j = {{"g", res.g.exact()},
         {"reduced", res.reduced},
         {"iterations", res.iterations},
         {"height_trace", res.height_trace}};
}

} // namespace picard
