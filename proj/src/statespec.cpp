#include "gframe/statespec.hpp"

#include <cmath>

#include "gframe/relframes.hpp"

namespace gframe {

GroupElement parse_element(const json& j, const FiniteAbelianGroup& g) {
    if (j.is_number_integer()) {
        if (!g.is_cyclic())
            throw InvalidArgument(
                "bare-integer group element needs a cyclic group; give one "
                "coordinate per factor");
        return g.cyclic(j.get<long long>());
    }
    if (!j.is_array() || j.size() != g.num_factors())
        throw InvalidArgument("group element needs one coordinate per cyclic factor");
    GroupElement e;
    for (std::size_t k = 0; k < g.num_factors(); ++k) {
        const long long n = g.factors()[k];
        const long long raw = j[k].get<long long>();
        e.coords.push_back(static_cast<int>(((raw % n) + n) % n));
    }
    return e;
}

namespace {

std::vector<GroupElement> parse_config(const json& j, const KinSpace& sp) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(sp.particles()))
        throw InvalidArgument("configuration needs one group element per particle");
    std::vector<GroupElement> cfg;
    for (const auto& jj : j) cfg.push_back(parse_element(jj, sp.group()));
    return cfg;
}

StateVector example1_state(const KinSpace& sp) {
    if (sp.particles() != 3 || !sp.group().is_cyclic() ||
        sp.group().factors()[0] < 4)
        throw InvalidArgument("example1 needs a cyclic group with n >= 4 and 3 particles");
    const auto& g = sp.group();
    CVec v(sp.dim(), cd{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    v[sp.config_index({g.cyclic(0), g.cyclic(1), g.cyclic(2)})] = w;
    v[sp.config_index({g.cyclic(0), g.cyclic(1), g.cyclic(3)})] = w;
    return StateVector(sp, Basis::Config, std::move(v));
}

}  // namespace

StateVector parse_state(const json& spec, const KinSpace& space) {
    if (!spec.is_object() || !spec.contains("type"))
        throw InvalidArgument("state spec needs a \"type\" field");
    const std::string type = spec.at("type").get<std::string>();
    if (type == "basis") {
        CVec v(space.dim(), cd{0.0, 0.0});
        v[space.config_index(parse_config(spec.at("config"), space))] = 1.0;
        return StateVector(space, Basis::Config, std::move(v));
    }
    if (type == "superposition") {
        CVec v(space.dim(), cd{0.0, 0.0});
        for (const auto& term : spec.at("terms")) {
            cd amp{1.0, 0.0};
            if (term.contains("amplitude")) {
                const auto& a = term.at("amplitude");
                amp = cd{a.at(0).get<double>(), a.at(1).get<double>()};
            }
            v[space.config_index(parse_config(term.at("config"), space))] += amp;
        }
        const double nrm = norm(v);
        if (nrm < 1e-14) throw InvalidArgument("superposition sums to zero");
        kern::scal(v.size(), cd{1.0 / nrm, 0.0}, v.data());
        return StateVector(space, Basis::Config, std::move(v));
    }
    if (type == "paradox") {
        if (!space.group().is_cyclic() || space.particles() != 3)
            throw InvalidArgument("paradox state needs a cyclic group and 3 particles");
        return paradox_state(space.group().factors()[0], spec.at("a").get<int>(),
                             spec.at("b").get<int>(), spec.at("c").get<int>(),
                             spec.value("theta", 0.0));
    }
    if (type == "example1") return example1_state(space);
    throw InvalidArgument("unknown state type: " + type);
}

json complex_to_json(const cd& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const CVec& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace gframe
