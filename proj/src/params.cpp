#include "hypflux/params.hpp"

#include <cmath>

#include "hypflux/errors.hpp"
#include "json.hpp"

namespace hypflux {

PhysicalParams natural_units(double m, double K, double F, double T) {
    PhysicalParams p;
    p.m = m;
    p.K = K;
    p.F = F;
    p.T = T;
    return p;
}

double friction_constant(const PhysicalParams& p) {
    // 2 sqrt(sigma * tension) reduces algebraically to 2 sigma c; the
    // product form is exact in floating point, the sqrt form is not.
    return 2.0 * p.sigma * p.c;
}

std::vector<std::string> validate(const PhysicalParams& p) {
    std::vector<std::string> violations;
    auto require_positive = [&](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            violations.push_back(std::string(name) + " must be positive");
    };
    require_positive(p.sigma, "sigma");
    require_positive(p.c, "c");
    require_positive(p.hbar, "hbar");
    require_positive(p.kB, "kB");
    require_positive(p.m, "m");
    require_positive(p.K, "K");
    if (!(p.F >= 0.0) || !std::isfinite(p.F))
        violations.push_back("F must be >= 0");
    if (!(p.T >= 0.0) || !std::isfinite(p.T))
        violations.push_back("T must be >= 0");
    return violations;
}

PhysicalParams params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("invalid parameter JSON: ") + e.what());
    }
    if (!j.is_object())
        throw DomainError("parameter JSON must be a flat object");

    PhysicalParams p;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            throw DomainError("parameter '" + key + "' must be a number");
        double v = value.get<double>();
        if (key == "sigma")      p.sigma = v;
        else if (key == "c")     p.c = v;
        else if (key == "hbar")  p.hbar = v;
        else if (key == "kB")    p.kB = v;
        else if (key == "m")     p.m = v;
        else if (key == "K")     p.K = v;
        else if (key == "F")     p.F = v;
        else if (key == "T")     p.T = v;
        else
            throw DomainError("unknown parameter '" + key + "'");
    }
    return p;
}

std::string params_to_json(const PhysicalParams& p) {
    nlohmann::json j{{"sigma", p.sigma}, {"c", p.c},  {"hbar", p.hbar},
                     {"kB", p.kB},       {"m", p.m},  {"K", p.K},
                     {"F", p.F},         {"T", p.T}};
    return j.dump();
}

} // namespace hypflux
