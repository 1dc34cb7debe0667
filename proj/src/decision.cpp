#include "preriesz/decision.hpp"

namespace preriesz {

std::string property_name(Property p) {
    switch (p) {
    case Property::Pointed: return "pointed";
    case Property::Directed: return "directed";
    case Property::Rdp: return "rdp";
    case Property::Pervasive: return "pervasive";
    case Property::WeaklyPervasive: return "weakly_pervasive";
    case Property::Fordable: return "fordable";
    case Property::PropertyP: return "property_P";
    }
    return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
    for (Property p : {Property::Pointed, Property::Directed, Property::Rdp,
                       Property::Pervasive, Property::WeaklyPervasive, Property::Fordable,
                       Property::PropertyP}) {
        if (property_name(p) == name) return p;
    }
    return std::nullopt;
}

bool FarkasCertificate::verifies(std::string* why) const {
    LinearProgram lp;
    lp.system = system;
    lp.objective = QVector(system.vars, Rat(0));
    LPOutcome out;
    out.status = LPStatus::Infeasible;
    out.farkas = multipliers;
    return check_outcome(lp, out, why);
}

bool SolutionCertificate::verifies(std::string* why) const {
    if (system.satisfied_by(point)) return true;
    if (why) *why = "claimed solution violates the system";
    return false;
}

} // namespace preriesz
