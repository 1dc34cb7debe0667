#ifndef PRERIESZ_DECISION_HPP
#define PRERIESZ_DECISION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preriesz/lp.hpp"
#include "preriesz/rational.hpp"

namespace preriesz {

enum class Property {
    Pointed,
    Directed,
    Rdp,
    Pervasive,
    WeaklyPervasive,
    Fordable,
    PropertyP,
};

std::string property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

// Self-contained certificates: each embeds the system it talks about, so a
// verifier needs nothing but rational arithmetic.
struct FarkasCertificate {
    LinSystem system;
    QVector multipliers;

    bool verifies(std::string* why = nullptr) const;
};

struct SolutionCertificate {
    LinSystem system;
    QVector point;

    bool verifies(std::string* why = nullptr) const;
};

struct RdpWitness {
    std::size_t ray_count = 0;
    std::size_t dim = 0;
    bool quadruple_found = false;
    // x1, x2 ≤ x3, x4 with no z in between; set when quadruple_found.
    std::optional<std::array<QVector, 4>> quadruple;
    std::optional<FarkasCertificate> interpolation_infeasible;
};

struct PervasivenessWitness {
    QVector b;
    std::vector<std::size_t> positive_support; // {j : f_j(b) > 0}, 0-based
    SolutionCertificate sign_system;           // b realizes the support strictly
    FarkasCertificate infeasibility;           // the x-system for the support
};

struct WeakPervasivenessWitness {
    QVector b1, b2;
    std::vector<std::size_t> support1, support2, intersection;
    FarkasCertificate infeasibility;
};

struct MeetTupleWitness {
    std::vector<QVector> realizers;
    std::vector<std::vector<std::size_t>> supports;
    std::vector<std::size_t> intersection;
    FarkasCertificate infeasibility;
};

struct FordabilityWitness {
    std::size_t coordinate = 0;                // first failing cover coordinate
    std::vector<std::size_t> failing_coordinates;
    std::optional<std::size_t> ambient_row;    // provenance row the coordinate evaluates
    FarkasCertificate infeasibility;
};

// Positive fordability verdicts carry the realizing elements: s_j with
// supp(F s_j) = {j} for every cover coordinate.
struct FordabilityRealizers {
    std::vector<QVector> per_coordinate;
};

struct LineWitness {
    QVector line; // ±line both in the cone
};

struct HyperplaneWitness {
    QVector normal; // vanishes on every ray
};

using Witness = std::variant<std::monostate, RdpWitness, PervasivenessWitness,
                             WeakPervasivenessWitness, MeetTupleWitness, FordabilityWitness,
                             FordabilityRealizers, LineWitness, HyperplaneWitness>;

struct Stats {
    std::int64_t lp_count = 0;
    std::int64_t time_ms = 0;
};

struct DecisionReport {
    Property property = Property::Pointed;
    bool verdict = false;
    Witness witness;
    Stats stats;
};

} // namespace preriesz

#endif
