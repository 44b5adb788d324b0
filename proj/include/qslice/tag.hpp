#pragma once

#include <compare>
#include <string>

#include "qslice/errors.hpp"

namespace qslice {

/// Term-group tag. Every linear/quadratic term and every constant
/// contribution of a QuboModel belongs to exactly one tag group.
///
/// Kinds:
///   Objective   — cost terms (e.g. the VRP transit objective)
///   Vehicle(a)  — per-vehicle penalty group (VRP step one-hot constraints)
///   Coupling    — constraints joining otherwise independent blocks
///   User(name)  — caller-defined group
///
/// Objective/User groups are treated as cost, Vehicle/Coupling groups as
/// penalties for feasibility checks (Vehicle and Coupling encode squared
/// equality constraints; a slice sample is feasible when they vanish).
class Tag {
public:
    enum class Kind { Objective, Vehicle, Coupling, User };

    Tag() : kind_(Kind::Objective) {}

    static Tag objective() { return Tag(Kind::Objective, -1, {}); }
    static Tag vehicle(int a) {
        if (a < 0) throw ValidationError("vehicle tag index must be >= 0");
        return Tag(Kind::Vehicle, a, {});
    }
    static Tag coupling() { return Tag(Kind::Coupling, -1, {}); }
    static Tag user(std::string name) { return Tag(Kind::User, -1, std::move(name)); }

    Kind kind() const { return kind_; }
    int vehicle_index() const { return vehicle_; }
    const std::string& user_name() const { return name_; }

    /// Vehicle and Coupling groups encode constraint penalties.
    bool is_penalty() const { return kind_ == Kind::Vehicle || kind_ == Kind::Coupling; }

    std::string str() const {
        switch (kind_) {
            case Kind::Objective: return "objective";
            case Kind::Vehicle: return "vehicle:" + std::to_string(vehicle_);
            case Kind::Coupling: return "coupling";
            case Kind::User: return "user:" + name_;
        }
        return "?";
    }

    static Tag parse(const std::string& s);

    friend auto operator<=>(const Tag&, const Tag&) = default;

private:
    Tag(Kind k, int v, std::string n) : kind_(k), vehicle_(v), name_(std::move(n)) {}

    Kind kind_;
    int vehicle_;
    std::string name_;
};

inline Tag Tag::parse(const std::string& s) {
    if (s == "objective") return objective();
    if (s == "coupling") return coupling();
    if (s.rfind("vehicle:", 0) == 0) return vehicle(std::stoi(s.substr(8)));
    if (s.rfind("user:", 0) == 0) return user(s.substr(5));
    throw ValidationError("unknown tag string: " + s);
}

} // namespace qslice
