#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace annspec {

/// Outcome of a single named numerical check: an (lhs RELATION rhs)
/// assertion evaluated within a tolerance, plus the parameters that
/// produced it so reports are self-describing.
struct CheckReport {
    enum class Relation { LessEqual, GreaterEqual, Equal };

    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::Equal;
    double tolerance = 0.0;
    bool pass = false;

    /// Sets `pass` from the stored fields. Equal means
    /// |lhs - rhs| <= tolerance * max(1, |rhs|).
    void evaluate() {
        switch (relation) {
        case Relation::LessEqual:
            pass = lhs <= rhs + tolerance;
            break;
        case Relation::GreaterEqual:
            pass = lhs >= rhs - tolerance;
            break;
        case Relation::Equal:
            pass = std::abs(lhs - rhs) <= tolerance * std::max(1.0, std::abs(rhs));
            break;
        }
    }

    void add_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void add_param(const std::string& key, double value);

    static const char* relation_name(Relation r) {
        switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "=";
        }
        return "?";
    }
};

/// Formats a double with 17 significant digits, round-trip safe.
std::string format_full(double v);

} // namespace annspec
