#pragma once

#include <string>
#include <utility>

#include "simwaring/bigint.hpp"

namespace simwaring {

/// Which result produced a verdict. The wire tags name the statements the
/// published report format uses.
enum class Rule {
    PairSameSupport,      // "Thm3.2"
    FreeCollection,       // "Prop3.7"
    PairDifferentSupport, // "Thm3.8"
    DerivativeCollection, // "Prop3.10"
    BoundsOnly,           // "BoundsOnly"
};

inline const char* rule_tag(Rule rule) {
    switch (rule) {
    case Rule::PairSameSupport: return "Thm3.2";
    case Rule::FreeCollection: return "Prop3.7";
    case Rule::PairDifferentSupport: return "Thm3.8";
    case Rule::DerivativeCollection: return "Prop3.10";
    case Rule::BoundsOnly: return "BoundsOnly";
    }
    return "?";
}

/// Either an exact simultaneous rank or a lower/upper bound pair, tagged with
/// the rule that fired. "Unknown rank" is a first-class outcome, not an error.
struct RankVerdict {
    enum class Kind { Exact, Bounds };

    Kind kind;
    BigInt exact_value; // when Exact
    BigInt lower;       // when Bounds
    BigInt upper;       // when Bounds
    Rule rule;

    bool is_exact() const { return kind == Kind::Exact; }

    static RankVerdict exact(BigInt value, Rule rule) {
        RankVerdict v;
        v.kind = Kind::Exact;
        v.exact_value = std::move(value);
        v.rule = rule;
        return v;
    }

    static RankVerdict bounds(BigInt lower, BigInt upper) {
        RankVerdict v;
        v.kind = Kind::Bounds;
        v.lower = std::move(lower);
        v.upper = std::move(upper);
        v.rule = Rule::BoundsOnly;
        return v;
    }
};

} // namespace simwaring
