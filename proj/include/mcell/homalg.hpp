#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcell/group.hpp"

namespace mcell {

enum class BifunctorKind { Hom, Tensor, Tor, Ext };

const char* bifunctor_name(BifunctorKind k);  // "hom" | "tensor" | "tor" | "ext"

// Result of a bifunctor application.  Unsupported is an explicit value, not
// an error: it flags primitive pairs the rule table declines to answer.
struct BifValue {
    std::optional<GroupExpr> value;
    std::string unsupported_reason;
    std::vector<std::string> rules;  // ids of the primitive rules applied

    bool supported() const { return value.has_value(); }
    const GroupExpr& get() const { return *value; }
};

// Computed by bilinearity over finite sums plus the primitive rule table.
// Inputs must be fragment groups (no extended constructors); a free product
// in the first slot is abelianized, in the second slot it is rejected.
BifValue bifunctor(BifunctorKind k, const GroupExpr& a, const GroupExpr& b);

// One line of the shipped rule table.
struct RuleInfo {
    std::string id;
    std::string kind;
    std::string lhs, rhs;
    std::string result;
    bool oracle_verified;  // finite rules swept against the oracle; the rest carry notes
    std::string provenance;
};

const std::vector<RuleInfo>& bifunctor_rules();
const RuleInfo* find_rule(const std::string& id);

// Text form of the rule table; data/homalg_rules.txt ships these exact bytes.
std::string bifunctor_rules_text();

}  // namespace mcell
