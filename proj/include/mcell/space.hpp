#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcell/group.hpp"

namespace mcell {

enum class SpaceKind {
    Point,
    Sphere,
    EM,          // K(A, n)
    MooreSpace,  // M(G, n)
    Generic,     // pi1 / homology / flags profile
    Product,
    FormalFiber,
    CompletionProduct  // Prod over a prime set of p-completions of a base space
};

class SpaceDesc {
public:
    SpaceDesc() : kind_(SpaceKind::Point) {}

    static SpaceDesc point() { return SpaceDesc(); }
    static SpaceDesc sphere(unsigned n);
    static SpaceDesc em(GroupExpr a, unsigned n);
    static SpaceDesc moore(GroupExpr g, unsigned n);
    static SpaceDesc generic(GroupExpr pi1, bool simply_connected, bool nilpotent,
                             std::optional<std::vector<GroupExpr>> homology,
                             std::optional<GroupExpr> pi2);
    static SpaceDesc product(std::vector<SpaceDesc> factors);
    static SpaceDesc formal_fiber(SpaceDesc source, SpaceDesc target);
    static SpaceDesc completion_product(PrimeSet over, SpaceDesc base);

    SpaceKind kind() const { return kind_; }
    unsigned degree() const { return degree_; }
    const GroupExpr& group() const { return group_; }  // EM / MooreSpace
    const GroupExpr& pi1_field() const { return group_; }
    bool sc_flag() const { return sc_; }
    bool nilpotent_flag() const { return nilpotent_; }
    const std::optional<std::vector<GroupExpr>>& homology_field() const { return homology_; }
    const std::optional<GroupExpr>& pi2_field() const { return pi2_; }
    const std::vector<SpaceDesc>& factors() const { return factors_; }
    const SpaceDesc& fiber_source() const { return factors_[0]; }
    const SpaceDesc& fiber_target() const { return factors_[1]; }
    const PrimeSet& completion_set() const { return pset_; }
    const SpaceDesc& completion_base() const { return factors_[0]; }

    static int cmp(const SpaceDesc& a, const SpaceDesc& b);
    bool operator==(const SpaceDesc& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const SpaceDesc& o) const { return cmp(*this, o) != 0; }

    std::string to_string() const;

private:
    SpaceKind kind_;
    unsigned degree_ = 0;
    GroupExpr group_;  // EM/Moore group, Generic pi1
    bool sc_ = false;
    bool nilpotent_ = false;
    std::optional<std::vector<GroupExpr>> homology_;  // reduced, degrees 1..k
    std::optional<GroupExpr> pi2_;
    std::vector<SpaceDesc> factors_;
    PrimeSet pset_ = PrimeSet::none();
};

// Space grammar: "pt" | "S^<n>" | "K(<group>,<n>)" | "M(<group>,<n>)" |
// "space{pi1=<group>; H=[<group>,...]; sc=<bool>; nilp=<bool>; pi2=<group>}"
SpaceDesc parse_space(const std::string& text);

// Known homotopy/homology data of symbolic spaces; nullopt when the space
// does not determine the value.
std::optional<GroupExpr> fundamental_group(const SpaceDesc& x);
std::optional<GroupExpr> second_homotopy(const SpaceDesc& x);
std::optional<GroupExpr> second_homology(const SpaceDesc& x);
bool known_simply_connected(const SpaceDesc& x);
bool known_nilpotent(const SpaceDesc& x);

}  // namespace mcell
