#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcell/group.hpp"
#include "mcell/oracle.hpp"
#include "mcell/verdict.hpp"

namespace mcell {

// Construction recipe for a two-dimensional M(G,1).
struct MooreModel {
    enum Recipe { Telescope, CofiberOfUnit, ClassicalCyclic, Wedge } recipe = Telescope;

    GroupExpr group;  // normalized fundamental group
    BaerType type;    // Telescope / CofiberOfUnit data
    std::vector<std::pair<Prime, std::uint32_t>> cyclic_factors;  // ClassicalCyclic order, factored
    std::vector<MooreModel> factors;                              // Wedge
    int dimension = 2;

    BigInt cyclic_order() const;
    // The fundamental group regenerated from the recipe data alone.
    GroupExpr reconstruct() const;
    std::string to_string() const;
};

// The three Varadarajan clauses, decided through classify and the tensor
// rules; the verdict carries clause-level witnesses and a dimension-certainty
// flag (a Moore space may exist with no known two-dimensional model).
Verdict exists_moore(const GroupExpr& g);

struct MooreModelResult {
    std::optional<MooreModel> model;
    std::string no_recipe_reason;  // set when existence holds but no recipe is known

    bool constructible() const { return model.has_value(); }
};

// Recipe for a constructible class: rank-one telescopes, unit-inclusion
// cofibers, classical cyclic cofibers, wedges of those.  Throws InputError
// when no Moore space exists at all.
MooreModelResult moore_model(const GroupExpr& g);

struct CheckReport {
    oracle::IntMatrix matrix;
    std::size_t rank = 0;
    bool injective = false;
    std::vector<std::string> divisors;

    explicit CheckReport(oracle::IntMatrix m) : matrix(std::move(m)) {}
};

// Row-space injectivity via Smith normal form: full row rank, no zero
// elementary divisor.
bool rows_injective(const oracle::IntMatrix& m, std::size_t* rank = nullptr,
                    std::vector<std::string>* divisors = nullptr);

// Truncated boundary matrix of a Telescope or ClassicalCyclic recipe
// (telescope relations r_i = alpha_i x_i - x_{i+1}), checked for injectivity.
CheckReport presentation_check(const MooreModel& m, std::size_t truncation);

}  // namespace mcell
