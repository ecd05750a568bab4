#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcell/bigint.hpp"
#include "mcell/group.hpp"

namespace mcell::oracle {

// Finite abelian group as a multiset of prime-power orders (primary form).
struct FiniteAb {
    std::vector<std::uint64_t> orders;  // each p^k, k >= 1; sorted by (p, k)

    FiniteAb() = default;
    explicit FiniteAb(std::vector<std::uint64_t> prime_powers);

    static FiniteAb from_group_expr(const GroupExpr& g);  // finite torsion fragment only
    GroupExpr to_group_expr() const;

    std::uint64_t order() const;
    bool trivial() const { return orders.empty(); }

    bool operator==(const FiniteAb& o) const { return orders == o.orders; }
    bool operator!=(const FiniteAb& o) const { return orders != o.orders; }
    std::string to_string() const { return to_group_expr().to_string(); }
};

// Element arithmetic for  ⊕ Z/d_i  with flat indices.
class Elements {
public:
    explicit Elements(const FiniteAb& g);

    std::uint32_t size() const { return size_; }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t smul(std::uint64_t c, std::uint32_t x) const;

    const std::vector<std::uint64_t>& invariants() const { return d_; }

    // Calls f(x, c*x) for every element x in flat order, via an incremental
    // mixed-radix odometer (no divisions in the loop).
    template <typename F>
    void for_each_multiple(std::uint64_t c, F&& f) const {
        std::size_t k = d_.size();
        if (k == 0) {
            f(std::uint32_t{0}, std::uint32_t{0});
            return;
        }
        std::vector<std::vector<std::int64_t>> scaled(k);
        for (std::size_t i = 0; i < k; ++i) {
            scaled[i].resize(d_[i]);
            std::uint64_t cm = c % d_[i];
            for (std::uint64_t v = 0; v < d_[i]; ++v)
                scaled[i][v] = static_cast<std::int64_t>((cm * v) % d_[i]) * stride_[i];
        }
        std::vector<std::uint32_t> coord(k, 0);
        std::int64_t y = 0;
        for (std::uint32_t x = 0;; ++x) {
            f(x, static_cast<std::uint32_t>(y));
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (coord[i] + 1 < d_[i]) {
                    y += scaled[i][coord[i] + 1] - scaled[i][coord[i]];
                    ++coord[i];
                    break;
                }
                y -= scaled[i][coord[i]];
                coord[i] = 0;
            }
            if (i == k) break;
        }
    }

private:
    std::vector<std::uint64_t> d_;
    std::vector<std::uint32_t> stride_;
    std::uint32_t size_ = 1;
};

// Subgroup utilities (element index lists are sorted).
std::vector<std::uint32_t> subgroup_closure(const Elements& g, std::vector<std::uint32_t> gens);
FiniteAb structure_of_subgroup(const Elements& g, const std::vector<std::uint32_t>& elems);
FiniteAb structure_of_quotient(const Elements& g, const std::vector<std::uint32_t>& subgroup);
// All subgroups, as sorted element lists (meant for orders <= 64).
std::vector<std::vector<std::uint32_t>> all_subgroups(const Elements& g);

enum class BifKind { Hom, Tensor, Tor, Ext };

inline constexpr std::uint64_t kDefaultJointBound = 1u << 16;

// Brute-force bifunctor: Hom/Tor go through kernel subgroups B[a], Ext/Tensor
// through quotients B/aB, one invariant of A at a time.  Throws InputError
// when |A|*|B| exceeds the joint bound.
FiniteAb finite_bifunctor(BifKind kind, const FiniteAb& a, const FiniteAb& b,
                          std::uint64_t joint_bound = kDefaultJointBound);
// Same computation against prebuilt element arithmetic for b (sweep hot path).
FiniteAb finite_bifunctor_on(BifKind kind, const FiniteAb& a, const Elements& eb);

// Independent slow route for cross-checking tensor: presentation matrix of
// A (x) B reduced by Smith normal form.
FiniteAb tensor_by_presentation(const FiniteAb& a, const FiniteAb& b);

// Iterated image-sum radical: S_0 = 0, S_{i+1}/S_i generated by all images of
// homs from g; returns the fixed point and the number of strict growth steps.
FiniteAb finite_radical(const FiniteAb& g, const FiniteAb& n, unsigned* stages = nullptr,
                        std::uint64_t joint_bound = kDefaultJointBound);
// The fixed point as an element set of n (for containment checks).
std::vector<std::uint32_t> finite_radical_elements(const FiniteAb& g, const Elements& en,
                                                   unsigned* stages = nullptr);

// True iff n is generated by its elements of order p^l with l <= bounds[p]
// (infinite bound = the whole p-primary part counts).
bool generated_by_bounded_orders(const FiniteAb& n, const std::map<Prime, ExtNat>& bounds,
                                 std::uint64_t bound = kDefaultJointBound);

// Integer matrices and Smith normal form.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix multiply(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // Cofactor-expansion determinant; test helper, fine for small matrices.
    BigInt determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

struct SnfResult {
    IntMatrix u, d, v;  // u * m * v = d, u and v unimodular, d diagonal
    std::size_t rank = 0;
    std::vector<BigInt> divisors;  // nonzero diagonal entries, d_i | d_{i+1}
};

SnfResult smith_normal_form(const IntMatrix& m);

// Classify the cokernel of the column span: Z^rows / im(m^T)... presented by
// relation rows m over generators = columns.  Used to turn presentations into
// primary form.
FiniteAb cokernel_of_presentation(const IntMatrix& relations_by_rows);

}  // namespace mcell::oracle
