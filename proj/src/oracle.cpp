#include "mcell/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mcell/errors.hpp"

namespace mcell::oracle {

namespace {

std::uint64_t ipow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    while (k--) r *= p;
    return r;
}

Prime prime_of(std::uint64_t prime_power) {
    auto f = factorize(prime_power);
    return f[0].first;
}

}  // namespace

FiniteAb::FiniteAb(std::vector<std::uint64_t> prime_powers) : orders(std::move(prime_powers)) {
    for (std::uint64_t q : orders) {
        auto f = factorize(q);
        if (q < 2 || f.size() != 1) throw InputError("FiniteAb orders must be prime powers");
    }
    std::sort(orders.begin(), orders.end(), [](std::uint64_t a, std::uint64_t b) {
        auto fa = factorize(a)[0], fb = factorize(b)[0];
        return fa != fb ? fa < fb : a < b;
    });
}

FiniteAb FiniteAb::from_group_expr(const GroupExpr& g) {
    GroupExpr n = normalize(g);
    std::vector<std::uint64_t> orders;
    for (const GroupExpr& s : n.summands()) {
        if (s.kind() != GroupKind::Cyclic)
            throw InputError("not a finite group: " + g.to_string());
        if (s.exponent() > 62) throw InputError("finite order out of range");
        orders.push_back(ipow(s.prime(), s.exponent()));
    }
    return FiniteAb(std::move(orders));
}

GroupExpr FiniteAb::to_group_expr() const {
    std::vector<GroupExpr> parts;
    for (std::uint64_t q : orders) {
        auto f = factorize(q)[0];
        parts.push_back(GroupExpr::cyclic(f.first, f.second));
    }
    return normalize(GroupExpr::sum(std::move(parts)));
}

std::uint64_t FiniteAb::order() const {
    std::uint64_t n = 1;
    for (std::uint64_t q : orders) n *= q;
    return n;
}

Elements::Elements(const FiniteAb& g) : d_(g.orders) {
    std::uint64_t size = 1;
    for (std::uint64_t q : d_) {
        stride_.push_back(static_cast<std::uint32_t>(size));
        size *= q;
        if (size > (1u << 24)) throw InputError("finite group too large to enumerate");
    }
    size_ = static_cast<std::uint32_t>(size);
}

std::uint32_t Elements::add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        std::uint64_t xi = (x / stride_[i]) % d_[i];
        std::uint64_t yi = (y / stride_[i]) % d_[i];
        r += static_cast<std::uint32_t>(((xi + yi) % d_[i]) * stride_[i]);
    }
    return r;
}

std::uint32_t Elements::smul(std::uint64_t c, std::uint32_t x) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        std::uint64_t xi = (x / stride_[i]) % d_[i];
        r += static_cast<std::uint32_t>((((c % d_[i]) * xi) % d_[i]) * stride_[i]);
    }
    return r;
}

std::vector<std::uint32_t> subgroup_closure(const Elements& g, std::vector<std::uint32_t> gens) {
    std::vector<bool> in(g.size(), false);
    std::vector<std::uint32_t> queue = {0};
    in[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t x = queue[head];
        for (std::uint32_t gen : gens) {
            std::uint32_t y = g.add(x, gen);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

namespace {

// Rebuild the primary decomposition of an abstract finite abelian group from
// the counts  c_k = #{x : p^k x = 0}: these are p-powers p^{m_k} and
// m_k - m_{k-1} equals the number of cyclic parts of size >= p^k.
template <typename CountFn>
FiniteAb structure_from_counts(std::uint64_t total, CountFn count_killed_by) {
    std::vector<std::uint64_t> parts;
    for (auto& [p, e] : factorize(total)) {
        std::vector<unsigned> m = {0};  // m_0 = 0
        unsigned accounted = 0;
        while (accounted < e) {
            std::uint64_t c = count_killed_by(ipow(p, static_cast<unsigned>(m.size())));
            unsigned mk = 0;
            while (c > 1) {
                c /= p;
                ++mk;
            }
            m.push_back(mk);
            accounted = mk;
        }
        std::vector<unsigned> at_least;  // at_least[k] = # parts of size >= p^(k+1)
        for (std::size_t k = 1; k < m.size(); ++k) at_least.push_back(m[k] - m[k - 1]);
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
            for (unsigned i = 0; i < at_least[k] - next; ++i)
                parts.push_back(ipow(p, static_cast<unsigned>(k + 1)));
        }
    }
    return FiniteAb(std::move(parts));
}

}  // namespace

FiniteAb structure_of_subgroup(const Elements& g, const std::vector<std::uint32_t>& elems) {
    std::uint64_t total = elems.size();
    return structure_from_counts(total, [&](std::uint64_t k) {
        std::uint64_t c = 0;
        for (std::uint32_t x : elems)
            if (g.smul(k, x) == 0) ++c;
        return c;
    });
}

FiniteAb structure_of_quotient(const Elements& g, const std::vector<std::uint32_t>& subgroup) {
    std::vector<bool> in(g.size(), false);
    for (std::uint32_t x : subgroup) in[x] = true;
    std::uint64_t total = g.size() / subgroup.size();
    return structure_from_counts(total, [&](std::uint64_t k) {
        std::uint64_t c = 0;
        g.for_each_multiple(k, [&](std::uint32_t, std::uint32_t kx) {
            if (in[kx]) ++c;
        });
        return c / subgroup.size();
    });
}

std::vector<std::vector<std::uint32_t>> all_subgroups(const Elements& g) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::vector<std::uint32_t>> frontier = {{0}};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> next;
        for (auto& sub : frontier) {
            out.push_back(sub);
            std::vector<bool> in(g.size(), false);
            for (std::uint32_t x : sub) in[x] = true;
            for (std::uint32_t e = 1; e < g.size(); ++e) {
                if (in[e]) continue;
                std::vector<std::uint32_t> gens = sub;
                gens.push_back(e);
                auto bigger = subgroup_closure(g, std::move(gens));
                if (seen.insert(bigger).second) next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

FiniteAb finite_bifunctor(BifKind kind, const FiniteAb& a, const FiniteAb& b,
                          std::uint64_t joint_bound) {
    if (a.order() * b.order() > joint_bound)
        throw InputError("finite_bifunctor: joint order bound exceeded");
    Elements eb(b);
    return finite_bifunctor_on(kind, a, eb);
}

FiniteAb finite_bifunctor_on(BifKind kind, const FiniteAb& a, const Elements& eb) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t q : a.orders) {
        if (kind == BifKind::Hom || kind == BifKind::Tor) {
            // kernel of multiplication by q on B
            std::vector<std::uint32_t> ker;
            eb.for_each_multiple(q, [&](std::uint32_t x, std::uint32_t qx) {
                if (qx == 0) ker.push_back(x);
            });
            FiniteAb piece = structure_of_subgroup(eb, ker);
            parts.insert(parts.end(), piece.orders.begin(), piece.orders.end());
        } else {
            // image of multiplication by q on B, then the quotient B/qB
            std::vector<bool> in(eb.size(), false);
            std::vector<std::uint32_t> img;
            eb.for_each_multiple(q, [&](std::uint32_t, std::uint32_t qx) {
                if (!in[qx]) {
                    in[qx] = true;
                    img.push_back(qx);
                }
            });
            std::sort(img.begin(), img.end());
            FiniteAb piece = structure_of_quotient(eb, img);
            parts.insert(parts.end(), piece.orders.begin(), piece.orders.end());
        }
    }
    return FiniteAb(std::move(parts));
}

FiniteAb tensor_by_presentation(const FiniteAb& a, const FiniteAb& b) {
    std::size_t ra = a.orders.size(), rb = b.orders.size();
    if (ra == 0 || rb == 0) return FiniteAb();
    IntMatrix rel(2 * ra * rb, ra * rb);
    std::size_t row = 0;
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            rel.at(row++, i * rb + j) = BigInt::from_uint64(a.orders[i]);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            rel.at(row++, i * rb + j) = BigInt::from_uint64(b.orders[j]);
    return cokernel_of_presentation(rel);
}

std::vector<std::uint32_t> finite_radical_elements(const FiniteAb& g, const Elements& en,
                                                   unsigned* stages) {
    std::vector<std::uint32_t> s = {0};
    unsigned steps = 0;
    for (;;) {
        std::vector<bool> in(en.size(), false);
        for (std::uint32_t x : s) in[x] = true;
        // preimages {x : q x in S} over the invariants q of g, then close up
        std::vector<std::uint32_t> seeds = s;
        for (std::uint64_t q : g.orders)
            en.for_each_multiple(q, [&](std::uint32_t x, std::uint32_t qx) {
                if (in[qx]) seeds.push_back(x);
            });
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        auto next = subgroup_closure(en, seeds);
        if (next.size() == s.size()) break;
        s = std::move(next);
        ++steps;
    }
    if (stages) *stages = steps;
    return s;
}

FiniteAb finite_radical(const FiniteAb& g, const FiniteAb& n, unsigned* stages,
                        std::uint64_t joint_bound) {
    if (g.order() * n.order() > joint_bound)
        throw InputError("finite_radical: joint order bound exceeded");
    Elements en(n);
    auto elems = finite_radical_elements(g, en, stages);
    return structure_of_subgroup(en, elems);
}

bool generated_by_bounded_orders(const FiniteAb& n, const std::map<Prime, ExtNat>& bounds,
                                 std::uint64_t bound) {
    if (n.order() > bound) throw InputError("generated_by_bounded_orders: bound exceeded");
    Elements en(n);
    std::vector<std::uint32_t> seeds = {0};
    for (auto& [p, k] : bounds) {
        if (k.is_zero()) continue;
        // elements of p-power order at most p^k: exactly those killed by p^k
        std::uint64_t killer;
        if (k.is_inf()) {
            unsigned e = 0;
            for (std::uint64_t q : n.orders) {
                auto f = factorize(q)[0];
                if (f.first == p) e = std::max(e, f.second);
            }
            killer = ipow(p, e);
        } else {
            killer = ipow(p, std::min<std::uint32_t>(k.finite(), 62));
        }
        for (std::uint32_t x = 0; x < en.size(); ++x)
            if (en.smul(killer, x) == 0) seeds.push_back(x);
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return subgroup_closure(en, seeds).size() == en.size();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of non-square matrix");
    if (rows_ == 0) return BigInt(1);
    if (rows_ == 1) return at(0, 0);
    BigInt det;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        IntMatrix minor(rows_ - 1, cols_ - 1);
        for (std::size_t i = 1; i < rows_; ++i) {
            std::size_t jj = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (k == j) continue;
                minor.at(i - 1, jj++) = at(i, k);
            }
        }
        BigInt term = at(0, j) * minor.determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    SnfResult res{IntMatrix::identity(R), m, IntMatrix::identity(C)};
    IntMatrix& U = res.u;
    IntMatrix& D = res.d;
    IntMatrix& V = res.v;

    auto row_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < C; ++j) std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < R; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < R; ++i) std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < C; ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    auto row_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q.is_zero()) return;
        for (std::size_t j = 0; j < C; ++j) D.at(dst, j) -= q * D.at(src, j);
        for (std::size_t j = 0; j < R; ++j) U.at(dst, j) -= q * U.at(src, j);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q.is_zero()) return;
        for (std::size_t i = 0; i < R; ++i) D.at(i, dst) -= q * D.at(i, src);
        for (std::size_t i = 0; i < C; ++i) V.at(i, dst) -= q * V.at(i, src);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t j = 0; j < C; ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < R; ++j) U.at(i, j) = -U.at(i, j);
    };

    std::size_t t = 0;
    while (t < std::min(R, C)) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        std::size_t bi = R, bj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (D.at(i, j).is_zero()) continue;
                if (bi == R || BigInt::cmp(D.at(i, j).abs(), D.at(bi, bj).abs()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == R) break;
        row_swap(t, bi);
        col_swap(t, bj);

        bool changed = false;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (D.at(i, t).is_zero()) continue;
            row_sub(i, t, D.at(i, t) / D.at(t, t));
            if (!D.at(i, t).is_zero()) changed = true;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (D.at(t, j).is_zero()) continue;
            col_sub(j, t, D.at(t, j) / D.at(t, t));
            if (!D.at(t, j).is_zero()) changed = true;
        }
        if (changed) continue;

        // pivot must divide the whole trailing submatrix
        bool fixed = false;
        for (std::size_t i = t + 1; i < R && !fixed; ++i)
            for (std::size_t j = t + 1; j < C && !fixed; ++j)
                if (!D.at(i, j).divisible_by(D.at(t, t))) {
                    row_sub(t, i, BigInt(-1));  // row_t += row_i
                    fixed = true;
                }
        if (fixed) continue;

        if (D.at(t, t).is_negative()) row_negate(t);
        ++t;
    }
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(D.at(i, i));
#ifndef NDEBUG
    // self-check in debug builds: U m V = D and the divisibility chain
    if (!(res.u.multiply(m).multiply(res.v) == res.d))
        throw std::logic_error("smith_normal_form: U m V != D");
    for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i)
        if (!res.divisors[i + 1].divisible_by(res.divisors[i]))
            throw std::logic_error("smith_normal_form: divisor chain violated");
#endif
    return res;
}

FiniteAb cokernel_of_presentation(const IntMatrix& relations_by_rows) {
    SnfResult s = smith_normal_form(relations_by_rows);
    if (s.rank != relations_by_rows.cols())
        throw InputError("presentation has free cokernel summands");
    std::vector<std::uint64_t> parts;
    for (const BigInt& d : s.divisors) {
        if (d.is_one()) continue;
        std::int64_t v = d.to_int64();
        for (auto& [p, e] : factorize(static_cast<std::uint64_t>(v)))
            parts.push_back(ipow(p, e));
    }
    return FiniteAb(std::move(parts));
}

}  // namespace mcell::oracle
