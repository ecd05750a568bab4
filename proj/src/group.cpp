#include "mcell/group.hpp"

#include <algorithm>
#include <sstream>

#include "mcell/bigint.hpp"
#include "mcell/errors.hpp"

namespace mcell {

GroupExpr GroupExpr::integers() {
    GroupExpr g;
    g.kind_ = GroupKind::Int;
    return g;
}

GroupExpr GroupExpr::cyclic(Prime p, std::uint32_t k) {
    if (!is_prime(p)) throw InputError("Cyclic constructor requires a prime");
    if (k == 0) throw InputError("Cyclic constructor requires a positive exponent");
    GroupExpr g;
    g.kind_ = GroupKind::Cyclic;
    g.p_ = p;
    g.k_ = k;
    return g;
}

GroupExpr GroupExpr::prufer(Prime p) {
    if (!is_prime(p)) throw InputError("Prufer constructor requires a prime");
    GroupExpr g;
    g.kind_ = GroupKind::Prufer;
    g.p_ = p;
    return g;
}

GroupExpr GroupExpr::rank_one(BaerType t) {
    GroupExpr g;
    g.kind_ = GroupKind::RankOne;
    g.t_ = std::move(t);
    return g;
}

GroupExpr GroupExpr::sum(std::vector<GroupExpr> parts) {
    GroupExpr g;
    g.kind_ = GroupKind::Sum;
    g.kids_ = std::move(parts);
    return g;
}

GroupExpr GroupExpr::free_product(std::vector<GroupExpr> parts) {
    GroupExpr g;
    g.kind_ = GroupKind::FreeProduct;
    g.kids_ = std::move(parts);
    return g;
}

GroupExpr GroupExpr::padic(Prime p) {
    if (!is_prime(p)) throw InputError("Padic constructor requires a prime");
    GroupExpr g;
    g.kind_ = GroupKind::Padic;
    g.p_ = p;
    return g;
}

GroupExpr GroupExpr::padic_field(Prime p) {
    if (!is_prime(p)) throw InputError("PadicField constructor requires a prime");
    GroupExpr g;
    g.kind_ = GroupKind::PadicField;
    g.p_ = p;
    return g;
}

GroupExpr GroupExpr::family_sum(PrimeSet ps, FamilyFactor f) {
    GroupExpr g;
    g.kind_ = GroupKind::FamilySum;
    g.pset_ = std::move(ps);
    g.factor_ = f;
    return g;
}

GroupExpr GroupExpr::formal_product(PrimeSet ps, FamilyFactor f) {
    GroupExpr g;
    g.kind_ = GroupKind::FormalProduct;
    g.pset_ = std::move(ps);
    g.factor_ = f;
    return g;
}

GroupExpr GroupExpr::formal_quotient(std::vector<GroupExpr> num_factors, GroupExpr den) {
    if (num_factors.empty()) throw InputError("formal quotient needs at least one numerator factor");
    GroupExpr g;
    g.kind_ = GroupKind::FormalQuotient;
    g.kids_.push_back(std::move(den));
    for (auto& f : num_factors) g.kids_.push_back(std::move(f));
    return g;
}

GroupExpr GroupExpr::formal_colimit(std::string tag, GroupExpr index, GroupExpr base) {
    GroupExpr g;
    g.kind_ = GroupKind::FormalColimit;
    g.tag_ = std::move(tag);
    g.kids_.push_back(std::move(index));
    g.kids_.push_back(std::move(base));
    return g;
}

std::vector<GroupExpr> GroupExpr::numerator() const {
    return std::vector<GroupExpr>(kids_.begin() + 1, kids_.end());
}

bool GroupExpr::is_primitive() const {
    switch (kind_) {
        case GroupKind::Trivial:
        case GroupKind::Int:
        case GroupKind::Cyclic:
        case GroupKind::Prufer:
        case GroupKind::RankOne:
            return true;
        default:
            return false;
    }
}

bool GroupExpr::is_extended() const {
    switch (kind_) {
        case GroupKind::Padic:
        case GroupKind::PadicField:
        case GroupKind::FamilySum:
        case GroupKind::FormalProduct:
        case GroupKind::FormalQuotient:
        case GroupKind::FormalColimit:
            return true;
        case GroupKind::Sum:
        case GroupKind::FreeProduct:
            for (auto& c : kids_)
                if (c.is_extended()) return true;
            return false;
        default:
            return false;
    }
}

bool GroupExpr::in_input_fragment() const {
    if (is_extended()) return false;
    if (kind_ == GroupKind::FreeProduct) {
        for (auto& c : kids_)
            if (!c.is_abelian_fragment()) return false;
        return true;
    }
    return is_abelian_fragment();
}

bool GroupExpr::is_abelian_fragment() const {
    if (is_primitive()) return true;
    if (kind_ != GroupKind::Sum) return false;
    for (auto& c : kids_)
        if (!c.is_abelian_fragment()) return false;
    return true;
}

std::vector<GroupExpr> GroupExpr::summands() const {
    if (kind_ == GroupKind::Sum) {
        std::vector<GroupExpr> out;
        for (auto& c : kids_) {
            auto sub = c.summands();
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    if (kind_ == GroupKind::Trivial) return {};
    return {*this};
}

namespace {

int kind_rank(GroupKind k) {
    switch (k) {
        case GroupKind::Trivial: return 0;
        case GroupKind::Int: return 1;
        case GroupKind::Cyclic: return 2;
        case GroupKind::Prufer: return 3;
        case GroupKind::RankOne: return 4;
        case GroupKind::Padic: return 5;
        case GroupKind::PadicField: return 6;
        case GroupKind::FamilySum: return 7;
        case GroupKind::FormalProduct: return 8;
        case GroupKind::FormalQuotient: return 9;
        case GroupKind::FormalColimit: return 10;
        case GroupKind::Sum: return 11;
        case GroupKind::FreeProduct: return 12;
    }
    return 13;
}

int cmp_u64(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_prime_set(const PrimeSet& a, const PrimeSet& b) {
    if (a.is_cofinite() != b.is_cofinite()) return a.is_cofinite() ? 1 : -1;
    auto ia = a.listed().begin(), ib = b.listed().begin();
    while (ia != a.listed().end() && ib != b.listed().end()) {
        if (*ia != *ib) return *ia < *ib ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.listed().end()) return 1;
    if (ib != b.listed().end()) return -1;
    return 0;
}

int cmp_factor(const FamilyFactor& a, const FamilyFactor& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    return cmp_u64(a.exp, b.exp);
}

std::string power_string(Prime p, std::uint32_t k) {
    BigInt v(1);
    BigInt bp = BigInt::from_uint64(p);
    for (std::uint32_t i = 0; i < k; ++i) v = v * bp;
    return v.to_string();
}

std::string factor_string(const FamilyFactor& f) {
    switch (f.kind) {
        case FamilyFactor::CyclicPow:
            return f.exp == 1 ? "Z/p" : "Z/p^" + std::to_string(f.exp);
        case FamilyFactor::PruferEach:
            return "Z(p^inf)";
        case FamilyFactor::PadicEach:
            return "Zhat(p)";
    }
    return "?";
}

}  // namespace

int GroupExpr::cmp(const GroupExpr& a, const GroupExpr& b) {
    int ra = kind_rank(a.kind_), rb = kind_rank(b.kind_);
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind_) {
        case GroupKind::Trivial:
        case GroupKind::Int:
            return 0;
        case GroupKind::Cyclic:
            if (int c = cmp_u64(a.p_, b.p_)) return c;
            return cmp_u64(a.k_, b.k_);
        case GroupKind::Prufer:
        case GroupKind::Padic:
        case GroupKind::PadicField:
            return cmp_u64(a.p_, b.p_);
        case GroupKind::RankOne:
            return BaerType::cmp(a.t_, b.t_);
        case GroupKind::FamilySum:
        case GroupKind::FormalProduct:
            if (int c = cmp_prime_set(a.pset_, b.pset_)) return c;
            return cmp_factor(a.factor_, b.factor_);
        case GroupKind::FormalColimit:
            if (int c = a.tag_.compare(b.tag_)) return c < 0 ? -1 : 1;
            [[fallthrough]];
        case GroupKind::FormalQuotient:
        case GroupKind::Sum:
        case GroupKind::FreeProduct: {
            size_t n = std::min(a.kids_.size(), b.kids_.size());
            for (size_t i = 0; i < n; ++i)
                if (int c = cmp(a.kids_[i], b.kids_[i])) return c;
            if (a.kids_.size() != b.kids_.size()) return a.kids_.size() < b.kids_.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

std::string GroupExpr::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case GroupKind::Trivial:
            return "0";
        case GroupKind::Int:
            return "Z";
        case GroupKind::Cyclic:
            return "Z/" + power_string(p_, k_);
        case GroupKind::Prufer:
            return "Z(" + std::to_string(p_) + "^inf)";
        case GroupKind::RankOne: {
            const BaerType& t = t_;
            if (t.is_all_inf()) return "Q";
            bool all_inf_exceptions = t.tail().is_zero();
            for (auto& [p, k] : t.exceptions())
                if (!k.is_inf()) all_inf_exceptions = false;
            if (all_inf_exceptions && !t.exceptions().empty()) {
                os << "Z[1/";
                bool first = true;
                for (auto& [p, k] : t.exceptions()) {
                    if (!first) os << ",";
                    os << p;
                    first = false;
                }
                os << "]";
                return os.str();
            }
            os << "type(" << t.tail().to_string();
            for (auto& [p, k] : t.exceptions()) os << "; " << p << ":" << k.to_string();
            os << ")";
            return os.str();
        }
        case GroupKind::Padic:
            return "Zhat(" + std::to_string(p_) + ")";
        case GroupKind::PadicField:
            return "Qhat(" + std::to_string(p_) + ")";
        case GroupKind::FamilySum:
            return "Sum_{p in " + pset_.to_string() + "} " + factor_string(factor_);
        case GroupKind::FormalProduct:
            return "Prod_{p in " + pset_.to_string() + "} " + factor_string(factor_);
        case GroupKind::FormalQuotient: {
            auto needs_parens = [](const GroupExpr& e) {
                switch (e.kind()) {
                    case GroupKind::FamilySum:
                    case GroupKind::FormalProduct:
                    case GroupKind::FormalQuotient:
                    case GroupKind::Sum:
                    case GroupKind::FreeProduct:
                        return true;
                    default:
                        return false;
                }
            };
            auto num = numerator();
            if (num.size() == 1) {
                if (needs_parens(num[0]))
                    os << "(" << num[0].to_string() << ")";
                else
                    os << num[0].to_string();
            } else {
                os << "(";
                for (size_t i = 0; i < num.size(); ++i) {
                    if (i) os << " x ";
                    os << num[i].to_string();
                }
                os << ")";
            }
            os << "/";
            if (needs_parens(denominator()))
                os << "(" << denominator().to_string() << ")";
            else
                os << denominator().to_string();
            return os.str();
        }
        case GroupKind::FormalColimit:
            return "colim[" + colimit_base().to_string() + " -> E_alpha : alpha in " +
                   colimit_index().to_string() + "]";
        case GroupKind::Sum: {
            bool first = true;
            for (auto& c : kids_) {
                if (!first) os << " + ";
                if (c.kind() == GroupKind::Sum || c.kind() == GroupKind::FreeProduct)
                    os << "(" << c.to_string() << ")";
                else
                    os << c.to_string();
                first = false;
            }
            return os.str();
        }
        case GroupKind::FreeProduct: {
            bool first = true;
            for (auto& c : kids_) {
                if (!first) os << " * ";
                if (c.kind() == GroupKind::FreeProduct)
                    os << "(" << c.to_string() << ")";
                else
                    os << c.to_string();
                first = false;
            }
            return os.str();
        }
    }
    return "?";
}

namespace {

// Cheap structural test for canonical form, so normalize can skip the rebuild
// on the (hot) already-normalized path.
bool in_normal_form(const GroupExpr& g) {
    switch (g.kind()) {
        case GroupKind::RankOne:
            return !g.baer_type().is_zero();
        case GroupKind::FamilySum:
        case GroupKind::FormalProduct:
            return !g.prime_set().empty();
        case GroupKind::FormalQuotient:
        case GroupKind::FormalColimit: {
            for (auto& c : g.children())
                if (!in_normal_form(c)) return false;
            return true;
        }
        case GroupKind::Sum: {
            if (g.children().size() < 2) return false;
            const GroupExpr* prev = nullptr;
            for (auto& c : g.children()) {
                if (c.kind() == GroupKind::Sum || c.kind() == GroupKind::FreeProduct ||
                    c.kind() == GroupKind::Trivial)
                    return false;
                if (!in_normal_form(c)) return false;
                if (prev && GroupExpr::cmp(*prev, c) > 0) return false;
                prev = &c;
            }
            return true;
        }
        case GroupKind::FreeProduct: {
            if (g.children().size() < 2) return false;
            const GroupExpr* prev = nullptr;
            for (auto& c : g.children()) {
                if (c.kind() == GroupKind::FreeProduct || c.kind() == GroupKind::Trivial)
                    return false;
                if (!in_normal_form(c)) return false;
                if (prev && GroupExpr::cmp(*prev, c) > 0) return false;
                prev = &c;
            }
            return true;
        }
        default:
            return true;
    }
}

}  // namespace

GroupExpr normalize(const GroupExpr& g) {
    if (in_normal_form(g)) return g;
    switch (g.kind()) {
        case GroupKind::Trivial:
        case GroupKind::Int:
        case GroupKind::Cyclic:
        case GroupKind::Prufer:
        case GroupKind::Padic:
        case GroupKind::PadicField:
            return g;
        case GroupKind::RankOne:
            if (g.baer_type().is_zero()) return GroupExpr::integers();
            return g;
        case GroupKind::FamilySum:
        case GroupKind::FormalProduct:
            if (g.prime_set().empty()) return GroupExpr::trivial();
            return g;
        case GroupKind::FormalQuotient: {
            std::vector<GroupExpr> num;
            for (auto& f : g.numerator()) num.push_back(normalize(f));
            return GroupExpr::formal_quotient(std::move(num), normalize(g.denominator()));
        }
        case GroupKind::FormalColimit:
            return GroupExpr::formal_colimit(g.tag(), normalize(g.colimit_index()),
                                             normalize(g.colimit_base()));
        case GroupKind::Sum: {
            std::vector<GroupExpr> parts;
            for (auto& c : g.children()) {
                GroupExpr n = normalize(c);
                if (n.kind() == GroupKind::Trivial) continue;
                if (n.kind() == GroupKind::FreeProduct)
                    throw UnsupportedConstructor("free product inside a direct sum");
                if (n.kind() == GroupKind::Sum)
                    for (auto& cc : n.children()) parts.push_back(cc);
                else
                    parts.push_back(std::move(n));
            }
            if (parts.empty()) return GroupExpr::trivial();
            std::sort(parts.begin(), parts.end(),
                      [](const GroupExpr& a, const GroupExpr& b) { return GroupExpr::cmp(a, b) < 0; });
            if (parts.size() == 1) return parts[0];
            return GroupExpr::sum(std::move(parts));
        }
        case GroupKind::FreeProduct: {
            std::vector<GroupExpr> parts;
            for (auto& c : g.children()) {
                GroupExpr n = normalize(c);
                if (n.kind() == GroupKind::Trivial) continue;
                if (n.kind() == GroupKind::FreeProduct)
                    for (auto& cc : n.children()) parts.push_back(cc);
                else
                    parts.push_back(std::move(n));
            }
            if (parts.empty()) return GroupExpr::trivial();
            std::sort(parts.begin(), parts.end(),
                      [](const GroupExpr& a, const GroupExpr& b) { return GroupExpr::cmp(a, b) < 0; });
            if (parts.size() == 1) return parts[0];
            return GroupExpr::free_product(std::move(parts));
        }
    }
    return g;
}

GroupExpr abelianize(const GroupExpr& g) {
    if (g.kind() == GroupKind::FreeProduct) {
        std::vector<GroupExpr> parts;
        for (auto& c : g.children()) parts.push_back(abelianize(c));
        return normalize(GroupExpr::sum(std::move(parts)));
    }
    return normalize(g);
}

}  // namespace mcell
