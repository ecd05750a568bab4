#include "mcell/space.hpp"

#include <cctype>
#include <sstream>

#include "mcell/classify.hpp"
#include "mcell/errors.hpp"
#include "mcell/homalg.hpp"
#include "mcell/parse.hpp"

namespace mcell {

SpaceDesc SpaceDesc::sphere(unsigned n) {
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    SpaceDesc s;
    s.kind_ = SpaceKind::Sphere;
    s.degree_ = n;
    return s;
}

SpaceDesc SpaceDesc::em(GroupExpr a, unsigned n) {
    if (n < 1) throw InputError("Eilenberg-Mac Lane degree must be at least 1");
    if (n >= 2 && a.kind() == GroupKind::FreeProduct)
        throw InputError("K(A,n) needs an abelian group for n >= 2");
    SpaceDesc s;
    s.kind_ = SpaceKind::EM;
    s.degree_ = n;
    s.group_ = std::move(a);
    return s;
}

SpaceDesc SpaceDesc::moore(GroupExpr g, unsigned n) {
    if (n < 1) throw InputError("Moore degree must be at least 1");
    if (n >= 2 && g.kind() == GroupKind::FreeProduct)
        throw InputError("M(G,n) needs an abelian group for n >= 2");
    SpaceDesc s;
    s.kind_ = SpaceKind::MooreSpace;
    s.degree_ = n;
    s.group_ = std::move(g);
    return s;
}

SpaceDesc SpaceDesc::generic(GroupExpr pi1, bool simply_connected, bool nilpotent,
                             std::optional<std::vector<GroupExpr>> homology,
                             std::optional<GroupExpr> pi2) {
    if (simply_connected && normalize(pi1) != GroupExpr::trivial())
        throw InputError("simply connected spaces have trivial fundamental group");
    if (homology.has_value() && !homology->empty()) {
        GroupExpr h1 = abelianize(pi1);
        if (normalize((*homology)[0]) != h1)
            throw InputError("H_1 must be the abelianization of pi1");
    }
    if (homology.has_value() && homology->empty() && normalize(pi1) != GroupExpr::trivial())
        throw InputError("H_1 must be the abelianization of pi1");
    SpaceDesc s;
    s.kind_ = SpaceKind::Generic;
    s.group_ = normalize(pi1);
    s.sc_ = simply_connected;
    s.nilpotent_ = nilpotent;
    if (homology) {
        std::vector<GroupExpr> h;
        for (auto& e : *homology) h.push_back(normalize(e));
        s.homology_ = std::move(h);
    }
    if (pi2) s.pi2_ = normalize(*pi2);
    return s;
}

SpaceDesc SpaceDesc::product(std::vector<SpaceDesc> factors) {
    SpaceDesc s;
    s.kind_ = SpaceKind::Product;
    s.factors_ = std::move(factors);
    return s;
}

SpaceDesc SpaceDesc::formal_fiber(SpaceDesc source, SpaceDesc target) {
    SpaceDesc s;
    s.kind_ = SpaceKind::FormalFiber;
    s.factors_.push_back(std::move(source));
    s.factors_.push_back(std::move(target));
    return s;
}

SpaceDesc SpaceDesc::completion_product(PrimeSet over, SpaceDesc base) {
    SpaceDesc s;
    s.kind_ = SpaceKind::CompletionProduct;
    s.pset_ = std::move(over);
    s.factors_.push_back(std::move(base));
    return s;
}

namespace {

int cmp_prime_sets(const PrimeSet& a, const PrimeSet& b) {
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

}  // namespace

int SpaceDesc::cmp(const SpaceDesc& a, const SpaceDesc& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    if (int c = GroupExpr::cmp(a.group_, b.group_)) return c;
    if (a.sc_ != b.sc_) return a.sc_ ? 1 : -1;
    if (a.nilpotent_ != b.nilpotent_) return a.nilpotent_ ? 1 : -1;
    auto cmp_opt_group = [](const std::optional<GroupExpr>& x, const std::optional<GroupExpr>& y) {
        if (x.has_value() != y.has_value()) return x.has_value() ? 1 : -1;
        if (!x) return 0;
        return GroupExpr::cmp(*x, *y);
    };
    if (int c = cmp_opt_group(a.pi2_, b.pi2_)) return c;
    if (a.homology_.has_value() != b.homology_.has_value())
        return a.homology_.has_value() ? 1 : -1;
    if (a.homology_) {
        size_t n = std::min(a.homology_->size(), b.homology_->size());
        for (size_t i = 0; i < n; ++i)
            if (int c = GroupExpr::cmp((*a.homology_)[i], (*b.homology_)[i])) return c;
        if (a.homology_->size() != b.homology_->size())
            return a.homology_->size() < b.homology_->size() ? -1 : 1;
    }
    size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (size_t i = 0; i < n; ++i)
        if (int c = cmp(a.factors_[i], b.factors_[i])) return c;
    if (a.factors_.size() != b.factors_.size()) return a.factors_.size() < b.factors_.size() ? -1 : 1;
    return cmp_prime_sets(a.pset_, b.pset_);
}

std::string SpaceDesc::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case SpaceKind::Point:
            return "pt";
        case SpaceKind::Sphere:
            return "S^" + std::to_string(degree_);
        case SpaceKind::EM:
            return "K(" + group_.to_string() + "," + std::to_string(degree_) + ")";
        case SpaceKind::MooreSpace:
            return "M(" + group_.to_string() + "," + std::to_string(degree_) + ")";
        case SpaceKind::Generic: {
            os << "space{pi1=" << group_.to_string();
            if (homology_) {
                os << "; H=[";
                for (size_t i = 0; i < homology_->size(); ++i) {
                    if (i) os << ",";
                    os << (*homology_)[i].to_string();
                }
                os << "]";
            }
            os << "; sc=" << (sc_ ? "true" : "false");
            os << "; nilp=" << (nilpotent_ ? "true" : "false");
            if (pi2_) os << "; pi2=" << pi2_->to_string();
            os << "}";
            return os.str();
        }
        case SpaceKind::Product: {
            for (size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << " x ";
                os << factors_[i].to_string();
            }
            return os.str();
        }
        case SpaceKind::FormalFiber:
            return "Fib(" + factors_[0].to_string() + " -> " + factors_[1].to_string() + ")";
        case SpaceKind::CompletionProduct:
            return "Prod_{p in " + pset_.to_string() + "} hat(" + factors_[0].to_string() + ")_p";
    }
    return "?";
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Substring up to the next top-level occurrence of one of the stop characters
// (brackets tracked), consumed exclusive of the stop character.
std::string scan_until(const std::string& s, size_t& i, const std::string& stops) {
    int depth = 0;
    size_t start = i;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') {
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            --depth;
            if (depth < 0) throw ParseError("unbalanced brackets", i);
            continue;
        }
        if (depth == 0 && stops.find(c) != std::string::npos) break;
    }
    return s.substr(start, i - start);
}

unsigned parse_degree(const std::string& text, size_t at) {
    size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a degree", at);
    unsigned long v = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1u << 20) throw ParseError("degree too large", at);
    }
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("unexpected trailing input in degree", at + i);
    return static_cast<unsigned>(v);
}

bool parse_bool(const std::string& raw, size_t at) {
    size_t i = 0;
    skip_ws(raw, i);
    size_t j = raw.size();
    while (j > i && std::isspace(static_cast<unsigned char>(raw[j - 1]))) --j;
    std::string v = raw.substr(i, j - i);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("expected true or false", at);
}

}  // namespace

SpaceDesc parse_space(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    auto rest_empty = [&](size_t j) {
        skip_ws(text, j);
        return j == text.size();
    };

    if (text.compare(i, 2, "pt") == 0 && rest_empty(i + 2)) return SpaceDesc::point();
    if (text.compare(i, 2, "S^") == 0) {
        return SpaceDesc::sphere(parse_degree(text.substr(i + 2), i + 2));
    }
    if (text[i] == 'K' || text[i] == 'M') {
        char kind = text[i];
        size_t j = i + 1;
        skip_ws(text, j);
        if (j >= text.size() || text[j] != '(') throw ParseError("expected '('", j);
        ++j;
        std::string group_text = scan_until(text, j, ",");
        if (j >= text.size()) throw ParseError("expected ','", j);
        ++j;
        std::string degree_text = scan_until(text, j, ")");
        if (j >= text.size()) throw ParseError("expected ')'", j);
        ++j;
        if (!rest_empty(j)) throw ParseError("unexpected trailing input", j);
        GroupExpr g = parse_group(group_text);
        unsigned n = parse_degree(degree_text, i);
        return kind == 'K' ? SpaceDesc::em(std::move(g), n) : SpaceDesc::moore(std::move(g), n);
    }
    if (text.compare(i, 5, "space") == 0) {
        size_t j = i + 5;
        skip_ws(text, j);
        if (j >= text.size() || text[j] != '{') throw ParseError("expected '{'", j);
        ++j;
        std::optional<GroupExpr> pi1;
        bool sc = false, nilp = false;
        std::optional<std::vector<GroupExpr>> homology;
        std::optional<GroupExpr> pi2;
        for (;;) {
            skip_ws(text, j);
            if (j < text.size() && text[j] == '}') {
                ++j;
                break;
            }
            std::string field = scan_until(text, j, ";}");
            bool last = j < text.size() && text[j] == '}';
            if (j >= text.size()) throw ParseError("expected '}'", j);
            ++j;
            size_t eq = field.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value", i + eq);
            std::string key = field.substr(0, eq), value = field.substr(eq + 1);
            size_t k0 = 0;
            skip_ws(key, k0);
            size_t k1 = key.size();
            while (k1 > k0 && std::isspace(static_cast<unsigned char>(key[k1 - 1]))) --k1;
            key = key.substr(k0, k1 - k0);
            if (key == "pi1") {
                pi1 = parse_group(value);
            } else if (key == "sc") {
                sc = parse_bool(value, j);
            } else if (key == "nilp") {
                nilp = parse_bool(value, j);
            } else if (key == "pi2") {
                pi2 = parse_group(value);
            } else if (key == "H") {
                size_t v = 0;
                skip_ws(value, v);
                if (v >= value.size() || value[v] != '[') throw ParseError("expected '['", j);
                ++v;
                std::vector<GroupExpr> hs;
                skip_ws(value, v);
                if (v < value.size() && value[v] == ']') {
                    ++v;
                } else {
                    for (;;) {
                        std::string entry = scan_until(value, v, ",]");
                        hs.push_back(parse_group(entry));
                        if (v >= value.size()) throw ParseError("expected ']'", j);
                        if (value[v] == ']') {
                            ++v;
                            break;
                        }
                        ++v;
                    }
                }
                skip_ws(value, v);
                if (v != value.size()) throw ParseError("unexpected trailing input after ']'", j);
                homology = std::move(hs);
            } else {
                throw ParseError("unknown space field '" + key + "'", i);
            }
            if (last) break;
        }
        if (!rest_empty(j)) throw ParseError("unexpected trailing input", j);
        if (!pi1) {
            if (!sc) throw ParseError("space{} needs pi1 (or sc=true)", i);
            pi1 = GroupExpr::trivial();
        }
        return SpaceDesc::generic(std::move(*pi1), sc, nilp, std::move(homology), std::move(pi2));
    }
    throw ParseError("expected a space descriptor", i);
}

std::optional<GroupExpr> fundamental_group(const SpaceDesc& x) {
    switch (x.kind()) {
        case SpaceKind::Point:
            return GroupExpr::trivial();
        case SpaceKind::Sphere:
            return x.degree() == 1 ? GroupExpr::integers() : GroupExpr::trivial();
        case SpaceKind::EM:
        case SpaceKind::MooreSpace:
            return x.degree() == 1 ? normalize(x.group()) : GroupExpr::trivial();
        case SpaceKind::Generic:
            return x.sc_flag() ? GroupExpr::trivial() : normalize(x.pi1_field());
        case SpaceKind::Product: {
            std::vector<GroupExpr> parts;
            for (auto& f : x.factors()) {
                auto pi = fundamental_group(f);
                if (!pi) return std::nullopt;
                if (pi->kind() == GroupKind::FreeProduct) return std::nullopt;  // not a fragment product
                parts.push_back(std::move(*pi));
            }
            return normalize(GroupExpr::sum(std::move(parts)));
        }
        default:
            return std::nullopt;
    }
}

std::optional<GroupExpr> second_homotopy(const SpaceDesc& x) {
    switch (x.kind()) {
        case SpaceKind::Point:
            return GroupExpr::trivial();
        case SpaceKind::Sphere:
            return x.degree() == 2 ? GroupExpr::integers() : GroupExpr::trivial();
        case SpaceKind::EM:
            return x.degree() == 2 ? normalize(x.group()) : GroupExpr::trivial();
        case SpaceKind::MooreSpace:
            if (x.degree() == 2) return normalize(x.group());  // Hurewicz
            if (x.degree() >= 3) return GroupExpr::trivial();
            return std::nullopt;  // M(G,1) has undetermined pi_2
        case SpaceKind::Generic:
            return x.pi2_field();
        case SpaceKind::Product: {
            std::vector<GroupExpr> parts;
            for (auto& f : x.factors()) {
                auto pi = second_homotopy(f);
                if (!pi) return std::nullopt;
                parts.push_back(std::move(*pi));
            }
            return normalize(GroupExpr::sum(std::move(parts)));
        }
        default:
            return std::nullopt;
    }
}

namespace {

// H_2 K(A,1) for abelian fragment A: the exterior square, which is the sum of
// the pairwise tensor products of distinct canonical summands (primitives have
// vanishing exterior square in this fragment).
std::optional<GroupExpr> h2_of_k_a_1(const GroupExpr& a) {
    if (a.kind() == GroupKind::FreeProduct) {
        // K(A*B,1) = K(A,1) v K(B,1): H_2 is the sum of the factors' H_2
        std::vector<GroupExpr> parts;
        for (auto& f : a.children()) {
            auto h = h2_of_k_a_1(normalize(f));
            if (!h) return std::nullopt;
            parts.push_back(std::move(*h));
        }
        return normalize(GroupExpr::sum(std::move(parts)));
    }
    auto parts = normalize(a).summands();
    std::vector<GroupExpr> pieces;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            BifValue t = bifunctor(BifunctorKind::Tensor, parts[i], parts[j]);
            if (!t.supported()) return std::nullopt;
            pieces.push_back(t.get());
        }
    return normalize(GroupExpr::sum(std::move(pieces)));
}

}  // namespace

std::optional<GroupExpr> second_homology(const SpaceDesc& x) {
    switch (x.kind()) {
        case SpaceKind::Point:
            return GroupExpr::trivial();
        case SpaceKind::Sphere:
            return x.degree() == 2 ? GroupExpr::integers() : GroupExpr::trivial();
        case SpaceKind::EM:
            if (x.degree() == 1) return h2_of_k_a_1(x.group());
            return x.degree() == 2 ? normalize(x.group()) : GroupExpr::trivial();
        case SpaceKind::MooreSpace:
            if (x.degree() == 1) return GroupExpr::trivial();  // defining property
            return x.degree() == 2 ? normalize(x.group()) : GroupExpr::trivial();
        case SpaceKind::Generic:
            if (x.homology_field()) {
                const auto& h = *x.homology_field();
                return h.size() >= 2 ? h[1] : GroupExpr::trivial();
            }
            return std::nullopt;
        case SpaceKind::Product: {
            // Kunneth: H2(X x Y) = H2 X + H2 Y + H1 X (x) H1 Y
            std::vector<GroupExpr> parts;
            std::vector<GroupExpr> h1s;
            for (auto& f : x.factors()) {
                auto h2 = second_homology(f);
                auto pi = fundamental_group(f);
                if (!h2 || !pi) return std::nullopt;
                parts.push_back(std::move(*h2));
                h1s.push_back(abelianize(*pi));
            }
            for (size_t i = 0; i < h1s.size(); ++i)
                for (size_t j = i + 1; j < h1s.size(); ++j) {
                    BifValue t = bifunctor(BifunctorKind::Tensor, h1s[i], h1s[j]);
                    if (!t.supported()) return std::nullopt;
                    parts.push_back(t.get());
                }
            return normalize(GroupExpr::sum(std::move(parts)));
        }
        default:
            return std::nullopt;
    }
}

bool known_simply_connected(const SpaceDesc& x) {
    auto pi = fundamental_group(x);
    return pi.has_value() && *pi == GroupExpr::trivial();
}

bool known_nilpotent(const SpaceDesc& x) {
    switch (x.kind()) {
        case SpaceKind::Point:
        case SpaceKind::Sphere:
            return true;
        case SpaceKind::EM:
            // abelian K(A,n) is nilpotent; K(N,1) for a free product is not
            return x.group().kind() != GroupKind::FreeProduct;
        case SpaceKind::MooreSpace:
            return x.degree() >= 2;
        case SpaceKind::Generic:
            return x.nilpotent_flag() || x.sc_flag();
        case SpaceKind::Product: {
            for (auto& f : x.factors())
                if (!known_nilpotent(f)) return false;
            return true;
        }
        default:
            return false;
    }
}

}  // namespace mcell
