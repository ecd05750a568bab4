#include "mcell/parse.hpp"

#include <cctype>

#include "mcell/errors.hpp"

namespace mcell {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s_.compare(pos_, kw.size(), kw) == 0) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a number", pos_);
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) throw ParseError("number too large", pos_);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Prime parse_prime() {
        skip_ws();
        std::size_t at = pos_;
        std::uint64_t v = parse_nat();
        if (!is_prime(v)) throw ParseError("expected a prime", at);
        return v;
    }

    ExtNat parse_exp() {
        skip_ws();
        if (try_keyword("inf")) return ExtNat::inf();
        std::size_t at = pos_;
        std::uint64_t v = parse_nat();
        if (v > 0xFFFFFFFEull) throw ParseError("exponent too large", at);
        return ExtNat::fin(static_cast<std::uint32_t>(v));
    }

    std::size_t position() { return pos_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

GroupExpr parse_free_product(Cursor& c);

GroupExpr parse_atom(Cursor& c) {
    c.skip_ws();
    if (c.try_consume('(')) {
        GroupExpr g = parse_free_product(c);
        c.expect(')');
        return g;
    }
    if (c.try_consume('0')) return GroupExpr::trivial();
    if (c.try_keyword("Q")) return GroupExpr::rank_one(BaerType::all_inf());
    if (c.try_keyword("type")) {
        c.expect('(');
        ExtNat tail = c.parse_exp();
        std::map<Prime, ExtNat> ex;
        while (c.try_consume(';')) {
            std::size_t at = c.position();
            Prime p = c.parse_prime();
            if (ex.count(p)) throw ParseError("duplicate prime in type", at);
            c.expect(':');
            ex.emplace(p, c.parse_exp());
        }
        c.expect(')');
        return GroupExpr::rank_one(BaerType(tail, std::move(ex)));
    }
    if (c.try_keyword("Z")) {
        if (c.try_consume('/')) {
            std::size_t at = c.position();
            std::uint64_t n = c.parse_nat();
            if (n == 0) throw ParseError("invalid order Z/0", at);
            if (n == 1) return GroupExpr::trivial();
            std::vector<GroupExpr> parts;
            for (auto& [p, e] : factorize(n)) parts.push_back(GroupExpr::cyclic(p, e));
            if (parts.size() == 1) return parts[0];
            return GroupExpr::sum(std::move(parts));
        }
        if (c.try_consume('(')) {
            Prime p = c.parse_prime();
            c.expect('^');
            if (!c.try_keyword("inf")) throw ParseError("expected 'inf'", c.position());
            c.expect(')');
            return GroupExpr::prufer(p);
        }
        if (c.try_consume('[')) {
            c.expect('1');
            c.expect('/');
            std::set<Prime> ps;
            std::size_t at = c.position();
            ps.insert(c.parse_prime());
            while (c.try_consume(',')) {
                at = c.position();
                Prime p = c.parse_prime();
                if (ps.count(p)) throw ParseError("duplicate inverted prime", at);
                ps.insert(p);
            }
            c.expect(']');
            return GroupExpr::rank_one(BaerType::inverted(ps));
        }
        return GroupExpr::integers();
    }
    throw ParseError("expected a group expression", c.position());
}

GroupExpr parse_sum(Cursor& c) {
    std::vector<GroupExpr> parts;
    parts.push_back(parse_atom(c));
    while (c.try_consume('+')) parts.push_back(parse_atom(c));
    if (parts.size() == 1) return parts[0];
    return GroupExpr::sum(std::move(parts));
}

GroupExpr parse_free_product(Cursor& c) {
    std::vector<GroupExpr> parts;
    parts.push_back(parse_sum(c));
    while (c.try_consume('*')) parts.push_back(parse_sum(c));
    if (parts.size() == 1) return parts[0];
    return GroupExpr::free_product(std::move(parts));
}

bool contains_free_product(const GroupExpr& g) {
    if (g.kind() == GroupKind::FreeProduct) return true;
    for (auto& ch : g.children())
        if (contains_free_product(ch)) return true;
    return false;
}

// Free products may nest among themselves (associativity) but never under a sum.
bool sum_over_free_product(const GroupExpr& g) {
    if (g.kind() == GroupKind::Sum) {
        for (auto& ch : g.children())
            if (contains_free_product(ch)) return true;
    }
    for (auto& ch : g.children())
        if (sum_over_free_product(ch)) return true;
    return false;
}

}  // namespace

GroupExpr parse_group(const std::string& text) {
    Cursor c(text);
    GroupExpr g = parse_free_product(c);
    if (!c.eof()) throw ParseError("unexpected trailing input", c.position());
    if (sum_over_free_product(g))
        throw ParseError("free product must appear only at the outermost level", 0);
    return g;
}

}  // namespace mcell
