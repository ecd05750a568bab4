#include "mcell/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcell/cellularity.hpp"
#include "mcell/classify.hpp"
#include "mcell/coeffs.hpp"
#include "mcell/errors.hpp"
#include "mcell/homalg.hpp"
#include "mcell/moore.hpp"
#include "mcell/oracle.hpp"
#include "mcell/parse.hpp"
#include "mcell/radical.hpp"
#include "mcell/space.hpp"
#include "mcell/sweep.hpp"
#include "mcell/telescope.hpp"

namespace mcell {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    bool strict_known = false;
    unsigned prefix_length = 6;
    std::uint64_t oracle_bound = oracle::kDefaultJointBound;
};

json verdict_json(const Verdict& v) {
    json j;
    j["answer"] = answer_name(v.answer);
    j["witnesses"] = json::array();
    for (auto& [name, value] : v.witnesses)
        j["witnesses"].push_back({{"name", name}, {"value", value}});
    j["trail"] = json::array();
    for (auto& e : v.trail)
        j["trail"].push_back(
            {{"rule", e.rule}, {"citation", e.citation}, {"statement", e.statement}});
    return j;
}

void render_verdict(std::ostream& os, const std::string& title, const Verdict& v) {
    os << title << ": " << answer_name(v.answer) << "\n";
    for (auto& [name, value] : v.witnesses) os << "  " << name << ": " << value << "\n";
    if (!v.trail.empty()) {
        os << "citations:\n";
        for (auto& e : v.trail) os << "  - [" << e.citation << "] " << e.statement << "\n";
    }
}

struct Outcome {
    std::string status = "ok";  // ok | input-error | unsupported
    json payload;
    std::string text;
    std::string error;
};

int exit_code_of(const Outcome& o, const Options& opt, bool unknown_answer) {
    if (o.status == "input-error") return 2;
    if (o.status == "unsupported") return 3;
    if (opt.strict_known && unknown_answer) return 3;
    return 0;
}

// ---- command handlers ---------------------------------------------------

Outcome cmd_analyze(const Options&, const std::string& group_text) {
    Outcome out;
    GroupExpr g = parse_group(group_text);
    GroupExpr gn = normalize(g);
    CoeffSystem c = derive_coeffs(g);
    Verdict moore = exists_moore(g);
    MooreModelResult model = moore.yes() ? moore_model(g) : MooreModelResult{};

    out.payload["group"] = gn.to_string();
    out.payload["G_ab"] = abelianize(g).to_string();
    out.payload["J"] = c.j.to_string();
    out.payload["Jprime"] = c.jprime.to_string();
    out.payload["H"] = c.h.to_string();
    out.payload["R"] = c.r.to_string();
    out.payload["moore"] = verdict_json(moore);
    if (model.constructible())
        out.payload["model"] = model.model->to_string();
    else if (moore.yes())
        out.payload["no_recipe"] = model.no_recipe_reason;

    std::ostringstream os;
    os << "group: " << gn.to_string() << "\n";
    os << "G_ab: " << abelianize(g).to_string() << "\n";
    os << "J: " << c.j.to_string() << "\n";
    os << "J': " << c.jprime.to_string() << "\n";
    os << "H: " << c.h.to_string() << "\n";
    os << "R: " << c.r.to_string() << "\n";
    render_verdict(os, "Moore space", moore);
    if (model.constructible()) os << "model: " << model.model->to_string() << "\n";
    else if (moore.yes()) os << "model: none known (" << model.no_recipe_reason << ")\n";
    out.text = os.str();
    return out;
}

json matrix_json(const oracle::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

Outcome cmd_moore(const Options& opt, const std::string& group_text, bool check_presentation) {
    Outcome out;
    GroupExpr g = parse_group(group_text);
    Verdict exists = exists_moore(g);
    out.payload["group"] = normalize(g).to_string();
    out.payload["exists"] = verdict_json(exists);

    std::ostringstream os;
    os << "group: " << normalize(g).to_string() << "\n";
    render_verdict(os, "Moore space", exists);

    if (exists.yes()) {
        MooreModelResult model = moore_model(g);
        if (!model.constructible()) {
            out.payload["no_recipe"] = model.no_recipe_reason;
            os << "model: none known (" << model.no_recipe_reason << ")\n";
        } else {
            const MooreModel& m = *model.model;
            out.payload["model"] = m.to_string();
            os << "model: " << m.to_string() << "\n";
            if (m.recipe == MooreModel::Telescope || m.recipe == MooreModel::CofiberOfUnit) {
                TelescopePrefix pre = telescope_prefix(m.type, opt.prefix_length);
                json tj;
                tj["multipliers"] = json::array();
                for (Prime p : pre.multipliers) tj["multipliers"].push_back(p);
                tj["m_sequence"] = json::array();
                for (auto& v : pre.m_sequence) tj["m_sequence"].push_back(v.to_string());
                tj["exhausted"] = pre.exhausted;
                tj["display"] = pre.to_string();
                out.payload["telescope"] = tj;
                os << "telescope: " << pre.to_string() << "\n";
                if (m.recipe == MooreModel::CofiberOfUnit)
                    os << "cofiber: collapse the unit circle of M("
                       << normalize(GroupExpr::rank_one(m.type)).to_string() << ",1)\n";
            }
            if (check_presentation &&
                (m.recipe == MooreModel::Telescope || m.recipe == MooreModel::ClassicalCyclic)) {
                std::size_t n = m.recipe == MooreModel::ClassicalCyclic ? 1 : opt.prefix_length;
                CheckReport rep = presentation_check(m, n);
                json pj;
                pj["truncation"] = n;
                pj["matrix"] = matrix_json(rep.matrix);
                pj["rank"] = rep.rank;
                pj["injective"] = rep.injective;
                pj["divisors"] = rep.divisors;
                out.payload["presentation"] = pj;
                os << "presentation (n=" << n << "): "
                   << (rep.injective ? "injective" : "NOT injective") << ", rank " << rep.rank
                   << "\n";
                for (std::size_t i = 0; i < rep.matrix.rows(); ++i) {
                    os << "  [";
                    for (std::size_t j = 0; j < rep.matrix.cols(); ++j)
                        os << (j ? ", " : "") << rep.matrix.at(i, j).to_string();
                    os << "]\n";
                }
            } else if (check_presentation) {
                out.payload["presentation"] = "unsupported for this recipe";
                os << "presentation: unsupported for this recipe\n";
            }
        }
    }
    out.text = os.str();
    return out;
}

Outcome cmd_bifunctor(const Options&, const std::string& kind_name, const std::string& lhs,
                      const std::string& rhs) {
    Outcome out;
    BifunctorKind kind = kind_name == "hom"      ? BifunctorKind::Hom
                         : kind_name == "tensor" ? BifunctorKind::Tensor
                         : kind_name == "tor"    ? BifunctorKind::Tor
                                                 : BifunctorKind::Ext;
    GroupExpr a = parse_group(lhs), b = parse_group(rhs);
    BifValue v = bifunctor(kind, a, b);
    out.payload["kind"] = kind_name;
    out.payload["lhs"] = normalize(a).to_string();
    out.payload["rhs"] = normalize(b).to_string();
    std::ostringstream os;
    if (v.supported()) {
        out.payload["result"] = v.get().to_string();
        json rules = json::array();
        for (auto& id : v.rules) {
            const RuleInfo* r = find_rule(id);
            rules.push_back({{"id", id},
                             {"status", r && r->oracle_verified ? "oracle" : "note"},
                             {"provenance", r ? r->provenance : ""}});
        }
        out.payload["rules"] = rules;
        os << kind_name << "(" << normalize(a).to_string() << ", " << normalize(b).to_string()
           << ") = " << v.get().to_string() << "\n";
        os << "rules:\n";
        for (auto& id : v.rules) {
            const RuleInfo* r = find_rule(id);
            os << "  - " << id;
            if (r) os << " [" << (r->oracle_verified ? "oracle" : "note") << "] " << r->provenance;
            os << "\n";
        }
    } else {
        out.status = "unsupported";
        out.payload["unsupported"] = v.unsupported_reason;
        os << kind_name << "(" << normalize(a).to_string() << ", " << normalize(b).to_string()
           << ") = unsupported\n  " << v.unsupported_reason << "\n";
    }
    out.text = os.str();
    return out;
}

Outcome cmd_radical(const Options&, const std::string& gs, const std::string& ns) {
    Outcome out;
    GroupExpr g = parse_group(gs), n = parse_group(ns);
    RadicalResult r = radical(g, n);
    Verdict v = is_radical(g, n);
    out.payload["G"] = abelianize(g).to_string();
    out.payload["N"] = normalize(n).to_string();
    std::ostringstream os;
    os << "G: " << abelianize(g).to_string() << "\n";
    os << "N: " << normalize(n).to_string() << "\n";
    if (!r.supported) {
        out.status = "unsupported";
        out.payload["unsupported"] = r.unsupported_reason;
        os << "radical: unsupported\n  " << r.unsupported_reason << "\n";
    } else {
        out.payload["radical"] = r.radical_subgroup.to_string();
        out.payload["reduction"] = r.reduction.to_string();
        out.payload["stages"] = r.stages;
        out.payload["is_radical"] = verdict_json(v);
        os << "radical T_G(N): " << r.radical_subgroup.to_string() << "\n";
        os << "reduction N/T_G(N): " << r.reduction.to_string() << "\n";
        os << "stages: " << r.stages << "\n";
        render_verdict(os, "N is G-radical", v);
    }
    out.text = os.str();
    return out;
}

Outcome cmd_quasiradical(const Options&, const std::string& gs, const std::string& as) {
    Outcome out;
    GroupExpr g = parse_group(gs), a = parse_group(as);
    UniversalExtension ue = universal_extension(g, a);
    std::ostringstream os;
    out.payload["G_ab"] = ue.gab.to_string();
    out.payload["A"] = ue.base.to_string();
    out.payload["h_radical"] = verdict_json(ue.h_radical);
    if (ue.index_supported) {
        out.payload["index"] = ue.index.to_string();
        out.payload["total"] = ue.total.to_string();
    } else {
        out.payload["index_unsupported"] = ue.index_unsupported_reason;
    }
    if (!ue.notes.empty()) out.payload["notes"] = ue.notes;

    os << "G_ab: " << ue.gab.to_string() << "\n";
    os << "A: " << ue.base.to_string() << "\n";
    if (ue.h_radical.no()) {
        std::string msg = "precondition violation: A is not H-radical";
        if (ue.h_failing_prime) msg += " (failing prime " + std::to_string(*ue.h_failing_prime) + ")";
        out.status = "input-error";
        out.error = msg;
        os << msg << "\n";
        out.text = os.str();
        return out;
    }
    if (ue.index_supported) {
        os << "index Ext(G_ab, A): " << ue.index.to_string() << "\n";
        os << "universal extension E: " << ue.total.to_string() << "\n";
    } else {
        os << "index Ext(G_ab, A): unsupported (" << ue.index_unsupported_reason << ")\n";
    }
    for (auto& note : ue.notes) os << "note: " << note << "\n";
    Verdict q = is_quasi_radical(g, a);
    out.payload["quasi_radical"] = verdict_json(q);
    render_verdict(os, "A is quasi G-radical", q);
    out.text = os.str();
    return out;
}

MooreModel require_model(const std::string& gs) {
    GroupExpr g = parse_group(gs);
    MooreModelResult r = moore_model(g);  // throws when no Moore space exists
    if (!r.constructible())
        throw InputError("no constructible two-dimensional model for " + normalize(g).to_string() +
                         ": " + r.no_recipe_reason);
    return *r.model;
}

Outcome cmd_cellular(const Options&, const std::string& gs, const std::string& xs) {
    Outcome out;
    MooreModel m = require_model(gs);
    SpaceDesc x = parse_space(xs);
    // Moore targets go through the sharper Moore-on-Moore rules
    Verdict v = (x.kind() == SpaceKind::MooreSpace && x.degree() == 1)
                    ? moore_on_moore(m, x.group())
                    : is_cellular(m, x);
    out.payload["moore_group"] = normalize(m.group).to_string();
    out.payload["model"] = m.to_string();
    out.payload["space"] = x.to_string();
    out.payload["cellular"] = verdict_json(v);
    std::ostringstream os;
    os << "M: M(" << normalize(m.group).to_string() << ",1) = " << m.to_string() << "\n";
    os << "X: " << x.to_string() << "\n";
    render_verdict(os, "X is M-cellular", v);
    out.text = os.str();
    return out;
}

Outcome cmd_cw(const Options&, const std::string& gs, const std::string& xs) {
    Outcome out;
    MooreModel m = require_model(gs);
    SpaceDesc x = parse_space(xs);
    CwResult r = cw(m, x);
    out.payload["moore_group"] = normalize(m.group).to_string();
    out.payload["model"] = m.to_string();
    out.payload["space"] = x.to_string();
    std::ostringstream os;
    os << "M: M(" << normalize(m.group).to_string() << ",1) = " << m.to_string() << "\n";
    os << "X: " << x.to_string() << "\n";
    if (r.space.has_value()) {
        out.payload["cw"] = r.space->to_string();
        out.payload["context"] = verdict_json(r.context);
        os << "CW_M X: " << r.space->to_string() << "\n";
        if (!r.context.witnesses.empty() || !r.context.trail.empty()) {
            for (auto& [name, value] : r.context.witnesses)
                os << "  " << name << ": " << value << "\n";
            os << "citations:\n";
            for (auto& e : r.context.trail)
                os << "  - [" << e.citation << "] " << e.statement << "\n";
        }
    } else {
        out.status = "unsupported";
        out.payload["cw"] = nullptr;
        out.payload["context"] = verdict_json(r.context);
        os << "CW_M X: unknown\n";
        for (auto& [name, value] : r.context.witnesses)
            os << "  " << name << ": " << value << "\n";
    }
    out.text = os.str();
    return out;
}

std::map<Prime, ExtNat> parse_bounds(const std::string& text) {
    std::map<Prime, ExtNat> bounds;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("bounds format: p:k,(q:inf)...");
        Prime p = std::stoull(item.substr(0, colon));
        if (!is_prime(p)) throw InputError("bounds primes must be prime");
        std::string val = item.substr(colon + 1);
        bounds[p] = val == "inf" ? ExtNat::inf() : ExtNat::fin(std::stoul(val));
    }
    return bounds;
}

Outcome cmd_oracle(const Options& opt, const std::string& op, const std::string& a_text,
                   const std::string& b_text, const std::string& bounds_text,
                   std::uint64_t sweep_bound, bool deep) {
    Outcome out;
    std::ostringstream os;
    if (sweep_bound > 0) {
        SweepReport rep = conformance_sweep(sweep_bound, deep);
        out.payload["bound"] = rep.bound;
        out.payload["groups"] = rep.group_count;
        out.payload["pairs"] = rep.pair_count;
        out.payload["bifunctor_checks"] = rep.bifunctor_checks;
        out.payload["radical_checks"] = rep.radical_checks;
        out.payload["deep_checks"] = rep.deep_checks;
        out.payload["mismatches"] = rep.mismatches;
        out.payload["agreement"] = rep.clean();
        os << "sweep bound: " << rep.bound << "\n";
        os << "groups: " << rep.group_count << ", pairs: " << rep.pair_count << "\n";
        os << "bifunctor checks: " << rep.bifunctor_checks
           << ", radical checks: " << rep.radical_checks << ", deep checks: " << rep.deep_checks
           << "\n";
        os << "mismatches: " << rep.mismatches.size() << "\n";
        for (auto& m : rep.mismatches) os << "  " << m << "\n";
        os << "agreement: " << (rep.clean() ? "CLEAN" : "FAILED") << "\n";
        out.text = os.str();
        if (!rep.clean()) out.status = "unsupported";
        return out;
    }
    if (op == "hom" || op == "ext" || op == "tensor" || op == "tor") {
        oracle::FiniteAb a = oracle::FiniteAb::from_group_expr(parse_group(a_text));
        oracle::FiniteAb b = oracle::FiniteAb::from_group_expr(parse_group(b_text));
        oracle::BifKind k = op == "hom"      ? oracle::BifKind::Hom
                            : op == "tensor" ? oracle::BifKind::Tensor
                            : op == "tor"    ? oracle::BifKind::Tor
                                             : oracle::BifKind::Ext;
        oracle::FiniteAb r = oracle::finite_bifunctor(k, a, b, opt.oracle_bound);
        out.payload["op"] = op;
        out.payload["lhs"] = a.to_string();
        out.payload["rhs"] = b.to_string();
        out.payload["result"] = r.to_string();
        os << op << "(" << a.to_string() << ", " << b.to_string() << ") = " << r.to_string()
           << "  [oracle]\n";
    } else if (op == "radical") {
        oracle::FiniteAb g = oracle::FiniteAb::from_group_expr(parse_group(a_text));
        oracle::FiniteAb n = oracle::FiniteAb::from_group_expr(parse_group(b_text));
        unsigned stages = 0;
        oracle::FiniteAb r = oracle::finite_radical(g, n, &stages, opt.oracle_bound);
        out.payload["op"] = op;
        out.payload["G"] = g.to_string();
        out.payload["N"] = n.to_string();
        out.payload["radical"] = r.to_string();
        out.payload["stages"] = stages;
        os << "radical(" << g.to_string() << ", " << n.to_string() << ") = " << r.to_string()
           << "  (" << stages << " stages)  [oracle]\n";
    } else if (op == "genby") {
        oracle::FiniteAb n = oracle::FiniteAb::from_group_expr(parse_group(a_text));
        auto bounds = parse_bounds(bounds_text);
        bool ok = oracle::generated_by_bounded_orders(n, bounds, opt.oracle_bound);
        out.payload["op"] = op;
        out.payload["N"] = n.to_string();
        out.payload["bounds"] = bounds_text;
        out.payload["generated"] = ok;
        os << "genby(" << n.to_string() << "; " << bounds_text << ") = "
           << (ok ? "true" : "false") << "  [oracle]\n";
    } else {
        throw InputError("oracle op must be hom|ext|tensor|tor|radical|genby (or --sweep)");
    }
    out.text = os.str();
    return out;
}

Outcome cmd_rules(const Options&) {
    Outcome out;
    json rules = json::array();
    for (const RuleInfo& r : bifunctor_rules())
        rules.push_back({{"id", r.id},
                         {"kind", r.kind},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"result", r.result},
                         {"status", r.oracle_verified ? "oracle" : "note"},
                         {"provenance", r.provenance}});
    out.payload["rules"] = rules;
    out.text = bifunctor_rules_text();
    return out;
}

bool answer_unknown(const json& payload) {
    for (auto& key : {"cellular", "quasi_radical", "is_radical", "moore", "context"}) {
        if (payload.contains(key) && payload[key].is_object() &&
            payload[key].value("answer", "") == "Unknown")
            return true;
    }
    return false;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"symbolic calculator for Moore-space cellularity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--strict-known", opt.strict_known, "exit 3 on Unknown verdicts");
    app.add_option("--prefix-length,-n", opt.prefix_length, "telescope truncation length");
    app.add_option("--oracle-bound", opt.oracle_bound, "joint order bound for oracle ops");

    std::string arg_group, arg_second, arg_space, arg_bounds, arg_op;
    bool check_presentation = false, sweep_deep = false;
    std::uint64_t sweep_bound = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "coefficient system and Moore existence");
    analyze->add_option("group", arg_group, "group expression")->required();

    CLI::App* moore = app.add_subcommand("moore", "Moore space verdict, recipe, presentation");
    moore->add_option("group", arg_group)->required();
    moore->add_flag("--check-presentation", check_presentation);

    for (auto* name : {"hom", "ext", "tensor", "tor"}) {
        CLI::App* sub = app.add_subcommand(name, std::string("symbolic ") + name);
        sub->add_option("lhs", arg_group)->required();
        sub->add_option("rhs", arg_second)->required();
        sub->fallthrough();
    }

    CLI::App* rad = app.add_subcommand("radical", "G-radical of N");
    rad->add_option("G", arg_group)->required();
    rad->add_option("N", arg_second)->required();

    CLI::App* quasi = app.add_subcommand("quasiradical", "quasi G-radical test");
    quasi->add_option("G", arg_group)->required();
    quasi->add_option("A", arg_second)->required();

    CLI::App* cellular = app.add_subcommand("cellular", "M-cellularity of a space");
    cellular->add_option("--moore", arg_group, "Moore-space group")->required();
    cellular->add_option("--space", arg_space, "space descriptor")->required();

    CLI::App* cwc = app.add_subcommand("cw", "symbolic cellularization");
    cwc->add_option("--moore", arg_group)->required();
    cwc->add_option("--space", arg_space)->required();

    CLI::App* orc = app.add_subcommand("oracle", "brute-force engine");
    orc->add_option("op", arg_op, "hom|ext|tensor|tor|radical|genby");
    orc->add_option("lhs", arg_group);
    orc->add_option("rhs", arg_second);
    orc->add_option("--bounds", arg_bounds, "genby bounds p:k,q:inf");
    orc->add_option("--sweep", sweep_bound, "conformance sweep up to the bound");
    orc->add_flag("--deep", sweep_deep, "extra presentation-route cross-checks");

    CLI::App* rules = app.add_subcommand("rules", "print the bifunctor rule table");

    for (CLI::App* sub : {analyze, moore, rad, quasi, cellular, cwc, orc, rules})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }

    std::string command;
    Outcome out;
    try {
        if (analyze->parsed()) {
            command = "analyze";
            out = cmd_analyze(opt, arg_group);
        } else if (moore->parsed()) {
            command = "moore";
            out = cmd_moore(opt, arg_group, check_presentation);
        } else if (rad->parsed()) {
            command = "radical";
            out = cmd_radical(opt, arg_group, arg_second);
        } else if (quasi->parsed()) {
            command = "quasiradical";
            out = cmd_quasiradical(opt, arg_group, arg_second);
        } else if (cellular->parsed()) {
            command = "cellular";
            out = cmd_cellular(opt, arg_group, arg_space);
        } else if (cwc->parsed()) {
            command = "cw";
            out = cmd_cw(opt, arg_group, arg_space);
        } else if (orc->parsed()) {
            command = "oracle";
            out = cmd_oracle(opt, arg_op, arg_group, arg_second, arg_bounds, sweep_bound,
                             sweep_deep);
        } else if (rules->parsed()) {
            command = "rules";
            out = cmd_rules(opt);
        } else {
            for (auto* name : {"hom", "ext", "tensor", "tor"}) {
                CLI::App* sub = app.get_subcommand(name);
                if (sub->parsed()) {
                    command = name;
                    out = cmd_bifunctor(opt, name, arg_group, arg_second);
                }
            }
        }
    } catch (const ParseError& e) {
        out.status = "input-error";
        out.error = e.what();
    } catch (const InputError& e) {
        out.status = "input-error";
        out.error = e.what();
    } catch (const UnsupportedConstructor& e) {
        out.status = "input-error";
        out.error = e.what();
    }

    bool unknown = answer_unknown(out.payload);
    int code = exit_code_of(out, opt, unknown);
    if (opt.strict_known && unknown && out.status == "ok") out.status = "unsupported";

    if (opt.format == "structured") {
        json doc;
        doc["command"] = command;
        doc["status"] = out.status;
        if (!out.error.empty()) doc["error"] = out.error;
        doc["payload"] = out.payload;
        return {code, doc.dump(2) + "\n"};
    }
    std::string text = out.text;
    if (!out.error.empty()) text += "error: " + out.error + "\n";
    if (out.status != "ok") text += "status: " + out.status + "\n";
    return {code, text};
}

}  // namespace mcell
