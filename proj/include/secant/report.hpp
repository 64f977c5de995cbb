#pragma once

#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "secant/classify.hpp"
#include "secant/pairs.hpp"
#include "secant/parse.hpp"
#include "secant/projections.hpp"

namespace secant::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success, 1 error, 2 result gated on absent metadata.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;

// ---------------------------------------------------------------------------
// Record serialization
// ---------------------------------------------------------------------------

inline Json profile_record(const SecantProfile& p, const std::string& provenance) {
    Json j;
    j["type"] = "secant_profile";
    j["k"] = p.k;
    j["s_k"] = p.s_k;
    j["sigma_k"] = p.sigma_k;
    j["delta_k"] = p.delta_k;
    j["h_k"] = p.h_k;
    j["filled"] = p.filled;
    j["trials_used"] = p.trials_used;
    j["prime"] = p.prime;
    j["provenance"] = provenance;
    return j;
}

inline SecantProfile profile_from_json(const Json& j) {
    SecantProfile p;
    p.k = j.at("k").get<int>();
    p.s_k = j.at("s_k").get<int>();
    p.sigma_k = j.at("sigma_k").get<int>();
    p.delta_k = j.at("delta_k").get<int>();
    p.h_k = j.at("h_k").get<int>();
    p.filled = j.at("filled").get<bool>();
    p.trials_used = j.at("trials_used").get<int>();
    p.prime = j.at("prime").get<std::uint64_t>();
    return p;
}

inline Json bound_record(const BoundReport& b) {
    Json j;
    j["type"] = "bound_report";
    j["h"] = b.h;
    j["k"] = b.k;
    j["lower_bound"] = b.lower_bound.str();
    if (b.actual_degree) {
        j["actual_degree"] = b.actual_degree->str();
        j["actual_provenance"] = b.actual_provenance;
        j["is_minimal"] = *b.is_minimal;
    }
    return j;
}

inline BoundReport bound_from_json(const Json& j) {
    BoundReport b;
    b.h = j.at("h").get<long long>();
    b.k = j.at("k").get<long long>();
    b.lower_bound = BigInt(j.at("lower_bound").get<std::string>());
    if (j.contains("actual_degree")) {
        b.actual_degree = BigInt(j.at("actual_degree").get<std::string>());
        b.actual_provenance = j.at("actual_provenance").get<std::string>();
        b.is_minimal = j.at("is_minimal").get<bool>();
    }
    return b;
}

inline Json class_record(const SecantClass& c) {
    Json j;
    j["type"] = "secant_class";
    j["tag"] = class_tag_name(c.tag);
    j["k"] = c.k;
    Json ev = Json::array();
    for (const auto& e : c.evidence) {
        Json t;
        t["criterion"] = e.criterion;
        t["value"] = e.value;
        t["citation"] = e.citation;
        ev.push_back(t);
    }
    j["evidence"] = ev;
    return j;
}

inline SecantClass class_from_json(const Json& j) {
    SecantClass c;
    std::string tag = j.at("tag").get<std::string>();
    for (ClassTag t : {ClassTag::Mk, ClassTag::MA, ClassTag::OA, ClassTag::FillsTrivially,
                       ClassTag::NotMinimal, ClassTag::Defective, ClassTag::Unknown})
        if (tag == class_tag_name(t)) c.tag = t;
    c.k = j.at("k").get<int>();
    for (const auto& t : j.at("evidence"))
        c.evidence.push_back({t.at("criterion").get<std::string>(), t.at("value").get<std::string>(),
                              t.at("citation").get<std::string>()});
    return c;
}

inline const char* pair_category_name(pairs::PairClassification::Category c) {
    using C = pairs::PairClassification::Category;
    switch (c) {
        case C::Extremal: return "extremal";
        case C::AlmostExtremal: return "almost-extremal";
        case C::Interior: return "interior";
        case C::NotNef: return "not-nef";
        case C::NotBig: return "not-big";
        case C::NotMinimalPair: return "not-minimal";
        case C::ScrollPair: return "scroll";
        case C::BoundExceeded: return "bound-exceeded";
    }
    return "?";
}

inline Json pair_class_record(const pairs::PairClassification& c, const pairs::SurfaceModel& m,
                              const pairs::DivisorClass& D) {
    Json j;
    j["type"] = "pair_classification";
    j["model"] = m.str();
    j["class"] = D.str(m);
    j["category"] = pair_category_name(c.category);
    j["d"] = c.d;
    j["g"] = c.g;
    j["eps"] = c.eps;
    j["r"] = c.r;
    j["s"] = c.s;
    j["ample"] = c.ample;
    j["kd_square"] = c.kd_square;
    j["family"] = c.family;
    if (c.witness) j["witness"] = c.witness->str(m);
    return j;
}

// ---------------------------------------------------------------------------
// Report envelope
// ---------------------------------------------------------------------------

struct RunResult {
    Json report;
    int exit_code = kExitOk;
};

inline Json report_envelope(const std::string& query, const EngineConfig& cfg) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["query"] = query;
    Json c;
    c["prime"] = cfg.prime;
    c["seed"] = cfg.seed;
    c["trials"] = cfg.trials;
    c["backend"] = cfg.backend == EngineConfig::Backend::Fp ? "fp" : "rational";
    j["config"] = c;
    j["results"] = Json::array();
    j["provenance"] = Json::array();
    return j;
}

inline void collect_provenance(Json& report) {
    std::vector<std::string> seen;
    auto add = [&](const std::string& s) {
        if (s.empty()) return;
        for (const auto& x : seen)
            if (x == s) return;
        seen.push_back(s);
    };
    for (const auto& rec : report["results"]) {
        if (rec.contains("provenance")) add(rec["provenance"].get<std::string>());
        if (rec.contains("actual_provenance")) add(rec["actual_provenance"].get<std::string>());
        if (rec.contains("evidence"))
            for (const auto& e : rec["evidence"]) add(e["citation"].get<std::string>());
    }
    for (const auto& s : seen) report["provenance"].push_back(s);
}

// ---------------------------------------------------------------------------
// Query runner (shared by the CLI and batch mode)
// ---------------------------------------------------------------------------

namespace detail {

struct ParsedArgs {
    std::string subcommand;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> flags;
    bool json = false;
};

inline ParsedArgs parse_args(const std::vector<std::string>& tokens) {
    ParsedArgs a;
    std::size_t i = 0;
    if (i < tokens.size()) a.subcommand = tokens[i++];
    while (i < tokens.size()) {
        const std::string& t = tokens[i];
        if (t.rfind("--", 0) == 0) {
            std::string key = t.substr(2);
            if (key == "json") {
                a.json = true;
                ++i;
                continue;
            }
            if (i + 1 >= tokens.size())
                throw std::invalid_argument("flag --" + key + " needs a value");
            a.flags[key] = tokens[i + 1];
            i += 2;
        } else {
            a.positionals.push_back(t);
            ++i;
        }
    }
    return a;
}

inline long long flag_int(const ParsedArgs& a, const std::string& key, long long fallback,
                          bool required = false) {
    auto it = a.flags.find(key);
    if (it == a.flags.end()) {
        if (required) throw std::invalid_argument("missing required flag --" + key);
        return fallback;
    }
    return std::stoll(it->second);
}

inline std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i];
    }
    return s;
}

/// Closed-form dimension where one exists (scrolls, cones over scrolls).
inline std::optional<int> closed_form_dimension(const Descriptor& desc, int k) {
    if (const auto* sc = std::get_if<ScrollDesc>(&desc.v)) return scroll_secant_dimension(sc->a, k);
    if (const auto* rn = std::get_if<RncDesc>(&desc.v))
        return scroll_secant_dimension(ScrollType{std::vector<int>{rn->r}}, k);
    if (const auto* cn = std::get_if<ConeDesc>(&desc.v)) {
        auto inner = closed_form_dimension(*cn->inner, k);
        if (!inner) return std::nullopt;
        MonomialMap inner_map = realize(*cn->inner);
        const int inner_r = inner_map.ambient_dim();
        if (*inner < inner_r) return *inner + cn->l + 1; // cone law, proper case
        return inner_r + cn->l + 1;                      // both fill
    }
    return std::nullopt;
}

inline pairs::SurfaceModel parse_model(const std::string& text) {
    // p2 | p2+t | f<a> | f<a>+t
    std::string base = text;
    int t = 0;
    if (auto plus = text.find('+'); plus != std::string::npos) {
        base = text.substr(0, plus);
        t = std::stoi(text.substr(plus + 1));
    }
    if (base == "p2") return pairs::SurfaceModel::p2(t);
    if (base.size() >= 2 && base[0] == 'f') return pairs::SurfaceModel::fa(std::stoi(base.substr(1)), t);
    throw std::invalid_argument("unknown model '" + text + "' (expected p2[+t] or f<a>[+t])");
}

inline std::vector<long long> parse_coeffs(const std::string& text) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        out.push_back(std::stoll(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace detail

/// Runs a single query line ("dim veronese 2 2 --k 1", ...) and returns the
/// JSON report plus exit code.  Deterministic for fixed (query, config).
inline RunResult run_query(const std::vector<std::string>& tokens, EngineConfig cfg) {
    using detail::flag_int;
    detail::ParsedArgs args = detail::parse_args(tokens);

    cfg.prime = static_cast<std::uint64_t>(flag_int(args, "prime", static_cast<long long>(cfg.prime)));
    cfg.seed = static_cast<std::uint64_t>(flag_int(args, "seed", static_cast<long long>(cfg.seed)));
    cfg.trials = static_cast<int>(flag_int(args, "trials", cfg.trials));
    if (auto it = args.flags.find("backend"); it != args.flags.end())
        cfg.backend = it->second == "rational" ? EngineConfig::Backend::Rational : EngineConfig::Backend::Fp;
    cfg.check();

    RunResult rr;
    rr.report = report_envelope(detail::joined(tokens), cfg);
    Json& results = rr.report["results"];

    const std::string& cmd = args.subcommand;
    if (cmd == "dim" || cmd == "profile") {
        Descriptor desc = parse_variety(detail::joined(args.positionals));
        MonomialMap map = realize(desc);
        const int r = map.ambient_dim();
        const int kmax = cmd == "dim" ? static_cast<int>(flag_int(args, "k", 1))
                                      : static_cast<int>(flag_int(args, "kmax", r));
        const int kmin = cmd == "dim" ? kmax : 0;
        auto profiles = defect_profile(map, kmax, cfg);
        if (cmd == "dim" && profiles.back().k < kmin) {
            // the secant variety already filled at a smaller k; report that
            // profile rather than nothing
            Json rec = profile_record(profiles.back(), "computed: Terracini rank");
            rec["note"] = "fills the ambient space from this k on";
            results.push_back(rec);
        }
        for (const auto& p : profiles) {
            if (p.k < kmin) continue;
            std::string provenance = "computed: Terracini rank";
            Json rec = profile_record(p, provenance);
            if (auto closed = detail::closed_form_dimension(desc, p.k)) {
                rec["closed_form_s_k"] = *closed;
                if (*closed != p.s_k) {
                    // closed forms are proven; randomized ranks can only drop
                    rec["discrepancy"] = true;
                    rec["note"] = "engine disagrees with the closed form; the closed form is "
                                  "authoritative, rerun with a fresh seed";
                    rec["s_k"] = *closed;
                    rec["provenance"] = "closed-form";
                }
            }
            results.push_back(rec);
        }
    } else if (cmd == "degree") {
        Descriptor desc = parse_variety(detail::joined(args.positionals));
        const int k = static_cast<int>(flag_int(args, "k", 1));
        MonomialMap map = realize(desc);
        const int s = secant_dimension(map, k, cfg);
        const int h = map.ambient_dim() - s;
        if (h < 1) {
            Json rec;
            rec["type"] = "bound_report";
            rec["k"] = k;
            rec["note"] = "S^k fills its ambient space; no degree bound applies";
            results.push_back(rec);
        } else {
            std::map<int, KMetadata> meta;
            if (auto builtin = find_builtin(desc)) meta = builtin->metadata;
            auto facts = secant::detail::secant_degree_facts(desc, k, h, meta);
            BoundReport rep = make_bound_report(h, k, facts.deg, facts.citation);
            results.push_back(bound_record(rep));
        }
    } else if (cmd == "bound") {
        const long long h = flag_int(args, "h", 0, true);
        const long long k = flag_int(args, "k", 0, true);
        results.push_back(bound_record(make_bound_report(h, k)));
        if (args.flags.count("l")) {
            const long long l = flag_int(args, "l", 0);
            Json rec;
            rec["type"] = "multiplicity_bound";
            rec["h"] = h;
            rec["k"] = k;
            rec["l"] = l;
            rec["lower_bound"] = secant_multiplicity_lower_bound(h, k, l).str();
            results.push_back(rec);
        }
    } else if (cmd == "project") {
        if (args.positionals.empty())
            throw std::invalid_argument("project needs a kind: internal|tangential|ruling");
        std::string kind = args.positionals.front();
        std::vector<std::string> rest(args.positionals.begin() + 1, args.positionals.end());
        Descriptor desc = parse_variety(detail::joined(rest));
        const int steps = static_cast<int>(flag_int(args, "steps", 1));
        Json rec;
        rec["type"] = "projection";
        rec["kind"] = kind;
        rec["steps"] = steps;
        ProjectionStep step;
        step.count = steps;
        if (kind == "internal") step.kind = ProjectionStep::Kind::Internal;
        else if (kind == "tangential") step.kind = ProjectionStep::Kind::Tangential;
        else if (kind == "ruling") step.kind = ProjectionStep::Kind::RulingSpace;
        else throw std::invalid_argument("unknown projection kind '" + kind + "'");

        std::optional<ScrollType> symbolic;
        if (const auto* sc = std::get_if<ScrollDesc>(&desc.v)) symbolic = sc->a;
        if (const auto* rn = std::get_if<RncDesc>(&desc.v))
            symbolic = ScrollType{std::vector<int>{rn->r}};
        if (symbolic) {
            ScrollType b = apply(*symbolic, step);
            rec["symbolic_type"] = b.str();
            rec["degree"] = b.degree();
            rec["ambient"] = b.ambient();
            rec["provenance"] = "closed-form";
        } else {
            MonomialMap cur = apply(realize(desc), step, cfg);
            rec["ambient"] = cur.ambient_dim();
            rec["coordinates"] = static_cast<long long>(cur.coords.size());
            rec["dimension"] = variety_dimension(cur, cfg);
            rec["provenance"] = "computed: Terracini rank";
        }
        results.push_back(rec);
    } else if (cmd == "classify") {
        Descriptor desc = parse_variety(detail::joined(args.positionals));
        const int k = static_cast<int>(flag_int(args, "k", 1));
        CatalogEntry entry;
        if (auto builtin = find_builtin(desc)) entry = *builtin;
        else entry = make_entry(describe(desc), desc);
        SecantClass cls = classify_entry(entry, k, cfg);
        results.push_back(class_record(cls));
        if (cls.tag == ClassTag::Unknown) rr.exit_code = kExitUnknown;
    } else if (cmd == "verify") {
        if (args.positionals.empty() || args.positionals.front() != "kl")
            throw std::invalid_argument("verify supports: verify kl <variety> --k K --i I");
        std::vector<std::string> rest(args.positionals.begin() + 1, args.positionals.end());
        Descriptor desc = parse_variety(detail::joined(rest));
        const int k = static_cast<int>(flag_int(args, "k", 1));
        const int i = static_cast<int>(flag_int(args, "i", 1));
        MonomialMap map = realize(desc);
        ProjectionInvariantReport rep = verify_projection_invariants(map, k, i, cfg);
        Json rec;
        rec["type"] = "projection_invariants";
        rec["k"] = rep.k;
        rec["i"] = rep.i;
        rec["h_k"] = rep.h_base;
        rec["tangential_applicable"] = rep.tangential_applicable;
        if (rep.tangential_applicable) {
            rec["tangential_lhs"] = rep.tangential_lhs;
            rec["tangential_rhs"] = rep.tangential_rhs;
        }
        rec["internal_applicable"] = rep.internal_applicable;
        if (rep.internal_applicable) {
            rec["internal_lhs"] = rep.internal_lhs;
            rec["internal_rhs"] = rep.internal_rhs;
        }
        rec["holds"] = rep.holds();
        rec["provenance"] = "computed: Terracini rank";
        results.push_back(rec);
        if (!rep.holds()) rr.exit_code = kExitError;
    } else if (cmd == "pair" || cmd == "sweep") {
        std::string sub = cmd == "sweep" ? "sweep" : (args.positionals.empty() ? "" : args.positionals.front());
        if (sub == "eval" || sub == "classify") {
            auto model = detail::parse_model(args.flags.count("model") ? args.flags.at("model") : "p2");
            if (!args.flags.count("class"))
                throw std::invalid_argument("pair " + sub + " needs --class c0,c1,...");
            auto D = pairs::make_class(model, detail::parse_coeffs(args.flags.at("class")));
            if (sub == "eval") {
                Json rec;
                rec["type"] = "pair_eval";
                rec["model"] = model.str();
                rec["class"] = D.str(model);
                rec["d"] = pairs::intersect(D, D, model);
                rec["k_squared"] =
                    pairs::intersect(pairs::canonical(model), pairs::canonical(model), model);
                rec["g"] = pairs::arithmetic_genus(D, model);
                auto nef = pairs::nef_test(D, model);
                rec["nef"] = nef.nef;
                if (!nef.nef) rec["nef_witness"] = nef.witness->str(model);
                if (nef.nef) {
                    auto adj = pairs::adjoint_nef_check(D, model);
                    rec["kd_square"] = adj.kd_square;
                    switch (adj.outcome) {
                        case pairs::AdjointReport::Outcome::AdjointNef: rec["adjoint"] = "nef"; break;
                        case pairs::AdjointReport::Outcome::NotMinimal: rec["adjoint"] = "not-minimal"; break;
                        case pairs::AdjointReport::Outcome::Scroll: rec["adjoint"] = "scroll"; break;
                        case pairs::AdjointReport::Outcome::SmallVeronese: rec["adjoint"] = "small-veronese"; break;
                    }
                    if (adj.witness) rec["adjoint_witness"] = adj.witness->str(model);
                }
                rec["provenance"] = "closed-form";
                results.push_back(rec);
            } else {
                auto cls = pairs::enriques_classifier(D, model);
                results.push_back(pair_class_record(cls, model, D));
            }
        } else if (sub == "sweep" || cmd == "sweep") {
            const int bound = static_cast<int>(flag_int(args, "bound", 12));
            int a_max = 6;
            bool p2_only = false;
            if (args.flags.count("model")) {
                std::string mtext = args.flags.at("model");
                if (mtext == "p2") { p2_only = true; }
                else if (mtext != "all") a_max = std::stoi(mtext.substr(1));
            }
            auto extremal = pairs::extremal_sweep(bound, p2_only ? -1 : a_max);
            auto almost = pairs::almost_extremal_sweep(bound, p2_only ? -1 : a_max);
            Json rec;
            rec["type"] = "pair_sweep";
            rec["bound"] = bound;
            Json ext = Json::array();
            for (const auto& h : extremal) {
                Json e;
                e["model"] = h.model.str();
                e["class"] = h.D.str(h.model);
                e["d"] = h.d;
                e["g"] = h.g;
                e["eps"] = h.eps;
                e["family"] = h.family;
                ext.push_back(e);
            }
            rec["extremal"] = ext;
            Json alm = Json::array();
            for (const auto& h : almost) {
                Json e;
                e["model"] = h.model.str();
                e["class"] = h.D.str(h.model);
                e["d"] = h.d;
                e["g"] = h.g;
                e["s"] = h.s;
                e["family"] = h.family;
                alm.push_back(e);
            }
            rec["almost_extremal"] = alm;
            rec["provenance"] = "closed-form";
            results.push_back(rec);
        } else {
            throw std::invalid_argument("pair supports: eval | classify | sweep");
        }
    } else {
        throw std::invalid_argument("unknown subcommand '" + cmd +
                                    "'; expected dim|profile|degree|bound|project|classify|verify|pair|sweep");
    }

    collect_provenance(rr.report);
    return rr;
}

/// Batch mode: newline-delimited queries with '#' comments; every line is
/// isolated, results keep input order, and the summary counts verify lines.
inline RunResult run_batch(std::istream& in, const std::string& label, const EngineConfig& cfg) {
    RunResult rr;
    Json& report = rr.report;
    report["schema_version"] = kSchemaVersion;
    report["query"] = "batch " + label;
    Json lines = Json::array();
    int ok = 0, failed = 0, verify_pass = 0, verify_fail = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        if (auto hash = trimmed.find('#'); hash != std::string::npos) trimmed.resize(hash);
        std::istringstream is(trimmed);
        std::vector<std::string> tokens;
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        Json entry;
        entry["line"] = lineno;
        entry["query"] = trimmed;
        try {
            auto sub = run_query(tokens, cfg);
            entry["report"] = sub.report;
            entry["exit"] = sub.exit_code;
            if (sub.exit_code == 0) ++ok;
            else ++failed;
            rr.exit_code = std::max(rr.exit_code, sub.exit_code);
            if (tokens[0] == "verify") {
                bool holds = true;
                for (const auto& rec : sub.report["results"])
                    if (rec.contains("holds") && !rec["holds"].get<bool>()) holds = false;
                (holds ? verify_pass : verify_fail)++;
            }
        } catch (const std::exception& e) {
            entry["error"] = e.what();
            entry["exit"] = kExitError;
            ++failed;
            rr.exit_code = std::max(rr.exit_code, kExitError);
        }
        lines.push_back(entry);
    }
    report["lines"] = lines;
    Json summary;
    summary["ok"] = ok;
    summary["failed"] = failed;
    summary["verify_pass"] = verify_pass;
    summary["verify_fail"] = verify_fail;
    report["summary"] = summary;
    return rr;
}

/// Plain-text rendering of a report (the default, non --json output).
inline std::string render_text(const Json& report) {
    std::ostringstream os;
    os << "query: " << report["query"].get<std::string>() << "\n";
    for (const auto& rec : report["results"]) {
        os << "---\n";
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            if (it.value().is_array() || it.value().is_object()) {
                os << "  " << it.key() << ":\n";
                for (const auto& sub : it.value()) {
                    if (sub.is_object()) {
                        os << "   ";
                        for (auto jt = sub.begin(); jt != sub.end(); ++jt)
                            os << " " << jt.key() << "=" << (jt.value().is_string()
                                                                 ? jt.value().get<std::string>()
                                                                 : jt.value().dump());
                        os << "\n";
                    } else {
                        os << "    " << sub.dump() << "\n";
                    }
                }
            } else if (it.value().is_string()) {
                os << "  " << it.key() << " = " << it.value().get<std::string>() << "\n";
            } else {
                os << "  " << it.key() << " = " << it.value().dump() << "\n";
            }
        }
    }
    return os.str();
}

} // namespace secant::cli
