#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "secant/catalog.hpp"
#include "secant/degrees.hpp"
#include "secant/errors.hpp"
#include "secant/projections.hpp"
#include "secant/terracini.hpp"

namespace secant {

struct Evidence {
    std::string criterion;
    std::string value;
    std::string citation;
};

struct SecantClass {
    ClassTag tag = ClassTag::Unknown;
    int k = 0;
    std::vector<Evidence> evidence;

    void note(std::string criterion, std::string value, std::string citation) {
        evidence.push_back({std::move(criterion), std::move(value), std::move(citation)});
    }
};

namespace detail {

template <typename T>
std::string str_of(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace detail

/// Decides M^k / MA / OA membership of S(a_1,...,a_n) from the closed-form
/// criteria: with c = sum_{a_j >= k} (a_j - k),
///   c - k - 1 < 0                      -> S^k fills trivially,
///   a_1 >= k, sum a = kn + k + 1       -> OA (h = 0, one apparent secant plane),
///   a_1 >= k, sum a > kn + k + 1       -> MA (h > 0, minimal degree, mu = 1),
///   a_1 <  k, S^k proper               -> defective but still of minimal degree.
inline SecantClass classify_scroll(const ScrollType& a, int k) {
    if (k < 1) throw std::invalid_argument("classify_scroll: k >= 1 required");
    SecantClass out;
    out.k = k;
    const int n = a.n();
    const int r = a.ambient();
    const long long corr = scroll_correction(a, k);
    const long long h_star = corr - k - 1;

    out.note("scroll type", a.str(), "");
    out.note("determinantal codimension", detail::str_of(h_star),
             "Hankel matrix description of scroll secant ideals");

    if (h_star < 0) {
        out.tag = ClassTag::FillsTrivially;
        out.note("dimension", "S^k fills P^" + detail::str_of(r),
                 "dimension formula for scroll secant varieties");
        return out;
    }

    if (a.min_entry() >= k) {
        out.note("non-defectivity", "a_1 >= k",
                 "scrolls are k-defective exactly when a_1 < k");
        if (h_star == 0) {
            out.tag = ClassTag::OA;
            out.note("apparent secant planes", "mu_k = 1",
                     "balanced scrolls with sum a = kn+k+1 carry one (k+1)-secant k-plane "
                     "through the general ambient point");
        } else {
            out.tag = ClassTag::MA;
            out.note("secant degree", detail::str_of(scroll_secant_degree(a, k)),
                     "scroll secant varieties attain the minimal-degree bound");
            out.note("apparent secant planes", "mu_k = 1",
                     "internal projections reduce to the balanced case");
        }
    } else {
        out.tag = ClassTag::Defective;
        out.note("defectivity", "a_1 < k",
                 "scrolls are k-defective exactly when a_1 < k");
        out.note("secant degree", detail::str_of(scroll_secant_degree(a, k)),
                 "scroll secant varieties attain the minimal-degree bound");
    }

    const int s = scroll_secant_dimension(a, k);
    out.note("s_k", detail::str_of(s), "dimension formula for scroll secant varieties");
    // OA forces r = (k+1)n+k and an exact fill; anything else is a logic bug
    if (out.tag == ClassTag::OA && (s != r || r != (k + 1) * n + k))
        throw InternalEngineError("classify_scroll: OA criterion inconsistent for " + a.str());
    return out;
}

/// Classification of curves with minimal secant degree: an irreducible
/// nondegenerate curve of degree d in P^r (2k+1 <= r) is MA or OA exactly
/// when d = r, i.e. when it is a rational normal curve.
inline SecantClass classify_curve(int r, int deg, int k) {
    if (k < 1) throw std::invalid_argument("classify_curve: k >= 1 required");
    if (2 * k + 1 > r)
        throw std::invalid_argument("classify_curve: need 2k+1 <= r (secant variety proper or exact fill)");
    if (deg < r)
        throw std::invalid_argument("classify_curve: a nondegenerate curve in P^r has degree >= r");
    SecantClass out;
    out.k = k;
    out.note("degree", detail::str_of(deg), "");
    if (deg == r) {
        out.tag = (r == 2 * k + 1) ? ClassTag::OA : ClassTag::MA;
        out.note("rational normal curve", "deg = r",
                 "curves of minimal k-secant degree are the rational normal curves");
    } else {
        out.tag = ClassTag::NotMinimal;
        out.note("rational normal curve", "deg > r",
                 "curves of minimal k-secant degree are the rational normal curves");
    }
    return out;
}

namespace detail {

struct DegreeFacts {
    std::optional<BigInt> deg;   // deg S^k if known
    std::string citation;
    std::optional<bool> minimal; // deg == binom(h+k+1, k+1)
};

/// Closed-form or transcribed degree of S^k for a descriptor, where available.
inline DegreeFacts secant_degree_facts(const Descriptor& desc, int k, long long h,
                                       const std::map<int, KMetadata>& meta) {
    DegreeFacts f;
    if (h < 1) return f;
    if (auto it = meta.find(k); it != meta.end() && it->second.secant_degree) {
        f.deg = *it->second.secant_degree;
        f.citation = it->second.secant_degree_citation;
        f.minimal = (*f.deg == secant_degree_lower_bound(h, k));
        return f;
    }
    if (const auto* sc = std::get_if<ScrollDesc>(&desc.v)) {
        if (!scroll_secant_fills(sc->a, k)) {
            f.deg = scroll_secant_degree(sc->a, k);
            f.citation = "scroll secant varieties attain the minimal-degree bound";
            f.minimal = true;
        }
        return f;
    }
    if (const auto* rn = std::get_if<RncDesc>(&desc.v)) {
        ScrollType a{std::vector<int>{rn->r}};
        if (!scroll_secant_fills(a, k)) {
            f.deg = scroll_secant_degree(a, k);
            f.citation = "secant varieties of rational normal curves attain the minimal-degree bound";
            f.minimal = true;
        }
        return f;
    }
    if (const auto* sg = std::get_if<SegreDesc>(&desc.v)) {
        if (sg->dims.size() == 2 && k == std::min(sg->dims[0], sg->dims[1]) - 1) {
            int m1 = std::min(sg->dims[0], sg->dims[1]), m2 = std::max(sg->dims[0], sg->dims[1]);
            f.deg = segre_top_secant_degree(m1, m2);
            f.citation = "determinantal degree of the top proper secant variety of a Segre product";
            f.minimal = (*f.deg == secant_degree_lower_bound(h, k));
        }
        return f;
    }
    if (const auto* cn = std::get_if<ConeDesc>(&desc.v)) {
        // S^k(J(P^l, X)) is the cone over S^k(X): same codimension, same degree.
        DegreeFacts inner = secant_degree_facts(*cn->inner, k, h, {});
        if (inner.deg) {
            f = inner;
            f.citation += " (cones preserve secant codimension and degree)";
        }
        return f;
    }
    return f;
}

inline std::optional<long long> mu_facts(const Descriptor& desc, int k,
                                         const std::map<int, KMetadata>& meta, std::string& citation) {
    if (auto it = meta.find(k); it != meta.end() && it->second.mu) {
        citation = it->second.mu_citation;
        return it->second.mu;
    }
    if (const auto* sc = std::get_if<ScrollDesc>(&desc.v)) {
        if (sc->a.min_entry() >= k) {
            citation = "scrolls with a_1 >= k carry one (k+1)-secant k-plane through the general point";
            return 1;
        }
    }
    if (const auto* rn = std::get_if<RncDesc>(&desc.v)) {
        if (rn->r >= 2 * k + 1) {
            citation = "rational normal curves carry one (k+1)-secant k-plane through the general point";
            return 1;
        }
    }
    if (const auto* bd = std::get_if<BundleDesc>(&desc.v)) {
        if (bd->alpha == 2 && bd->a.n() == 2 && bd->beta % 2 == 1 &&
            k == bd->a.degree() + bd->beta) {
            citation = "odd conic-bundle embeddings carry one (k+1)-secant k-plane through the general point";
            return 1;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Full evidence-chain classification of a catalog entry at level k: the
/// engine computes s^(k) and h^(k), degree minimality comes from closed
/// forms or transcribed metadata, mu_k is never computed.  A contradiction
/// with a stored table is a hard error; absent metadata yields Unknown.
inline SecantClass classify_entry(const CatalogEntry& entry, int k, const EngineConfig& cfg) {
    if (k < 1) throw std::invalid_argument("classify_entry: k >= 1 required");
    MonomialMap map = realize(entry.desc);
    const int r = map.ambient_dim();
    const int n = variety_dimension(map, cfg);
    const int s = secant_dimension(map, k, cfg);
    const int sigma = expected_dimension(n, k, r);
    const int delta = sigma - s;
    const int h = r - s;

    SecantClass out;
    out.k = k;
    out.note("variety", entry.name.empty() ? describe(entry.desc) : entry.name, "");
    out.note("s_k", detail::str_of(s), "computed: Terracini rank over F_p");
    out.note("sigma_k", detail::str_of(sigma), "closed form: min(r, n(k+1)+k)");
    out.note("delta_k", detail::str_of(delta), "computed");
    out.note("h_k", detail::str_of(h), "computed");

    // closed-form cross-check for scrolls: the engine must agree exactly
    if (const auto* sc = std::get_if<ScrollDesc>(&entry.desc.v)) {
        int closed = scroll_secant_dimension(sc->a, k);
        if (closed != s)
            throw TableMismatchError("classify_entry: engine dimension " + detail::str_of(s) +
                                     " contradicts the scroll formula " + detail::str_of(closed) +
                                     " for " + sc->a.str());
    }

    auto degf = detail::secant_degree_facts(entry.desc, k, h, entry.metadata);
    if (degf.deg) {
        out.note("deg S^k", detail::str_of(*degf.deg), degf.citation);
        out.note("degree bound", detail::str_of(secant_degree_lower_bound(h, k)),
                 "closed form: binom(h+k+1, k+1)");
    }
    std::string mu_citation;
    auto mu = detail::mu_facts(entry.desc, k, entry.metadata, mu_citation);
    if (mu) out.note("mu_k", detail::str_of(*mu), mu_citation);

    if (s == r) {
        if (r == sigma && sigma == n * (k + 1) + k) {
            if (mu && *mu == 1) {
                out.tag = ClassTag::OA;
                out.note("class", "OA: r = s_k = (k+1)n+k and mu_k = 1", mu_citation);
            } else if (mu) {
                out.tag = ClassTag::FillsTrivially;
                out.note("class", "fills with mu_k > 1", mu_citation);
            } else {
                out.tag = ClassTag::Unknown;
                out.note("class", "fills at the expected count but mu_k is not on record", "");
            }
        } else {
            out.tag = ClassTag::FillsTrivially;
            out.note("class", "S^k fills its ambient space below the naive parameter count", "");
        }
    } else if (delta > 0) {
        out.tag = ClassTag::Defective;
        if (degf.minimal && *degf.minimal)
            out.note("class", "defective, of minimal k-secant degree", degf.citation);
    } else if (degf.minimal.has_value()) {
        if (*degf.minimal) {
            if (mu && *mu == 1) {
                out.tag = ClassTag::MA;
                out.note("class", "MA: minimal degree, not defective, mu_k = 1", mu_citation);
            } else if (mu) {
                out.tag = ClassTag::Mk;
                out.note("class", "minimal k-secant degree with mu_k > 1", mu_citation);
            } else {
                out.tag = ClassTag::Unknown;
                out.note("class", "minimal degree certified but mu_k is not on record", "");
            }
        } else {
            out.tag = ClassTag::NotMinimal;
            out.note("class", "secant degree exceeds the lower bound", degf.citation);
        }
    } else {
        out.tag = ClassTag::Unknown;
        out.note("class", "no degree information for S^k on record", "");
    }

    // table guard: stored classifications must agree with computed evidence
    if (auto it = entry.metadata.find(k); it != entry.metadata.end() && it->second.known_class) {
        ClassTag table = *it->second.known_class;
        if (out.tag == ClassTag::Unknown) {
            out.tag = table;
            out.note("class", std::string("adopted from table: ") + class_tag_name(table),
                     it->second.known_class_citation);
        } else if (out.tag != table) {
            throw TableMismatchError("classify_entry: computed class " +
                                     std::string(class_tag_name(out.tag)) + " contradicts table " +
                                     class_tag_name(table) + " for " + entry.name);
        } else {
            out.note("table", class_tag_name(table), it->second.known_class_citation);
        }
    }
    if (const auto* sc = std::get_if<ScrollDesc>(&entry.desc.v)) {
        ClassTag table = classify_scroll(sc->a, k).tag;
        if (out.tag != table && out.tag != ClassTag::Unknown)
            throw TableMismatchError("classify_entry: engine class disagrees with scroll criteria for " +
                                     sc->a.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inequality of the degeneration-of-projections bound
// ---------------------------------------------------------------------------

/// d_{X,k} * deg(X_k) <= nu_k(X), evaluated from closed forms where the
/// entry is a scroll and from transcribed metadata otherwise.
struct BohReport {
    bool applicable = false; // false: some input is not on record
    bool holds = false;
    BigInt lhs, rhs;
    long long d_tangential = 0;
    BigInt deg_xk, nu;
    std::vector<Evidence> evidence;
};

inline BohReport check_boh(const CatalogEntry& entry, int k) {
    BohReport rep;
    auto meta_it = entry.metadata.find(k);

    std::optional<long long> d;
    std::string d_cit;
    std::optional<BigInt> deg_sk;
    std::string deg_cit;
    std::optional<long long> mu;
    std::string mu_cit;
    std::optional<BigInt> deg_xk;
    std::string xk_cit;

    if (meta_it != entry.metadata.end()) {
        if (meta_it->second.tangential_degree) {
            d = meta_it->second.tangential_degree;
            d_cit = meta_it->second.tangential_degree_citation;
        }
        if (meta_it->second.secant_degree) {
            deg_sk = meta_it->second.secant_degree;
            deg_cit = meta_it->second.secant_degree_citation;
        }
        if (meta_it->second.mu) {
            mu = meta_it->second.mu;
            mu_cit = meta_it->second.mu_citation;
        }
    }

    if (const auto* sc = std::get_if<ScrollDesc>(&entry.desc.v)) {
        const ScrollType& a = sc->a;
        // the inequality presumes tau_{X,k} generically finite, i.e.
        // s^(k) = (k+1)n+k: for scrolls that is a_1 >= k with sum a >= kn+k+1
        if (a.min_entry() >= k && !scroll_secant_fills(a, k)) {
            if (!mu) {
                mu = 1;
                mu_cit = "scrolls with a_1 >= k carry one (k+1)-secant k-plane through the general point";
            }
            if (!d) {
                d = 1;
                d_cit = "tangential projections of minimal-secant-degree scrolls are birational";
            }
            if (!deg_sk) {
                deg_sk = scroll_secant_degree(a, k); // equals 1 when S^k fills exactly
                deg_cit = "closed form binom(sum(a_j - k), k+1)";
            }
            // deg X_k from the symbolic tangential chain
            try {
                ScrollType b = a;
                for (int step = 0; step < k; ++step) b = scroll_tangential(b);
                deg_xk = b.degree();
                xk_cit = "iterated tangential projection rule on scroll types";
            } catch (const DegenerateProjectionError&) {
                deg_xk = 1;
                xk_cit = "tangential chain ends in a linear space";
            }
        }
    }

    // generic fallback: an entry certified MA/OA has birational tangential
    // projection onto a variety of minimal degree h+1
    if (meta_it != entry.metadata.end() && meta_it->second.known_class &&
        (*meta_it->second.known_class == ClassTag::MA || *meta_it->second.known_class == ClassTag::OA)) {
        MonomialMap map = realize(entry.desc);
        const int r = map.ambient_dim();
        if (!deg_xk) {
            // h from the expected dimension: MA/OA entries are not defective
            // so s = min(r, n(k+1)+k) with n from the coordinate chart
            // (transcribed classes are only stored for surfaces here)
            const int n = 2;
            const int h = r - expected_dimension(n, k, r);
            deg_xk = h + 1;
            xk_cit = "tangential projections of minimal-secant-degree varieties have minimal degree h+1";
        }
        if (!deg_sk && *meta_it->second.known_class == ClassTag::OA) {
            deg_sk = 1;
            deg_cit = "S^k fills its ambient space";
        }
    }

    if (!d || !mu || !deg_sk || !deg_xk) {
        rep.applicable = false;
        rep.evidence.push_back({"status", "Unknown", "missing transcribed data for the inequality"});
        return rep;
    }

    rep.applicable = true;
    rep.d_tangential = *d;
    rep.deg_xk = *deg_xk;
    rep.nu = nu_from_mu(BigInt(*mu), *deg_sk);
    rep.lhs = BigInt(*d) * *deg_xk;
    rep.rhs = rep.nu;
    rep.holds = rep.lhs <= rep.rhs;
    rep.evidence.push_back({"d_{X,k}", detail::str_of(*d), d_cit});
    rep.evidence.push_back({"deg X_k", detail::str_of(*deg_xk), xk_cit});
    rep.evidence.push_back({"mu_k", detail::str_of(*mu), mu_cit});
    rep.evidence.push_back({"deg S^k", detail::str_of(*deg_sk), deg_cit});
    rep.evidence.push_back({"nu_k", detail::str_of(rep.nu), "nu_k = mu_k * deg S^k"});
    return rep;
}

// ---------------------------------------------------------------------------
// Minimal degree of the k-tangential image
// ---------------------------------------------------------------------------

/// Checks deg(X_k) = h^(k)(X) + 1 by iterating the symbolic tangential rule.
/// Only meaningful for entries of minimal k-secant degree; others report
/// no value.
struct XkMinimalityReport {
    std::optional<bool> minimal;
    BigInt deg_xk;
    long long expected = 0;
    std::string note;
};

inline XkMinimalityReport minimal_degree_check_of_Xk(const CatalogEntry& entry, int k) {
    XkMinimalityReport rep;
    const auto* sc = std::get_if<ScrollDesc>(&entry.desc.v);
    if (!sc) {
        auto it = entry.metadata.find(k);
        if (it == entry.metadata.end() || !it->second.known_class ||
            (*it->second.known_class != ClassTag::MA && *it->second.known_class != ClassTag::OA)) {
            rep.note = "not certified of minimal k-secant degree; check skipped";
            return rep;
        }
        MonomialMap map = realize(entry.desc);
        const int r = map.ambient_dim();
        const int h = r - expected_dimension(2, k, r);
        rep.deg_xk = h + 1;
        rep.expected = h + 1;
        rep.minimal = true;
        rep.note = "tangential projections of minimal-secant-degree varieties have minimal degree h+1";
        return rep;
    }

    const ScrollType& a = sc->a;
    SecantClass cls = classify_scroll(a, k);
    if (cls.tag != ClassTag::MA && cls.tag != ClassTag::OA && cls.tag != ClassTag::Mk &&
        cls.tag != ClassTag::Defective) {
        rep.note = "S^k fills trivially; check skipped";
        return rep;
    }

    const int s = scroll_secant_dimension(a, k);
    const long long h = a.ambient() - s;
    rep.expected = h + 1;
    bool linearized = false;
    ScrollType b = a;
    for (int step = 0; step < k; ++step) {
        try {
            b = scroll_tangential(b);
        } catch (const DegenerateProjectionError&) {
            linearized = true;
            break;
        }
    }
    rep.deg_xk = linearized ? BigInt(1) : BigInt(b.degree());
    rep.minimal = (rep.deg_xk == rep.expected);
    rep.note = linearized ? "tangential chain ends in a linear space" : "symbolic tangential chain";
    return rep;
}

/// Consistency check of the converse direction of the tangential-projection
/// characterization (a conjecture): where both sides' data exist, a
/// birational k-tangential projection onto a variety of minimal degree
/// should occur exactly for the MA/OA entries.  Reported as
/// conjecture-consistent or not, never as proved.
struct BronowskiReport {
    bool applicable = false;
    bool consistent = false;
    bool forward = false;  // class is MA/OA
    bool backward = false; // d_{X,k} = 1 and X_k of minimal degree
    std::string note;
};

inline BronowskiReport bronowski_check(const CatalogEntry& entry, int k, const EngineConfig& cfg) {
    BronowskiReport rep;
    auto xk = minimal_degree_check_of_Xk(entry, k);

    std::optional<long long> d;
    if (auto it = entry.metadata.find(k); it != entry.metadata.end())
        d = it->second.tangential_degree;
    if (!d) {
        if (const auto* sc = std::get_if<ScrollDesc>(&entry.desc.v))
            if (sc->a.min_entry() >= k && !scroll_secant_fills(sc->a, k)) d = 1;
    }
    if (!d || !xk.minimal.has_value()) {
        rep.note = "tangential degree or minimality of X_k not on record";
        return rep;
    }

    SecantClass cls = classify_entry(entry, k, cfg);
    if (cls.tag == ClassTag::Unknown) {
        rep.note = "classification gated on absent metadata";
        return rep;
    }
    rep.applicable = true;
    rep.forward = (cls.tag == ClassTag::MA || cls.tag == ClassTag::OA);
    rep.backward = (*d == 1 && *xk.minimal);
    rep.consistent = (rep.forward == rep.backward);
    rep.note = rep.consistent ? "conjecture-consistent" : "counterexample candidate";
    return rep;
}

} // namespace secant
