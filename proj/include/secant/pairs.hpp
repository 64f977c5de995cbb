#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/errors.hpp"

namespace secant::pairs {

struct NotNefError : std::runtime_error {
    explicit NotNefError(const std::string& what) : std::runtime_error(what) {}
};

/// Rational surface models on which the lattice calculus runs: the plane or
/// a Hirzebruch surface F_a, blown up at t general points.  Nef testing
/// relies on a finite list of negative classes, which is complete for at
/// most 8 general points of P^2; t > 8 is rejected rather than approximated.
struct SurfaceModel {
    enum class Kind { P2Blowup, FaBlowup };
    Kind kind = Kind::P2Blowup;
    int a = 0; // Hirzebruch index, FaBlowup only
    int t = 0; // number of general blown-up points

    static SurfaceModel p2(int t = 0) {
        SurfaceModel m;
        m.kind = Kind::P2Blowup;
        m.t = t;
        m.check();
        return m;
    }
    static SurfaceModel fa(int a, int t = 0) {
        SurfaceModel m;
        m.kind = Kind::FaBlowup;
        m.a = a;
        m.t = t;
        m.check();
        return m;
    }

    void check() const {
        if (t < 0 || t > 8)
            throw std::invalid_argument("SurfaceModel: supports 0 <= t <= 8 general points only");
        if (a < 0) throw std::invalid_argument("SurfaceModel: Hirzebruch index must be >= 0");
    }

    /// basis: (L; E_1..E_t) on P2Blowup, (E, F; E_1..E_t) on FaBlowup
    int basis_size() const { return (kind == Kind::P2Blowup ? 1 : 2) + t; }

    bool operator==(const SurfaceModel& o) const { return kind == o.kind && a == o.a && t == o.t; }

    std::string str() const {
        std::ostringstream os;
        if (kind == Kind::P2Blowup) os << "P2";
        else os << "F" << a;
        if (t > 0) os << "+" << t << "pts";
        return os.str();
    }
};

/// Integer vector in the model's fixed Picard basis.
struct DivisorClass {
    std::vector<long long> c;

    bool operator==(const DivisorClass& o) const { return c == o.c; }

    std::string str(const SurfaceModel& m) const {
        std::ostringstream os;
        const char* base2 = m.kind == SurfaceModel::Kind::P2Blowup ? "L" : nullptr;
        std::size_t i = 0;
        bool first = true;
        auto emit = [&](long long v, const std::string& sym) {
            if (v == 0) return;
            if (!first && v > 0) os << "+";
            if (v == -1) os << "-";
            else if (v != 1) os << v;
            os << sym;
            first = false;
        };
        if (base2) {
            emit(c[0], "L");
            i = 1;
        } else {
            emit(c[0], "E");
            emit(c[1], "F");
            i = 2;
        }
        for (std::size_t j = i; j < c.size(); ++j)
            emit(c[j], "e" + std::to_string(j - i + 1));
        if (first) os << "0";
        return os.str();
    }
};

inline DivisorClass make_class(const SurfaceModel& m, std::vector<long long> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(m.basis_size()))
        throw std::invalid_argument("DivisorClass: coefficient count does not match model basis");
    return DivisorClass{std::move(coeffs)};
}

/// Convenience constructors padding exceptional coefficients with zeros.
inline DivisorClass p2_class(const SurfaceModel& m, long long d, std::vector<long long> mult = {}) {
    std::vector<long long> c{d};
    mult.resize(static_cast<std::size_t>(m.t), 0);
    for (long long v : mult) c.push_back(v);
    return make_class(m, std::move(c));
}
inline DivisorClass fa_class(const SurfaceModel& m, long long alpha, long long beta,
                             std::vector<long long> mult = {}) {
    std::vector<long long> c{alpha, beta};
    mult.resize(static_cast<std::size_t>(m.t), 0);
    for (long long v : mult) c.push_back(v);
    return make_class(m, std::move(c));
}

/// The intersection form: L^2 = 1 on the plane; E^2 = -a, E.F = 1, F^2 = 0
/// on F_a; exceptional classes are orthogonal (-1)-vectors in both cases.
inline long long intersect(const DivisorClass& x, const DivisorClass& y, const SurfaceModel& m) {
    m.check();
    if (x.c.size() != y.c.size() || x.c.size() != static_cast<std::size_t>(m.basis_size()))
        throw std::invalid_argument("intersect: classes do not live on the given model");
    long long acc = 0;
    std::size_t i0;
    if (m.kind == SurfaceModel::Kind::P2Blowup) {
        acc += x.c[0] * y.c[0];
        i0 = 1;
    } else {
        acc += -static_cast<long long>(m.a) * x.c[0] * y.c[0]; // E.E = -a
        acc += x.c[0] * y.c[1] + x.c[1] * y.c[0];              // E.F = F.E = 1
        i0 = 2;
    }
    for (std::size_t i = i0; i < x.c.size(); ++i) acc -= x.c[i] * y.c[i];
    return acc;
}

/// K = -3L + sum E_i  or  K = -2E - (a+2)F + sum E_i.
inline DivisorClass canonical(const SurfaceModel& m) {
    m.check();
    std::vector<long long> c;
    if (m.kind == SurfaceModel::Kind::P2Blowup) c.push_back(-3);
    else {
        c.push_back(-2);
        c.push_back(-static_cast<long long>(m.a) - 2);
    }
    for (int i = 0; i < m.t; ++i) c.push_back(1);
    return DivisorClass{std::move(c)};
}

/// p_a(D) = 1 + (D^2 + D.K)/2 by adjunction.
inline long long arithmetic_genus(const DivisorClass& d, const SurfaceModel& m) {
    long long dd = intersect(d, d, m);
    long long dk = intersect(d, canonical(m), m);
    if ((dd + dk) % 2 != 0)
        throw ParityError("arithmetic_genus: D^2 + D.K is odd for " + d.str(m));
    return 1 + (dd + dk) / 2;
}

// ---------------------------------------------------------------------------
// Curve class lists
// ---------------------------------------------------------------------------

namespace detail {

/// All classes C = c0 L + sum c_i E_i with C^2 = -1 and K.C = -1: the
/// (-1)-classes of the blown-up plane.  For up to 8 general points this list
/// is finite and classical (degrees up to 6, multiplicities up to 3).
inline std::vector<DivisorClass> enumerate_minus_one_classes_p2(int t) {
    std::vector<DivisorClass> out;
    std::vector<long long> c(static_cast<std::size_t>(t) + 1, 0);
    // c0 in 0..6; c_i in -3..1; C^2 = c0^2 - sum c_i^2 = -1; K.C = -3c0 - sum c_i = -1
    auto rec = [&](auto&& self, int idx, long long sq, long long sum) -> void {
        if (idx == t + 1) {
            if (c[0] * c[0] - sq == -1 && -3 * c[0] - sum == -1) out.push_back(DivisorClass{c});
            return;
        }
        for (long long v = -3; v <= 1; ++v) {
            c[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, sq + v * v, sum + v);
        }
        c[static_cast<std::size_t>(idx)] = 0;
    };
    for (long long c0 = 0; c0 <= 6; ++c0) {
        c[0] = c0;
        rec(rec, 1, 0, 0);
    }
    std::sort(out.begin(), out.end(), [](const DivisorClass& x, const DivisorClass& y) { return x.c < y.c; });
    return out;
}

/// Cached per t; the magic-static initialization keeps concurrent sweeps safe.
inline const std::vector<DivisorClass>& minus_one_classes_p2(int t) {
    static const std::array<std::vector<DivisorClass>, 9> all = [] {
        std::array<std::vector<DivisorClass>, 9> a;
        for (int i = 0; i <= 8; ++i) a[static_cast<std::size_t>(i)] = enumerate_minus_one_classes_p2(i);
        return a;
    }();
    return all[static_cast<std::size_t>(t)];
}

} // namespace detail

/// Classes of irreducible (-1)-curves on the model (general points).
inline std::vector<DivisorClass> minus_one_classes(const SurfaceModel& m) {
    m.check();
    if (m.kind == SurfaceModel::Kind::P2Blowup) return detail::minus_one_classes_p2(m.t);
    std::vector<DivisorClass> out;
    auto unit = [&](std::size_t pos) {
        std::vector<long long> c(static_cast<std::size_t>(m.basis_size()), 0);
        c[pos] = 1;
        return c;
    };
    if (m.a == 1) out.push_back(DivisorClass{unit(0)}); // the (-1)-section E
    for (int i = 0; i < m.t; ++i) {
        out.push_back(DivisorClass{unit(static_cast<std::size_t>(2 + i))}); // E_i
        std::vector<long long> f = unit(1);
        f[static_cast<std::size_t>(2 + i)] = -1; // F - E_i
        out.push_back(DivisorClass{std::move(f)});
        if (m.a == 0) {
            std::vector<long long> e = unit(0);
            e[static_cast<std::size_t>(2 + i)] = -1; // E - E_i (second ruling of F_0)
            out.push_back(DivisorClass{std::move(e)});
        }
    }
    return out;
}

/// Classes of irreducible rational curves with self-intersection 0
/// (the fibration classes used by the scroll test).
inline std::vector<DivisorClass> zero_curve_classes(const SurfaceModel& m) {
    m.check();
    std::vector<DivisorClass> out;
    auto unit = [&](std::size_t pos) {
        std::vector<long long> c(static_cast<std::size_t>(m.basis_size()), 0);
        c[pos] = 1;
        return c;
    };
    if (m.kind == SurfaceModel::Kind::FaBlowup) {
        out.push_back(DivisorClass{unit(1)});                 // F
        if (m.a == 0) out.push_back(DivisorClass{unit(0)});   // the other ruling of F_0
    } else {
        for (int i = 0; i < m.t; ++i) {
            std::vector<long long> c = unit(0);
            c[static_cast<std::size_t>(1 + i)] = -1; // L - E_i
            out.push_back(DivisorClass{std::move(c)});
        }
    }
    return out;
}

/// The full generator list the nef test runs against.  For blowups of P^2 at
/// general points this is exactly the extremal frame (fibrations plus
/// (-1)-classes); for blowups of F_a it covers the fibration and exceptional
/// frame documented for this calculus.
inline std::vector<DivisorClass> nef_test_classes(const SurfaceModel& m) {
    m.check();
    std::vector<DivisorClass> out;
    auto unit = [&](std::size_t pos) {
        std::vector<long long> c(static_cast<std::size_t>(m.basis_size()), 0);
        c[pos] = 1;
        return c;
    };
    if (m.kind == SurfaceModel::Kind::P2Blowup) {
        out.push_back(DivisorClass{unit(0)}); // L
        for (int i = 0; i < m.t; ++i) out.push_back(DivisorClass{unit(static_cast<std::size_t>(1 + i))});
        for (auto& z : zero_curve_classes(m)) out.push_back(z);
        for (auto& c : minus_one_classes(m)) out.push_back(c);
    } else {
        out.push_back(DivisorClass{unit(0)}); // E
        out.push_back(DivisorClass{unit(1)}); // F
        for (int i = 0; i < m.t; ++i) out.push_back(DivisorClass{unit(static_cast<std::size_t>(2 + i))});
        for (auto& c : minus_one_classes(m)) out.push_back(c);
    }
    return out;
}

struct NefResult {
    bool nef = false;
    std::optional<DivisorClass> witness; // first violating curve class
};

/// D is nef iff it meets every enumerated curve class nonnegatively.
inline NefResult nef_test(const DivisorClass& d, const SurfaceModel& m) {
    for (const auto& c : nef_test_classes(m))
        if (intersect(d, c, m) < 0) return {false, c};
    return {true, std::nullopt};
}

/// Strict positivity against the same frame plus D^2 > 0 (Nakai on these
/// rational models).
inline bool is_ample(const DivisorClass& d, const SurfaceModel& m) {
    if (intersect(d, d, m) <= 0) return false;
    for (const auto& c : nef_test_classes(m))
        if (intersect(d, c, m) <= 0) return false;
    return true;
}

/// Minimal pair: no (-1)-curve orthogonal to D.
inline std::optional<DivisorClass> minimality_witness(const DivisorClass& d, const SurfaceModel& m) {
    for (const auto& c : minus_one_classes(m))
        if (intersect(d, c, m) == 0) return c;
    return std::nullopt;
}

/// h-scroll test: the least D.Z over fibration classes Z, if any exist.
inline std::optional<std::pair<long long, DivisorClass>>
scroll_index(const DivisorClass& d, const SurfaceModel& m) {
    std::optional<std::pair<long long, DivisorClass>> best;
    for (const auto& z : zero_curve_classes(m)) {
        long long v = intersect(d, z, m);
        if (!best || v < best->first) best = {v, z};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Adjoint nef trichotomy
// ---------------------------------------------------------------------------

/// For nef D, either K+D is nef or the pair is non-minimal, a h-scroll with
/// h <= 1, or a m-Veronese pair with m <= 2.  Reports which, with a witness
/// curve, and evaluates (K+D)^2 = K^2 + 4(g-1) - d.
struct AdjointReport {
    enum class Outcome { AdjointNef, NotMinimal, Scroll, SmallVeronese };
    Outcome outcome = Outcome::AdjointNef;
    std::optional<DivisorClass> witness;
    long long kd_square = 0;
    bool consistent = true; // no exception applied yet K+D failed the nef frame
};

inline AdjointReport adjoint_nef_check(const DivisorClass& d, const SurfaceModel& m) {
    auto nef = nef_test(d, m);
    if (!nef.nef)
        throw NotNefError("adjoint_nef_check: D is not nef (witness " + nef.witness->str(m) + ")");

    AdjointReport rep;
    const DivisorClass k = canonical(m);
    DivisorClass kd;
    kd.c.resize(d.c.size());
    for (std::size_t i = 0; i < d.c.size(); ++i) kd.c[i] = k.c[i] + d.c[i];
    rep.kd_square = intersect(kd, kd, m);

    if (auto w = minimality_witness(d, m)) {
        rep.outcome = AdjointReport::Outcome::NotMinimal;
        rep.witness = w;
        return rep;
    }
    if (auto z = scroll_index(d, m); z && z->first <= 1) {
        rep.outcome = AdjointReport::Outcome::Scroll;
        rep.witness = z->second;
        return rep;
    }
    if (m.kind == SurfaceModel::Kind::P2Blowup && m.t == 0 && d.c[0] <= 2) {
        rep.outcome = AdjointReport::Outcome::SmallVeronese;
        return rep;
    }
    rep.outcome = AdjointReport::Outcome::AdjointNef;
    auto adj = nef_test(kd, m);
    if (!adj.nef) {
        rep.consistent = false;
        rep.witness = adj.witness;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Extremal and almost-extremal pair classification
// ---------------------------------------------------------------------------

struct PairClassification {
    enum class Category {
        Extremal,       // d = 4g+4+eps
        AlmostExtremal, // g >= 2, d = 4g+4-s with 1 <= s <= 3
        Interior,
        NotNef,
        NotBig,
        NotMinimalPair,
        ScrollPair,
        BoundExceeded, // d > 4g+4+eps: impossible under the hypotheses
    };
    Category category = Category::Interior;
    long long d = 0, g = 0, r = 0;
    int eps = 0;
    long long s = 0;
    bool ample = false;
    long long kd_square = 0;
    std::string family;
    std::optional<DivisorClass> witness;
};

namespace detail {

inline std::string match_almost_extremal_p2(long long m0, const std::vector<long long>& mult,
                                            long long g, long long s) {
    const int i = static_cast<int>(mult.size());
    bool all = true;
    if (m0 == 5 && i <= 2) {
        for (long long v : mult) all = all && v == -2;
        if (all && s == 3 && g == 6 - i)
            return "tangential projection of a 5-Veronese pair from " + std::to_string(i) + " points";
    }
    if (m0 == 4 && i >= 1 && i <= 3) {
        all = true;
        for (long long v : mult) all = all && v == -1;
        if (all && s == i && g == 3)
            return "projection of a 4-Veronese pair from " + std::to_string(i) + " points";
    }
    return "";
}

} // namespace detail

/// Full classification of a pair against the degree bound d <= 4g+4+eps:
/// names the extremal families (2-, 3-, 4-Veronese and the Castelnuovo
/// (2, a+g+1)-pairs) and the almost-extremal cases for g >= 2, s <= 3.
inline PairClassification enriques_classifier(const DivisorClass& D, const SurfaceModel& m) {
    PairClassification out;
    auto nef = nef_test(D, m);
    if (!nef.nef) {
        out.category = PairClassification::Category::NotNef;
        out.witness = nef.witness;
        return out;
    }
    out.d = intersect(D, D, m);
    if (out.d <= 0) {
        out.category = PairClassification::Category::NotBig;
        return out;
    }
    if (auto w = minimality_witness(D, m)) {
        out.category = PairClassification::Category::NotMinimalPair;
        out.witness = w;
        return out;
    }
    if (auto z = scroll_index(D, m); z && z->first <= 1) {
        out.category = PairClassification::Category::ScrollPair;
        out.witness = z->second;
        return out;
    }

    out.g = arithmetic_genus(D, m);
    out.eps = (out.g == 1) ? 1 : 0;
    // dim |D| via Riemann-Roch with vanishing higher cohomology on these
    // rational models (nef and big D)
    out.r = out.d - out.g + 1;
    out.ample = is_ample(D, m);
    const DivisorClass K = canonical(m);
    DivisorClass kd;
    kd.c.resize(D.c.size());
    for (std::size_t i = 0; i < D.c.size(); ++i) kd.c[i] = K.c[i] + D.c[i];
    out.kd_square = intersect(kd, kd, m);

    const long long slack = 4 * out.g + 4 + out.eps - out.d;
    if (slack < 0) {
        out.category = PairClassification::Category::BoundExceeded;
        return out;
    }
    if (slack == 0) {
        out.category = PairClassification::Category::Extremal;
        if (m.kind == SurfaceModel::Kind::P2Blowup && m.t == 0) {
            if (D.c[0] >= 2 && D.c[0] <= 4)
                out.family = std::to_string(D.c[0]) + "-Veronese pair";
        } else if (m.kind == SurfaceModel::Kind::FaBlowup && m.t == 0) {
            long long alpha = D.c[0], beta = D.c[1];
            if (m.a == 0 && beta == 2) std::swap(alpha, beta); // both rulings play E on F_0
            if (alpha == 2 && beta == m.a + out.g + 1) {
                std::ostringstream os;
                os << "(2," << beta << ")-pair on F" << m.a << " (Castelnuovo (" << m.a << ","
                   << out.g << "))";
                out.family = os.str();
            }
        }
        return out;
    }

    out.s = slack;
    if (out.g >= 2 && slack <= 3 && out.eps == 0) {
        out.category = PairClassification::Category::AlmostExtremal;
        if (!out.ample) {
            out.family = ""; // outside the ample classification
            return out;
        }
        if (m.kind == SurfaceModel::Kind::P2Blowup) {
            std::vector<long long> mult(D.c.begin() + 1, D.c.end());
            out.family = detail::match_almost_extremal_p2(D.c[0], mult, out.g, out.s);
        } else if (m.t == 0 && m.a == 1) {
            // F_1 is the plane blown up once: E_1 = E, L = E + F
            long long alpha = D.c[0], beta = D.c[1];
            out.family = detail::match_almost_extremal_p2(beta, {alpha - beta}, out.g, out.s);
        } else if (m.t == 0 && m.a == 0) {
            long long alpha = D.c[0], beta = D.c[1];
            if (alpha == 3 && beta == 3 && out.g == 4 && out.s == 2)
                out.family = "pair of type (3,3) on the quadric";
        } else if (m.kind == SurfaceModel::Kind::FaBlowup && m.t >= 1 && m.t <= 3) {
            long long alpha = D.c[0], beta = D.c[1];
            bool ones = true;
            for (std::size_t i = 2; i < D.c.size(); ++i) ones = ones && D.c[i] == -1;
            if (alpha == 2 && ones && beta == m.a + out.g + 1 && out.s == m.t) {
                std::ostringstream os;
                os << "projection of a Castelnuovo (" << m.a << "," << out.g
                   << ") pair from " << m.t << " points";
                out.family = os.str();
            }
        }
        return out;
    }

    out.category = PairClassification::Category::Interior;
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepHit {
    SurfaceModel model;
    DivisorClass D;
    long long d = 0, g = 0, r = 0;
    int eps = 0;
    long long s = 0;
    std::string family;

    bool operator==(const SweepHit& o) const { return model == o.model && D == o.D; }
};

namespace detail {

template <typename Pred>
void sweep_models(int bound, int a_max, Pred&& emit) {
    {
        SurfaceModel p2 = SurfaceModel::p2();
        for (long long m0 = -bound; m0 <= bound; ++m0) emit(p2, DivisorClass{{m0}});
    }
    for (int a = 0; a <= a_max; ++a) {
        SurfaceModel fa = SurfaceModel::fa(a);
        for (long long al = -bound; al <= bound; ++al)
            for (long long be = -bound; be <= bound; ++be) emit(fa, DivisorClass{{al, be}});
    }
}

/// On F_0 the classes (al, be) and (be, al) are the same pair under the swap
/// of rulings; keep the canonical representative al <= be.
inline bool canonical_on_f0(const SurfaceModel& m, const DivisorClass& D) {
    if (m.kind != SurfaceModel::Kind::FaBlowup || m.a != 0 || m.t != 0) return true;
    return D.c[0] <= D.c[1];
}

} // namespace detail

/// All nef-and-big minimal non-scroll classes on P^2 and F_a (t = 0) within
/// the coefficient bound whose degree attains 4g+4+eps.
inline std::vector<SweepHit> extremal_sweep(int bound, int a_max) {
    std::vector<SweepHit> hits;
    detail::sweep_models(bound, a_max, [&](const SurfaceModel& m, const DivisorClass& D) {
        if (!detail::canonical_on_f0(m, D)) return;
        auto cls = enriques_classifier(D, m);
        if (cls.category != PairClassification::Category::Extremal) return;
        hits.push_back({m, D, cls.d, cls.g, cls.r, cls.eps, 0, cls.family});
    });
    return hits;
}

/// All ample minimal non-scroll classes with g >= 2 and d = 4g+4-s,
/// 1 <= s <= 3, on the same models.
inline std::vector<SweepHit> almost_extremal_sweep(int bound, int a_max) {
    std::vector<SweepHit> hits;
    detail::sweep_models(bound, a_max, [&](const SurfaceModel& m, const DivisorClass& D) {
        if (!detail::canonical_on_f0(m, D)) return;
        auto cls = enriques_classifier(D, m);
        if (cls.category != PairClassification::Category::AlmostExtremal) return;
        if (!cls.ample) return;
        hits.push_back({m, D, cls.d, cls.g, cls.r, cls.eps, cls.s, cls.family});
    });
    return hits;
}

// ---------------------------------------------------------------------------
// Castelnuovo pairs and the conic-bundle bridge
// ---------------------------------------------------------------------------

/// The (a,g)-Castelnuovo pair (F_a, 2E+(a+g+1)F): degree 4g+4, sectional
/// genus g, span P^{3g+5}.  Odd parity of a+1+g marks the members that fill
/// their span with one apparent secant plane; even parity the defective ones.
struct CastelnuovoPair {
    int a = 0, g = 0;
    SurfaceModel model;
    DivisorClass D;
    long long d = 0, r = 0;
    bool odd = false;
};

inline CastelnuovoPair castelnuovo_pair(int a, int g) {
    if (a < 0 || g < 0) throw std::invalid_argument("castelnuovo_pair: need a, g >= 0");
    if (g < a - 1)
        throw std::invalid_argument("castelnuovo_pair: D.E = g+1-a < 0, the pair is not nef");
    CastelnuovoPair p;
    p.a = a;
    p.g = g;
    p.model = SurfaceModel::fa(a);
    p.D = fa_class(p.model, 2, a + g + 1);
    p.d = intersect(p.D, p.D, p.model);
    p.r = p.d - arithmetic_genus(p.D, p.model) + 1;
    p.odd = ((a + 1 + g) % 2) != 0;
    return p;
}

} // namespace secant::pairs
