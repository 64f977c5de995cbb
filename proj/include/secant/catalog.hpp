#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "secant/binomial.hpp"
#include "secant/monomial_map.hpp"
#include "secant/scroll_type.hpp"

namespace secant {

/// Membership tags for the minimal-secant-degree classes.
enum class ClassTag {
    Mk,             // minimal k-secant degree, h > 0
    MA,             // minimal number of apparent (k+1)-secant (k-1)-planes
    OA,             // one apparent (k+1)-secant (k-1)-plane
    FillsTrivially, // S^k fills the ambient space without OA certification
    NotMinimal,
    Defective,
    Unknown,
};

inline const char* class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::Mk: return "Mk";
        case ClassTag::MA: return "MA";
        case ClassTag::OA: return "OA";
        case ClassTag::FillsTrivially: return "FillsTrivially";
        case ClassTag::NotMinimal: return "NotMinimal";
        case ClassTag::Defective: return "Defective";
        case ClassTag::Unknown: return "Unknown";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Variety descriptors
// ---------------------------------------------------------------------------

struct Descriptor;

struct VeroneseDesc {
    int n = 1, d = 1;
    bool operator==(const VeroneseDesc& o) const { return n == o.n && d == o.d; }
};
struct SegreDesc {
    std::vector<int> dims;
    bool operator==(const SegreDesc& o) const { return dims == o.dims; }
};
struct ScrollDesc {
    ScrollType a;
    bool operator==(const ScrollDesc& o) const { return a == o.a; }
};
struct BundleDesc {
    ScrollType a;
    int alpha = 1, beta = 0;
    bool operator==(const BundleDesc& o) const { return a == o.a && alpha == o.alpha && beta == o.beta; }
};
struct RncDesc {
    int r = 1;
    bool operator==(const RncDesc& o) const { return r == o.r; }
};
struct ConeDesc {
    std::shared_ptr<const Descriptor> inner;
    int l = 0;
    bool operator==(const ConeDesc& o) const;
};

struct Descriptor {
    std::variant<VeroneseDesc, SegreDesc, ScrollDesc, BundleDesc, RncDesc, ConeDesc> v;
    bool operator==(const Descriptor& o) const { return v == o.v; }
};

inline bool ConeDesc::operator==(const ConeDesc& o) const {
    return l == o.l && inner && o.inner && *inner == *o.inner;
}

inline MonomialMap realize(const Descriptor& d) {
    return std::visit(
        [](const auto& x) -> MonomialMap {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, VeroneseDesc>) return veronese(x.n, x.d);
            else if constexpr (std::is_same_v<T, SegreDesc>) return segre(x.dims);
            else if constexpr (std::is_same_v<T, ScrollDesc>) return scroll(x.a);
            else if constexpr (std::is_same_v<T, BundleDesc>) return bundle_embedding(x.a, x.alpha, x.beta);
            else if constexpr (std::is_same_v<T, RncDesc>) return rational_normal_curve(x.r);
            else return cone_over(realize(*x.inner), x.l);
        },
        d.v);
}

inline std::string describe(const Descriptor& d) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, VeroneseDesc>) os << "veronese(" << x.n << "," << x.d << ")";
            else if constexpr (std::is_same_v<T, SegreDesc>) {
                os << "segre(";
                for (std::size_t i = 0; i < x.dims.size(); ++i) os << (i ? "," : "") << x.dims[i];
                os << ")";
            } else if constexpr (std::is_same_v<T, ScrollDesc>) os << "scroll" << x.a.str();
            else if constexpr (std::is_same_v<T, BundleDesc>)
                os << "bundle" << x.a.str() << "[" << x.alpha << "," << x.beta << "]";
            else if constexpr (std::is_same_v<T, RncDesc>) os << "rnc(" << x.r << ")";
            else os << "cone(" << describe(*x.inner) << "," << x.l << ")";
            return os.str();
        },
        d.v);
}

// ---------------------------------------------------------------------------
// Catalog entries: descriptor + transcribed invariants
// ---------------------------------------------------------------------------

/// Values that are transcribed from the classification literature rather
/// than computed here (counting secant planes through a general point is
/// beyond desk scale).  Every value carries its justification.
struct KMetadata {
    std::optional<long long> mu; // number of (k+1)-secant k-planes through a general point
    std::string mu_citation;
    std::optional<long long> tangential_degree; // degree of tau_{X,k} onto its image
    std::string tangential_degree_citation;
    std::optional<BigInt> secant_degree; // deg S^k(X)
    std::string secant_degree_citation;
    std::optional<ClassTag> known_class;
    std::string known_class_citation;
};

struct CatalogEntry {
    std::string name;
    Descriptor desc;
    std::map<int, KMetadata> metadata; // keyed by secant index k
    bool weakly_defective = false;
    std::string weakly_defective_citation;
};

inline CatalogEntry make_entry(std::string name, Descriptor desc) {
    CatalogEntry e;
    e.name = std::move(name);
    e.desc = std::move(desc);
    return e;
}

/// The varieties whose classification data is carried as transcribed
/// metadata.  Scrolls, Segre products, cones and rational normal curves are
/// covered by closed forms and need no entries here.
inline std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e = make_entry("veronese(2,2)", Descriptor{VeroneseDesc{2, 2}});
        KMetadata m;
        m.secant_degree = 3;
        m.secant_degree_citation = "chordal variety of the Veronese surface: symmetric determinantal cubic";
        m.known_class = ClassTag::Defective;
        m.known_class_citation = "classification of defective surfaces: 2-Veronese images of surfaces of degree k in P^{k+1}";
        e.metadata[1] = m;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("veronese(2,3)", Descriptor{VeroneseDesc{2, 3}});
        KMetadata m1;
        m1.mu = 1;
        m1.mu_citation = "double-point formula count for del Pezzo surfaces";
        m1.tangential_degree = 1;
        m1.tangential_degree_citation = "birational tangential projection of minimal-secant-degree surfaces";
        m1.secant_degree = 15;
        m1.secant_degree_citation = "chordal variety of the degree-9 del Pezzo surface attains the minimal-degree bound";
        m1.known_class = ClassTag::MA;
        m1.known_class_citation = "smooth del Pezzo surfaces of degree 5..9 acquire one apparent double point";
        e.metadata[1] = m1;
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "internal projection to the conic-bundle model of F_1 carries one apparent triple point";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "birational tangential projection of minimal-secant-degree surfaces";
        m.secant_degree = 4;
        m.secant_degree_citation = "four equianharmonic cubics in a general pencil";
        m.known_class = ClassTag::MA;
        m.known_class_citation = "cubic Veronese surface has minimal count of apparent 3-secant 1-planes";
        e.metadata[2] = m;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("veronese(2,4)", Descriptor{VeroneseDesc{2, 4}});
        KMetadata m3;
        m3.mu = 1;
        m3.mu_citation = "double-point count for the quartic Veronese surface";
        m3.tangential_degree = 1;
        m3.tangential_degree_citation = "birational tangential projection of minimal-secant-degree surfaces";
        m3.secant_degree = 35;
        m3.secant_degree_citation = "multisecant formulas for S^3 of the quartic Veronese surface";
        m3.known_class = ClassTag::MA;
        m3.known_class_citation = "quartic Veronese surface has minimal count of apparent 4-secant 2-planes";
        e.metadata[3] = m3;
        KMetadata m4;
        m4.secant_degree = 6;
        m4.secant_degree_citation = "S^4(V_{2,4}) is cut on its span by the symmetric determinantal sextic";
        m4.known_class = ClassTag::Defective;
        m4.known_class_citation = "2-Veronese image of a quartic surface in P^5 is 4-defective";
        e.metadata[4] = m4;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("veronese(2,5)", Descriptor{VeroneseDesc{2, 5}});
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "pencil-kernel construction: a unique 7-secant 6-plane through the general ambient point";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "one apparent secant plane forces a birational tangential projection";
        m.known_class = ClassTag::OA;
        m.known_class_citation = "quintic Veronese surface fills P^20 with one apparent 7-secant 5-plane";
        e.metadata[6] = m;
        out.push_back(std::move(e));
    }
    {
        // the smooth quadric embedded by |3E+3F| in P^15
        CatalogEntry e = make_entry("quadric cubic embedding", Descriptor{BundleDesc{ScrollType{1, 1}, 3, 0}});
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "internal projection is a double tangential projection of the quintic "
                        "Veronese surface, which carries one apparent secant plane";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "birational tangential projection of minimal-secant-degree surfaces";
        m.secant_degree = 6;
        m.secant_degree_citation = "S^4 is cut on the span by the symmetric determinantal sextic";
        m.known_class = ClassTag::MA;
        m.known_class_citation = "cubic embedding of the quadric has minimal count of apparent "
                                 "5-secant 3-planes";
        e.metadata[4] = m;
        out.push_back(std::move(e));
    }
    {
        // degree-8 del Pezzo surface: F_0 embedded by |2E+2F|
        CatalogEntry e = make_entry("delpezzo(8)", Descriptor{BundleDesc{ScrollType{1, 1}, 2, 0}});
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "double-point formula count for del Pezzo surfaces";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "birational tangential projection of minimal-secant-degree surfaces";
        m.secant_degree = 10;
        m.secant_degree_citation = "chordal variety of a degree-8 del Pezzo surface attains the minimal-degree bound";
        m.known_class = ClassTag::MA;
        m.known_class_citation = "smooth del Pezzo surfaces of degree 5..9 have one apparent double point after projection";
        e.metadata[1] = m;
        out.push_back(std::move(e));
    }
    {
        // conic-bundle embedding of F_1 by |2E+3F| (anticanonical, degree 8)
        CatalogEntry e = make_entry("conicbundle(0,1)", Descriptor{BundleDesc{ScrollType{0, 1}, 2, 1}});
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "matrix-pencil kernel map contracts the unique secant plane through the general point";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "one apparent secant plane forces a birational tangential projection";
        m.known_class = ClassTag::OA;
        m.known_class_citation = "odd conic-bundle embeddings of Hirzebruch surfaces fill their span with one apparent secant plane";
        e.metadata[2] = m;
        out.push_back(std::move(e));
    }
    {
        // conic-bundle embedding of F_1 by |2H+F| on P(1,2): degree 16 in P^14
        CatalogEntry e = make_entry("conicbundle(1,2)", Descriptor{BundleDesc{ScrollType{1, 2}, 2, 1}});
        KMetadata m;
        m.mu = 1;
        m.mu_citation = "matrix-pencil kernel map contracts the unique secant plane through the general point";
        m.tangential_degree = 1;
        m.tangential_degree_citation = "one apparent secant plane forces a birational tangential projection";
        m.known_class = ClassTag::OA;
        m.known_class_citation = "odd conic-bundle embeddings of Hirzebruch surfaces fill their span with one apparent secant plane";
        e.metadata[4] = m;
        out.push_back(std::move(e));
    }

    return out;
}

/// Looks up transcribed metadata for a descriptor, if any builtin matches.
inline std::optional<CatalogEntry> find_builtin(const Descriptor& d) {
    for (auto& e : builtin_catalog())
        if (e.desc == d) return e;
    return std::nullopt;
}

} // namespace secant
