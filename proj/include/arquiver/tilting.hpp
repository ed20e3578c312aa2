#pragma once

#include "arquiver/homological.hpp"
#include "arquiver/knit.hpp"
#include "arquiver/shortchain.hpp"

namespace arq {

enum class Ext1Method { Resolution, ARFormula };

/// dim Ext^1(X, Y). Resolution applies Hom(-, Y) to the minimal presentation
/// and works over any algebra; ARFormula computes dim Hom(Y, tau X) and is
/// valid over hereditary algebras only.
inline std::size_t ext1_dim(const Representation& x, const Representation& y, Ext1Method method) {
    if (x.algebra.get() != y.algebra.get()) fail("AlgebraMismatch", "Ext across algebras");
    if (method == Ext1Method::ARFormula) {
        if (!is_hereditary(x.algebra))
            fail("NotHereditary", "the AR formula for Ext needs a hereditary algebra");
        return hom_dim(y, tau(x));
    }
    ProjectivePresentation pres = minimal_projective_presentation(x);
    HomBasis hom_k = hom_basis(pres.kernel, y);
    HomBasis hom_p0 = hom_basis(pres.p0.rep, y);
    Matrix image(hom_p0.dim(), hom_k.dim());
    for (std::size_t i = 0; i < hom_p0.dim(); ++i) {
        auto coords = coordinates_in(hom_k, mcompose(hom_p0.morphisms[i], pres.kernel_inc));
        if (!coords) fail("InternalInconsistency", "restriction escapes Hom(K, Y)");
        for (std::size_t c = 0; c < hom_k.dim(); ++c) image.at(i, c) = (*coords)[c];
    }
    return hom_k.dim() - rank(image);
}

/// Evidence that T is a tilting module over a hereditary algebra:
/// Ext^1(T, T) = 0 recorded pairwise on the distinct summands, and the
/// summand count equal to the rank of K_0.
struct TiltingCertificate {
    std::vector<Representation> summands;  // pairwise nonisomorphic
    std::vector<std::size_t> multiplicities;
    std::size_t rank_k0 = 0;
    // ext_pairs[i][j] = dim Ext^1(T_i, T_j); all zero in a certificate
    std::vector<std::vector<std::size_t>> ext_pairs;
};

struct TiltingCheck {
    bool ok = false;
    std::string reason;
    TiltingCertificate certificate;
};

/// Check the tilting conditions. Ext vanishing is computed with the AR
/// formula and cross-checked against the resolution route; disagreement is
/// an internal error.
inline TiltingCheck is_tilting(const AlgebraPtr& h, const Representation& t) {
    if (!is_hereditary(h)) fail("NotHereditary", "tilting verification needs a hereditary algebra");
    DecompositionReport dec = decompose(t);
    if (dec.status != DecompositionStatus::Complete)
        fail("UndecidedDecomposition", "tilting candidate did not decompose");
    TiltingCheck out;
    out.certificate.rank_k0 = h->vertex_count();
    for (const auto& p : dec.pieces) {
        out.certificate.summands.push_back(p.rep);
        out.certificate.multiplicities.push_back(p.multiplicity);
    }
    std::size_t n = out.certificate.summands.size();
    out.certificate.ext_pairs.assign(n, std::vector<std::size_t>(n, 0));
    bool ext_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t via_ar = ext1_dim(out.certificate.summands[i], out.certificate.summands[j],
                                          Ext1Method::ARFormula);
            std::size_t via_res = ext1_dim(out.certificate.summands[i], out.certificate.summands[j],
                                           Ext1Method::Resolution);
            if (via_ar != via_res)
                fail("InternalInconsistency", "Ext routes disagree on a hereditary algebra");
            out.certificate.ext_pairs[i][j] = via_ar;
            if (via_ar != 0) ext_ok = false;
        }
    if (!ext_ok) {
        out.reason = "Ext^1(T, T) != 0";
        return out;
    }
    if (n != h->vertex_count()) {
        out.reason = "summand count " + std::to_string(n) + " differs from the rank " +
                     std::to_string(h->vertex_count()) + " of K_0";
        return out;
    }
    out.ok = true;
    return out;
}

/// The tilted algebra End_H(T), presented over the distinct summands of T.
struct TiltedAlgebra {
    EndAlgebra end;
    TiltingCertificate certificate;
};

inline TiltedAlgebra tilted_algebra(const AlgebraPtr& h, const Representation& t) {
    TiltingCheck check = is_tilting(h, t);
    if (!check.ok) fail("NotTilting", check.reason);
    TiltedAlgebra out;
    out.certificate = check.certificate;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < check.certificate.summands.size(); ++i)
        names.push_back("s" + std::to_string(i));
    out.end = endomorphism_algebra_of_summands(check.certificate.summands, names);
    return out;
}

/// Hom_H(T, X) as a right module over B = End_H(T): the space at the vertex
/// of T_j is Hom(T_j, X) and arrows act by precomposition through the
/// realization.
inline Representation hom_functor_image(const TiltedAlgebra& b, const Representation& x) {
    const EndAlgebra& e = b.end;
    const AlgebraPtr& balg = e.presented.algebra;
    std::size_t n = e.summands.size();
    std::vector<HomBasis> hom(n);
    Representation out = zero_representation(balg);
    for (std::size_t j = 0; j < n; ++j) {
        hom[j] = hom_basis(e.summands[j], x);
        out.dims[j] = hom[j].dim();
    }
    for (std::size_t ar = 0; ar < balg->arrow_count(); ++ar) {
        const Arrow& arrow = balg->quiver().arrow(ar);
        std::size_t i = arrow.source, j = arrow.target;
        // the arrow realizes a morphism T_j -> T_i; precomposition maps
        // Hom(T_i, X) to Hom(T_j, X)
        Morphism g = e.component(e.realize_path(balg->arrow_basis_index(ar)), i, j);
        Matrix mat(out.dims[j], out.dims[i]);
        for (std::size_t c = 0; c < out.dims[i]; ++c) {
            auto coords = coordinates_in(hom[j], mcompose(hom[i].morphisms[c], g));
            if (!coords) fail("InternalInconsistency", "precomposition escapes Hom(T_j, X)");
            for (std::size_t r = 0; r < out.dims[j]; ++r) mat.at(r, c) = (*coords)[r];
        }
        out.maps[ar] = std::move(mat);
    }
    validate(out);
    return out;
}

enum class TorsionClass { Torsion, TorsionFree, Neither };

/// Membership in the torsion pair of T: torsion when Ext^1(T, X) = 0,
/// torsion-free when Hom(T, X) = 0. The zero module satisfies both and is
/// reported Torsion.
inline TorsionClass torsion_membership(const AlgebraPtr& h, const Representation& t,
                                       const Representation& x) {
    TiltingCheck check = is_tilting(h, t);
    if (!check.ok) fail("NotTilting", check.reason);
    bool torsion = ext1_dim(t, x, Ext1Method::ARFormula) == 0;
    bool torsion_free = hom_dim(t, x) == 0;
    if (torsion) return TorsionClass::Torsion;
    if (torsion_free) return TorsionClass::TorsionFree;
    return TorsionClass::Neither;
}

/// Exhaustive search for multiplicity-free tilting modules over a hereditary
/// algebra of finite type: all vertex-count subsets of the complete fragment
/// with vanishing Ext in both directions, in deterministic order.
inline std::vector<std::vector<std::size_t>> enumerate_tilting_subsets(
    const AlgebraPtr& h, const ARQuiverFragment& fragment) {
    if (!is_hereditary(h)) fail("NotHereditary", "tilting enumeration needs a hereditary algebra");
    if (fragment.status != FragmentStatus::CompleteFiniteType)
        fail("NotOneComponent", "tilting enumeration needs a complete fragment");
    std::size_t n = h->vertex_count();
    std::size_t total = fragment.vertices.size();
    // ext table between all fragment vertices, both routes already checked
    std::vector<std::vector<std::size_t>> ext(total, std::vector<std::size_t>(total, 0));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j)
            ext[i][j] = ext1_dim(fragment.vertices[i].rep, fragment.vertices[j].rep,
                                 Ext1Method::ARFormula);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == n) {
            out.push_back(pick);
            return;
        }
        for (std::size_t v = start; v < total; ++v) {
            bool ok = ext[v][v] == 0;
            for (auto u : pick)
                if (ext[u][v] != 0 || ext[v][u] != 0) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace arq
