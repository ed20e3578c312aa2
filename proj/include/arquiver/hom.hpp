#pragma once

#include "arquiver/representation.hpp"

namespace arq {

/// Basis of Hom_A(M, N): the solution space of the intertwining equations
/// f_j M_alpha = N_alpha f_i for every arrow alpha: i -> j.
struct HomBasis {
    Representation source;
    Representation target;
    std::vector<Morphism> morphisms;

    std::size_t dim() const { return morphisms.size(); }
};

namespace detail {

/// Stacked coefficient matrix of the intertwining system. Unknowns are the
/// entries of the per-vertex blocks, row-major, vertices in order.
inline Matrix intertwining_system(const Representation& m, const Representation& n) {
    const auto& a = *m.algebra;
    std::vector<std::size_t> offset(a.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    std::size_t unknowns = offset.back();
    std::size_t eqs = 0;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        eqs += n.dims[arrow.target] * m.dims[arrow.source];
    }
    Matrix sys(eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        std::size_t i = arrow.source, j = arrow.target;
        for (std::size_t r = 0; r < n.dims[j]; ++r)
            for (std::size_t c = 0; c < m.dims[i]; ++c) {
                // sum_k f_j[r,k] M[k,c] - sum_l N[r,l] f_i[l,c] = 0
                for (std::size_t k = 0; k < m.dims[j]; ++k) {
                    const Rational& coeff = m.maps[ar].at(k, c);
                    if (!coeff.is_zero()) sys.at(row, offset[j] + r * m.dims[j] + k) += coeff;
                }
                for (std::size_t l = 0; l < n.dims[i]; ++l) {
                    const Rational& coeff = n.maps[ar].at(r, l);
                    if (!coeff.is_zero()) sys.at(row, offset[i] + l * m.dims[i] + c) -= coeff;
                }
                ++row;
            }
    }
    return sys;
}

inline Morphism morphism_from_coords(const Representation& m, const Representation& n,
                                     const std::vector<Rational>& coords) {
    const auto& a = *m.algebra;
    Morphism f;
    f.source = m;
    f.target = n;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        Matrix block(n.dims[v], m.dims[v]);
        for (std::size_t r = 0; r < n.dims[v]; ++r)
            for (std::size_t c = 0; c < m.dims[v]; ++c) block.at(r, c) = coords[pos++];
        f.blocks.push_back(std::move(block));
    }
    return f;
}

}  // namespace detail

inline HomBasis hom_basis(const Representation& m, const Representation& n) {
    if (m.algebra.get() != n.algebra.get()) fail("AlgebraMismatch", "Hom across algebras");
    Matrix sys = detail::intertwining_system(m, n);
    Matrix sol = kernel_basis(sys);
    HomBasis h;
    h.source = m;
    h.target = n;
    for (std::size_t c = 0; c < sol.cols(); ++c)
        h.morphisms.push_back(detail::morphism_from_coords(m, n, sol.column_vec(c)));
    return h;
}

inline std::size_t hom_dim(const Representation& m, const Representation& n) {
    if (m.algebra.get() != n.algebra.get()) fail("AlgebraMismatch", "Hom across algebras");
    Matrix sys = detail::intertwining_system(m, n);
    return sys.cols() - rank(sys);
}

/// Coordinates of a morphism in a given Hom basis, if it lies in the span.
inline std::optional<std::vector<Rational>> coordinates_in(const HomBasis& basis, const Morphism& f) {
    std::size_t rows = 0;
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        rows += f.blocks[v].rows() * f.blocks[v].cols();
    Matrix sys(rows, basis.dim());
    std::vector<Rational> rhs(rows);
    std::size_t r = 0;
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        for (std::size_t i = 0; i < f.blocks[v].rows(); ++i)
            for (std::size_t j = 0; j < f.blocks[v].cols(); ++j) {
                for (std::size_t b = 0; b < basis.dim(); ++b)
                    sys.at(r, b) = basis.morphisms[b].blocks[v].at(i, j);
                rhs[r] = f.blocks[v].at(i, j);
                ++r;
            }
    return solve(sys, rhs);
}

/// Deterministic isomorphism test. Decides whether some element of the Hom
/// space is invertible at every vertex by evaluating the determinant
/// polynomial of a generic combination on an integer grid that exceeds its
/// total degree; returns a witness when one exists.
inline std::optional<Morphism> iso_witness(const Representation& m, const Representation& n) {
    if (m.algebra.get() != n.algebra.get()) fail("AlgebraMismatch", "iso test across algebras");
    if (m.dims != n.dims) return std::nullopt;
    if (m.total_dim() == 0) return zero_morphism(m, n);

    HomBasis h = hom_basis(m, n);
    std::size_t k = h.dim();
    if (k == 0) return std::nullopt;

    auto try_combination = [&](const std::vector<Rational>& lambda) -> std::optional<Morphism> {
        Morphism f = zero_morphism(m, n);
        for (std::size_t i = 0; i < k; ++i)
            if (!lambda[i].is_zero()) f = madd(f, mscale(h.morphisms[i], lambda[i]));
        if (is_invertible(f)) return f;
        return std::nullopt;
    };

    // Fast paths: single basis elements, then prefix sums.
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> lambda(k);
        lambda[i] = 1;
        if (auto f = try_combination(lambda)) return f;
    }
    {
        std::vector<Rational> lambda(k);
        for (std::size_t i = 0; i < k; ++i) {
            lambda[i] = 1;
            if (i > 0)
                if (auto f = try_combination(lambda)) return f;
        }
    }
    // Invariant screens before the exhaustive grid.
    if (hom_dim(n, m) != k) return std::nullopt;
    if (hom_dim(m, m) != hom_dim(n, n)) return std::nullopt;

    // Exhaustive grid {0..D}^k, D = total degree bound of the product of the
    // vertex determinants. Exhaustion certifies there is no invertible
    // combination at all.
    std::size_t degree = m.total_dim();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<Rational> lambda(k);
        for (std::size_t i = 0; i < k; ++i) lambda[i] = Rational(static_cast<long>(idx[i]));
        if (auto f = try_combination(lambda)) return f;
        std::size_t pos = 0;
        while (pos < k && idx[pos] == degree) idx[pos++] = 0;
        if (pos == k) break;
        ++idx[pos];
    }
    return std::nullopt;
}

inline bool is_isomorphic(const Representation& m, const Representation& n) {
    return iso_witness(m, n).has_value();
}

}  // namespace arq
