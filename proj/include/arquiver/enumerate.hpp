#pragma once

#include "arquiver/decompose.hpp"

namespace arq {

struct EnumerationLimits {
    std::size_t max_total_dim = 8;  // documented as exponential; keep tiny
    long grid_radius = 1;           // matrix entries drawn from 0, +-1, ..., +-radius
};

namespace detail {

inline std::vector<Rational> grid_values(long radius) {
    std::vector<Rational> out{Rational(0)};
    for (long v = 1; v <= radius; ++v) {
        out.push_back(Rational(v));
        out.push_back(Rational(-v));
    }
    return out;
}

/// Cheap necessary conditions for indecomposability of a non-simple module:
/// no simple splits off at a sink (incoming images must fill the space) or
/// at a source (stacked outgoing maps must be injective).
inline bool passes_split_filters(const Representation& m) {
    const auto& a = *m.algebra;
    if (m.total_dim() <= 1) return true;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        if (m.dims[v] == 0) continue;
        bool sink = true, source = true;
        for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
            if (a.quiver().arrow(ar).source == v) sink = false;
            if (a.quiver().arrow(ar).target == v) source = false;
        }
        if (sink) {
            Matrix stack(m.dims[v], 0);
            for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
                if (a.quiver().arrow(ar).target == v) stack = stack.hstack(m.maps[ar]);
            if (rank(stack) < m.dims[v]) return false;
        }
        if (source) {
            Matrix stack(0, m.dims[v]);
            for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
                if (a.quiver().arrow(ar).source == v) stack = stack.vstack(m.maps[ar]);
            if (rank(stack) < m.dims[v]) return false;
        }
    }
    return true;
}

inline bool relations_hold(const Representation& m) {
    const auto& alg = *m.algebra;
    for (const Relation& rel : alg.relations()) {
        std::size_t u = rel.terms.front().path.source;
        std::size_t v = rel.terms.front().path.target;
        Matrix acc = Matrix::zero(m.dims[v], m.dims[u]);
        for (const auto& t : rel.terms) acc = acc + evaluate_path(m, t.path).scaled(t.coeff);
        if (!acc.is_zero()) return false;
    }
    return true;
}

inline bool quick_indecomposable(const Representation& m) {
    if (m.total_dim() == 1) return true;
    if (hom_dim(m, m) == 1) return true;  // brick
    DecompositionReport r = decompose(m);
    return r.status == DecompositionStatus::Complete && r.summand_count() == 1;
}

}  // namespace detail

/// Brute-force orbit-representative enumeration of indecomposables: iterate
/// dimension vectors by total dimension, fill arrow matrices from a small
/// integer grid, filter by the relations and by decomposition, and keep one
/// representative per isomorphism class. Deterministic order; exponential in
/// the bound, so only sensible for tiny limits. Completeness holds relative
/// to the grid: every indecomposable admitting a matrix realization with
/// entries in the grid is found.
inline std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& a,
                                                             EnumerationLimits limits = {}) {
    std::vector<Representation> found;
    std::vector<Rational> values = detail::grid_values(limits.grid_radius);
    std::size_t vc = a->vertex_count();

    std::vector<std::size_t> dims(vc, 0);
    // compositions of a fixed total: move one unit right, reset the head
    auto next_dim_vector = [&]() -> bool {
        std::size_t i = 0;
        while (i < vc && dims[i] == 0) ++i;
        if (i + 1 >= vc) return false;
        std::size_t t = dims[i];
        dims[i] = 0;
        dims[i + 1] += 1;
        dims[0] = t - 1;
        return true;
    };

    for (std::size_t total = 1; total <= limits.max_total_dim; ++total) {
        dims.assign(vc, 0);
        dims[0] = total;
        bool more = true;
        while (more) {
            // entry odometer over all arrow matrices
            std::vector<std::size_t> shape;
            std::size_t cells = 0;
            for (std::size_t ar = 0; ar < a->arrow_count(); ++ar) {
                const Arrow& arrow = a->quiver().arrow(ar);
                std::size_t n = dims[arrow.target] * dims[arrow.source];
                shape.push_back(n);
                cells += n;
            }
            std::vector<std::size_t> odo(cells, 0);
            bool exhausted = false;
            while (!exhausted) {
                Representation m = zero_representation(a);
                m.dims = dims;
                std::size_t pos = 0;
                for (std::size_t ar = 0; ar < a->arrow_count(); ++ar) {
                    const Arrow& arrow = a->quiver().arrow(ar);
                    Matrix mat(dims[arrow.target], dims[arrow.source]);
                    for (std::size_t r = 0; r < mat.rows(); ++r)
                        for (std::size_t c = 0; c < mat.cols(); ++c)
                            mat.at(r, c) = values[odo[pos++]];
                    m.maps[ar] = std::move(mat);
                }
                if (detail::relations_hold(m) && detail::passes_split_filters(m) &&
                    detail::quick_indecomposable(m)) {
                    bool known = false;
                    for (const auto& seen : found)
                        if (seen.dims == m.dims && is_isomorphic(seen, m)) {
                            known = true;
                            break;
                        }
                    if (!known) found.push_back(m);
                }
                // advance odometer
                std::size_t k = 0;
                while (k < cells && odo[k] + 1 == values.size()) odo[k++] = 0;
                if (k == cells) {
                    exhausted = true;
                } else {
                    ++odo[k];
                }
            }
            more = next_dim_vector();
        }
    }
    return found;
}

}  // namespace arq
