#pragma once

#include "arquiver/hom.hpp"
#include "arquiver/quotient.hpp"

namespace arq {

/// One-point extension [K X; 0 B]: a new source vertex with one arrow per
/// simple summand of top(X), bound so that rad P(new) = X. The returned
/// witness is the isomorphism check rad P(omega) = X over the extension.
struct OnePointExtension {
    AlgebraPtr algebra;            // the extension
    std::size_t new_vertex = 0;    // index of omega in the new algebra
    Representation x_extended;     // X viewed over the extension (zero at omega)
    Morphism witness;              // rad P(omega) -> x_extended isomorphism
};

/// A base-algebra module viewed over the extension: zero space at omega,
/// zero maps along the new arrows. Valid for any extension built below
/// (omega is vertex 0 and the base arrows keep their indices).
inline Representation extend_by_zero(const AlgebraPtr& ext, const AlgebraPtr& b,
                                     const Representation& m) {
    if (m.algebra.get() != b.get()) fail("AlgebraMismatch", "module is not over the base algebra");
    Representation out = zero_representation(ext);
    for (std::size_t v = 0; v < b->vertex_count(); ++v) out.dims[v + 1] = m.dims[v];
    for (std::size_t ar = 0; ar < b->arrow_count(); ++ar) out.maps[ar] = m.maps[ar];
    for (std::size_t ar = b->arrow_count(); ar < ext->arrow_count(); ++ar) {
        const Arrow& arrow = ext->quiver().arrow(ar);
        out.maps[ar] = Matrix::zero(out.dims[arrow.target], out.dims[arrow.source]);
    }
    validate(out);
    return out;
}

inline OnePointExtension one_point_extension(const AlgebraPtr& b, const Representation& x,
                                             const std::string& new_vertex_name = "w") {
    if (x.algebra.get() != b.get()) fail("AlgebraMismatch", "module is not over the base algebra");
    validate(x);
    const Quiver& bq = b->quiver();

    Quiver q;
    std::string omega = new_vertex_name;
    for (const auto& v : bq.vertex_names())
        if (v == omega) omega += "'";
    q.add_vertex(omega);
    for (const auto& v : bq.vertex_names()) q.add_vertex(v);
    for (const auto& a : bq.arrows())
        q.add_arrow(a.name, bq.vertex_name(a.source), bq.vertex_name(a.target));

    // One new arrow per top basis vector, with a chosen lift in X.
    std::vector<std::string> used_names;
    for (const auto& a : bq.arrows()) used_names.push_back(a.name);
    auto fresh = [&](std::string n) {
        while (std::find(used_names.begin(), used_names.end(), n) != used_names.end()) n += "'";
        used_names.push_back(n);
        return n;
    };
    Subspaces radx = radical_subspaces(x);
    std::vector<std::pair<std::size_t, std::vector<Rational>>> lifts;  // (b-vertex, vector)
    for (std::size_t v = 0; v < bq.vertex_count(); ++v) {
        Matrix span = row_space_basis(radx[v].transposed());
        std::size_t count = 0;
        for (std::size_t k = 0; k < x.dims[v]; ++k) {
            std::vector<Rational> e(x.dims[v]);
            e[k] = 1;
            if (in_row_space(span, e)) continue;
            span = row_space_basis(span.vstack(Matrix::column(e).transposed()));
            q.add_arrow(fresh("x" + std::to_string(count++) + "_" + bq.vertex_name(v)), omega,
                        bq.vertex_name(v));
            lifts.emplace_back(v, e);
        }
    }
    std::size_t old_arrows = bq.arrow_count();

    // Relations: old ones, shifted by one vertex, plus the kernel of the
    // evaluation of paths from omega into X.
    std::vector<Relation> rels;
    for (const auto& r : b->relations()) {
        Relation s = r;
        for (auto& t : s.terms) {
            ++t.path.source;  // vertex 0 is omega; old vertices shift by one,
            ++t.path.target;  // arrow indices are unchanged
        }
        rels.push_back(std::move(s));
    }
    {
        // paths from omega: new arrow then a basis path of B
        std::vector<Path> omega_paths;
        std::vector<std::vector<Rational>> values;  // value in the total space of X
        std::vector<std::size_t> value_vertex;
        for (std::size_t na = 0; na < lifts.size(); ++na) {
            std::size_t arrow_idx = old_arrows + na;
            for (std::size_t bb = 0; bb < b->dim(); ++bb) {
                const Path& bp = b->basis_path(bb);
                if (bp.source != lifts[na].first) continue;
                Path p;
                p.source = 0;
                p.target = bp.target + 1;
                p.arrows.push_back(arrow_idx);
                for (auto ai : bp.arrows) p.arrows.push_back(ai);
                Matrix act = evaluate_path(x, bp);
                std::vector<Rational> val(act.rows());
                for (std::size_t r = 0; r < act.rows(); ++r) {
                    Rational e;
                    for (std::size_t c = 0; c < act.cols(); ++c)
                        if (!act.at(r, c).is_zero()) e += act.at(r, c) * lifts[na].second[c];
                    val[r] = e;
                }
                omega_paths.push_back(std::move(p));
                values.push_back(std::move(val));
                value_vertex.push_back(bp.target);
            }
        }
        // kernel per target vertex
        for (std::size_t v = 0; v < bq.vertex_count(); ++v) {
            std::vector<std::size_t> group;
            for (std::size_t i = 0; i < omega_paths.size(); ++i)
                if (value_vertex[i] == v) group.push_back(i);
            if (group.empty()) continue;
            Matrix sys(x.dims[v], group.size());
            for (std::size_t c = 0; c < group.size(); ++c)
                for (std::size_t r = 0; r < x.dims[v]; ++r) sys.at(r, c) = values[group[c]][r];
            Matrix ker = kernel_basis(sys);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                Relation rel;
                for (std::size_t i = 0; i < group.size(); ++i)
                    if (!ker.at(i, c).is_zero())
                        rel.terms.push_back({ker.at(i, c), omega_paths[group[i]]});
                rels.push_back(std::move(rel));
            }
        }
    }

    OnePointExtension out;
    out.algebra = build_algebra(q, rels, std::max<std::size_t>(b->max_basis_path_length() + 1, 2));
    out.new_vertex = 0;
    out.x_extended = extend_by_zero(out.algebra, b, x);

    // Witness: rad P(omega) is isomorphic to X.
    Representation pw = projective_module(out.algebra, 0);
    auto [radp, inc] = sub_representation(pw, radical_subspaces(pw));
    (void)inc;
    auto wit = iso_witness(radp, out.x_extended);
    if (!wit)
        fail("InternalInconsistency", "one-point extension: rad P(omega) differs from X");
    out.witness = *wit;
    return out;
}

}  // namespace arq
