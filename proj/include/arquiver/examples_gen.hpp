#pragma once

#include "arquiver/extension.hpp"
#include "arquiver/tilting.hpp"

namespace arq {

/// Star quiver: n arm vertices 1..n, one arrow a_i: i -> 0 each. n = 1 is
/// the degenerate star, the A2 path algebra.
inline AlgebraPtr star_algebra(std::size_t n) {
    if (n < 1) fail("BadInput", "the star needs at least one arm");
    Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    q.add_vertex("0");
    for (std::size_t i = 1; i <= n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), "0");
    return build_algebra(q, {});
}

/// The running family: the star algebra together with the semisimple sum of
/// the injectives at the arms.
struct GeneratedExample {
    AlgebraPtr algebra;
    Representation module;
    std::string summary;
};

inline GeneratedExample example_star_injectives(std::size_t n) {
    GeneratedExample out;
    out.algebra = star_algebra(n);
    std::vector<Representation> inj;
    for (std::size_t i = 1; i <= n; ++i)
        inj.push_back(injective_module(out.algebra, out.algebra->quiver().vertex_index(std::to_string(i))));
    out.module = direct_sum(out.algebra, inj);
    out.summary = "star with " + std::to_string(n) +
                  " arms; module = sum of the injectives at the arms";
    return out;
}

/// Hereditary algebras selectable by a small type label.
inline AlgebraPtr hereditary_of_type(const std::string& type) {
    if (type == "A1") return build_algebra(Quiver({"1"}, {}), {});
    if (type == "A2" || type == "A3" || type == "A4") {
        std::size_t n = static_cast<std::size_t>(type[1] - '0');
        Quiver q;
        for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
        for (std::size_t i = 1; i < n; ++i)
            q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
        return build_algebra(q, {});
    }
    if (type == "D4") return star_algebra(3);
    fail("BadInput", "unsupported hereditary type \"" + type + "\" (use A1..A4 or D4)");
}

/// Product of bound quiver algebras: disjoint union of quivers; vertex and
/// arrow names get a block prefix when they would collide.
struct AlgebraProduct {
    AlgebraPtr algebra;
    std::vector<std::size_t> vertex_offset;
    std::vector<std::size_t> arrow_offset;
    std::vector<AlgebraPtr> blocks;

    /// A block module viewed over the product (zero outside its block).
    Representation embed(std::size_t block, const Representation& m) const {
        Representation out = zero_representation(algebra);
        const auto& b = *blocks[block];
        for (std::size_t v = 0; v < b.vertex_count(); ++v)
            out.dims[vertex_offset[block] + v] = m.dims[v];
        for (std::size_t ar = 0; ar < algebra->arrow_count(); ++ar) {
            const Arrow& arrow = algebra->quiver().arrow(ar);
            out.maps[ar] = Matrix::zero(out.dims[arrow.target], out.dims[arrow.source]);
        }
        for (std::size_t ar = 0; ar < b.arrow_count(); ++ar)
            out.maps[arrow_offset[block] + ar] = m.maps[ar];
        validate(out);
        return out;
    }
};

inline AlgebraProduct product_algebra(const std::vector<AlgebraPtr>& blocks) {
    AlgebraProduct out;
    out.blocks = blocks;
    bool collide = false;
    {
        std::vector<std::string> seen;
        for (const auto& b : blocks)
            for (const auto& v : b->quiver().vertex_names()) {
                if (std::find(seen.begin(), seen.end(), v) != seen.end()) collide = true;
                seen.push_back(v);
            }
    }
    Quiver q;
    std::vector<Relation> rels;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = *blocks[i];
        std::string prefix = collide ? "b" + std::to_string(i) + "_" : "";
        out.vertex_offset.push_back(q.vertex_count());
        out.arrow_offset.push_back(q.arrow_count());
        for (const auto& v : b.quiver().vertex_names()) q.add_vertex(prefix + v);
        for (const auto& a : b.quiver().arrows())
            q.add_arrow(prefix + a.name, prefix + b.quiver().vertex_name(a.source),
                        prefix + b.quiver().vertex_name(a.target));
        for (const auto& rel : b.relations()) {
            Relation shifted = rel;
            for (auto& t : shifted.terms) {
                t.path.source += out.vertex_offset[i];
                t.path.target += out.vertex_offset[i];
                for (auto& ar : t.path.arrows) ar += out.arrow_offset[i];
            }
            rels.push_back(std::move(shifted));
        }
    }
    std::size_t bound = 2;
    for (const auto& b : blocks) bound = std::max(bound, b->max_basis_path_length() + 1);
    out.algebra = build_algebra(q, rels, bound);
    return out;
}

/// One-point extension of a product of tilted algebras by a sum of simple
/// injectives, with the module whose summands form the canonical sections:
/// per block, a hereditary algebra H_i of the requested type, the tilting
/// module with the requested index in the deterministic enumeration,
/// B_i = End(T_i), S_i a simple injective B_i-module at a source vertex, and
/// M_i = Hom(T_i, D(H_i)).
inline GeneratedExample example_one_point_extension(const std::vector<std::string>& types,
                                                    const std::vector<std::size_t>& tilt_indices) {
    if (types.empty() || types.size() != tilt_indices.size())
        fail("BadInput", "need one tilting index per hereditary type");
    std::vector<AlgebraPtr> tilted_blocks;
    std::vector<Representation> section_modules;  // M_{T_i} over B_i
    std::vector<std::size_t> simple_injective_vertex;
    for (std::size_t i = 0; i < types.size(); ++i) {
        AlgebraPtr h = hereditary_of_type(types[i]);
        ARQuiverFragment frag = knit(h);
        auto subsets = enumerate_tilting_subsets(h, frag);
        if (tilt_indices[i] >= subsets.size())
            fail("BadInput", "tilting index " + std::to_string(tilt_indices[i]) + " out of range (" +
                                 std::to_string(subsets.size()) + " tilting modules for " + types[i] + ")");
        std::vector<Representation> parts;
        for (auto v : subsets[tilt_indices[i]]) parts.push_back(frag.vertices[v].rep);
        Representation t = direct_sum(h, parts);
        TiltedAlgebra b = tilted_algebra(h, t);
        // M_{T_i} = Hom(T_i, D(H_i))
        std::vector<Representation> injs;
        for (std::size_t v = 0; v < h->vertex_count(); ++v) injs.push_back(injective_module(h, v));
        Representation m_t = hom_functor_image(b, direct_sum(h, injs));
        // S_i: the simple injective at the least source vertex of B_i
        const AlgebraPtr& balg = b.end.presented.algebra;
        std::size_t source_vertex = SIZE_MAX;
        for (std::size_t v = 0; v < balg->vertex_count() && source_vertex == SIZE_MAX; ++v) {
            bool incoming = false;
            for (const auto& ar : balg->quiver().arrows())
                if (ar.target == v) incoming = true;
            if (!incoming) source_vertex = v;
        }
        if (source_vertex == SIZE_MAX)
            fail("InternalInconsistency", "a tilted algebra without a source vertex");
        tilted_blocks.push_back(balg);
        section_modules.push_back(m_t);
        simple_injective_vertex.push_back(source_vertex);
    }

    AlgebraProduct product = product_algebra(tilted_blocks);
    std::vector<Representation> s_parts, m_parts;
    for (std::size_t i = 0; i < tilted_blocks.size(); ++i) {
        s_parts.push_back(product.embed(
            i, simple_module(tilted_blocks[i], simple_injective_vertex[i])));
        m_parts.push_back(product.embed(i, section_modules[i]));
    }
    Representation s = direct_sum(product.algebra, s_parts);
    Representation m_over_b = direct_sum(product.algebra, m_parts);

    OnePointExtension ext = one_point_extension(product.algebra, s);
    GeneratedExample out;
    out.algebra = ext.algebra;
    out.module = extend_by_zero(ext.algebra, product.algebra, m_over_b);
    out.summary = "one-point extension of a product of " + std::to_string(types.size()) +
                  " tilted algebra(s) by a sum of simple injectives";
    return out;
}

}  // namespace arq
