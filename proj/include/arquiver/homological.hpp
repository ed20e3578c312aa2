#pragma once

#include "arquiver/translate.hpp"

namespace arq {

struct GlobalDimension {
    bool exceeded = false;   // resolution still running at the bound
    std::size_t value = 0;   // valid when !exceeded
};

/// Projective dimension by iterated minimal covers, truncated at `bound`.
inline GlobalDimension projective_dimension_upto(const Representation& m, std::size_t bound) {
    Representation current = m;
    for (std::size_t k = 0; k <= bound; ++k) {
        if (current.is_zero()) return {false, k == 0 ? 0 : k - 1};
        ProjectiveCover cover = projective_cover(current);
        auto [ker, inc] = sub_representation(cover.p0.rep, kernel_subspaces(cover.cover));
        (void)inc;
        if (ker.is_zero()) return {false, k};
        current = ker;
    }
    return {true, 0};
}

/// Max over simples of the projective-resolution length, truncated at bound.
inline GlobalDimension global_dimension_upto(const AlgebraPtr& a, std::size_t bound) {
    GlobalDimension out{false, 0};
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        GlobalDimension pd = projective_dimension_upto(simple_module(a, v), bound);
        if (pd.exceeded) return {true, 0};
        out.value = std::max(out.value, pd.value);
    }
    return out;
}

/// Hereditary test, two routes cross-checked: gldim <= 1 versus "acyclic
/// quiver with zero relation ideal". Disagreement signals an implementation
/// bug and throws InternalInconsistency.
inline bool is_hereditary(const AlgebraPtr& a) {
    GlobalDimension g = global_dimension_upto(a, 1);
    bool homological = !g.exceeded && g.value <= 1;
    bool structural = a->quiver().is_acyclic() && a->relation_ideal_dim() == 0;
    if (homological != structural)
        fail("InternalInconsistency", "hereditary routes disagree");
    return homological;
}

}  // namespace arq
