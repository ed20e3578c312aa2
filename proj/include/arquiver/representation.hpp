#pragma once

#include "arquiver/algebra.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace arq {

/// Right module over a bound quiver algebra, stored as a representation: one
/// rational vector space per vertex and, for an arrow i -> j, a matrix of
/// shape dim_j x dim_i acting on column vectors.
struct Representation {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;  // per vertex
    std::vector<Matrix> maps;       // per arrow

    std::size_t total_dim() const {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    }
    bool is_zero() const { return total_dim() == 0; }

    bool same_shape(const Representation& o) const {
        return algebra.get() == o.algebra.get() && dims == o.dims;
    }
};

/// Composition-factor class in K_0: per-vertex multiplicities, equal to the
/// dimension vector.
using ClassVector = std::vector<std::size_t>;

inline ClassVector class_vector(const Representation& m) { return m.dims; }

inline Representation zero_representation(const AlgebraPtr& a) {
    Representation r;
    r.algebra = a;
    r.dims.assign(a->vertex_count(), 0);
    for (std::size_t i = 0; i < a->arrow_count(); ++i)
        r.maps.push_back(Matrix(0, 0));
    return r;
}

/// Matrix of the action of a path: arrows applied left to right.
inline Matrix evaluate_path(const Representation& m, const Path& p) {
    const Quiver& q = m.algebra->quiver();
    Matrix acc = Matrix::identity(m.dims[p.source]);
    for (auto a : p.arrows) {
        (void)q;
        acc = m.maps[a] * acc;
    }
    return acc;
}

/// Action of an algebra element restricted to the block from vertex u to
/// vertex v (sum over basis paths u -> v).
inline Matrix evaluate_element_block(const Representation& m, const AlgElement& x,
                                     std::size_t u, std::size_t v) {
    Matrix acc = Matrix::zero(m.dims[v], m.dims[u]);
    const auto& alg = *m.algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (x[i].is_zero()) continue;
        const Path& p = alg.basis_path(i);
        if (p.source != u || p.target != v) continue;
        acc = acc + evaluate_path(m, p).scaled(x[i]);
    }
    return acc;
}

/// Action of an algebra element on the total space (vertex blocks stacked in
/// vertex order).
inline Matrix total_action(const Representation& m, const AlgElement& x) {
    const auto& alg = *m.algebra;
    std::vector<std::size_t> off(alg.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) off[v + 1] = off[v] + m.dims[v];
    Matrix out(off.back(), off.back());
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        if (x[b].is_zero()) continue;
        const Path& p = alg.basis_path(b);
        Matrix block = evaluate_path(m, p);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                out.at(off[p.target] + r, off[p.source] + c) += x[b] * block.at(r, c);
    }
    return out;
}

/// ok or throws: ShapeMismatch for wrong matrix shapes, RelationViolated
/// (naming the offending relation) when a relation acts nonzero.
inline void validate(const Representation& m) {
    const auto& alg = *m.algebra;
    const Quiver& q = alg.quiver();
    if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count())
        fail("ShapeMismatch", "dimension or map count does not match the quiver");
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (m.maps[a].rows() != m.dims[arr.target] || m.maps[a].cols() != m.dims[arr.source])
            fail("ShapeMismatch", "matrix for arrow \"" + arr.name + "\" has wrong shape");
    }
    for (std::size_t r = 0; r < alg.relations().size(); ++r) {
        const Relation& rel = alg.relations()[r];
        std::size_t u = rel.terms.front().path.source;
        std::size_t v = rel.terms.front().path.target;
        Matrix acc = Matrix::zero(m.dims[v], m.dims[u]);
        for (const auto& t : rel.terms) acc = acc + evaluate_path(m, t.path).scaled(t.coeff);
        if (!acc.is_zero())
            fail("RelationViolated", "relation #" + std::to_string(r) + " acts nonzero");
    }
}

/// Block-diagonal direct sum; the empty sum is the zero module.
inline Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
    Representation out = zero_representation(a);
    for (const auto& p : parts) {
        if (p.algebra.get() != a.get()) fail("AlgebraMismatch", "direct sum across algebras");
        for (std::size_t v = 0; v < a->vertex_count(); ++v) out.dims[v] += p.dims[v];
    }
    for (std::size_t ar = 0; ar < a->arrow_count(); ++ar) {
        const Arrow& arrow = a->quiver().arrow(ar);
        Matrix block(out.dims[arrow.target], out.dims[arrow.source]);
        std::size_t roff = 0, coff = 0;
        for (const auto& p : parts) {
            for (std::size_t r = 0; r < p.maps[ar].rows(); ++r)
                for (std::size_t c = 0; c < p.maps[ar].cols(); ++c)
                    block.at(roff + r, coff + c) = p.maps[ar].at(r, c);
            roff += p.dims[arrow.target];
            coff += p.dims[arrow.source];
        }
        out.maps[ar] = std::move(block);
    }
    return out;
}

/// Morphism of representations: one matrix per vertex making every arrow
/// square commute (f_j M_alpha = N_alpha f_i).
struct Morphism {
    Representation source;
    Representation target;
    std::vector<Matrix> blocks;  // per vertex, dim target_v x dim source_v

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

inline void validate(const Morphism& f) {
    const auto& a = *f.source.algebra;
    if (f.target.algebra.get() != &a) fail("AlgebraMismatch", "morphism across algebras");
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (f.blocks[v].rows() != f.target.dims[v] || f.blocks[v].cols() != f.source.dims[v])
            fail("ShapeMismatch", "morphism block shape at vertex " + a.quiver().vertex_name(v));
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        Matrix lhs = f.blocks[arrow.target] * f.source.maps[ar];
        Matrix rhs = f.target.maps[ar] * f.blocks[arrow.source];
        if (!(lhs == rhs))
            fail("InternalInconsistency", "intertwining square fails at arrow " + arrow.name);
    }
}

inline Morphism identity_morphism(const Representation& m) {
    Morphism f;
    f.source = m;
    f.target = m;
    for (auto d : m.dims) f.blocks.push_back(Matrix::identity(d));
    return f;
}

inline Morphism zero_morphism(const Representation& m, const Representation& n) {
    Morphism f;
    f.source = m;
    f.target = n;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        f.blocks.push_back(Matrix::zero(n.dims[v], m.dims[v]));
    return f;
}

/// after o before.
inline Morphism mcompose(const Morphism& after, const Morphism& before) {
    if (after.source.dims != before.target.dims ||
        after.source.algebra.get() != before.target.algebra.get())
        fail("ShapeMismatch", "morphism composition mismatch");
    Morphism f;
    f.source = before.source;
    f.target = after.target;
    for (std::size_t v = 0; v < before.blocks.size(); ++v)
        f.blocks.push_back(after.blocks[v] * before.blocks[v]);
    return f;
}

inline Morphism madd(const Morphism& f, const Morphism& g) {
    Morphism s = f;
    for (std::size_t v = 0; v < s.blocks.size(); ++v) s.blocks[v] = s.blocks[v] + g.blocks[v];
    return s;
}

inline Morphism mscale(const Morphism& f, const Rational& c) {
    Morphism s = f;
    for (auto& b : s.blocks) b = b.scaled(c);
    return s;
}

/// Block-diagonal matrix of a morphism on the stacked total spaces.
inline Matrix total_matrix(const Morphism& f) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : f.blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& b : f.blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.at(ro + r, co + c) = b.at(r, c);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

inline bool is_invertible(const Morphism& f) {
    for (const auto& b : f.blocks)
        if (!is_invertible(b)) return false;
    return true;
}

inline bool is_injective(const Morphism& f) {
    for (const auto& b : f.blocks)
        if (rank(b) != b.cols()) return false;
    return true;
}

inline bool is_surjective(const Morphism& f) {
    for (const auto& b : f.blocks)
        if (rank(b) != b.rows()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Subspace machinery: subrepresentations, quotients, kernels, images.
// ---------------------------------------------------------------------------

/// Per-vertex subspaces given by column bases.
using Subspaces = std::vector<Matrix>;

/// Deterministic column-space basis (columns), via row reduction of the
/// transpose.
inline Matrix column_space_basis(const Matrix& m) {
    return row_space_basis(m.transposed()).transposed();
}

/// Subrepresentation spanned by subspaces that are closed under all arrows;
/// throws when closure fails. Returns the representation together with the
/// inclusion morphism.
inline std::pair<Representation, Morphism> sub_representation(const Representation& m,
                                                              const Subspaces& sub) {
    const auto& a = *m.algebra;
    Representation s;
    s.algebra = m.algebra;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) s.dims.push_back(sub[v].cols());
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        auto n = solve_matrix(sub[arrow.target], m.maps[ar] * sub[arrow.source]);
        if (!n) fail("InternalInconsistency", "subspaces not closed under arrow " + arrow.name);
        s.maps.push_back(std::move(*n));
    }
    Morphism inc;
    inc.source = s;
    inc.target = m;
    inc.blocks = sub;
    return {std::move(s), std::move(inc)};
}

/// Quotient by a closed subspace family. Returns the representation and the
/// projection morphism.
inline std::pair<Representation, Morphism> quotient_representation(const Representation& m,
                                                                   const Subspaces& sub) {
    const auto& a = *m.algebra;
    std::vector<Matrix> proj(a.vertex_count());     // quotient coordinates
    std::vector<Matrix> section(a.vertex_count());  // chosen representatives
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        std::size_t d = m.dims[v];
        // Complete the subspace basis with standard vectors, then read the
        // quotient coordinates off the inverse of the full change of basis.
        Matrix current = row_space_basis(sub[v].transposed());
        std::vector<std::size_t> complement;
        for (std::size_t k = 0; k < d && current.rows() < d; ++k) {
            std::vector<Rational> e(d);
            e[k] = 1;
            Matrix trial(current.rows() + 1, d);
            for (std::size_t r = 0; r < current.rows(); ++r)
                for (std::size_t c = 0; c < d; ++c) trial.at(r, c) = current.at(r, c);
            for (std::size_t c = 0; c < d; ++c) trial.at(current.rows(), c) = e[c];
            if (rank(trial) > current.rows()) {
                complement.push_back(k);
                current = row_space_basis(trial);
            }
        }
        Matrix full(d, d);
        for (std::size_t c = 0; c < sub[v].cols(); ++c)
            for (std::size_t r = 0; r < d; ++r) full.at(r, c) = sub[v].at(r, c);
        for (std::size_t c = 0; c < complement.size(); ++c)
            full.at(complement[c], sub[v].cols() + c) = 1;
        auto inv = inverse(full);
        if (!inv) fail("InternalInconsistency", "subspace basis not independent");
        std::size_t q = complement.size();
        Matrix p(q, d);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < d; ++c) p.at(r, c) = inv->at(sub[v].cols() + r, c);
        Matrix sec(d, q);
        for (std::size_t c = 0; c < q; ++c) sec.at(complement[c], c) = 1;
        proj[v] = std::move(p);
        section[v] = std::move(sec);
    }
    Representation qrep;
    qrep.algebra = m.algebra;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) qrep.dims.push_back(proj[v].rows());
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        qrep.maps.push_back(proj[arrow.target] * m.maps[ar] * section[arrow.source]);
    }
    Morphism pr;
    pr.source = m;
    pr.target = qrep;
    pr.blocks = proj;
    return {std::move(qrep), std::move(pr)};
}

inline Subspaces kernel_subspaces(const Morphism& f) {
    Subspaces out;
    for (const auto& b : f.blocks) out.push_back(kernel_basis(b));
    return out;
}

inline Subspaces image_subspaces(const Morphism& f) {
    Subspaces out;
    for (const auto& b : f.blocks) out.push_back(column_space_basis(b));
    return out;
}

/// Radical subspaces: the span of all incoming arrow images (M rad A).
inline Subspaces radical_subspaces(const Representation& m) {
    const auto& a = *m.algebra;
    Subspaces out(a.vertex_count());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        Matrix stack(m.dims[v], 0);
        for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
            if (a.quiver().arrow(ar).target == v) stack = stack.hstack(m.maps[ar]);
        out[v] = column_space_basis(stack);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural modules and duality.
// ---------------------------------------------------------------------------

inline Representation simple_module(const AlgebraPtr& a, std::size_t v) {
    Representation s = zero_representation(a);
    s.dims[v] = 1;
    for (std::size_t ar = 0; ar < a->arrow_count(); ++ar) {
        const Arrow& arrow = a->quiver().arrow(ar);
        s.maps[ar] = Matrix::zero(s.dims[arrow.target], s.dims[arrow.source]);
    }
    return s;
}

/// P(v): basis the nonzero paths starting at v, right multiplication along
/// arrows via the structure-constant table.
inline Representation projective_module(const AlgebraPtr& a, std::size_t v) {
    std::vector<std::size_t> from = a->basis_from(v);
    // slot of each basis element within its target vertex block
    std::vector<std::size_t> slot(a->dim(), SIZE_MAX);
    Representation p = zero_representation(a);
    for (auto b : from) slot[b] = p.dims[a->basis_path(b).target]++;
    for (std::size_t ar = 0; ar < a->arrow_count(); ++ar) {
        const Arrow& arrow = a->quiver().arrow(ar);
        Matrix mat(p.dims[arrow.target], p.dims[arrow.source]);
        for (auto b : from) {
            if (a->basis_path(b).target != arrow.source) continue;
            const AlgElement& prod = a->product(b, a->arrow_basis_index(ar));
            for (std::size_t k = 0; k < a->dim(); ++k) {
                if (prod[k].is_zero()) continue;
                if (slot[k] == SIZE_MAX)
                    fail("InternalInconsistency", "projective action leaves the path block");
                mat.at(slot[k], slot[b]) = prod[k];
            }
        }
        p.maps[ar] = std::move(mat);
    }
    return p;
}

/// Standard duality D = Hom_Q(-, Q): spaces dualized, matrices transposed and
/// reattached along the reversed arrows. Sends right A-modules to right
/// A^op-modules and back.
inline Representation dual(const Representation& m) {
    AlgebraPtr op = opposite(m.algebra);
    Representation d;
    d.algebra = op;
    d.dims = m.dims;  // vertex names agree between the two orientations
    for (std::size_t ar = 0; ar < op->arrow_count(); ++ar)
        d.maps.push_back(m.maps[ar].transposed());
    return d;
}

/// I(v): dual of the projective over the opposite algebra at v.
inline Representation injective_module(const AlgebraPtr& a, std::size_t v) {
    return dual(projective_module(opposite(a), v));
}

enum class StructuralKind { Projective, Injective, Simple };

inline Representation structural_module(const AlgebraPtr& a, std::size_t v, StructuralKind kind) {
    switch (kind) {
        case StructuralKind::Projective: return projective_module(a, v);
        case StructuralKind::Injective: return injective_module(a, v);
        case StructuralKind::Simple: return simple_module(a, v);
    }
    fail("InternalInconsistency", "unreachable");
}

inline bool is_sincere(const Representation& m) {
    for (auto d : m.dims)
        if (d == 0) return false;
    return true;
}

}  // namespace arq
