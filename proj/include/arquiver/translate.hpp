#pragma once

#include "arquiver/decompose.hpp"

namespace arq {

/// Layout of P(v): for each basis path from v, its slot inside the target
/// vertex block. Shared by the projective construction and everything that
/// reads morphisms between projectives off as path-algebra elements.
struct ProjectiveLayout {
    std::size_t vertex = 0;
    std::vector<std::size_t> basis_indices;  // paths from v, basis order
    std::vector<std::size_t> slots;          // slot within the target block
    std::vector<std::size_t> dims;           // per-vertex dimensions

    std::size_t stationary_slot() const { return slots[0]; }  // e_v is first in basis order
};

inline ProjectiveLayout projective_layout(const BoundQuiverAlgebra& a, std::size_t v) {
    ProjectiveLayout l;
    l.vertex = v;
    l.dims.assign(a.vertex_count(), 0);
    for (auto b : a.basis_from(v)) {
        l.basis_indices.push_back(b);
        l.slots.push_back(l.dims[a.basis_path(b).target]++);
    }
    return l;
}

/// Direct sum of structural projectives with a recorded component list.
struct ProjectiveSum {
    Representation rep;                   // the direct sum
    std::vector<std::size_t> components;  // vertex of each component, in order
    std::vector<std::size_t> offsets_at;  // per component: offset of its block at each vertex
                                          // (flattened: component * vertex_count + v)

    std::size_t offset(std::size_t comp, std::size_t v, std::size_t vc) const {
        return offsets_at[comp * vc + v];
    }
};

inline ProjectiveSum projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
    ProjectiveSum out;
    out.components = vertices;
    std::vector<Representation> parts;
    for (auto v : vertices) parts.push_back(projective_module(a, v));
    out.rep = direct_sum(a, parts);
    std::size_t vc = a->vertex_count();
    out.offsets_at.assign(vertices.size() * vc, 0);
    std::vector<std::size_t> acc(vc, 0);
    for (std::size_t c = 0; c < vertices.size(); ++c) {
        for (std::size_t v = 0; v < vc; ++v) {
            out.offsets_at[c * vc + v] = acc[v];
            acc[v] += parts[c].dims[v];
        }
    }
    return out;
}

/// Morphism from a projective sum determined by generator images: the
/// component P(v) sends a basis path p to the action of p on the image of
/// the generator e_v.
inline Morphism morphism_from_generators(const ProjectiveSum& p, const Representation& target,
                                         const std::vector<std::vector<Rational>>& generator_images) {
    const auto& a = *target.algebra;
    Morphism f = zero_morphism(p.rep, target);
    for (std::size_t c = 0; c < p.components.size(); ++c) {
        std::size_t v = p.components[c];
        ProjectiveLayout layout = projective_layout(a, v);
        for (std::size_t k = 0; k < layout.basis_indices.size(); ++k) {
            const Path& path = a.basis_path(layout.basis_indices[k]);
            Matrix act = evaluate_path(target, path);
            std::size_t col = p.offset(c, path.target, a.vertex_count()) + layout.slots[k];
            for (std::size_t r = 0; r < target.dims[path.target]; ++r) {
                Rational entry;
                for (std::size_t j = 0; j < target.dims[v]; ++j)
                    if (!act.at(r, j).is_zero()) entry += act.at(r, j) * generator_images[c][j];
                f.blocks[path.target].at(r, col) = entry;
            }
        }
    }
    return f;
}

/// Minimal projective cover P0 -> M: one projective component per top basis
/// vector, generator images lifting a basis of M / rad M.
struct ProjectiveCover {
    ProjectiveSum p0;
    Morphism cover;  // P0 -> M, surjective, kernel inside rad P0
};

inline ProjectiveCover projective_cover(const Representation& m) {
    const auto& a = *m.algebra;
    Subspaces radm = radical_subspaces(m);
    std::vector<std::size_t> comps;
    std::vector<std::vector<Rational>> gens;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        Matrix span = row_space_basis(radm[v].transposed());
        for (std::size_t k = 0; k < m.dims[v]; ++k) {
            std::vector<Rational> e(m.dims[v]);
            e[k] = 1;
            if (in_row_space(span, e)) continue;
            span = row_space_basis(span.vstack(Matrix::column(e).transposed()));
            comps.push_back(v);
            gens.push_back(e);
        }
    }
    ProjectiveCover out;
    out.p0 = projective_sum(m.algebra, comps);
    out.cover = morphism_from_generators(out.p0, m, gens);
    if (!is_surjective(out.cover))
        fail("InternalInconsistency", "projective cover is not surjective");
    return out;
}

/// Minimal projective presentation P1 -f-> P0 -> M -> 0.
struct ProjectivePresentation {
    ProjectiveSum p1;
    ProjectiveSum p0;
    Morphism f;       // P1 -> P0, image = kernel of the cover, lands in rad P0
    Morphism cover;   // P0 -> M
    Representation kernel;   // ker(cover) as a representation
    Morphism kernel_inc;     // kernel -> P0
};

inline ProjectivePresentation minimal_projective_presentation(const Representation& m) {
    ProjectivePresentation out;
    ProjectiveCover c0 = projective_cover(m);
    out.p0 = c0.p0;
    out.cover = c0.cover;
    auto [k, inc] = sub_representation(c0.p0.rep, kernel_subspaces(c0.cover));
    out.kernel = k;
    out.kernel_inc = inc;
    ProjectiveCover c1 = projective_cover(k);
    out.p1 = c1.p0;
    out.f = mcompose(inc, c1.cover);
    // Minimality: the image of f must sit inside rad P0.
    Subspaces radp = radical_subspaces(out.p0.rep);
    for (std::size_t v = 0; v < radp.size(); ++v) {
        Matrix span = row_space_basis(radp[v].transposed());
        for (std::size_t col = 0; col < out.f.blocks[v].cols(); ++col)
            if (!in_row_space(span, out.f.blocks[v].column_vec(col)))
                fail("InternalInconsistency", "presentation is not minimal");
    }
    return out;
}

namespace detail {

/// Element of e_u A e_v acting by left multiplication: a morphism
/// P(v) -> P(u) of right modules.
inline Morphism left_mult_morphism(const AlgebraPtr& a, const AlgElement& x, std::size_t u,
                                   std::size_t v, const Representation& pv,
                                   const Representation& pu) {
    const auto& alg = *a;
    ProjectiveLayout lv = projective_layout(alg, v);
    ProjectiveLayout lu = projective_layout(alg, u);
    std::vector<std::size_t> slot_of(alg.dim(), SIZE_MAX);
    for (std::size_t k = 0; k < lu.basis_indices.size(); ++k)
        slot_of[lu.basis_indices[k]] = lu.slots[k];
    Morphism f = zero_morphism(pv, pu);
    for (std::size_t k = 0; k < lv.basis_indices.size(); ++k) {
        std::size_t b = lv.basis_indices[k];
        const Path& p = alg.basis_path(b);
        AlgElement img = alg.multiply(x, alg.unit(b));
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (img[j].is_zero()) continue;
            if (alg.basis_path(j).target != p.target || slot_of[j] == SIZE_MAX)
                fail("InternalInconsistency", "left multiplication leaves the block");
            f.blocks[p.target].at(slot_of[j], lv.slots[k]) = img[j];
        }
    }
    return f;
}

}  // namespace detail

/// Is there s with pi o s = g? Solved linearly over Hom(g.source, pi.source).
inline std::optional<Morphism> section_through(const Morphism& pi, const Morphism& g) {
    HomBasis cand = hom_basis(g.source, pi.source);
    std::vector<Morphism> composed;
    for (const auto& s : cand.morphisms) composed.push_back(mcompose(pi, s));
    std::size_t rows = 0;
    for (std::size_t v = 0; v < g.blocks.size(); ++v)
        rows += g.blocks[v].rows() * g.blocks[v].cols();
    Matrix sys(rows, cand.dim());
    std::vector<Rational> rhs(rows);
    std::size_t row = 0;
    for (std::size_t v = 0; v < g.blocks.size(); ++v)
        for (std::size_t r = 0; r < g.blocks[v].rows(); ++r)
            for (std::size_t c = 0; c < g.blocks[v].cols(); ++c) {
                for (std::size_t b = 0; b < cand.dim(); ++b)
                    sys.at(row, b) = composed[b].blocks[v].at(r, c);
                rhs[row] = g.blocks[v].at(r, c);
                ++row;
            }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Morphism s = zero_morphism(g.source, pi.source);
    for (std::size_t b = 0; b < cand.dim(); ++b)
        if (!(*sol)[b].is_zero()) s = madd(s, mscale(cand.morphisms[b], (*sol)[b]));
    return s;
}

/// Transpose Tr M: the cokernel of Hom(f, A) for a minimal projective
/// presentation f, a module over the opposite algebra. Tr of a projective
/// is zero; Tr Tr M = M up to projective summands.
inline Representation transpose(const Representation& m) {
    const AlgebraPtr& a = m.algebra;
    AlgebraPtr op = opposite(a);
    ProjectivePresentation pres = minimal_projective_presentation(m);
    std::size_t vc = a->vertex_count();

    // Read off f as a matrix of path-algebra elements x_{ji} in e_{w_j} A e_{v_i}.
    std::size_t n1 = pres.p1.components.size();
    std::size_t n0 = pres.p0.components.size();
    std::vector<AlgElement> x(n0 * n1, AlgElement());
    for (std::size_t i = 0; i < n1; ++i) {
        std::size_t vi = pres.p1.components[i];
        ProjectiveLayout li = projective_layout(*a, vi);
        std::size_t gen_col = pres.p1.offset(i, vi, vc) + li.stationary_slot();
        // image of the generator inside each P(w_j) block
        for (std::size_t j = 0; j < n0; ++j) {
            std::size_t wj = pres.p0.components[j];
            ProjectiveLayout lj = projective_layout(*a, wj);
            AlgElement elt = a->zero_element();
            bool nz = false;
            for (std::size_t k = 0; k < lj.basis_indices.size(); ++k) {
                const Path& p = a->basis_path(lj.basis_indices[k]);
                if (p.target != vi) continue;
                std::size_t row = pres.p0.offset(j, vi, vc) + lj.slots[k];
                const Rational& val = pres.f.blocks[vi].at(row, gen_col);
                if (!val.is_zero()) {
                    elt[lj.basis_indices[k]] = val;
                    nz = true;
                }
            }
            if (nz) x[j * n1 + i] = std::move(elt);
        }
    }

    // Hom(f, A): a morphism between opposite-side projective sums, given by
    // left multiplication with the reversed entries.
    ProjectiveSum q0 = projective_sum(op, pres.p0.components);   // Hom(P0, A)
    ProjectiveSum q1 = projective_sum(op, pres.p1.components);   // Hom(P1, A)
    Morphism g = zero_morphism(q0.rep, q1.rep);
    for (std::size_t j = 0; j < n0; ++j)
        for (std::size_t i = 0; i < n1; ++i) {
            if (x[j * n1 + i].empty()) continue;
            AlgElement rev = op->zero_element();
            for (std::size_t b = 0; b < a->dim(); ++b)
                if (!x[j * n1 + i][b].is_zero()) {
                    const AlgElement& corr = a->to_opposite(b);
                    for (std::size_t k = 0; k < corr.size(); ++k)
                        if (!corr[k].is_zero()) rev[k] += x[j * n1 + i][b] * corr[k];
                }
            std::size_t wj = pres.p0.components[j], vi = pres.p1.components[i];
            Representation pwj = projective_module(op, wj);
            Representation pvi = projective_module(op, vi);
            Morphism comp = detail::left_mult_morphism(op, rev, vi, wj, pwj, pvi);
            for (std::size_t v = 0; v < vc; ++v)
                for (std::size_t r = 0; r < comp.blocks[v].rows(); ++r)
                    for (std::size_t c = 0; c < comp.blocks[v].cols(); ++c)
                        g.blocks[v].at(q1.offset(i, v, vc) + r, q0.offset(j, v, vc) + c) +=
                            comp.blocks[v].at(r, c);
        }
    validate(g);
    return quotient_representation(q1.rep, image_subspaces(g)).first;
}

/// Auslander-Reiten translate tau = D Tr; projective summands contribute zero.
inline Representation tau(const Representation& m) { return dual(transpose(m)); }

/// Inverse translate tau^- = Tr D; injective summands contribute zero.
inline Representation tau_minus(const Representation& m) { return transpose(dual(m)); }

/// Almost split sequence 0 -> tau x -> E -> x -> 0 ending at an
/// indecomposable non-projective x. The connecting class is picked in the
/// socle of Ext^1(x, tau x) over End(x) and the sequence is verified to be
/// exact and non-split.
struct AlmostSplitSequence {
    Representation left;    // tau x
    Representation middle;  // E
    Representation right;   // x
    Morphism inject;        // tau x -> E
    Morphism project;       // E -> x
};

inline AlmostSplitSequence almost_split_sequence(const Representation& x) {
    DecompositionReport dec = decompose(x);
    if (dec.status != DecompositionStatus::Complete || dec.summand_count() != 1)
        fail("NotIndecomposable", "almost split sequences end at indecomposables");
    ProjectivePresentation pres = minimal_projective_presentation(x);
    if (pres.p1.components.empty()) fail("IsProjective", "tau of a projective is zero");
    Representation tx = tau(x);
    const auto& a = *x.algebra;
    std::size_t vc = a.vertex_count();

    HomBasis hom_k = hom_basis(pres.kernel, tx);
    HomBasis hom_p0 = hom_basis(pres.p0.rep, tx);
    // B0 = image of Hom(P0, tau x) -> Hom(K, tau x)
    Matrix b0(hom_p0.dim(), hom_k.dim());
    for (std::size_t i = 0; i < hom_p0.dim(); ++i) {
        auto coords = coordinates_in(hom_k, mcompose(hom_p0.morphisms[i], pres.kernel_inc));
        if (!coords) fail("InternalInconsistency", "restriction leaves Hom(K, tau x)");
        for (std::size_t c = 0; c < hom_k.dim(); ++c) b0.at(i, c) = (*coords)[c];
    }
    Matrix b0span = row_space_basis(b0);

    // Radical of End(x) acting on Hom(K, tau x) from the right.
    HomBasis end = hom_basis(x, x);
    AbstractAlgebra etab = detail::end_algebra_table(end);
    Matrix radm = abstract_radical(etab);
    std::vector<Matrix> actions;
    for (std::size_t rc = 0; rc < radm.cols(); ++rc) {
        Morphism g = zero_morphism(x, x);
        for (std::size_t i = 0; i < end.dim(); ++i)
            if (!radm.at(i, rc).is_zero()) g = madd(g, mscale(end.morphisms[i], radm.at(i, rc)));
        // lift g through the cover, then restrict to the kernel
        std::vector<std::vector<Rational>> images;
        for (std::size_t c = 0; c < pres.p0.components.size(); ++c) {
            std::size_t v = pres.p0.components[c];
            ProjectiveLayout l = projective_layout(a, v);
            std::size_t col = pres.p0.offset(c, v, vc) + l.stationary_slot();
            std::vector<Rational> rhs(x.dims[v]);
            for (std::size_t r = 0; r < x.dims[v]; ++r) {
                Rational e;
                for (std::size_t k = 0; k < x.dims[v]; ++k)
                    if (!g.blocks[v].at(r, k).is_zero())
                        e += g.blocks[v].at(r, k) * pres.cover.blocks[v].at(k, col);
                rhs[r] = e;
            }
            auto w = solve(pres.cover.blocks[v], rhs);
            if (!w) fail("InternalInconsistency", "projective lifting failed");
            images.push_back(*w);
        }
        Morphism ghat = morphism_from_generators(pres.p0, pres.p0.rep, images);
        Morphism gk;  // restriction to the kernel
        gk.source = pres.kernel;
        gk.target = pres.kernel;
        for (std::size_t v = 0; v < vc; ++v) {
            auto blk = solve_matrix(pres.kernel_inc.blocks[v],
                                    ghat.blocks[v] * pres.kernel_inc.blocks[v]);
            if (!blk) fail("InternalInconsistency", "lift does not preserve the kernel");
            gk.blocks.push_back(std::move(*blk));
        }
        Matrix act(hom_k.dim(), hom_k.dim());
        for (std::size_t b = 0; b < hom_k.dim(); ++b) {
            auto coords = coordinates_in(hom_k, mcompose(hom_k.morphisms[b], gk));
            if (!coords) fail("InternalInconsistency", "End action leaves Hom(K, tau x)");
            for (std::size_t r = 0; r < hom_k.dim(); ++r) act.at(r, b) = (*coords)[r];
        }
        actions.push_back(std::move(act));
    }

    // Functionals vanishing on B0.
    Matrix vanish = kernel_basis(b0span);  // columns z with B0 z = 0
    Matrix conditions(0, hom_k.dim());
    for (const auto& act : actions) {
        Matrix rows(vanish.cols(), hom_k.dim());
        for (std::size_t z = 0; z < vanish.cols(); ++z)
            for (std::size_t c = 0; c < hom_k.dim(); ++c) {
                Rational e;
                for (std::size_t k = 0; k < hom_k.dim(); ++k)
                    if (!act.at(k, c).is_zero()) e += vanish.at(k, z) * act.at(k, c);
                rows.at(z, c) = e;
            }
        conditions = conditions.vstack(rows);
    }
    Matrix socle = kernel_basis(conditions);
    std::optional<Morphism> phi;
    for (std::size_t c = 0; c < socle.cols() && !phi; ++c) {
        std::vector<Rational> cand = socle.column_vec(c);
        if (in_row_space(b0span, cand)) continue;
        Morphism f = zero_morphism(pres.kernel, tx);
        for (std::size_t i = 0; i < hom_k.dim(); ++i)
            if (!cand[i].is_zero()) f = madd(f, mscale(hom_k.morphisms[i], cand[i]));
        phi = f;
    }
    if (!phi) fail("InternalInconsistency", "no almost split class found for a non-projective");

    // Pushout of K -> P0 along phi: E = (tau x + P0) / { (phi k, -k) }.
    Representation ds = direct_sum(x.algebra, {tx, pres.p0.rep});
    Subspaces w(vc);
    for (std::size_t v = 0; v < vc; ++v) {
        std::size_t kd = pres.kernel.dims[v];
        Matrix cols(tx.dims[v] + pres.p0.rep.dims[v], kd);
        for (std::size_t k = 0; k < kd; ++k) {
            for (std::size_t r = 0; r < tx.dims[v]; ++r) cols.at(r, k) = phi->blocks[v].at(r, k);
            for (std::size_t r = 0; r < pres.p0.rep.dims[v]; ++r)
                cols.at(tx.dims[v] + r, k) = -pres.kernel_inc.blocks[v].at(r, k);
        }
        w[v] = std::move(cols);
    }
    auto [e, proj] = quotient_representation(ds, w);

    AlmostSplitSequence seq;
    seq.left = tx;
    seq.middle = e;
    seq.right = x;
    seq.inject.source = tx;
    seq.inject.target = e;
    for (std::size_t v = 0; v < vc; ++v) {
        Matrix inc(ds.dims[v], tx.dims[v]);
        for (std::size_t r = 0; r < tx.dims[v]; ++r) inc.at(r, r) = 1;
        seq.inject.blocks.push_back(proj.blocks[v] * inc);
    }
    seq.project.source = e;
    seq.project.target = x;
    for (std::size_t v = 0; v < vc; ++v) {
        Matrix g(x.dims[v], ds.dims[v]);
        for (std::size_t r = 0; r < x.dims[v]; ++r)
            for (std::size_t c = 0; c < pres.p0.rep.dims[v]; ++c)
                g.at(r, tx.dims[v] + c) = pres.cover.blocks[v].at(r, c);
        auto blk = solve_matrix(proj.blocks[v].transposed(), g.transposed());
        if (!blk) fail("InternalInconsistency", "pushout projection does not descend");
        seq.project.blocks.push_back(blk->transposed());
    }
    validate(seq.inject);
    validate(seq.project);

    // Exactness and non-splitness.
    if (!is_injective(seq.inject)) fail("InternalInconsistency", "AR sequence: left map not mono");
    if (!is_surjective(seq.project)) fail("InternalInconsistency", "AR sequence: right map not epi");
    if (!mcompose(seq.project, seq.inject).is_zero())
        fail("InternalInconsistency", "AR sequence: composite nonzero");
    if (e.total_dim() != tx.total_dim() + x.total_dim())
        fail("InternalInconsistency", "AR sequence: middle has wrong class");
    if (section_through(seq.project, identity_morphism(x)))
        fail("InternalInconsistency", "AR sequence splits");
    return seq;
}

}  // namespace arq
