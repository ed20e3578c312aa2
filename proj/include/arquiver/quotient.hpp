#pragma once

#include "arquiver/decompose.hpp"

namespace arq {

/// Quotient B = A/J by a two-sided ideal, presented as a bound quiver algebra
/// on the surviving vertices (a vertex survives iff its idempotent is not in
/// the ideal), together with transport data in both directions.
struct QuotientAlgebra {
    AlgebraPtr source;                 // A
    AlgebraPtr algebra;                // B
    bool trivial = false;              // zero ideal: B is A itself
    Matrix to_b;                       // dim B x dim A: image of each A-basis element
    Matrix lift;                       // dim A x dim B: a preimage of each B-basis element
    std::vector<std::size_t> vertex_map;      // A vertex -> B vertex (SIZE_MAX when killed)
    std::vector<AlgElement> ideal_basis;      // basis of J over A's path basis
    std::size_t ideal_dim() const { return ideal_basis.size(); }

    AlgElement map_element(const AlgElement& x) const {
        AlgElement out(algebra->dim());
        for (std::size_t r = 0; r < to_b.rows(); ++r)
            for (std::size_t c = 0; c < to_b.cols(); ++c)
                if (!to_b.at(r, c).is_zero()) out[r] += to_b.at(r, c) * x[c];
        return out;
    }

    AlgElement lift_element(const AlgElement& y) const {
        AlgElement out(source->dim());
        for (std::size_t r = 0; r < lift.rows(); ++r)
            for (std::size_t c = 0; c < lift.cols(); ++c)
                if (!lift.at(r, c).is_zero()) out[r] += lift.at(r, c) * y[c];
        return out;
    }
};

/// Quotient by the two-sided ideal generated by the given elements. Errors
/// with ImproperIdeal when the ideal is the whole algebra. The induced
/// presentation is recomputed from scratch, so admissibility of the result
/// is re-validated rather than assumed.
inline QuotientAlgebra quotient_algebra(const AlgebraPtr& a,
                                        const std::vector<AlgElement>& ideal_elements) {
    std::size_t n = a->dim();
    // Two-sided closure: span of b1 * x * b2 over the path basis.
    std::vector<std::vector<Rational>> gens;
    for (const auto& x : ideal_elements)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                AlgElement g = a->multiply(a->unit(i), a->multiply(x, a->unit(j)));
                bool nz = false;
                for (const auto& e : g)
                    if (!e.is_zero()) { nz = true; break; }
                if (nz) gens.push_back(std::move(g));
            }
    Matrix gmat(gens.size(), n);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) gmat.at(r, c) = gens[r][c];
    RrefResult jr = rref(std::move(gmat));

    QuotientAlgebra out;
    out.source = a;
    for (std::size_t r = 0; r < jr.rank; ++r) {
        AlgElement row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = jr.reduced.at(r, c);
        out.ideal_basis.push_back(std::move(row));
    }

    if (jr.rank == n) fail("ImproperIdeal", "the ideal is the whole algebra");
    if (jr.rank == 0) {
        out.algebra = a;
        out.trivial = true;
        out.to_b = Matrix::identity(n);
        out.lift = Matrix::identity(n);
        out.vertex_map.resize(a->vertex_count());
        for (std::size_t v = 0; v < a->vertex_count(); ++v) out.vertex_map[v] = v;
        return out;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto p : jr.pivot_columns) is_pivot[p] = true;
    std::vector<std::size_t> reps;  // A-basis indices representing B's abstract basis
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) reps.push_back(i);
    std::size_t bn = reps.size();

    // reduce modulo J, then read coordinates over the representatives
    auto reduce = [&](AlgElement v) {
        for (std::size_t r = 0; r < jr.rank; ++r) {
            const Rational& lead = v[jr.pivot_columns[r]];
            if (lead.is_zero()) continue;
            Rational f = lead;
            for (std::size_t c = jr.pivot_columns[r]; c < n; ++c)
                if (!jr.reduced.at(r, c).is_zero()) v[c] -= f * jr.reduced.at(r, c);
        }
        std::vector<Rational> coords(bn);
        for (std::size_t k = 0; k < bn; ++k) coords[k] = v[reps[k]];
        return coords;
    };
    auto embed = [&](const std::vector<Rational>& coords) {
        AlgElement v(n);
        for (std::size_t k = 0; k < bn; ++k) v[reps[k]] = coords[k];
        return v;
    };

    AbstractAlgebra babs;
    babs.dim = bn;
    babs.table.resize(bn * bn);
    for (std::size_t i = 0; i < bn; ++i)
        for (std::size_t j = 0; j < bn; ++j)
            babs.table[i * bn + j] = reduce(a->multiply(a->unit(reps[i]), a->unit(reps[j])));

    std::vector<std::vector<Rational>> idems;
    std::vector<std::string> names;
    out.vertex_map.assign(a->vertex_count(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        AlgElement ev = a->unit(a->idempotent(v));
        std::vector<Rational> evv(n);
        for (std::size_t c = 0; c < n; ++c) evv[c] = ev[c];
        if (in_row_space(jr.reduced, evv)) continue;  // vertex killed
        idems.push_back(reduce(ev));
        names.push_back(a->quiver().vertex_name(v));
        out.vertex_map[v] = next++;
    }

    PresentedAlgebra pres = present_algebra(babs, idems, names);
    out.algebra = pres.algebra;

    out.to_b = Matrix(pres.algebra->dim(), n);
    for (std::size_t i = 0; i < n; ++i) {
        AlgElement img = pres.to_algebra(reduce(a->unit(i)));
        for (std::size_t r = 0; r < img.size(); ++r) out.to_b.at(r, i) = img[r];
    }
    out.lift = Matrix(n, pres.algebra->dim());
    for (std::size_t k = 0; k < pres.algebra->dim(); ++k) {
        AlgElement pre = embed(pres.path_images[k]);
        for (std::size_t r = 0; r < n; ++r) out.lift.at(r, k) = pre[r];
    }
    return out;
}

/// Module over B viewed over A (zero spaces at killed vertices). Inverse of
/// restrict_to_quotient on its common domain.
inline Representation inflate_from_quotient(const Representation& bmod, const QuotientAlgebra& q) {
    if (bmod.algebra.get() != q.algebra.get())
        fail("AlgebraMismatch", "module is not over the quotient algebra");
    if (q.trivial) return bmod;
    const auto& a = *q.source;
    const auto& b = *q.algebra;
    Representation out = zero_representation(q.source);
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (q.vertex_map[v] != SIZE_MAX) out.dims[v] = bmod.dims[q.vertex_map[v]];
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        const Arrow& arrow = a.quiver().arrow(ar);
        std::size_t su = q.vertex_map[arrow.source], tv = q.vertex_map[arrow.target];
        if (su == SIZE_MAX || tv == SIZE_MAX) {
            out.maps[ar] = Matrix::zero(out.dims[arrow.target], out.dims[arrow.source]);
            continue;
        }
        AlgElement beta = q.map_element(a.unit(a.arrow_basis_index(ar)));
        out.maps[ar] = evaluate_element_block(bmod, beta, su, tv);
        (void)b;
    }
    validate(out);
    return out;
}

/// Module over A killed by the ideal, viewed over B. Errors with
/// IdealActsNonzero when the ideal does not annihilate.
inline Representation restrict_to_quotient(const Representation& amod, const QuotientAlgebra& q) {
    if (amod.algebra.get() != q.source.get())
        fail("AlgebraMismatch", "module is not over the source algebra");
    if (q.trivial) return amod;
    const auto& a = *q.source;
    for (const auto& x : q.ideal_basis)
        for (std::size_t u = 0; u < a.vertex_count(); ++u)
            for (std::size_t v = 0; v < a.vertex_count(); ++v)
                if (!evaluate_element_block(amod, x, u, v).is_zero())
                    fail("IdealActsNonzero", "ideal does not annihilate the module");
    const auto& b = *q.algebra;
    Representation out = zero_representation(q.algebra);
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (q.vertex_map[v] != SIZE_MAX) out.dims[q.vertex_map[v]] = amod.dims[v];
    std::vector<std::size_t> binv(b.vertex_count());  // B vertex -> A vertex
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (q.vertex_map[v] != SIZE_MAX) binv[q.vertex_map[v]] = v;
    for (std::size_t br = 0; br < b.arrow_count(); ++br) {
        const Arrow& arrow = b.quiver().arrow(br);
        AlgElement x = q.lift_element(b.unit(b.arrow_basis_index(br)));
        out.maps[br] = evaluate_element_block(amod, x, binv[arrow.source], binv[arrow.target]);
    }
    validate(out);
    return out;
}

}  // namespace arq
