#pragma once

#include "arquiver/algebra.hpp"

#include <functional>
#include <string>
#include <vector>

namespace arq {

/// A finite-dimensional associative algebra in coordinates: a basis together
/// with a full multiplication table. The bridge between computed algebras
/// (endomorphism rings, quotients) and bound quiver presentations.
struct AbstractAlgebra {
    std::size_t dim = 0;
    // table[i * dim + j] = coordinates of basis_i * basis_j
    std::vector<std::vector<Rational>> table;

    std::vector<Rational> multiply(const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) const {
        std::vector<Rational> r(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                const auto& p = table[i * dim + j];
                Rational c = x[i] * y[j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!p[k].is_zero()) r[k] += c * p[k];
            }
        }
        return r;
    }

    /// trace of left multiplication by x.
    Rational left_trace(const std::vector<Rational>& x) const {
        Rational t;
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<Rational> unit(dim);
            unit[k] = 1;
            std::vector<Rational> p = multiply(x, unit);
            t += p[k];
        }
        return t;
    }
};

/// Jacobson radical over a characteristic-zero field: the kernel of the trace
/// form (x, y) -> tr(L_{xy}) of the regular representation. Columns of the
/// returned matrix are a basis. Every returned element is checked to act
/// nilpotently.
inline Matrix abstract_radical(const AbstractAlgebra& a) {
    Matrix gram(a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i; j < a.dim; ++j) {
            gram.at(i, j) = a.left_trace(a.table[i * a.dim + j]);
            gram.at(j, i) = gram.at(i, j);
        }
    Matrix radm = kernel_basis(gram);
    for (std::size_t c = 0; c < radm.cols(); ++c) {
        std::vector<Rational> x = radm.column_vec(c);
        std::vector<Rational> p = x;
        bool nil = false;
        for (std::size_t k = 0; k <= a.dim; ++k) {
            bool zero = true;
            for (const auto& e : p)
                if (!e.is_zero()) { zero = false; break; }
            if (zero) { nil = true; break; }
            p = a.multiply(p, x);
        }
        if (!nil) fail("InternalInconsistency", "radical element is not nilpotent");
    }
    return radm;
}

/// Bound quiver presentation of an abstract algebra with its realization
/// data: how the path basis of the presented algebra sits inside the
/// original coordinates.
struct PresentedAlgebra {
    AlgebraPtr algebra;
    std::vector<std::vector<Rational>> path_images;  // abstract coords per path-basis element
    Matrix eval;                                     // columns = path_images
    Matrix eval_inv;

    AlgElement to_algebra(const std::vector<Rational>& abstract_coords) const {
        AlgElement out(algebra->dim());
        for (std::size_t r = 0; r < eval_inv.rows(); ++r)
            for (std::size_t c = 0; c < eval_inv.cols(); ++c)
                if (!eval_inv.at(r, c).is_zero()) out[r] += eval_inv.at(r, c) * abstract_coords[c];
        return out;
    }

    std::vector<Rational> to_abstract(const AlgElement& x) const {
        std::vector<Rational> out(eval.rows());
        for (std::size_t r = 0; r < eval.rows(); ++r)
            for (std::size_t c = 0; c < eval.cols(); ++c)
                if (!eval.at(r, c).is_zero()) out[r] += eval.at(r, c) * x[c];
        return out;
    }
};

/// Present a basic split algebra, given a complete set of primitive
/// orthogonal idempotents, as a bound quiver algebra: vertices are the
/// idempotents, arrows lift a basis of rad/rad^2, relations are the kernel of
/// the path evaluation.
inline PresentedAlgebra present_algebra(const AbstractAlgebra& alg,
                                        const std::vector<std::vector<Rational>>& idempotents,
                                        const std::vector<std::string>& vertex_names) {
    std::size_t n = alg.dim;
    std::size_t t = idempotents.size();
    if (vertex_names.size() != t) fail("InternalInconsistency", "vertex name count mismatch");

    auto is_zero_vec = [](const std::vector<Rational>& v) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    };

    // Idempotent sanity: orthogonal, idempotent, complete.
    {
        std::vector<Rational> sum(n);
        for (const auto& e : idempotents)
            for (std::size_t k = 0; k < n; ++k) sum[k] += e[k];
        std::vector<Rational> sq = alg.multiply(sum, sum);
        for (std::size_t k = 0; k < n; ++k)
            if (sq[k] != sum[k]) fail("InternalInconsistency", "idempotent sum is not idempotent");
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                auto p = alg.multiply(idempotents[i], idempotents[j]);
                if (i == j) {
                    for (std::size_t k = 0; k < n; ++k)
                        if (p[k] != idempotents[i][k])
                            fail("InternalInconsistency", "idempotent not idempotent");
                } else if (!is_zero_vec(p)) {
                    fail("InternalInconsistency", "idempotents not orthogonal");
                }
            }
        // completeness: sum acts as identity on the basis
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Rational> unit(n);
            unit[b] = 1;
            if (alg.multiply(sum, unit) != unit || alg.multiply(unit, sum) != unit)
                fail("InternalInconsistency", "idempotents do not sum to the identity");
        }
    }

    Matrix radm = abstract_radical(alg);
    std::vector<std::vector<Rational>> rad_basis;
    for (std::size_t c = 0; c < radm.cols(); ++c) rad_basis.push_back(radm.column_vec(c));

    auto corner = [&](const std::vector<std::vector<Rational>>& space, std::size_t i,
                      std::size_t j) {
        // span of e_i * x * e_j over the given spanning set, as rows
        Matrix rows(space.size(), n);
        for (std::size_t s = 0; s < space.size(); ++s) {
            auto v = alg.multiply(idempotents[i], alg.multiply(space[s], idempotents[j]));
            for (std::size_t k = 0; k < n; ++k) rows.at(s, k) = v[k];
        }
        return row_space_basis(rows);
    };

    std::vector<std::vector<Rational>> rad2_basis;
    for (const auto& x : rad_basis)
        for (const auto& y : rad_basis) rad2_basis.push_back(alg.multiply(x, y));

    // Split-basic check: each corner of the semisimple quotient must be K.
    std::vector<std::vector<Rational>> full_basis;
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<Rational> unit(n);
        unit[b] = 1;
        full_basis.push_back(unit);
    }
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t corner_dim = corner(full_basis, i, i).rows();
        std::size_t corner_rad = corner(rad_basis, i, i).rows();
        if (corner_dim - corner_rad != 1)
            fail("NotBasicSplit", "idempotent " + vertex_names[i] +
                                      " is not primitive with residue field K");
    }

    // Arrows: lifts of a basis of e_i rad e_j / e_i rad^2 e_j.
    Quiver q;
    for (const auto& v : vertex_names) q.add_vertex(v);
    std::vector<std::vector<Rational>> arrow_lift;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Matrix w = corner(rad_basis, i, j);
            Matrix span = corner(rad2_basis, i, j);  // rref rows, grows as arrows are picked
            std::size_t count = 0;
            for (std::size_t r = 0; r < w.rows(); ++r) {
                std::vector<Rational> cand(n);
                for (std::size_t k = 0; k < n; ++k) cand[k] = w.at(r, k);
                if (in_row_space(span, cand)) continue;
                span = row_space_basis(span.vstack(Matrix::column(cand).transposed()));
                std::string name = "a" + std::to_string(count) + "_" + vertex_names[i] + "_" +
                                   vertex_names[j];
                q.add_arrow(name, vertex_names[i], vertex_names[j]);
                arrow_lift.push_back(cand);
                ++count;
            }
        }

    // Nilpotency index of the radical.
    std::size_t nil_index = 1;
    {
        std::vector<std::vector<Rational>> power = rad_basis;
        while (!power.empty()) {
            Matrix rows(power.size(), n);
            for (std::size_t s = 0; s < power.size(); ++s)
                for (std::size_t k = 0; k < n; ++k) rows.at(s, k) = power[s][k];
            Matrix basisr = row_space_basis(rows);
            if (basisr.rows() == 0) break;
            ++nil_index;
            std::vector<std::vector<Rational>> next;
            for (std::size_t r = 0; r < basisr.rows(); ++r)
                for (const auto& x : rad_basis) {
                    std::vector<Rational> row(n);
                    for (std::size_t k = 0; k < n; ++k) row[k] = basisr.at(r, k);
                    next.push_back(alg.multiply(row, x));
                }
            power = std::move(next);
            if (nil_index > n + 1) fail("InternalInconsistency", "radical not nilpotent");
        }
    }
    std::size_t bound = std::max<std::size_t>(1, nil_index - 1);

    // Evaluate paths; relations = kernel of the evaluation on paths of
    // length <= bound + 1.
    std::vector<Path> paths = enumerate_paths(q, bound + 1);
    std::vector<std::vector<Rational>> path_value(paths.size());
    {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i)
            index[{paths[i].source, paths[i].arrows}] = i;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const Path& p = paths[i];
            if (p.length() == 0) {
                path_value[i] = idempotents[p.source];
            } else {
                Path prefix = p;
                std::size_t last = prefix.arrows.back();
                prefix.arrows.pop_back();
                prefix.target = q.arrow(last).source;
                auto it = index.find({prefix.source, prefix.arrows});
                path_value[i] = alg.multiply(path_value[it->second], arrow_lift[last]);
            }
        }
    }
    // Kernel of the evaluation, block by (source, target) so every relation
    // is a combination of parallel paths.
    std::vector<Relation> relations;
    for (std::size_t u = 0; u < t; ++u)
        for (std::size_t v = 0; v < t; ++v) {
            std::vector<std::size_t> group;
            for (std::size_t p = 0; p < paths.size(); ++p)
                if (paths[p].source == u && paths[p].target == v) group.push_back(p);
            if (group.empty()) continue;
            Matrix sys(n, group.size());
            for (std::size_t c = 0; c < group.size(); ++c)
                for (std::size_t r = 0; r < n; ++r) sys.at(r, c) = path_value[group[c]][r];
            Matrix ker = kernel_basis(sys);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                Relation rel;
                for (std::size_t p = 0; p < group.size(); ++p)
                    if (!ker.at(p, c).is_zero()) rel.terms.push_back({ker.at(p, c), paths[group[p]]});
                relations.push_back(std::move(rel));
            }
        }

    PresentedAlgebra out;
    out.algebra = build_algebra(q, relations, bound);
    if (out.algebra->dim() != n)
        fail("InternalInconsistency", "presentation dimension mismatch: got " +
                                          std::to_string(out.algebra->dim()) + ", expected " +
                                          std::to_string(n));
    {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i)
            index[{paths[i].source, paths[i].arrows}] = i;
        out.eval = Matrix(n, n);
        for (std::size_t b = 0; b < n; ++b) {
            const Path& bp = out.algebra->basis_path(b);
            auto it = index.find({bp.source, bp.arrows});
            if (it == index.end()) fail("InternalInconsistency", "basis path missing");
            out.path_images.push_back(path_value[it->second]);
            for (std::size_t r = 0; r < n; ++r) out.eval.at(r, b) = path_value[it->second][r];
        }
        auto inv = inverse(out.eval);
        if (!inv) fail("InternalInconsistency", "path evaluation not invertible");
        out.eval_inv = std::move(*inv);
    }
    return out;
}

}  // namespace arq
