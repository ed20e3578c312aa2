#pragma once

#include "arquiver/matrix.hpp"
#include "arquiver/quiver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace arq {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Element of a bound quiver algebra: coordinates over the path basis.
using AlgElement = std::vector<Rational>;

/// Finite-dimensional algebra KQ/I presented by a quiver, admissible
/// relations, an explicit path basis and a full structure-constant table.
/// Instances are immutable; every operation on them is pure.
///
/// The basis is computed by eliminating the two-sided ideal of the relations
/// inside the path algebra truncated at nilpotency_bound + 1. Construction
/// fails with InfiniteDimensional unless every path of length
/// nilpotency_bound + 1 is genuinely zero modulo the relations.
class BoundQuiverAlgebra {
public:
    static constexpr std::size_t kDefaultNilpotencyBound = 30;

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t nilpotency_bound() const { return bound_; }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(std::size_t i) const { return basis_[i]; }
    std::size_t vertex_count() const { return quiver_.vertex_count(); }
    std::size_t arrow_count() const { return quiver_.arrow_count(); }

    /// Basis index of the stationary path e_v.
    std::size_t idempotent(std::size_t v) const { return idempotent_index_[v]; }
    /// Basis index of an arrow (arrows are never eliminated by admissible relations).
    std::size_t arrow_basis_index(std::size_t a) const { return arrow_index_[a]; }

    /// Structure constants: coordinates of basis_i * basis_j.
    const AlgElement& product(std::size_t i, std::size_t j) const {
        return table_[i * basis_.size() + j];
    }

    AlgElement zero_element() const { return AlgElement(dim()); }

    AlgElement identity_element() const {
        AlgElement e(dim());
        for (std::size_t v = 0; v < vertex_count(); ++v) e[idempotent(v)] = 1;
        return e;
    }

    AlgElement unit(std::size_t basis_index) const {
        AlgElement e(dim());
        e[basis_index] = 1;
        return e;
    }

    AlgElement multiply(const AlgElement& x, const AlgElement& y) const {
        AlgElement r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                const AlgElement& p = product(i, j);
                Rational c = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!p[k].is_zero()) r[k] += c * p[k];
            }
        }
        return r;
    }

    /// Cartan matrix entry: number of basis paths v -> w.
    std::size_t cartan(std::size_t v, std::size_t w) const {
        return cartan_[v * vertex_count() + w];
    }

    /// Basis indices of paths with the given source, in basis order.
    std::vector<std::size_t> basis_from(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (basis_[i].source == v) out.push_back(i);
        return out;
    }

    std::size_t max_basis_path_length() const {
        std::size_t m = 0;
        for (const auto& p : basis_) m = std::max(m, p.length());
        return m;
    }

    bool has_relations() const {
        return !relations_.empty() && relation_ideal_dim_ > 0;
    }
    std::size_t relation_ideal_dim() const { return relation_ideal_dim_; }

    /// The opposite algebra; op(op(a)) is pointer-identical to a.
    const BoundQuiverAlgebra* opposite_raw() const { return opposite_; }

    /// Coordinates, over the opposite algebra's basis, of the reversal of
    /// this algebra's i-th basis path.
    const AlgElement& to_opposite(std::size_t i) const { return to_opposite_[i]; }

    /// Consistency checks on the finished table: orthogonal idempotents
    /// summing to 1, grading, and associativity spot checks.
    void validate() const {
        AlgElement one = identity_element();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (multiply(one, unit(i)) != unit(i) || multiply(unit(i), one) != unit(i))
                fail("InternalInconsistency", "identity fails on basis element");
        }
        for (std::size_t v = 0; v < vertex_count(); ++v)
            for (std::size_t w = 0; w < vertex_count(); ++w) {
                AlgElement p = multiply(unit(idempotent(v)), unit(idempotent(w)));
                AlgElement expect = v == w ? unit(idempotent(v)) : zero_element();
                if (p != expect) fail("InternalInconsistency", "idempotents not orthogonal");
            }
        // Associativity on a deterministic sample of basis triples.
        std::size_t n = dim();
        std::size_t step = n * n * n <= 4096 ? 1 : std::max<std::size_t>(1, n / 16);
        for (std::size_t i = 0; i < n; i += step)
            for (std::size_t j = 0; j < n; j += step)
                for (std::size_t k = 0; k < n; k += step) {
                    AlgElement ab_c = multiply(multiply(unit(i), unit(j)), unit(k));
                    AlgElement a_bc = multiply(unit(i), multiply(unit(j), unit(k)));
                    if (ab_c != a_bc) fail("InternalInconsistency", "associativity failure");
                }
    }

    friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&, std::size_t);

private:
    struct Pair;  // both orientations in one allocation

    Quiver quiver_;
    std::vector<Relation> relations_;
    std::size_t bound_ = kDefaultNilpotencyBound;
    std::vector<Path> basis_;
    std::vector<std::size_t> idempotent_index_;
    std::vector<std::size_t> arrow_index_;
    std::vector<AlgElement> table_;
    std::vector<std::size_t> cartan_;
    std::size_t relation_ideal_dim_ = 0;
    const BoundQuiverAlgebra* opposite_ = nullptr;
    std::vector<AlgElement> to_opposite_;

    struct Reducer {
        // RREF rows of the relation ideal within the truncated path algebra.
        Matrix rows;                        // rref basis rows over path coordinates
        std::vector<std::size_t> pivots;    // pivot path indices
        std::vector<Rational> reduce(std::vector<Rational> v) const {
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                const Rational& lead = v[pivots[r]];
                if (lead.is_zero()) continue;
                Rational f = lead;  // pivot entries are 1 in rref
                for (std::size_t c = pivots[r]; c < rows.cols(); ++c)
                    if (!rows.at(r, c).is_zero()) v[c] -= f * rows.at(r, c);
            }
            return v;
        }
    };

    void build_one_side(const Quiver& q, const std::vector<Relation>& rels, std::size_t bound);
};

struct BoundQuiverAlgebra::Pair {
    BoundQuiverAlgebra primal;
    BoundQuiverAlgebra opposite;
};

inline Path reverse_path(const Path& p) {
    Path r;
    r.source = p.target;
    r.target = p.source;
    r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return r;
}

inline Relation reverse_relation(const Relation& rel) {
    Relation out;
    for (const auto& t : rel.terms) out.terms.push_back({t.coeff, reverse_path(t.path)});
    return out;
}

inline void BoundQuiverAlgebra::build_one_side(const Quiver& q, const std::vector<Relation>& rels,
                                               std::size_t bound) {
    quiver_ = q;
    relations_ = rels;
    bound_ = bound;
    for (const auto& r : rels) r.validate(q);

    std::vector<Path> paths = enumerate_paths(q, bound + 1);
    if (paths.size() > 200000)
        fail("TooManyPaths", "path count explodes below the nilpotency bound; add relations or lower the bound");

    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index[{paths[i].source, paths[i].arrows}] = i;
    auto path_pos = [&](const Path& p) -> std::size_t {
        auto it = index.find({p.source, p.arrows});
        if (it == index.end()) fail("InternalInconsistency", "path missing from truncation");
        return it->second;
    };

    // Two-sided ideal generated by the relations inside the truncation:
    // spanned by p * r * q over all composable path pairs.
    std::vector<std::vector<Rational>> gens;
    for (const auto& rel : rels) {
        std::size_t rsrc = rel.terms.front().path.source;
        std::size_t rtgt = rel.terms.front().path.target;
        std::size_t min_len = rel.terms.front().path.length();
        for (const auto& t : rel.terms) min_len = std::min(min_len, t.path.length());
        for (const auto& p : paths) {
            if (p.target != rsrc) continue;
            for (const auto& s : paths) {
                if (s.source != rtgt) continue;
                if (p.length() + min_len + s.length() > bound + 1) continue;
                std::vector<Rational> g(paths.size());
                bool nonzero = false;
                for (const auto& t : rel.terms) {
                    if (p.length() + t.path.length() + s.length() > bound + 1) continue;  // truncated away
                    Path full = compose(compose(p, t.path), s);
                    g[path_pos(full)] += t.coeff;
                    nonzero = true;
                }
                if (nonzero) gens.push_back(std::move(g));
            }
        }
    }

    Reducer red;
    {
        Matrix gmat(gens.size(), paths.size());
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t c = 0; c < paths.size(); ++c) gmat.at(r, c) = gens[r][c];
        RrefResult rr = rref(std::move(gmat));
        red.rows = Matrix(rr.rank, paths.size());
        for (std::size_t r = 0; r < rr.rank; ++r)
            for (std::size_t c = 0; c < paths.size(); ++c) red.rows.at(r, c) = rr.reduced.at(r, c);
        red.pivots = rr.pivot_columns;
    }
    relation_ideal_dim_ = red.pivots.size();

    std::vector<bool> is_pivot(paths.size(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    // Finite-dimensionality: every path of length bound+1 must already be
    // in the ideal, otherwise the algebra does not fit under the bound.
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].length() != bound + 1) continue;
        std::vector<Rational> v(paths.size());
        v[i] = 1;
        v = red.reduce(std::move(v));
        for (const auto& e : v)
            if (!e.is_zero())
                fail("InfiniteDimensional",
                     "nonzero path of length " + std::to_string(bound + 1) + " survives: " +
                         paths[i].label(q));
    }

    std::vector<std::size_t> basis_pos;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (!is_pivot[i] && paths[i].length() <= bound) {
            basis_pos.push_back(i);
            basis_.push_back(paths[i]);
        }
    std::vector<std::size_t> pos_to_basis(paths.size(), SIZE_MAX);
    for (std::size_t b = 0; b < basis_pos.size(); ++b) pos_to_basis[basis_pos[b]] = b;

    idempotent_index_.assign(q.vertex_count(), SIZE_MAX);
    arrow_index_.assign(q.arrow_count(), SIZE_MAX);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (basis_[b].length() == 0) idempotent_index_[basis_[b].source] = b;
        if (basis_[b].length() == 1) arrow_index_[basis_[b].arrows[0]] = b;
    }
    for (auto i : idempotent_index_)
        if (i == SIZE_MAX) fail("InternalInconsistency", "stationary path eliminated");
    for (auto i : arrow_index_)
        if (i == SIZE_MAX) fail("InternalInconsistency", "arrow eliminated by admissible relations");

    auto normal_form = [&](const Path& p) -> AlgElement {
        AlgElement out(basis_.size());
        if (p.length() > bound + 1) return out;  // inside the nilpotent tail
        std::vector<Rational> v(paths.size());
        v[path_pos(p)] = 1;
        v = red.reduce(std::move(v));
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (pos_to_basis[i] == SIZE_MAX)
                fail("InternalInconsistency", "normal form escapes the basis");
            out[pos_to_basis[i]] = v[i];
        }
        return out;
    };

    table_.assign(basis_.size() * basis_.size(), AlgElement(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (basis_[i].target != basis_[j].source) continue;
            if (basis_[i].length() + basis_[j].length() > bound) {
                // products longer than the bound are zero: R^{bound+1} lies in the ideal
                continue;
            }
            table_[i * basis_.size() + j] = normal_form(compose(basis_[i], basis_[j]));
        }

    cartan_.assign(q.vertex_count() * q.vertex_count(), 0);
    for (const auto& p : basis_) ++cartan_[p.source * q.vertex_count() + p.target];
}

/// Build KQ/I. Throws InvalidRelation for non-admissible relation shapes and
/// InfiniteDimensional when nonzero paths survive past the nilpotency bound.
inline AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                std::size_t nilpotency_bound = BoundQuiverAlgebra::kDefaultNilpotencyBound) {
    auto pair = std::make_shared<BoundQuiverAlgebra::Pair>();
    std::vector<Relation> op_rels;
    for (const auto& r : rels) op_rels.push_back(reverse_relation(r));

    pair->primal.build_one_side(q, rels, nilpotency_bound);
    pair->opposite.build_one_side(q.reversed(), op_rels, nilpotency_bound);
    pair->primal.opposite_ = &pair->opposite;
    pair->opposite.opposite_ = &pair->primal;
    if (pair->primal.dim() != pair->opposite.dim())
        fail("InternalInconsistency", "opposite algebra dimension differs");

    // Path correspondence in both directions: reversal followed by the
    // other side's normal form. Reversed basis paths stay basis-sized sets,
    // so the correspondence matrices are invertible.
    auto correspondence = [](const BoundQuiverAlgebra& from, const BoundQuiverAlgebra& to) {
        std::vector<AlgElement> out;
        // Normal form on `to` via products with idempotents is not enough;
        // rebuild the reduction by multiplying arrow chains in `to`.
        for (std::size_t i = 0; i < from.dim(); ++i) {
            Path rev = reverse_path(from.basis_path(i));
            AlgElement acc = to.unit(to.idempotent(rev.source));
            for (auto a : rev.arrows) acc = to.multiply(acc, to.unit(to.arrow_basis_index(a)));
            out.push_back(std::move(acc));
        }
        return out;
    };
    pair->primal.to_opposite_ = correspondence(pair->primal, pair->opposite);
    pair->opposite.to_opposite_ = correspondence(pair->opposite, pair->primal);

    pair->primal.validate();
    pair->opposite.validate();
    return AlgebraPtr(pair, &pair->primal);
}

/// Opposite algebra handle sharing ownership with `a`; opposite(opposite(a))
/// is pointer-identical to a.
inline AlgebraPtr opposite(const AlgebraPtr& a) {
    return AlgebraPtr(a, a->opposite_raw());
}

/// Basis indices of length >= 1 paths: a basis of the Jacobson radical
/// (admissible presentation, so rad = arrow ideal).
inline std::vector<std::size_t> radical_basis(const BoundQuiverAlgebra& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis_path(i).length() >= 1) out.push_back(i);
    return out;
}

}  // namespace arq
