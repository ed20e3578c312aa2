#pragma once

#include "arquiver/hom.hpp"
#include "arquiver/present.hpp"

#include <vector>

namespace arq {

enum class DecompositionStatus { Complete, Undecided };

struct DecompositionReport {
    struct Piece {
        Representation rep;
        std::size_t multiplicity = 1;
    };
    std::vector<Piece> pieces;
    DecompositionStatus status = DecompositionStatus::Complete;

    std::size_t distinct_count() const { return pieces.size(); }
    std::size_t summand_count() const {
        std::size_t n = 0;
        for (const auto& p : pieces) n += p.multiplicity;
        return n;
    }
};

namespace detail {

/// End(M) as an abstract algebra over the hom basis, multiplication is plain
/// composition: table[i][j] = coords of h_i o h_j.
inline AbstractAlgebra end_algebra_table(const HomBasis& h) {
    AbstractAlgebra a;
    a.dim = h.dim();
    a.table.resize(a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Morphism comp = mcompose(h.morphisms[i], h.morphisms[j]);
            auto coords = coordinates_in(h, comp);
            if (!coords) fail("InternalInconsistency", "End not closed under composition");
            a.table[i * a.dim + j] = std::move(*coords);
        }
    return a;
}

/// Fitting splitting along one endomorphism: M = ker(f^N) + im(f^N) when f
/// is neither nilpotent nor invertible.
inline std::optional<std::pair<Representation, Representation>> fitting_split(
    const Representation& m, const Morphism& f) {
    std::size_t total = m.total_dim();
    Morphism power = f;
    for (std::size_t steps = 1; steps < total; steps *= 2) power = mcompose(power, power);
    Subspaces ker = kernel_subspaces(power);
    Subspaces img = image_subspaces(power);
    std::size_t kdim = 0, idim = 0;
    for (const auto& s : ker) kdim += s.cols();
    for (const auto& s : img) idim += s.cols();
    if (kdim == 0 || idim == 0) return std::nullopt;
    return std::make_pair(sub_representation(m, ker).first, sub_representation(m, img).first);
}

inline Morphism shifted(const Morphism& f, const Rational& lambda) {
    Morphism g = f;
    for (std::size_t v = 0; v < g.blocks.size(); ++v) {
        Matrix id = Matrix::identity(g.blocks[v].rows());
        g.blocks[v] = g.blocks[v] - id.scaled(lambda);
    }
    return g;
}

/// Search for a splitting endomorphism: the hom basis itself, pairwise sums,
/// and eigenvalue shifts from a small deterministic grid. The indecomposable
/// verdict never depends on this search succeeding.
inline std::optional<std::pair<Representation, Representation>> find_split(
    const Representation& m, const HomBasis& end) {
    for (const auto& f : end.morphisms)
        if (auto s = fitting_split(m, f)) return s;
    for (std::size_t i = 0; i < end.dim(); ++i)
        for (std::size_t j = i + 1; j < end.dim(); ++j)
            if (auto s = fitting_split(m, madd(end.morphisms[i], end.morphisms[j]))) return s;
    static const long nums[] = {1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8};
    static const long dens[] = {1, 2, 3, 4};
    for (const auto& f : end.morphisms)
        for (long d : dens)
            for (long p : nums)
                if (auto s = fitting_split(m, shifted(f, Rational(BigInt(p), BigInt(d)))))
                    return s;
    return std::nullopt;
}

inline void decompose_into(const Representation& m, std::vector<Representation>& out, bool& undecided) {
    if (m.is_zero()) return;
    HomBasis end = hom_basis(m, m);
    if (end.dim() == 1) {
        out.push_back(m);
        return;
    }
    if (auto split = find_split(m, end)) {
        decompose_into(split->first, out, undecided);
        decompose_into(split->second, out, undecided);
        return;
    }
    // No splitting found; certify indecomposability via dim End/rad = 1.
    AbstractAlgebra e = end_algebra_table(end);
    Matrix radm = abstract_radical(e);
    if (end.dim() - radm.cols() == 1) {
        out.push_back(m);
    } else {
        undecided = true;
        out.push_back(m);
    }
}

}  // namespace detail

/// Fitting-based decomposition into indecomposable summands. Pieces are
/// grouped up to isomorphism with multiplicities; a piece whose endomorphism
/// ring fails the local certificate without a splitting being found yields
/// status Undecided rather than a wrong answer.
inline DecompositionReport decompose(const Representation& m) {
    DecompositionReport report;
    std::vector<Representation> pieces;
    bool undecided = false;
    detail::decompose_into(m, pieces, undecided);
    report.status = undecided ? DecompositionStatus::Undecided : DecompositionStatus::Complete;
    for (auto& p : pieces) {
        bool merged = false;
        for (auto& existing : report.pieces)
            if (existing.rep.dims == p.dims && is_isomorphic(existing.rep, p)) {
                ++existing.multiplicity;
                merged = true;
                break;
            }
        if (!merged) report.pieces.push_back({std::move(p), 1});
    }
    return report;
}

/// Basis of the annihilator ideal { a in A : M a = 0 }: kernel of the action
/// map into End of the total space.
inline std::vector<AlgElement> annihilator(const Representation& m) {
    const auto& alg = *m.algebra;
    std::size_t total = m.total_dim();
    std::vector<std::size_t> voffset(alg.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) voffset[v + 1] = voffset[v] + m.dims[v];
    Matrix sys(total * total, alg.dim());
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        const Path& p = alg.basis_path(b);
        Matrix block = evaluate_path(m, p);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                sys.at((voffset[p.target] + r) * total + (voffset[p.source] + c), b) = block.at(r, c);
    }
    Matrix ker = kernel_basis(sys);
    std::vector<AlgElement> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back(ker.column_vec(c));
    return out;
}

inline bool is_faithful(const Representation& m) { return annihilator(m).empty(); }

/// Bound quiver presentation of End_A(M) for M with a complete decomposition:
/// one vertex per iso-class of indecomposable summands, arrows a basis of
/// rad/rad^2, relations the kernel of path evaluation. The realization sends
/// path-basis elements to explicit morphisms of the multiplicity-free sum.
struct EndAlgebra {
    PresentedAlgebra presented;
    std::vector<Representation> summands;  // order matches vertex order
    Representation sum;                    // multiplicity-free direct sum
    HomBasis end_basis;                    // End(sum) basis used for coordinates
    // offset of summand s inside the sum, per ambient vertex
    std::vector<std::vector<std::size_t>> summand_offsets;

    Morphism realize_element(const AlgElement& x) const {
        std::vector<Rational> abstract = presented.to_abstract(x);
        Morphism f = zero_morphism(sum, sum);
        for (std::size_t i = 0; i < abstract.size(); ++i)
            if (!abstract[i].is_zero()) f = madd(f, mscale(end_basis.morphisms[i], abstract[i]));
        return f;
    }

    Morphism realize_path(std::size_t basis_index) const {
        return realize_element(presented.algebra->unit(basis_index));
    }

    /// Component X_j -> X_i of a realized endomorphism of the sum, read off
    /// the block at the recorded offsets.
    Morphism component(const Morphism& f, std::size_t i, std::size_t j) const {
        Morphism out = zero_morphism(summands[j], summands[i]);
        for (std::size_t v = 0; v < out.blocks.size(); ++v)
            for (std::size_t r = 0; r < summands[i].dims[v]; ++r)
                for (std::size_t c = 0; c < summands[j].dims[v]; ++c)
                    out.blocks[v].at(r, c) =
                        f.blocks[v].at(summand_offsets[i][v] + r, summand_offsets[j][v] + c);
        return out;
    }
};

inline EndAlgebra endomorphism_algebra_of_summands(const std::vector<Representation>& summands,
                                                   const std::vector<std::string>& names) {
    if (summands.empty()) fail("UndecidedDecomposition", "endomorphism algebra of the zero module");
    EndAlgebra out;
    out.summands = summands;
    out.sum = direct_sum(summands.front().algebra, summands);
    out.end_basis = hom_basis(out.sum, out.sum);

    // Idempotents: identity on one summand, zero elsewhere.
    std::vector<std::vector<Rational>> idems;
    const auto& alg = *out.sum.algebra;
    std::vector<std::vector<std::size_t>> voff(summands.size(),
                                               std::vector<std::size_t>(alg.vertex_count(), 0));
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        std::size_t acc = 0;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            voff[s][v] = acc;
            acc += summands[s].dims[v];
        }
    }
    out.summand_offsets = voff;
    for (std::size_t s = 0; s < summands.size(); ++s) {
        Morphism e = zero_morphism(out.sum, out.sum);
        for (std::size_t v = 0; v < alg.vertex_count(); ++v)
            for (std::size_t k = 0; k < summands[s].dims[v]; ++k)
                e.blocks[v].at(voff[s][v] + k, voff[s][v] + k) = 1;
        auto coords = coordinates_in(out.end_basis, e);
        if (!coords) fail("InternalInconsistency", "summand projection missing from End");
        idems.push_back(std::move(*coords));
    }

    AbstractAlgebra table = detail::end_algebra_table(out.end_basis);
    out.presented = present_algebra(table, idems, names);
    return out;
}

/// End_A(M) presentation; requires a complete decomposition (the vertex set
/// is the iso-classes of summands).
inline EndAlgebra endomorphism_algebra(const Representation& m) {
    DecompositionReport rep = decompose(m);
    if (rep.status != DecompositionStatus::Complete)
        fail("UndecidedDecomposition", "decomposition is undecided");
    if (rep.pieces.empty())
        fail("UndecidedDecomposition", "endomorphism algebra of the zero module");
    std::vector<Representation> summands;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rep.pieces.size(); ++i) {
        summands.push_back(rep.pieces[i].rep);
        names.push_back("s" + std::to_string(i));
    }
    return endomorphism_algebra_of_summands(summands, names);
}

}  // namespace arq
