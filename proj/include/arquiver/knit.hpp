#pragma once

#include "arquiver/decompose.hpp"
#include "arquiver/translate.hpp"

#include <optional>
#include <string>

namespace arq {

enum class FragmentStatus { CompleteFiniteType, TruncatedAtBound };

struct KnitLimits {
    std::size_t max_modules = 500;
    std::size_t max_total_dim = 64;
};

struct FragmentVertex {
    Representation rep;
    std::size_t projective_at = SIZE_MAX;  // algebra vertex when this is P(v)
    std::size_t injective_at = SIZE_MAX;   // algebra vertex when this is I(v)
    std::size_t tau = SIZE_MAX;            // fragment index of tau(this)
    std::size_t tau_inverse = SIZE_MAX;    // fragment index of tau^-(this)

    bool is_projective() const { return projective_at != SIZE_MAX; }
    bool is_injective() const { return injective_at != SIZE_MAX; }
};

struct FragmentArrow {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t multiplicity = 1;
    std::vector<Morphism> representatives;  // chosen basis of rad/rad^2
};

/// Knitted portion of the Auslander-Reiten quiver: iso-class vertices,
/// irreducible-map arrows with multiplicities and chosen representatives,
/// the tau-pairing, and a completeness flag.
struct ARQuiverFragment {
    AlgebraPtr algebra;
    std::vector<FragmentVertex> vertices;
    std::vector<FragmentArrow> arrows;
    FragmentStatus status = FragmentStatus::TruncatedAtBound;
    KnitLimits limits;
    std::string truncation_reason;

    std::optional<std::size_t> find(const Representation& rep) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].rep.dims == rep.dims && is_isomorphic(vertices[i].rep, rep))
                return i;
        return std::nullopt;
    }

    std::vector<std::size_t> arrows_into(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].to == v) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> arrows_out_of(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].from == v) out.push_back(i);
        return out;
    }

    std::optional<std::size_t> arrow_between(std::size_t u, std::size_t v) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].from == u && arrows[i].to == v) return i;
        return std::nullopt;
    }

    /// Connected components (undirected), as vertex id lists in id order.
    std::vector<std::vector<std::size_t>> components() const {
        std::vector<std::size_t> comp(vertices.size(), SIZE_MAX);
        std::size_t count = 0;
        for (std::size_t seed = 0; seed < vertices.size(); ++seed) {
            if (comp[seed] != SIZE_MAX) continue;
            std::vector<std::size_t> stack{seed};
            comp[seed] = count;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (const auto& a : arrows) {
                    std::size_t next = SIZE_MAX;
                    if (a.from == v) next = a.to;
                    if (a.to == v) next = a.from;
                    if (next != SIZE_MAX && comp[next] == SIZE_MAX) {
                        comp[next] = count;
                        stack.push_back(next);
                    }
                }
            }
            ++count;
        }
        std::vector<std::vector<std::size_t>> out(count);
        for (std::size_t v = 0; v < vertices.size(); ++v) out[comp[v]].push_back(v);
        return out;
    }

    /// tau-orbits: chains under the tau pairing, listed from the tau-most
    /// end towards tau^-.
    std::vector<std::vector<std::size_t>> tau_orbits() const {
        std::vector<bool> seen(vertices.size(), false);
        std::vector<std::vector<std::size_t>> orbits;
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (seen[v]) continue;
            std::size_t start = v;
            std::size_t guard = 0;
            while (vertices[start].tau != SIZE_MAX) {
                start = vertices[start].tau;
                if (++guard > vertices.size())
                    fail("InternalInconsistency", "tau pairing contains a cycle");
            }
            std::vector<std::size_t> orbit;
            for (std::size_t u = start; u != SIZE_MAX; u = vertices[u].tau_inverse) {
                if (seen[u]) fail("InternalInconsistency", "tau orbits overlap");
                seen[u] = true;
                orbit.push_back(u);
            }
            orbits.push_back(std::move(orbit));
        }
        return orbits;
    }

    /// Mesh condition: for every vertex with a tau-partner, the multiset of
    /// arrow sources into X equals the multiset of arrow targets out of tau X.
    void verify_mesh_consistency() const {
        for (std::size_t x = 0; x < vertices.size(); ++x) {
            if (vertices[x].tau == SIZE_MAX) continue;
            std::size_t tx = vertices[x].tau;
            std::map<std::size_t, std::size_t> in, out;
            for (auto ai : arrows_into(x)) in[arrows[ai].from] += arrows[ai].multiplicity;
            for (auto ai : arrows_out_of(tx)) out[arrows[ai].to] += arrows[ai].multiplicity;
            if (in != out) fail("InternalInconsistency", "mesh condition fails");
        }
    }
};

namespace detail {

/// rad(Y, Z) inside Hom(Y, Z) for indecomposable ends: everything when the
/// ends are non-isomorphic, otherwise the radical of End transported along
/// an isomorphism witness. Returned as coordinate rows over the hom basis.
inline Matrix radical_hom_rows(const Representation& y, const Representation& z,
                               const HomBasis& h) {
    std::optional<Morphism> wit;
    if (y.dims == z.dims) wit = iso_witness(y, z);
    if (!wit) return Matrix::identity(h.dim());
    HomBasis end = hom_basis(y, y);
    AbstractAlgebra table = end_algebra_table(end);
    Matrix radm = abstract_radical(table);
    Matrix rows(radm.cols(), h.dim());
    for (std::size_t c = 0; c < radm.cols(); ++c) {
        Morphism r = zero_morphism(y, y);
        for (std::size_t k = 0; k < end.dim(); ++k)
            if (!radm.at(k, c).is_zero()) r = madd(r, mscale(end.morphisms[k], radm.at(k, c)));
        auto coords = coordinates_in(h, mcompose(*wit, r));
        if (!coords) fail("InternalInconsistency", "transported radical escapes Hom");
        for (std::size_t k = 0; k < h.dim(); ++k) rows.at(c, k) = (*coords)[k];
    }
    return row_space_basis(rows);
}

struct IrreducibleData {
    std::size_t multiplicity = 0;
    std::vector<Morphism> representatives;
};

/// Arrows Y -> Z of the AR quiver: a basis of rad(Y,Z)/rad^2(Y,Z), with
/// rad^2 spanned by compositions through the given factor modules.
inline IrreducibleData irreducible_maps(const Representation& y, const Representation& z,
                                        const std::vector<const Representation*>& factors) {
    HomBasis h = hom_basis(y, z);
    IrreducibleData out;
    if (h.dim() == 0) return out;
    Matrix rad_rows = radical_hom_rows(y, z, h);

    std::vector<std::vector<Rational>> rad2;
    for (const auto* w : factors) {
        if (hom_dim(y, *w) == 0 || hom_dim(*w, z) == 0) continue;
        HomBasis yw = hom_basis(y, *w);
        HomBasis wz = hom_basis(*w, z);
        Matrix yw_rad = radical_hom_rows(y, *w, yw);
        Matrix wz_rad = radical_hom_rows(*w, z, wz);
        for (std::size_t i = 0; i < yw_rad.rows(); ++i)
            for (std::size_t j = 0; j < wz_rad.rows(); ++j) {
                Morphism f = zero_morphism(y, *w);
                for (std::size_t k = 0; k < yw.dim(); ++k)
                    if (!yw_rad.at(i, k).is_zero())
                        f = madd(f, mscale(yw.morphisms[k], yw_rad.at(i, k)));
                Morphism g = zero_morphism(*w, z);
                for (std::size_t k = 0; k < wz.dim(); ++k)
                    if (!wz_rad.at(j, k).is_zero())
                        g = madd(g, mscale(wz.morphisms[k], wz_rad.at(j, k)));
                auto coords = coordinates_in(h, mcompose(g, f));
                if (!coords) fail("InternalInconsistency", "rad^2 escapes Hom");
                rad2.push_back(std::move(*coords));
            }
    }
    Matrix rad2_rows(rad2.size(), h.dim());
    for (std::size_t r = 0; r < rad2.size(); ++r)
        for (std::size_t c = 0; c < h.dim(); ++c) rad2_rows.at(r, c) = rad2[r][c];
    Matrix span = row_space_basis(rad2_rows);
    for (std::size_t r = 0; r < rad_rows.rows(); ++r) {
        std::vector<Rational> cand(h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k) cand[k] = rad_rows.at(r, k);
        if (in_row_space(span, cand)) continue;
        span = row_space_basis(span.vstack(Matrix::column(cand).transposed()));
        Morphism f = zero_morphism(y, z);
        for (std::size_t k = 0; k < h.dim(); ++k)
            if (!cand[k].is_zero()) f = madd(f, mscale(h.morphisms[k], cand[k]));
        out.representatives.push_back(std::move(f));
        ++out.multiplicity;
    }
    return out;
}

}  // namespace detail

/// Knit the AR quiver from the structural projectives by forming tau^- meshes.
/// The translate of each new mesh is computed by Tr D and cross-checked
/// against the mesh rule (class vectors, the tau round trip, and arrow
/// multiplicities recomputed from rad/rad^2); disagreement is a hard error,
/// truncation is a status.
inline ARQuiverFragment knit(const AlgebraPtr& a, KnitLimits limits = {}) {
    ARQuiverFragment frag;
    frag.algebra = a;
    frag.limits = limits;
    std::size_t vc = a->vertex_count();

    std::vector<Representation> injectives;
    for (std::size_t v = 0; v < vc; ++v) injectives.push_back(injective_module(a, v));

    struct ProjectiveInfo {
        Representation rep;
        std::vector<std::pair<Representation, std::size_t>> rad_summands;
        bool inserted = false;
    };
    std::vector<ProjectiveInfo> projectives(vc);
    for (std::size_t v = 0; v < vc; ++v) {
        projectives[v].rep = projective_module(a, v);
        auto [rad, inc] = sub_representation(projectives[v].rep,
                                             radical_subspaces(projectives[v].rep));
        (void)inc;
        DecompositionReport dr = decompose(rad);
        if (dr.status != DecompositionStatus::Complete)
            fail("UndecidedDecomposition", "radical of a projective did not decompose");
        for (const auto& p : dr.pieces) projectives[v].rad_summands.push_back({p.rep, p.multiplicity});
    }

    std::vector<bool> processed;  // per fragment vertex: mesh formed (or injective)

    auto injective_index = [&](const Representation& r) -> std::size_t {
        for (std::size_t v = 0; v < vc; ++v)
            if (injectives[v].dims == r.dims && is_isomorphic(injectives[v], r)) return v;
        return SIZE_MAX;
    };

    auto factor_ptrs = [&]() {
        std::vector<const Representation*> out;
        for (const auto& fv : frag.vertices) out.push_back(&fv.rep);
        return out;
    };

    auto add_vertex = [&](const Representation& r, std::size_t proj_at) -> std::size_t {
        FragmentVertex fv;
        fv.rep = r;
        fv.projective_at = proj_at;
        fv.injective_at = injective_index(r);
        frag.vertices.push_back(std::move(fv));
        processed.push_back(false);
        return frag.vertices.size() - 1;
    };

    auto add_arrow = [&](std::size_t from, std::size_t to, std::size_t expected_mult) {
        detail::IrreducibleData irr =
            detail::irreducible_maps(frag.vertices[from].rep, frag.vertices[to].rep, factor_ptrs());
        if (irr.multiplicity != expected_mult)
            fail("InternalInconsistency",
                 "irreducible multiplicity disagrees with the mesh rule: got " +
                     std::to_string(irr.multiplicity) + ", expected " +
                     std::to_string(expected_mult));
        FragmentArrow fa;
        fa.from = from;
        fa.to = to;
        fa.multiplicity = expected_mult;
        fa.representatives = std::move(irr.representatives);
        frag.arrows.push_back(std::move(fa));
    };

    auto truncate = [&](const std::string& reason) {
        frag.status = FragmentStatus::TruncatedAtBound;
        frag.truncation_reason = reason;
    };

    bool truncated = false;
    while (!truncated) {
        bool progress = false;

        // Insert projectives whose radical summands are all present.
        for (std::size_t v = 0; v < vc && !truncated; ++v) {
            auto& pi = projectives[v];
            if (pi.inserted) continue;
            std::vector<std::pair<std::size_t, std::size_t>> located;
            bool ready = true;
            for (const auto& [summand, mult] : pi.rad_summands) {
                auto idx = frag.find(summand);
                if (!idx) {
                    ready = false;
                    break;
                }
                located.push_back({*idx, mult});
            }
            if (!ready) continue;
            if (frag.vertices.size() + 1 > limits.max_modules) {
                truncate("module limit reached");
                truncated = true;
                break;
            }
            if (pi.rep.total_dim() > limits.max_total_dim) {
                truncate("dimension limit reached");
                truncated = true;
                break;
            }
            std::size_t idx = add_vertex(pi.rep, v);
            for (const auto& [src, mult] : located) add_arrow(src, idx, mult);
            pi.inserted = true;
            progress = true;
        }
        if (truncated) break;

        // Form the earliest ready mesh.
        for (std::size_t x = 0; x < frag.vertices.size() && !truncated; ++x) {
            if (processed[x] || frag.vertices[x].is_injective()) continue;
            bool ready = true;
            // every recorded predecessor is processed or injective
            for (auto ai : frag.arrows_into(x)) {
                const auto& w = frag.vertices[frag.arrows[ai].from];
                if (!processed[frag.arrows[ai].from] && !w.is_injective()) ready = false;
            }
            // every projective containing x in its radical is inserted
            for (std::size_t v = 0; v < vc && ready; ++v) {
                if (projectives[v].inserted) continue;
                for (const auto& [summand, mult] : projectives[v].rad_summands)
                    if (summand.dims == frag.vertices[x].rep.dims &&
                        is_isomorphic(summand, frag.vertices[x].rep))
                        ready = false;
            }
            if (!ready) continue;

            // mesh middle: projectives with x in the radical, and tau^- of
            // the recorded predecessors
            std::vector<std::pair<std::size_t, std::size_t>> middle;  // (vertex, mult)
            for (std::size_t v = 0; v < vc; ++v) {
                if (!projectives[v].inserted) continue;
                for (const auto& [summand, mult] : projectives[v].rad_summands)
                    if (summand.dims == frag.vertices[x].rep.dims &&
                        is_isomorphic(summand, frag.vertices[x].rep))
                        middle.push_back({*frag.find(projectives[v].rep), mult});
            }
            for (auto ai : frag.arrows_into(x)) {
                std::size_t w = frag.arrows[ai].from;
                if (frag.vertices[w].is_injective()) continue;
                std::size_t ti = frag.vertices[w].tau_inverse;
                if (ti == SIZE_MAX)
                    fail("InternalInconsistency", "processed predecessor without tau inverse");
                middle.push_back({ti, frag.arrows[ai].multiplicity});
            }

            Representation z = tau_minus(frag.vertices[x].rep);
            if (z.is_zero())
                fail("InternalInconsistency", "tau^- vanished on a non-injective");
            if (frag.vertices.size() + 1 > limits.max_modules) {
                truncate("module limit reached");
                truncated = true;
                break;
            }
            if (z.total_dim() > limits.max_total_dim) {
                truncate("dimension limit reached");
                truncated = true;
                break;
            }
            // cross-check the mesh rule: [z] = sum of middle classes - [x]
            for (std::size_t v = 0; v < vc; ++v) {
                std::size_t mid = 0;
                for (const auto& [idx, mult] : middle)
                    mid += mult * frag.vertices[idx].rep.dims[v];
                if (mid != z.dims[v] + frag.vertices[x].rep.dims[v])
                    fail("InternalInconsistency",
                         "mesh class vector disagrees with tau^-");
            }
            if (!is_isomorphic(tau(z), frag.vertices[x].rep))
                fail("InternalInconsistency", "tau(tau^- x) differs from x");
            if (frag.find(z))
                fail("InternalInconsistency", "tau^- produced a duplicate iso-class");

            std::size_t zi = add_vertex(z, SIZE_MAX);
            frag.vertices[zi].tau = x;
            frag.vertices[x].tau_inverse = zi;
            for (const auto& [idx, mult] : middle) add_arrow(idx, zi, mult);
            processed[x] = true;
            progress = true;
            break;  // restart scheduling from the front for determinism
        }
        if (!progress) break;
    }

    if (!truncated) {
        bool all_proj = true;
        for (const auto& pi : projectives) all_proj &= pi.inserted;
        bool all_processed = true;
        for (std::size_t x = 0; x < frag.vertices.size(); ++x)
            if (!processed[x] && !frag.vertices[x].is_injective()) all_processed = false;
        bool all_inj = true;
        for (std::size_t v = 0; v < vc; ++v)
            if (!frag.find(injectives[v])) all_inj = false;
        if (all_proj && all_processed && all_inj)
            frag.status = FragmentStatus::CompleteFiniteType;
        else
            truncate("knitting stalled before reaching every structural module");
    }
    return frag;
}

// ---------------------------------------------------------------------------
// Sectional paths.
// ---------------------------------------------------------------------------

/// A directed path in the fragment is sectional when tau(X_i) is never
/// X_{i-2}.
inline bool is_sectional(const ARQuiverFragment& frag, const std::vector<std::size_t>& path) {
    for (auto v : path)
        if (v >= frag.vertices.size()) fail("PathNotInFragment", "vertex id out of range");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!frag.arrow_between(path[i], path[i + 1]))
            fail("PathNotInFragment", "missing arrow in fragment path");
    for (std::size_t i = 2; i < path.size(); ++i)
        if (frag.vertices[path[i]].tau == path[i - 2]) return false;
    return true;
}

/// Compose the chosen irreducible representatives along a fragment path.
inline Morphism compose_irreducibles(const ARQuiverFragment& frag,
                                     const std::vector<std::size_t>& path,
                                     std::size_t representative_index = 0) {
    if (path.empty()) fail("PathNotInFragment", "empty path");
    Morphism acc = identity_morphism(frag.vertices[path[0]].rep);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto ai = frag.arrow_between(path[i], path[i + 1]);
        if (!ai) fail("PathNotInFragment", "missing arrow in fragment path");
        const auto& reps = frag.arrows[*ai].representatives;
        std::size_t k = std::min(representative_index, reps.size() - 1);
        acc = mcompose(reps[k], acc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Sections.
// ---------------------------------------------------------------------------

/// A section: acyclic, convex in its component, meets each tau-orbit exactly
/// once, and is connected within every component it touches.
struct Section {
    std::vector<std::size_t> vertices;  // fragment ids, ascending
};

namespace detail {

inline bool section_valid(const ARQuiverFragment& frag, const std::vector<std::size_t>& sel) {
    std::vector<bool> in_sel(frag.vertices.size(), false);
    for (auto v : sel) in_sel[v] = true;
    // acyclic within the selection
    {
        std::map<std::size_t, std::vector<std::size_t>> adj;
        std::map<std::size_t, std::size_t> indeg;
        for (auto v : sel) indeg[v] = 0;
        for (const auto& a : frag.arrows)
            if (in_sel[a.from] && in_sel[a.to]) {
                adj[a.from].push_back(a.to);
                ++indeg[a.to];
            }
        std::vector<std::size_t> stack;
        for (auto& [v, d] : indeg)
            if (d == 0) stack.push_back(v);
        std::size_t seen = 0;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            ++seen;
            for (auto w : adj[v])
                if (--indeg[w] == 0) stack.push_back(w);
        }
        if (seen != sel.size()) return false;
    }
    // convex: no directed path between members leaves the selection
    for (auto u : sel) {
        std::vector<bool> visited(frag.vertices.size(), false);
        std::vector<std::size_t> stack;
        for (auto ai : frag.arrows_out_of(u)) {
            std::size_t w = frag.arrows[ai].to;
            if (!in_sel[w] && !visited[w]) {
                visited[w] = true;
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto ai : frag.arrows_out_of(v)) {
                std::size_t w = frag.arrows[ai].to;
                if (in_sel[w]) return false;  // re-entered the selection from outside
                if (!visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    // connected within each component it touches
    auto comps = frag.components();
    for (const auto& comp : comps) {
        std::vector<std::size_t> part;
        for (auto v : comp)
            if (in_sel[v]) part.push_back(v);
        if (part.size() <= 1) continue;
        std::vector<bool> in_part(frag.vertices.size(), false);
        for (auto v : part) in_part[v] = true;
        std::vector<std::size_t> stack{part[0]};
        std::vector<bool> vis(frag.vertices.size(), false);
        vis[part[0]] = true;
        std::size_t seen = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& a : frag.arrows) {
                std::size_t next = SIZE_MAX;
                if (a.from == v && in_part[a.to]) next = a.to;
                if (a.to == v && in_part[a.from]) next = a.from;
                if (next != SIZE_MAX && !vis[next]) {
                    vis[next] = true;
                    ++seen;
                    stack.push_back(next);
                }
            }
        }
        if (seen != part.size()) return false;
    }
    return true;
}

}  // namespace detail

/// All sections of the component containing the required vertices, each
/// section containing all of them, in a deterministic order. Errors with
/// NotOneComponent when the required vertices span several components.
inline std::vector<Section> find_sections(const ARQuiverFragment& frag,
                                          const std::vector<std::size_t>& required) {
    if (required.empty()) fail("NotOneComponent", "no required vertices given");
    auto comps = frag.components();
    std::size_t comp_idx = SIZE_MAX;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (auto v : comps[c])
            if (v == required.front()) comp_idx = c;
    for (auto r : required) {
        bool in = false;
        for (auto v : comps[comp_idx])
            if (v == r) in = true;
        if (!in) fail("NotOneComponent", "required vertices span several components");
    }
    const auto& comp = comps[comp_idx];

    // tau-orbits restricted to the component, ordered by least member
    std::vector<std::vector<std::size_t>> orbits;
    for (const auto& orbit : frag.tau_orbits()) {
        bool in = false;
        for (auto v : comp)
            if (v == orbit.front()) in = true;
        if (in) orbits.push_back(orbit);
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) {
                  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
              });
    for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());

    // pin required vertices to their orbits
    std::vector<std::optional<std::size_t>> pinned(orbits.size());
    for (auto r : required) {
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (auto v : orbits[o])
                if (v == r) {
                    if (pinned[o] && *pinned[o] != r) return {};  // two in one orbit
                    pinned[o] = r;
                }
    }

    std::vector<Section> out;
    std::vector<std::size_t> choice(orbits.size(), 0);
    while (true) {
        std::vector<std::size_t> sel;
        bool pin_ok = true;
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            std::size_t v = orbits[o][choice[o]];
            if (pinned[o] && *pinned[o] != v) pin_ok = false;
            sel.push_back(v);
        }
        if (pin_ok) {
            std::sort(sel.begin(), sel.end());
            if (detail::section_valid(frag, sel)) out.push_back(Section{sel});
        }
        std::size_t pos = orbits.size();
        while (pos > 0 && choice[pos - 1] + 1 == orbits[pos - 1].size()) choice[--pos] = 0;
        if (pos == 0) break;
        ++choice[pos - 1];
    }
    return out;
}

}  // namespace arq
