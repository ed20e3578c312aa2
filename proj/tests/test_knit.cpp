#include <catch2/catch_amalgamated.hpp>

#include "arquiver/enumerate.hpp"
#include "arquiver/knit.hpp"
#include "helpers.hpp"

using namespace arq;
using namespace fixtures;

// Positive-root counts of the Dynkin types backing the corpus; used here as
// an oracle only.
namespace {
constexpr std::size_t kRootsA2 = 3, kRootsA3 = 6, kRootsA4 = 10, kRootsD4 = 12;
}

TEST_CASE("knitting A2") {
    ARQuiverFragment f = knit(a2());
    CHECK(f.status == FragmentStatus::CompleteFiniteType);
    CHECK(f.vertices.size() == kRootsA2);
    f.verify_mesh_consistency();
    CHECK(f.tau_orbits().size() == 2);
    CHECK(f.components().size() == 1);
}

TEST_CASE("knitting linear A3") {
    ARQuiverFragment f = knit(a3());
    CHECK(f.status == FragmentStatus::CompleteFiniteType);
    CHECK(f.vertices.size() == kRootsA3);
    f.verify_mesh_consistency();
    CHECK(f.tau_orbits().size() == 3);
}

TEST_CASE("knitting the 3-star (type D4)") {
    ARQuiverFragment f = knit(star(3));
    CHECK(f.status == FragmentStatus::CompleteFiniteType);
    CHECK(f.vertices.size() == kRootsD4);
    f.verify_mesh_consistency();
    CHECK(f.tau_orbits().size() == 4);
    CHECK(f.components().size() == 1);

    // every structural module shows up
    auto a = f.algebra;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        CHECK(f.find(projective_module(a, v)).has_value());
        CHECK(f.find(injective_module(a, v)).has_value());
    }
}

TEST_CASE("knitting A4 and the semisimple algebra") {
    CHECK(knit(a4()).vertices.size() == kRootsA4);
    ARQuiverFragment f = knit(product_of_fields(3));
    CHECK(f.status == FragmentStatus::CompleteFiniteType);
    CHECK(f.vertices.size() == 3);
    CHECK(f.arrows.empty());
    CHECK(f.components().size() == 3);
}

TEST_CASE("the 4-star is Euclidean: knitting truncates at any limit") {
    KnitLimits limits;
    limits.max_modules = 40;
    limits.max_total_dim = 24;
    ARQuiverFragment f = knit(star(4), limits);
    CHECK(f.status == FragmentStatus::TruncatedAtBound);
    CHECK_FALSE(f.truncation_reason.empty());
    f.verify_mesh_consistency();  // the knitted part is still a valid mesh
}

TEST_CASE("sectional paths in the A2 fragment") {
    ARQuiverFragment f = knit(a2());
    std::size_t p0 = *f.find(projective_module(f.algebra, 1));
    std::size_t p1 = *f.find(projective_module(f.algebra, 0));
    std::size_t s1 = *f.find(simple_module(f.algebra, 0));

    CHECK(is_sectional(f, {p0}));
    CHECK(is_sectional(f, {p0, p1}));
    CHECK_FALSE(is_sectional(f, {p0, p1, s1}));  // tau S(1) = S(0): the full mesh path
    CHECK_THROWS_WITH(is_sectional(f, {p0, s1}), Catch::Matchers::ContainsSubstring("PathNotInFragment"));

    Morphism m = compose_irreducibles(f, {p0, p1});
    CHECK_FALSE(m.is_zero());
    Morphism zero_comp = compose_irreducibles(f, {p0, p1, s1});
    CHECK(zero_comp.is_zero());  // mesh composite vanishes
}

TEST_CASE("sectional composites are nonzero in the D4 fragment") {
    ARQuiverFragment f = knit(star(3));
    // enumerate all directed paths (the fragment is acyclic); sectional
    // composites of irreducible maps must be nonzero
    std::vector<std::vector<std::size_t>> stack;
    for (std::size_t v = 0; v < f.vertices.size(); ++v) stack.push_back({v});
    std::size_t sectional_count = 0;
    while (!stack.empty()) {
        auto path = stack.back();
        stack.pop_back();
        for (auto ai : f.arrows_out_of(path.back())) {
            auto ext = path;
            ext.push_back(f.arrows[ai].to);
            if (!is_sectional(f, ext)) continue;
            ++sectional_count;
            CHECK_FALSE(compose_irreducibles(f, ext).is_zero());
            stack.push_back(ext);
        }
    }
    CHECK(sectional_count > 0);
}

TEST_CASE("sections of the D4 fragment") {
    auto a = star(3);
    ARQuiverFragment f = knit(a);
    std::size_t i0 = *f.find(injective_module(a, a->quiver().vertex_index("0")));

    auto sections = find_sections(f, {i0});
    CHECK_FALSE(sections.empty());

    // the injective slice is among them
    std::vector<std::size_t> slice;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        slice.push_back(*f.find(injective_module(a, v)));
    std::sort(slice.begin(), slice.end());
    bool found = false;
    for (const auto& s : sections)
        if (s.vertices == slice) found = true;
    CHECK(found);

    // two required vertices in the same tau-orbit: no sections
    std::size_t p = *f.find(projective_module(a, a->quiver().vertex_index("1")));
    std::size_t tp = f.vertices[p].tau_inverse;
    if (tp != SIZE_MAX) CHECK(find_sections(f, {p, tp}).empty());

    // simples at the arms: a section through all of them must exist
    std::vector<std::size_t> arms;
    for (const auto& nm : {"1", "2", "3"})
        arms.push_back(*f.find(simple_module(a, a->quiver().vertex_index(nm))));
    CHECK_FALSE(find_sections(f, arms).empty());
}

TEST_CASE("knitting a bound algebra") {
    // relations in play: linear A3 with the composite zero
    auto alg = a3_zero_composite();
    ARQuiverFragment f = knit(alg);
    REQUIRE(f.status == FragmentStatus::CompleteFiniteType);
    CHECK(f.vertices.size() == 5);
    f.verify_mesh_consistency();
    EnumerationLimits lim;
    lim.max_total_dim = 3;
    CHECK(enumerate_indecomposables(alg, lim).size() == 5);  // dual route
    for (const auto& v : f.vertices) {
        if (v.tau == SIZE_MAX) continue;
        CHECK(is_isomorphic(tau_minus(tau(v.rep)), v.rep));
        AlmostSplitSequence seq = almost_split_sequence(v.rep);
        CHECK(is_isomorphic(seq.left, f.vertices[v.tau].rep));
    }
}

TEST_CASE("fragment middles agree with almost split sequences") {
    for (const auto& a : {a2(), a3(), star(3)}) {
        ARQuiverFragment f = knit(a);
        for (std::size_t x = 0; x < f.vertices.size(); ++x) {
            if (f.vertices[x].tau == SIZE_MAX) continue;
            AlmostSplitSequence seq = almost_split_sequence(f.vertices[x].rep);
            // middle from the mesh
            std::vector<Representation> parts;
            for (auto ai : f.arrows_into(x))
                for (std::size_t k = 0; k < f.arrows[ai].multiplicity; ++k)
                    parts.push_back(f.vertices[f.arrows[ai].from].rep);
            Representation mesh_middle = direct_sum(a, parts);
            CHECK(is_isomorphic(seq.middle, mesh_middle));
            CHECK(is_isomorphic(seq.left, f.vertices[f.vertices[x].tau].rep));
        }
    }
}
