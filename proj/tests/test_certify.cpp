#include <catch2/catch_amalgamated.hpp>

#include "arquiver/certify.hpp"
#include "helpers.hpp"

using namespace arq;
using namespace fixtures;

TEST_CASE("algebra comparison") {
    SECTION("fingerprint spots relabeled quivers") {
        auto a = a3();
        Quiver q({"x", "y", "z"}, {{"u", "x", "y"}, {"v", "y", "z"}});
        auto b = build_algebra(q, {});
        AlgebraComparison c = compare_algebras(a, b);
        CHECK(c.level == IsoLevel::Fingerprint);
        AlgebraComparison e = compare_algebras(a, b, true);
        CHECK(e.level == IsoLevel::Explicit);
        CHECK(is_invertible(e.map));
    }
    SECTION("opposite orientation of A3 is still A3 up to relabeling") {
        auto a = a3();
        auto b = opposite(a3());
        CHECK(compare_algebras(a, b).level != IsoLevel::None);
    }
    SECTION("different algebras are rejected") {
        CHECK(compare_algebras(a3(), a3_zero_composite()).level == IsoLevel::None);
        CHECK(compare_algebras(a3(), product_of_fields(3)).level == IsoLevel::None);
        CHECK(compare_algebras(a3(), a3_alt()).level == IsoLevel::None);
    }
}

TEST_CASE("section criterion on the D4 star") {
    auto a = star(3);
    ARQuiverFragment f = knit(a);
    std::vector<std::size_t> slice;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        slice.push_back(*f.find(injective_module(a, v)));
    std::sort(slice.begin(), slice.end());

    SectionCriterionResult r = section_criterion(f, slice);
    CHECK(is_hereditary(r.h_end.presented.algebra));
    CHECK(r.h_end.presented.algebra->vertex_count() == 4);
    CHECK(r.h_end.presented.algebra->arrow_count() == 3);  // a D4-shaped quiver
    CHECK(r.block.trivial);
    // B_Delta is fingerprint-isomorphic to the ambient algebra
    CHECK(compare_algebras(a, r.b_end.presented.algebra).level != IsoLevel::None);
    CHECK(is_invertible(r.psi));

    SECTION("omitting an orbit is rejected") {
        std::vector<std::size_t> partial(slice.begin(), slice.end() - 1);
        CHECK_THROWS_WITH(section_criterion(f, partial),
                          Catch::Matchers::ContainsSubstring("NotASection"));
    }
    SECTION("a non-convex selection is rejected") {
        // pick the projective slice but replace one vertex by its far shift
        std::vector<std::size_t> bad = slice;
        // swap I(center) for tau of it if possible, producing a hole
        std::size_t i0 = *f.find(injective_module(a, a->quiver().vertex_index("0")));
        std::size_t t0 = f.vertices[i0].tau;
        REQUIRE(t0 != SIZE_MAX);
        std::size_t tt0 = f.vertices[t0].tau;
        if (tt0 != SIZE_MAX) {
            for (auto& v : bad)
                if (v == i0) v = tt0;
            std::sort(bad.begin(), bad.end());
            CHECK_THROWS_AS(section_criterion(f, bad), Error);
        }
    }
}

TEST_CASE("certificate for the 3-star arm injectives") {
    auto a = star(3);
    std::vector<Representation> inj;
    for (const auto& nm : {"1", "2", "3"})
        inj.push_back(injective_module(a, a->quiver().vertex_index(nm)));
    Representation m = direct_sum(a, inj);

    Theorem1Outcome out = theorem1_certificate(a, m);
    REQUIRE(out.status == Theorem1Status::Certified);
    const Theorem1Certificate& c = *out.certificate;

    // the quotient is K x K x K on the arm vertices
    CHECK(c.quotient.algebra->dim() == 3);
    CHECK(c.quotient.algebra->arrow_count() == 0);

    // H = K^3, T = H, I = D(H): all three injectives once
    CHECK(c.section.h_end.presented.algebra->dim() == 3);
    CHECK(c.section.h_end.presented.algebra->arrow_count() == 0);
    CHECK(c.injective_multiplicities == std::vector<std::size_t>{1, 1, 1});
    CHECK(is_invertible(c.image_iso));
    CHECK(verify_certificate(m, out));
}

TEST_CASE("certificate for a sincere indecomposable projective") {
    auto a = a3();
    Representation m = projective_module(a, 0);  // class (1,1,1), faithful
    Theorem1Outcome out = theorem1_certificate(a, m);
    REQUIRE(out.status == Theorem1Status::Certified);
    const Theorem1Certificate& c = *out.certificate;
    CHECK(c.quotient.trivial);  // B = A
    CHECK(compare_algebras(a, c.section.b_end.presented.algebra).level != IsoLevel::None);
    CHECK(verify_certificate(m, out));
}

TEST_CASE("certification rejects middles") {
    auto a = a2();
    Representation m = direct_sum(a, {simple_module(a, 0), simple_module(a, 1)});
    Theorem1Outcome out = theorem1_certificate(a, m);
    CHECK(out.status == Theorem1Status::NotApplicable);
    CHECK(out.a_verdict.is_middle());
    CHECK(is_isomorphic(*out.a_verdict.witness, simple_module(a, 0)));
}

TEST_CASE("certification reports desk-scale truncation honestly") {
    auto st4 = star(4);
    Representation i0 = injective_module(st4, st4->quiver().vertex_index("0"));
    Theorem1Options opts;
    opts.knit_limits.max_modules = 30;
    opts.knit_limits.max_total_dim = 20;
    opts.enumeration.max_total_dim = 4;
    Theorem1Outcome out = theorem1_certificate(st4, i0, opts);
    CHECK(out.status == Theorem1Status::DeskScaleExceeded);
    CHECK_FALSE(out.note.empty());
}

TEST_CASE("hereditary endomorphism reports") {
    auto a = a2();
    ARQuiverFragment f = knit(a);
    SearchScope scope{&f, {}};
    SECTION("regular module over a hereditary algebra") {
        std::vector<Representation> projs;
        for (std::size_t v = 0; v < 2; ++v) projs.push_back(projective_module(a, v));
        Representation m = direct_sum(a, projs);
        Corollary12Report r = corollary12_check(m, scope);
        REQUIRE(r.applicable);
        CHECK(r.hereditary);
        CHECK(compare_algebras(a, r.end->presented.algebra).level != IsoLevel::None);
    }
    SECTION("the 3-star arm injectives have End = K^3") {
        auto st = star(3);
        ARQuiverFragment fs = knit(st);
        std::vector<Representation> inj;
        for (const auto& nm : {"1", "2", "3"})
            inj.push_back(injective_module(st, st->quiver().vertex_index(nm)));
        Corollary12Report r = corollary12_check(direct_sum(st, inj), SearchScope{&fs, {}});
        REQUIRE(r.applicable);
        CHECK(r.hereditary);
        CHECK(r.end->presented.algebra->dim() == 3);
    }
    SECTION("a middle is reported not applicable") {
        Representation m = direct_sum(a, {simple_module(a, 0), simple_module(a, 1)});
        Corollary12Report r = corollary12_check(m, scope);
        CHECK_FALSE(r.applicable);
    }
}

TEST_CASE("transport along an explicit isomorphism preserves structure") {
    auto a = a3();
    Quiver q({"x", "y", "z"}, {{"u", "x", "y"}, {"v", "y", "z"}});
    auto b = build_algebra(q, {});
    AlgebraComparison cmp = compare_algebras(b, a, true);
    REQUIRE(cmp.level == IsoLevel::Explicit);
    // transport a module over A to a module over B along the map B -> A
    Representation m = projective_module(a, 0);
    Representation tm = transport_module(m, b, cmp.map);
    CHECK(tm.total_dim() == m.total_dim());
    validate(tm);
    CHECK(hom_dim(tm, tm) == hom_dim(m, m));
}
