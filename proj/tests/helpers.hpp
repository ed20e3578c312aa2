#pragma once

#include "arquiver/extension.hpp"
#include "arquiver/homological.hpp"
#include "arquiver/quotient.hpp"
#include "arquiver/translate.hpp"

// Shared fixtures: the small algebras most tests run on.
namespace fixtures {

using namespace arq;

// A2: 1 --a--> 0
inline AlgebraPtr a2() {
    Quiver q({"1", "0"}, {{"a", "1", "0"}});
    return build_algebra(q, {});
}

// linear A3: 1 --a--> 2 --b--> 3
inline AlgebraPtr a3() {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    return build_algebra(q, {});
}

// alternating A3: 1 --a--> 2 <--b-- 3
inline AlgebraPtr a3_alt() {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
    return build_algebra(q, {});
}

// linear A4: 1 -> 2 -> 3 -> 4
inline AlgebraPtr a4() {
    Quiver q({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
    return build_algebra(q, {});
}

// star with n arms pointing at the center 0 (paper's running family)
inline AlgebraPtr star(std::size_t n) {
    std::vector<std::string> verts;
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (std::size_t i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    verts.push_back("0");
    for (std::size_t i = 1; i <= n; ++i)
        arrows.push_back({"a" + std::to_string(i), std::to_string(i), "0"});
    return build_algebra(Quiver(verts, arrows), {});
}

// one loop with relation x^2 = 0
inline AlgebraPtr dual_numbers() {
    Quiver q({"v"}, {{"x", "v", "v"}});
    Relation r;
    r.terms.push_back({Rational(1), Path::of_arrows(q, {0, 0})});
    return build_algebra(q, {r}, 4);
}

// linear A3 with the composite relation a*b = 0
inline AlgebraPtr a3_zero_composite() {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    Relation r;
    r.terms.push_back({Rational(1), Path::of_arrows(q, {0, 1})});
    return build_algebra(q, {r});
}

// semisimple K^n
inline AlgebraPtr product_of_fields(std::size_t n) {
    std::vector<std::string> verts;
    for (std::size_t i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    return build_algebra(Quiver(verts, {}), {});
}

}  // namespace fixtures
