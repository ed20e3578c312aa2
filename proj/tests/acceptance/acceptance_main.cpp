// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. argv[1] = path to the arquiver CLI binary, argv[2] = scratch dir.

#include "arquiver/examples_gen.hpp"
#include "arquiver/json_io.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace arq;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_scratch;
int g_failures = 0;

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
};

void run_criterion(const Criterion& c, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && dt > c.limit_seconds) {
        std::ostringstream os;
        os << "exceeded the time limit (" << dt << "s > " << c.limit_seconds << "s)";
        failure = os.str();
    }
    if (failure.empty()) {
        std::printf("PASS  %2d  %s (%.2fs)\n", c.number, c.name.c_str(), dt);
    } else {
        std::printf("FAIL  %2d  %s (%.2fs): %s\n", c.number, c.name.c_str(), dt, failure.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

int run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " >> " + g_scratch + "/cli.log 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) throw std::runtime_error("could not spawn the CLI");
#ifdef WEXITSTATUS
    return WEXITSTATUS(status);
#else
    return status;
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- corpus -----------------------------------------------------------------

AlgebraPtr linear_a(std::size_t n) {
    Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
    return build_algebra(q, {});
}

AlgebraPtr alt_a3() {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
    return build_algebra(q, {});
}

Representation projective_slice(const AlgebraPtr& a) {
    std::vector<Representation> parts;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) parts.push_back(projective_module(a, v));
    return direct_sum(a, parts);
}

Representation injective_slice(const AlgebraPtr& a) {
    std::vector<Representation> parts;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) parts.push_back(injective_module(a, v));
    return direct_sum(a, parts);
}

struct CorpusPair {
    std::string label;
    AlgebraPtr algebra;
    Representation module;
};

/// The fixed theorem-roundtrip corpus: slice sums and sincere
/// indecomposables over the Dynkin path algebras, plus the star example.
std::vector<CorpusPair> theorem_corpus() {
    std::vector<CorpusPair> out;
    auto add = [&](const std::string& label, const AlgebraPtr& a, const Representation& m) {
        out.push_back({label, a, m});
    };
    {
        auto a = linear_a(2);
        add("A2 sincere projective", a, projective_module(a, 0));
        add("A2 projective slice", a, projective_slice(a));
        add("A2 injective slice", a, injective_slice(a));
    }
    {
        auto a = linear_a(3);
        add("A3 sincere projective", a, projective_module(a, 0));
        add("A3 projective slice", a, projective_slice(a));
        add("A3 injective slice", a, injective_slice(a));
    }
    {
        auto a = alt_a3();
        add("A3-alt projective slice", a, projective_slice(a));
        add("A3-alt injective slice", a, injective_slice(a));
    }
    {
        auto a = linear_a(4);
        add("A4 sincere projective", a, projective_module(a, 0));
        add("A4 projective slice", a, projective_slice(a));
        add("A4 injective slice", a, injective_slice(a));
    }
    {
        auto a = star_algebra(3);
        std::vector<Representation> arms;
        for (const auto& nm : {"1", "2", "3"})
            arms.push_back(injective_module(a, a->quiver().vertex_index(nm)));
        add("D4 star: arm injectives", a, direct_sum(a, arms));
        add("D4 star: projective slice", a, projective_slice(a));
        add("D4 star: injective slice", a, injective_slice(a));
        // the sincere indecomposable of class (1,1,1;2)
        ARQuiverFragment f = knit(a);
        for (const auto& v : f.vertices)
            if (v.rep.dims == std::vector<std::size_t>{1, 1, 1, 2})
                add("D4 star: sincere indecomposable", a, v.rep);
    }
    return out;
}

std::vector<AlgebraPtr> fragment_corpus() {
    return {linear_a(2), linear_a(3), alt_a3(), linear_a(4), star_algebra(3),
            build_algebra(Quiver({"1", "2", "3"}, {}), {})};
}

// --- the regular module over the 4-star --------------------------------------

Representation star4_regular(const AlgebraPtr& st4) {
    Representation m = zero_representation(st4);
    m.dims = {1, 1, 1, 1, 2};
    m.maps[0] = Matrix(2, 1, {Rational(1), Rational(0)});
    m.maps[1] = Matrix(2, 1, {Rational(0), Rational(1)});
    m.maps[2] = Matrix(2, 1, {Rational(1), Rational(1)});
    m.maps[3] = Matrix(2, 1, {Rational(1), Rational(-1)});
    validate(m);
    return m;
}

// --- criteria -----------------------------------------------------------------

void criterion1() {
    auto a = star_algebra(3);
    ARQuiverFragment frag = knit(a);
    require(frag.status == FragmentStatus::CompleteFiniteType, "knitting did not close");
    require(frag.vertices.size() == 12, "expected exactly 12 indecomposables");

    std::vector<Representation> arms;
    for (const auto& nm : {"1", "2", "3"})
        arms.push_back(injective_module(a, a->quiver().vertex_index(nm)));
    Representation m = direct_sum(a, arms);
    ShortChainVerdict v = is_middle_of_short_chain(m, SearchScope{&frag, {}});
    require(v.kind == MiddleKind::NotMiddleComplete, "M must be an exhaustive negative");

    QuotientAlgebra q = quotient_algebra(a, annihilator(m));
    require(q.algebra->dim() == 3 && q.algebra->arrow_count() == 0,
            "quotient by the annihilator must be K x K x K");
    AlgebraPtr k3 = build_algebra(Quiver({"1", "2", "3"}, {}), {});
    require(compare_algebras(q.algebra, k3).level != IsoLevel::None,
            "quotient does not match K x K x K");

    std::vector<std::size_t> slice;
    for (std::size_t v2 = 0; v2 < a->vertex_count(); ++v2) {
        auto idx = frag.find(injective_module(a, v2));
        require(idx.has_value(), "a structural injective is missing from the fragment");
        slice.push_back(*idx);
    }
    std::sort(slice.begin(), slice.end());
    std::size_t i0 = *frag.find(injective_module(a, a->quiver().vertex_index("0")));
    auto sections = find_sections(frag, {i0});
    bool found = false;
    for (const auto& s : sections)
        if (s.vertices == slice) found = true;
    require(found, "the injective slice was not found as a section");
}

void criterion2() {
    auto corpus = theorem_corpus();
    require(corpus.size() >= 10, "corpus too small");
    for (const auto& pair : corpus) {
        Theorem1Outcome out = theorem1_certificate(pair.algebra, pair.module);
        require(out.status == Theorem1Status::Certified, pair.label + ": not certified");
        require(out.certificate->a_verdict.kind == MiddleKind::NotMiddleComplete,
                pair.label + ": verdict not exhaustive");
        require(verify_certificate(pair.module, out), pair.label + ": witnesses failed re-verification");
        AlgebraComparison cmp = compare_algebras(
            out.certificate->quotient.algebra,
            out.certificate->section.b_end.presented.algebra);
        require(cmp.level != IsoLevel::None,
                pair.label + ": B is not fingerprint-isomorphic to A/ann(M)");
    }
}

void criterion3() {
    // every corpus module with a negative verdict has hereditary End
    for (const auto& pair : theorem_corpus()) {
        ARQuiverFragment frag = knit(pair.algebra);
        SearchScope scope{&frag, {}};
        Corollary12Report rep = corollary12_check(pair.module, scope);
        require(rep.applicable, pair.label + ": unexpectedly a middle");
        require(rep.hereditary, pair.label + ": End(M) is not hereditary");
    }
    // and all indecomposables over the smaller fragments
    for (const auto& a : {linear_a(2), linear_a(3), star_algebra(3)}) {
        ARQuiverFragment frag = knit(a);
        SearchScope scope{&frag, {}};
        for (const auto& v : frag.vertices) {
            Corollary12Report rep = corollary12_check(v.rep, scope);
            require(rep.applicable, "a Dynkin indecomposable came back as a middle");
            require(rep.hereditary, "End of a not-middle indecomposable is not hereditary");
        }
    }
}

void criterion4() {
    auto h = linear_a(3);
    ARQuiverFragment frag = knit(h);
    require(frag.status == FragmentStatus::CompleteFiniteType, "A3 fragment did not close");
    auto subsets = enumerate_tilting_subsets(h, frag);  // the oracle fixes the count
    require(!subsets.empty(), "no tilting modules found");
    for (const auto& subset : subsets) {
        std::vector<Representation> parts;
        for (auto v : subset) parts.push_back(frag.vertices[v].rep);
        Representation t = direct_sum(h, parts);
        TiltedAlgebra b = tilted_algebra(h, t);
        ARQuiverFragment frag_b = knit(b.end.presented.algebra);
        require(frag_b.status == FragmentStatus::CompleteFiniteType,
                "a tilted algebra of A3 is not finite type");
        for (std::size_t v = 0; v < h->vertex_count(); ++v) {
            Representation image = hom_functor_image(b, injective_module(h, v));
            ShortChainVerdict verdict = is_middle_of_short_chain(image, SearchScope{&frag_b, {}});
            require(verdict.kind == MiddleKind::NotMiddleComplete,
                    "Hom(T, I) is a middle over End(T)");
        }
    }
}

void criterion5() {
    for (const auto& a : {linear_a(2), linear_a(3), alt_a3(), star_algebra(3)}) {
        ARQuiverFragment frag = knit(a);
        SearchScope scope{&frag, {}};
        for (const auto& v : frag.vertices) {
            bool middle = is_middle_of_short_chain(v.rep, scope).is_middle();
            bool cycle = lies_on_short_cycle(v.rep, scope).on_cycle();
            require(middle == cycle, "short-chain and short-cycle verdicts disagree");
        }
    }
}

void criterion6() {
    for (const auto& pair : theorem_corpus()) {
        NecessaryConditions nc = necessary_conditions(pair.module);
        require(nc.hom_m_tau_m_zero, pair.label + ": Hom(M, tau M) != 0");
        require(nc.summand_bound_ok, pair.label + ": summand count exceeds the rank of K_0");
    }
    auto a = linear_a(2);
    Representation m = direct_sum(a, {simple_module(a, 0), simple_module(a, 1)});
    NecessaryConditions nc = necessary_conditions(m);
    require(!nc.hom_m_tau_m_zero, "the known A2 middle passes the Hom condition");
}

void criterion7() {
    for (const auto& a : fragment_corpus()) {
        ARQuiverFragment frag = knit(a);
        require(frag.status == FragmentStatus::CompleteFiniteType, "corpus fragment did not close");
        frag.verify_mesh_consistency();
        for (const auto& v : frag.vertices) {
            Representation dd = dual(dual(v.rep));
            require(is_isomorphic(dd, v.rep), "D D is not the identity");
            if (!v.is_projective()) {
                require(is_isomorphic(tau_minus(tau(v.rep)), v.rep), "tau^- tau is not the identity");
                Representation trtr = transpose(transpose(v.rep));
                require(is_isomorphic(trtr, v.rep), "Tr Tr is not the identity");
            }
        }
        for (const auto& x : frag.vertices)
            for (const auto& y : frag.vertices)
                require(ext1_dim(x.rep, y.rep, Ext1Method::Resolution) ==
                            ext1_dim(x.rep, y.rep, Ext1Method::ARFormula),
                        "Ext routes disagree");
    }
}

void criterion8() {
    for (const auto& a : {star_algebra(3), linear_a(4)}) {
        ARQuiverFragment frag = knit(a);
        std::vector<std::vector<std::size_t>> stack;
        for (std::size_t v = 0; v < frag.vertices.size(); ++v) stack.push_back({v});
        std::size_t checked = 0;
        while (!stack.empty()) {
            auto path = stack.back();
            stack.pop_back();
            for (auto ai : frag.arrows_out_of(path.back())) {
                auto ext = path;
                ext.push_back(frag.arrows[ai].to);
                if (!is_sectional(frag, ext)) continue;
                require(!compose_irreducibles(frag, ext).is_zero(),
                        "a sectional composite vanished");
                ++checked;
                stack.push_back(ext);
            }
        }
        require(checked > 0, "no sectional paths found");
    }
}

void criterion9() {
    auto st4 = star_algebra(4);
    Representation reg = star4_regular(st4);
    SearchScope bounded{nullptr, {5, 1}};
    ShortChainVerdict v = is_middle_of_short_chain(reg, bounded);
    require(v.is_middle(), "the regular module must be a middle");
    require(v.witness->total_dim() <= 6,
            "witness exceeds the oracle-established bound of 6");
    require(verify_middle_evidence(reg, v), "middle evidence failed re-verification");

    ShortCycleVerdict cyc = lies_on_short_cycle(reg, bounded);
    require(cyc.on_cycle(), "the regular module must lie on a short cycle");
    require(cyc.witness->total_dim() <= 12,
            "cycle witness exceeds the oracle-established bound of 12");

    // the sincere not-middle candidate I(0) gets a bounded negative: exit 3
    fs::create_directories(g_scratch + "/c9");
    write_json(g_scratch + "/c9/algebra.json", algebra_to_json(*st4));
    write_json(g_scratch + "/c9/module.json",
               module_to_json(injective_module(st4, st4->quiver().vertex_index("0"))));
    int code = run_cli("short-chain --algebra " + g_scratch + "/c9/algebra.json --module " +
                       g_scratch + "/c9/module.json --dim-bound 5 --max-modules 30 --max-total-dim 20");
    require(code == 3, "expected exit code 3 for the bounded negative, got " + std::to_string(code));
}

void criterion10() {
    for (const std::string run : {"run1", "run2"}) {
        std::string dir = g_scratch + "/" + run;
        fs::create_directories(dir);
        require(run_cli("examples --id 5.1 --n 3 --out-dir " + dir) == 0, "examples 5.1 failed");
        require(run_cli("examples --id 5.2 --types A2,A1 --tilt 0,0 --out-dir " + dir + "/ext") == 0,
                "examples 5.2 failed");
        require(run_cli("knit --algebra " + dir + "/algebra.json --out " + dir +
                        "/fragment.json --dot " + dir + "/fragment.dot") == 0,
                "knit failed");
        require(run_cli("short-chain --algebra " + dir + "/algebra.json --module " + dir +
                        "/module.json --out " + dir + "/verdict.json") == 0,
                "short-chain failed");
        require(run_cli("theorem1 --algebra " + dir + "/algebra.json --module " + dir +
                        "/module.json --out " + dir + "/certificate.json") == 0,
                "theorem1 failed");
        require(run_cli("corollary12 --algebra " + dir + "/algebra.json --module " + dir +
                        "/module.json --out " + dir + "/corollary.json") == 0,
                "corollary12 failed");
    }
    for (const std::string name :
         {"algebra.json", "module.json", "ext/algebra.json", "ext/module.json", "fragment.json",
          "fragment.dot", "verdict.json", "certificate.json", "corollary.json"}) {
        require(slurp(g_scratch + "/run1/" + name) == slurp(g_scratch + "/run2/" + name),
                name + " differs between runs");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <arquiver-cli> <scratch-dir>\n";
        return 64;
    }
    g_cli = argv[1];
    g_scratch = argv[2];
    fs::create_directories(g_scratch);
    std::ofstream(g_scratch + "/cli.log", std::ios::trunc).close();

    run_criterion({1, "star example (id 5.1, n = 3) reproduction", 10}, criterion1);
    run_criterion({2, "certificate roundtrip on the corpus", 60}, criterion2);
    run_criterion({3, "hereditary endomorphism algebras of not-middles", 30}, criterion3);
    run_criterion({4, "injective images over every tilted algebra of A3", 120}, criterion4);
    run_criterion({5, "short-chain / short-cycle equivalence", 60}, criterion5);
    run_criterion({6, "necessary conditions", 5}, criterion6);
    run_criterion({7, "AR machinery invariants on every complete fragment", 60}, criterion7);
    run_criterion({8, "sectional composites are nonzero (D4 and A4)", 30}, criterion8);
    run_criterion({9, "bounded probe on the Euclidean 4-star", 120}, criterion9);
    run_criterion({10, "byte-identical artifacts across two runs", 120}, criterion10);

    if (g_failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
