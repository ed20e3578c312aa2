// arquiver: Auslander-Reiten machinery at desk scale. Knits AR quivers,
// decides the short-chain middle test, and reconstructs (H, T, I)
// certificates for modules that pass it.

#include <CLI11.hpp>

#include "arquiver/examples_gen.hpp"
#include "arquiver/json_io.hpp"

#include <filesystem>
#include <iostream>

namespace {

using namespace arq;

constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kInputError = 2;
constexpr int kBoundedNegative = 3;

int classify_error(const Error& e) {
    const std::string& c = e.code();
    if (c == "InternalInconsistency" || c == "NotBasicSplit" || c == "NotHereditaryEnd" ||
        c == "NoSectionFound")
        return kInternalError;
    return kInputError;
}

struct CommonLimits {
    std::size_t nilpotency_bound = BoundQuiverAlgebra::kDefaultNilpotencyBound;
    KnitLimits knit;
    EnumerationLimits enumeration;
};

void add_limit_options(CLI::App* cmd, CommonLimits& lim) {
    cmd->add_option("--nilpotency-bound", lim.nilpotency_bound,
                    "paths longer than this must vanish in the algebra");
    cmd->add_option("--max-modules", lim.knit.max_modules, "knitting stops after this many modules");
    cmd->add_option("--max-total-dim", lim.knit.max_total_dim,
                    "knitting stops at modules above this total dimension");
    cmd->add_option("--dim-bound", lim.enumeration.max_total_dim,
                    "bounded searches enumerate indecomposables up to this total dimension");
    cmd->add_option("--grid-radius", lim.enumeration.grid_radius,
                    "matrix entries for the bounded enumeration are drawn from 0, +-1, ..., +-radius");
}

Json provenance(const CommonLimits& lim, const ARQuiverFragment* frag) {
    Json j;
    j["nilpotency_bound"] = lim.nilpotency_bound;
    j["knit_limits"] = Json{{"max_modules", lim.knit.max_modules},
                            {"max_total_dim", lim.knit.max_total_dim}};
    j["enumeration"] = Json{{"max_total_dim", lim.enumeration.max_total_dim},
                            {"grid_radius", lim.enumeration.grid_radius}};
    if (frag)
        j["fragment_status"] =
            frag->status == FragmentStatus::CompleteFiniteType ? "complete" : "truncated";
    return j;
}

int cmd_knit(const std::string& algebra_file, const std::string& out_file,
             const std::string& dot_file, const CommonLimits& lim) {
    AlgebraPtr a = algebra_from_json(load_json(algebra_file), lim.nilpotency_bound);
    ARQuiverFragment frag = knit(a, lim.knit);
    bool complete = frag.status == FragmentStatus::CompleteFiniteType;
    std::cout << frag.vertices.size() << " indecomposables, "
              << (complete ? "complete" : "truncated") << "; " << frag.tau_orbits().size()
              << " tau-orbits\n";
    if (!out_file.empty()) {
        Json j = fragment_to_json(frag);
        j["provenance"] = provenance(lim, &frag);
        write_json(out_file, j);
    }
    if (!dot_file.empty()) write_file_atomic(dot_file, fragment_to_dot(frag));
    return kOk;
}

int cmd_short_chain(const std::string& algebra_file, const std::string& module_file,
                    const std::string& out_file, const CommonLimits& lim) {
    AlgebraPtr a = algebra_from_json(load_json(algebra_file), lim.nilpotency_bound);
    Representation m = module_from_json(load_json(module_file), a);
    ARQuiverFragment frag = knit(a, lim.knit);
    SearchScope scope{frag.status == FragmentStatus::CompleteFiniteType ? &frag : nullptr,
                      lim.enumeration};
    ShortChainVerdict v = is_middle_of_short_chain(m, scope);
    if (!verify_middle_evidence(m, v)) {
        std::cerr << "witness re-verification failed\n";
        return kInternalError;
    }
    Json j = verdict_to_json(v);
    j["format"] = kFormatVersion;
    j["provenance"] = provenance(lim, &frag);
    switch (v.kind) {
        case MiddleKind::Middle:
            std::cout << "middle of a short chain (witness of total dimension "
                      << v.witness->total_dim() << ")\n";
            break;
        case MiddleKind::NotMiddleComplete:
            std::cout << "not the middle of any short chain (exhaustive)\n";
            break;
        case MiddleKind::NotMiddleUpToBound:
            std::cout << "no short chain found up to total dimension " << v.bound
                      << " (bounded search)\n";
            break;
    }
    if (!out_file.empty()) write_json(out_file, j);
    return v.kind == MiddleKind::NotMiddleUpToBound ? kBoundedNegative : kOk;
}

int cmd_theorem1(const std::string& algebra_file, const std::string& module_file,
                 const std::string& out_file, const CommonLimits& lim) {
    AlgebraPtr a = algebra_from_json(load_json(algebra_file), lim.nilpotency_bound);
    Representation m = module_from_json(load_json(module_file), a);
    Theorem1Options opts;
    opts.knit_limits = lim.knit;
    opts.enumeration = lim.enumeration;
    Theorem1Outcome out = theorem1_certificate(a, m, opts);
    if (!verify_certificate(m, out)) {
        std::cerr << "certificate re-verification failed\n";
        return kInternalError;
    }
    Json j = certificate_to_json(out);
    j["provenance"] = provenance(lim, nullptr);
    if (!out_file.empty()) write_json(out_file, j);
    switch (out.status) {
        case Theorem1Status::Certified: {
            const auto& c = *out.certificate;
            std::cout << "certified: H has " << c.section.h_end.presented.algebra->vertex_count()
                      << " vertices, tilting module of total dimension "
                      << c.section.t_over_h.total_dim() << ", injective multiplicities (";
            for (std::size_t i = 0; i < c.injective_multiplicities.size(); ++i)
                std::cout << (i ? "," : "") << c.injective_multiplicities[i];
            std::cout << ")\n";
            return kOk;
        }
        case Theorem1Status::NotApplicable:
            std::cout << "not applicable: " << out.note << "\n";
            return kOk;
        case Theorem1Status::DeskScaleExceeded:
            std::cout << "desk scale exceeded: " << out.note << "\n";
            return kBoundedNegative;
    }
    return kInternalError;
}

int cmd_corollary12(const std::string& algebra_file, const std::string& module_file,
                    const std::string& out_file, const CommonLimits& lim) {
    AlgebraPtr a = algebra_from_json(load_json(algebra_file), lim.nilpotency_bound);
    Representation m = module_from_json(load_json(module_file), a);
    ARQuiverFragment frag = knit(a, lim.knit);
    SearchScope scope{frag.status == FragmentStatus::CompleteFiniteType ? &frag : nullptr,
                      lim.enumeration};
    Corollary12Report rep = corollary12_check(m, scope);
    Json j;
    j["format"] = kFormatVersion;
    j["short_chain"] = verdict_to_json(rep.verdict);
    j["applicable"] = rep.applicable;
    if (rep.applicable) {
        j["endomorphism_algebra"] = algebra_to_json(*rep.end->presented.algebra);
        j["hereditary"] = rep.hereditary;
        if (!rep.gldim.exceeded) j["global_dimension"] = rep.gldim.value;
    }
    j["provenance"] = provenance(lim, &frag);
    if (rep.applicable)
        std::cout << "End(M) " << (rep.hereditary ? "is" : "is NOT") << " hereditary ("
                  << (rep.verdict.is_definitive() ? "exhaustive verdict" : "bounded verdict")
                  << ")\n";
    else
        std::cout << "not applicable: M is the middle of a short chain\n";
    if (!out_file.empty()) write_json(out_file, j);
    return rep.verdict.is_definitive() ? kOk : kBoundedNegative;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    for (std::size_t pos = 0; pos <= csv.size();) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

int cmd_examples(const std::string& id, std::size_t n, const std::string& types_csv,
                 const std::string& tilt_csv, const std::string& out_dir) {
    GeneratedExample ex;
    if (id == "5.1") {
        ex = example_star_injectives(n);
    } else if (id == "5.2") {
        std::vector<std::string> types = split_csv(types_csv);
        std::vector<std::size_t> tilts;
        for (const auto& t : split_csv(tilt_csv))
            tilts.push_back(static_cast<std::size_t>(std::stoul(t)));
        ex = example_one_point_extension(types, tilts);
    } else {
        std::cerr << "unsupported example id \"" << id << "\" (use 5.1 or 5.2)\n";
        return kInputError;
    }
    std::filesystem::create_directories(out_dir);
    write_json(out_dir + "/algebra.json", algebra_to_json(*ex.algebra));
    write_json(out_dir + "/module.json", module_to_json(ex.module));
    std::cout << ex.summary << "\n";
    std::cout << "wrote " << out_dir << "/algebra.json and " << out_dir << "/module.json\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Auslander-Reiten quivers, short chains, and tilting certificates"};
    app.require_subcommand(1);

    CommonLimits lim;
    std::string algebra_file, module_file, out_file, dot_file;
    std::string example_id, types_csv = "A1,A1", tilt_csv = "0,0";
    std::size_t star_n = 3;

    CLI::App* knit_cmd = app.add_subcommand("knit", "knit the AR quiver from the projectives");
    knit_cmd->add_option("--algebra", algebra_file, "algebra JSON file")->required();
    knit_cmd->add_option("--out", out_file, "write the fragment JSON here");
    knit_cmd->add_option("--dot", dot_file, "write a DOT view here");
    add_limit_options(knit_cmd, lim);

    CLI::App* chain_cmd =
        app.add_subcommand("short-chain", "decide whether M is the middle of a short chain");
    chain_cmd->add_option("--algebra", algebra_file, "algebra JSON file")->required();
    chain_cmd->add_option("--module", module_file, "module JSON file")->required();
    chain_cmd->add_option("--out", out_file, "write the verdict JSON here");
    add_limit_options(chain_cmd, lim);

    CLI::App* thm_cmd = app.add_subcommand(
        "theorem1", "reconstruct the (H, T, I) certificate for a not-middle module");
    thm_cmd->add_option("--algebra", algebra_file, "algebra JSON file")->required();
    thm_cmd->add_option("--module", module_file, "module JSON file")->required();
    thm_cmd->add_option("--out", out_file, "write the certificate JSON here");
    add_limit_options(thm_cmd, lim);

    CLI::App* cor_cmd =
        app.add_subcommand("corollary12", "check that End(M) is hereditary for a not-middle M");
    cor_cmd->add_option("--algebra", algebra_file, "algebra JSON file")->required();
    cor_cmd->add_option("--module", module_file, "module JSON file")->required();
    cor_cmd->add_option("--out", out_file, "write the report JSON here");
    add_limit_options(cor_cmd, lim);

    CLI::App* ex_cmd = app.add_subcommand("examples", "generate input files for the stock examples");
    ex_cmd->add_option("--id", example_id, "example id: 5.1 or 5.2")->required();
    ex_cmd->add_option("--n", star_n, "5.1: number of arms of the star");
    ex_cmd->add_option("--types", types_csv, "5.2: comma-separated hereditary types (A1..A4, D4)");
    ex_cmd->add_option("--tilt", tilt_csv, "5.2: comma-separated tilting indices");
    ex_cmd->add_option("--out-dir", out_file, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (knit_cmd->parsed()) return cmd_knit(algebra_file, out_file, dot_file, lim);
        if (chain_cmd->parsed()) return cmd_short_chain(algebra_file, module_file, out_file, lim);
        if (thm_cmd->parsed()) return cmd_theorem1(algebra_file, module_file, out_file, lim);
        if (cor_cmd->parsed()) return cmd_corollary12(algebra_file, module_file, out_file, lim);
        if (ex_cmd->parsed()) return cmd_examples(example_id, star_n, types_csv, tilt_csv, out_file);
    } catch (const arq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
