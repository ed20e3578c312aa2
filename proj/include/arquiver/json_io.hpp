#pragma once

#include "arquiver/certify.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace arq {

// All files are UTF-8 JSON with a "format": 1 field. Key order is fixed so
// identical inputs produce byte-identical outputs.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Emitters.
// ---------------------------------------------------------------------------

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json algebra_to_json(const BoundQuiverAlgebra& a) {
    Json j;
    j["format"] = kFormatVersion;
    j["vertices"] = Json::array();
    for (const auto& v : a.quiver().vertex_names()) j["vertices"].push_back(v);
    j["arrows"] = Json::array();
    for (const auto& arrow : a.quiver().arrows()) {
        Json ja;
        ja["name"] = arrow.name;
        ja["from"] = a.quiver().vertex_name(arrow.source);
        ja["to"] = a.quiver().vertex_name(arrow.target);
        j["arrows"].push_back(std::move(ja));
    }
    j["relations"] = Json::array();
    for (const auto& rel : a.relations()) {
        Json jr = Json::array();
        for (const auto& term : rel.terms) {
            Json jt;
            jt["coeff"] = term.coeff.str();
            Json path = Json::array();
            for (auto arrow : term.path.arrows) path.push_back(a.quiver().arrow(arrow).name);
            jt["path"] = std::move(path);
            jr.push_back(std::move(jt));
        }
        j["relations"].push_back(std::move(jr));
    }
    return j;
}

inline Json module_to_json(const Representation& m) {
    const Quiver& q = m.algebra->quiver();
    Json j;
    j["format"] = kFormatVersion;
    Json dims = Json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        dims[q.vertex_name(v)] = m.dims[v];
    j["dims"] = std::move(dims);
    Json maps = Json::object();
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        maps[q.arrow(a).name] = matrix_to_json(m.maps[a]);
    j["maps"] = std::move(maps);
    return j;
}

inline Json morphism_to_json(const Morphism& f) {
    const Quiver& q = f.source.algebra->quiver();
    Json blocks;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        blocks[q.vertex_name(v)] = matrix_to_json(f.blocks[v]);
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

inline Json fragment_to_json(const ARQuiverFragment& frag) {
    Json j;
    j["format"] = kFormatVersion;
    j["status"] = frag.status == FragmentStatus::CompleteFiniteType ? "complete" : "truncated";
    j["limits"] = Json{{"max_modules", frag.limits.max_modules},
                       {"max_total_dim", frag.limits.max_total_dim}};
    if (!frag.truncation_reason.empty()) j["truncation_reason"] = frag.truncation_reason;
    j["vertices"] = Json::array();
    const Quiver& q = frag.algebra->quiver();
    for (std::size_t i = 0; i < frag.vertices.size(); ++i) {
        const FragmentVertex& v = frag.vertices[i];
        Json jv;
        jv["id"] = i;
        jv["module"] = module_to_json(v.rep);
        if (v.is_projective()) jv["projective_at"] = q.vertex_name(v.projective_at);
        if (v.is_injective()) jv["injective_at"] = q.vertex_name(v.injective_at);
        j["vertices"].push_back(std::move(jv));
    }
    j["arrows"] = Json::array();
    for (const auto& a : frag.arrows)
        j["arrows"].push_back(Json{{"from", a.from}, {"to", a.to}, {"multiplicity", a.multiplicity}});
    j["tau_pairs"] = Json::array();
    for (std::size_t i = 0; i < frag.vertices.size(); ++i)
        if (frag.vertices[i].tau != SIZE_MAX)
            j["tau_pairs"].push_back(Json::array({i, frag.vertices[i].tau}));
    return j;
}

inline Json verdict_to_json(const ShortChainVerdict& v) {
    Json j;
    switch (v.kind) {
        case MiddleKind::Middle: j["verdict"] = "middle"; break;
        case MiddleKind::NotMiddleComplete: j["verdict"] = "not_middle_complete"; break;
        case MiddleKind::NotMiddleUpToBound: j["verdict"] = "not_middle_up_to_bound"; break;
    }
    if (v.kind == MiddleKind::NotMiddleUpToBound) {
        j["bound"] = v.bound;
        j["grid_radius"] = v.grid_radius;
    }
    if (v.over_quotient) j["witness_over_quotient"] = true;
    if (v.witness) {
        j["witness"] = module_to_json(*v.witness);
        j["witness_tau"] = module_to_json(*v.witness_tau);
        j["hom_witness_to_module"] = morphism_to_json(*v.hom_x_to_m);
        j["hom_module_to_tau_witness"] = morphism_to_json(*v.hom_m_to_taux);
    }
    return j;
}

inline Json cycle_verdict_to_json(const ShortCycleVerdict& v) {
    Json j;
    switch (v.kind) {
        case CycleKind::OnCycle: j["verdict"] = "on_short_cycle"; break;
        case CycleKind::NoCycleComplete: j["verdict"] = "no_short_cycle_complete"; break;
        case CycleKind::NoCycleUpToBound: j["verdict"] = "no_short_cycle_up_to_bound"; break;
    }
    if (v.kind == CycleKind::NoCycleUpToBound) {
        j["bound"] = v.bound;
        j["grid_radius"] = v.grid_radius;
    }
    if (v.witness) j["witness"] = module_to_json(*v.witness);
    return j;
}

inline Json certificate_to_json(const Theorem1Outcome& out) {
    Json j;
    j["format"] = kFormatVersion;
    switch (out.status) {
        case Theorem1Status::Certified: j["status"] = "certified"; break;
        case Theorem1Status::NotApplicable: j["status"] = "not_applicable"; break;
        case Theorem1Status::DeskScaleExceeded: j["status"] = "desk_scale_exceeded"; break;
    }
    if (!out.note.empty()) j["note"] = out.note;
    j["short_chain"] = verdict_to_json(out.a_verdict);
    if (out.status != Theorem1Status::Certified) return j;
    const Theorem1Certificate& c = *out.certificate;
    j["quotient_algebra"] = algebra_to_json(*c.quotient.algebra);
    j["module_over_quotient"] = module_to_json(c.m_over_b);
    j["short_chain_over_quotient"] = verdict_to_json(c.b_verdict);
    j["fragment_status"] =
        c.fragment_b.status == FragmentStatus::CompleteFiniteType ? "complete" : "truncated";
    j["section"] = c.section.section;
    j["hereditary_algebra"] = algebra_to_json(*c.section.h_end.presented.algebra);
    j["tilting_module"] = module_to_json(c.section.t_over_h);
    Json ext = Json::array();
    for (const auto& row : c.section.tilting.ext_pairs) ext.push_back(row);
    j["tilting_ext_pairs"] = std::move(ext);
    j["tilted_algebra"] = algebra_to_json(*c.section.b_end.presented.algebra);
    j["quotient_isomorphism"] = matrix_to_json(c.section.psi);
    j["quotient_isomorphism_level"] = "explicit";
    j["injective_multiplicities"] = c.injective_multiplicities;
    j["module_over_tilted"] = module_to_json(c.m_over_b_delta);
    j["hom_image"] = module_to_json(c.image);
    j["image_isomorphism"] = morphism_to_json(c.image_iso);
    return j;
}

// ---------------------------------------------------------------------------
// Parsers.
// ---------------------------------------------------------------------------

inline void require_format(const Json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("format") || j["format"] != kFormatVersion)
        fail("BadInput", what + ": missing or unsupported \"format\" field");
}

inline AlgebraPtr algebra_from_json(const Json& j,
                                    std::size_t nilpotency_bound =
                                        BoundQuiverAlgebra::kDefaultNilpotencyBound) {
    require_format(j, "algebra file");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail("BadInput", "algebra file: \"vertices\" must be an array");
    Quiver q;
    for (const auto& v : j["vertices"]) q.add_vertex(v.get<std::string>());
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"])
            q.add_arrow(a.at("name").get<std::string>(), a.at("from").get<std::string>(),
                        a.at("to").get<std::string>());
    std::vector<Relation> rels;
    if (j.contains("relations")) {
        for (const auto& jr : j["relations"]) {
            Relation rel;
            for (const auto& jt : jr) {
                std::vector<std::size_t> arrows;
                for (const auto& nm : jt.at("path")) arrows.push_back(q.arrow_index(nm.get<std::string>()));
                rel.terms.push_back(
                    {Rational::parse(jt.at("coeff").get<std::string>()), Path::of_arrows(q, arrows)});
            }
            rels.push_back(std::move(rel));
        }
    }
    return build_algebra(q, rels, nilpotency_bound);
}

inline Matrix matrix_from_json(const Json& rows, std::size_t expect_rows, std::size_t expect_cols,
                               const std::string& what) {
    if (!rows.is_array() || rows.size() != expect_rows)
        fail("BadInput", what + ": expected " + std::to_string(expect_rows) + " rows");
    Matrix m(expect_rows, expect_cols);
    for (std::size_t r = 0; r < expect_rows; ++r) {
        if (!rows[r].is_array() || rows[r].size() != expect_cols)
            fail("BadInput", what + ": expected " + std::to_string(expect_cols) + " columns");
        for (std::size_t c = 0; c < expect_cols; ++c)
            m.at(r, c) = Rational::parse(rows[r][c].get<std::string>());
    }
    return m;
}

inline Representation module_from_json(const Json& j, const AlgebraPtr& a) {
    require_format(j, "module file");
    const Quiver& q = a->quiver();
    Representation m = zero_representation(a);
    if (!j.contains("dims") || !j["dims"].is_object())
        fail("BadInput", "module file: \"dims\" must map vertices to counts");
    for (const auto& [name, value] : j["dims"].items())
        m.dims[q.vertex_index(name)] = value.get<std::size_t>();
    for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
        const Arrow& arrow = q.arrow(ar);
        std::size_t rows = m.dims[arrow.target], cols = m.dims[arrow.source];
        if (j.contains("maps") && j["maps"].contains(arrow.name))
            m.maps[ar] = matrix_from_json(j["maps"][arrow.name], rows, cols,
                                          "matrix for arrow \"" + arrow.name + "\"");
        else if (rows > 0 && cols > 0)
            fail("BadInput", "module file: missing matrix for arrow \"" + arrow.name + "\"");
        else
            m.maps[ar] = Matrix::zero(rows, cols);
    }
    validate(m);
    return m;
}

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadInput", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("BadInput", "cannot parse " + path + ": " + e.what());
    }
    return j;
}

/// Atomic write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail("BadInput", "cannot write " + tmp);
        out << contents;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail("BadInput", "cannot rename " + tmp + " to " + path);
}

inline void write_json(const std::string& path, const Json& j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

/// DOT dump of a fragment (a convenience view, not load-bearing).
inline std::string fragment_to_dot(const ARQuiverFragment& frag) {
    std::string out = "digraph ar_fragment {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < frag.vertices.size(); ++i) {
        const auto& v = frag.vertices[i];
        std::string label = "(";
        for (std::size_t k = 0; k < v.rep.dims.size(); ++k) {
            if (k) label += ",";
            label += std::to_string(v.rep.dims[k]);
        }
        label += ")";
        if (v.is_projective()) label += " P";
        if (v.is_injective()) label += " I";
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& a : frag.arrows) {
        out += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to);
        if (a.multiplicity > 1) out += " [label=\"" + std::to_string(a.multiplicity) + "\"]";
        out += ";\n";
    }
    for (std::size_t i = 0; i < frag.vertices.size(); ++i)
        if (frag.vertices[i].tau != SIZE_MAX)
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(frag.vertices[i].tau) +
                   " [style=dashed, constraint=false];\n";
    out += "}\n";
    return out;
}

}  // namespace arq
