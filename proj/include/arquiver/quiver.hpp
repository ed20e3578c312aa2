#pragma once

#include "arquiver/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace arq {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// Finite directed graph. Loops and parallel arrows are allowed. Vertices and
/// arrows keep their declaration order; every downstream ordering derives
/// from it, which keeps all outputs reproducible.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
        for (auto& v : vertices) add_vertex(v);
        for (auto& [name, from, to] : arrows) add_arrow(name, from, to);
    }

    std::size_t add_vertex(const std::string& name) {
        if (std::find(vertex_names_.begin(), vertex_names_.end(), name) != vertex_names_.end())
            fail("DuplicateName", "vertex \"" + name + "\" declared twice");
        vertex_names_.push_back(name);
        return vertex_names_.size() - 1;
    }

    std::size_t add_arrow(const std::string& name, const std::string& from, const std::string& to) {
        for (const auto& a : arrows_)
            if (a.name == name) fail("DuplicateName", "arrow \"" + name + "\" declared twice");
        if (std::find(vertex_names_.begin(), vertex_names_.end(), name) != vertex_names_.end())
            fail("DuplicateName", "arrow name \"" + name + "\" clashes with a vertex");
        arrows_.push_back(Arrow{name, vertex_index(from), vertex_index(to)});
        return arrows_.size() - 1;
    }

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(std::size_t v) const { return vertex_names_[v]; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& name) const {
        auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
        if (it == vertex_names_.end()) fail("UnknownVertex", "no vertex named \"" + name + "\"");
        return static_cast<std::size_t>(it - vertex_names_.begin());
    }

    std::size_t arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name == name) return i;
        fail("UnknownArrow", "no arrow named \"" + name + "\"");
    }

    /// Arrows reversed, same names, same vertex order.
    Quiver reversed() const {
        Quiver q;
        q.vertex_names_ = vertex_names_;
        q.arrows_ = arrows_;
        for (auto& a : q.arrows_) std::swap(a.source, a.target);
        return q;
    }

    bool is_acyclic() const {
        // Kahn's algorithm on vertices.
        std::vector<std::size_t> indeg(vertex_count(), 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < vertex_count(); ++v)
            if (indeg[v] == 0) stack.push_back(v);
        std::size_t seen = 0;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            ++seen;
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
        }
        return seen == vertex_count();
    }

    bool operator==(const Quiver& o) const {
        if (vertex_names_ != o.vertex_names_ || arrows_.size() != o.arrows_.size()) return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name != o.arrows_[i].name || arrows_[i].source != o.arrows_[i].source ||
                arrows_[i].target != o.arrows_[i].target)
                return false;
        return true;
    }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
};

/// A path is a composable arrow sequence; the sequence [a, b] means
/// "traverse a, then b". The empty sequence is the stationary path at a
/// vertex. Paths act on representations left to right.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;  // indices into the quiver

    std::size_t length() const { return arrows.size(); }

    static Path stationary(std::size_t v) { return Path{v, v, {}}; }

    static Path of_arrows(const Quiver& q, const std::vector<std::size_t>& arrow_indices) {
        if (arrow_indices.empty()) fail("BadPath", "arrow path needs at least one arrow");
        Path p;
        p.source = q.arrow(arrow_indices.front()).source;
        p.target = q.arrow(arrow_indices.back()).target;
        p.arrows = arrow_indices;
        for (std::size_t i = 0; i + 1 < arrow_indices.size(); ++i)
            if (q.arrow(arrow_indices[i]).target != q.arrow(arrow_indices[i + 1]).source)
                fail("BadPath", "arrows do not compose");
        return p;
    }

    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }

    std::string label(const Quiver& q) const {
        if (arrows.empty()) return "e_" + q.vertex_name(source);
        std::string s;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += "*";
            s += q.arrow(arrows[i]).name;
        }
        return s;
    }
};

/// "p, then q". Defined when target(p) = source(q).
inline Path compose(const Path& p, const Path& q) {
    if (p.target != q.source) fail("BadPath", "paths do not compose");
    Path r;
    r.source = p.source;
    r.target = q.target;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

/// Deterministic path order: by length, then lexicographically on the arrow
/// name sequence; stationary paths by vertex order.
inline bool path_less(const Quiver& q, const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.length() == 0) return a.source < b.source;
    for (std::size_t i = 0; i < a.length(); ++i) {
        const std::string& an = q.arrow(a.arrows[i]).name;
        const std::string& bn = q.arrow(b.arrows[i]).name;
        if (an != bn) return an < bn;
    }
    return false;
}

/// All paths of length <= max_len, stationary paths included, in the
/// deterministic order above.
inline std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
    std::vector<Path> all;
    std::vector<Path> current;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) current.push_back(Path::stationary(v));
    all = current;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& p : current)
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                if (q.arrow(a).source == p.target) {
                    Path ext = p;
                    ext.arrows.push_back(a);
                    ext.target = q.arrow(a).target;
                    next.push_back(ext);
                }
        std::sort(next.begin(), next.end(),
                  [&](const Path& x, const Path& y) { return path_less(q, x, y); });
        all.insert(all.end(), next.begin(), next.end());
        current = std::move(next);
        if (current.empty()) break;
    }
    return all;
}

/// Linear combination of parallel paths, each of length >= 2 (the admissible
/// shape). Used both for user input and for presentations computed here.
struct Relation {
    struct Term {
        Rational coeff;
        Path path;
    };
    std::vector<Term> terms;

    void validate(const Quiver& q) const {
        if (terms.empty()) fail("InvalidRelation", "relation without terms");
        std::size_t src = terms.front().path.source;
        std::size_t tgt = terms.front().path.target;
        for (const auto& t : terms) {
            if (t.coeff.is_zero()) fail("InvalidRelation", "relation term with zero coefficient");
            if (t.path.length() < 2)
                fail("InvalidRelation", "relation term of length < 2 (not admissible)");
            if (t.path.source != src || t.path.target != tgt)
                fail("InvalidRelation", "relation terms are not parallel");
        }
        (void)q;
    }
};

}  // namespace arq
