#pragma once

#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graceful/graph.hpp"

namespace graceful {

/// A map f: V -> {1..k}.
class VertexColoring {
public:
    VertexColoring() = default;
    VertexColoring(std::vector<int> colors, int k) : colors_(std::move(colors)), k_(k) {
        if (k < 0) throw Error("palette size must be non-negative");
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] < 1 || colors_[v] > k)
                throw Error("color " + std::to_string(colors_[v]) + " of vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(k));
    }

    /// Palette size is taken as the largest color used.
    static VertexColoring tight(std::vector<int> colors) {
        int k = 0;
        for (int c : colors) k = std::max(k, c);
        return VertexColoring(std::move(colors), k);
    }

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return colors_.size(); }
    int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const noexcept { return colors_; }
    std::span<const int> view() const noexcept { return colors_; }
    int max_color() const {
        int c = 0;
        for (int x : colors_) c = std::max(c, x);
        return c;
    }

    bool operator==(const VertexColoring&) const = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

/// h(uv) = |f(u) - f(v)|, one label per edge of Graph::edges().
struct EdgeLabelling {
    std::vector<Edge> edges;
    std::vector<int> labels;
};

inline EdgeLabelling induced_difference_labelling(const Graph& g, std::span<const int> f) {
    if (f.size() != static_cast<std::size_t>(g.order()))
        throw Error("coloring has " + std::to_string(f.size()) + " entries for " + std::to_string(g.order()) +
                    " vertices");
    EdgeLabelling h;
    h.edges = g.edges();
    h.labels.reserve(h.edges.size());
    for (auto [u, v] : h.edges) h.labels.push_back(std::abs(f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)]));
    return h;
}

inline EdgeLabelling induced_difference_labelling(const Graph& g, const VertexColoring& f) {
    return induced_difference_labelling(g, f.view());
}

struct Violation {
    enum class Kind { size_mismatch, improper_edge, shared_neighbor, equal_labels };
    Kind kind;
    /// improper_edge: {u, v}; shared_neighbor / equal_labels: path {u, centre, w}.
    std::vector<int> vertices;

    std::string describe() const {
        auto list = [&] {
            std::string s;
            for (std::size_t i = 0; i < vertices.size(); ++i) s += (i ? "-" : "") + std::to_string(vertices[i]);
            return s;
        };
        switch (kind) {
            case Kind::size_mismatch: return "coloring size does not match vertex count";
            case Kind::improper_edge: return "adjacent vertices share a color: " + list();
            case Kind::shared_neighbor: return "vertices at distance two share a color: " + list();
            case Kind::equal_labels: return "edges at a vertex carry equal labels: " + list();
        }
        return {};
    }
};

/// Verifier outcome. Converts to true when the property holds.
struct Verdict {
    std::optional<Violation> violation;
    explicit operator bool() const noexcept { return !violation; }
    bool ok() const noexcept { return !violation; }
};

namespace detail {

inline std::optional<Violation> find_improper_edge(const Graph& g, std::span<const int> f) {
    for (auto [u, v] : g.edges())
        if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)])
            return Violation{Violation::Kind::improper_edge, {u, v}};
    return std::nullopt;
}

template <class Clash>
std::optional<Violation> find_path_clash(const Graph& g, std::span<const int> f, Violation::Kind kind, Clash clash) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (clash(f[static_cast<std::size_t>(nb[i])], f[static_cast<std::size_t>(v)], f[static_cast<std::size_t>(nb[j])]))
                    return Violation{kind, {nb[i], v, nb[j]}};
    }
    return std::nullopt;
}

}  // namespace detail

/// Proper coloring of G^2: no edge and no path u-v-w with f(u) = f(w).
inline Verdict is_distance_two_coloring(const Graph& g, std::span<const int> f) {
    if (f.size() != static_cast<std::size_t>(g.order())) return {Violation{Violation::Kind::size_mismatch, {}}};
    if (auto bad = detail::find_improper_edge(g, f)) return {bad};
    return {detail::find_path_clash(g, f, Violation::Kind::shared_neighbor,
                                    [](int a, int, int b) { return a == b; })};
}

/// Proper coloring whose induced labels differ on every pair of edges sharing
/// an endpoint. Equal labels |a-v| = |v-b| with a != b means v is the midpoint.
inline Verdict is_graceful_coloring(const Graph& g, std::span<const int> f) {
    if (f.size() != static_cast<std::size_t>(g.order())) return {Violation{Violation::Kind::size_mismatch, {}}};
    if (auto bad = detail::find_improper_edge(g, f)) return {bad};
    return {detail::find_path_clash(g, f, Violation::Kind::equal_labels,
                                    [](int a, int v, int b) { return std::abs(a - v) == std::abs(v - b); })};
}

inline Verdict is_distance_two_coloring(const Graph& g, const VertexColoring& f) {
    return is_distance_two_coloring(g, f.view());
}
inline Verdict is_graceful_coloring(const Graph& g, const VertexColoring& f) {
    return is_graceful_coloring(g, f.view());
}

/// Injective f: V -> {0..m} whose edge differences are distinct values in {1..m}.
inline bool is_graceful_labelling(const Graph& g, std::span<const int> f) {
    const auto m = static_cast<int>(g.size());
    if (f.size() != static_cast<std::size_t>(g.order())) return false;
    std::vector<char> used_vertex(static_cast<std::size_t>(m) + 1, 0), used_edge(static_cast<std::size_t>(m) + 1, 0);
    for (int x : f) {
        if (x < 0 || x > m || used_vertex[static_cast<std::size_t>(x)]) return false;
        used_vertex[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [u, v] : g.edges()) {
        const int d = std::abs(f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)]);
        if (d < 1 || used_edge[static_cast<std::size_t>(d)]) return false;
        used_edge[static_cast<std::size_t>(d)] = 1;
    }
    return true;
}

}  // namespace graceful
