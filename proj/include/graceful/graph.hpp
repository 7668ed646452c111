#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graceful {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input could not be parsed. `offset()` is a byte offset for graph6 input
/// and a 1-based line number for line-oriented formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; use GraphBuilder or Graph::from_edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw Error("negative vertex count");
    }

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool adjacent(int u, int v) const {
        const auto& a = neighbors(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// All edges as (u,v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < order(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
        return d;
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) : adj_(static_cast<std::size_t>(n)) {}
    explicit GraphBuilder(const Graph& g) : adj_(g.adj_) {}

    int add_vertex() {
        adj_.emplace_back();
        return static_cast<int>(adj_.size()) - 1;
    }
    int order() const noexcept { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        const int n = order();
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    /// Sorts adjacency and rejects parallel edges.
    Graph build() && {
        Graph g;
        std::size_t twice_m = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            auto& a = adj_[v];
            std::sort(a.begin(), a.end());
            if (auto it = std::adjacent_find(a.begin(), a.end()); it != a.end())
                throw Error("duplicate edge (" + std::to_string(v) + "," + std::to_string(*it) + ")");
            twice_m += a.size();
        }
        g.adj_ = std::move(adj_);
        g.m_ = twice_m / 2;
        return g;
    }

private:
    std::vector<std::vector<int>> adj_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// ---------------------------------------------------------------------------
// graph6

namespace detail {
inline constexpr int kGraph6Bias = 63;
}

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header, the
/// short and long N(n) forms, and a trailing newline.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: truncated input", i);
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
        return c - detail::kGraph6Bias;
    };

    if (pos >= text.size()) throw ParseError("graph6: missing header", pos);
    long n = 0;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw ParseError("graph6: graphs with n > 258047 are not supported", pos);
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
        if (n < 63) throw ParseError("graph6: non-canonical long header", pos);
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
    const std::size_t nbytes = (bits + 5) / 6;
    if (text.size() - pos < nbytes) throw ParseError("graph6: truncated bit vector", text.size());
    if (text.size() - pos > nbytes) throw ParseError("graph6: trailing bytes", pos + nbytes);

    GraphBuilder b(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        const int chunk = byte_at(pos + bit / 6);
        if ((chunk & ((1 << (6 - bit % 6)) - 1)) != 0)
            throw ParseError("graph6: non-zero padding bits", pos + bit / 6);
    }
    return std::move(b).build();
}

inline constexpr int kGraph6MaxOrder = 258047;

/// Short form N(n) for n <= 62, the 4-byte long form above that.
inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw Error("graph6 writer supports n <= 258047, got " + std::to_string(n));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + detail::kGraph6Bias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kGraph6Bias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::kGraph6Bias));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kGraph6Bias));
    return out;
}

// ---------------------------------------------------------------------------
// edge list: "n m" then m lines "u v"

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') { lines.push_back(cur); cur.clear(); }
            else if (c != '\r') cur.push_back(c);
        }
        lines.push_back(cur);
    }
    auto blank = [](const std::string& s) {
        return s.find_first_not_of(" \t") == std::string::npos;
    };

    std::size_t li = 0;
    while (li < lines.size() && blank(lines[li])) ++li;
    if (li == lines.size()) throw ParseError("edge list: missing \"n m\" header", 1);

    auto read_pair = [&](std::size_t line_no, long& a, long& b) {
        std::istringstream in(lines[line_no]);
        std::string extra;
        if (!(in >> a >> b) || (in >> extra))
            throw ParseError("edge list: expected two integers", line_no + 1);
    };

    long n = 0, m = 0;
    read_pair(li, n, m);
    if (n < 0 || m < 0) throw ParseError("edge list: negative count", li + 1);
    GraphBuilder b(static_cast<int>(n));
    std::set<Edge> seen;
    long read = 0;
    for (++li; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        if (read == m) throw ParseError("edge list: more edges than declared", li + 1);
        long u = 0, v = 0;
        read_pair(li, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex index out of range", li + 1);
        if (u == v) throw ParseError("edge list: self-loop", li + 1);
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge", li + 1);
        b.add_edge(e.first, e.second);
        ++read;
    }
    if (read != m) throw ParseError("edge list: fewer edges than declared", lines.size());
    return std::move(b).build();
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Edge list if the first non-blank line holds two tokens, graph6 otherwise.
inline Graph parse_graph_auto(std::string_view text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) throw ParseError("empty graph input", 0);
    std::size_t end = text.find('\n', start);
    std::string_view first = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    std::istringstream in{std::string(first)};
    std::string a, b;
    if (in >> a >> b) return parse_edge_list(text);
    return parse_graph6(text.substr(start));
}

// ---------------------------------------------------------------------------
// structure

/// G^2: u ~ v iff their distance in g is 1 or 2.
inline Graph square(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    std::vector<int> touched;
    for (int u = 0; u < n; ++u) {
        touched.clear();
        auto visit = [&](int w) {
            if (w > u && !mark[static_cast<std::size_t>(w)]) {
                mark[static_cast<std::size_t>(w)] = 1;
                touched.push_back(w);
            }
        };
        for (int v : g.neighbors(u)) {
            visit(v);
            for (int w : g.neighbors(v)) visit(w);
        }
        for (int w : touched) {
            b.add_edge(u, w);
            mark[static_cast<std::size_t>(w)] = 0;
        }
    }
    return std::move(b).build();
}

struct DegeneracyResult {
    int value = 0;
    std::vector<int> order;  ///< elimination order, min-degree first
};

/// Repeatedly removes a vertex of minimum remaining degree (lowest index on ties).
inline DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    DegeneracyResult r;
    r.order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        r.value = std::max(r.value, d);
        r.order.push_back(v);
        removed[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            auto& dw = deg[static_cast<std::size_t>(w)];
            if (removed[static_cast<std::size_t>(w)]) continue;
            queue.erase({dw, w});
            --dw;
            queue.emplace(dw, w);
        }
    }
    return r;
}

struct StructuralReport {
    int max_degree = 0;
    bool is_regular = true;
    bool is_bipartite = true;
    int degeneracy = 0;
    std::vector<int> odd_cycle;  ///< closed walk certificate when not bipartite
};

inline std::vector<int> bipartition_or_odd_cycle(const Graph& g, bool& bipartite) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    // both BFS-tree paths meet at their lowest common ancestor
                    std::vector<int> pu{u}, pv{v};
                    while (parent[static_cast<std::size_t>(pu.back())] != -1) pu.push_back(parent[static_cast<std::size_t>(pu.back())]);
                    while (parent[static_cast<std::size_t>(pv.back())] != -1) pv.push_back(parent[static_cast<std::size_t>(pv.back())]);
                    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    pv.pop_back();
                    std::vector<int> cycle(pu.begin(), pu.end());
                    cycle.insert(cycle.end(), pv.rbegin(), pv.rend());
                    bipartite = false;
                    return cycle;
                }
            }
        }
    }
    bipartite = true;
    return side;
}

inline StructuralReport structural_report(const Graph& g) {
    StructuralReport r;
    r.max_degree = g.max_degree();
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.degree(0)) r.is_regular = false;
    bool bip = true;
    auto cert = bipartition_or_odd_cycle(g, bip);
    r.is_bipartite = bip;
    if (!bip) r.odd_cycle = std::move(cert);
    r.degeneracy = degeneracy(g).value;
    return r;
}

// ---------------------------------------------------------------------------
// generators
//
// Random graphs are driven by std::mt19937_64 seeded with the given 64-bit
// seed. Its output sequence is fixed by the C++ standard; the bounded draws
// below do not use std distributions, so corpora are reproducible anywhere.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = next(); while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph path_graph(int n) {
    if (n < 1) throw Error("path requires n >= 1");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle requires n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

/// K_{1,leaves}; vertex 0 is the centre.
inline Graph star_graph(int leaves) {
    if (leaves < 0) throw Error("star requires a non-negative leaf count");
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

inline Graph complete_bipartite(int a, int b_size) {
    GraphBuilder b(a + b_size);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b_size; ++v) b.add_edge(u, a + v);
    return std::move(b).build();
}

inline Graph hypercube(int dim) {
    const int n = 1 << dim;
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < dim; ++i)
            if (int v = u ^ (1 << i); u < v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph petersen_graph() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

/// C_n x K_2.
inline Graph prism_graph(int n) {
    if (n < 3) throw Error("prism requires n >= 3");
    GraphBuilder b(2 * n);
    for (int i = 0; i < n; ++i) {
        b.add_edge(i, (i + 1) % n);
        b.add_edge(n + i, n + (i + 1) % n);
        b.add_edge(i, n + i);
    }
    return std::move(b).build();
}

/// G(n,p): pairs (u,v), u<v, visited in lexicographic order, one draw each.
inline Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error("gnp requires n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("gnp requires 0 <= p <= 1");
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) b.add_edge(u, v);
    return std::move(b).build();
}

inline constexpr int kCubicMaxRetries = 10000;

/// Random 3-regular simple graph by the pairing model: 3n points are shuffled
/// and paired consecutively; pairings with loops or multi-edges are rejected.
inline Graph random_cubic_graph(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw Error("cubic requires even n >= 4");
    Rng rng(seed);
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (int attempt = 1; attempt <= kCubicMaxRetries; ++attempt) {
        for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
        rng.shuffle(points);
        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v) ok = false;
            else ok = seen.insert({std::min(u, v), std::max(u, v)}).second;
        }
        if (!ok) continue;
        GraphBuilder b(n);
        for (auto [u, v] : seen) b.add_edge(u, v);
        return std::move(b).build();
    }
    throw Error("cubic generation failed after " + std::to_string(kCubicMaxRetries) + " retries");
}

}  // namespace graceful
