#pragma once

#include "majext/degree_sequences.hpp"
#include "majext/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majext {

using Edge = std::pair<int, int>; // first < second

/// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0)
            throw DomainError("SimpleGraph: negative order");
    }

    int n() const noexcept { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& nbrs : adj_)
            twice += nbrs.size();
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].count(v) != 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw DomainError("SimpleGraph: self-loop at " + std::to_string(u));
        if (!adj_[static_cast<std::size_t>(u)].insert(v).second)
            throw DomainError("SimpleGraph: duplicate edge " + std::to_string(u) + "-" +
                              std::to_string(v));
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (adj_[static_cast<std::size_t>(u)].erase(v) == 0)
            throw DomainError("SimpleGraph: no edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[static_cast<std::size_t>(v)].erase(u);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    const std::set<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    /// Vertex degrees sorted nonincreasing.
    std::vector<int> degree_list() const {
        std::vector<int> out;
        out.reserve(adj_.size());
        for (const auto& nbrs : adj_)
            out.push_back(static_cast<int>(nbrs.size()));
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    /// Component id per vertex; ids are numbered by smallest member.
    std::vector<int> components() const {
        std::vector<int> comp(adj_.size(), -1);
        int next = 0;
        for (int s = 0; s < n(); ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1)
                continue;
            std::queue<int> q;
            q.push(s);
            comp[static_cast<std::size_t>(s)] = next;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : adj_[static_cast<std::size_t>(u)])
                    if (comp[static_cast<std::size_t>(v)] == -1) {
                        comp[static_cast<std::size_t>(v)] = next;
                        q.push(v);
                    }
            }
            ++next;
        }
        return comp;
    }

    bool connected() const {
        if (adj_.empty())
            return true;
        auto comp = components();
        return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n())
            throw DomainError("SimpleGraph: vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::set<int>> adj_;
};

namespace detail {

/// Is u reachable from v without using edge (u, v)?
inline bool on_cycle(const SimpleGraph& g, int u, int v) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::queue<int> q;
    q.push(v);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if ((x == v && y == u) || (x == u && y == v))
                continue;
            if (y == u)
                return true;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                q.push(y);
            }
        }
    }
    return false;
}

} // namespace detail

/**
 * Connected simple graph whose vertex i has degree seq[i].
 *
 * Havel–Hakimi: the vertex with the largest residual degree (lowest index on
 * ties) is joined to the next-largest residual vertices. If that leaves several
 * components, a non-bridge edge (u,v) of a cyclic component and an edge (x,y)
 * of another component are exchanged for (u,x),(v,y), which keeps all degrees
 * and merges the two components.
 */
inline SimpleGraph realize(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size());
    if (n == 0)
        throw RealizationError("realize: empty sequence");
    long total = 0;
    for (int i = 0; i < n; ++i) {
        if (seq[static_cast<std::size_t>(i)] < 1)
            throw RealizationError("realize: every degree must be at least 1");
        if (i + 1 < n && seq[static_cast<std::size_t>(i)] < seq[static_cast<std::size_t>(i + 1)])
            throw RealizationError("realize: sequence must be nonincreasing");
        total += seq[static_cast<std::size_t>(i)];
    }
    if (!erdos_gallai(seq))
        throw RealizationError("realize: " + format_plain(seq) + " is not graphical");
    if (total < 2L * (n - 1))
        throw RealizationError("realize: too few edges for a connected graph");

    SimpleGraph g(n);
    std::vector<int> residual(seq.begin(), seq.end());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
        });
        const int hub = order[0];
        const int need = residual[static_cast<std::size_t>(hub)];
        if (need == 0)
            break;
        int placed = 0;
        for (std::size_t i = 1; i < order.size() && placed < need; ++i) {
            const int v = order[i];
            if (residual[static_cast<std::size_t>(v)] == 0)
                break;
            g.add_edge(hub, v);
            --residual[static_cast<std::size_t>(v)];
            ++placed;
        }
        if (placed < need)
            throw std::logic_error("realize: Havel–Hakimi stalled on a graphical sequence");
        residual[static_cast<std::size_t>(hub)] = 0;
    }

    for (;;) {
        const auto comp = g.components();
        const int count = *std::max_element(comp.begin(), comp.end()) + 1;
        if (count == 1)
            break;
        std::vector<int> vertices(static_cast<std::size_t>(count), 0), twice_edges(static_cast<std::size_t>(count), 0);
        for (int v = 0; v < n; ++v) {
            ++vertices[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
            twice_edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] += g.degree(v);
        }
        int cyclic = -1;
        for (int c = 0; c < count && cyclic < 0; ++c)
            if (twice_edges[static_cast<std::size_t>(c)] / 2 >= vertices[static_cast<std::size_t>(c)])
                cyclic = c;
        if (cyclic < 0)
            throw std::logic_error("realize: no cyclic component to repair connectivity");
        const int other = cyclic == 0 ? 1 : 0;

        const auto all_edges = g.edges();
        Edge inner{-1, -1}, outer{-1, -1};
        for (const auto& e : all_edges) {
            const int ce = comp[static_cast<std::size_t>(e.first)];
            if (inner.first < 0 && ce == cyclic && detail::on_cycle(g, e.first, e.second))
                inner = e;
            if (outer.first < 0 && ce == other)
                outer = e;
        }
        if (inner.first < 0 || outer.first < 0)
            throw std::logic_error("realize: connectivity repair found no edge pair");
        g.remove_edge(inner.first, inner.second);
        g.remove_edge(outer.first, outer.second);
        g.add_edge(inner.first, outer.first);
        g.add_edge(inner.second, outer.second);
    }
    return g;
}

inline SimpleGraph realize(const DegreeSequence& seq) { return realize(seq.values()); }

/// |E| - |V| + 1 of a connected graph.
inline int cyclomatic_number(const SimpleGraph& g) {
    if (!g.connected())
        throw DomainError("cyclomatic_number: graph is not connected");
    return static_cast<int>(g.edge_count()) - g.n() + 1;
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

} // namespace detail

/**
 * Graphviz DOT document. Vertices are renumbered 0..n-1 by nonincreasing
 * degree (original index breaks ties); edges are listed in lexicographic order.
 */
inline std::string export_dot(const SimpleGraph& g, std::string_view label) {
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int a = rank[static_cast<std::size_t>(u)], b = rank[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());

    std::string out = "graph \"" + detail::dot_escape(label) + "\" {\n";
    for (int i = 0; i < n; ++i)
        out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + "\", degree=" +
               std::to_string(g.degree(order[static_cast<std::size_t>(i)])) + "];\n";
    for (const auto& [a, b] : edges)
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace majext
