#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey
{
    /// Engine limit shared by patterns, hosts and colorings: adjacency fits one 64-bit word per vertex.
    inline constexpr int max_order = 64;

    /// graph6 short form stores the order in a single byte.
    inline constexpr int max_graph6_order = 62;

    struct Edge
    {
        int u;
        int v;

        auto operator<=>(const Edge &) const = default;
    };

    /// A simple graph on {0, ..., n-1}; the labels carry the vertex order.
    class OrderedGraph
    {
    public:
        OrderedGraph() = default;
        explicit OrderedGraph(int order);
        OrderedGraph(int order, std::span<const Edge> edges);
        OrderedGraph(int order, std::initializer_list<Edge> edges);

        auto order() const -> int { return _order; }
        auto size() const -> std::size_t { return _edges.size(); }

        /// Edges with u < v, sorted lexicographically.
        auto edges() const -> const std::vector<Edge> & { return _edges; }

        auto has_edge(int u, int v) const -> bool;
        auto neighbours(int v) const -> std::uint64_t { return _adjacency[v]; }
        auto degree(int v) const -> int;

        auto operator==(const OrderedGraph & other) const -> bool
        {
            return _order == other._order && _edges == other._edges;
        }

    private:
        int _order = 0;
        std::vector<Edge> _edges;
        std::vector<std::uint64_t> _adjacency;
    };

    enum class GraphClass
    {
        pmon,
        cmon,
        palt,
        pralt,
        ssc,
        mnest,
        complete,
        qmon
    };

    struct GraphClassSpec
    {
        GraphClass kind;
        int n;
        /// Deleted-edge index; used by qmon only.
        int j = 0;
    };

    auto class_name(GraphClass kind) -> std::string_view;
    auto parse_class_name(std::string_view name) -> std::optional<GraphClass>;

    auto make_class(const GraphClassSpec & spec) -> OrderedGraph;

    /// Relabels v -> (v + s) mod n; s may be negative.
    auto rotate(const OrderedGraph & g, int s) -> OrderedGraph;

    /// Relabels v -> n - 1 - v.
    auto reflect(const OrderedGraph & g) -> OrderedGraph;

    auto graph6_encode(const OrderedGraph & g) -> std::string;
    auto graph6_decode(std::string_view bytes) -> OrderedGraph;

    /// One "u v" line per edge.
    auto edge_list(const OrderedGraph & g) -> std::string;
}
