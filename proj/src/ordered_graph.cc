#include <ramsey/errors.hh>
#include <ramsey/ordered_graph.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto check_order(int order) -> void
        {
            if (order < 1 || order > max_order)
                throw ParameterError{"graph order " + std::to_string(order) + " outside 1.." + std::to_string(max_order)};
        }

        constexpr std::array<std::pair<GraphClass, string_view>, 8> class_names{{
            {GraphClass::pmon, "pmon"},
            {GraphClass::cmon, "cmon"},
            {GraphClass::palt, "palt"},
            {GraphClass::pralt, "pralt"},
            {GraphClass::ssc, "ssc"},
            {GraphClass::mnest, "mnest"},
            {GraphClass::complete, "complete"},
            {GraphClass::qmon, "qmon"},
        }};
    }

    OrderedGraph::OrderedGraph(int order) :
        _order(order)
    {
        check_order(order);
        _adjacency.assign(order, 0);
    }

    OrderedGraph::OrderedGraph(int order, std::span<const Edge> edges) :
        OrderedGraph(order)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw ParameterError{"edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside order " + std::to_string(order)};
            if (u == v)
                throw ParameterError{"self-loop at vertex " + std::to_string(u)};
            if (u > v)
                std::swap(u, v);
            _edges.push_back({u, v});
        }
        std::sort(_edges.begin(), _edges.end());
        _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());
        for (auto [u, v] : _edges) {
            _adjacency[u] |= std::uint64_t{1} << v;
            _adjacency[v] |= std::uint64_t{1} << u;
        }
    }

    OrderedGraph::OrderedGraph(int order, std::initializer_list<Edge> edges) :
        OrderedGraph(order, std::span<const Edge>{edges.begin(), edges.size()})
    {
    }

    auto OrderedGraph::has_edge(int u, int v) const -> bool
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order)
            return false;
        return (_adjacency[u] >> v) & 1;
    }

    auto OrderedGraph::degree(int v) const -> int
    {
        return std::popcount(_adjacency[v]);
    }

    auto class_name(GraphClass kind) -> string_view
    {
        for (auto & [k, name] : class_names)
            if (k == kind)
                return name;
        return "?";
    }

    auto parse_class_name(string_view name) -> std::optional<GraphClass>
    {
        for (auto & [k, n] : class_names)
            if (n == name)
                return k;
        return std::nullopt;
    }

    namespace
    {
        auto path_edges(const vector<int> & sequence) -> vector<Edge>
        {
            vector<Edge> result;
            for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
                result.push_back({sequence[i], sequence[i + 1]});
            return result;
        }

        // 0, n-1, 1, n-2, ...
        auto alternating_sequence(int n) -> vector<int>
        {
            vector<int> seq;
            for (int lo = 0, hi = n - 1; lo <= hi; ++lo, --hi) {
                seq.push_back(lo);
                if (lo != hi)
                    seq.push_back(hi);
            }
            return seq;
        }
    }

    auto make_class(const GraphClassSpec & spec) -> OrderedGraph
    {
        const int n = spec.n;
        const string name{class_name(spec.kind)};
        check_order(n);

        vector<Edge> edges;
        switch (spec.kind) {
        case GraphClass::pmon:
            for (int v = 0; v + 1 < n; ++v)
                edges.push_back({v, v + 1});
            break;

        case GraphClass::cmon:
            if (n < 2)
                throw ParameterError{"cmon requires n >= 2"};
            for (int v = 0; v + 1 < n; ++v)
                edges.push_back({v, v + 1});
            if (n >= 3)
                edges.push_back({0, n - 1});
            break;

        case GraphClass::palt:
            edges = path_edges(alternating_sequence(n));
            break;

        case GraphClass::pralt: {
            auto seq = alternating_sequence(n);
            for (auto & v : seq)
                v = n - 1 - v;
            edges = path_edges(seq);
            break;
        }

        case GraphClass::ssc:
            for (int v = 1; v < n; ++v)
                edges.push_back({0, v});
            break;

        case GraphClass::mnest:
            if (n % 2 != 0)
                throw ParameterError{"mnest requires even n, got " + std::to_string(n)};
            for (int v = 0; v < n / 2; ++v)
                edges.push_back({v, n - 1 - v});
            break;

        case GraphClass::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    edges.push_back({u, v});
            break;

        case GraphClass::qmon:
            if (n < 3)
                throw ParameterError{"qmon requires n >= 3"};
            if (spec.j < 0 || spec.j >= n)
                throw ParameterError{"qmon deleted-edge index " + std::to_string(spec.j) + " outside 0.." + std::to_string(n - 1)};
            for (int v = 0; v < n; ++v)
                if (v != spec.j)
                    edges.push_back({v, (v + 1) % n});
            break;
        }

        return OrderedGraph{n, edges};
    }

    auto rotate(const OrderedGraph & g, int s) -> OrderedGraph
    {
        const int n = g.order();
        const int shift = ((s % n) + n) % n;
        vector<Edge> edges;
        edges.reserve(g.size());
        for (auto [u, v] : g.edges())
            edges.push_back({(u + shift) % n, (v + shift) % n});
        return OrderedGraph{n, edges};
    }

    auto reflect(const OrderedGraph & g) -> OrderedGraph
    {
        const int n = g.order();
        vector<Edge> edges;
        edges.reserve(g.size());
        for (auto [u, v] : g.edges())
            edges.push_back({n - 1 - u, n - 1 - v});
        return OrderedGraph{n, edges};
    }

    // Upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, MSB first.
    auto graph6_encode(const OrderedGraph & g) -> string
    {
        const int n = g.order();
        if (n > max_graph6_order)
            throw SizeError{"graph6 short form supports n <= 62, got " + std::to_string(n)};

        string out;
        out.push_back(static_cast<char>(n + 63));
        int bits = 0, acc = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(static_cast<char>(acc + 63));
                    bits = acc = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
        return out;
    }

    auto graph6_decode(string_view bytes) -> OrderedGraph
    {
        if (bytes.empty())
            throw FormatError{"empty graph6 string", 0};

        for (std::size_t i = 0; i < bytes.size(); ++i) {
            auto c = static_cast<unsigned char>(bytes[i]);
            if (c < 63 || c > 126)
                throw FormatError{"byte outside graph6 range 63..126", i};
        }

        const int n = static_cast<unsigned char>(bytes[0]) - 63;
        if (n > max_graph6_order)
            throw FormatError{"long-form graph6 order is not supported", 0};
        if (n == 0)
            throw FormatError{"graph6 order 0 is not a valid ordered graph", 0};

        const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        const std::size_t body = (pairs + 5) / 6;
        if (bytes.size() != 1 + body)
            throw FormatError{"expected " + std::to_string(1 + body) + " bytes for order " + std::to_string(n), std::min(bytes.size(), 1 + body)};

        vector<Edge> edges;
        std::size_t bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit) {
                int byte = static_cast<unsigned char>(bytes[1 + bit / 6]) - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    edges.push_back({u, v});
            }
        for (; bit < body * 6; ++bit) {
            int byte = static_cast<unsigned char>(bytes[1 + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1)
                throw FormatError{"nonzero padding bit", 1 + bit / 6};
        }
        return OrderedGraph{n, edges};
    }

    auto edge_list(const OrderedGraph & g) -> string
    {
        std::ostringstream out;
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
