#include <ramsey/coloring.hh>
#include <ramsey/errors.hh>

using std::vector;

namespace ramsey
{
    auto parse_colour(int value) -> Colour
    {
        if (value == 1)
            return Colour::one;
        if (value == 2)
            return Colour::two;
        throw ParameterError{"colour must be 1 or 2, got " + std::to_string(value)};
    }

    Coloring::Coloring(int order, Colour fill) :
        _order(order)
    {
        if (order < 0 || order > max_order)
            throw SizeError{"coloring order " + std::to_string(order) + " outside 0.." + std::to_string(max_order)};
        _all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
        _two.assign(order, 0);
        if (fill == Colour::two)
            for (int v = 0; v < order; ++v)
                _two[v] = _all & ~(std::uint64_t{1} << v);
    }

    auto Coloring::from_colour_two(const OrderedGraph & g) -> Coloring
    {
        Coloring result{g.order()};
        for (int v = 0; v < g.order(); ++v)
            result._two[v] = g.neighbours(v);
        return result;
    }

    auto Coloring::colour(int u, int v) const -> Colour
    {
        if (u == v || u < 0 || v < 0 || u >= _order || v >= _order)
            throw ParameterError{"no edge {" + std::to_string(u) + "," + std::to_string(v) + "} in K_" + std::to_string(_order)};
        return (_two[u] >> v) & 1 ? Colour::two : Colour::one;
    }

    auto Coloring::set(int u, int v, Colour c) -> void
    {
        if (u == v || u < 0 || v < 0 || u >= _order || v >= _order)
            throw ParameterError{"no edge {" + std::to_string(u) + "," + std::to_string(v) + "} in K_" + std::to_string(_order)};
        if (c == Colour::two) {
            _two[u] |= std::uint64_t{1} << v;
            _two[v] |= std::uint64_t{1} << u;
        }
        else {
            _two[u] &= ~(std::uint64_t{1} << v);
            _two[v] &= ~(std::uint64_t{1} << u);
        }
    }

    auto Coloring::colour_class(Colour c) const -> OrderedGraph
    {
        vector<Edge> edges;
        for (int u = 0; u < _order; ++u)
            for (int v = u + 1; v < _order; ++v)
                if (colour(u, v) == c)
                    edges.push_back({u, v});
        return OrderedGraph{_order, edges};
    }

    auto Coloring::induced(std::span<const int> vertices) const -> Coloring
    {
        Coloring result{static_cast<int>(vertices.size())};
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                result.set(static_cast<int>(i), static_cast<int>(j), colour(vertices[i], vertices[j]));
        return result;
    }

    auto Coloring::reflected() const -> Coloring
    {
        Coloring result{_order};
        for (int u = 0; u < _order; ++u)
            for (int v = u + 1; v < _order; ++v)
                result.set(_order - 1 - u, _order - 1 - v, colour(u, v));
        return result;
    }

    auto Coloring::swapped() const -> Coloring
    {
        Coloring result{_order};
        for (int v = 0; v < _order; ++v)
            result._two[v] = _all & ~_two[v] & ~(std::uint64_t{1} << v);
        return result;
    }
}
