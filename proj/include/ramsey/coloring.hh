#pragma once

#include <ramsey/ordered_graph.hh>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ramsey
{
    enum class Colour : std::uint8_t
    {
        one = 1,
        two = 2
    };

    inline constexpr auto other(Colour c) -> Colour
    {
        return c == Colour::one ? Colour::two : Colour::one;
    }

    auto parse_colour(int value) -> Colour;

    /// A 2-edge-coloring of K_n, n <= 64, held as per-vertex colour-2 neighbour masks.
    class Coloring
    {
    public:
        Coloring() = default;
        explicit Coloring(int order, Colour fill = Colour::one);

        /// Colour 2 exactly on the edges of g.
        static auto from_colour_two(const OrderedGraph & g) -> Coloring;

        auto order() const -> int { return _order; }
        auto colour(int u, int v) const -> Colour;
        auto set(int u, int v, Colour c) -> void;

        /// Neighbours of v joined to it by colour c.
        auto neighbours(int v, Colour c) const -> std::uint64_t
        {
            return c == Colour::two ? _two[v] : (_all & ~_two[v] & ~(std::uint64_t{1} << v));
        }

        auto colour_class(Colour c) const -> OrderedGraph;

        /// The coloring induced on the given vertices, relabelled 0..k-1 in the listed order.
        auto induced(std::span<const int> vertices) const -> Coloring;

        /// Relabels v -> n - 1 - v.
        auto reflected() const -> Coloring;

        auto swapped() const -> Coloring;

        auto operator==(const Coloring &) const -> bool = default;

    private:
        int _order = 0;
        std::uint64_t _all = 0;
        std::vector<std::uint64_t> _two;
    };
}
