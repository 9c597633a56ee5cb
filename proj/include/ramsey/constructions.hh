#pragma once

#include <ramsey/coloring.hh>
#include <ramsey/ordered_graph.hh>

#include <filesystem>
#include <string>
#include <vector>

namespace ramsey
{
    /// K_{(a-1)(b-1)} with colour 1 exactly inside the blocks of a - 1 consecutive vertices.
    auto block_coloring(int a, int b) -> Coloring;

    /// The same block rule on K_{(a-1)(b-2)}.
    auto block_coloring_cyclic(int a, int b) -> Coloring;

    struct CirculantSpec
    {
        int n = 0;
        /// Circular distances 1..threshold get near_color; 0 <= threshold <= n / 2.
        int threshold = 0;
        Colour near_color = Colour::one;
    };

    auto circular_distance(int u, int v, int n) -> int;

    auto circulant_coloring(const CirculantSpec & spec) -> Coloring;

    /// K_{a+b-3}, colour 2 exactly on pairs inside [a/2 - 1, n - a/2]; a and b even.
    auto nested_matching_ordered_coloring(int a, int b) -> Coloring;

    /// Whether v -> v + 1 (mod n) preserves every edge colour.
    auto is_circulant(const Coloring & c) -> bool;

    /// Greedy nested matching of the given colour on a circulant coloring: u_j = j - 1 and v_j is
    /// the largest w in (u_j, v_{j-1}) joined to u_j in that colour, starting from v_0 = n.
    /// Throws PreconditionError unless the coloring is circulant.
    auto largest_nested_matching_circulant(const Coloring & c, Colour colour) -> std::vector<Edge>;

    /// Writes <stem>.g6 (colour-2 graph) and <stem>.txt naming the construction.
    auto export_construction(const std::filesystem::path & stem, const Coloring & c, const std::string & description) -> void;
}
