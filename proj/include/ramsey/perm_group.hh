#pragma once

#include <ramsey/ordered_graph.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey
{
    /// A bijection on {0, ..., m-1}, stored as its image list.
    class Permutation
    {
    public:
        Permutation() = default;
        explicit Permutation(std::vector<int> images);

        static auto identity(int degree) -> Permutation;

        /// Parses one-line image notation "p0 p1 ... p(m-1)".
        static auto parse(std::string_view text) -> Permutation;

        auto degree() const -> int { return static_cast<int>(_images.size()); }
        auto operator()(int v) const -> int { return _images[v]; }
        auto images() const -> const std::vector<int> & { return _images; }
        auto is_identity() const -> bool;

        /// (a * b)(v) = a(b(v)): apply b first.
        friend auto operator*(const Permutation & a, const Permutation & b) -> Permutation;
        auto inverse() const -> Permutation;

        /// Parity as the number of transpositions mod 2.
        auto is_even() const -> bool;

        auto to_string() const -> std::string;

        auto operator<=>(const Permutation &) const = default;

    private:
        std::vector<int> _images;
    };

    enum class GroupKind
    {
        trivial,
        cyclic,
        reflective,
        dihedral,
        alternating,
        symmetric
    };

    auto group_kind_name(GroupKind kind) -> std::string_view;

    /// Largest group we agree to enumerate: |Sym(10)|.
    inline constexpr std::size_t max_group_elements = 3'628'800;

    /// Symmetric and alternating groups are only built up to this degree.
    inline constexpr int max_full_group_degree = 10;

    /// A finite permutation group, stored fully enumerated and sorted.
    class PermGroup
    {
    public:
        /// Verifies that the elements contain the identity and are closed under composition.
        PermGroup(int degree, std::vector<Permutation> elements);

        auto degree() const -> int { return _degree; }
        auto size() const -> std::size_t { return _elements.size(); }
        auto elements() const -> const std::vector<Permutation> & { return _elements; }
        auto contains(const Permutation & p) const -> bool;

    private:
        struct Trusted
        {
        };
        PermGroup(Trusted, int degree, std::vector<Permutation> elements);

        friend auto group_make(GroupKind kind, int m) -> PermGroup;
        friend auto closure(std::span<const Permutation> generators, int degree, std::size_t cap) -> PermGroup;

        int _degree = 0;
        std::vector<Permutation> _elements;
    };

    auto group_make(GroupKind kind, int m) -> PermGroup;

    /// Smallest group containing the generators; throws SizeError once it grows past cap.
    auto closure(std::span<const Permutation> generators, int degree, std::size_t cap = max_group_elements) -> PermGroup;

    /// Parses "perm; perm; ..." (one-line notation separated by ';') and closes it.
    auto parse_group(std::string_view text, int degree) -> PermGroup;

    /// sigma(h): each edge {u, v} becomes {sigma(u), sigma(v)}.
    auto relabel(const OrderedGraph & h, const Permutation & sigma) -> OrderedGraph;

    /// The deduplicated set {sigma(h) : sigma in g}, sorted by edge list.
    auto orbit(const OrderedGraph & h, const PermGroup & g) -> std::vector<OrderedGraph>;
}
