#pragma once

#include <ramsey/coloring.hh>
#include <ramsey/ordered_graph.hh>
#include <ramsey/perm_group.hh>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ramsey
{
    /// Which host embeddings of a pattern count as occurrences.
    class EmbedMode
    {
    public:
        enum class Kind
        {
            ordered,
            cyclic,
            group
        };

        static auto ordered() -> EmbedMode { return EmbedMode{Kind::ordered, nullptr}; }
        static auto cyclic() -> EmbedMode { return EmbedMode{Kind::cyclic, nullptr}; }
        static auto group(PermGroup g) -> EmbedMode;

        auto kind() const -> Kind { return _kind; }

        /// Non-null exactly in group mode.
        auto permutation_group() const -> const PermGroup * { return _group.get(); }

        auto describe() const -> std::string;

    private:
        EmbedMode(Kind kind, std::shared_ptr<const PermGroup> group) :
            _kind(kind),
            _group(std::move(group))
        {
        }

        Kind _kind;
        std::shared_ptr<const PermGroup> _group;
    };

    /// The ordered patterns whose increasing embeddings a mode enumerates.
    ///
    /// Ordered mode gives the pattern itself. Cyclic mode gives one rotation per start vertex t,
    /// keeping duplicates, so every tuple increasing up to a cyclic shift is counted once per
    /// (tuple, t) pair. Group mode gives the orbit deduplicated as graphs.
    auto mode_variants(const OrderedGraph & h, const EmbedMode & mode) -> std::vector<OrderedGraph>;

    /// A pattern compiled for repeated counting under a fixed mode. Immutable; safe to share across threads.
    class Matcher
    {
    public:
        Matcher(const OrderedGraph & h, const EmbedMode & mode);

        auto pattern_order() const -> int { return _order; }
        auto variants() const -> const std::vector<OrderedGraph> & { return _variants; }

        auto count(const Coloring & c, Colour colour) const -> std::uint64_t;

        /// Stops at the first full embedding.
        auto exists(const Coloring & c, Colour colour) const -> bool;

    private:
        struct Compiled
        {
            /// back[i]: earlier pattern vertices adjacent to i.
            std::vector<std::uint64_t> back;
        };

        auto search(const Compiled & p, const Coloring & c, Colour colour, bool first_only) const -> std::uint64_t;

        int _order;
        std::vector<OrderedGraph> _variants;
        std::vector<Compiled> _compiled;
    };

    auto count_embeddings(const Coloring & c, const OrderedGraph & h, Colour colour, const EmbedMode & mode) -> std::uint64_t;
    auto has_forbidden(const Coloring & c, const OrderedGraph & h, Colour colour, const EmbedMode & mode) -> bool;

    /// Negated number of forbidden embeddings: h1 in colour 1, h2 in colour 2. Zero iff c is a witness.
    class Scorer
    {
    public:
        Scorer(const OrderedGraph & h1, const EmbedMode & mode1, const OrderedGraph & h2, const EmbedMode & mode2);

        auto score(const Coloring & c) const -> std::int64_t;
        auto is_witness(const Coloring & c) const -> bool;

        /// Scores every coloring as an independent task; results are positional.
        auto batch(std::span<const Coloring> colorings, unsigned threads = 0) const -> std::vector<std::int64_t>;

    private:
        Matcher _first;
        Matcher _second;
    };

    auto score(const Coloring & c, const OrderedGraph & h1, const OrderedGraph & h2, const EmbedMode & mode1, const EmbedMode & mode2) -> std::int64_t;

    auto batch_score(std::span<const Coloring> colorings, const OrderedGraph & h1, const OrderedGraph & h2,
        const EmbedMode & mode1, const EmbedMode & mode2, unsigned threads = 0) -> std::vector<std::int64_t>;
}
