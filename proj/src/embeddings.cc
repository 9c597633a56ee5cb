#include <ramsey/embeddings.hh>
#include <ramsey/errors.hh>
#include <ramsey/parallel.hh>

#include <array>
#include <bit>

using std::uint64_t;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto range_mask(int lo, int hi) -> uint64_t
        {
            if (lo > hi)
                return 0;
            uint64_t upto_hi = hi >= 63 ? ~uint64_t{0} : (uint64_t{1} << (hi + 1)) - 1;
            uint64_t below_lo = lo >= 64 ? ~uint64_t{0} : (uint64_t{1} << lo) - 1;
            return upto_hi & ~below_lo;
        }
    }

    auto EmbedMode::group(PermGroup g) -> EmbedMode
    {
        return EmbedMode{Kind::group, std::make_shared<const PermGroup>(std::move(g))};
    }

    auto EmbedMode::describe() const -> std::string
    {
        switch (_kind) {
        case Kind::ordered: return "ordered";
        case Kind::cyclic: return "cyclic";
        case Kind::group: return "group(" + std::to_string(_group->size()) + " elements)";
        }
        return "?";
    }

    auto mode_variants(const OrderedGraph & h, const EmbedMode & mode) -> vector<OrderedGraph>
    {
        switch (mode.kind()) {
        case EmbedMode::Kind::ordered:
            return {h};

        case EmbedMode::Kind::cyclic: {
            // Start vertex t: (phi(t), ..., phi(m-1), phi(0), ..., phi(t-1)) increasing means
            // phi composed with v -> v + t is an increasing embedding of rotate(h, -t).
            vector<OrderedGraph> result;
            for (int t = 0; t < h.order(); ++t)
                result.push_back(rotate(h, -t));
            return result;
        }

        case EmbedMode::Kind::group:
            return orbit(h, *mode.permutation_group());
        }
        return {};
    }

    Matcher::Matcher(const OrderedGraph & h, const EmbedMode & mode) :
        _order(h.order()),
        _variants(mode_variants(h, mode))
    {
        for (auto & variant : _variants) {
            Compiled compiled;
            compiled.back.resize(_order);
            for (int i = 0; i < _order; ++i)
                compiled.back[i] = variant.neighbours(i) & range_mask(0, i - 1);
            _compiled.push_back(std::move(compiled));
        }
    }

    auto Matcher::search(const Compiled & p, const Coloring & c, Colour colour, bool first_only) const -> uint64_t
    {
        const int n = c.order();
        const int m = _order;
        if (m > n)
            return 0;

        // Explicit stack: chosen[i] is the host vertex of pattern vertex i; pending[i] the
        // candidates not yet tried for it.
        std::array<int, max_order> chosen{};
        std::array<uint64_t, max_order> pending{};

        auto candidates = [&](int i, int lo) {
            // Leave room for the m - 1 - i pattern vertices still to come.
            uint64_t cand = range_mask(lo, n - (m - i));
            for (uint64_t back = p.back[i]; back && cand; back &= back - 1)
                cand &= c.neighbours(chosen[std::countr_zero(back)], colour);
            return cand;
        };

        uint64_t total = 0;
        if (m == 1)
            return first_only ? (n > 0 ? 1 : 0) : static_cast<uint64_t>(n);

        int i = 0;
        pending[0] = candidates(0, 0);
        while (i >= 0) {
            if (pending[i] == 0) {
                --i;
                continue;
            }
            int w = std::countr_zero(pending[i]);
            pending[i] &= pending[i] - 1;
            chosen[i] = w;

            uint64_t next = candidates(i + 1, w + 1);
            if (i + 1 == m - 1) {
                // Last pattern vertex: every surviving candidate completes an embedding.
                total += std::popcount(next);
                if (first_only && total)
                    return total;
            }
            else if (next) {
                ++i;
                pending[i] = next;
            }
        }
        return total;
    }

    auto Matcher::count(const Coloring & c, Colour colour) const -> uint64_t
    {
        uint64_t total = 0;
        for (auto & p : _compiled)
            total += search(p, c, colour, false);
        return total;
    }

    auto Matcher::exists(const Coloring & c, Colour colour) const -> bool
    {
        for (auto & p : _compiled)
            if (search(p, c, colour, true))
                return true;
        return false;
    }

    auto count_embeddings(const Coloring & c, const OrderedGraph & h, Colour colour, const EmbedMode & mode) -> uint64_t
    {
        return Matcher{h, mode}.count(c, colour);
    }

    auto has_forbidden(const Coloring & c, const OrderedGraph & h, Colour colour, const EmbedMode & mode) -> bool
    {
        return Matcher{h, mode}.exists(c, colour);
    }

    Scorer::Scorer(const OrderedGraph & h1, const EmbedMode & mode1, const OrderedGraph & h2, const EmbedMode & mode2) :
        _first(h1, mode1),
        _second(h2, mode2)
    {
    }

    auto Scorer::score(const Coloring & c) const -> std::int64_t
    {
        return -static_cast<std::int64_t>(_first.count(c, Colour::one)) - static_cast<std::int64_t>(_second.count(c, Colour::two));
    }

    auto Scorer::is_witness(const Coloring & c) const -> bool
    {
        return ! _first.exists(c, Colour::one) && ! _second.exists(c, Colour::two);
    }

    auto Scorer::batch(std::span<const Coloring> colorings, unsigned threads) const -> vector<std::int64_t>
    {
        vector<std::int64_t> result(colorings.size());
        parallel_for(colorings.size(), threads, [&](std::size_t i) { result[i] = score(colorings[i]); });
        return result;
    }

    auto score(const Coloring & c, const OrderedGraph & h1, const OrderedGraph & h2, const EmbedMode & mode1, const EmbedMode & mode2) -> std::int64_t
    {
        return Scorer{h1, mode1, h2, mode2}.score(c);
    }

    auto batch_score(std::span<const Coloring> colorings, const OrderedGraph & h1, const OrderedGraph & h2,
        const EmbedMode & mode1, const EmbedMode & mode2, unsigned threads) -> vector<std::int64_t>
    {
        return Scorer{h1, mode1, h2, mode2}.batch(colorings, threads);
    }
}
