#include <ramsey/constructions.hh>
#include <ramsey/errors.hh>

#include <cstdlib>
#include <fstream>

using std::string;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto blocks(int n, int width) -> Coloring
        {
            Coloring c{n, Colour::two};
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (u / width == v / width)
                        c.set(u, v, Colour::one);
            return c;
        }

        auto checked_order(long long n) -> int
        {
            if (n > max_order)
                throw SizeError{"construction needs " + std::to_string(n) + " vertices, above the limit of " + std::to_string(max_order)};
            return static_cast<int>(n);
        }
    }

    auto block_coloring(int a, int b) -> Coloring
    {
        if (a < 2 || b < 2)
            throw ParameterError{"block coloring needs a, b >= 2"};
        return blocks(checked_order(static_cast<long long>(a - 1) * (b - 1)), a - 1);
    }

    auto block_coloring_cyclic(int a, int b) -> Coloring
    {
        if (a < 2 || b < 3)
            throw ParameterError{"cyclic block coloring needs a >= 2 and b >= 3"};
        return blocks(checked_order(static_cast<long long>(a - 1) * (b - 2)), a - 1);
    }

    auto circular_distance(int u, int v, int n) -> int
    {
        int d = std::abs(u - v);
        return std::min(d, n - d);
    }

    auto circulant_coloring(const CirculantSpec & spec) -> Coloring
    {
        if (spec.n < 0 || spec.n > max_order)
            throw ParameterError{"circulant order must be in 0.." + std::to_string(max_order)};
        if (spec.threshold < 0 || spec.threshold > spec.n / 2)
            throw ParameterError{"circulant threshold must be in 0.." + std::to_string(spec.n / 2)};

        Coloring c{spec.n, other(spec.near_color)};
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (circular_distance(u, v, spec.n) <= spec.threshold)
                    c.set(u, v, spec.near_color);
        return c;
    }

    auto nested_matching_ordered_coloring(int a, int b) -> Coloring
    {
        if (a < 2 || b < 2 || a % 2 || b % 2)
            throw ParameterError{"nested matching coloring needs even a, b >= 2"};
        const int n = checked_order(a + b - 3);
        const int lo = a / 2 - 1, hi = n - a / 2;

        Coloring c{n, Colour::one};
        for (int u = lo; u <= hi; ++u)
            for (int v = u + 1; v <= hi; ++v)
                c.set(u, v, Colour::two);
        return c;
    }

    auto is_circulant(const Coloring & c) -> bool
    {
        const int n = c.order();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (c.colour(u, v) != c.colour((u + 1) % n, (v + 1) % n))
                    return false;
        return true;
    }

    auto largest_nested_matching_circulant(const Coloring & c, Colour colour) -> vector<Edge>
    {
        if (! is_circulant(c))
            throw PreconditionError{"coloring is not invariant under the cyclic shift"};

        vector<Edge> matching;
        int previous = c.order();
        for (int j = 1;; ++j) {
            const int u = j - 1;
            int best = -1;
            for (int w = previous - 1; w > u; --w)
                if (c.colour(u, w) == colour) {
                    best = w;
                    break;
                }
            if (best < 0)
                break;
            matching.push_back({u, best});
            previous = best;
        }
        return matching;
    }

    auto export_construction(const std::filesystem::path & stem, const Coloring & c, const string & description) -> void
    {
        auto g6 = stem;
        g6 += ".g6";
        auto txt = stem;
        txt += ".txt";

        std::ofstream graph{g6}, side{txt};
        if (! graph || ! side)
            throw EnvironmentError{"cannot write construction files at " + stem.string()};
        graph << graph6_encode(c.colour_class(Colour::two)) << '\n';
        side << description << '\n'
             << "order " << c.order() << '\n'
             << "graph6 holds the colour-2 edges; every other pair has colour 1\n";
    }
}
