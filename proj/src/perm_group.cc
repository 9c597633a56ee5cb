#include <ramsey/errors.hh>
#include <ramsey/perm_group.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

using std::string;
using std::string_view;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto key_of(const Permutation & p) -> string
        {
            string key;
            key.reserve(p.degree());
            for (int v : p.images())
                key.push_back(static_cast<char>(v));
            return key;
        }

        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }
    }

    Permutation::Permutation(vector<int> images) :
        _images(std::move(images))
    {
        if (_images.size() > static_cast<std::size_t>(max_order))
            throw SizeError{"permutation degree " + std::to_string(_images.size()) + " exceeds " + std::to_string(max_order)};
        vector<bool> seen(_images.size(), false);
        for (int v : _images) {
            if (v < 0 || v >= degree() || seen[v])
                throw ParameterError{"not a permutation: " + to_string()};
            seen[v] = true;
        }
    }

    auto Permutation::identity(int degree) -> Permutation
    {
        vector<int> images(degree);
        std::iota(images.begin(), images.end(), 0);
        return Permutation{std::move(images)};
    }

    auto Permutation::parse(string_view text) -> Permutation
    {
        vector<int> images;
        text = trim(text);
        while (! text.empty()) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{})
                throw ParseError{"bad permutation image list: '" + string{text} + "'"};
            images.push_back(value);
            text.remove_prefix(ptr - text.data());
            text = trim(text);
        }
        if (images.empty())
            throw ParseError{"empty permutation"};
        return Permutation{std::move(images)};
    }

    auto Permutation::is_identity() const -> bool
    {
        for (int v = 0; v < degree(); ++v)
            if (_images[v] != v)
                return false;
        return true;
    }

    auto operator*(const Permutation & a, const Permutation & b) -> Permutation
    {
        if (a.degree() != b.degree())
            throw ParameterError{"composing permutations of different degree"};
        Permutation result;
        result._images.resize(a.degree());
        for (int v = 0; v < a.degree(); ++v)
            result._images[v] = a._images[b._images[v]];
        return result;
    }

    auto Permutation::inverse() const -> Permutation
    {
        Permutation result;
        result._images.resize(degree());
        for (int v = 0; v < degree(); ++v)
            result._images[_images[v]] = v;
        return result;
    }

    auto Permutation::is_even() const -> bool
    {
        vector<bool> seen(degree(), false);
        int transpositions = 0;
        for (int v = 0; v < degree(); ++v) {
            if (seen[v])
                continue;
            int length = 0;
            for (int w = v; ! seen[w]; w = _images[w]) {
                seen[w] = true;
                ++length;
            }
            transpositions += length - 1;
        }
        return transpositions % 2 == 0;
    }

    auto Permutation::to_string() const -> string
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < _images.size(); ++i)
            out << (i ? " " : "") << _images[i];
        return out.str();
    }

    auto group_kind_name(GroupKind kind) -> string_view
    {
        switch (kind) {
        case GroupKind::trivial: return "trivial";
        case GroupKind::cyclic: return "cyclic";
        case GroupKind::reflective: return "reflective";
        case GroupKind::dihedral: return "dihedral";
        case GroupKind::alternating: return "alternating";
        case GroupKind::symmetric: return "symmetric";
        }
        return "?";
    }

    PermGroup::PermGroup(Trusted, int degree, vector<Permutation> elements) :
        _degree(degree),
        _elements(std::move(elements))
    {
        std::sort(_elements.begin(), _elements.end());
    }

    PermGroup::PermGroup(int degree, vector<Permutation> elements) :
        _degree(degree)
    {
        if (degree < 1)
            throw ParameterError{"group degree must be positive"};
        for (auto & p : elements)
            if (p.degree() != degree)
                throw ParameterError{"element of degree " + std::to_string(p.degree()) + " in group of degree " + std::to_string(degree)};

        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

        // Build the closure of a greedily chosen generating subset and compare.
        vector<Permutation> generators;
        PermGroup generated = closure(generators, degree, elements.size());
        for (auto & p : elements)
            if (! generated.contains(p)) {
                generators.push_back(p);
                try {
                    generated = closure(generators, degree, elements.size());
                }
                catch (const SizeError &) {
                    throw ParameterError{"element set is not closed under composition"};
                }
            }
        if (generated.elements() != elements)
            throw ParameterError{"element set is not closed under composition"};
        _elements = std::move(elements);
    }

    auto PermGroup::contains(const Permutation & p) const -> bool
    {
        return std::binary_search(_elements.begin(), _elements.end(), p);
    }

    auto group_make(GroupKind kind, int m) -> PermGroup
    {
        if (m < 1)
            throw ParameterError{"group degree must be positive"};
        if (m > max_order)
            throw SizeError{"group degree " + std::to_string(m) + " exceeds " + std::to_string(max_order)};

        vector<Permutation> elements;
        auto shift = [m](int s) {
            vector<int> images(m);
            for (int v = 0; v < m; ++v)
                images[v] = (v + s) % m;
            return Permutation{std::move(images)};
        };
        auto mirror = [m]() {
            vector<int> images(m);
            for (int v = 0; v < m; ++v)
                images[v] = m - 1 - v;
            return Permutation{std::move(images)};
        };

        switch (kind) {
        case GroupKind::trivial:
            elements.push_back(Permutation::identity(m));
            break;

        case GroupKind::cyclic:
            for (int s = 0; s < m; ++s)
                elements.push_back(shift(s));
            break;

        case GroupKind::reflective:
            elements.push_back(Permutation::identity(m));
            if (m > 1)
                elements.push_back(mirror());
            break;

        case GroupKind::dihedral: {
            auto r = mirror();
            for (int s = 0; s < m; ++s) {
                elements.push_back(shift(s));
                elements.push_back(shift(s) * r);
            }
            std::sort(elements.begin(), elements.end());
            elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
            break;
        }

        case GroupKind::alternating:
        case GroupKind::symmetric: {
            if (m > max_full_group_degree)
                throw SizeError{string{group_kind_name(kind)} + " group enumeration is limited to degree " + std::to_string(max_full_group_degree)
                    + "; use an unordered Ramsey tool for larger patterns"};
            vector<int> images(m);
            std::iota(images.begin(), images.end(), 0);
            do {
                Permutation p{images};
                if (kind == GroupKind::symmetric || p.is_even())
                    elements.push_back(std::move(p));
            } while (std::next_permutation(images.begin(), images.end()));
            break;
        }
        }

        return PermGroup{PermGroup::Trusted{}, m, std::move(elements)};
    }

    auto closure(std::span<const Permutation> generators, int degree, std::size_t cap) -> PermGroup
    {
        for (auto & g : generators)
            if (g.degree() != degree)
                throw ParameterError{"generator of degree " + std::to_string(g.degree()) + " but group degree " + std::to_string(degree)};

        auto identity = Permutation::identity(degree);
        vector<Permutation> elements{identity};
        std::unordered_set<string> seen{key_of(identity)};

        // Breadth-first: every element times every generator, until nothing new appears.
        for (std::size_t next = 0; next < elements.size(); ++next) {
            for (auto & g : generators) {
                auto product = elements[next] * g;
                if (seen.insert(key_of(product)).second) {
                    if (elements.size() >= cap)
                        throw SizeError{"group closure exceeds " + std::to_string(cap) + " elements"};
                    elements.push_back(std::move(product));
                }
            }
        }
        return PermGroup{PermGroup::Trusted{}, degree, std::move(elements)};
    }

    auto parse_group(string_view text, int degree) -> PermGroup
    {
        vector<Permutation> generators;
        while (! text.empty()) {
            auto pos = text.find(';');
            auto piece = trim(text.substr(0, pos));
            if (! piece.empty())
                generators.push_back(Permutation::parse(piece));
            if (pos == string_view::npos)
                break;
            text.remove_prefix(pos + 1);
        }
        return closure(generators, degree);
    }

    auto relabel(const OrderedGraph & h, const Permutation & sigma) -> OrderedGraph
    {
        if (sigma.degree() != h.order())
            throw ParameterError{"permutation degree " + std::to_string(sigma.degree()) + " does not match pattern order " + std::to_string(h.order())};
        vector<Edge> edges;
        edges.reserve(h.size());
        for (auto [u, v] : h.edges())
            edges.push_back({sigma(u), sigma(v)});
        return OrderedGraph{h.order(), edges};
    }

    auto orbit(const OrderedGraph & h, const PermGroup & g) -> vector<OrderedGraph>
    {
        if (g.degree() != h.order())
            throw ParameterError{"group degree " + std::to_string(g.degree()) + " does not match pattern order " + std::to_string(h.order())};

        std::unordered_set<string> seen;
        vector<OrderedGraph> result;
        vector<Edge> edges(h.size());
        for (auto & sigma : g.elements()) {
            for (std::size_t i = 0; i < h.size(); ++i) {
                auto [u, v] = h.edges()[i];
                int a = sigma(u), b = sigma(v);
                edges[i] = a < b ? Edge{a, b} : Edge{b, a};
            }
            std::sort(edges.begin(), edges.end());
            string key;
            key.reserve(edges.size() * 2);
            for (auto [u, v] : edges) {
                key.push_back(static_cast<char>(u));
                key.push_back(static_cast<char>(v));
            }
            if (seen.insert(std::move(key)).second)
                result.emplace_back(h.order(), edges);
        }
        std::sort(result.begin(), result.end(), [](const OrderedGraph & a, const OrderedGraph & b) { return a.edges() < b.edges(); });
        return result;
    }
}
