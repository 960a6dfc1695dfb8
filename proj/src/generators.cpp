#include "kcx/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kcx {

namespace {

void require(bool condition, const char* message) {
    if (!condition)
        throw std::invalid_argument(message);
}

template <typename Number>
Number parse_number(const std::string& text) {
    std::istringstream in(text);
    Number value{};
    if (!(in >> value) || !in.eof())
        throw std::invalid_argument("family: bad number '" + text + "'");
    return value;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(parse_number<int>(item));
    return out;
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char ch : text) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty())
        out.push_back(current);
    return out;
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "complete: n must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::with_order(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::with_order(n, edges);
}

Graph relabel_dense(const Graph& g) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(static_cast<Vertex>(g.index_of(u)), static_cast<Vertex>(g.index_of(v)));
    return Graph::with_order(static_cast<int>(g.order()), edges);
}

Graph join(const std::vector<Graph>& parts) {
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> ranges;
    int offset = 0;
    for (const auto& raw : parts) {
        Graph part = relabel_dense(raw);
        for (auto [u, v] : part.edges())
            edges.emplace_back(u + offset, v + offset);
        ranges.emplace_back(offset, offset + static_cast<int>(part.order()));
        offset += static_cast<int>(part.order());
    }
    for (std::size_t a = 0; a < ranges.size(); ++a)
        for (std::size_t b = a + 1; b < ranges.size(); ++b)
            for (int u = ranges[a].first; u < ranges[a].second; ++u)
                for (int v = ranges[b].first; v < ranges[b].second; ++v)
                    edges.emplace_back(u, v);
    return Graph::with_order(offset, edges);
}

Graph mycielskian(const Graph& raw) {
    Graph g = relabel_dense(raw);
    const int n = static_cast<int>(g.order());
    // v_i = i, u_i = n + i, w = 2n.
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(n + a, b);
        edges.emplace_back(n + b, a);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(n + i, 2 * n);
    return Graph::with_order(2 * n + 1, edges);
}

Graph kneser_graph(int n, int r) {
    require(r >= 1 && n >= 2 * r, "kneser: requires r >= 1 and n >= 2r");
    require(n <= 30, "kneser: n too large");
    std::vector<std::uint32_t> subsets;
    std::vector<char> mask(static_cast<std::size_t>(n), 0);
    std::fill(mask.begin(), mask.begin() + r, 1);
    do {
        std::uint32_t bits = 0;
        for (int i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)])
                bits |= 1u << i;
        subsets.push_back(bits);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0)
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph::with_order(static_cast<int>(subsets.size()), edges);
}

Graph glued_cliques(const std::vector<int>& sizes, int shared) {
    require(!sizes.empty(), "glued: at least one clique required");
    require(shared >= 0, "glued: shared set size must be non-negative");
    for (int s : sizes)
        require(s >= shared, "glued: every clique must contain the shared set");
    std::vector<Edge> edges;
    int next = shared;
    for (int s : sizes) {
        std::vector<int> members;
        for (int i = 0; i < shared; ++i)
            members.push_back(i);
        for (int i = 0; i < s - shared; ++i)
            members.push_back(next++);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                edges.emplace_back(members[a], members[b]);
    }
    return Graph::with_order(next, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require(n >= 0, "random: n must be non-negative");
    require(p >= 0.0 && p <= 1.0, "random: probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    // Integer threshold keeps the edge set independent of the standard
    // library's distribution implementation.
    const long double scaled = std::ldexp(static_cast<long double>(p), 64);
    const auto threshold = p >= 1.0 ? UINT64_MAX : static_cast<std::uint64_t>(scaled);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = rng();
            if (p >= 1.0 || draw < threshold)
                edges.emplace_back(u, v);
        }
    return Graph::with_order(n, edges);
}

Graph generate(const FamilySpec& spec) {
    auto arity = [&](std::size_t expected) {
        require(spec.sizes.size() == expected, "family: wrong number of size parameters");
    };
    switch (spec.family) {
    case Family::complete:
        arity(1);
        return complete_graph(spec.sizes[0]);
    case Family::cycle:
        arity(1);
        return cycle_graph(spec.sizes[0]);
    case Family::join: {
        require(!spec.parts.empty(), "join: needs at least one part");
        std::vector<Graph> parts;
        for (const auto& part : spec.parts)
            parts.push_back(generate(part));
        return join(parts);
    }
    case Family::mycielski: {
        arity(1);
        require(spec.sizes[0] >= 0, "mycielski: iterations must be non-negative");
        require(spec.parts.size() <= 1, "mycielski: at most one base graph");
        Graph g = spec.parts.empty() ? complete_graph(2) : generate(spec.parts[0]);
        for (int i = 0; i < spec.sizes[0]; ++i)
            g = mycielskian(g);
        return g;
    }
    case Family::kneser:
        arity(2);
        return kneser_graph(spec.sizes[0], spec.sizes[1]);
    case Family::glued_cliques:
        return glued_cliques(spec.sizes, spec.shared);
    case Family::random:
        arity(1);
        return random_graph(spec.sizes[0], spec.probability, spec.seed);
    }
    throw std::invalid_argument("family: unknown tag");
}

std::string to_string(const FamilySpec& spec) {
    std::ostringstream out;
    auto ints = [&](const std::vector<int>& values) {
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? "," : "") << values[i];
    };
    auto nested = [&](const std::vector<FamilySpec>& parts) {
        out << '(';
        for (std::size_t i = 0; i < parts.size(); ++i)
            out << (i ? "," : "") << to_string(parts[i]);
        out << ')';
    };
    switch (spec.family) {
    case Family::complete:
        out << "complete:";
        ints(spec.sizes);
        break;
    case Family::cycle:
        out << "cycle:";
        ints(spec.sizes);
        break;
    case Family::join:
        out << "join";
        nested(spec.parts);
        break;
    case Family::mycielski:
        out << "mycielski:";
        ints(spec.sizes);
        if (!spec.parts.empty())
            nested(spec.parts);
        break;
    case Family::kneser:
        out << "kneser:";
        ints(spec.sizes);
        break;
    case Family::glued_cliques:
        out << "glued:";
        ints(spec.sizes);
        out << '/' << spec.shared;
        break;
    case Family::random:
        out << "random:";
        ints(spec.sizes);
        out << ',' << spec.probability << '@' << spec.seed;
        break;
    }
    return out.str();
}

FamilySpec parse_family(const std::string& text) {
    FamilySpec spec;
    auto paren = text.find('(');
    auto colon = text.find(':');
    std::string tag = text.substr(0, std::min(paren, colon));
    std::string nested;
    std::string head = text;
    if (paren != std::string::npos) {
        require(text.back() == ')', "family: unbalanced parentheses");
        nested = text.substr(paren + 1, text.size() - paren - 2);
        head = text.substr(0, paren);
        for (const auto& part : split_top_level(nested))
            spec.parts.push_back(parse_family(part));
    }
    std::string args = colon != std::string::npos && colon < head.size() ? head.substr(colon + 1) : "";
    if (tag == "complete") {
        spec.family = Family::complete;
        spec.sizes = parse_ints(args);
    } else if (tag == "cycle") {
        spec.family = Family::cycle;
        spec.sizes = parse_ints(args);
    } else if (tag == "join") {
        spec.family = Family::join;
    } else if (tag == "mycielski") {
        spec.family = Family::mycielski;
        spec.sizes = parse_ints(args);
    } else if (tag == "kneser") {
        spec.family = Family::kneser;
        spec.sizes = parse_ints(args);
    } else if (tag == "glued") {
        spec.family = Family::glued_cliques;
        auto slash = args.find('/');
        spec.sizes = parse_ints(args.substr(0, slash));
        spec.shared = slash == std::string::npos ? 1 : parse_number<int>(args.substr(slash + 1));
    } else if (tag == "random") {
        spec.family = Family::random;
        auto at = args.find('@');
        auto body = args.substr(0, at);
        auto comma = body.find(',');
        require(comma != std::string::npos, "random: expected n,p");
        spec.sizes = {parse_number<int>(body.substr(0, comma))};
        spec.probability = parse_number<double>(body.substr(comma + 1));
        spec.seed = at == std::string::npos ? 0 : parse_number<std::uint64_t>(args.substr(at + 1));
    } else {
        throw std::invalid_argument("family: unknown tag '" + tag + "'");
    }
    return spec;
}

}  // namespace kcx
