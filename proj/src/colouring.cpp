#include "kcx/colouring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcx {

bool is_proper(const Graph& g, const Colouring& col) {
    for (Vertex v : g.vertices())
        if (!col.contains(v))
            return false;
    for (auto [u, v] : g.edges())
        if (col.at(u) == col.at(v))
            return false;
    return true;
}

namespace {

class Dsatur {
public:
    Dsatur(const Graph& g, int t)
        : g_(g), t_(t), colour_(g.order(), -1),
          seen_(g.order(), std::vector<int>(static_cast<std::size_t>(t), 0)), saturation_(g.order(), 0) {}

    bool solve() { return search(0, 0); }

    Colouring result() const {
        Colouring out;
        for (std::size_t i = 0; i < g_.order(); ++i)
            out[g_.vertices()[i]] = colour_[i];
        return out;
    }

private:
    bool search(std::size_t coloured, int colours_used) {
        if (coloured == g_.order())
            return true;
        std::size_t pick = g_.order();
        for (std::size_t i = 0; i < g_.order(); ++i) {
            if (colour_[i] != -1)
                continue;
            if (pick == g_.order() || saturation_[i] > saturation_[pick] ||
                (saturation_[i] == saturation_[pick] && g_.neighbours_at(i).size() > g_.neighbours_at(pick).size()))
                pick = i;
        }
        // Colours above colours_used are interchangeable; try only one.
        int top = std::min(t_ - 1, colours_used);
        for (int c = 0; c <= top; ++c) {
            if (seen_[pick][static_cast<std::size_t>(c)] > 0)
                continue;
            assign(pick, c, +1);
            if (search(coloured + 1, std::max(colours_used, c + 1)))
                return true;
            assign(pick, c, -1);
        }
        return false;
    }

    void assign(std::size_t i, int c, int delta) {
        colour_[i] = delta > 0 ? c : -1;
        for (Vertex w : g_.neighbours_at(i)) {
            auto j = g_.index_of(w);
            int& count = seen_[j][static_cast<std::size_t>(c)];
            if (delta > 0 && count++ == 0)
                ++saturation_[j];
            if (delta < 0 && --count == 0)
                --saturation_[j];
        }
    }

    const Graph& g_;
    int t_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> saturation_;
};

class ListSearch {
public:
    ListSearch(const Graph& g, const ListAssignment& lists) : g_(g), colour_(g.order(), -1) {
        lists_.reserve(g.order());
        for (Vertex v : g.vertices()) {
            auto it = lists.find(v);
            if (it == lists.end())
                throw std::invalid_argument("list_colour: vertex " + std::to_string(v) + " has no list");
            lists_.emplace_back(it->second.begin(), it->second.end());
        }
    }

    bool solve() { return search(0); }

    Colouring result() const {
        Colouring out;
        for (std::size_t i = 0; i < g_.order(); ++i)
            out[g_.vertices()[i]] = colour_[i];
        return out;
    }

private:
    std::vector<int> available(std::size_t i) const {
        std::vector<int> out;
        for (int c : lists_[i]) {
            bool blocked = false;
            for (Vertex w : g_.neighbours_at(i))
                if (colour_[g_.index_of(w)] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                out.push_back(c);
        }
        return out;
    }

    bool search(std::size_t coloured) {
        if (coloured == g_.order())
            return true;
        std::size_t pick = g_.order();
        std::vector<int> options;
        for (std::size_t i = 0; i < g_.order(); ++i) {
            if (colour_[i] != -1)
                continue;
            auto avail = available(i);
            if (pick == g_.order() || avail.size() < options.size()) {
                pick = i;
                options = std::move(avail);
                if (options.empty())
                    return false;
            }
        }
        for (int c : options) {
            colour_[pick] = c;
            if (search(coloured + 1))
                return true;
        }
        colour_[pick] = -1;
        return false;
    }

    const Graph& g_;
    std::vector<std::vector<int>> lists_;
    std::vector<int> colour_;
};

// Enumerates (m)-element list assignments on `order` up to colour renaming:
// colours are introduced in increasing order, so a list draws from the
// colours already used plus a prefix of fresh ones.
class ChoosabilitySearch {
public:
    ChoosabilitySearch(const Graph& g, VertexSet order, int m) : g_(g), order_(std::move(order)), m_(m) {}

    std::optional<ListAssignment> find() {
        ListAssignment lists;
        if (descend(0, 0, lists))
            return lists;
        return std::nullopt;
    }

private:
    bool descend(std::size_t depth, int used, ListAssignment& lists) {
        if (depth > 0) {
            VertexSet prefix(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(depth));
            if (!list_colour(induced_subgraph(g_, prefix), lists))
                return true;
        }
        if (depth == order_.size())
            return false;
        Vertex v = order_[depth];
        for (int fresh = 0; fresh <= m_; ++fresh) {
            int reused = m_ - fresh;
            if (reused > used)
                continue;
            std::vector<char> mask(static_cast<std::size_t>(used), 0);
            std::fill(mask.begin(), mask.begin() + reused, 1);
            do {
                ColourSet list;
                for (int c = 0; c < used; ++c)
                    if (mask[static_cast<std::size_t>(c)])
                        list.insert(c);
                for (int f = 0; f < fresh; ++f)
                    list.insert(used + f);
                lists[v] = list;
                if (descend(depth + 1, used + fresh, lists))
                    return true;
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
        lists.erase(v);
        return false;
    }

    const Graph& g_;
    VertexSet order_;
    int m_;
};

}  // namespace

std::optional<Colouring> is_colourable(const Graph& g, int t) {
    if (g.empty())
        return Colouring{};
    if (t <= 0)
        return std::nullopt;
    Dsatur search(g, t);
    if (!search.solve())
        return std::nullopt;
    return search.result();
}

std::optional<Colouring> list_colour(const Graph& g, const ListAssignment& lists) {
    ListSearch search(g, lists);
    if (!search.solve())
        return std::nullopt;
    return search.result();
}

ChoosabilityResult list_chromatic_at_least(const Graph& g, int t, const ChoosabilityOptions& options) {
    if (t <= 0)
        throw std::invalid_argument("list_chromatic_at_least: t must be positive");
    const int m = t - 1;
    ChoosabilityResult result;
    if (t == 1) {
        result.at_least = !g.empty();
        if (result.at_least) {
            ListAssignment empty_lists;
            for (Vertex v : g.vertices())
                empty_lists[v] = {};
            result.witness = empty_lists;
        }
        return result;
    }
    if (t >= 3 && g.order() > options.vertex_cap)
        throw std::length_error("list_chromatic_at_least: graph exceeds the search cap");

    // A vertex with fewer than m neighbours in what remains can always be
    // coloured last, so only the m-core matters.
    Graph core = g;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : core.vertices())
            if (static_cast<int>(core.degree(v)) < m) {
                core = remove_vertices(core, {v});
                changed = true;
                break;
            }
    }
    // Highest degree first reaches an uncolourable prefix sooner.
    VertexSet order = core.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return core.degree(a) > core.degree(b); });

    auto found = ChoosabilitySearch(core, order, m).find();
    if (!found)
        return result;
    int next = 0;
    for (auto& [v, list] : *found)
        for (int c : list)
            next = std::max(next, c + 1);
    for (Vertex v : g.vertices()) {
        if (found->contains(v) && static_cast<int>((*found)[v].size()) == m)
            continue;
        ColourSet filler;
        for (int i = 0; i < m; ++i)
            filler.insert(next++);
        (*found)[v] = filler;
    }
    result.at_least = true;
    result.witness = std::move(found);
    return result;
}

}  // namespace kcx
