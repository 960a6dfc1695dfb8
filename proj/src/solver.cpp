#include "kcx/solver.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace kcx {

SolverStats& SolverStats::operator+=(const SolverStats& other) {
    decisions += other.decisions;
    backtracks += other.backtracks;
    elapsed_ms += other.elapsed_ms;
    return *this;
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::sat:
        return "sat";
    case Outcome::unsat:
        return "unsat";
    case Outcome::resource_limit:
        return "resource_limit";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

class ExtensionSearch {
public:
    ExtensionSearch(const Graph& g, const Template& t, const Palette& palette, const SolverBudget& budget)
        : g_(g), budget_(budget), start_(Clock::now()) {
        ColourSet universe;
        if (palette.mode == PaletteMode::plain) {
            for (Colour c = 0; c < palette.size; ++c)
                universe.insert(c);
        } else {
            for (Vertex v : g.vertices())
                universe.insert(palette.lists.at(v).begin(), palette.lists.at(v).end());
        }
        colours_.assign(universe.begin(), universe.end());
        const std::size_t n = g.order();
        const std::size_t width = colours_.size();

        colour_.assign(n, -1);
        allowed_.assign(n, std::vector<char>(width, 0));
        blocked_.assign(n, std::vector<int>(width, 0));
        candidates_.assign(n, 0);
        usage_.assign(width, 0);

        for (std::size_t i = 0; i < n; ++i) {
            Vertex v = g.vertices()[i];
            if (t.is_precoloured(v))
                continue;
            for (std::size_t c = 0; c < width; ++c)
                if (palette.allows(v, colours_[c]) && !t.forbidden_at(v).contains(colours_[c]))
                    allowed_[i][c] = 1;
            candidates_[i] = static_cast<int>(std::count(allowed_[i].begin(), allowed_[i].end(), 1));
        }

        // Unused colours with identical availability on every free vertex
        // are interchangeable.
        std::map<std::vector<char>, int> signatures;
        symmetry_class_.resize(width);
        for (std::size_t c = 0; c < width; ++c) {
            std::vector<char> signature(n);
            for (std::size_t i = 0; i < n; ++i)
                signature[i] = allowed_[i][c];
            auto [it, inserted] = signatures.emplace(signature, static_cast<int>(signatures.size()));
            symmetry_class_[c] = it->second;
        }
        class_count_ = signatures.size();

        for (auto [v, c] : t.precolour()) {
            auto pos = std::lower_bound(colours_.begin(), colours_.end(), c);
            if (assign(g.index_of(v), static_cast<std::size_t>(pos - colours_.begin())))
                wiped_out_ = true;
            ++coloured_;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (colour_[i] == -1 && candidates_[i] == 0)
                wiped_out_ = true;
        build_cliques();
    }

    Outcome run() {
        if (wiped_out_ || !cliques_colourable())
            return Outcome::unsat;
        try {
            return search() ? Outcome::sat : Outcome::unsat;
        } catch (const BudgetExhausted&) {
            return Outcome::resource_limit;
        }
    }

    Colouring result() const {
        Colouring out;
        for (std::size_t i = 0; i < g_.order(); ++i)
            out[g_.vertices()[i]] = colours_[static_cast<std::size_t>(colour_[i])];
        return out;
    }

    SolverStats stats() const {
        SolverStats s = stats_;
        s.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return s;
    }

private:
    // Returns true if some uncoloured neighbour lost its last candidate.
    bool assign(std::size_t i, std::size_t c) {
        colour_[i] = static_cast<int>(c);
        ++usage_[c];
        bool wipeout = false;
        for (Vertex w : g_.neighbours_at(i)) {
            auto j = g_.index_of(w);
            if (blocked_[j][c]++ == 0 && allowed_[j][c] && colour_[j] == -1 && --candidates_[j] == 0)
                wipeout = true;
        }
        return wipeout;
    }

    void unassign(std::size_t i, std::size_t c) {
        for (Vertex w : g_.neighbours_at(i)) {
            auto j = g_.index_of(w);
            if (--blocked_[j][c] == 0 && allowed_[j][c] && colour_[j] == -1)
                ++candidates_[j];
        }
        --usage_[c];
        colour_[i] = -1;
    }

    void charge_decision() {
        ++stats_.decisions;
        if (budget_.max_decisions != 0 && stats_.decisions > budget_.max_decisions)
            throw BudgetExhausted{};
        if (budget_.wall_clock.count() != 0 && (stats_.decisions & 0xff) == 0 &&
            Clock::now() - start_ > budget_.wall_clock)
            throw BudgetExhausted{};
    }

    bool search() {
        if (coloured_ == g_.order())
            return true;
        std::size_t pick = g_.order();
        for (std::size_t i = 0; i < g_.order(); ++i) {
            if (colour_[i] != -1)
                continue;
            if (pick == g_.order() || candidates_[i] < candidates_[pick] ||
                (candidates_[i] == candidates_[pick] &&
                 g_.neighbours_at(i).size() > g_.neighbours_at(pick).size()))
                pick = i;
        }
        std::vector<char> fresh_tried(class_count_, 0);
        for (std::size_t c = 0; c < colours_.size(); ++c) {
            if (!allowed_[pick][c] || blocked_[pick][c] != 0)
                continue;
            if (usage_[c] == 0) {
                auto cls = static_cast<std::size_t>(symmetry_class_[c]);
                if (fresh_tried[cls])
                    continue;
                fresh_tried[cls] = 1;
            }
            charge_decision();
            bool wipeout = assign(pick, c);
            ++coloured_;
            if (!wipeout && cliques_colourable() && search())
                return true;
            --coloured_;
            unassign(pick, c);
        }
        ++stats_.backtracks;
        return false;
    }

    // Greedy maximal cliques over the free vertices, largest degree first.
    void build_cliques() {
        const std::size_t n = g_.order();
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < n; ++i)
            if (colour_[i] == -1)
                order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return g_.neighbours_at(a).size() > g_.neighbours_at(b).size();
        });
        std::vector<char> covered(n, 0);
        for (std::size_t seed : order) {
            if (covered[seed])
                continue;
            std::vector<std::size_t> clique{seed};
            for (std::size_t w : order)
                if (w != seed && std::all_of(clique.begin(), clique.end(), [&](std::size_t u) {
                        return g_.adjacent(g_.vertices()[u], g_.vertices()[w]);
                    }))
                    clique.push_back(w);
            for (std::size_t u : clique)
                covered[u] = 1;
            if (clique.size() >= 3)
                cliques_.push_back(std::move(clique));
        }
    }

    // Uncoloured members of each clique need distinct candidate colours
    // (Hall's condition, checked by bipartite matching).
    bool cliques_colourable() {
        std::vector<std::size_t> members;
        for (const auto& clique : cliques_) {
            members.clear();
            for (std::size_t i : clique)
                if (colour_[i] == -1)
                    members.push_back(i);
            if (members.size() < 2)
                continue;
            match_.assign(colours_.size(), -1);
            for (std::size_t m = 0; m < members.size(); ++m) {
                seen_.assign(colours_.size(), 0);
                if (!augment(members, m))
                    return false;
            }
        }
        return true;
    }

    bool augment(const std::vector<std::size_t>& members, std::size_t m) {
        const std::size_t i = members[m];
        for (std::size_t c = 0; c < colours_.size(); ++c) {
            if (!allowed_[i][c] || blocked_[i][c] != 0 || seen_[c])
                continue;
            seen_[c] = 1;
            if (match_[c] == -1 || augment(members, static_cast<std::size_t>(match_[c]))) {
                match_[c] = static_cast<int>(m);
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    SolverBudget budget_;
    Clock::time_point start_;
    std::vector<Colour> colours_;
    std::vector<int> colour_;
    std::vector<std::vector<char>> allowed_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> candidates_;
    std::vector<int> usage_;
    std::vector<int> symmetry_class_;
    std::size_t class_count_ = 0;
    std::vector<std::vector<std::size_t>> cliques_;
    std::vector<int> match_;
    std::vector<char> seen_;
    std::size_t coloured_ = 0;
    bool wiped_out_ = false;
    SolverStats stats_;
};

}  // namespace

SolveResult extend(const Graph& g, const Template& t, const Palette& palette, const SolverBudget& budget) {
    validate_template(g, t, palette);
    ExtensionSearch search(g, t, palette, budget);
    SolveResult result;
    result.outcome = search.run();
    result.stats = search.stats();
    if (result.sat()) {
        result.colouring = search.result();
        if (!respects(g, t, palette, *result.colouring))
            throw InternalInvariantError("extend: produced a colouring that does not respect the template");
    }
    return result;
}

SolveResult brute_force_extend(const Graph& g, const Template& t, const Palette& palette, const BruteForceCap& cap) {
    validate_template(g, t, palette);
    if (g.order() > cap.max_vertices)
        throw std::length_error("brute_force_extend: graph exceeds the vertex cap");
    auto start = Clock::now();

    std::vector<Vertex> free;
    std::vector<std::vector<Colour>> options;
    std::uint64_t space = 1;
    for (Vertex v : g.vertices()) {
        if (t.is_precoloured(v))
            continue;
        ColourSet list = palette.colours_for(v);
        for (Colour c : t.forbidden_at(v))
            list.erase(c);
        free.push_back(v);
        options.emplace_back(list.begin(), list.end());
        space *= std::max<std::uint64_t>(1, list.size());
        if (space > cap.max_assignments)
            throw std::length_error("brute_force_extend: candidate space exceeds the cap");
    }

    SolveResult result;
    Colouring col(t.precolour().begin(), t.precolour().end());
    bool empty_option = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
    if (!empty_option) {
        std::vector<std::size_t> odometer(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i)
                col[free[i]] = options[i][odometer[i]];
            ++result.stats.decisions;
            if (respects(g, t, palette, col)) {
                result.outcome = Outcome::sat;
                result.colouring = col;
                break;
            }
            // Last vertex varies fastest, so assignments come in lexicographic order.
            std::size_t pos = free.size();
            while (pos > 0 && ++odometer[pos - 1] == options[pos - 1].size())
                odometer[--pos] = 0;
            if (pos == 0)
                break;
        }
    }
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

WitnessCheck is_valid_witness(const Graph& g, const Template& t, int k, const Palette& palette,
                              const SolverBudget& budget) {
    WitnessCheck check;
    if (degree(t, k) > 2L * k * k) {
        check.reason = "degree exceeds 2k^2";
        return check;
    }
    if (t.max_forbidden() > static_cast<std::size_t>(2 * k)) {
        check.reason = "a forbidden list exceeds 2k";
        return check;
    }
    check.solve = extend(g, t, palette, budget);
    switch (check.solve.outcome) {
    case Outcome::unsat:
        check.status = WitnessStatus::valid;
        break;
    case Outcome::sat:
        check.reason = "a respecting colouring exists";
        break;
    case Outcome::resource_limit:
        check.status = WitnessStatus::resource_limit;
        check.reason = "solver budget exhausted";
        break;
    }
    return check;
}

}  // namespace kcx
