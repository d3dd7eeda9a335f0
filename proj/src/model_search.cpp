#include <algorithm>
#include <bit>

#include "domk/model.hpp"

namespace domk {

namespace {

enum class Notion { dominating, standard };

// Branch-set search over single-word masks. Slots are filled from T_t down to
// T_2; each is enumerated as a connected set anchored at its smallest vertex.
class ModelSearch {
public:
    ModelSearch(const Graph& g, int t, Notion notion, const OrderedClique& l)
        : g_(g), t_(t), notion_(notion), sets_(static_cast<std::size_t>(t) + 1, 0),
          allowed_(static_cast<std::size_t>(t) + 1, g.all()) {
        if (!l.empty()) v1_ = l[0];
        if (l.size() == 2) v2_ = l[1];
        for (int s = 2; s <= t; ++s) {
            if (v1_ >= 0) allowed_[static_cast<std::size_t>(s)] &= ~bit(v1_);
            if (v2_ >= 0 && s >= 3) allowed_[static_cast<std::size_t>(s)] &= ~bit(v2_);
        }
    }

    std::optional<DominatingModel> run() {
        if (!slot(t_, g_.all())) return std::nullopt;
        return result();
    }

    // Fix T_t = {v} and T_{t-1} = {w} and search the remaining slots.
    std::optional<DominatingModel> run_with_pair(Vertex v, Vertex w) {
        sets_[static_cast<std::size_t>(t_)] = bit(v);
        sets_[static_cast<std::size_t>(t_ - 1)] = bit(w);
        placed_ = bit(v) | bit(w);
        const Mask avail = g_.all() & ~placed_;
        if (!feasible(t_ - 1, 0, avail)) return std::nullopt;
        if (!slot(t_ - 2, avail)) return std::nullopt;
        return result();
    }

private:
    DominatingModel result() const {
        DominatingModel m;
        for (int i = 1; i <= t_; ++i) m.branch_sets.push_back(VertexSet::from_mask(sets_[static_cast<std::size_t>(i)]));
        return m;
    }

    Mask neighbourhood(Mask s) const {
        Mask n = 0;
        for_each_bit(s, [&](Vertex v) { n |= g_.row(v); });
        return n;
    }

    // Once slots above s are fixed and `extra` is about to fill slot s, the
    // slots 1..s-1 come from `rest`. Necessary condition: every placed
    // vertex (dominating) or every placed set (standard) sees at least s-1
    // vertices of rest. Monotone in extra, so it also prunes supersets.
    bool feasible(int s, Mask extra, Mask rest) const {
        const int need = s - 1;
        if (need <= 0) return true;
        if (std::popcount(rest) < need) return false;
        if (notion_ == Notion::dominating) {
            bool ok = true;
            for_each_bit(placed_ | extra, [&](Vertex u) {
                if (std::popcount(g_.row(u) & rest) < need) ok = false;
            });
            return ok;
        }
        for (int j = s + 1; j <= t_; ++j)
            if (std::popcount(neighbourhood(sets_[static_cast<std::size_t>(j)]) & rest) < need) return false;
        if (extra && std::popcount(neighbourhood(extra) & rest) < need) return false;
        return true;
    }

    // Does `s` satisfy the condition toward every set placed above it?
    bool serves(Mask s) const {
        if (notion_ == Notion::dominating) {
            bool ok = true;
            for_each_bit(placed_, [&](Vertex u) {
                if (!(g_.row(u) & s)) ok = false;
            });
            return ok;
        }
        const Mask ns = neighbourhood(s);
        for (int j = 1; j <= t_; ++j) {
            Mask tj = sets_[static_cast<std::size_t>(j)];
            if (tj && (tj & placed_) == tj && !(tj & ns)) return false;
        }
        return true;
    }

    Mask component_of(Mask seed, Mask within) const {
        Mask comp = seed, frontier = seed;
        while (frontier) {
            Mask next = neighbourhood(frontier) & within & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    bool slot(int s, Mask avail) {
        if (s == 1) return finish(avail);
        const Mask universe = avail & allowed_[static_cast<std::size_t>(s)];
        Mask roots_done = 0;
        for (Mask rs = universe; rs; rs &= rs - 1) {
            const Vertex r = std::countr_zero(rs);
            if (grow(s, avail, universe & ~roots_done, bit(r), roots_done)) return true;
            roots_done |= bit(r);
        }
        return false;
    }

    // Include/exclude enumeration of connected sets containing `cur` inside
    // `universe` and avoiding `excluded`; each set is reached at exactly one
    // leaf (when no candidate remains).
    bool grow(int s, Mask avail, Mask universe, Mask cur, Mask excluded) {
        const Mask rest = avail & ~cur;
        if (!feasible(s, cur, rest)) return false;
        const Mask open = universe & ~excluded;
        if (!serves(component_of(cur, open))) return false;
        const Mask cand = neighbourhood(cur) & open & ~cur;
        if (!cand) {
            if (!serves(cur)) return false;
            sets_[static_cast<std::size_t>(s)] = cur;
            placed_ |= cur;
            if (slot(s - 1, rest)) return true;
            placed_ &= ~cur;
            sets_[static_cast<std::size_t>(s)] = 0;
            return false;
        }
        const Mask u = cand & (~cand + 1);
        if (grow(s, avail, universe, cur, excluded | u)) return true;
        return grow(s, avail, universe, cur | u, excluded);
    }

    bool finish(Mask avail) {
        const bool needs_v1 = v2_ >= 0 && t_ >= 2 && (sets_[2] & bit(v2_));
        for (Mask left = avail; left;) {
            const Mask comp = component_of(left & (~left + 1), avail);
            left &= ~comp;
            if (needs_v1 && !(comp & bit(v1_))) continue;
            if (serves(comp)) {
                sets_[1] = comp;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    int t_;
    Notion notion_;
    std::vector<Mask> sets_;
    std::vector<Mask> allowed_;
    Mask placed_ = 0;
    Vertex v1_ = -1;
    Vertex v2_ = -1;
};

void check_search_args(const Graph& g, int t) {
    if (t < 1 || t > 6) throw ModelError("model order must be between 1 and 6");
    if (!g.fast()) throw GraphError("model search is limited to 64 vertices");
}

}  // namespace

std::optional<DominatingModel> find_dominating_model(const Graph& g, int t, const OrderedClique& l, SearchMode mode) {
    check_search_args(g, t);
    check_ordered_clique(g, l);
    if (mode == SearchMode::general) return ModelSearch(g, t, Notion::dominating, l).run();

    if (t != 4 && t != 5) throw ModelError("singleton-reduced search is defined for t = 4 and t = 5");
    for (auto [v, w] : g.edges()) {
        if (g.degree(v) < t - 1 || g.degree(w) < t - 1) continue;
        bool touches_l = std::find(l.vertices.begin(), l.vertices.end(), v) != l.vertices.end() ||
                         std::find(l.vertices.begin(), l.vertices.end(), w) != l.vertices.end();
        if (touches_l) continue;
        if (auto m = ModelSearch(g, t, Notion::dominating, l).run_with_pair(v, w)) return m;
    }
    return std::nullopt;
}

std::optional<DominatingModel> find_standard_model(const Graph& g, int t) {
    check_search_args(g, t);
    return ModelSearch(g, t, Notion::standard, {}).run();
}

}  // namespace domk
