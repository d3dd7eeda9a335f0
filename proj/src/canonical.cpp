#include "domk/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>

#include "domk/graph6.hpp"

namespace domk {

namespace {

using Partition = std::vector<Mask>;

class Canonicaliser {
public:
    explicit Canonicaliser(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<Vertex> run() {
        if (n_ == 0) return {};
        search(Partition{g_.all()}, {});
        return best_lab_;
    }

private:
    // Split cells by neighbour counts into each splitter cell until stable.
    // Sub-cells are ordered by count, so the result depends only on the
    // structure of the ordered partition.
    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
                const Mask splitter = cells[w];
                Partition next;
                next.reserve(cells.size() + 4);
                for (Mask cell : cells) {
                    if (std::popcount(cell) == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::map<int, Mask> groups;
                    for_each_bit(cell, [&](Vertex v) { groups[std::popcount(g_.row(v) & splitter)] |= bit(v); });
                    for (auto& [count, m] : groups) next.push_back(m);
                }
                if (next.size() != cells.size()) {
                    cells = std::move(next);
                    changed = true;
                }
            }
        }
    }

    std::vector<Mask> code_of(const std::vector<Vertex>& lab) const {
        std::vector<Mask> code(static_cast<std::size_t>(n_), 0);
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = 0; j < n_; ++j)
                if (g_.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)]))
                    code[static_cast<std::size_t>(i)] |= bit(j);
        return code;
    }

    // Orbits of the group generated by the stored automorphisms that fix
    // every vertex of `prefix`.
    std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> rep(static_cast<std::size_t>(n_));
        std::iota(rep.begin(), rep.end(), 0);
        auto find = [&](Vertex x) {
            while (rep[static_cast<std::size_t>(x)] != x)
                x = rep[static_cast<std::size_t>(x)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& gamma : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) {
                Vertex a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b) rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v) rep[static_cast<std::size_t>(v)] = find(v);
        return rep;
    }

    void search(Partition cells, std::vector<Vertex> prefix) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](Mask c) { return std::popcount(c) > 1; });
        if (target == cells.end()) {
            std::vector<Vertex> lab;
            for (Mask c : cells) lab.push_back(std::countr_zero(c));
            auto code = code_of(lab);
            if (!best_code_ || code < *best_code_) {
                best_code_ = std::move(code);
                best_lab_ = std::move(lab);
            } else if (code == *best_code_) {
                std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
                for (std::size_t i = 0; i < lab.size(); ++i) gamma[static_cast<std::size_t>(lab[i])] = best_lab_[i];
                autos_.push_back(std::move(gamma));
            }
            return;
        }
        const auto idx = static_cast<std::size_t>(target - cells.begin());
        const Mask cell = *target;
        std::vector<Vertex> tried;
        for_each_bit(cell, [&](Vertex v) {
            if (!tried.empty()) {
                auto orb = orbits(prefix);
                for (Vertex t : tried)
                    if (orb[static_cast<std::size_t>(t)] == orb[static_cast<std::size_t>(v)]) return;
            }
            Partition next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == idx) {
                    next.push_back(bit(v));
                    next.push_back(cell & ~bit(v));
                } else {
                    next.push_back(cells[i]);
                }
            }
            auto p = prefix;
            p.push_back(v);
            search(std::move(next), std::move(p));
            tried.push_back(v);
        });
    }

    const Graph& g_;
    Vertex n_;
    std::optional<std::vector<Mask>> best_code_;
    std::vector<Vertex> best_lab_;
    std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

std::vector<Vertex> canonical_labelling(const Graph& g) {
    if (g.order() > kCanonicalLimit)
        throw GraphError("canonical labelling is limited to " + std::to_string(kCanonicalLimit) + " vertices");
    return Canonicaliser(g).run();
}

Graph permute(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return Graph::from_edges(g.order(), edges);
}

std::string canonical_form(const Graph& g) { return to_graph6(permute(g, canonical_labelling(g))); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace domk
