#include "domk/colouring.hpp"

#include <algorithm>
#include <bit>

namespace domk {

std::string ColouringViolation::describe() const {
    if (kind == Kind::monochromatic_edge)
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " has both ends coloured " +
               std::to_string(colour);
    return "vertex " + std::to_string(u) + " has colour " + std::to_string(colour) + " outside the budget";
}

Colouring canonicalise(Colouring col) {
    std::vector<int> rename(static_cast<std::size_t>(std::max(col.budget, 0)) + 1, 0);
    int next = 1;
    for (int& c : col.colours) {
        if (c < 1 || c > col.budget) continue;
        auto& r = rename[static_cast<std::size_t>(c)];
        if (r == 0) r = next++;
        c = r;
    }
    return col;
}

namespace {

class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), n_(g.order()), k_(k), colour_(static_cast<std::size_t>(n_), 0) {
        classes_.assign(static_cast<std::size_t>(k) + 1, 0);
    }

    std::optional<Colouring> run() {
        auto clique = greedy_clique();
        if (static_cast<int>(clique.size()) > k_) return std::nullopt;
        int c = 0;
        for (Vertex v : clique) assign(v, ++c);
        max_used_ = c;
        uncoloured_ = g_.all();
        for (Vertex v : clique) uncoloured_ &= ~bit(v);
        if (!extend()) return std::nullopt;
        return canonicalise(Colouring{k_, colour_});
    }

private:
    std::vector<Vertex> greedy_clique() const {
        std::vector<Vertex> clique;
        Mask cand = g_.all();
        while (cand) {
            Vertex best = -1;
            int best_deg = -1;
            for_each_bit(cand, [&](Vertex v) {
                int d = std::popcount(g_.row(v) & cand);
                if (d > best_deg) {
                    best_deg = d;
                    best = v;
                }
            });
            clique.push_back(best);
            cand &= g_.row(best);
        }
        return clique;
    }

    void assign(Vertex v, int c) {
        colour_[static_cast<std::size_t>(v)] = c;
        classes_[static_cast<std::size_t>(c)] |= bit(v);
    }
    void unassign(Vertex v) {
        auto& c = colour_[static_cast<std::size_t>(v)];
        classes_[static_cast<std::size_t>(c)] &= ~bit(v);
        c = 0;
    }

    // Bit c set when colour c appears among v's neighbours.
    unsigned forbidden(Vertex v) const {
        unsigned f = 0;
        for (int c = 1; c <= max_used_; ++c)
            if (g_.row(v) & classes_[static_cast<std::size_t>(c)]) f |= 1u << c;
        return f;
    }

    bool extend() {
        if (!uncoloured_) return true;
        Vertex pick = -1;
        int best_sat = -1, best_deg = -1;
        unsigned pick_forbidden = 0;
        for_each_bit(uncoloured_, [&](Vertex v) {
            unsigned f = forbidden(v);
            int sat = std::popcount(f);
            int deg = std::popcount(g_.row(v) & uncoloured_);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_sat = sat;
                best_deg = deg;
                pick = v;
                pick_forbidden = f;
            }
        });
        if (best_sat >= k_) return false;
        uncoloured_ &= ~bit(pick);
        const int saved_max = max_used_;
        const int limit = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (pick_forbidden & (1u << c)) continue;
            assign(pick, c);
            max_used_ = std::max(saved_max, c);
            if (extend()) return true;
            unassign(pick);
            max_used_ = saved_max;
        }
        uncoloured_ |= bit(pick);
        return false;
    }

    const Graph& g_;
    Vertex n_;
    int k_;
    std::vector<int> colour_;
    std::vector<Mask> classes_;
    Mask uncoloured_ = 0;
    int max_used_ = 0;
};

}  // namespace

std::optional<Colouring> k_colour(const Graph& g, int k) {
    if (k < 1) throw GraphError("colour budget must be at least 1");
    if (k > 31) throw GraphError("colour budget above 31 is not supported");
    if (!g.fast()) throw GraphError("exact colouring is limited to 64 vertices");
    if (g.order() == 0) return Colouring{k, {}};
    return Dsatur(g, k).run();
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colour(g, k)) return k;
}

std::vector<ColouringViolation> verify_colouring(const Graph& g, const Colouring& col) {
    if (static_cast<Vertex>(col.colours.size()) != g.order())
        throw GraphError("colouring covers " + std::to_string(col.colours.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    std::vector<ColouringViolation> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        int c = col.colours[static_cast<std::size_t>(v)];
        if (c == 0) throw GraphError("vertex " + std::to_string(v) + " is uncoloured");
        if (c < 0 || c > col.budget)
            out.push_back({ColouringViolation::Kind::out_of_budget, v, -1, c});
    }
    for (auto [u, v] : g.edges()) {
        int c = col.colours[static_cast<std::size_t>(u)];
        if (c == col.colours[static_cast<std::size_t>(v)])
            out.push_back({ColouringViolation::Kind::monochromatic_edge, u, v, c});
    }
    return out;
}

StitchInstance stitch_instance(const Graph& g, const Separation& sep, const Colouring& chi_a) {
    const int c = chi_a.budget;
    if (c < 1) throw GraphError("stitching needs a colour budget of at least 1");
    if (!is_proper_separation(g, sep, c)) throw GraphError("not a proper (<= c)-separation");
    auto side_a = induced_subgraph(g, sep.a);
    if (!verify_colouring(side_a.graph, chi_a).empty()) throw GraphError("chi_a does not properly colour G[A]");

    StitchInstance inst;
    inst.side_b = induced_subgraph(g, sep.b);
    const auto overlap = sep.a & sep.b;

    std::vector<Edge> edges = inst.side_b.graph.edges();
    std::vector<Vertex> overlap_b;
    for (Vertex v : overlap) overlap_b.push_back(inst.side_b.vertex_map[static_cast<std::size_t>(v)]);
    for (std::size_t i = 0; i < overlap_b.size(); ++i)
        for (std::size_t j = i + 1; j < overlap_b.size(); ++j) edges.emplace_back(overlap_b[i], overlap_b[j]);
    const Graph with_clique = Graph::from_edges(inst.side_b.graph.order(), edges);

    // Colour class i of the overlap, as vertices of the B side.
    std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(c));
    for (Vertex v : overlap) {
        int col = chi_a.colours[static_cast<std::size_t>(side_a.vertex_map[static_cast<std::size_t>(v)])];
        classes[static_cast<std::size_t>(col - 1)].push_back(inst.side_b.vertex_map[static_cast<std::size_t>(v)]);
    }
    std::vector<Edge> merge;
    for (const auto& cls : classes)
        for (std::size_t i = 1; i < cls.size(); ++i) merge.emplace_back(cls[0], cls[i]);
    inst.merged = contract_edges(with_clique, merge);
    for (const auto& cls : classes)
        inst.class_vertex.push_back(cls.empty() ? -1 : inst.merged.vertex_map[static_cast<std::size_t>(cls[0])]);
    return inst;
}

Colouring stitch_colourings(const Graph& g, const Separation& sep, const Colouring& chi_a,
                            const ColouringOracle& oracle) {
    const int c = chi_a.budget;
    const auto inst = stitch_instance(g, sep, chi_a);
    const Graph& merged = inst.merged.result;

    auto chi_b = oracle(merged, c);
    if (!chi_b) throw StitchError("oracle returned no colouring of the merged graph");
    if (static_cast<Vertex>(chi_b->colours.size()) != merged.order())
        throw StitchError("oracle colouring has the wrong length");
    for (int col : chi_b->colours)
        if (col < 1 || col > c) throw StitchError("oracle colouring exceeds the budget");
    for (auto [u, v] : merged.edges())
        if (chi_b->colours[static_cast<std::size_t>(u)] == chi_b->colours[static_cast<std::size_t>(v)])
            throw StitchError("oracle colouring is improper");

    // Rename oracle colours so that class vertex s_i receives colour i.
    std::vector<int> rename(static_cast<std::size_t>(c) + 1, 0);
    std::vector<bool> taken(static_cast<std::size_t>(c) + 1, false);
    for (int i = 1; i <= c; ++i) {
        Vertex s = inst.class_vertex[static_cast<std::size_t>(i - 1)];
        if (s < 0) continue;
        int from = chi_b->colours[static_cast<std::size_t>(s)];
        if (rename[static_cast<std::size_t>(from)] != 0)
            throw StitchError("oracle gives two colour-class vertices the same colour");
        rename[static_cast<std::size_t>(from)] = i;
        taken[static_cast<std::size_t>(i)] = true;
    }
    int free_colour = 1;
    for (int from = 1; from <= c; ++from) {
        if (rename[static_cast<std::size_t>(from)] != 0) continue;
        while (taken[static_cast<std::size_t>(free_colour)]) ++free_colour;
        rename[static_cast<std::size_t>(from)] = free_colour;
        taken[static_cast<std::size_t>(free_colour)] = true;
    }

    auto side_a = induced_subgraph(g, sep.a);
    Colouring out{c, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (Vertex v = 0; v < g.order(); ++v) {
        auto vi = static_cast<std::size_t>(v);
        if (sep.a.contains(v)) {
            out.colours[vi] = chi_a.colours[static_cast<std::size_t>(side_a.vertex_map[vi])];
        } else {
            Vertex in_b = inst.side_b.vertex_map[vi];
            Vertex in_merged = inst.merged.vertex_map[static_cast<std::size_t>(in_b)];
            out.colours[vi] = rename[static_cast<std::size_t>(chi_b->colours[static_cast<std::size_t>(in_merged)])];
        }
    }
    if (!verify_colouring(g, out).empty()) throw StitchError("stitched colouring is improper");
    return out;
}

}  // namespace domk
