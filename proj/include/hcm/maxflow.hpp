#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hcm {

// Exact max-flow (Edmonds-Karp) with arbitrary-precision integer capacities.
// Deterministic: BFS explores edges in insertion order, so the resulting
// flow values are reproducible across platforms.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t node_count) : adj_(node_count) {}

    // Returns an edge id usable with flow() after run().
    std::size_t add_edge(std::size_t from, std::size_t to, mpz_class capacity) {
        if (from >= adj_.size() || to >= adj_.size())
            throw std::invalid_argument("MaxFlow: node out of range");
        if (capacity < 0) throw std::invalid_argument("MaxFlow: negative capacity");
        const std::size_t id = edges_.size();
        edges_.push_back(Edge{to, std::move(capacity), 0});
        edges_.push_back(Edge{from, 0, 0});
        adj_[from].push_back(id);
        adj_[to].push_back(id + 1);
        return id;
    }

    mpz_class run(std::size_t source, std::size_t sink) {
        mpz_class total = 0;
        while (true) {
            std::vector<std::size_t> parent_edge(adj_.size(), kNone);
            std::vector<bool> seen(adj_.size(), false);
            std::queue<std::size_t> q;
            q.push(source);
            seen[source] = true;
            while (!q.empty() && !seen[sink]) {
                const std::size_t u = q.front();
                q.pop();
                for (std::size_t id : adj_[u]) {
                    const Edge& e = edges_[id];
                    if (seen[e.to] || e.cap - e.flow == 0) continue;
                    seen[e.to] = true;
                    parent_edge[e.to] = id;
                    q.push(e.to);
                }
            }
            if (!seen[sink]) break;
            mpz_class bottleneck = -1;
            for (std::size_t v = sink; v != source;) {
                const Edge& e = edges_[parent_edge[v]];
                mpz_class residual = e.cap - e.flow;
                if (bottleneck < 0 || residual < bottleneck) bottleneck = residual;
                v = edges_[parent_edge[v] ^ 1].to;
            }
            for (std::size_t v = sink; v != source;) {
                Edge& e = edges_[parent_edge[v]];
                e.flow += bottleneck;
                edges_[parent_edge[v] ^ 1].flow -= bottleneck;
                v = edges_[parent_edge[v] ^ 1].to;
            }
            total += bottleneck;
        }
        return total;
    }

    const mpz_class& flow(std::size_t edge_id) const { return edges_.at(edge_id).flow; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct Edge {
        std::size_t to;
        mpz_class cap;
        mpz_class flow;
    };

    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace hcm
