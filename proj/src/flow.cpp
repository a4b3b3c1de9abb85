#include "comax/numerics/flow.hpp"

#include <numeric>
#include <queue>

#include "comax/errors.hpp"

namespace comax {

namespace {

struct Edge {
    int to;
    long cap;
    int rev;       // index of reverse edge in graph[to]
    int orig = -1; // index into input arcs, -1 for auxiliary
};

struct Graph {
    std::vector<std::vector<Edge>> adj;
    explicit Graph(int n) : adj(n) {}
    void add(int u, int v, long cap, int orig = -1) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size()), orig});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1, -1});
    }
};

long augment_all(Graph& g, int s, int t) {
    long total = 0;
    for (;;) {
        std::vector<int> prev_node(g.adj.size(), -1), prev_edge(g.adj.size(), -1);
        std::queue<int> q;
        q.push(s);
        prev_node[s] = s;
        while (!q.empty() && prev_node[t] < 0) {
            int u = q.front();
            q.pop();
            for (int k = 0; k < static_cast<int>(g.adj[u].size()); ++k) {
                const Edge& e = g.adj[u][k];
                if (e.cap > 0 && prev_node[e.to] < 0) {
                    prev_node[e.to] = u;
                    prev_edge[e.to] = k;
                    q.push(e.to);
                }
            }
        }
        if (prev_node[t] < 0) return total;
        long bottleneck = std::numeric_limits<long>::max();
        for (int v = t; v != s; v = prev_node[v])
            bottleneck = std::min(bottleneck, g.adj[prev_node[v]][prev_edge[v]].cap);
        for (int v = t; v != s; v = prev_node[v]) {
            Edge& e = g.adj[prev_node[v]][prev_edge[v]];
            e.cap -= bottleneck;
            g.adj[v][e.rev].cap += bottleneck;
        }
        total += bottleneck;
    }
}

} // namespace

std::optional<IntegralFlow> max_flow_exact_fill(const FlowNetwork& net) {
    const int n = net.num_nodes;
    if (static_cast<int>(net.supply.size()) != n)
        throw InvalidInput("max_flow_exact_fill: supply size mismatch");
    if (std::accumulate(net.supply.begin(), net.supply.end(), 0L) != 0)
        throw InvalidInput("max_flow_exact_fill: supplies must sum to zero");
    for (const FlowArc& a : net.arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n || a.capacity < 0)
            throw InvalidInput("max_flow_exact_fill: bad arc");
    }

    // Circulation reduction: arc with lower bound l gets capacity cap-l plus
    // super-source/super-sink arcs carrying l; supplies ride the same pair.
    const int src = n, dst = n + 1;
    Graph g(n + 2);
    long need = 0;
    for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) {
        const FlowArc& a = net.arcs[i];
        long lower = a.exact_fill ? a.capacity : 0;
        g.add(a.from, a.to, a.capacity - lower, i);
        if (lower > 0) {
            g.add(src, a.to, lower);
            g.add(a.from, dst, lower);
            need += lower;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (net.supply[v] > 0) {
            g.add(src, v, net.supply[v]);
            need += net.supply[v];
        } else if (net.supply[v] < 0) {
            g.add(v, dst, -net.supply[v]);
        }
    }

    if (augment_all(g, src, dst) != need) return std::nullopt;

    IntegralFlow flow;
    flow.arc_flow.assign(net.arcs.size(), 0);
    for (int u = 0; u < n; ++u) {
        for (const Edge& e : g.adj[u]) {
            if (e.orig < 0) continue;
            const FlowArc& a = net.arcs[e.orig];
            long lower = a.exact_fill ? a.capacity : 0;
            long used = (a.capacity - lower) - e.cap;
            flow.arc_flow[e.orig] = used + lower;
        }
    }
    return flow;
}

} // namespace comax
