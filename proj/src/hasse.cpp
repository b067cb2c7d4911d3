#include "abelian/hasse.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "abelian/errors.hpp"

namespace abelian {

std::vector<std::vector<int>> HasseGraph::adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& e : edges) {
        adj[e.lower].push_back(e.upper);
        adj[e.upper].push_back(e.lower);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

HasseGraph build_graph(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals) {
    HasseGraph g;
    g.nodes = ideals;
    const int n = static_cast<int>(ideals.size());

    std::map<Root, int> by_sum;
    std::map<Weight, int> by_point;
    for (int k = 0; k < n; ++k) {
        by_sum[ideals[k].root_sum] = k;
        by_point[ideals[k].rho_point(rs)] = k;
    }

    std::set<std::pair<int, int>> covers;
    for (int k = 0; k < n; ++k)
        for (const auto& r : ideals[k].roots) {
            auto it = by_sum.find(ideals[k].root_sum - r);
            if (it == by_sum.end()) continue;
            const AbelianIdeal& low = ideals[it->second];
            if (low.dim() + 1 == ideals[k].dim() && low.subset_of(ideals[k])) covers.insert({it->second, k});
        }

    // galleries of adjacent alcoves, breadth first from the fundamental alcove
    int start = -1;
    for (int k = 0; k < n; ++k)
        if (ideals[k].roots.empty()) start = k;
    if (start < 0) throw PreconditionError("ideal list lacks the zero ideal");
    g.words.assign(n, AffineWord{});
    std::vector<bool> reached(n, false);
    reached[start] = true;
    std::map<std::pair<int, int>, int> alcove_edges;
    std::deque<int> q{start};
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int i = 0; i <= rs.rank(); ++i) {
            AffineWord w = g.words[a].then(i);
            auto it = by_point.find(apply_affine(rs, w, rs.rho()));
            if (it == by_point.end()) continue;
            int b = it->second;
            auto key = std::minmax(a, b);
            alcove_edges.emplace(std::pair{key.first, key.second}, i);
            if (!reached[b]) {
                reached[b] = true;
                g.words[b] = w;
                q.push_back(b);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        throw InvariantViolation("alcove adjacency graph inside 2A is not connected");

    bool match = alcove_edges.size() == covers.size();
    for (const auto& [a, b] : covers) {
        int lo = ideals[a].dim() < ideals[b].dim() ? a : b;
        int hi = lo == a ? b : a;
        auto it = alcove_edges.find({std::min(a, b), std::max(a, b)});
        int label = it == alcove_edges.end() ? -1 : it->second;
        if (label < 0) match = false;
        g.edges.push_back({lo, hi, label});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.alcove_edges_match = match;
    return g;
}

std::vector<UpperAlcoveInfo> upper_alcoves(const RootSystem& rs, const HasseGraph& g) {
    std::vector<UpperAlcoveInfo> out;
    const Weight th(rs.theta());
    for (int k = 0; k < static_cast<int>(g.nodes.size()); ++k) {
        int on_wall = 0;
        int lower = -1;
        for (const auto& v : alcove_vertices(rs, g.words[k])) {
            Rational x = rs.inner(v.point, th);
            if (x > Rational(1)) throw InvariantViolation("alcove vertex beyond the wall 2H_0");
            if (x == Rational(1)) ++on_wall;
            else lower = v.type;
        }
        if (on_wall == rs.rank()) out.push_back({k, lower});
    }
    return out;
}

static Rational facet_gram_det(const RootSystem& rs, const std::vector<Vertex>& verts, int skip) {
    std::vector<Weight> pts;
    for (const auto& v : verts)
        if (v.type != skip) pts.push_back(v.point);
    std::vector<Weight> edges;
    for (std::size_t k = 1; k < pts.size(); ++k) edges.push_back(pts[k] - pts[0]);
    RatMatrix m(edges.size(), std::vector<Rational>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) m[i][j] = rs.inner(edges[i], edges[j]);
    return determinant(m);
}

std::vector<Rational> facet_volume_ratios(const RootSystem& rs) {
    auto verts = fundamental_vertices(rs);
    Rational base = facet_gram_det(rs, verts, 0);
    std::vector<Rational> out;
    for (int i = 0; i <= rs.rank(); ++i) out.push_back(facet_gram_det(rs, verts, i) / base);
    return out;
}

std::vector<Rational> expected_facet_ratios(const RootSystem& rs) {
    std::vector<Rational> out{Rational(1)};
    Rational tn = rs.norm2(rs.theta());
    for (int i = 1; i <= rs.rank(); ++i) {
        Rational n = rs.marks()[i - 1];
        out.push_back(n * n * rs.simple_norm2(i) / tn);
    }
    return out;
}

// ---------------------------------------------------------------- automorphisms

namespace {

std::vector<int> refine(const std::vector<std::vector<int>>& adj, std::vector<int> color) {
    const std::size_t n = adj.size();
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> keys = sig;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
        if (keys.size() == classes) return color;
        classes = keys.size();
    }
}

std::vector<int> initial_colors(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::vector<int>> sig(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<int> q{static_cast<int>(s)};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        std::vector<int> profile(n + 1, 0);
        for (int d : dist) ++profile[d < 0 ? n : d];
        sig[s] = profile;
        sig[s].insert(sig[s].begin(), static_cast<int>(adj[s].size()));
    }
    auto keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    return color;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Permutation identity_perm(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

GroupFingerprint invariants(const std::vector<Permutation>& group) {
    GroupFingerprint f;
    f.order = static_cast<int>(group.size());
    if (group.empty()) return f;
    const Permutation id = identity_perm(group[0].size());
    f.is_abelian = true;
    for (const auto& p : group) {
        int k = 1;
        for (Permutation q = p; q != id; q = compose(p, q)) ++k;
        ++f.element_orders[k];
        bool central = true;
        for (const auto& q : group)
            if (compose(p, q) != compose(q, p)) central = false;
        if (central) ++f.center_order;
        else f.is_abelian = false;
    }
    return f;
}

}  // namespace

std::vector<Permutation> graph_automorphisms(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return {Permutation{}};
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int u : adj[v]) m[v][u] = 1;
    std::vector<int> color = refine(adj, initial_colors(adj));

    // visit order: BFS from a vertex of the rarest color, parents recorded
    std::map<int, int> freq;
    for (int c : color) ++freq[c];
    int root = 0;
    for (int v = 0; v < n; ++v)
        if (freq[color[v]] < freq[color[root]]) root = v;
    std::vector<int> order, parent(n, -1);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        int r = s == 0 ? root : s;
        if (seen[r]) continue;
        seen[r] = true;
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    q.push_back(u);
                }
        }
    }

    std::vector<Permutation> out;
    Permutation img(n, -1);
    std::vector<bool> used(n, false);
    auto consistent = [&](int k, int cand) {
        for (int j = 0; j < k; ++j) {
            int w = order[j];
            if (m[order[k]][w] != m[cand][img[w]]) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(img);
            return;
        }
        int v = order[k];
        std::vector<int> cands;
        if (parent[v] >= 0) cands = adj[img[parent[v]]];
        else
            for (int u = 0; u < n; ++u) cands.push_back(u);
        for (int u : cands) {
            if (used[u] || color[u] != color[v] || !consistent(k, u)) continue;
            img[v] = u;
            used[u] = true;
            self(self, k + 1);
            used[u] = false;
            img[v] = -1;
        }
    };
    search(search, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GroupFingerprint fingerprint(const std::vector<Permutation>& group) {
    GroupFingerprint f = invariants(group);
    f.name = identify_group(f);
    return f;
}

GroupFingerprint automorphism_group(const HasseGraph& g) { return fingerprint(graph_automorphisms(g.adjacency())); }

std::vector<Permutation> dihedral_group(int n) {
    std::vector<Permutation> out;
    for (int k = 0; k < n; ++k) {
        Permutation rot(n), ref(n);
        for (int i = 0; i < n; ++i) {
            rot[i] = (i + k) % n;
            ref[i] = ((k - i) % n + n) % n;
        }
        out.push_back(rot);
        out.push_back(ref);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Permutation> klein_group() { return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}; }

std::string identify_group(const GroupFingerprint& f) {
    auto matches = [&](const std::vector<Permutation>& model) { return f.same_group_invariants(invariants(model)); };
    if (f.order == 1) return "1";
    if (f.order > 48) return "unidentified(order=" + std::to_string(f.order) + ")";
    if (f.order == 2 && matches(symmetric_group(2))) return "Z/2";
    if (f.order == 4 && matches(klein_group())) return "Z/2 × Z/2";
    if (f.order == 6 && matches(symmetric_group(3))) return "Sym_3";
    if (f.order == 24 && matches(symmetric_group(4))) return "Sym_4";
    if (f.order % 2 == 0 && f.order >= 8 && matches(dihedral_group(f.order / 2)))
        return "Dih_" + std::to_string(f.order / 2);
    return "unidentified(order=" + std::to_string(f.order) + ")";
}

}  // namespace abelian
