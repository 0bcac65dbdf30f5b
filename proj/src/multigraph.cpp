#include "rigidity/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace rigidity {

int Multigraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("add_edge: endpoint out of range (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with n=" + std::to_string(n));
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

bool Multigraph::is_simple() const {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges.size());
    for (const Edge& e : edges) seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool Multigraph::is_connected() const {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> vis(n, false);
    std::vector<int> stack{0};
    vis[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u]) {
            if (!vis[w]) {
                vis[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::neighbor_map() const {
    std::vector<std::map<int, int>> tmp(n);
    for (int id = 0; id < edge_count(); ++id) {
        const Edge& e = edges[id];
        auto ins = [&](int a, int b) {
            auto [it, fresh] = tmp[a].emplace(b, id);
            if (!fresh && id < it->second) it->second = id;
        };
        ins(e.u, e.v);
        ins(e.v, e.u);
    }
    std::vector<std::vector<std::pair<int, int>>> out(n);
    for (int v = 0; v < n; ++v) out[v].assign(tmp[v].begin(), tmp[v].end());
    return out;
}

OrderedPath OrderedPath::reversed() const {
    OrderedPath r;
    r.vertices.assign(vertices.rbegin(), vertices.rend());
    r.edge_ids.assign(edge_ids.rbegin(), edge_ids.rend());
    return r;
}

namespace {

[[noreturn]] void g6_fail(const std::string& what, std::size_t offset) {
    throw std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset));
}

constexpr int kG6MaxN = 1 << 18;

} // namespace

Multigraph parse_graph6(const std::string& text) {
    if (text.empty()) g6_fail("empty input", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) g6_fail("invalid character", i);
    }
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(text[0] - 63);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) g6_fail("truncated header", text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(text[i] - 63);
        pos = 4;
    } else {
        if (text.size() < 8) g6_fail("truncated header", text.size());
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(text[i] - 63);
        pos = 8;
    }
    if (n > kG6MaxN) g6_fail("vertex count too large", 0);

    const std::uint64_t bits = n < 2 ? 0 : n * (n - 1) / 2;
    const std::uint64_t payload = (bits + 5) / 6;
    if (text.size() - pos < payload) g6_fail("bit payload too short", text.size());
    if (text.size() - pos > payload) g6_fail("unexpected trailing data", pos + payload);

    Multigraph g(static_cast<int>(n));
    // Bit stream is column-major over the upper triangle: (0,1),(0,2),(1,2),...
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::uint64_t k = 0;
    for (std::uint64_t col = 1; col < n; ++col) {
        for (std::uint64_t row = 0; row < col; ++row, ++k) {
            unsigned char c = static_cast<unsigned char>(text[pos + k / 6]) - 63;
            if ((c >> (5 - k % 6)) & 1) adj[row][col] = true;
        }
    }
    // Padding bits must be zero.
    for (std::uint64_t k2 = bits; k2 < payload * 6; ++k2) {
        unsigned char c = static_cast<unsigned char>(text[pos + k2 / 6]) - 63;
        if ((c >> (5 - k2 % 6)) & 1) g6_fail("nonzero padding bit", pos + k2 / 6);
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (adj[u][v]) g.add_edge(u, v);
    return g;
}

Multigraph parse_edge_list(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw std::runtime_error("edge list: document must carry \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        throw std::runtime_error("edge list: \"n\" must be a nonnegative integer");
    Multigraph g(doc["n"].get<int>());
    if (!doc["edges"].is_array()) throw std::runtime_error("edge list: \"edges\" must be an array");
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::runtime_error("edge list: each edge must be a pair of integers");
        g.add_edge(item[0].get<int>(), item[1].get<int>());
    }
    return g;
}

std::string serialize_edge_list(const Multigraph& g) {
    nlohmann::json doc;
    doc["n"] = g.n;
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges) doc["edges"].push_back({e.u, e.v});
    return doc.dump();
}

std::vector<OrderedPath> enumerate_paths(const Multigraph& g, int d) {
    if (d < 2) throw std::invalid_argument("enumerate_paths: d must be >= 2");
    std::vector<OrderedPath> out;
    if (g.n < d) return out;
    const auto nbr = g.neighbor_map();
    std::vector<bool> used(g.n, false);
    OrderedPath cur;
    auto extend = [&](auto&& self, int last) -> void {
        if (static_cast<int>(cur.vertices.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (const auto& [w, id] : nbr[last]) {
            if (used[w]) continue;
            used[w] = true;
            cur.vertices.push_back(w);
            cur.edge_ids.push_back(id);
            self(self, w);
            cur.vertices.pop_back();
            cur.edge_ids.pop_back();
            used[w] = false;
        }
    };
    for (int s = 0; s < g.n; ++s) {
        used[s] = true;
        cur.vertices.push_back(s);
        extend(extend, s);
        cur.vertices.pop_back();
        used[s] = false;
    }
    return out;
}

Augmentation augment(const Multigraph& g, const OrderedPath& path, int d) {
    if (d < 2) throw std::invalid_argument("augment: d must be >= 2");
    if (static_cast<int>(path.vertices.size()) != d ||
        static_cast<int>(path.edge_ids.size()) != d - 1)
        throw std::invalid_argument("augment: path does not span d vertices");
    std::vector<int> sorted = path.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("augment: path vertices are not distinct");
    for (int i = 0; i + 1 < d; ++i) {
        int id = path.edge_ids[i];
        if (id < 0 || id >= g.edge_count())
            throw std::invalid_argument("augment: path edge id out of range");
        const Edge& e = g.edges[id];
        int a = path.vertices[i], b = path.vertices[i + 1];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            throw std::invalid_argument("augment: path edge does not join consecutive vertices");
    }

    Augmentation aug;
    aug.base = g;
    aug.path = path;
    aug.result = g;
    for (int i = 1; i <= d - 1; ++i)
        for (int c = 0; c < d - i; ++c)
            aug.result.add_edge(path.vertices[i - 1], path.vertices[i]);
    aug.added_count = d * (d - 1) / 2;
    return aug;
}

std::string canonical_form(const Multigraph& g) {
    if (g.n > 9) throw std::invalid_argument("canonical_form: n > 9 exceeds exhaustive search");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::vector<std::pair<int, int>> mapped(g.edges.size());
    do {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            int a = perm[g.edges[i].u], b = perm[g.edges[i].v];
            mapped[i] = {std::min(a, b), std::max(a, b)};
        }
        std::sort(mapped.begin(), mapped.end());
        std::string enc;
        enc.reserve(1 + 2 * mapped.size());
        enc.push_back(static_cast<char>(g.n));
        for (const auto& [a, b] : mapped) {
            enc.push_back(static_cast<char>(a));
            enc.push_back(static_cast<char>(b));
        }
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace rigidity
