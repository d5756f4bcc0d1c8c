#include "bnalg/dag.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bnalg/errors.hpp"

namespace bnalg {

namespace {

bool contains_vertex(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_subset(const VertexSet& small, const VertexSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

DagModel DagModel::validate(const RawGraph& raw) {
    const std::size_t n = raw.variables.size();
    std::map<std::int64_t, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& var = raw.variables[i];
        if (var.levels < 2) {
            throw InvalidInput("variable " + std::to_string(var.id) + " has " +
                               std::to_string(var.levels) + " levels; at least 2 required");
        }
        if (!position.emplace(var.id, i).second) {
            throw InvalidInput("duplicate variable id " + std::to_string(var.id));
        }
    }

    std::vector<std::set<std::size_t>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [from, to] : raw.edges) {
        auto f = position.find(from);
        auto t = position.find(to);
        if (f == position.end() || t == position.end()) {
            const auto bad = f == position.end() ? from : to;
            throw InvalidInput("edge refers to unknown vertex id " + std::to_string(bad));
        }
        if (from == to) {
            throw InvalidInput("self-loop on vertex " + std::to_string(from));
        }
        if (!out[f->second].insert(t->second).second) {
            throw InvalidInput("duplicate edge " + std::to_string(from) + " -> " + std::to_string(to));
        }
        ++indegree[t->second];
    }

    // Kahn's algorithm, smallest original id first among ready vertices.
    std::set<std::pair<std::int64_t, std::size_t>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.emplace(raw.variables[i].id, i);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        auto [id, i] = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(i);
        for (std::size_t t : out[i]) {
            if (--indegree[t] == 0) ready.emplace(raw.variables[t].id, t);
        }
    }
    if (order.size() != n) {
        throw InvalidInput("cycle detected in graph");
    }

    std::vector<Vertex> number(n);
    for (std::size_t k = 0; k < n; ++k) number[order[k]] = static_cast<Vertex>(k + 1);

    DagModel dag;
    dag.levels_.resize(n);
    dag.original_ids_.resize(n);
    dag.parents_.assign(n, {});
    dag.children_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = number[i];
        dag.levels_[v - 1] = raw.variables[i].levels;
        dag.original_ids_[v - 1] = raw.variables[i].id;
        for (std::size_t t : out[i]) {
            dag.children_[v - 1].push_back(number[t]);
            dag.parents_[number[t] - 1].push_back(v);
        }
    }
    for (auto& s : dag.parents_) std::sort(s.begin(), s.end());
    for (auto& s : dag.children_) std::sort(s.begin(), s.end());
    return dag;
}

DagModel make_dag(const std::vector<int>& levels, const std::vector<std::pair<int, int>>& edges) {
    RawGraph raw;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        raw.variables.push_back({static_cast<std::int64_t>(i + 1), levels[i]});
    }
    for (const auto& [a, b] : edges) raw.edges.emplace_back(a, b);
    return DagModel::validate(raw);
}

bool DagModel::has_edge(Vertex from, Vertex to) const {
    if (!contains(from) || !contains(to)) return false;
    return contains_vertex(children(from), to);
}

std::vector<std::pair<Vertex, Vertex>> DagModel::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 1; v <= size(); ++v) {
        for (Vertex c : children(v)) out.emplace_back(v, c);
    }
    return out;
}

VertexSet DagModel::vertices() const {
    VertexSet out(size());
    std::iota(out.begin(), out.end(), 1);
    return out;
}

VertexSet DagModel::sinks() const {
    VertexSet out;
    for (Vertex v = 1; v <= size(); ++v) {
        if (is_sink(v)) out.push_back(v);
    }
    return out;
}

VertexSet DagModel::non_sinks() const {
    VertexSet out;
    for (Vertex v = 1; v <= size(); ++v) {
        if (!is_sink(v)) out.push_back(v);
    }
    return out;
}

VertexSet DagModel::descendants(Vertex v) const {
    std::vector<bool> seen(size() + 1, false);
    std::vector<Vertex> stack(children(v).begin(), children(v).end());
    while (!stack.empty()) {
        Vertex w = stack.back();
        stack.pop_back();
        if (seen[w]) continue;
        seen[w] = true;
        for (Vertex c : children(w)) stack.push_back(c);
    }
    VertexSet out;
    for (Vertex w = 1; w <= size(); ++w) {
        if (seen[w]) out.push_back(w);
    }
    return out;
}

std::size_t DagModel::outcome_count() const {
    std::size_t count = 1;
    for (int k : levels_) count *= static_cast<std::size_t>(k);
    return count;
}

RawGraph DagModel::to_raw() const {
    RawGraph raw;
    for (Vertex v = 1; v <= size(); ++v) raw.variables.push_back({v, levels(v)});
    for (const auto& [a, b] : edges()) raw.edges.emplace_back(a, b);
    return raw;
}

DagModel DagModel::induced(const VertexSet& keep) const {
    const VertexSet k = normalized(keep);
    RawGraph raw;
    for (Vertex v : k) {
        if (!contains(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
        raw.variables.push_back({v, levels(v)});
    }
    for (const auto& [a, b] : edges()) {
        if (contains_vertex(k, a) && contains_vertex(k, b)) raw.edges.emplace_back(a, b);
    }
    return validate(raw);
}

// ---------------------------------------------------------------------------

void CiStatement::validate(const DagModel& dag) const {
    if (a.empty() || b.empty()) throw InvalidInput("CI statement needs nonempty A and B");
    std::set<Vertex> seen;
    for (const VertexSet* s : {&a, &b, &c}) {
        for (Vertex v : *s) {
            if (!dag.contains(v)) throw InvalidInput("CI statement refers to unknown vertex " + std::to_string(v));
            if (!seen.insert(v).second) throw InvalidInput("CI statement sets are not disjoint");
        }
    }
}

CiStatement CiStatement::canonical() const {
    CiStatement s{normalized(a), normalized(b), normalized(c)};
    const Vertex max_a = s.a.empty() ? 0 : s.a.back();
    const Vertex max_b = s.b.empty() ? 0 : s.b.back();
    if (max_b > max_a) std::swap(s.a, s.b);
    return s;
}

std::string CiStatement::to_string() const {
    auto print = [](const VertexSet& s) {
        std::ostringstream os;
        if (s.size() == 1) {
            os << s.front();
            return os.str();
        }
        os << '{';
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << '}';
        return os.str();
    };
    std::string out = print(a) + " _||_ " + print(b);
    if (!c.empty()) out += " | " + print(c);
    return out;
}

// ---------------------------------------------------------------------------

bool is_perfect(const DagModel& dag, const VertexSet& subset) {
    const VertexSet s = normalized(subset);
    for (Vertex v : s) {
        if (!dag.contains(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
    }
    for (Vertex v : s) {
        VertexSet pa;
        for (Vertex p : dag.parents(v)) {
            if (contains_vertex(s, p)) pa.push_back(p);
        }
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) {
                if (!dag.adjacent(pa[i], pa[j])) return false;
            }
        }
    }
    return true;
}

bool toric_criterion(const DagModel& dag) {
    return is_perfect(dag, dag.non_sinks());
}

bool d_separated(const DagModel& dag, const CiStatement& stmt) {
    stmt.validate(dag);
    const int n = dag.size();
    std::vector<bool> in_c(n + 1, false), in_b(n + 1, false);
    for (Vertex v : stmt.c) in_c[v] = true;
    for (Vertex v : stmt.b) in_b[v] = true;

    // C together with all its ancestors: a collider is open iff it lies here.
    std::vector<bool> anc_c(n + 1, false);
    std::vector<Vertex> stack(stmt.c.begin(), stmt.c.end());
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (anc_c[v]) continue;
        anc_c[v] = true;
        for (Vertex p : dag.parents(v)) stack.push_back(p);
    }

    // State: vertex plus direction of arrival. `up` means we arrived from a
    // child (moving against edge direction), `down` means from a parent.
    enum Dir { kUp = 0, kDown = 1 };
    std::vector<std::array<bool, 2>> visited(n + 1, {false, false});
    std::deque<std::pair<Vertex, Dir>> queue;
    for (Vertex v : stmt.a) queue.emplace_back(v, kUp);
    while (!queue.empty()) {
        auto [v, dir] = queue.front();
        queue.pop_front();
        if (visited[v][dir]) continue;
        visited[v][dir] = true;
        if (!in_c[v] && in_b[v]) return false;
        if (dir == kUp) {
            if (in_c[v]) continue;
            for (Vertex p : dag.parents(v)) queue.emplace_back(p, kUp);
            for (Vertex c : dag.children(v)) queue.emplace_back(c, kDown);
        } else {
            if (!in_c[v]) {
                for (Vertex c : dag.children(v)) queue.emplace_back(c, kDown);
            }
            if (anc_c[v]) {
                for (Vertex p : dag.parents(v)) queue.emplace_back(p, kUp);
            }
        }
    }
    return true;
}

bool trail_separation_oracle(const DagModel& dag, const CiStatement& stmt, int max_n) {
    stmt.validate(dag);
    if (dag.size() > max_n) {
        throw GuardExceeded("trail enumeration limited to " + std::to_string(max_n) + " vertices");
    }
    const int n = dag.size();
    std::vector<bool> in_c(n + 1, false);
    for (Vertex v : stmt.c) in_c[v] = true;
    std::vector<bool> has_desc_in_c(n + 1, false);
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex d : dag.descendants(v)) {
            if (in_c[d]) has_desc_in_c[v] = true;
        }
    }

    auto neighbours = [&](Vertex v) {
        VertexSet out = dag.parents(v);
        out.insert(out.end(), dag.children(v).begin(), dag.children(v).end());
        std::sort(out.begin(), out.end());
        return out;
    };

    // A trail is blocked if some inner vertex j satisfies S1 or S2.
    auto blocked = [&](const std::vector<Vertex>& trail) {
        for (std::size_t i = 1; i + 1 < trail.size(); ++i) {
            const Vertex prev = trail[i - 1], j = trail[i], next = trail[i + 1];
            const bool collider = dag.has_edge(prev, j) && dag.has_edge(next, j);
            if (in_c[j] && !collider) return true;
            if (!in_c[j] && !has_desc_in_c[j] && collider) return true;
        }
        return false;
    };

    std::vector<bool> on_path(n + 1, false);
    std::vector<Vertex> path;
    bool separated = true;
    // Depth-first enumeration of simple trails from `from` to `target`.
    auto dfs = [&](auto&& self, Vertex v, Vertex target) -> void {
        if (!separated) return;
        if (v == target) {
            if (!blocked(path)) separated = false;
            return;
        }
        for (Vertex w : neighbours(v)) {
            if (on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            self(self, w, target);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (Vertex a : stmt.a) {
        for (Vertex b : stmt.b) {
            path.assign(1, a);
            on_path.assign(n + 1, false);
            on_path[a] = true;
            dfs(dfs, a, b);
            if (!separated) return false;
        }
    }
    return true;
}

MarkovProperty global_markov(const DagModel& dag, int max_n) {
    const int n = dag.size();
    if (n > max_n) {
        throw GuardExceeded("global Markov enumeration limited to " + std::to_string(max_n) + " vertices");
    }
    MarkovProperty result;
    std::vector<int> role(n, 0);  // 0 none, 1 A, 2 B, 3 C
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        CiStatement s;
        for (int i = 0; i < n; ++i) {
            switch (c % 4) {
                case 1: s.a.push_back(i + 1); break;
                case 2: s.b.push_back(i + 1); break;
                case 3: s.c.push_back(i + 1); break;
                default: break;
            }
            c /= 4;
        }
        if (s.a.empty() || s.b.empty()) continue;
        // one orientation per unordered pair
        if (s.a.back() < s.b.back()) continue;
        if (d_separated(dag, s)) result.full.push_back(std::move(s));
    }
    std::sort(result.full.begin(), result.full.end());

    // T implies S by decomposition and weak union when S's A and B sit inside
    // T's (in either orientation) and C_T <= C_S <= C_T u A_T u B_T.
    auto implies = [](const CiStatement& t, const CiStatement& s) {
        const bool same = is_subset(s.a, t.a) && is_subset(s.b, t.b);
        const bool swapped = is_subset(s.a, t.b) && is_subset(s.b, t.a);
        if (!same && !swapped) return false;
        if (!is_subset(t.c, s.c)) return false;
        return is_subset(s.c, set_union(t.c, set_union(t.a, t.b)));
    };
    for (const auto& s : result.full) {
        bool dominated = false;
        for (const auto& t : result.full) {
            if (!(t == s) && implies(t, s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.reduced.push_back(s);
    }
    return result;
}

std::vector<CiStatement> ordered_markov(const DagModel& dag) {
    std::vector<CiStatement> out;
    for (Vertex j = 1; j <= dag.size(); ++j) {
        CiStatement s;
        s.a = {j};
        s.c = dag.parents(j);
        for (Vertex i = 1; i < j; ++i) {
            if (!contains_vertex(s.c, i)) s.b.push_back(i);
        }
        if (!s.b.empty()) out.push_back(std::move(s));
    }
    return out;
}

std::vector<VertexSet> induced_cycles_gt3(const DagModel& dag, int max_n) {
    const int n = dag.size();
    if (n > max_n) {
        throw GuardExceeded("induced cycle search limited to " + std::to_string(max_n) + " vertices");
    }
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 4) continue;
        VertexSet s;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.push_back(i + 1);
        }
        // The induced skeleton must be a single cycle: every vertex of degree
        // two, |E| = |S|, connected; with exactly one source and one sink the
        // orientation is two directed paths between them.
        std::size_t edge_count = 0;
        int sources = 0, sinks = 0;
        bool degree_two = true;
        for (Vertex v : s) {
            int in = 0, outd = 0;
            for (Vertex p : dag.parents(v)) in += contains_vertex(s, p);
            for (Vertex c : dag.children(v)) outd += contains_vertex(s, c);
            if (in + outd != 2) {
                degree_two = false;
                break;
            }
            edge_count += outd;
            sources += (in == 0);
            sinks += (outd == 0);
        }
        if (!degree_two || edge_count != s.size() || sources != 1 || sinks != 1) continue;
        std::vector<bool> seen(n + 1, false);
        std::vector<Vertex> stack{s.front()};
        std::size_t reached = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = true;
            ++reached;
            for (Vertex w = 1; w <= n; ++w) {
                if (contains_vertex(s, w) && dag.adjacent(v, w) && !seen[w]) stack.push_back(w);
            }
        }
        if (reached == s.size()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bnalg
