#include "bnalg/ideal_engine.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "bnalg/errors.hpp"

namespace bnalg {

namespace {

// Joint values of the vertices in `s`, lexicographic.
std::vector<std::vector<int>> joint_values(const DagModel& dag, const VertexSet& s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s.size(), 1);
    while (true) {
        out.push_back(cur);
        std::size_t p = s.size();
        while (p > 0) {
            --p;
            if (++cur[p] <= dag.levels(s[p])) break;
            cur[p] = 1;
            if (p == 0) return out;
        }
        if (s.empty()) return out;
    }
}

Integer integer_coefficient(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("non-integral image coefficient");
    return q.get_num();
}

}  // namespace

NetworkAlgebra::NetworkAlgebra(DagModel dag)
    : dag_(std::move(dag)), tree_(build_staged_tree(dag_)), quotient_(tree_) {
    for (const PlusIndex& u : basic_indices(dag_)) {
        ThetaPoly image = ThetaPoly::constant(1);
        for (Vertex j = 1; j <= dag_.size(); ++j) {
            image = image * quotient_.label_image(network_label(dag_, j, u.entries()));
        }
        basic_images_.push_back(std::move(image));
    }
}

std::size_t NetworkAlgebra::basic_position(const PlusIndex& u) const {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        pos = pos * static_cast<std::size_t>(dag_.levels(static_cast<Vertex>(i + 1))) + static_cast<std::size_t>(u[i] - 1);
    }
    return pos;
}

ThetaPoly NetworkAlgebra::variable_image(const PlusIndex& u) const {
    check_index(dag_, u);
    if (!u.has_plus()) return basic_images_[basic_position(u)];
    ThetaPoly sum;
    const XPoly expanded = expand_plus(dag_, u);
    for (const auto& [m, c] : expanded.terms()) sum += basic_images_[basic_position(m.factors().front().first)];
    return sum;
}

ThetaPoly NetworkAlgebra::phi_bar(const XPoly& f) const {
    std::map<PlusIndex, ThetaPoly> cache;
    ThetaPoly out;
    for (const auto& [m, c] : f.terms()) {
        ThetaPoly term = ThetaPoly::constant(c);
        for (const auto& [u, e] : m.factors()) {
            auto it = cache.find(u);
            if (it == cache.end()) it = cache.emplace(u, variable_image(u)).first;
            term = term * it->second.pow(e);
        }
        out += term;
    }
    return out;
}

PlusIndex plus_basis_index(const DagModel& dag, const PlusIndex& u) {
    check_index(dag, u);
    std::vector<int> e = u.entries();
    for (Vertex i = 1; i <= dag.size(); ++i) {
        if (dag.is_sink(i) && e[i - 1] == dag.levels(i)) e[i - 1] = PlusIndex::kPlus;
    }
    return PlusIndex(std::move(e));
}

std::vector<PlusIndex> coordinate_variables(const DagModel& dag, CoordinateBasis basis) {
    std::vector<PlusIndex> vars = basic_indices(dag);
    if (basis == CoordinateBasis::Plus) {
        for (auto& u : vars) u = plus_basis_index(dag, u);
    }
    return vars;
}

std::size_t monomial_count(std::size_t vars, int d) {
    // C(vars + d - 1, d), saturating at SIZE_MAX
    if (d < 0) return 0;
    if (vars == 0) return d == 0 ? 1 : 0;
    unsigned __int128 c = 1;
    for (int i = 1; i <= d; ++i) {
        c = c * (vars - 1 + static_cast<std::size_t>(i)) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(c);
}

namespace {

void check_monomial_guard(std::size_t vars, int d, const Limits& limits) {
    const std::size_t count = monomial_count(vars, d);
    if (count > limits.max_monomials) {
        throw GuardExceeded(std::to_string(count) + " monomials of degree " + std::to_string(d) + " exceed the limit of " +
                            std::to_string(limits.max_monomials));
    }
}

// Calls visit(indices) for every nondecreasing index sequence of length d.
void for_each_multiset(std::size_t vars, int d, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(idx.size()) == d) {
            visit(idx);
            return;
        }
        for (std::size_t v = from; v < vars; ++v) {
            idx.push_back(v);
            rec(v);
            idx.pop_back();
        }
    };
    rec(0);
}

XMonomial monomial_from(const std::vector<PlusIndex>& vars, const std::vector<std::size_t>& idx) {
    std::vector<XMonomial::Factor> factors;
    for (std::size_t i : idx) factors.emplace_back(vars[i], 1u);
    return XMonomial::from_factors(std::move(factors));
}

}  // namespace

std::vector<XMonomial> monomials_of_degree(const std::vector<PlusIndex>& vars, int d, const Limits& limits) {
    check_monomial_guard(vars.size(), d, limits);
    std::vector<XMonomial> out;
    for_each_multiset(vars.size(), d, [&](const std::vector<std::size_t>& idx) { out.push_back(monomial_from(vars, idx)); });
    return out;
}

std::vector<XPoly> ci_generators(const DagModel& dag, const CiStatement& stmt) {
    stmt.validate(dag);
    const auto avals = joint_values(dag, stmt.a);
    const auto bvals = joint_values(dag, stmt.b);
    const auto cvals = joint_values(dag, stmt.c);
    auto index = [&](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
        std::vector<int> e(static_cast<std::size_t>(dag.size()), PlusIndex::kPlus);
        for (std::size_t i = 0; i < stmt.a.size(); ++i) e[stmt.a[i] - 1] = a[i];
        for (std::size_t i = 0; i < stmt.b.size(); ++i) e[stmt.b[i] - 1] = b[i];
        for (std::size_t i = 0; i < stmt.c.size(); ++i) e[stmt.c[i] - 1] = c[i];
        return x_var(PlusIndex(std::move(e)));
    };
    std::vector<XPoly> out;
    for (const auto& c : cvals) {
        for (std::size_t r1 = 0; r1 < avals.size(); ++r1) {
            for (std::size_t r2 = r1 + 1; r2 < avals.size(); ++r2) {
                for (std::size_t c1 = 0; c1 < bvals.size(); ++c1) {
                    for (std::size_t c2 = c1 + 1; c2 < bvals.size(); ++c2) {
                        const auto& a = avals[r1];
                        const auto& a2 = avals[r2];
                        const auto& b = bvals[c1];
                        const auto& b2 = bvals[c2];
                        out.push_back(index(a, b, c) * index(a2, b2, c) - index(a2, b, c) * index(a, b2, c));
                    }
                }
            }
        }
    }
    return out;
}

GlobalGenerators global_generators(const DagModel& dag, const Limits& limits) {
    GlobalGenerators g;
    g.statements = global_markov(dag, limits.max_n).full;
    g.reduced.degree = 2;
    PolySpan span;
    for (const auto& stmt : g.statements) {
        for (auto& f : ci_generators(dag, stmt)) {
            if (span.insert(expand_all(dag, f))) g.reduced.elements.push_back(f);
            g.raw.push_back(std::move(f));
        }
    }
    return g;
}

GradedBasis graded_kernel(const NetworkAlgebra& alg, int d, CoordinateBasis basis, const Limits& limits) {
    if (d < 0) throw InvalidInput("negative degree");
    const std::vector<PlusIndex> vars = coordinate_variables(alg.dag(), basis);
    check_monomial_guard(vars.size(), d, limits);

    std::vector<ThetaPoly> images;
    images.reserve(vars.size());
    bool monomial_images = true;
    for (const auto& u : vars) {
        images.push_back(alg.variable_image(u));
        monomial_images = monomial_images && images.back().term_count() == 1;
    }

    std::vector<XMonomial> rows;
    std::vector<ThetaPoly> row_images;
    std::vector<ThetaPoly> partial{ThetaPoly::constant(1)};
    std::function<void(std::size_t, std::vector<std::size_t>&)> rec = [&](std::size_t from, std::vector<std::size_t>& idx) {
        if (static_cast<int>(idx.size()) == d) {
            rows.push_back(monomial_from(vars, idx));
            row_images.push_back(partial.back());
            return;
        }
        for (std::size_t v = from; v < vars.size(); ++v) {
            idx.push_back(v);
            partial.push_back(partial.back() * images[v]);
            rec(v, idx);
            partial.pop_back();
            idx.pop_back();
        }
    };
    std::vector<std::size_t> idx;
    rec(0, idx);

    GradedBasis out;
    out.degree = d;
    if (monomial_images) {
        // kernel of a monomial map: differences inside each fiber
        std::map<ThetaMonomial, std::vector<std::size_t>> fibers;
        for (std::size_t r = 0; r < rows.size(); ++r) fibers[row_images[r].terms().begin()->first].push_back(r);
        for (const auto& [image, members] : fibers) {
            const std::size_t first = members.front();
            const Rational c0 = row_images[first].terms().begin()->second;
            for (std::size_t k = 1; k < members.size(); ++k) {
                const Rational ck = row_images[members[k]].terms().begin()->second;
                XPoly f(rows[members[k]], c0);
                f.add_term(rows[first], -ck);
                out.elements.push_back(std::move(f));
            }
        }
        return out;
    }

    std::map<ThetaMonomial, std::size_t> columns;
    std::vector<SparseVec> matrix;
    matrix.reserve(rows.size());
    for (const auto& image : row_images) {
        SparseVec v;
        v.reserve(image.term_count());
        for (const auto& [m, c] : image.terms()) {
            auto it = columns.emplace(m, columns.size()).first;
            v.emplace_back(it->second, integer_coefficient(c));
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        matrix.push_back(std::move(v));
    }
    for (const SparseVec& y : left_kernel(matrix, columns.size())) {
        XPoly f;
        for (const auto& [r, a] : y) f.add_term(rows[r], Rational(a));
        out.elements.push_back(std::move(f));
    }
    return out;
}

GradedBasis degree_component_of_ideal(const std::vector<XPoly>& gens, const std::vector<PlusIndex>& ring_vars, int d,
                                      const Limits& limits) {
    GradedBasis out;
    out.degree = d;
    std::size_t products = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw InvalidInput("generator is not homogeneous: " + to_text(g));
        const int e = d - g.degree();
        if (e < 0) continue;
        const std::size_t count = monomial_count(ring_vars.size(), e);
        products = count > limits.max_monomials ? count : products + count;
        if (products > limits.max_monomials) {
            throw GuardExceeded(std::to_string(products) + " generator multiples in degree " + std::to_string(d) +
                                " exceed the limit of " + std::to_string(limits.max_monomials));
        }
    }
    PolySpan span;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        for (const auto& m : monomials_of_degree(ring_vars, d - g.degree(), limits)) {
            XPoly p = g * XPoly(m, Rational(1));
            if (span.insert(p)) out.elements.push_back(std::move(p));
        }
    }
    return out;
}

PolySpan span_of(const GradedBasis& basis) {
    PolySpan span;
    for (const auto& f : basis.elements) span.insert(f);
    return span;
}

DegreeReport compare_with_global(const NetworkAlgebra& alg, int d, const Limits& limits) {
    const DagModel& dag = alg.dag();
    std::vector<XPoly> quadrics;
    for (const auto& f : global_generators(dag, limits).reduced.elements) quadrics.push_back(expand_all(dag, f));
    const GradedBasis component =
        degree_component_of_ideal(quadrics, coordinate_variables(dag, CoordinateBasis::Standard), d, limits);
    const GradedBasis kernel = graded_kernel(alg, d, CoordinateBasis::Standard, limits);
    PolySpan stacked = span_of(component);
    for (const auto& f : kernel.elements) stacked.insert(f);
    DegreeReport r;
    r.degree = d;
    r.kernel_dim = kernel.dimension();
    r.ci_dim = component.dimension();
    r.equal = stacked.dimension() == r.kernel_dim && stacked.dimension() == r.ci_dim;
    return r;
}

DegreeReport gss_degree2_check(const NetworkAlgebra& alg, const Limits& limits) {
    return compare_with_global(alg, 2, limits);
}

XPoly marginal_embedding(const DagModel& g, const XPoly& f) {
    const int n = g.size();
    if (n == 0 || !g.is_sink(n)) throw PreconditionFailed("the last vertex of the network is not a sink");
    return f.substitute([&](const PlusIndex& v) -> std::optional<XPoly> {
        if (static_cast<int>(v.size()) != n - 1) {
            throw InvalidInput(v.name() + " is not an index of the network without its last vertex");
        }
        return expand_plus(g, v.appended(PlusIndex::kPlus));
    });
}

XPoly rho_projection(const DagModel& g, const LabelAssignment& rho, const XPoly& f) {
    const int n = g.size();
    if (n == 0) throw InvalidInput("empty network");
    const StagedTree tree = build_staged_tree(g);
    check_label_assignment(tree, rho);
    return expand_all(g, f).substitute([&](const PlusIndex& v) -> std::optional<XPoly> {
        const std::string& name = tree.label_name(network_label(g, n, v.entries()));
        auto it = rho.find(name);
        if (it == rho.end()) throw InvalidInput("no value for label " + name);
        return XPoly(XMonomial(v.without_last()), it->second);
    });
}

namespace {

VertexSet neighbours(const DagModel& dag, Vertex v) {
    VertexSet out = dag.parents(v);
    out.insert(out.end(), dag.children(v).begin(), dag.children(v).end());
    std::sort(out.begin(), out.end());
    return out;
}

// Vertices on some simple trail from s to t (endpoints included).
VertexSet vertices_on_trails(const DagModel& dag, Vertex s, Vertex t) {
    std::vector<bool> on_path(static_cast<std::size_t>(dag.size()) + 1, false);
    std::vector<bool> useful(on_path.size(), false);
    std::vector<Vertex> path;
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        path.push_back(v);
        on_path[v] = true;
        if (v == t) {
            for (Vertex w : path) useful[w] = true;
        } else {
            for (Vertex w : neighbours(dag, v)) {
                if (!on_path[w]) dfs(w);
            }
        }
        on_path[v] = false;
        path.pop_back();
    };
    dfs(s);
    VertexSet out;
    for (Vertex v = 1; v <= dag.size(); ++v) {
        if (useful[v]) out.push_back(v);
    }
    return out;
}

// Connected component of `start` in the subgraph induced on `allowed`.
VertexSet component_in(const DagModel& dag, Vertex start, const std::set<Vertex>& allowed) {
    std::set<Vertex> seen{start};
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbours(dag, v)) {
            if (allowed.count(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
    return VertexSet(seen.begin(), seen.end());
}

bool has_neighbour_in(const DagModel& dag, Vertex v, const VertexSet& s) {
    for (Vertex w : neighbours(dag, v)) {
        if (std::binary_search(s.begin(), s.end(), w)) return true;
    }
    return false;
}

bool connected(const DagModel& dag, const VertexSet& s) {
    if (s.empty()) return false;
    return component_in(dag, s.front(), std::set<Vertex>(s.begin(), s.end())).size() == s.size();
}

void move_vertex(VertexSet& from, VertexSet& to, Vertex v) {
    from.erase(std::find(from.begin(), from.end(), v));
    to.insert(std::upper_bound(to.begin(), to.end(), v), v);
}

VertexSet relabel(const VertexSet& s, const VertexSet& keep) {
    VertexSet out;
    for (Vertex v : s) out.push_back(keep[static_cast<std::size_t>(v - 1)]);
    return out;
}

}  // namespace

Deg4Witness deg4_witness(const DagModel& dag, const Limits& limits) {
    if (!toric_criterion(dag)) throw PreconditionFailed("the induced subgraph on the non-sinks is not perfect");
    const auto cycles = induced_cycles_gt3(dag, limits.max_cycle_n);
    if (cycles.empty()) throw PreconditionFailed("the network has no induced cycle of length above three");

    Deg4Witness w;
    w.cycle = cycles.front();
    // the cycle's end is its largest vertex; it has no child inside the cycle
    const Vertex end = w.cycle.back();
    if (!dag.is_sink(end)) throw PreconditionFailed("the end of the induced cycle is not a sink");

    // drop other sinks until `end` is the only one
    VertexSet keep = dag.vertices();
    while (true) {
        const DagModel cur = dag.induced(keep);
        VertexSet drop;
        for (Vertex s : cur.sinks()) {
            if (keep[static_cast<std::size_t>(s - 1)] != end) drop.push_back(keep[static_cast<std::size_t>(s - 1)]);
        }
        if (drop.empty()) break;
        for (Vertex v : drop) {
            keep.erase(std::find(keep.begin(), keep.end(), v));
            w.removed.push_back(v);
        }
    }
    std::sort(w.removed.begin(), w.removed.end());
    const DagModel g0 = dag.induced(keep);
    const int n = g0.size();
    if (n > limits.max_n) throw GuardExceeded("reduced network has more than " + std::to_string(limits.max_n) + " vertices");

    // parents of the sink on the two paths of the cycle
    VertexSet cycle0;
    for (Vertex v : w.cycle) cycle0.push_back(static_cast<Vertex>(std::find(keep.begin(), keep.end(), v) - keep.begin() + 1));
    VertexSet ks;
    for (Vertex p : g0.parents(n)) {
        if (std::binary_search(cycle0.begin(), cycle0.end(), p)) ks.push_back(p);
    }
    if (ks.size() != 2) throw PreconditionFailed("the sink does not have exactly two parents on the cycle");
    const Vertex k1 = ks[0], k2 = ks[1];

    VertexSet a{k1}, b{k2}, c;
    for (Vertex v : vertices_on_trails(g0, k1, k2)) {
        if (v != k1 && v != k2 && v != n) c.push_back(v);
    }
    std::set<Vertex> outside_c;
    for (Vertex v = 1; v < n; ++v) {
        if (!std::binary_search(c.begin(), c.end(), v)) outside_c.insert(v);
    }
    a = component_in(g0, k1, outside_c);
    b = component_in(g0, k2, outside_c);
    if (std::binary_search(a.begin(), a.end(), k2)) {
        throw PreconditionFailed("construction failed: k1 and k2 are connected outside C");
    }
    for (Vertex v : outside_c) {
        if (!std::binary_search(a.begin(), a.end(), v) && !std::binary_search(b.begin(), b.end(), v)) c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v : c) {
            const bool in_a = has_neighbour_in(g0, v, a);
            const bool in_b = has_neighbour_in(g0, v, b);
            if (in_a != in_b) {
                move_vertex(c, in_a ? a : b, v);
                moved = true;
                break;
            }
        }
    }

    // the five conditions of the construction
    if (!d_separated(g0, CiStatement{a, b, c})) {
        throw PreconditionFailed("construction failed: A and B are not separated by C");
    }
    if (a.size() + b.size() + c.size() != static_cast<std::size_t>(n - 1)) {
        throw PreconditionFailed("construction failed: A, B, C do not cover the non-sink vertices");
    }
    if (!connected(g0, a)) throw PreconditionFailed("construction failed: A is not connected");
    if (!connected(g0, b)) throw PreconditionFailed("construction failed: B is not connected");
    for (Vertex v : c) {
        if (!has_neighbour_in(g0, v, a) || !has_neighbour_in(g0, v, b)) {
            throw PreconditionFailed("construction failed: a vertex of C lacks a neighbour in A or in B");
        }
    }
    const VertexSet& pa_n = g0.parents(n);
    const bool c_differs = std::any_of(c.begin(), c.end(), [&](Vertex v) { return !std::binary_search(pa_n.begin(), pa_n.end(), v); });
    if (!c_differs) throw PreconditionFailed("construction failed: every vertex of C is a parent of the sink");

    auto index = [&](int av, int bv, bool c_prime) {
        std::vector<int> e(static_cast<std::size_t>(n), 1);
        for (Vertex v : a) e[v - 1] = av;
        for (Vertex v : b) e[v - 1] = bv;
        for (Vertex v : c) e[v - 1] = c_prime && !std::binary_search(pa_n.begin(), pa_n.end(), v) ? 2 : 1;
        return x_var(PlusIndex(std::move(e)));
    };
    w.reduced_f = index(1, 1, false) * index(2, 2, false) * index(2, 1, true) * index(1, 2, true) -
                  index(2, 1, false) * index(1, 2, false) * index(1, 1, true) * index(2, 2, true);

    w.a = relabel(a, keep);
    w.b = relabel(b, keep);
    w.c = relabel(c, keep);
    w.f = w.reduced_f.substitute([&](const PlusIndex& u) -> std::optional<XPoly> {
        std::vector<int> e(static_cast<std::size_t>(dag.size()), PlusIndex::kPlus);
        for (std::size_t i = 0; i < keep.size(); ++i) e[keep[i] - 1] = u[i];
        return x_var(PlusIndex(std::move(e)));
    });

    const NetworkAlgebra alg0(g0);
    WitnessCertificate& cert = w.certificate;
    cert.degree = 4;
    cert.in_kernel = alg0.in_kernel(w.reduced_f);
    const GradedBasis quadrics = graded_kernel(alg0, 2, CoordinateBasis::Plus, limits);
    const GradedBasis component =
        degree_component_of_ideal(quadrics.elements, coordinate_variables(g0, CoordinateBasis::Plus), 4, limits);
    cert.component_dim = component.dimension();
    cert.outside_component = !span_of(component).contains(w.reduced_f);
    cert.kernel_dim = graded_kernel(alg0, 4, CoordinateBasis::Plus, limits).dimension();
    w.lifted_in_kernel = w.removed.empty() ? cert.in_kernel : NetworkAlgebra(dag).in_kernel(w.f);
    return w;
}

DetMWitness detM_witness(const DagModel& dag, const Limits& limits) {
    const std::vector<std::pair<Vertex, Vertex>> shape{{1, 3}, {2, 3}, {3, 4}};
    if (dag.size() != 4 || dag.edges() != shape || dag.cardinalities() != std::vector<int>{3, 2, 2, 2}) {
        throw PreconditionFailed("expected edges 1->3, 2->3, 3->4 with cardinalities (3,2,2,2)");
    }
    auto x = [](int i, int j, int k) { return x_var(PlusIndex({i, j, k, PlusIndex::kPlus})); };
    std::vector<std::vector<XPoly>> m(3);
    for (int i = 1; i <= 3; ++i) {
        m[0].push_back(x(i, 1, 1));
        m[1].push_back(x(i, 1, 1) + x(i, 1, 2));
        m[2].push_back(x(i, 2, 1) + x(i, 2, 2));
    }
    DetMWitness w;
    std::vector<int> perm{0, 1, 2};
    do {
        int inversions = 0;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) inversions += perm[p] > perm[q];
        }
        XPoly term = XPoly::constant(inversions % 2 ? -1 : 1);
        for (int r = 0; r < 3; ++r) term = term * m[r][perm[r]];
        w.det_m += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& [mono, coeff] : w.det_m.terms()) {
        std::vector<PlusIndex> factors = mono.expanded();
        auto first_with = [&](int value, std::size_t skip) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i != skip && factors[i][2] == value) return i;
            }
            throw PreconditionFailed("determinant term " + to_text(XPoly(mono, coeff)) + " lacks a factor with third entry " +
                                     std::to_string(value));
        };
        const std::size_t one = first_with(1, factors.size());
        const std::size_t two = first_with(2, one);
        factors[one] = factors[one].with(3, 1);
        factors[two] = factors[two].with(3, 1);
        std::vector<XMonomial::Factor> fs;
        for (auto& u : factors) fs.emplace_back(std::move(u), 1u);
        w.f.add_term(XMonomial::from_factors(std::move(fs)), coeff);
    }

    const NetworkAlgebra alg(dag);
    std::vector<XPoly> quadrics;
    for (const auto& g : global_generators(dag, limits).reduced.elements) quadrics.push_back(expand_all(dag, g));
    const GradedBasis component =
        degree_component_of_ideal(quadrics, coordinate_variables(dag, CoordinateBasis::Standard), 3, limits);
    const PolySpan span = span_of(component);
    WitnessCertificate& cert = w.certificate;
    cert.degree = 3;
    cert.in_kernel = alg.in_kernel(w.f);
    cert.outside_component = !span.contains(expand_all(dag, w.f));
    cert.component_dim = component.dimension();
    cert.kernel_dim = graded_kernel(alg, 3, CoordinateBasis::Standard, limits).dimension();
    w.det_in_global = span.contains(expand_all(dag, w.det_m));
    return w;
}

}  // namespace bnalg
