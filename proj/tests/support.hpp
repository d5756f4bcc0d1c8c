#ifndef BNALG_TESTS_SUPPORT_HPP
#define BNALG_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "bnalg/dag.hpp"
#include "bnalg/ideal_engine.hpp"
#include "bnalg/staged_tree.hpp"

namespace bnalg::testing {

inline DagModel bipartite() { return make_dag({2, 2, 2, 2}, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}); }
inline DagModel collider_chain() { return make_dag({2, 2, 2, 2}, {{1, 3}, {2, 3}, {2, 4}, {3, 4}}); }
inline DagModel collider_tail() { return make_dag({2, 2, 2, 2}, {{1, 3}, {2, 3}, {3, 4}}); }
inline DagModel collider_tail3() { return make_dag({3, 2, 2, 2}, {{1, 3}, {2, 3}, {3, 4}}); }
inline DagModel diamond() { return make_dag({2, 2, 2, 2}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
inline DagModel chain2() { return make_dag({2, 2}, {{1, 2}}); }
inline DagModel chain3() { return make_dag({2, 2, 2}, {{1, 2}, {2, 3}}); }
inline DagModel complete3() { return make_dag({2, 2, 2}, {{1, 2}, {1, 3}, {2, 3}}); }

/// Every DAG on vertices 1..n whose edges go from lower to higher numbers;
/// up to relabelling this is every DAG on n vertices.
inline std::vector<DagModel> all_dags(int n, int levels = 2) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    }
    std::vector<DagModel> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (mask >> k & 1u) edges.push_back(slots[k]);
        }
        out.push_back(make_dag(std::vector<int>(static_cast<std::size_t>(n), levels), edges));
    }
    return out;
}

/// Every valid statement (A, B nonempty, disjoint from each other and C).
inline std::vector<CiStatement> all_statements(int n) {
    std::vector<CiStatement> out;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
        CiStatement s;
        int c = code;
        for (Vertex v = 1; v <= n; ++v, c /= 4) {
            if (c % 4 == 1) s.a.push_back(v);
            if (c % 4 == 2) s.b.push_back(v);
            if (c % 4 == 3) s.c.push_back(v);
        }
        if (!s.a.empty() && !s.b.empty()) out.push_back(s);
    }
    return out;
}

/// Random values for the labels of the last variable, exact rationals in
/// (0,1) summing to one per stage.
inline LabelAssignment random_last_stage_rho(const DagModel& g, std::mt19937& rng) {
    const StagedTree tree = build_staged_tree(g);
    std::uniform_int_distribution<int> weight(1, 20);
    LabelAssignment rho;
    for (const auto& [labels, members] : tree.stages()) {
        if (tree.label_info(labels.front()).variable != g.size()) continue;
        std::vector<int> w;
        int sum = 0;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            w.push_back(weight(rng));
            sum += w.back();
        }
        for (std::size_t k = 0; k < labels.size(); ++k) rho[tree.label_name(labels[k])] = Rational(w[k], sum);
    }
    for (auto& [name, value] : rho) value.canonicalize();
    return rho;
}

inline std::string data_path(const std::string& name) { return std::string(BNALG_DATA_DIR) + "/" + name; }

}  // namespace bnalg::testing

#endif  // BNALG_TESTS_SUPPORT_HPP
