#include <gtest/gtest.h>

#include <algorithm>

#include "bnalg/dag.hpp"
#include "bnalg/errors.hpp"
#include "bnalg/graph_io.hpp"
#include "support.hpp"

using namespace bnalg;
using namespace bnalg::testing;

namespace {

RawGraph raw(const std::vector<std::pair<std::int64_t, int>>& vars, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
    RawGraph g;
    for (const auto& [id, k] : vars) g.variables.push_back({id, k});
    g.edges = edges;
    return g;
}

CiStatement stmt(VertexSet a, VertexSet b, VertexSet c = {}) { return CiStatement{a, b, c}; }

}  // namespace

TEST(DagModel, RenumbersTopologically) {
    const DagModel g = DagModel::validate(raw({{30, 2}, {10, 3}, {20, 2}}, {{30, 10}, {20, 10}}));
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.original_ids(), (std::vector<std::int64_t>{20, 30, 10}));
    EXPECT_EQ(g.levels(3), 3);
    EXPECT_EQ(g.parents(3), (VertexSet{1, 2}));
    EXPECT_TRUE(g.is_sink(3));
    EXPECT_EQ(g.sinks(), (VertexSet{3}));
    EXPECT_EQ(g.non_sinks(), (VertexSet{1, 2}));
    EXPECT_EQ(g.outcome_count(), 12u);
}

TEST(DagModel, ValidationOfCanonicalModelIsIdentity) {
    for (const DagModel& g : all_dags(4)) {
        const DagModel again = DagModel::validate(g.to_raw());
        EXPECT_EQ(again, g);
    }
}

TEST(DagModel, RejectsMalformedGraphs) {
    EXPECT_THROW(DagModel::validate(raw({{1, 2}, {2, 2}}, {{1, 2}, {2, 1}})), InvalidInput);
    EXPECT_THROW(DagModel::validate(raw({{1, 2}}, {{1, 1}})), InvalidInput);
    EXPECT_THROW(DagModel::validate(raw({{1, 2}, {2, 2}}, {{1, 3}})), InvalidInput);
    EXPECT_THROW(DagModel::validate(raw({{1, 2}, {2, 2}}, {{1, 2}, {1, 2}})), InvalidInput);
    EXPECT_THROW(DagModel::validate(raw({{1, 2}, {1, 2}}, {})), InvalidInput);
    EXPECT_THROW(DagModel::validate(raw({{1, 1}}, {})), InvalidInput);
}

TEST(DagModel, InducedSubgraphKeepsEdgesAmongKept) {
    const DagModel g = diamond();
    const DagModel h = g.induced({1, 2, 4});
    EXPECT_EQ(h.size(), 3);
    EXPECT_EQ(h.edges(), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}}));
    EXPECT_EQ(h.original_ids(), (std::vector<std::int64_t>{1, 2, 4}));
}

TEST(DagModel, Descendants) {
    EXPECT_EQ(diamond().descendants(1), (VertexSet{2, 3, 4}));
    EXPECT_EQ(collider_chain().descendants(2), (VertexSet{3, 4}));
    EXPECT_TRUE(collider_chain().descendants(4).empty());
}

TEST(GraphIo, ParsesAndRoundTrips) {
    const DagModel g = DagModel::validate(read_graph_file(data_path("bipartite.json")));
    EXPECT_EQ(g, bipartite());
    EXPECT_EQ(DagModel::validate(parse_graph_json(graph_to_json(g).dump())), g);
    EXPECT_THROW(parse_graph_json("{\"variables\": 3}"), InvalidInput);
    EXPECT_THROW(parse_graph_json("not json"), InvalidInput);
    EXPECT_THROW(read_graph_file(data_path("missing.json")), InvalidInput);
}

TEST(CiStatement, ValidationAndText) {
    const DagModel g = collider_chain();
    EXPECT_THROW(stmt({}, {1}).validate(g), InvalidInput);
    EXPECT_THROW(stmt({1}, {1}).validate(g), InvalidInput);
    EXPECT_THROW(stmt({1}, {2}, {2}).validate(g), InvalidInput);
    EXPECT_THROW(stmt({1}, {5}).validate(g), InvalidInput);
    EXPECT_EQ(stmt({1}, {4}, {3, 2}).canonical().to_string(), "4 _||_ 1 | {2,3}");
    EXPECT_EQ(stmt({1, 2}, {3}).canonical().to_string(), "3 _||_ {1,2}");
}

TEST(Perfect, Examples) {
    EXPECT_FALSE(is_perfect(bipartite(), bipartite().vertices()));
    EXPECT_TRUE(toric_criterion(bipartite()));
    EXPECT_FALSE(toric_criterion(collider_chain()));
    EXPECT_TRUE(toric_criterion(diamond()));
    EXPECT_FALSE(is_perfect(diamond(), diamond().vertices()));
    EXPECT_TRUE(is_perfect(chain3(), chain3().vertices()));
    EXPECT_TRUE(is_perfect(complete3(), complete3().vertices()));
    EXPECT_THROW(is_perfect(chain3(), {4}), InvalidInput);
}

TEST(Perfect, SubsetsOfPerfectSetsArePerfect) {
    for (const DagModel& g : all_dags(4)) {
        const int n = g.size();
        for (unsigned s = 0; s < (1u << n); ++s) {
            VertexSet set;
            for (int v = 1; v <= n; ++v) {
                if (s >> (v - 1) & 1u) set.push_back(v);
            }
            if (!is_perfect(g, set)) continue;
            for (std::size_t drop = 0; drop < set.size(); ++drop) {
                VertexSet smaller = set;
                smaller.erase(smaller.begin() + static_cast<long>(drop));
                EXPECT_TRUE(is_perfect(g, smaller));
            }
        }
    }
}

TEST(Separation, SmallExamples) {
    const DagModel g = collider_chain();
    EXPECT_TRUE(d_separated(g, stmt({2}, {1})));
    EXPECT_FALSE(d_separated(g, stmt({2}, {1}, {3})));
    EXPECT_TRUE(d_separated(g, stmt({4}, {1}, {2, 3})));
    EXPECT_FALSE(d_separated(g, stmt({4}, {1}, {2})));
    EXPECT_FALSE(d_separated(chain3(), stmt({1}, {3})));
    EXPECT_TRUE(d_separated(chain3(), stmt({1}, {3}, {2})));
}

TEST(Separation, AgreesWithTrailOracle) {
    for (int n = 1; n <= 4; ++n) {
        for (const DagModel& g : all_dags(n)) {
            for (const CiStatement& s : all_statements(n)) {
                EXPECT_EQ(d_separated(g, s), trail_separation_oracle(g, s)) << s.to_string();
            }
        }
    }
}

TEST(Separation, SymmetricAndDecomposable) {
    for (const DagModel& g : all_dags(4)) {
        for (const CiStatement& s : all_statements(4)) {
            const bool sep = d_separated(g, s);
            EXPECT_EQ(sep, d_separated(g, CiStatement{s.b, s.a, s.c}));
            if (sep && s.b.size() > 1) {
                EXPECT_TRUE(d_separated(g, CiStatement{s.a, {s.b.front()}, s.c}));
            }
        }
    }
}

TEST(Separation, OracleGuard) {
    const DagModel big = make_dag(std::vector<int>(11, 2), {});
    EXPECT_THROW(trail_separation_oracle(big, stmt({1}, {2})), GuardExceeded);
}

TEST(Markov, ColliderChainReducedStatements) {
    const MarkovProperty m = global_markov(collider_chain());
    std::vector<std::string> reduced;
    for (const auto& s : m.reduced) reduced.push_back(s.to_string());
    EXPECT_EQ(reduced, (std::vector<std::string>{"2 _||_ 1", "4 _||_ 1 | {2,3}"}));
    for (const auto& s : m.full) EXPECT_TRUE(d_separated(collider_chain(), s));
    EXPECT_TRUE(std::is_sorted(m.full.begin(), m.full.end()));
}

TEST(Markov, ReducedIsSubsetAndEmptyForComplete) {
    EXPECT_TRUE(global_markov(complete3()).full.empty());
    for (const DagModel& g : all_dags(4)) {
        const MarkovProperty m = global_markov(g);
        for (const auto& s : m.reduced) {
            EXPECT_TRUE(std::binary_search(m.full.begin(), m.full.end(), s));
        }
        EXPECT_EQ(m.full.empty(), m.reduced.empty());
    }
    EXPECT_THROW(global_markov(make_dag(std::vector<int>(11, 2), {})), GuardExceeded);
}

TEST(Markov, OrderedStatements) {
    const auto s = ordered_markov(collider_chain());
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].to_string(), "2 _||_ 1");
    EXPECT_EQ(s[1].to_string(), "4 _||_ 1 | {2,3}");
    EXPECT_TRUE(ordered_markov(complete3()).empty());
}

TEST(InducedCycles, Examples) {
    EXPECT_EQ(induced_cycles_gt3(diamond()), (std::vector<VertexSet>{{1, 2, 3, 4}}));
    EXPECT_TRUE(induced_cycles_gt3(bipartite()).empty());
    EXPECT_TRUE(induced_cycles_gt3(complete3()).empty());
    const DagModel five = make_dag({2, 2, 2, 2, 2}, {{1, 2}, {2, 3}, {1, 4}, {3, 5}, {4, 5}});
    EXPECT_EQ(induced_cycles_gt3(five), (std::vector<VertexSet>{{1, 2, 3, 4, 5}}));
    EXPECT_THROW(induced_cycles_gt3(make_dag(std::vector<int>(13, 2), {})), GuardExceeded);
}
