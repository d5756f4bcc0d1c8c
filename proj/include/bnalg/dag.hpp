#ifndef BNALG_DAG_HPP
#define BNALG_DAG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bnalg {

/// Vertex of a validated model. Vertices are numbered 1..n topologically.
using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Graph as supplied by the user, before validation. Ids are arbitrary
/// integers; "levels" is the number of values the variable takes.
struct RawGraph {
    struct Variable {
        std::int64_t id = 0;
        int levels = 0;
    };
    std::vector<Variable> variables;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// A finite Bayesian network: a DAG whose vertices carry cardinalities.
///
/// Construction always goes through validate(), which renumbers vertices to
/// 1..n so that every edge i -> j has i < j. Among vertices that are ready
/// (all parents already numbered) the smallest original id is taken first, so
/// re-validating an already canonical model is the identity.
class DagModel {
public:
    /// Throws InvalidInput on a cycle, unknown vertex, duplicate edge or
    /// self-loop, duplicate id, or a cardinality below 2.
    static DagModel validate(const RawGraph& raw);

    int size() const { return static_cast<int>(levels_.size()); }
    int levels(Vertex v) const { return levels_.at(v - 1); }
    const std::vector<int>& cardinalities() const { return levels_; }

    const VertexSet& parents(Vertex v) const { return parents_.at(v - 1); }
    const VertexSet& children(Vertex v) const { return children_.at(v - 1); }
    bool has_edge(Vertex from, Vertex to) const;
    bool adjacent(Vertex a, Vertex b) const { return has_edge(a, b) || has_edge(b, a); }
    bool is_sink(Vertex v) const { return children(v).empty(); }
    bool contains(Vertex v) const { return v >= 1 && v <= size(); }

    /// Edges (i, j) sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    VertexSet vertices() const;
    VertexSet sinks() const;
    VertexSet non_sinks() const;
    /// Strict descendants of v.
    VertexSet descendants(Vertex v) const;

    /// original_ids()[v - 1] is the id v carried in the raw input.
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }

    /// Number of joint outcomes, the product of all cardinalities.
    std::size_t outcome_count() const;

    /// Raw description in canonical numbering (ids 1..n).
    RawGraph to_raw() const;

    /// Induced subgraph on `keep`, renumbered canonically. The original ids of
    /// the result are the vertex numbers of *this.
    DagModel induced(const VertexSet& keep) const;

    friend bool operator==(const DagModel& a, const DagModel& b) {
        return a.levels_ == b.levels_ && a.parents_ == b.parents_;
    }

private:
    std::vector<int> levels_;
    std::vector<VertexSet> parents_;
    std::vector<VertexSet> children_;
    std::vector<std::int64_t> original_ids_;
};

/// Convenience for tests and fixtures: vertices 1..levels.size() with the
/// given cardinalities and edges, then validated.
DagModel make_dag(const std::vector<int>& levels, const std::vector<std::pair<int, int>>& edges);

/// The statement "A is independent of B given C".
struct CiStatement {
    VertexSet a;
    VertexSet b;
    VertexSet c;

    /// Throws InvalidInput unless A, B nonempty, pairwise disjoint, in range.
    void validate(const class DagModel& dag) const;

    /// Orientation with the largest vertex of A u B inside A; sets sorted.
    CiStatement canonical() const;

    /// "4 _||_ 1 | {2,3}"; singletons are printed without braces.
    std::string to_string() const;

    friend auto operator<=>(const CiStatement&, const CiStatement&) = default;
};

/// Every parent pair of every vertex of `subset`, restricted to `subset`, is
/// adjacent. Throws InvalidInput on an unknown vertex.
bool is_perfect(const DagModel& dag, const VertexSet& subset);

/// The induced subgraph on the non-sinks is perfect.
bool toric_criterion(const DagModel& dag);

/// Trail separation of A and B by C, by an active-trail reachability sweep.
bool d_separated(const DagModel& dag, const CiStatement& stmt);

/// Same contract as d_separated, by enumerating every simple trail between A
/// and B. Exponential; throws GuardExceeded when dag.size() > max_n.
bool trail_separation_oracle(const DagModel& dag, const CiStatement& stmt, int max_n = 10);

struct MarkovProperty {
    /// Every valid statement, one per unordered {A, B} pair (canonical
    /// orientation), sorted lexicographically.
    std::vector<CiStatement> full;
    /// Statements of `full` not implied by another one through decomposition
    /// and weak union.
    std::vector<CiStatement> reduced;
};

/// Enumerates all 4^n assignments of vertices to A/B/C/none. Throws
/// GuardExceeded when dag.size() > max_n.
MarkovProperty global_markov(const DagModel& dag, int max_n = 10);

/// j _||_ ({1..j-1} \ Pa(j)) | Pa(j) for every j with a nonempty middle set.
std::vector<CiStatement> ordered_markov(const DagModel& dag);

/// All vertex sets of size >= 4 whose induced subgraph consists of exactly two
/// internally disjoint directed paths with common start and end. Sorted.
/// Throws GuardExceeded when dag.size() > max_n.
std::vector<VertexSet> induced_cycles_gt3(const DagModel& dag, int max_n = 12);

}  // namespace bnalg

#endif  // BNALG_DAG_HPP
