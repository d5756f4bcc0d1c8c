#ifndef BNALG_STAGED_TREE_HPP
#define BNALG_STAGED_TREE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnalg/dag.hpp"
#include "bnalg/rational.hpp"

namespace bnalg {

/// Index of an edge label inside one StagedTree.
using LabelId = std::size_t;

/// Outcome prefix (v_1, ..., v_j) identifying a tree vertex on level j.
using Prefix = std::vector<int>;

struct TreeEdge {
    std::size_t child = 0;
    LabelId label = 0;
};

struct TreeVertex {
    Prefix prefix;
    std::vector<TreeEdge> out;
    int level() const { return static_cast<int>(prefix.size()); }
};

/// For trees built from a network: label t<j>_<paValues>_<k> is the
/// conditional probability of X_j = k given the parent values.
struct LabelInfo {
    Vertex variable = 0;
    std::vector<int> parent_values;
    int value = 0;
};

/// A rooted tree with labelled edges; vertex 0 is the root and every vertex is
/// addressed by its outcome prefix.
///
/// Generic trees (any labelling) can be represented so that the stage axioms
/// can be checked on them; only trees coming from build_staged_tree carry
/// LabelInfo and feed the algebra.
class StagedTree {
public:
    StagedTree(std::vector<TreeVertex> vertices, std::vector<std::string> label_names,
               std::vector<LabelInfo> label_info = {});

    const std::vector<TreeVertex>& vertices() const { return vertices_; }
    const TreeVertex& vertex(std::size_t i) const { return vertices_.at(i); }
    std::size_t label_count() const { return label_names_.size(); }
    const std::string& label_name(LabelId id) const { return label_names_.at(id); }
    /// Throws InvalidInput for an unknown name.
    LabelId label_by_name(const std::string& name) const;
    bool has_label_info() const { return !label_info_.empty(); }
    const LabelInfo& label_info(LabelId id) const { return label_info_.at(id); }

    /// Largest vertex level.
    int depth() const;
    std::vector<std::size_t> level(int j) const;
    std::vector<std::size_t> leaves() const;
    std::optional<std::size_t> find(const Prefix& prefix) const;

    /// Sorted outgoing label set of a vertex.
    std::vector<LabelId> label_set(std::size_t vertex) const;

    /// Vertices of level j grouped by equal outgoing label sets. Classes are
    /// ordered by their first vertex; members by prefix.
    std::vector<std::vector<std::size_t>> stages_on_level(int j) const;

    /// Stage partition of the whole tree: (sorted label set, members). Leaves
    /// are not stages and are skipped.
    std::vector<std::pair<std::vector<LabelId>, std::vector<std::size_t>>> stages() const;

private:
    std::vector<TreeVertex> vertices_;
    std::vector<std::string> label_names_;
    std::vector<LabelInfo> label_info_;
    std::map<Prefix, std::size_t> index_;
};

/// Stratified staged tree T_G: level j-1 vertices split into stages by the
/// values at Pa(j); labels named t<j>_<paValues>_<k>.
StagedTree build_staged_tree(const DagModel& dag);

/// Id of the label used by X_j on the path of `outcome` in
/// build_staged_tree(dag); only outcome[i-1] for i in Pa(j) u {j} is read.
LabelId network_label(const DagModel& dag, Vertex j, const Prefix& outcome);

/// Canonical label name, e.g. label_name(4, {1,1}, 2) == "t4_11_2".
std::string label_name(Vertex j, const std::vector<int>& parent_values, int value);

/// Distinct labels on each vertex, label sets equal or disjoint, same-stage
/// vertices on one level, all leaves on one level.
bool check_stage_axioms(const StagedTree& tree);

/// For every vertex u on level d, all vertices of the subtree T(u) sharing a
/// level are in one stage. Throws InvalidInput if d is outside 0..depth.
bool check_cut_condition(const StagedTree& tree, int d);

/// Labels along the root-to-leaf path, root first. Throws InvalidInput if
/// `leaf` is not a leaf on the last level.
std::vector<LabelId> leaf_monomial(const StagedTree& tree, const Prefix& leaf);

/// Label name -> value. Per stage the values must lie in (0,1) and sum to 1.
using LabelAssignment = std::map<std::string, Rational>;

/// Throws InvalidInput unless every stage touched by `rho` is fully assigned
/// with values in (0,1) summing to exactly 1.
void check_label_assignment(const StagedTree& tree, const LabelAssignment& rho);

/// JSON text with vertices by prefix, edges with label names and the stage
/// partition per level.
std::string tree_to_json(const StagedTree& tree);
/// Graphviz DOT; same-stage vertices share a fill colour.
std::string tree_to_dot(const StagedTree& tree);

}  // namespace bnalg

#endif  // BNALG_STAGED_TREE_HPP
