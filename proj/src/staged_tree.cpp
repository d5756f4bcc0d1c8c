#include "bnalg/staged_tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bnalg/errors.hpp"

namespace bnalg {

namespace {

std::string prefix_string(const Prefix& p) {
    std::string s;
    const bool wide = std::any_of(p.begin(), p.end(), [](int v) { return v > 9; });
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

// Mixed-radix position of the parent configuration of X_j inside `outcome`.
std::size_t parent_config_index(const DagModel& dag, Vertex j, const Prefix& outcome) {
    std::size_t index = 0;
    for (Vertex p : dag.parents(j)) {
        index = index * static_cast<std::size_t>(dag.levels(p)) + static_cast<std::size_t>(outcome.at(p - 1) - 1);
    }
    return index;
}

std::size_t parent_config_count(const DagModel& dag, Vertex j) {
    std::size_t count = 1;
    for (Vertex p : dag.parents(j)) count *= static_cast<std::size_t>(dag.levels(p));
    return count;
}

}  // namespace

StagedTree::StagedTree(std::vector<TreeVertex> vertices, std::vector<std::string> label_names,
                       std::vector<LabelInfo> label_info)
    : vertices_(std::move(vertices)), label_names_(std::move(label_names)), label_info_(std::move(label_info)) {
    if (vertices_.empty() || !vertices_.front().prefix.empty()) {
        throw InvalidInput("staged tree must start with its root");
    }
    if (!label_info_.empty() && label_info_.size() != label_names_.size()) {
        throw InvalidInput("label metadata does not match label names");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i].prefix, i).second) {
            throw InvalidInput("duplicate tree vertex " + prefix_string(vertices_[i].prefix));
        }
        for (const auto& e : vertices_[i].out) {
            if (e.label >= label_names_.size()) throw InvalidInput("edge label out of range");
        }
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (const auto& e : vertices_[i].out) {
            if (e.child >= vertices_.size()) throw InvalidInput("edge child out of range");
            const Prefix& cp = vertices_[e.child].prefix;
            const Prefix& pp = vertices_[i].prefix;
            if (cp.size() != pp.size() + 1 || !std::equal(pp.begin(), pp.end(), cp.begin())) {
                throw InvalidInput("child prefix does not extend parent prefix");
            }
        }
    }
}

LabelId StagedTree::label_by_name(const std::string& name) const {
    auto it = std::find(label_names_.begin(), label_names_.end(), name);
    if (it == label_names_.end()) throw InvalidInput("unknown label " + name);
    return static_cast<LabelId>(it - label_names_.begin());
}

int StagedTree::depth() const {
    int d = 0;
    for (const auto& v : vertices_) d = std::max(d, v.level());
    return d;
}

std::vector<std::size_t> StagedTree::level(int j) const {
    std::vector<std::size_t> out;
    for (const auto& [prefix, i] : index_) {
        if (static_cast<int>(prefix.size()) == j) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> StagedTree::leaves() const {
    std::vector<std::size_t> out;
    for (const auto& [prefix, i] : index_) {
        if (vertices_[i].out.empty()) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> StagedTree::find(const Prefix& prefix) const {
    auto it = index_.find(prefix);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<LabelId> StagedTree::label_set(std::size_t vertex) const {
    std::vector<LabelId> out;
    for (const auto& e : vertices_.at(vertex).out) out.push_back(e.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> StagedTree::stages_on_level(int j) const {
    std::vector<std::vector<std::size_t>> classes;
    std::map<std::vector<LabelId>, std::size_t> which;
    for (std::size_t v : level(j)) {
        auto key = label_set(v);
        auto [it, fresh] = which.emplace(key, classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(v);
    }
    return classes;
}

std::vector<std::pair<std::vector<LabelId>, std::vector<std::size_t>>> StagedTree::stages() const {
    std::vector<std::pair<std::vector<LabelId>, std::vector<std::size_t>>> out;
    std::map<std::vector<LabelId>, std::size_t> which;
    for (const auto& [prefix, v] : index_) {
        if (vertices_[v].out.empty()) continue;
        auto key = label_set(v);
        auto [it, fresh] = which.emplace(key, out.size());
        if (fresh) out.emplace_back(key, std::vector<std::size_t>{});
        out[it->second].second.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string label_name(Vertex j, const std::vector<int>& parent_values, int value) {
    return "t" + std::to_string(j) + "_" + prefix_string(parent_values) + "_" + std::to_string(value);
}

LabelId network_label(const DagModel& dag, Vertex j, const Prefix& outcome) {
    std::size_t offset = 0;
    for (Vertex i = 1; i < j; ++i) offset += parent_config_count(dag, i) * static_cast<std::size_t>(dag.levels(i));
    return offset + parent_config_index(dag, j, outcome) * static_cast<std::size_t>(dag.levels(j)) +
           static_cast<std::size_t>(outcome.at(j - 1) - 1);
}

StagedTree build_staged_tree(const DagModel& dag) {
    const int n = dag.size();
    std::vector<std::string> names;
    std::vector<LabelInfo> info;
    for (Vertex j = 1; j <= n; ++j) {
        const auto& pa = dag.parents(j);
        std::vector<int> config(pa.size(), 1);
        const std::size_t configs = parent_config_count(dag, j);
        for (std::size_t c = 0; c < configs; ++c) {
            for (int k = 1; k <= dag.levels(j); ++k) {
                names.push_back(label_name(j, config, k));
                info.push_back({j, config, k});
            }
            // advance the mixed-radix parent configuration, last parent fastest
            for (std::size_t p = pa.size(); p-- > 0;) {
                if (++config[p] <= dag.levels(pa[p])) break;
                config[p] = 1;
            }
        }
    }

    std::vector<TreeVertex> vertices;
    vertices.push_back(TreeVertex{});
    std::size_t level_begin = 0;
    for (Vertex j = 1; j <= n; ++j) {
        const std::size_t level_end = vertices.size();
        for (std::size_t v = level_begin; v < level_end; ++v) {
            Prefix outcome = vertices[v].prefix;
            outcome.resize(static_cast<std::size_t>(n), 1);
            for (int k = 1; k <= dag.levels(j); ++k) {
                TreeVertex child;
                child.prefix = vertices[v].prefix;
                child.prefix.push_back(k);
                outcome[j - 1] = k;
                vertices[v].out.push_back({vertices.size(), network_label(dag, j, outcome)});
                vertices.push_back(std::move(child));
            }
        }
        level_begin = level_end;
    }
    return StagedTree(std::move(vertices), std::move(names), std::move(info));
}

bool check_stage_axioms(const StagedTree& tree) {
    std::map<LabelId, std::vector<LabelId>> owner_set;  // label -> label set it occurs in
    std::map<std::vector<LabelId>, int> stage_level;
    for (std::size_t v = 0; v < tree.vertices().size(); ++v) {
        const auto labels = tree.label_set(v);
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
        if (labels.empty()) continue;
        for (LabelId l : labels) {
            auto [it, fresh] = owner_set.emplace(l, labels);
            if (!fresh && it->second != labels) return false;
        }
        auto [it, fresh] = stage_level.emplace(labels, tree.vertex(v).level());
        if (!fresh && it->second != tree.vertex(v).level()) return false;
    }
    std::set<int> leaf_levels;
    for (std::size_t leaf : tree.leaves()) leaf_levels.insert(tree.vertex(leaf).level());
    return leaf_levels.size() <= 1;
}

bool check_cut_condition(const StagedTree& tree, int d) {
    const int depth = tree.depth();
    if (d < 0 || d > depth) {
        throw InvalidInput("cut level " + std::to_string(d) + " outside 0.." + std::to_string(depth));
    }
    for (std::size_t u : tree.level(d)) {
        std::vector<std::size_t> frontier{u};
        while (!frontier.empty()) {
            const auto reference = tree.label_set(frontier.front());
            std::vector<std::size_t> next;
            for (std::size_t v : frontier) {
                if (tree.label_set(v) != reference) return false;
                for (const auto& e : tree.vertex(v).out) next.push_back(e.child);
            }
            frontier = std::move(next);
        }
    }
    return true;
}

std::vector<LabelId> leaf_monomial(const StagedTree& tree, const Prefix& leaf) {
    auto idx = tree.find(leaf);
    if (!idx || !tree.vertex(*idx).out.empty() || tree.vertex(*idx).level() != tree.depth()) {
        throw InvalidInput("not a leaf: " + prefix_string(leaf));
    }
    std::vector<LabelId> labels;
    std::size_t v = 0;
    for (std::size_t j = 0; j < leaf.size(); ++j) {
        bool moved = false;
        for (const auto& e : tree.vertex(v).out) {
            if (tree.vertex(e.child).prefix[j] == leaf[j]) {
                labels.push_back(e.label);
                v = e.child;
                moved = true;
                break;
            }
        }
        if (!moved) throw InvalidInput("broken path to leaf " + prefix_string(leaf));
    }
    return labels;
}

void check_label_assignment(const StagedTree& tree, const LabelAssignment& rho) {
    std::set<LabelId> assigned;
    for (const auto& [name, value] : rho) {
        assigned.insert(tree.label_by_name(name));
        if (value <= 0 || value >= 1) throw InvalidInput("label value for " + name + " outside (0,1)");
    }
    for (const auto& [labels, members] : tree.stages()) {
        const bool touched = std::any_of(labels.begin(), labels.end(), [&](LabelId l) { return assigned.count(l); });
        if (!touched) continue;
        Rational sum = 0;
        for (LabelId l : labels) {
            auto it = rho.find(tree.label_name(l));
            if (it == rho.end()) throw InvalidInput("stage partially assigned, missing " + tree.label_name(l));
            sum += it->second;
        }
        if (sum != 1) throw InvalidInput("stage of " + tree.label_name(labels.front()) + " sums to " + to_string(sum));
    }
}

std::string tree_to_json(const StagedTree& tree) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    j["edges"] = nlohmann::ordered_json::array();
    for (int lvl = 0; lvl <= tree.depth(); ++lvl) {
        for (std::size_t v : tree.level(lvl)) {
            j["vertices"].push_back(prefix_string(tree.vertex(v).prefix));
            for (const auto& e : tree.vertex(v).out) {
                j["edges"].push_back({{"from", prefix_string(tree.vertex(v).prefix)},
                                      {"to", prefix_string(tree.vertex(e.child).prefix)},
                                      {"label", tree.label_name(e.label)}});
            }
        }
    }
    j["stages"] = nlohmann::ordered_json::array();
    for (int lvl = 0; lvl < tree.depth(); ++lvl) {
        auto level_stages = nlohmann::ordered_json::array();
        for (const auto& cls : tree.stages_on_level(lvl)) {
            auto members = nlohmann::ordered_json::array();
            for (std::size_t v : cls) members.push_back(prefix_string(tree.vertex(v).prefix));
            level_stages.push_back(members);
        }
        j["stages"].push_back({{"level", lvl}, {"classes", level_stages}});
    }
    return j.dump(2);
}

std::string tree_to_dot(const StagedTree& tree) {
    static const char* palette[] = {"gold", "lightblue", "palegreen", "pink", "orange", "plum", "khaki", "cyan"};
    std::map<std::size_t, std::string> colour;
    std::size_t next = 0;
    for (const auto& [labels, members] : tree.stages()) {
        if (members.size() < 2) continue;
        for (std::size_t v : members) colour[v] = palette[next % (sizeof(palette) / sizeof(*palette))];
        ++next;
    }
    std::ostringstream os;
    os << "digraph staged_tree {\n  rankdir=LR;\n  node [shape=circle, label=\"\", style=filled, fillcolor=white];\n";
    for (std::size_t v = 0; v < tree.vertices().size(); ++v) {
        os << "  v" << v << " [tooltip=\"" << prefix_string(tree.vertex(v).prefix) << "\"";
        if (auto it = colour.find(v); it != colour.end()) os << ", fillcolor=" << it->second;
        os << "];\n";
    }
    for (std::size_t v = 0; v < tree.vertices().size(); ++v) {
        for (const auto& e : tree.vertex(v).out) {
            os << "  v" << v << " -> v" << e.child << " [label=\"" << tree.label_name(e.label) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bnalg
