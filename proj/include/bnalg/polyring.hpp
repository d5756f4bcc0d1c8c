#ifndef BNALG_POLYRING_HPP
#define BNALG_POLYRING_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "bnalg/dag.hpp"
#include "bnalg/poly.hpp"
#include "bnalg/staged_tree.hpp"

namespace bnalg {

/// Representatives modulo the ideal generated by (sum of a stage's labels) - z.
/// The last label of every stage is eliminated through
/// theta_last = z - (sum of the other labels of the stage).
class QuotientContext {
public:
    /// Throws InvalidInput if some stage has fewer than two labels.
    explicit QuotientContext(const StagedTree& tree);

    const std::vector<std::vector<LabelId>>& stages() const { return stages_; }
    std::size_t label_count() const { return eliminated_.size(); }
    bool is_eliminated(LabelId id) const { return eliminated_.at(id); }

    /// Normal form of a single label: itself, or z minus its stage mates.
    const ThetaPoly& label_image(LabelId id) const { return images_.at(id); }

    /// Linear, idempotent; throws InvalidInput on an unknown label id.
    ThetaPoly normal_form(const ThetaPoly& p) const;

private:
    std::vector<std::vector<LabelId>> stages_;
    std::vector<bool> eliminated_;
    std::vector<ThetaPoly> images_;
};

/// Throws InvalidInput unless u has one entry per variable of dag, each in
/// 1..levels or '+'.
void check_index(const DagModel& dag, const PlusIndex& u);

/// Sum of the basic variables agreeing with u off its '+' entries.
XPoly expand_plus(const DagModel& dag, const PlusIndex& u);

/// Replaces every '+' variable of f by its expansion.
XPoly expand_all(const DagModel& dag, const XPoly& f);

/// All basic indices of dag in lexicographic order.
std::vector<PlusIndex> basic_indices(const DagModel& dag);

/// {"ring":"x","terms":[{"coeff":"p/q","mono":{"x_11+1":e}}]}; terms listed
/// from the largest monomial down.
nlohmann::ordered_json to_json(const XPoly& f);
/// Same layout with ring "theta", label names from `tree` and "z".
nlohmann::ordered_json to_json(const ThetaPoly& p, const StagedTree& tree);

/// Throws InvalidInput on a malformed document or a ring other than "x".
XPoly x_poly_from_json(const nlohmann::json& j);
/// Throws InvalidInput on a malformed document or unknown label name.
ThetaPoly theta_poly_from_json(const nlohmann::json& j, const StagedTree& tree);

/// "x_1111*x_2112 - x_1112*x_2111"; "0" for the zero polynomial.
std::string to_text(const XPoly& f);
std::string to_text(const ThetaPoly& p, const StagedTree& tree);
std::string theta_var_name(ThetaVar v, const StagedTree& tree);

}  // namespace bnalg

#endif  // BNALG_POLYRING_HPP
