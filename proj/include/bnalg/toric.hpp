#ifndef BNALG_TORIC_HPP
#define BNALG_TORIC_HPP

#include <string>
#include <vector>

#include "bnalg/ideal_engine.hpp"

namespace bnalg {

/// One plus-basis variable and its monomial image. Theta variables are label
/// ids of the network's staged tree taken as free variables (no label is
/// eliminated), plus z.
struct ParamEntry {
    PlusIndex index;
    ThetaMonomial image;
};

struct MonomialParam {
    std::vector<ParamEntry> entries;
};

/// Monomial parametrization in plus-basis coordinates: the path monomial of u
/// with the last-value label of every sink replaced by z. Each image is
/// checked against phi_bar of the expanded variable. Throws
/// PreconditionFailed when the toric criterion fails.
MonomialParam plus_basis(const DagModel& dag);

/// Label name with the parent configuration as a 1-based lexicographic
/// counter: t3_12_1 becomes "theta321" (parentless: t1__2 becomes
/// "theta12"). Parts are comma separated if any exceeds 9.
std::string indexed_label_name(const StagedTree& tree, LabelId id);

/// Rewrites a polynomial in standard coordinates into plus-basis
/// coordinates: a basic variable with sinks S at their last value becomes
/// the product over S of (x with '+') minus the other values.
XPoly to_plus_coordinates(const DagModel& dag, const XPoly& f);

/// Matrix T with y = T x, where y lists the plus-basis variables and x the
/// basic variables, both in coordinate_variables order.
RationalMatrix plus_change_matrix(const DagModel& dag);

struct FiberReport {
    int degree = 0;
    CoordinateBasis basis = CoordinateBasis::Plus;
    /// For every fiber of the monomial map, each member minus the first one.
    std::vector<XPoly> binomials;
    std::size_t binomial_dim = 0;
    std::size_t kernel_dim = 0;
    bool all_in_kernel = false;
    /// The binomials span the degree-d kernel in these coordinates.
    bool binomial = false;
};

/// Groups degree-d monomials by their image under a monomial map: the plus
/// basis parametrization, or in standard coordinates the path monomials on
/// free labels. Throws PreconditionFailed for the plus basis of a network
/// failing the toric criterion, GuardExceeded on too many monomials.
FiberReport binomial_fibers(const DagModel& dag, int d, CoordinateBasis basis, const Limits& limits = {});

/// Symmetric S with f = x^T S x over the sorted variables of f.
struct QuadForm {
    std::vector<PlusIndex> variables;
    RationalMatrix matrix;
};

/// Variables are taken as independent coordinates; expand '+' indices first
/// (expand_all keeps the rank) when they are linearly dependent. Throws
/// InvalidInput unless f is zero or a quadratic form.
QuadForm quad_form_matrix(const XPoly& f);
std::size_t quad_form_rank(const XPoly& f);

struct PairwiseRank {
    std::size_t support_size = 0;
    /// Rank of f_i + c f_j for all but finitely many c.
    std::size_t generic_rank = 0;
    /// Determinant in c of a principal submatrix that is nonsingular for
    /// generic c.
    UniPoly determinant;
    std::vector<Rational> rational_roots;
    /// Nonzero rational c at which the rank drops below generic_rank.
    std::vector<Rational> drops;
    /// No nonzero rational c drops the rank.
    bool verdict = false;
};

/// Rank behaviour of the pencil f_i + c f_j over their union support. Same
/// conventions as quad_form_matrix.
PairwiseRank pairwise_rank_poly(const XPoly& fi, const XPoly& fj);

}  // namespace bnalg

#endif  // BNALG_TORIC_HPP
