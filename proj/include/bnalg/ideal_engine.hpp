#ifndef BNALG_IDEAL_ENGINE_HPP
#define BNALG_IDEAL_ENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bnalg/dag.hpp"
#include "bnalg/linalg.hpp"
#include "bnalg/poly.hpp"
#include "bnalg/polyring.hpp"
#include "bnalg/staged_tree.hpp"

namespace bnalg {

/// Size guards shared by the enumerating operations.
struct Limits {
    /// Largest number of monomials (matrix rows or columns) built in one degree.
    std::size_t max_monomials = 100000;
    /// Largest network for the 4^n statement enumeration.
    int max_n = 10;
    /// Largest network for the induced-cycle subset enumeration.
    int max_cycle_n = 12;
};

/// Coordinates of the x-ring: basic variables x_u, or the plus basis in which
/// a sink at its last value is replaced by '+'.
enum class CoordinateBasis { Standard, Plus };

/// Basis of the degree-d part of some space of x-polynomials.
struct GradedBasis {
    int degree = 0;
    std::vector<XPoly> elements;
    std::size_t dimension() const { return elements.size(); }
};

/// Homogenized parametrization of a network: x_u maps to the product of the
/// labels on the root-to-leaf path of u in the staged tree, taken modulo
/// <theta - z>.
class NetworkAlgebra {
public:
    explicit NetworkAlgebra(DagModel dag);

    const DagModel& dag() const { return dag_; }
    const StagedTree& tree() const { return tree_; }
    const QuotientContext& quotient() const { return quotient_; }

    /// Normal-form image of x_u; '+' entries are summed over.
    ThetaPoly variable_image(const PlusIndex& u) const;
    /// Normal-form image of f. Throws InvalidInput on an index invalid for dag.
    ThetaPoly phi_bar(const XPoly& f) const;
    bool in_kernel(const XPoly& f) const { return phi_bar(f).is_zero(); }

private:
    std::size_t basic_position(const PlusIndex& u) const;

    DagModel dag_;
    StagedTree tree_;
    QuotientContext quotient_;
    std::vector<ThetaPoly> basic_images_;
};

/// Plus-basis indices: u with '+' in place of u_i = kappa_i for every sink i.
PlusIndex plus_basis_index(const DagModel& dag, const PlusIndex& u);

/// Variables of the x-ring in the given coordinates, lexicographic order of
/// the underlying basic index.
std::vector<PlusIndex> coordinate_variables(const DagModel& dag, CoordinateBasis basis);

/// Number of monomials of degree d in `vars` variables (saturating).
std::size_t monomial_count(std::size_t vars, int d);

/// All monomials of degree d in `vars`, in lexicographic order of the sorted
/// factor lists. Throws GuardExceeded beyond limits.max_monomials.
std::vector<XMonomial> monomials_of_degree(const std::vector<PlusIndex>& vars, int d, const Limits& limits);

/// All 2x2 minors x_abc x_a'b'c - x_a'bc x_ab'c of the matrices M_c, for
/// every value vector c of C; '+' on vertices outside A u B u C. Rows of M_c
/// are the joint values of A, columns those of B, both in lexicographic
/// order; minors are listed by c, then row pair, then column pair.
std::vector<XPoly> ci_generators(const DagModel& dag, const CiStatement& stmt);

struct GlobalGenerators {
    /// The full global Markov property.
    std::vector<CiStatement> statements;
    /// Every generator of every statement, in statement order.
    std::vector<XPoly> raw;
    /// Greedy linearly independent selection from `raw` (compared after
    /// expanding '+'), spanning the degree-2 part of I_global.
    GradedBasis reduced;
};

GlobalGenerators global_generators(const DagModel& dag, const Limits& limits = {});

/// Basis of {f of degree d in the given coordinates : phi_bar(f) = 0}.
/// Throws GuardExceeded when the number of degree-d monomials is too large.
GradedBasis graded_kernel(const NetworkAlgebra& alg, int d, CoordinateBasis basis = CoordinateBasis::Standard,
                          const Limits& limits = {});

/// Basis of the span of m*g for g in gens and m a monomial in `ring_vars`
/// of degree d - deg g. Elements are such products. Throws InvalidInput on a
/// non-homogeneous generator and GuardExceeded on too many products.
GradedBasis degree_component_of_ideal(const std::vector<XPoly>& gens, const std::vector<PlusIndex>& ring_vars, int d,
                                      const Limits& limits = {});

/// Linear span of a basis, for membership tests.
PolySpan span_of(const GradedBasis& basis);

struct DegreeReport {
    int degree = 0;
    std::size_t kernel_dim = 0;
    /// Dimension of the degree-d component of I_global.
    std::size_t ci_dim = 0;
    /// Both spaces coincide (checked on the stacked span).
    bool equal = false;
};

/// Compares the degree-d parts of I_global and of the kernel in standard
/// coordinates.
DegreeReport compare_with_global(const NetworkAlgebra& alg, int d, const Limits& limits = {});

/// The degree-2 comparison: do the CI quadrics span all quadrics of the kernel?
DegreeReport gss_degree2_check(const NetworkAlgebra& alg, const Limits& limits = {});

/// x_v over G' = G minus its last vertex becomes x_{v+} over G, expanded.
/// Throws PreconditionFailed if the last vertex of G is not a sink and
/// InvalidInput on an index of the wrong length.
XPoly marginal_embedding(const DagModel& g, const XPoly& f);

/// x_{v_1..v_n} becomes rho(theta(X_n = v_n | parents)) * x_{v_1..v_(n-1)};
/// '+' entries are expanded first. Throws InvalidInput if rho violates the
/// stage sums or misses a label that is needed.
XPoly rho_projection(const DagModel& g, const LabelAssignment& rho, const XPoly& f);

struct WitnessCertificate {
    int degree = 0;
    bool in_kernel = false;
    /// f is not in the degree-d component of the comparison ideal.
    bool outside_component = false;
    std::size_t kernel_dim = 0;
    std::size_t component_dim = 0;
};

struct Deg4Witness {
    /// Induced cycle used, in the numbering of the input network.
    VertexSet cycle;
    /// Sinks removed until the cycle's end is the only sink.
    VertexSet removed;
    /// Separation statement of the construction (input numbering).
    VertexSet a, b, c;
    /// The binomial over the reduced network (its own numbering 1..m).
    XPoly reduced_f;
    /// The binomial lifted to the input network with '+' on removed sinks.
    XPoly f;
    bool lifted_in_kernel = false;
    /// Computed on the reduced network in plus-basis coordinates; the
    /// comparison ideal is generated by the degree-2 kernel.
    WitnessCertificate certificate;
};

/// Degree-4 binomial that the quadrics of the kernel do not generate.
/// Throws PreconditionFailed when the toric criterion fails, there is no
/// induced cycle of length above three, or a construction step fails (the
/// message names the violated condition).
Deg4Witness deg4_witness(const DagModel& dag, const Limits& limits = {});

struct DetMWitness {
    /// Determinant of the 3x3 matrix in plus variables.
    XPoly det_m;
    XPoly f;
    /// The comparison ideal is I_global, standard coordinates.
    WitnessCertificate certificate;
    bool det_in_global = false;
};

/// Cubic kernel element outside I_global, for the network with edges
/// 1->3, 2->3, 3->4 and cardinalities (3,2,2,2). Throws PreconditionFailed on
/// any other network.
DetMWitness detM_witness(const DagModel& dag, const Limits& limits = {});

}  // namespace bnalg

#endif  // BNALG_IDEAL_ENGINE_HPP
