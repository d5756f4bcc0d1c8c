#include <gtest/gtest.h>

#include "bnalg/errors.hpp"
#include "bnalg/ideal_engine.hpp"
#include "support.hpp"

using namespace bnalg;
using namespace bnalg::testing;

namespace {

bool equal_up_to_sign(const XPoly& a, const XPoly& b) { return a == b || a == -b; }

XPoly minor(const char* a, const char* b, const char* c, const char* d) {
    return x_var(a) * x_var(b) - x_var(c) * x_var(d);
}

}  // namespace

TEST(NetworkAlgebra, BipartiteImages) {
    const NetworkAlgebra alg(bipartite());
    const StagedTree& t = alg.tree();
    const ThetaPoly z = ThetaPoly::variable(kZ);
    const ThetaPoly t11 = ThetaPoly::variable(static_cast<ThetaVar>(t.label_by_name("t1__1")));
    const ThetaPoly t21 = ThetaPoly::variable(static_cast<ThetaVar>(t.label_by_name("t2__1")));
    EXPECT_EQ(alg.phi_bar(x_var("x_12++")), t11 * (z - t21) * z * z);
    EXPECT_EQ(alg.phi_bar(x_var("x_1+++")), t11 * z.pow(3));
    EXPECT_EQ(alg.phi_bar(x_var("x_++++")), z.pow(4));
    EXPECT_THROW(alg.phi_bar(x_var("x_123")), InvalidInput);
}

TEST(NetworkAlgebra, PlusBasisIndex) {
    const DagModel g = bipartite();
    EXPECT_EQ(plus_basis_index(g, PlusIndex::parse("x_1222")).name(), "x_12++");
    EXPECT_EQ(plus_basis_index(g, PlusIndex::parse("x_2211")).name(), "x_2211");
    EXPECT_EQ(coordinate_variables(g, CoordinateBasis::Plus).size(), 16u);
    EXPECT_EQ(coordinate_variables(g, CoordinateBasis::Plus)[3].name(), "x_11++");
    EXPECT_EQ(monomial_count(16, 2), 136u);
    EXPECT_EQ(monomial_count(16, 0), 1u);
    EXPECT_EQ(monomials_of_degree(coordinate_variables(chain2(), CoordinateBasis::Standard), 2, {}).size(), 10u);
    Limits tight;
    tight.max_monomials = 9;
    EXPECT_THROW(monomials_of_degree(coordinate_variables(chain2(), CoordinateBasis::Standard), 2, tight),
                 GuardExceeded);
}

TEST(CiGenerators, ColliderChainMinors) {
    const DagModel g = collider_chain();
    const auto f1 = ci_generators(g, CiStatement{{2}, {1}, {}});
    ASSERT_EQ(f1.size(), 1u);
    EXPECT_TRUE(equal_up_to_sign(f1[0], minor("x_11++", "x_22++", "x_12++", "x_21++")));
    const auto rest = ci_generators(g, CiStatement{{4}, {1}, {2, 3}});
    ASSERT_EQ(rest.size(), 4u);
    EXPECT_TRUE(equal_up_to_sign(rest[0], minor("x_1111", "x_2112", "x_1112", "x_2111")));
    EXPECT_TRUE(equal_up_to_sign(rest[1], minor("x_1121", "x_2122", "x_1122", "x_2121")));
    EXPECT_TRUE(equal_up_to_sign(rest[2], minor("x_1211", "x_2212", "x_1212", "x_2211")));
    EXPECT_TRUE(equal_up_to_sign(rest[3], minor("x_1221", "x_2222", "x_1222", "x_2221")));
    EXPECT_THROW(ci_generators(g, CiStatement{{1}, {1}, {}}), InvalidInput);
}

TEST(CiGenerators, MinorCountFollowsMatrixShape) {
    // 3 x 2 matrix for each of the 2 values of vertex 3
    EXPECT_EQ(ci_generators(collider_tail3(), CiStatement{{1}, {4}, {3}}).size(), 6u);
    // joint rows of {1,2}: 6 x 2
    EXPECT_EQ(ci_generators(collider_tail3(), CiStatement{{1, 2}, {4}, {3}}).size(), 30u);
}

TEST(CiGenerators, TrueStatementsLieInKernel) {
    for (const DagModel& g : {bipartite(), collider_chain(), collider_tail3(), diamond()}) {
        const NetworkAlgebra alg(g);
        for (const CiStatement& s : global_markov(g).full) {
            for (const XPoly& f : ci_generators(g, s)) EXPECT_TRUE(alg.in_kernel(f)) << s.to_string();
        }
    }
    const NetworkAlgebra alg(chain3());
    bool some_outside = false;
    for (const XPoly& f : ci_generators(chain3(), CiStatement{{1}, {3}, {}})) some_outside |= !alg.in_kernel(f);
    EXPECT_TRUE(some_outside);
}

TEST(GlobalGenerators, ColliderChainSpan) {
    const GlobalGenerators gg = global_generators(collider_chain());
    EXPECT_EQ(gg.reduced.dimension(), 5u);
    EXPECT_GE(gg.raw.size(), 5u);
    EXPECT_EQ(gg.statements.size(), global_markov(collider_chain()).full.size());
}

struct KernelCase {
    const char* name;
    DagModel (*graph)();
    int degree;
    std::size_t kernel_dim;
};

void PrintTo(const KernelCase& c, std::ostream* os) { *os << c.name; }

// Dimensions computed by the independent Python oracle in tests/oracles.
class KernelDims : public ::testing::TestWithParam<KernelCase> {};

TEST_P(KernelDims, MatchOracle) {
    const KernelCase& c = GetParam();
    const NetworkAlgebra alg(c.graph());
    const GradedBasis k = graded_kernel(alg, c.degree);
    EXPECT_EQ(k.dimension(), c.kernel_dim);
    for (const XPoly& f : k.elements) {
        EXPECT_TRUE(alg.in_kernel(f));
        EXPECT_EQ(f.degree(), c.degree);
    }
    EXPECT_EQ(graded_kernel(alg, c.degree, CoordinateBasis::Plus).dimension(), c.kernel_dim);
}

INSTANTIATE_TEST_SUITE_P(Oracle, KernelDims,
                         ::testing::Values(KernelCase{"bipartite_d2", bipartite, 2, 5}, KernelCase{"collider_chain_d2", collider_chain, 2, 5},
                                           KernelCase{"collider_tail3_d2", collider_tail3, 2, 33}, KernelCase{"bipartite_d3", bipartite, 3, 80},
                                           KernelCase{"collider_tail_d3", collider_tail, 3, 192},
                                           KernelCase{"diamond_d3", diamond, 3, 96},
                                           KernelCase{"chain2_d1", chain2, 1, 0}, KernelCase{"chain3_d3", chain3, 3, 16},
                                           KernelCase{"collider_chain_d3", collider_chain, 3, 80}, KernelCase{"diamond_d2", diamond, 2, 6},
                                           KernelCase{"collider_tail_d2", collider_tail, 2, 13},
                                           KernelCase{"complete3_d2", complete3, 2, 0}),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(GradedKernel, Guard) {
    Limits tight;
    tight.max_monomials = 100;
    EXPECT_THROW(graded_kernel(NetworkAlgebra(bipartite()), 2, CoordinateBasis::Standard, tight), GuardExceeded);
}

TEST(DegreeComponent, SmallIdeal) {
    const std::vector<PlusIndex> vars{PlusIndex::parse("1"), PlusIndex::parse("2"), PlusIndex::parse("3")};
    const XPoly g = x_var("x_1") * x_var("x_1") - x_var("x_2") * x_var("x_3");
    EXPECT_EQ(degree_component_of_ideal({g}, vars, 2).dimension(), 1u);
    EXPECT_EQ(degree_component_of_ideal({g}, vars, 3).dimension(), 3u);
    EXPECT_EQ(degree_component_of_ideal({g, Rational(2) * g}, vars, 4).dimension(), 6u);
    EXPECT_EQ(degree_component_of_ideal({g}, vars, 1).dimension(), 0u);
    EXPECT_THROW(degree_component_of_ideal({g + x_var("x_1")}, vars, 3), InvalidInput);
}

TEST(DegreeComponent, GlobalAgreesWithKernel) {
    const DegreeReport collider_chain_d2 = gss_degree2_check(NetworkAlgebra(collider_chain()));
    EXPECT_TRUE(collider_chain_d2.equal);
    EXPECT_EQ(collider_chain_d2.ci_dim, 5u);
    const DegreeReport h = compare_with_global(NetworkAlgebra(collider_tail()), 3);
    EXPECT_EQ(h.kernel_dim, 192u);
    EXPECT_EQ(h.ci_dim, 192u);
    EXPECT_TRUE(h.equal);
    const DegreeReport g = gss_degree2_check(NetworkAlgebra(collider_tail3()));
    EXPECT_EQ(g.kernel_dim, 33u);
    EXPECT_TRUE(g.equal);
}

TEST(MarginalMaps, EmbeddingAndProjection) {
    const DagModel g = chain3();
    EXPECT_EQ(marginal_embedding(g, x_var("x_12") * x_var("x_21")),
              (x_var("x_121") + x_var("x_122")) * (x_var("x_211") + x_var("x_212")));
    EXPECT_THROW(marginal_embedding(g, x_var("x_121")), InvalidInput);
    const LabelAssignment rho{{"t3_1_1", Rational(1, 4)}, {"t3_1_2", Rational(3, 4)},
                              {"t3_2_1", Rational(2, 5)}, {"t3_2_2", Rational(3, 5)}};
    EXPECT_EQ(rho_projection(g, rho, x_var("x_121")), Rational(2, 5) * x_var("x_12"));
    EXPECT_EQ(rho_projection(g, rho, x_var("x_11+")), x_var("x_11"));
    const LabelAssignment bad{{"t3_1_1", Rational(1, 4)}, {"t3_1_2", Rational(1, 4)}};
    EXPECT_THROW(rho_projection(g, bad, x_var("x_111")), InvalidInput);
    EXPECT_THROW(rho_projection(g, {{"t3_1_1", Rational(1, 4)}, {"t3_1_2", Rational(3, 4)}}, x_var("x_121")),
                 InvalidInput);
}

TEST(Witness, Deg4OnDiamond) {
    const Deg4Witness w = deg4_witness(diamond());
    EXPECT_EQ(w.cycle, (VertexSet{1, 2, 3, 4}));
    EXPECT_TRUE(w.removed.empty());
    EXPECT_EQ(w.f, x_var("x_1111") * x_var("x_1221") * x_var("x_2121") * x_var("x_2211") -
                       x_var("x_1121") * x_var("x_1211") * x_var("x_2111") * x_var("x_2221"));
    EXPECT_TRUE(w.lifted_in_kernel);
    EXPECT_TRUE(w.certificate.in_kernel);
    EXPECT_TRUE(w.certificate.outside_component);
    EXPECT_EQ(w.certificate.kernel_dim, 810u);
    EXPECT_EQ(w.certificate.component_dim, 801u);
}

TEST(Witness, Deg4WithExtraSink) {
    // the diamond plus a sink hanging off vertex 1
    const DagModel g = make_dag({2, 2, 2, 2, 2}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 5}});
    const Deg4Witness w = deg4_witness(g);
    EXPECT_EQ(w.removed, (VertexSet{5}));
    EXPECT_TRUE(w.lifted_in_kernel);
    EXPECT_TRUE(w.certificate.outside_component);
}

TEST(Witness, Deg4Preconditions) {
    EXPECT_THROW(deg4_witness(bipartite()), PreconditionFailed);
    EXPECT_THROW(deg4_witness(collider_chain()), PreconditionFailed);
}

TEST(Witness, DetMOnFig3G) {
    const DetMWitness w = detM_witness(collider_tail3());
    EXPECT_TRUE(w.det_in_global);
    EXPECT_TRUE(w.certificate.in_kernel);
    EXPECT_TRUE(w.certificate.outside_component);
    EXPECT_EQ(w.certificate.kernel_dim, 712u);
    EXPECT_EQ(w.certificate.component_dim, 710u);
    EXPECT_EQ(w.f.degree(), 3);
    EXPECT_THROW(detM_witness(collider_tail()), PreconditionFailed);
}
