#include <gtest/gtest.h>

#include "twistrep/catalog.hpp"
#include "twistrep/modcat.hpp"

using namespace twistrep;

namespace {

GroupElt g(std::int64_t r) { return GroupElt{{r}}; }

GradedObject obj(const std::string& label, int dim, std::int64_t grade) { return {label, dim, g(grade)}; }

TwistedCategory z4_category(const AbelianCocycle& c) {
    const auto z4 = catalog::cyclic(4);
    std::vector<TwistedCategory::IrrepInput> irreps;
    for (const auto& r : z4.irreps) irreps.push_back({r.name, r.rep});
    return TwistedCategory(z4.group, c, CentralEmbedding{{2}}, irreps, true);
}

TwistedCategory s3_category() {
    const auto s3 = catalog::s3();
    std::vector<TwistedCategory::IrrepInput> irreps;
    for (const auto& r : s3.irreps) irreps.push_back({r.name, r.rep});
    return TwistedCategory(s3.group, AbelianCocycle::trivial(FinAbGroup::trivial()), CentralEmbedding{}, irreps, true);
}

AbelianCocycle corrupted_lattice() {
    // lattice Omega with F(1,1,1) reset to +1
    std::vector<RationalMod1> f(8), w(4);
    w[3] = RationalMod1(3, 4);
    return AbelianCocycle::unchecked(FinAbGroup::cyclic(2), f, w);
}

const AbelianCocycle lattice = AbelianCocycle::build_cyclic(2, 3);
const AbelianCocycle super = AbelianCocycle::build_cyclic(2, 2);
const AbelianCocycle trivial2 = AbelianCocycle::build_cyclic(2, 0);

}  // namespace

TEST(ModCat, AssociatorScalars) {
    const auto even = obj("E", 2, 0), odd = obj("O", 2, 1);
    EXPECT_EQ(associator(lattice, even, odd, odd).dense(), Matrix::Identity(8, 8));
    EXPECT_EQ(associator(lattice, odd, odd, odd).dense(), -Matrix::Identity(8, 8));
    EXPECT_EQ(associator(trivial2, odd, odd, odd).dense(), Matrix::Identity(8, 8));
    EXPECT_EQ(associator_inverse(lattice, odd, odd, odd).dense() * associator(lattice, odd, odd, odd).dense(),
              Matrix::Identity(8, 8));
}

TEST(ModCat, BraidingScalars) {
    const auto even = obj("E", 2, 0), odd = obj("O", 3, 1);
    const Matrix flip23 = SparseMatrix(sparse::flip(2, 3));
    EXPECT_EQ(braiding(lattice, even, odd).dense(), flip23);
    // Omega(1,1)^{-1} = (-i)^{-1} = i
    const auto odd2 = obj("O2", 2, 1);
    EXPECT_EQ(braiding(lattice, odd, odd2).dense(), cd(0, 1) * Matrix(SparseMatrix(sparse::flip(3, 2))));
    EXPECT_EQ(braiding(super, odd, odd2).dense(), -Matrix(SparseMatrix(sparse::flip(3, 2))));
    // flip sends coordinate (i, j) to (j, i)
    const Matrix f = SparseMatrix(sparse::flip(2, 3));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(f(j * 2 + i, i * 3 + j), cd(1, 0));
}

TEST(ModCat, RigidityData) {
    const auto even = obj("E", 3, 0), odd = obj("O", 2, 1);
    const Matrix ev0 = evaluation(lattice, even).dense();
    const Matrix coev0 = coevaluation(lattice, even).dense();
    EXPECT_EQ(ev0.rows(), 1);
    EXPECT_EQ(ev0.cols(), 9);
    EXPECT_EQ(coev0.cols(), 1);
    EXPECT_EQ(ev0.transpose(), coev0);  // plain pairing
    // F(1,-1,1)^{-1} = -1 scales the pairing of an odd object
    EXPECT_EQ(evaluation(lattice, odd).dense(), -Matrix(coevaluation(lattice, odd).dense()).transpose());
}

TEST(ModCat, TwistValues) {
    EXPECT_TRUE(twist(lattice, obj("E", 1, 0)).is_one());
    EXPECT_EQ(twist(lattice, obj("O", 1, 1)), UnitScalar(1, 4));
    EXPECT_EQ(twist(super, obj("O", 1, 1)), UnitScalar(1, 2));
}

TEST(ModCat, CategoricalTrace) {
    EXPECT_NEAR(std::abs(cat_dim(lattice, obj("1", 1, 0)) - cd(1, 0)), 0.0, 1e-12);
    for (const auto* c : {&lattice, &super, &trivial2})
        for (int d = 1; d <= 5; ++d)
            for (int a = 0; a < 2; ++a) {
                const auto m = obj("M", d, a);
                EXPECT_NEAR(std::abs(cat_dim(*c, m) - cd(d, 0)), 0.0, 1e-9);
                const cd lambda(0.3, -1.7);
                EXPECT_NEAR(std::abs(cat_trace(*c, m, Matrix(lambda * Matrix::Identity(d, d))) - lambda * double(d)), 0.0, 1e-9);
            }
    // trace of a non-scalar endomorphism is the ordinary trace here
    Matrix f(2, 2);
    f << 1, 2, 3, 4;
    EXPECT_NEAR(std::abs(cat_trace(lattice, obj("O", 2, 1), f) - cd(5, 0)), 0.0, 1e-12);
    EXPECT_THROW(cat_trace(lattice, obj("O", 3, 1), f), StructuralError);

    // closed form of the four arrows, written out from the tables
    const auto& A = lattice.group();
    for (const auto& a : A.elements()) {
        const auto na = A.neg(a);
        const cd closed = (lattice.Omega(a, a) * lattice.Omega(a, na) * lattice.F(a, na, a)).inverse().to_complex();
        EXPECT_NEAR(std::abs(cat_dim(lattice, GradedObject{"M", 1, a}) - closed), 0.0, 1e-12);
    }
}

TEST(ModCat, SEntries) {
    EXPECT_NEAR(std::abs(s_entry(lattice, obj("A", 2, 0), obj("B", 3, 0)) - cd(6, 0)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(s_entry(lattice, obj("V1", 2, 1), obj("V1", 2, 1)) - cd(-4, 0)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(s_entry(lattice, obj("V2", 3, 0), obj("V3", 4, 1)) - cd(12, 0)), 0.0, 1e-9);
    for (const auto* c : {&lattice, &super})
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const cd expected = double_braiding_scalar(*c, g(a), g(b)).to_complex() * 6.0;
                EXPECT_NEAR(std::abs(s_entry(*c, obj("M", 2, a), obj("N", 3, b)) - expected), 0.0, 1e-9);
            }
}

TEST(ModCat, CoherenceSuiteOrdinaryRepS3) {
    const auto C = s3_category();
    const auto report = C.coherence_suite();
    EXPECT_TRUE(report.passed()) << report.summary();
    EXPECT_EQ(report.find("pentagon")->checked, 81u);
}

TEST(ModCat, CoherenceSuiteLatticeOnZ4) {
    const auto C = z4_category(lattice);
    const auto report = C.coherence_suite();
    EXPECT_TRUE(report.passed()) << report.summary();
    EXPECT_EQ(report.find("hexagon1")->checked, 64u);
    EXPECT_TRUE(C.naturality_spotcheck(0).passed());
    EXPECT_EQ(C.catalog()[1].grade, g(1));
    EXPECT_EQ(C.catalog()[2].grade, g(0));
}

TEST(ModCat, CoherenceSuiteDetectsCorruptedCocycle) {
    const auto bad = corrupted_lattice();
    std::vector<GradedObject> objects{obj("V0", 1, 0), obj("V1", 2, 1), obj("V2", 3, 0)};
    const auto report = coherence_suite(bad, objects, 0);
    EXPECT_FALSE(report.passed());
    const auto* h1 = report.find("hexagon1");
    ASSERT_NE(h1, nullptr);
    EXPECT_FALSE(h1->passed());
    EXPECT_EQ(*h1->witness, "(V1, V1, V1)");
    EXPECT_TRUE(report.find("pentagon")->passed());
}

TEST(ModCat, DoubleBraidingAndBalancing) {
    for (const auto* c : {&lattice, &super}) {
        std::vector<GradedObject> objects{obj("1", 1, 0), obj("a", 2, 1), obj("b", 2, 0), obj("c", 3, 1)};
        const auto report = coherence_suite(*c, objects, 0);
        EXPECT_TRUE(report.passed()) << report.summary();
        for (const auto& m : objects)
            for (const auto& n : objects) {
                const Matrix rr = braiding(*c, n, m).dense() * braiding(*c, m, n).dense();
                const cd s = UnitScalar(c->bform(m.grade, n.grade)).inverse().to_complex();
                EXPECT_LE((rr - s * Matrix::Identity(rr.rows(), rr.cols())).cwiseAbs().maxCoeff(), 1e-9);
            }
    }
}

TEST(ModCat, DimensionCapSkipsLargeTuples) {
    std::vector<GradedObject> objects{obj("1", 1, 0), obj("big", 9, 1)};
    const auto report = coherence_suite(lattice, objects, 0, SuiteOptions{{}, 700});
    // 9^3 > 700: only quadruples with at most two copies of "big" run (1 + 4 + 6)
    EXPECT_EQ(report.find("pentagon")->checked, 11u);
    EXPECT_THROW(coherence_suite(lattice, objects, 1), StructuralError);
}
