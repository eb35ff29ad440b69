#include <gtest/gtest.h>

#include "twistrep/report.hpp"

using namespace twistrep;

namespace {

std::string fixture(const std::string& name) { return std::string(TWISTREP_FIXTURE_DIR) + "/" + name + ".json"; }

const std::vector<std::string> kValid = {"z2-lattice-on-z4", "super-on-z4", "s3-trivial-grading", "q8-z2", "su2-lattice"};

// Z/2 x Z/2 acting on four points, graded by itself with the bicharacter e(a1 b2 / 2).
const char* kKlein = R"({
  "schema": "twistrep-spec/1",
  "name": "klein",
  "grading": [2, 2],
  "cocycle": {"Omega": [
    {"at": [[1, 0], [0, 1]], "value": "1/2"}, {"at": [[1, 0], [1, 1]], "value": "1/2"},
    {"at": [[1, 1], [0, 1]], "value": "1/2"}, {"at": [[1, 1], [1, 1]], "value": "1/2"}]},
  "group": {"permutations": [[1, 0, 2, 3], [0, 1, 3, 2]]},
  "embedding": [[1, 0, 2, 3], [0, 1, 3, 2]],
  "irreps": [
    {"name": "++", "generators": [[[1]], [[1]]]},
    {"name": "-+", "generators": [[[-1]], [[1]]]},
    {"name": "+-", "generators": [[[1]], [[-1]]]},
    {"name": "--", "generators": [[[-1]], [[-1]]]}],
  "complete": true
})";

}  // namespace

TEST(Spec, ParseComplex) {
    EXPECT_EQ(parse_complex("1"), cd(1, 0));
    EXPECT_EQ(parse_complex("-0.5"), cd(-0.5, 0));
    EXPECT_EQ(parse_complex("i"), cd(0, 1));
    EXPECT_EQ(parse_complex("-i"), cd(0, -1));
    EXPECT_EQ(parse_complex("-2i"), cd(0, -2));
    EXPECT_EQ(parse_complex("0.5+0.5i"), cd(0.5, 0.5));
    EXPECT_EQ(parse_complex(" 1e-3 - 2i "), cd(1e-3, -2));
    EXPECT_EQ(parse_complex("2e+1+i"), cd(20, 1));
    EXPECT_EQ(parse_complex("e(1/4)"), cd(0, 1));
    EXPECT_EQ(parse_complex("e(1/2)"), cd(-1, 0));
    EXPECT_NEAR(std::abs(parse_complex("e(1/3)") - std::polar(1.0, 2 * std::numbers::pi / 3)), 0.0, 1e-15);
    for (const char* bad : {"", "x", "1+", "1..2", "e(1/0)", "2ii"}) EXPECT_THROW(parse_complex(bad), ParseError) << bad;
    EXPECT_EQ(parse_point("-0.5,0.5"), cd(-0.5, 0.5));
    EXPECT_EQ(parse_point("3"), cd(3, 0));
    EXPECT_THROW(parse_point("1,i"), ParseError);
}

TEST(Spec, RejectsMalformedDocuments) {
    EXPECT_THROW(parse_spec("{"), ParseError);
    EXPECT_THROW(parse_spec("[]"), ParseError);
    EXPECT_THROW(parse_spec(R"({"grading": [2]})"), ParseError);
    EXPECT_THROW(parse_spec(R"({"schema": "twistrep-spec/9", "grading": [2]})"), ParseError);
    const std::string head = R"({"schema": "twistrep-spec/1", "grading": [2], )";
    EXPECT_THROW(parse_spec(head + R"("cocycle": {"builder": "cyclic", "n": 3, "s": 0}, "su2": {"max_spin": 1}})"),
                 ParseError);
    EXPECT_THROW(parse_spec(head + R"("cocycle": {"builder": "magic"}, "su2": {"max_spin": 1}})"), ParseError);
    EXPECT_THROW(parse_spec(head + R"("cocycle": {"F": [{"at": [1, 1], "value": "1/2"}]}, "su2": {"max_spin": 1}})"),
                 ParseError);
    EXPECT_THROW(parse_spec(head + R"("cocycle": {"F": [{"at": [1, 1, 1], "value": "x"}]}, "su2": {"max_spin": 1}})"),
                 ParseError);
    EXPECT_THROW(parse_spec(head + R"("cocycle": {}, "group": {"builtin": "Z/2"}, "embedding": [1], "irreps": 7})"),
                 ParseError);
    EXPECT_THROW(parse_spec(head + R"("cocycle": {}, "group": {}, "embedding": [1], "irreps": []})"), ParseError);
    EXPECT_THROW(load_spec("/nonexistent/spec.json"), ParseError);
}

TEST(Spec, InvalidCocycleTablesAreRejectedOnLoad) {
    const std::string doc = R"({"schema": "twistrep-spec/1", "grading": [2],
        "cocycle": {"F": [{"at": [1, 1, 1], "value": "1/2"}]}, "su2": {"max_spin": 1}})";
    try {
        (void)parse_spec(doc);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_FALSE(e.report().passed());
    }
    EXPECT_THROW(parse_spec(R"({"schema": "twistrep-spec/1", "grading": [3],
        "cocycle": {"builder": "cyclic", "n": 3, "s": 1}, "group": {"builtin": "Z/3"}, "embedding": [1],
        "irreps": "builtin"})"),
                 ValidationError);
}

TEST(Spec, TableCocycleMatchesBuilder) {
    const auto spec = parse_spec(R"({"schema": "twistrep-spec/1", "grading": [2],
        "cocycle": {"F": [{"at": [1, 1, 1], "value": "1/2"}], "Omega": [{"at": [1, 1], "value": "3/4"}]},
        "su2": {"max_spin": 2}})");
    const auto built = AbelianCocycle::build_cyclic(2, 3);
    for (const auto& a : built.group().elements())
        for (const auto& b : built.group().elements()) {
            EXPECT_EQ(spec.cocycle.Omega(a, b), built.Omega(a, b));
            for (const auto& c : built.group().elements()) EXPECT_EQ(spec.cocycle.F(a, b, c), built.F(a, b, c));
        }
    EXPECT_TRUE(spec.su2_mode());
    EXPECT_EQ(spec.su2_objects().size(), 3u);
}

TEST(Spec, FixturesLoad) {
    for (const auto& name : kValid) {
        const auto spec = load_spec(fixture(name));
        EXPECT_EQ(spec.name, name);
        EXPECT_EQ(spec.digest.size(), 64u);
        if (!spec.su2_mode()) EXPECT_NO_THROW((void)spec.category(true)) << name;
    }
    const auto s3 = load_spec(fixture("s3-trivial-grading")).category(true);
    EXPECT_EQ(s3.group().order(), 6);
    std::vector<int> dims;
    for (const auto& m : s3.catalog()) dims.push_back(m.dim());
    EXPECT_EQ(dims, (std::vector<int>{1, 1, 2}));
    const auto q8 = load_spec(fixture("q8-z2")).category(true);
    for (const auto& m : q8.catalog()) EXPECT_EQ(m.grade.residues[0], m.dim() == 2 ? 1 : 0) << m.name;
    const auto bad = load_spec(fixture("z2-lattice-corrupt"));
    EXPECT_FALSE(bad.cocycle_checked_on_load);
    EXPECT_FALSE(validate_cocycle(bad.cocycle).passed());
}

TEST(Spec, MultiFactorGradingAndPermutationEmbedding) {
    const auto spec = parse_spec(kKlein);
    const auto C = spec.category(true);
    EXPECT_TRUE(validate_cocycle(C.cocycle()).passed());
    std::vector<std::string> grades;
    for (const auto& m : C.catalog()) grades.push_back(m.grade.str());
    EXPECT_EQ(grades, (std::vector<std::string>{"(0,0)", "(1,0)", "(0,1)", "(1,1)"}));
    EXPECT_TRUE(C.coherence_suite().passed());
    EXPECT_EQ(group_order_identity(C), 4);
}

TEST(Commands, VerifyFixtures) {
    for (const auto& name : kValid) {
        const auto r = cmd_verify(fixture(name));
        EXPECT_EQ(r.exit_code, kExitOk) << r.human();
        EXPECT_TRUE(r.find("cocycle.pentagon"));
        EXPECT_TRUE(r.find("coherence.hexagon2"));
    }
    const auto z4 = cmd_verify(fixture("z2-lattice-on-z4"));
    EXPECT_EQ(z4.tables.at("group_order"), 4);
}

TEST(Commands, VerifyCorruptedCocycle) {
    const auto r = cmd_verify(fixture("z2-lattice-corrupt"));
    EXPECT_EQ(r.exit_code, kExitValidation);
    const auto* hex = r.find("cocycle.hexagon1");
    ASSERT_TRUE(hex);
    EXPECT_FALSE(hex->passed);
    EXPECT_EQ(hex->witness, "(1, 1, 1)");
    EXPECT_FALSE(r.find("coherence.hexagon1")->passed);
    EXPECT_NE(r.human().find("witness (1, 1, 1)"), std::string::npos);
}

TEST(Commands, VerifyEmptyCatalog) {
    const auto r = cmd_verify(fixture("empty-catalog"));
    EXPECT_EQ(r.exit_code, kExitValidation);
    const auto* v = r.find("irreps.catalog-completeness");
    ASSERT_TRUE(v);
    EXPECT_FALSE(v->passed);
    EXPECT_NE(v->witness->find("0"), std::string::npos);
}

TEST(Commands, ExitCodes) {
    EXPECT_EQ(cmd_verify("/nonexistent.json").exit_code, kExitParse);
    EXPECT_EQ(cmd_fusion(fixture("empty-catalog")).exit_code, kExitValidation);
    const auto r = guarded("t", 0, [](Report&) { throw ConsistencyError("x"); });
    EXPECT_EQ(r.exit_code, kExitInconsistent);
    EXPECT_EQ(guarded("t", 0, [](Report&) { throw NumericalError("x"); }).exit_code, kExitInconsistent);
    EXPECT_EQ(guarded("t", 0, [](Report&) { throw GradingError("x"); }).exit_code, kExitValidation);
    EXPECT_EQ(guarded("t", 0, [](Report& rr) { rr.verdicts.push_back(Verdict::single("v", false)); }).exit_code,
              kExitValidation);
}

TEST(Commands, Determinism) {
    for (const auto& name : kValid) {
        const auto a = cmd_verify(fixture(name), RunOptions{.seed = 7});
        const auto b = cmd_verify(fixture(name), RunOptions{.seed = 7});
        EXPECT_EQ(a.machine(), b.machine());
        EXPECT_EQ(a.to_json().at("seed"), 7);
    }
}

TEST(Commands, HumanAndMachineVerdictsAgree) {
    for (const auto& name : {"q8-z2", "z2-lattice-corrupt"}) {
        const auto r = cmd_verify(fixture(name));
        const auto j = r.to_json();
        const auto text = r.human();
        for (const auto& v : j.at("verdicts")) {
            const std::string line = (v.at("passed").get<bool>() ? "PASS " : "FAIL ") + v.at("name").get<std::string>() + " (";
            EXPECT_NE(text.find(line), std::string::npos) << line;
        }
        for (const char* key : {"schema_version", "spec_digest", "verdicts", "tables", "seed"}) EXPECT_TRUE(j.contains(key));
    }
}

TEST(Commands, FusionTables) {
    const auto r = cmd_fusion(fixture("s3-trivial-grading"));
    ASSERT_EQ(r.exit_code, kExitOk) << r.human();
    EXPECT_EQ(r.tables.at("fusion").at("coefficients")[2][2], Report::json::array({1, 1, 1}));
    EXPECT_TRUE(r.find("fusion.projector-agreement")->passed);
    const auto su2 = cmd_fusion(fixture("su2-lattice"));
    ASSERT_EQ(su2.exit_code, kExitOk);
    const auto& products = su2.tables.at("fusion").at("products");
    EXPECT_EQ(products.size(), 49u);
    EXPECT_EQ(products[2 * 7 + 3].at("spins"), Report::json::array({1, 3, 5}));
}

TEST(Commands, SMatrix) {
    const auto su2 = cmd_smatrix_su2(3, 3);
    ASSERT_EQ(su2.exit_code, kExitOk);
    EXPECT_EQ(su2.tables.at("smatrix").at("entries"),
              Report::json::parse("[[1,2,3,4],[2,-4,6,-8],[3,6,9,12],[4,-8,12,-16]]"));
    const auto triv = cmd_smatrix_su2(3, 0);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) EXPECT_EQ(triv.tables.at("smatrix").at("entries")[m][n], (m + 1) * (n + 1));
    const auto q8 = cmd_smatrix(fixture("q8-z2"));
    ASSERT_EQ(q8.exit_code, kExitOk);
    EXPECT_EQ(q8.tables.at("smatrix").at("exact")[4][4], "e(1/2)*4");
    EXPECT_DOUBLE_EQ(q8.tables.at("smatrix").at("re")[4][4].get<double>(), -4.0);
    EXPECT_EQ(cmd_smatrix(fixture("su2-lattice")).tables.at("smatrix").at("entries")[3][5], -24);
}

TEST(Commands, Monodromy) {
    const auto lattice = fixture("z2-lattice-on-z4");
    const auto real = cmd_monodromy(lattice, {.z1 = cd(3, 0), .z2 = cd(2, 0), .grades = {"1", "1", "1"}});
    ASSERT_EQ(real.exit_code, kExitOk) << real.human();
    EXPECT_EQ(real.tables.at("assoc").at("p12"), 0);
    EXPECT_EQ(real.tables.at("assoc").at("assoc_exponent"), "1/2");
    const auto wound = cmd_monodromy(lattice, {.z1 = cd(1, 0), .z2 = cd(-0.5, 0.5)});
    EXPECT_EQ(wound.tables.at("assoc").at("p12"), 1);
    const auto loop = cmd_monodromy(lattice, {.clockwise_loop = true, .grades = {"1", "1"}});
    EXPECT_EQ(loop.tables.at("transport").at("exponent"), "1/2");
    EXPECT_EQ(loop.tables.at("transport").at("winding"), 1);
    EXPECT_TRUE(loop.find("monodromy.loop-identity")->passed);
    const auto super = cmd_monodromy(fixture("super-on-z4"), {.clockwise_loop = true, .grades = {"1", "1"}});
    EXPECT_EQ(super.tables.at("transport").at("exponent"), "0");
    const auto outside = cmd_monodromy(lattice, {.z1 = cd(3, 0), .z2 = cd(1, 0), .grades = {"1", "1", "1"}});
    EXPECT_EQ(outside.exit_code, kExitValidation);
    EXPECT_NE(outside.find("monodromy.region")->detail.find("|z2| > |z1-z2|"), std::string::npos);
    EXPECT_EQ(cmd_monodromy(lattice, {.z1 = cd(3, 0), .grades = {"1", "1", "1"}}).exit_code, kExitParse);
    EXPECT_EQ(cmd_monodromy(lattice, {.clockwise_loop = true, .grades = {"7,1"}}).exit_code, kExitParse);
    EXPECT_EQ(parse_grade_text(FinAbGroup({2, 3}), "(1, 5)").str(), "(1,2)");
}
