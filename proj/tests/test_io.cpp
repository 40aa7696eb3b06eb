#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qtlift/io.hpp"
#include "qtlift/pipeline.hpp"
#include "support.hpp"

using namespace qtlift;
using namespace qtlift::testing;
using nlohmann::json;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(QTLIFT_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Io, ParsesSl2Document) {
    const LieBialgebra lb = parse_input(read_data("sl2.json"));
    EXPECT_EQ(lb, sl2_standard());
}

TEST(Io, SerializationRoundTrip) {
    for (const LieBialgebra& lb : {sl2_standard(), b2_jordanian(), sl2_h_e()}) {
        const json doc = serialize_input(lb);
        EXPECT_EQ(parse_input_json(doc), lb);
        EXPECT_EQ(parse_input(doc.dump()), lb);
    }
}

TEST(Io, CompletesAntisymmetryAndRejectsConflicts) {
    const std::string one_sided = R"({"dim":2,"bracket":[[1,2,2,1,1]],"r":[]})";
    const LieBialgebra lb = parse_input(one_sided);
    EXPECT_EQ(lb.bracket()(1, 0, 1), -1);
    EXPECT_EQ(lb.basis_names(), (std::vector<std::string>{"e1", "e2"}));
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[[1,2,2,1,1],[2,1,2,1,1]],"r":[]})"), InputError);
    EXPECT_NO_THROW(parse_input(R"({"dim":2,"bracket":[[1,2,2,1,1],[2,1,2,-1,1]],"r":[]})"));
}

TEST(Io, RejectsMalformedInput) {
    EXPECT_THROW(parse_input("{"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":0,"bracket":[],"r":[]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":11,"bracket":[],"r":[]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[[1,3,1,1,1]],"r":[]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[[1,1,2,1,1]],"r":[]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[],"r":[[1,1,0.5,1]]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[],"r":[[1,1,"0.5","1"]]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"bracket":[],"r":[[1,1,1,0]]})"), InputError);
    EXPECT_THROW(parse_input(R"({"dim":2,"basis":["a"],"bracket":[],"r":[]})"), InputError);
}

TEST(Io, ElementRoundTrip) {
    TruncatedElement f(2, 2, 4);
    f.add_term(Monomial::from_exponents(std::vector<int>{1, 0, 0, 2}), ratio(-3, 7));
    f.add_term(Monomial::from_exponents(std::vector<int>{0, 1, 1, 0}), 5);
    const json j = element_to_json(f);
    ASSERT_EQ(j.size(), 2U);
    EXPECT_EQ(j[0]["coeff"], "5/1");
    EXPECT_EQ(element_from_json(j, 2, 2, 4), f);
}

TEST(Pipeline, Sl2JobSucceeds) {
    JobConfig cfg;
    cfg.input_text = read_data("sl2.json");
    cfg.degree = 4;
    cfg.emit = {"lift", "braiding", "report", "audit"};
    cfg.seed_check = 7;
    const JobResult res = run_job(cfg);
    EXPECT_EQ(res.exit_code, kExitOk) << res.output.dump(2);
    const json& rep = res.output["report"];
    EXPECT_TRUE(rep["passed"].get<bool>());
    EXPECT_TRUE(rep["wx_agreement"]["passed"].get<bool>());
    EXPECT_TRUE(rep["seed_check"]["passed"].get<bool>());
    EXPECT_TRUE(rep["qt_defect"]["passed"].get<bool>());
    EXPECT_TRUE(res.output.contains("braiding"));
    EXPECT_EQ(res.output["audit"].size(), 2U);
}

TEST(Pipeline, DeterministicOutput) {
    JobConfig cfg;
    cfg.input_text = read_data("b2_jordanian.json");
    cfg.degree = 5;
    EXPECT_EQ(run_job(cfg).output.dump(), run_job(cfg).output.dump());
}

TEST(Pipeline, ExitCodes) {
    JobConfig cfg;
    cfg.input_text = read_data("sl2_not_cybe.json");
    cfg.degree = 4;
    const JobResult gate = run_job(cfg);
    EXPECT_EQ(gate.exit_code, kExitAxiomFailure);
    EXPECT_EQ(gate.output["error"]["kind"], "axiom_failure");
    cfg.skip_validation = true;
    const JobResult skipped = run_job(cfg);
    EXPECT_EQ(skipped.exit_code, kExitInternal);
    EXPECT_EQ(skipped.output["error"]["kind"], "cocycle_condition");
    cfg.input_text = "not json";
    EXPECT_EQ(run_job(cfg).exit_code, kExitInputError);
    cfg.input_text = read_data("sl2.json");
    cfg.degree = 1;
    EXPECT_EQ(run_job(cfg).exit_code, kExitInputError);
}

TEST(Pipeline, EmitList) {
    EXPECT_EQ(parse_emit_list("lift,report"), (std::set<std::string>{"lift", "report"}));
    EXPECT_THROW(parse_emit_list("lift,bogus"), InputError);
}
