/*
   Copyright 2026 The formclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Golden tests that drive the formclass binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <set>
#include <string>

namespace {

using nlohmann::json;

struct Result {
  int exit_code = -1;
  std::string out;
};

std::string fixture(const std::string& name) { return std::string(FORMCLASS_FIXTURE_DIR) + "/" + name; }

/// Runs the CLI with stderr discarded.
Result run(const std::string& args) {
  const std::string cmd = std::string(FORMCLASS_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& command, const std::string& file, const std::string& args) {
  const Result r = run(command + " --input " + fixture(file) + " " + args);
  EXPECT_EQ(r.exit_code, 0) << command << " " << file << " " << args;
  return r.exit_code == 0 ? json::parse(r.out) : json();
}

std::set<int> classes(const json& v) { return v.get<std::set<int>>(); }

TEST(Golden, ClassDropScan) {
  const json r = run_json("scan", "doublet_class_drop_r3.json", "--form tau --omega omega");
  EXPECT_EQ(classes(r["summary"]["classes"]), (std::set<int>{2, 3}));
  EXPECT_FALSE(r["summary"]["constant_on_samples"].get<bool>());
  EXPECT_EQ(r["summary"]["scope"], "sampled points");
  for (const auto& p : r["points"]) EXPECT_EQ(p["class"].get<int>(), p["point"]["z"] == "0" ? 2 : 3);
  EXPECT_EQ(r["command"], "scan");
  EXPECT_EQ(r["schema_version"], "1");
}

TEST(Golden, ConstantClassDespiteVanishingTau) {
  const json r = run_json("scan", "doublet_constant_r2.json", "--form tau --omega omega");
  EXPECT_EQ(classes(r["summary"]["classes"]), (std::set<int>{2}));
  EXPECT_TRUE(r["summary"]["constant_on_samples"].get<bool>());
  EXPECT_TRUE(r["summary"]["tau_vanishes_somewhere"].get<bool>());
}

TEST(Golden, PrecosymplecticWitnesses) {
  const json odd = run_json("classify-point", "precosymplectic_r4.json", "--form tau --omega omega1 --point x=0,y=1,z=0,t=0");
  EXPECT_EQ(odd["class"], 3);
  EXPECT_EQ(odd["reeb"]["particular"], json({"0", "0", "0", "1"}));
  EXPECT_EQ(odd["reeb"]["freedom"]["dim"], 1);
  const json even = run_json("classify-point", "precosymplectic_r4.json", "--form tau --omega omega2 --point x=0,y=1,z=0,t=0");
  EXPECT_EQ(even["class"], 2);
  EXPECT_EQ(even["liouville"]["particular"], json({"1", "0", "0", "0"}));
  EXPECT_EQ(even["liouville"]["freedom"]["dim"], 2);
  EXPECT_TRUE(even["criteria"]["criteria_agree"].get<bool>());
}

TEST(Golden, Cosymplectic) {
  const json r = run_json("scan", "cosymplectic_r3.json", "--form tau --omega omega");
  EXPECT_EQ(classes(r["summary"]["classes"]), (std::set<int>{3}));
}

TEST(Golden, NonConstantPrecontact) {
  const json r = run_json("precontact", "precontact_nonconstant_r3.json", "--form eta");
  EXPECT_EQ(classes(r["summary"]["class_values"]), (std::set<int>{1, 2}));
  EXPECT_FALSE(r["summary"]["precontact_on_samples"].get<bool>());
  EXPECT_EQ(r["summary"]["darboux_family"], "not_constant");
}

TEST(Golden, SevenDimensionalPrecontact) {
  const json r = run_json("precontact", "precontact_even_r7.json", "--form eta");
  EXPECT_EQ(classes(r["summary"]["class_values"]), (std::set<int>{6}));
  EXPECT_EQ(r["summary"]["parity"], "even");
  EXPECT_EQ(r["summary"]["r"], 2);
  EXPECT_TRUE(r["summary"]["precontact_on_samples"].get<bool>());
}

TEST(Golden, ContactFixture) {
  const json pre = run_json("precontact", "contact_r3.json", "--form eta");
  EXPECT_EQ(pre["summary"]["darboux_family"], "odd_model");
  EXPECT_TRUE(pre["summary"]["model"]["equals_input"].get<bool>());
  const json ham = run_json("hamiltonian", "contact_r3.json", "--form eta --function H --scale g");
  EXPECT_EQ(ham["summary"]["consistent_points"], ham["summary"]["sample_count"]);
  EXPECT_TRUE(ham["conformal_equivalence"]["equivalent_everywhere"].get<bool>());
  EXPECT_TRUE(ham["conformal_equivalence"]["mismatch_confirmed"].get<bool>());
  const json sym = run_json("presymplectize", "contact_r3.json", "--form eta");
  EXPECT_EQ(classes(sym["summary"]["classes"]), (std::set<int>{4}));
  EXPECT_TRUE(sym["summary"]["liouville_identity"].get<bool>());
  EXPECT_EQ(sym["coordinates"], json({"q", "p", "s", "z"}));
  const json odd = run_json("odd-preserve", "contact_r3.json", "--form eta --function f");
  EXPECT_TRUE(odd["summary"]["holds"].get<bool>());
}

TEST(Golden, OddPrecontactHamiltonian) {
  const json r = run_json("hamiltonian", "odd_precontact_r4.json", "--form eta --function H");
  EXPECT_LT(r["summary"]["consistent_points"].get<int>(), r["summary"]["sample_count"].get<int>());
  EXPECT_TRUE(r["summary"]["consistency_implies_necessary_conditions"].get<bool>());
  for (const auto& p : r["points"]) EXPECT_EQ(p["consistent"].get<bool>(), p["point"]["q"] == "0");
  const json involutive = run_json("involutive", "odd_precontact_r4.json", "--fields gamma");
  EXPECT_TRUE(involutive["summary"]["involutive"].get<bool>());
}

TEST(Golden, ConformalSplit) {
  const json r = run_json("conformal", "conformal_parity_r4.json", "--form tau --omega omega --function f");
  EXPECT_EQ(classes(r["summary"]["classes"]), (std::set<int>{3, 4}));
  for (const auto& p : r["points"]) EXPECT_EQ(p["class"].get<int>(), p["point"]["t"] == "0" ? 3 : 4);
  const json lemma = run_json("lemma62", "conformal_parity_r4.json", "--form tau --omega omega --function f");
  EXPECT_TRUE(lemma["summary"]["holds"].get<bool>());
  EXPECT_EQ(lemma["identity_holds"].size(), 3u);
  const json one = run_json("lemma62", "conformal_parity_r4.json", "--form tau --omega omega --function f --n 2");
  EXPECT_EQ(one["identity_holds"].size(), 1u);
}

TEST(Golden, NoSolutionExample) {
  const json r = run_json("parity-change", "no_solution_r4.json", "--form tau --omega omega --function f");
  EXPECT_FALSE(r["summary"]["holds"].get<bool>());
  const json& s = r["sufficient_conditions"];
  EXPECT_TRUE(s["available"].get<bool>());
  EXPECT_FALSE(s["holds"].get<bool>());
  EXPECT_FALSE(s["kernel_involutive"].get<bool>());
  const json base = run_json("scan", "no_solution_r4.json", "--form tau --omega omega");
  EXPECT_EQ(classes(base["summary"]["classes"]), (std::set<int>{2}));
  const json inv = run_json("involutive", "no_solution_r4.json", "--fields gamma_x,gamma_y");
  EXPECT_FALSE(inv["summary"]["involutive"].get<bool>());
}

TEST(Golden, FinalExample) {
  const json r = run_json("parity-change", "parity_change_r3.json", "--form eta --function f");
  EXPECT_TRUE(r["summary"]["holds"].get<bool>());
  EXPECT_EQ(classes(r["summary"]["conformal_classes"]), (std::set<int>{1}));
  EXPECT_TRUE(r["sufficient_conditions"]["holds"].get<bool>());
  const json c = run_json("parity-change", "parity_change_r3.json", "--form eta --function c");
  EXPECT_FALSE(c["summary"]["holds"].get<bool>());
}

TEST(Golden, PrecosymplecticOddPreservation) {
  EXPECT_TRUE(run_json("odd-preserve", "precosymplectic_r4.json", "--form tau --omega omega1 --function f_t")["summary"]["holds"]
                  .get<bool>());
  EXPECT_FALSE(run_json("odd-preserve", "precosymplectic_r4.json", "--form tau --omega omega1 --function f_x")["summary"]["holds"]
                   .get<bool>());
  const json inv = run_json("involutive", "precosymplectic_r4.json", "--omega omega1");
  EXPECT_TRUE(inv["summary"]["involutive"].get<bool>());
}

TEST(Golden, PrimaryConstraints) {
  const json none = run_json("constraints", "presymplectic_constraints_r3.json", "--omega omega --function H_z");
  EXPECT_EQ(none["summary"]["constraint_points"], 0);
  const json all = run_json("constraints", "presymplectic_constraints_r3.json", "--omega omega --function H_x");
  EXPECT_EQ(all["summary"]["constraint_points"], all["summary"]["sample_count"]);
  const json sym = run_json("constraints", "symplectic_r2.json", "--omega omega --function H");
  EXPECT_EQ(sym["summary"]["constraint_points"], sym["summary"]["sample_count"]);
  const json lcs = run_json("scan", "symplectic_r2.json", "--form theta --omega omega");
  EXPECT_EQ(classes(lcs["summary"]["classes"]), (std::set<int>{2}));
}

TEST(Golden, EveryFixtureIsExercised) {
  // Keep in step with the golden tests above.
  const std::set<std::string> covered{"doublet_class_drop_r3.json", "doublet_constant_r2.json", "precosymplectic_r4.json",
                                      "cosymplectic_r3.json", "precontact_nonconstant_r3.json", "precontact_even_r7.json",
                                      "contact_r3.json", "odd_precontact_r4.json", "conformal_parity_r4.json",
                                      "no_solution_r4.json", "parity_change_r3.json", "presymplectic_constraints_r3.json",
                                      "symplectic_r2.json"};
  for (const auto& entry : std::filesystem::directory_iterator(FORMCLASS_FIXTURE_DIR))
    EXPECT_TRUE(covered.contains(entry.path().filename().string())) << entry.path();
}

TEST(Cli, Deterministic) {
  const std::string args = "parity-change --input " + fixture("no_solution_r4.json") + " --form tau --omega omega --function f";
  const Result a = run(args), b = run(args);
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SortedKeys) {
  const Result r = run("scan --input " + fixture("doublet_constant_r2.json") + " --form tau --omega omega");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LT(r.out.find("\"arguments\""), r.out.find("\"command\""));
  EXPECT_LT(r.out.find("\"command\""), r.out.find("\"points\""));
  EXPECT_LT(r.out.find("\"points\""), r.out.find("\"schema_version\""));
}

TEST(Cli, TextFormat) {
  const Result r = run("scan --input " + fixture("doublet_constant_r2.json") + " --form tau --omega omega --format text");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("summary.classes: [2]"), std::string::npos) << r.out;
}

TEST(Cli, VerdictsExitZero) {
  // "not precontact" is a result, not a failure.
  EXPECT_EQ(run("precontact --input " + fixture("precontact_nonconstant_r3.json") + " --form eta").exit_code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  const std::string contact = fixture("contact_r3.json");
  for (const std::string& args : std::vector<std::string>{
           "scan --input " + contact + " --form nope",
           "scan --input " + contact,
           "scan --form eta",
           "frobnicate --input " + contact,
           "scan --input /nonexistent.json --form eta",
           "classify-point --input " + contact + " --form eta --point q=1",
           "conformal --input " + contact + " --form eta --function nope",
           "hamiltonian --input " + contact + " --form eta --function H --scale f",
           "parity-change --input " + contact + " --form eta --function f",
           "scan --input " + contact + " --form eta --format yaml",
           "lemma62 --input " + contact + " --form eta --function f --n 0",
           "involutive --input " + contact,
       })
    EXPECT_EQ(run(args).exit_code, 2) << args;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").exit_code, 0); }

}  // namespace
