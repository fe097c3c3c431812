#include "cli.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

using namespace r2r;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eigenvalue tables") {
    const Result r = run({"eigenvalues", "--n", "3", "--evaluation", "1,1,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "evaluation (1,1,1), dimension 6\n"
          "λ/μ            d^μ  K  multiplicity  C(|λ|+1,2)  C(|μ|+1,2)  diag(λ/μ)  eig(λ/μ)\n"
          "(3)/∅            1  1             1           6           0          3         9\n"
          "(2,1)/(1,1)      1  2             2           6           3          1         4\n"
          "(2,1)/(2,1)      1  2             2           6           6          0         0\n"
          "(1,1,1)/(1,1)    1  1             1           6           3         -2         1\n");

    const Result four = run({"eigenvalues", "--evaluation", "4"});
    REQUIRE(four.code == 0);
    CHECK(four.out.find("(4)/∅") != std::string::npos);
    CHECK(four.out.find("16\n") != std::string::npos);

    const Result all = run({"eigenvalues", "--n", "5"});
    REQUIRE(all.code == 0);
    CHECK(all.out == run({"eigenvalues", "--n", "5"}).out);
    CHECK(all.out.find("evaluation (1,1,1,1,1), dimension 120") != std::string::npos);

    const Result prob = run({"eigenvalues", "--evaluation", "2,2", "--probability", "--format", "csv"});
    REQUIRE(prob.code == 0);
    CHECK(prob.out.find("\"2,2\",\"3,1\",\"1,1\",1,1,1,10,3,3,10,5/8\n") != std::string::npos);
}

TEST_CASE("eigenvalue JSON carries a schema and matches the library") {
    const Result r = run({"eigenvalues", "--evaluation", "2,1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("schema") == "r2r.eigenvalues/1");
    CHECK(j.at("reports")[0] == to_json(spectrum_for_evaluation({2, 1, 1})));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    const Result bad = run({"eigenvalues", "--evaluation", "2,x"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("'x'") != std::string::npos);
    CHECK(run({"eigenvalues", "--n", "4", "--evaluation", "1,1"}).code == cli::kUsage);
    CHECK(run({"kernel", "--partition", "2,3"}).code == cli::kUsage);
    CHECK(run({"transition-matrix", "--shuffle", "riffle", "--evaluation", "2"}).code == cli::kUsage);
    CHECK(run({"laplacian", "--n", "2", "--r", "3"}).code == cli::kUsage);
    CHECK(run({"eigenvalues", "--format", "xml", "--n", "2"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("the brute-force cap comes from the environment") {
    CHECK(run({"verify", "--n", "7"}).code == cli::kUsage);
    ::setenv("R2R_MAX_N", "3", 1);
    CHECK(run({"transition-matrix", "--shuffle", "r2r", "--evaluation", "2,2"}).code == cli::kUsage);
    ::unsetenv("R2R_MAX_N");
    CHECK(run({"transition-matrix", "--shuffle", "r2r", "--evaluation", "2,2"}).code == cli::kOk);
}

TEST_CASE("eig-word") {
    const Result r = run({"eig-word", "234133134"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "w     234133134\n"
          "w'    4133134\n"
          "Q(w)  (6,2,1)\n"
          "Q(w') (5,1,1)\n"
          "eig   [45 + 12] − [28 + 7] = 22\n");
    CHECK(run({"eig-word", "111"}).out.find("= 9\n") != std::string::npos);
    CHECK(run({"eig-word", "1"}).out.find("= 1\n") != std::string::npos);
    CHECK(run({"eig-word", ""}).out == "w     ∅\neig   0\n");
    const Json j = Json::parse(run({"eig-word", "aab", "--format", "json"}).out);
    CHECK(j.at("schema") == "r2r.eig-word/1");
    CHECK(j.at("eig") == eig_word(parse_word("aab")));
}

TEST_CASE("transition-matrix") {
    const Result r = run({"transition-matrix", "--shuffle", "r2r", "--evaluation", "2,2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          R"({"entries":[[8,4,2,2,0,0],[4,4,3,3,2,0],[2,3,6,0,3,2],[2,3,0,6,3,2],[0,2,3,3,4,4],[0,0,2,2,4,8]],)"
          R"("evaluation":[2,2],"order":["1122","1212","2112","1221","2121","2211"],"scale":"1/16","schema":"r2r.transition-matrix/1","shuffle":"r2r"})"
          "\n");
    const Json t = Json::parse(run({"transition-matrix", "--shuffle", "r2t", "--evaluation", "2,2"}).out);
    CHECK(t.at("scale") == "1/4");
    CHECK(t.at("entries").dump() == "[[2,0,0,2,0,0],[1,1,0,1,1,0],[1,0,1,0,2,0],[0,2,0,1,0,1],[0,1,1,0,1,1],[0,0,2,0,0,2]]");
    const OperatorMatrix back = operator_matrix_from_json(t);
    CHECK(back.entries == operator_matrix(Shuffle::RandomToTop, {2, 2}).entries);

    const Result table = run({"transition-matrix", "--shuffle", "r2t", "--evaluation", "1,1", "--format", "table"});
    CHECK(table.out == "1/2 ×\n    12  21\n12   1   1\n21   1   1\n");
}

TEST_CASE("eigenbasis and kernel") {
    const Result r = run({"eigenbasis", "--partition", "3,2", "--verify"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("schema") == "r2r.eigenbasis/1");
    CHECK(j.at("dimension") == 5);
    std::multiset<std::int64_t> eigs;
    for (const auto& e : j.at("entries")) {
        const EigenbasisEntry entry = eigenbasis_entry_from_json(e);
        for (const auto& v : entry.vectors) {
            CHECK(random_to_random(v) == BigRational(entry.eigenvalue) * v);
            eigs.insert(entry.eigenvalue);
        }
    }
    CHECK(eigs == std::multiset<std::int64_t>{11, 7, 5, 0, 0});

    const Json m = Json::parse(run({"eigenbasis", "--evaluation", "2,2", "--verify"}).out);
    CHECK(m.at("dimension") == 6);
    CHECK(m.at("entries")[0].contains("embedding"));

    const Json k = Json::parse(run({"kernel", "--partition", "2,1"}).out);
    CHECK(k.at("dimension") == 1);
    CHECK(word_vector_from_json(k.at("vectors")[0]) == kernel_basis({2, 1})[0]);
    CHECK(run({"eigenbasis"}).code == cli::kUsage);
}

TEST_CASE("frobenius and laplacian") {
    CHECK(run({"frobenius", "--n", "6", "--eigenvalue", "9"}).out == "s[3,2,1] + 2*s[4,1,1] + 2*s[4,2]\n");
    CHECK(run({"frobenius", "--n", "3", "--eigenvalue", "5"}).out == "0\n");
    CHECK(run({"frobenius", "--n", "3", "--eigenvalue", "1", "--shuffle", "r2t"}).out == "s[1,1,1] + s[2,1]\n");
    const Json f = Json::parse(run({"frobenius", "--n", "4", "--eigenvalue", "0", "--format", "json"}).out);
    CHECK(schur_expansion_from_json(f.at("expansion")) == frobenius_of_eigenspace(4, 0));

    const Json l = Json::parse(run({"laplacian", "--n", "3", "--r", "3", "--spectrum"}).out);
    CHECK(l.at("integral") == true);
    std::uint64_t total = 0;
    for (const auto& e : l.at("spectrum")) total += e.at("multiplicity").get<std::uint64_t>();
    CHECK(total == 6);
    const Json lm = Json::parse(run({"laplacian", "--n", "1", "--r", "1"}).out);
    CHECK(lm.at("entries").dump() == "[[1]]");
}

TEST_CASE("verify") {
    const Result r = run({"verify", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    const Json j = Json::parse(run({"verify", "--n", "3", "--format", "json"}).out);
    CHECK(j.at("ok") == true);
}
