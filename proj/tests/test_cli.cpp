#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "homops/cli.hpp"

using homops::cli::dispatch_table;
using homops::cli::DispatchEntry;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = homops::cli::run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group subcommands") {
    Run canon = run({"group", "canon", "Z/2 + Z/3"});
    CHECK(canon.code == 0);
    CHECK(canon.out == "Z/6\n");

    Run sum = run({"group", "sum", "Z/4", "Z/6"});
    CHECK(sum.code == 0);
    CHECK(sum.out == "Z/2 + Z/12\n");

    Run order = run({"group", "order", "Z + Z/2"});
    CHECK(order.out == "infinite\n");

    Run snf = run({"group", "snf", "--matrix", "[[2,4],[6,8]]"});
    CHECK(snf.out == "invariant factors: (2, 4)\n");

    Run coker = run({"group", "cokernel", "--matrix", "[[2,0,0],[0,4,0]]"});
    CHECK(coker.out == "Z + Z/2 + Z/4\n");
}

TEST_CASE("exit codes classify the failure") {
    CHECK(run({"group", "canon", "Z/1"}).code == 2);           // ValueError
    CHECK(run({"group", "canon", "wat"}).code == 2);           // ParseError
    CHECK(run({"group", "canon"}).code == 2);                  // missing argument
    CHECK(run({"nonsense"}).code == 2);                        // unknown subcommand
    CHECK(run({"moore", "decompose", "--a", "Z/2@4", "--b", "Z/2@5"}).code == 1);
    CHECK(run({"moore", "stem", "--g", "Z/5", "--k", "3", "--n", "9"}).code == 1);  // unknown
    CHECK(run({"ops", "neisendorfer", "--n", "2", "--direction", "to-moore"}).code == 1);
    CHECK(run({"group", "canon", "Z/2"}).code == 0);
}

TEST_CASE("domain errors are named data in json mode") {
    Run bad = run({"moore", "decompose", "--a", "Z/2@4", "--b", "Z/2@5", "--json"});
    CHECK(bad.code == 1);
    auto rep = nlohmann::ordered_json::parse(bad.out);
    CHECK(rep["error"]["kind"] == "Unsupported2Torsion");

    Run unknown = run({"moore", "pi", "--space", "Z/5@6", "--n", "9", "--coeff", "Z/5", "--json"});
    CHECK(unknown.code == 1);
    auto urep = nlohmann::ordered_json::parse(unknown.out);
    CHECK(urep.contains("unknown"));

    Run value = run({"group", "canon", "Z/1", "--json"});
    CHECK(value.code == 2);
    auto vrep = nlohmann::ordered_json::parse(value.out);
    CHECK(vrep["error"]["kind"] == "ValueError");
}

TEST_CASE("json reports round-trip through parse and re-render") {
    for (auto args : {std::vector<std::string>{"group", "canon", "Z^2 + Z/4 + Z/6", "--json"},
                      std::vector<std::string>{"functor", "tensor", "Z/4", "Z/6", "--json",
                                               "--oracle"},
                      std::vector<std::string>{"chain", "kunneth", "--g1", "Z/4", "--q1", "4",
                                               "--g2", "Z/6", "--q2", "5", "--json"},
                      std::vector<std::string>{"ops", "classify", "--type", "Z/3,Z/3,Z/3;4,4,7",
                                               "--json"},
                      std::vector<std::string>{"ops", "ext-enumerate", "--k", "3", "--q1", "3",
                                               "--q2", "4", "--json"},
                      std::vector<std::string>{"chain", "moore", "--g", "Z + Z/2", "--n", "5",
                                               "--json"}}) {
        std::ostringstream out, err;
        int code = homops::cli::run(args, out, err);
        CHECK(code == 0);
        auto parsed = nlohmann::ordered_json::parse(out.str());
        CHECK(parsed.dump(2) + "\n" == out.str());
    }
}

TEST_CASE("worked command examples") {
    Run torsion = run({"ops", "torsion-exists", "--m", "2", "--n", "2", "--q1", "4", "--q2", "4"});
    CHECK(torsion.code == 0);
    CHECK(torsion.out == "false\n");

    Run decompose = run({"moore", "decompose", "--a", "Z/3@4", "--b", "Z/3@4"});
    CHECK(decompose.out == "Z/3@8 | Z/3@9\n");

    Run count = run({"ops", "count-whitehead", "--g1", "Z/3", "--g2", "Z/3", "--q1", "4", "--q2",
                     "4"});
    CHECK(count.out == "3\n");

    Run sign = run({"ops", "sign", "--kind", "t", "--q1", "4", "--q2", "4"});
    CHECK(sign.out == "-1 (exponent 17)\n");

    Run bo = run({"ops", "bo", "--type", "Z/3,Z/3,Z/3;4,4,7"});
    CHECK(bo.out == "cardinality 9\n");

    Run pi = run({"moore", "pi", "--space", "Z/3@8", "--n", "8", "--coeff", "Z/3", "--json"});
    auto rep = nlohmann::ordered_json::parse(pi.out);
    CHECK(rep["uct"]["middle_cardinality"]["value"] == 3);

    Run maps_eval = run({"maps", "lambda", "--a", "a0", "--b", "b0", "--t", "0", "--u", "1/3",
                         "--json"});
    auto mrep = nlohmann::ordered_json::parse(maps_eval.out);
    CHECK(mrep["value"]["second"]["collapsed"] == true);
}

TEST_CASE("the stem table flag extends lookups") {
    // without the table stem 2 is unknown; the file from the data dir only
    // carries stem 1, so write a local extension
    std::string path = "test_stems_extension.txt";
    {
        std::ofstream f(path);
        f << "class=odd, stem=2, value=0, provenance=test extension\n";
    }
    Run without = run({"moore", "stem", "--g", "Z/9", "--k", "2", "--n", "8"});
    CHECK(without.code == 1);
    Run with = run({"moore", "stem", "--g", "Z/9", "--k", "2", "--n", "8", "--stem-table", path});
    CHECK(with.code == 0);
    CHECK(with.out == "0\n");
    std::remove(path.c_str());
}

TEST_CASE("every library operation is reachable from exactly one subcommand") {
    const std::set<std::pair<std::string, std::string>> expected{
        {"abgroup", "smith_normal_form"}, {"abgroup", "cokernel"},
        {"abgroup", "direct_sum"},        {"abgroup", "order"},
        {"functors", "tensor"},           {"functors", "tor"},
        {"functors", "hom"},              {"functors", "ext"},
        {"oracle", "oracle_hom_count"},   {"oracle", "oracle_ext"},
        {"oracle", "oracle_tensor"},      {"oracle", "oracle_tor"},
        {"chains", "moore_complex"},      {"chains", "tensor_complex"},
        {"chains", "homology"},           {"chains", "kunneth_check"},
        {"moorecalc", "smash_decompose"}, {"moorecalc", "stem"},
        {"moorecalc", "homotopy_with_coeffs"},
        {"opsclassify", "basic_range_check"}, {"opsclassify", "triviality_check"},
        {"opsclassify", "special_kind"},  {"opsclassify", "bo_group"},
        {"opsclassify", "count_special_ops"}, {"opsclassify", "torsion_exists"},
        {"opsclassify", "ext_ops_enumerate"}, {"opsclassify", "commutativity_sign"},
        {"opsclassify", "neisendorfer_shift"}, {"opsclassify", "classify"},
        {"pointmaps", "eval_lambda"},     {"pointmaps", "eval_phi"},
        {"pointmaps", "eval_sigma"},      {"pointmaps", "eval_mu_prime"},
        {"cli", "parse_group_expr"},      {"verify", "run_all"},
    };
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> subcommands;
    for (const DispatchEntry& e : dispatch_table()) {
        CHECK(seen.emplace(e.module, e.operation).second);  // unique operation
        subcommands.insert(e.subcommand);
    }
    CHECK(seen == expected);
    CHECK(subcommands.size() == dispatch_table().size());
}

TEST_CASE("help output works") {
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("group") != std::string::npos);
}
