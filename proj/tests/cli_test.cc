#include "orderdim/cli.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "orderdim/json_io.hpp"
#include "test_support.hpp"

namespace orderdim {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

Json error_json(const Outcome& r) {
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  return Json::parse(r.err);
}

TEST(Cli, crown_piped_into_dim) {
  for (std::size_t n : {2, 3}) {
    const Outcome gen = run({"gen", "crown", "--n", std::to_string(n)});
    ASSERT_EQ(gen.code, 0);
    const Outcome dim = run({"dim"}, gen.out);
    ASSERT_EQ(dim.code, 0) << dim.err;
    const Json j = Json::parse(dim.out);
    EXPECT_EQ(j["dim"], n);
    const FinitePoset p = crown(n);
    RealizerTuple t;
    for (const Json& o : j["witness"]) t.push_back(order_from_json(p, o));
    EXPECT_TRUE(::orderdim::testing::naive_realizes(p, t));
  }
}

TEST(Cli, empty_sample) {
  const Outcome r = run({"gen", "sample", "--n", "2", "--count", "0"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_TRUE(j["points"].empty());
}

TEST(Cli, ramsey_number_pigeonhole) {
  const Outcome r = run({"ramsey", "number", "--k", "2", "--l", "1", "--m", "2", "--n", "1", "--rmax", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["number"], 3);
  const Outcome none = run({"ramsey", "number", "--k", "2", "--l", "1", "--m", "2", "--n", "1", "--rmax", "2"});
  EXPECT_TRUE(Json::parse(none.out)["number"].is_null());
}

TEST(Cli, gen_output_round_trips) {
  for (std::uint64_t seed : {0, 1, 7}) {
    const Outcome r = run({"gen", "sample", "--n", "3", "--count", "9", "--seed", std::to_string(seed)});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    const PointCloud c = cloud_from_json(j);
    EXPECT_EQ(c.points(), sample_dn(3, 9, seed).points());
    EXPECT_EQ(cloud_to_json(c).dump(2) + "\n", r.out);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t a = 0; a < 3; ++a)
        EXPECT_EQ(parse_rational(j["points"][i][a].get<std::string>()), c.point(i)[a]);
  }
  const Outcome sym = run({"gen", "sample", "--n", "2", "--count", "6", "--symmetric", "--seed", "3"});
  ASSERT_EQ(sym.code, 0);
  EXPECT_EQ(cloud_to_json(cloud_from_json(Json::parse(sym.out))).dump(2) + "\n", sym.out);

  const Outcome cr = run({"gen", "crown", "--n", "4"});
  EXPECT_EQ(poset_from_json(Json::parse(cr.out)), crown(4));
  const Outcome gr = run({"gen", "grid", "--m", "3", "--n", "2"});
  const OrderedStructure g = structure_from_json(Json::parse(gr.out));
  const GridStruct grid(3, 2);
  EXPECT_EQ(g.poset(), grid.structure().poset());
  EXPECT_EQ(g.realizers(), grid.structure().realizers());
}

TEST(Cli, structure_without_lt_uses_intersection) {
  const Json j = Json::parse(R"({"elements":["a","b","c"],"realizers":[["a","b","c"],["b","a","c"]]})");
  const OrderedStructure s = structure_from_json(j);
  EXPECT_TRUE(s.poset().less(0, 2));
  EXPECT_TRUE(s.poset().less(1, 2));
  EXPECT_FALSE(s.poset().comparable(0, 1));
}

TEST(Cli, dot_has_exactly_the_covers) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const FinitePoset p = ::orderdim::testing::random_poset(2 + trial % 7, 0.4, rng);
    const Outcome r = run({"export", "dot"}, poset_to_json(p).dump());
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rankdir=BT"), std::string::npos);

    std::set<std::pair<std::string, std::string>> edges;
    const std::regex edge("\"([^\"]*)\" -> \"([^\"]*)\"");
    for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), edge); it != std::sregex_iterator(); ++it)
      edges.emplace((*it)[1], (*it)[2]);

    std::set<std::pair<std::string, std::string>> covers;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (!p.relation()(a, b)) continue;
        bool between = false;
        for (std::size_t c = 0; c < p.size(); ++c)
          between = between || (p.relation()(a, c) && p.relation()(c, b));
        if (!between) covers.emplace(p.label(a), p.label(b));
      }
    EXPECT_EQ(edges, covers);
  }
}

TEST(Cli, output_is_deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "sample", "--n", "2", "--count", "12", "--seed", "5"},
      {"certify", "twohom", "--seed", "2"},
      {"certify", "ap"},
  };
  for (const auto& c : commands) {
    const Outcome a = run(c), b = run(c);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_NE(run({"gen", "sample", "--n", "2", "--count", "3", "--seed", "1"}).out,
            run({"gen", "sample", "--n", "2", "--count", "3", "--seed", "2"}).out);
  EXPECT_EQ(run({"gen", "sample", "--n", "2", "--count", "3"}).out,
            run({"gen", "sample", "--n", "2", "--count", "3", "--seed", "0"}).out);
}

TEST(Cli, out_flag_writes_file) {
  const std::string path = ::testing::TempDir() + "crown.json";
  const Outcome r = run({"gen", "crown", "--n", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, run({"gen", "crown", "--n", "3"}).out);
}

TEST(Cli, library_errors_are_one_json_line) {
  EXPECT_EQ(error_json(run({"dim"}, "not json"))["error"], "ParseError");
  EXPECT_EQ(error_json(run({"dim"}, R"({"elements":["a","a"],"lt":[[false,false],[false,false]]})"))["error"],
            "DuplicateLabel");
  const Json cyc = error_json(run({"dim"}, R"({"elements":["a","b"],"lt":[[false,true],[true,false]]})"));
  EXPECT_EQ(cyc["error"], "TransitivityViolation");
  EXPECT_EQ(error_json(run({"gen", "sample", "--n", "3", "--count", "6", "--symmetric"}))["error"],
            "ColinearityUnavoidable");
  EXPECT_EQ(error_json(run({"dim", "--max-ext", "3"}, run({"gen", "crown", "--n", "4"}).out))["error"],
            "LimitExceeded");
  EXPECT_EQ(error_json(run({"flow", "decompose", "--in", "/nonexistent/x.json"}))["error"],
            "InvalidArgument");
  const Json colinear = error_json(run({"check", "dpo"}, R"({"dim":2,"points":[["1","2"],["1","3"]]})"));
  EXPECT_EQ(colinear["error"], "Colinear");
  EXPECT_EQ(colinear["witness"].size(), 2u);
}

TEST(Cli, usage_errors_exit_2) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gen"}).code, 2);
  EXPECT_EQ(run({"gen", "crown"}).code, 2);
  EXPECT_EQ(run({"gen", "crown", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ramsey", "witness", "--a", "a", "--b", "b", "--k", "2", "--r", "2", "--path", "other"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, certificates_replay) {
  for (const char* kind : {"ap", "nonhom", "qnlex", "twohom"}) {
    const Outcome r = run({"certify", kind});
    ASSERT_EQ(r.code, 0) << r.err;
    Json cert = Json::parse(r.out);
    EXPECT_TRUE(cert["verdict"].get<bool>()) << kind;
    EXPECT_EQ(certificate_to_json(certificate_from_json(cert)), cert);

    const Outcome rep = run({"certify", "replay", "--in", temp_file(std::string(kind) + ".json", r.out)});
    EXPECT_TRUE(Json::parse(rep.out)["replayed"].get<bool>()) << kind;
    cert["verdict"] = false;
    const Outcome bad = run({"certify", "replay"}, cert.dump());
    EXPECT_FALSE(Json::parse(bad.out)["replayed"].get<bool>()) << kind;
  }
  const Json n3 = Json::parse(run({"certify", "nonhom", "--n", "3"}).out);
  EXPECT_EQ(n3["n"], 3);
  EXPECT_EQ(n3["points"][0]["coords"].size(), 3u);
}

TEST(Cli, analysis_commands) {
  const std::string cloud = run({"gen", "sample", "--n", "2", "--count", "4", "--seed", "3"}).out;
  const std::string other = run({"gen", "sample", "--n", "2", "--count", "4", "--seed", "8"}).out;
  const std::string grid = run({"gen", "grid", "--m", "2", "--n", "2"}).out;

  const Json emb = Json::parse(run({"embed", "rigid"}, grid).out);
  EXPECT_EQ(emb["points"], Json::parse("[[1,1],[2,3],[3,2],[4,4]]"));

  const Json fwd = Json::parse(run({"extend", "forth", "--struct", temp_file("g.json", grid), "--cloud",
                                    temp_file("c.json", cloud)}).out);
  EXPECT_TRUE(fwd["valid"].get<bool>());
  EXPECT_EQ(fwd["cloud"]["points"].size(), 8u);

  const Json iso = Json::parse(run({"iso", "bnf", "--a", temp_file("a.json", cloud), "--b",
                                    temp_file("b.json", other), "--steps", "12"}).out);
  EXPECT_TRUE(iso["partial_isomorphism"].get<bool>());
  EXPECT_EQ(iso["pairs"].size(), 12u);

  const Json rep = Json::parse(run({"check", "dpo"}, cloud).out);
  EXPECT_TRUE(rep["universal_ok"].get<bool>());
  EXPECT_EQ(rep["density_defects"].size(), 25u);

  const Json flow = Json::parse(run({"flow", "realizers"}, cloud).out);
  const RealizerSet set = enumerate_cloud_realizers(cloud_from_json(Json::parse(cloud)));
  EXPECT_EQ(flow["count"], set.tuples.size());
  EXPECT_EQ(flow["classified"], set.classified_count());

  const Json dec = Json::parse(run({"flow", "decompose"}, cloud).out);
  EXPECT_GE(dec["group_order"].get<std::size_t>(), 1u);

  const std::string pt = temp_file("pt.json", R"({"elements":["x"],"realizers":[["x"],["x"]]})");
  const std::string ch = temp_file("ch.json", R"({"elements":["u","v"],"realizers":[["u","v"],["u","v"]]})");
  for (const char* path : {"proof", "exhaustive"}) {
    const Json w = Json::parse(
        run({"ramsey", "witness", "--a", pt, "--b", ch, "--k", "2", "--r", "5", "--path", path}).out);
    EXPECT_TRUE(w["verdict"].get<bool>()) << path;
  }
}

}  // namespace
}  // namespace orderdim
