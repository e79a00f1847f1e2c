#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace {

std::string g_binary;
std::filesystem::path g_tmp;

int run(const std::string& args, const std::string& out_file = "/dev/null") {
  std::string cmd = "'" + g_binary + "' " + args + " > '" + out_file + "' 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

using nlohmann::json;

TEST_CASE("reproduce-paper reports the one honest failure and stays byte-stable") {
  auto out1 = g_tmp / "rep1.json";
  auto out2 = g_tmp / "rep2.json";
  CHECK(run("reproduce-paper", out1.string()) == 1);
  CHECK(run("reproduce-paper", out2.string()) == 1);
  std::string text = slurp(out1);
  CHECK(text == slurp(out2));  // identical across runs
  json j = json::parse(text);
  REQUIRE(j.contains("checks"));
  int fails = 0, flags = 0, passes = 0;
  std::string failing;
  for (const auto& c : j["checks"]) {
    std::string st = c.at("status").get<std::string>();
    if (st == "fail") {
      ++fails;
      failing = c.at("id").get<std::string>();
    } else if (st == "flagged") {
      ++flags;
    } else {
      ++passes;
    }
  }
  CHECK(fails == 1);
  CHECK(failing == "cremona_reflection");
  CHECK(flags == 2);
  CHECK(passes == 9);
  // keys of each check object are serialized sorted
  size_t id_pos = text.find("\"id\"");
  size_t payload_pos = text.find("\"payload\"");
  size_t status_pos = text.find("\"status\"");
  CHECK(id_pos < payload_pos);
  CHECK(payload_pos < status_pos);
}

TEST_CASE("discriminant expectation flag") {
  auto out = g_tmp / "disc.json";
  CHECK(run("reproduce-paper --expect-discriminant 4", out.string()) == 1);
  json j = json::parse(slurp(out));
  bool found = false;
  for (const auto& c : j["checks"])
    if (c.at("id") == "expected_discriminant") {
      found = true;
      CHECK(c.at("status") == "pass");
    }
  CHECK(found);
  CHECK(run("reproduce-paper --expect-discriminant 3", out.string()) == 1);
  j = json::parse(slurp(out));
  for (const auto& c : j["checks"])
    if (c.at("id") == "expected_discriminant") CHECK(c.at("status") == "fail");
}

TEST_CASE("dot exports") {
  auto dir = g_tmp / "dots";
  CHECK(run("reproduce-paper --emit-dot '" + dir.string() + "'") == 1);
  for (const char* name : {"petersen.dot", "extended_petersen.dot", "fig3_fibers.dot"}) {
    INFO(name);
    CHECK(std::filesystem::exists(dir / name));
    std::string text = slurp(dir / name);
    CHECK(text.find("graph ") == 0);
    CHECK(text.find("--") != std::string::npos);
  }
}

TEST_CASE("enumerate subcommand") {
  auto out = g_tmp / "enum.json";
  CHECK(run("enumerate --bound 8", out.string()) == 0);
  json j = json::parse(slurp(out));
  CHECK(j.at("count") == 25);
  CHECK(j["classes"].size() == 25);
  for (const auto& c : j["classes"]) {
    std::string t = c.at("taxonomy").get<std::string>();
    CHECK((t == "b" || t == "f2"));
  }
  CHECK(run("enumerate --bound 0") == 2);
  CHECK(run("enumerate") == 2);  // --bound required
}

TEST_CASE("fibers subcommand") {
  auto out = g_tmp / "fib.json";
  std::string data = X4_DATA_DIR;
  CHECK(run("fibers --input '" + data + "/fig3.json'", out.string()) == 0);
  json j = json::parse(slurp(out));
  REQUIRE(j.contains("fibers"));
  CHECK(j["fibers"].size() == 3);
  for (const auto& f : j["fibers"]) CHECK(f.at("type") == "D~6");
  CHECK(run("fibers --input '" + (g_tmp / "missing.json").string() + "'") == 2);
  auto garbage = g_tmp / "garbage.json";
  std::ofstream(garbage) << "{not json";
  CHECK(run("fibers --input '" + garbage.string() + "'") == 2);
}

TEST_CASE("reflection subcommand") {
  auto out = g_tmp / "refl.json";
  CHECK(run("reflection", out.string()) == 0);
  json j = json::parse(slurp(out));
  CHECK(j.at("disc_action") == "neither");
  CHECK(j.at("distinct_from_minus2_class") == true);
}

TEST_CASE("automorphisms subcommand") {
  auto out = g_tmp / "auto.json";
  CHECK(run("automorphisms --graph petersen", out.string()) == 0);
  json j = json::parse(slurp(out));
  CHECK(j.at("order") == 120);
  CHECK(run("automorphisms --graph extended", out.string()) == 0);
  CHECK(json::parse(slurp(out)).at("order") == 120);
  // custom graph file: a triangle
  auto tri = g_tmp / "triangle.json";
  std::ofstream(tri) << R"({"vertices":["a","b","c"],"edges":[[0,1,1],[1,2,1],[0,2,1]]})";
  CHECK(run("automorphisms --graph '" + tri.string() + "'", out.string()) == 0);
  CHECK(json::parse(slurp(out)).at("order") == 6);
  CHECK(run("automorphisms --graph '" + (g_tmp / "nope.json").string() + "'") == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("no-such-subcommand") == 2);
  CHECK(run("") == 2);  // a subcommand is required
}

TEST_CASE("json goes to the requested file, not stdout") {
  auto out = g_tmp / "viafile.json";
  auto captured = g_tmp / "stdout.txt";
  CHECK(run("--json '" + out.string() + "' enumerate --bound 8", captured.string()) == 0);
  CHECK(slurp(captured).empty());
  CHECK(json::parse(slurp(out)).at("count") == 25);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <x4-binary>\n", argv[0]);
    return 2;
  }
  g_binary = argv[1];
  g_tmp = std::filesystem::temp_directory_path() / "x4cli_test";
  std::filesystem::remove_all(g_tmp);
  std::filesystem::create_directories(g_tmp);
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
