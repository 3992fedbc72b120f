#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "hipp/hipp.h"

namespace {

const std::string kData = HIPP_TEST_DATA;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hipp_string_free(s);
  return out;
}

hipp_instance* parse(const char* text) {
  hipp_instance* inst = nullptr;
  REQUIRE(hipp_instance_parse(text, &inst) == HIPP_OK);
  return inst;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strlen(hipp_version()) > 0);
  CHECK(std::string(hipp_status_name(HIPP_OK)) == "ok");
  for (int s = HIPP_ERR_INPUT; s <= HIPP_ERR_NULL; ++s)
    CHECK(std::string(hipp_status_name(s)) != hipp_status_name(HIPP_OK));
  hipp_string_free(nullptr);
  hipp_instance_free(nullptr);
  hipp_config_free(nullptr);
  hipp_result_free(nullptr);
}

TEST_CASE("null arguments") {
  hipp_instance* inst = nullptr;
  CHECK(hipp_instance_parse(nullptr, &inst) == HIPP_ERR_NULL);
  CHECK(hipp_instance_parse("01", nullptr) == HIPP_ERR_NULL);
  size_t n = 0, m = 0;
  CHECK(hipp_instance_dims(nullptr, &n, &m) == HIPP_ERR_NULL);
  hipp_config* cfg = nullptr;
  CHECK(hipp_config_new(nullptr) == HIPP_ERR_NULL);
  CHECK(hipp_config_new(&cfg) == HIPP_OK);
  CHECK(hipp_config_set(cfg, nullptr, "1") == HIPP_ERR_NULL);
  hipp_result* res = nullptr;
  CHECK(hipp_run(nullptr, cfg, nullptr, &res) == HIPP_ERR_NULL);
  CHECK(res == nullptr);
  CHECK(hipp_result_solution(nullptr) == nullptr);
  CHECK(hipp_result_stat(nullptr, "best_H") == nullptr);
  CHECK(std::strlen(hipp_last_error()) > 0);
  hipp_config_free(cfg);
}

TEST_CASE("instances") {
  hipp_instance* inst = parse("2 4\n0212\n2210\n");
  size_t n = 0, m = 0;
  CHECK(hipp_instance_dims(inst, &n, &m) == HIPP_OK);
  CHECK(n == 2);
  CHECK(m == 4);
  char* text = nullptr;
  CHECK(hipp_instance_serialize(inst, &text) == HIPP_OK);
  CHECK(take(text) == "2 4\n0212\n2210\n");
  char* graph = nullptr;
  CHECK(hipp_instance_graph(inst, &graph) == HIPP_OK);
  CHECK(take(graph) == "g1 g2\n");
  hipp_instance_free(inst);

  hipp_instance* bad = nullptr;
  CHECK(hipp_instance_parse("0212\n2112110\n", &bad) == HIPP_ERR_PARSE);
  CHECK(bad == nullptr);
  size_t line = 0, column = 0;
  hipp_last_error_position(&line, &column);
  CHECK(line == 2);
  CHECK(column == 1);
  CHECK(std::string(hipp_last_error()).find("expected 4, found 7") != std::string::npos);

  CHECK(hipp_instance_load((kData + "/missing.txt").c_str(), &bad) == HIPP_ERR_IO);
  CHECK(hipp_instance_load((kData + "/example.txt").c_str(), &bad) == HIPP_OK);
  CHECK(hipp_instance_dims(bad, &n, &m) == HIPP_OK);
  CHECK(n == 5);
  CHECK(m == 7);
  hipp_instance_free(bad);

  hipp_instance* imp = nullptr;
  CHECK(hipp_instance_import("id,s1,s2\nA,2,0\nB,0,2\n", &imp) == HIPP_OK);
  CHECK(hipp_instance_dims(imp, &n, &m) == HIPP_OK);
  CHECK(n == 2);
  CHECK(m == 2);
  hipp_instance_free(imp);

  hipp_instance *g1 = nullptr, *g2 = nullptr;
  CHECK(hipp_instance_generate(5, 8, 3, 0, 11, &g1) == HIPP_OK);
  CHECK(hipp_instance_generate(5, 8, 3, 0, 11, &g2) == HIPP_OK);
  char *t1 = nullptr, *t2 = nullptr;
  hipp_instance_serialize(g1, &t1);
  hipp_instance_serialize(g2, &t2);
  CHECK(take(t1) == take(t2));
  hipp_instance_free(g1);
  hipp_instance_free(g2);
  CHECK(hipp_instance_generate(0, 8, 3, 0, 11, &g1) == HIPP_ERR_INPUT);
}

TEST_CASE("verify") {
  hipp_instance* inst = nullptr;
  REQUIRE(hipp_instance_load((kData + "/example.txt").c_str(), &inst) == HIPP_OK);
  int ok = -1;
  CHECK(hipp_instance_verify(inst, slurp(kData + "/example_alt8.txt").c_str(), &ok) == HIPP_OK);
  CHECK(ok == 1);
  CHECK(hipp_instance_verify(inst, slurp(kData + "/example_printed.txt").c_str(), &ok) == HIPP_OK);
  CHECK(ok == 0);
  CHECK(std::string(hipp_last_error()).find("genotype 4 at site 6") != std::string::npos);
  CHECK(hipp_instance_verify(inst, nullptr, &ok) == HIPP_ERR_NULL);
  hipp_instance_free(inst);
}

TEST_CASE("config") {
  hipp_config* cfg = nullptr;
  REQUIRE(hipp_config_new(&cfg) == HIPP_OK);
  CHECK(hipp_config_set(cfg, "algo", "exact") == HIPP_OK);
  CHECK(hipp_config_set(cfg, "colour", "red") == HIPP_ERR_INPUT);
  CHECK(std::string(hipp_last_error()).find("colour") != std::string::npos);
  // a failed set leaves the config as it was
  CHECK(hipp_config_set(cfg, "seed", "x") == HIPP_ERR_INPUT);
  hipp_instance* inst = parse("20\n02\n");
  hipp_result* res = nullptr;
  REQUIRE(hipp_run(inst, cfg, nullptr, &res) == HIPP_OK);
  CHECK(std::string(hipp_result_stat(res, "algorithm")) == "exact");
  hipp_result_free(res);

  CHECK(hipp_config_load(cfg, "seed=1\nbogus=2\n") == HIPP_ERR_PARSE);
  size_t line = 0;
  hipp_last_error_position(&line, nullptr);
  CHECK(line == 2);
  CHECK(hipp_config_load(cfg, "algo=ils\nmax-iters=20\n") == HIPP_OK);
  REQUIRE(hipp_run(inst, cfg, nullptr, &res) == HIPP_OK);
  CHECK(std::string(hipp_result_stat(res, "algorithm")) == "ils");
  CHECK(std::string(hipp_result_stat(res, "iterations")) == "20");
  hipp_result_free(res);
  hipp_instance_free(inst);
  hipp_config_free(cfg);
}

TEST_CASE("runs and results") {
  hipp_instance* inst = nullptr;
  REQUIRE(hipp_instance_load((kData + "/example.txt").c_str(), &inst) == HIPP_OK);
  hipp_config* cfg = nullptr;
  hipp_config_new(&cfg);
  hipp_config_set(cfg, "algo", "exact");
  hipp_result* res = nullptr;
  REQUIRE(hipp_run(inst, cfg, nullptr, &res) == HIPP_OK);
  CHECK(hipp_result_exit_code(res) == 0);
  CHECK(std::string(hipp_result_stat(res, "best_H")) == "6");
  CHECK(hipp_result_stat(res, "nonexistent") == nullptr);
  CHECK(std::string(hipp_result_stats(res)).rfind("algorithm=exact\n", 0) == 0);
  int ok = 0;
  hipp_instance_verify(inst, hipp_result_solution(res), &ok);
  CHECK(ok == 1);
  hipp_result_free(res);

  hipp_config_set(cfg, "algo", "reduce");
  REQUIRE(hipp_run(inst, cfg, slurp(kData + "/example_alt8.txt").c_str(), &res) == HIPP_OK);
  CHECK(std::string(hipp_result_log(res)).rfind("g3 1110110 -1 -1 7\n", 0) == 0);
  CHECK(std::string(hipp_result_stat(res, "initial_H")) == "8");
  hipp_result_free(res);
  CHECK(hipp_run(inst, cfg, "1\t0000000\t0000000\n", &res) == HIPP_ERR_PARSE);
  CHECK(res == nullptr);

  hipp_config_set(cfg, "algo", "exact");
  hipp_config_set(cfg, "max-states", "10");
  CHECK(hipp_run(inst, cfg, nullptr, &res) == HIPP_ERR_CAPACITY);

  hipp_config* dls = nullptr;
  hipp_config_new(&dls);
  hipp_config_load(dls, "algo=dls\nw2=0\nadapt=false\nmax-iters=10\ntrace=yes\n");
  hipp_instance* one = parse("22\n");
  REQUIRE(hipp_run(one, dls, nullptr, &res) == HIPP_OK);
  CHECK(hipp_result_exit_code(res) == 2);
  CHECK(std::string(hipp_result_trace(res)).rfind("iter F f1 f2 f3p feasible\n", 0) == 0);
  hipp_result_free(res);
  hipp_instance_free(one);
  hipp_config_free(dls);
  hipp_config_free(cfg);
  hipp_instance_free(inst);
}

TEST_CASE("errors are per thread") {
  hipp_instance* bad = nullptr;
  CHECK(hipp_instance_parse("0x\n", &bad) == HIPP_ERR_PARSE);
  const std::string mine = hipp_last_error();
  std::string theirs = "unset";
  std::thread([&] {
    hipp_instance* inst = nullptr;
    hipp_instance_parse("01\n", &inst);
    theirs = hipp_last_error();
    hipp_instance_free(inst);
  }).join();
  CHECK(theirs.empty());
  CHECK(std::string(hipp_last_error()) == mine);
}

TEST_CASE("file run") {
  hipp_config* cfg = nullptr;
  hipp_config_new(&cfg);
  hipp_config_set(cfg, "algo", "exact");
  hipp_config_set(cfg, "input", (kData + "/two_sites.txt").c_str());
  const std::string out = (std::filesystem::temp_directory_path() / "hipp_capi_run.txt").string();
  hipp_config_set(cfg, "output", out.c_str());
  hipp_config_set(cfg, "stats", (out + ".stats").c_str());
  CHECK(hipp_run_files(cfg) == 0);
  CHECK(slurp(out + ".stats").find("best_H=3\n") != std::string::npos);
  CHECK(slurp(out).size() > 0);
  std::remove(out.c_str());
  std::remove((out + ".stats").c_str());
  hipp_config_set(cfg, "input", (kData + "/inconsistent.txt").c_str());
  CHECK(hipp_run_files(cfg) == 1);
  CHECK(hipp_run_files(nullptr) == 1);
  hipp_config_free(cfg);
}

TEST_CASE("bench") {
  hipp_config* cfg = nullptr;
  hipp_config_new(&cfg);
  hipp_config_set(cfg, "max-iters", "30");
  char *a = nullptr, *b = nullptr;
  REQUIRE(hipp_bench(cfg, "ils,kfix", 2, 4, 6, 3, 4, 5, 1, &a) == HIPP_OK);
  REQUIRE(hipp_bench(cfg, "ils,kfix", 2, 4, 6, 3, 4, 5, 1, &b) == HIPP_OK);
  const std::string ta = take(a);
  CHECK(ta == take(b));
  CHECK(ta.rfind("instance\tseed\ttask\t", 0) == 0);
  std::size_t lines = 0;
  for (char c : ta) lines += c == '\n';
  CHECK(lines == 5);
  CHECK(hipp_bench(cfg, "ils,nope", 2, 4, 6, 3, 4, 5, 1, &a) == HIPP_ERR_INPUT);
  CHECK(a == nullptr);
  CHECK(hipp_bench(cfg, "", 2, 4, 6, 3, 4, 5, 1, &a) == HIPP_ERR_INPUT);
  hipp_config_free(cfg);
}
