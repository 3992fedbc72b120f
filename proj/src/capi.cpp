#include "hipp/hipp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "hipp/exact.hpp"
#include "hipp/graph.hpp"
#include "hipp/io.hpp"

struct hipp_instance {
  hipp::InstancePtr instance;
};

struct hipp_config {
  hipp::RunConfig config;
};

struct hipp_result {
  hipp::RunOutput output;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

int fail(int status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs f, mapping exceptions onto status codes.
template <class F>
int guarded(F&& f) {
  last_line = last_column = 0;
  try {
    f();
    last_error.clear();
    return HIPP_OK;
  } catch (const hipp::ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(HIPP_ERR_PARSE, e.what());
  } catch (const hipp::InputError& e) {
    return fail(HIPP_ERR_INPUT, e.what());
  } catch (const hipp::DomainError& e) {
    return fail(HIPP_ERR_DOMAIN, e.what());
  } catch (const hipp::CapacityError& e) {
    return fail(HIPP_ERR_CAPACITY, e.what());
  } catch (const hipp::IoError& e) {
    return fail(HIPP_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HIPP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HIPP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HIPP_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define HIPP_REQUIRE(p) \
  if ((p) == nullptr) return fail(HIPP_ERR_NULL, #p " is NULL")

int make_instance(hipp::Instance inst, hipp_instance** out) {
  *out = new hipp_instance{std::make_shared<const hipp::Instance>(std::move(inst))};
  return HIPP_OK;
}

}  // namespace

extern "C" {

const char* hipp_version(void) { return "1.0.0"; }

const char* hipp_last_error(void) { return last_error.c_str(); }

void hipp_last_error_position(size_t* line, size_t* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

const char* hipp_status_name(int status) {
  switch (status) {
    case HIPP_OK:
      return "ok";
    case HIPP_ERR_INPUT:
      return "input error";
    case HIPP_ERR_PARSE:
      return "parse error";
    case HIPP_ERR_DOMAIN:
      return "domain error";
    case HIPP_ERR_CAPACITY:
      return "capacity error";
    case HIPP_ERR_IO:
      return "i/o error";
    case HIPP_ERR_NULL:
      return "null argument";
    default:
      return "internal error";
  }
}

void hipp_string_free(char* s) { std::free(s); }

int hipp_instance_parse(const char* text, hipp_instance** out) {
  HIPP_REQUIRE(text);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { make_instance(hipp::parse_instance(text), out); });
}

int hipp_instance_import(const char* text, hipp_instance** out) {
  HIPP_REQUIRE(text);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { make_instance(hipp::import_genotypes(text), out); });
}

int hipp_instance_load(const char* path, hipp_instance** out) {
  HIPP_REQUIRE(path);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::string text = hipp::read_file(path);
    try {
      make_instance(hipp::parse_instance(text), out);
    } catch (const hipp::ParseError& e) {
      throw hipp::ParseError(std::string(path) + ": " + e.what(), e.line(), e.column());
    }
  });
}

int hipp_instance_generate(size_t n, size_t m, size_t pool, size_t max_het, uint64_t seed,
                           hipp_instance** out) {
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    hipp::Rng rng(seed);
    make_instance(hipp::generate_instance(n, m, pool, rng, max_het), out);
  });
}

int hipp_instance_dims(const hipp_instance* inst, size_t* n, size_t* m) {
  HIPP_REQUIRE(inst);
  if (n) *n = inst->instance->size();
  if (m) *m = inst->instance->sites();
  return HIPP_OK;
}

int hipp_instance_serialize(const hipp_instance* inst, char** out) {
  HIPP_REQUIRE(inst);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = dup(hipp::serialize_instance(*inst->instance)); });
}

int hipp_instance_graph(const hipp_instance* inst, char** out) {
  HIPP_REQUIRE(inst);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = dup(hipp::CompatibilityGraph(*inst->instance).to_text()); });
}

int hipp_instance_verify(const hipp_instance* inst, const char* solution, int* ok) {
  HIPP_REQUIRE(inst);
  HIPP_REQUIRE(solution);
  HIPP_REQUIRE(ok);
  *ok = 0;
  try {
    const hipp::CompleteSolution s = hipp::parse_solution(solution, inst->instance);
    *ok = hipp::verify_solution(*inst->instance, s) ? 1 : 0;
    last_error.clear();
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return HIPP_OK;
}

void hipp_instance_free(hipp_instance* inst) { delete inst; }

int hipp_config_new(hipp_config** out) {
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new hipp_config{}; });
}

int hipp_config_set(hipp_config* cfg, const char* key, const char* value) {
  HIPP_REQUIRE(cfg);
  HIPP_REQUIRE(key);
  HIPP_REQUIRE(value);
  return guarded([&] {
    hipp::RunConfig next = cfg->config;
    hipp::set_option(next, key, value);
    cfg->config = std::move(next);
  });
}

int hipp_config_load(hipp_config* cfg, const char* text) {
  HIPP_REQUIRE(cfg);
  HIPP_REQUIRE(text);
  return guarded([&] {
    hipp::RunConfig next = cfg->config;
    hipp::load_config(next, text);
    cfg->config = std::move(next);
  });
}

void hipp_config_free(hipp_config* cfg) { delete cfg; }

int hipp_run(const hipp_instance* inst, const hipp_config* cfg, const char* start,
             hipp_result** out) {
  HIPP_REQUIRE(inst);
  HIPP_REQUIRE(cfg);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::optional<std::string> initial;
    if (start) initial = start;
    *out = new hipp_result{hipp::execute(cfg->config, inst->instance, initial)};
  });
}

int hipp_run_files(const hipp_config* cfg) {
  if (cfg == nullptr) {
    fail(HIPP_ERR_NULL, "cfg is NULL");
    return 1;
  }
  return hipp::run(cfg->config);
}

int hipp_result_exit_code(const hipp_result* res) { return res ? res->output.exit_code : 1; }

const char* hipp_result_solution(const hipp_result* res) {
  return res ? res->output.solution.c_str() : nullptr;
}

const char* hipp_result_stats(const hipp_result* res) {
  return res ? res->output.stats.c_str() : nullptr;
}

const char* hipp_result_log(const hipp_result* res) {
  return res ? res->output.log.c_str() : nullptr;
}

const char* hipp_result_trace(const hipp_result* res) {
  return res ? res->output.trace.c_str() : nullptr;
}

const char* hipp_result_stat(const hipp_result* res, const char* key) {
  if (res == nullptr || key == nullptr) return nullptr;
  for (const auto& [k, v] : res->output.values)
    if (k == key) return v.c_str();
  return nullptr;
}

void hipp_result_free(hipp_result* res) { delete res; }

int hipp_bench(const hipp_config* base, const char* algorithms, size_t instances, size_t n,
               size_t m, size_t pool, size_t max_het, uint64_t seed, int oracle, char** out) {
  HIPP_REQUIRE(base);
  HIPP_REQUIRE(algorithms);
  HIPP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    hipp::BenchSpec spec;
    spec.tasks.clear();
    std::string list = algorithms;
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      if (comma > pos) spec.tasks.push_back(hipp::parse_task(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    spec.instances = instances;
    spec.n = n;
    spec.m = m;
    spec.pool = pool;
    spec.max_het = max_het;
    spec.seed = seed;
    spec.oracle = oracle != 0;
    spec.base = base->config;
    *out = dup(hipp::run_bench(spec));
  });
}

}  // extern "C"
