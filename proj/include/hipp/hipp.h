#ifndef HIPP_H
#define HIPP_H

/* C interface to the hipp solver library.
 *
 * Objects are opaque handles created by *_new / *_parse / *_generate and
 * released by the matching *_free. Functions return HIPP_OK or an error code;
 * hipp_last_error() gives the message for the last failure on the calling
 * thread. Strings returned through char** are owned by the caller and released
 * with hipp_string_free. Strings returned as const char* belong to the handle.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HIPP_BUILDING)
#define HIPP_API __declspec(dllexport)
#else
#define HIPP_API __declspec(dllimport)
#endif
#else
#define HIPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum hipp_status {
  HIPP_OK = 0,
  HIPP_ERR_INPUT = 1,    /* bad argument, unknown id, bad option value */
  HIPP_ERR_PARSE = 2,    /* malformed text */
  HIPP_ERR_DOMAIN = 3,   /* mathematically invalid request */
  HIPP_ERR_CAPACITY = 4, /* size guard exceeded */
  HIPP_ERR_IO = 5,       /* file could not be read or written */
  HIPP_ERR_INTERNAL = 6,
  HIPP_ERR_NULL = 7      /* required pointer argument was NULL */
};

typedef struct hipp_instance hipp_instance;
typedef struct hipp_config hipp_config;
typedef struct hipp_result hipp_result;

HIPP_API const char* hipp_version(void);
HIPP_API const char* hipp_last_error(void);
/* Line and column of the last parse error (0 when unknown). */
HIPP_API void hipp_last_error_position(size_t* line, size_t* column);
HIPP_API const char* hipp_status_name(int status);
HIPP_API void hipp_string_free(char* s);

/* Instances */
HIPP_API int hipp_instance_parse(const char* text, hipp_instance** out);
HIPP_API int hipp_instance_import(const char* text, hipp_instance** out);
HIPP_API int hipp_instance_load(const char* path, hipp_instance** out);
/* max_het = 0 means no limit on heterozygous sites per genotype. */
HIPP_API int hipp_instance_generate(size_t n, size_t m, size_t pool, size_t max_het,
                                    uint64_t seed, hipp_instance** out);
HIPP_API int hipp_instance_dims(const hipp_instance* inst, size_t* n, size_t* m);
HIPP_API int hipp_instance_serialize(const hipp_instance* inst, char** out);
/* Compatibility graph as "gA gB" lines. */
HIPP_API int hipp_instance_graph(const hipp_instance* inst, char** out);
/* *ok = 1 when every genotype is resolved by the solution text. Malformed
 * solutions give *ok = 0 and the reason in hipp_last_error(). */
HIPP_API int hipp_instance_verify(const hipp_instance* inst, const char* solution, int* ok);
HIPP_API void hipp_instance_free(hipp_instance* inst);

/* Run configuration; keys as accepted by the config file format. */
HIPP_API int hipp_config_new(hipp_config** out);
HIPP_API int hipp_config_set(hipp_config* cfg, const char* key, const char* value);
HIPP_API int hipp_config_load(hipp_config* cfg, const char* text);
HIPP_API void hipp_config_free(hipp_config* cfg);

/* In-memory run. start is the starting solution for reduce, or NULL. */
HIPP_API int hipp_run(const hipp_instance* inst, const hipp_config* cfg, const char* start,
                      hipp_result** out);
/* File-level run using the config's input/output paths. Returns the process
 * exit code: 0 feasible, 2 infeasible, 1 error (message on stderr). */
HIPP_API int hipp_run_files(const hipp_config* cfg);

HIPP_API int hipp_result_exit_code(const hipp_result* res);
HIPP_API const char* hipp_result_solution(const hipp_result* res);
HIPP_API const char* hipp_result_stats(const hipp_result* res);
HIPP_API const char* hipp_result_log(const hipp_result* res);
HIPP_API const char* hipp_result_trace(const hipp_result* res);
/* Value of one stats key, NULL when absent. */
HIPP_API const char* hipp_result_stat(const hipp_result* res, const char* key);
HIPP_API void hipp_result_free(hipp_result* res);

/* Benchmark table over generated instances. algorithms is a comma-separated
 * list; base supplies the engine options. */
HIPP_API int hipp_bench(const hipp_config* base, const char* algorithms, size_t instances,
                        size_t n, size_t m, size_t pool, size_t max_het, uint64_t seed,
                        int oracle, char** out);

#ifdef __cplusplus
}
#endif

#endif
