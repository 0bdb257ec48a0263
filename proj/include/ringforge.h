/* ringforge C API: opaque handles + integer status codes.
 * Status: 0 = ok, 1 = recorded finding, 2 = usage/IO/budget error.
 * All returned strings are heap-allocated; release with rf_string_free. */
#ifndef RINGFORGE_H
#define RINGFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct RfInstance RfInstance;

const char* rf_version(void);
void rf_string_free(char* s);

/* instance ------------------------------------------------------------- */
int rf_instance_load(const char* path, RfInstance** out, char** err);
int rf_instance_parse(const char* text, RfInstance** out, char** err);
void rf_instance_free(RfInstance* inst);
int rf_instance_validate(const RfInstance* inst, char** report);
int rf_instance_theta0(const RfInstance* inst);

/* high-level commands: each runs one workbench operation against an
 * instance file and returns the full text report.  Return value is the
 * process-style status (0 ok / 1 finding / 2 usage). */
int rf_cmd_validate(const char* instance_path, char** report);

#ifdef __cplusplus
}
#endif
#endif
