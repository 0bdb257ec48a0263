#include "ringforge.h"

#include <cstring>
#include <string>

#include "core/instance.hpp"

using namespace ringforge;

struct RfInstance {
  Instance inst;
};

static char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

extern "C" {

const char* rf_version(void) { return "ringforge 0.1"; }

void rf_string_free(char* s) { delete[] s; }

int rf_instance_load(const char* path, RfInstance** out, char** err) {
  try {
    *out = new RfInstance{load_instance(path)};
    return 0;
  } catch (const std::exception& e) {
    if (err) *err = dup_string(e.what());
    return 2;
  }
}

int rf_instance_parse(const char* text, RfInstance** out, char** err) {
  try {
    *out = new RfInstance{parse_instance(text)};
    return 0;
  } catch (const std::exception& e) {
    if (err) *err = dup_string(e.what());
    return 2;
  }
}

void rf_instance_free(RfInstance* inst) { delete inst; }

int rf_instance_validate(const RfInstance* inst, char** report) {
  auto rep = validate_instance(inst->inst);
  if (report) *report = dup_string(rep.text());
  return rep.ok ? 0 : 1;
}

int rf_instance_theta0(const RfInstance* inst) {
  return compute_theta0(inst->inst);
}

int rf_cmd_validate(const char* instance_path, char** report) {
  RfInstance* h = nullptr;
  char* err = nullptr;
  if (rf_instance_load(instance_path, &h, &err) != 0) {
    if (report) *report = err;
    return 2;
  }
  std::string out;
  char* rep = nullptr;
  int rc = rf_instance_validate(h, &rep);
  out += rep;
  rf_string_free(rep);
  out += "theta0 = " + std::to_string(rf_instance_theta0(h)) + " units\n";
  rf_instance_free(h);
  if (report) *report = dup_string(out);
  return rc;
}

}  // extern "C"
