#include "kani.h"

#include <json.hpp>

#include "textio.hpp"

struct kani_result {
  std::string human;
  std::string machine;
  int exit_code = 0;
};

struct kani_group {
  kani::GroupPtr g;
};

namespace {

thread_local std::string t_last_error;

void set_err(const std::string& msg) { t_last_error = msg; }

kani::Options options_of(const char* js) {
  kani::Options opt;
  if (!js || !*js) return opt;
  nlohmann::json j = nlohmann::json::parse(js);
  for (const auto& [k, v] : j.items()) {
    if (k == "seed") opt.seed = v.get<uint64_t>();
    else if (k == "field_cap") opt.field_cap = v.get<uint32_t>();
    else if (k == "group_cap") opt.group_cap = v.get<uint32_t>();
    else if (k == "closure_cap") opt.closure_cap = v.get<uint32_t>();
    else if (k == "h1_cap") opt.h1_cap = v.get<uint32_t>();
    else if (k == "h2_cap") opt.h2_cap = v.get<uint32_t>();
    else throw kani::error(kani::errc::parse, "unknown option '" + k + "'");
  }
  return opt;
}

kani_result* wrap(kani::Report&& r) {
  return new kani_result{std::move(r.human), std::move(r.machine), r.exit_code};
}

template <typename Fn>
kani_result* guarded(Fn&& fn) noexcept {
  t_last_error.clear();
  try {
    return wrap(fn());
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  } catch (...) {
    set_err("unknown failure");
    return nullptr;
  }
}

}  // namespace

extern "C" {

const char* kani_version(void) { return "1.0.0"; }

const char* kani_last_error(void) { return t_last_error.empty() ? nullptr : t_last_error.c_str(); }

kani_result* kani_run_simples(const char* groupref, uint32_t p, const char* options_json) {
  if (!groupref) {
    set_err("groupref is NULL");
    return nullptr;
  }
  return guarded([&] { return kani::run_simples(groupref, p, options_of(options_json)); });
}

kani_result* kani_run_cohom(const char* groupref, uint32_t p, const char* moduleref,
                            const char* options_json) {
  if (!groupref || !moduleref) {
    set_err(groupref ? "moduleref is NULL" : "groupref is NULL");
    return nullptr;
  }
  return guarded([&] { return kani::run_cohom(groupref, p, moduleref, options_of(options_json)); });
}

kani_result* kani_run_decide(const char* problem_text, int with_trace, const char* options_json) {
  if (!problem_text) {
    set_err("problem_text is NULL");
    return nullptr;
  }
  return guarded(
      [&] { return kani::run_decide(problem_text, with_trace != 0, options_of(options_json)); });
}

kani_result* kani_run_reduce(const char* problem_text, const char* options_json) {
  if (!problem_text) {
    set_err("problem_text is NULL");
    return nullptr;
  }
  return guarded([&] { return kani::run_reduce(problem_text, options_of(options_json)); });
}

kani_result* kani_run_selftest(const char* options_json) {
  return guarded([&] { return kani::run_selftest(options_of(options_json)); });
}

const char* kani_result_human(const kani_result* r) { return r ? r->human.c_str() : nullptr; }

const char* kani_result_machine(const kani_result* r) { return r ? r->machine.c_str() : nullptr; }

int kani_result_exit_code(const kani_result* r) { return r ? r->exit_code : 2; }

void kani_result_free(kani_result* r) { delete r; }

kani_group* kani_group_from_text(const char* groupref, const char* options_json) {
  if (!groupref) {
    set_err("groupref is NULL");
    return nullptr;
  }
  t_last_error.clear();
  try {
    return new kani_group{kani::group_from_ref(groupref, options_of(options_json))};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

uint32_t kani_group_order(const kani_group* g) { return g && g->g ? g->g->n : 0; }

int kani_group_is_abelian(const kani_group* g) {
  if (!g || !g->g) return -1;
  return g->g->is_abelian() ? 1 : 0;
}

void kani_group_free(kani_group* g) { delete g; }

}  // extern "C"
