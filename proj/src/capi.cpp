#include "ihull.h"

#include <cstdlib>
#include <cstring>

#include "ihull/io.hpp"
#include "ihull/report.hpp"

struct ihull_semigroup {
  ihull::InputDocument doc;
};

namespace {

thread_local std::string last_error;

ihull_status status_of(ihull::ErrorKind k) {
  switch (k) {
    case ihull::ErrorKind::Input: return IHULL_E_INPUT;
    case ihull::ErrorKind::Precondition: return IHULL_E_PRECONDITION;
    case ihull::ErrorKind::Cap: return IHULL_E_CAP;
    case ihull::ErrorKind::Budget: return IHULL_E_BUDGET;
    case ihull::ErrorKind::Verify: return IHULL_E_VERIFY;
    case ihull::ErrorKind::Internal: return IHULL_E_INTERNAL;
  }
  return IHULL_E_INTERNAL;
}

ihull_status fail(ihull_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
ihull_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ihull::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IHULL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IHULL_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ihull::Options to_options(const ihull_options* o) {
  ihull::Options out;
  if (!o) return out;
  out.oracle = o->oracle != 0;
  out.max_hull = o->max_hull;
  out.max_cover = o->max_cover;
  out.suite = o->suite ? o->suite : "";
  out.syllable_bound = o->syllable_bound;
  return out;
}

ihull_status emit(const ihull::Report& r, const ihull_options* o, char** report) {
  *report = dup(o && o->json ? ihull::render_json(r) : ihull::render_text(r));
  if (r.status == 2) return fail(IHULL_E_VERIFY, r.notes.empty() ? "verification failed" : r.notes.back());
  return IHULL_OK;
}

bool valid_index(const ihull_semigroup* h, int i) { return h && i >= 0 && i < h->doc.semigroup.size(); }

}  // namespace

extern "C" {

const char* ihull_version(void) { return "1.0.0"; }

const char* ihull_status_name(ihull_status s) {
  switch (s) {
    case IHULL_OK: return "ok";
    case IHULL_E_INPUT: return "input error";
    case IHULL_E_PRECONDITION: return "precondition not met";
    case IHULL_E_CAP: return "hull cap exceeded";
    case IHULL_E_BUDGET: return "budget exceeded";
    case IHULL_E_VERIFY: return "verification failed";
    case IHULL_E_ARGUMENT: return "bad argument";
    case IHULL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ihull_last_error(void) { return last_error.c_str(); }

ihull_status ihull_load(const char* spec, ihull_semigroup** out) {
  if (!spec || !out) return fail(IHULL_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new ihull_semigroup{ihull::load_input(spec)};
    return IHULL_OK;
  });
}

ihull_status ihull_load_text(const char* text, ihull_semigroup** out) {
  if (!text || !out) return fail(IHULL_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new ihull_semigroup{ihull::parse_input_text(text)};
    return IHULL_OK;
  });
}

void ihull_free(ihull_semigroup* h) { delete h; }

int ihull_size(const ihull_semigroup* h) { return h ? h->doc.semigroup.size() : 0; }

const char* ihull_element_name(const ihull_semigroup* h, int index) {
  return valid_index(h, index) ? h->doc.semigroup.name(index).c_str() : nullptr;
}

int ihull_element_index(const ihull_semigroup* h, const char* name) {
  if (!h || !name) return -1;
  auto e = h->doc.semigroup.find(name);
  return e ? *e : -1;
}

int ihull_zero(const ihull_semigroup* h) { return h ? h->doc.semigroup.zero() : -1; }

ihull_status ihull_product(const ihull_semigroup* h, int x, int y, int* out) {
  if (!out || !valid_index(h, x) || !valid_index(h, y)) return fail(IHULL_E_ARGUMENT, "bad element index");
  *out = h->doc.semigroup.mul(x, y);
  return IHULL_OK;
}

ihull_status ihull_get_flags(const ihull_semigroup* h, ihull_flags* out) {
  if (!h || !out) return fail(IHULL_E_ARGUMENT, "null argument");
  return guard([&] {
    ihull::PropertyFlags f = ihull::property_flags(h->doc.semigroup);
    *out = {f.zero_left_cancellative, f.zero_right_cancellative, f.categorical_at_zero, f.right_reductive,
            f.right_local_units, f.unital, f.admits_lcms};
    return IHULL_OK;
  });
}

ihull_status ihull_lcm(const ihull_semigroup* h, int s, int t, int* out) {
  if (!out || !valid_index(h, s) || !valid_index(h, t)) return fail(IHULL_E_ARGUMENT, "bad element index");
  return guard([&] {
    auto r = ihull::lcm(h->doc.semigroup, s, t);
    *out = r ? *r : -1;
    return IHULL_OK;
  });
}

void ihull_options_init(ihull_options* opts) {
  if (!opts) return;
  opts->json = 0;
  opts->oracle = 0;
  opts->max_hull = ihull::kDefaultHullCap;
  opts->max_cover = ihull::kDefaultMaxCover;
  opts->suite = nullptr;
  opts->syllable_bound = 4;
}

ihull_status ihull_run(const ihull_semigroup* h, const char* command, const ihull_options* opts, char** report) {
  if (!h || !command || !report) return fail(IHULL_E_ARGUMENT, "null argument");
  *report = nullptr;
  return guard([&] { return emit(ihull::run_command(command, h->doc, to_options(opts)), opts, report); });
}

ihull_status ihull_freeprod(const ihull_semigroup* m, const ihull_semigroup* n, const char* const* exprs,
                            size_t count, const ihull_options* opts, char** report) {
  if (!m || !n || !report || (count && !exprs)) return fail(IHULL_E_ARGUMENT, "null argument");
  *report = nullptr;
  return guard([&] {
    std::vector<std::string> list;
    for (size_t i = 0; i < count; ++i) {
      if (!exprs[i]) return fail(IHULL_E_ARGUMENT, "null expression");
      list.emplace_back(exprs[i]);
    }
    return emit(ihull::cmd_freeprod(m->doc, n->doc, list, to_options(opts)), opts, report);
  });
}

void ihull_string_free(char* s) { std::free(s); }

}  // extern "C"
