#include "recip.h"

#include <exception>
#include <string>

#include "recip/conic.hpp"
#include "recip/error.hpp"
#include "recip/local_symbols.hpp"
#include "recip/reciprocity.hpp"
#include "recip/verifier.hpp"

struct recip_context {
  std::string result;
  std::string error;
};

namespace {

using namespace recip;
using nlohmann::json;

template <class F>
int guarded(recip_context* ctx, F&& body) {
  if (!ctx) return static_cast<int>(ErrorCode::BadArgument);
  ctx->error.clear();
  try {
    ctx->result = body();
    return 0;
  } catch (const Error& e) {
    ctx->error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    ctx->error = std::string("Internal: ") + e.what();
    return static_cast<int>(ErrorCode::Internal);
  }
}

std::string need(const char* s) {
  if (!s) throw Error(ErrorCode::BadArgument, "null argument");
  return s;
}

Rational rational(const char* s) { return parse_rational(need(s)); }
Int integer(const char* s) { return parse_int(need(s)); }

Place place(const char* s) {
  const std::string text = need(s);
  if (text == "inf" || text == "infinity" || text == "oo") return Place::infinity();
  return Place::prime(parse_int(text));
}

SquareClass square_class(const char* s) {
  const Rational q = rational(s);
  if (q == 0) throw Error(ErrorCode::ZeroInput, "square class of 0");
  return SquareClass::of(q);
}

std::string sign_result(int value, int* out) {
  if (out) *out = value;
  return json{{"value", value}}.dump();
}

std::string report_result(const Report& r, int* pass) {
  if (pass) *pass = r.pass() ? 1 : 0;
  return r.to_jsonl();
}

}  // namespace

extern "C" {

recip_context* recip_context_new(void) {
  try {
    return new recip_context();
  } catch (...) {
    return nullptr;
  }
}

void recip_context_free(recip_context* ctx) { delete ctx; }

const char* recip_last_error(const recip_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* recip_result(const recip_context* ctx) { return ctx ? ctx->result.c_str() : ""; }

const char* recip_status_name(int status) {
  if (status < 0 || status > static_cast<int>(ErrorCode::Internal)) return "Unknown";
  return error_name(static_cast<ErrorCode>(status)).data();
}

int recip_legendre(recip_context* ctx, const char* a, const char* p, int* out) {
  return guarded(ctx, [&] {
    const Place v = Place::prime(integer(p));
    if (v.is_two()) throw Error(ErrorCode::BadPrime, "Legendre symbol needs an odd prime");
    return sign_result(legendre(integer(a), v.p()), out);
  });
}

int recip_hilbert(recip_context* ctx, const char* a, const char* b, const char* where, int* out) {
  return guarded(ctx, [&] {
    const Rational x = rational(a), y = rational(b);
    if (x == 0 || y == 0) throw Error(ErrorCode::ZeroInput, "Hilbert symbol of 0");
    return sign_result(hilbert(x, y, place(where)).value(), out);
  });
}

int recip_legendre_ext(recip_context* ctx, const char* a, const char* b, const char* m, const char* p, int* out) {
  return guarded(ctx, [&] {
    const Place v = Place::prime(integer(p));
    if (v.is_two()) throw Error(ErrorCode::BadPrime, "extended Legendre symbol needs an odd prime");
    return sign_result(legendre_ext(rational(a), rational(b), rational(m), v.p()).value(), out);
  });
}

int recip_quartic(recip_context* ctx, const char* m, const char* p, int* out) {
  return guarded(ctx, [&] {
    const Place v = Place::prime(integer(p));
    if (v.is_two()) return sign_result(quartic_2(rational(m)).value(), out);
    return sign_result(quartic_mod_p(integer(m), v.p()).value(), out);
  });
}

int recip_conic_solve(recip_context* ctx, const char* a, const char* b) {
  return guarded(ctx, [&] {
    const auto s = solve_conic(square_class(a), square_class(b));
    return json{{"x", to_string(s.x)}, {"y", to_string(s.y)}, {"z", to_string(s.z)}}.dump();
  });
}

int recip_f_eval(recip_context* ctx, const char* b, const char* a, const char* c, int trace, int* out) {
  return guarded(ctx, [&] {
    const Triple t{square_class(b), square_class(a), square_class(c)};
    const FResult r = f_checked(t);
    json j{{"triple", t.to_string()}, {"f1", r.first.value.value()}, {"f2", r.second.value.value()},
           {"solution_f1", r.first.solution.to_string()}, {"solution_f2", r.second.solution.to_string()}};
    if (r.f1_alternate) j["f1_alternate"] = {{"value", r.f1_alternate->value.value()}, {"solution", r.f1_alternate->solution.to_string()}};
    if (trace) j["trace"] = {{"f1", evaluation_json(r.first)}, {"f2", evaluation_json(r.second)}};
    if (!r.agree) {
      ctx->result = j.dump();
      throw Error(ErrorCode::F1F2Mismatch, t.to_string());
    }
    j["value"] = r.value.value();
    if (out) *out = r.value.value();
    return j.dump();
  });
}

int recip_verify_d(recip_context* ctx, long bound, int count, uint64_t seed, int* pass) {
  return guarded(ctx, [&] { return report_result(run_d_campaign(bound, count, seed), pass); });
}

int recip_verify_law(recip_context* ctx, const char* name, long max_prime, int* pass) {
  return guarded(ctx, [&] { return report_result(run_law(need(name), max_prime), pass); });
}

int recip_verify_example28(recip_context* ctx, long bound, uint64_t seed, int* pass) {
  return guarded(ctx, [&] { return report_result(search_example28(bound, seed), pass); });
}

int recip_verify_thm210(recip_context* ctx, long bound, int count, uint64_t seed, int* pass) {
  return guarded(ctx, [&] { return report_result(run_thm210_campaign(bound, count, seed), pass); });
}

}  // extern "C"
