#include "qtsq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sampling.hpp"
#include "serialize.hpp"

namespace {

using namespace qtsq;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qtsq_status fail(qtsq_status st, const std::string& message) {
  g_last_error = message;
  return st;
}

// Exceptions carry the status: json parse problems map to PARSE, violated
// preconditions to INVALID, failed numerical invariants to NUMERIC.
template <typename Fn>
qtsq_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    return fail(QTSQ_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QTSQ_ERR_INVALID, e.what());
  } catch (const NumericError& e) {
    return fail(QTSQ_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(QTSQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QTSQ_ERR_INTERNAL, "unknown error");
  }
}

qtsq_status write_out(const Json& j, char** out_json) {
  if (!out_json) return fail(QTSQ_ERR_INVALID, "null output pointer");
  *out_json = dup_string(dump_report(j));
  if (!*out_json) return fail(QTSQ_ERR_INTERNAL, "allocation failed");
  return QTSQ_OK;
}

const RootContext& context_of(const qtsq_ctx* ctx);

Json parse_input(const char* in_json) {
  if (!in_json) throw std::invalid_argument("null input");
  return Json::parse(in_json);
}

std::array<Complex, 4> parse_datum(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("expected four complex parameters");
  return {parse_complex(j[0]), parse_complex(j[1]), parse_complex(j[2]),
          parse_complex(j[3])};
}

Json pentagon_block(const RootContext& rc, uint64_t seed, int cases,
                    bool& pass) {
  Json entries = Json::array();
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    Json entry;
    try {
      const auto quad = s.regular_quadruple();
      const auto [residual, scalar] =
          pentagon_check(rc, quad[0], quad[1], quad[2], quad[3]);
      entry = Json{{"residual", residual},
                   {"scalar", complex_json(scalar)},
                   {"pass", true}};
    } catch (const NumericError& e) {
      entry = Json{{"pass", false}, {"error", e.what()}};
      pass = false;
    }
    entries.push_back(entry);
  }
  return entries;
}

}  // namespace

struct qtsq_ctx {
  qtsq::RootContext ctx;
};

namespace {
const RootContext& context_of(const qtsq_ctx* ctx) {
  if (!ctx) throw std::invalid_argument("null context");
  return ctx->ctx;
}
}  // namespace

extern "C" {

const char* qtsq_version(void) { return "1.0.0"; }

const char* qtsq_last_error(void) { return g_last_error.c_str(); }

void qtsq_string_free(char* s) { std::free(s); }

qtsq_status qtsq_parse_complex_list(const char* literal, char** out_json) {
  return guarded([&] {
    if (!literal) return fail(QTSQ_ERR_INVALID, "null input");
    Json out = Json::array();
    for (Complex c : parse_complex_list(literal))
      out.push_back(complex_json(c));
    return write_out(out, out_json);
  });
}

qtsq_status qtsq_ctx_new(int n, int k, double tol, qtsq_ctx** out) {
  return guarded([&] {
    if (!out) return fail(QTSQ_ERR_INVALID, "null output pointer");
    if (tol > 1e-2)
      return fail(QTSQ_ERR_INVALID, "tolerance must lie in (0, 1e-2]");
    const double effective = tol > 0 ? tol : 1e-8;
    *out = new qtsq_ctx{make_root_context(n, k, effective)};
    return QTSQ_OK;
  });
}

void qtsq_ctx_free(qtsq_ctx* ctx) { delete ctx; }

qtsq_status qtsq_root_context(const qtsq_ctx* ctx, char** out_json) {
  return guarded(
      [&] { return write_out(context_json(context_of(ctx)), out_json); });
}

qtsq_status qtsq_standard_rep(const qtsq_ctx* ctx, const char* in_json,
                              char** out_json) {
  return guarded([&] {
    const Json in = parse_input(in_json);
    const WeylAction a = standard_rep(context_of(ctx), parse_params(in));
    return write_out(rep_json(a), out_json);
  });
}

qtsq_status qtsq_cg(const qtsq_ctx* ctx, const char* in_json,
                    char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const WeylParams mu = parse_params(in.at("mu"));
    const WeylParams nu = parse_params(in.at("nu"));
    if (!is_regular_sequence({mu, nu}).ok)
      throw std::invalid_argument("pair is not regular");
    const CGSpace cg =
        canonicalize(cg_space(standard_rep(rc, mu), standard_rep(rc, nu)));
    return write_out(cg_json(cg, omega_map(cg)), out_json);
  });
}

qtsq_status qtsq_sixj(const qtsq_ctx* ctx, const char* in_json,
                      char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const WeylParams mu = parse_params(in.at("mu"));
    const WeylParams nu = parse_params(in.at("nu"));
    const WeylParams sigma = parse_params(in.at("sigma"));
    if (!is_regular_sequence({mu, nu, sigma}).ok)
      throw std::invalid_argument("triple is not regular");
    const SixJSymbol sj = sixj(rc, mu, nu, sigma);
    return write_out(sixj_json(sj), out_json);
  });
}

qtsq_status qtsq_pentagon(const qtsq_ctx* ctx, const char* in_json,
                          char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const double tol = in.value("tol", 1e-7);
    Json out;
    try {
      const auto [residual, scalar] = pentagon_check(
          rc, parse_params(in.at("mu")), parse_params(in.at("nu")),
          parse_params(in.at("sigma")), parse_params(in.at("tau")), tol);
      out = Json{{"residual", residual},
                 {"scalar", complex_json(scalar)},
                 {"pass", true}};
    } catch (const NumericError& e) {
      out = Json{{"residual", Json()},
                 {"scalar", Json()},
                 {"pass", false},
                 {"error", e.what()}};
      const qtsq_status st = write_out(out, out_json);
      return st == QTSQ_OK ? fail(QTSQ_VERIFY_FAILED, e.what()) : st;
    }
    return write_out(out, out_json);
  });
}

qtsq_status qtsq_pentagon_suite(const qtsq_ctx* ctx, uint64_t seed,
                                int cases, char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    if (cases < 0) return fail(QTSQ_ERR_INVALID, "cases must be >= 0");
    bool pass = true;
    const Json entries = pentagon_block(rc, seed, cases, pass);
    const Json out{
        {"n", rc.n}, {"seed", seed}, {"pass", pass}, {"cases", entries}};
    const qtsq_status st = write_out(out, out_json);
    if (st != QTSQ_OK) return st;
    return pass ? QTSQ_OK : fail(QTSQ_VERIFY_FAILED, "pentagon case failed");
  });
}

qtsq_status qtsq_flip(const qtsq_ctx* ctx, const char* in_json,
                      char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const std::array<Complex, 4> x = parse_datum(in.at("params"));
    const Complex h =
        in.contains("h") ? parse_complex(in.at("h")) : Complex(1, 0);
    const bool inverse = in.value("inverse", false);
    const FlipData fd = inverse ? flip_params_inverse(x, h, rc.n)
                                : flip_params(x, h, rc.n);
    return write_out(flip_json(fd), out_json);
  });
}

qtsq_status qtsq_intertwiner(const qtsq_ctx* ctx, const char* in_json,
                             char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const std::array<Complex, 4> x = parse_datum(in.at("params"));
    const Complex h =
        in.contains("h") ? parse_complex(in.at("h")) : Complex(1, 0);
    const LocalRep a =
        local_rep_from_classification(rc, Triangulation::lambda, x, h);
    const FlipData fd = flip_params(x, h, rc.n);
    const LocalRep b = local_rep_from_classification(
        rc, Triangulation::lambda_prime, fd.params, h);
    const Matrix l = solve_intertwiner(a, b);
    Json params = Json::array();
    for (Complex c : x) params.push_back(complex_json(c));
    return write_out(Json{{"l", matrix_json(l)},
                          {"params", params},
                          {"flipped", flip_json(fd)},
                          {"h", complex_json(h)}},
                     out_json);
  });
}

qtsq_status qtsq_verify(const qtsq_ctx* ctx, const char* in_json,
                        char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    const Json in = parse_input(in_json);
    const std::string direction = in.value("direction", "all");
    const auto seed = in.value("seed", std::uint64_t{0});
    const int cases = in.value("cases", 25);
    if (cases < 0) return fail(QTSQ_ERR_INVALID, "cases must be >= 0");
    SuiteReport suite;
    if (direction == "all") {
      suite = verify_all(rc, seed, cases);
    } else {
      const auto d = parse_direction(direction);
      if (!d)
        return fail(QTSQ_ERR_INVALID,
                    "direction must be 1to3, 3to1, 2to3, 3to2 or all");
      suite = verify_direction(rc, *d, seed, cases);
    }
    const qtsq_status st = write_out(suite_json(suite), out_json);
    if (st != QTSQ_OK) return st;
    return suite.pass ? QTSQ_OK
                      : fail(QTSQ_VERIFY_FAILED, "verification failed");
  });
}

qtsq_status qtsq_selftest(const qtsq_ctx* ctx, uint64_t seed, int cases,
                          char** out_json) {
  return guarded([&] {
    const RootContext& rc = context_of(ctx);
    if (cases < 0) return fail(QTSQ_ERR_INVALID, "cases must be >= 0");
    const SuiteReport suite = verify_all(rc, seed, cases);
    bool pass = suite.pass;
    const int pentagon_cases = cases > 0 ? (cases + 4) / 5 : 0;
    const Json pentagon =
        pentagon_block(rc, seed ^ 0x70656e74u, pentagon_cases, pass);
    const Json out{{"n", rc.n},
                   {"seed", seed},
                   {"pass", pass},
                   {"suite", suite_json(suite)},
                   {"pentagon", pentagon}};
    const qtsq_status st = write_out(out, out_json);
    if (st != QTSQ_OK) return st;
    return pass ? QTSQ_OK : fail(QTSQ_VERIFY_FAILED, "selftest failed");
  });
}

}  // extern "C"
