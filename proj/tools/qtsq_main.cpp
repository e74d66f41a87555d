#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtsq.h"

namespace {

using Json = nlohmann::json;

// Exit contract: 0 all pass, 1 verification failure, 2 usage/config error.
int exit_code_for(qtsq_status st) {
  switch (st) {
    case QTSQ_OK:
      return 0;
    case QTSQ_VERIFY_FAILED:
    case QTSQ_ERR_NUMERIC:
      return 1;
    default:
      return 2;
  }
}

struct ApiString {
  char* s = nullptr;
  ~ApiString() { qtsq_string_free(s); }
};

struct CtxGuard {
  qtsq_ctx* ctx = nullptr;
  ~CtxGuard() { qtsq_ctx_free(ctx); }
};

struct Options {
  int n = 3;
  int k = 1;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int cases = 25;
  std::string format;  // json | text; per-subcommand default
  std::string params;
  std::string h = "1";
  std::string out_path;
  std::string direction = "all";
  bool inverse = false;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int api_error(qtsq_status st) {
  std::cerr << "error: " << qtsq_last_error() << "\n";
  return exit_code_for(st);
}

std::vector<Json> parse_params_flag(const std::string& literal) {
  ApiString out;
  const qtsq_status st = qtsq_parse_complex_list(literal.c_str(), &out.s);
  if (st != QTSQ_OK) throw std::invalid_argument(qtsq_last_error());
  std::vector<Json> values;
  for (Json& v : Json::parse(out.s)) values.push_back(std::move(v));
  return values;
}

Json complex_flag(const std::string& literal) {
  const auto values = parse_params_flag(literal);
  if (values.size() != 1)
    throw std::invalid_argument("expected one complex value, got '" +
                                literal + "'");
  return values[0];
}

Json pair_at(const std::vector<Json>& v, size_t i) {
  return Json{{"x", v[i]}, {"y", v[i + 1]}};
}

// Reads the whole of stdin; the request JSON when --params is not given.
std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_complex(const Json& c) {
  const double re = c.at(0).get<double>();
  const double im = c.at(1).get<double>();
  if (im == 0.0) return fmt_real(re);
  if (im < 0.0) return fmt_real(re) + "-" + fmt_real(-im) + "j";
  return fmt_real(re) + "+" + fmt_real(im) + "j";
}

std::string matrix_shape(const Json& m) {
  return std::to_string(m.at("rows").get<long>()) + "x" +
         std::to_string(m.at("cols").get<long>());
}

std::string text_render(const std::string& cmd, const Json& j) {
  std::ostringstream out;
  if (cmd == "ctx") {
    out << "n = " << j.at("n").get<int>() << "\n"
        << "k = " << j.at("k").get<int>() << "\n"
        << "q = " << fmt_complex(j.at("q")) << "\n"
        << "q^2 = " << fmt_complex(j.at("q_squared")) << "\n"
        << "tol_rank = " << fmt_real(j.at("tol_rank").get<double>()) << "\n"
        << "tol_residual = "
        << fmt_real(j.at("tol_residual").get<double>()) << "\n";
  } else if (cmd == "rep") {
    out << "params: x = " << fmt_complex(j.at("params").at("x"))
        << ", y = " << fmt_complex(j.at("params").at("y")) << "\n"
        << "X: " << matrix_shape(j.at("X")) << "\n"
        << "Y: " << matrix_shape(j.at("Y")) << "\n";
  } else if (cmd == "cg") {
    out << "params: x = " << fmt_complex(j.at("params").at("x"))
        << ", y = " << fmt_complex(j.at("params").at("y")) << "\n"
        << "product: x = " << fmt_complex(j.at("product").at("x"))
        << ", y = " << fmt_complex(j.at("product").at("y")) << "\n"
        << "basis: " << j.at("basis").size() << " maps of "
        << matrix_shape(j.at("basis").at(0)) << "\n"
        << "omega: " << matrix_shape(j.at("omega")) << "\n";
  } else if (cmd == "sixj") {
    out << "r: " << matrix_shape(j.at("r")) << "\n"
        << "factor_residual = "
        << fmt_real(j.at("factor_residual").get<double>()) << "\n";
  } else if (cmd == "flip") {
    const Json& p = j.at("params");
    out << "(" << fmt_complex(p.at(0)) << ", " << fmt_complex(p.at(1))
        << ", " << fmt_complex(p.at(2)) << ", " << fmt_complex(p.at(3))
        << "), h' = " << fmt_complex(j.at("h")) << "\n"
        << "x5' = " << fmt_complex(j.at("x5")) << "\n";
  } else if (cmd == "intertwiner") {
    out << "l: " << matrix_shape(j.at("l")) << ", unit Frobenius norm\n";
    const Json& p = j.at("flipped").at("params");
    out << "flipped: (" << fmt_complex(p.at(0)) << ", "
        << fmt_complex(p.at(1)) << ", " << fmt_complex(p.at(2)) << ", "
        << fmt_complex(p.at(3)) << ")\n";
  } else if (cmd == "pentagon" && j.contains("cases")) {
    for (const Json& e : j.at("cases")) {
      if (e.at("pass").get<bool>()) {
        out << "scalar = " << fmt_complex(e.at("scalar"))
            << ", residual = " << fmt_real(e.at("residual").get<double>())
            << "\n";
      } else {
        out << "failed: " << e.value("error", std::string("?")) << "\n";
      }
    }
    out << (j.at("pass").get<bool>() ? "pass" : "fail") << "\n";
  } else if (cmd == "pentagon") {
    if (j.at("pass").get<bool>()) {
      out << "scalar = " << fmt_complex(j.at("scalar"))
          << ", residual = " << fmt_real(j.at("residual").get<double>())
          << "\n";
    } else {
      out << "failed: " << j.value("error", std::string("?")) << "\n";
    }
  } else if (cmd == "verify" || cmd == "selftest") {
    const Json& suite = cmd == "selftest" ? j.at("suite") : j;
    for (const Json& rep : suite.at("reports")) {
      double worst = 0.0;
      for (const auto& r : rep.at("residuals").items())
        worst = std::max(worst, r.value().get<double>());
      out << rep.at("direction").get<std::string>() << "["
          << rep.at("case_index").get<int>() << "] "
          << (rep.at("pass").get<bool>() ? "pass" : "FAIL")
          << " worst = " << fmt_real(worst);
      if (rep.contains("error"))
        out << " (" << rep.at("error").get<std::string>() << ")";
      out << "\n";
    }
    out << (j.at("pass").get<bool>() ? "pass" : "fail") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return out.str();
}

// JSON responses pass through byte-for-byte; text mode re-renders them.
int emit(const Options& o, const std::string& cmd, const char* payload) {
  std::string bytes = payload;
  if (o.format == "text") bytes = text_render(cmd, Json::parse(payload));
  if (o.out_path.empty()) {
    std::cout << bytes;
    return 0;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) return usage_error("cannot open output file " + o.out_path);
  f << bytes;
  return 0;
}

int run_json_op(const Options& o, const std::string& cmd, const Json& request,
                qtsq_status (*op)(const qtsq_ctx*, const char*, char**)) {
  CtxGuard g;
  qtsq_status st = qtsq_ctx_new(o.n, o.k, o.tol, &g.ctx);
  if (st != QTSQ_OK) return api_error(st);
  ApiString out;
  st = op(g.ctx, request.dump().c_str(), &out.s);
  if (st != QTSQ_OK && st != QTSQ_VERIFY_FAILED) return api_error(st);
  const int emit_rc = emit(o, cmd, out.s);
  if (emit_rc != 0) return emit_rc;
  return exit_code_for(st);
}

// --params when present, otherwise the stdin JSON request, checked for the
// expected arity so mistakes surface as usage errors.
Json request_from(const Options& o, size_t arity,
                  Json (*build)(const std::vector<Json>&)) {
  if (!o.params.empty()) {
    const auto values = parse_params_flag(o.params);
    if (values.size() != arity)
      throw std::invalid_argument("expected " + std::to_string(arity) +
                                  " comma-separated complex values");
    return build(values);
  }
  const std::string raw = read_stdin();
  if (raw.empty())
    throw std::invalid_argument("no --params and empty standard input");
  return Json::parse(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of the Weyl algebra at a root of unity and "
               "intertwiners of the quantum square"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");
  Options o;

  auto add_context = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--n", o.n, "dimension / order of the root")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--k", o.k, "root selector, coprime to n");
    cmd->add_option("--tol", o.tol, "residual and rank tolerance");
    cmd->add_option("--out", o.out_path, "write the report to a file");
  };
  auto add_format = [&](CLI::App* cmd, const char* def) {
    o.format.clear();
    cmd->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_str(def);
  };

  CLI::App* c_ctx = app.add_subcommand("ctx", "print the root context");
  add_context(c_ctx);
  add_format(c_ctx, "json");

  CLI::App* c_rep = app.add_subcommand(
      "rep", "standard representation for parameters x,y");
  add_context(c_rep);
  add_format(c_rep, "json");
  c_rep->add_option("--params", o.params, "x,y");

  CLI::App* c_cg = app.add_subcommand(
      "cg", "equivariant solution space and evaluation map of a pair");
  add_context(c_cg);
  add_format(c_cg, "json");
  c_cg->add_option("--params", o.params, "mu.x,mu.y,nu.x,nu.y");

  CLI::App* c_sixj = app.add_subcommand(
      "sixj", "recoupling operator and factorization residual of a triple");
  add_context(c_sixj);
  add_format(c_sixj, "json");
  c_sixj->add_option("--params", o.params,
                     "mu.x,mu.y,nu.x,nu.y,sigma.x,sigma.y");

  CLI::App* c_pent = app.add_subcommand(
      "pentagon", "pentagon composites, explicit or seeded quadruples");
  add_context(c_pent);
  add_format(c_pent, "json");
  c_pent->add_option("--params", o.params, "four x,y pairs");
  c_pent->add_option("--seed", o.seed, "seed for quadruple sampling");
  c_pent->add_option("--cases", o.cases, "seeded quadruples to run")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_flip = app.add_subcommand(
      "flip", "transport a square datum across the diagonal flip");
  add_context(c_flip);
  add_format(c_flip, "text");
  c_flip->add_option("--params", o.params, "x1,x2,x3,x4");
  c_flip->add_option("--h", o.h, "central charge (default 1)");
  c_flip->add_flag("--inverse", o.inverse, "apply the inverse transport");

  CLI::App* c_int = app.add_subcommand(
      "intertwiner", "solve for the intertwiner of a square datum");
  add_context(c_int);
  add_format(c_int, "json");
  c_int->add_option("--params", o.params, "x1,x2,x3,x4");
  c_int->add_option("--h", o.h, "central charge (default 1)");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "run seeded verification cases for one or all directions");
  add_context(c_verify);
  add_format(c_verify, "json");
  c_verify
      ->add_option("direction", o.direction, "1to3 | 3to1 | 2to3 | 3to2 | all")
      ->check(CLI::IsMember({"1to3", "3to1", "2to3", "3to2", "all"}));
  c_verify->add_option("--seed", o.seed, "case stream seed");
  c_verify->add_option("--cases", o.cases, "cases per direction")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_self = app.add_subcommand(
      "selftest", "full seeded invariant suite plus pentagon composites");
  add_context(c_self);
  add_format(c_self, "json");
  c_self->add_option("--seed", o.seed, "case stream seed");
  c_self->add_option("--cases", o.cases, "cases per direction")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (o.format.empty())
    o.format = app.got_subcommand(c_flip) ? "text" : "json";

  try {
    if (app.got_subcommand(c_ctx)) {
      CtxGuard g;
      qtsq_status st = qtsq_ctx_new(o.n, o.k, o.tol, &g.ctx);
      if (st != QTSQ_OK) return api_error(st);
      ApiString out;
      st = qtsq_root_context(g.ctx, &out.s);
      if (st != QTSQ_OK) return api_error(st);
      return emit(o, "ctx", out.s);
    }
    if (app.got_subcommand(c_rep)) {
      const Json req = request_from(
          o, 2, +[](const std::vector<Json>& v) { return pair_at(v, 0); });
      return run_json_op(o, "rep", req, qtsq_standard_rep);
    }
    if (app.got_subcommand(c_cg)) {
      const Json req = request_from(o, 4, +[](const std::vector<Json>& v) {
        return Json{{"mu", pair_at(v, 0)}, {"nu", pair_at(v, 2)}};
      });
      return run_json_op(o, "cg", req, qtsq_cg);
    }
    if (app.got_subcommand(c_sixj)) {
      const Json req = request_from(o, 6, +[](const std::vector<Json>& v) {
        return Json{{"mu", pair_at(v, 0)},
                    {"nu", pair_at(v, 2)},
                    {"sigma", pair_at(v, 4)}};
      });
      return run_json_op(o, "sixj", req, qtsq_sixj);
    }
    if (app.got_subcommand(c_pent)) {
      if (!o.params.empty()) {
        const Json req = request_from(o, 8, +[](const std::vector<Json>& v) {
          return Json{{"mu", pair_at(v, 0)},
                      {"nu", pair_at(v, 2)},
                      {"sigma", pair_at(v, 4)},
                      {"tau", pair_at(v, 6)}};
        });
        return run_json_op(o, "pentagon", req, qtsq_pentagon);
      }
      CtxGuard g;
      qtsq_status st = qtsq_ctx_new(o.n, o.k, o.tol, &g.ctx);
      if (st != QTSQ_OK) return api_error(st);
      ApiString out;
      const int cases = c_pent->count("--cases") ? o.cases : 10;
      st = qtsq_pentagon_suite(g.ctx, o.seed, cases, &out.s);
      if (st != QTSQ_OK && st != QTSQ_VERIFY_FAILED) return api_error(st);
      const int emit_rc = emit(o, "pentagon", out.s);
      return emit_rc != 0 ? emit_rc : exit_code_for(st);
    }
    if (app.got_subcommand(c_flip)) {
      Json req;
      if (!o.params.empty()) {
        const auto values = parse_params_flag(o.params);
        if (values.size() != 4)
          throw std::invalid_argument(
              "expected four comma-separated complex values");
        req = Json{{"params", values},
                   {"h", complex_flag(o.h)},
                   {"inverse", o.inverse}};
      } else {
        const std::string raw = read_stdin();
        if (raw.empty())
          throw std::invalid_argument("no --params and empty standard input");
        req = Json::parse(raw);
        if (o.inverse) req["inverse"] = true;
      }
      return run_json_op(o, "flip", req, qtsq_flip);
    }
    if (app.got_subcommand(c_int)) {
      Json req;
      if (!o.params.empty()) {
        const auto values = parse_params_flag(o.params);
        if (values.size() != 4)
          throw std::invalid_argument(
              "expected four comma-separated complex values");
        req = Json{{"params", values}, {"h", complex_flag(o.h)}};
      } else {
        const std::string raw = read_stdin();
        if (raw.empty())
          throw std::invalid_argument("no --params and empty standard input");
        req = Json::parse(raw);
      }
      return run_json_op(o, "intertwiner", req, qtsq_intertwiner);
    }
    if (app.got_subcommand(c_verify)) {
      const Json req{
          {"direction", o.direction}, {"seed", o.seed}, {"cases", o.cases}};
      return run_json_op(o, "verify", req, qtsq_verify);
    }
    if (app.got_subcommand(c_self)) {
      CtxGuard g;
      qtsq_status st = qtsq_ctx_new(o.n, o.k, o.tol, &g.ctx);
      if (st != QTSQ_OK) return api_error(st);
      ApiString out;
      st = qtsq_selftest(g.ctx, o.seed, o.cases, &out.s);
      if (st != QTSQ_OK && st != QTSQ_VERIFY_FAILED) return api_error(st);
      const int emit_rc = emit(o, "selftest", out.s);
      return emit_rc != 0 ? emit_rc : exit_code_for(st);
    }
  } catch (const Json::exception& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return usage_error("no subcommand");
}
