#include "serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace qtsq {

namespace {

double parse_real_piece(const std::string& s) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric literal: '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("bad numeric literal: '" + s + "'");
  return v;
}

}  // namespace

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json matrix_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(complex_json(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json params_json(const WeylParams& p) {
  return Json{{"x", complex_json(p.x)}, {"y", complex_json(p.y)}};
}

Json triangle_params_json(const TriangleParams& p) {
  return Json{{"x", complex_json(p.x)},
              {"y", complex_json(p.y)},
              {"z", complex_json(p.z)},
              {"h", complex_json(p.h)}};
}

Json context_json(const RootContext& ctx) {
  return Json{{"n", ctx.n},
              {"k", ctx.k},
              {"q", complex_json(ctx.q)},
              {"q_squared", complex_json(ctx.q_pow(2))},
              {"tol_rank", ctx.tol_rank},
              {"tol_residual", ctx.tol_residual}};
}

Json rep_json(const WeylAction& a) {
  return Json{{"params", params_json(extract_params(a))},
              {"X", matrix_json(a.X)},
              {"Y", matrix_json(a.Y)}};
}

Json cg_json(const CGSpace& cg, const Matrix& omega) {
  Json basis = Json::array();
  for (const Matrix& b : cg.basis) basis.push_back(matrix_json(b));
  return Json{{"mu", params_json(cg.mu)},
              {"nu", params_json(cg.nu)},
              {"params", params_json(cg.params)},
              {"product", params_json(product_params(cg.mu, cg.nu))},
              {"basis", basis},
              {"induced_x", matrix_json(cg.induced_x)},
              {"induced_y", matrix_json(cg.induced_y)},
              {"omega", matrix_json(omega)}};
}

Json sixj_json(const SixJSymbol& sj) {
  return Json{{"mu", params_json(sj.mu)},
              {"nu", params_json(sj.nu)},
              {"sigma", params_json(sj.sigma)},
              {"r", matrix_json(sj.r)},
              {"factor_residual", sj.factor_residual}};
}

Json local_rep_json(const LocalRep& lr) {
  Json g = Json::array();
  for (const Matrix& m : lr.g) g.push_back(matrix_json(m));
  Json params = Json::array();
  for (Complex c : lr.params) params.push_back(complex_json(c));
  return Json{
      {"triangulation",
       lr.which == Triangulation::lambda ? "lambda" : "lambda_prime"},
      {"t1", triangle_params_json(lr.t1.p)},
      {"t2", triangle_params_json(lr.t2.p)},
      {"generators", g},
      {"params", params},
      {"x5", complex_json(lr.x5)},
      {"h", complex_json(lr.h)}};
}

Json flip_json(const FlipData& fd) {
  Json params = Json::array();
  for (Complex c : fd.params) params.push_back(complex_json(c));
  return Json{{"params", params},
              {"h", complex_json(fd.h)},
              {"x5", complex_json(fd.x5)}};
}

Json report_json(const DirectionReport& rep, int case_index) {
  Json params = Json::object();
  for (const auto& [name, value] : rep.params) params[name] = complex_json(value);
  Json residuals = Json::object();
  for (const auto& r : rep.residuals) residuals[r.name] = r.value;
  Json out{{"direction", rep.direction},
           {"case_index", case_index},
           {"params", params},
           {"residuals", residuals},
           {"scalar", rep.scalar ? complex_json(*rep.scalar) : Json()},
           {"pass", rep.pass}};
  if (!rep.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [name, value] : rep.notes) notes[name] = value;
    out["notes"] = notes;
  }
  if (!rep.error.empty()) out["error"] = rep.error;
  return out;
}

Json suite_json(const SuiteReport& suite) {
  Json reports = Json::array();
  int index = 0;
  for (const auto& rep : suite.reports)
    reports.push_back(report_json(rep, index++));
  return Json{{"n", suite.n},
              {"seed", suite.seed},
              {"pass", suite.pass},
              {"reports", reports}};
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected a complex value as [re, im]");
}

WeylParams parse_params(const Json& j) {
  if (j.is_object()) return {parse_complex(j.at("x")), parse_complex(j.at("y"))};
  if (j.is_array() && j.size() == 2)
    return {parse_complex(j[0]), parse_complex(j[1])};
  throw std::invalid_argument("expected parameters as {\"x\", \"y\"} or [x, y]");
}

Matrix parse_matrix(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const Json& data = j.at("data");
  if (rows < 0 || cols < 0 ||
      data.size() != static_cast<size_t>(rows * cols))
    throw std::invalid_argument("matrix data length does not match shape");
  Matrix m(rows, cols);
  size_t idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) m(i, j2) = parse_complex(data[idx++]);
  return m;
}

Complex parse_complex_literal(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const bool imaginary = s.back() == 'j' || s.back() == 'J';
  if (!imaginary) return Complex(parse_real_piece(s), 0.0);
  s.pop_back();
  // Split at the last sign that does not follow an exponent marker.
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i;
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return Complex(0.0, 1.0);
    if (s == "-") return Complex(0.0, -1.0);
    return Complex(0.0, parse_real_piece(s));
  }
  const std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(parse_real_piece(re), parse_real_piece(im));
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_complex_literal(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qtsq
