#pragma once

#include <string>

#include "json.hpp"
#include "theorem.hpp"

namespace qtsq {

// Wire formats. Complex is [re, im]; Matrix is
// {"rows": r, "cols": c, "data": [[re, im], ...]} flattened row-major.
// nlohmann::json keeps object keys sorted, so identical values serialize to
// identical bytes; every dump below is deterministic.
using Json = nlohmann::json;

Json complex_json(Complex c);
Json matrix_json(const Matrix& m);
Json params_json(const WeylParams& p);
Json triangle_params_json(const TriangleParams& p);
Json context_json(const RootContext& ctx);
Json rep_json(const WeylAction& a);
Json cg_json(const CGSpace& cg, const Matrix& omega);
Json sixj_json(const SixJSymbol& sj);
Json local_rep_json(const LocalRep& lr);
Json flip_json(const FlipData& fd);
Json report_json(const DirectionReport& rep, int case_index);
Json suite_json(const SuiteReport& suite);

// Accepts [re, im] or a bare number.
Complex parse_complex(const Json& j);
// Accepts {"x": c, "y": c} or [c, c].
WeylParams parse_params(const Json& j);
Matrix parse_matrix(const Json& j);

// Command-line literal: "re", "imj", or "re+imj" with optional signs and
// exponents ("2", "-1.5e-3", "2j", "1+2j", "1e2-3.5e-1j").
Complex parse_complex_literal(const std::string& s);
// Comma-separated literals.
std::vector<Complex> parse_complex_list(const std::string& s);

// Two-space indent, sorted keys, trailing newline.
std::string dump_report(const Json& j);

}  // namespace qtsq
