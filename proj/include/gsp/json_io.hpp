#pragma once

#include <complex>
#include <string>

#include "json.hpp"

#include "gsp/matrix.hpp"
#include "gsp/pi_power.hpp"

namespace gsp {

using Json = nlohmann::ordered_json;

// Round to 12 significant digits so repeated runs serialize byte-identically.
double round12(double v);

Json json_float(double v);
// {"value": ..., "error_bound": ...}
Json json_measured(double v, double err);
// {"re": ..., "im": ..., "error_bound": ...}
Json json_complex(const std::complex<double>& v, double err);
// Exact rationals travel as "num/den" strings, never as floats.
Json json_rational(const Rational& r);
// {"coeff": "num/den", "pi_exp": e}
Json json_pipower(const PiPower& p);
// {"rows": r, "cols": c, "entries": ["num/den", ...]} row-major.
Json json_matrix(const Mat& m);

// CSV field quoting: wraps in double quotes, doubling embedded quotes.
std::string csv_quote(const std::string& field);

}  // namespace gsp
