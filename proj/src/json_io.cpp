#include "gsp/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace gsp {

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

Json json_float(double v) { return Json(round12(v)); }

Json json_measured(double v, double err) {
    Json out;
    out["value"] = round12(v);
    out["error_bound"] = round12(err);
    return out;
}

Json json_complex(const std::complex<double>& v, double err) {
    Json out;
    out["re"] = round12(v.real());
    out["im"] = round12(v.imag());
    out["error_bound"] = round12(err);
    return out;
}

Json json_rational(const Rational& r) { return Json(rat_to_string(r)); }

Json json_pipower(const PiPower& p) {
    Json out;
    out["coeff"] = rat_to_string(p.coeff);
    out["pi_exp"] = p.pi_exp;
    return out;
}

Json json_matrix(const Mat& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            entries.push_back(rat_to_string(m.at(i, j)));
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = entries;
    return out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace gsp
