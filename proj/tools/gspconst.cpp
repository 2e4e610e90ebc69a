#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsp/arch.hpp"
#include "gsp/assembly.hpp"
#include "gsp/dirichlet.hpp"
#include "gsp/json_io.hpp"
#include "gsp/ktype.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/oracles.hpp"
#include "gsp/satake.hpp"
#include "gsp/verify.hpp"

namespace {

using gsp::Json;

struct Emitter {
    std::string format;  // "json" or "csv"
    std::string out_path;

    std::ostream& stream(std::ofstream& file) const {
        if (out_path.empty()) return std::cout;
        file.open(out_path);
        if (!file) throw gsp::gsp_error("cannot open output file " + out_path);
        return file;
    }

    void json(const Json& doc) const {
        std::ofstream file;
        stream(file) << doc.dump(2) << "\n";
    }

    void csv(const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& rows) const {
        std::ofstream file;
        std::ostream& os = stream(file);
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << row[i];
            os << "\n";
        }
    }

    // Flat key/value fallback so every subcommand honors --format csv.
    void kv_csv(const Json& doc) const {
        std::vector<std::vector<std::string>> rows;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            const auto& v = it.value();
            std::string cell = v.is_string() ? gsp::csv_quote(v.get<std::string>())
                                             : v.dump();
            rows.push_back({it.key(), cell});
        }
        csv({"key", "value"}, rows);
    }

    void object(const Json& doc) const {
        if (format == "csv")
            kv_csv(doc);
        else
            json(doc);
    }
};

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("GSPCONST_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

gsp::Rational rat_arg(const std::string& s) { return gsp::rat_from_string(s); }

std::vector<std::pair<long, int>> factorize_level(long n) {
    if (n < 1) throw gsp::gsp_error("level N must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

void cmd_blattner(const Emitter& em, const std::vector<long>& lambda,
                  std::vector<long> weight) {
    gsp::HCParameter lam(lambda);
    if (!gsp::parity_condition(lam))
        throw gsp::gsp_error("lambda violates the parity condition");
    if (weight.size() == 1 && lambda.size() > 1)
        weight.assign(lambda.size(), weight[0]);
    gsp::KTypeVector m(weight);
    if (m.n() != lam.n())
        throw gsp::gsp_error("weight length must match lambda length");
    Json out;
    out["lambda"] = lambda;
    out["weight"] = weight;
    out["multiplicity"] =
        gsp::blattner_multiplicity(lam, m).convert_to<long long>();
    em.object(out);
}

void cmd_satake(const Emitter& em, int n, long q, int depth) {
    auto cartan = gsp::cartan_volume_series(n, q, depth);
    auto tele = gsp::telescoped_volume_series(n, q, depth);
    Json coeffs = Json::array();
    bool match = true;
    for (int d = 0; d <= depth; ++d) {
        coeffs.push_back(gsp::rat_to_string(cartan.coeff(d)));
        if (!(cartan.coeff(d) == tele.coeff(d))) match = false;
    }
    Json out;
    out["n"] = n;
    out["q"] = q;
    out["depth"] = depth;
    out["cartan_volume_coefficients"] = coeffs;
    out["telescoped_match"] = match;
    em.object(out);
}

void cmd_zeta(const Emitter& em, int n, long q,
              const std::vector<std::string>& alpha, const std::string& chi,
              const std::string& s, int depth) {
    std::vector<gsp::Rational> a;
    for (const auto& x : alpha) a.push_back(rat_arg(x));
    gsp::SatakeData sd(n, q, a, rat_arg(chi));
    gsp::EvaluationPoint pt{rat_arg(s)};
    gsp::ZetaValue series = gsp::unramified_zeta_series(sd, pt, depth);
    gsp::ZetaValue closed = gsp::unramified_zeta_closed(sd, pt);
    const double diff = std::fabs(series.value - closed.value);
    Json out;
    out["n"] = n;
    out["q"] = q;
    out["s"] = s;
    out["depth"] = depth;
    out["series"] = gsp::json_measured(series.value, series.tail_bound);
    if (series.exact)
        out["series_exact"] = gsp::rat_to_string(series.exact_value);
    out["closed"] = gsp::json_measured(closed.value, 0.0);
    if (closed.exact)
        out["closed_exact"] = gsp::rat_to_string(closed.exact_value);
    out["difference"] = gsp::json_float(diff);
    out["agrees_within_tail"] = diff <= series.tail_bound + 1e-12;
    em.object(out);
}

void cmd_lfactor(const Emitter& em, int n, long q,
                 const std::vector<std::string>& alpha, const std::string& chi) {
    std::vector<gsp::Rational> a;
    for (const auto& x : alpha) a.push_back(rat_arg(x));
    gsp::SatakeData sd(n, q, a, rat_arg(chi));
    gsp::LocalLFactor f = gsp::standard_lfactor(sd);
    Json den = Json::array();
    for (const auto& c : f.den.coeffs()) den.push_back(gsp::rat_to_string(c));
    Json out;
    out["q"] = q;
    out["degree"] = f.den.degree();
    out["denominator_ascending"] = den;
    em.object(out);
}

void cmd_gauss(const Emitter& em, long modulus,
               const std::vector<long>& exponents) {
    gsp::DirichletCharacter chi(modulus, exponents);
    std::complex<double> g = gsp::gauss_sum(chi);
    Json out;
    out["modulus"] = modulus;
    out["exponents"] = exponents;
    out["conductor"] = chi.conductor();
    out["primitive"] = chi.is_primitive();
    out["parity"] = chi.parity();
    // Rounding noise only: |N| terms, each a unit times a double cosine.
    out["gauss_sum"] =
        gsp::json_complex(g, 4e-16 * static_cast<double>(modulus));
    out["magnitude_squared"] = gsp::json_float(std::norm(g));
    em.object(out);
}

void cmd_volume(const Emitter& em, int n, long p, int m) {
    gsp::Integer order = gsp::sp_order_mod(n, p, m);
    Json out;
    out["n"] = n;
    out["p"] = p;
    out["m"] = m;
    out["order"] = order.str();
    out["volume"] =
        gsp::rat_to_string(gsp::principal_congruence_volume(n, p, m));
    em.object(out);
}

void cmd_arch(const Emitter& em, const std::vector<long>& kvec,
              std::optional<long> z, std::optional<long> r, long level) {
    gsp::ArchContext ctx(kvec);
    gsp::AkFunction ak = gsp::a_k(ctx);
    Json out;
    out["kvec"] = kvec;
    out["gamma_n"] = gsp::gamma_n(ctx.n).to_string();
    out["a_k_rational"] = ak.rational.to_string();
    out["a_k_two_power"] = {{"z_coeff", ak.two_a}, {"constant", ak.two_b}};
    if (z) out["a_k_at_z"] = gsp::rat_to_string(ak.eval_exact(*z));
    if (r) {
        out["r"] = *r;
        out["c_krnN"] = gsp::rat_to_string(
            gsp::c_krnN(ctx, *r, factorize_level(level)));
        out["level"] = level;
    }
    em.object(out);
}

void cmd_table(const Emitter& em, const std::vector<long>& kvec, long level,
               long rmin, long rmax) {
    gsp::ArchContext ctx(kvec);
    const long kn = kvec.back();
    const long bound = kn - ctx.n;
    auto fact = factorize_level(level);
    gsp::AkFunction ak = gsp::a_k(ctx);
    std::vector<std::vector<std::string>> rows;
    Json jrows = Json::array();
    for (long r = rmin; r <= rmax; ++r) {
        if (r < 1 || r > bound) continue;
        if (((r - bound) % 2 + 2) % 2 != 0) continue;
        gsp::Rational akv = ak.eval_exact(r - 1);
        gsp::Rational c = gsp::c_krnN(ctx, r, fact);
        rows.push_back({std::to_string(r),
                        gsp::csv_quote(gsp::rat_to_string(akv)),
                        gsp::csv_quote(gsp::rat_to_string(c))});
        Json jr;
        jr["r"] = r;
        jr["a_k_at_r_minus_1"] = gsp::rat_to_string(akv);
        jr["c_krnN"] = gsp::rat_to_string(c);
        jrows.push_back(jr);
    }
    if (rows.empty())
        throw gsp::gsp_error("empty critical range for this k-vector");
    if (em.format == "csv") {
        em.csv({"r", "a_k_at_r_minus_1", "c_krnN"}, rows);
    } else {
        Json out;
        out["kvec"] = kvec;
        out["level"] = level;
        out["rows"] = jrows;
        em.json(out);
    }
}

void cmd_sweep(const Emitter& em, long kmin, long kmax, long level) {
    std::vector<std::vector<std::string>> rows;
    Json jrows = Json::array();
    for (long k = kmin; k <= kmax; ++k) {
        gsp::ArchContext ctx({k, k});
        auto fact = factorize_level(level);
        const long bound = k - 2;
        for (long r = (bound % 2 == 0) ? 2 : 1; r <= bound; r += 2) {
            if (r < 1) continue;
            gsp::Rational c = gsp::c_krnN(ctx, r, fact);
            rows.push_back({std::to_string(k), std::to_string(r),
                            gsp::csv_quote(gsp::rat_to_string(c))});
            Json jr;
            jr["k"] = k;
            jr["r"] = r;
            jr["c_krnN"] = gsp::rat_to_string(c);
            jrows.push_back(jr);
        }
    }
    if (rows.empty()) throw gsp::gsp_error("empty critical range in sweep");
    if (em.format == "csv") {
        em.csv({"k", "r", "c_krnN"}, rows);
    } else {
        Json out;
        out["level"] = level;
        out["rows"] = jrows;
        em.json(out);
    }
}

int cmd_verify(const Emitter& em, const std::string& suite,
               unsigned long long seed, double tol_scale) {
    gsp::VerifyReport report = gsp::run_verify(suite, seed, tol_scale);
    Json checks = Json::array();
    for (const auto& ch : report.checks) {
        Json c;
        c["name"] = ch.name;
        c["pass"] = ch.pass;
        c["got"] = gsp::json_float(ch.got);
        c["want"] = gsp::json_float(ch.want);
        c["tolerance"] = gsp::json_float(ch.tolerance);
        checks.push_back(c);
    }
    Json out;
    out["suite"] = suite;
    out["seed"] = seed;
    out["all_pass"] = report.all_pass();
    out["checks"] = checks;
    em.json(out);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local constants for the symplectic standard L-function"};
    app.set_config("--config", "", "Flat key=value config file");

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path,
                   "Output file; relative paths resolve under GSPCONST_OUT_DIR");

    // blattner
    auto* sub_bl = app.add_subcommand("blattner", "K-type multiplicity");
    std::vector<long> bl_lambda;
    std::vector<long> bl_weight;
    sub_bl->add_option("--lambda", bl_lambda, "Harish-Chandra parameter")
        ->delimiter(',')
        ->required();
    sub_bl->add_option("--weight", bl_weight,
                       "K-type weight; a single value is broadcast")
        ->delimiter(',')
        ->required();

    // satake
    auto* sub_sa = app.add_subcommand("satake", "Cartan cell volume series");
    int sa_n = 1;
    long sa_q = 2;
    int sa_depth = 6;
    sub_sa->add_option("--n", sa_n, "Rank");
    sub_sa->add_option("--q", sa_q, "Residue cardinality");
    sub_sa->add_option("--depth", sa_depth, "Truncation degree");

    // zeta
    auto* sub_ze = app.add_subcommand("zeta", "Unramified zeta, both routes");
    int ze_n = 1;
    long ze_q = 2;
    std::vector<std::string> ze_alpha{"1"};
    std::string ze_chi = "1";
    std::string ze_s = "2";
    int ze_depth = 24;
    sub_ze->add_option("--n", ze_n, "Rank");
    sub_ze->add_option("--q", ze_q, "Residue cardinality");
    sub_ze->add_option("--alpha", ze_alpha, "Satake parameters")->delimiter(',');
    sub_ze->add_option("--chi", ze_chi, "chi(pi), rational");
    sub_ze->add_option("--s", ze_s, "Evaluation point, rational");
    sub_ze->add_option("--depth", ze_depth, "Series truncation");

    // lfactor
    auto* sub_lf = app.add_subcommand("lfactor", "Standard local L-factor");
    int lf_n = 1;
    long lf_q = 2;
    std::vector<std::string> lf_alpha{"1"};
    std::string lf_chi = "1";
    sub_lf->add_option("--n", lf_n, "Rank");
    sub_lf->add_option("--q", lf_q, "Residue cardinality");
    sub_lf->add_option("--alpha", lf_alpha, "Satake parameters")->delimiter(',');
    sub_lf->add_option("--chi", lf_chi, "chi(pi), rational");

    // gauss
    auto* sub_ga = app.add_subcommand("gauss", "Gauss sum of a character");
    long ga_mod = 1;
    std::vector<long> ga_exp;
    sub_ga->add_option("--modulus", ga_mod, "Modulus N")->required();
    sub_ga
        ->add_option("--exponents", ga_exp,
                     "Generator images, one per cyclic factor of (Z/N)^*")
        ->delimiter(',');

    // volume
    auto* sub_vo = app.add_subcommand("volume", "Congruence subgroup volume");
    int vo_n = 1;
    long vo_p = 2;
    int vo_m = 1;
    sub_vo->add_option("--n", vo_n, "Rank");
    sub_vo->add_option("--p", vo_p, "Prime")->required();
    sub_vo->add_option("--m", vo_m, "Level exponent");

    // arch
    auto* sub_ar = app.add_subcommand("arch", "Archimedean factors");
    std::vector<long> ar_kvec;
    long ar_z = 0, ar_r = 0, ar_level = 1;
    bool ar_has_z = false, ar_has_r = false;
    auto* ar_zopt = sub_ar->add_option("--z", ar_z, "Evaluate A_k at integer z");
    auto* ar_ropt = sub_ar->add_option("--r", ar_r, "Critical point for c_krnN");
    sub_ar->add_option("--kvec", ar_kvec, "Weight vector")
        ->delimiter(',')
        ->required();
    sub_ar->add_option("--N", ar_level, "Level for c_krnN");

    // table / constants
    auto* sub_ta = app.add_subcommand("table", "Critical-value table");
    std::vector<long> ta_kvec;
    long ta_level = 1, ta_rmin = 1, ta_rmax = 8;
    sub_ta->add_option("--kvec", ta_kvec, "Weight vector")
        ->delimiter(',')
        ->required();
    sub_ta->add_option("--N", ta_level, "Level");
    sub_ta->add_option("--rmin", ta_rmin, "Range start");
    sub_ta->add_option("--rmax", ta_rmax, "Range end");

    auto* sub_co = app.add_subcommand("constants", "Sweep c_{k,r,2,N}");
    long co_kmin = 6, co_kmax = 10, co_level = 1;
    bool co_sweep = false;
    sub_co->add_flag("--sweep", co_sweep, "Sweep scalar weights (k,k)");
    sub_co->add_option("--kmin", co_kmin, "Smallest scalar weight");
    sub_co->add_option("--kmax", co_kmax, "Largest scalar weight");
    sub_co->add_option("--N", co_level, "Level");

    // verify
    auto* sub_ve = app.add_subcommand("verify", "Numeric oracle suites");
    std::string ve_suite = "all";
    unsigned long long ve_seed = 7;
    double ve_scale = 1.0;
    sub_ve->add_option("--suite", ve_suite, "Suite name")
        ->check(CLI::IsMember(
            {"all", "selberg", "beta", "kak", "measure", "neretin", "exact"}));
    sub_ve->add_option("--seed", ve_seed, "Monte Carlo seed");
    sub_ve->add_option("--tolerance-scale", ve_scale,
                       "Multiplies every tolerance; 0 forces failures");

    app.require_subcommand(1);
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        Emitter em{format, resolve_out(out_path)};
        ar_has_z = ar_zopt->count() > 0;
        ar_has_r = ar_ropt->count() > 0;
        if (sub_bl->parsed()) cmd_blattner(em, bl_lambda, bl_weight);
        if (sub_sa->parsed()) cmd_satake(em, sa_n, sa_q, sa_depth);
        if (sub_ze->parsed())
            cmd_zeta(em, ze_n, ze_q, ze_alpha, ze_chi, ze_s, ze_depth);
        if (sub_lf->parsed()) cmd_lfactor(em, lf_n, lf_q, lf_alpha, lf_chi);
        if (sub_ga->parsed()) cmd_gauss(em, ga_mod, ga_exp);
        if (sub_vo->parsed()) cmd_volume(em, vo_n, vo_p, vo_m);
        if (sub_ar->parsed())
            cmd_arch(em, ar_kvec,
                     ar_has_z ? std::optional<long>(ar_z) : std::nullopt,
                     ar_has_r ? std::optional<long>(ar_r) : std::nullopt,
                     ar_level);
        if (sub_ta->parsed()) cmd_table(em, ta_kvec, ta_level, ta_rmin, ta_rmax);
        if (sub_co->parsed()) {
            if (!co_sweep)
                throw gsp::gsp_error(
                    "constants requires --sweep (or use the table subcommand)");
            cmd_sweep(em, co_kmin, co_kmax, co_level);
        }
        if (sub_ve->parsed()) return cmd_verify(em, ve_suite, ve_seed, ve_scale);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
