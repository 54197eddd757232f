// ksurf: command-line front end for the K-theory, series and strata tools.
//
// Exit codes: 0 success, 1 usage error (bad flags, malformed classes,
// unreadable files), 2 validation failure (nonzero residuals, failed checks,
// violated hypotheses).

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include <ksurf/acceptance.hpp>
#include <ksurf/goettsche.hpp>
#include <ksurf/invariants.hpp>
#include <ksurf/io.hpp>
#include <ksurf/series.hpp>
#include <ksurf/strata.hpp>

namespace
{

using namespace ksurf;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ValidationFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Input-side parsing: anything thrown here is the caller's fault.
template <class F>
auto as_usage(const std::string &what, F &&f)
{
    try {
        return f();
    } catch (const std::exception &e) {
        throw UsageError(what + ": " + e.what());
    }
}

bool use_color()
{
    const char *no_color = std::getenv("NO_COLOR");
    if (no_color != nullptr && *no_color != '\0') {
        return false;
    }
    return isatty(fileno(stdout)) != 0;
}

struct Options
{
    std::string surface = "p2";
    std::string emit = "text";
    std::string x, y, e0, e;
    std::string side = "left";
    std::string config;
    std::int64_t rk_e0 = 1, a = 0, r = 1;
    std::int64_t n = -1;
    int hilb_n = 0;
    std::string data_dir;
};

SurfaceModel surface_of(const Options &o)
{
    return as_usage("--surface", [&] { return resolve_surface(o.surface); });
}

KClass class_of(const SurfaceModel &s, const std::string &flag, const std::string &text)
{
    return as_usage(flag, [&] {
        KClass x = parse_kclass(text);
        check_kclass(s, x);
        return x;
    });
}

Emit emit_of(const Options &o)
{
    return as_usage("--emit", [&] { return parse_emit(o.emit); });
}

void print_json(const Json &j)
{
    std::cout << j.dump(2) << '\n';
}

int cmd_pair(const Options &o)
{
    const auto s = surface_of(o);
    const auto x = class_of(s, "--x", o.x);
    const auto y = class_of(s, "--y", o.y);
    const auto v = euler_pairing(s, x, y);
    switch (emit_of(o)) {
    case Emit::json:
        print_json(Json{{"x", to_json(x)}, {"y", to_json(y)}, {"chi", v}, {"defect", symmetry_defect(s, x, y)}});
        break;
    case Emit::csv:
        std::cout << "x,y,chi\n\"" << format_kclass_csv(x) << "\",\"" << format_kclass_csv(y) << "\"," << v << '\n';
        break;
    case Emit::text:
        std::cout << v << '\n';
        break;
    }
    return 0;
}

int cmd_reflect(const Options &o)
{
    const auto s = surface_of(o);
    const auto e0 = class_of(s, "--e0", o.e0);
    const auto x = class_of(s, "--x", o.x);
    KClass out;
    if (o.side == "left") {
        out = reflect_left(s, e0, x);
    } else if (o.side == "right") {
        out = reflect_right(s, e0, x);
    } else {
        throw UsageError("--side must be left or right");
    }
    switch (emit_of(o)) {
    case Emit::json:
        print_json(Json{{"side", o.side}, {"e0", to_json(e0)}, {"x", to_json(x)}, {"result", to_json(out)}});
        break;
    case Emit::csv:
        std::cout << "r,c1,chi\n" << out.r << ",\"" << format_kclass_csv(out) << "\"," << out.chi << '\n';
        break;
    case Emit::text:
        std::cout << format_kclass(s, out) << '\n';
        break;
    }
    return 0;
}

int cmd_invariants(const Options &o)
{
    const auto s = surface_of(o);
    const auto e0 = class_of(s, "--e0", o.e0);
    const auto e = class_of(s, "--e", o.e);
    const ExceptionalPair pair = as_usage("--e0", [&] { return ExceptionalPair(s, e0); });

    Json j;
    j["e0"] = to_json(e0);
    j["e"] = to_json(e);
    j["chi_e_e0"] = euler_pairing(s, e, e0);
    j["chi_e0_e"] = euler_pairing(s, e0, e);
    j["twisted_degree"] = twisted_degree(s, e0, e);
    j["canonical_defect"] = canonical_defect(s, e0, e);
    j["moduli_dim"] = moduli_dim(s, e);
    j["left_reflection"] = to_json(reflect_left(s, e0, e));
    Json perp = Json::array();
    for (const auto &b : perp_basis(s, e)) {
        perp.push_back(to_json(b));
    }
    j["perp_basis"] = perp;
    try {
        const auto fc = birational_fiber_check(pair, e);
        j["fiber_check"] = Json{{"k", fc.k},
                                {"s", fc.s},
                                {"dim_drop", fc.dim_drop},
                                {"grassmannian_dim", fc.grassmannian_dim},
                                {"consistent", fc.consistent}};
    } catch (const std::invalid_argument &) {
        j["fiber_check"] = nullptr;
    }
    if (o.n >= 0) {
        const auto gb = gr_bundle_params(pair, e, o.n);
        Json g;
        g["dual"] = gb.dual;
        g["fibre_n"] = gb.fibre_n ? Json(*gb.fibre_n) : Json(nullptr);
        g["fibre_k"] = gb.fibre_k ? Json(*gb.fibre_k) : Json(nullptr);
        g["base"] = to_json(gb.base);
        j["gr_bundle"] = g;
        j["syst_dim"] = syst_dim(pair, e, o.n);
    }

    switch (emit_of(o)) {
    case Emit::json:
        print_json(j);
        break;
    case Emit::csv:
        std::cout << "key,value\n";
        for (const auto &[k, v] : j.items()) {
            std::string cell = v.dump();
            std::string quoted;
            for (char c : cell) {
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            std::cout << k << ",\"" << quoted << "\"\n";
        }
        break;
    case Emit::text:
        std::cout << "chi(e,e0) = " << j["chi_e_e0"] << '\n'
                  << "chi(e0,e) = " << j["chi_e0_e"] << '\n'
                  << "deg_e0(e) = " << j["twisted_degree"] << '\n'
                  << "s = " << j["canonical_defect"] << '\n'
                  << "dim M_H(e) = " << j["moduli_dim"] << '\n'
                  << "L_e0(e) = " << format_kclass(s, reflect_left(s, e0, e)) << '\n';
        std::cout << "e^perp =";
        for (const auto &b : perp_basis(s, e)) {
            std::cout << " (" << format_kclass(s, b) << ')';
        }
        std::cout << '\n';
        if (!j["fiber_check"].is_null()) {
            const auto &fc = j["fiber_check"];
            std::cout << "fibre Gr(" << fc["s"] << ',' << fc["k"] << "): dim drop " << fc["dim_drop"] << " vs "
                      << fc["grassmannian_dim"] << (fc["consistent"].get<bool>() ? "" : "  MISMATCH") << '\n';
        }
        if (j.contains("gr_bundle")) {
            const auto &g = j["gr_bundle"];
            std::cout << "Syst(E0^" << o.n << ", e): dim " << j["syst_dim"];
            if (!g["fibre_n"].is_null()) {
                std::cout << ", Gr(" << g["fibre_n"] << ',' << g["fibre_k"] << ")-bundle";
            }
            std::cout << " over M_H(" << format_kclass(s, kclass_from_json(g["base"])) << ')'
                      << (g["dual"].get<bool>() ? " (dual side)" : "") << '\n';
        }
        break;
    }
    if (!j["fiber_check"].is_null() && !j["fiber_check"]["consistent"].get<bool>()) {
        throw ValidationFailure("fibre dimension check failed");
    }
    return 0;
}

int cmd_series(const Options &o)
{
    const auto spec = as_usage("--config", [&] { return load_series_config(o.config); });
    const auto emit = emit_of(o);
    const auto result = extend_series(spec);
    std::cout << emit_series(spec, result, emit);
    if (!result.ok()) {
        throw ValidationFailure("series checks failed");
    }
    return 0;
}

int cmd_strata(const Options &o)
{
    const auto emit = emit_of(o);
    const auto en = as_usage("strata", [&] { return enumerate_strata(o.rk_e0, o.a, o.r); });
    std::cout << emit_strata(en, emit);
    return 0;
}

int cmd_nef(const Options &o)
{
    const auto s = surface_of(o);
    const auto e0 = class_of(s, "--e0", o.e0);
    const auto e = class_of(s, "--e", o.e);
    const ExceptionalPair pair = as_usage("--e0", [&] { return ExceptionalPair(s, e0); });
    const auto rays = nef_rays(pair, e);
    switch (emit_of(o)) {
    case Emit::json:
        print_json(Json{{"e", to_json(e)},
                        {"alpha", to_json(rays.alpha)},
                        {"beta", to_json(rays.beta)},
                        {"applicable", rays.applicable}});
        break;
    case Emit::csv:
        std::cout << "ray,class\n"
                  << "alpha,\"" << format_kclass_csv(rays.alpha) << "\"\n"
                  << "beta,\"" << format_kclass_csv(rays.beta) << "\"\n";
        break;
    case Emit::text:
        std::cout << "alpha = " << format_kclass(s, rays.alpha) << '\n'
                  << "beta = " << format_kclass(s, rays.beta) << '\n';
        if (!rays.applicable) {
            std::cout << "# boundary statement not applicable to this pair\n";
        }
        break;
    }
    return 0;
}

int cmd_hilb(const Options &o)
{
    const auto s = surface_of(o);
    if (o.hilb_n < 0) {
        throw UsageError("--n must be nonnegative");
    }
    const auto p = hilb_epoly(BettiData::of(s), o.hilb_n);
    switch (emit_of(o)) {
    case Emit::json:
        print_json(Json{{"n", o.hilb_n}, {"poly", to_json(p)}});
        break;
    case Emit::csv:
        std::cout << "n,poly\n" << o.hilb_n << ',' << p.to_string() << '\n';
        break;
    case Emit::text:
        std::cout << p.to_string() << '\n';
        break;
    }
    return 0;
}

int cmd_selftest(const Options &o)
{
    const auto dir = o.data_dir.empty() ? default_data_dir() : std::filesystem::path(o.data_dir);
    const auto results = run_acceptance(dir);
    const bool color = use_color();
    bool all = true;
    for (const auto &r : results) {
        all = all && r.pass;
        const char *tag = r.pass ? (color ? "\033[32mPASS\033[0m" : "PASS") : (color ? "\033[31mFAIL\033[0m" : "FAIL");
        std::cout << tag << ' ' << r.id << ". " << r.title << " (" << r.detail << ")\n";
    }
    if (!all) {
        throw ValidationFailure("acceptance checks failed");
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    Options o;
    CLI::App app{"Moduli of sheaves on rational surfaces: pairings, E-polynomial series, strata"};
    app.require_subcommand(1, 1);
    app.add_option("--surface", o.surface, "p2, p1xp1, p1xp1:N or a surface JSON file")->capture_default_str();
    app.add_option("--emit", o.emit, "text, json or csv")->capture_default_str();

    auto *pair = app.add_subcommand("pair", "Euler pairing chi(x, y)");
    pair->add_option("--x", o.x, "class r,c1...,chi")->required();
    pair->add_option("--y", o.y, "class r,c1...,chi")->required();

    auto *reflect = app.add_subcommand("reflect", "Reflection of x along e0");
    reflect->add_option("--e0", o.e0)->required();
    reflect->add_option("--x", o.x)->required();
    reflect->add_option("--side", o.side, "left: x - chi(x,e0)e0, right: x - chi(e0,x)e0")->capture_default_str();

    auto *inv = app.add_subcommand("invariants", "Numerical invariants of e relative to an exceptional e0");
    inv->add_option("--e0", o.e0)->required();
    inv->add_option("--e", o.e)->required();
    inv->add_option("--n", o.n, "number of E0 copies for the Grassmannian bundle");

    auto *series = app.add_subcommand("series", "Extend an E-polynomial series from a config");
    series->add_option("--config", o.config)->required();

    auto *strata = app.add_subcommand("strata", "Stratum types of the contraction image");
    strata->add_option("--rk-e0", o.rk_e0)->required();
    strata->add_option("--a", o.a)->required();
    strata->add_option("--r", o.r)->required();

    auto *nef = app.add_subcommand("nef", "Candidate nef rays alpha_e, beta_e");
    nef->add_option("--e0", o.e0, "exceptional class")->default_val("1,0,1");
    nef->add_option("--e", o.e)->required();

    auto *hilb = app.add_subcommand("hilb", "E-polynomial of Hilb^n of the surface");
    hilb->add_option("--n", o.hilb_n)->required();

    auto *selftest = app.add_subcommand("selftest", "Run the bundled acceptance checks");
    selftest->add_option("--data-dir", o.data_dir, "directory holding base_cases.json and series/");

    for (auto *sub : {pair, reflect, inv, series, strata, nef, hilb, selftest}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*pair) return cmd_pair(o);
        if (*reflect) return cmd_reflect(o);
        if (*inv) return cmd_invariants(o);
        if (*series) return cmd_series(o);
        if (*strata) return cmd_strata(o);
        if (*nef) return cmd_nef(o);
        if (*hilb) return cmd_hilb(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationFailure &e) {
        std::cout.flush();
        std::cerr << "validation failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "validation failed: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
