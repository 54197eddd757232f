#ifndef KSURF_IO_HPP
#define KSURF_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include <ksurf/kclass.hpp>
#include <ksurf/qpoly.hpp>
#include <ksurf/series.hpp>
#include <ksurf/strata.hpp>
#include <ksurf/surface.hpp>

namespace ksurf
{

using Json = nlohmann::ordered_json;

// {"coeffs":[...]} ascending in t. Coefficients outside the int64 range are
// written as decimal strings; both forms are accepted on input. A bare string
// is parsed with QPoly::parse.
Json to_json(const QPoly &p);
QPoly qpoly_from_json(const Json &j);

// {"r":int, "c1":[int], "chi":int}; a string in comma syntax is also accepted.
Json to_json(const KClass &x);
KClass kclass_from_json(const Json &j);

// {"rho":int, "gram":[[int]], "canonical":[int], "polarization":[int]}
Json to_json(const SurfaceModel &s);
SurfaceModel surface_from_json(const Json &j);

// "p2", "p1xp1" (n = 1), "p1xp1:N", or a path to a surface JSON file.
SurfaceModel resolve_surface(std::string_view spec);

Json read_json_file(const std::filesystem::path &path);

struct BaseCase
{
    KClass cls;
    QPoly poly;
    std::string source;
    std::string note;
};

// Bundled table of known E-polynomials:
//   {"<surface>:<r,c1...,chi>": {"coeffs":[...], "source":"published-table"|"goettsche", "note":...}}
using BaseCaseTable = std::map<std::string, BaseCase>;
BaseCaseTable load_base_cases(const std::filesystem::path &path);

// Series config:
//   {"name":..., "surface":"p2"|{...}, "gamma":..., "gamma0":..., "k_min":int,
//    "base_cases":"relative/path.json",
//    "bases":{"k": entry, ...}, "expected":{"k": entry, ...}}
// where an entry is one of {"coeffs":[...]}, {"poly":"1+t+t^2"},
// {"goettsche":true} (rank-one class, computed from the Hilbert scheme) or
// {"base_case":"p2:3,1,2", "transport":"identity"|"dual"}. A "source" or
// "note" field is carried as documentation only.
SeriesSpec load_series_config(const std::filesystem::path &path);
SeriesSpec series_spec_from_json(const Json &j, const std::filesystem::path &base_dir);

enum class Emit
{
    text,
    json,
    csv,
};

Emit parse_emit(std::string_view s);

Json series_result_to_json(const SeriesSpec &spec, const SeriesResult &result);
// One rendering per format; ascending k, byte-stable for fixed input.
std::string emit_series(const SeriesSpec &spec, const SeriesResult &result, Emit format);

std::string emit_strata(const StrataEnumeration &en, Emit format);

} // namespace ksurf

#endif
