#include <ksurf/io.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <ksurf/goettsche.hpp>
#include <ksurf/invariants.hpp>

namespace ksurf
{

Json to_json(const QPoly &p)
{
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            coeffs.push_back(static_cast<std::int64_t>(c));
        } else {
            coeffs.push_back(c.str());
        }
    }
    return Json{{"coeffs", coeffs}};
}

QPoly qpoly_from_json(const Json &j)
{
    if (j.is_string()) {
        return QPoly::parse(j.get<std::string>());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw std::invalid_argument("polynomial JSON must be {\"coeffs\":[...]}");
    }
    std::vector<BigInt> coeffs;
    for (const auto &c : j.at("coeffs")) {
        if (c.is_number_integer()) {
            coeffs.emplace_back(c.get<std::int64_t>());
        } else if (c.is_string()) {
            coeffs.emplace_back(c.get<std::string>());
        } else {
            throw std::invalid_argument("polynomial coefficient must be an integer");
        }
    }
    return QPoly(std::move(coeffs));
}

Json to_json(const KClass &x)
{
    return Json{{"r", x.r}, {"c1", x.c1.coords()}, {"chi", x.chi}};
}

KClass kclass_from_json(const Json &j)
{
    if (j.is_string()) {
        return parse_kclass(j.get<std::string>());
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("c1") || !j.contains("chi")) {
        throw std::invalid_argument("class JSON must be {\"r\":int, \"c1\":[int], \"chi\":int}");
    }
    return {j.at("r").get<std::int64_t>(), DivisorClass(j.at("c1").get<std::vector<std::int64_t>>()),
            j.at("chi").get<std::int64_t>()};
}

Json to_json(const SurfaceModel &s)
{
    return Json{{"rho", s.rho()},
                {"gram", s.gram()},
                {"canonical", s.canonical().coords()},
                {"polarization", s.polarization().coords()}};
}

SurfaceModel surface_from_json(const Json &j)
{
    if (j.is_string()) {
        return resolve_surface(j.get<std::string>());
    }
    for (const char *key : {"rho", "gram", "canonical", "polarization"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("surface JSON lacks \"") + key + "\"");
        }
    }
    return SurfaceModel::custom(j.at("rho").get<std::size_t>(), j.at("gram").get<Gram>(),
                                DivisorClass(j.at("canonical").get<std::vector<std::int64_t>>()),
                                DivisorClass(j.at("polarization").get<std::vector<std::int64_t>>()));
}

SurfaceModel resolve_surface(std::string_view spec)
{
    if (spec == "p2") {
        return SurfaceModel::p2();
    }
    if (spec == "p1xp1") {
        return SurfaceModel::p1xp1(1);
    }
    if (spec.rfind("p1xp1:", 0) == 0) {
        const std::string n(spec.substr(6));
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(n, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != n.size()) {
            throw std::invalid_argument("malformed surface '" + std::string(spec) + "': expected p1xp1:N");
        }
        return SurfaceModel::p1xp1(v);
    }
    return surface_from_json(read_json_file(std::filesystem::path(spec)));
}

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
    }
}

BaseCaseTable load_base_cases(const std::filesystem::path &path)
{
    const Json j = read_json_file(path);
    if (!j.is_object()) {
        throw std::invalid_argument(path.string() + ": base-case table must be a JSON object");
    }
    BaseCaseTable out;
    for (const auto &[label, entry] : j.items()) {
        const auto colon = label.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("base-case label '" + label + "' must look like <surface>:<class>");
        }
        BaseCase bc;
        bc.cls = parse_kclass(label.substr(colon + 1));
        bc.poly = qpoly_from_json(entry);
        bc.source = entry.value("source", "");
        bc.note = entry.value("note", "");
        if (bc.source != "published-table" && bc.source != "goettsche") {
            throw std::invalid_argument("base case '" + label + "' has source '" + bc.source +
                                        "', expected published-table or goettsche");
        }
        out.emplace(label, std::move(bc));
    }
    return out;
}

namespace
{

int parse_index(const std::string &key)
{
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(key, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != key.size()) {
        throw std::invalid_argument("series index '" + key + "' is not an integer");
    }
    return k;
}

QPoly resolve_entry(const SeriesSpec &spec, int k, const Json &entry, const BaseCaseTable *table)
{
    if (entry.is_string()) {
        return QPoly::parse(entry.get<std::string>());
    }
    if (entry.contains("coeffs")) {
        return qpoly_from_json(entry);
    }
    if (entry.contains("poly")) {
        return QPoly::parse(entry.at("poly").get<std::string>());
    }
    const KClass cls = series_class(spec, k);
    if (entry.value("goettsche", false)) {
        if (cls.r != 1) {
            throw std::invalid_argument("k = " + std::to_string(k) + ": Hilbert-scheme base needs rank 1, class is " +
                                        format_kclass(spec.surface, cls));
        }
        return rank1_moduli_epoly(spec.surface, cls.c1, cls.chi);
    }
    if (entry.contains("base_case")) {
        if (table == nullptr) {
            throw std::invalid_argument("k = " + std::to_string(k) + " references a base case but the config has no "
                                        "\"base_cases\" file");
        }
        const auto label = entry.at("base_case").get<std::string>();
        auto it = table->find(label);
        if (it == table->end()) {
            throw std::invalid_argument("unknown base case '" + label + "'");
        }
        const auto transport = entry.value("transport", "identity");
        KClass expected_cls;
        if (transport == "identity") {
            expected_cls = cls;
        } else if (transport == "dual") {
            expected_cls = dual(spec.surface, cls);
        } else {
            throw std::invalid_argument("unknown transport '" + transport + "'");
        }
        if (!(it->second.cls == expected_cls)) {
            throw std::invalid_argument("k = " + std::to_string(k) + ": base case '" + label + "' has class " +
                                        format_kclass_csv(it->second.cls) + " but " + transport + " transport of " +
                                        format_kclass(spec.surface, cls) + " is " + format_kclass_csv(expected_cls));
        }
        return it->second.poly;
    }
    throw std::invalid_argument("k = " + std::to_string(k) + ": unrecognised base entry " + entry.dump());
}

std::map<int, QPoly> resolve_entries(const SeriesSpec &spec, const Json &j, const BaseCaseTable *table)
{
    std::map<int, QPoly> out;
    if (!j.is_object()) {
        throw std::invalid_argument("series bases/expected must be a JSON object keyed by k");
    }
    for (const auto &[key, entry] : j.items()) {
        const int k = parse_index(key);
        out[k] = resolve_entry(spec, k, entry, table);
    }
    return out;
}

} // namespace

SeriesSpec series_spec_from_json(const Json &j, const std::filesystem::path &base_dir)
{
    for (const char *key : {"surface", "gamma", "gamma0", "k_min", "bases"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("series config lacks \"") + key + "\"");
        }
    }
    SeriesSpec spec;
    spec.name = j.value("name", "");
    const auto &surf = j.at("surface");
    if (surf.is_string()) {
        const auto name = surf.get<std::string>();
        const bool preset = name == "p2" || name.rfind("p1xp1", 0) == 0;
        spec.surface = resolve_surface(preset ? name : (base_dir / name).string());
    } else {
        spec.surface = surface_from_json(surf);
    }
    spec.gamma = kclass_from_json(j.at("gamma"));
    spec.gamma0 = kclass_from_json(j.at("gamma0"));
    spec.k_min = j.at("k_min").get<int>();

    BaseCaseTable table;
    const BaseCaseTable *table_ptr = nullptr;
    if (j.contains("base_cases")) {
        table = load_base_cases(base_dir / j.at("base_cases").get<std::string>());
        table_ptr = &table;
    }
    spec.bases = resolve_entries(spec, j.at("bases"), table_ptr);
    if (j.contains("expected")) {
        spec.expected = resolve_entries(spec, j.at("expected"), table_ptr);
    }
    return spec;
}

SeriesSpec load_series_config(const std::filesystem::path &path)
{
    return series_spec_from_json(read_json_file(path), path.parent_path());
}

Emit parse_emit(std::string_view s)
{
    if (s == "text") {
        return Emit::text;
    }
    if (s == "json") {
        return Emit::json;
    }
    if (s == "csv") {
        return Emit::csv;
    }
    throw std::invalid_argument("unknown output format '" + std::string(s) + "' (text, json, csv)");
}

namespace
{

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

Json series_result_to_json(const SeriesSpec &spec, const SeriesResult &result)
{
    Json values = Json::object();
    for (const auto &[k, poly] : result.values) {
        Json v = to_json(poly);
        v["class"] = format_kclass(spec.surface, series_class(spec, k));
        v["poly"] = poly.to_string();
        values[std::to_string(k)] = std::move(v);
    }
    Json strata = Json::object();
    for (const auto &[l, poly] : result.zero_strata) {
        Json v = to_json(poly);
        v["poly"] = poly.to_string();
        strata[std::to_string(l)] = std::move(v);
    }
    Json diags = Json::array();
    for (const auto &d : result.diagnostics) {
        Json e{{"check", d.check}};
        e["index"] = d.index ? Json(*d.index) : Json(nullptr);
        e["status"] = to_string(d.status);
        e["detail"] = d.detail;
        diags.push_back(std::move(e));
    }
    Json out;
    out["name"] = spec.name;
    out["surface"] = to_json(spec.surface);
    out["gamma"] = to_json(spec.gamma);
    out["gamma0"] = to_json(spec.gamma0);
    out["a"] = result.params.a;
    out["s"] = result.params.s;
    out["k_min"] = result.k_min;
    out["values"] = std::move(values);
    out["zero_strata"] = std::move(strata);
    out["diagnostics"] = std::move(diags);
    out["ok"] = result.ok();
    return out;
}

std::string emit_series(const SeriesSpec &spec, const SeriesResult &result, Emit format)
{
    std::ostringstream os;
    switch (format) {
    case Emit::json:
        os << series_result_to_json(spec, result).dump(2) << '\n';
        break;
    case Emit::csv:
        os << "k,class,poly\n";
        for (const auto &[k, poly] : result.values) {
            os << k << ',' << csv_quote(format_kclass(spec.surface, series_class(spec, k))) << ','
               << poly.to_string() << '\n';
        }
        break;
    case Emit::text:
        if (!spec.name.empty()) {
            os << "# " << spec.name << '\n';
        }
        os << "# a = " << result.params.a << ", s = " << result.params.s << ", k_min = " << result.k_min << '\n';
        for (const auto &[k, poly] : result.values) {
            os << "e(M_H(" << format_kclass(spec.surface, series_class(spec, k)) << ")) = " << poly.to_string()
               << '\n';
        }
        for (const auto &d : result.diagnostics) {
            if (d.status != CheckStatus::ok) {
                os << "! " << d.check;
                if (d.index) {
                    os << " [" << *d.index << ']';
                }
                os << ": " << to_string(d.status) << " -- " << d.detail << '\n';
            }
        }
        os << (result.ok() ? "# all checks passed" : "# CHECKS FAILED") << '\n';
        break;
    }
    return os.str();
}

std::string emit_strata(const StrataEnumeration &en, Emit format)
{
    std::ostringstream os;
    switch (format) {
    case Emit::json: {
        Json list = Json::array();
        for (const auto &st : en.strata) {
            Json parts = Json::array();
            for (const auto &p : st.parts) {
                parts.push_back(Json{{"r", p.r}, {"a", p.a}, {"n", p.n}});
            }
            list.push_back(Json{{"parts", parts},
                                {"l", st.l},
                                {"dim", stratum_dim(en.rk_e0, st)},
                                {"hom_dim", hom_dim(en.rk_e0, st, en.a)}});
        }
        Json out{{"rk_e0", en.rk_e0}, {"a", en.a},           {"r", en.r},
                 {"n", en.bn_index},  {"hypothesis_ok", en.hypothesis_ok}, {"strata", list}};
        os << out.dump(2) << '\n';
        break;
    }
    case Emit::csv:
        os << "parts,l,dim,hom_dim\n";
        for (const auto &st : en.strata) {
            std::string parts;
            for (const auto &p : st.parts) {
                parts += "(" + std::to_string(p.r) + ";" + std::to_string(p.a) + ";" + std::to_string(p.n) + ")";
            }
            os << parts << ',' << st.l << ',' << stratum_dim(en.rk_e0, st) << ',' << hom_dim(en.rk_e0, st, en.a)
               << '\n';
        }
        break;
    case Emit::text:
        os << "# rk(e0) = " << en.rk_e0 << ", a = " << en.a << ", r = " << en.r << ", n = " << en.bn_index << '\n';
        if (!en.hypothesis_ok) {
            os << "! r rk(e0) < 2: the normality hypothesis does not hold\n";
        }
        if (en.bn_index < 0) {
            os << "! n = a rk(e0) - r < 0\n";
        }
        for (const auto &st : en.strata) {
            os << st.to_string() << "  dim=" << stratum_dim(en.rk_e0, st) << "  hom_dim=" << hom_dim(en.rk_e0, st, en.a)
               << '\n';
        }
        os << "# " << en.strata.size() << " strata\n";
        break;
    }
    return os.str();
}

} // namespace ksurf
