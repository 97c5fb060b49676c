#include "phm/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "phm/errors.hpp"

namespace phm::io {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw MapSpecError(path + ": " + what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::size_t read_count(const json& doc, const char* key, std::size_t min_value) {
    if (!doc.contains(key)) field_error(key, "missing field");
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min_value))
        field_error(key, "expected an integer >= " + std::to_string(min_value));
    return v.get<std::size_t>();
}

double read_real(const json& term, const std::string& path, const char* key) {
    if (!term.contains(key)) return 0.0;
    const json& v = term.at(key);
    if (!v.is_number()) field_error(path + "." + key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) field_error(path + "." + key, "expected a finite number");
    return d;
}

PolySeries read_series(const json& doc, const char* key, std::size_t n, unsigned cap) {
    if (!doc.contains(key)) return PolySeries(n, cap);
    const json& arr = doc.at(key);
    if (!arr.is_array()) field_error(key, "expected an array of terms");
    std::vector<Term> terms;
    std::vector<std::string> paths;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = std::string(key) + "[" + std::to_string(i) + "]";
        const json& t = arr[i];
        if (!t.is_object()) field_error(path, "expected an object with alpha, re, im");
        if (!t.contains("alpha")) field_error(path + ".alpha", "missing field");
        const json& a = t.at("alpha");
        const std::string expect = "expected array of " + std::to_string(n) + " non-negative integers";
        if (!a.is_array() || a.size() != n) field_error(path + ".alpha", expect);
        std::vector<unsigned> e;
        for (const auto& x : a) {
            if (!x.is_number_integer() || x.get<long long>() < 0) field_error(path + ".alpha", expect);
            e.push_back(x.get<unsigned>());
        }
        MultiIndex alpha(std::move(e));
        if (alpha.degree() > cap)
            field_error(path + ".alpha", "degree " + std::to_string(alpha.degree()) +
                                             " exceeds D = " + std::to_string(cap));
        for (std::size_t p = 0; p < terms.size(); ++p) {
            if (terms[p].alpha == alpha)
                field_error(path + ".alpha", "duplicate multi-index " + alpha.to_string() +
                                                 " (first at " + paths[p] + ")");
        }
        terms.push_back({std::move(alpha), {read_real(t, path, "re"), read_real(t, path, "im")}});
        paths.push_back(path);
    }
    return PolySeries(n, cap, std::move(terms));
}

json series_json(const PolySeries& s) {
    json arr = json::array();
    for (const auto& t : s.terms())
        arr.push_back({{"alpha", t.alpha.exponents()}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
    return arr;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json witness_json(const Witness& w) {
    json out = json::object();
    if (w.point) out["point"] = point_json(*w.point);
    json vals = json::object();
    for (const auto& [k, v] : w.values) vals[k] = finite_or_null(v);
    out["values"] = vals;
    return out;
}

} // namespace

PluriharmonicMap parse_map_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw MapSpecError("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" +
                           e.what() + ")");
    }
    if (!doc.is_object()) field_error("<root>", "expected a JSON object");
    const std::size_t n = read_count(doc, "n", 1);
    const std::size_t cap = read_count(doc, "D", 0);
    return PluriharmonicMap(read_series(doc, "h", n, static_cast<unsigned>(cap)),
                            read_series(doc, "g", n, static_cast<unsigned>(cap)));
}

PluriharmonicMap load_map_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MapSpecError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_map_spec(ss.str());
    } catch (const MapSpecError& e) {
        throw MapSpecError(path.string() + ": " + e.what());
    }
}

json map_spec_json(const PluriharmonicMap& f) {
    return {{"n", f.dim()}, {"D", f.degree_cap()}, {"h", series_json(f.h())}, {"g", series_json(f.g())}};
}

std::string dump_map_spec(const PluriharmonicMap& f) { return map_spec_json(f).dump(2) + "\n"; }

json point_json(const ComplexPoint& z) {
    json arr = json::array();
    for (const auto& c : z.coords()) arr.push_back({{"r", std::abs(c)}, {"theta", std::arg(c)}});
    return arr;
}

json to_json(const MembershipReport& rep) {
    return {{"M", rep.M},
            {"sampled_sup", rep.sampled_sup},
            {"certified_upper", finite_or_null(rep.certified_upper)},
            {"witness", point_json(rep.witness)},
            {"normalized", rep.normalized},
            {"verdict", std::string(to_string(rep.verdict))},
            {"margin", rep.margin}};
}

json to_json(const CriterionReport& rep) {
    json details = json::array();
    for (const auto& r : rep.details)
        details.push_back({{"label", r.label},
                           {"attained", finite_or_null(r.attained)},
                           {"bound", finite_or_null(r.bound)},
                           {"ratio", finite_or_null(r.ratio())}});
    json out = {{"name", rep.name},
                {"holds", std::string(to_string(rep.holds))},
                {"details", details},
                {"notes", rep.notes}};
    out["witness"] = rep.witness ? witness_json(*rep.witness) : json(nullptr);
    return out;
}

json to_json(const InjectivityVerdict& v) {
    json out = {{"status", std::string(to_string(v.status))},
                {"min_image_gap", finite_or_null(v.min_image_gap)},
                {"pairs_tested", v.pairs_tested}};
    if (v.pair) {
        out["pair"] = {{"i", v.pair->i},
                       {"j", v.pair->j},
                       {"z", point_json(v.pair->z)},
                       {"w", point_json(v.pair->w)},
                       {"image_gap", v.pair->image_gap}};
    } else {
        out["pair"] = nullptr;
    }
    return out;
}

json to_json(const StableScanReport& rep) {
    json rows = json::array();
    for (std::size_t i = 0; i < rep.lambdas.size(); ++i) {
        rows.push_back({{"lambda_arg", std::arg(rep.lambdas[i])},
                        {"f_lambda", to_json(rep.pluriharmonic[i])},
                        {"F_eps", to_json(rep.holomorphic[i])}});
    }
    return {{"rows", rows},
            {"stable_pluriharmonic", rep.stable_pluriharmonic()},
            {"stable_holomorphic", rep.stable_holomorphic()},
            {"biconditional_holds", rep.biconditional_holds()}};
}

json to_json(const CoefficientTable& table) {
    json arr = json::array();
    for (const auto& t : table)
        arr.push_back({{"alpha", t.alpha.exponents()},
                       {"re", t.coeff.real()},
                       {"im", t.coeff.imag()},
                       {"abs", std::abs(t.coeff)}});
    return arr;
}

json to_json(const OrthogonalityReport& rep) {
    return {{"n", rep.n},
            {"nu_max", rep.nu_max},
            {"samples_per_dim", rep.samples_per_dim},
            {"frequencies_checked", rep.frequencies_checked},
            {"zero_frequency_average",
             {{"re", rep.zero_frequency_average.real()}, {"im", rep.zero_frequency_average.imag()}}},
            {"max_nonzero_modulus", rep.max_nonzero_modulus},
            {"worst_nu", rep.worst_nu},
            {"passed", rep.passed}};
}

} // namespace phm::io
