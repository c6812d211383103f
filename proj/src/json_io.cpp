#include "permucover/json_io.hpp"

#include <charconv>

namespace permucover {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

Json json_rat(const Rat& r) { return rat_to_string(r); }

Json json_complex(Complex z) {
    return Json{{"im", format_double(z.imag())}, {"re", format_double(z.real())}};
}

Json json_point(const Point& p) {
    Json arr = Json::array();
    for (const Rat& x : p) arr.push_back(rat_to_string(x));
    return arr;
}

Json json_hyperplane(const Hyperplane& h) {
    Json normal = Json::array();
    for (const BigInt& a : h.normal()) normal.push_back(a.str());
    return Json{{"normal", normal}, {"offset", h.offset().str()}};
}

Json json_permutation(const Permutation& p) {
    Json arr = Json::array();
    for (int v : p.images()) arr.push_back(v + 1);
    return arr;
}

namespace {

std::string scalar_text(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(std::string(what) + ": expected a decimal string or integer, got " +
                     j.dump());
}

} // namespace

Point parse_point(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("point: expected a non-empty array");
    Point p;
    for (const auto& c : j) p.push_back(parse_rat(scalar_text(c, "point coordinate")));
    return p;
}

Hyperplane parse_hyperplane(const Json& j) {
    if (!j.is_object() || !j.contains("normal") || !j.contains("offset"))
        throw InputError("plane: expected {\"normal\": [...], \"offset\": ...}");
    const Json& nj = j.at("normal");
    if (!nj.is_array() || nj.empty()) throw InputError("plane.normal: expected a non-empty array");
    std::vector<Rat> normal;
    for (const auto& c : nj) normal.push_back(parse_rat(scalar_text(c, "plane.normal entry")));
    Rat offset = parse_rat(scalar_text(j.at("offset"), "plane.offset"));
    return Hyperplane::from_rational(normal, offset);
}

std::vector<Rat> parse_generators(const Json& j) {
    if (!j.is_object()) throw InputError("input: expected an object with \"A\" or \"n\"");
    const bool has_a = j.contains("A"), has_n = j.contains("n");
    if (has_a == has_n) throw InputError("input: provide exactly one of \"A\" or \"n\"");
    if (has_n) {
        if (!j.at("n").is_number_integer())
            throw InputError("input.n: expected an integer");
        long long n = j.at("n").get<long long>();
        if (n < 2 || n > 64) throw InputError("input.n: out of range [2, 64]");
        return standard_generators(static_cast<int>(n));
    }
    const Json& aj = j.at("A");
    if (!aj.is_array() || aj.size() < 2)
        throw InputError("input.A: expected an array of at least 2 rationals");
    std::vector<Rat> a;
    for (const auto& c : aj) a.push_back(parse_rat(scalar_text(c, "input.A entry")));
    return a;
}

CoverFile parse_cover_file(const Json& j) {
    CoverFile f;
    f.generators = parse_generators(j);
    if (!j.contains("planes") || !j.at("planes").is_array() || j.at("planes").empty())
        throw InputError("cover file: expected a non-empty \"planes\" array");
    for (const auto& pj : j.at("planes")) f.planes.push_back(parse_hyperplane(pj));
    for (const Hyperplane& h : f.planes)
        if (h.dim() != f.generators.size())
            throw InputError("cover file: plane dimension " + std::to_string(h.dim()) +
                             " does not match |A| = " + std::to_string(f.generators.size()));
    return f;
}

Json json_cover_report(const CoverReport& r) {
    Json uncovered = Json::array();
    for (const Point& p : r.uncovered_vertices) uncovered.push_back(json_point(p));
    return Json{{"contains_HA", r.contains_HA},
                {"covered", r.covered},
                {"per_plane_counts", r.per_plane_counts},
                {"uncovered_count", r.uncovered_vertices.size()},
                {"uncovered_vertices", uncovered}};
}

Json json_sym(const SymData& s) {
    Json gens = Json::array();
    for (const Rat& a : s.generators) gens.push_back(rat_to_string(a));
    Json sv = Json::array();
    for (const Rat& v : s.S) sv.push_back(rat_to_string(v));
    Json fc = Json::array();
    for (const Rat& c : s.F.coeffs()) fc.push_back(rat_to_string(c));
    Json out{{"A", gens}, {"F_coeffs_ascending", fc}, {"S", sv}, {"n", s.n()}};
    if (s.G) {
        Json gc = Json::array();
        for (const Rat& c : s.G->coeffs()) gc.push_back(rat_to_string(c));
        out["G_coeffs_ascending"] = gc;
    }
    return out;
}

Json json_criterion(const SymData& s, const CriticalData& cd) {
    Json pts = Json::array(), vals = Json::array();
    for (auto p : cd.points) pts.push_back(json_complex(p));
    for (auto v : cd.values) vals.push_back(json_complex(v));
    Json rc = Json::array();
    for (const Rat& c : cd.resultant_w.coeffs()) rc.push_back(rat_to_string(c));
    return Json{{"criterion_exact", cd.criterion_exact},
                {"criterion_numeric", cd.criterion_numeric},
                {"critical_points", pts},
                {"critical_values", vals},
                {"defect_degree", cd.defect_degree},
                {"interlacing_ok", cd.interlacing_ok},
                {"min_value_gap", format_double(cd.min_value_gap)},
                {"n", s.n()},
                {"numeric_distinct", cd.numeric_distinct},
                {"resultant_coeffs_ascending", rc},
                {"warnings", cd.warnings}};
}

Json json_oddcase(const OddCaseReport& r) {
    Json u = Json::array();
    for (double x : r.extreme_values) u.push_back(format_double(x));
    return Json{{"chain_ok", r.chain_ok},
                {"extreme_values", u},
                {"max_symmetry_err", format_double(r.max_symmetry_err)},
                {"n", r.n},
                {"symmetry_ok", r.symmetry_ok}};
}

namespace {

Json json_loop_result(const LoopResult& lr) {
    return Json{{"cycle_type", lr.cycle_type},
                {"kind", lr.spec.kind},
                {"permutation", json_permutation(lr.sigma)},
                {"radius", format_double(lr.spec.radius)},
                {"winding", lr.winding}};
}

} // namespace

Json json_monodromy(const MonodromyReport& r) {
    Json loops = Json::array();
    for (const LoopResult& lr : r.loops) loops.push_back(json_loop_result(lr));
    Json matched = Json::array();
    for (std::size_t i = 0; i < kConventionNames.size(); i++)
        if (r.convention_match[i]) matched.push_back(kConventionNames[i]);
    return Json{{"base_point", json_complex(r.base)},
                {"big_doubled_ok", r.big_doubled_ok},
                {"big_loop", json_loop_result(r.big_loop)},
                {"conventions_matched", matched},
                {"cycle_ok", r.cycle_ok},
                {"group_ok", r.group_ok},
                {"group_order", r.generated_order},
                {"loops", loops},
                {"max_residual", format_double(r.max_residual)},
                {"passes", r.passes},
                {"product_convention", r.product_convention},
                {"product_ok", r.product_ok},
                {"transpositions_ok", r.transpositions_ok}};
}

Json json_incidence_set(const IncidenceSet& s) {
    return Json{{"flat_dim", s.flat_dim},
                {"size", s.vertex_indices.size()},
                {"vertex_indices", s.vertex_indices},
                {"witness_plane", json_hyperplane(s.witness_plane)}};
}

Json json_certificate(const CoverCertificate& c) {
    Json planes = Json::array();
    for (const Hyperplane& h : c.achieved_cover) planes.push_back(json_hyperplane(h));
    return Json{{"achieved_cover", planes},
                {"exhaustive", c.exhaustive},
                {"lower_bound", c.lower_bound},
                {"max_incidence", c.max_incidence},
                {"min_cover_size", c.min_cover_size},
                {"n", c.n},
                {"timing", Json{{"elapsed_secs", format_double(c.elapsed_secs)}}}};
}

Json json_incidence_summary(const FlatEnumeration& e, int max_count, const IncidenceSet& witness) {
    Json hist = Json::object();
    for (auto& [size, count] : e.histogram()) hist[std::to_string(size)] = count;
    return Json{{"exhaustive", e.exhaustive},
                {"histogram", hist},
                {"max_incidence", max_count},
                {"num_flats", e.size()},
                {"num_vertices", e.num_vertices},
                {"subsets_considered", e.subsets_considered},
                {"witness", json_incidence_set(witness)}};
}

} // namespace permucover
