#pragma once

#include <json.hpp>

#include "permucover/coversearch.hpp"
#include "permucover/monodromy.hpp"
#include "permucover/permutope.hpp"
#include "permucover/symcrit.hpp"

namespace permucover {

// std::map-backed json: keys serialize sorted, so reports are byte-stable.
using Json = nlohmann::json;

// All scalars in reports are decimal strings: rationals as "p/q" (or "p"),
// floats as the shortest round-trip decimal, so reports stay diff-able and
// language-neutral.
std::string format_double(double x);

Json json_rat(const Rat& r);
Json json_complex(Complex z); // {"im": ..., "re": ...}
Json json_point(const Point& p);
Json json_hyperplane(const Hyperplane& h);
Json json_permutation(const Permutation& p); // 1-based image list

Point parse_point(const Json& j);
Hyperplane parse_hyperplane(const Json& j);

// {"A": ["p/q", ...]} or {"n": k}; exactly one of the two.
std::vector<Rat> parse_generators(const Json& j);

struct CoverFile {
    std::vector<Rat> generators;
    std::vector<Hyperplane> planes;
};
// {"A": [...], "planes": [{"normal": [...], "offset": ...}, ...]}
CoverFile parse_cover_file(const Json& j);

Json json_cover_report(const CoverReport& r);
Json json_sym(const SymData& s);
Json json_criterion(const SymData& s, const CriticalData& cd);
Json json_oddcase(const OddCaseReport& r);
Json json_monodromy(const MonodromyReport& r);
Json json_incidence_set(const IncidenceSet& s);
Json json_certificate(const CoverCertificate& c);
// Summary for the incidence subcommand: max incidence, witness, histogram.
Json json_incidence_summary(const FlatEnumeration& e, int max_count, const IncidenceSet& witness);

} // namespace permucover
