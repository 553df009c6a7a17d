#ifndef GENUSFORMS_IO_HPP
#define GENUSFORMS_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "genusforms/genus.hpp"
#include "genusforms/specialize.hpp"

namespace genusforms::io {

using json = nlohmann::ordered_json;

// Big integers travel as decimal strings, rationals as "p" or "p/q",
// polynomials as ascending coefficient arrays.

json to_json(const Int& x);
json to_json(const Rat& x);
json to_json(const PolyQ& p);
json to_json(const QuadFormZ& q);
json to_json(const QuadFormP& q);
json to_json(const Mat2Z& m);
json to_json(const MumfordDiv& d);
json to_json(const GenusCoset& c);
json to_json(const PsiCertificate& c);
json to_json(const DescentValue& v);
json to_json(const SieveCell& cell);
json to_json(const CongruenceClass& c);
json to_json(const CriterionResult& c);
json to_json(const DensityReport& r);

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

/// Polynomial expression in x: integer/rational literals, + - * / ^ and
/// parentheses; no implicit multiplication ("3*x^2-1/2*x+4"). Division
/// requires a nonzero constant divisor. Throws UsageError on bad input.
PolyQ parse_poly(const std::string& expr);

/// "a,b,c" integer triple.
QuadFormZ parse_form_z(const std::string& s);

/// "A;B;C" polynomial expression triple.
QuadFormP parse_form_poly(const std::string& s);

std::string poly_to_string(const PolyQ& p);
std::string rat_to_string(const Rat& x);

std::string cells_to_csv(const std::vector<SieveCell>& cells);

/// Grid chart of sieve cells: 5 columns, cell n = lo-1+j+5i at row i,
/// column j; red/hatched = Trivial, yellow = NonTrivial, blue/gridded =
/// DegenerateSquare, navy/gridded = RootOfF, gray = undecided.
std::string cells_to_svg(const std::vector<SieveCell>& cells, const Int& lo);

void write_file(const std::string& path, const std::string& contents);

}  // namespace genusforms::io

#endif
