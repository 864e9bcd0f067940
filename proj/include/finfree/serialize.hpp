#ifndef FINFREE_SERIALIZE_HPP
#define FINFREE_SERIALIZE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "finfree/limit_oracle.hpp"
#include "finfree/polynomial.hpp"
#include "finfree/symmetric.hpp"

namespace finfree {

using Json = nlohmann::json;

// Polynomial / profile files accept any one of:
//   {"degree": d, "roots": ["3/2", ...]}        exact rational roots
//   {"degree": d, "e_tilde": ["1", "1", "1/2"]} normalized symmetric values
//   {"degree": d, "coefficients": ["1", ...]}   monic, leading first
// "degree" is optional where the array length determines it.

Json roots_to_json(const RootMultiset<Rational>& roots);
Json roots_to_json(const RootMultiset<BigFloat>& roots, unsigned digits = 30);

Json profile_to_json(const SymmetricProfile& profile);
SymmetricProfile profile_from_json(const Json& j);

Json poly_to_json(const BigPoly& poly);
BigPoly poly_from_json(const Json& j);

// Measures: {"kind":"discrete","atoms":[["1/2","1"],["1/2","0"]]} with each
// atom as [weight, location], or {"kind":"mp"} / {"kind":"bernoulli_half"}.
Json measure_to_json(const MeasureSpec& mu);
MeasureSpec measure_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// Tabular experiment output: cells are preformatted strings (exact values as
/// "p/q", decimals at 30 significant digits).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& table);
void write_json_rows(std::ostream& os, const Table& table);

}  // namespace finfree

#endif
