// JSON input schemas and deterministic JSON output.
//
//   complex: {"vertices": [...], "facets": [[...], ...]}
//   poset:   {"elements": [...], "hasse": [["a", "b"], ...]}   (a < b)
//   fan:     {"ambient_dim": d, "cones": [[[g, ...], ...], ...]}
//   module:  {"poset": <poset>, "stalks": {"x": n}, "edges": {"x<y": [[...]]}}
//
// Labels may be strings or integers; integers are read as their decimal
// form. Matrix entries may be integers or strings such as "-3/4".

#ifndef TFR_IO_HPP
#define TFR_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tfr/facering.hpp"
#include "tfr/fan.hpp"
#include "tfr/kpmod.hpp"
#include "tfr/poset.hpp"
#include "tfr/simplicial.hpp"
#include "tfr/verdict.hpp"

namespace tfr::io {

using nlohmann::json;

/// Malformed JSON or a schema mismatch.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);

SimplicialComplex parse_complex(const json& j);
/// Redundant (non-covering) Hasse pairs are dropped and described in
/// `warnings`.
Poset parse_poset(const json& j, std::vector<std::string>* warnings = nullptr);
Fan parse_fan(const json& j);
KPModule parse_module(const json& j, const Field& field, std::vector<std::string>* warnings = nullptr);

/// "0,-1,2" or "[0,-1,2]"; "" is the empty vector.
LatticeVector parse_degree(const std::string& text);
/// Face given by comma-separated vertex labels, "" or "{}" for ∅.
FaceMask parse_face(const SimplicialComplex& complex, const std::string& text);

json to_json(const SimplicialComplex& complex);
json to_json(const Poset& p);
json to_json(const Fan& fan);
json to_json(const LatticeVector& v);
/// {"i": n} over the nonzero entries only.
json to_json(const GradedDims& dims);
json to_json(const Verdict& v);
/// One {"cone": [rays], "betti": {...}} entry per cone, in cone order.
json table_to_json(const LocalCohomologyTable& table, const Fan& fan);

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const json& j);

}  // namespace tfr::io

#endif  // TFR_IO_HPP
