#pragma once

// JSON encodings. Rationals are always strings, "p/q" or "p"; never decimals.

#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chainmod/components.hpp"
#include "chainmod/curve.hpp"
#include "chainmod/gluing.hpp"
#include "chainmod/polarization_solver.hpp"
#include "chainmod/rational.hpp"
#include "chainmod/stability.hpp"

namespace chainmod::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Rat& q);
Json to_json(const std::vector<Rat>& qs);
Json to_json(const OpenInterval& iv);
Json to_json(const InequalityReport& report);
Json to_json(const HypothesisReport& report);
Json to_json(const StabilityVerdict& verdict);
Json to_json(const NumericalSheaf& sheaf);
Json to_json(const SolveResult& result);
Json to_json(const Component& comp);
Json to_json(const Enumeration& enumeration);
Json to_json(const RatMatrix& m);

/// Accepts a JSON string "p/q" / "p" or a JSON integer.
Rat rat_from_json(const Json& j);
std::int64_t int_from_json(const Json& j);
std::vector<std::int64_t> int_list_from_json(const Json& j);
std::vector<Rat> rat_list_from_json(const Json& j);

/// Rows of entries; each row a JSON array of "p/q" strings or integers.
RatMatrix matrix_from_json(const Json& j);

/// {"r": R, "matrices": [...]} (extra keys are left to the caller).
GluingDatum gluing_from_json(const Json& j);

/// "1,-2, 3" → {1, -2, 3}. Empty text gives an empty list.
std::vector<std::int64_t> parse_int_list(std::string_view text);
/// "1/3, 2/3" → {1/3, 2/3}.
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace chainmod::io
