#pragma once

#include "galdens/class_function.hpp"
#include "galdens/cyclotomic.hpp"
#include "galdens/density.hpp"
#include "galdens/rational.hpp"

#include <json.hpp>

#include <string>

namespace galdens {

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."}; never a float.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

inline constexpr std::size_t kMaxJsonDigits = 256;

/// Exact {"num","den"} when both fit in max_digits, otherwise
/// {"approx", "num_digits", "den_digits"} with a 40-digit decimal.
Json to_json_capped(const Rational& r, std::size_t max_digits = kMaxJsonDigits);

Json to_json(const BigInt& n);

/// {"conductor": e, "coeffs": [rationals]} in the power basis.
Json to_json(const CycValue& v);
CycValue cyc_from_json(const Json& j);

/// Group name, order, one entry per class (representative, size, value).
Json to_json(const ClassFunction& f);
/// Rebuilds the values of a class function on `group`; class count and order must match.
ClassFunction class_function_from_json(const FiniteGroup& group, const Json& j);

Json to_json(const PrimeWindow& w);
Json to_json(const ApproxPlan& plan);

/// Envelope printed by every CLI command.
struct RunReport {
    std::string command;
    Json config = Json::object();
    Json results = Json::object();
    double wall_seconds = 0;

    Json to_json() const;
    static RunReport from_json(const Json& j);
};

}  // namespace galdens
