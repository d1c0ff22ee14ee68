#pragma once

// JSON encoding of exact values, descriptors and reports. Keys come out
// sorted, so equal values always serialize to the same bytes.
//
// Integers fit a JSON number when |x| <= 2^53; larger ones are written as
// {"format": "bigint", "value": "<decimal>"}. Non-integral rationals are
// {"num": "<decimal>", "den": "<decimal>"}.

#include "chern/bounds.hpp"
#include "chern/catalog.hpp"
#include "chern/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace chern {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
/// Coefficient list, constant term first.
Json to_json(const Polynomial& p);
Json to_json(const std::vector<Integer>& xs);
Json to_json(const BoundValue& v);
Json to_json(const ChernData& c);
Json to_json(const SplittingType& b);
Json to_json(const SheafDescriptor& d);
Json to_json(const std::vector<SheafDescriptor>& catalog);
Json to_json(const BoundReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const CohomologyBounds& cb);

/// Throws std::invalid_argument on malformed input.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
SplittingType splitting_from_json(const Json& j);
SheafDescriptor descriptor_from_json(const Json& j);

/// Accepts {"descriptors": [...]}, a bare array, or a single descriptor.
std::vector<SheafDescriptor> catalog_from_json(const std::string& text);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace chern
