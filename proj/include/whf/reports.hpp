#pragma once

#include "whf/sie.hpp"
#include "whf/toeplitz.hpp"

#include <json.hpp>

namespace whf {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
Json to_json(const FredholmReport& r);
Json to_json(const Factor& f);
Json to_json(const WHFactorisation& f);
Json to_json(const VerificationReport& v);
Json to_json(const InverseRecipe& r);
Json to_json(const JumpExponents& e);
Json to_json(const HalfLineSolution& s);
Json to_json(const IntervalReductionReport& r);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

} // namespace whf
