#pragma once

#include <string>

#include "json.hpp"

#include "hurwitz/oracle.hpp"
#include "hurwitz/realization.hpp"

namespace hurwitz::cli {

using json = nlohmann::json;

extern const char* const kToolVersion;

/// Common header of every structured record.
json record_header(const std::string& command, const std::string& input);

json to_json(const HurwitzWitness& witness);
json to_json(const Certificate& certificate);
json to_json(const Classification& classification);
json to_json(const SearchBounds& bounds);
json to_json(const RealizationSurvey& survey);
json to_json(const InvolutionSurvey& survey);

/// Reads the witness fields of a record. Throws std::invalid_argument on a
/// malformed record.
HurwitzWitness witness_from_json(const json& record);

}  // namespace hurwitz::cli
