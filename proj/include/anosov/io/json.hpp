#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "anosov/anosov/certify.hpp"
#include "anosov/forms/forms.hpp"
#include "anosov/lie/algebra.hpp"

namespace anosov {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "anosov-lab/1";

/// Malformed or inconsistent input documents.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Indices in documents are 1-based.
Json to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& doc);

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& doc);

Json to_json(const UniPoly& p);
Json to_json(const HomogeneousForm& f);
Json to_json(const AnosovCertificate& c);
Json to_json(const ObstructionReport& r);
Json to_json(const GateResult& g);

Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace anosov
