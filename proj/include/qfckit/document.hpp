#pragma once

#include <json.hpp>

#include "qfckit/decide.hpp"
#include "qfckit/oracle.hpp"

namespace qfc {

using Json = nlohmann::json;

// Document text without a machine block, or a block whose structure does not
// match the schema: missing fields, wrong arity, unknown type tags.
struct MalformedCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact JSON forms. Every Int travels as a decimal string so no value is
// clipped; small structural counts travel as plain numbers.
Json json_of(const Int& v);
Json json_of(const ExponentVector& v);
Json json_of(const IntMatrix& m);
Json json_of(const Certificate& c);
Json json_of(const Witness& w);
Json json_of(const Verdict& v);
Json json_of(const GapReport& r);
Json json_of(const OracleReport& r);
Json json_of(const StrongQfcWitness& w);
Json monoid_json(const FgMonoid& m);
Json subalgebra_json(const SubalgebraSpec& a);

Int int_from_json(const Json& j);
ExponentVector vector_from_json(const Json& j);

// Human-readable lines followed by the same content as a fenced json block.
std::string render_document(const std::vector<std::string>& human_lines, const Json& payload);

// The machine block back out of a document; raw JSON text is also accepted.
Json parse_document(const std::string& text);

// Complete decide-job document for the monoid algebra R[M].
std::string decide_document(const std::string& property, const FgMonoid& m, const Verdict& v,
                            double elapsed_ms);

// Complete decide-job document for a general subalgebra.
std::string decide_document(const std::string& property, const SubalgebraSpec& a, const Verdict& v,
                            double elapsed_ms);

// Re-checks every certificate and witness claim in a decide document against
// freshly parsed inputs, using lattice, monoid, and laurent primitives only.
// Returns false on any failed claim, for instance a tampered determinant.
// Throws MalformedCertificate when the document cannot be interpreted, and
// passes through UndecidedError when a membership recheck runs out of budget.
bool verify_certificate(const std::string& document_text);

}  // namespace qfc
