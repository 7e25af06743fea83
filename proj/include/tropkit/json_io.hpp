#pragma once

#include <string>

#include <json.hpp>

#include "tropkit/automorphism.hpp"
#include "tropkit/kex.hpp"
#include "tropkit/matrix.hpp"
#include "tropkit/poly.hpp"
#include "tropkit/sat.hpp"
#include "tropkit/scalar.hpp"

namespace tropkit {

// Structured encodings. Field order is fixed so equal inputs serialize to
// identical bytes. Finite scalars are JSON integers; epsilon is the string
// "inf".

using Json = nlohmann::ordered_json;

Json scalar_to_json(TropScalar s);
TropScalar scalar_from_json(const Json& j);

Json matrix_to_json(const TropMatrix& m);  // array of rows
TropMatrix matrix_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);  // [{"degree": d, "coefficient": c}]
UniPoly unipoly_from_json(const Json& j);

Json poly_to_json(const TropPoly& p);  // [{"coeff": c, "exps": [...]}]
TropPoly poly_from_json(const Json& j);

Json rat_to_json(const TropRat& r);  // {"num": ..., "den": ...}
TropRat rat_from_json(const Json& j);

/// {"n": ..., "coords": [rational records]}
Json public_key_to_json(const AutPublicKey& pk);
AutPublicKey public_key_from_json(const Json& j);

/// {"n": ..., "factors": [{"type": "monomial", "b": ..., "A": ...} |
///                        {"type": "triangular", "j": ..., "q": ...}]}
/// with j 1-based as in the factor definition.
Json private_key_to_json(const AutChain& chain);
AutChain private_key_from_json(const Json& j);

Json kex_transcript_to_json(const KexTranscript& t);

Json equation_system_to_json(const TropEqSystem& system);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tropkit
