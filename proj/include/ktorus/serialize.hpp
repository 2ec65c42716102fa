#pragma once

#include <json.hpp>

#include "ktorus/abelian.hpp"
#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; parsing accepts either form.
nlohmann::json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const nlohmann::json& j);

// Matrix wire format: {"rows": R, "cols": C, "data": [[...], ...]}.
nlohmann::json matrix_to_json(const ZMatrix& a);
ZMatrix matrix_from_json(const nlohmann::json& j);

// Group wire format: {"rank": r, "torsion": [...]}.
nlohmann::json group_to_json(const FGAbelianGroup& g);

}  // namespace ktorus
