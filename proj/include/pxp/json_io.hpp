#pragma once

#include <json.hpp>

#include "pxp/construction.hpp"
#include "pxp/equivalence.hpp"
#include "pxp/forms.hpp"

namespace pxp {

using Json = nlohmann::ordered_json;

/// A form is the list of its coefficients in descending powers of a; a pair is
/// a two-element list of forms; matrices are row-major 4-lists; rotation data
/// is {"n": n, "R": [..2n..], "Q": [..2n..]}.
Json form_to_json(const BinaryForm& f);
Json pair_to_json(const FormPair& pair);
Json matrix_to_json(const Matrix2& m);
Json rotation_to_json(const RotationData& rot);

BinaryForm form_from_json(const FieldContext& ctx, const Json& j);
FormPair pair_from_json(const FieldContext& ctx, const Json& j);
RotationData rotation_from_json(const FieldContext& ctx, const Json& j);

} // namespace pxp
