#include "pxp/json_io.hpp"

namespace pxp {

namespace {

std::vector<FieldElement> elements_from_json(const FieldContext& ctx, const Json& j,
                                             const char* what) {
    if (!j.is_array() || j.empty())
        throw InvalidParameter(std::string(what) + " must be a nonempty array of integers");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InvalidParameter(std::string(what) + " entries must be integers");
        out.push_back(ctx.element(v.get<std::int64_t>()));
    }
    return out;
}

} // namespace

Json form_to_json(const BinaryForm& f) {
    Json arr = Json::array();
    for (const auto& c : f.coefficients()) arr.push_back(c.value());
    return arr;
}

Json pair_to_json(const FormPair& pair) {
    return Json::array({form_to_json(pair.q1()), form_to_json(pair.q2())});
}

Json matrix_to_json(const Matrix2& m) {
    return Json::array({m.m11().value(), m.m12().value(), m.m21().value(),
                        m.m22().value()});
}

Json rotation_to_json(const RotationData& rot) {
    Json r = Json::array(), q = Json::array();
    for (const auto& e : rot.first()) r.push_back(e.value());
    for (const auto& e : rot.second()) q.push_back(e.value());
    return Json{{"n", rot.n()}, {"R", r}, {"Q", q}};
}

BinaryForm form_from_json(const FieldContext& ctx, const Json& j) {
    return BinaryForm(ctx, elements_from_json(ctx, j, "form"));
}

FormPair pair_from_json(const FieldContext& ctx, const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidParameter("pair must be a two-element array of forms");
    return FormPair(form_from_json(ctx, j[0]), form_from_json(ctx, j[1]));
}

RotationData rotation_from_json(const FieldContext& ctx, const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("R") || !j.contains("Q"))
        throw InvalidParameter(R"(rotation data must be {"n": n, "R": [...], "Q": [...]})");
    if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
        throw InvalidParameter("rotation n must be a positive integer");
    std::int64_t n = j["n"].get<std::int64_t>();
    if (n < 1) throw InvalidParameter("rotation n must be a positive integer");
    auto first = elements_from_json(ctx, j["R"], "R");
    auto second = elements_from_json(ctx, j["Q"], "Q");
    return RotationData(ctx, static_cast<std::uint32_t>(n), std::move(first),
                        std::move(second));
}

} // namespace pxp
