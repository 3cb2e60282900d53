#ifndef HSL_JSON_IO_HPP
#define HSL_JSON_IO_HPP

#include "hsl/hslap.hpp"
#include "hsl/transvector.hpp"

#include <json.hpp>

namespace hsl {

using Json = nlohmann::ordered_json;

std::string var_name(const VarRef& v);
VarRef var_from_name(const std::string& name, const Context& ctx);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json word_to_json(const OperatorWord& w);
OperatorWord word_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);
Json decomposition_to_json(const DecompositionReport& r);
Json basis_to_json(const SubspaceBasis& b);

}  // namespace hsl

#endif
