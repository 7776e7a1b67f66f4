#pragma once

#include "concord/exact/laurent.hpp"
#include "concord/exact/scalar.hpp"
#include "concord/exact/snf.hpp"
#include "concord/linkforms.hpp"
#include "concord/pdcore.hpp"
#include "concord/plumbing.hpp"
#include "concord/spinc.hpp"
#include "concord/verify.hpp"

#include <json.hpp>

#include <string>

namespace concord::io {

using nlohmann::json;

/// Reads a file and parses it; InputError on I/O or syntax errors.
json read_json(const std::string& path);

Rational rational_from(const json& j);  // integer or "p/q" string
Integer integer_from(const json& j);
json to_json(const Rational& q);
json to_json(const Integer& x);
json to_json(const RatMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const LaurentPoly& f);
json to_json(const AbelianGroup& g);
json to_json(const FiniteLinkingForm& f);
json to_json(const SpinCRep& r);
json to_json(const PDInstance& p);
json to_json(const VerificationReport& r);
json to_json(const Check& c);

IntMatrix int_matrix_from(const json& j);
RatMatrix rat_matrix_from(const json& j);
PlumbingGraph graph_from(const json& j);
SpinCRep rep_from(const json& j, const PlumbingGraph& g);
FiniteLinkingForm form_from(const json& j);
/// Generators without a "name" get g0, g1, ...; "negation" is an optional word.
PDInstance instance_from(const json& j);

}  // namespace concord::io
