#pragma once

#include <json.hpp>

#include "schreier/error.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/norm.hpp"
#include "schreier/one_sets.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/sign_seq.hpp"
#include "schreier/tingley.hpp"

// JSON encodings. Objects are built with keys in sorted order and rationals
// in reduced "num/den" form, so dumps are byte-stable.
namespace schreier::json {

using Json = nlohmann::ordered_json;

Json encode(const FinSet& f);
Json encode(const std::vector<FinSet>& sets);
Json encode(const FinVector& x);
Json encode(Ordinal a);
Json encode(const Exponent& p);
Json encode(const NormValue& v);
Json encode(const SignSeq& theta);
Json encode(const OneSetReport& r);
Json encode(const MapTable& t);
Json encode(const VerificationReport& r);
Json encode(const CheckResult& c);
Json encode(const Error& e);

FinSet decode_set(const Json& j);
FinVector decode_vector(const Json& j);
Ordinal decode_ordinal(const Json& j);
Exponent decode_exponent(const Json& j);
MapTable decode_table(const Json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse(std::string_view text);

}  // namespace schreier::json
