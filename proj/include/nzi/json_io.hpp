#pragma once

#include "json.hpp"

#include "nzi/bounds.hpp"
#include "nzi/degree_profile.hpp"
#include "nzi/enumeration.hpp"
#include "nzi/indices.hpp"
#include "nzi/spectral.hpp"

namespace nzi {

// Insertion-ordered so documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; the value every report prints.
double round12(double x);

Json to_json(const DegreeProfile& p);
Json to_json(const IndexReport& r);
Json to_json(const BoundReport& r);
Json to_json(const CongruenceData& c);
Json to_json(const SpectralResult& s);
Json to_json(const VerificationFailure& f);
Json to_json(const VerificationReport& r);
Json to_json(const ExtremalRecord& e);

/// Histogram as an object keyed by the decimal value.
Json histogram_json(const Histogram& h);

}  // namespace nzi
