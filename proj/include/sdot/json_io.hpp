#pragma once

#include <string>

#include "sdot/doublecat.hpp"
#include "sdot/polygon.hpp"
#include "sdot/preaug.hpp"
#include "sdot/segal.hpp"
#include "sdot/simpset.hpp"
#include "sdot/waldhausen.hpp"

namespace sdot {

// Schemas: tss/v1, pdec/v1, dcat/v1, paug/v1, report/v1. Parsing rejects
// unknown fields and validates the object; emission is canonical (sorted
// keys, two-space indent, trailing newline).

std::string tss_to_json(const TruncatedSimplicialSet& x);
TruncatedSimplicialSet tss_from_json(const std::string& text);

std::string pdec_to_json(const PolygonalDecomposition& p);
PolygonalDecomposition pdec_from_json(const std::string& text);

std::string dcat_to_json(const AugmentedDoubleCategory& d);
AugmentedDoubleCategory dcat_from_json(const std::string& text);

std::string paug_to_json(const PreaugBisimplicialSet& y);
PreaugBisimplicialSet paug_from_json(const std::string& text);

std::string report_to_json(const CheckReport& r, const std::string& subject);
std::string roundtrip_to_json(const RoundtripReport& r);

// generic: reads "schema" and returns it; throws Error("InvalidDocument")
std::string schema_of(const std::string& text);

}  // namespace sdot
