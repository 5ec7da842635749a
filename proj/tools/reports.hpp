#pragma once

#include <json.hpp>
#include <string>

#include "tracekit/colex.hpp"
#include "tracekit/constructions.hpp"
#include "tracekit/numerics.hpp"
#include "tracekit/piles.hpp"
#include "tracekit/search.hpp"
#include "tracekit/weights_d5.hpp"

namespace tracekit::cli {

using nlohmann::json;

json rat_json(const Rat& r);
json mask_json(SubsetMask m);  // 1-based element list

json to_json(const ExtremalReport& r);
json to_json(const Fact62Report& r);
json to_json(const DualCandidate& r);
json to_json(const KatonaResult& r);
json to_json(const Lemma25Result& r);
json to_json(const SearchResult& r, bool as_m);
json to_json(const d5::KeyLemmaReport& r);
json to_json(const d5::Theorem31Result& r);
json to_json(const piles::PileDecomposition& r);
json to_json(const piles::Lemma43Report& r);
json to_json(const piles::ProjectionReport& r);

// 64-bit FNV-1a of the compact dump, in hex.
std::string digest(const json& j);

}  // namespace tracekit::cli
