#pragma once

#include <json.hpp>

#include "macias/checks.hpp"

namespace macias {

// Stable, ordered JSON for every value the CLI prints.  Elements serialize
// as their literal strings, big integers as decimal strings.
using Json = nlohmann::ordered_json;

Json to_json(const Element& e);
Json to_json(const RingDescriptor& ring, const Window& w);
Json to_json(const Ideal& I);
Json to_json(const MaximalIdealDescriptor& m);
Json to_json(const Certificate& c);
Json to_json(const ComaximalResult& r);
Json to_json(const ClosureResult& r);
Json to_json(const MaximalIdealSet& s);
Json to_json(const Factorization& f);
Json to_json(const GcdResult& g);
Json to_json(const DensityVerdict& v);
Json to_json(const GolombResult& g);
Json to_json(const CheckReport& r);
Json to_json(const CheckSpec& s);
Json to_json(const Counterexample& c);
Json elements_json(const std::vector<Element>& v);

}  // namespace macias
