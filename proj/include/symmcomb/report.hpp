#pragma once

// JSON encodings of the library's results. Indices are 1-based, rationals
// are integers when integral and "p/q" strings otherwise.

#include "symmcomb/lspath.hpp"
#include "symmcomb/prv.hpp"
#include "symmcomb/satake.hpp"
#include "symmcomb/smt.hpp"

#include "json.hpp"

#include <string>

namespace symmcomb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "symmcomb 1.0.0";

Json to_json(const Rational& q);
Json to_json(const RatVector& v);
Json to_json(const Weight& w);
Json to_json(const WeylElement& w);

Json diagram_json(const SatakeDiagram& d);
Json involution_json(const SymmetricSpace& s);
Json lattice_json(const SymmetricSpace& s);
Json spherical_json(const SymmetricSpace& s, const Weight& mu);

Json path_json(const Path& p);
Json ls_path_json(const BondedPoset& poset, const LSPath& pi);
Json poset_json(const BondedPoset& poset);
Json crystal_json(const Crystal& c);

Json monomial_json(const StandardMonomials& sm, const Monomial& x);
Json dimension_json(const DimensionReport& r);

Json decomposition_json(const Decomposition& d);
Json witness_json(const PrvWitness& w);
Json instance_json(const PrvInstance& inst);
Json sweep_json(const SweepReport& r);
Json support_json(const SupportReport& r);

}  // namespace symmcomb
