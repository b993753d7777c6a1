#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "vecram/blueflat.hpp"
#include "vecram/colouring.hpp"
#include "vecram/dodge.hpp"
#include "vecram/hitting.hpp"
#include "vecram/midpoint.hpp"
#include "vecram/oscwitness.hpp"
#include "vecram/search.hpp"

namespace vecram {

// Certificates are JSON objects tagged {"format": "cert_v1", "kind": ...};
// key order is part of the byte-stable output contract.
using Json = nlohmann::ordered_json;

Json flat_to_json(const AffineFlat& flat);
// Strict: the basis must already be in reduced echelon form and the base
// reduced against it, or parsing fails.
AffineFlat flat_from_json(const Json& j, const Field& f, int n);
Subspace space_from_json(const Json& rows, const Field& f, int n);

Json mono_flat_certificate(int q, int n, int d, std::uint8_t colour,
                           const AffineFlat& flat);
Json blue_flat_certificate(int q, int n, int k, const AffineFlat& flat);
Json line_profile_certificate(int q, int n, const FqVec& base,
                              const Subspace& space,
                              const std::vector<std::uint8_t>& profile);
Json sum_system_certificate(int n, const SumSystem& sys);
Json vdw_certificate(std::int64_t n_points, int len, const VdwWitness& w);
Json osc_witness_certificate(const FlagChain& chain,
                             const std::vector<std::uint8_t>& coeffs,
                             const OscWitnesses& w);
Json dodge_certificate(const DodgeSet& set, int lines);
Json hitting_certificate(const HittingSet& set, int aps);
Json sigma_certificate(const SigmaEmbedding& emb);
Json embedding_certificate(const EmbeddingMap& map, int size);
Json collapse_certificate(const CollapseWitness& w, int size);
Json nonhomog_certificate(const NonHomogWitness& w);

// Context a certificate kind must be checked against.
enum class VerifyInput { None, PointColouring, IntervalColouring, Structure };

// Throws on an unknown kind.
VerifyInput verify_requirement(const std::string& kind);

struct VerifyOutcome {
  bool ok = false;
  std::string detail;
};

// Recomputes the claimed property by enumeration, trusting nothing beyond
// the given inputs.  A malformed or false certificate yields {false, why};
// a missing required input throws (usage error, not a refutation).
VerifyOutcome verify_certificate(const Json& cert, const Colouring* colouring,
                                 const IntervalColouring* interval,
                                 const MidpointStructure* structure);

}  // namespace vecram
