#pragma once

#include <string>
#include <string_view>

#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/linkedness.hpp"
#include "shallow/minors.hpp"

namespace shallow {

// Witnesses travel as single-line JSON documents tagged with "kind". Vertex
// sets are strictly increasing integer lists; depths are integers or "inf".

std::string serialize_bramble(const Bramble& bramble, const OrderCertificate& certificate, int t = 1,
                              bool tangle = false);
std::string serialize_minor_model(const Graph& pattern, const MinorModel& model);
std::string serialize_scol_order(const LinearOrder& order, Depth r, int value);
std::string serialize_linked(const LinkedWitness& witness);
std::string serialize_well_linked(const WellLinkedWitness& witness);
std::string serialize_density(const DensityMinor& minor, Depth r);

struct WitnessCheck {
  bool valid = false;
  std::string kind;
  /// Why the document was rejected; empty when valid.
  std::string reason;
};

/// Parses a witness document and re-checks every claim it makes against g.
/// Malformed documents are rejected, never thrown.
WitnessCheck verify_witness(const Graph& g, std::string_view document);

}  // namespace shallow
