#pragma once

#include <json.hpp>

#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/linkedness.hpp"
#include "shallow/minors.hpp"

namespace shallow::detail {

using Json = nlohmann::ordered_json;

Json depth_json(Depth d);
Json set_json(VertexSet s);

Json bramble_json(const Bramble& bramble, const OrderCertificate& certificate, int t, bool tangle);
Json minor_model_json(const Graph& pattern, const MinorModel& model);
Json scol_order_json(const LinearOrder& order, Depth r, int value);
Json linked_json(const LinkedWitness& witness);
Json well_linked_json(const WellLinkedWitness& witness);
Json density_json(const DensityMinor& minor, Depth r);

}  // namespace shallow::detail
