#pragma once

#include "json.hpp"

#include "dgk/constructions.hpp"
#include "dgk/delta.hpp"
#include "dgk/finite_ring.hpp"
#include "dgk/presented_ring.hpp"
#include "dgk/topo_model.hpp"

namespace dgk {

/// Insertion-ordered JSON so emitted documents are byte-deterministic.
using Json = nlohmann::ordered_json;

Json groupoid_to_json(const Groupoid& g);
Groupoid groupoid_from_json(const Json& j);

Json delta_to_json(const DeltaGroupoid& d);
DeltaGroupoid delta_from_json(const Json& j);

Json model_to_json(const ToppModel& m);
ToppModel model_from_json(const Json& j);

Json presentation_to_json(const PresentedRing& p);
PresentedRing presentation_from_json(const Json& j);

Json certificate_to_json(const RingHomCertificate& c);
RingHomCertificate certificate_from_json(const Json& j);

Json ring_to_json(const FiniteRing& r);
FiniteRing ring_from_json(const Json& j);

Json delta_morphism_to_json(const DeltaMorphism& f);
DeltaMorphism delta_morphism_from_json(const Json& j);

Json factorized_to_json(const FactorizedGroupData& fd);
FactorizedGroupData factorized_from_json(const Json& j);

Json report_to_json(const ValidationReport& rep);

}  // namespace dgk
