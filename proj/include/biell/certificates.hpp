#pragma once

#include <json.hpp>

#include "biell/descent2.hpp"
#include "biell/families.hpp"
#include "biell/points.hpp"

namespace biell {
namespace certs {

using json = nlohmann::ordered_json;

// Big integers and rationals serialize as decimal strings, never as numbers;
// the only floating-point fields are height values carrying error bounds.
json int_json(const Int& n);
json rat_json(const Rat& q);

json point_json(const ECPoint& p);
json curve_json(const EllipticCurveQ& e);
json hyper_json(const HyperellipticModel& m);
json quartic_json(const QuarticModel& m);
json target_json(const TargetModel& m);
json height_json(const HeightValue& h);
json torsion_json(const TorsionGroup& t);
json witness_json(const descent2::LocalWitness& w);
json torsor_class_json(const descent2::TorsorClassReport& c);
json selmer_json(const descent2::SelmerReport& s);
json lower_bound_json(const RankLowerBound& l);
json rank_certificate_json(const descent2::RankCertificate& c);
json family_instance_json(const families::FamilyInstance& inst);
json curve_point_json(const points::CurvePoint& p);
json point_set_json(const points::PointSetResult& r);

// Envelope: schema_version, command echo, inputs, results, rigor, timing.
json document(const std::string& command, json inputs, json results, json rigor,
              long timing_ms);

// Strip the fields excluded from byte-identity comparisons (timing).
json strip_volatile(json doc);

}  // namespace certs
}  // namespace biell
