#include "biell/certificates.hpp"

namespace biell {
namespace certs {

json int_json(const Int& n) { return n.get_str(); }
json rat_json(const Rat& q) { return q.get_str(); }

json point_json(const ECPoint& p) {
    if (p.inf) return json{{"infinity", true}};
    return json{{"x", rat_json(p.x)}, {"y", rat_json(p.y)}};
}

json curve_json(const EllipticCurveQ& e) {
    return json{{"equation", e.str()},
                {"a", int_json(e.a)},
                {"b", int_json(e.b)},
                {"c", int_json(e.c)},
                {"discriminant", int_json(e.disc())},
                {"j", rat_json(e.j())}};
}

json hyper_json(const HyperellipticModel& m) {
    json coeffs = json::array();
    for (int i = 0; i <= m.f.degree(); ++i) coeffs.push_back(rat_json(m.f.coeff(i)));
    return json{{"equation", m.str()},
                {"twist", int_json(m.d)},
                {"coefficients", coeffs},
                {"genus", m.genus()}};
}

json quartic_json(const QuarticModel& m) {
    json coeffs = json::array();
    for (int i = 0; i <= 4; ++i) coeffs.push_back(rat_json(m.g.coeff(i)));
    return json{{"equation", m.str()},
                {"twist", int_json(m.d)},
                {"coefficients", coeffs},
                {"genus", 1}};
}

json target_json(const TargetModel& m) {
    if (std::holds_alternative<EllipticCurveQ>(m))
        return curve_json(std::get<EllipticCurveQ>(m));
    if (std::holds_alternative<HyperellipticModel>(m))
        return hyper_json(std::get<HyperellipticModel>(m));
    return quartic_json(std::get<QuarticModel>(m));
}

json height_json(const HeightValue& h) {
    return json{{"value", h.value}, {"error_bound", h.error}};
}

json torsion_json(const TorsionGroup& t) {
    json gens = json::array();
    for (const auto& g : t.generators) gens.push_back(point_json(g));
    json pts = json::array();
    for (const auto& p : t.points) pts.push_back(point_json(p));
    return json{{"structure", t.name()},
                {"order", t.order()},
                {"generators", gens},
                {"points", pts}};
}

json witness_json(const descent2::LocalWitness& w) {
    json j{{"place", w.place == 0 ? json("real") : json(int_json(w.place))}};
    if (w.place == 0) {
        j["sample_t"] = rat_json(w.real_sample);
    } else {
        j["residue"] = int_json(w.residue);
        j["depth"] = w.depth;
        j["inverted_parameter"] = w.inverted;
        if (w.exact_zero) j["exact_zero"] = true;
    }
    return j;
}

json torsor_class_json(const descent2::TorsorClassReport& c) {
    json j{{"d1", int_json(c.d1)}, {"d2", int_json(c.d2)},
           {"survives", c.survives}};
    if (!c.survives) {
        j["failed_place"] = c.failed_place == 0 ? json("real")
                                                : json(int_json(c.failed_place));
    } else {
        json ws = json::array();
        for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
        j["witnesses"] = ws;
    }
    return j;
}

json selmer_json(const descent2::SelmerReport& s) {
    json j{{"method", descent2::method_name(s.method)}};
    if (s.method == descent2::DescentMethod::Literature) {
        j["rank_upper"] = s.rank_upper;
        j["literature_tag"] = s.literature_tag;
        j["provenance"] = "literature";
        return j;
    }
    j["dimensions"] = s.dimensions;
    j["rank_upper"] = s.rank_upper;
    j["provenance"] = "computed";
    json surv = json::array();
    for (const auto& [d1, d2] : s.surviving) {
        if (s.method == descent2::DescentMethod::FullTwoDescent)
            surv.push_back(json::array({int_json(d1), int_json(d2)}));
        else
            surv.push_back(int_json(d1));
    }
    j["surviving_classes"] = surv;
    if (!s.surviving_dual.empty()) {
        json sd = json::array();
        for (const auto& [d1, d2] : s.surviving_dual) {
            (void)d2;
            sd.push_back(int_json(d1));
        }
        j["surviving_classes_dual"] = sd;
    }
    json cls = json::array();
    for (const auto& c : s.classes) cls.push_back(torsor_class_json(c));
    j["classes"] = cls;
    if (!s.classes_dual.empty()) {
        json cd = json::array();
        for (const auto& c : s.classes_dual) cd.push_back(torsor_class_json(c));
        j["classes_dual"] = cd;
    }
    return j;
}

json lower_bound_json(const RankLowerBound& l) {
    json pts = json::array();
    for (size_t i = 0; i < l.subset.size(); ++i) {
        json p = point_json(l.subset[i]);
        p["height"] = height_json(l.heights[i]);
        pts.push_back(p);
    }
    return json{{"rank_lower", l.rank},
                {"independent_points", pts},
                {"regulator", l.regulator},
                {"regulator_error", l.regulator_error},
                {"provenance", "computed"}};
}

json rank_certificate_json(const descent2::RankCertificate& c) {
    json j{{"curve", curve_json(c.curve)},
           {"torsion", torsion_json(c.torsion)},
           {"lower", lower_bound_json(c.lower)},
           {"search_height", int_json(c.search_height)},
           {"height_precision", c.precision}};
    if (c.upper) j["upper"] = selmer_json(*c.upper);
    if (c.upper_secondary) j["upper_secondary"] = selmer_json(*c.upper_secondary);
    if (c.status == descent2::CertStatus::Exact) {
        j["status"] = "exact";
        j["rank"] = c.rank_lower;
    } else {
        j["status"] = "interval";
        j["rank_interval"] =
            json::array({c.rank_lower, c.rank_upper ? json(*c.rank_upper)
                                                    : json(nullptr)});
    }
    j["literature_flagged"] = c.literature_flagged;
    if (!c.literature_tag.empty()) j["literature_tag"] = c.literature_tag;
    j["probable_prime_used"] = c.probable_prime_used;
    return j;
}

json family_instance_json(const families::FamilyInstance& inst) {
    json params;
    for (const auto& [k, v] : inst.params) params[k] = int_json(v);
    json factors = json::array();
    for (const auto& f : inst.factors) {
        json fj{{"label", f.label},
                {"model", target_json(f.model)},
                {"map_degree", f.map.degree},
                {"map_verified", verify_map(f.map)},
                {"matched", f.matched}};
        if (f.rank) fj["rank_certificate"] = rank_certificate_json(*f.rank);
        factors.push_back(fj);
    }
    json er;
    er["provenance"] = families::provenance_name(inst.expected_rank.provenance);
    er["note"] = inst.expected_rank.note;
    er["value"] = inst.expected_rank.value ? json(*inst.expected_rank.value)
                                           : json(nullptr);
    return json{{"family", families::tag_name(inst.tag)},
                {"parameters", params},
                {"curve", hyper_json(inst.curve)},
                {"factors", factors},
                {"expected_rank", er},
                {"congruence_class_checked", inst.congruence_class_checked},
                {"notes", inst.notes}};
}

json curve_point_json(const points::CurvePoint& p) {
    if (p.at_infinity)
        return json{{"infinity", true}, {"branch", p.inf_sign >= 0 ? "+" : "-"}};
    return json{{"x", rat_json(p.x)}, {"y", rat_json(p.y)}};
}

json point_set_json(const points::PointSetResult& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(curve_point_json(p));
    return json{{"status", r.status == points::PointSetStatus::Exact
                               ? "exact"
                               : "undetermined"},
                {"conditional_on_literature", r.conditional_on_literature},
                {"points", pts},
                {"trace", r.trace}};
}

json document(const std::string& command, json inputs, json results, json rigor,
              long timing_ms) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"rigor", std::move(rigor)},
                {"timing_ms", timing_ms}};
}

json strip_volatile(json doc) {
    doc.erase("timing_ms");
    return doc;
}

}  // namespace certs
}  // namespace biell
