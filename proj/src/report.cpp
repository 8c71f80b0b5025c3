#include "cyclepack/report.hpp"

#include <json.hpp>

namespace cyclepack {

using nlohmann::json;

namespace {

json rat_json(const Rational& r) { return to_pq(r); }
Rational rat_from(const json& j) { return parse_pq(j.get<std::string>()); }

json weights_json(const std::vector<std::pair<int, Rational>>& ws) {
    json out = json::array();
    for (const auto& [c, w] : ws) out.push_back(json::array({c, to_pq(w)}));
    return out;
}

std::vector<std::pair<int, Rational>> weights_from(const json& j) {
    std::vector<std::pair<int, Rational>> out;
    for (const json& e : j) out.emplace_back(e.at(0).get<int>(), rat_from(e.at(1)));
    return out;
}

} // namespace

std::string Report::to_json() const {
    json j;
    j["instance"] = {{"name", instance_name}, {"mode", mode}, {"seed", seed},
                     {"num_cycles", num_cycles}};
    if (lp_value) {
        j["lp"] = {{"value", rat_json(*lp_value)},
                   {"weights", weights_json(lp_weights)},
                   {"uncross_steps", uncross_steps}};
    }
    if (!structured_weights.empty() || lp_value)
        j["structured"] = {{"weights", weights_json(structured_weights)}};
    json tr = json::array();
    for (const TraceLine& t : trace) {
        json e = {{"iteration", t.iteration},   {"component", t.component},
                  {"rule", t.rule},             {"fstar", t.fstar},
                  {"removed", rat_json(t.removed_mass)}, {"ratio", rat_json(t.ratio)},
                  {"mass_before", rat_json(t.mass_before)},
                  {"mass_after", rat_json(t.mass_after)}};
        if (t.alpha) e["alpha"] = rat_json(*t.alpha);
        tr.push_back(e);
    }
    j["rounding"] = {{"packing", packing}, {"trace", tr}, {"guarantee_ok", guarantee_ok}};
    json certs = json::array();
    for (const CertificateBlock& c : certificates) {
        json m = json::array();
        for (const auto& i : c.M)
            m.push_back({{"pair", json::array({i.a, i.b})},
                         {"vertices", i.vertices},
                         {"crossing", i.crossing},
                         {"mult", i.multiplicity}});
        json ms = json::array();
        for (auto [v, k] : c.mstar) ms.push_back(json::array({v, k}));
        certs.push_back({{"cycles", c.cycles},
                         {"M", m},
                         {"mstar", ms},
                         {"structured_ok", c.structured_ok},
                         {"good_ok", c.good_ok},
                         {"certificate_ok", c.certificate_ok},
                         {"mstar_skipped_redundant", c.mstar_skipped_redundant}});
    }
    j["certificate"] = certs;
    if (oracle) {
        json o = {{"nu", oracle->nu},
                  {"tau", oracle->tau},
                  {"nu_witness", oracle->nu_witness},
                  {"tau_witness", oracle->tau_witness}};
        if (oracle->tau_over_nu) o["tau_over_nu"] = rat_json(*oracle->tau_over_nu);
        j["oracle"] = o;
    }
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.instance_name = j.at("instance").at("name").get<std::string>();
    r.mode = j.at("instance").at("mode").get<std::string>();
    r.seed = j.at("instance").at("seed").get<uint64_t>();
    r.num_cycles = j.at("instance").at("num_cycles").get<int>();
    if (j.contains("lp")) {
        r.lp_value = rat_from(j["lp"].at("value"));
        r.lp_weights = weights_from(j["lp"].at("weights"));
        r.uncross_steps = j["lp"].at("uncross_steps").get<int>();
    }
    if (j.contains("structured"))
        r.structured_weights = weights_from(j["structured"].at("weights"));
    const json& rd = j.at("rounding");
    r.packing = rd.at("packing").get<std::vector<int>>();
    r.guarantee_ok = rd.at("guarantee_ok").get<bool>();
    for (const json& e : rd.at("trace")) {
        TraceLine t;
        t.iteration = e.at("iteration").get<int>();
        t.component = e.at("component").get<int>();
        t.rule = e.at("rule").get<std::string>();
        if (e.contains("alpha")) t.alpha = rat_from(e["alpha"]);
        t.fstar = e.at("fstar").get<std::vector<int>>();
        t.removed_mass = rat_from(e.at("removed"));
        t.ratio = rat_from(e.at("ratio"));
        t.mass_before = rat_from(e.at("mass_before"));
        t.mass_after = rat_from(e.at("mass_after"));
        r.trace.push_back(std::move(t));
    }
    for (const json& c : j.at("certificate")) {
        CertificateBlock b;
        b.cycles = c.at("cycles").get<std::vector<int>>();
        for (const json& i : c.at("M")) {
            CertificateBlock::IncidenceLine l;
            l.a = i.at("pair").at(0).get<int>();
            l.b = i.at("pair").at(1).get<int>();
            l.vertices = i.at("vertices").get<std::vector<int>>();
            l.crossing = i.at("crossing").get<bool>();
            l.multiplicity = i.at("mult").get<int>();
            b.M.push_back(std::move(l));
        }
        for (const json& m : c.at("mstar"))
            b.mstar.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
        b.structured_ok = c.at("structured_ok").get<bool>();
        b.good_ok = c.at("good_ok").get<bool>();
        b.certificate_ok = c.at("certificate_ok").get<bool>();
        if (c.contains("mstar_skipped_redundant"))
            b.mstar_skipped_redundant = c.at("mstar_skipped_redundant").get<bool>();
        r.certificates.push_back(std::move(b));
    }
    if (j.contains("oracle")) {
        Report::OracleBlock o;
        o.nu = j["oracle"].at("nu").get<int>();
        o.tau = j["oracle"].at("tau").get<int>();
        o.nu_witness = j["oracle"].at("nu_witness").get<std::vector<int>>();
        o.tau_witness = j["oracle"].at("tau_witness").get<std::vector<int>>();
        if (j["oracle"].contains("tau_over_nu")) o.tau_over_nu = rat_from(j["oracle"]["tau_over_nu"]);
        r.oracle = o;
    }
    return r;
}

} // namespace cyclepack
