#include "subthresh/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace subthresh {

namespace {

void dump_into(const Json& v, std::string& out) {
    switch (v.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += Json(it.key()).dump();
            out += ':';
            dump_into(it.value(), out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) out += ',';
            first = false;
            dump_into(item, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        const double d = v.get<double>();
        out += std::isfinite(d) ? format_double(d) : "null";
        break;
    }
    default:
        out += v.dump();
    }
}

Json big_json(const BigInt& x) {
    if (fits_u64(x)) return Json(x.convert_to<std::uint64_t>());
    return Json(to_decimal(x));
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_json(const Json& value) {
    std::string out;
    dump_into(value, out);
    return out;
}

Json edge_list_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    return edges;
}

Json census_json(std::span<const SubgraphClass> census) {
    Json out = Json::array();
    for (const SubgraphClass& c : census) {
        Json item;
        item["canonical_key"] = c.canonical.hex();
        item["edge_count"] = c.edge_count;
        item["vertex_count"] = c.vertex_count;
        item["multiplicity"] = to_decimal(c.multiplicity);
        item["aut_count"] = big_json(c.aut_count);
        item["representative_edge_list"] = edge_list_json(c.representative);
        out.push_back(std::move(item));
    }
    return out;
}

Json threshold_json(const ThresholdReport& report) {
    auto witnesses = [](const std::vector<Witness>& ws) {
        Json arr = Json::array();
        for (const Witness& w : ws) {
            Json item;
            item["canonical_key"] = w.canonical.hex();
            item["edge_count"] = w.edge_count;
            item["log_value"] = w.log_value;
            arr.push_back(std::move(item));
        }
        return arr;
    };
    Json out;
    out["n"] = report.n;
    out["pattern"] = report.pattern_canonical.hex();
    out["p_E"] = report.p_expectation;
    out["p_tilde_E"] = report.p_modified;
    out["log_p_E"] = report.log_p_expectation;
    out["log_p_tilde_E"] = report.log_p_modified;
    out["witnesses"] = witnesses(report.witnesses_modified);
    out["witnesses_E"] = witnesses(report.witnesses_expectation);
    return out;
}

Json certificate_json(const SpreadCertificate& cert) {
    Json out;
    out["n"] = cert.n;
    out["pattern"] = cert.pattern_canonical.hex();
    out["r_claimed"] = cert.r_claimed;
    out["r_star"] = cert.r_star;
    out["pass"] = cert.pass;
    Json worst = Json::array();
    for (const auto& w : cert.worst_classes) {
        Json item;
        item["canonical_key"] = w.canonical.hex();
        item["log_ratio_over_e"] = w.log_ratio_over_e;
        worst.push_back(std::move(item));
    }
    out["worst_classes"] = std::move(worst);
    return out;
}

Json estimate_json(const PcEstimate& est) {
    Json out;
    out["n"] = est.n;
    out["pattern"] = est.pattern_canonical.hex();
    out["method"] = std::string(to_string(est.method));
    out["p_hat"] = est.p_hat;
    out["ci"] = Json::array({est.ci_low, est.ci_high});
    Json trace = Json::array();
    for (const ProbeRecord& r : est.probes) {
        Json item;
        item["p"] = r.p;
        item["successes"] = r.successes;
        item["samples"] = r.samples;
        trace.push_back(std::move(item));
    }
    out["trace"] = std::move(trace);
    out["seed"] = est.seed;
    if (est.method == PcMethod::monte_carlo) {
        out["oracle"] = std::string(to_string(est.oracle));
        out["low_confidence"] = est.low_confidence;
    }
    return out;
}

Json family_thresholds_json(const FamilyThresholds& t) {
    Json out;
    out["kind"] = std::string(to_string(t.spec.kind));
    out["size"] = t.spec.size;
    out["n"] = t.n;
    out["edges"] = t.edge_count;
    out["p_E"] = t.p_expectation;
    out["p_tilde_E"] = t.p_modified;
    out["log_p_E"] = t.log_p_expectation;
    out["log_p_tilde_E"] = t.log_p_modified;
    out["witness_E"] = t.witness_expectation;
    out["witness_tilde_E"] = t.witness_modified;
    return out;
}

Json scaling_json(std::span<const ScalingRow> rows) {
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    Json out = Json::array();
    for (const ScalingRow& r : rows) {
        Json item;
        item["n"] = r.n;
        item["edges"] = r.edges;
        item["p_E"] = opt(r.p_expectation);
        item["p_tilde_E"] = opt(r.p_modified);
        item["n_p_tilde_E"] = opt(r.n_p_modified);
        item["p_c_hat"] = r.pc ? estimate_json(*r.pc) : Json(nullptr);
        item["p_c_hat_n_over_ln_n"] = opt(r.pc_n_over_log_n);
        item["p_c_hat_over_p_tilde_E_ln_e"] = opt(r.pc_over_modified_log_e);
        if (!r.note.empty()) item["note"] = r.note;
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace subthresh
