#include "json_io.hpp"

#include <json.hpp>

#include "pullback.hpp"

namespace nefcert {

using nlohmann::json;

namespace {

json parse_json(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

void require_keys(const json& obj, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) throw ParseError(std::string(what) + ": expected an object");
    for (const char* key : required)
        if (!obj.contains(key))
            throw ParseError(std::string(what) + ": missing field '" + key + "'");
    for (const auto& [key, value] : obj.items()) {
        auto in = [&](std::initializer_list<const char*> set) {
            for (const char* k : set)
                if (key == k) return true;
            return false;
        };
        if (!in(required) && !in(optional))
            throw ParseError(std::string(what) + ": unknown field '" + key + "'");
    }
}

long long get_int(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return v.get<long long>();
}

std::string get_string(const json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string(what) + ": expected a string");
    return v.get<std::string>();
}

Rat get_rational(const json& v, const char* what) {
    try {
        return rat_from_string(get_string(v, what));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

void check_schema(const json& v) {
    if (get_int(v, "schema") != 1)
        throw ParseError("unsupported schema version " + v.dump());
}

Partition parse_partition_array(const json& v, const char* what) {
    if (!v.is_array() || v.empty())
        throw ParseError(std::string(what) + ": expected a nonempty array of parts");
    std::vector<int> parts;
    long long prev = -1;
    for (const auto& x : v) {
        long long p = get_int(x, what);
        if (p < 1 || p > 1'000'000)
            throw ParseError(std::string(what) + ": part out of range");
        if (prev >= 0 && p > prev)
            throw ParseError(std::string(what) + ": parts must be weakly decreasing");
        prev = p;
        parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

json partition_to_json(const Partition& p) {
    return json(p.parts());
}

json divisor_to_json(const SymmetricDivisor& L) {
    json coeffs = json::object();
    for (int i = 2; i <= L.n() / 2; ++i)
        if (L.c(i) != 0) coeffs[std::to_string(i)] = rat_to_string(L.c(i));
    return json{{"schema", 1}, {"n", L.n()}, {"coeffs", std::move(coeffs)}};
}

SymmetricDivisor divisor_from_json(const json& j) {
    require_keys(j, "divisor", {"n", "coeffs"}, {"schema"});
    if (j.contains("schema")) check_schema(j["schema"]);
    long long n = get_int(j["n"], "divisor.n");
    if (n < 4) throw ParseError("divisor.n must be >= 4, got " + std::to_string(n));
    if (n > 400) throw ParseError("divisor.n too large (limit 400)");
    const json& coeffs = j["coeffs"];
    if (!coeffs.is_object()) throw ParseError("divisor.coeffs: expected an object");
    std::vector<Rat> c(static_cast<size_t>(n / 2) + 1, Rat(0));
    for (const auto& [key, value] : coeffs.items()) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("divisor.coeffs: bad key '" + key + "'");
        long long i = std::stoll(key);
        if (i < 2 || i > n / 2)
            throw ParseError("divisor.coeffs: key " + key + " out of range (floor(" +
                             std::to_string(n) + "/2) = " + std::to_string(n / 2) + ")");
        c[static_cast<size_t>(i)] = get_rational(value, "divisor coefficient");
    }
    return SymmetricDivisor(static_cast<int>(n), std::move(c));
}

json weights_to_json(const WeightCertificate& w) {
    json list = json::array();
    for (int i = 0; i < w.m(); ++i)
        for (int j = i + 1; j < w.m(); ++j)
            list.push_back(json{{"pair", {i + 1, j + 1}}, {"value", rat_to_string(w.at(i, j))}});
    return json{{"m", w.m()}, {"w", std::move(list)}};
}

WeightCertificate weights_from_json(const json& j) {
    require_keys(j, "certificate", {"m", "w"});
    long long m = get_int(j["m"], "certificate.m");
    if (m < 1 || m > 64) throw ParseError("certificate.m out of range");
    WeightCertificate w(static_cast<int>(m));
    const json& list = j["w"];
    if (!list.is_array() || list.size() != w.pair_count())
        throw ParseError("certificate.w must list all " + std::to_string(w.pair_count()) +
                         " pairs");
    std::size_t idx = 0;
    for (int i = 1; i < m; ++i)
        for (int j2 = i + 1; j2 <= m; ++j2) {
            const json& item = list[idx++];
            require_keys(item, "certificate.w entry", {"pair", "value"});
            const json& pair = item["pair"];
            if (!pair.is_array() || pair.size() != 2 ||
                get_int(pair[0], "pair") != i || get_int(pair[1], "pair") != j2)
                throw ParseError("certificate.w pairs must be [i,j] with i<j in "
                                 "lexicographic order");
            w.at(i - 1, static_cast<int>(j2 - 1)) = get_rational(item["value"], "weight");
        }
    return w;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Feasibility: return "feasibility";
        case Provenance::AscentChain: return "ascent-chain";
        case Provenance::Degenerate: return "degenerate";
    }
    return "";
}

json quad_to_json(const FQuad& q) {
    return json{q.q[0], q.q[1], q.q[2], q.q[3]};
}

}  // namespace

SymmetricDivisor parse_divisor(const std::string& bytes) {
    return divisor_from_json(parse_json(bytes));
}

std::string emit_divisor(const SymmetricDivisor& L) {
    return divisor_to_json(L).dump();
}

std::string emit_certificate(const NefCertificate& cert) {
    json entries = json::array();
    for (const PartitionCertificate& e : cert.entries) {
        json entry{{"partition", partition_to_json(e.lambda)},
                   {"provenance", provenance_name(e.provenance)}};
        entry["certificate"] = e.w ? weights_to_json(*e.w) : json("degenerate");
        if (e.provenance == Provenance::AscentChain) {
            json path = json::array();
            for (const ReductionStep& s : e.path)
                path.push_back(json{{"partition", partition_to_json(s.from)},
                                    {"merged", s.merged_value}});
            entry["path"] = std::move(path);
        }
        entries.push_back(std::move(entry));
    }
    json j{{"schema", 1},
           {"mode", cert.mode == CertifyMode::StrictOnly ? "strict-only" : "all-partitions"},
           {"divisor", divisor_to_json(cert.divisor)},
           {"policy", {{"reduction", kReductionPolicy}, {"enumeration", kEnumerationPolicy}}},
           {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
           {"entries", std::move(entries)}};
    return j.dump();
}

NefCertificate parse_certificate(const std::string& bytes) {
    json j = parse_json(bytes);
    require_keys(j, "certificate file",
                 {"schema", "mode", "divisor", "policy", "tool", "entries"});
    check_schema(j["schema"]);

    const json& policy = j["policy"];
    require_keys(policy, "policy", {"reduction", "enumeration"});
    if (get_string(policy["reduction"], "policy.reduction") != kReductionPolicy ||
        get_string(policy["enumeration"], "policy.enumeration") != kEnumerationPolicy)
        throw ParseError("unknown deterministic-policy identifiers");

    const json& tool = j["tool"];
    require_keys(tool, "tool", {"name", "version"});
    get_string(tool["name"], "tool.name");
    get_string(tool["version"], "tool.version");

    std::string mode = get_string(j["mode"], "mode");
    if (mode != "strict-only" && mode != "all-partitions")
        throw ParseError("mode must be 'strict-only' or 'all-partitions'");

    NefCertificate cert{divisor_from_json(j["divisor"]),
                        mode == "strict-only" ? CertifyMode::StrictOnly
                                              : CertifyMode::AllPartitions,
                        {}};

    const json& entries = j["entries"];
    if (!entries.is_array()) throw ParseError("entries: expected an array");
    for (const json& e : entries) {
        require_keys(e, "entry", {"partition", "provenance", "certificate"}, {"path"});
        Partition lambda = parse_partition_array(e["partition"], "entry.partition");
        std::string prov = get_string(e["provenance"], "entry.provenance");
        PartitionCertificate pc{lambda, Provenance::Degenerate, std::nullopt, {}};
        if (prov == "degenerate") {
            if (!e["certificate"].is_string() || e["certificate"] != "degenerate")
                throw ParseError("degenerate entry must carry the 'degenerate' marker");
            if (e.contains("path")) throw ParseError("degenerate entry cannot carry a path");
        } else if (prov == "feasibility" || prov == "ascent-chain") {
            pc.provenance =
                prov == "feasibility" ? Provenance::Feasibility : Provenance::AscentChain;
            pc.w = weights_from_json(e["certificate"]);
            if (prov == "ascent-chain") {
                if (!e.contains("path"))
                    throw ParseError("ascent-chain entry must carry its merge path");
                const json& path = e["path"];
                if (!path.is_array() || path.empty())
                    throw ParseError("entry.path: expected a nonempty array");
                for (const json& s : path) {
                    require_keys(s, "path step", {"partition", "merged"});
                    long long merged = get_int(s["merged"], "path.merged");
                    if (merged < 1 || merged > 1'000'000)
                        throw ParseError("path.merged out of range");
                    pc.path.push_back({parse_partition_array(s["partition"], "path.partition"),
                                       static_cast<int>(merged)});
                }
            } else if (e.contains("path")) {
                throw ParseError("feasibility entry cannot carry a path");
            }
        } else {
            throw ParseError("unknown provenance '" + prov + "'");
        }
        cert.entries.push_back(std::move(pc));
    }
    return cert;
}

std::string emit_fnef_report(int n, const FnefResult& result) {
    json j{{"n", n}, {"fnef", result.fnef}};
    if (!result.fnef) {
        j["witness"] = quad_to_json(*result.witness);
        j["value"] = rat_to_string(*result.value);
    }
    return j.dump();
}

std::string emit_certify_failures(const std::vector<CertifyFailure>& failures) {
    json list = json::array();
    for (const CertifyFailure& f : failures) {
        if (f.stage == CertifyFailure::Stage::Fnef)
            list.push_back(json{{"stage", "fnef"},
                                {"witness", quad_to_json(*f.witness)},
                                {"value", rat_to_string(*f.value)}});
        else
            list.push_back(json{{"stage", "strict-base"},
                                {"partition", partition_to_json(*f.lambda)},
                                {"base", partition_to_json(*f.base)}});
    }
    return json{{"status", "failure"}, {"failures", std::move(list)}}.dump();
}

std::string emit_verify_report(const VerifyOutcome& outcome) {
    if (outcome.ok)
        return json{{"status", "ok"}, {"entries", outcome.entries_checked}}.dump();
    json j{{"status", "discrepancy"}, {"detail", outcome.detail}};
    if (outcome.partition) j["partition"] = partition_to_json(*outcome.partition);
    return j.dump();
}

namespace {

long long int_checked(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for JSON output");
    return x.get_si();
}

}  // namespace

std::string emit_rays(const ConeDescription& cone) {
    json facets = json::array();
    for (const FacetForm& f : cone.facets) {
        json row = json::array();
        for (const Int& x : f.coeffs) row.push_back(int_checked(x));
        facets.push_back(std::move(row));
    }
    json rays = json::array();
    for (const auto& r : cone.rays) {
        json row = json::array();
        for (const Int& x : r) row.push_back(int_checked(x));
        rays.push_back(std::move(row));
    }
    return json{{"n", cone.n}, {"facets", std::move(facets)}, {"rays", std::move(rays)}}.dump();
}

std::string emit_pullback(const FFunction& f, const Partition& lambda) {
    if (degenerate_stratum(lambda))
        return json{{"degenerate", true}, {"m", lambda.length()}}.dump();
    BoundaryExpression e = pullback(f, lambda);
    json b = json::object();
    for (std::size_t t = 0; t < e.size(); ++t) {
        TwoPartSplit split{e.m(), split_mask_from_index(t)};
        b[split.to_string()] = rat_to_string(e.at_index(t));
    }
    return json{{"m", e.m()}, {"b", std::move(b)}}.dump();
}

std::string emit_bound(int k) {
    return json{{"k", k}, {"bound", conjecture_bound(k)}}.dump();
}

}  // namespace nefcert
