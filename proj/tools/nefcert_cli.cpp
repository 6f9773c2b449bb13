// nefcert — certify nefness of symmetric divisors on the moduli space of
// stable n-pointed rational curves, via exact effective-boundary
// certificates for every stratum pullback.
//
// Subcommands: check-fnef, certify, verify, rays, pullback, bound.
// Exit codes: 0 ok, 1 mathematical failure (JSON report on stdout),
// 2 input error, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nefcert/nefcert.h"

namespace {

using nlohmann::json;

int exit_code(nefcert_status status) {
    switch (status) {
        case NEFCERT_OK: return 0;
        case NEFCERT_MATH_FAIL: return 1;
        case NEFCERT_INPUT_ERROR: return 2;
        case NEFCERT_INTERNAL_ERROR: return 3;
    }
    return 3;
}

[[noreturn]] void input_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) input_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) input_error("cannot write '" + path + "'");
    out << bytes;
    if (!out.flush()) input_error("cannot write '" + path + "'");
}

struct CString {
    char* ptr = nullptr;
    ~CString() { nefcert_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct Divisor {
    nefcert_divisor* ptr = nullptr;
    ~Divisor() { nefcert_divisor_free(ptr); }
};

Divisor load_divisor(const std::string& path) {
    std::string bytes = read_file(path);
    Divisor d;
    if (nefcert_divisor_parse(bytes.c_str(), bytes.size(), &d.ptr) != NEFCERT_OK)
        input_error(nefcert_last_error());
    return d;
}

std::string quad_text(const json& q) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i].get<long long>();
    os << '}';
    return os.str();
}

std::string partition_text(const json& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get<long long>();
    os << ')';
    return os.str();
}

void print_fnef_text(const json& r) {
    if (r["fnef"].get<bool>())
        std::cout << "F-nef: yes (n = " << r["n"] << ")\n";
    else
        std::cout << "F-nef: no — F-curve " << quad_text(r["witness"]) << " pairs to "
                  << r["value"].get<std::string>() << "\n";
}

void print_failures_text(const json& r) {
    std::cout << "certification failed:\n";
    for (const json& f : r["failures"]) {
        if (f["stage"] == "fnef")
            std::cout << "  not F-nef: F-curve " << quad_text(f["witness"]) << " pairs to "
                      << f["value"].get<std::string>() << "\n";
        else
            std::cout << "  strict base " << partition_text(f["base"]) << " infeasible for "
                      << partition_text(f["partition"]) << "\n";
    }
}

void print_certificate_text(const json& c) {
    std::size_t feasibility = 0, ascent = 0, degenerate = 0;
    for (const json& e : c["entries"]) {
        std::string p = e["provenance"].get<std::string>();
        if (p == "feasibility")
            ++feasibility;
        else if (p == "ascent-chain")
            ++ascent;
        else
            ++degenerate;
    }
    std::cout << "certified nef: n = " << c["divisor"]["n"] << ", mode = "
              << c["mode"].get<std::string>() << ", entries = " << c["entries"].size()
              << " (feasibility " << feasibility << ", ascent-chain " << ascent
              << ", degenerate " << degenerate << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nefness certificates for symmetric divisors on \\bar{M}_{0,n}"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string divisor_path, cert_path, out_path, mode = "all", lambda_str;
    bool exhaustive = false;
    int n = 0, k = 0;

    auto* fnef = app.add_subcommand("check-fnef", "check all F-inequalities");
    fnef->add_option("divisor", divisor_path, "divisor JSON file")->required();

    auto* certify = app.add_subcommand("certify", "produce a nefness certificate");
    certify->add_option("divisor", divisor_path, "divisor JSON file")->required();
    certify->add_option("--mode", mode, "strict or all")
        ->check(CLI::IsMember({"strict", "all"}));
    certify->add_option("-o,--output", out_path, "write the certificate here");
    certify->add_flag("--exhaustive", exhaustive, "list every failure, not just the first");

    auto* verify = app.add_subcommand("verify", "audit a certificate independently");
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    auto* rays = app.add_subcommand("rays", "extremal rays of the symmetric F-nef cone");
    rays->add_option("--n", n, "marker count")->required();
    rays->add_option("-o,--output", out_path, "write rays JSON here");

    auto* pullback = app.add_subcommand("pullback", "stratum pullback b-map");
    pullback->add_option("divisor", divisor_path, "divisor JSON file")->required();
    pullback->add_option("--lambda", lambda_str, "partition, e.g. 4,3,2,1")->required();

    auto* bound = app.add_subcommand("bound", "largest n covered by strict length k");
    bound->add_option("--k", k, "strict-partition length")->required();

    CLI11_PARSE(app, argc, argv);
    const bool text = format == "text";

    if (fnef->parsed()) {
        Divisor d = load_divisor(divisor_path);
        CString report;
        nefcert_status st = nefcert_check_fnef(d.ptr, &report.ptr);
        if (st != NEFCERT_OK && st != NEFCERT_MATH_FAIL) input_error(nefcert_last_error());
        if (text)
            print_fnef_text(json::parse(report.str()));
        else
            std::cout << report.str() << "\n";
        return exit_code(st);
    }

    if (certify->parsed()) {
        Divisor d = load_divisor(divisor_path);
        CString doc;
        nefcert_status st = nefcert_certify(d.ptr, mode.c_str(), exhaustive ? 1 : 0, &doc.ptr);
        if (st != NEFCERT_OK && st != NEFCERT_MATH_FAIL) input_error(nefcert_last_error());
        if (st == NEFCERT_MATH_FAIL) {
            if (text)
                print_failures_text(json::parse(doc.str()));
            else
                std::cout << doc.str() << "\n";
            return 1;
        }
        if (!out_path.empty()) write_file(out_path, doc.str());
        if (text)
            print_certificate_text(json::parse(doc.str()));
        else if (out_path.empty())
            std::cout << doc.str() << "\n";
        return 0;
    }

    if (verify->parsed()) {
        std::string bytes = read_file(cert_path);
        CString report;
        nefcert_status st = nefcert_verify(bytes.c_str(), bytes.size(), &report.ptr);
        if (st != NEFCERT_OK && st != NEFCERT_MATH_FAIL) input_error(nefcert_last_error());
        if (text) {
            json r = json::parse(report.str());
            if (r["status"] == "ok")
                std::cout << "ok: " << r["entries"] << " entries verified\n";
            else
                std::cout << "discrepancy: " << r["detail"].get<std::string>() << "\n";
        } else {
            std::cout << report.str() << "\n";
        }
        return exit_code(st);
    }

    if (rays->parsed()) {
        CString doc;
        if (nefcert_rays(n, &doc.ptr) != NEFCERT_OK) input_error(nefcert_last_error());
        if (!out_path.empty()) write_file(out_path, doc.str());
        if (text) {
            json r = json::parse(doc.str());
            std::cout << "n = " << r["n"] << ": " << r["facets"].size() << " facets, "
                      << r["rays"].size() << " extremal rays\n";
            for (const json& ray : r["rays"]) {
                std::cout << "  ray:";
                for (const json& x : ray) std::cout << ' ' << x.get<long long>();
                std::cout << "\n";
            }
        } else if (out_path.empty()) {
            std::cout << doc.str() << "\n";
        }
        return 0;
    }

    if (pullback->parsed()) {
        Divisor d = load_divisor(divisor_path);
        std::vector<int> parts;
        std::istringstream ss(lambda_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                parts.push_back(std::stoi(tok));
            } catch (...) {
                input_error("bad --lambda entry '" + tok + "'");
            }
        }
        CString doc;
        if (nefcert_pullback(d.ptr, parts.data(), parts.size(), &doc.ptr) != NEFCERT_OK)
            input_error(nefcert_last_error());
        if (text) {
            json r = json::parse(doc.str());
            if (r.contains("degenerate"))
                std::cout << "degenerate stratum (m = " << r["m"]
                          << "): no moduli, trivially effective\n";
            else
                for (const auto& [side, value] : r["b"].items())
                    std::cout << "  {" << side << "} -> " << value.get<std::string>() << "\n";
        } else {
            std::cout << doc.str() << "\n";
        }
        return 0;
    }

    // bound
    CString doc;
    if (nefcert_bound(k, &doc.ptr) != NEFCERT_OK) input_error(nefcert_last_error());
    if (text) {
        json r = json::parse(doc.str());
        std::cout << "strict partitions of length > " << r["k"] << " require n > "
                  << r["bound"] << "\n";
    } else {
        std::cout << doc.str() << "\n";
    }
    return 0;
}
