#include "nefcert/nefcert.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "certificate.hpp"
#include "json_io.hpp"

using namespace nefcert;

struct nefcert_divisor {
    SymmetricDivisor value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

/* Exceptions cross the C boundary as status codes. */
template <typename Fn>
nefcert_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return NEFCERT_INPUT_ERROR;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return NEFCERT_INPUT_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NEFCERT_INTERNAL_ERROR;
    }
}

}  // namespace

extern "C" {

nefcert_status nefcert_divisor_parse(const char* json, size_t len, nefcert_divisor** out) {
    if (!json || !out) {
        g_last_error = "null argument";
        return NEFCERT_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        *out = new nefcert_divisor{parse_divisor(std::string(json, len))};
        return NEFCERT_OK;
    });
}

void nefcert_divisor_free(nefcert_divisor* divisor) {
    delete divisor;
}

int nefcert_divisor_n(const nefcert_divisor* divisor) {
    return divisor ? divisor->value.n() : 0;
}

nefcert_status nefcert_divisor_emit(const nefcert_divisor* divisor, char** json_out) {
    if (!divisor || !json_out) {
        g_last_error = "null argument";
        return NEFCERT_INPUT_ERROR;
    }
    return guarded([&] {
        set_out(json_out, emit_divisor(divisor->value));
        return NEFCERT_OK;
    });
}

nefcert_status nefcert_check_fnef(const nefcert_divisor* divisor, char** report_out) {
    if (!divisor) {
        g_last_error = "null divisor";
        return NEFCERT_INPUT_ERROR;
    }
    return guarded([&] {
        FnefResult result = is_fnef(divisor->value);
        set_out(report_out, emit_fnef_report(divisor->value.n(), result));
        return result.fnef ? NEFCERT_OK : NEFCERT_MATH_FAIL;
    });
}

nefcert_status nefcert_certify(const nefcert_divisor* divisor, const char* mode,
                               int exhaustive, char** document_out) {
    if (!divisor || !mode) {
        g_last_error = "null argument";
        return NEFCERT_INPUT_ERROR;
    }
    CertifyMode m;
    if (std::strcmp(mode, "strict") == 0)
        m = CertifyMode::StrictOnly;
    else if (std::strcmp(mode, "all") == 0)
        m = CertifyMode::AllPartitions;
    else {
        g_last_error = "mode must be 'strict' or 'all'";
        return NEFCERT_INPUT_ERROR;
    }
    return guarded([&] {
        CertifyOutcome outcome = certify(divisor->value, m, exhaustive != 0);
        if (outcome.certificate) {
            set_out(document_out, emit_certificate(*outcome.certificate));
            return NEFCERT_OK;
        }
        set_out(document_out, emit_certify_failures(outcome.failures));
        return NEFCERT_MATH_FAIL;
    });
}

nefcert_status nefcert_verify(const char* cert_json, size_t len, char** report_out) {
    if (!cert_json) {
        g_last_error = "null certificate";
        return NEFCERT_INPUT_ERROR;
    }
    return guarded([&] {
        NefCertificate cert = parse_certificate(std::string(cert_json, len));
        VerifyOutcome outcome = verify(cert);
        set_out(report_out, emit_verify_report(outcome));
        return outcome.ok ? NEFCERT_OK : NEFCERT_MATH_FAIL;
    });
}

nefcert_status nefcert_rays(int n, char** json_out) {
    return guarded([&] {
        set_out(json_out, emit_rays(extremal_rays(n)));
        return NEFCERT_OK;
    });
}

nefcert_status nefcert_pullback(const nefcert_divisor* divisor, const int* lambda,
                                size_t lambda_len, char** json_out) {
    if (!divisor || !lambda || lambda_len == 0) {
        g_last_error = "null argument";
        return NEFCERT_INPUT_ERROR;
    }
    return guarded([&] {
        std::vector<int> parts(lambda, lambda + lambda_len);
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1]) {
                g_last_error = "lambda must be weakly decreasing";
                return NEFCERT_INPUT_ERROR;
            }
        Partition p(parts);
        if (p.n() != divisor->value.n()) {
            g_last_error = "lambda must be a partition of n = " +
                           std::to_string(divisor->value.n());
            return NEFCERT_INPUT_ERROR;
        }
        set_out(json_out, emit_pullback(f_from_symmetric(divisor->value), p));
        return NEFCERT_OK;
    });
}

nefcert_status nefcert_bound(int k, char** json_out) {
    return guarded([&] {
        set_out(json_out, emit_bound(k));
        return NEFCERT_OK;
    });
}

int nefcert_max_strict_length(long long n) {
    if (n < 1) return -1;
    return max_strict_length(n);
}

const char* nefcert_last_error(void) {
    return g_last_error.c_str();
}

const char* nefcert_version(void) {
    return kToolVersion;
}

void nefcert_string_free(char* s) {
    std::free(s);
}

}  // extern "C"
