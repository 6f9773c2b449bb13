#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nefcert {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
    std::string_view num = s;
    std::string_view den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    bool ok = all_digits(mag) && (den.empty() ? s.find('/') == std::string_view::npos
                                              : all_digits(den) && den != "0");
    // forbid "-0..." style noise like "-" and leading '+'
    if (!ok)
        throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    Rat r(std::string(s), 10);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

Rat half_power(unsigned long e) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, e);
    return Rat(Int(1), d);
}

}  // namespace nefcert
