#include <doctest.h>

#include <random>
#include <set>

#include "certificate.hpp"
#include "json_io.hpp"

using namespace nefcert;

namespace {

SymmetricDivisor make_divisor(int n, std::vector<long> coeffs) {
    std::vector<Rat> c(std::max(static_cast<size_t>(n / 2) + 1, coeffs.size() + 2), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i + 2] = Rat(coeffs[i]);
    return SymmetricDivisor(n, std::move(c));
}

}  // namespace

TEST_CASE("strict-only certification at n=6") {
    auto outcome = certify(make_divisor(6, {1, 3}), CertifyMode::StrictOnly);
    REQUIRE(outcome.certificate);
    const auto& cert = *outcome.certificate;
    REQUIRE(cert.entries.size() == 4);  // (6),(5,1),(4,2),(3,2,1)
    CHECK(cert.entries[0].provenance == Provenance::Degenerate);
    CHECK(cert.entries[1].provenance == Provenance::Degenerate);
    CHECK(cert.entries[2].provenance == Provenance::Degenerate);
    CHECK(cert.entries[3].provenance == Provenance::Feasibility);
    CHECK(cert.entries[3].lambda.parts() == std::vector<int>{3, 2, 1});
    CHECK(verify(cert).ok);
}

TEST_CASE("certification failure carries the first witness quad") {
    auto outcome = certify(make_divisor(6, {1, 4}), CertifyMode::AllPartitions);
    CHECK_FALSE(outcome.certificate);
    REQUIRE(outcome.failures.size() == 1);
    CHECK(outcome.failures[0].stage == CertifyFailure::Stage::Fnef);
    CHECK(*outcome.failures[0].witness == FQuad{{3, 1, 1, 1}});
    CHECK(*outcome.failures[0].value == -1);

    auto strict_outcome = certify(make_divisor(6, {1, 4}), CertifyMode::StrictOnly);
    CHECK_FALSE(strict_outcome.certificate);
}

TEST_CASE("zero divisor certifies with all-zero weights") {
    auto outcome = certify(SymmetricDivisor::zero(7), CertifyMode::AllPartitions);
    REQUIRE(outcome.certificate);
    for (const auto& e : outcome.certificate->entries)
        if (e.w) CHECK(*e.w == PairWeights(e.lambda.length()));
    CHECK(verify(*outcome.certificate).ok);
}

TEST_CASE("coverage and provenance split by mode") {
    auto L = make_divisor(8, {1, 2, 2});
    REQUIRE(is_fnef(L).fnef);

    auto strict = certify(L, CertifyMode::StrictOnly);
    REQUIRE(strict.certificate);
    CHECK(strict.certificate->entries.size() ==
          partitions_of(8, PartitionFilter::Strict).size());
    for (const auto& e : strict.certificate->entries) {
        CHECK(e.lambda.is_strict());
        CHECK(e.provenance != Provenance::AscentChain);  // strict-only never ascends
        if (e.lambda.length() >= 3) CHECK(e.provenance == Provenance::Feasibility);
    }

    auto all = certify(L, CertifyMode::AllPartitions);
    REQUIRE(all.certificate);
    CHECK(all.certificate->entries.size() == partitions_of(8).size());
    for (const auto& e : all.certificate->entries) {
        if (e.lambda.length() <= 2)
            CHECK(e.provenance == Provenance::Degenerate);
        else if (e.lambda.is_strict())
            CHECK(e.provenance == Provenance::Feasibility);
        else
            CHECK(e.provenance == Provenance::AscentChain);
    }
    CHECK(verify(*all.certificate).ok);
}

TEST_CASE("entries are canonical and memoized chains match certify_partition") {
    auto L = sample_fnef(9, 2024);
    REQUIRE(is_fnef(L).fnef);
    auto f = f_from_symmetric(L);
    auto outcome = certify(L, CertifyMode::AllPartitions);
    REQUIRE(outcome.certificate);
    auto expected = partitions_of(9);
    REQUIRE(outcome.certificate->entries.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& entry = outcome.certificate->entries[i];
        CHECK(entry.lambda == expected[i]);
        auto reference = certify_partition(f, entry.lambda);
        CHECK(entry.provenance == reference.provenance);
        CHECK(bool(entry.w) == bool(reference.w));
        if (entry.w) CHECK(*entry.w == *reference.w);
    }
}

TEST_CASE("verify rejects tampered certificates naming the partition") {
    auto L = make_divisor(6, {1, 3});
    auto outcome = certify(L, CertifyMode::AllPartitions);
    REQUIRE(outcome.certificate);

    SUBCASE("perturbed weight on a feasibility entry") {
        auto cert = *outcome.certificate;
        for (auto& e : cert.entries)
            if (e.provenance == Provenance::Feasibility) {
                e.w->at(0, 1) += 1;
                auto v = verify(cert);
                CHECK_FALSE(v.ok);
                REQUIRE(v.partition);
                CHECK(*v.partition == e.lambda);
                break;
            }
    }

    SUBCASE("perturbed weight on an ascent entry") {
        auto cert = *outcome.certificate;
        for (auto& e : cert.entries)
            if (e.provenance == Provenance::AscentChain) {
                e.w->at(0, 1) += 1;
                auto v = verify(cert);
                CHECK_FALSE(v.ok);
                REQUIRE(v.partition);
                CHECK(*v.partition == e.lambda);
                break;
            }
    }

    SUBCASE("deleted strict entry breaks coverage") {
        auto strict_cert = *certify(L, CertifyMode::StrictOnly).certificate;
        strict_cert.entries.erase(strict_cert.entries.begin() + 3);  // (3,2,1)
        auto v = verify(strict_cert);
        CHECK_FALSE(v.ok);
        CHECK(v.detail.find("coverage") != std::string::npos);
    }

    SUBCASE("wrong provenance is rejected") {
        auto cert = *outcome.certificate;
        for (auto& e : cert.entries)
            if (e.provenance == Provenance::AscentChain) {
                e.provenance = Provenance::Feasibility;
                e.path.clear();
                auto v = verify(cert);
                CHECK_FALSE(v.ok);
                break;
            }
    }

    SUBCASE("non-F-nef divisor is rejected up front") {
        auto cert = *outcome.certificate;
        cert.divisor = make_divisor(6, {1, 4});
        auto v = verify(cert);
        CHECK_FALSE(v.ok);
        CHECK(v.detail.find("F-nef") != std::string::npos);
    }
}

TEST_CASE("scaling the divisor scales every weight and keeps verdicts") {
    auto L = sample_fnef(10, 77);
    REQUIRE(is_fnef(L).fnef);
    Rat scale(7, 3);
    std::vector<Rat> scaled(static_cast<size_t>(10 / 2) + 1, Rat(0));
    for (int i = 2; i <= 5; ++i) scaled[static_cast<size_t>(i)] = scale * L.c(i);
    auto Ls = SymmetricDivisor(10, scaled);

    auto a = certify(L, CertifyMode::AllPartitions);
    auto b = certify(Ls, CertifyMode::AllPartitions);
    REQUIRE(a.certificate);
    REQUIRE(b.certificate);
    REQUIRE(a.certificate->entries.size() == b.certificate->entries.size());
    for (std::size_t i = 0; i < a.certificate->entries.size(); ++i) {
        const auto& ea = a.certificate->entries[i];
        const auto& eb = b.certificate->entries[i];
        CHECK(ea.provenance == eb.provenance);
        if (!ea.w) continue;
        for (int x = 0; x < ea.w->m(); ++x)
            for (int y = x + 1; y < ea.w->m(); ++y)
                CHECK(eb.w->at(x, y) == scale * ea.w->at(x, y));
    }

    CHECK_FALSE(certify(make_divisor(6, {1, 4}), CertifyMode::AllPartitions).certificate);
    CHECK_FALSE(certify(make_divisor(6, {2, 8}), CertifyMode::AllPartitions).certificate);
}

TEST_CASE("extremal rays certify end to end at small n") {
    std::mt19937_64 rng(71);
    for (int n : {6, 8, 10, 12}) {
        auto cone = extremal_rays(n);
        for (const auto& ray : cone.rays) {
            auto L = divisor_from_coordinates(n, ray);
            auto outcome = certify(L, CertifyMode::AllPartitions);
            REQUIRE(outcome.certificate);
            auto v = verify(*outcome.certificate);
            CHECK(v.ok);
            CHECK(v.entries_checked == partitions_of(n).size());
        }
        for (int trial = 0; trial < 3; ++trial) {
            auto L = sample_fnef(cone, rng());
            auto outcome = certify(L, CertifyMode::AllPartitions);
            REQUIRE(outcome.certificate);
            CHECK(verify(*outcome.certificate).ok);
        }
    }
}

TEST_CASE("exhaustive F-nef failure listing") {
    auto outcome = certify(make_divisor(8, {-1, 0, 2}), CertifyMode::AllPartitions, true);
    CHECK_FALSE(outcome.certificate);
    CHECK(outcome.failures.size() >= 2);
    std::set<std::array<int, 4>> witnessed;
    for (const auto& f : outcome.failures) {
        CHECK(f.stage == CertifyFailure::Stage::Fnef);
        witnessed.insert(f.witness->q);
    }
    CHECK(witnessed.size() == outcome.failures.size());

    auto fail_fast = certify(make_divisor(8, {-1, 0, 2}), CertifyMode::AllPartitions, false);
    REQUIRE(fail_fast.failures.size() == 1);
    CHECK(fail_fast.failures[0].witness == outcome.failures[0].witness);
}
