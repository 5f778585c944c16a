#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptgauss/mc.hpp"
#include "ptgauss/prospect.hpp"

using namespace ptgauss;

namespace {
const ValueFunction kSq = ValueFunction::squared_error();
const SourceModel kUnitSrc(1.0);
const ChannelModel kUnitCh(1.0);

struct SampleStats {
    double mean_s, mean_r, var_s, var_r, cov;
};

SampleStats stats_of(const std::vector<std::pair<double, double>>& draws) {
    const double n = static_cast<double>(draws.size());
    SampleStats st{0, 0, 0, 0, 0};
    for (const auto& [s, r] : draws) {
        st.mean_s += s;
        st.mean_r += r;
    }
    st.mean_s /= n;
    st.mean_r /= n;
    for (const auto& [s, r] : draws) {
        st.var_s += (s - st.mean_s) * (s - st.mean_s);
        st.var_r += (r - st.mean_r) * (r - st.mean_r);
        st.cov += (s - st.mean_s) * (r - st.mean_r);
    }
    st.var_s /= n - 1.0;
    st.var_r /= n - 1.0;
    st.cov /= n - 1.0;
    return st;
}
}

TEST_CASE("McConfig rejects sample counts too small for a standard error") {
    CHECK_THROWS_AS(McConfig(999, 1), std::domain_error);
    CHECK_THROWS_AS(McConfig(0, 1), std::domain_error);
    CHECK(McConfig(1000, 1).samples == 1000);
}

TEST_CASE("estimators are bit-deterministic given the seed") {
    const LinearEncoder enc{0.5, 1.0};
    const LinearDecoder dec{0.4, -0.2};
    const AgentProfile agent(0.5, kSq);
    const McConfig cfg(50000, 1234);

    const McEstimate a = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, cfg);
    const McEstimate b = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, cfg);
    CHECK(a.value == b.value);
    CHECK(a.std_err == b.std_err);
    CHECK(a.samples == 50000);

    const McEstimate ia = mc_distortion_importance(kUnitSrc, kUnitCh, enc, dec, agent, cfg);
    const McEstimate ib = mc_distortion_importance(kUnitSrc, kUnitCh, enc, dec, agent, cfg);
    CHECK(ia.value == ib.value);
    CHECK(ia.std_err == ib.std_err);

    const McEstimate other = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, McConfig(50000, 1235));
    CHECK(other.value != a.value);

    const auto first = sample_distorted(kUnitSrc, kUnitCh, enc, 0.5, cfg, 10);
    const auto again = sample_distorted(kUnitSrc, kUnitCh, enc, 0.5, cfg, 10);
    REQUIRE(first.size() == 10);
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].first == again[i].first);
        CHECK(first[i].second == again[i].second);
    }
}

TEST_CASE("single-shard estimate equals the plain mean over the same stream") {
    const LinearEncoder enc{0.0, 1.0};
    const LinearDecoder dec{0.5, 0.0};
    const AgentProfile agent(0.5, kSq);
    const McConfig cfg(20000, 99);

    const auto draws = sample_distorted(kUnitSrc, kUnitCh, enc, 0.5, cfg, 20000);
    double mean = 0.0;
    for (const auto& [s, r] : draws) mean += kSq(s, decode(dec, r));
    mean /= 20000.0;

    const McEstimate est = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, cfg);
    CHECK(est.value == doctest::Approx(mean).epsilon(1e-12));
    CHECK(est.samples == 20000);
}

TEST_CASE("sharded runs keep the full sample count") {
    const McEstimate est = mc_distortion(kUnitSrc, kUnitCh, LinearEncoder{0.0, 1.0}, LinearDecoder{0.5, 0.0},
                                         AgentProfile(1.0, kSq), McConfig(70000, 5));
    CHECK(est.samples == 70000);
    CHECK(est.std_err > 0.0);
}

TEST_CASE("distorted sampler reproduces the exact joint law at alpha=1") {
    const McConfig cfg(100000, 2024);
    const auto draws = sample_distorted(kUnitSrc, kUnitCh, LinearEncoder{0.0, 1.0}, 1.0, cfg, 100000);
    const SampleStats st = stats_of(draws);
    const double n = 1e5;

    // Cov(S,R) = [[1, 1], [1, 2]] at unit parameters; 4-sigma normal-theory
    // bands around each sample moment.
    CHECK(std::abs(st.mean_s) < 4.0 * std::sqrt(1.0 / n));
    CHECK(std::abs(st.mean_r) < 4.0 * std::sqrt(2.0 / n));
    CHECK(std::abs(st.var_s - 1.0) < 4.0 * std::sqrt(2.0 / n) * 1.0);
    CHECK(std::abs(st.var_r - 2.0) < 4.0 * std::sqrt(2.0 / n) * 2.0);
    CHECK(std::abs(st.cov - 1.0) < 4.0 * std::sqrt((1.0 * 2.0 + 1.0) / n));
}

TEST_CASE("distorted sampler widens both variances by 1/alpha") {
    const McConfig cfg(100000, 7);
    const auto draws = sample_distorted(kUnitSrc, kUnitCh, LinearEncoder{0.0, 1.0}, 0.5, cfg, 100000);
    const SampleStats st = stats_of(draws);
    const double n = 1e5;

    CHECK(std::abs(st.var_r - 4.0) < 4.0 * std::sqrt(2.0 / n) * 4.0);
    CHECK(std::abs(st.var_s - 2.0) < 4.0 * std::sqrt(2.0 / n) * 2.0);
    CHECK(std::abs(st.cov - 2.0) < 4.0 * std::sqrt((2.0 * 4.0 + 4.0) / n));
}

TEST_CASE("mc_distortion brackets the closed form at the equilibrium") {
    const LinearEncoder enc{0.0, 1.0};
    const LinearDecoder dec{0.5, 0.0};
    const McConfig cfg(100000, 11);

    const McEstimate neutral = mc_distortion(kUnitSrc, kUnitCh, enc, dec, AgentProfile(1.0, kSq), cfg);
    CHECK(std::abs(neutral.value - 0.5) < 4.0 * neutral.std_err);

    const McEstimate quarter = mc_distortion(kUnitSrc, kUnitCh, enc, dec, AgentProfile(0.25, kSq), cfg);
    CHECK(std::abs(quarter.value - 2.0) < 4.0 * quarter.std_err);
}

TEST_CASE("mc_distortion tracks the closed form on random configurations") {
    Xoshiro256pp gen(5150);
    int hits = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const LinearEncoder enc{2.0 * gen.next_open_unit() - 1.0, 0.3 + 1.7 * gen.next_open_unit()};
        const LinearDecoder dec{0.1 + 0.7 * gen.next_open_unit(), gen.next_open_unit() - 0.5};
        const AgentProfile agent(0.3 + 0.7 * gen.next_open_unit(), kSq);
        const double closed = distortion_closed(kUnitSrc, kUnitCh, enc, dec, agent.alpha());
        const McEstimate est =
            mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, McConfig(20000, 1000 + trial));
        if (std::abs(est.value - closed) < 4.0 * est.std_err) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("importance sampling agrees with the direct estimator where its variance is finite") {
    const LinearEncoder enc{0.0, 1.0};
    const LinearDecoder dec{0.5, 0.0};
    const McConfig cfg(100000, 13);

    // alpha = 1: unit weights, so this is plain sampling from the exact joint.
    const McEstimate exact = mc_distortion_importance(kUnitSrc, kUnitCh, enc, dec, AgentProfile(1.0, kSq), cfg);
    CHECK(std::abs(exact.value - 0.5) < 4.0 * exact.std_err);

    const AgentProfile tilted(0.75, kSq);
    const McEstimate direct = mc_distortion(kUnitSrc, kUnitCh, enc, dec, tilted, cfg);
    const McEstimate snis = mc_distortion_importance(kUnitSrc, kUnitCh, enc, dec, tilted, cfg);
    const double combined = std::sqrt(direct.std_err * direct.std_err + snis.std_err * snis.std_err);
    CHECK(std::abs(direct.value - snis.value) < 4.0 * combined);
    const double closed = distortion_closed(kUnitSrc, kUnitCh, enc, dec, 0.75);
    CHECK(std::abs(snis.value - closed) < 4.0 * snis.std_err);
}

TEST_CASE("standard errors shrink like 1/sqrt(n)") {
    const LinearEncoder enc{0.0, 1.0};
    const LinearDecoder dec{0.5, 0.0};
    const AgentProfile agent(0.5, kSq);

    const double se1 = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, McConfig(10000, 3)).std_err;
    const double se2 = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, McConfig(40000, 3)).std_err;
    const double se3 = mc_distortion(kUnitSrc, kUnitCh, enc, dec, agent, McConfig(160000, 3)).std_err;
    CHECK(se1 / se2 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(se2 / se3 == doctest::Approx(2.0).epsilon(0.2));
}
