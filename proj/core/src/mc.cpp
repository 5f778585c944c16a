#include "ptgauss/mc.hpp"

#include <cmath>

#include "ptgauss/errors.hpp"

namespace ptgauss {

namespace {

constexpr long long kShardSize = 32768;
constexpr uint64_t kDirectStream = 0x01;
constexpr uint64_t kImportanceStream = 0x02;

// Count/mean/M2 running moments; merge is the pairwise (Chan) update, which
// is associative enough for a fixed binary tree to reproduce bit-for-bit.
struct Moments {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    static Moments merge(const Moments& a, const Moments& b) {
        if (a.n == 0) return b;
        if (b.n == 0) return a;
        Moments out;
        out.n = a.n + b.n;
        const double d = b.mean - a.mean;
        const double na = static_cast<double>(a.n);
        const double nb = static_cast<double>(b.n);
        out.mean = a.mean + d * nb / (na + nb);
        out.m2 = a.m2 + b.m2 + d * d * na * nb / (na + nb);
        return out;
    }
};

// Plain sums for the self-normalized ratio; associative exactly.
struct WeightedSums {
    double w = 0.0, wv = 0.0, w2 = 0.0, w2v = 0.0, w2v2 = 0.0;
    long long n = 0;

    static WeightedSums merge(const WeightedSums& a, const WeightedSums& b) {
        return WeightedSums{a.w + b.w, a.wv + b.wv, a.w2 + b.w2,
                            a.w2v + b.w2v, a.w2v2 + b.w2v2, a.n + b.n};
    }
};

template <typename Acc>
Acc tree_merge(std::vector<Acc> shards) {
    // Fixed pairwise reduction; independent of traversal or thread schedule.
    while (shards.size() > 1) {
        std::vector<Acc> next;
        next.reserve((shards.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < shards.size(); i += 2) next.push_back(Acc::merge(shards[i], shards[i + 1]));
        if (shards.size() % 2 == 1) next.push_back(shards.back());
        shards = std::move(next);
    }
    return shards.front();
}

long long shard_count(long long samples) { return (samples + kShardSize - 1) / kShardSize; }

long long shard_samples(long long samples, long long shard) {
    const long long begin = shard * kShardSize;
    return std::min(kShardSize, samples - begin);
}

} // namespace

DistortedJointSampler::DistortedJointSampler(const SourceModel& src, const ChannelModel& ch,
                                             const LinearEncoder& enc, double alpha, uint64_t seed)
    : k0_(enc.k0), rng_(seed) {
    check_alpha(alpha, "DistortedJointSampler");
    const GaussianDensity r_law = distorted_marginal(src, ch, enc, alpha);
    r_mean_ = r_law.mean();
    r_sd_ = r_law.std_dev();
    const double v = received_variance(src, ch, enc);
    post_gain_ = enc.k1 * src.sigma_s2() / v;
    post_sd_ = std::sqrt(src.sigma_s2() * ch.sigma_n2() / (alpha * v));
}

std::pair<double, double> DistortedJointSampler::next() {
    double z1 = 0.0, z2 = 0.0;
    rng_.next_normal_pair(z1, z2);
    const double r = r_mean_ + r_sd_ * z1;
    const double s = post_gain_ * (r - k0_) + post_sd_ * z2;
    return {s, r};
}

McEstimate mc_distortion(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                         const LinearDecoder& dec, const AgentProfile& agent, const McConfig& cfg) {
    const long long shards = shard_count(cfg.samples);
    std::vector<Moments> acc(static_cast<std::size_t>(shards));
    for (long long sh = 0; sh < shards; ++sh) {
        DistortedJointSampler sampler(src, ch, enc, agent.alpha(),
                                      shard_seed(cfg.seed, kDirectStream, static_cast<uint64_t>(sh)));
        Moments m;
        const long long count = shard_samples(cfg.samples, sh);
        for (long long i = 0; i < count; ++i) {
            const auto [s, r] = sampler.next();
            m.add(agent.value()(s, decode(dec, r)));
        }
        acc[static_cast<std::size_t>(sh)] = m;
    }
    const Moments total = tree_merge(std::move(acc));

    McEstimate est;
    est.samples = total.n;
    est.value = total.mean;
    est.std_err = std::sqrt(total.m2 / (static_cast<double>(total.n) - 1.0) / static_cast<double>(total.n));
    return est;
}

McEstimate mc_distortion_importance(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    const LinearDecoder& dec, const AgentProfile& agent, const McConfig& cfg) {
    const double s_sd = std::sqrt(src.sigma_s2());
    const double n_sd = std::sqrt(ch.sigma_n2());
    const double log_norm = std::log(6.28318530717958647692528676656 * s_sd * n_sd);
    const double expo = agent.alpha() - 1.0;

    const long long shards = shard_count(cfg.samples);
    std::vector<WeightedSums> acc(static_cast<std::size_t>(shards));
    for (long long sh = 0; sh < shards; ++sh) {
        Xoshiro256pp rng(shard_seed(cfg.seed, kImportanceStream, static_cast<uint64_t>(sh)));
        WeightedSums ws;
        const long long count = shard_samples(cfg.samples, sh);
        for (long long i = 0; i < count; ++i) {
            double z1 = 0.0, z2 = 0.0;
            rng.next_normal_pair(z1, z2);
            const double s = s_sd * z1;
            const double r = enc.k1 * s + enc.k0 + n_sd * z2;
            const double log_p = -0.5 * (z1 * z1 + z2 * z2) - log_norm;
            const double w = std::exp(expo * log_p);
            const double v = agent.value()(s, decode(dec, r));
            ws.w += w;
            ws.wv += w * v;
            ws.w2 += w * w;
            ws.w2v += w * w * v;
            ws.w2v2 += w * w * v * v;
            ++ws.n;
        }
        acc[static_cast<std::size_t>(sh)] = ws;
    }
    const WeightedSums total = tree_merge(std::move(acc));
    if (!(total.w > 0.0)) throw numerical_error("mc_distortion_importance: weight sum vanished");

    McEstimate est;
    est.samples = total.n;
    est.value = total.wv / total.w;
    // Delta-method variance of the self-normalized ratio:
    // sum w_i^2 (v_i - mu)^2 / (sum w)^2.
    const double mu = est.value;
    const double num = total.w2v2 - 2.0 * mu * total.w2v + mu * mu * total.w2;
    est.std_err = std::sqrt(std::max(0.0, num)) / total.w;
    return est;
}

std::vector<std::pair<double, double>> sample_distorted(const SourceModel& src, const ChannelModel& ch,
                                                        const LinearEncoder& enc, double alpha,
                                                        const McConfig& cfg, std::size_t count) {
    DistortedJointSampler sampler(src, ch, enc, alpha, shard_seed(cfg.seed, kDirectStream, 0));
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

} // namespace ptgauss
