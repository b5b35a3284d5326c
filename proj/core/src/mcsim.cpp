#include "d2dbound/mcsim.hpp"

#include "d2dbound/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <thread>

namespace d2d {

PairPlacement make_pair(Point center, double d_d2d, double orientation_rad, double g_d)
{
    const double hx = 0.5 * d_d2d * std::cos(orientation_rad);
    const double hy = 0.5 * d_d2d * std::sin(orientation_rad);
    PairPlacement p;
    p.tx = {center.x - hx, center.y - hy};
    p.rx = {center.x + hx, center.y + hy};
    p.d_d2d = d_d2d;
    p.er_center = center;
    p.er_radius = (d_d2d + g_d) / 2.0;
    return p;
}

PairPlacement make_pair_from_nodes(Point tx, Point rx, double g_d)
{
    PairPlacement p;
    p.tx = tx;
    p.rx = rx;
    p.d_d2d = distance(tx, rx);
    p.er_center = {(tx.x + rx.x) / 2.0, (tx.y + rx.y) / 2.0};
    p.er_radius = (p.d_d2d + g_d) / 2.0;
    return p;
}

bool admissible(const PairPlacement& candidate, std::span<const PairPlacement> accepted,
                const GuardDistances& gd, const CellConfig& cell, double d_cb_m)
{
    const Point c = candidate.er_center;
    const double core = candidate.hard_core_radius();
    const double from_bs = std::hypot(c.x, c.y);

    if (from_bs + core > cell.r_cell_m) return false;
    if (from_bs - core < gd.g_b) return false;
    if (std::hypot(c.x - d_cb_m, c.y) < gd.g_c(d_cb_m) + core) return false;

    for (const auto& other : accepted) {
        if (distance(c, other.er_center) < candidate.er_radius + other.er_radius) return false;
    }
    return true;
}

void TrialConfig::validate(const CellConfig& cell) const
{
    if (const auto* ppp = std::get_if<PppMode>(&mode); ppp && !(ppp->lambda_per_m2 > 0.0)) {
        throw ConfigError("simulation.lambda", "PPP density must be positive");
    }
    if (const auto* fixed = std::get_if<FixedLength>(&d2d_dist)) {
        if (fixed->d_m < cell.d_min_m || fixed->d_m > cell.d_max_m) {
            throw ConfigError("simulation.d2d_fixed_m", "must lie in [d_min, d_max]");
        }
    }
    if (const auto* uni = std::get_if<UniformLength>(&d2d_dist)) {
        if (!(uni->lo_m <= uni->hi_m) || uni->lo_m < cell.d_min_m || uni->hi_m > cell.d_max_m) {
            throw ConfigError("simulation.d2d_dist", "uniform range must lie in [d_min, d_max]");
        }
    }
    if (!(d_cb_m >= 0.0) || d_cb_m > cell.r_cell_m) {
        throw ConfigError("simulation.d_cb_m", "must lie in [0, r_cell]");
    }
    if (stop_after_failures < 1) {
        throw ConfigError("simulation.stop_after_failures", "must be at least 1");
    }
}

SirReport evaluate_sir(std::span<const PairPlacement> accepted, const RadioConfig& radio,
                       const CellConfig& cell, double d_cb_m, bool rotate)
{
    if (accepted.empty()) throw DomainError("evaluate_sir: empty placement");

    const double p_due = radio.p_due_mw;
    const Point cue{d_cb_m, 0.0};
    const double p_cue = d_cb_m > 0.0 ? cue_tx_power(radio, cell, d_cb_m) : 0.0;
    const double threshold = radio.due_sir_threshold();
    auto tx_of = [&](const PairPlacement& p) { return rotate ? p.rx : p.tx; };
    auto rx_of = [&](const PairPlacement& p) { return rotate ? p.tx : p.rx; };
    auto capped = [](double signal, double interference) {
        return interference > 0.0 ? std::min(signal / interference, kSirCap) : kSirCap;
    };

    SirReport out;
    int successes = 0;
    double bs_interference_mw = 0.0;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        const Point rx = rx_of(accepted[i]);
        const double signal = p_due * radio.pl_due.gain(accepted[i].d_d2d);
        double interference = p_cue > 0.0 ? p_cue * radio.pl_due.gain(distance(cue, rx)) : 0.0;
        for (std::size_t j = 0; j < accepted.size(); ++j) {
            if (j != i) interference += p_due * radio.pl_due.gain(distance(tx_of(accepted[j]), rx));
        }
        const double sir = capped(signal, interference);
        out.min_due_sir = std::min(out.min_due_sir, sir);
        if (sir >= threshold) ++successes;

        const Point tx = tx_of(accepted[i]);
        bs_interference_mw += p_due * radio.pl_bs.gain(std::hypot(tx.x, tx.y));
    }
    out.due_success = static_cast<double>(successes) / static_cast<double>(accepted.size());
    out.bs_sir = capped(cue_rx_power_at_bs(radio, cell), bs_interference_mw);
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    // splitmix64 finaliser over a mix of both words.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double draw_length(const LinkDistribution& dist, Rng& rng)
{
    if (const auto* fixed = std::get_if<FixedLength>(&dist)) return fixed->d_m;
    const auto& uni = std::get<UniformLength>(dist);
    return std::uniform_real_distribution<double>(uni.lo_m, uni.hi_m)(rng);
}

Point uniform_in_annulus(double r_in, double r_out, Rng& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = std::sqrt(r_in * r_in + unit(rng) * (r_out * r_out - r_in * r_in));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

void finish_result(TrialResult& result, const RadioConfig& radio, const CellConfig& cell, double d_cb_m)
{
    result.n_pairs = static_cast<int>(result.pairs.size());
    result.throughput_bps = result.n_pairs * radio.bitrate_bps;
    if (result.pairs.empty()) return;

    const SirReport plain = evaluate_sir(result.pairs, radio, cell, d_cb_m, false);
    const SirReport rotated = evaluate_sir(result.pairs, radio, cell, d_cb_m, true);
    const double threshold = radio.due_sir_threshold();
    result.min_due_sir = plain.min_due_sir;
    result.bs_sir = plain.bs_sir;
    result.due_success = plain.due_success;
    result.due_success_rotated = rotated.due_success;
    result.min_due_sir_rotated = rotated.min_due_sir;
    result.rotation_ok = (plain.min_due_sir >= threshold) == (rotated.min_due_sir >= threshold);
}

} // namespace

TrialResult run_saturation_trial(const TrialConfig& cfg, const RadioConfig& radio,
                                 const CellConfig& cell, const GuardDistances& gd)
{
    cfg.validate(cell);
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    TrialResult result;
    int failures = 0;
    while (failures < cfg.stop_after_failures) {
        const Point center = uniform_in_annulus(std::max(0.0, gd.r_in), gd.r_out, rng);
        const double length = draw_length(cfg.d2d_dist, rng);
        const PairPlacement candidate = make_pair(center, length, angle(rng), gd.g_d);
        if (admissible(candidate, result.pairs, gd, cell, cfg.d_cb_m)) {
            result.pairs.push_back(candidate);
            failures = 0;
        } else {
            ++failures;
        }
    }
    finish_result(result, radio, cell, cfg.d_cb_m);
    return result;
}

TrialResult run_ppp_trial(const TrialConfig& cfg, const RadioConfig& radio, const CellConfig& cell,
                          const GuardDistances& gd)
{
    cfg.validate(cell);
    const auto* ppp = std::get_if<PppMode>(&cfg.mode);
    if (ppp == nullptr) throw DomainError("run_ppp_trial: trial is not in PPP mode");

    Rng rng(cfg.seed);
    const double r_c = cell.r_cell_m;
    const double mean_nodes = ppp->lambda_per_m2 * std::numbers::pi * r_c * r_c;
    const int n_nodes = std::poisson_distribution<int>(mean_nodes)(rng);

    std::vector<Point> nodes;
    nodes.reserve(static_cast<std::size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i) nodes.push_back(uniform_in_annulus(0.0, r_c, rng));

    // Greedy matching: each unused node takes its nearest unused neighbour
    // whose distance lies in [d_min, d_max].
    std::vector<char> used(nodes.size(), 0);
    std::vector<PairPlacement> matched;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (used[i]) continue;
        std::size_t best = nodes.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i || used[j]) continue;
            const double dist = distance(nodes[i], nodes[j]);
            if (dist >= cell.d_min_m && dist <= cell.d_max_m && dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == nodes.size()) continue;
        used[i] = used[best] = 1;
        matched.push_back(make_pair_from_nodes(nodes[i], nodes[best], gd.g_d));
    }

    std::shuffle(matched.begin(), matched.end(), rng);
    TrialResult result;
    for (const auto& pair : matched) {
        if (admissible(pair, result.pairs, gd, cell, cfg.d_cb_m)) result.pairs.push_back(pair);
    }
    finish_result(result, radio, cell, cfg.d_cb_m);
    return result;
}

TrialResult run_trial(const TrialConfig& cfg, const RadioConfig& radio, const CellConfig& cell,
                      const GuardDistances& gd)
{
    if (std::holds_alternative<PppMode>(cfg.mode)) return run_ppp_trial(cfg, radio, cell, gd);
    return run_saturation_trial(cfg, radio, cell, gd);
}

std::vector<TrialResult> run_trials(const TrialConfig& cfg, int trials, const RadioConfig& radio,
                                    const CellConfig& cell, const GuardDistances& gd, int threads)
{
    if (trials < 0) throw DomainError("run_trials: negative trial count");
    cfg.validate(cell);
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};

    auto worker = [&] {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            TrialConfig local = cfg;
            local.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
            results[static_cast<std::size_t>(i)] = run_trial(local, radio, cell, gd);
        }
    };

    const int n_threads = std::clamp(threads, 1, std::max(1, trials));
    if (n_threads == 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    pool.clear(); // joins
    return results;
}

Summary summarize(std::span<const double> values)
{
    if (values.empty()) throw DomainError("summarize: no values");
    Summary s;
    s.n = values.size();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        const double sd = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.std_error = sd / std::sqrt(static_cast<double>(s.n));
    }
    s.ci_low = s.mean - 1.96 * s.std_error;
    s.ci_high = s.mean + 1.96 * s.std_error;
    return s;
}

TrialSummary aggregate(std::span<const TrialResult> results)
{
    if (results.empty()) throw DomainError("aggregate: no trial results");
    auto column = [&](auto field) {
        std::vector<double> v;
        v.reserve(results.size());
        for (const auto& r : results) v.push_back(static_cast<double>(field(r)));
        return summarize(v);
    };
    TrialSummary out;
    out.n_pairs = column([](const TrialResult& r) { return r.n_pairs; });
    out.throughput_bps = column([](const TrialResult& r) { return r.throughput_bps; });
    out.min_due_sir = column([](const TrialResult& r) { return r.min_due_sir; });
    out.bs_sir = column([](const TrialResult& r) { return r.bs_sir; });
    out.due_success = column([](const TrialResult& r) { return r.due_success; });
    out.due_success_rotated = column([](const TrialResult& r) { return r.due_success_rotated; });
    out.rotation_ok_rate = column([](const TrialResult& r) { return r.rotation_ok ? 1.0 : 0.0; }).mean;
    return out;
}

} // namespace d2d
