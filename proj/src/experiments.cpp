#include "relaysim/experiments.hpp"

#include "relaysim/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace relaysim {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void report_type1(std::ostream& os, const std::string& label, const ParentDistribution& p) {
    double grid[9];
    double sf = 1e-2;
    for (int i = 0; i < 9; ++i, sf *= 1e-1) grid[i] = upper_quantile(p, sf);
    TypeOneReport rep = check_type1(p, grid);
    os << label << " name=" << p.name << " ratio_at_1e-2=" << fmt(rep.ratios.front())
       << " ratio_at_1e-10=" << fmt(rep.ratios.back())
       << " converged=" << (rep.converged ? "true" : "false") << "\n";
}

} // namespace

std::vector<Fig2Row> run_fig2(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<Fig2Row> rows;
    rows.reserve(cfg.sweep.size());
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        long K = cfg.sweep[i];
        RelayScenario sc = cfg.relay_scenario(K);
        Fig2Row row;
        row.K = K;
        row.empirical =
            estimate_direct_wins(sc, cfg.law_h, cfg.law_g, cfg.trials, cfg.seed, cfg.threads,
                                 row_tag(stream_tag::direct_wins, static_cast<std::uint32_t>(i)));
        row.exact = exact_direct_wins(sc, cfg.law_h, cfg.law_g);
        row.asymptotic = direct_wins_asymptotic(sc, cfg.law_h, cfg.law_g);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Fig4Row> run_fig4(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<Fig4Row> rows;
    rows.reserve(cfg.sweep.size());
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        long users = cfg.sweep[i];
        BroadcastScenario sc = cfg.broadcast_scenario(users);
        Fig4Row row;
        row.users = users;
        row.orthogonal = estimate_broadcast_avg_se(
            BroadcastProtocol::orthogonal, sc, cfg.law_h, cfg.law_g, cfg.trials, cfg.seed,
            cfg.threads, row_tag(stream_tag::orthogonal, static_cast<std::uint32_t>(i)));
        row.simultaneous = estimate_broadcast_avg_se(
            BroadcastProtocol::simultaneous, sc, cfg.law_h, cfg.law_g, cfg.trials, cfg.seed,
            cfg.threads, row_tag(stream_tag::simultaneous, static_cast<std::uint32_t>(i)));
        row.orthogonal_asymptotic = orthogonal_avg_se_asymptotic(sc, cfg.law_h, cfg.law_g);
        row.simultaneous_asymptotic = simultaneous_avg_se_asymptotic(sc, cfg.law_h, cfg.law_g);
        rows.push_back(row);
    }
    return rows;
}

std::string fig2_csv(std::span<const Fig2Row> rows) {
    std::string out = "K,p_empirical,ci95,p_exact_quadrature,p_analytic_theorem1,"
                      "z1,z2,z3,c_h,d_h,c_g,d_g\n";
    for (const Fig2Row& r : rows) {
        out += std::to_string(r.K);
        out += ',' + fmt(r.empirical.mean);
        out += ',' + fmt(r.empirical.halfwidth95);
        out += ',' + fmt(r.exact);
        out += ',' + fmt(r.asymptotic.p_direct_wins);
        out += ',' + fmt(r.asymptotic.z1);
        out += ',' + fmt(r.asymptotic.z2);
        out += ',' + fmt(r.asymptotic.z3);
        out += ',' + fmt(r.asymptotic.direct_link.c);
        out += ',' + fmt(r.asymptotic.direct_link.d);
        out += ',' + fmt(r.asymptotic.relay_link.c);
        out += ',' + fmt(r.asymptotic.relay_link.d);
        out += '\n';
    }
    return out;
}

std::string fig4_csv(std::span<const Fig4Row> rows) {
    std::string out = "UV,ort_empirical,ort_ci95,ort_analytic,"
                      "sim_empirical,sim_ci95,sim_analytic\n";
    for (const Fig4Row& r : rows) {
        out += std::to_string(r.users);
        out += ',' + fmt(r.orthogonal.mean);
        out += ',' + fmt(r.orthogonal.halfwidth95);
        out += ',' + fmt(r.orthogonal_asymptotic);
        out += ',' + fmt(r.simultaneous.mean);
        out += ',' + fmt(r.simultaneous.halfwidth95);
        out += ',' + fmt(r.simultaneous_asymptotic);
        out += '\n';
    }
    return out;
}

std::string constants_report(const FadingLaw& law, double snr, long M) {
    ParentDistribution p = law.parent();
    NormalizingConstants nc = normalizing_constants(p, M);
    RateGumbelConstants rc = to_rate_constants(nc, snr);
    std::ostringstream os;
    os << "law=" << law.name() << " snr=" << fmt(snr) << " M=" << M << "\n";
    os << "a=" << fmt(nc.a) << " b=" << fmt(nc.b) << "\n";
    os << "c=" << fmt(rc.c) << " d=" << fmt(rc.d) << "\n";
    report_type1(os, "type1", p);
    return os.str();
}

std::string validate_report(const ExperimentConfig& cfg) {
    cfg.validate();
    std::ostringstream os;
    os << "experiment=" << cfg.experiment << " config_ok=true\n";
    os << "law_h=" << cfg.law_h.name() << " law_g=" << cfg.law_g.name() << "\n";
    report_type1(os, "type1 link=h", cfg.law_h.parent());
    report_type1(os, "type1 link=g", cfg.law_g.parent());
    if (cfg.experiment == "fig4") {
        bool exponential = cfg.law_h.kind == FadingKind::rayleigh &&
                           cfg.law_g.kind == FadingKind::rayleigh;
        ParentDistribution near_sinr =
            exponential ? sinr_parent_exponential(cfg.snr_N_b, cfg.snr_N_r)
                        : sinr_parent_quadrature(cfg.law_h, cfg.law_g, cfg.snr_N_b, cfg.snr_N_r);
        ParentDistribution far_sinr =
            exponential ? sinr_parent_exponential(cfg.snr_F_r, cfg.snr_F_b)
                        : sinr_parent_quadrature(cfg.law_g, cfg.law_h, cfg.snr_F_r, cfg.snr_F_b);
        report_type1(os, "type1 link=near-sinr", near_sinr);
        report_type1(os, "type1 link=far-sinr", far_sinr);
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << text;
    if (!out) throw ConfigError("failed writing output file: " + path);
}

} // namespace relaysim
