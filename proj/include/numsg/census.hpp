#ifndef NUMSG_CENSUS_HPP
#define NUMSG_CENSUS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "numsg/error.hpp"
#include "numsg/partitions.hpp"
#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/sumset.hpp"
#include "numsg/tree.hpp"
#include "numsg/types.hpp"

namespace numsg {

struct CensusConfig {
    int g_max = 25;
    /// Window half-width for the A, N*, E, Phi and P counts.
    Rational epsilon{1, 21};
    /// Offset for the weight tails: W <= (beta1 - eps_w) g^2, W >= (beta2 + eps_w) g^2.
    Rational weight_epsilon{0, 1};
    int nb_n_cap = 8;
    int m_threshold = 420;
    Rational genus_mult_ratio{13667, 10000};
    bool weight_beta_flags = true;
    int threads = 1;
    int split_depth = 8;
    int genus_cap = kDefaultGenusCap;
    std::string checkpoint_path;

    void validate() const {
        if (g_max < 1) throw std::invalid_argument("census: g_max must be >= 1");
        if (epsilon.num <= 0) throw std::invalid_argument("census: epsilon must be > 0");
        if (nb_n_cap < 2) throw std::invalid_argument("census: nb_n_cap must be >= 2");
        if (threads < 1) throw std::invalid_argument("census: threads must be >= 1");
    }

    /// Only the settings that change row values; g_max, threads and paths
    /// are excluded so a checkpoint can be extended or resumed in parallel.
    std::string canonical() const {
        return "numsg-census/1;eps=" + epsilon.str() + ";weight_eps=" + weight_epsilon.str() +
               ";nb_cap=" + std::to_string(nb_n_cap) + ";m_threshold=" + std::to_string(m_threshold) +
               ";ratio=" + genus_mult_ratio.str() + ";weight_flags=" + (weight_beta_flags ? "1" : "0");
    }

    std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (unsigned char c : canonical()) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["g_max"] = g_max;
        j["epsilon"] = epsilon.str();
        j["weight_epsilon"] = weight_epsilon.str();
        j["nb_n_cap"] = nb_n_cap;
        j["m_threshold"] = m_threshold;
        j["genus_mult_ratio"] = genus_mult_ratio.str();
        j["weight_beta_flags"] = weight_beta_flags;
        j["threads"] = threads;
        j["split_depth"] = split_depth;
        j["config_hash"] = hash();
        return j;
    }
};

/// Per-genus aggregate. Every count is over semigroups of genus g.
struct CensusRow {
    int g = 0;
    std::uint64_t n = 0;
    std::uint64_t ordinary = 0;  // F = m-1
    std::uint64_t low = 0;       // m < F < 2m
    std::uint64_t mid = 0;       // 2m < F < 3m
    std::uint64_t high = 0;      // F > 3m
    std::uint64_t nb2 = 0;       // |2H| > 3(g-1)
    std::uint64_t nb_any = 0;    // fails for some tested n <= min(horizon, cap)
    std::uint64_t nb_capped = 0; // horizon beyond the cap (or unbounded)
    std::uint64_t q_eh = 0;      // F < 2m and W < g-1
    std::uint64_t r_2g3m = 0;    // 2g < 3m
    std::uint64_t a_eps = 0;     // (2-eps)m < F < (2+eps)m
    std::uint64_t b_m420 = 0;    // m < m_threshold
    std::uint64_t c_ratio = 0;   // g < ratio * m
    std::uint64_t nstar_eps = 0; // F <= (2-eps)m
    std::uint64_t e_eps = 0;     // F < 2m and (gamma-eps)g < m < (gamma+eps)g
    std::uint64_t phi_eps = 0;   // (gamma-eps)g < m < (gamma+eps)g
    std::uint64_t p_eps = 0;     // (2+eps)m < F < 3m
    std::uint64_t y_beta1 = 0;   // W <= (beta1 - eps_w) g^2
    std::uint64_t z_beta2 = 0;   // W >= (beta2 + eps_w) g^2
    bool weight_flags = true;
    std::int64_t w_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t w_max = std::numeric_limits<std::int64_t>::min();
    std::vector<std::uint64_t> mult_hist;  // index m

    /// T(g): F < 3m.
    std::uint64_t t_count() const noexcept { return n - high; }
    double n_phi_ratio() const { return static_cast<double>(n) * std::pow(MathConstants::phi, -g); }

    void merge(const CensusRow& o) {
        n += o.n;
        ordinary += o.ordinary;
        low += o.low;
        mid += o.mid;
        high += o.high;
        nb2 += o.nb2;
        nb_any += o.nb_any;
        nb_capped += o.nb_capped;
        q_eh += o.q_eh;
        r_2g3m += o.r_2g3m;
        a_eps += o.a_eps;
        b_m420 += o.b_m420;
        c_ratio += o.c_ratio;
        nstar_eps += o.nstar_eps;
        e_eps += o.e_eps;
        phi_eps += o.phi_eps;
        p_eps += o.p_eps;
        y_beta1 += o.y_beta1;
        z_beta2 += o.z_beta2;
        w_min = std::min(w_min, o.w_min);
        w_max = std::max(w_max, o.w_max);
        if (mult_hist.size() < o.mult_hist.size()) mult_hist.resize(o.mult_hist.size(), 0);
        for (std::size_t i = 0; i < o.mult_hist.size(); ++i) mult_hist[i] += o.mult_hist[i];
    }

    /// Empty string when consistent, otherwise the first broken relation.
    std::string consistency_error() const {
        if (n != ordinary + low + mid + high) return "N != sum of Frobenius classes";
        if (nb2 > nb_any || nb_any > n) return "NB2 <= NB_any <= N violated";
        if (q_eh > ordinary + low) return "Q exceeds F<2m count";
        for (auto c : {r_2g3m, a_eps, b_m420, c_ratio, nstar_eps, e_eps, phi_eps, p_eps, y_beta1, z_beta2, nb_capped})
            if (c > n) return "flag count exceeds N";
        if (p_eps > mid) return "P exceeds MID count";
        std::uint64_t h = 0;
        for (auto c : mult_hist) h += c;
        if (h != n) return "multiplicity histogram does not sum to N";
        if (n > 0 && w_min > w_max) return "weight range empty";
        return {};
    }

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Folds one semigroup into its genus row.
class CensusClassifier {
public:
    explicit CensusClassifier(const CensusConfig& cfg)
        : cfg_(cfg)
        , beta1_(MathConstants::beta1())
        , beta2_(MathConstants::beta2()) {}

    void add(CensusRow& row, const Semigroup& s) const {
        const std::int64_t m = s.multiplicity();
        const std::int64_t f = s.frobenius();
        const std::int64_t g = s.genus();
        const std::int64_t w = weight(s);
        const std::int64_t p = cfg_.epsilon.num;
        const std::int64_t q = cfg_.epsilon.den;

        ++row.n;
        switch (frobenius_class(static_cast<int>(m), static_cast<int>(f))) {
            case FrobeniusClass::kOrdinary: ++row.ordinary; break;
            case FrobeniusClass::kLow: ++row.low; break;
            case FrobeniusClass::kMid: ++row.mid; break;
            case FrobeniusClass::kHigh: ++row.high; break;
        }

        const BuchweitzReport rep = classify_buchweitz(s, cfg_.nb_n_cap);
        if (rep.fails_at(2)) ++row.nb2;
        if (rep.fails_any()) ++row.nb_any;
        if (!rep.trivial && rep.capped) ++row.nb_capped;

        const bool f_less_2m = f < 2 * m;
        if (f_less_2m && w < g - 1) ++row.q_eh;
        if (2 * g < 3 * m) ++row.r_2g3m;
        if ((2 * q - p) * m < q * f && q * f < (2 * q + p) * m) ++row.a_eps;
        if (m < cfg_.m_threshold) ++row.b_m420;
        if (cfg_.genus_mult_ratio.den * g < cfg_.genus_mult_ratio.num * m) ++row.c_ratio;
        if (q * f <= (2 * q - p) * m) ++row.nstar_eps;
        const double eps = cfg_.epsilon.value();
        const double gam = MathConstants::gamma;
        const bool window = (gam - eps) * static_cast<double>(g) < static_cast<double>(m) &&
                            static_cast<double>(m) < (gam + eps) * static_cast<double>(g);
        if (window) ++row.phi_eps;
        if (window && f_less_2m) ++row.e_eps;
        if ((2 * q + p) * m < q * f && f < 3 * m) ++row.p_eps;
        if (cfg_.weight_beta_flags) {
            const double ew = cfg_.weight_epsilon.value();
            const double g2 = static_cast<double>(g * g);
            if (static_cast<double>(w) <= (beta1_ - ew) * g2) ++row.y_beta1;
            if (static_cast<double>(w) >= (beta2_ + ew) * g2) ++row.z_beta2;
        }
        row.w_min = std::min(row.w_min, w);
        row.w_max = std::max(row.w_max, w);
        const auto mi = static_cast<std::size_t>(m);
        if (row.mult_hist.size() <= mi) row.mult_hist.resize(mi + 1, 0);
        ++row.mult_hist[mi];
    }

private:
    CensusConfig cfg_;
    double beta1_;
    double beta2_;
};

inline CensusRow census_row(int g, const CensusConfig& cfg) {
    const CensusClassifier classify(cfg);
    EnumerationOptions opt;
    opt.threads = cfg.threads;
    opt.split_depth = cfg.split_depth;
    opt.genus_cap = cfg.genus_cap;
    CensusRow row = reduce_tree<CensusRow>(
        g, opt,
        [&] {
            CensusRow r;
            r.g = g;
            r.weight_flags = cfg.weight_beta_flags;
            r.mult_hist.assign(static_cast<std::size_t>(g) + 2, 0);
            return r;
        },
        [&](CensusRow& r, const TreeNode& node) { classify.add(r, node.semigroup()); }, g);
    return row;
}

// ---------------------------------------------------------------------------
// Serialization

inline const char* census_csv_header() {
    return "g,N,ordinary,low,mid,high,nb2,nb_any,nb_capped,q_eh,r_2g3m,a_eps,b_m420,c_ratio,nstar_eps,"
           "phi_eps,p_eps,y_beta1,z_beta2,w_min,w_max,n_phi_ratio";
}

inline std::string format_ratio(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

inline std::string to_csv_line(const CensusRow& r) {
    std::ostringstream o;
    o << r.g << ',' << r.n << ',' << r.ordinary << ',' << r.low << ',' << r.mid << ',' << r.high << ',' << r.nb2 << ','
      << r.nb_any << ',' << r.nb_capped << ',' << r.q_eh << ',' << r.r_2g3m << ',' << r.a_eps << ',' << r.b_m420 << ','
      << r.c_ratio << ',' << r.nstar_eps << ',' << r.phi_eps << ',' << r.p_eps << ',';
    if (r.weight_flags)
        o << r.y_beta1 << ',' << r.z_beta2 << ',';
    else
        o << ",,";
    o << r.w_min << ',' << r.w_max << ',' << format_ratio(r.n_phi_ratio());
    return o.str();
}

inline nlohmann::ordered_json to_json(const CensusRow& r) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["N"] = r.n;
    j["ordinary"] = r.ordinary;
    j["low"] = r.low;
    j["mid"] = r.mid;
    j["high"] = r.high;
    j["nb2"] = r.nb2;
    j["nb_any"] = r.nb_any;
    j["nb_capped"] = r.nb_capped;
    j["q_eh"] = r.q_eh;
    j["r_2g3m"] = r.r_2g3m;
    j["a_eps"] = r.a_eps;
    j["b_m420"] = r.b_m420;
    j["c_ratio"] = r.c_ratio;
    j["nstar_eps"] = r.nstar_eps;
    j["phi_eps"] = r.phi_eps;
    j["p_eps"] = r.p_eps;
    if (r.weight_flags) {
        j["y_beta1"] = r.y_beta1;
        j["z_beta2"] = r.z_beta2;
    } else {
        j["y_beta1"] = nullptr;
        j["z_beta2"] = nullptr;
    }
    j["w_min"] = r.w_min;
    j["w_max"] = r.w_max;
    j["n_phi_ratio"] = std::stod(format_ratio(r.n_phi_ratio()));
    j["e_eps"] = r.e_eps;
    j["mult_hist"] = r.mult_hist;
    return j;
}

inline CensusRow row_from_json(const nlohmann::json& j) {
    CensusRow r;
    r.g = j.at("g").get<int>();
    r.n = j.at("N").get<std::uint64_t>();
    r.ordinary = j.at("ordinary").get<std::uint64_t>();
    r.low = j.at("low").get<std::uint64_t>();
    r.mid = j.at("mid").get<std::uint64_t>();
    r.high = j.at("high").get<std::uint64_t>();
    r.nb2 = j.at("nb2").get<std::uint64_t>();
    r.nb_any = j.at("nb_any").get<std::uint64_t>();
    r.nb_capped = j.at("nb_capped").get<std::uint64_t>();
    r.q_eh = j.at("q_eh").get<std::uint64_t>();
    r.r_2g3m = j.at("r_2g3m").get<std::uint64_t>();
    r.a_eps = j.at("a_eps").get<std::uint64_t>();
    r.b_m420 = j.at("b_m420").get<std::uint64_t>();
    r.c_ratio = j.at("c_ratio").get<std::uint64_t>();
    r.nstar_eps = j.at("nstar_eps").get<std::uint64_t>();
    r.phi_eps = j.at("phi_eps").get<std::uint64_t>();
    r.p_eps = j.at("p_eps").get<std::uint64_t>();
    r.weight_flags = !j.at("y_beta1").is_null();
    if (r.weight_flags) {
        r.y_beta1 = j.at("y_beta1").get<std::uint64_t>();
        r.z_beta2 = j.at("z_beta2").get<std::uint64_t>();
    }
    r.w_min = j.at("w_min").get<std::int64_t>();
    r.w_max = j.at("w_max").get<std::int64_t>();
    r.e_eps = j.at("e_eps").get<std::uint64_t>();
    r.mult_hist = j.at("mult_hist").get<std::vector<std::uint64_t>>();
    return r;
}

// ---------------------------------------------------------------------------
// Checkpointing: a header line {"config_hash", "config"} followed by one row
// object per completed genus. A torn trailing line is ignored.

struct Checkpoint {
    std::string config_hash;
    std::map<int, CensusRow> rows;

    static std::optional<Checkpoint> load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line) || line.empty()) return std::nullopt;
        Checkpoint cp;
        try {
            cp.config_hash = nlohmann::json::parse(line).at("config_hash").get<std::string>();
        } catch (const std::exception& e) {
            throw CheckpointMismatch("checkpoint " + path + ": unreadable header (" + e.what() + ")");
        }
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto row = row_from_json(nlohmann::json::parse(line));
                cp.rows[row.g] = std::move(row);
            } catch (const std::exception&) {
                break;  // partial write from an interrupted run
            }
        }
        return cp;
    }
};

/// Rows for g = 1..cfg.g_max. Genera already present in the checkpoint are
/// reused; each newly finished genus is appended and flushed. `on_row`
/// returning false stops the run after that row (the rows so far are
/// returned).
inline std::vector<CensusRow> run_census(const CensusConfig& cfg,
                                         const std::function<bool(const CensusRow&)>& on_row = {}) {
    cfg.validate();
    check_genus_cap(cfg.g_max, EnumerationOptions{1, cfg.split_depth, cfg.genus_cap});

    std::map<int, CensusRow> done;
    std::ofstream cp_out;
    if (!cfg.checkpoint_path.empty()) {
        auto cp = Checkpoint::load(cfg.checkpoint_path);
        if (cp) {
            if (cp->config_hash != cfg.hash())
                throw CheckpointMismatch("checkpoint " + cfg.checkpoint_path + " was written with config hash " +
                                         cp->config_hash + ", current is " + cfg.hash());
            done = std::move(cp->rows);
            // Rewrite without any torn tail so appends stay line-aligned.
            cp_out.open(cfg.checkpoint_path, std::ios::trunc);
            if (!cp_out) throw IoError("cannot write checkpoint " + cfg.checkpoint_path);
            nlohmann::ordered_json header;
            header["config_hash"] = cfg.hash();
            header["config"] = cfg.to_json();
            cp_out << header.dump() << '\n';
            for (const auto& [g, row] : done) cp_out << to_json(row).dump() << '\n';
        } else {
            cp_out.open(cfg.checkpoint_path, std::ios::trunc);
            if (!cp_out) throw IoError("cannot write checkpoint " + cfg.checkpoint_path);
            nlohmann::ordered_json header;
            header["config_hash"] = cfg.hash();
            header["config"] = cfg.to_json();
            cp_out << header.dump() << '\n';
        }
        cp_out.flush();
    }

    std::vector<CensusRow> rows;
    for (int g = 1; g <= cfg.g_max; ++g) {
        CensusRow row;
        if (auto it = done.find(g); it != done.end()) {
            row = it->second;
        } else {
            row = census_row(g, cfg);
            if (cp_out.is_open()) {
                cp_out << to_json(row).dump() << '\n';
                cp_out.flush();
                if (!cp_out) throw IoError("cannot write checkpoint " + cfg.checkpoint_path);
            }
        }
        rows.push_back(row);
        if (on_row && !on_row(rows.back())) break;
    }
    return rows;
}

inline void write_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
    out << census_csv_header() << '\n';
    for (const auto& r : rows) out << to_csv_line(r) << '\n';
}

inline void write_jsonl(std::ostream& out, const std::vector<CensusRow>& rows) {
    for (const auto& r : rows) out << to_json(r).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Published genus 16..25 values: N(g), NB2(g) and the printed ratio.

struct KomedaEntry {
    int g;
    std::uint64_t n;
    std::uint64_t nb2;
    double ratio;
};

inline constexpr std::array<KomedaEntry, 10> kKomedaTable{{
    {16, 4806, 2, 0.000416},
    {17, 8045, 6, 0.000746},
    {18, 13467, 15, 0.001114},
    {19, 22464, 31, 0.001380},
    {20, 37396, 67, 0.001792},
    {21, 62194, 145, 0.002331},
    {22, 103246, 293, 0.002838},
    {23, 170963, 542, 0.003170},
    {24, 282828, 1053, 0.003723},
    {25, 467224, 1944, 0.004161},
}};

struct KomedaDiff {
    struct Entry {
        int g;
        std::string column;  // "N" or "nb2"
        std::uint64_t expected;
        std::uint64_t actual;
    };
    std::vector<int> missing;  // genera absent from the rows
    std::vector<Entry> entries;

    bool coverage_error() const noexcept { return !missing.empty(); }
    bool ok() const noexcept { return missing.empty() && entries.empty(); }
};

inline KomedaDiff komeda_compare(const std::vector<CensusRow>& rows) {
    KomedaDiff d;
    for (const auto& e : kKomedaTable) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const CensusRow& r) { return r.g == e.g; });
        if (it == rows.end()) {
            d.missing.push_back(e.g);
            continue;
        }
        if (it->n != e.n) d.entries.push_back({e.g, "N", e.n, it->n});
        if (it->nb2 != e.nb2) d.entries.push_back({e.g, "nb2", e.nb2, it->nb2});
    }
    return d;
}

// ---------------------------------------------------------------------------

struct KaplanViolation {
    int m;
    int g;
    std::uint64_t lhs;  // N(m-1, g-1) + N(m-1, g-2)
    std::uint64_t rhs;  // N(m, g)
};

/// N(m-1,g-1) + N(m-1,g-2) = N(m,g) whenever 2g < 3m, for 3 <= m and
/// 2 <= g <= g_max. m = 2 is excluded because N(1, .) only covers N itself.
inline std::vector<KaplanViolation> kaplan_check(const CountMatrix& counts) {
    std::vector<KaplanViolation> out;
    for (int g = 2; g <= counts.g_max(); ++g) {
        for (int m = 3; m <= g + 2; ++m) {
            if (2 * g >= 3 * m) continue;
            const std::uint64_t lhs = counts.at(m - 1, g - 1) + counts.at(m - 1, g - 2);
            const std::uint64_t rhs = counts.at(m, g);
            if (lhs != rhs) out.push_back({m, g, lhs, rhs});
        }
    }
    return out;
}

inline std::vector<KaplanViolation> kaplan_check(int g_max, const EnumerationOptions& opt = {}) {
    if (g_max < 3) throw std::invalid_argument("kaplan_check: g_max must be >= 3");
    return kaplan_check(count_matrix(g_max, opt));
}

struct RatioRow {
    int g;
    double nb2;
    double nb_any;
    double a_eps;
    double phi_eps;
    double q;
    double r;
    double l;  // F > 3m
    double n_phi;
};

inline std::vector<RatioRow> ratio_report(const std::vector<CensusRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("ratio_report: no rows");
    std::vector<RatioRow> out;
    for (const auto& r : rows) {
        const double n = static_cast<double>(r.n);
        const auto frac = [n](std::uint64_t c) { return n > 0 ? static_cast<double>(c) / n : 0.0; };
        out.push_back({r.g, frac(r.nb2), frac(r.nb_any), frac(r.a_eps), frac(r.phi_eps), frac(r.q_eh), frac(r.r_2g3m),
                       frac(r.high), r.n_phi_ratio()});
    }
    return out;
}

inline void write_ratio_table(std::ostream& out, const std::vector<RatioRow>& rows) {
    out << "g,nb2_over_n,nb_any_over_n,a_eps_over_n,phi_eps_over_n,q_over_n,r_over_n,l_over_n,n_phi_ratio\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.g, r.nb2, r.nb_any, r.a_eps,
                      r.phi_eps, r.q, r.r, r.l, r.n_phi);
        out << buf;
    }
}

}  // namespace numsg

#endif  // NUMSG_CENSUS_HPP
