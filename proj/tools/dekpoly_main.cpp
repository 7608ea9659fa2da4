// Command-line front end: reproducible generation, verification, zero
// export, and factorization dumps for the exceptional-family library.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 degenerate family
// or singular construction, 4 identity violation (a mathematical check
// failed), 5 I/O failure.
#include <dekpoly/dekpoly.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dekpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIdentity = 4;
constexpr int kExitIo = 5;

// ---------------------------------------------------------------------------
// Configuration: built-in defaults, overridden by the environment (precision
// default only), then a JSON config file, then explicit flags.
// ---------------------------------------------------------------------------
struct RunConfig {
    std::string family = "hermite";     // hermite | chebyshev1 | custom
    std::string path;                   // descriptor file for custom families
    std::string backend;                // exact | numeric
    long precision_bits = 256;
    int max_n = 10;
    std::string output;                 // empty = stdout
    std::string format;                 // json | csv | pretty
    std::string precision_source = "builtin";
    long precision_default = 256;

    std::string backend_or_default() const {
        if (!backend.empty()) return backend;
        return family == "custom" ? "numeric" : "exact";
    }
};

// Flag values as given on the command line; presence is tracked so the
// precedence chain only overrides what was actually passed.
struct RawFlags {
    std::string config_path;
    std::string family, path, backend, format, output;
    long precision_bits = 0;
    int max_n = -1;
    bool has_family = false, has_path = false, has_backend = false;
    bool has_format = false, has_output = false, has_precision = false;
    bool has_max_n = false;
};

void add_common_flags(CLI::App* cmd, RawFlags& raw) {
    cmd->add_option("--config", raw.config_path, "JSON config file (flags win over it)");
    cmd->add_option("--family", raw.family, "hermite | chebyshev1 | custom")
        ->check(CLI::IsMember({"hermite", "chebyshev1", "custom"}));
    cmd->add_option("--path", raw.path, "descriptor file for --family custom");
    cmd->add_option("--backend", raw.backend, "exact | numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    cmd->add_option("--precision", raw.precision_bits, "working precision in bits (>= 64)");
    cmd->add_option("--max-n", raw.max_n, "largest family index to process");
    cmd->add_option("--output", raw.output, "output file (default: stdout)");
    cmd->add_option("--format", raw.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

void mark_presence(const CLI::App* cmd, RawFlags& raw) {
    raw.has_family = cmd->count("--family") > 0;
    raw.has_path = cmd->count("--path") > 0;
    raw.has_backend = cmd->count("--backend") > 0;
    raw.has_precision = cmd->count("--precision") > 0;
    raw.has_max_n = cmd->count("--max-n") > 0;
    raw.has_output = cmd->count("--output") > 0;
    raw.has_format = cmd->count("--format") > 0;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return j;
}

RunConfig resolve_config(const RawFlags& raw, const std::string& default_format) {
    RunConfig cfg;
    cfg.format = default_format;

    // Environment may override only the *default* precision.
    if (const char* env = std::getenv("DEKPOLY_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 64)
            throw ConfigError("DEKPOLY_PRECISION must be an integer >= 64, got '" +
                              std::string(env) + "'");
        cfg.precision_bits = v;
        cfg.precision_default = v;
        cfg.precision_source = "env";
    }

    if (!raw.config_path.empty()) {
        json j = read_json_file(raw.config_path);
        if (!j.is_object()) throw ConfigError(raw.config_path + ": config must be a JSON object");
        for (const auto& [key, val] : j.items()) {
            if (key == "family") cfg.family = val.get<std::string>();
            else if (key == "path") cfg.path = val.get<std::string>();
            else if (key == "backend") cfg.backend = val.get<std::string>();
            else if (key == "precision_bits") cfg.precision_bits = val.get<long>();
            else if (key == "max_n") cfg.max_n = val.get<int>();
            else if (key == "output") cfg.output = val.get<std::string>();
            else if (key == "format") cfg.format = val.get<std::string>();
            else throw ConfigError(raw.config_path + ": unknown config key '" + key + "'");
        }
    }

    if (raw.has_family) cfg.family = raw.family;
    if (raw.has_path) cfg.path = raw.path;
    if (raw.has_backend) cfg.backend = raw.backend;
    if (raw.has_precision) cfg.precision_bits = raw.precision_bits;
    if (raw.has_max_n) cfg.max_n = raw.max_n;
    if (raw.has_output) cfg.output = raw.output;
    if (raw.has_format) cfg.format = raw.format;

    if (cfg.family != "hermite" && cfg.family != "chebyshev1" && cfg.family != "custom")
        throw ConfigError("unknown family '" + cfg.family + "'");
    if (!cfg.backend.empty() && cfg.backend != "exact" && cfg.backend != "numeric")
        throw ConfigError("unknown backend '" + cfg.backend + "'");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "pretty")
        throw ConfigError("unknown format '" + cfg.format + "'");
    if (cfg.precision_bits < 64)
        throw ConfigError("precision_bits must be >= 64");
    if (cfg.max_n < 0)
        throw ConfigError("max_n must be nonnegative");
    if (cfg.family == "custom") {
        if (cfg.path.empty())
            throw ConfigError("--family custom needs --path <descriptor.json>");
        if (cfg.backend_or_default() == "exact")
            throw ConfigError("exact backend requires closed-form moments "
                              "(hermite or chebyshev1)");
    } else if (!cfg.path.empty()) {
        throw ConfigError("--path is only meaningful with --family custom");
    }
    return cfg;
}

// The resolved configuration and the defaults it was resolved against, both
// recorded in every report so a run can be reproduced from its output alone.
json config_json(const RunConfig& cfg, const std::string& default_format) {
    return json{
        {"config",
         {{"family", cfg.family},
          {"path", cfg.path},
          {"backend", cfg.backend_or_default()},
          {"precision_bits", cfg.precision_bits},
          {"max_n", cfg.max_n},
          {"output", cfg.output.empty() ? "stdout" : cfg.output},
          {"format", cfg.format}}},
        {"defaults",
         {{"family", "hermite"},
          {"backend", "exact (numeric for custom)"},
          {"precision_bits", cfg.precision_default},
          {"precision_source", cfg.precision_source},
          {"max_n", 10},
          {"output", "stdout"},
          {"format", default_format}}}};
}

std::string config_pretty(const RunConfig& cfg, const std::string& default_format) {
    std::ostringstream os;
    os << "# family=" << cfg.family << " backend=" << cfg.backend_or_default()
       << " precision_bits=" << cfg.precision_bits << " max_n=" << cfg.max_n
       << " format=" << cfg.format
       << " output=" << (cfg.output.empty() ? "stdout" : cfg.output);
    if (!cfg.path.empty()) os << " path=" << cfg.path;
    os << "\n# defaults: family=hermite backend=exact(numeric for custom)"
       << " precision_bits=" << cfg.precision_default << "(" << cfg.precision_source << ") max_n=10"
       << " format=" << default_format << " output=stdout\n";
    return os.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + cfg.output + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + cfg.output);
}

// ---------------------------------------------------------------------------
// Family dispatch.  The callback receives the family by value so transforms
// holding references to it stay valid for the whole command.
// ---------------------------------------------------------------------------
struct CustomDescriptor {
    std::vector<Rational> a;
    std::string mu0 = "1";
    std::string lambda0, nu0;
};

CustomDescriptor load_descriptor(const std::string& path) {
    json j = read_json_file(path);
    CustomDescriptor d;
    d.a = parse_custom_family(j);
    if (j.contains("mu0")) d.mu0 = j["mu0"].get<std::string>();
    if (!j.contains("lambda0") || !j.contains("nu0"))
        throw ConfigError(path + ": custom family needs base constants "
                          "'lambda0' and 'nu0' (decimal strings)");
    d.lambda0 = j["lambda0"].get<std::string>();
    d.nu0 = j["nu0"].get<std::string>();
    return d;
}

DekFamily<NumericMomentEngine> make_custom_family(const RunConfig& cfg) {
    CustomDescriptor d = load_descriptor(cfg.path);
    unsigned prec = static_cast<unsigned>(cfg.precision_bits);
    unsigned wp = prec + 64;
    std::vector<BigFloat> a;
    a.reserve(d.a.size());
    for (const auto& q : d.a) a.push_back(BigFloat::from_rational(q, wp));
    auto fam = ClassicalFamily<BigFloat>::custom(std::move(a));
    NumericMomentEngine eng(fam, BigFloat::from_string(d.mu0, wp),
                            BigFloat::from_string(d.lambda0, wp),
                            BigFloat::from_string(d.nu0, wp), prec);
    return DekFamily<NumericMomentEngine>(fam, eng);
}

template <class Fn>
int with_family(const RunConfig& cfg, Fn&& fn) {
    const std::string backend = cfg.backend_or_default();
    unsigned prec = static_cast<unsigned>(cfg.precision_bits);
    if (cfg.family == "hermite") {
        if (backend == "exact") return fn(make_gauss_exact_family());
        return fn(make_gauss_numeric_family(prec));
    }
    if (cfg.family == "chebyshev1") {
        if (backend == "exact") return fn(make_cheb_exact_family());
        return fn(make_cheb_numeric_family(prec));
    }
    return fn(make_custom_family(cfg));
}

// Numeric comparison tolerance: 2^(-3 prec / 8), far above honest roundoff
// and far below any genuine identity violation.
BigFloat numeric_tol(long prec) { return pow2(-(3 * prec) / 8, prec); }

template <class F>
std::string scalar_pretty(const F& v) {
    using dekpoly::to_string;
    return to_string(v);
}

// ---------------------------------------------------------------------------
// gen: R_n, S_n and the coefficient tables A_n, B_n, c_n, rho_n.
// ---------------------------------------------------------------------------
template <class Engine>
int run_gen(const RunConfig& cfg, DekFamily<Engine> fam) {
    using F = typename Engine::field_type;
    Christoffel<Engine> chr(fam);
    const int N = cfg.max_n;

    if (cfg.format == "json") {
        json out = config_json(cfg, "pretty");
        out["command"] = "gen";
        out["family"] = family_json(fam.source(), std::max(1, N));
        json R = json::array(), S = json::array(), coeff = json::array();
        for (int n = 0; n <= N; ++n) {
            R.push_back({{"n", n}, {"poly", poly_json(fam.R(n))}});
            S.push_back({{"n", n}, {"poly", poly_json(chr.S(n))}});
            json row{{"n", n}, {"c", scalar_json(chr.c(n))}, {"rho", scalar_json(chr.rho(n))}};
            if (n >= 1) {
                row["A"] = scalar_json(fam.A(n));
                row["B"] = scalar_json(fam.B(n));
            }
            coeff.push_back(row);
        }
        out["tables"] = {{"R", R}, {"S", S}, {"coefficients", coeff}};
        emit(cfg, out.dump(2) + "\n");
        return kExitOk;
    }

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "n,A,B,c,rho\n";
        for (int n = 0; n <= N; ++n) {
            os << n << ',' << (n >= 1 ? scalar_pretty(fam.A(n)) : std::string())
               << ',' << (n >= 1 ? scalar_pretty(fam.B(n)) : std::string())
               << ',' << '"' << scalar_pretty(chr.c(n)) << '"'
               << ',' << '"' << scalar_pretty(chr.rho(n)) << '"' << "\n";
        }
        emit(cfg, os.str());
        return kExitOk;
    }

    std::ostringstream os;
    os << "# gen\n" << config_pretty(cfg, "pretty");
    for (int n = 0; n <= N; ++n)
        os << "R_" << n << " = " << fam.R(n).pretty() << "\n";
    for (int n = 0; n <= N; ++n)
        os << "S_" << n << " = " << chr.S(n).pretty() << "\n";
    for (int n = 1; n <= N; ++n)
        os << "A_" << n << " = " << scalar_pretty(fam.A(n))
           << "   B_" << n << " = " << scalar_pretty(fam.B(n)) << "\n";
    for (int n = 0; n <= N; ++n)
        os << "c_" << n << " = " << scalar_pretty(chr.c(n)) << "\n";
    for (int n = 0; n <= N; ++n)
        os << "rho_" << n << " = " << scalar_pretty(chr.rho(n)) << "\n";
    emit(cfg, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: named identity suites with per-check margins.
// ---------------------------------------------------------------------------
struct SuiteCheck {
    std::string name;
    bool ok = true;
    std::string margin; // worst residual magnitude (decimal) or "exact"
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

void fold_margin(SuiteCheck& c, const BigFloat& mag) {
    if (c.margin.empty() || c.margin == "exact" ||
        !(mag < BigFloat::from_string(c.margin == "exact" ? "0" : c.margin, 128)))
        c.margin = mag.to_string(6);
}

template <class Engine>
SuiteReport suite_orthogonality(const DekFamily<Engine>& fam, const RunConfig& cfg) {
    SuiteReport rep{"orthogonality", {}};
    BigFloat tol = Engine::exact ? BigFloat::from_int(0, 64) : numeric_tol(cfg.precision_bits);
    VerifyReport v = dek_verify(fam, cfg.max_n, tol);
    for (const auto& c : v.checks) {
        SuiteCheck sc{c.name, c.ok, c.worst.empty() ? "exact" : c.worst, ""};
        if (c.at_n >= 0) sc.note = "worst at n=" + std::to_string(c.at_n) +
                                   (c.at_m >= 0 ? ", m=" + std::to_string(c.at_m) : "");
        rep.checks.push_back(sc);
    }
    return rep;
}

// |Delta| as a BigFloat for margin reporting, uniform over entry algebras.
template <class Engine>
BigFloat delta_magnitude(const Engine&, const typename Engine::delta_entry_type& d,
                         long prec) {
    using E = typename Engine::delta_entry_type;
    if constexpr (std::is_same_v<E, Polynomial<ComplexOf<Rational>>>) {
        BigFloat worst = BigFloat::from_int(0, prec);
        for (int l = 0; l <= d.degree(); ++l) {
            BigFloat a = abs_bigfloat(d.coeff(l), prec);
            if (worst < a) worst = a;
        }
        return worst;
    } else {
        return abs_bigfloat(d, prec);
    }
}

// Delta_3 == 4i, per entry algebra.
template <class Engine>
bool delta_is_4i(const Engine& eng, const typename Engine::delta_entry_type& d,
                 const BigFloat& tol, SuiteCheck& check) {
    using E = typename Engine::delta_entry_type;
    E want = eng.embed(ComplexOf<Rational>(Rational(0), Rational(4)));
    if constexpr (Engine::exact) {
        if constexpr (std::is_same_v<E, Polynomial<ComplexOf<Rational>>>) {
            return (d - want).degree() < 0;
        } else {
            E diff = d - want;
            return diff.re.is_zero() && diff.im.is_zero();
        }
    } else {
        BigFloat mag = abs_bigfloat(d - want, 128);
        fold_margin(check, mag);
        return mag < tol;
    }
}

template <class Engine>
SuiteReport suite_biortho(const DekFamily<Engine>& fam, const RunConfig& cfg) {
    using F = typename Engine::field_type;
    const Engine& eng = fam.engine();
    SuiteReport rep{"biortho", {}};
    BigFloat tol = Engine::exact ? BigFloat::from_int(0, 64) : numeric_tol(cfg.precision_bits);
    const int kmax = std::max(3, std::min(cfg.max_n, 12));

    SuiteCheck gap{"delta-degree-gap", true, "exact", "Delta_1 = Delta_2 = 0"};
    SuiteCheck d3{"delta-3", true, "exact", "Delta_3 = 4i"};
    SuiteCheck dnz{"delta-nonzero", true, "exact",
                   "Delta_k != 0 for 4 <= k <= " + std::to_string(kmax)};
    for (int k = 1; k <= kmax; ++k) {
        auto d = delta_k(eng, k);
        BigFloat mag = delta_magnitude(eng, d, cfg.precision_bits);
        if (k <= 2) {
            bool zero = Engine::exact ? detail::entry_is_zero<Engine>(d) : mag < tol;
            if (!zero) gap.ok = false;
            if (!Engine::exact) fold_margin(gap, mag);
        } else if (k == 3) {
            bool match = delta_is_4i(eng, d, tol, d3);
            if (!match) d3.ok = false;
        } else {
            bool nonzero = Engine::exact ? !detail::entry_is_zero<Engine>(d) : !(mag < tol);
            if (!nonzero) {
                dnz.ok = false;
                dnz.note = "Delta_" + std::to_string(k) + " vanished";
            }
        }
    }
    rep.checks.push_back(gap);
    rep.checks.push_back(d3);
    rep.checks.push_back(dnz);

    SuiteCheck bp{"biortho-poly-3", true, "exact", "biortho_poly(3) = x^3 + 3x"};
    Polynomial<F> p3 = biortho_poly(eng, 3);
    Polynomial<F> want = psi_basis<F>(1); // x^3 + 3x
    if constexpr (Engine::exact) {
        bp.ok = p3 == want;
    } else {
        Polynomial<F> diff = p3 - want;
        BigFloat worst = BigFloat::from_int(0, 64);
        for (int l = 0; l <= diff.degree(); ++l) {
            BigFloat a = abs_bigfloat(diff.coeff(l), 128);
            if (worst < a) worst = a;
        }
        bp.ok = worst < tol;
        fold_margin(bp, worst);
    }
    rep.checks.push_back(bp);

    SuiteCheck ann{"almost-biorthogonality", true, "exact",
                   "c^(j)(R_k) = 0 for j <= k+1, k <= " + std::to_string(std::min(cfg.max_n, 12))};
    for (int k = 0; k <= std::min(cfg.max_n, 12); ++k) {
        Polynomial<F> rk = fam.R(k);
        for (int j = 0; j <= k + 1; ++j) {
            auto val = biortho_functional(eng, j, rk);
            if constexpr (Engine::exact) {
                if (!detail::entry_is_zero<Engine>(val)) ann.ok = false;
            } else {
                BigFloat mag = abs_bigfloat(val, 128);
                if (!(mag < tol)) ann.ok = false;
                fold_margin(ann, mag);
            }
        }
    }
    rep.checks.push_back(ann);
    return rep;
}

template <class Engine>
SuiteReport suite_christoffel(const DekFamily<Engine>& fam, const RunConfig& cfg) {
    using F = typename Engine::field_type;
    SuiteReport rep{"christoffel", {}};
    Christoffel<Engine> chr(fam);
    BigFloat tol = Engine::exact ? BigFloat::from_int(0, 64) : numeric_tol(cfg.precision_bits);

    SuiteCheck rt{"round-trip", true, "exact",
                  "S_n + rho_n S_(n-2) = P_n for n <= " + std::to_string(cfg.max_n)};
    for (int n = 0; n <= cfg.max_n; ++n) {
        Polynomial<F> diff = chr.recover_P(n) - fam.source().P(n);
        if constexpr (Engine::exact) {
            if (diff.degree() >= 0) rt.ok = false;
        } else {
            BigFloat worst = BigFloat::from_int(0, 64);
            for (int l = 0; l <= diff.degree(); ++l) {
                BigFloat a = abs_bigfloat(diff.coeff(l), 128);
                if (worst < a) worst = a;
            }
            if (!(worst < tol)) rt.ok = false;
            fold_margin(rt, worst);
        }
    }
    rep.checks.push_back(rt);

    SuiteCheck cc{"classical-degeneracy", true, "exact",
                  "classical Christoffel C_n = 0 for n <= " +
                      std::to_string(std::min(cfg.max_n, 10))};
    for (int n = 0; n <= std::min(cfg.max_n, 10); ++n) {
        auto v = chr.classical_C(n);
        if constexpr (Engine::exact) {
            if (!(scalar_traits<F>::is_zero(v.re) && scalar_traits<F>::is_zero(v.im)))
                cc.ok = false;
        } else {
            BigFloat mag = abs_bigfloat(v, 128);
            if (!(mag < tol)) cc.ok = false;
            fold_margin(cc, mag);
        }
    }
    rep.checks.push_back(cc);

    SuiteCheck nops{"s-not-ops", true, "exact", ""};
    if (cfg.max_n >= 3) {
        auto w = chr.check_S_not_OPS(cfg.max_n, tol);
        nops.ok = w.first_inconsistent >= 0;
        nops.note = nops.ok ? "three-term recurrence fails first at n = " +
                                  std::to_string(w.first_inconsistent)
                            : "no inconsistency found (unexpected)";
    } else {
        nops.note = "skipped: needs max_n >= 3";
    }
    rep.checks.push_back(nops);
    return rep;
}

template <class Engine>
SuiteReport suite_factorization(const DekFamily<Engine>& fam, const RunConfig& cfg) {
    SuiteReport rep{"factorization", {}};
    Christoffel<Engine> chr(fam);
    int block = std::max(2, cfg.max_n);
    BigFloat tol = Engine::exact ? BigFloat::from_int(0, 64) : numeric_tol(cfg.precision_bits);
    FactorizationReport f = verify_factorization(chr, block, tol);
    SuiteCheck ba{"ba-equals-(J^2+I)^2", f.ba_matches,
                  f.ba_worst.is_zero() ? "exact" : f.ba_worst.to_string(6),
                  "leading " + std::to_string(block) + "x" + std::to_string(block) + " block"};
    SuiteCheck ab{"ab-acts-as-phi", f.ab_matches,
                  f.ab_worst.is_zero() ? "exact" : f.ab_worst.to_string(6),
                  "AB R_n = (x^2+1)^2 R_n for n < " + std::to_string(block)};
    SuiteCheck band{"ba-bandwidth", f.band_ok, "exact", "offsets within [-4, +4]"};
    rep.checks.push_back(ba);
    rep.checks.push_back(ab);
    rep.checks.push_back(band);
    return rep;
}

template <class Engine>
SuiteReport suite_zeros(const DekFamily<Engine>& fam, const RunConfig& cfg) {
    SuiteReport rep{"zeros", {}};
    Christoffel<Engine> chr(fam);
    long prec = cfg.precision_bits;

    SuiteCheck st{"s-zeros-real-simple-interior", true, "certified", ""};
    for (int n = 0; n <= cfg.max_n; ++n) {
        auto r = check_S_zero_structure(chr, n, prec);
        if (!r.ok) {
            st.ok = false;
            st.note = "failed at n = " + std::to_string(n) + ": " + r.detail;
            break;
        }
    }
    rep.checks.push_back(st);

    SuiteCheck il{"s-zeros-interlace", true, "", ""};
    BigFloat min_gap;
    bool have_gap = false;
    for (int n = 0; n + 1 <= cfg.max_n; ++n) {
        auto r = check_interlacing(chr, n, prec);
        if (!r.ok) {
            il.ok = false;
            il.note = "failed between n = " + std::to_string(n) + " and n+1";
            break;
        }
        if (n >= 1 && (!have_gap || r.min_gap < min_gap)) {
            min_gap = r.min_gap;
            have_gap = true;
        }
    }
    if (il.ok && have_gap) il.margin = min_gap.to_string(6);
    if (il.ok && !have_gap) il.margin = "vacuous";
    rep.checks.push_back(il);

    // Multiplicity profile of R_max_n: internal consistency of the certified
    // decomposition (counts resolve the full degree).
    if constexpr (Engine::exact) {
        SuiteCheck prof{"r-multiplicity-profile", true, "certified", ""};
        auto p = R_multiplicity_profile(fam, cfg.max_n, prec);
        int total = 0;
        for (const auto& [mult, cnt] : p.real_counts) total += mult * cnt;
        for (const auto& [mult, cnt] : p.complex_counts) total += mult * cnt;
        prof.ok = total == fam.R(cfg.max_n).degree();
        std::ostringstream os;
        os << "R_" << cfg.max_n << ": ";
        bool first = true;
        for (const auto& [mult, cnt] : p.real_counts) {
            os << (first ? "" : ", ") << cnt << " real of multiplicity " << mult;
            first = false;
        }
        for (const auto& [mult, cnt] : p.complex_counts) {
            os << (first ? "" : ", ") << cnt << " non-real of multiplicity " << mult;
            first = false;
        }
        prof.note = os.str();
        rep.checks.push_back(prof);
    }
    return rep;
}

std::string render_suite(const RunConfig& cfg, const SuiteReport& rep) {
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "check,ok,margin,note\n";
        for (const auto& c : rep.checks)
            os << c.name << ',' << (c.ok ? "1" : "0") << ',' << '"' << c.margin << '"'
               << ',' << '"' << c.note << '"' << "\n";
        return os.str();
    }
    if (cfg.format == "pretty") {
        std::ostringstream os;
        os << "# verify " << rep.suite << "\n" << config_pretty(cfg, "json");
        for (const auto& c : rep.checks)
            os << (c.ok ? "PASS" : "FAIL") << "  " << c.name << "  margin=" << c.margin
               << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
        os << (rep.ok() ? "OK" : "FAILED") << "\n";
        return os.str();
    }
    json out = config_json(cfg, "json");
    out["command"] = "verify";
    out["suite"] = rep.suite;
    out["ok"] = rep.ok();
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"margin", c.margin},
                          {"note", c.note}});
    out["checks"] = checks;
    return out.dump(2) + "\n";
}

template <class Engine>
int run_verify(const RunConfig& cfg, const std::string& suite, DekFamily<Engine> fam) {
    SuiteReport rep;
    if (suite == "orthogonality") rep = suite_orthogonality(fam, cfg);
    else if (suite == "biortho") rep = suite_biortho(fam, cfg);
    else if (suite == "christoffel") rep = suite_christoffel(fam, cfg);
    else if (suite == "factorization") rep = suite_factorization(fam, cfg);
    else if (suite == "zeros") rep = suite_zeros(fam, cfg);
    else throw ConfigError("unknown suite '" + suite + "'");
    emit(cfg, render_suite(cfg, rep));
    return rep.ok() ? kExitOk : kExitIdentity;
}

// ---------------------------------------------------------------------------
// zeros: root export for R_n or S_n.
// ---------------------------------------------------------------------------
template <class Engine>
int run_zeros(const RunConfig& cfg, char which, int n, DekFamily<Engine> fam) {
    using F = typename Engine::field_type;
    Christoffel<Engine> chr(fam);
    Polynomial<F> p = which == 'R' ? fam.R(n) : chr.S(n);
    ZeroSet zs = find_roots(p, cfg.precision_bits);
    zs.family = family_name(fam.source().kind());
    zs.kind = which;
    zs.n = n;

    if (cfg.format == "json") {
        json out = config_json(cfg, "csv");
        out["command"] = "zeros";
        out["zeros"] = zeros_json(zs);
        emit(cfg, out.dump(2) + "\n");
    } else if (cfg.format == "pretty") {
        std::ostringstream os;
        os << "# zeros " << which << "_" << n << "\n" << config_pretty(cfg, "csv");
        os << "method=" << root_method_name(zs.method)
           << " distinct=" << zs.roots.size()
           << " total=" << zs.total_multiplicity() << "\n";
        for (size_t k = 0; k < zs.roots.size(); ++k)
            os << "x = (" << zs.roots[k].re.to_string(32) << ", "
               << zs.roots[k].im.to_string(32) << "i)  multiplicity "
               << zs.multiplicities[k] << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, zeros_csv(zs));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// factor-dump: the banded operators and the factorization report.
// ---------------------------------------------------------------------------
template <class Engine>
int run_factor_dump(const RunConfig& cfg, DekFamily<Engine> fam) {
    Christoffel<Engine> chr(fam);
    int block = std::max(2, cfg.max_n);
    int size = block + 4;
    auto A = transform_A(fam, size);
    auto B = transform_B(chr, size);
    auto J = jacobi_operator(fam.source(), size);
    auto I = BandedOperator<typename Engine::field_type>::identity(size);
    auto JsqI = J * J + I;
    auto target = JsqI * JsqI;
    auto BA = B * A;
    BigFloat tol = Engine::exact ? BigFloat::from_int(0, 64) : numeric_tol(cfg.precision_bits);
    FactorizationReport f = verify_factorization(chr, block, tol);

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "operator,row,col,value\n";
        auto dump = [&os](const char* name, const auto& op) {
            for (const auto& [r, c, v] : op.triplets())
                os << name << ',' << r << ',' << c << ',' << '"' << scalar_pretty(v)
                   << '"' << "\n";
        };
        dump("A", A);
        dump("B", B);
        dump("BA", BA);
        dump("(J^2+I)^2", target);
        emit(cfg, os.str());
    } else if (cfg.format == "pretty") {
        std::ostringstream os;
        os << "# factor-dump (block " << block << ", operators built at " << size
           << ")\n" << config_pretty(cfg, "json");
        os << "BA matches (J^2+I)^2: " << (f.ba_matches ? "yes" : "no")
           << "  worst " << (f.ba_worst.is_zero() ? "exact" : f.ba_worst.to_string(6)) << "\n";
        os << "AB acts as (x^2+1)^2: " << (f.ab_matches ? "yes" : "no")
           << "  worst " << (f.ab_worst.is_zero() ? "exact" : f.ab_worst.to_string(6)) << "\n";
        os << "BA bandwidth within [-4, +4]: " << (f.band_ok ? "yes" : "no") << "\n";
        emit(cfg, os.str());
    } else {
        json out = config_json(cfg, "json");
        out["command"] = "factor-dump";
        out["block"] = block;
        out["operators"] = {{"A", operator_json(A)},
                            {"B", operator_json(B)},
                            {"BA", operator_json(BA)},
                            {"J2I_squared", operator_json(target)}};
        out["report"] = {{"ba_matches", f.ba_matches},
                         {"ab_matches", f.ab_matches},
                         {"band_ok", f.band_ok},
                         {"ba_worst", f.ba_worst.is_zero() ? "exact" : f.ba_worst.to_string(6)},
                         {"ab_worst", f.ab_worst.is_zero() ? "exact" : f.ab_worst.to_string(6)},
                         {"ok", f.ok}};
        emit(cfg, out.dump(2) + "\n");
    }
    return f.ok ? kExitOk : kExitIdentity;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional orthogonal family toolkit"};
    app.require_subcommand(1);

    RawFlags gen_raw, verify_raw, zeros_raw, dump_raw;
    std::string suite;
    std::string zeros_poly = "R";
    int zeros_n = 0;

    CLI::App* gen = app.add_subcommand("gen", "generate R_n, S_n and coefficient tables");
    add_common_flags(gen, gen_raw);

    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("suite", suite, "orthogonality | biortho | christoffel | factorization | zeros")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "biortho", "christoffel", "factorization", "zeros"}));
    add_common_flags(verify, verify_raw);

    CLI::App* zeros = app.add_subcommand("zeros", "export the zeros of R_n or S_n");
    zeros->add_option("--poly", zeros_poly, "R | S")->check(CLI::IsMember({"R", "S"}));
    zeros->add_option("--n", zeros_n, "family index")->required();
    add_common_flags(zeros, zeros_raw);

    CLI::App* dump = app.add_subcommand("factor-dump", "emit the Darboux factors and their check");
    add_common_flags(dump, dump_raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gen->parsed()) {
            mark_presence(gen, gen_raw);
            RunConfig cfg = resolve_config(gen_raw, "pretty");
            return with_family(cfg, [&](auto fam) { return run_gen(cfg, std::move(fam)); });
        }
        if (verify->parsed()) {
            mark_presence(verify, verify_raw);
            RunConfig cfg = resolve_config(verify_raw, "json");
            return with_family(cfg, [&](auto fam) {
                return run_verify(cfg, suite, std::move(fam));
            });
        }
        if (zeros->parsed()) {
            mark_presence(zeros, zeros_raw);
            RunConfig cfg = resolve_config(zeros_raw, "csv");
            if (zeros_n < 0) throw ConfigError("--n must be nonnegative");
            return with_family(cfg, [&](auto fam) {
                return run_zeros(cfg, zeros_poly[0], zeros_n, std::move(fam));
            });
        }
        mark_presence(dump, dump_raw);
        RunConfig cfg = resolve_config(dump_raw, "json");
        return with_family(cfg, [&](auto fam) { return run_factor_dump(cfg, std::move(fam)); });
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DegenerateError& e) {
        std::cerr << "degenerate family at n = " << e.degree << ": " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return kExitIdentity;
    }
}
