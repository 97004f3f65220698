#include "rotvac_cli/cli.hpp"

#include "rotvac_cli/config.hpp"

#include "rotvac/angular_reduction.hpp"
#include "rotvac/bogolubov.hpp"
#include "rotvac/em_correlations.hpp"
#include "rotvac/errors.hpp"
#include "rotvac/kinematics.hpp"
#include "rotvac/monte_carlo.hpp"
#include "rotvac/oracles.hpp"
#include "rotvac/scalar_correlations.hpp"
#include "rotvac/spectral_regularization.hpp"
#include "rotvac/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace rotvac::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

/// Everything a subcommand reports; serialized once at the end.
struct Payload {
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::string method = "closed_form";
    double error_estimate = 0.0;
    std::vector<std::string> warnings;
    bool ok = true;
};

struct KinematicsArgs {
    double omega = 1.0;
    double radius = 0.5;
};

struct TimeArgs {
    double tau1 = 0.0;
    double tau2 = 1.0;
};

ordered_json describe(const CorrelationResult& r)
{
    ordered_json j;
    j["value"] = r.value;
    j["method"] = std::string(to_string(r.method));
    j["error_estimate"] = r.error_estimate;
    return j;
}

void take_warnings(Payload& p, const CorrelationResult& r)
{
    p.warnings.insert(p.warnings.end(), r.metadata.warnings.begin(), r.metadata.warnings.end());
}

ordered_json describe(const DiscreteCFResult& d)
{
    ordered_json j;
    j["vacuum"] = {{"formal_integral", d.vacuum.formal_integral},
                   {"coefficient", d.vacuum.coefficient},
                   {"abel_value", d.vacuum.abel_value}};
    j["thermal"] = describe(d.thermal);
    j["total"] = describe(d.total);
    return j;
}

ordered_json kinematics_echo(const RotationKinematics& kin)
{
    return {{"omega", kin.omega()},
            {"radius", kin.radius()},
            {"beta", kin.beta()},
            {"gamma", kin.gamma()}};
}

ordered_json event_json(const SpacetimeEvent& e)
{
    std::string tag = "lab";
    if (e.frame.kind == FrameKind::lambda) {
        tag = "lambda";
    } else if (e.frame.kind == FrameKind::mu) {
        tag = "mu";
    }
    return {{"x1", e.x1}, {"x2", e.x2}, {"x3", e.x3}, {"t", e.t},
            {"frame", tag}, {"frame_tau", e.frame.tau}};
}

DiscreteOptions discrete_options(const RunConfig& cfg, DiscreteNormalization norm)
{
    DiscreteOptions o;
    o.normalization = norm;
    o.convention = cfg.brace_convention;
    o.quadrature = cfg.quadrature;
    return o;
}

std::unique_ptr<RegulatorLadder> maybe_ladder(const std::vector<double>& v)
{
    if (v.empty()) {
        return nullptr;
    }
    return std::make_unique<RegulatorLadder>(v);
}

void add_kinematics(CLI::App* sub, KinematicsArgs& k)
{
    sub->add_option("--omega", k.omega, "angular velocity")->capture_default_str();
    sub->add_option("--radius", k.radius, "orbit radius")->capture_default_str();
}

void add_times(CLI::App* sub, TimeArgs& t)
{
    sub->add_option("--tau1", t.tau1, "first proper time")->capture_default_str();
    sub->add_option("--tau2", t.tau2, "second proper time")->capture_default_str();
}

void write_json(std::ostream& out, const std::string& command, const RunConfig& cfg,
                const Payload& p)
{
    ordered_json j;
    j["command"] = command;
    j["status"] = p.ok ? "ok" : "fail";
    j["units"] = to_string(cfg.units);
    j["seed"] = cfg.seed;
    j["inputs"] = p.inputs;
    j["results"] = p.results;
    j["method"] = p.method;
    j["error_estimate"] = p.error_estimate;
    j["warnings"] = p.warnings;
    out << j.dump(2) << '\n';
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch;
        if (ch == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

/// Same document as write_json, flattened to key,value rows. Numbers are
/// serialized by the same routine, so both formats carry identical digits.
void write_csv(std::ostream& out, const std::string& command, const RunConfig& cfg,
               const Payload& p)
{
    std::ostringstream tmp;
    write_json(tmp, command, cfg, p);
    const json flat = json::parse(tmp.str()).flatten();
    out << "key,value\n";
    for (const auto& [key, value] : flat.items()) {
        const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        out << csv_field(key) << ',' << csv_field(text) << '\n';
    }
}

void write_error(std::ostream& out, const std::string& command, const std::string& type,
                 const std::string& message, const std::string& diagnostics)
{
    ordered_json j;
    j["command"] = command;
    j["status"] = "error";
    j["error"] = {{"type", type}, {"message", message}, {"diagnostics", diagnostics}};
    out << j.dump(2) << '\n';
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"rotvac: correlations of zero-point fields at a rotating detector", "rotvac"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string units = "natural";
    std::string config_path;
    std::string format = "json";
    std::uint64_t seed = default_seed;
    app.add_option("--units", units, "natural or si")
        ->check(CLI::IsMember({"natural", "si"}))
        ->capture_default_str();
    app.add_option("--config", config_path, "RunConfig JSON file");
    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed, "seed for every random draw")
                         ->capture_default_str();

    RunConfig cfg;
    Payload payload;
    std::function<void()> action;
    std::string command;

    // cf-em
    KinematicsArgs em_kin;
    TimeArgs em_t;
    std::string em_component = "E1E1";
    std::string em_spectrum = "continuous";
    bool em_oracle = false;
    bool em_coincident = false;
    auto* cf_em = app.add_subcommand("cf-em", "electromagnetic two-point function");
    add_kinematics(cf_em, em_kin);
    add_times(cf_em, em_t);
    cf_em->add_option("--component", em_component, "E1E1, E2E2, E3E3, E1E2, H1H1, ...")
        ->capture_default_str();
    cf_em->add_option("--spectrum", em_spectrum, "continuous or discrete")
        ->check(CLI::IsMember({"continuous", "discrete"}))
        ->capture_default_str();
    cf_em->add_flag("--oracle", em_oracle, "also run the independent numerical oracle");
    cf_em->add_flag("--coincident", em_coincident,
                    "E1E1 coincidence limit with dt = tau2 - tau1 (lab time)");
    cf_em->callback([&] {
        command = "cf-em";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(em_kin.omega, em_kin.radius, k);
            const auto spec = CFComponentSpec::parse(em_component);
            payload.inputs = kinematics_echo(kin);
            payload.inputs["tau1"] = em_t.tau1;
            payload.inputs["tau2"] = em_t.tau2;
            payload.inputs["component"] = spec.name();
            payload.inputs["spectrum"] = em_spectrum;
            if (em_coincident) {
                if (!(spec == CFComponentSpec{})) {
                    throw UnsupportedError("the coincidence limit is available for E1E1 only");
                }
                const CorrelationResult r = cf_e11_coincident(kin, em_t.tau2 - em_t.tau1, k);
                payload.results = describe(r);
                payload.inputs["limit"] = "coincident";
                return;
            }
            if (em_spectrum == "continuous") {
                const CorrelationResult r =
                    cf_continuous(spec, em_t.tau1, em_t.tau2, kin, k, cfg.brace_convention);
                take_warnings(payload, r);
                payload.results = describe(r);
                if (em_oracle) {
                    const auto ladder = maybe_ladder(cfg.epsilon_ladder);
                    const CorrelationResult o = regulated_cf_quadrature(
                        spec, em_t.tau1, em_t.tau2, kin, ladder.get(), k, cfg.quadrature);
                    payload.results["oracle"] = describe(o);
                    payload.results["relative_difference"] =
                        o.value == 0.0 ? std::abs(r.value) : std::abs(r.value / o.value - 1.0);
                }
                return;
            }
            const DiscreteOptions opts = discrete_options(cfg, cfg.discrete_normalization);
            const DiscreteCFResult d = cf_discrete(spec, em_t.tau1, em_t.tau2, kin, opts, k);
            take_warnings(payload, d.total);
            payload.inputs["normalization"] = to_string(opts.normalization);
            payload.results = describe(d);
            payload.method = std::string(to_string(d.thermal.method));
            payload.error_estimate = d.thermal.error_estimate;
            if (em_oracle) {
                const Extrapolated o = mode_sum_cf(spec, em_t.tau1, em_t.tau2, kin, opts, k);
                payload.results["oracle"] = {{"value", o.value},
                                             {"method", "damped_mode_sum"},
                                             {"error_estimate", o.error}};
            }
        };
    });

    // cf-scalar
    KinematicsArgs sc_kin;
    TimeArgs sc_t;
    std::string sc_spectrum = "continuous";
    bool sc_oracle = false;
    auto* cf_sc = app.add_subcommand("cf-scalar", "massless scalar two-point function");
    add_kinematics(cf_sc, sc_kin);
    add_times(cf_sc, sc_t);
    cf_sc->add_option("--spectrum", sc_spectrum, "continuous or discrete")
        ->check(CLI::IsMember({"continuous", "discrete"}))
        ->capture_default_str();
    cf_sc->add_flag("--oracle", sc_oracle, "also run the independent numerical oracle");
    cf_sc->callback([&] {
        command = "cf-scalar";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(sc_kin.omega, sc_kin.radius, k);
            payload.inputs = kinematics_echo(kin);
            payload.inputs["tau1"] = sc_t.tau1;
            payload.inputs["tau2"] = sc_t.tau2;
            payload.inputs["spectrum"] = sc_spectrum;
            if (sc_spectrum == "continuous") {
                const CorrelationResult r = scalar_cf_continuous(sc_t.tau1, sc_t.tau2, kin, k);
                payload.results = describe(r);
                payload.results["interval"] = scalar_interval(sc_t.tau2 - sc_t.tau1, kin);
                if (sc_oracle) {
                    const auto ladder = maybe_ladder(cfg.epsilon_ladder);
                    const CorrelationResult o = regulated_cf_quadrature(
                        ScalarField{}, sc_t.tau1, sc_t.tau2, kin, ladder.get(), k,
                        cfg.quadrature);
                    payload.results["oracle"] = describe(o);
                    payload.results["relative_difference"] = std::abs(r.value / o.value - 1.0);
                }
                return;
            }
            const DiscreteOptions opts = discrete_options(cfg, cfg.scalar_normalization);
            const DiscreteCFResult d = scalar_cf_discrete(sc_t.tau1, sc_t.tau2, kin, opts, k);
            payload.inputs["normalization"] = to_string(opts.normalization);
            payload.results = describe(d);
            payload.method = std::string(to_string(d.thermal.method));
            payload.error_estimate = d.thermal.error_estimate;
            if (sc_oracle) {
                const Extrapolated o =
                    mode_sum_cf(ScalarField{}, sc_t.tau1, sc_t.tau2, kin, opts, k);
                payload.results["oracle"] = {{"value", o.value},
                                             {"method", "damped_mode_sum"},
                                             {"error_estimate", o.error}};
            }
        };
    });

    // spectrum
    double sp_omega = 1.0;
    int sp_nmax = 20;
    double sp_temperature = -1.0;
    double sp_phase = 0.0;
    int sp_power = 3;
    bool sp_oracle = false;
    auto* spectrum = app.add_subcommand(
        "spectrum", "discrete frequencies n*Omega with Planck weights at T_rot");
    spectrum->add_option("--omega", sp_omega, "angular velocity")->capture_default_str();
    spectrum->add_option("--n-max", sp_nmax, "highest mode index")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    spectrum->add_option("--temperature", sp_temperature,
                         "temperature of the weights (default T_rot)");
    auto* phase_opt =
        spectrum->add_option("--phase", sp_phase, "also split sum n^p cos(nF) at this F");
    spectrum->add_option("--power", sp_power, "p in {1, 3}")
        ->check(CLI::IsMember({1, 3}))
        ->capture_default_str();
    spectrum->add_flag("--oracle", sp_oracle, "with --phase, also run the damped series");
    spectrum->callback([&] {
        command = "spectrum";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const double T = sp_temperature >= 0.0 ? sp_temperature : t_rot(sp_omega, k).t_rot;
            payload.inputs = {{"omega", sp_omega}, {"n_max", sp_nmax}, {"temperature", T}};
            ordered_json rows = ordered_json::array();
            for (int n = 1; n <= sp_nmax; ++n) {
                const double w = n * sp_omega;
                const double weight =
                    T > 0.0 ? 1.0 / std::expm1(k.hbar() * w / (k.k_b() * T)) : 0.0;
                rows.push_back({{"n", n},
                                {"omega", w},
                                {"thermal_weight", weight},
                                {"zero_point_energy", 0.5 * k.hbar() * w},
                                {"thermal_energy", k.hbar() * w * weight}});
            }
            payload.results["t_rot"] = t_rot(sp_omega, k).t_rot;
            payload.results["modes"] = rows;
            if (phase_opt->count() > 0) {
                const AbelPlanaSplit s = regularized_sum(sp_power, sp_phase);
                payload.inputs["phase"] = sp_phase;
                payload.inputs["power"] = sp_power;
                payload.results["regularized_sum"] = {
                    {"total_closed_form", s.total_closed_form},
                    {"vacuum_coefficient", s.vacuum_coefficient},
                    {"vacuum_value", s.vacuum_value},
                    {"thermal_sign", s.thermal_sign},
                    {"thermal_value", s.thermal_value}};
                if (sp_oracle) {
                    const auto ladder = maybe_ladder(cfg.eta_ladder);
                    const Extrapolated e = abel_summed_series(sp_power, sp_phase, ladder.get());
                    payload.results["regularized_sum"]["damped_series"] = e.value;
                    payload.results["regularized_sum"]["damped_series_error"] = e.error;
                    payload.method = "damped_series";
                    payload.error_estimate = e.error;
                }
            }
        };
    });

    // energy-density
    KinematicsArgs ed_kin;
    auto* energy = app.add_subcommand("energy-density",
                                      "regularized energy density at the rotating detector");
    add_kinematics(energy, ed_kin);
    energy->callback([&] {
        command = "energy-density";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(ed_kin.omega, ed_kin.radius, k);
            payload.inputs = kinematics_echo(kin);
            const EnergyDensity e = reg_energy_density(kin, k);
            payload.results = {{"value", e.value},
                               {"w_rad", e.w_rad},
                               {"anisotropy", e.anisotropy},
                               {"t_rot", e.t_rot},
                               {"spectral_value", reg_energy_density_spectral(kin, k, cfg.quadrature)}};
        };
    });

    // bogolubov
    KinematicsArgs bg_kin;
    double k1 = 1.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double delta_t = 1.5707963267948966;
    double bg_t = 0.0;
    auto* bogo = app.add_subcommand("bogolubov", "support and prefactor of beta_kk'");
    add_kinematics(bogo, bg_kin);
    bogo->add_option("--k1", k1)->capture_default_str();
    bogo->add_option("--k2", k2)->capture_default_str();
    bogo->add_option("--k3", k3)->capture_default_str();
    bogo->add_option("--delta-t", delta_t, "rotation angle Omega*t")->capture_default_str();
    bogo->add_option("--t", bg_t, "lab time of the phase")->capture_default_str();
    bogo->callback([&] {
        command = "bogolubov";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(bg_kin.omega, bg_kin.radius, k);
            const ModeVector kp{k1, k2, k3};
            payload.inputs = kinematics_echo(kin);
            payload.inputs["kprime"] = {k1, k2, k3};
            payload.inputs["delta_t"] = delta_t;
            payload.inputs["t"] = bg_t;
            const ModeVector ks = support_momentum(kp, delta_t, kin);
            const Vec3 res = bogolubov_constraints(ks, kp, delta_t, kin);
            const std::complex<double> pre = beta_prefactor(kp, delta_t, bg_t, kin);
            payload.results["support_momentum"] = {ks.k1, ks.k2, ks.k3};
            payload.results["constraint_residual"] = {res[0], res[1], res[2]};
            payload.results["beta_prefactor"] = {{"re", pre.real()}, {"im", pre.imag()}};
            try {
                payload.results["particle_number"] = particle_number(kp, delta_t, kin);
            } catch (const UnsupportedError& e) {
                payload.results["particle_number"] = nullptr;
                payload.warnings.emplace_back(e.what());
            }
        };
    });

    // frames
    KinematicsArgs fr_kin;
    double t_frame = 0.0;
    std::vector<double> event{0.0, 0.0, 0.0, 0.0};
    auto* frames = app.add_subcommand("frames", "coordinates of a lab event in the lambda and mu frames");
    add_kinematics(frames, fr_kin);
    frames->add_option("--t-frame", t_frame, "lab time labelling the frames")->capture_default_str();
    frames->add_option("--event", event, "lab event x1 x2 x3 t")->expected(4);
    frames->callback([&] {
        command = "frames";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(fr_kin.omega, fr_kin.radius, k);
            payload.inputs = kinematics_echo(kin);
            payload.inputs["t_frame"] = t_frame;
            payload.inputs["event"] = event;
            const SpacetimeEvent lab{event[0], event[1], event[2], event[3], FrameTag::lab()};
            payload.results["detector"] = event_json(detector_worldline_lab(t_frame, kin));
            payload.results["lambda"] = event_json(lambda_frame_coords(lab, t_frame, kin));
            payload.results["mu"] = event_json(mu_frame_coords(lab, t_frame, kin));
        };
    });

    // verify
    std::string suite = "all";
    std::string profile = "default";
    auto* verify = app.add_subcommand("verify", "run the oracle-versus-closed-form suite");
    verify->add_option("--suite", suite, "all or a comma list of criterion ids")
        ->capture_default_str();
    verify->add_option("--tolerance-profile", profile, "default or quick")
        ->check(CLI::IsMember({"default", "quick"}))
        ->capture_default_str();
    verify->callback([&] {
        command = "verify";
        action = [&] {
            VerifyOptions opts;
            opts.profile = profile == "quick" ? ToleranceProfile::quick : ToleranceProfile::standard;
            if (seed_opt->count() > 0 || cfg.seed != default_seed) {
                opts.seed = cfg.seed;
            }
            if (suite != "all") {
                std::stringstream ss(suite);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    int id = 0;
                    try {
                        id = std::stoi(item);
                    } catch (const std::exception&) {
                        throw CLI::ValidationError("--suite", "bad criterion id '" + item + "'");
                    }
                    if (id < 1 || id > criterion_count) {
                        throw CLI::ValidationError("--suite", "criterion id out of range");
                    }
                    opts.criteria.push_back(id);
                }
            }
            payload.inputs = {{"suite", suite}, {"tolerance_profile", profile}};
            payload.method = "verification";
            ordered_json list = ordered_json::array();
            int failures = 0;
            for (const CriterionResult& r : run_verification(opts)) {
                list.push_back({{"id", r.id},
                                {"title", r.title},
                                {"passed", r.passed},
                                {"detail", r.detail},
                                {"seconds", r.seconds}});
                failures += r.passed ? 0 : 1;
            }
            payload.results["criteria"] = list;
            payload.results["failures"] = failures;
            payload.ok = failures == 0;
        };
    });

    // mc
    KinematicsArgs mc_kin;
    TimeArgs mc_t;
    mc_t.tau2 = 0.01;
    std::string mc_component = "E1E1";
    McFieldSpec mc_spec;
    std::size_t n_theta = 8;
    std::size_t n_phi = 16;
    auto* mc = app.add_subcommand("mc", "Monte-Carlo random-phase zero-point field");
    add_kinematics(mc, mc_kin);
    add_times(mc, mc_t);
    mc->add_option("--component", mc_component)->capture_default_str();
    mc->add_option("--n-max", mc_spec.n_max)->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--ensembles", mc_spec.ensembles)->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--n-theta", n_theta)->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--n-phi", n_phi)->check(CLI::PositiveNumber)->capture_default_str();
    mc->callback([&] {
        command = "mc";
        action = [&] {
            const PhysicalConstants k = cfg.constants();
            const auto kin = RotationKinematics::make(mc_kin.omega, mc_kin.radius, k);
            const auto spec = CFComponentSpec::parse(mc_component);
            mc_spec.direction_grid = SphereGrid::gauss_product(n_theta, n_phi);
            mc_spec.seed = cfg.seed;
            payload.inputs = kinematics_echo(kin);
            payload.inputs["tau1"] = mc_t.tau1;
            payload.inputs["tau2"] = mc_t.tau2;
            payload.inputs["component"] = spec.name();
            payload.inputs["n_max"] = mc_spec.n_max;
            payload.inputs["ensembles"] = mc_spec.ensembles;
            payload.inputs["n_theta"] = n_theta;
            payload.inputs["n_phi"] = n_phi;
            payload.inputs["normalization"] = to_string(cfg.discrete_normalization);
            const CorrelationResult r = mc_zero_point_cf(spec, mc_t.tau1, mc_t.tau2, kin, mc_spec,
                                                         cfg.discrete_normalization, k);
            DiscreteOptions opts = discrete_options(cfg, cfg.discrete_normalization);
            const double ref = cf_discrete_truncated(spec, mc_t.tau1, mc_t.tau2, kin,
                                                     mc_spec.direction_grid, mc_spec.n_max, opts, k);
            payload.method = std::string(to_string(r.method));
            payload.error_estimate = r.error_estimate;
            payload.results = describe(r);
            payload.results["truncated_reference"] = ref;
            payload.results["z_score"] =
                r.error_estimate > 0.0 ? (r.value - ref) / r.error_estimate : 0.0;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        cfg = config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
        if (app.get_option("--units")->count() > 0 || config_path.empty()) {
            cfg.units = parse_units(units);
        }
        if (seed_opt->count() > 0) {
            cfg.seed = seed;
        }
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "rotvac: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "rotvac: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        action();
    } catch (const CLI::ValidationError& e) {
        err << "rotvac: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericError& e) {
        write_error(out, command, "numeric", e.what(), e.diagnostics());
        return exit_numeric;
    } catch (const DivergenceError& e) {
        write_error(out, command, "divergence", e.what(), "");
        return exit_domain;
    } catch (const DomainError& e) {
        write_error(out, command, "domain", e.what(), "");
        return exit_domain;
    } catch (const UnsupportedError& e) {
        write_error(out, command, "unsupported", e.what(), "");
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        write_error(out, command, "domain", e.what(), "");
        return exit_domain;
    }

    if (format == "csv") {
        write_csv(out, command, cfg, payload);
    } else {
        write_json(out, command, cfg, payload);
    }
    return payload.ok ? exit_ok : exit_numeric;
}

} // namespace rotvac::cli
