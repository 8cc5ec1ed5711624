#include "cli.hpp"

#include "thermo/acceptance.hpp"
#include "thermo/chords.hpp"
#include "thermo/error.hpp"
#include "thermo/io.hpp"
#include "thermo/models.hpp"
#include "thermo/processes.hpp"
#include "thermo/roots.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>

namespace thermo::cli {

namespace {

using io::fmt;
using io::json;

using Field = std::variant<double*, std::size_t*, std::string*, std::vector<double>*, std::vector<std::size_t>*>;

struct Binding {
    std::string key;
    Field field;
    std::string help;
};

const std::vector<std::string> kCommon{"out", "format"};

// Keys each subcommand accepts, on the command line and in --config files.
const std::map<std::string, std::vector<std::string>> kKeys{
    {"gibbs", {"system", "T", "q", "densities"}},
    {"chord", {"model", "t0", "t1", "c", "b", "lo", "hi", "nodes", "samples"}},
    {"relax", {"system", "q", "t0", "t1", "tau", "t_end", "dt0", "stride", "densities"}},
    {"isotopy", {"model", "t0", "t1", "c", "b", "tau", "steps", "paths", "lo", "hi", "slack"}},
    {"stirling", {"tc", "th", "vmin", "vmax", "samples"}},
    {"reduce", {"path", "k", "frozen", "zeroed", "reduce_t0", "mode", "slack"}},
    {"verify", {"seed"}},
};

std::vector<Binding> all_bindings(RunConfig& c) {
    return {
        {"model", &c.model, "gas or cw"},
        {"t0", &c.t0, "initial temperature"},
        {"t1", &c.t1, "final temperature"},
        {"c", &c.c, "background shift of the terminal Legendrian"},
        {"b", &c.b, "Curie-Weiss coupling"},
        {"lo", &c.lo, "left end of the q grid"},
        {"hi", &c.hi, "right end of the q grid"},
        {"nodes", &c.nodes, "chord search grid nodes"},
        {"samples", &c.samples, "samples per emitted curve"},
        {"tau", &c.tau, "schedule duration"},
        {"steps", &c.steps, "schedule time nodes"},
        {"paths", &c.paths, "number of followed points"},
        {"system", &c.system, "microstate system JSON"},
        {"densities", &c.densities, "densities CSV"},
        {"q", &c.q, "extensive coordinates, comma separated"},
        {"T", &c.T, "temperature"},
        {"t_end", &c.t_end, "relaxation end time"},
        {"dt0", &c.dt0, "largest relaxation step"},
        {"stride", &c.stride, "record every n-th accepted step"},
        {"tc", &c.tc, "cold temperature"},
        {"th", &c.th, "hot temperature"},
        {"vmin", &c.vmin, "smallest volume"},
        {"vmax", &c.vmax, "largest volume"},
        {"path", &c.path, "extended path CSV"},
        {"k", &c.k, "kept pairs"},
        {"frozen", &c.frozen, "frozen intensive indices, index=value,..."},
        {"zeroed", &c.zeroed, "zeroed extensive indices"},
        {"reduce_t0", &c.reduce_t0, "reduce temperature at this T0"},
        {"mode", &c.mode, "reduce or project"},
        {"slack", &c.slack, "tolerance of the non-negativity check"},
        {"seed", &c.seed, "random seed"},
        {"out", &c.out, "output directory"},
        {"format", &c.format, "summary format: csv (key=value text) or json"},
    };
}

std::vector<Binding> bindings_for(RunConfig& c, const std::string& sub) {
    auto keys = kKeys.at(sub);
    keys.insert(keys.end(), kCommon.begin(), kCommon.end());
    std::vector<Binding> out;
    for (auto& b : all_bindings(c)) {
        if (std::find(keys.begin(), keys.end(), b.key) != keys.end()) out.push_back(std::move(b));
    }
    return out;
}

std::string flag(const std::string& key) {
    std::string f = key;
    std::replace(f.begin(), f.end(), '_', '-');
    return "--" + f;
}

void apply_config(const std::string& file, const std::string& sub, RunConfig& cfg) {
    json j;
    try {
        j = json::parse(io::read_text_file(file));
    } catch (const json::parse_error& e) {
        throw DomainError("config: cannot parse " + file + ": " + e.what());
    }
    require(j.is_object(), "config: JSON object expected");
    auto bs = bindings_for(cfg, sub);
    for (const auto& [key, val] : j.items()) {
        auto it = std::find_if(bs.begin(), bs.end(), [&](const Binding& b) { return b.key == key; });
        require(it != bs.end(), "config: unknown key '" + key + "' for " + sub);
        try {
            std::visit(
                [&](auto* p) {
                    using T = std::remove_pointer_t<decltype(p)>;
                    if constexpr (std::is_same_v<T, std::size_t>) {
                        require(val.is_number_unsigned(), "config: '" + key + "' must be a non-negative integer");
                    }
                    if constexpr (std::is_same_v<T, std::vector<std::size_t>>) {
                        for (const auto& e : val) {
                            require(e.is_number_unsigned(), "config: '" + key + "' entries must be non-negative integers");
                        }
                    }
                    *p = val.get<T>();
                },
                it->field);
        } catch (const json::exception& e) {
            throw DomainError("config: bad value for '" + key + "': " + e.what());
        }
    }
}

// Summary line: key=value pairs, or one JSON object with --format json.
class Summary {
public:
    template <class V>
    Summary& add(const std::string& key, const V& v) {
        items_.push_back({key, json(v)});
        return *this;
    }

    void print(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::object();
            for (const auto& [k, v] : items_) j[k] = v;
            os << j.dump() << '\n';
            return;
        }
        bool first = true;
        for (const auto& [k, v] : items_) {
            os << (first ? "" : " ") << k << '=';
            first = false;
            if (v.is_number_float()) {
                os << fmt(v.get<double>());
            } else if (v.is_string()) {
                os << v.get<std::string>();
            } else {
                os << v.dump();
            }
        }
        os << '\n';
    }

private:
    std::vector<std::pair<std::string, json>> items_;
};

// Files are collected first and written only after every computation succeeded.
struct Output {
    std::vector<std::pair<std::string, std::string>> files;
    Summary summary;
    int status = 0;

    void add(const std::string& name, const std::string& content) { files.emplace_back(name, content); }
};

std::string out_dir(const RunConfig& cfg) {
    if (!cfg.out.empty()) return cfg.out;
    if (const char* env = std::getenv("THERMO_OUT_DIR"); env && *env) return env;
    return ".";
}

void write_all(const Output& o, const std::string& dir) {
    if (o.files.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
    for (const auto& [name, content] : o.files) {
        io::write_text_file((std::filesystem::path(dir) / name).string(), content);
    }
}

template <class F>
std::string to_text(F&& f) {
    std::ostringstream os;
    f(os);
    return os.str();
}

std::string csv_row(std::initializer_list<double> xs) {
    std::string s;
    for (double x : xs) s += (s.empty() ? "" : ",") + fmt(x);
    return s + '\n';
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

Vec q_vector(const RunConfig& cfg, Eigen::Index n) {
    if (cfg.q.empty()) return Vec::Zero(n);
    require(static_cast<Eigen::Index>(cfg.q.size()) == n,
            "q has " + std::to_string(cfg.q.size()) + " entries, the system has n=" + std::to_string(n));
    return Eigen::Map<const Vec>(cfg.q.data(), n);
}

std::vector<Density> load_densities(const std::string& file) {
    std::ifstream is(file);
    require(static_cast<bool>(is), "cannot open " + file);
    return io::read_densities_csv(is);
}

double or_default(double v, double fallback) { return std::isnan(v) ? fallback : v; }

void resolve_defaults(const std::string& sub, RunConfig& cfg) {
    auto fill = [&](double t0, double t1, double c) {
        cfg.t0 = or_default(cfg.t0, t0);
        cfg.t1 = or_default(cfg.t1, t1);
        cfg.c = or_default(cfg.c, c);
    };
    if (sub == "relax") {
        fill(1.0, 2.0, 0.0);
    } else if (sub == "chord" || sub == "isotopy") {
        if (parse_model(cfg.model) == Model::gas) {
            fill(1.0, 5.0, 2.0);
        } else {
            fill(2.0, 10.0 / 3.0, 1.0);
        }
    }
}

// ------------------------------------------------------------------ gibbs

Output run_gibbs(const RunConfig& cfg) {
    require(!cfg.system.empty(), "gibbs: --system is required");
    const auto sys = io::load_system(cfg.system);
    const auto& sp = sys.space;
    const auto& h = sys.hamiltonian;
    const Vec q = q_vector(cfg, h.n());
    std::vector<Density> ds;
    if (!cfg.densities.empty()) {
        ds = load_densities(cfg.densities);
        for (const auto& d : ds) validate(sp, d);
    }

    const auto g = gibbs(sp, h, cfg.T, q);
    const double G = -cfg.T * g.log_z;
    const double S = entropy(sp, g.rho_g);
    const double U = internal_energy(sp, h, g.rho_g);
    const Vec p = pressures(sp, h, g.rho_g);
    const Vec E = h.energies(q);

    Output o;
    o.add("gibbs_state.csv", to_text([&](std::ostream& os) {
              os << "label,weight,energy,rho\n";
              for (Eigen::Index i = 0; i < sp.size(); ++i) {
                  os << sp.labels[i] << ',' << fmt(sp.weights[i]) << ',' << fmt(E[i]) << ',' << fmt(g.rho_g.rho[i])
                     << '\n';
              }
          }));
    json j = {{"T", cfg.T}, {"q", to_std(q)}, {"log_z", g.log_z}, {"G", G}, {"S", S}, {"U", U}, {"p", to_std(p)}};
    o.add("gibbs.json", j.dump(2) + '\n');
    if (!ds.empty()) {
        o.add("gibbs_densities.csv", to_text([&](std::ostream& os) {
                  os << "index,G,excess,tv\n";
                  for (std::size_t k = 0; k < ds.size(); ++k) {
                      const double Gk = free_energy(sp, h, cfg.T, q, ds[k]);
                      os << k << ',' << fmt(Gk) << ',' << fmt(Gk - G) << ',' << fmt(total_variation(sp, ds[k], g.rho_g))
                         << '\n';
                  }
              }));
    }
    o.summary.add("G*", G).add("S", S).add("U", U).add("log_z", g.log_z).add("p", to_std(p));
    return o;
}

// ------------------------------------------------------------------ chord

FrontFunction zero_front(double lo, double hi) {
    return {[](double) { return 0.0; }, [](double) { return 0.0; }, lo, hi};
}

const Chord* nearest(const std::vector<Chord>& chords, double q) {
    const Chord* best = nullptr;
    for (const auto& ch : chords) {
        if (!best || std::abs(ch.q - q) < std::abs(best->q - q)) best = &ch;
    }
    return best;
}

void check_cross(const Chord* found, double q, double lo, double hi) {
    if (q <= lo || q >= hi) return;
    if (!found || std::abs(found->q - q) > 1e-8) {
        throw NumericalError("chord: generic finder missed the closed-form chord at " + fmt(q));
    }
}

std::string chords_csv(const std::vector<Chord>& chords) {
    return to_text([&](std::ostream& os) { io::write_chords_csv(os, chords); });
}

Output run_chord_gas(const RunConfig& cfg) {
    const Chord ch = gas_chord(cfg.t0, cfg.t1, cfg.c);
    const double P0 = -ch.q;
    const double v = ch.p;
    const double lo = or_default(cfg.lo, std::min(-4.0, 4.0 * ch.q));
    const double hi = or_default(cfg.hi, std::min(0.0, cfg.c) - 0.05);
    require(lo < hi, "chord: need lo < hi");
    require(hi < std::min(0.0, cfg.c), "chord: gas grid must stay below min(0, c)");
    require(cfg.samples >= 2, "chord: samples must be >= 2");

    const auto f0 = gas_front({cfg.t0, 0.0});
    const auto f1 = gas_front({cfg.t1, cfg.c});
    const auto psi = difference_front(Model::gas, cfg.t0, cfg.t1, cfg.c);
    ChordSearchOptions opt;
    opt.grid_nodes = cfg.nodes;
    const auto chords = find_chords(zero_front(-std::numeric_limits<double>::infinity(), 0.0), psi, lo, hi, opt);
    const Chord* hit = nearest(chords, ch.q);
    check_cross(hit, ch.q, lo, hi);

    const auto grid = roots::linspace(lo, hi, cfg.samples);
    Output o;
    o.add("fig1_curves.csv", to_text([&](std::ostream& os) {
              os << "q,p_initial,p_terminal,z_initial,z_terminal\n";
              for (double q : grid) os << csv_row({q, f0.slope(q), f1.slope(q), f0.value(q), f1.value(q)});
          }));
    o.add("fig1_chord.csv", "q,p,z_start,z_end\n" + csv_row({ch.q, ch.p, ch.z_start, ch.z_end}));
    o.add("fig3_fronts.csv", to_text([&](std::ostream& os) {
              os << "qbar,f0,psi\n";
              for (double q : grid) os << csv_row({q, 0.0, psi.value(q)});
          }));
    o.add("fig3_chord.csv", "qbar,z_start,z_end\n" + csv_row({ch.q, 0.0, psi.value(ch.q)}));
    o.add("chords.json", io::to_json(chords).dump(2) + '\n');
    o.add("chords.csv", chords_csv(chords));

    o.summary.add("model", "gas").add("P0", P0).add("v", v).add("length", ch.length).add("direction", ch.direction);
    o.summary.add("finder_chords", chords.size());
    if (hit) o.summary.add("finder_qbar", hit->q).add("finder_length", hit->length);
    return o;
}

Output run_chord_cw(const RunConfig& cfg) {
    const Chord ch = cw_chord(cfg.t0, cfg.t1, cfg.c, cfg.b);
    const double Qs = ch.q + cfg.b * ch.p;
    // wide enough for psi to settle on its asymptotes +-c
    const double half = std::max(10.0, 15.0 * cfg.t1 + std::abs(cfg.c));
    const double lo = or_default(cfg.lo, Qs - half);
    const double hi = or_default(cfg.hi, Qs + half);
    require(lo < hi, "chord: need lo < hi");
    require(cfg.samples >= 3, "chord: samples must be >= 3");

    const auto psi = difference_front(Model::cw, cfg.t0, cfg.t1, cfg.c);
    ChordSearchOptions opt;
    opt.grid_nodes = cfg.nodes;
    const auto chords = find_chords(zero_front(-std::numeric_limits<double>::infinity(),
                                               std::numeric_limits<double>::infinity()),
                                    psi, lo, hi, opt);
    const Chord* hit = nearest(chords, Qs);
    check_cross(hit, Qs, lo, hi);
    const auto mx = front_argmax(psi, lo, hi);

    const auto grid = roots::linspace(lo, hi, cfg.samples);
    const auto pgrid = roots::linspace(-1.0, 1.0, cfg.samples);
    auto legendrian = [&](const CurieWeissParams& par) {
        return to_text([&](std::ostream& os) {
            os << "q,p,z,S\n";
            for (std::size_t i = 1; i + 1 < pgrid.size(); ++i) {
                const auto pt = cw_point_from_p(pgrid[i], par);
                os << csv_row({pt.q, pt.p, pt.z, cw_entropy(pt.p)});
            }
        });
    };

    Output o;
    o.add("fig4_fronts.csv", to_text([&](std::ostream& os) {
              os << "Q,f0,psi\n";
              for (double x : grid) os << csv_row({x, 0.0, psi.value(x)});
          }));
    o.add("fig4_chord.csv", "Q,z_start,z_end\n" + csv_row({Qs, 0.0, psi.value(Qs)}));
    o.add("cw_initial.csv", legendrian({cfg.t0, 0.0, cfg.b}));
    o.add("cw_terminal.csv", legendrian({cfg.t1, cfg.c, cfg.b}));
    o.add("chords.json", io::to_json(chords).dump(2) + '\n');
    o.add("chords.csv", chords_csv(chords));

    o.summary.add("model", "cw").add("Q*", Qs).add("p", ch.p).add("q", ch.q).add("length", ch.length);
    o.summary.add("direction", ch.direction).add("psi_max_at", mx.x).add("finder_chords", chords.size());
    if (hit) o.summary.add("finder_Q", hit->q).add("finder_length", hit->length);
    return o;
}

Output run_chord(const RunConfig& cfg) {
    return parse_model(cfg.model) == Model::gas ? run_chord_gas(cfg) : run_chord_cw(cfg);
}

// ------------------------------------------------------------------ relax

Output run_relax(const RunConfig& cfg) {
    require(!cfg.system.empty(), "relax: --system is required");
    const auto sys = io::load_system(cfg.system);
    const auto& sp = sys.space;
    const auto& h = sys.hamiltonian;
    const Vec q = q_vector(cfg, h.n());
    const Schedule sched = Schedule::linear(cfg.t0, cfg.t1, 0.0, 0.0, cfg.tau, 2);

    Density rho0{Vec::Constant(sp.size(), 1.0 / sp.weights.sum())};
    if (!cfg.densities.empty()) {
        const auto ds = load_densities(cfg.densities);
        require(!ds.empty(), "relax: densities file is empty");
        rho0 = ds.front();
    }
    validate(sp, rho0);
    const double rate = relaxation_rate_bound(sp, h, cfg.t1, q);
    const double t_end = or_default(cfg.t_end, cfg.tau + 50.0 / rate);
    RelaxOptions opt;
    opt.dt0 = cfg.dt0;
    opt.record_stride = cfg.stride;

    const auto tr = fokker_planck_relax(sp, h, q, sched, rho0, t_end, opt);
    const auto target = gibbs(sp, h, cfg.t1, q).rho_g;
    const double tv = total_variation(sp, tr.densities.back(), target);
    double decay = std::nan("");
    try {
        decay = estimate_decay_rate(tr);
    } catch (const NumericalError&) {
        // converged below resolution before the second half of the trace
    }

    Output o;
    o.add("relax_trace.csv", to_text([&](std::ostream& os) {
              os << "t,T,G,lambda\n";
              for (std::size_t i = 0; i < tr.t_grid.size(); ++i) {
                  os << fmt(tr.t_grid[i]) << ',' << fmt(tr.temperatures[i]) << ',' << fmt(tr.G_values[i]) << ',';
                  if (i < tr.form_values.size()) os << fmt(tr.form_values[i]);
                  os << '\n';
              }
          }));
    o.add("relax_densities.csv", to_text([&](std::ostream& os) { io::write_densities_csv(os, tr.densities); }));
    o.add("relax_path.csv", to_text([&](std::ostream& os) { io::write_path_csv(os, tr.reduced_path); }));
    json j = {{"t_end", t_end},
              {"accepted_steps", tr.accepted_steps},
              {"rejected_steps", tr.rejected_steps},
              {"min_form_value", tr.min_form_value},
              {"max_G_increase", tr.max_G_increase},
              {"max_mass_error", tr.max_mass_error},
              {"min_density", tr.min_density},
              {"tv_to_gibbs", tv},
              {"rate_bound", rate},
              {"decay_rate", std::isnan(decay) ? json(nullptr) : json(decay)}};
    o.add("relax.json", j.dump(2) + '\n');

    o.summary.add("steps", tr.accepted_steps).add("rejected", tr.rejected_steps).add("G_end", tr.G_values.back());
    o.summary.add("tv_to_gibbs", tv).add("min_lambda", tr.min_form_value).add("mass_error", tr.max_mass_error);
    return o;
}

// ------------------------------------------------------------------ isotopy

Output run_isotopy(const RunConfig& cfg) {
    const Model model = parse_model(cfg.model);
    const Schedule sched = Schedule::linear(cfg.t0, cfg.t1, 0.0, cfg.c, cfg.tau, cfg.steps);
    require(cfg.paths >= 1, "isotopy: paths must be >= 1");
    double lo, hi;
    if (model == Model::gas) {
        lo = or_default(cfg.lo, -3.0);
        hi = or_default(cfg.hi, std::min(0.0, cfg.c) - 0.1);
    } else {
        lo = or_default(cfg.lo, -0.9);
        hi = or_default(cfg.hi, 0.9);
    }
    require(lo <= hi, "isotopy: need lo <= hi");
    const auto xs = cfg.paths == 1 ? std::vector<double>{lo} : roots::linspace(lo, hi, cfg.paths);

    IsotopyOptions opt;
    opt.b = cfg.b;
    opt.slack = cfg.slack;
    const auto tr = run_slow_isotopy(model, sched, xs, opt);

    Output o;
    json paths = json::array();
    std::size_t nonneg = 0;
    for (std::size_t i = 0; i < tr.paths.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "isotopy_path_%03zu.csv", i);
        o.add(name, to_text([&](std::ostream& os) { io::write_path_csv(os, tr.paths[i]); }));
        paths.push_back({{"file", name}, {"x", xs[i]}, {"report", io::to_json(tr.reports[i])}});
        if (tr.reports[i].verdict == Verdict::nonnegative) ++nonneg;
    }
    json j = {{"model", to_string(model)},
              {"schedule", {{"t0", cfg.t0}, {"t1", cfg.t1}, {"bg0", 0.0}, {"bg1", cfg.c}, {"tau", cfg.tau}, {"steps", cfg.steps}}},
              {"temperature_nondecreasing", sched.temperature_nondecreasing()},
              {"admissible", sched.admissible()},
              {"max_slice_residual", tr.max_slice_residual},
              {"paths", paths}};
    o.add("isotopy.json", j.dump(2) + '\n');

    o.summary.add("model", to_string(model)).add("paths", tr.paths.size()).add("nonnegative", nonneg);
    o.summary.add("slice_residual", tr.max_slice_residual);
    return o;
}

// ------------------------------------------------------------------ stirling

Output run_stirling(const RunConfig& cfg) {
    const auto tr = stirling_cycle(cfg.tc, cfg.th, cfg.vmin, cfg.vmax, cfg.samples);
    Output o;
    json segs = json::array();
    std::string poly = "segment,q,p,z\n";
    for (const auto& s : tr.segments) {
        const std::string file = "stirling_" + s.name + ".csv";
        o.add(file, to_text([&](std::ostream& os) {
                  os << "q,p,z\n";
                  for (const auto& pt : s.points) os << csv_row({pt.q[0], pt.p[0], pt.z});
              }));
        for (const auto& pt : s.points) poly += s.name + ',' + csv_row({pt.q[0], pt.p[0], pt.z});
        segs.push_back({{"name", s.name},
                        {"file", file},
                        {"temperature_start", s.temperature_start},
                        {"temperature_end", s.temperature_end},
                        {"form_sign", to_string(s.form_sign)},
                        {"delta_G", s.delta_G},
                        {"chord", s.chord ? io::to_json(*s.chord) : json(nullptr)},
                        {"background_shift", s.background_shift},
                        {"temperature_decreasing", s.temperature_decreasing},
                        {"admissible", !s.temperature_decreasing}});
    }
    o.add("stirling_polyline.csv", poly);
    json j = {{"segments", segs}, {"closure_residual", tr.closure_residual}, {"total_delta_G", tr.total_delta_G}};
    o.add("stirling.json", j.dump(2) + '\n');

    o.summary.add("segments", tr.segments.size()).add("closure_residual", tr.closure_residual);
    o.summary.add("total_delta_G", tr.total_delta_G);
    return o;
}

// ------------------------------------------------------------------ reduce

std::vector<std::pair<std::size_t, double>> parse_frozen(const std::string& s) {
    std::vector<std::pair<std::size_t, double>> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        require(eq != std::string::npos, "frozen: expected index=value, got '" + item + "'");
        try {
            std::size_t used = 0;
            const long idx = std::stol(item.substr(0, eq), &used);
            require(idx >= 0 && used == eq, "frozen: bad index in '" + item + "'");
            const double val = std::stod(item.substr(eq + 1));
            out.push_back({static_cast<std::size_t>(idx), val});
        } catch (const std::logic_error&) {
            throw DomainError("frozen: cannot parse '" + item + "'");
        }
    }
    return out;
}

Output run_reduce(const RunConfig& cfg) {
    require(!cfg.path.empty(), "reduce: --path is required");
    require(cfg.mode == "reduce" || cfg.mode == "project", "reduce: mode must be reduce or project");
    std::ifstream is(cfg.path);
    require(static_cast<bool>(is), "cannot open " + cfg.path);
    const auto ext = io::read_extended_path_csv(is);

    ReductionSpec spec;
    spec.k = cfg.k;
    spec.frozen = parse_frozen(cfg.frozen);
    spec.zeroed = cfg.zeroed;
    if (!std::isnan(cfg.reduce_t0)) spec.T0 = cfg.reduce_t0;
    spec.validate(static_cast<std::size_t>(ext.points.front().dim()));

    const auto red = cfg.mode == "reduce" ? reduce(ext, spec) : project(ext, spec);
    const auto ext_report = check_path_nonnegative(ext, cfg.slack);
    const auto red_report = check_path_nonnegative(red, cfg.slack);
    const auto vel = estimate_velocities(ext);
    double min_A = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ext.size(); ++i) min_A = std::min(min_A, admissibility_decrement(ext.points[i], vel[i], spec));

    Output o;
    o.add("reduced.csv", to_text([&](std::ostream& os) { io::write_path_csv(os, red); }));
    json j = {{"mode", cfg.mode},
              {"extended", io::to_json(ext_report)},
              {"reduced", io::to_json(red_report)},
              {"min_admissibility_decrement", min_A}};
    o.add("reduce.json", j.dump(2) + '\n');

    o.summary.add("samples", red.size()).add("extended", io::to_json(ext_report)["verdict"].get<std::string>());
    o.summary.add("min_A", min_A).add("reduced", io::to_json(red_report)["verdict"].get<std::string>());
    o.summary.add("min_lambda", red_report.min_form_value);
    return o;
}

// ------------------------------------------------------------------ verify

Output run_verify(const RunConfig& cfg, std::ostream& out) {
    const auto results = acceptance::run_all(cfg.seed);
    const bool ok = acceptance::print_report(out, results);
    Output o;
    o.status = ok ? 0 : 2;
    return o;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string config_file;
    CLI::App app{"Contact-geometric thermodynamics toolkit", "thermo"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> about{
        {"gibbs", "Gibbs state and free energy of a finite system"},
        {"chord", "Reeb chord between two Legendrians (gas|cw)"},
        {"relax", "Fokker-Planck relaxation under a temperature ramp"},
        {"isotopy", "slow process through a family of Legendrians"},
        {"stirling", "ideal-gas Stirling cycle"},
        {"reduce", "reduce an extended path and check the contact forms"},
        {"verify", "run the acceptance suite"},
    };
    for (const auto& [name, keys] : kKeys) {
        auto* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--config", config_file, "JSON file overriding flags");
        for (auto& b : bindings_for(cfg, name)) {
            if (name == "chord" && b.key == "model") {
                sub->add_option("model", cfg.model, b.help)->required();
                continue;
            }
            std::visit(
                [&](auto* p) {
                    auto* opt = sub->add_option(flag(b.key), *p, b.help);
                    using T = std::remove_pointer_t<decltype(p)>;
                    if constexpr (std::is_same_v<T, std::vector<double>> || std::is_same_v<T, std::vector<std::size_t>>) {
                        opt->delimiter(',');
                    }
                },
                b.field);
        }
        subs[name] = sub;
    }

    if (args.empty() || kKeys.count(args.front()) == 0) {
        if (!args.empty() && (args.front() == "--help" || args.front() == "-h")) {
            out << app.help();
            return 0;
        }
        err << (args.empty() ? "missing subcommand" : "unknown subcommand '" + args.front() + "'") << "\n\n"
            << app.help();
        return 1;
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << subs.at(args.front())->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    const std::string sub = args.front();
    try {
        if (!config_file.empty()) apply_config(config_file, sub, cfg);
        require(cfg.format == "csv" || cfg.format == "json", "format must be csv or json");
        resolve_defaults(sub, cfg);
        Output o;
        if (sub == "gibbs") o = run_gibbs(cfg);
        else if (sub == "chord") o = run_chord(cfg);
        else if (sub == "relax") o = run_relax(cfg);
        else if (sub == "isotopy") o = run_isotopy(cfg);
        else if (sub == "stirling") o = run_stirling(cfg);
        else if (sub == "reduce") o = run_reduce(cfg);
        else o = run_verify(cfg, out);
        write_all(o, out_dir(cfg));
        if (sub != "verify") o.summary.print(out, cfg.format);
        return o.status;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace thermo::cli
