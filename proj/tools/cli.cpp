#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "certsolve/control.hpp"
#include "certsolve/errors.hpp"
#include "certsolve/paramspace.hpp"
#include "certsolve/polytext.hpp"
#include "certsolve/zdsolve.hpp"
#include "systemfile.hpp"

namespace certsolve::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultBits = 64;

int decimal_digits(int bits) { return std::max(3, static_cast<int>(std::ceil(bits * 0.30103)) + 1); }

// `label` becomes the first key when given, e.g. {"var": "x", "lo": ...}.
Json interval_json(const MPInterval& iv, int bits, const char* key = nullptr, const std::string& label = {}) {
    Json out = Json::object();
    if (key) out[key] = label;
    out["lo"] = iv.lo().to_string();
    out["hi"] = iv.hi().to_string();
    out["decimal"] = iv.to_decimal(decimal_digits(bits));
    return out;
}

Json strings(const std::vector<MultiPoly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

Json point_json(const std::vector<Rational>& pt) {
    Json out = Json::array();
    for (const auto& x : pt) out.push_back(x.to_string());
    return out;
}

int precision_of(const SystemFile& f, int flag) {
    if (flag >= 0) return flag;
    if (auto p = f.scalar("precision")) return std::stoi(*p);
    return kDefaultBits;
}

void require_no_params(const SystemFile& f, const char* cmd) {
    if (!f.params.empty()) throw UnsupportedInput(std::string(cmd) + " does not take parameters");
}

Json box_json(const SolutionBox& box, const std::vector<std::string>& vars, int bits) {
    Json coords = Json::array();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        coords.push_back(interval_json(box.coords[i], bits, "var", vars[i]));
    }
    return Json{{"certified", box.certified}, {"coords", std::move(coords)}};
}

Json cmd_solve(const SystemFile& f, int flag) {
    require_no_params(f, "solve");
    const int bits = precision_of(f, flag);
    const auto res = solve_system(block_polys(f, "eqs"), f.vars, bits);
    Json out = Json::array();
    for (const auto& b : res.boxes) out.push_back(box_json(b, f.vars, bits));
    return out;
}

Json cmd_rur(const SystemFile& f) {
    require_no_params(f, "rur");
    const GroebnerBasis gb = buchberger(block_polys(f, "eqs"), f.vars, MonomialOrder::degrevlex());
    if (!is_zero_dimensional(gb)) throw UnsupportedInput("system is not zero-dimensional");
    if (gb.is_unit()) return Json{{"vars", f.vars}, {"consistent", false}};
    const RUR rur = compute_rur(gb, separating_element(gb));
    Json coords = Json::array();
    for (const auto& c : rur.coords) coords.push_back(c.to_string());
    return Json{{"vars", rur.vars},
                {"consistent", true},
                {"separating", point_json(rur.separating)},
                {"ft", rur.ft.to_string()},
                {"ft_bar", rur.ft_bar.to_string()},
                {"coords", std::move(coords)}};
}

Json cmd_dv(const SystemFile& f) {
    const auto dv = discriminant_variety(block_polys(f, "eqs"), f.vars, f.params);
    return Json{{"params", dv.params}, {"polys", strings(dv.polys)}};
}

Json cmd_cad(const SystemFile& f) {
    if (f.params.empty()) throw UnsupportedInput("cad needs a params section");
    const CadTree cad = open_cad(block_polys(f, "eqs", f.params), f.params);
    Json levels = Json::array();
    for (std::size_t k = 0; k < cad.po.size(); ++k) {
        Json pts = Json::array();
        for (const auto& p : cad.pt[k]) pts.push_back(point_json(p));
        levels.push_back(Json{{"polys", strings(cad.po[k])}, {"points", std::move(pts)}});
    }
    Json samples = Json::array();
    for (const auto& p : sample_points(cad)) samples.push_back(point_json(p));
    return Json{{"params", f.params}, {"levels", std::move(levels)}, {"samples", std::move(samples)}};
}

std::string plot_value(const Rational& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.to_double();
    return os.str();
}

Json cmd_stability(const SystemFile& f, bool parametric, std::string plot_path, const std::string& input) {
    if (f.vars.size() != 2) throw UnsupportedInput("stability needs exactly two variables");
    const auto eqs = block_polys(f, "eqs");
    if (eqs.size() != 1) throw UnsupportedInput("stability needs exactly one polynomial");
    if (!parametric) {
        require_no_params(f, "stability without --parametric");
        return Json{{"stable", stability_2d(eqs[0], f.vars[0], f.vars[1])}};
    }
    const StabilityVerdict v = stability_parametric(eqs[0], f.params, f.vars[0], f.vars[1]);
    Json stable = Json::array(), unstable = Json::array();
    for (const auto& c : v.cells) (c.stable ? stable : unstable).push_back(point_json(c.point));
    if (plot_path.empty()) plot_path = std::filesystem::path(input).replace_extension(".plot.dat").string();
    std::ofstream plot(plot_path);
    if (!plot) throw InvalidInput("cannot write " + plot_path);
    for (const auto& c : v.cells) {
        for (const auto& x : c.point) plot << plot_value(x) << ' ';
        plot << (c.stable ? "stable" : "unstable") << '\n';
    }
    return Json{{"params", v.params},
                {"boundary", strings(v.boundary)},
                {"stable", std::move(stable)},
                {"unstable", std::move(unstable)},
                {"plot_file", plot_path}};
}

Json cmd_hinf(const SystemFile& f, std::optional<int> precision) {
    const std::string var = f.scalar("var").value_or("s");
    TransferMatrix g;
    const auto& rows = f.block("matrix");
    if (rows.empty()) throw UnsupportedInput("hinf needs a matrix section");
    const auto lit = f.block_lines.find("matrix");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        g.emplace_back();
        std::stringstream ss(rows[r]);
        std::string entry;
        while (std::getline(ss, entry, ',')) {
            try {
                g.back().push_back(parse_ratfunc(entry, {var}));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lit->second[r]);
            }
        }
    }
    if (!precision)
        if (auto p = f.scalar("precision")) precision = std::stoi(*p);
    const HinfResult res = hinf_norm_detailed(g, var, precision);
    const int bits = precision.value_or(static_cast<int>(res.norm.precision()));
    return Json{{"hinf", interval_json(res.norm, bits)}, {"curve", res.curve.to_string()}};
}

Json cmd_refine(const SystemFile& f, const std::string& point, int flag) {
    require_no_params(f, "refine");
    const int bits = precision_of(f, flag);
    std::vector<Rational> x0;
    std::stringstream ss(point);
    std::string item;
    while (std::getline(ss, item, ',')) x0.push_back(parse_number(item));
    if (x0.size() != f.vars.size()) throw InvalidInput("--point needs one value per variable");
    const SolutionBox box = interval_newton(block_polys(f, "eqs"), f.vars, x0, bits);
    return box_json(box, f.vars, bits);
}

Json cmd_identify(const SystemFile& f, int flag, bool nonnegative) {
    OdeModel model;
    model.states = f.states;
    model.params = f.params;
    std::vector<std::string> ring = f.states;
    ring.insert(ring.end(), f.params.begin(), f.params.end());
    const auto out = f.scalar("output");
    if (!out) throw UnsupportedInput("identify needs an output section");
    model.output = parse_poly(*out, ring);
    model.dynamics = block_polys(f, "dynamics", ring);
    const int h = std::stoi(f.scalar("h").value_or("-1"));
    if (h < 0) throw UnsupportedInput("identify needs h >= 0");
    const Rational t0 = parse_number(f.scalar("t0").value_or("0"));
    std::vector<DataPoint> data;
    for (const auto& line : f.block("data")) {
        std::istringstream ls(line);
        std::string t, y;
        if (!(ls >> t >> y)) throw ParseError("data lines need two columns: " + line);
        data.push_back({parse_number(t), parse_number(y)});
    }
    IdentificationOptions opts;
    opts.precision = precision_of(f, flag);
    opts.nonnegative_only = nonnegative;
    std::vector<Candidate> cands;
    if (!f.block("derivatives").empty()) {
        std::vector<Rational> ys;
        for (const auto& l : f.block("derivatives")) ys.push_back(parse_number(l));
        cands = identify_from_derivatives(model, h, ys, data, t0, opts);
    } else {
        cands = identify_parameters(model, data, h, t0, opts);
    }
    Json arr = Json::array();
    for (const auto& c : cands) {
        Json vals = Json::array();
        for (std::size_t i = 0; i < c.names.size(); ++i) {
            vals.push_back(interval_json(c.values[i], opts.precision, "name", c.names[i]));
        }
        arr.push_back(Json{{"values", std::move(vals)}, {"fit_residual", c.fit_residual}, {"certified", c.box.certified}});
    }
    return Json{{"candidates", std::move(arr)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified polynomial system solving and control computations"};
    app.require_subcommand(1);
    std::string file, point, plot;
    int precision = -1;
    std::optional<int> starting;
    bool parametric = false, nonnegative = false;

    auto add = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", file, "system file")->required();
        return c;
    };
    auto* solve = add("solve", "isolate the real solutions of a zero-dimensional system");
    solve->add_option("--precision", precision, "output precision in bits");
    auto* rur = add("rur", "rational univariate representation");
    auto* dv = add("dv", "discriminant variety with respect to the parameters");
    auto* cad = add("cad", "sample points of the open cells of the parameter space");
    auto* stab = add("stability", "structural stability of a 2-D denominator");
    stab->add_flag("--parametric", parametric, "classify every open cell of the parameter space");
    stab->add_option("--plot", plot, "plot-data output (default: <file>.plot.dat)");
    auto* hinf = add("hinf", "H-infinity norm enclosure");
    hinf->add_option("--starting-precision", starting, "binary precision of the returned interval");
    auto* refine = add("refine", "certify a solution near a point with interval Newton");
    refine->add_option("--point", point, "comma-separated coordinates")->required();
    refine->add_option("--precision", precision, "target width 2^-precision");
    auto* ident = add("identify", "parameter identification for an ODE model");
    ident->add_option("--precision", precision, "output precision in bits");
    ident->add_flag("--nonnegative", nonnegative, "keep candidates with nonnegative values only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }
    try {
        const SystemFile f = read_system_file(file);
        Json result;
        if (*solve) result = cmd_solve(f, precision);
        else if (*rur) result = cmd_rur(f);
        else if (*dv) result = cmd_dv(f);
        else if (*cad) result = cmd_cad(f);
        else if (*stab) result = cmd_stability(f, parametric, plot, file);
        else if (*hinf) result = cmd_hinf(f, starting);
        else if (*refine) result = cmd_refine(f, point, precision);
        else result = cmd_identify(f, precision, nonnegative);
        out << result.dump(2) << '\n';
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const UnsupportedInput& e) {
        err << "unsupported input: " << e.what() << '\n';
        return kUnsupported;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace certsolve::cli
