#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "certsolve/control.hpp"
#include "certsolve/errors.hpp"
#include "certsolve/groebner.hpp"
#include "certsolve/zdsolve.hpp"

namespace certsolve {

namespace {

// Formal derivation: D s_k = s_{k+1} for every state s, parameters are constants.
class Derivation {
public:
    explicit Derivation(const std::vector<std::string>& states) : states_(states) {}

    MultiPoly apply(const MultiPoly& p) const {
        MultiPoly out(Rational(0), {});
        for (const auto& v : p.support()) {
            auto it = index_.find(v);
            if (it == index_.end()) continue;
            const auto& [state, k] = it->second;
            out += p.partial_derivative(v) * MultiPoly::variable(symbol(state, k + 1));
        }
        return out;
    }

    std::string symbol(const std::string& state, int k) const {
        std::string s = derivative_symbol(state, k);
        index_.emplace(s, std::make_pair(state, k));
        return s;
    }

private:
    std::vector<std::string> states_;
    mutable std::map<std::string, std::pair<std::string, int>> index_;
};

void check_model(const OdeModel& model) {
    if (model.dynamics.size() != model.states.size())
        throw InvalidInput("model needs one dynamics polynomial per state");
    if (!model.controls.empty()) throw UnsupportedInput("models with known inputs are not supported");
}

// Model polynomial with each state x replaced by its order-0 symbol.
MultiPoly at_order_zero(const MultiPoly& p, const OdeModel& model, const Derivation& d) {
    MultiPoly out = p;
    for (const auto& s : model.states) out = out.substitute(s, MultiPoly::variable(d.symbol(s, 0)));
    return out;
}

std::size_t term_count(const std::vector<MultiPoly>& ps) {
    std::size_t n = 0;
    for (const auto& p : ps) n += p.term_count();
    return n;
}

std::vector<MultiPoly> prolong(const OdeModel& model, int h, std::size_t max_terms) {
    check_model(model);
    if (h < 0) throw InvalidInput("prolongation order must be non-negative");
    Derivation d(model.states);
    std::vector<MultiPoly> outputs{at_order_zero(model.output, model, d)};
    for (int j = 1; j <= h; ++j) outputs.push_back(d.apply(outputs.back()));
    std::vector<std::vector<MultiPoly>> flows;
    for (const auto& f : model.dynamics) {
        std::vector<MultiPoly> chain{at_order_zero(f, model, d)};
        for (int j = 1; j < h; ++j) chain.push_back(d.apply(chain.back()));
        flows.push_back(std::move(chain));
    }

    std::vector<std::string> ring;
    for (int j = 0; j <= h; ++j) ring.push_back(derivative_symbol(model.output_name, j));
    ring.insert(ring.end(), model.params.begin(), model.params.end());
    for (int j = 0; j <= h; ++j)
        for (const auto& s : model.states) ring.push_back(d.symbol(s, j));

    std::vector<MultiPoly> eqs;
    for (int j = 0; j <= h; ++j)
        eqs.push_back((MultiPoly::variable(derivative_symbol(model.output_name, j)) - outputs[static_cast<std::size_t>(j)]).with_vars(ring));
    for (int j = 0; j < h; ++j)
        for (std::size_t s = 0; s < model.states.size(); ++s)
            eqs.push_back((MultiPoly::variable(d.symbol(model.states[s], j + 1)) - flows[s][static_cast<std::size_t>(j)]).with_vars(ring));
    if (term_count(eqs) > max_terms) throw UnsupportedInput("prolonged system exceeds the size budget");
    return eqs;
}

// Successive time derivatives of the output for given parameter and initial values.
std::vector<Rational> model_output_derivatives(const OdeModel& model, int h, const Assignment& point) {
    Derivation d(model.states);
    Assignment at = point;
    std::vector<std::vector<MultiPoly>> flows;
    for (const auto& f : model.dynamics) {
        std::vector<MultiPoly> chain{at_order_zero(f, model, d)};
        for (int j = 1; j < h; ++j) chain.push_back(d.apply(chain.back()));
        flows.push_back(std::move(chain));
    }
    for (int j = 0; j < h; ++j)
        for (std::size_t s = 0; s < model.states.size(); ++s)
            at[d.symbol(model.states[s], j + 1)] = flows[s][static_cast<std::size_t>(j)].evaluate(at);
    std::vector<Rational> out;
    MultiPoly g = at_order_zero(model.output, model, d);
    for (int j = 0; j <= h; ++j) {
        out.push_back(g.evaluate(at));
        g = d.apply(g);
    }
    return out;
}

double taylor_residual(const std::vector<Rational>& derivs, const std::vector<DataPoint>& data, const Rational& t0) {
    double total = 0.0;
    for (const auto& pt : data) {
        Rational y(0), term(1);
        const Rational dt = pt.t - t0;
        for (std::size_t j = 0; j < derivs.size(); ++j) {
            if (j > 0) term = term * dt / Rational(static_cast<long>(j));
            y += derivs[j] * term;
        }
        const double r = (y - pt.y).to_double();
        total += r * r;
    }
    return total;
}

// Choose the system to solve: the whole system when it is zero-dimensional and
// consistent, else the first square subsystem (lexicographic in equation index)
// with that property. Returns nullopt when every candidate is inconsistent.
std::optional<std::vector<MultiPoly>> pick_square_system(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& unknowns) {
    auto usable = [&](const std::vector<MultiPoly>& sys, bool& inconsistent) {
        GroebnerBasis gb = buchberger(sys, unknowns);
        inconsistent = gb.is_unit();
        return !inconsistent && is_zero_dimensional(gb);
    };
    bool inconsistent = false;
    if (eqs.size() >= unknowns.size() && usable(eqs, inconsistent)) return eqs;
    if (eqs.size() <= unknowns.size()) {
        if (inconsistent) return std::nullopt;
        throw UnsupportedInput("prolonged system is underdetermined; increase the order");
    }
    const std::size_t n = unknowns.size();
    std::vector<bool> pick(eqs.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    bool all_inconsistent = true;
    do {
        std::vector<MultiPoly> sub;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (pick[i]) sub.push_back(eqs[i]);
        if (usable(sub, inconsistent)) return sub;
        all_inconsistent = all_inconsistent && inconsistent;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (all_inconsistent) return std::nullopt;
    throw UnsupportedInput("no zero-dimensional square subsystem found");
}

}  // namespace

std::string derivative_symbol(const std::string& name, int order) { return name + "_" + std::to_string(order); }

std::vector<MultiPoly> prolong_ode(const OdeModel& model, int h) { return prolong(model, h, IdentificationOptions{}.max_terms); }

UniPoly newton_interpolation(const std::vector<DataPoint>& data, const std::string& var) {
    if (data.empty()) throw InvalidInput("interpolation needs at least one point");
    std::set<Rational> ts;
    for (const auto& p : data)
        if (!ts.insert(p.t).second) throw InvalidInput("interpolation data has repeated abscissae");
    const std::size_t n = data.size();
    std::vector<Rational> dd;
    for (const auto& p : data) dd.push_back(p.y);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (data[i].t - data[i - k].t);
    UniPoly out = UniPoly::constant(dd[n - 1], var);
    for (std::size_t i = n - 1; i-- > 0;)
        out = out * UniPoly(std::vector<Rational>{-data[i].t, Rational(1)}, var) + UniPoly::constant(dd[i], var);
    return out;
}

std::vector<Candidate> identify_from_derivatives(const OdeModel& model, int h, const std::vector<Rational>& output_derivatives,
                                                 const std::vector<DataPoint>& data, const Rational& t0,
                                                 const IdentificationOptions& opts) {
    if (output_derivatives.size() != static_cast<std::size_t>(h) + 1)
        throw InvalidInput("expected h + 1 output derivative values");
    const auto eqs = prolong(model, h, opts.max_terms);
    Assignment ys;
    for (int j = 0; j <= h; ++j) ys[derivative_symbol(model.output_name, j)] = output_derivatives[static_cast<std::size_t>(j)];

    std::vector<std::string> unknowns = model.params;
    for (const auto& s : model.states) unknowns.push_back(derivative_symbol(s, 0));
    std::vector<MultiPoly> sys;
    for (const auto& e : eqs) sys.push_back(e.specialize(ys));
    for (int j = 1; j <= h; ++j)
        for (const auto& s : model.states) {
            const std::string sym = derivative_symbol(s, j);
            if (std::any_of(sys.begin(), sys.end(), [&](const MultiPoly& p) { return p.depends_on(sym); })) unknowns.push_back(sym);
        }
    for (auto& p : sys) p = p.with_vars(unknowns);

    const auto chosen = pick_square_system(sys, unknowns);
    if (!chosen) return {};
    const auto solved = solve_system(*chosen, unknowns, opts.precision);

    const std::size_t named = model.params.size() + model.states.size();
    std::vector<Candidate> out;
    for (const auto& box : solved.boxes) {
        Candidate c;
        c.names.assign(unknowns.begin(), unknowns.begin() + static_cast<long>(named));
        c.values.assign(box.coords.begin(), box.coords.begin() + static_cast<long>(named));
        c.box = box;
        c.box_vars = unknowns;
        Assignment point;
        bool negative = false;
        for (std::size_t i = 0; i < named; ++i) {
            point[c.names[i]] = c.values[i].midpoint();
            negative = negative || c.values[i].midpoint().sign() < 0;
        }
        if (opts.nonnegative_only && negative) continue;
        c.fit_residual = taylor_residual(model_output_derivatives(model, h, point), data, t0);
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.fit_residual != b.fit_residual) return a.fit_residual < b.fit_residual;
        for (std::size_t i = 0; i < a.values.size(); ++i)
            if (a.values[i].midpoint() != b.values[i].midpoint()) return a.values[i].midpoint() > b.values[i].midpoint();
        return false;
    });
    return out;
}

std::vector<Candidate> identify_parameters(const OdeModel& model, const std::vector<DataPoint>& data, int h, const Rational& t0,
                                           const IdentificationOptions& opts) {
    if (h < 0) throw InvalidInput("prolongation order must be non-negative");
    if (data.size() < static_cast<std::size_t>(h) + 1) throw InvalidInput("not enough data points for the requested order");
    UniPoly yhat = newton_interpolation(data);
    std::vector<Rational> derivs;
    for (int j = 0; j <= h; ++j) {
        derivs.push_back(yhat.eval(t0));
        yhat = yhat.derivative();
    }
    return identify_from_derivatives(model, h, derivs, data, t0, opts);
}

}  // namespace certsolve
