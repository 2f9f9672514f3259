#include "galdens/json_io.hpp"

#include "galdens/error.hpp"

namespace galdens {

Json to_json(const Rational& r) { return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(ErrorCode::InvalidArgument, "rational must be an object with num and den");
    BigInt num(j.at("num").get<std::string>()), den(j.at("den").get<std::string>());
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Json to_json_capped(const Rational& r, std::size_t max_digits) {
    const std::size_t nd = mpz_sizeinbase(r.get_num_mpz_t(), 10), dd = mpz_sizeinbase(r.get_den_mpz_t(), 10);
    // sizeinbase may overcount by one, which only moves the cutoff
    if (nd <= max_digits && dd <= max_digits) return to_json(r);
    mpf_class f(r, 256);
    mp_exp_t exp = 0;
    std::string digits = f.get_str(exp, 10, 40);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string text = digits.empty() ? "0" : sign + "0." + digits + "e" + std::to_string(exp);
    return Json{{"approx", text},
                {"num_digits", r.get_num().get_str().size() - (sign.empty() ? 0 : 1)},
                {"den_digits", r.get_den().get_str().size()}};
}

Json to_json(const BigInt& n) { return n.get_str(); }

Json to_json(const CycValue& v) {
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

CycValue cyc_from_json(const Json& j) {
    const auto e = j.at("conductor").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    if (coeffs.size() != e) throw Error(ErrorCode::InvalidArgument, "coefficient count must equal the conductor");
    return CycValue(e, std::move(coeffs));
}

Json to_json(const ClassFunction& f) {
    const auto& g = f.group();
    const auto& cls = g.classes();
    Json classes = Json::array();
    for (std::size_t i = 0; i < cls.size(); ++i)
        classes.push_back({{"representative", g.describe(cls.representatives[i])},
                           {"size", cls.class_size(i)},
                           {"value", to_json(f.on_class(i))},
                           {"text", f.on_class(i).to_string()}});
    return Json{{"group", g.name()}, {"order", g.order()}, {"classes", classes}};
}

ClassFunction class_function_from_json(const FiniteGroup& group, const Json& j) {
    if (j.at("order").get<std::uint64_t>() != group.order())
        throw Error(ErrorCode::GroupMismatch, "class function was recorded on a group of another order");
    const auto& classes = j.at("classes");
    if (classes.size() != group.classes().size())
        throw Error(ErrorCode::GroupMismatch, "class count differs from the group's");
    std::vector<CycValue> values;
    for (const auto& c : classes) values.push_back(cyc_from_json(c.at("value")));
    return ClassFunction(group, std::move(values));
}

Json to_json(const PrimeWindow& w) {
    Json j{{"k", w.k()}, {"m", w.m()}, {"first", w.primes().front()}, {"last", w.primes().back()}, {"size", w.primes().size()}};
    if (w.primes().size() <= 64) j["primes"] = w.primes();
    return j;
}

Json to_json(const ApproxPlan& plan) {
    Json j{{"mode", to_string(plan.mode)},
           {"convention", to_string(plan.convention)},
           {"target", to_json(plan.target)},
           {"epsilon", to_json(plan.epsilon)},
           {"strategy", plan.strategy}};
    if (!plan.preset.empty()) j["preset"] = plan.preset;
    if (plan.window) {
        j["window"] = to_json(*plan.window);
        j["base_density"] = to_json_capped(plan.base_density());
    }
    if (plan.twist_order) j["twist_order"] = *plan.twist_order;
    const Rational predicted = plan.predicted_density();
    j["predicted"] = to_json_capped(predicted);
    j["error"] = to_json_capped(abs_diff(predicted, plan.target));
    j["certified"] = abs_diff(predicted, plan.target) <= plan.epsilon;
    if (plan.window)
        j["trace"] = Json{{"steps", plan.trace.steps},
                          {"gap_bound", to_json(plan.trace.gap_bound)},
                          {"gap_bound_held", plan.trace.gap_bound_held}};
    return j;
}

Json RunReport::to_json() const {
    return Json{{"command", command}, {"config", config}, {"results", results}, {"wall_seconds", wall_seconds}};
}

RunReport RunReport::from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    r.results = j.at("results");
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

}  // namespace galdens
