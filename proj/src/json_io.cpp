#include "mv/json_io.hpp"

namespace mv {

Json json_int(const Int& v) {
    static const Int kLimit = Int(1) << 53;
    if (v < kLimit && v > -kLimit) return Json(v.get_si());
    return Json(v.get_str());
}

Json json_of(const Partition& mu) {
    Json a = Json::array();
    for (int p : mu.parts()) a.push_back(p);
    return a;
}

Json json_of(const GaussianRational& c) { return Json::array({rat_string(c.re), rat_string(c.im)}); }

Json json_of(const TauPoly& p, int tau_cap) {
    Json a = Json::array();
    int deg = p.degree();
    if (tau_cap >= 0) deg = std::min(deg, tau_cap);
    for (int k = 0; k <= deg; ++k) a.push_back(json_of(p.coeff(k)));
    return a;
}

Json json_of(const LambdaSeries& s, int tau_cap) {
    Json j;
    j["valuation"] = s.valuation();
    if (s.is_exact())
        j["order"] = nullptr;
    else
        j["order"] = s.order();
    Json coeffs = Json::array();
    int hi = s.is_exact() ? s.support_end() : s.order();
    for (int n = s.valuation(); n < hi; ++n) coeffs.push_back(json_of(s.coeff(n), tau_cap));
    j["coeffs"] = coeffs;
    return j;
}

Json json_of(const CharacterTable& t) {
    Json j;
    j["d"] = t.d;
    Json irr = Json::array(), cls = Json::array(), vals = Json::array();
    for (const Partition& p : t.labels) {
        irr.push_back(json_of(p));
        cls.push_back(json_of(p));
    }
    for (const auto& row : t.values) {
        Json r = Json::array();
        for (const Int& v : row) r.push_back(json_int(v));
        vals.push_back(r);
    }
    j["irreducibles"] = irr;
    j["classes"] = cls;
    j["values"] = vals;
    return j;
}

Json json_of(const MVSeries& s) {
    Json j;
    j["d"] = s.d;
    j["connected"] = s.connected;
    j["full"] = s.full;
    j["lambdaOrder"] = s.window.lambda_order;
    j["tauDegree"] = s.window.tau_cap;
    Json terms = Json::array();
    for (const auto& [mu, c] : s.element.terms()) {
        Json t;
        t["mu"] = json_of(mu);
        t["coeff"] = json_of(c, s.window.tau_cap);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

Json json_of(const HodgePolynomial& h) {
    Json j;
    j["g"] = h.g;
    j["mu"] = json_of(h.mu);
    Json coeffs = Json::array();
    for (const Rat& c : h.coeffs) coeffs.push_back(rat_string(c));
    j["H"] = coeffs;
    return j;
}

Json json_of(const KernelReport& k) {
    Json j;
    j["l"] = k.l;
    j["r"] = k.r;
    j["kernelDim"] = k.kernel_dim;
    Json v = Json::array();
    for (const Rat& c : k.kernel_vector) v.push_back(rat_string(c));
    j["kernelVector"] = v;
    return j;
}

Json json_of(const VerifyReport& r) {
    Json j;
    j["pass"] = r.pass;
    if (!r.first_failure) {
        j["firstFailure"] = nullptr;
    } else {
        const FailureLocator& f = *r.first_failure;
        Json loc;
        loc["context"] = f.context;
        loc["mu"] = json_of(f.mu);
        loc["lambdaExp"] = f.lambda_exp;
        loc["tauExp"] = f.tau_exp;
        loc["expected"] = f.expected;
        loc["actual"] = f.actual;
        j["firstFailure"] = loc;
    }
    return j;
}

}  // namespace mv
