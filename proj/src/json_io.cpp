#include "padic/json_io.hpp"

namespace padic {

namespace {
const Int kJsonIntCap = Int(1) << 53;

void expect(bool cond, const char* what) {
    if (!cond) throw ParseError(std::string("malformed input: ") + what);
}

std::vector<Int> int_array_from_json(const Json& j, const char* what) {
    expect(j.is_array(), what);
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

Json int_array_to_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}
}  // namespace

Json int_to_json(const Int& x) {
    if (x < kJsonIntCap && x > -kJsonIntCap) return Json(x.get_si());
    return Json(x.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_unsigned()) {
        unsigned long long v = j.get<unsigned long long>();
        Int x;
        mpz_import(x.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        return x;
    }
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed input: not a decimal integer string");
        }
    }
    throw ParseError("malformed input: expected integer or integer string");
}

Json config_to_json(const RingConfig& cfg) {
    Json j;
    j["p"] = int_to_json(cfg.p);
    j["r"] = cfg.r;
    j["e"] = cfg.e;
    j["h"] = int_array_to_json(cfg.h);
    j["E"] = int_array_to_json(cfg.E);
    j["n_prec"] = cfg.n_prec;
    return j;
}

ConfigPtr config_from_json(const Json& j) {
    expect(j.is_object() && j.contains("p") && j.contains("e") && j.contains("n_prec"),
           "config needs p, e, n_prec");
    Int p = int_from_json(j.at("p"));
    int r = j.value("r", 1);
    int e = j.at("e").get<int>();
    int n_prec = j.at("n_prec").get<int>();
    std::vector<Int> h =
        j.contains("h") ? int_array_from_json(j.at("h"), "h must be an array") : RingConfig::default_h(p, r);
    std::vector<Int> E =
        j.contains("E") ? int_array_from_json(j.at("E"), "E must be an array") : RingConfig::default_E(p, e);
    try {
        return make_config(RingConfig(std::move(p), r, e, std::move(h), std::move(E), n_prec));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(std::string("malformed config: ") + err.what());
    }
}

Json kscalar_to_json(const KScalar& x) {
    Json j;
    j["shift"] = x.shift();
    j["prec"] = x.abs_prec();
    j["val"] = int_array_to_json(x.unit_part().coords());
    return j;
}

KScalar kscalar_from_json(const ConfigPtr& cfg, const Json& j) {
    expect(j.is_object() && j.contains("val"), "scalar needs val");
    std::vector<Int> coords = int_array_from_json(j.at("val"), "val must be an array");
    long shift = j.value("shift", 0L);
    long prec = j.value("prec", cfg->uk_prec());
    return KScalar(OKScalar::from_coords(cfg, std::move(coords)), shift, prec);
}

Json series1_to_json(const TruncSeries1& s) {
    Json j;
    j["N"] = s.degree();
    j["certified_prec"] = s.certified_prec();
    Json coeffs = Json::array();
    for (int i = 1; i <= s.degree(); ++i) {
        const KScalar& c = s.coeff(i);
        if (c.is_exact_zero()) continue;  // absent coefficients load back as exact zeros
        Json e;
        e["i"] = i;
        e["shift"] = c.shift();
        e["val"] = int_array_to_json(c.unit_part().coords());
        coeffs.push_back(std::move(e));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncSeries1 series1_from_json(const ConfigPtr& cfg, const Json& j) {
    expect(j.is_object() && j.contains("N") && j.contains("coeffs"), "series needs N and coeffs");
    int N = j.at("N").get<int>();
    expect(N >= 1, "series needs N >= 1");
    long prec = j.value("certified_prec", cfg->uk_prec());
    std::vector<KScalar> coeffs(static_cast<size_t>(N), KScalar::zero(cfg));
    for (const auto& e : j.at("coeffs")) {
        expect(e.is_object() && e.contains("i") && e.contains("val"), "coefficient needs i and val");
        int i = e.at("i").get<int>();
        expect(i >= 1 && i <= N, "coefficient index out of range");
        expect(!e.contains("j"), "one-variable coefficient must not carry j");
        std::vector<Int> coords = int_array_from_json(e.at("val"), "val must be an array");
        long shift = e.value("shift", 0L);
        coeffs[static_cast<size_t>(i - 1)] = KScalar(OKScalar::from_coords(cfg, std::move(coords)), shift, prec);
    }
    return TruncSeries1(cfg, N, std::move(coeffs));
}

Json series2_to_json(const TruncSeries2& s) {
    Json j;
    j["N"] = s.degree();
    j["certified_prec"] = s.certified_prec();
    Json coeffs = Json::array();
    for (int d = 1; d <= s.degree(); ++d)
        for (int jj = 0; jj <= d; ++jj) {
            const KScalar& c = s.coeff(d - jj, jj);
            if (c.is_exact_zero()) continue;
            Json e;
            e["i"] = d - jj;
            e["j"] = jj;
            e["shift"] = c.shift();
            e["val"] = int_array_to_json(c.unit_part().coords());
            coeffs.push_back(std::move(e));
        }
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncSeries2 series2_from_json(const ConfigPtr& cfg, const Json& j) {
    expect(j.is_object() && j.contains("N") && j.contains("coeffs"), "series needs N and coeffs");
    int N = j.at("N").get<int>();
    expect(N >= 1, "series needs N >= 1");
    long prec = j.value("certified_prec", cfg->uk_prec());
    TruncSeries2 s(cfg, N);
    for (const auto& e : j.at("coeffs")) {
        expect(e.is_object() && e.contains("i") && e.contains("j") && e.contains("val"),
               "coefficient needs i, j, val");
        int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
        expect(i >= 0 && jj >= 0 && i + jj >= 1 && i + jj <= N, "coefficient index out of range");
        std::vector<Int> coords = int_array_from_json(e.at("val"), "val must be an array");
        long shift = e.value("shift", 0L);
        s.set_coeff(i, jj, KScalar(OKScalar::from_coords(cfg, std::move(coords)), shift, prec));
    }
    return s;
}

Json pair_to_json(const DynPair& pair) {
    Json j;
    j["config"] = config_to_json(*pair.config());
    j["f"] = series1_to_json(pair.f());
    j["u"] = series1_to_json(pair.u());
    return j;
}

DynPair pair_from_json(const Json& j) {
    expect(j.is_object() && j.contains("config") && j.contains("f") && j.contains("u"),
           "pair needs config, f, u");
    ConfigPtr cfg = config_from_json(j.at("config"));
    TruncSeries1 f = series1_from_json(cfg, j.at("f"));
    TruncSeries1 u = series1_from_json(cfg, j.at("u"));
    return DynPair(std::move(f), std::move(u));
}

Json polygon_to_json(const NewtonPolygon& np) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : np.vertices) {
        Json e;
        e["index"] = v.index;
        e["val"] = v.val;
        e["certified"] = v.certified;
        verts.push_back(std::move(e));
    }
    j["vertices"] = std::move(verts);
    Json slopes = Json::array();
    for (const auto& s : np.slopes) slopes.push_back(s.get_str());
    j["slopes"] = std::move(slopes);
    j["certified"] = np.all_certified();
    return j;
}

Json logresult_to_json(const LogResult& lr) {
    Json j;
    j["lambda"] = kscalar_to_json(lr.lambda);
    j["log"] = series1_to_json(lr.log);
    j["loss_profile"] = lr.loss_profile;
    return j;
}

LogResult logresult_from_json(const ConfigPtr& cfg, const Json& j) {
    expect(j.is_object() && j.contains("log"), "log result needs log");
    LogResult lr{series1_from_json(cfg, j.at("log")), KScalar::one(cfg), {}};
    if (j.contains("lambda")) lr.lambda = kscalar_from_json(cfg, j.at("lambda"));
    if (j.contains("loss_profile")) lr.loss_profile = j.at("loss_profile").get<std::vector<long>>();
    return lr;
}

Json report_to_json(const HypothesisReport& rep) {
    Json j;
    j["coprimality"] = tri_name(rep.coprimality);
    j["wdeg_is_p"] = tri_name(rep.wdeg_is_p);
    j["simple_roots"] = tri_name(rep.simple_roots);
    j["f_prime_uniformizer"] = tri_name(rep.f_prime_uniformizer);
    j["u_prime_unit"] = tri_name(rep.u_prime_unit);
    j["u_prime_nontorsion"] = tri_name(rep.u_prime_nontorsion);
    j["certified_prec"] = rep.certified_prec;
    j["all"] = rep.all_yes() ? "yes" : (rep.any_no() ? "no" : "undecidable");
    return j;
}

Json verdict_to_json(const ConjectureVerdict& v) {
    Json j;
    j["integral"] = v.integral;
    if (v.offending) {
        Json o;
        o["i"] = std::get<0>(*v.offending);
        o["j"] = std::get<1>(*v.offending);
        o["shift"] = std::get<2>(*v.offending);
        j["offending"] = std::move(o);
    } else {
        j["offending"] = nullptr;
    }
    j["endo_f_zero"] = v.endo_f_zero;
    j["endo_u_zero"] = v.endo_u_zero;
    j["certified_degree"] = v.certified_degree;
    j["certified_prec"] = v.certified_prec;
    j["hypotheses"] = report_to_json(v.hypotheses);
    j["F"] = series2_to_json(v.F);
    return j;
}

}  // namespace padic
