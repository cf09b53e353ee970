#include "negdef/io.hpp"

namespace negdef::io {

namespace {

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::int64_t int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InvalidInput(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

}  // namespace

json to_json(const Rat& value) {
    return to_string(value);
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) {
        return parse_rat(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return parse_rat(j.dump());
    }
    throw InvalidInput("expected an exact number string \"p/q\", got " + j.dump());
}

json to_json(const RatVector& values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_json(v));
    }
    return out;
}

RatVector vector_from_json(const json& j) {
    if (!j.is_array()) {
        throw InvalidInput("expected an array of numbers");
    }
    RatVector out;
    out.reserve(j.size());
    for (const auto& v : j) {
        out.push_back(rat_from_json(v));
    }
    return out;
}

json to_json(const QMatrix& m) {
    json out = json::array();
    for (const auto& row : m.rows()) {
        out.push_back(to_json(row));
    }
    return out;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) {
        throw InvalidInput("matrix must be an array of rows");
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
        rows.push_back(vector_from_json(row));
    }
    return QMatrix(rows);
}

json to_json(const RDivisor& d) {
    json coeffs = json::object();
    for (const auto& [prime, value] : d.coeffs()) {
        coeffs[prime] = to_json(value);
    }
    return json{{"coeffs", coeffs}};
}

RDivisor divisor_from_json(const json& j) {
    const json& coeffs = member(j, "coeffs");
    if (!coeffs.is_object()) {
        throw InvalidInput("'coeffs' must be an object");
    }
    RDivisor out;
    for (const auto& [prime, value] : coeffs.items()) {
        out.set(prime, rat_from_json(value));
    }
    return out;
}

json to_json(const CurveSystem& sys) {
    return json{{"labels", sys.labels()}, {"matrix", to_json(sys.matrix())}};
}

CurveSystem curve_system_from_json(const json& j) {
    QMatrix m = matrix_from_json(member(j, "matrix"));
    if (j.contains("labels")) {
        const json& labels = j.at("labels");
        if (!labels.is_array()) {
            throw InvalidInput("'labels' must be an array of strings");
        }
        std::vector<std::string> names;
        for (const auto& l : labels) {
            if (!l.is_string()) {
                throw InvalidInput("'labels' must be an array of strings");
            }
            names.push_back(l.get<std::string>());
        }
        return CurveSystem(std::move(names), std::move(m));
    }
    return CurveSystem(std::move(m));
}

json pairing_to_json(const PairingVector& v) {
    return json{{"values", to_json(v)}};
}

PairingVector pairing_from_json(const json& j) {
    if (j.is_array()) {
        return vector_from_json(j);
    }
    return vector_from_json(member(j, "values"));
}

json to_json(const StratifiedSystem& ss) {
    json strata = json::array();
    for (const auto& s : ss.strata()) {
        strata.push_back(json{{"e", s.e}, {"system", to_json(s.system)}});
    }
    json cross = json::array();
    for (std::size_t from = 0; from < ss.stratum_count(); ++from) {
        for (std::size_t to = 0; to < ss.stratum_count(); ++to) {
            if (from == to) {
                continue;
            }
            json rows = json::array();
            bool any = false;
            for (std::size_t k = 0; k < ss.stratum(from).system.size(); ++k) {
                json row = json::array();
                for (std::size_t i = 0; i < ss.stratum(to).system.size(); ++i) {
                    const Rat& v = ss.pairing(from, k, to, i);
                    any = any || sgn(v) != 0;
                    row.push_back(to_json(v));
                }
                rows.push_back(row);
            }
            if (any) {
                cross.push_back(json{{"from_e", ss.stratum(from).e},
                                     {"to_e", ss.stratum(to).e},
                                     {"values", rows}});
            }
        }
    }
    return json{{"dimension", ss.dimension()}, {"strata", strata}, {"cross", cross}};
}

StratifiedSystem stratified_from_json(const json& j) {
    const json& strata_json = member(j, "strata");
    if (!strata_json.is_array()) {
        throw InvalidInput("'strata' must be an array");
    }
    std::vector<Stratum> strata;
    int max_e = 0;
    for (const auto& s : strata_json) {
        Stratum st;
        st.e = static_cast<int>(int_from_json(member(s, "e"), "stratum e"));
        st.system = curve_system_from_json(member(s, "system"));
        max_e = std::max(max_e, st.e);
        strata.push_back(std::move(st));
    }
    const int dimension =
        j.contains("dimension") ? static_cast<int>(int_from_json(j.at("dimension"), "dimension"))
                                : max_e + 2;

    std::vector<CrossPairing> cross;
    if (j.contains("cross")) {
        if (!j.at("cross").is_array()) {
            throw InvalidInput("'cross' must be an array");
        }
        for (const auto& c : j.at("cross")) {
            CrossPairing cp;
            cp.from_e = static_cast<int>(int_from_json(member(c, "from_e"), "from_e"));
            cp.to_e = static_cast<int>(int_from_json(member(c, "to_e"), "to_e"));
            const json& values = member(c, "values");
            if (!values.is_array()) {
                throw InvalidInput("cross 'values' must be an array");
            }
            const bool flat = !values.empty() && !values.front().is_array();
            if (flat) {
                // A single source divisor: the flat vector is its pairing row.
                cp.values.push_back(vector_from_json(values));
                for (const auto& st : strata) {
                    if (st.e == cp.from_e && st.system.size() != 1) {
                        throw InvalidInput("flat cross 'values' need a single-curve source stratum");
                    }
                }
            } else {
                for (const auto& row : values) {
                    cp.values.push_back(vector_from_json(row));
                }
            }
            cross.push_back(std::move(cp));
        }
    }
    return StratifiedSystem(dimension, std::move(strata), std::move(cross));
}

json toric_divisor_to_json(const toric::ToricDivisor& d) {
    json out = json::object();
    for (std::size_t r = 0; r < d.d.size(); ++r) {
        out[toric::ResolutionFan::ray_label(r)] = to_json(d.d[r]);
    }
    return out;
}

toric::ToricDivisor toric_divisor_from_json(const toric::ResolutionFan& fan, const json& j) {
    if (!j.is_object()) {
        throw InvalidInput("toric divisor must be an object keyed by ray labels");
    }
    RDivisor d;
    for (const auto& [label, value] : j.items()) {
        d.set(label, rat_from_json(value));
    }
    // Zero entries were dropped above; validate their labels separately.
    for (const auto& [label, value] : j.items()) {
        bool known = false;
        for (std::size_t r = 0; r < fan.ray_count(); ++r) {
            known = known || toric::ResolutionFan::ray_label(r) == label;
        }
        if (!known) {
            throw InvalidInput("unknown ray '" + label + "'");
        }
    }
    return toric::ToricDivisor::from_rdivisor(fan, d);
}

ToricInstance toric_from_json(const json& j) {
    const std::int64_t n = int_from_json(member(j, "n"), "n");
    const std::int64_t q = int_from_json(member(j, "q"), "q");
    ToricInstance inst{toric::build_fan(n, q), {}, std::nullopt};
    inst.divisor = j.contains("divisor") ? toric_divisor_from_json(inst.fan, j.at("divisor"))
                                         : toric::ToricDivisor::zero(inst.fan);
    if (j.contains("e") && !j.at("e").is_null()) {
        inst.e = toric_divisor_from_json(inst.fan, j.at("e"));
    }
    return inst;
}

json to_json(const toric::ResolutionFan& fan) {
    json rays = json::array();
    for (const auto& r : fan.rays()) {
        rays.push_back(json::array({r.x, r.y}));
    }
    return json{{"n", fan.singularity().n},
                {"q", fan.singularity().q},
                {"b", fan.self_intersections()},
                {"rays", rays}};
}

json to_json(const toric::Verdict& verdict) {
    json t = json::array();
    for (const auto& v : verdict.t_samples) {
        t.push_back(to_json(v));
    }
    json witness = nullptr;
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        witness = json{{"t", to_json(w.t)},
                       {"m", json::array({w.m.x, w.m.y})},
                       {"ray", toric::ResolutionFan::ray_label(w.ray)},
                       {"value", w.value},
                       {"bound", w.bound}};
    }
    const auto& w = verdict.window;
    json window = w.x_min == -w.x_max && w.y_min == -w.y_max && w.x_max == w.y_max
                      ? json(w.x_max)
                      : json::array({w.x_min, w.x_max, w.y_min, w.y_max});
    return json{{"pass", verdict.pass}, {"t_samples", t}, {"window", window}, {"witness", witness}};
}

json to_json(const DefinitenessCertificate& cert) {
    return json{{"negative_definite", cert.negative_definite},
                {"leading_minors", to_json(cert.minors)},
                {"signed_minors", to_json(cert.signed_minors)}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace negdef::io
