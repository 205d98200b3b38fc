#include "torloc/io.hpp"

#include <fstream>
#include <sstream>

namespace torloc {

Rat parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        try {
            Rat r(s);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ValidationError("invalid rational literal: \"" + s + "\"");
        }
    }
    if (j.is_number_float())
        throw ValidationError("decimal floats are forbidden; use \"p/q\" strings");
    throw ValidationError("expected an integer or \"p/q\" string");
}

std::string rational_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Vec parse_vec(const Json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of integers");
    Vec v;
    for (const Json& x : j) {
        if (x.is_number_integer()) {
            v.emplace_back(static_cast<long>(x.get<std::int64_t>()));
        } else if (x.is_string()) {
            Rat r = parse_rational(x);
            require(r.get_den() == 1, "expected an integer coordinate");
            v.push_back(r.get_num());
        } else {
            throw ValidationError("expected an integer coordinate");
        }
    }
    return v;
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const Int& x : v) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

FanPtr fan_from_json(const Json& j) {
    require(j.is_object() && j.contains("rank") && j.contains("maximal_cones"),
            "fan file needs {\"rank\", \"maximal_cones\"}");
    std::size_t n = j.at("rank").get<std::size_t>();
    std::vector<Cone> maximal;
    for (const Json& cj : j.at("maximal_cones")) {
        std::vector<Vec> gens;
        for (const Json& gj : cj) {
            Vec g = parse_vec(gj);
            require(g.size() == n, "fan generator has wrong length");
            gens.push_back(std::move(g));
        }
        maximal.push_back(Cone::from_generators(n, gens));
    }
    return make_fan(n, std::move(maximal));
}

Json fan_to_json(const Fan& fan) {
    Json j = Json::object();
    j["rank"] = fan.ambient();
    Json cones = Json::array();
    for (const Cone& c : fan.maximal_cones()) {
        Json gens = Json::array();
        for (const Vec& g : c.generators()) gens.push_back(vec_to_json(g));
        cones.push_back(gens);
    }
    j["maximal_cones"] = cones;
    return j;
}

namespace {

Exps parse_exponents(const std::string& key, int nvars) {
    Exps e;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            e.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError("invalid monomial exponent key: \"" + key + "\"");
        }
    }
    require(static_cast<int>(e.size()) == nvars, "monomial key \"" + key + "\" has wrong length");
    for (int x : e) require(x >= 0, "monomial exponents must be nonnegative");
    return e;
}

std::string exponents_to_key(const Exps& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    return os.str();
}

}  // namespace

PiecewisePolynomial pp_from_json(const Json& j, FanPtr fan) {
    require(j.is_object() && j.contains("degree") && j.contains("per_cone"),
            "piecewise polynomial file needs {\"degree\", \"per_cone\"}");
    const int n = static_cast<int>(fan->ambient());
    int degree = j.at("degree").get<int>();
    std::vector<Polynomial> parts(fan->maximal_cones().size(), Polynomial(n));
    for (const auto& [key, terms] : j.at("per_cone").items()) {
        std::size_t index = 0;
        try {
            index = std::stoul(key);
        } catch (const std::exception&) {
            throw ValidationError("invalid cone index \"" + key + "\"");
        }
        require(index < parts.size(), "cone index " + key + " out of range");
        Polynomial p(n);
        for (const auto& [mono, coef] : terms.items())
            p.add_term(parse_exponents(mono, n), parse_rational(coef));
        parts[index] = std::move(p);
    }
    return make_piecewise(std::move(fan), degree, std::move(parts));
}

Json pp_to_json(const PiecewisePolynomial& f) {
    Json j = Json::object();
    j["degree"] = f.degree;
    Json per_cone = Json::object();
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (f.parts[i].is_zero()) continue;
        Json terms = Json::object();
        for (const auto& [e, c] : f.parts[i].terms())
            terms[exponents_to_key(e)] = rational_to_string(c);
        per_cone[std::to_string(i)] = terms;
    }
    j["per_cone"] = per_cone;
    return j;
}

std::vector<LatticePolytope> polytopes_from_json(const Json& j) {
    require(j.is_object() && j.contains("polytopes"), "polytope file needs {\"polytopes\"}");
    std::vector<LatticePolytope> out;
    for (const Json& pj : j.at("polytopes")) {
        std::vector<Vec> points;
        for (const Json& vj : pj) points.push_back(parse_vec(vj));
        require(!points.empty(), "polytope needs at least one vertex");
        out.push_back(LatticePolytope::from_points(points.front().size(), points));
    }
    require(!out.empty(), "polytope file lists no polytopes");
    return out;
}

Json polytopes_to_json(const std::vector<LatticePolytope>& ps) {
    Json j = Json::object();
    Json arr = Json::array();
    for (const LatticePolytope& p : ps) {
        Json verts = Json::array();
        for (const Vec& v : p.vertices()) verts.push_back(vec_to_json(v));
        arr.push_back(verts);
    }
    j["polytopes"] = arr;
    return j;
}

ToricVectorBundle bundle_from_json(const Json& j, FanPtr fan) {
    require(j.is_object() && j.contains("rank"), "bundle file needs {\"rank\"}");
    ToricVectorBundle b;
    b.rank = j.at("rank").get<int>();
    b.fan = std::move(fan);
    std::vector<Vec> rays = b.fan->rays();
    if (j.contains("filtrations") && !j.at("filtrations").empty()) {
        b.has_filtrations = true;
        b.filtrations.resize(rays.size());
        std::vector<bool> seen(rays.size(), false);
        for (const auto& [key, steps] : j.at("filtrations").items()) {
            std::size_t index = 0;
            try {
                index = std::stoul(key);
            } catch (const std::exception&) {
                throw ValidationError("invalid ray index \"" + key + "\"");
            }
            require(index < rays.size(), "ray index " + key + " out of range");
            seen[index] = true;
            RayFiltration f;
            for (const Json& step : steps) {
                require(step.is_array() && step.size() == 2,
                        "filtration step must be [threshold, subspace rows]");
                Rat t = parse_rational(step[0]);
                require(t.get_den() == 1, "filtration threshold must be an integer");
                f.thresholds.push_back(t.get_num());
                std::vector<std::vector<Rat>> rows;
                for (const Json& rj : step[1]) {
                    std::vector<Rat> row;
                    for (const Json& x : rj) row.push_back(parse_rational(x));
                    rows.push_back(std::move(row));
                }
                f.subspaces.push_back(std::move(rows));
            }
            b.filtrations[index] = std::move(f);
        }
        for (std::size_t i = 0; i < rays.size(); ++i)
            require(seen[i], "missing filtration for ray " + std::to_string(i));
    }
    if (j.contains("u_multisets") && !j.at("u_multisets").empty()) {
        b.has_u_multisets = true;
        b.u_multisets.resize(b.fan->maximal_cones().size());
        std::vector<bool> seen(b.u_multisets.size(), false);
        for (const auto& [key, vecs] : j.at("u_multisets").items()) {
            std::size_t index = 0;
            try {
                index = std::stoul(key);
            } catch (const std::exception&) {
                throw ValidationError("invalid cone index \"" + key + "\"");
            }
            require(index < b.u_multisets.size(), "cone index " + key + " out of range");
            seen[index] = true;
            for (const Json& vj : vecs) b.u_multisets[index].push_back(parse_vec(vj));
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            require(seen[i], "missing u multiset for cone " + std::to_string(i));
    }
    validate_bundle(b);
    return b;
}

Json bundle_to_json(const ToricVectorBundle& b) {
    Json j = Json::object();
    j["rank"] = b.rank;
    if (b.has_filtrations) {
        Json filt = Json::object();
        for (std::size_t i = 0; i < b.filtrations.size(); ++i) {
            Json steps = Json::array();
            const RayFiltration& f = b.filtrations[i];
            for (std::size_t s = 0; s < f.thresholds.size(); ++s) {
                Json rows = Json::array();
                for (const auto& row : f.subspaces[s]) {
                    Json rj = Json::array();
                    for (const Rat& x : row) rj.push_back(rational_to_string(x));
                    rows.push_back(rj);
                }
                Json step = Json::array();
                step.push_back(rational_to_string(Rat(f.thresholds[s])));
                step.push_back(rows);
                steps.push_back(step);
            }
            filt[std::to_string(i)] = steps;
        }
        j["filtrations"] = filt;
    }
    if (b.has_u_multisets) {
        Json mu = Json::object();
        for (std::size_t i = 0; i < b.u_multisets.size(); ++i) {
            Json vecs = Json::array();
            for (const Vec& u : b.u_multisets[i]) vecs.push_back(vec_to_json(u));
            mu[std::to_string(i)] = vecs;
        }
        j["u_multisets"] = mu;
    }
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << dump_canonical(j);
}

FanPtr load_fan_file(const std::string& path) { return fan_from_json(load_json_file(path)); }

PiecewisePolynomial load_pp_file(const std::string& path, FanPtr fan) {
    return pp_from_json(load_json_file(path), std::move(fan));
}

std::vector<LatticePolytope> load_polytopes_file(const std::string& path) {
    return polytopes_from_json(load_json_file(path));
}

ToricVectorBundle load_bundle_file(const std::string& path, FanPtr fan) {
    return bundle_from_json(load_json_file(path), std::move(fan));
}

FanPtr Workspace::fan(const std::string& path) {
    auto it = fans.find(path);
    if (it != fans.end()) return it->second;
    FanPtr f = load_fan_file(path);
    fans.emplace(path, f);
    return f;
}

}  // namespace torloc
