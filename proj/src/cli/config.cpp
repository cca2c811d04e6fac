#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gasp/cli.hpp"
#include "gasp/errors.hpp"

namespace gasp::cli {

using nlohmann::json;

namespace {

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    std::set<std::string> ok(keys.begin(), keys.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

double num(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    return j.get<double>();
}

long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
    return j.get<long>();
}

std::string str(const json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<double> vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected a list of numbers");
    std::vector<double> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(num(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<Point> points(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected a list of points");
    std::vector<Point> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(vec(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

int line_of(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

}  // namespace

RunConfig parse_config(const std::string& text, Mode mode) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " +
                          e.what());
    }
    allow_keys(root, "config",
               {"params", "domain", "data", "probes", "level", "series", "fa", "pairs", "verify", "output"});

    RunConfig cfg;
    cfg.mode = mode;
    cfg.format = mode == Mode::Verify ? Format::Report : Format::Csv;

    if (root.contains("params")) {
        const json& p = root["params"];
        allow_keys(p, "params", {"m", "alpha"});
        if (p.contains("m")) cfg.m = int(integer(p["m"], "params.m"));
        if (p.contains("alpha")) cfg.alpha = vec(p["alpha"], "params.alpha");
    }
    if (root.contains("domain")) {
        const json& d = root["domain"];
        allow_keys(d, "domain", {"R"});
        if (d.contains("R")) cfg.R = num(d["R"], "domain.R");
    }
    if (root.contains("data")) {
        const json& d = root["data"];
        allow_keys(d, "data", {"family", "value", "terms", "pole"});
        if (d.contains("family")) cfg.data.kind = str(d["family"], "data.family");
        if (d.contains("value")) cfg.data.value = num(d["value"], "data.value");
        if (d.contains("pole")) cfg.data.pole = vec(d["pole"], "data.pole");
        if (d.contains("terms")) {
            const json& t = d["terms"];
            if (!t.is_array()) throw ConfigError("data.terms: expected a list");
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::string w = "data.terms[" + std::to_string(i) + "]";
                allow_keys(t[i], w, {"coef", "powers"});
                PolyTerm pt;
                if (!t[i].contains("coef")) throw ConfigError(w + ": missing 'coef'");
                pt.coef = num(t[i]["coef"], w + ".coef");
                if (t[i].contains("powers")) {
                    if (!t[i]["powers"].is_array()) throw ConfigError(w + ".powers: expected a list");
                    for (std::size_t k = 0; k < t[i]["powers"].size(); ++k)
                        pt.powers.push_back(int(integer(t[i]["powers"][k], w + ".powers")));
                }
                cfg.data.terms.push_back(pt);
            }
        }
    }
    if (root.contains("probes")) cfg.probes = points(root["probes"], "probes");
    if (root.contains("level")) cfg.level = int(integer(root["level"], "level"));
    if (root.contains("series")) {
        const json& s = root["series"];
        allow_keys(s, "series", {"rel_tol", "max_terms_per_axis", "max_total_terms"});
        if (s.contains("rel_tol")) cfg.ctl.rel_tol = num(s["rel_tol"], "series.rel_tol");
        if (s.contains("max_terms_per_axis"))
            cfg.ctl.max_terms_per_axis = integer(s["max_terms_per_axis"], "series.max_terms_per_axis");
        if (s.contains("max_total_terms"))
            cfg.ctl.max_total_terms = integer(s["max_total_terms"], "series.max_total_terms");
    }
    if (root.contains("fa")) {
        const json& f = root["fa"];
        allow_keys(f, "fa", {"method", "points"});
        if (f.contains("method")) cfg.fa_method = str(f["method"], "fa.method");
        if (f.contains("points")) {
            if (!f["points"].is_array()) throw ConfigError("fa.points: expected a list");
            for (std::size_t i = 0; i < f["points"].size(); ++i) {
                const json& q = f["points"][i];
                const std::string w = "fa.points[" + std::to_string(i) + "]";
                allow_keys(q, w, {"a", "b", "c", "z"});
                for (const char* key : {"a", "b", "c", "z"})
                    if (!q.contains(key)) throw ConfigError(w + ": missing '" + key + "'");
                cfg.fa_points.push_back(
                    {num(q["a"], w + ".a"), vec(q["b"], w + ".b"), vec(q["c"], w + ".c"), vec(q["z"], w + ".z")});
            }
        }
    }
    if (root.contains("pairs")) {
        const json& pr = root["pairs"];
        if (!pr.is_array()) throw ConfigError("pairs: expected a list");
        for (std::size_t i = 0; i < pr.size(); ++i) {
            const std::string w = "pairs[" + std::to_string(i) + "]";
            allow_keys(pr[i], w, {"x", "xi"});
            if (!pr[i].contains("x") || !pr[i].contains("xi")) throw ConfigError(w + ": needs 'x' and 'xi'");
            cfg.q_pairs.push_back({vec(pr[i]["x"], w + ".x"), vec(pr[i]["xi"], w + ".xi")});
        }
    }
    if (root.contains("verify")) {
        const json& v = root["verify"];
        allow_keys(v, "verify", {"suite", "seed"});
        if (v.contains("suite")) cfg.suite = str(v["suite"], "verify.suite");
        if (v.contains("seed")) {
            const long s = integer(v["seed"], "verify.seed");
            if (s < 0) throw ConfigError("verify.seed: must be non-negative");
            cfg.seed = std::uint64_t(s);
        }
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        allow_keys(o, "output", {"path", "format"});
        if (o.contains("path")) cfg.out_path = str(o["path"], "output.path");
        if (o.contains("format")) {
            const std::string f = str(o["format"], "output.format");
            if (f == "csv") cfg.format = Format::Csv;
            else if (f == "report") cfg.format = Format::Report;
            else throw ConfigError("output.format: expected 'csv' or 'report'");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path, Mode mode) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), mode);
}

void validate(const RunConfig& cfg) {
    auto wrap = [](const std::string& field, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            throw ConfigError(field + ": " + e.what());
        }
    };
    try {
        cfg.ctl.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("series: ") + e.what());
    }
    if (cfg.level && *cfg.level < 2) throw ConfigError("level: must be at least 2");
    if (cfg.mode == Mode::EvalFa) {
        if (cfg.fa_method != "auto" && cfg.fa_method != "direct" && cfg.fa_method != "decomposed")
            throw ConfigError("fa.method: expected 'auto', 'direct' or 'decomposed'");
        for (std::size_t i = 0; i < cfg.fa_points.size(); ++i) {
            const FaPoint& f = cfg.fa_points[i];
            const std::string w = "fa.points[" + std::to_string(i) + "]";
            wrap(w, [&] { LauricellaParams{f.a, f.b, f.c}.validate(); });
            if (f.z.size() != f.b.size()) throw ConfigError(w + ".z: length must equal the length of b");
        }
        return;
    }
    if (cfg.mode == Mode::Verify) {
        static const std::set<std::string> suites{"all", "hyperfun", "kernel", "domain", "solver", "oracle"};
        if (!suites.count(cfg.suite)) throw ConfigError("verify.suite: unknown suite '" + cfg.suite + "'");
        return;
    }
    wrap("params", [&] { EllipticParams(cfg.m, cfg.alpha); });
    if (!(cfg.R > 0.0) || !std::isfinite(cfg.R)) throw ConfigError("domain.R: must be positive");
    const int m = cfg.m, n = int(cfg.alpha.size());
    if (cfg.mode == Mode::EvalQ) {
        for (std::size_t i = 0; i < cfg.q_pairs.size(); ++i) {
            const std::string w = "pairs[" + std::to_string(i) + "]";
            if (int(cfg.q_pairs[i].x.size()) != m || int(cfg.q_pairs[i].xi.size()) != m)
                throw ConfigError(w + ": points must have m coordinates");
        }
        return;
    }
    for (std::size_t i = 0; i < cfg.probes.size(); ++i)
        if (int(cfg.probes[i].size()) != m)
            throw ConfigError("probes[" + std::to_string(i) + "]: expected " + std::to_string(m) + " coordinates");
    const DataFamily& d = cfg.data;
    if (d.kind == "constant") {
        if (!std::isfinite(d.value)) throw ConfigError("data.value: must be finite");
    } else if (d.kind == "polynomial") {
        if (d.terms.empty()) throw ConfigError("data.terms: polynomial family needs at least one term");
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
            const std::string w = "data.terms[" + std::to_string(i) + "]";
            if (int(d.terms[i].powers.size()) != m - n)
                throw ConfigError(w + ".powers: expected " + std::to_string(m - n) +
                                  " exponents (one per non-singular coordinate)");
            for (int p : d.terms[i].powers)
                if (p < 0) throw ConfigError(w + ".powers: exponents must be non-negative");
        }
    } else if (d.kind == "exterior-pole") {
        if (int(d.pole.size()) != m) throw ConfigError("data.pole: expected m coordinates");
        double r2 = 0.0;
        for (double v : d.pole) r2 += v * v;
        if (!(r2 > cfg.R * cfg.R)) throw ConfigError("data.pole: must lie outside the ball |x| <= R");
        for (int k = 0; k < n; ++k)
            if (!(d.pole[k] > 0.0)) throw ConfigError("data.pole: singular coordinates must be positive");
    } else {
        throw ConfigError("data.family: expected 'constant', 'polynomial' or 'exterior-pole'");
    }
}

}  // namespace gasp::cli
