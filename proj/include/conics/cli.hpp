#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conics/errors.hpp"
#include "conics/implicitize.hpp"
#include "conics/mubasis.hpp"
#include "conics/oracle.hpp"
#include "conics/parameterize.hpp"
#include "conics/parse.hpp"
#include "conics/pencil.hpp"
#include "conics/quadmap.hpp"
#include "conics/rees.hpp"
#include "conics/singular.hpp"

namespace conics::cli {

using Json = nlohmann::ordered_json;
using R = Rational;

struct Request {
    std::string subcommand;
    std::map<std::string, std::string> inputs;
    std::vector<std::string> points;
    bool verify = false;
    bool json = false;
    std::uint64_t seed = 1;
};

struct Outcome {
    Json result = Json::object();
    Json certificates = Json::object();
};

namespace detail {

inline const std::vector<std::string>& input_names() {
    static const std::vector<std::string> n{"f1", "f2", "a", "b", "u1", "u2", "u3", "q1", "q2", "q3", "E"};
    return n;
}

inline bool has(const Request& r, const std::string& k) { return r.inputs.count(k) > 0; }

// Parse errors carry the option name so the column refers to that string.
template <class Fn>
auto parse_input(const Request& r, const std::string& key, Fn fn) {
    auto it = r.inputs.find(key);
    if (it == r.inputs.end()) throw Error(ErrorCode::PreconditionViolated, "missing --" + key);
    try {
        return fn(it->second);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError)
            throw Error(ErrorCode::ParseError, "--" + key + ": " + std::string(e.what()), e.column());
        throw;
    }
}

inline TernForm<R> tern(const Request& r, const std::string& k) {
    return parse_input(r, k, [](const std::string& s) { return parse_tern(s); });
}
inline BinForm<R> bin(const Request& r, const std::string& k) {
    return parse_input(r, k, [](const std::string& s) { return parse_bin(s); });
}

inline ConicPencil<R> pencil(const Request& r) { return new_pencil(tern(r, "f1"), tern(r, "f2")); }

inline Parameterization<R> param(const Request& r) {
    return make_param(BinTriple<R>{bin(r, "u1"), bin(r, "u2"), bin(r, "u3")});
}

inline ProjPoint<R> point(const std::string& s) {
    std::string body;
    for (char c : s)
        if (c != '(' && c != ')' && c != ' ') body += c == ',' ? ':' : c;
    std::vector<R> v;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ':')) {
        try {
            v.push_back(R::parse(part));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad point coordinate '" + part + "'");
        }
    }
    if (v.size() != 3) throw Error(ErrorCode::ParseError, "a point needs three coordinates");
    return ProjPoint<R>(v[0], v[1], v[2]);
}

inline Json triple(const BinTriple<R>& u) { return Json::array({to_string(u[0]), to_string(u[1]), to_string(u[2])}); }

inline Json bidegree(const BiForm<R>& f) { return Json::array({f.tdeg(), f.xdeg()}); }

inline Json pattern_json(const std::vector<int>& v) {
    Json j = Json::array();
    for (int m : v) j.push_back(m);
    return j;
}

// ---------------------------------------------------------------------------

inline Outcome classify_cmd(const Request& r) {
    Outcome o;
    auto p = pencil(r);
    auto cls = classify(p);
    o.result["class"] = class_name(cls);
    o.result["delta"] = to_string(delta(p));
    o.result["pattern"] = pattern_json(class_pattern(cls));
    if (cls != PencilClass::Degenerate) {
        try {
            Json pts = Json::array();
            for (const auto& bp : base_locus(p, r.seed)) pts.push_back({{"point", bp.point.str()}, {"multiplicity", bp.multiplicity}});
            o.result["base_points"] = pts;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IrrationalBasePoint) throw;
            o.result["base_points"] = "irrational";
        }
    }
    if (r.verify) {
        o.certificates["structural_degeneracy_agrees"] = (cls == PencilClass::Degenerate) == structurally_degenerate(p);
        if (cls != PencilClass::Degenerate) {
            auto rep = base_locus_report(p, r.seed);
            o.certificates["oracle_pattern_agrees"] = rep.pattern == class_pattern(cls);
            o.certificates["modular_pattern_agrees"] = rep.agrees;
        }
    }
    return o;
}

inline Outcome parameterize_cmd(const Request& r) {
    Outcome o;
    auto p = pencil(r);
    auto built = build_from_pencil(p, bin(r, "a"), bin(r, "b"));
    o.result["raw"] = triple(built.raw.u);
    o.result["gcd"] = to_string(built.g);
    o.result["reduced"] = triple(built.reduced.u);
    o.result["degree"] = built.reduced.degree();
    o.result["passes_through_origin"] = hits_origin(built.reduced);
    if (r.verify) o.certificates["inverse_identity"] = check_inverse(built.reduced, p);
    return o;
}

inline Outcome implicitize_cmd(const Request& r) {
    Outcome o;
    if (has(r, "f1") || has(r, "f2")) {
        auto p = pencil(r);
        auto res = implicit_from_pencil(p, bin(r, "a"), bin(r, "b"));
        o.result["E"] = to_string(res.E);
        o.result["H"] = to_string(res.H);
        o.result["nu"] = res.nu;
        o.result["raw"] = to_string(res.raw);
        if (r.verify) {
            auto u = build_from_pencil(p, bin(r, "a"), bin(r, "b")).reduced;
            o.certificates["vanishes_on_curve"] = evaluate_on_param(res.E, u.u).is_zero();
            o.certificates["degree_matches"] = res.E.degree() == u.degree();
            o.certificates["factorization"] = factorization_holds(res);
            if (u.degree() <= 9) o.certificates["oracle_agrees"] = proportional(nullspace_implicitize(u, u.degree()), res.E);
        }
    } else {
        auto a = bin(r, "a"), b = bin(r, "b");
        auto E = monoid_implicit(a, b);
        o.result["E"] = to_string(E);
        o.result["H"] = "1";
        o.result["nu"] = 1;
        if (r.verify) o.certificates["vanishes_on_curve"] = evaluate_on_param(E, monoid_param(a, b).u).is_zero();
    }
    return o;
}

inline Outcome mubasis_cmd(const Request& r) {
    Outcome o;
    auto u = param(r);
    auto mb = compute_mu_basis(u);
    o.result["mu"] = mb.mu;
    o.result["p"] = to_string(mb.p);
    o.result["q"] = to_string(mb.q);
    if (r.verify) {
        o.certificates["cross_product"] = cross_product_check(mb, u);
        o.certificates["p_is_syzygy"] = substitute_param(mb.p, u.u).is_zero();
        o.certificates["q_is_syzygy"] = substitute_param(mb.q, u.u).is_zero();
    }
    return o;
}

inline Outcome rees_cmd(const Request& r) {
    Outcome o;
    auto p = pencil(r);
    Parameterization<R> u;
    if (has(r, "u1"))
        u = param(r);
    else
        u = build_from_pencil(p, bin(r, "a"), bin(r, "b")).reduced;
    auto g = generators(u, p);
    o.result["degree"] = u.degree();
    o.result["mu"] = g.mu_basis.mu;
    Json list = Json::array();
    for (const auto& P : g.list()) list.push_back({{"bidegree", bidegree(P)}, {"form", to_string(P)}});
    o.result["generators"] = list;
    o.result["count"] = list.size();
    if (r.verify) {
        auto c = verify(g, u, p);
        o.certificates["in_kernel"] = c.all_in_kernel;
        o.certificates["count"] = c.count;
        o.certificates["descent_invariant"] = c.descent_invariant;
        o.certificates["last_is_equation"] = c.p0_is_equation;
        o.certificates["degree_bound"] = c.degree_bound;
    }
    return o;
}

inline Outcome transform_cmd(const Request& r) {
    Outcome o;
    QuadraticMap<R> m;
    std::optional<BirationalWitness<R>> w;
    if (has(r, "q1")) {
        m = make_quadratic_map(tern(r, "q1"), tern(r, "q2"), tern(r, "q3"));
    } else {
        auto ext = extend_pencil(pencil(r), r.seed);
        m = ext.map;
        w = ext.witness;
    }
    if (!w) w = invert(m);
    Parameterization<R> src;
    if (has(r, "u1"))
        src = param(r);
    else
        src = monoid_param(bin(r, "a"), bin(r, "b"));
    if (!src.reduced) src = reduce(src);
    auto img = image_of_curve(m, src, w);
    o.result["map"] = Json::array({to_string(m.q[0]), to_string(m.q[1]), to_string(m.q[2])});
    o.result["inverse"] = Json::array({to_string(w->inverse.q[0]), to_string(w->inverse.q[1]), to_string(w->inverse.q[2])});
    o.result["image"] = triple(img.v.u);
    o.result["source_degree"] = src.degree();
    o.result["image_degree"] = img.v.degree();
    o.result["E"] = to_string(img.E);
    o.result["bounds_hold"] = degree_bounds_check(src.degree(), img.v.degree());
    if (r.verify) {
        o.certificates["witness"] = check_witness(m, *w);
        o.certificates["image_vanishes"] = evaluate_on_param(img.E, img.v.u).is_zero();
        if (img.v.degree() <= 9)
            o.certificates["oracle_agrees"] = proportional(nullspace_implicitize(img.v, img.v.degree()), img.E);
    }
    return o;
}

inline Outcome singular_cmd(const Request& r) {
    Outcome o;
    TernForm<R> E;
    std::optional<ConicPencil<R>> p;
    std::optional<BinForm<R>> monoid_a;
    if (has(r, "E")) {
        E = tern(r, "E");
        if (has(r, "f1")) p = pencil(r);
    } else if (has(r, "f1")) {
        p = pencil(r);
        E = implicit_from_pencil(*p, bin(r, "a"), bin(r, "b")).E;
    } else {
        monoid_a = bin(r, "a");
        E = monoid_implicit(*monoid_a, bin(r, "b"));
    }
    o.result["E"] = to_string(E);
    std::vector<ProjPoint<R>> pts;
    for (const auto& s : r.points) pts.push_back(point(s));
    if (p && is_degenerate(*p)) throw Error(ErrorCode::Degenerate, "degenerate pencil");
    if (p) {
        try {
            for (const auto& bp : base_locus(*p, r.seed)) pts.push_back(bp.point);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IrrationalBasePoint) throw;
        }
    }
    if (monoid_a) pts.emplace_back(R(0), R(0), R(1));
    Json mult = Json::array();
    for (const auto& pt : pts) mult.push_back({{"point", pt.str()}, {"multiplicity", multiplicity_at(E, pt)}});
    o.result["multiplicities"] = mult;
    Json sing = Json::array();
    for (const auto& pt : singular_points_among(E, pts)) sing.push_back(pt.str());
    o.result["singular"] = sing;
    if (p && E.degree() >= 3) {
        auto cls = classify(*p);
        if (cls == PencilClass::FourPoints) {
            try {
                o.result["genus_identity"] = genus_identity_check(E, *p);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::IrrationalBasePoint) throw;
            }
        } else if (E.degree() > 6) {
            try {
                o.result["infinitely_near"] = infinitely_near_indicator(E, *p);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::IrrationalBasePoint) throw;
            }
        }
    }
    if (monoid_a) {
        Json br = Json::array();
        for (const auto& b : monoid_branches(*monoid_a).branches) {
            Json j{{"factor", to_string(b.factor)}, {"multiplicity", b.multiplicity}, {"irreducible", b.irreducible}};
            if (b.tangent) {
                j["tangent"] = to_string(*b.tangent);
                j["contact"] = b.contact;
            }
            br.push_back(j);
        }
        o.result["branches"] = br;
    }
    return o;
}

inline Outcome verify_cmd(const Request& r) {
    Outcome o;
    auto p = pencil(r);
    auto cls = classify(p);
    o.result["class"] = class_name(cls);
    if (cls != PencilClass::Degenerate) {
        auto rep = base_locus_report(p, r.seed);
        o.certificates["pattern_agrees"] = rep.pattern == class_pattern(cls);
        o.certificates["modular_pattern_agrees"] = rep.agrees;
    }
    o.certificates["structural_degeneracy_agrees"] = (cls == PencilClass::Degenerate) == structurally_degenerate(p);
    if (has(r, "a") && has(r, "b")) {
        auto built = build_from_pencil(p, bin(r, "a"), bin(r, "b"));
        const auto& u = built.reduced;
        o.result["degree"] = u.degree();
        o.certificates["inverse_identity"] = check_inverse(u, p);
        auto res = implicit_from_pencil(p, bin(r, "a"), bin(r, "b"));
        o.certificates["oracle_implicit_agrees"] = proportional(nullspace_implicitize(u, u.degree()), res.E);
        auto mb = compute_mu_basis(u);
        o.result["mu"] = mb.mu;
        o.certificates["cross_product"] = cross_product_check(mb, u);
        if (mb.mu > 1) {
            auto g = generators(u, p);
            auto c = verify(g, u, p, std::optional<TernForm<R>>(res.E));
            o.certificates["rees_certificates"] = c.ok();
            o.result["generator_count"] = g.list().size();
        }
        auto mirror = modular_mirror({p, built.raw.u}, conics::detail::mirror_primes()[0]);
        o.certificates["modular_mirror_agrees"] = mirror.agrees();
    }
    return o;
}

inline Outcome dispatch(const Request& r) {
    if (r.subcommand == "classify") return classify_cmd(r);
    if (r.subcommand == "parameterize") return parameterize_cmd(r);
    if (r.subcommand == "implicitize") return implicitize_cmd(r);
    if (r.subcommand == "mubasis") return mubasis_cmd(r);
    if (r.subcommand == "rees") return rees_cmd(r);
    if (r.subcommand == "transform") return transform_cmd(r);
    if (r.subcommand == "singular") return singular_cmd(r);
    if (r.subcommand == "verify") return verify_cmd(r);
    throw Error(ErrorCode::PreconditionViolated, "unknown subcommand " + r.subcommand);
}

inline void print_text(std::ostream& out, const std::string& prefix, const Json& j) {
    for (const auto& [k, v] : j.items()) {
        if (v.is_string())
            out << prefix << k << ": " << v.get<std::string>() << "\n";
        else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << prefix << k << ":\n";
            for (const auto& e : v) {
                out << "  -";
                for (const auto& [ek, ev] : e.items())
                    out << " " << ek << "=" << (ev.is_string() ? ev.get<std::string>() : ev.dump());
                out << "\n";
            }
        } else
            out << prefix << k << ": " << v.dump() << "\n";
    }
}

inline Json inputs_json(const Request& r) {
    Json j = Json::object();
    for (const auto& n : input_names())
        if (auto it = r.inputs.find(n); it != r.inputs.end()) j[n] = it->second;
    if (!r.points.empty()) j["points"] = r.points;
    j["seed"] = r.seed;
    return j;
}

inline void load_input_file(const std::string& path, Request& r) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::PreconditionViolated, "cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    for (const auto& n : input_names())
        if (j.contains(n) && !r.inputs.count(n)) r.inputs[n] = j[n].get<std::string>();
    if (j.contains("points") && r.points.empty()) r.points = j["points"].get<std::vector<std::string>>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
}

}  // namespace detail

// Runs one request; returns 0 on success, 1 on invalid input, 2 on a failed internal check.
inline int execute(const Request& req, std::ostream& out, std::ostream& err) {
    Json doc;
    doc["subcommand"] = req.subcommand;
    doc["inputs"] = detail::inputs_json(req);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    int code = 0;
    try {
        o = detail::dispatch(req);
    } catch (const Error& e) {
        code = e.code() == ErrorCode::Internal ? 2 : 1;
        if (req.json) {
            doc["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
            if (e.column() > 0) doc["error"]["column"] = e.column();
            out << doc.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return code;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (const auto& [k, v] : o.certificates.items())
        if (v.is_boolean() && !v.get<bool>()) code = 2;
    if (req.json) {
        doc["result"] = o.result;
        doc["certificates"] = o.certificates;
        doc["timing"] = {{"ms", ms}};
        out << doc.dump(2) << "\n";
    } else {
        detail::print_text(out, "", o.result);
        if (!o.certificates.empty()) {
            out << "certificates:\n";
            for (const auto& [k, v] : o.certificates.items())
                out << "  " << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
        }
    }
    return code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conic-parameterized plane curves: classify, parameterize, implicitize, syzygies and Rees generators"};
    app.require_subcommand(1);
    Request req;
    std::string input_file;
    std::map<std::string, std::string> values;
    const std::vector<std::pair<std::string, std::string>> descr{
        {"classify", "classify a pencil of conics"},
        {"parameterize", "parameterization from a pencil and two binary forms"},
        {"implicitize", "implicit equation with extraneous factor"},
        {"mubasis", "syzygy basis of a parameterization"},
        {"rees", "minimal generators of the kernel of the Rees map"},
        {"transform", "image of a curve under a quadratic transformation"},
        {"singular", "multiplicities and branch data"},
        {"verify", "run the oracle battery on an instance"}};
    for (const auto& [name, text] : descr) {
        auto* sub = app.add_subcommand(name, text);
        for (const auto& n : detail::input_names()) sub->add_option("--" + n, values[n], "polynomial " + n);
        sub->add_option("--point", req.points, "projective point such as (1:1:1)");
        sub->add_option("--input", input_file, "JSON file with the inputs");
        sub->add_flag("--verify,--check", req.verify, "compute certificates");
        sub->add_flag("--json", req.json, "emit one JSON object");
        sub->add_option("--seed", req.seed, "seed for randomized steps");
        sub->callback([&req, name = name]() { req.subcommand = name; });
    }
    std::vector<std::string> argv_store{"conics"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e, out, err);
        return c == 0 ? 0 : 1;
    }
    for (const auto& [k, v] : values)
        if (!v.empty()) req.inputs[k] = v;
    try {
        if (!input_file.empty()) detail::load_input_file(input_file, req);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return execute(req, out, err);
}

}  // namespace conics::cli
