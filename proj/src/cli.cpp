#include "superdix/cli.hpp"

#include <functional>

#include "CLI11.hpp"
#include "superdix/induced.hpp"
#include "superdix/io.hpp"
#include "superdix/orbits.hpp"
#include "superdix/polarization.hpp"

namespace superdix {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct Options {
    std::string algebra;
    std::string lambda;
    std::string other;
    std::string element;
    std::string route = "auto";
    std::string ideal = "full";
    std::string catalogue = SUPERDIX_CATALOGUE_DIR;
    bool json = false;
    unsigned degree = 3;
    unsigned max_probe = 8;
    unsigned tries = 8;
    std::uint64_t seed = 0;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json sdim_json(SuperDim d) { return Json::array({d.even, d.odd}); }

Json basis_json(const SuperLieAlgebra& g, const GradedSubspace& s) {
    Json out = Json::array();
    for (const auto& b : s.basis()) out.push_back(g.format(b));
    return out;
}

std::string join(const Json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : ", ") + v.get<std::string>();
    return "{" + s + "}";
}

std::string report_string(const CheckReport& r) { return r.ok ? "ok" : "FAILED: " + r.message; }

Json report_json(const CheckReport& r) {
    Json j = {{"ok", r.ok}};
    if (!r.ok) j["message"] = r.message;
    return j;
}

struct Loaded {
    AlgebraPtr g;
    Functional lambda;
};

Loaded load_pair(const std::string& alg, const std::string& lam) {
    AlgebraPtr g = load_algebra(alg);
    return {g, load_functional(*g, lam)};
}

SuperDim expected_pq(const SuperLieAlgebra& g, const Functional& lambda) {
    SuperDim kernel = lambda_form(g, lambda).kernel.sdim();
    return {(g.sdim().even - kernel.even) / 2, g.sdim().odd - kernel.odd};
}

int cmd_validate(const Options& o, std::ostream& out) {
    Json j = read_json_file(o.algebra);
    Json rep;
    int code = kTrue;
    try {
        AlgebraPtr g = algebra_from_json(j);
        bool nil = is_nilpotent(*g);
        rep = {{"name", g->name()}, {"valid", true},       {"sdim", sdim_json(g->sdim())},
               {"nilpotent", nil},  {"center", basis_json(*g, center(*g))}};
        if (!nil) code = kFalse;
    } catch (const AxiomViolation& e) {
        rep = {{"valid", false}, {"reason", e.what()}};
        code = kFalse;
    }
    if (o.json) {
        emit(out, rep);
    } else if (!rep["valid"].get<bool>()) {
        out << "invalid: " << rep["reason"].get<std::string>() << "\n";
    } else {
        out << rep["name"].get<std::string>() << ": valid, sdim (" << rep["sdim"][0] << "|" << rep["sdim"][1]
            << "), " << (rep["nilpotent"].get<bool>() ? "nilpotent" : "not nilpotent") << ", center "
            << join(rep["center"]) << "\n";
    }
    return code;
}

int cmd_polarize(const Options& o, std::ostream& out) {
    auto [g, lambda] = load_pair(o.algebra, o.lambda);
    Polarization p = o.route == "recursive" ? polarize_recursive(*g, lambda) : polarize(*g, lambda);
    std::string check = check_polarization(*g, lambda, p.h);
    Json rep = {{"algebra", g->name()},
                {"lambda", functional_to_json(*g, lambda)["values"]},
                {"route", p.route == PolarizationRoute::EvenOddSplit ? "even-odd" : "recursive"},
                {"sdim", sdim_json(p.h.sdim())},
                {"basis", basis_json(*g, p.h)},
                {"kernel", basis_json(*g, lambda_form(*g, lambda).kernel)},
                {"valid", check.empty()}};
    if (!check.empty()) rep["reason"] = check;
    if (o.json) {
        emit(out, rep);
    } else {
        out << "polarization (" << rep["route"].get<std::string>() << "), sdim (" << p.h.sdim().even << "|"
            << p.h.sdim().odd << "): " << join(rep["basis"]) << "\n";
        out << "kernel of lambda form: " << join(rep["kernel"]) << "\n";
        out << "check: " << (check.empty() ? "ok" : check) << "\n";
    }
    return check.empty() ? kTrue : kFalse;
}

std::vector<Scalar> scalars_of(const std::vector<TargetElement>& xs) {
    std::vector<Scalar> out;
    for (const auto& x : xs)
        for (const auto& [k, c] : x.terms()) out.push_back(c);
    return out;
}

Json dixmier_json(const DixmierMorphism& m) {
    const SuperLieAlgebra& g = *m.source();
    Json steps = Json::array();
    for (const auto& s : m.steps())
        steps.push_back(
            {{"kind", to_string(s.kind)}, {"algebra", s.algebra}, {"sdim", sdim_json(s.sdim)}, {"detail", s.detail}});
    Json factors = Json::array();
    for (std::size_t f = 0; f < m.target()->factors().size(); ++f) factors.push_back(m.target()->factor_label(f));
    Json images = Json::object();
    for (std::size_t i = 0; i < g.dim(); ++i) images[g.labels()[i]] = m.generator_images()[i].to_string();
    SuperDim want = expected_pq(g, m.lambda());
    CheckReport rel = validate_step_images(m);
    return {{"p", m.p()},
            {"q", m.q()},
            {"algebra", g.name()},
            {"lambda", functional_to_json(g, m.lambda())["values"]},
            {"formula", {{"p", want.even}, {"q", want.odd}, {"ok", want.even == m.p() && want.odd == m.q()}}},
            {"target", factors},
            {"steps", steps},
            {"images", images},
            {"relations", report_json(rel)},
            {"radicands", radicands_json(scalars_of(m.generator_images()))}};
}

int cmd_dixmier(const Options& o, std::ostream& out) {
    auto [g, lambda] = load_pair(o.algebra, o.lambda);
    DixmierMorphism m = build_dixmier(g, lambda);
    Json rep = dixmier_json(m);
    bool ok = rep["relations"]["ok"].get<bool>() && rep["formula"]["ok"].get<bool>();
    if (o.json) {
        emit(out, rep);
        return ok ? kTrue : kFalse;
    }
    out << "(p, q) = (" << m.p() << ", " << m.q() << "), formula " << (rep["formula"]["ok"].get<bool>() ? "ok" : "MISMATCH")
        << "\n";
    out << "target factors: " << join(rep["target"]) << "\n";
    for (const auto& s : m.steps())
        out << "  " << to_string(s.kind) << " on " << s.algebra << " (" << s.sdim.even << "|" << s.sdim.odd << ")"
            << (s.detail.empty() ? "" : ": " + s.detail) << "\n";
    for (std::size_t i = 0; i < g->dim(); ++i)
        out << "pi(" << g->labels()[i] << ") = " << m.generator_images()[i].to_string() << "\n";
    out << "relations: " << report_string(validate_step_images(m)) << "\n";
    if (!rep["radicands"].empty()) out << "radicands: " << rep["radicands"].dump() << "\n";
    return ok ? kTrue : kFalse;
}

int cmd_member(const Options& o, std::ostream& out) {
    auto [g, lambda] = load_pair(o.algebra, o.lambda);
    PBWElement u = parse_element(g, o.element);
    DixmierMorphism m = build_dixmier(g, lambda);
    bool in = false;
    if (o.ideal == "full") {
        in = member(m, u);
    } else {
        MaximalSplit s = split_maximal(m);
        if (s.already_maximal) throw InputError("I(lambda) is already maximal; use --ideal full");
        in = o.ideal == "plus" ? member_plus(m, s, u) : member_minus(m, s, u);
    }
    Json rep = {{"element", u.to_string()}, {"ideal", o.ideal}, {"member", in}, {"image", m.evaluate(u).to_string()}};
    if (o.json)
        emit(out, rep);
    else
        out << u.to_string() << (in ? " is in " : " is not in ") << "the " << o.ideal << " ideal; image "
            << rep["image"].get<std::string>() << "\n";
    return in ? kTrue : kFalse;
}

int cmd_orbit_eq(const Options& o, std::ostream& out) {
    AlgebraPtr g = load_algebra(o.algebra);
    Functional a = load_functional(*g, o.lambda);
    Functional b = load_functional(*g, o.other);
    OrbitComparison c = orbit_equal(g, a, b, {o.degree, o.tries, o.seed});
    Json rep = {{"verdict", to_string(c.verdict)}, {"degree", c.degree}, {"reason", c.reason}};
    if (c.witness) {
        Json w = Json::array();
        for (const auto& x : *c.witness) w.push_back(vector_to_json(*g, x));
        rep["witness"] = w;
    }
    if (c.separator) rep["separator"] = c.separator->to_string();
    if (o.json) {
        emit(out, rep);
    } else {
        out << to_string(c.verdict) << ": " << c.reason << "\n";
        if (c.witness) {
            out << "witness:";
            if (c.witness->empty()) out << " identity";
            for (const auto& x : *c.witness) out << " exp(ad(" << g->format(x) << "))";
            out << "\n";
        }
        if (c.separator) out << "separator: " << c.separator->to_string() << "\n";
    }
    return exit_code(c.verdict);
}

int cmd_split_max(const Options& o, std::ostream& out) {
    auto [g, lambda] = load_pair(o.algebra, o.lambda);
    DixmierMorphism m = build_dixmier(g, lambda);
    MaximalSplit s = split_maximal(m);
    SplitChecks c = check_split(m, o.degree);
    Json rep = {{"p", m.p()}, {"q", m.q()}, {"already_maximal", s.already_maximal}};
    std::vector<std::pair<std::string, const CheckReport*>> checks;
    if (c.applicable) {
        rep["root"] = s.root.to_string();
        rep["plus_idempotent"] = s.plus_idempotent->to_string();
        rep["minus_idempotent"] = s.minus_idempotent->to_string();
        checks = {{"sigma_swaps", &c.sigma_swaps},
                  {"contain_kernel", &c.contain_kernel},
                  {"intersection", &c.intersection},
                  {"left_ideal_route", &c.left_ideal_route}};
    } else {
        checks = {{"supercenter", &c.supercenter}, {"clifford_full", &c.clifford_full}};
    }
    bool ok = true;
    Json cj = Json::object();
    for (const auto& [name, r] : checks) {
        cj[name] = report_json(*r);
        ok = ok && r->ok;
    }
    rep["checks"] = cj;
    rep["degree"] = o.degree;
    std::vector<Scalar> used{s.root};
    if (c.applicable) {
        auto more = scalars_of({*s.plus_idempotent, *s.minus_idempotent});
        used.insert(used.end(), more.begin(), more.end());
    }
    rep["radicands"] = radicands_json(used);
    if (o.json) {
        emit(out, rep);
    } else {
        out << "(p, q) = (" << m.p() << ", " << m.q() << "), "
            << (s.already_maximal ? "I(lambda) is maximal" : "I(lambda) splits into I+ and I-") << "\n";
        if (c.applicable)
            out << "e+ = " << rep["plus_idempotent"].get<std::string>() << "\ne- = "
                << rep["minus_idempotent"].get<std::string>() << "\n";
        for (const auto& [name, r] : checks) out << name << ": " << report_string(*r) << "\n";
    }
    return ok ? kTrue : kFalse;
}

int cmd_induce(const Options& o, std::ostream& out) {
    auto [g, lambda] = load_pair(o.algebra, o.lambda);
    Polarization p = polarize(*g, lambda);
    Stabilization st = stabilized_annihilator(g, p.h, lambda, o.degree, std::max(o.max_probe, o.degree));
    Subspace kernel = kernel_slice(build_dixmier(g, lambda), o.degree);
    bool match = st.slice == kernel;
    Json rep = {{"polarization", basis_json(*g, p.h)},
                {"degree", o.degree},
                {"probe_degree", st.probe_degree},
                {"stabilized", st.stabilized},
                {"slice_dimension", st.slice.dim()},
                {"kernel_dimension", kernel.dim()},
                {"matches_kernel", match}};
    if (o.json)
        emit(out, rep);
    else
        out << "annihilator slice of degree " << o.degree << ": dimension " << st.slice.dim() << ", "
            << (st.stabilized ? "stabilized at M = " + std::to_string(st.probe_degree)
                              : "not stabilized by M = " + std::to_string(st.probe_degree))
            << "; " << (match ? "equals" : "differs from") << " the kernel slice\n";
    if (!match) return kFalse;
    return st.stabilized ? kTrue : kInconclusive;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    std::filesystem::path dir = o.catalogue;
    Json pairs = read_json_file(dir / "pairs.json");
    Json rows = Json::array();
    bool all = true;
    for (const auto& pr : pairs) {
        std::string name = pr.at("name").get<std::string>();
        Json row = {{"name", name}};
        try {
            auto [g, lambda] = load_pair((dir / pr.at("algebra").get<std::string>()).string(),
                                         (dir / pr.at("functional").get<std::string>()).string());
            Polarization p = polarize(*g, lambda);
            std::string pol = check_polarization(*g, lambda, p.h);
            DixmierMorphism m = build_dixmier(g, lambda);
            SuperDim want = expected_pq(*g, lambda);
            CheckReport rel = validate_step_images(m);
            bool ok = pol.empty() && rel.ok && want.even == m.p() && want.odd == m.q();
            row["p"] = m.p();
            row["q"] = m.q();
            row["ok"] = ok;
            if (!pol.empty()) row["polarization"] = pol;
            if (!rel.ok) row["relations"] = rel.message;
            all = all && ok;
        } catch (const std::exception& e) {
            row["ok"] = false;
            row["error"] = e.what();
            all = false;
        }
        rows.push_back(row);
    }
    if (o.json) {
        emit(out, {{"ok", all}, {"pairs", rows}});
    } else {
        for (const auto& r : rows) {
            out << (r["ok"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>();
            if (r.contains("p")) out << " (p, q) = (" << r["p"] << ", " << r["q"] << ")";
            if (r.contains("error")) out << ": " << r["error"].get<std::string>();
            out << "\n";
        }
    }
    return all ? kTrue : kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dixmier map for nilpotent Lie superalgebras", "superdix"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help, std::function<int(const Options&, std::ostream&)> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, fn, &out, &o] { action = [fn, &out, &o] { return fn(o, out); }; });
        return s;
    };
    auto pair_args = [&](CLI::App* s) {
        s->add_option("algebra", o.algebra, "algebra JSON file")->required();
        s->add_option("lambda", o.lambda, "functional JSON file")->required();
    };

    CLI::App* v = sub("validate", "check the axioms and nilpotency of an algebra file", cmd_validate);
    v->add_option("algebra", o.algebra, "algebra JSON file")->required();

    CLI::App* p = sub("polarize", "compute a polarization at lambda", cmd_polarize);
    pair_args(p);
    p->add_option("--route", o.route, "auto or recursive")->check(CLI::IsMember({"auto", "recursive"}));

    pair_args(sub("dixmier", "build the Dixmier morphism", cmd_dixmier));

    CLI::App* m = sub("member", "test membership in I(lambda) or one of its maximal components", cmd_member);
    pair_args(m);
    m->add_option("--element", o.element, "element expression")->required();
    m->add_option("--ideal", o.ideal, "full, plus or minus")->check(CLI::IsMember({"full", "plus", "minus"}));

    CLI::App* oe = sub("orbit-eq", "compare the coadjoint orbits of two functionals", cmd_orbit_eq);
    oe->add_option("algebra", o.algebra, "algebra JSON file")->required();
    oe->add_option("lambda", o.lambda, "first functional")->required();
    oe->add_option("other", o.other, "second functional")->required();
    oe->add_option("--degree", o.degree, "slice degree for the ideal comparison");
    oe->add_option("--tries", o.tries, "randomized witness restarts");
    oe->add_option("--seed", o.seed, "seed for the randomized restarts");

    CLI::App* sm = sub("split-max", "split I(lambda) into maximal ideals", cmd_split_max);
    pair_args(sm);
    sm->add_option("--degree", o.degree, "slice degree for the checks");

    CLI::App* in = sub("induce", "annihilator of the induced module against the kernel slice", cmd_induce);
    pair_args(in);
    in->add_option("--degree", o.degree, "slice degree");
    in->add_option("--max-probe", o.max_probe, "largest truncation degree");

    CLI::App* st = sub("selftest", "run the catalogue checks", cmd_selftest);
    st->add_option("--catalogue", o.catalogue, "catalogue directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kTrue : kInputError;
    }
    try {
        return action();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
    } catch (const HypothesisError& e) {
        err << "hypothesis not met: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace superdix
