#include "stringy/run.hpp"

#include "stringy/errors.hpp"
#include "stringy/io.hpp"
#include "stringy/mirror.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace stringy {

namespace {

using nlohmann::json;

json json_of(const std::string& text) { return json::parse(text); }

json rat_json(const Rat& q) {
    if (is_integral(q)) return checked_ll(rat_num(q), "value");
    return rat_str(q);
}

InvariantFamily family_of(const RunConfig& cfg) {
    return InvariantFamily(cfg.type_a, cfg.type_b, parse_seed(cfg.seed_text));
}

int cmd_estringy(const RunConfig& cfg, std::ostream& out) {
    Fan f = parse_fan_file(cfg.input_path);
    RationalGF e = stringy_e(f, support_function(f));
    out << (cfg.json ? to_json_text(e) : to_text(e)) << "\n";
    return 0;
}

int cmd_epoly(const RunConfig& cfg, std::ostream& out) {
    Fan f = parse_fan_file(cfg.input_path);
    ScaledLaurent e = orbit_e_poly(f);
    out << (cfg.json ? to_json_text(e) : to_text(e)) << "\n";
    return 0;
}

int cmd_resolve(const RunConfig& cfg, std::ostream& out) {
    Fan f = parse_fan_file(cfg.input_path);
    Refinement r = resolve(f);
    std::vector<Rat> disc = discrepancies(r, support_function(f));
    if (cfg.json) {
        json exc = json::array();
        for (size_t i = 0; i < r.exceptional_rays().size(); ++i) {
            json ray = json::array();
            for (const Int& x : r.exceptional_rays()[i]) ray.push_back(checked_ll(x, "ray entry"));
            exc.push_back({{"ray", ray}, {"discrepancy", rat_json(disc[i])}});
        }
        json j{{"refined", json_of(fan_to_json_text(r.refined()))}, {"exceptional", exc}};
        out << j.dump() << "\n";
    } else {
        out << print_fan(r.refined());
        for (size_t i = 0; i < r.exceptional_rays().size(); ++i) {
            const IntVec& e = r.exceptional_rays()[i];
            out << "exceptional";
            for (const Int& x : e) out << " " << x;
            out << " discrepancy " << rat_str(disc[i]) << "\n";
        }
    }
    return 0;
}

int cmd_phi(const RunConfig& cfg, std::ostream& out) {
    Fan f = parse_fan_file(cfg.input_path);
    InvariantFamily fam = family_of(cfg);
    BivariateRF phi = cfg.via_resolution ? stringy_phi_resolution(f, resolve(f), fam)
                                         : stringy_phi(f, fam);
    out << (cfg.json ? to_json_text(phi) : to_text(phi)) << "\n";
    return 0;
}

int cmd_check_lemma(const RunConfig& cfg, std::ostream& out) {
    Fan f = parse_fan_file(cfg.input_path);
    InvariantFamily fam = family_of(cfg);
    SupportFn sf = support_function(f);
    RationalGF via_sum = stringy_e(f, sf);
    RationalGF via_res = stringy_e_via_resolution(resolve(f), sf);
    bool equal = fam.seed().is_zero() || gf_equal(via_sum, via_res);

    bool laurent = true;
    std::string sum_text, res_text;
    try {
        sum_text = to_text(substitute_t(via_sum, fam.a(), fam.b()) * BivariateRF(fam.seed()));
        res_text = to_text(substitute_t(via_res, fam.a(), fam.b()) * BivariateRF(fam.seed()));
    } catch (const error& e) {
        if (e.code() != errc::fractional_exponent_unresolvable) throw;
        laurent = false;
        sum_text = to_text(via_sum);
        res_text = to_text(via_res);
    }
    if (cfg.json) {
        json j{{"equal", equal},
               {"laurent_in_uv", laurent},
               {"cone_sum", sum_text},
               {"resolution", res_text}};
        out << j.dump() << "\n";
    } else {
        if (!laurent)
            out << "not a Laurent object in (u,v) for type (" << cfg.type_a << "," << cfg.type_b
                << "); comparing in t\n";
        out << sum_text << "\n" << res_text << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_dual(const RunConfig& cfg, std::ostream& out) {
    LatticePolytope p = parse_polytope_file(cfg.input_path);
    QPolytope dual = polar_dual(p);
    bool reflexive = dual.is_integral();
    if (cfg.json) {
        json verts = json::array();
        for (const RatVec& v : dual.vertices()) {
            json row = json::array();
            for (const Rat& q : v) row.push_back(rat_json(q));
            verts.push_back(row);
        }
        json j{{"vertices", verts}, {"reflexive", reflexive}};
        out << j.dump() << "\n";
    } else {
        for (const RatVec& v : dual.vertices()) {
            out << "vertex";
            for (const Rat& q : v) out << " " << rat_str(q);
            out << "\n";
        }
        out << "reflexive " << (reflexive ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_check_mirror(const RunConfig& cfg, std::ostream& out) {
    BivariateRF ev = parse_efunction_file(cfg.ev_path);
    BivariateRF ew = parse_efunction_file(cfg.ew_path);
    MirrorCheckReport est = check_est_mirror(ev, ew, cfg.mirror_n);
    bool holds = est.holds;

    json j;
    if (cfg.json)
        j = json{{"est", {{"holds", est.holds},
                          {"lhs", json_of(to_json_text(est.lhs))},
                          {"rhs", json_of(to_json_text(est.rhs))}}}};
    else {
        out << "est-mirror " << (est.holds ? "holds" : "fails") << "\n";
        out << "  lhs " << to_text(est.lhs) << "\n";
        out << "  rhs " << to_text(est.rhs) << "\n";
    }

    if (cfg.has_type) {
        InvariantFamily fam = family_of(cfg);
        PhiMirrorReport phi = check_phi_mirror(ev, ew, cfg.mirror_n, fam);
        holds = holds && phi.primary.holds;
        if (cfg.json)
            j["phi"] = json{{"holds", phi.primary.holds},
                            {"alt_holds", phi.alt_holds},
                            {"lhs", json_of(to_json_text(phi.primary.lhs))},
                            {"rhs", json_of(to_json_text(phi.primary.rhs))}};
        else {
            out << "phi-mirror " << (phi.primary.holds ? "holds" : "fails") << "\n";
            out << "  lhs " << to_text(phi.primary.lhs) << "\n";
            out << "  rhs " << to_text(phi.primary.rhs) << "\n";
            out << "  alternative seed reading " << (phi.alt_holds ? "holds" : "fails") << "\n";
        }
    }
    if (cfg.json) out << j.dump() << "\n";
    return holds ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case RunConfig::Cmd::estringy: return cmd_estringy(cfg, out);
        case RunConfig::Cmd::epoly: return cmd_epoly(cfg, out);
        case RunConfig::Cmd::resolve: return cmd_resolve(cfg, out);
        case RunConfig::Cmd::phi: return cmd_phi(cfg, out);
        case RunConfig::Cmd::check_lemma: return cmd_check_lemma(cfg, out);
        case RunConfig::Cmd::dual: return cmd_dual(cfg, out);
        case RunConfig::Cmd::check_mirror: return cmd_check_mirror(cfg, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

void parse_type(const std::string& text, RunConfig& cfg) {
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        fail(errc::parse_error, "--type expects 'a,b'");
    try {
        cfg.type_a = std::stoll(text.substr(0, comma));
        cfg.type_b = std::stoll(text.substr(comma + 1));
    } catch (const std::exception&) {
        fail(errc::parse_error, "--type expects 'a,b' with integer entries");
    }
    cfg.has_type = true;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact stringy E- and phi-functions of toric varieties"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string type_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };
    auto add_family = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--type", type_text, "family type a,b");
        if (required) opt->required();
        sub->add_option("--seed", cfg.seed_text, "seed Laurent polynomial in u,v");
    };

    auto* estringy = app.add_subcommand("estringy", "stringy E-function of a fan");
    estringy->add_option("fan", cfg.input_path, "fan file")->required();
    add_common(estringy);

    auto* epoly = app.add_subcommand("epoly", "E-polynomial of the toric variety of a fan");
    epoly->add_option("fan", cfg.input_path, "fan file")->required();
    add_common(epoly);

    auto* resolve_cmd = app.add_subcommand("resolve", "smooth refinement with discrepancies");
    resolve_cmd->add_option("fan", cfg.input_path, "fan file")->required();
    add_common(resolve_cmd);

    auto* phi = app.add_subcommand("phi", "stringy phi-function of type (a,b)");
    phi->add_option("fan", cfg.input_path, "fan file")->required();
    add_family(phi, true);
    phi->add_flag("--via-resolution", cfg.via_resolution, "assemble from a smooth refinement");
    add_common(phi);

    auto* lemma = app.add_subcommand("check-lemma", "compare both phi routes");
    lemma->add_option("fan", cfg.input_path, "fan file")->required();
    add_family(lemma, true);
    add_common(lemma);

    auto* dual = app.add_subcommand("dual", "polar dual of a lattice polytope");
    dual->add_option("polytope", cfg.input_path, "polytope file")->required();
    add_common(dual);

    auto* mirror = app.add_subcommand("check-mirror", "stringy mirror symmetry checks");
    mirror->add_option("--ev", cfg.ev_path, "E-function file of V")->required();
    mirror->add_option("--ew", cfg.ew_path, "E-function file of W")->required();
    mirror->add_option("-n", cfg.mirror_n, "dimension of the pair")->required();
    add_family(mirror, false);
    add_common(mirror);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (estringy->parsed()) cfg.command = RunConfig::Cmd::estringy;
        else if (epoly->parsed()) cfg.command = RunConfig::Cmd::epoly;
        else if (resolve_cmd->parsed()) cfg.command = RunConfig::Cmd::resolve;
        else if (phi->parsed()) cfg.command = RunConfig::Cmd::phi;
        else if (lemma->parsed()) cfg.command = RunConfig::Cmd::check_lemma;
        else if (dual->parsed()) cfg.command = RunConfig::Cmd::dual;
        else if (mirror->parsed()) cfg.command = RunConfig::Cmd::check_mirror;
        if (!type_text.empty()) parse_type(type_text, cfg);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return run(cfg, out, err);
}

} // namespace stringy
