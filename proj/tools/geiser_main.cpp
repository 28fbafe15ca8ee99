/*
   Copyright 2026 the geiser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: exact constructions of the periodic birational
// maps attached to plane foliations of degree 2 and 3.

#include "geiser/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace geiser;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitMathError = 3;

// Split on top-level commas (parentheses-aware).
std::vector<std::string> split_args(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    return parts;
}

struct Options {
    int conductor = 12;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

Foliation foliation_from_options(const Options& opt, const std::string& builtin,
                                 const std::string& field, const std::string& form) {
    if (!builtin.empty()) return builtins::foliation(builtin, opt.conductor);
    if (!field.empty()) {
        auto parts = split_args(field);
        if (parts.size() != 2) throw domain_error("--field expects two expressions: \"X1,X2\"");
        return Foliation::from_field(parse_poly(parts[0], opt.conductor),
                                     parse_poly(parts[1], opt.conductor));
    }
    if (!form.empty()) {
        auto parts = split_args(form);
        if (parts.size() != 3) throw domain_error("--form expects three expressions: \"u,v,w\"");
        return Foliation::from_form(parse_poly(parts[0], opt.conductor),
                                    parse_poly(parts[1], opt.conductor),
                                    parse_poly(parts[2], opt.conductor));
    }
    throw domain_error("provide one of --builtin, --field, --form");
}

BirationalMap map_from_spec(const Options& opt, const std::string& spec) {
    // Three homogeneous expressions "f0:f1:f2" or two affine ones "I1,I2".
    std::vector<std::string> tri;
    {
        int depth = 0;
        std::string current;
        for (char ch : spec) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ':' && depth == 0) {
                tri.push_back(current);
                current.clear();
            } else {
                current += ch;
            }
        }
        tri.push_back(current);
    }
    if (tri.size() == 3)
        return BirationalMap::from_triple(parse_poly(tri[0], opt.conductor),
                                          parse_poly(tri[1], opt.conductor),
                                          parse_poly(tri[2], opt.conductor));
    auto parts = split_args(spec);
    if (parts.size() == 2)
        return BirationalMap::from_affine(parse_rational(parts[0], opt.conductor),
                                          parse_rational(parts[1], opt.conductor));
    throw domain_error("map spec must be \"f0:f1:f2\" or \"I1,I2\"");
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json())
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_parse(const Options& opt, const std::string& expr) {
    RationalFunction f = parse_rational(expr, opt.conductor);
    json doc{{"input", expr}, {"canonical", f.to_string()},
             {"polynomial", f.is_polynomial()}};
    std::ostringstream text;
    text << f.to_string() << "\n";
    emit(opt, doc, text.str());
    return 0;
}

int run_flex(const Options& opt, const std::string& builtin, const std::string& field,
             const std::string& form) {
    Foliation F = foliation_from_options(opt, builtin, field, form);
    MultiPoly H = inflection_polynomial(F);
    auto [ex, ey] = singular_elimination(F);
    json doc{{"degree", foliation_degree(F)},
             {"form", {F.form().u.to_string(), F.form().v.to_string(), F.form().w.to_string()}},
             {"field", {F.field().X1.to_string(), F.field().X2.to_string()}},
             {"inflection", H.to_string()},
             {"singular_eliminant_x", ex.to_string()},
             {"singular_eliminant_y", ey.to_string()}};
    std::ostringstream text;
    text << "degree: " << foliation_degree(F) << "\n"
         << "field: (" << F.field().X1 << ", " << F.field().X2 << ")\n"
         << "form: (" << F.form().u << ", " << F.form().v << ", " << F.form().w << ")\n"
         << "inflection polynomial: " << H << "\n"
         << "singular eliminant in x: " << ex << "\n"
         << "singular eliminant in y: " << ey << "\n";
    emit(opt, doc, text.str());
    return 0;
}

int run_involution(const Options& opt, const std::string& builtin, const std::string& field,
                   const std::string& form) {
    Foliation F = foliation_from_options(opt, builtin, field, form);
    BirationalMap I = involution_from_quadratic(F);
    MultiPoly fix = fixed_curve(I);
    auto cert = indeterminacy_certificate(I);
    auto [i1, i2] = I.affine_pair();
    json doc{{"degree", I.degree()},
             {"triple", {I.triple()[0].to_string(), I.triple()[1].to_string(), I.triple()[2].to_string()}},
             {"affine", {i1.to_string(), i2.to_string()}},
             {"fixed_curve", fix.to_string()},
             {"indeterminacy_eliminant_x", cert.elim_x.to_string()},
             {"indeterminacy_eliminant_y", cert.elim_y.to_string()},
             {"indeterminacy_at_infinity", cert.at_infinity.to_string()},
             {"involution", verify_period(I, 2)}};
    std::ostringstream text;
    text << "I = " << I << "\n"
         << "degree: " << I.degree() << "\n"
         << "affine: (" << i1 << ", " << i2 << ")\n"
         << "fixed curve: " << fix << "\n"
         << "Ind eliminant in x: " << cert.elim_x << "\n"
         << "Ind eliminant in y: " << cert.elim_y << "\n"
         << "Ind at infinity: " << cert.at_infinity << "\n"
         << "verified involution: " << (verify_period(I, 2) ? "yes" : "no") << "\n";
    emit(opt, doc, text.str());
    return 0;
}

int run_trivolution(const Options& opt, const std::string& builtin, const std::string& field,
                    const std::string& form) {
    Foliation F = foliation_from_options(opt, builtin, field, form);
    auto res = trivolution_from_cubic(F);
    json doc{{"delta", res.disc.delta.to_string()},
             {"a", res.disc.a.to_string()},
             {"b", res.disc.b.to_string()},
             {"c", res.disc.c.to_string()},
             {"square", res.square.has_value()}};
    std::ostringstream text;
    text << "Delta(P) = " << res.disc.delta << "\n";
    if (res.square) {
        doc["kappa"] = res.square->first.to_string();
        doc["s"] = res.square->second.to_string();
        text << "Delta(P) = kappa * s^2 with kappa = " << res.square->first.to_string()
             << ", s = " << res.square->second << "\n";
    } else {
        text << "Delta(P) is not a square over C: no trivolution\n";
    }
    if (res.maps) {
        auto [a1, a2] = res.maps->first.affine_pair();
        auto [b1, b2] = res.maps->second.affine_pair();
        doc["T1"] = {res.maps->first.triple()[0].to_string(), res.maps->first.triple()[1].to_string(),
                     res.maps->first.triple()[2].to_string()};
        doc["T2"] = {res.maps->second.triple()[0].to_string(), res.maps->second.triple()[1].to_string(),
                     res.maps->second.triple()[2].to_string()};
        doc["T1_affine"] = {a1.to_string(), a2.to_string()};
        doc["T2_affine"] = {b1.to_string(), b2.to_string()};
        doc["degree"] = res.maps->first.degree();
        doc["period3"] = verify_period(res.maps->first, 3);
        doc["aligned"] = alignment_check(res.maps->first);
        text << "T1 = " << res.maps->first << "\n"
             << "T1 affine: (" << a1 << ", " << a2 << ")\n"
             << "T2 affine: (" << b1 << ", " << b2 << ")\n"
             << "degree: " << res.maps->first.degree() << "\n"
             << "period 3 verified: " << (verify_period(res.maps->first, 3) ? "yes" : "no") << "\n"
             << "alignment: " << (alignment_check(res.maps->first) ? "yes" : "no") << "\n";
    }
    emit(opt, doc, text.str());
    return 0;
}

int run_seven_points(const Options& opt, const std::string& points) {
    auto triples = [&] {
        std::vector<std::pair<CycNumber, CycNumber>> out;
        for (const std::string& pt : [&] {
                 std::vector<std::string> ps;
                 std::string cur;
                 for (char ch : points) {
                     if (ch == ';') {
                         ps.push_back(cur);
                         cur.clear();
                     } else {
                         cur += ch;
                     }
                 }
                 ps.push_back(cur);
                 return ps;
             }()) {
            auto xy = split_args(pt);
            if (xy.size() != 2) throw domain_error("--points expects \"x1,y1;x2,y2;x3,y3\"");
            out.emplace_back(parse_poly(xy[0], opt.conductor).constant_value(),
                             parse_poly(xy[1], opt.conductor).constant_value());
        }
        return out;
    }();
    if (triples.size() != 3) throw domain_error("--points expects exactly three points");
    std::array<std::pair<CycNumber, CycNumber>, 3> pts{triples[0], triples[1], triples[2]};
    NormalizedQuadraticCoefficients q = seven_points_solve(pts);
    GeiserClosedForm cf = geiser_closed_form(q);
    auto [i1, i2] = cf.map.affine_pair();
    json doc{{"a", q.a.to_string()},     {"b", q.b.to_string()},     {"c", q.c.to_string()},
             {"e", q.e().to_string()},   {"A", q.A.to_string()},     {"B", q.B.to_string()},
             {"C", q.C.to_string()},     {"E", q.E().to_string()},   {"U1", cf.U1.to_string()},
             {"V1", cf.V1.to_string()},  {"U2", cf.U2.to_string()},  {"V2", cf.V2.to_string()},
             {"T", cf.T.to_string()},    {"degree", cf.map.degree()},
             {"involution_affine", {i1.to_string(), i2.to_string()}},
             {"involution_triple",
              {cf.map.triple()[0].to_string(), cf.map.triple()[1].to_string(),
               cf.map.triple()[2].to_string()}}};
    std::ostringstream text;
    text << "coefficients: a = " << q.a.to_string() << ", b = " << q.b.to_string()
         << ", c = " << q.c.to_string() << ", e = " << q.e().to_string() << "\n"
         << "              A = " << q.A.to_string() << ", B = " << q.B.to_string()
         << ", C = " << q.C.to_string() << ", E = " << q.E().to_string() << "\n"
         << "U1 = " << cf.U1 << "\nV1 = " << cf.V1 << "\nU2 = " << cf.U2 << "\nV2 = " << cf.V2
         << "\nT = " << cf.T << "\n"
         << "involution (affine): (" << i1 << ", " << i2 << ")\n"
         << "involution (triple): " << cf.map << "\n"
         << "degree: " << cf.map.degree() << "\n";
    emit(opt, doc, text.str());
    return 0;
}

CycNumber parse_param(const Options& opt, const std::string& text) {
    return parse_poly(text, opt.conductor).constant_value();
}

int run_family(const Options& opt, const std::string& alpha, const std::string& lambda,
               const std::string& mu, const std::string& nu) {
    HomogeneousFamilyParams p{parse_param(opt, alpha), parse_param(opt, lambda),
                              parse_param(opt, mu), parse_param(opt, nu)};
    auto built = homogeneous_family_build(p);
    bool square = quartic_square_test(BinaryQuartic(built.r));
    json doc{{"r", json::array()}, {"square", square},
             {"field", {built.foliation.field().X1.to_string(), built.foliation.field().X2.to_string()}}};
    for (const auto& r : built.r) doc["r"].push_back(r.to_string());
    std::ostringstream text;
    text << "field: (" << built.foliation.field().X1 << ", " << built.foliation.field().X2 << ")\n"
         << "r = (";
    for (int k = 0; k < 5; ++k) text << built.r[static_cast<std::size_t>(k)].to_string() << (k < 4 ? " : " : ")\n");
    text << "R is a square over C: " << (square ? "yes" : "no") << "\n";
    if (square) {
        try {
            auto res = trivolution_from_cubic(built.foliation);
            if (res.maps) {
                auto [a1, a2] = res.maps->first.affine_pair();
                doc["T1_affine"] = {a1.to_string(), a2.to_string()};
                doc["degree"] = res.maps->first.degree();
                text << "T1 affine: (" << a1 << ", " << a2 << ")\n"
                     << "degree: " << res.maps->first.degree() << "\n";
            }
        } catch (const extension_required& e) {
            doc["extension_required"] = e.what();
            text << "trivolution needs a field extension: " << e.what() << "\n";
        }
    }
    emit(opt, doc, text.str());
    return 0;
}

int run_scan(const Options& opt, const std::string& alpha, const std::string& grid_spec) {
    CycNumber a = parse_param(opt, alpha);
    // Grid spec "lo,hi,den;lo,hi,den;lo,hi,den" for lambda; mu; nu.
    std::vector<std::array<long, 3>> ranges;
    for (const std::string& part : [&] {
             std::vector<std::string> ps;
             std::string cur;
             for (char ch : grid_spec) {
                 if (ch == ';') {
                     ps.push_back(cur);
                     cur.clear();
                 } else {
                     cur += ch;
                 }
             }
             ps.push_back(cur);
             return ps;
         }()) {
        auto nums = split_args(part);
        if (nums.size() != 3) throw domain_error("--grid expects \"lo,hi,den;lo,hi,den;lo,hi,den\"");
        ranges.push_back({std::stol(nums[0]), std::stol(nums[1]), std::stol(nums[2])});
    }
    if (ranges.size() != 3) throw domain_error("--grid expects three ranges");
    std::vector<HomogeneousFamilyParams> grid;
    for (long l = ranges[0][0]; l <= ranges[0][1]; ++l)
        for (long m = ranges[1][0]; m <= ranges[1][1]; ++m)
            for (long n = ranges[2][0]; n <= ranges[2][1]; ++n) {
                HomogeneousFamilyParams p{a,
                                          CycNumber::from_rational(opt.conductor, BigRational(l, ranges[0][2])),
                                          CycNumber::from_rational(opt.conductor, BigRational(m, ranges[1][2])),
                                          CycNumber::from_rational(opt.conductor, BigRational(n, ranges[2][2]))};
                if (p.admissible()) grid.push_back(p);
            }
    ScanReport report = family_parameter_scan(grid);
    json rows = json::array();
    std::ostringstream text;
    for (const auto& row : report.rows) {
        json r{{"alpha", row.params.alpha.to_string()},
               {"lambda", row.params.lambda.to_string()},
               {"mu", row.params.mu.to_string()},
               {"nu", row.params.nu.to_string()},
               {"square", row.is_square}};
        json rv = json::array();
        for (const auto& v : row.r) rv.push_back(v.to_string());
        r["r"] = rv;
        if (row.soleil_match) r["soleil_consistent"] = *row.soleil_match;
        rows.push_back(std::move(r));
        text << "(" << row.params.alpha.to_string() << ", " << row.params.lambda.to_string() << ", "
             << row.params.mu.to_string() << ", " << row.params.nu.to_string()
             << "): square = " << (row.is_square ? "yes" : "no");
        if (row.soleil_match) text << ", soleil consistent = " << (*row.soleil_match ? "yes" : "no");
        text << "\n";
    }
    json doc{{"points", rows}, {"all_soleil_consistent", report.all_soleil_consistent}};
    text << "points: " << report.rows.size()
         << ", soleil-consistent: " << (report.all_soleil_consistent ? "yes" : "no") << "\n";
    emit(opt, doc, text.str());
    return report.all_soleil_consistent ? 0 : kExitVerifyFailure;
}

int run_web_check(const Options& opt, const std::string& f0_expr, const std::string& map_spec,
                  const std::string& builtin_field) {
    BirationalMap T = [&] {
        if (!map_spec.empty()) return map_from_spec(opt, map_spec);
        Foliation F = builtins::foliation(builtin_field, opt.conductor);
        auto res = trivolution_from_cubic(F);
        if (!res.maps) throw domain_error("builtin foliation produces no trivolution");
        return res.maps->first;
    }();
    RationalFunction f0 = parse_rational(f0_expr, opt.conductor);
    WebTriple w = WebTriple::from_map(f0, T);
    auto rel = abelian_relation(w);
    json doc{{"f0", w.f0.to_string()}, {"f1", w.f1.to_string()}, {"f2", w.f2.to_string()},
             {"hexagonal", rel.has_value()}};
    std::ostringstream text;
    text << "f0 = " << w.f0 << "\nf1 = f0 o T = " << w.f1 << "\nf2 = f0 o T^2 = " << w.f2 << "\n";
    if (rel) {
        json a = json::array();
        for (const auto& v : *rel) a.push_back(v.to_string());
        doc["relation"] = a;
        text << "abelian relation: a = (" << (*rel)[0].to_string() << ", " << (*rel)[1].to_string()
             << ", " << (*rel)[2].to_string() << ")\n";
    } else {
        text << "no abelian relation: only the trivial one\n";
    }
    emit(opt, doc, text.str());
    return 0;
}

int run_verify(const Options& opt, std::string golden_dir, bool write_golden) {
    if (golden_dir.empty())
        if (const char* env = std::getenv("GEISER_GOLDEN_DIR")) golden_dir = env;
    auto items = verify::suite(opt.conductor);
    auto results = verify::run(items);
    int failures = 0;
    json rows = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        bool golden_ok = true;
        std::string golden_note;
        if (!golden_dir.empty() && !r.artifact.empty()) {
            std::filesystem::path path = std::filesystem::path(golden_dir) / (r.name + ".txt");
            if (write_golden) {
                std::ofstream out(path);
                out << r.artifact;
                golden_note = " [golden written]";
            } else if (std::filesystem::exists(path)) {
                std::ifstream in(path);
                std::stringstream buffer;
                buffer << in.rdbuf();
                golden_ok = buffer.str() == r.artifact;
                golden_note = golden_ok ? " [golden ok]" : " [golden MISMATCH]";
            } else {
                golden_ok = false;
                golden_note = " [golden missing]";
            }
        }
        bool pass = r.pass && golden_ok;
        failures += pass ? 0 : 1;
        rows.push_back(json{{"name", r.name}, {"criterion", r.criterion}, {"pass", pass}});
        text << (pass ? "ok   " : "FAIL ") << r.name << golden_note << "\n";
        if (!r.pass) text << r.detail;
    }
    json doc{{"items", rows}, {"failures", failures}};
    text << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks failed") << "\n";
    emit(opt, doc, text.str());
    return failures == 0 ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geiser: exact periodic birational maps from plane foliations"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--conductor", opt.conductor, "cyclotomic conductor N for Q(zeta_N)")
        ->default_val(12);
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    std::string expr, builtin, field, form, points, map_spec, f0_expr;
    std::string alpha, lambda = "1", mu = "1", nu = "1";
    std::string grid = "-8,8,2;-8,8,2;-4,4,1";
    std::string golden_dir;
    bool write_golden = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse an expression and print its canonical form");
    parse_cmd->add_option("--expr", expr, "expression")->required();

    auto add_foliation_opts = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", builtin, "builtin foliation name");
        cmd->add_option("--field", field, "affine vector field \"X1,X2\"");
        cmd->add_option("--form", form, "homogeneous 1-form \"u,v,w\"");
    };
    auto* flex_cmd = app.add_subcommand("flex", "degree, inflection polynomial and singular locus");
    add_foliation_opts(flex_cmd);
    auto* inv_cmd = app.add_subcommand("involution", "involution of a degree-2 foliation");
    add_foliation_opts(inv_cmd);
    auto* tri_cmd = app.add_subcommand("trivolution", "trivolution of a degree-3 foliation");
    add_foliation_opts(tri_cmd);

    auto* seven_cmd = app.add_subcommand("seven-points", "Geiser involution from three extra points");
    seven_cmd->add_option("--points", points, "three points \"x1,y1;x2,y2;x3,y3\"")->required();

    auto* family_cmd = app.add_subcommand("family", "homogeneous degree-3 family member");
    family_cmd->add_option("--alpha", alpha, "alpha")->required();
    family_cmd->add_option("--lambda", lambda, "lambda");
    family_cmd->add_option("--mu", mu, "mu");
    family_cmd->add_option("--nu", nu, "nu");

    auto* scan_cmd = app.add_subcommand("scan", "scan family parameters for square discriminants");
    scan_cmd->add_option("--alpha", alpha, "alpha")->required();
    scan_cmd->add_option("--grid", grid, "ranges \"lo,hi,den;lo,hi,den;lo,hi,den\" for lambda;mu;nu");

    auto* web_cmd = app.add_subcommand("web-check", "hexagonality certificate for f0, f0 T, f0 T^2");
    web_cmd->add_option("--f0", f0_expr, "first integral")->required();
    web_cmd->add_option("--map", map_spec, "trivolution \"I1,I2\" or \"f0:f1:f2\"");
    web_cmd->add_option("--builtin", builtin, "builtin degree-3 foliation supplying the trivolution");

    auto* verify_cmd = app.add_subcommand("verify", "replay the built-in suite of paper examples");
    verify_cmd->add_option("--golden-dir", golden_dir,
                           "directory of golden artifacts (default: env GEISER_GOLDEN_DIR)");
    verify_cmd->add_flag("--write-golden", write_golden, "write golden artifacts instead of checking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    try {
        if (parse_cmd->parsed()) return run_parse(opt, expr);
        if (flex_cmd->parsed()) return run_flex(opt, builtin, field, form);
        if (inv_cmd->parsed()) return run_involution(opt, builtin, field, form);
        if (tri_cmd->parsed()) return run_trivolution(opt, builtin, field, form);
        if (seven_cmd->parsed()) return run_seven_points(opt, points);
        if (family_cmd->parsed()) return run_family(opt, alpha, lambda, mu, nu);
        if (scan_cmd->parsed()) return run_scan(opt, alpha, grid);
        if (web_cmd->parsed()) return run_web_check(opt, f0_expr, map_spec, builtin);
        if (verify_cmd->parsed()) return run_verify(opt, golden_dir, write_golden);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathError;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return 0;
}
