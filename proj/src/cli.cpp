#include "tilt3/cli.hpp"

#include "tilt3/fano.hpp"
#include "tilt3/model_io.hpp"
#include "tilt3/rr.hpp"
#include "tilt3/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace tilt3::cli {

namespace {

// A builtin entry by name, or a model file wrapped with Gamma = 0.
FanoEntry resolve_model(const std::string& name_or_path) {
    for (const auto& e : builtin_models())
        if (e.model->name() == name_or_path) return e;
    if (name_or_path.find('.') != std::string::npos || name_or_path.find('/') != std::string::npos) {
        ModelPtr m = model_from_file(name_or_path);
        return {m, GammaClass::zero(m), "loaded from " + name_or_path};
    }
    throw std::invalid_argument("unknown model '" + name_or_path +
                                "' (use `model list` or pass a JSON path)");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct SvgCanvas {
    // fixed viewport: beta in [-3, 3], alpha in (0, 3]
    static constexpr double kBetaMin = -3, kBetaMax = 3, kAlphaMax = 3;
    static constexpr int kWidth = 720, kHeight = 360;
    std::ostringstream body;

    double px(double beta) const { return (beta - kBetaMin) / (kBetaMax - kBetaMin) * kWidth; }
    double py(double alpha) const { return kHeight - alpha / kAlphaMax * kHeight; }

    void polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
        if (pts.size() < 2) return;
        body << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [b, a] : pts) body << fmt(px(b)) << "," << fmt(py(a)) << " ";
        body << "\"/>\n";
    }

    void vertical(double beta, const char* color) {
        body << "<line stroke=\"" << color << "\" stroke-width=\"1.5\" x1=\"" << fmt(px(beta))
             << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(beta)) << "\" y2=\""
             << fmt(py(kAlphaMax)) << "\"/>\n";
    }

    std::string finish() const {
        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
            << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
            << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
            << "<line stroke=\"#888\" x1=\"" << fmt(px(0)) << "\" y1=\"0\" x2=\"" << fmt(px(0))
            << "\" y2=\"" << kHeight << "\"/>\n"
            << body.str() << "</svg>\n";
        return svg.str();
    }
};

void plot_hyperbola(SvgCanvas& canvas, const ChernCharacter& v) {
    HContraction hv = h_contract(v);
    double v0 = hv.v0.to_double(), v1 = hv.v1.to_double(), v2 = hv.v2.to_double();
    if (hv.v0.is_zero()) {
        if (!hv.v1.is_zero()) canvas.vertical(v2 / v1, "#d62728");
        return;
    }
    // nu = 0: alpha^2 = beta^2 - 2 (v1/v0) beta + 2 v2/v0
    std::vector<std::pair<double, double>> branch;
    const int steps = 1200;
    for (int i = 0; i <= steps; ++i) {
        double beta = SvgCanvas::kBetaMin + (SvgCanvas::kBetaMax - SvgCanvas::kBetaMin) * i / steps;
        double asq = beta * beta - 2 * (v1 / v0) * beta + 2 * v2 / v0;
        if (asq > 0) {
            branch.emplace_back(beta, std::sqrt(asq));
        } else if (!branch.empty()) {
            canvas.polyline(branch, "#d62728");
            branch.clear();
        }
    }
    canvas.polyline(branch, "#d62728");
}

void plot_wall(SvgCanvas& canvas, const WallDescriptor& wall) {
    if (wall.is_vertical()) {
        canvas.vertical(wall.beta_wall.to_double(), "#1f77b4");
        return;
    }
    double c = wall.center_beta.to_double();
    double r = std::sqrt(wall.radius_sq.to_double());
    std::vector<std::pair<double, double>> arc;
    const int steps = 256;
    for (int i = 0; i <= steps; ++i) {
        double t = M_PI * i / steps;
        arc.emplace_back(c - r * std::cos(t), r * std::sin(t));
    }
    canvas.polyline(arc, "#1f77b4");
}

int cmd_verify_paper(std::ostream& out) {
    auto results = verify::run_acceptance_suite();
    bool all = true;
    for (const auto& c : results) {
        for (const auto& check : c.checks) {
            out << (check.pass ? "PASS" : "FAIL") << "  [" << c.number << "] " << check.label;
            if (!check.detail.empty()) out << "  (" << check.detail << ")";
            out << "\n";
            all = all && check.pass;
        }
    }
    int criteria_passed = 0;
    for (const auto& c : results) criteria_passed += c.pass();
    out << (all ? "OK" : "FAILED") << ": " << criteria_passed << "/" << results.size()
        << " criteria passed\n";
    return all ? 0 : 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tilt-stability and toric Frobenius calculator for polarized threefolds"};
    app.name("tilt3");
    app.require_subcommand(1);

    std::string model_name, class_expr, pair_expr, v_expr, w_expr_single, divisor_expr;
    std::vector<std::string> w_exprs;
    std::string alpha_str, beta_str, alpha_sq_str, gamma_str = "builtin";
    std::string out_path, format = "text";
    unsigned long frob_m = 1;
    unsigned grid_n = 0;
    bool chi_frobenius = false;

    // model list | show | validate
    auto* model_cmd = app.add_subcommand("model", "inspect intersection models");
    auto* model_list = model_cmd->add_subcommand("list", "list builtin models");
    auto* model_show = model_cmd->add_subcommand("show", "print a model as JSON");
    model_show->add_option("name", model_name, "builtin name or JSON path")->required();
    bool show_fan = false;
    model_show->add_flag("--fan", show_fan, "print the toric fan schema instead");
    auto* model_validate = model_cmd->add_subcommand("validate", "check model invariants");
    model_validate->add_option("name", model_name, "builtin name or JSON path")->required();

    auto add_model_opt = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_name, "builtin name or JSON path")->required();
    };

    auto* nu_cmd = app.add_subcommand("nu", "tilt slope nu_{alpha,beta} of a class");
    add_model_opt(nu_cmd);
    nu_cmd->add_option("--class", class_expr, "O(...), div(...) or JSON")->required();
    nu_cmd->add_option("--alpha", alpha_str, "alpha > 0, scalar literal");
    nu_cmd->add_option("--alpha-sq", alpha_sq_str, "alpha^2 > 0, scalar literal");
    nu_cmd->add_option("--beta", beta_str, "beta, scalar literal")->required();

    auto* mu_cmd = app.add_subcommand("mu", "slope mu of a class");
    add_model_opt(mu_cmd);
    mu_cmd->add_option("--class", class_expr)->required();

    auto* bb_cmd = app.add_subcommand("beta-bar", "beta-bar and beta+- of a class");
    add_model_opt(bb_cmd);
    bb_cmd->add_option("--class", class_expr)->required();

    auto* wall_cmd = app.add_subcommand("wall", "numerical wall between two classes");
    add_model_opt(wall_cmd);
    wall_cmd->add_option("--v", v_expr)->required();
    wall_cmd->add_option("--w", w_expr_single)->required();
    wall_cmd->add_option("--format", format, "text or json");

    auto* bmt_cmd = app.add_subcommand(
        "check-bmt", "degree-3 inequality and Q-form values at a point or over a grid");
    add_model_opt(bmt_cmd);
    bmt_cmd->add_option("--class", class_expr)->required();
    bmt_cmd->add_option("--gamma", gamma_str, "0, builtin, or k(h^2+2e^2)-style");
    bmt_cmd->add_option("--alpha", alpha_str);
    bmt_cmd->add_option("--beta", beta_str);
    bmt_cmd->add_option("--grid", grid_n, "evaluate on an N x N grid (CSV)");

    auto* li_cmd = app.add_subcommand("li-check", "discriminant lower bound check");
    add_model_opt(li_cmd);
    li_cmd->add_option("--class", class_expr)->required();

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristics via Riemann-Roch");
    add_model_opt(chi_cmd);
    chi_cmd->add_option("--class", class_expr)->required();
    chi_cmd->add_option("--pair", pair_expr, "compute chi(PAIR, CLASS)");
    chi_cmd->add_flag("--frobenius", chi_frobenius,
                      "cubic coefficients of m -> chi of the Frobenius pullback");

    auto* frob_cmd = app.add_subcommand("frobenius-decompose",
                                        "toric Frobenius pushforward of a line bundle");
    add_model_opt(frob_cmd);
    frob_cmd->add_option("--divisor", divisor_expr, "divisor expression, e.g. \"2h-e\"")
        ->required();
    frob_cmd->add_option("--m", frob_m, "Frobenius degree m >= 1")->required();

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in verification suite");
    verify_cmd->add_option("--model", model_name, "accepted for compatibility; suite is global");

    auto* plot_cmd = app.add_subcommand("plot-walls", "emit an SVG of walls and the nu=0 curve");
    add_model_opt(plot_cmd);
    plot_cmd->add_option("--v", v_expr)->required();
    plot_cmd->add_option("--w", w_exprs, "wall partners (repeatable)");
    plot_cmd->add_option("--out", out_path, "output SVG path; descriptors go to PATH.csv");
    plot_cmd->add_option("--format", format, "svg or csv (stdout when --out is missing)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (model_list->parsed()) {
            out << "name              rank  H^3   (-K)^3  index\n";
            for (const auto& e : builtin_models()) {
                auto mk = e.model->c1_tangent();
                Scalar deg = triple(mk, mk, mk);
                std::string index = e.model->fano_index()
                                        ? std::to_string(*e.model->fano_index())
                                        : std::string("-");
                char line[128];
                std::snprintf(line, sizeof(line), "%-17s %-5zu %-5s %-7s %s\n",
                              e.model->name().c_str(), e.model->picard_rank(),
                              e.model->h_cubed().str().c_str(), deg.str().c_str(), index.c_str());
                out << line;
            }
            return 0;
        }
        if (model_show->parsed()) {
            auto entry = resolve_model(model_name);
            if (show_fan)
                out << fan_to_json(builtin_toric_model(entry.model->name())) << "\n";
            else
                out << model_to_json(entry.model) << "\n";
            return 0;
        }
        if (model_validate->parsed()) {
            auto violations = validate_model(resolve_model(model_name).model);
            if (violations.empty()) {
                out << "OK\n";
                return 0;
            }
            for (const auto& v : violations) out << "violation: " << v << "\n";
            return 2;
        }

        if (nu_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter ch = parse_class_expr(entry.model, class_expr);
            Scalar beta = Scalar::parse(beta_str);
            SlopeValue s;
            if (!alpha_sq_str.empty())
                s = nu_alpha_sq(ch, Scalar::parse(alpha_sq_str), beta);
            else if (!alpha_str.empty())
                s = nu(ch, Scalar::parse(alpha_str), beta);
            else
                throw std::invalid_argument("nu needs --alpha or --alpha-sq");
            out << s.str() << "\n";
            return 0;
        }
        if (mu_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            out << mu(parse_class_expr(entry.model, class_expr)).str() << "\n";
            return 0;
        }
        if (bb_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter ch = parse_class_expr(entry.model, class_expr);
            out << "beta_bar = " << beta_bar(ch).str() << "\n";
            out << "discriminant = " << discriminant(ch).str() << "\n";
            if (!h_contract(ch).v0.is_zero()) {
                auto [lo, hi] = beta_pm(ch);
                out << "beta_- = " << lo.str() << "\nbeta_+ = " << hi.str() << "\n";
            }
            return 0;
        }
        if (wall_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            WallDescriptor wall = wall_between(parse_class_expr(entry.model, v_expr),
                                               parse_class_expr(entry.model, w_expr_single));
            if (format == "json") {
                out << wall_to_json(wall) << "\n";
            } else if (wall.is_vertical()) {
                out << "vertical wall: beta = " << wall.beta_wall.str() << "\n";
            } else {
                out << "semicircle: center " << wall.center_beta.str() << ", radius_sq "
                    << wall.radius_sq.str() << "\n";
            }
            return 0;
        }
        if (bmt_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter ch = parse_class_expr(entry.model, class_expr);
            GammaClass gamma = parse_gamma_expr(entry, gamma_str);
            if (grid_n > 0) {
                out << "alpha,beta,inequality,q_form\n";
                for (unsigned i = 1; i <= grid_n; ++i)
                    for (unsigned j = 0; j < grid_n; ++j) {
                        Scalar alpha(Rational(3L * i, static_cast<long>(grid_n)));
                        Scalar beta = grid_n == 1
                                          ? Scalar(0)
                                          : Scalar(Rational(-3L * (grid_n - 1) + 6L * j,
                                                            static_cast<long>(grid_n - 1)));
                        out << alpha.str() << "," << beta.str() << ","
                            << gamma_inequality(ch, alpha, beta, gamma).str() << ","
                            << q_form(ch, alpha, beta, gamma).str() << "\n";
                    }
                return 0;
            }
            Scalar alpha = alpha_str.empty() ? Scalar(0) : Scalar::parse(alpha_str);
            Scalar beta = beta_str.empty() ? beta_bar(ch) : Scalar::parse(beta_str);
            out << "at (alpha, beta) = (" << alpha.str() << ", " << beta.str() << ")\n";
            Scalar g = gamma_inequality(ch, alpha, beta, gamma);
            Scalar q = q_form(ch, alpha, beta, gamma);
            out << "gamma_inequality = " << g.str() << (g.sign() <= 0 ? "  (<= 0)" : "  (> 0)")
                << "\n";
            out << "q_form = " << q.str() << (q.sign() >= 0 ? "  (>= 0)" : "  (< 0)") << "\n";
            return 0;
        }
        if (li_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter ch = parse_class_expr(entry.model, class_expr);
            LiBound r = li_bound_check(ch);
            HContraction v = h_contract(ch);
            out << "threshold = " << li_bound_threshold(entry.model).str() << "\n";
            if (!v.v0.is_zero())
                out << "disc/(H^3 ch0)^2 = " << (discriminant(ch) / (v.v0 * v.v0)).str() << "\n";
            out << (r == LiBound::satisfied ? "satisfied"
                    : r == LiBound::violated ? "violated"
                                             : "exempt")
                << "\n";
            return 0;
        }
        if (chi_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter ch = parse_class_expr(entry.model, class_expr);
            if (chi_frobenius) {
                auto c = frobenius_chi_polynomial(ch);
                out << "[" << c[0].str() << ", " << c[1].str() << ", " << c[2].str() << ", "
                    << c[3].str() << "]\n";
            } else if (!pair_expr.empty()) {
                out << euler_pair(parse_class_expr(entry.model, pair_expr), ch).str() << "\n";
            } else {
                out << euler_char(ch).str() << "\n";
            }
            return 0;
        }
        if (frob_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            const ToricThreefold& tv = builtin_toric_model(entry.model->name());
            DivisorClass d = parse_divisor_expr(entry.model, divisor_expr);
            std::vector<long> dv;
            for (const Scalar& c : d.coeffs()) {
                Rational q = c.as_rational();
                if (!q.is_integer())
                    throw std::invalid_argument("divisor must be integral for the Frobenius");
                dv.push_back(static_cast<long>(q.numerator().get_si()));
            }
            auto dec = frobenius_decompose(tv, dv, frob_m);
            out << "class,eta\n";
            for (const auto& s : dec.summands) {
                std::string cls;
                for (size_t i = 0; i < s.class_vector.size(); ++i) {
                    if (i) cls += ";";
                    cls += std::to_string(s.class_vector[i]);
                }
                out << cls << "," << s.multiplicity << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) return cmd_verify_paper(out);
        if (plot_cmd->parsed()) {
            auto entry = resolve_model(model_name);
            ChernCharacter v = parse_class_expr(entry.model, v_expr);
            std::vector<std::string> partners = w_exprs;
            if (partners.empty()) {
                // small default family: O(sum a_i D_i) with |a_i| <= 1
                size_t r = entry.model->picard_rank();
                std::vector<long> a(r, -1);
                while (true) {
                    DivisorClass d = entry.model->zero_divisor();
                    std::string name = "O(";
                    for (size_t i = 0; i < r; ++i) {
                        d += Scalar(Rational(a[i])) * entry.model->basis_divisor(i);
                        name += (i && a[i] >= 0 ? "+" : "") + std::to_string(a[i]) +
                                entry.model->divisor_basis()[i];
                    }
                    partners.push_back(name + ")");
                    size_t pos = 0;
                    while (pos < r && a[pos] == 1) a[pos++] = -1;
                    if (pos == r) break;
                    ++a[pos];
                }
            }
            SvgCanvas canvas;
            std::ostringstream csv;
            csv << "w,kind,center_or_beta,radius_sq\n";
            for (const auto& expr : partners) {
                ChernCharacter w;
                try {
                    w = parse_class_expr(entry.model, expr);
                } catch (const std::exception&) {
                    continue;
                }
                try {
                    WallDescriptor wall = wall_between(v, w);
                    plot_wall(canvas, wall);
                    if (wall.is_vertical())
                        csv << expr << ",vertical," << wall.beta_wall.str() << ",\n";
                    else
                        csv << expr << ",semicircle," << wall.center_beta.str() << ","
                            << wall.radius_sq.str() << "\n";
                } catch (const std::domain_error&) {
                    continue;
                }
            }
            plot_hyperbola(canvas, v);
            std::string svg = canvas.finish();
            if (out_path.empty()) {
                out << (format == "csv" ? csv.str() : svg);
            } else {
                std::ofstream f(out_path);
                if (!f) throw std::invalid_argument("cannot write " + out_path);
                f << svg;
                std::ofstream fc(out_path + ".csv");
                fc << csv.str();
                out << "wrote " << out_path << " and " << out_path << ".csv\n";
            }
            return 0;
        }
        err << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tilt3::cli
