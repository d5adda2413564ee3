// Batch front door: reads potential specifications, runs the coefficient
// recursion and the verification suites, writes machine-readable reports.
//
// Exit codes: 0 success, 2 spec validation, 3 insufficient input order,
// 4 oracle convergence failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergman/expansion.hpp"
#include "bergman/spec_io.hpp"

using namespace bergman;

namespace {

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw SpecError("empty numeric list '" + text + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

Complex parse_point(const std::string& text) {
    const auto parts = parse_double_list(text);
    if (parts.size() == 1) return {parts[0], 0.0};
    if (parts.size() == 2) return {parts[0], parts[1]};
    throw SpecError("points are 're' or 're,im', got '" + text + "'");
}

KernelModel model_by_name(const std::string& name, const std::string& radial_coeffs) {
    if (name == "fock") return KernelModel::fock(1);
    if (name == "fubini_study") return KernelModel::fubini_study();
    if (name == "hyperbolic") return KernelModel::hyperbolic();
    if (name == "radial") {
        if (radial_coeffs.empty())
            throw SpecError("--model radial needs --radial-coeffs \"c1,c2,...\"");
        std::vector<mpq_class> cs;
        std::stringstream ss(radial_coeffs);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cs.push_back(GaussianRational::parse_rational(item));
        return KernelModel::radial(std::move(cs));
    }
    throw SpecError("unknown model '" + name + "' (fock|fubini_study|hyperbolic|radial)");
}

Json model_echo(const KernelModel& model) {
    Json j;
    switch (model.kind) {
        case KernelModel::Kind::fock: j["model"] = "fock"; break;
        case KernelModel::Kind::fubini_study: j["model"] = "fubini_study"; break;
        case KernelModel::Kind::hyperbolic: j["model"] = "hyperbolic"; break;
        case KernelModel::Kind::radial_numeric: {
            j["model"] = "radial";
            Json arr = Json::array();
            for (const auto& c : model.radial_coeffs) arr.push_back(c.get_str());
            j["radial_coefficients"] = arr;
            break;
        }
    }
    j["dimension"] = model.dimension;
    return j;
}

struct CoeffsArgs {
    std::string spec_path, out_path, csv_path;
    int order_m = 0, cap_d = 0;
};

int run_coeffs(const CoeffsArgs& args) {
    const PotentialSpec spec = parse_potential_spec_file(args.spec_path);
    const Json spec_canonical = potential_spec_to_json(spec);
    const int order = required_order(args.order_m, args.cap_d);

    Json report;
    report["command"] = "coeffs";
    report["spec"] = spec_canonical;
    report["input_hash"] = input_hash(spec_canonical);
    report["mode"] = spec.mode;
    report["order_m"] = args.order_m;
    report["cap_d"] = args.cap_d;
    report["input_order"] = order;

    Json coeffs = Json::array();
    bool hermitian_all = true;
    if (spec.mode == "exact") {
        const auto p = build_potential<GaussianRational>(spec, order);
        const auto table = compute_all(p, args.order_m, args.cap_d);
        for (int m = 0; m <= args.order_m; ++m) {
            Json e;
            e["m"] = m;
            e["terms"] = jet_to_json(table.b[static_cast<std::size_t>(m)]);
            coeffs.push_back(e);
            hermitian_all = hermitian_all && hermitian(table.b[static_cast<std::size_t>(m)]);
        }
    } else {
        const auto p = build_potential<std::complex<double>>(spec, order);
        const auto table = compute_all(p, args.order_m, args.cap_d);
        for (int m = 0; m <= args.order_m; ++m) {
            Json e;
            e["m"] = m;
            e["terms"] = jet_to_json(table.b[static_cast<std::size_t>(m)]);
            coeffs.push_back(e);
            hermitian_all =
                hermitian_all && hermitian(table.b[static_cast<std::size_t>(m)], 1e-9);
        }
    }
    report["coefficients"] = coeffs;
    report["flags"]["hermitian_all"] = hermitian_all;
    write_report_atomic(args.out_path, report);

    if (!args.csv_path.empty()) {
        std::ostringstream csv;
        csv << "m,alpha,beta,re,im\n";
        for (const auto& e : report["coefficients"])
            for (const auto& t : e["terms"]) {
                csv << e["m"] << ",\"" << t["alpha"].dump() << "\",\"" << t["beta"].dump()
                    << "\",";
                if (t["re"].is_string())
                    csv << t["re"].get<std::string>() << "," << t["im"].get<std::string>();
                else
                    csv << t["re"] << "," << t["im"];
                csv << "\n";
            }
        write_text_atomic(args.csv_path, csv.str());
    }
    return 0;
}

struct VerifyArgs {
    std::string model, radial_coeffs, k_list, n_list, x = "0", y = "0";
    std::string out_path, csv_path;
    int cap_d = 6;
};

int run_verify(const VerifyArgs& args) {
    const KernelModel model = model_by_name(args.model, args.radial_coeffs);
    const auto k_list = parse_double_list(args.k_list);
    const auto n_list = parse_int_list(args.n_list);
    const int max_n = *std::max_element(n_list.begin(), n_list.end());
    const std::vector<Complex> x{parse_point(args.x)}, y{parse_point(args.y)};

    const auto p = model.potential_jet<GaussianRational>(required_order(max_n, args.cap_d));
    const auto table = compute_all(p, max_n, args.cap_d);
    const auto psi = polarize(p).psi;
    const auto scan = remainder_scan(model, table, psi, k_list, n_list, x, y);

    Json report;
    report["command"] = "verify";
    report["spec"] = model_echo(model);
    report["input_hash"] = input_hash(report["spec"]);
    report["mode"] = "exact";
    report["k"] = k_list;
    report["n_trunc"] = n_list;
    report["point_x"] = {x[0].real(), x[0].imag()};
    report["point_y"] = {y[0].real(), y[0].imag()};
    report["oracle_error_bound"] = scan.oracle_error;

    bool all_pass = true;
    Json rows = Json::array();
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        Json row;
        const int N = n_list[i];
        row["n_trunc"] = N;
        row["errors"] = scan.errors[i];
        const double worst = *std::max_element(scan.errors[i].begin(), scan.errors[i].end());
        bool pass;
        if (worst < 1e-10) {
            row["slope"] = nullptr; // exact agreement, nothing to fit
            pass = true;
        } else {
            row["slope"] = scan.slopes[i];
            row["expected_slope"] = -(N + 1);
            pass = std::abs(scan.slopes[i] + (N + 1)) <= 0.5;
        }
        row["pass"] = pass;
        all_pass = all_pass && pass;
        rows.push_back(row);
    }
    report["remainders"] = rows;
    report["flags"]["pass"] = all_pass;
    write_report_atomic(args.out_path, report);

    if (!args.csv_path.empty()) {
        std::ostringstream csv;
        csv << "n_trunc,k,error\n";
        for (std::size_t i = 0; i < n_list.size(); ++i)
            for (std::size_t t = 0; t < k_list.size(); ++t)
                csv << n_list[i] << "," << k_list[t] << "," << scan.errors[i][t] << "\n";
        write_text_atomic(args.csv_path, csv.str());
    }
    return 0;
}

struct GrowthArgs {
    std::string spec_path, out_path, csv_path;
    int m_max = 0, cap_d = 4;
    double radius = 0.25;
};

int run_growth(const GrowthArgs& args) {
    if (args.m_max < 2) throw SpecError("growth needs --m-max >= 2");
    const PotentialSpec spec = parse_potential_spec_file(args.spec_path);
    const Json spec_canonical = potential_spec_to_json(spec);
    const auto p =
        build_potential<GaussianRational>(spec, required_order(args.m_max, args.cap_d));
    const auto table = compute_all(p, args.m_max, args.cap_d);
    const auto rep = growth_fit(table, args.radius);

    Json report;
    report["command"] = "growth";
    report["spec"] = spec_canonical;
    report["input_hash"] = input_hash(spec_canonical);
    report["mode"] = spec.mode;
    report["m_max"] = args.m_max;
    report["cap_d"] = args.cap_d;
    report["radius"] = args.radius;
    report["sup_norms"] = rep.sup_norms;
    report["ratios"] = rep.ratios;
    report["reference_m"] = rep.reference_m;
    report["flags"]["plateau"] = rep.plateau;
    write_report_atomic(args.out_path, report);

    if (!args.csv_path.empty()) {
        std::ostringstream csv;
        csv << "m,sup_norm,ratio\n";
        for (std::size_t m = 0; m < rep.sup_norms.size(); ++m)
            csv << m << "," << rep.sup_norms[m] << "," << rep.ratios[m] << "\n";
        write_text_atomic(args.csv_path, csv.str());
    }
    return 0;
}

struct ReproArgs {
    std::string model, radial_coeffs, k_list, u_coeffs = "1", x = "0";
    std::string out_path;
    int trunc = 0, cap_d = 6;
};

int run_repro(const ReproArgs& args) {
    const KernelModel model = model_by_name(args.model, args.radial_coeffs);
    if (model.dimension != 1) throw SpecError("repro-test is one-dimensional");
    const auto k_list = parse_double_list(args.k_list);
    std::vector<Complex> u;
    for (double c : parse_double_list(args.u_coeffs)) u.emplace_back(c, 0.0);
    const Complex x = parse_point(args.x);

    const auto p = model.potential_jet<GaussianRational>(required_order(args.trunc, args.cap_d));
    const auto table = compute_all(p, args.trunc, args.cap_d);
    const auto psi = polarize(p).psi;

    Json report;
    report["command"] = "repro-test";
    report["spec"] = model_echo(model);
    report["input_hash"] = input_hash(report["spec"]);
    report["mode"] = "exact";
    report["k"] = k_list;
    report["trunc"] = args.trunc;
    report["u_coeffs"] = parse_double_list(args.u_coeffs);
    report["point_x"] = {x.real(), x.imag()};

    std::vector<double> errors;
    Json rows = Json::array();
    for (double k : k_list) {
        const auto r = reproducing_test(model, table, psi, k, args.trunc, u, x);
        Json row;
        row["k"] = k;
        row["relative_error"] = r.relative_error;
        row["quadrature_error"] = r.quadrature_error;
        rows.push_back(row);
        errors.push_back(r.relative_error);
    }
    report["results"] = rows;
    if (k_list.size() >= 2) {
        std::vector<double> lk, le;
        for (std::size_t i = 0; i < k_list.size(); ++i)
            if (errors[i] > 0) {
                lk.push_back(std::log(k_list[i]));
                le.push_back(std::log(errors[i]));
            }
        if (lk.size() >= 2) report["log_slope"] = least_squares_slope(lk, le);
    }
    write_report_atomic(args.out_path, report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernel expansion coefficients via the linear recursion, "
                 "with exact and quadrature-backed verification oracles"};
    app.require_subcommand(1);

    CoeffsArgs coeffs;
    auto* c = app.add_subcommand("coeffs", "compute coefficient jets b_0..b_M");
    c->add_option("--spec", coeffs.spec_path, "potential spec JSON file")->required();
    c->add_option("--order", coeffs.order_m, "highest coefficient index M")->required();
    c->add_option("--cap", coeffs.cap_d, "jet degree cap D")->required();
    c->add_option("--out", coeffs.out_path, "report file")->required();
    c->add_option("--csv", coeffs.csv_path, "also export the table as CSV");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "remainder scan against a kernel oracle");
    v->add_option("--model", verify.model, "fock|fubini_study|hyperbolic|radial")->required();
    v->add_option("--radial-coeffs", verify.radial_coeffs, "radial potential coefficients");
    v->add_option("--k", verify.k_list, "comma-separated k values")->required();
    v->add_option("--n-trunc", verify.n_list, "comma-separated truncation orders")->required();
    v->add_option("--x", verify.x, "evaluation point x as re[,im]");
    v->add_option("--y", verify.y, "evaluation point y as re[,im]");
    v->add_option("--cap", verify.cap_d, "jet degree cap for the table");
    v->add_option("--out", verify.out_path, "report file")->required();
    v->add_option("--csv", verify.csv_path, "also export errors as CSV");

    GrowthArgs growth;
    auto* g = app.add_subcommand("growth", "coefficient growth diagnostics");
    g->add_option("--spec", growth.spec_path, "potential spec JSON file")->required();
    g->add_option("--m-max", growth.m_max, "compute b_0..b_M")->required();
    g->add_option("--radius", growth.radius, "sup-norm polydisc radius");
    g->add_option("--cap", growth.cap_d, "jet degree cap");
    g->add_option("--out", growth.out_path, "report file")->required();
    g->add_option("--csv", growth.csv_path, "also export the table as CSV");

    ReproArgs repro;
    auto* r = app.add_subcommand("repro-test", "local reproducing-property check");
    r->add_option("--model", repro.model, "fock|fubini_study|hyperbolic|radial")->required();
    r->add_option("--radial-coeffs", repro.radial_coeffs, "radial potential coefficients");
    r->add_option("--k", repro.k_list, "comma-separated k values")->required();
    r->add_option("--trunc", repro.trunc, "expansion truncation order N")->required();
    r->add_option("--u", repro.u_coeffs, "holomorphic test polynomial coefficients c0,c1,...");
    r->add_option("--x", repro.x, "evaluation point x as re[,im]");
    r->add_option("--out", repro.out_path, "report file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c) return run_coeffs(coeffs);
        if (*v) return run_verify(verify);
        if (*g) return run_growth(growth);
        if (*r) return run_repro(repro);
    } catch (const InsufficientInputOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const QuadratureNotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const TailNotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NonIntegrableWeight& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const TruncationUnreliable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateMetric& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
