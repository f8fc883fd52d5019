// carnot258: exact polynomial vector-field models of free nilpotent Lie
// algebras. Builds Hall bases and Grayson-Grossman generator fields for any
// step, and carries the rotationally symmetric model of the growth-vector
// (2,3,5,8) algebra together with its infinitesimal rotation symmetry, all
// over exact rational arithmetic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "carnot/gg_model.hpp"
#include "carnot/json_io.hpp"
#include "carnot/render.hpp"
#include "carnot/sym258.hpp"
#include "carnot/verify.hpp"
#include "carnot/witt.hpp"

namespace {

using namespace carnot;

int guard_dimension(int d, int r, long max_dim) {
    const Integer n = cumulative_dimension(d, r);
    if (n > max_dim) {
        std::cerr << "error: step " << r << " needs " << n.get_str()
                  << " coordinates, above the --max-dim limit of " << max_dim << "\n";
        return -1;
    }
    return static_cast<int>(n.get_si());
}

std::string frame_text(const Frame& f) {
    std::string s;
    for (int i = 1; i <= f.size(); ++i) s += f.name(i) + " = " + f.field(i).to_string() + "\n";
    return s;
}

std::string render_frame(const Frame& f, const std::string& format) {
    if (format == "json") return to_json(f, /*pretty=*/true) + "\n";
    if (format == "latex") return to_latex(f);
    return frame_text(f);
}

int emit_report(const VerificationReport& report, const std::string& format) {
    if (format == "json") std::cout << to_json(report, /*pretty=*/true) << "\n";
    else std::cout << report.to_text();
    return report.overall() ? 0 : 1;
}

std::vector<Rational> parse_point(const std::string& text, int n) {
    std::vector<Rational> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) point.push_back(Rational::parse(item));
    if (static_cast<int>(point.size()) != n)
        throw CLI::ValidationError("--point", "expected " + std::to_string(n) + " coordinates");
    return point;
}

std::string dims_text(int d, int max_step) {
    std::ostringstream os;
    os << "i\tl_" << d << "(i)\tl_" << d << "^(i)\n";
    Integer cum(0);
    for (int i = 1; i <= max_step; ++i) {
        const Integer l = witt_dimension(d, i);
        cum += l;
        os << i << "\t" << l.get_str() << "\t" << cum.get_str() << "\n";
    }
    return os.str();
}

std::string dims_latex(int d, int max_step) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|";
    for (int i = 0; i < max_step; ++i) os << "r|";
    os << "}\n\\hline\n$i$";
    for (int i = 1; i <= max_step; ++i) os << " & " << i;
    os << " \\\\\n\\hline\n$l_" << d << "(i)$";
    Integer cum(0);
    std::vector<Integer> dims;
    for (int i = 1; i <= max_step; ++i) dims.push_back(witt_dimension(d, i));
    for (const auto& l : dims) os << " & " << l.get_str();
    os << " \\\\\n\\hline\n$l_" << d << "^{(i)}$";
    for (const auto& l : dims) {
        cum += l;
        os << " & " << cum.get_str();
    }
    os << " \\\\\n\\hline\n\\end{tabular}\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact vector-field models of free nilpotent Lie algebras"};
    app.require_subcommand(1);

    // dims ------------------------------------------------------------------
    int dims_d = 2, dims_r = 10;
    std::string dims_format = "text";
    auto* dims = app.add_subcommand("dims", "Dimension table of the free nilpotent Lie algebras");
    dims->add_option("-d,--generators", dims_d, "Number of generators")->check(CLI::PositiveNumber);
    dims->add_option("-r,--step", dims_r, "Maximal step")->check(CLI::PositiveNumber);
    dims->add_option("--format", dims_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // hall ------------------------------------------------------------------
    int hall_d = 2, hall_r = 4;
    std::string hall_format = "text";
    auto* hall = app.add_subcommand("hall", "Hall basis elements of degree <= step");
    hall->add_option("-d,--generators", hall_d, "Number of generators")
        ->check(CLI::Range(2, 1000000));
    hall->add_option("-r,--step", hall_r, "Step")->check(CLI::PositiveNumber);
    hall->add_option("--format", hall_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // gg-model ---------------------------------------------------------------
    int gg_r = 4;
    long gg_maxdim = 1000;
    std::string gg_format = "text";
    auto* ggm = app.add_subcommand("gg-model", "Grayson-Grossman frame for two generators");
    ggm->add_option("-r,--step", gg_r, "Step")->required()->check(CLI::PositiveNumber);
    ggm->add_option("--format", gg_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    ggm->add_option("--max-dim", gg_maxdim, "Safety limit on the ambient dimension");

    // verify-gg ---------------------------------------------------------------
    int vgg_r = 4;
    long vgg_maxdim = 1000;
    std::string vgg_format = "text";
    auto* vgg = app.add_subcommand("verify-gg", "Check the model theorem at the given step");
    vgg->add_option("-r,--step", vgg_r, "Step")->check(CLI::PositiveNumber);
    vgg->add_option("--format", vgg_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    vgg->add_option("--max-dim", vgg_maxdim, "Safety limit on the ambient dimension");

    // sym-model ---------------------------------------------------------------
    std::string sym_format = "text";
    auto* symm = app.add_subcommand("sym-model", "Symmetric model of the (2,3,5,8) algebra");
    symm->add_option("--format", sym_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // verify-sym ----------------------------------------------------------------
    std::string vsym_format = "text";
    auto* vsym = app.add_subcommand("verify-sym", "Check the symmetric model's bracket table");
    vsym->add_option("--format", vsym_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    // symmetry ------------------------------------------------------------------
    bool sy_check = false, sy_derive = false;
    std::string sy_format = "text";
    auto* sy = app.add_subcommand("symmetry", "Infinitesimal rotation symmetry of the model");
    sy->add_flag("--check", sy_check, "Verify the symmetry relations (default)");
    sy->add_flag("--derive", sy_derive, "Re-derive the symmetry from the step-3 one and diff");
    sy->add_option("--format", sy_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // structure-constants ---------------------------------------------------------
    std::string sc_model = "sym", sc_format = "json";
    int sc_r = 4;
    long sc_maxdim = 1000;
    auto* sc = app.add_subcommand("structure-constants",
                                  "Structure constants extracted from a model frame");
    sc->add_option("--model", sc_model, "Which frame")->check(CLI::IsMember({"gg", "sym"}));
    sc->add_option("-r,--step", sc_r, "Step (gg only)")->check(CLI::PositiveNumber);
    sc->add_option("--format", sc_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    sc->add_option("--max-dim", sc_maxdim, "Safety limit on the ambient dimension");

    // growth-vector ------------------------------------------------------------
    std::string gv_model = "sym", gv_point, gv_format = "text";
    int gv_r = 4;
    long gv_maxdim = 1000;
    auto* gv = app.add_subcommand("growth-vector", "Flag ranks of span{F1,F2} at a point");
    gv->add_option("--model", gv_model, "Which frame")->check(CLI::IsMember({"gg", "sym"}));
    gv->add_option("-r,--step", gv_r, "Step (gg only)")->check(CLI::PositiveNumber);
    gv->add_option("--point", gv_point, "Comma-separated rational coordinates (default origin)");
    gv->add_option("--format", gv_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    gv->add_option("--max-dim", gv_maxdim, "Safety limit on the ambient dimension");

    // verify-all ------------------------------------------------------------------
    int va_r = 4;
    std::string va_format = "text", va_mutate;
    auto* va = app.add_subcommand("verify-all", "Run every verification; exit 0 iff all pass");
    va->add_option("-r,--step", va_r, "Step for the model theorem check")
        ->check(CLI::PositiveNumber);
    va->add_option("--format", va_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    va->add_option("--mutate", va_mutate, "Corrupt a coefficient before verifying (test hook)")
        ->group("");  // hidden

    // export ------------------------------------------------------------------
    std::string ex_model = "sym", ex_format = "json", ex_out;
    int ex_r = 4;
    long ex_maxdim = 1000;
    auto* ex = app.add_subcommand("export", "Write a model frame to a file");
    ex->add_option("--model", ex_model, "Which frame")->check(CLI::IsMember({"gg", "sym"}));
    ex->add_option("-r,--step", ex_r, "Step")->check(CLI::PositiveNumber);
    ex->add_option("--format", ex_format, "Output format")
        ->check(CLI::IsMember({"json", "latex"}));
    ex->add_option("--out", ex_out, "Output file")->required();
    ex->add_option("--max-dim", ex_maxdim, "Safety limit on the ambient dimension");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dims->parsed()) {
            if (dims_format == "json") std::cout << dims_table_json(dims_d, dims_r, true) << "\n";
            else if (dims_format == "latex") std::cout << dims_latex(dims_d, dims_r);
            else std::cout << dims_text(dims_d, dims_r);
            return 0;
        }

        if (hall->parsed()) {
            const HallBasis basis(hall_d, hall_r);
            if (hall_format == "json") {
                std::string s = "{\"d\":" + std::to_string(hall_d) + ",\"r\":" +
                                std::to_string(hall_r) + ",\"elements\":[";
                for (int i = 1; i <= basis.size(); ++i) {
                    if (i > 1) s += ",";
                    s += "{\"index\":" + std::to_string(i) +
                         ",\"degree\":" + std::to_string(basis.degree_of(i)) + ",\"tree\":\"" +
                         basis.to_string(i) + "\"}";
                }
                std::cout << s << "]}\n";
            } else if (hall_format == "latex") {
                for (int i = 1; i <= basis.size(); ++i)
                    std::cout << "H_{" << i << "} = " << basis.to_latex(i) << " \\\\\n";
            } else {
                for (int i = 1; i <= basis.size(); ++i)
                    std::cout << "H" << i << " = " << basis.to_string(i)
                              << "  (degree " << basis.degree_of(i) << ")\n";
            }
            return 0;
        }

        if (ggm->parsed()) {
            if (guard_dimension(2, gg_r, gg_maxdim) < 0) return 1;
            std::cout << render_frame(gg_frame(gg_r), gg_format);
            return 0;
        }

        if (vgg->parsed()) {
            if (guard_dimension(2, vgg_r, vgg_maxdim) < 0) return 1;
            return emit_report(verify_free_nilpotent(gg_frame(vgg_r), vgg_r), vgg_format);
        }

        if (symm->parsed()) {
            std::cout << render_frame(symmetric_model().frame, sym_format);
            return 0;
        }

        if (vsym->parsed()) return emit_report(verify_symmetric_model(), vsym_format);

        if (sy->parsed()) {
            if (sy_derive) {
                const auto derived = continue_symmetry_ansatz(symmetry_field_235());
                const VectorField reference = symmetry_field().field;
                VerificationReport report;
                report.add("derived symmetry equals the reference field",
                           derived.field.field == reference,
                           "P = " + derived.p.to_string() + "; Q = " + derived.q.to_string() +
                               "; R = " + derived.r.to_string());
                if (sy_format == "latex") std::cout << to_latex(derived.field.field) << "\n";
                return emit_report(report, sy_format == "json" ? "json" : "text");
            }
            const SymmetricModel model = symmetric_model();
            const SymmetryField sym = symmetry_field();
            VerificationReport report = verify_symmetry_on(model, sym);
            const auto rot =
                is_infinitesimal_symmetry(sym.field, model.frame.field(1), model.frame.field(2));
            report.add("X0 rotates the orthonormal frame {X1,X2} with c = " +
                           rot.constant.to_string(),
                       rot.ok && rot.constant == Rational(1), rot.witness);
            if (sy_format == "latex") std::cout << to_latex(sym.field) << "\n";
            return emit_report(report, sy_format == "json" ? "json" : "text");
        }

        if (sc->parsed()) {
            Frame frame = sc_model == "gg" ? gg_frame(sc_r) : symmetric_model().frame;
            if (sc_model == "gg" && guard_dimension(2, sc_r, sc_maxdim) < 0) return 1;
            const std::vector<int> layers = sc_model == "gg"
                                                ? HallBasis(2, sc_r).layers()
                                                : weights_258().weights();
            const CarnotAlgebra alg = structure_constants_from_frame(frame, layers);
            if (sc_format == "json") std::cout << to_json(alg, true) << "\n";
            else if (sc_format == "latex") std::cout << to_latex(alg);
            else {
                for (const auto& [ij, combo] : alg.table()) {
                    std::cout << "[" << frame.name(ij.first) << "," << frame.name(ij.second)
                              << "] =";
                    for (const auto& t : combo)
                        std::cout << " " << t.c.to_string() << "*" << frame.name(t.k);
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (gv->parsed()) {
            if (gv_model == "gg" && guard_dimension(2, gv_r, gv_maxdim) < 0) return 1;
            const Frame frame = gv_model == "gg" ? gg_frame(gv_r) : symmetric_model().frame;
            const std::vector<Rational> point =
                gv_point.empty() ? std::vector<Rational>(static_cast<size_t>(frame.dimension()))
                                 : parse_point(gv_point, frame.dimension());
            const auto ranks = growth_vector_at_point(frame, {1, 2}, point);
            if (gv_format == "json") {
                std::cout << growth_vector_json(ranks) << "\n";
            } else {
                std::cout << "(";
                for (size_t i = 0; i < ranks.size(); ++i)
                    std::cout << (i ? "," : "") << ranks[i];
                std::cout << ")\n";
            }
            return 0;
        }

        if (va->parsed()) {
            VerifyAllOptions options;
            options.gg_step = va_r;
            if (!va_mutate.empty()) options.mutate = va_mutate;
            return emit_report(verify_all(options), va_format);
        }

        if (ex->parsed()) {
            if (ex_model == "sym" && ex_r != 4) {
                std::cerr << "error: the symmetric model exists at step 4 only\n";
                return 1;
            }
            if (ex_model == "gg" && guard_dimension(2, ex_r, ex_maxdim) < 0) return 1;
            const Frame frame = ex_model == "gg" ? gg_frame(ex_r) : symmetric_model().frame;
            std::ofstream out(ex_out);
            if (!out) {
                std::cerr << "error: cannot open '" << ex_out << "' for writing\n";
                return 1;
            }
            out << (ex_format == "json" ? to_json(frame) + "\n" : to_latex(frame));
            return out.good() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return 0;
}
