#include "homcyc/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace homcyc;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kInvariant = 3;

struct Options {
    std::string file;
    std::string module_file;
    int max = 4;
    std::string method = "both";
    int window = -1;
    bool representatives = false;
    std::string format = "text";
    bool experimental_bb = false;
    // twist / cocycle
    std::string endo;
    std::string output;
    std::string name;
    std::string phi;
    std::string rho;
    std::string trace;
    int degree = 1;
};

bool as_json(const Options& o) { return o.format == "json"; }

// "[[0,1],[1,0]]" or a path to a JSON file
json literal_or_file(const std::string& spec) {
    if (std::filesystem::exists(spec))
        return io::read_json(spec);
    try {
        return json::parse(spec);
    } catch (const json::exception& e) {
        throw io::FormatError("neither a file nor valid JSON: " + spec);
    }
}

HomAlgebra load(const std::string& path) {
    return make_algebra(io::read_algebra(path));
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (as_json(o))
        std::cout << io::dump(j);
    else
        std::cout << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Options& o) {
    ValidationReport r = validate(io::read_algebra(o.file));
    json j;
    std::ostringstream os;
    const AlgebraData data = io::read_algebra(o.file);
    j["name"] = data.name;
    j["dim"] = data.dim();
    j["hom_associative"] = r.hom_associative;
    j["multiplicative"] = r.multiplicative;
    j["valid"] = r.valid();
    j["violations"] = io::to_json(r.result, data.basis);
    os << data.name << " (dim " << data.dim() << ")\n";
    os << "  hom-associativity   alpha(a)(bc) = (ab)alpha(c): " << yes_no(r.hom_associative) << "\n";
    os << "  multiplicativity    alpha(ab) = alpha(a)alpha(b): " << yes_no(r.multiplicative) << "\n";
    if (r.valid()) {
        const HomAlgebra& a = *r.algebra;
        j["unit"] = r.unit ? io::vector_to_json(*r.unit) : json(nullptr);
        j["alpha_identity"] = a.alpha_is_identity();
        j["alpha_idempotent"] = a.alpha_is_idempotent();
        j["centroid"] = is_centroid_element(a).ok();
        j["commutative"] = a.is_commutative();
        os << "  unit: " << (r.unit ? combination_label(*r.unit, a.basis_names()) : "none") << "\n";
        os << "  alpha = Id: " << yes_no(a.alpha_is_identity()) << ", alpha^2 = alpha: "
           << yes_no(a.alpha_is_idempotent()) << ", centroid: " << yes_no(is_centroid_element(a).ok())
           << ", commutative: " << yes_no(a.is_commutative()) << "\n";
    }
    for (const auto& v : r.result.violations) {
        os << "  violated " << v.identity << " at";
        for (auto i : v.basis)
            os << " " << (i < data.basis.size() ? data.basis[i] : std::to_string(i));
        os << ": " << combination_label(v.lhs, data.basis) << " != " << combination_label(v.rhs, data.basis) << "\n";
    }
    emit(o, j, os.str());
    return r.valid() ? kOk : kValidation;
}

CyclicMethod parse_method(const std::string& m) {
    if (m == "lambda")
        return CyclicMethod::Lambda;
    if (m == "bicomplex")
        return CyclicMethod::Bicomplex;
    return CyclicMethod::Both;
}

int cmd_hh(const Options& o, bool co) {
    HomAlgebra a = load(o.file);
    HomologyReport r;
    if (o.module_file.empty()) {
        Bimodule v = regular_bimodule(a);
        r = co ? hochschild_cohomology(dualize_bimodule(v), o.max, o.representatives)
               : hochschild_homology(v, o.max, o.representatives);
    } else {
        ModuleData m = io::module_from_json(io::read_json(o.module_file), a.dim());
        r = co ? hochschild_cohomology(DualBimodule(a, m), o.max, o.representatives)
               : hochschild_homology(Bimodule(a, m), o.max, o.representatives);
    }
    emit(o, io::to_json(r), io::to_text(r));
    return kOk;
}

int cmd_hc(const Options& o, bool co) {
    HomAlgebra a = load(o.file);
    CyclicMethod method = parse_method(o.method);
    CyclicReport r = co ? cyclic_cohomology(a, o.max, method, o.window, o.representatives)
                        : cyclic_homology(a, o.max, method, o.window, o.representatives);
    json j = io::to_json(r);
    std::string text = io::to_text(r);
    int code = r.all_agree() ? kOk : kInvariant;
    if (o.experimental_bb && !co) {
        if (!find_unit(a)) {
            j["experimental_bB"] = {{"skipped", "no unit"}};
            text += "experimental (b,B): skipped, no unit\n";
        } else {
            BBReport bb = connes_bB_bicomplex(a, o.max);
            j["experimental_bB"] = io::to_json(bb);
            text += "experimental:\n" + io::to_text(bb);
            if (bb.agrees_with_bicomplex)
                for (bool x : *bb.agrees_with_bicomplex)
                    if (!x)
                        code = kInvariant;
        }
    }
    emit(o, j, text);
    return code;
}

int cmd_hp(const Options& o, bool co) {
    HomAlgebra a = load(o.file);
    PeriodicReport r = co ? periodic_cohomology(a, o.max, o.window) : periodic_homology(a, o.max, o.window);
    emit(o, io::to_json(r), io::to_text(r));
    return r.parity_consistent ? kOk : kInvariant;
}

int cmd_duality(const Options& o) {
    HomAlgebra a = load(o.file);
    Bimodule v = regular_bimodule(a);
    auto h = hochschild_homology(v, o.max).betti();
    auto c = hochschild_cohomology(dualize_bimodule(v), o.max).betti();
    json j;
    j["algebra"] = a.name();
    j["homology"] = h;
    j["cohomology"] = c;
    j["equal"] = h == c;
    std::ostringstream os;
    os << "dim H_n(A, A) against dim H^n(A, A*) for " << a.name() << "\n";
    for (std::size_t n = 0; n < h.size(); ++n)
        os << "  " << std::setw(4) << n << std::setw(8) << h[n] << std::setw(8) << c[n] << (h[n] == c[n] ? "" : "  MISMATCH")
           << "\n";
    emit(o, j, os.str());
    return h == c ? kOk : kInvariant;
}

int cmd_twist(const Options& o) {
    HomAlgebra a = load(o.file);
    Matrix endo = io::matrix_from_json(literal_or_file(o.endo), a.dim(), a.dim());
    HomAlgebra t = yau_twist(a, endo, o.name.empty() ? a.name() + "_twisted" : o.name);
    if (!o.output.empty()) {
        io::write_algebra(o.output, t.data());
        std::cerr << "wrote " << o.output << "\n";
    } else {
        std::cout << io::dump(io::algebra_to_json(t.data()));
    }
    return kOk;
}

int cmd_dual_space(const Options& o) {
    HomAlgebra a = load(o.file);
    ACirc c = a_circ(a);
    std::vector<std::string> dual;
    for (const auto& b : a.basis_names())
        dual.push_back(b + "*");
    json j;
    j["algebra"] = a.name();
    j["dim"] = c.functionals.dim();
    j["equals_full_dual"] = c.functionals.dim() == a.dim();
    j["basis"] = io::matrix_to_json(c.functionals.basis());
    j["bimodule"] = io::module_to_json(c.bimodule.data());
    std::ostringstream os;
    os << "A° of " << a.name() << ": dimension " << c.functionals.dim() << " of " << a.dim()
       << (c.functionals.dim() == a.dim() ? " (all of A*)" : "") << "\n";
    for (std::size_t i = 0; i < c.functionals.dim(); ++i)
        os << "  " << combination_label(c.functionals.basis_vector(i), dual) << "\n";
    emit(o, j, os.str());
    return kOk;
}

int cmd_decompose(const Options& o) {
    HomAlgebra a = load(o.file);
    json j;
    std::ostringstream os;
    j["algebra"] = a.name();
    bool any = false;
    if (find_unit(a)) {
        UnitalDecomposition u = unital_decompose(a);
        any = true;
        j["unital"] = {{"idempotent", io::vector_to_json(u.idempotent)},
                       {"associative_part", io::algebra_to_json(u.associative_part.data())},
                       {"complement", io::algebra_to_json(u.complement.data())},
                       {"change_of_basis", io::matrix_to_json(u.change_of_basis)}};
        os << "unital: A = A x + A(1 - x) with x = alpha(1) = " << combination_label(u.idempotent, a.basis_names())
           << "\n  A x: dim " << u.associative_part.dim() << ", twist Id\n  A(1 - x): dim " << u.complement.dim()
           << ", twist 0\n";
    }
    if (a.alpha_is_idempotent()) {
        try {
            IdempotentTwistDecomposition t = idempotent_twist_decompose(a);
            any = true;
            j["idempotent_twist"] = {{"null_part", io::algebra_to_json(t.null_part.data())},
                                     {"image_part", io::algebra_to_json(t.image_part.data())},
                                     {"change_of_basis", io::matrix_to_json(t.change_of_basis)}};
            os << "idempotent twist: A = ker(alpha) + im(alpha)\n  ker: dim " << t.null_part.dim()
               << ", zero product\n  im: dim " << t.image_part.dim() << ", associative\n";
        } catch (const PreconditionError& e) {
            j["idempotent_twist"] = {{"skipped", e.what()}};
            os << "idempotent twist: skipped (" << e.what() << ")\n";
        }
    }
    if (!any)
        os << "no decomposition applies: no unit and alpha is not idempotent\n";
    emit(o, j, os.str());
    return kOk;
}

int cmd_cocycle_verify(const Options& o) {
    HomAlgebra a = load(o.file);
    std::size_t size = tensor_dim(a.dim(), a.dim(), o.degree);
    Functional phi{o.degree, io::vector_from_json(literal_or_file(o.phi), size)};
    CocycleCheck c = is_cyclic_cocycle(a, phi);
    json j;
    j["closed"] = c.closed();
    j["cyclic"] = c.cyclic();
    j["coboundary_residuals"] = c.coboundary_residuals;
    j["cyclicity_residuals"] = c.cyclicity_residuals;
    std::ostringstream os;
    os << "degree " << o.degree << " functional on " << a.name() << ": closed " << yes_no(c.closed()) << ", cyclic "
       << yes_no(c.cyclic()) << "\n";
    emit(o, j, os.str());
    return c.ok() ? kOk : kValidation;
}

int cmd_cocycle_derive(const Options& o) {
    HomAlgebra a = load(o.file);
    Matrix rho = io::matrix_from_json(literal_or_file(o.rho), a.dim(), a.dim());
    Vector trace = io::vector_from_json(literal_or_file(o.trace), a.dim());
    Functional phi = derivation_cocycle(a, rho, trace);
    json j = io::to_json(phi, a);
    std::ostringstream os;
    os << "phi(a, b) = tr(a rho(b)) on " << a.name() << ":\n";
    std::vector<std::string> dual;
    for (const auto& b : a.basis_names())
        dual.push_back(b + "*");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < phi.coords.size(); ++i)
        labels.push_back(tensor_label(i, dual, dual, 1));
    os << "  " << combination_label(phi.coords, labels) << "\n  cyclic cocycle: yes\n";
    emit(o, j, os.str());
    return kOk;
}

void print_violations(const std::vector<Violation>& vs) {
    for (const auto& v : vs) {
        std::cerr << "  " << v.identity << " at basis";
        for (auto i : v.basis)
            std::cerr << " " << i;
        std::cerr << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild, cyclic and periodic (co)homology of Hom-associative algebras"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "algebra JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* check = app.add_subcommand("check", "validate an algebra");
    add_common(check);
    check->callback([&] { action = [&] { return cmd_check(o); }; });

    for (bool co : {false, true}) {
        auto* hh = app.add_subcommand(co ? "hhco" : "hh", co ? "Hochschild cohomology H^n(A, A*)" : "Hochschild homology");
        add_common(hh);
        hh->add_option("--max", o.max, "highest degree")->check(CLI::NonNegativeNumber);
        hh->add_option("--module", o.module_file, "coefficient bimodule JSON")->check(CLI::ExistingFile);
        hh->add_flag("--representatives", o.representatives, "print class representatives");
        hh->callback([&, co] { action = [&, co] { return cmd_hh(o, co); }; });

        auto* hc = app.add_subcommand(co ? "hcco" : "hc", co ? "cyclic cohomology" : "cyclic homology");
        add_common(hc);
        hc->add_option("--max", o.max, "highest degree")->check(CLI::NonNegativeNumber);
        hc->add_option("--method", o.method, "lambda, bicomplex or both")
            ->check(CLI::IsMember({"lambda", "bicomplex", "both"}));
        hc->add_option("--window", o.window, "last bicomplex column (default max + 1)");
        hc->add_flag("--representatives", o.representatives, "print class representatives");
        if (!co)
            hc->add_flag("--experimental-bb", o.experimental_bb, "also run the (b, B) construction");
        hc->callback([&, co] { action = [&, co] { return cmd_hc(o, co); }; });

        auto* hp = app.add_subcommand(co ? "hpco" : "hp", co ? "periodic cyclic cohomology" : "periodic cyclic homology");
        add_common(hp);
        hp->add_option("--max", o.max, "highest degree (default 2)")->check(CLI::NonNegativeNumber);
        hp->add_option("--window", o.window, "columns -P..P (default max + 1)");
        hp->preparse_callback([&](std::size_t) { o.max = 2; });
        hp->callback([&, co] { action = [&, co] { return cmd_hp(o, co); }; });
    }

    auto* duality = app.add_subcommand("duality", "compare H_n(A, A) with H^n(A, A*)");
    add_common(duality);
    duality->add_option("--max", o.max, "highest degree")->check(CLI::NonNegativeNumber);
    duality->callback([&] { action = [&] { return cmd_duality(o); }; });

    auto* twist = app.add_subcommand("twist", "Yau twist of an associative algebra");
    twist->add_option("file", o.file, "algebra JSON")->required()->check(CLI::ExistingFile);
    twist->add_option("--endo", o.endo, "endomorphism matrix, JSON literal or file (column j = image of e_j)")
        ->required();
    twist->add_option("-o,--output", o.output, "write the twisted algebra here");
    twist->add_option("--name", o.name, "name of the result");
    twist->callback([&] { action = [&] { return cmd_twist(o); }; });

    auto* dual = app.add_subcommand("dual-space", "the bimodule A°");
    add_common(dual);
    dual->callback([&] { action = [&] { return cmd_dual_space(o); }; });

    auto* decompose = app.add_subcommand("decompose", "unital and idempotent-twist splittings");
    add_common(decompose);
    decompose->callback([&] { action = [&] { return cmd_decompose(o); }; });

    auto* cocycle = app.add_subcommand("cocycle", "cyclic cocycles");
    cocycle->require_subcommand(1);
    auto* verify = cocycle->add_subcommand("verify", "test a functional on A^(x)(n+1)");
    add_common(verify);
    verify->add_option("--phi", o.phi, "coordinates, JSON literal or file")->required();
    verify->add_option("--degree", o.degree, "n")->check(CLI::NonNegativeNumber);
    verify->callback([&] { action = [&] { return cmd_cocycle_verify(o); }; });
    auto* derive = cocycle->add_subcommand("derive", "phi(a, b) = tr(a rho(b))");
    add_common(derive);
    derive->add_option("--rho", o.rho, "derivation matrix (column j = rho(e_j))")->required();
    derive->add_option("--trace", o.trace, "trace coordinates")->required();
    derive->callback([&] { action = [&] { return cmd_cocycle_derive(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        return action();
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        print_violations(e.violations());
        return kValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
}
