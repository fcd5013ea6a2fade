#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cobord/gysin.hpp"
#include "cobord/json_io.hpp"
#include "cobord/parser.hpp"
#include "cobord/symfun.hpp"
#include "cobord/verify.hpp"

using namespace cobord;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xc0b0bd15ull;

void emit(const Poly& p, const std::string& format, const std::string& label)
{
    if (format == "json") {
        std::cout << poly_to_json(p) << "\n";
    } else {
        if (!label.empty())
            std::cout << label << " = ";
        std::cout << p.to_string() << "\n";
    }
}

std::vector<std::string> var_names(const std::string& stem, int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(stem + std::to_string(i));
    return v;
}

int cmd_fgl(const std::string& theory, int cap, int nseries, const std::string& format)
{
    const FormalGroupLaw f = FormalGroupLaw::make(theory_from_string(theory), cap);
    emit(f.sum_series(), format, "F(u,v)");
    emit(f.inverse_series(), format, "chi(u)");
    emit(f.n_series(nseries, Poly::variable(f.ring(), f.inverse_series().vars(), cap, 0)), format,
         "[" + std::to_string(nseries) + "](u)");
    emit(f.P(), format, "P(z)");
    emit(f.Pinv(), format, "1/P(z)");
    if (f.ring()->base() == Base::rationals)
        emit(f.log(), format, "log(u)");
    else if (format == "text")
        std::cout << "log(u) lives over the rational extension (--theory universal prints it)\n";
    return 0;
}

int cmd_schur(const std::string& kind, const std::string& index, int nvars,
              const std::string& theory, int cap, const std::string& format)
{
    const Theory th = theory_from_string(theory);
    const IndexVec I = index_from_string(index);
    const FormalGroupLaw f = FormalGroupLaw::make(th, cap);

    if (kind == "universal") {
        const ChernRoots ctx = ChernRoots::plain(f, nvars, "x");
        emit(universal_schur(ctx, I), format, "s_" + index_to_string(I));
        return 0;
    }
    if (kind == "new") {
        require(I.size() == 1, "one-row functions take a single index");
        const ChernRoots ctx = ChernRoots::plain(f, nvars);
        emit(new_universal_schur(ctx, I[0]), format, "S_" + std::to_string(I[0]));
        return 0;
    }
    if (kind == "quadratic") {
        const ChernRoots ctx = ChernRoots::symplectic(f, nvars, false);
        emit(quadratic_universal_schur(ctx, I), format, "s2_" + index_to_string(I));
        return 0;
    }
    if (kind == "classical") {
        const PolySpace sp{Ring::additive(), VarSet::make(var_names("x", nvars)), cap};
        emit(schur_jt(sp, I, nvars), format, "s_" + index_to_string(I));
        return 0;
    }
    if (kind == "grothendieck") {
        const PolySpace sp{Ring::multiplicative(), VarSet::make(var_names("x", nvars)), cap};
        emit(grothendieck_svt(sp, I, nvars), format, "G_" + index_to_string(I));
        return 0;
    }
    throw error("unknown kind: " + kind);
}

int cmd_segre(const std::string& theory, int cap, int nvars, int from, int to, bool symplectic,
              bool twist, const std::string& relative, const std::string& format)
{
    const FormalGroupLaw f = FormalGroupLaw::make(theory_from_string(theory), cap);
    const ChernRoots ctx = symplectic ? ChernRoots::symplectic(f, nvars, twist)
                                      : ChernRoots::plain(f, nvars);
    SegreTable table;
    if (relative.empty()) {
        table = segre_table(ctx, from, to);
    } else {
        std::vector<int> rootsF;
        for (int x : index_from_string(relative))
            rootsF.push_back(x - 1); // 1-based on the command line
        table = segre_relative(ctx, rootsF, from, to);
    }
    for (int m = from; m <= to; ++m)
        emit(table.at(m), format, "S_" + std::to_string(m));
    return 0;
}

int cmd_gysin(const std::string& type, const std::string& theory, int cap, int rank,
              const std::string& q_seq, bool twist, const std::string& ftext, bool check,
              const std::string& format)
{
    FlagSpec spec;
    spec.type = type == "A" ? FlagSpec::Type::A : type == "C" ? FlagSpec::Type::C : FlagSpec::Type::BD;
    require(type == "A" || type == "C" || type == "BD", "type must be A, C or BD");
    spec.rank = rank;
    spec.q_seq = index_from_string(q_seq);
    spec.twisted = twist && spec.type != FlagSpec::Type::A;
    spec.validate();

    const FormalGroupLaw f = FormalGroupLaw::make(theory_from_string(theory), cap);
    const ChernRoots ctx = context_for(f, spec);
    const int q = spec.q();

    // parse f over y1..yq at a cap large enough for any polynomial input
    const PolySpace fsp{f.ring(), VarSet::make(var_names("y", q)), std::max(cap, 64)};
    Poly input = parse_poly(ftext, fsp);
    require(input.degree() < 64, "input degree too large");
    input = input.truncated(std::max(cap, std::max(0, input.degree())));

    const Poly ext = dp_pushforward(spec, ctx, input);
    emit(ext, format, "pushforward");

    const bool has_symmetrizer =
        spec.type == FlagSpec::Type::A ||
        (spec.type == FlagSpec::Type::C && !spec.twisted &&
         (spec.full_flag() || spec.q_seq.size() == 1));
    if (check) {
        if (!has_symmetrizer) {
            std::cout << "no symmetrizing-operator form for this flag type\n";
            return 0;
        }
        const Poly sym = symmetrizer_gysin(spec, ctx, input);
        const bool ok = ext.cap() == sym.cap() && ext == sym.rebased(ext.ring());
        if (format == "text")
            emit(sym, format, "symmetrizer");
        std::cout << (ok ? "agreement: extraction = symmetrizing operator\n"
                         : "MISMATCH between extraction and symmetrizing operator\n");
        return ok ? 0 : 1;
    }
    return 0;
}

int cmd_verify(const std::string& suite, int cap, std::uint64_t seed, int jobs)
{
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    const auto results = run_suites(names, cap, seed, jobs);
    bool pass = true;
    for (const auto& sr : results) {
        for (const auto& c : sr.checks) {
            std::printf("[%s] %-4s %s (%.0f ms)\n", sr.suite.c_str(), c.pass ? "ok" : "FAIL",
                        c.name.c_str(), c.ms);
            if (!c.detail.empty())
                std::printf("        %s\n", c.detail.c_str());
            pass = pass && c.pass;
        }
        std::printf("[%s] suite %s in %.1f s\n", sr.suite.c_str(),
                    sr.pass() ? "passed" : "FAILED", sr.ms / 1000.0);
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Schubert-calculus engine over formal group laws"};
    app.require_subcommand(1);

    std::string theory = "universal", format = "text";
    int cap = 6;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--theory", theory, "additive | multiplicative | hyperbolic | universal");
        cmd->add_option("--cap", cap, "truncation degree")->check(CLI::PositiveNumber);
        cmd->add_option("--out", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    };

    // fgl
    int nseries = 2;
    CLI::App* fgl = app.add_subcommand("fgl", "print a formal group law and its derived series");
    add_common(fgl);
    fgl->add_option("--nseries", nseries, "which [n]-series to print");

    // schur
    std::string kind = "universal", index = "(1)";
    int nvars = 2;
    CLI::App* schur = app.add_subcommand("schur", "Schur-type functions");
    add_common(schur);
    schur->add_option("--kind", kind, "universal | new | quadratic | classical | grothendieck");
    schur->add_option("--index", index, "partition or index vector, e.g. 2,1");
    schur->add_option("--nvars", nvars, "number of root variables")->check(CLI::PositiveNumber);

    // segre
    int from = 0, to = 4;
    bool symplectic = false, twist = false;
    std::string relative;
    CLI::App* segre = app.add_subcommand("segre", "Segre classes");
    add_common(segre);
    segre->add_option("--nvars", nvars, "number of base roots")->check(CLI::PositiveNumber);
    segre->add_option("--from", from, "lowest index");
    segre->add_option("--to", to, "highest index");
    segre->add_flag("--symplectic", symplectic, "double the root set");
    segre->add_flag("--twist", twist, "keep the twisting class z symbolic");
    segre->add_option("--relative-roots", relative, "1-based root indices of the second bundle");

    // gysin
    std::string type = "A", q_seq = "(1)", ftext = "y1";
    int rank = 2;
    bool check = false;
    CLI::App* gysin = app.add_subcommand("gysin", "flag-bundle pushforwards");
    add_common(gysin);
    gysin->add_option("--type", type, "A | C | BD");
    gysin->add_option("--rank", rank, "bundle rank (n, 2n or N)")->check(CLI::PositiveNumber);
    gysin->add_option("--q", q_seq, "flag dimensions, e.g. 1,2");
    gysin->add_flag("--twist", twist, "keep the twisting class z symbolic");
    gysin->add_option("--f", ftext, "input polynomial in y1..yq");
    gysin->add_flag("--check", check, "also run the symmetrizing-operator form and compare");

    // verify
    std::string suite = "all";
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    add_common(verify);
    verify->add_option("--suite", suite, "fgl | schur | segre | gysin | quadratic | appendix | all");
    verify->add_option("--seed", seed, "seed for the randomized property checks");
    verify->add_option("--jobs", jobs, "run suites on this many threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fgl->parsed())
            return cmd_fgl(theory, cap, nseries, format);
        if (schur->parsed())
            return cmd_schur(kind, index, nvars, theory, cap, format);
        if (segre->parsed())
            return cmd_segre(theory, cap, nvars, from, to, symplectic, twist, relative, format);
        if (gysin->parsed())
            return cmd_gysin(type, theory, cap, rank, q_seq, twist, ftext, check, format);
        if (verify->parsed())
            return cmd_verify(suite, cap, seed, jobs);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
