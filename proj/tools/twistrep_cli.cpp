#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistrep/report.hpp"

using namespace twistrep;

namespace {

struct Common {
    std::string spec;
    std::string out;
    RunOptions run;
};

void add_common(CLI::App* cmd, Common& c, bool spec_required = true) {
    auto* spec = cmd->add_option("--spec", c.spec, "category spec (JSON)");
    if (spec_required) spec->required();
    cmd->add_option("--out", c.out, "write the machine-readable report here");
    cmd->add_option("--seed", c.run.seed, "seed for randomized checks")->default_val(0);
    cmd->add_option("--tolerance", c.run.tolerance, "matrix comparison tolerance")->default_val(1e-9);
}

int emit(const Report& r, const Common& c) {
    std::cout << r.human();
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << c.out << "\n";
            return kExitParse;
        }
        f << r.machine();
    }
    return r.exit_code;
}

std::vector<cd> parse_waypoints(const std::string& text) {
    std::vector<cd> pts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ';');)
        if (!part.empty()) pts.push_back(parse_point(part));
    return pts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted representation categories: cocycles, coherence, fusion, S-matrices, monodromy"};
    app.require_subcommand(1);

    Common verify_opts, fusion_opts, smatrix_opts, mono_opts;
    auto* verify = app.add_subcommand("verify", "run cocycle, irrep, coherence and dimension checks");
    add_common(verify, verify_opts);
    auto* fusion = app.add_subcommand("fusion", "fusion rules of the irrep catalog");
    add_common(fusion, fusion_opts);

    auto* smatrix = app.add_subcommand("smatrix", "S-matrix of a spec, or of SU(2) reps graded by Z/2");
    add_common(smatrix, smatrix_opts, false);
    std::optional<int> max_spin;
    std::int64_t su2_s = 3;
    smatrix->add_option("--max-spin", max_spin, "SU(2) mode: spins 0..N");
    smatrix->add_option("--cocycle", su2_s, "SU(2) mode: s in cyclic(2, s)")->default_val(3);

    auto* mono = app.add_subcommand("monodromy", "branch integers, associativity and transport scalars");
    add_common(mono, mono_opts);
    std::string z1, z2, path, loop, grades;
    mono->add_option("--z1", z1, "re,im");
    mono->add_option("--z2", z2, "re,im");
    mono->add_option("--path", path, "waypoints 're,im;re,im;...'");
    mono->add_option("--loop", loop, "named loop")->check(CLI::IsMember({"clockwise"}));
    mono->add_option("--grades", grades, "grades, e.g. '1;1;1' or '(1,0);(0,1)'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*verify) return emit(cmd_verify(verify_opts.spec, verify_opts.run), verify_opts);
        if (*fusion) return emit(cmd_fusion(fusion_opts.spec, fusion_opts.run), fusion_opts);
        if (*smatrix) {
            if (max_spin && smatrix_opts.spec.empty())
                return emit(cmd_smatrix_su2(*max_spin, su2_s, smatrix_opts.run), smatrix_opts);
            if (smatrix_opts.spec.empty()) {
                std::cerr << "smatrix needs --spec or --max-spin\n";
                return kExitParse;
            }
            return emit(cmd_smatrix(smatrix_opts.spec, smatrix_opts.run), smatrix_opts);
        }
        MonodromyArgs args;
        if (!z1.empty()) args.z1 = parse_point(z1);
        if (!z2.empty()) args.z2 = parse_point(z2);
        if (!path.empty()) args.path = parse_waypoints(path);
        args.clockwise_loop = loop == "clockwise";
        std::stringstream ss(grades);
        for (std::string g; std::getline(ss, g, ';');)
            if (!g.empty()) args.grades.push_back(g);
        return emit(cmd_monodromy(mono_opts.spec, args, mono_opts.run), mono_opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
}
