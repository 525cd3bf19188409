#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "cobalt/io.hpp"

using namespace cobalt;

namespace {

enum class Format { Text, JsonOut };

struct Options {
    long seed = 0;
    long cap = 120;
    Format format = Format::Text;
    bool parallel = false;

    int threads() const {
        if (!parallel) return 1;
        unsigned n = std::thread::hardware_concurrency();
        return n == 0 ? 1 : static_cast<int>(n);
    }
};

// Exit codes: 0 pass, 1 verification failure, 2 parse/format error.
struct VerificationFailure {
    std::string detail;
};

void emit(const Options& opt, bool ok, const std::string& detail, const Json& result = {}) {
    if (opt.format == Format::JsonOut) {
        Json out;
        out["ok"] = ok;
        if (!detail.empty()) out["detail"] = detail;
        if (!result.is_null()) out["result"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        if (!detail.empty()) std::cout << detail << "\n";
        if (!result.is_null() && result.is_string())
            std::cout << result.get<std::string>() << "\n";
        else if (!result.is_null())
            std::cout << result.dump(2) << "\n";
    }
    if (!ok) throw VerificationFailure{detail};
}

void emit_value(const Options& opt, const std::string& value) {
    if (opt.format == Format::JsonOut) {
        Json out;
        out["ok"] = true;
        out["result"] = value;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
}

void write_or_print(const Options& opt, const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        if (opt.format == Format::JsonOut) {
            Json wrapped;
            wrapped["ok"] = true;
            wrapped["result"] = j;
            std::cout << wrapped.dump(2) << "\n";
        } else {
            std::cout << j.dump(2) << "\n";
        }
    } else {
        save_json_file(out_path, j);
        emit_value(opt, "wrote " + out_path);
    }
}

std::string matrix_report(const Matrix& m) {
    if (m.rows() == 1 && m.cols() == 1) return m.at(0, 0).to_string();
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " " + m.to_string();
}

FiniteGroup load_group_arg(const std::string& arg) {
    // a path to a JSON file, or inline catalog spec like "cyclic(4)"
    if (arg.find('(') != std::string::npos) return parse_group_spec(arg);
    return group_from_json(load_json_file(arg));
}

Sector sector_of(int dim, bool constrained) {
    if (dim == 1) return Sector::OneD;
    if (dim == 2) return constrained ? Sector::TwoConstrained : Sector::TwoClosed;
    throw FormatError("dimension must be 1 or 2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobalt: exact workbench for low-dimensional TQFT structures"};
    app.require_subcommand(1);
    Options opt;
    std::string format_name = "text";
    app.add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--conductor-cap", opt.cap, "largest cyclotomic conductor")
        ->capture_default_str();
    app.add_option("--format", format_name, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--parallel", opt.parallel, "fan out pure coherence sweeps");

    std::vector<std::function<void()>> actions;
    auto run = [&actions](std::function<void()> f) { actions.push_back(std::move(f)); };

    // ---- group ----
    auto* group_cmd = app.add_subcommand("group", "finite groups and crossed modules");
    group_cmd->require_subcommand(1);
    {
        auto* make = group_cmd->add_subcommand("make", "build a catalog group");
        static std::string spec, out;
        make->add_option("spec", spec, "catalog spec, e.g. product(cyclic(2),cyclic(2))")
            ->required();
        make->add_option("-o,--out", out, "output file");
        make->callback([&] {
            run([&] {
                FiniteGroup g = parse_group_spec(spec);
                write_or_print(opt, group_to_json(g), out);
            });
        });

        auto* verify = group_cmd->add_subcommand("verify", "verify the group laws");
        static std::string vfile;
        verify->add_option("file", vfile)->required();
        verify->callback([&] {
            run([&] {
                FiniteGroup g = group_from_json(load_json_file(vfile));
                Verdict v = verify_group(g, opt.seed);
                emit(opt, v.ok, v.ok ? "group laws hold (order " + std::to_string(g.order) + ")"
                                     : v.detail);
            });
        });

        auto* classes = group_cmd->add_subcommand("classes", "conjugacy classes");
        static std::string cfile;
        classes->add_option("file", cfile)->required();
        classes->callback([&] {
            run([&] {
                FiniteGroup g = load_group_arg(cfile);
                Json out_j = Json::array();
                for (const auto& cls : conjugacy_classes(g)) {
                    Json row = Json::array();
                    for (int e : cls) row.push_back(g.name(e));
                    out_j.push_back(row);
                }
                write_or_print(opt, out_j, "");
            });
        });

        auto* xverify = group_cmd->add_subcommand("verify-crossed", "verify a crossed module");
        static std::string xfile;
        xverify->add_option("file", xfile)->required();
        xverify->callback([&] {
            run([&] {
                CrossedModule x = crossed_module_from_json(load_json_file(xfile));
                Verdict v = verify_crossed_module(x);
                emit(opt, v.ok, v.ok ? "crossed module identities hold" : v.detail);
            });
        });
    }

    // ---- cocycle ----
    auto* cocycle_cmd = app.add_subcommand("cocycle", "group 2-cocycles");
    cocycle_cmd->require_subcommand(1);
    {
        auto* verify = cocycle_cmd->add_subcommand("verify", "2-cocycle identity + normalization");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                Cocycle a = cocycle_from_json(load_json_file(file));
                Verdict v = verify_cocycle(a);
                emit(opt, v.ok,
                     v.ok ? "cocycle identity holds (" +
                                std::to_string(a.group.order * a.group.order * a.group.order) +
                                " triples)"
                          : v.detail);
            });
        });

        auto* pairing = cocycle_cmd->add_subcommand("pairing", "commutator pairing alpha(g,h)/alpha(h,g)");
        static std::string pfile;
        static int pg = 0, ph = 0;
        pairing->add_option("file", pfile)->required();
        pairing->add_option("elem_g", pg, "element index g")->required();
        pairing->add_option("elem_h", ph, "element index h")->required();
        pairing->callback([&] {
            run([&] {
                Cocycle a = cocycle_from_json(load_json_file(pfile));
                emit_value(opt, commutator_pairing(a, pg, ph).to_string());
            });
        });
    }

    // ---- character ----
    auto* char_cmd = app.add_subcommand("character", "2-characters");
    char_cmd->require_subcommand(1);
    {
        auto* verify = char_cmd->add_subcommand("verify", "associativity + 2-group coherence");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                TwoCharacter c = character_from_json(load_json_file(file));
                Verdict v = verify_two_character(c);
                emit(opt, v.ok, v.ok ? "2-character coherence holds" : v.detail);
            });
        });

        auto* fromc = char_cmd->add_subcommand("from-cocycle", "the T(alpha) construction");
        static std::string cfile, cout_path;
        fromc->add_option("file", cfile)->required();
        fromc->add_option("-o,--out", cout_path);
        fromc->callback([&] {
            run([&] {
                Cocycle a = cocycle_from_json(load_json_file(cfile));
                if (Verdict v = verify_cocycle(a); !v) emit(opt, false, "input: " + v.detail);
                write_or_print(opt, character_to_json(from_cocycle(a)), cout_path);
            });
        });

        auto* hol = char_cmd->add_subcommand("holonomy", "holonomy table and triviality flag");
        static std::string hfile;
        hol->add_option("file", hfile)->required();
        hol->callback([&] {
            run([&] {
                TwoCharacter c = character_from_json(load_json_file(hfile));
                HolonomyReport r = holonomy_table(c);
                Json j;
                j["trivial"] = r.trivial;
                Json tab = Json::array();
                for (const Scalar& s : r.table) tab.push_back(s.to_string());
                j["table"] = tab;
                emit(opt, true, r.trivial ? "holonomy is trivial" : "holonomy is nontrivial", j);
            });
        });
    }

    // ---- projrep ----
    auto* proj_cmd = app.add_subcommand("projrep", "projective representations and fixed points");
    proj_cmd->require_subcommand(1);
    {
        auto* verify = proj_cmd->add_subcommand("verify", "twisted multiplicativity");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                ProjRep r = projrep_from_json(load_json_file(file));
                if (Verdict cv = verify_cocycle(r.cocycle); !cv)
                    emit(opt, false, "cocycle: " + cv.detail);
                Verdict v = verify_projrep(r);
                int pairs = r.group.order * r.group.order;
                emit(opt, v.ok,
                     v.ok ? "projective relation holds (" + std::to_string(pairs) + "/" +
                                std::to_string(pairs) + " pairs)"
                          : v.detail);
            });
        });

        auto* reg = proj_cmd->add_subcommand("regular", "twisted regular representation");
        static std::string rfile, rout;
        reg->add_option("cocycle", rfile)->required();
        reg->add_option("-o,--out", rout);
        reg->callback([&] {
            run([&] {
                Cocycle a = cocycle_from_json(load_json_file(rfile));
                if (Verdict v = verify_cocycle(a); !v) emit(opt, false, "input: " + v.detail);
                write_or_print(opt, projrep_to_json(twisted_regular_rep(a)), rout);
            });
        });

        auto* tofp = proj_cmd->add_subcommand("to-fixed-point", "realization as homotopy fixed point");
        static std::string tfile, tout;
        tofp->add_option("file", tfile)->required();
        tofp->add_option("-o,--out", tout);
        tofp->callback([&] {
            run([&] {
                ProjRep r = projrep_from_json(load_json_file(tfile));
                write_or_print(opt, fixed_point_to_json(to_fixed_point(r)), tout);
            });
        });

        auto* fromfp = proj_cmd->add_subcommand("from-fixed-point", "back to a projective representation");
        static std::string ffile, fout;
        fromfp->add_option("file", ffile)->required();
        fromfp->add_option("-o,--out", fout);
        fromfp->callback([&] {
            run([&] {
                HomotopyFixedPoint p = fixed_point_from_json(load_json_file(ffile));
                write_or_print(opt, projrep_to_json(from_fixed_point(p)), fout);
            });
        });

        auto* vfp = proj_cmd->add_subcommand("verify-fixed-point", "fixed point compatibility");
        static std::string vfile;
        vfp->add_option("file", vfile)->required();
        vfp->callback([&] {
            run([&] {
                HomotopyFixedPoint p = fixed_point_from_json(load_json_file(vfile));
                Verdict v = verify_fixed_point(p);
                emit(opt, v.ok, v.ok ? "fixed point compatibility holds" : v.detail);
            });
        });
    }

    // ---- frob ----
    auto* frob_cmd = app.add_subcommand("frob", "Frobenius algebras and modules");
    frob_cmd->require_subcommand(1);
    {
        auto* verify = frob_cmd->add_subcommand("verify", "axioms and flags");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                FrobeniusAlgebra a = frobenius_from_json(load_json_file(file));
                FrobeniusReport rep = verify_frobenius(a);
                std::string flags = rep.verdict.ok
                                        ? std::string(" (commutative: ") +
                                              (rep.commutative ? "yes" : "no") + ", symmetric: " +
                                              (rep.symmetric ? "yes" : "no") + ")"
                                        : "";
                emit(opt, rep.verdict.ok,
                     rep.verdict.ok ? "Frobenius axioms hold" + flags : rep.verdict.detail);
            });
        });

        auto* ga = frob_cmd->add_subcommand("group-algebra", "K[G] with identity-coefficient counit");
        static std::string gfile, gout;
        ga->add_option("group", gfile, "group file or catalog spec")->required();
        ga->add_option("-o,--out", gout);
        ga->callback([&] {
            run([&] {
                FiniteGroup g = load_group_arg(gfile);
                write_or_print(opt, frobenius_to_json(make_group_algebra(g)), gout);
            });
        });

        auto* cen = frob_cmd->add_subcommand("center", "basis of the center");
        static std::string cfile;
        cen->add_option("file", cfile)->required();
        cen->callback([&] {
            run([&] {
                FrobeniusAlgebra a = frobenius_from_json(load_json_file(cfile));
                Json j = Json::array();
                for (const auto& vec : center(a)) {
                    Json row = Json::array();
                    for (const Scalar& s : vec) row.push_back(s.to_string());
                    j.push_back(row);
                }
                write_or_print(opt, j, "");
            });
        });

        auto* handle = frob_cmd->add_subcommand("handle", "handle element");
        static std::string hfile;
        handle->add_option("file", hfile)->required();
        handle->callback([&] {
            run([&] {
                FrobeniusAlgebra a = frobenius_from_json(load_json_file(hfile));
                Json j = Json::array();
                for (const Scalar& s : handle_element(a)) j.push_back(s.to_string());
                write_or_print(opt, j, "");
            });
        });

        auto* ss = frob_cmd->add_subcommand("semisimple", "regular trace form test");
        static std::string sfile;
        ss->add_option("file", sfile)->required();
        ss->callback([&] {
            run([&] {
                FrobeniusAlgebra a = frobenius_from_json(load_json_file(sfile));
                emit_value(opt, is_semisimple(a) ? "semisimple" : "not semisimple");
            });
        });

        auto* hom = frob_cmd->add_subcommand("hom", "intertwiner space of two modules");
        static std::string m1, m2;
        hom->add_option("module_a", m1)->required();
        hom->add_option("module_b", m2)->required();
        hom->callback([&] {
            run([&] {
                AlgModule a = module_from_json(load_json_file(m1));
                AlgModule b = module_from_json(load_json_file(m2));
                HomBasis basis = hom_modules(a, b);
                emit_value(opt, "dimension " + std::to_string(basis.dim));
            });
        });
    }

    // ---- cob ----
    auto* cob_cmd = app.add_subcommand("cob", "cobordism words");
    cob_cmd->require_subcommand(1);
    {
        auto* parse = cob_cmd->add_subcommand("parse", "parse, typecheck and echo canonical text");
        static std::string word;
        static int dim = 2;
        static bool constrained = false;
        parse->add_option("--dim", dim, "1 or 2")->capture_default_str();
        parse->add_flag("--constrained", constrained, "2d-constrained sector");
        parse->add_option("word", word)->required();
        parse->callback([&] {
            run([&] {
                CobWord w = parse_word(word, sector_of(dim, constrained));
                Json j;
                j["canonical"] = serialize_word(w);
                j["source"] = w.source().to_string();
                j["target"] = w.target().to_string();
                emit(opt, true,
                     serialize_word(w) + "  : " + w.source().to_string() + " -> " +
                         w.target().to_string(),
                     opt.format == Format::JsonOut ? j : Json());
            });
        });

        auto* eval = cob_cmd->add_subcommand("eval", "evaluate a word");
        static std::string eword, algebra, bcfile;
        static int edim = 2;
        eval->add_option("--dim", edim, "1 or 2")->capture_default_str();
        eval->add_option("--algebra", algebra, "commutative Frobenius algebra file (2d)");
        eval->add_option("--bc", bcfile, "boundary condition file (1d)");
        eval->add_option("word", eword)->required();
        eval->callback([&] {
            run([&] {
                if (edim == 2) {
                    if (algebra.empty()) throw FormatError("--algebra required for --dim 2");
                    FrobeniusAlgebra a = frobenius_from_json(load_json_file(algebra));
                    Matrix m = eval_closed_2d(parse_word(eword, Sector::TwoClosed), a);
                    emit_value(opt, matrix_report(m));
                } else if (edim == 1) {
                    if (bcfile.empty()) throw FormatError("--bc required for --dim 1");
                    BoundaryCondition bc = boundary_condition_from_json(load_json_file(bcfile));
                    Matrix m = eval_1d(parse_word(eword, Sector::OneD), bc);
                    emit_value(opt, matrix_report(m));
                } else {
                    throw FormatError("dimension must be 1 or 2");
                }
            });
        });

        auto* genus = cob_cmd->add_subcommand("genus", "closed genus-g invariant eps(H^g)");
        static int g = 0;
        static std::string galgebra;
        genus->add_option("g", g)->required();
        genus->add_option("--algebra", galgebra)->required();
        genus->callback([&] {
            run([&] {
                FrobeniusAlgebra a = frobenius_from_json(load_json_file(galgebra));
                emit_value(opt, genus_invariant(g, a).to_string());
            });
        });

        auto* cyl = cob_cmd->add_subcommand("cylinderize", "product with the constrained interval");
        static std::string cword;
        cyl->add_option("word", cword)->required();
        cyl->callback([&] {
            run([&] {
                CobWord w = cylinderize(parse_word(cword, Sector::OneD));
                emit_value(opt, serialize_word(w) + "  : " + w.source().to_string() + " -> " +
                                    w.target().to_string());
            });
        });

        auto* trans = cob_cmd->add_subcommand("transmission", "character of the defect cylinder");
        static std::string repfile;
        trans->add_option("rep", repfile, "untwisted representation file")->required();
        trans->callback([&] {
            run([&] {
                ProjRep r = projrep_from_json(load_json_file(repfile));
                Json j = Json::array();
                for (const Scalar& s : transmission(r.group, r)) j.push_back(s.to_string());
                write_or_print(opt, j, "");
            });
        });
    }

    // ---- anomaly ----
    auto* anomaly_cmd = app.add_subcommand("anomaly", "semitrivialized anomalies and theories");
    anomaly_cmd->require_subcommand(1);
    {
        auto* verify = anomaly_cmd->add_subcommand("verify", "psi coherence on the finite model");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                SemitrivializedAnomaly w = anomaly_from_json(load_json_file(file));
                Verdict v = verify_anomaly(w);
                emit(opt, v.ok, v.ok ? "anomaly coherence holds" : v.detail);
            });
        });

        auto* vt = anomaly_cmd->add_subcommand("verify-theory", "anom1 and anom2 diagrams");
        static std::string tfile;
        vt->add_option("file", tfile)->required();
        vt->callback([&] {
            run([&] {
                AnomalousTheory z = theory_from_json(load_json_file(tfile));
                if (Verdict v = verify_anomaly(z.anomaly); !v)
                    emit(opt, false, "anomaly: " + v.detail);
                Verdict v = verify_anomalous_theory(z, opt.threads());
                emit(opt, v.ok, v.ok ? "anomalous theory coherence holds (anom1, anom2)"
                                     : v.detail);
            });
        });

        auto* reduce = anomaly_cmd->add_subcommand("reduce", "boundary condition to anomalous theory");
        static std::string lambda = "1", bcfile, rout;
        static int max_points = 2;
        reduce->add_option("--lambda", lambda, "invertible Euler parameter")->capture_default_str();
        reduce->add_option("--bc", bcfile, "boundary condition file")->required();
        reduce->add_option("--max-points", max_points, "object size bound (<= 4)")
            ->capture_default_str();
        reduce->add_option("-o,--out", rout);
        reduce->callback([&] {
            run([&] {
                BoundaryCondition bc = boundary_condition_from_json(load_json_file(bcfile));
                AnomalousTheory z = reduce_boundary(parse_scalar(lambda), bc,
                                                    {max_points, 1}, opt.threads());
                if (rout.empty())
                    emit_value(opt, "reduction passes coherence (" +
                                        std::to_string(z.anomaly.model.morphisms.size()) +
                                        " morphisms, " +
                                        std::to_string(z.anomaly.model.composition.size()) +
                                        " composable pairs)");
                else
                    write_or_print(opt, theory_to_json(z), rout);
            });
        });
    }

    // ---- modular ----
    auto* mod_cmd = app.add_subcommand("modular", "modular data and projective defects");
    mod_cmd->require_subcommand(1);
    {
        auto* verify = mod_cmd->add_subcommand("verify", "S invertible, T diagonal");
        static std::string file;
        verify->add_option("file", file)->required();
        verify->callback([&] {
            run([&] {
                ModularData m = modular_from_json(load_json_file(file));
                Verdict v = verify_modular(m);
                emit(opt, v.ok, v.ok ? "modular data well formed" : v.detail);
            });
        });

        auto* defect = mod_cmd->add_subcommand("defect", "projective defect of a relator");
        static std::string dfile, relator;
        defect->add_option("file", dfile)->required();
        defect->add_option("--relator", relator, "word in S, T and inverses")->required();
        defect->callback([&] {
            run([&] {
                ModularData m = modular_from_json(load_json_file(dfile));
                emit_value(opt, modular_defect(m, relator).to_string());
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }
    opt.format = format_name == "json" ? Format::JsonOut : Format::Text;
    set_conductor_cap(opt.cap);

    try {
        for (auto& action : actions) action();
    } catch (const VerificationFailure&) {
        return 1;
    } catch (const Error& e) {
        if (opt.format == Format::JsonOut) {
            Json j;
            j["ok"] = false;
            j["error"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 0;
}
