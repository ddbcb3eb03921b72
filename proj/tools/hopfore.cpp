#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfore/presfile.hpp"
#include "hopfore/report.hpp"

using namespace hopfore;

namespace {

struct Common {
    std::string format = "text";
    std::string out;
    std::string field;         // "", "Q", "Fp:<p>", "Qt"
    std::string q;             // specialization point, rational
    long bound = 12;
};

void add_output_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out, "Write the output to a file instead of stdout");
}

void add_model_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.field,
                    "Override the ground field declared in the file (Q, Fp:<p>, Qt)");
    cmd->add_option("--q", c.q, "Specialize a Qt model to Q at this rational value");
    cmd->add_option("--degree-bound", c.bound, "Degree bound for solvers");
}

std::optional<FieldSpec> field_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "Q") return FieldSpec::Q();
    if (s == "Qt") return FieldSpec::Qt();
    if (s.rfind("Fp:", 0) == 0) return FieldSpec::Fp(std::stol(s.substr(3)));
    throw Error("BadParameters", "unknown field " + s + " (expected Q, Fp:<p> or Qt)");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadParameters", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Loaded {
    ParsedModel model;
    std::string text;
};

Loaded load(const std::string& path, const Common& c) {
    Loaded l;
    l.text = slurp(path);
    l.model = parse_presentation_text(l.text, path, field_flag(c.field));
    if (!c.q.empty()) l.model = specialize_model(l.model, mpq_class(c.q, 10));
    return l;
}

std::string digest_of(const std::string& command, const std::vector<std::string>& payloads) {
    std::string data = command;
    for (const auto& p : payloads) {
        data.push_back('\0');
        data += p;
    }
    return fnv1a_hex(data);
}

void write_output(const std::string& text, const Common& c) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out);
    if (!out) throw Error("BadParameters", "cannot write " + c.out);
    out << text;
}

int finish(Report r, const Common& c) {
    write_output(c.format == "json" ? report_json(r) : report_text(r), c);
    return r.success() ? 0 : 1;
}

const GhoeData& need_ghoe(const ParsedModel& m, const std::string& path) {
    if (!m.ghoe) throw Error("InvariantViolation", path + ": extension data required");
    return *m.ghoe;
}

std::string classification_note(const Classification& cls) {
    if (std::holds_alternative<CaseA>(cls)) return "A (no middle term)";
    if (const auto* b = std::get_if<CaseB>(&cls))
        return "B (alpha = " + b->alpha.str() + ", beta = " + b->beta.str() + ")";
    if (const auto* cc = std::get_if<CaseC>(&cls)) return "C (r3 = " + cc->r3.str() + ")";
    return "invalid: " + std::get<CaseInvalid>(cls).reason;
}

long env_default_bound() {
    if (const char* s = std::getenv("HOPFORE_DEGREE_BOUND")) return std::atol(s);
    return 12;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Hopf structures on skew-polynomial extensions"};
    app.require_subcommand(1);

    Common c;
    c.bound = env_default_bound();
    std::string file, file2, entry_name;
    std::string glike = "1", hlike = "1", rhs_str;

    CLI::App* cp = app.add_subcommand("check-presentation",
                                      "Parse a file and check local confluence");
    cp->add_option("file", file)->required();
    add_output_flags(cp, c);
    add_model_flags(cp, c);

    CLI::App* ch = app.add_subcommand("check-hopf", "Run the full Hopf axiom suite");
    ch->add_option("file", file)->required();
    add_output_flags(ch, c);
    add_model_flags(ch, c);

    CLI::App* oe = app.add_subcommand("ore-extend",
                                      "Check the twist data and build the extension");
    oe->add_option("file", file)->required();
    add_output_flags(oe, c);
    add_model_flags(oe, c);

    CLI::App* cg = app.add_subcommand("check-ghoe",
                                      "Verify or refute the candidate Hopf structure on "
                                      "the extension");
    cg->add_option("file", file)->required();
    add_output_flags(cg, c);
    add_model_flags(cg, c);

    CLI::App* dc = app.add_subcommand("derive-chi",
                                      "Derive the character of the twist from the data");
    dc->add_option("file", file)->required();
    add_output_flags(dc, c);
    add_model_flags(dc, c);

    CLI::App* ci = app.add_subcommand("check-iso",
                                      "Verify the witness in the second file against both "
                                      "extensions");
    ci->add_option("file", file)->required();
    ci->add_option("target", file2)->required();
    add_output_flags(ci, c);
    add_model_flags(ci, c);

    CLI::App* si = app.add_subcommand("solve-iso-1dim",
                                      "Decide isomorphism for two extensions of the "
                                      "polynomial line");
    si->add_option("file", file)->required();
    si->add_option("target", file2)->required();
    add_output_flags(si, c);
    add_model_flags(si, c);

    CLI::App* sd = app.add_subcommand("solve-delta-eq",
                                      "Solve Delta(c) - c (x) g - h (x) c = rhs");
    sd->add_option("file", file)->required();
    sd->add_option("--rhs", rhs_str, "Right-hand side tensor")->required();
    sd->add_option("--glike", glike, "Group-like g (default 1)");
    sd->add_option("--hlike", hlike, "Group-like h (default 1)");
    add_output_flags(sd, c);
    add_model_flags(sd, c);

    CLI::App* cat = app.add_subcommand("catalog", "Named instance catalog");
    cat->require_subcommand(1);
    CLI::App* cl = cat->add_subcommand("list", "List entry names and descriptions");
    add_output_flags(cl, c);
    CLI::App* ce = cat->add_subcommand("emit", "Write an entry as a presentation file");
    ce->add_option("name", entry_name)->required();
    ce->add_option("--out", c.out, "Write the output to a file instead of stdout");
    ce->add_option("--q", c.q, "Specialize a Qt entry to Q at this rational value");
    CLI::App* cv = cat->add_subcommand("verify-all",
                                       "Re-run every entry against its recorded verdict");
    add_output_flags(cv, c);

    try {
        app.parse(argc, argv);

        if (cp->parsed()) {
            Loaded l = load(file, c);
            Report r{"check-presentation", {file}, digest_of("check-presentation", {l.text}),
                     "", l.model.pres->check_local_confluence(), {}};
            r.verdict = r.diag.pass ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        if (ch->parsed()) {
            Loaded l = load(file, c);
            if (!l.model.hopf)
                throw Error("InvariantViolation", file + ": hopf structure required");
            Report r{"check-hopf", {file}, digest_of("check-hopf", {l.text}), "",
                     check_hopf_axioms(*l.model.hopf), {}};
            r.verdict = r.diag.pass ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        if (oe->parsed()) {
            Loaded l = load(file, c);
            if (!l.model.ore) throw Error("InvariantViolation", file + ": ore data required");
            Report r{"ore-extend", {file}, digest_of("ore-extend", {l.text}), "",
                     check_ore_data(*l.model.ore), {}};
            if (r.diag.pass) {
                OreExtension ext = build_ore_extension(*l.model.ore);
                const Presentation& H = *ext.H;
                for (const auto& [lhs, rhs] : H.rules())
                    if (lhs.first.gen == ext.z_index && !lhs.first.neg)
                        r.notes.emplace_back(H.letter_str(lhs.first) + "*" +
                                                 H.letter_str(lhs.second),
                                             rhs.str());
            }
            r.verdict = r.diag.pass ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        if (cg->parsed()) {
            Loaded l = load(file, c);
            AttachResult res = attach_and_verify(need_ghoe(l.model, file));
            Report r{"check-ghoe", {file}, digest_of("check-ghoe", {l.text}), "",
                     std::move(res.diag), {}};
            r.diag.sort_entries();
            r.notes.emplace_back("classification", classification_note(res.cls));
            r.verdict = r.diag.pass ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        if (dc->parsed()) {
            Loaded l = load(file, c);
            GhoeData nd = normalize_case(need_ghoe(l.model, file));
            CharacterResult cr = derive_character(nd);
            Report r{"derive-chi", {file}, digest_of("derive-chi", {l.text}), "", {}, {}};
            if (cr.ok) {
                r.verdict = "Solved";
                for (int i = 0; i < l.model.pres->num_generators(); ++i)
                    r.notes.emplace_back("chi." + l.model.pres->gen(i).name,
                                         cr.values[static_cast<size_t>(i)].str());
            } else {
                r.verdict = "Fail";
                r.notes.emplace_back("reason", cr.message);
            }
            return finish(std::move(r), c);
        }
        if (ci->parsed()) {
            Loaded a = load(file, c), b = load(file2, c);
            IsoWitness w = resolve_witness(a.model, b.model);
            Report r{"check-iso", {file, file2}, digest_of("check-iso", {a.text, b.text}),
                     "", verify_witness(*a.model.ghoe, *b.model.ghoe, w), {}};
            r.verdict = r.diag.pass ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        if (si->parsed()) {
            Loaded a = load(file, c), b = load(file2, c);
            WitnessSearch s = solve_witness_1dim(need_ghoe(a.model, file),
                                                 need_ghoe(b.model, file2), c.bound);
            Report r{"solve-iso-1dim", {file, file2},
                     digest_of("solve-iso-1dim", {a.text, b.text}), "", {}, {}};
            if (s.witness) {
                r.verdict = "Solved";
                r.notes.emplace_back("lambda", s.witness->lambda.str());
                r.notes.emplace_back("r", s.witness->r.str());
                r.notes.emplace_back("b", s.witness->b.str());
                for (int i = 0; i < a.model.pres->num_generators(); ++i)
                    r.notes.emplace_back("phi." + a.model.pres->gen(i).name,
                                         s.witness->phi[static_cast<size_t>(i)].str());
                for (int i = 0; i < b.model.pres->num_generators(); ++i)
                    r.notes.emplace_back("phi_inv." + b.model.pres->gen(i).name,
                                         s.witness->phi_inv[static_cast<size_t>(i)].str());
            } else {
                r.verdict = "NoSolution";
                r.notes.emplace_back("reason", s.no_witness_reason);
            }
            return finish(std::move(r), c);
        }
        if (sd->parsed()) {
            Loaded l = load(file, c);
            if (!l.model.hopf)
                throw Error("InvariantViolation", file + ": hopf structure required");
            const Presentation& p = *l.model.pres;
            Tensor2 rhs = parse_tensor2(rhs_str, p, "--rhs");
            Element g = parse_element(glike, p, "--glike");
            Element h = parse_element(hlike, p, "--hlike");
            auto sol = solve_skew_primitive_equation(*l.model.hopf, rhs, g, h, c.bound);
            Report r{"solve-delta-eq", {file},
                     digest_of("solve-delta-eq", {l.text, rhs_str, glike, hlike}), "", {}, {}};
            if (sol) {
                r.verdict = "Solved";
                r.notes.emplace_back("particular", sol->particular.str());
                for (size_t i = 0; i < sol->kernel.size(); ++i)
                    r.notes.emplace_back("kernel." + std::to_string(i),
                                         sol->kernel[i].str());
            } else {
                r.verdict = "NoSolution";
            }
            return finish(std::move(r), c);
        }
        if (cl->parsed()) {
            Report r{"catalog list", {}, digest_of("catalog list", catalog_names()),
                     "Pass", {}, {}};
            for (const auto& n : catalog_names())
                r.notes.emplace_back(n, build_named(n).description);
            return finish(std::move(r), c);
        }
        if (ce->parsed()) {
            ParsedModel m = model_from_entry(build_named(entry_name));
            if (!c.q.empty()) m = specialize_model(m, mpq_class(c.q, 10));
            write_output(print_presentation(m), c);
            return 0;
        }
        if (cv->parsed()) {
            Report r{"catalog verify-all", {},
                     digest_of("catalog verify-all", catalog_names()), "", {}, {}};
            bool all = true;
            for (const auto& n : catalog_names()) {
                EntryResult res = run_entry(build_named(n));
                all = all && res.matched;
                std::string why = "0";
                if (!res.matched) {
                    why = res.diag.pass ? "verdict Pass" : "verdict Fail";
                    why += " does not match the record";
                }
                r.diag.add("entry", n, why, res.matched);
            }
            r.verdict = all ? "Pass" : "Fail";
            return finish(std::move(r), c);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
