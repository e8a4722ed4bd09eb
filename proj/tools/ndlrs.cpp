// ndlrs: batch CLI for exact computations on n-dimensional linear
// recurring sequences. One command per invocation; JSON in, canonical
// JSON or plain text out. Exit codes: 0 ok, 1 usage, 2 domain error,
// 3 parse error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndlrs/annihilator.hpp"
#include "ndlrs/border.hpp"
#include "ndlrs/json_io.hpp"

namespace {

using namespace ndlrs;

struct CommonArgs {
    std::string seq_path;
    std::string field_arg;
    std::string witness_path;
};

struct LoadedJob {
    FieldCtx field = FieldCtx::rationals();
    Sequence seq = Sequence::window(Exponent::zeros(1), {Scalar::zero(FieldCtx::rationals())},
                                    FieldCtx::rationals());
    std::vector<Poly> declared_polys;
};

LoadedJob load_job(const CommonArgs& args) {
    json j = load_json_file(args.seq_path);
    std::string field_text = args.field_arg;
    if (field_text.empty()) {
        auto hint = sequence_field_hint(j);
        if (!hint)
            throw ParseError("no field context: pass --field or add a \"field\" key to the sequence file");
        field_text = *hint;
    }
    FieldCtx field = FieldCtx::parse(field_text);
    SequenceSpec spec = sequence_from_json(j, field);
    return LoadedJob{field, spec.seq, std::move(spec.axis_polys)};
}

EvrWitness load_witness(const CommonArgs& args, const LoadedJob& job) {
    if (!args.witness_path.empty()) {
        json j = load_json_file(args.witness_path);
        return EvrWitness::certify(job.seq, witness_from_json(j, job.seq.dim(), job.field));
    }
    if (!job.declared_polys.empty()) return EvrWitness::certify(job.seq, job.declared_polys);
    throw DomainError("no witness available: the sequence kind carries no axis polynomials; pass --witness");
}

Poly load_poly(const std::string& path, int n, const FieldCtx& field) {
    return poly_from_json(load_json_file(path), n, field);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_poly(const Poly& f, bool text) {
    if (text)
        std::cout << f.str() << "\n";
    else
        emit(poly_to_json(f));
}

Exponent default_depth(const Poly& f) {
    Exponent d = f.degree().value_or(Exponent::zeros(f.dim()));
    for (int i = 0; i < d.dim(); ++i) d[i] = 2 * d[i] + 2;
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for n-dimensional linear recurring sequences"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string at_arg, lo_arg, hi_arg, depth_arg, f_path, g_path, method = "gcd";
    int axis_1based = 0;
    bool text_output = false;

    auto add_common = [&](CLI::App* cmd, bool with_witness = false) {
        cmd->add_option("--seq", args.seq_path, "sequence JSON file")->required();
        cmd->add_option("--field", args.field_arg, "field context: a prime p, or q for the rationals");
        if (with_witness)
            cmd->add_option("--witness", args.witness_path,
                            "JSON array of axis polynomials (defaults to the sequence's own)");
    };

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate the sequence at an index");
    add_common(c_eval);
    c_eval->add_option("--at", at_arg, "index, comma-separated (e.g. \"0,-3\")")->required();

    CLI::App* c_gw = app.add_subcommand("gamma-window", "truncated generating function over a box");
    add_common(c_gw);
    c_gw->add_option("--lo", lo_arg, "box lower corner")->required();
    c_gw->add_option("--hi", hi_arg, "box upper corner (<= 0)")->required();

    CLI::App* c_b0 = app.add_subcommand("beta0", "border polynomial of f and the sequence");
    add_common(c_b0);
    c_b0->add_option("--f", f_path, "polynomial JSON file")->required();
    c_b0->add_flag("--text", text_output, "plain-text polynomial output");

    CLI::App* c_dec = app.add_subcommand("decompose", "all border summands of f * Gamma(s)");
    add_common(c_dec);
    c_dec->add_option("--f", f_path, "polynomial JSON file")->required();
    c_dec->add_option("--depth", depth_arg, "truncation depth per axis (default 2*deg_i f + 2)");

    CLI::App* c_g1 = app.add_subcommand("gamma1d", "minimal polynomial of a 1-D sequence");
    add_common(c_g1, true);
    c_g1->add_option("--f", f_path, "known annihilator (defaults to the witness polynomial)");
    c_g1->add_flag("--text", text_output, "plain-text polynomial output");

    CLI::App* c_ga = app.add_subcommand("gamma", "monic axis generator of Ann(s) in F[X_i]");
    add_common(c_ga, true);
    c_ga->add_option("--axis", axis_1based, "axis, 1-based")->required();
    c_ga->add_option("--method", method, "gcd (default) or lcm")->check(CLI::IsMember({"gcd", "lcm"}));
    c_ga->add_flag("--text", text_output, "plain-text polynomial output");

    CLI::App* c_ab = app.add_subcommand("ann-basis", "basis for the characteristic ideal Ann(s)");
    add_common(c_ab, true);

    CLI::App* c_mem = app.add_subcommand("member", "exact membership of g in Ann(s)");
    add_common(c_mem, true);
    c_mem->add_option("--g", g_path, "polynomial JSON file")->required();

    CLI::App* c_cd = app.add_subcommand("cofinite-dim", "dimension of the quotient monomial space");
    add_common(c_cd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        LoadedJob job = load_job(args);
        int n = job.seq.dim();

        if (c_eval->parsed()) {
            std::cout << job.seq.at(exponent_from_arg(at_arg, n)).str() << "\n";
        } else if (c_gw->parsed()) {
            Region box = Region::box(exponent_from_arg(lo_arg, n), exponent_from_arg(hi_arg, n));
            emit(series_to_json(gamma_window(job.seq, box)));
        } else if (c_b0->parsed()) {
            emit_poly(beta0(load_poly(f_path, n, job.field), job.seq), text_output);
        } else if (c_dec->parsed()) {
            Poly f = load_poly(f_path, n, job.field);
            Exponent depth = depth_arg.empty() ? default_depth(f) : exponent_from_arg(depth_arg, n);
            std::vector<Series> parts = decompose(f, job.seq, depth);
            Exponent df = f.degree().value_or(Exponent::zeros(n));
            for (int k = 0; k < static_cast<int>(parts.size()); ++k) {
                json line;
                line["k"] = k;
                line["cell"] = region_to_json(border_cell(k, df));
                line["terms"] = series_to_json(parts[static_cast<std::size_t>(k)])["terms"];
                emit(line);
            }
        } else if (c_g1->parsed()) {
            Poly f = f_path.empty() ? load_witness(args, job).axis_poly(0) : load_poly(f_path, n, job.field);
            emit_poly(gamma_1d(f, job.seq), text_output);
        } else if (c_ga->parsed()) {
            if (axis_1based < 1 || axis_1based > n) throw DomainError("axis out of range");
            EvrWitness w = load_witness(args, job);
            Poly g = (method == "lcm") ? gamma_axis_lcm(axis_1based - 1, w, job.seq)
                                       : gamma_axis_gcd(axis_1based - 1, w, job.seq);
            emit_poly(g, text_output);
        } else if (c_ab->parsed()) {
            emit(ann_basis_to_json(ann_basis(job.seq, load_witness(args, job))));
        } else if (c_mem->parsed()) {
            AnnBasisResult r = ann_basis(job.seq, load_witness(args, job));
            std::cout << (is_member(load_poly(g_path, n, job.field), r) ? "true" : "false") << "\n";
        } else if (c_cd->parsed()) {
            std::cout << cofinite_dim(ann_basis(job.seq, load_witness(args, job))) << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
