// cytower command-line tool: dim, embed, classify, lct, verify.
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cytower/io.hpp"
#include "cytower/verify.hpp"

using namespace cytower;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << text << "\n";
    }
}

int cmd_dim(long n, long cap, const std::string& format, const std::string& out) {
    SylvesterContext ctx = make_context(n);
    Int npos = count_positive(ctx);
    Int dim = npos - 1;
    json j;
    j["n"] = n;
    j["dim"] = dim.get_str();
    j["monomials"] = npos.get_str();
    bool materialize = ctx.mu <= cap;
    if (materialize) {
        std::vector<Int> w = positive_weights(ctx);
        std::sort(w.begin(), w.end());
        json arr = json::array();
        for (const Int& x : w) arr.push_back(x.get_str());
        j["weights"] = arr;
    }
    if (format == "table") {
        std::ostringstream os;
        os << "n " << n << "\ndim " << dim << "\nmonomials " << npos << "\n";
        if (materialize) {
            os << "weights";
            for (const auto& x : j["weights"]) os << ' ' << x.get<std::string>();
            os << "\n";
        } else {
            os << "weights (suppressed: " << ctx.mu << " tuples exceed cap " << cap << ")\n";
        }
        write_output(os.str(), out);
    } else {
        write_output(j.dump(2), out);
    }
    return 0;
}

int cmd_embed(const std::string& in, const std::string& out) {
    ModuliPoint p = point_from_json(json::parse(read_file(in)));
    SylvesterContext ctx = make_context(p.n);
    ModuliPoint img = embed(ctx, p);
    write_output(point_to_json(img).dump(2), out);
    return 0;
}

int cmd_classify(const std::string& in, const std::string& format, const std::string& out) {
    json j = json::parse(read_file(in));
    CurveFamily fam;
    if (j.contains("coords")) {
        ModuliPoint p = point_from_json(j);
        fam = family_from_point(make_context(p.n), p);
    } else {
        fam = family_from_json(j);
    }
    SylvesterContext ctx = make_context(fam.n);
    validate_family(ctx, fam);
    json rows = json::array();
    std::ostringstream table;
    table << "place | vbar | level | disc_val | lct\n";
    for (const UniPoly& b : place_basis(fam)) {
        FiberType ft = fiber_type(ctx, fam, b);
        json row;
        std::ostringstream ps;
        for (size_t k = b.coeffs().size(); k-- > 0;) {
            if (b[k] == 0) continue;
            Rat c = b[k];
            if (k < b.coeffs().size() - 1) {
                ps << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (c != 1 || k == 0) ps << rat_to_string(c);
            if (k > 0) ps << "x";
            if (k > 1) ps << "^" << k;
        }
        row["place"] = ps.str();
        row["vbar"] = rat_to_string(ft.vbar);
        if (ft.lvl) row["level"] = *ft.lvl;
        if (ft.disc_val) row["disc_val"] = *ft.disc_val;
        row["lct"] = rat_to_string(ft.lct);
        rows.push_back(row);
        table << ps.str() << " | " << rat_to_string(ft.vbar) << " | "
              << (ft.lvl ? std::to_string(*ft.lvl) : "-") << " | "
              << (ft.disc_val ? std::to_string(*ft.disc_val) : "-") << " | "
              << rat_to_string(ft.lct) << "\n";
    }
    json outj;
    outj["n"] = fam.n;
    outj["places"] = rows;
    write_output(format == "table" ? table.str() : outj.dump(2), out);
    return 0;
}

int cmd_lct(const std::string& in, const std::string& out) {
    MultiPoly f = MultiPoly::from_text(read_file(in));
    NewtonSupport sup = NewtonSupport::of(f);
    DiagonalExit d = diagonal_exit(sup);
    json j = exit_to_json(d);
    j["lct"] = rat_to_string(lct_at_origin(sup));
    write_output(j.dump(2), out);
    return 0;
}

int cmd_verify(const std::string& lvl, unsigned threads, const std::string& out) {
    VerifyReport rep = run_verify(lvl == "full", threads);
    json j;
    j["checks"] = json::array();
    for (const Check& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["expected"] = c.expected;
        cj["computed"] = c.computed;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["elapsed_ms"] = c.elapsed_ms;
        cj["provenance"] = c.provenance;
        j["checks"].push_back(cj);
    }
    j["overall"] = rep.overall ? "pass" : "fail";
    for (const Check& c : rep.checks)
        std::cerr << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  expected [" << c.expected
                  << "]  computed [" << c.computed << "]\n";
    std::cerr << (rep.overall ? "overall: pass" : "overall: fail") << "\n";
    write_output(j.dump(2), out);
    return rep.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the Sylvester moduli tower"};
    app.require_subcommand(1);

    long n = 2, cap = 10000000;
    unsigned threads = 0;
    std::string in, out, format = "json", level = "quick";

    auto* dim = app.add_subcommand("dim", "dimension, monomial count, weight multiset");
    dim->add_option("--n", n, "tower level")->required();
    dim->add_option("--cap", cap, "materialization cap (tuples)");
    dim->add_option("--format", format, "json|table");
    dim->add_option("--out", out, "output file (default stdout)");

    auto* emb = app.add_subcommand("embed", "apply the level-raising embedding to a point");
    emb->add_option("--in", in, "ModuliPoint JSON file")->required();
    emb->add_option("--out", out, "output file (default stdout)");

    auto* cls = app.add_subcommand("classify", "per-place fiber types of a family");
    cls->add_option("--in", in, "ModuliPoint or CurveFamily JSON file")->required();
    cls->add_option("--format", format, "json|table");
    cls->add_option("--out", out, "output file (default stdout)");

    auto* lct = app.add_subcommand("lct", "log canonical threshold at the origin");
    lct->add_option("--in", in, "MultiPoly text file")->required();
    lct->add_option("--out", out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "run the cross-check suite");
    ver->add_option("level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--threads", threads, "worker threads (0 = auto)");
    ver->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (dim->parsed()) return cmd_dim(n, cap, format, out);
        if (emb->parsed()) return cmd_embed(in, out);
        if (cls->parsed()) return cmd_classify(in, format, out);
        if (lct->parsed()) return cmd_lct(in, out);
        if (ver->parsed()) return cmd_verify(level, threads, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
