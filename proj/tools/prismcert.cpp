// prismcert: batch certificate checker for the prism-manifold surgery table.
//
// Subcommands: verify (batch report), show (one instance), alexander / det
// (ad-hoc braid computations), trace (strand walk), whitehead (free-group
// certificates), catalogue (family registry as JSON).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "prism/burau.hpp"
#include "prism/embedding.hpp"
#include "prism/report.hpp"

using namespace prism;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run_verify(const std::string& config_path, const std::vector<std::string>& families,
               std::optional<int> s, std::optional<int> t, std::optional<int> max_s,
               std::optional<int> max_t, int jobs, const std::string& format,
               const std::string& out_path, bool timings) {
    VerifyConfig config;
    if (!config_path.empty()) config = parse_config(slurp(config_path));
    if (max_s) config.caps.max_s = *max_s;
    if (max_t) config.caps.max_t = *max_t;
    if (jobs > 0) config.jobs = jobs;
    if (timings) config.timings = true;

    std::vector<FamilyInstance> instances;
    if (!families.empty() && s) {
        for (const auto& name : families)
            instances.push_back(instantiate(family_from_name(name), *s, t.value_or(0)));
    } else {
        instances = enumerate_instances(config.caps);
        if (!families.empty()) {
            std::vector<FamilyId> keep;
            for (const auto& name : families) keep.push_back(family_from_name(name));
            std::erase_if(instances, [&](const FamilyInstance& inst) {
                return std::find(keep.begin(), keep.end(), inst.family) == keep.end();
            });
        }
    }

    VerificationReport report = verify_instances(instances, config.jobs);
    write_out(out_path, emit(report, report_format_from_name(format), config.timings));
    return report.failures() == 0 ? 0 : 1;
}

int run_show(const std::string& family, int s, int t) {
    FamilyId id = family_from_name(family);
    FamilyInstance inst = instantiate(id, s, t);
    const FamilyRow& row = family_row(id);
    std::cout << "family " << row.name << " at (s, t) = (" << s << ", " << t << ")\n";
    std::cout << "braid:  " << inst.braid_text() << "\n";
    std::cout << "p = " << inst.coeffs.p << ", q = " << inst.coeffs.q;
    if (inst.coeffs.r) std::cout << ", r = " << *inst.coeffs.r;
    std::cout << "\n";
    if (!inst.is_torus_row()) {
        std::cout << "surface slope: " << inst.spec().surface_slope() << "\n";
        if (inst.embedding) {
            TraceResult tr = trace(inst.spec(), *inst.embedding);
            std::cout << "embedding type " << (*inst.embedding == EmbeddingType::TypeA ? "A" : "B")
                      << "\n";
            std::cout << "inner word (traced): " << tr.inner.to_string() << "\n";
            std::cout << "outer word (traced): " << tr.outer.to_string(true) << "\n";
            if (!row.inner_word.empty()) {
                ExpectedWords exp = expected_words(id, s, t);
                std::cout << "inner word (formula): " << exp.inner.to_string() << "\n";
                if (exp.outer)
                    std::cout << "outer word (formula): " << exp.outer->to_string(true) << "\n";
                if (exp.basis) {
                    bool primed = exp.sf_outer;
                    std::cout << "claimed basis pair: (" << exp.basis->first.to_string(primed)
                              << ", " << exp.basis->second.to_string(primed) << ") with "
                              << (exp.sf_outer ? "w' = A^2B^2" : "w = A^2B^2") << "\n";
                }
                if (exp.primitive_partner)
                    std::cout << "primitive with: "
                              << exp.primitive_partner->to_string(!exp.sf_outer) << "\n";
            }
            std::cout << "trace:\n" << trace_dump(tr);
        }
    }
    return 0;
}

int run_alexander(const std::string& braid_text) {
    BraidWord w = parse_braid(braid_text);
    LaurentPoly delta = alexander_polynomial(w);
    std::cout << delta.to_string() << "\n";
    BigInt at_neg1 = delta.eval_minus_one();
    std::cout << "|Delta(-1)| = " << BigInt(abs(at_neg1)).str()
              << ", Delta''(1) = " << delta.second_derivative_at_one().str() << "\n";
    return 0;
}

int run_det(const std::string& braid_text) {
    std::cout << knot_determinant(parse_braid(braid_text)).str() << "\n";
    return 0;
}

int run_trace(const std::string& family, int s, int t, int start) {
    FamilyId id = family_from_name(family);
    FamilyInstance inst = instantiate(id, s, t);
    if (inst.is_torus_row() || !inst.embedding)
        throw std::runtime_error("torus rows have no two-block trace");
    TraceResult tr = trace(inst.spec(), *inst.embedding, start);
    std::cout << trace_dump(tr);
    std::cout << "inner: " << tr.inner.to_string() << "\n";
    std::cout << "outer: " << tr.outer.to_string(true) << "\n";
    return 0;
}

int run_whitehead(const std::string& word_text, int m, int n) {
    CyclicWord w(parse_word(word_text));
    MinimizeResult min = whitehead_minimize(w);
    std::cout << "cyclic form: " << w.to_string() << " (length " << w.length() << ")\n";
    std::cout << "minimal form: " << min.minimal.to_string() << " (length "
              << min.minimal.length() << ")\n";
    if (!min.trail.indices.empty())
        std::cout << "reduction: " << min.trail.to_string() << "\n";
    PrimitivityCertificate prim = is_primitive(w);
    std::cout << "primitive: " << (prim.primitive ? "yes" : "no") << "\n";
    SeifertFiberedCertificate sf = is_seifert_fibered(w, m, n);
    std::cout << "(" << m << "," << n << ") Seifert-fibered: " << (sf.fibered ? "yes" : "no");
    if (sf.fibered) {
        std::cout << "  via " << sf.transform.to_string();
        if (sf.inverted) std::cout << " (up to inversion)";
    }
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate checker for prism-manifold surgery knots"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the batch certificate report");
    std::string config_path, format = "text", out_path;
    std::vector<std::string> families;
    std::optional<int> opt_s, opt_t, max_s, max_t;
    int jobs = 0;
    bool timings = false;
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--family", families, "restrict to named families (repeatable)");
    verify->add_option("--s", opt_s, "single instance: s parameter");
    verify->add_option("--t", opt_t, "single instance: t parameter");
    verify->add_option("--max-s", max_s, "global cap on s");
    verify->add_option("--max-t", max_t, "global cap on t");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_flag("--timings", timings, "include wall times in json/csv output");

    auto* show = app.add_subcommand("show", "print one instance: braid, coefficients, words");
    std::string show_family;
    int show_s = 0, show_t = 0;
    show->add_option("--family", show_family, "family name, e.g. 5+1")->required();
    show->add_option("--s", show_s, "s parameter");
    show->add_option("--t", show_t, "t parameter");

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a braid closure");
    std::string alex_braid;
    alexander->add_option("braid", alex_braid, "braid text, e.g. \"6 | (1..5)^4 (1..3)^1\"")->required();

    auto* det = app.add_subcommand("det", "knot determinant of a braid closure");
    std::string det_braid;
    det->add_option("braid", det_braid, "braid text")->required();

    auto* tracecmd = app.add_subcommand("trace", "strand trace of a family instance");
    std::string trace_family;
    int trace_s = 0, trace_t = 0, trace_start = 1;
    tracecmd->add_option("--family", trace_family)->required();
    tracecmd->add_option("--s", trace_s);
    tracecmd->add_option("--t", trace_t);
    tracecmd->add_option("--start", trace_start, "starting strand");

    auto* whitehead = app.add_subcommand("whitehead", "free-group word certificates");
    std::string wh_word;
    int wh_m = 2, wh_n = 2;
    whitehead->add_option("word", wh_word, "word text, e.g. \"(xy)^2(x^2y)^2\"")->required();
    whitehead->add_option("--m", wh_m, "target exponent m");
    whitehead->add_option("--n", wh_n, "target exponent n");

    auto* catalogue = app.add_subcommand("catalogue", "dump the family registry as JSON");
    std::string cat_out;
    catalogue->add_option("--out", cat_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return run_verify(config_path, families, opt_s, opt_t, max_s, max_t, jobs, format,
                              out_path, timings);
        if (show->parsed()) return run_show(show_family, show_s, show_t);
        if (alexander->parsed()) return run_alexander(alex_braid);
        if (det->parsed()) return run_det(det_braid);
        if (tracecmd->parsed()) return run_trace(trace_family, trace_s, trace_t, trace_start);
        if (whitehead->parsed()) return run_whitehead(wh_word, wh_m, wh_n);
        if (catalogue->parsed()) {
            write_out(cat_out, catalogue_json() + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
