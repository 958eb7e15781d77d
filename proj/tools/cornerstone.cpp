#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cornerstone/suites.hpp"

using namespace cornerstone;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options {
    bool pretty = false;
    std::optional<std::size_t> cutoff;
    std::size_t max_ell = 40;
    std::size_t window = 5;
    std::size_t random_samples = 0;
    std::uint64_t seed = 7;
};

std::size_t default_cutoff() {
    const char* env = std::getenv("CORNERSTONE_CUTOFF");
    if (!env || !*env) return 20;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string(env).size()) throw Error(ErrorKind::ValidationError, std::string("CORNERSTONE_CUTOFF is not a number: ") + env);
    return v;
}

std::size_t cutoff_of(const Options& o) { return o.cutoff ? *o.cutoff : default_cutoff(); }

Json header(const std::string& command) {
    Json j;
    j["schemaVersion"] = 1;
    j["command"] = command;
    return j;
}

void emit(const Json& j, const Options& o) { std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n"; }

std::vector<std::string> split_commas(const std::vector<std::string>& in) {
    std::vector<std::string> out;
    for (const auto& s : in) {
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

Json algebra_summary(const Algebra& a) {
    Json j;
    j["field"] = a.field.p();
    j["dim"] = a.dim();
    j["vertices"] = a.vertex_labels;
    j["radicalDim"] = a.radical.size();
    return j;
}

int run_validate(const std::string& file, const Options& o) {
    InputFile in = parse_file(file);
    Json j = header("validate");
    j["valid"] = true;
    j["algebra"] = algebra_summary(*in.algebra);
    Json mods = Json::array();
    for (const auto& name : in.module_names) mods.push_back({{"name", name}, {"dims", in.module(name).dims()}});
    j["modules"] = mods;
    j["idempotents"] = in.idempotent_names;
    emit(j, o);
    return kOk;
}

int run_analyze(const std::string& file, const Options& o) {
    InputFile in = parse_file(file);
    const AlgebraPtr& a = in.algebra;
    std::size_t cutoff = cutoff_of(o);
    SimpleResolutions res = resolve_simples(a, cutoff);
    auto [ps, ss] = projectives_and_simples(a);
    Json j = header("analyze");
    j["algebra"] = algebra_summary(*a);
    Json cartan = Json::array();
    for (std::size_t t = 0; t < a->vertex_count(); ++t) {
        Json row = Json::array();
        for (std::size_t s = 0; s < a->vertex_count(); ++s) row.push_back(a->block(t, s).size());
        cartan.push_back(row);
    }
    j["cartan"] = cartan;
    Json verts = Json::array();
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Json x;
        x["vertex"] = a->vertex_labels[v];
        x["projectiveDims"] = ps[v].dims();
        x["pdSimple"] = to_json(proj_dim(res.res[v], cutoff));
        x["idSimple"] = to_json(inj_dim(ss[v], res));
        x["simpleResolutionTerms"] = res.res[v].terms;
        verts.push_back(std::move(x));
    }
    j["vertexData"] = verts;
    j["globalDimension"] = to_json(global_dim(res));
    Json mods = Json::array();
    for (const auto& name : in.module_names) {
        const Module& m = in.module(name);
        mods.push_back({{"name", name},
                        {"dims", m.dims()},
                        {"projective", is_projective(m)},
                        {"topMultiplicities", top_multiplicities(m)},
                        {"pd", to_json(proj_dim(m, cutoff))},
                        {"id", to_json(inj_dim(m, res))}});
    }
    j["modules"] = mods;
    j["cutoff"] = cutoff;
    emit(j, o);
    return kOk;
}

int run_conditions(const std::string& file, const std::vector<std::string>& e_spec, const Options& o) {
    InputFile in = parse_file(file);
    Idempotent e = resolve_idempotent(in, split_commas(e_spec));
    IdempotentContext ctx = make_context(in.algebra, e, cutoff_of(o));
    TheoremBVerdict v = theorem_b_verdict(ctx);
    Json j = header("conditions");
    j["e"] = vertex_list(*in.algebra, e.vertices);
    Json fields = to_json(v.conditions);
    for (auto& [k, val] : fields.items()) j[k] = val;
    j["theoremB"] = to_json(v);
    emit(j, o);
    return v.conditions.pss == Tri::Violated || !v.chain_violations.empty() ? kViolation : kOk;
}

int run_equiv(const std::string& file, const std::vector<std::string>& e_spec, const Options& o) {
    InputFile in = parse_file(file);
    Idempotent e = resolve_idempotent(in, split_commas(e_spec));
    IdempotentContext ctx = make_context(in.algebra, e, cutoff_of(o));
    SampleSpec spec;
    spec.random_count = o.random_samples;
    spec.seed = o.seed;
    EvidenceReport r = equivalence_evidence(ctx, spec, o.max_ell, o.window);
    Json j = header("equiv");
    j["e"] = vertex_list(*in.algebra, e.vertices);
    j["maxSyzygy"] = o.max_ell;
    j["window"] = o.window;
    j["seed"] = o.seed;
    j["randomSamples"] = o.random_samples;
    Json fields = to_json(r);
    for (auto& [k, val] : fields.items()) j[k] = val;
    j["conditions"] = to_json(r.verdict.conditions);
    j["theoremB"] = to_json(r.verdict);
    emit(j, o);
    return r.consistent ? kOk : kViolation;
}

void write_out(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ValidationError, "cannot write " + path);
    out << text;
}

int run_construct_one_point(const std::string& file, const std::string& module, const std::string& out, const Options& o) {
    InputFile in = parse_file(file);
    TriangularAlgebra t = one_point_extension(in.module(module));
    write_out(out, write_table(*t.algebra));
    Json j = header("construct one-point");
    j["output"] = out;
    j["algebra"] = algebra_summary(*t.algebra);
    j["e"] = vertex_list(*t.algebra, t.e.vertices);
    emit(j, o);
    return kOk;
}

int run_construct_triangular(const std::string& tfile, const std::string& sfile, const std::string& bfile, const std::string& out,
                             const Options& o) {
    InputFile t = parse_file(tfile);
    InputFile s = parse_file(sfile);
    Bimodule m = parse_bimodule(read_text_file(bfile), s.algebra, t.algebra);
    TriangularAlgebra r = triangular_matrix_algebra(t.algebra, s.algebra, m);
    write_out(out, write_table(*r.algebra));
    Json j = header("construct triangular");
    j["output"] = out;
    j["algebra"] = algebra_summary(*r.algebra);
    j["e"] = vertex_list(*r.algebra, r.e.vertices);
    emit(j, o);
    return kOk;
}

struct CorpusOptions {
    std::string family = "default";
    std::size_t n = 3;
    std::size_t rad_power = 2;
    std::size_t len = 2;
    std::string shape = "linear";
    std::uint64_t seed = 7;
    std::size_t vertices = 3;
    std::size_t arrows = 4;
    std::size_t relations = 2;
    std::size_t count = 1;
    std::uint32_t p = 101;
    std::string run = "conditions";
};

std::vector<CorpusCase> make_corpus(const CorpusOptions& c) {
    Field f(c.p);
    std::vector<CorpusCase> out;
    if (c.family == "default") return default_corpus(f);
    if (c.family == "triangular") return triangular_corpus(f);
    if (c.family == "nakayama") {
        out.push_back({"nakayama(" + std::to_string(c.n) + "," + std::to_string(c.rad_power) + ")", nakayama(c.n, c.rad_power, f), std::nullopt});
    } else if (c.family == "truncatedPath") {
        if (c.shape != "linear" && c.shape != "cyclic") throw Error(ErrorKind::ValidationError, "shape must be linear or cyclic");
        QuiverShape s = c.shape == "linear" ? QuiverShape::Linear : QuiverShape::Cyclic;
        out.push_back({"truncatedPath(" + c.shape + "," + std::to_string(c.n) + "," + std::to_string(c.len) + ")", truncated_path(s, c.n, c.len, f),
                       std::nullopt});
    } else if (c.family == "selfInjective") {
        out.push_back({"selfInjective(" + std::to_string(c.n) + ")", self_injective(c.n, f), std::nullopt});
    } else if (c.family == "randomAdmissible") {
        for (std::size_t k = 0; k < c.count; ++k) {
            RandomSpec rs;
            rs.seed = c.seed + k;
            rs.vertices = c.vertices;
            rs.arrows = c.arrows;
            rs.relations = c.relations;
            out.push_back({"randomAdmissible(" + std::to_string(rs.seed) + ")", random_admissible(rs, f), std::nullopt});
        }
    } else {
        throw Error(ErrorKind::ValidationError, "unknown family " + c.family);
    }
    return out;
}

int run_corpus(const CorpusOptions& c, const Options& o) {
    auto corpus = make_corpus(c);
    std::size_t cutoff = cutoff_of(o);
    Json j = header("corpus");
    j["family"] = c.family;
    j["seed"] = c.seed;
    j["run"] = c.run;
    j["cutoff"] = cutoff;
    Json cases = Json::array();
    for (const auto& cc : corpus) cases.push_back({{"name", cc.name}, {"dim", cc.algebra->dim()}, {"vertices", cc.algebra->vertex_count()}});
    j["cases"] = cases;
    bool violated = false;
    if (c.run == "conditions") {
        Json reports = Json::array();
        SuiteResult s = conditions_suite(corpus, cutoff, &reports);
        j["reports"] = reports;
        j["summary"] = to_json(s);
        violated = s.violations > 0;
    } else if (c.run == "equiv") {
        Json reports = Json::array();
        for (const auto& cc : corpus)
            for (const auto& e : corpus_idempotents(*cc.algebra)) {
                IdempotentContext ctx = make_context(cc.algebra, e, cutoff);
                SampleSpec spec;
                spec.random_count = o.random_samples;
                spec.seed = o.seed;
                EvidenceReport r = equivalence_evidence(ctx, spec, o.max_ell, o.window);
                Json x = to_json(r);
                x["case"] = cc.name;
                x["e"] = idempotent_name(*cc.algebra, e);
                x["theoremB"] = to_json(r.verdict);
                if (!r.consistent) {
                    violated = true;
                    x["algebra"] = write_table(*cc.algebra);
                }
                reports.push_back(std::move(x));
            }
        j["reports"] = reports;
    } else if (c.run == "lemmas") {
        Json suites = Json::array();
        std::size_t total = 0;
        auto add = [&](const SuiteResult& s) {
            total += s.violations;
            suites.push_back(to_json(s));
        };
        add(ext_lemma_suite(corpus, cutoff));
        add(add_membership_suite(corpus));
        add(adjunction_suite(corpus));
        add(conditions_suite(corpus, cutoff));
        add(theorem_b_suite(corpus, cutoff));
        SuiteResult proj;
        add(triangular_suite(corpus, cutoff, 0, o.window, &proj));
        add(proj);
        add(perpendicular_suite(corpus, cutoff));
        j["suites"] = suites;
        j["violations"] = total;
        violated = total > 0;
    } else {
        throw Error(ErrorKind::ValidationError, "unknown run " + c.run);
    }
    emit(j, o);
    return violated ? kViolation : kOk;
}

int exit_for(const Error& e) { return e.kind() == ErrorKind::Internal ? kViolation : kInputError; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological conditions and singular-equivalence evidence for finite-dimensional algebras over F_p"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "Indent JSON output");

    std::string file, file2, module, bimodule, out;
    std::vector<std::string> e_spec;
    CorpusOptions co;

    auto* validate = app.add_subcommand("validate", "Parse and validate an algebra file");
    validate->add_option("FILE", file)->required();

    auto* analyze = app.add_subcommand("analyze", "Dimensions, projectives, simples and global dimension");
    analyze->add_option("FILE", file)->required();

    auto* conditions = app.add_subcommand("conditions", "The four idempotent conditions");
    conditions->add_option("FILE", file)->required();
    conditions->add_option("--e", e_spec, "Vertices (comma separated) or an idempotent name")->required();

    auto* equiv = app.add_subcommand("equiv", "Stable Hom evidence for the induction functor");
    equiv->add_option("FILE", file)->required();
    equiv->add_option("--e", e_spec)->required();
    equiv->add_option("--max-syzygy", o.max_ell);
    equiv->add_option("--window", o.window);
    equiv->add_option("--random", o.random_samples, "Additional random cyclic samples");
    equiv->add_option("--seed", o.seed);

    auto* construct = app.add_subcommand("construct", "Build one-point extensions and triangular matrix algebras");
    construct->require_subcommand(1);
    auto* one_point = construct->add_subcommand("one-point", "L[M] for a module M in FILE");
    one_point->add_option("FILE", file)->required();
    one_point->add_option("--module", module)->required();
    one_point->add_option("-o,--output", out)->required();
    auto* triangular = construct->add_subcommand("triangular", "[[T,0],[M,S]] from T, S and an S-T-bimodule");
    triangular->add_option("T", file)->required();
    triangular->add_option("S", file2)->required();
    triangular->add_option("--bimodule", bimodule)->required();
    triangular->add_option("-o,--output", out)->required();

    auto* corpus = app.add_subcommand("corpus", "Run a check over a generated family");
    corpus->add_option("--family", co.family)->check(
        CLI::IsMember({"default", "triangular", "nakayama", "truncatedPath", "selfInjective", "randomAdmissible"}));
    corpus->add_option("--n", co.n);
    corpus->add_option("--radPower", co.rad_power);
    corpus->add_option("--len", co.len);
    corpus->add_option("--shape", co.shape);
    corpus->add_option("--seed", co.seed);
    corpus->add_option("--vertices", co.vertices);
    corpus->add_option("--arrows", co.arrows);
    corpus->add_option("--relations", co.relations);
    corpus->add_option("--count", co.count);
    corpus->add_option("--p", co.p);
    corpus->add_option("--run", co.run)->check(CLI::IsMember({"conditions", "equiv", "lemmas"}));
    corpus->add_option("--max-syzygy", o.max_ell);
    corpus->add_option("--window", o.window);

    std::size_t cutoff_value = 0;
    for (auto* sub : {analyze, conditions, equiv, corpus})
        sub->add_option("--cutoff", cutoff_value, "Resolution cutoff (default 20 or CORNERSTONE_CUTOFF)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    for (auto* sub : {analyze, conditions, equiv, corpus})
        if (sub->count("--cutoff")) o.cutoff = cutoff_value;

    try {
        if (o.window == 0 || o.max_ell + 1 < o.window) throw Error(ErrorKind::ValidationError, "need 1 <= window <= max-syzygy + 1");
        if (*validate) return run_validate(file, o);
        if (*analyze) return run_analyze(file, o);
        if (*conditions) return run_conditions(file, e_spec, o);
        if (*equiv) return run_equiv(file, e_spec, o);
        if (*one_point) return run_construct_one_point(file, module, out, o);
        if (*triangular) return run_construct_triangular(file, file2, bimodule, out, o);
        if (*corpus) return run_corpus(co, o);
    } catch (const Error& e) {
        Json j = header("error");
        j["kind"] = std::string(to_string(e.kind()));
        j["message"] = e.what();
        emit(j, o);
        std::cerr << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
