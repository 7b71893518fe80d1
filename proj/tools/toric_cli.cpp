#include "toric/cache.hpp"
#include "toric/documents.hpp"
#include "toric/hilbert.hpp"
#include "toric/theorems.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <future>
#include <iostream>
#include <sstream>

using namespace toric;
using nlohmann::json;

namespace {

struct CommonOpts {
    bool json_out = false;
    std::string cache_dir;
    unsigned jobs = 1;
    std::string order = "degrevlex";
    std::size_t up_to = 10;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.json_out, "machine-readable JSON output");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "content-addressed result cache directory (TORIC_CACHE_DIR overrides)");
    cmd->add_option("--jobs", opts.jobs, "process input files concurrently")
        ->check(CLI::Range(1u, 64u));
}

json manifest_for(const std::string& command, const std::string& canonical_input,
                  const std::string& order) {
    json m;
    m["command"] = command;
    m["input_hash"] = hex64(fnv1a64(canonical_input));
    m["order"] = order;
    m["version"] = kToolVersion;
    return m;
}

json report_to_json(const TheoremReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["pass"] = r.pass;
    auto items = [](const std::vector<CheckItem>& list) {
        json out = json::array();
        for (const auto& c : list)
            out.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
        return out;
    };
    j["hypotheses"] = items(r.hypotheses);
    j["conclusions"] = items(r.conclusions);
    j["tags"] = r.tags;
    j["artifacts"] = r.artifacts();
    return j;
}

json hf_values_json(const HilbertFunction& hf) {
    json vals = json::array();
    for (const Int& v : hf.values)
        vals.push_back(v.str());
    return vals;
}

TermOrder order_from_spec(const std::string& spec, std::size_t nvars) {
    if (spec == "degrevlex")
        return TermOrder::degrevlex(nvars);
    if (spec == "lex")
        return TermOrder::lex(nvars);
    throw InputError("unknown order: " + spec + " (use degrevlex or lex)");
}

// Renders each input file, consulting the cache keyed on the canonical
// document, command identity and tool version; batch mode runs the files
// concurrently but assembles output in input order.
int drive(const std::vector<std::string>& files, const CommonOpts& opts,
          const std::string& command_key,
          const std::function<std::string(const AffineSemigroup&, const std::string&)>& render) {
    ResultCache cache = ResultCache::from_environment(opts.cache_dir);
    auto run_one = [&](const std::string& file) {
        AffineSemigroup sg = load_semigroup_file(file);
        std::string canonical = write_semigroup_document(sg);
        std::string key;
        if (cache.enabled()) {
            key = cache.key_for(command_key + '\n' + std::string(kToolVersion) + '\n' + canonical);
            if (auto hit = cache.lookup(key))
                return *hit;
        }
        std::string out = render(sg, canonical);
        if (cache.enabled())
            cache.store(key, out);
        return out;
    };

    std::vector<std::string> outputs(files.size());
    if (opts.jobs <= 1 || files.size() <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i)
            outputs[i] = run_one(files[i]);
    } else {
        std::vector<std::future<std::string>> futures;
        futures.reserve(files.size());
        for (const auto& f : files)
            futures.push_back(std::async(std::launch::async, run_one, f));
        for (std::size_t i = 0; i < files.size(); ++i)
            outputs[i] = futures[i].get();
    }
    for (const auto& out : outputs)
        std::cout << out;
    return 0;
}

std::string render_ideal(const AffineSemigroup& sg, const std::string& canonical,
                         const CommonOpts& opts, bool projective) {
    const std::size_t n = sg.ngens();
    TermOrder ord = order_from_spec(opts.order, n);
    BinomialIdeal ideal = toric_ideal(sg, ord);

    std::ostringstream os;
    json j;
    if (projective) {
        if (opts.order != "degrevlex")
            throw InputError("--projective requires the degrevlex order");
        GroebnerBasis closure = projective_closure_ideal(ideal);
        auto [gens, mu] = minimal_generators(
            BinomialIdeal(n + 1, closure.elements(), closure_semigroup(sg)), closure.order());
        VarNames names = VarNames::projective(n);
        if (opts.json_out) {
            j["manifest"] = manifest_for("ideal --projective", canonical, opts.order);
            j["semigroup"] = semigroup_to_json(sg);
            j["mu"] = mu;
            j["generators"] = basis_to_json(gens, names);
            return j.dump(2) + "\n";
        }
        os << "projective closure ideal of " << sg.str() << "\n";
        os << "minimal generators (mu = " << mu << "):\n";
        for (const auto& g : gens)
            os << "  " << names.binomial(g) << "\n";
        return os.str();
    }

    VarNames names = VarNames::affine(n);
    if (opts.json_out) {
        j["manifest"] = manifest_for("ideal", canonical, opts.order);
        j["semigroup"] = semigroup_to_json(sg);
        j["mu"] = ideal.generators().size();
        j["generators"] = basis_to_json(ideal.generators(), names);
        return j.dump(2) + "\n";
    }
    os << "toric ideal of " << sg.str() << "\n";
    if (ideal.is_zero()) {
        os << "the ideal is zero\n";
        return os.str();
    }
    os << "minimal generators (mu = " << ideal.generators().size() << "):\n";
    for (const auto& g : ideal.generators())
        os << "  " << names.binomial(g) << "\n";
    return os.str();
}

std::string render_gb(const AffineSemigroup& sg, const std::string& canonical,
                      const CommonOpts& opts, bool projective) {
    const std::size_t n = sg.ngens();
    TermOrder ord = order_from_spec(opts.order, n);
    BinomialIdeal ideal = toric_ideal(sg, ord);

    std::ostringstream os;
    if (projective) {
        if (opts.order != "degrevlex")
            throw InputError("--projective requires the degrevlex order");
        GroebnerBasis closure = projective_closure_ideal(ideal);
        VarNames names = VarNames::projective(n);
        if (opts.json_out) {
            json j;
            j["manifest"] = manifest_for("gb --projective", canonical, opts.order);
            j["semigroup"] = semigroup_to_json(sg);
            j["order"] = closure.order().str();
            j["elements"] = basis_to_json(closure.elements(), names);
            return j.dump(2) + "\n";
        }
        os << "reduced Groebner basis of the projective closure ideal (" << closure.size()
           << " elements, x0 smallest):\n";
        for (const auto& g : closure.elements())
            os << "  " << names.binomial(g) << "\n";
        return os.str();
    }

    GroebnerBasis gb = buchberger(ideal, ord);
    VarNames names = VarNames::affine(n);
    if (opts.json_out) {
        json j;
        j["manifest"] = manifest_for("gb", canonical, opts.order);
        j["semigroup"] = semigroup_to_json(sg);
        j["order"] = gb.order().str();
        j["elements"] = basis_to_json(gb.elements(), names);
        return j.dump(2) + "\n";
    }
    os << "reduced Groebner basis (" << opts.order << ", " << gb.size() << " elements):\n";
    for (const auto& g : gb.elements())
        os << "  " << names.binomial(g) << "\n";
    return os.str();
}

std::string render_stdbasis(const AffineSemigroup& sg, const std::string& canonical,
                            const CommonOpts& opts) {
    const std::size_t n = sg.ngens();
    BinomialIdeal ideal = toric_ideal(sg);
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(n));
    VarNames names = VarNames::affine(n);
    if (opts.json_out) {
        json j;
        j["manifest"] = manifest_for("stdbasis", canonical, "negdegrevlex");
        j["semigroup"] = semigroup_to_json(sg);
        j["order"] = sb.order().str();
        j["elements"] = basis_to_json(sb.elements(), names);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "minimal standard basis (negdegrevlex, " << sb.size() << " elements):\n";
    for (const auto& g : sb.elements())
        os << "  " << names.binomial(g) << "\n";
    return os.str();
}

std::string render_tangent_cone(const AffineSemigroup& sg, const std::string& canonical,
                                const CommonOpts& opts) {
    const std::size_t n = sg.ngens();
    BinomialIdeal ideal = toric_ideal(sg);
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(n));
    TangentConeIdeal cone = tangent_cone_ideal(sb);
    MonomialIdeal lead = leading_ideal(sb);
    VarNames names = VarNames::affine(n);
    if (opts.json_out) {
        json j;
        j["manifest"] = manifest_for("tangent-cone", canonical, "negdegrevlex");
        j["semigroup"] = semigroup_to_json(sg);
        j["generators"] = basis_to_json(cone.generators, names);
        json lm = json::array();
        for (const auto& g : lead.generators)
            lm.push_back(names.monomial(g));
        j["leading_ideal"] = lm;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "tangent cone ideal at the origin (" << cone.generators.size() << " generators):\n";
    for (const auto& g : cone.generators)
        os << "  " << names.binomial(g) << "\n";
    os << "leading ideal:";
    for (const auto& g : lead.generators)
        os << " " << names.monomial(g);
    os << "\n";
    return os.str();
}

std::string render_hilbert(const AffineSemigroup& sg, const std::string& canonical,
                           const CommonOpts& opts) {
    const std::size_t n = sg.ngens();
    BinomialIdeal ideal = toric_ideal(sg);
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(n));
    TangentConeIdeal cone = tangent_cone_ideal(sb);
    MonomialIdeal lead = leading_ideal(sb);
    HilbertSeries hs = hilbert_series(lead);
    HilbertFunction hf = hilbert_function(hs, opts.up_to);
    Monotonicity mono = is_nondecreasing(hf);
    VarNames names = VarNames::affine(n);

    if (opts.json_out) {
        json j;
        j["manifest"] = manifest_for("hilbert", canonical, "negdegrevlex");
        j["semigroup"] = semigroup_to_json(sg);
        j["standard_basis"] = basis_to_json(sb.elements(), names);
        j["tangent_cone"] = basis_to_json(cone.generators, names);
        json lm = json::array();
        for (const auto& g : lead.generators)
            lm.push_back(names.monomial(g));
        j["leading_ideal"] = lm;
        json full = json::array();
        for (const Int& c : hs.numerator_full)
            full.push_back(c.str());
        j["series_full_numerator"] = full;
        json red = json::array();
        for (const Int& c : hs.numerator_reduced)
            red.push_back(c.str());
        j["series_reduced_numerator"] = red;
        j["dimension"] = hs.dimension;
        j["series_full"] = hs.str_full();
        j["series_reduced"] = hs.str_reduced();
        j["hilbert_function"] = hf_values_json(hf);
        j["tail"] = hf.tail.str();
        j["tail_start"] = hf.tail_start;
        j["nondecreasing"] = mono.nondecreasing;
        if (mono.violation_index)
            j["violation_index"] = mono.violation_index->str();
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "standard basis (" << sb.size() << " elements):\n";
    for (const auto& g : sb.elements())
        os << "  " << names.binomial(g) << "\n";
    os << "tangent cone ideal:\n";
    for (const auto& g : cone.generators)
        os << "  " << names.binomial(g) << "\n";
    os << "leading ideal:";
    for (const auto& g : lead.generators)
        os << " " << names.monomial(g);
    os << "\n";
    os << "Hilbert series (full):    " << hs.str_full() << "\n";
    os << "Hilbert series (reduced): " << hs.str_reduced() << "\n";
    os << "Hilbert function:";
    for (std::size_t k = 0; k <= opts.up_to && k < hf.values.size(); ++k)
        os << ' ' << hf.values[k];
    os << "\n";
    os << "polynomial tail:  " << hf.tail.str() << "  for k >= " << hf.tail_start << "\n";
    os << "non-decreasing:   " << (mono.nondecreasing ? "yes" : "NO") << "\n";
    if (mono.violation_index)
        os << "first violation at k = " << *mono.violation_index << "\n";
    return os.str();
}

json extension_to_json(const ExtensionSpec& ext) {
    json j;
    j["l"] = ext.ell.str();
    j["m"] = ext.m.str();
    j["valid"] = ext.valid;
    if (!ext.valid) {
        j["reason"] = ext.invalid_reason;
        return j;
    }
    const std::size_t n = ext.base.ngens();
    VarNames ext_names = VarNames::affine(n + 1);
    j["delta"] = ext.delta_value.str();
    j["Delta"] = ext.Delta_value.str();
    j["nice"] = ext.nice;
    j["projective_good"] = ext.projective_good;
    j["degenerate_gluing"] = ext.degenerate_gluing;
    j["coprime_component"] = *ext.coprime_component;
    j["F_min_sum"] = ext_names.binomial(ext.join_binomial(JoinWitness::MinSum));
    j["F_max_sum"] = ext_names.binomial(ext.join_binomial(JoinWitness::MaxSum));
    j["extension_semigroup"] = semigroup_to_json(ext.extended());
    return j;
}

struct VerifySelection {
    bool affine = false, bad = false, std_cone = false, hom = false, hf = false;

    bool any() const { return affine || bad || std_cone || hom || hf; }
};

VerifySelection parse_which(const std::string& which) {
    VerifySelection v;
    if (which == "all")
        return {true, true, true, true, true};
    std::istringstream is(which);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "affine")
            v.affine = true;
        else if (tok == "bad")
            v.bad = true;
        else if (tok == "std" || tok == "cone")
            v.std_cone = true;
        else if (tok == "hom")
            v.hom = true;
        else if (tok == "hf")
            v.hf = true;
        else
            throw InputError("unknown verifier: " + tok +
                             " (use all, affine, bad, std, cone, hom, hf)");
    }
    return v;
}

BaseTags parse_tags(const std::string& tags) {
    BaseTags out;
    std::istringstream is(tags);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            continue;
        if (tok == "cm")
            out.cohen_macaulay = true;
        else if (tok == "gorenstein")
            out.gorenstein = true;
        else if (tok == "stci")
            out.stci = true;
        else
            throw InputError("unknown tag: " + tok + " (use cm, gorenstein, stci)");
    }
    return out;
}

std::optional<BettiVector> parse_betti(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    BettiVector out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.betti.push_back(Int(tok));
        } catch (const std::exception&) {
            throw InputError("--betti entries must be integers: " + tok);
        }
    }
    out.validate();
    return out;
}

struct ExtendOpts {
    CommonOpts common;
    std::string m_text;
    long long ell = 1;
    std::string which;  // empty: no verification
    std::size_t chain = 1;
    std::string betti_text;
    std::string tags_text;
};

// Runs the selected verifiers for one extension; returns false when any
// report fails.
bool run_verifiers(std::ostream& os, json* reports_json, const AffineSemigroup& sg,
                   const ExtensionSpec& spec, const VerifySelection& sel, const BaseTags& tags,
                   const std::optional<BettiVector>& betti, bool human) {
    bool all_pass = true;
    auto emit = [&](const TheoremReport& r) {
        all_pass = all_pass && r.pass;
        if (human)
            os << r.str();
        if (reports_json)
            reports_json->push_back(report_to_json(r));
    };
    if (sel.affine)
        emit(verify_prop_affine(sg, spec, tags));
    if (sel.bad)
        emit(verify_prop_bad(sg, spec, tags));
    if (sel.std_cone)
        emit(verify_prop_stdbasis_and_cone(sg, spec, tags));
    if (sel.hom) {
        if (!betti)
            throw InputError("the homogeneous-type verifier needs --betti \"b1,b2,...\"");
        emit(verify_prop_hom(sg, spec, *betti));
    }
    if (sel.hf)
        emit(verify_thm_hf(sg, spec));
    return all_pass;
}

int run_extend(const ExtendOpts& opts, const std::string& file, bool default_verify_all) {
    AffineSemigroup sg = load_semigroup_file(file);
    std::string canonical = write_semigroup_document(sg);
    ExponentVector m = parse_point(opts.m_text, sg.dim());
    Int ell(opts.ell);

    VerifySelection sel;
    if (!opts.which.empty())
        sel = parse_which(opts.which);
    else if (default_verify_all)
        sel = parse_which("all");
    BaseTags tags = parse_tags(opts.tags_text);
    std::optional<BettiVector> betti = parse_betti(opts.betti_text);

    std::ostringstream os;
    json steps_json = json::array();
    bool all_pass = true;

    if (opts.chain <= 1) {
        ExtensionSpec spec = make_extension(sg, ell, m);
        if (!spec.valid)
            throw GuardError("invalid extension: " + spec.invalid_reason);
        if (!opts.common.json_out) {
            os << "extension l = " << spec.ell << ", m = " << spec.m << " of " << sg.str() << "\n";
            os << "  delta = " << spec.delta_value << ", Delta = " << spec.Delta_value << "\n";
            os << "  nice (l <= Delta): " << (spec.nice ? "yes" : "no")
               << "; projective-good (l >= delta): " << (spec.projective_good ? "yes" : "no")
               << "\n";
            VarNames names = VarNames::affine(sg.ngens() + 1);
            os << "  F (min-sum witness) = "
               << names.binomial(spec.join_binomial(JoinWitness::MinSum)) << "\n";
            os << "  F (max-sum witness) = "
               << names.binomial(spec.join_binomial(JoinWitness::MaxSum)) << "\n";
            os << "  extension semigroup " << spec.extended().str() << "\n";
        }
        json reports = json::array();
        if (sel.any())
            all_pass =
                run_verifiers(os, &reports, sg, spec, sel, tags, betti, !opts.common.json_out);
        json step;
        step["extension"] = extension_to_json(spec);
        step["reports"] = reports;
        steps_json.push_back(step);
    } else {
        auto chain = chain_extensions(sg, ell, m, opts.chain);
        for (std::size_t k = 0; k < chain.size(); ++k) {
            const ChainStep& step = chain[k];
            if (!opts.common.json_out) {
                os << "chain step " << (k + 1) << ": l = " << step.spec.ell
                   << ", m = " << step.spec.m << ", embedding dim " << step.embedding_dim
                   << ", dim " << step.dimension << ", embedding codim " << step.embedding_codim
                   << "\n";
            }
            json reports = json::array();
            if (sel.any())
                all_pass = run_verifiers(os, &reports, step.spec.base, step.spec, sel, tags,
                                         betti, !opts.common.json_out) &&
                           all_pass;
            json sj;
            sj["extension"] = extension_to_json(step.spec);
            sj["embedding_dim"] = step.embedding_dim;
            sj["dimension"] = step.dimension;
            sj["embedding_codim"] = step.embedding_codim;
            sj["reports"] = reports;
            steps_json.push_back(sj);
        }
    }

    if (opts.common.json_out) {
        json j;
        std::ostringstream cmd;
        cmd << "extend --l " << opts.ell << " --m " << opts.m_text << " --chain " << opts.chain;
        j["manifest"] = manifest_for(cmd.str(), canonical, "degrevlex/negdegrevlex");
        j["semigroup"] = semigroup_to_json(sg);
        j["steps"] = steps_json;
        j["pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << os.str();
    }
    return all_pass ? 0 : 1;
}

std::string render_delta(const AffineSemigroup& sg, const std::string& canonical,
                         const CommonOpts& opts, const std::string& m_text) {
    ExponentVector m = parse_point(m_text, sg.dim());
    auto reps = representations(sg, m);
    if (reps.empty())
        throw InputError("m is not an element of the semigroup: " + m.str());
    auto dmin = delta(sg, m);
    auto dmax = Delta(sg, m);

    auto rep_str = [](const Representation& r) {
        std::ostringstream ro;
        ro << '(';
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            if (i)
                ro << ',';
            ro << r.coeffs[i];
        }
        ro << ')';
        return ro.str();
    };

    if (opts.json_out) {
        json j;
        j["manifest"] = manifest_for("delta --m " + m_text, canonical, "-");
        j["semigroup"] = semigroup_to_json(sg);
        j["m"] = m.str();
        j["representations"] = reps.size();
        j["delta"] = dmin.value.str();
        j["delta_witness"] = rep_str(dmin.witness);
        j["Delta"] = dmax.value.str();
        j["Delta_witness"] = rep_str(dmax.witness);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "m = " << m << ": " << reps.size() << " representation(s)\n";
    os << "delta = " << dmin.value << "  witness " << rep_str(dmin.witness) << "\n";
    os << "Delta = " << dmax.value << "  witness " << rep_str(dmax.witness) << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of affine semigroups: extensions, Groebner and standard bases, "
                 "tangent cones, Hilbert functions"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    bool projective = false;

    CommonOpts ideal_opts;
    auto* cmd_ideal = app.add_subcommand("ideal", "minimal generators and mu of the toric ideal");
    cmd_ideal->add_option("input", files, "semigroup document(s)")->required();
    cmd_ideal->add_flag("--projective", projective, "use the projective closure ideal");
    cmd_ideal->add_option("--order", ideal_opts.order, "term order (degrevlex, lex)");
    add_common(cmd_ideal, ideal_opts);

    CommonOpts gb_opts;
    auto* cmd_gb = app.add_subcommand("gb", "reduced Groebner basis of the toric ideal");
    cmd_gb->add_option("input", files, "semigroup document(s)")->required();
    cmd_gb->add_flag("--projective", projective, "basis of the projective closure ideal");
    cmd_gb->add_option("--order", gb_opts.order, "term order (degrevlex, lex)");
    add_common(cmd_gb, gb_opts);

    CommonOpts sb_opts;
    auto* cmd_sb = app.add_subcommand("stdbasis", "minimal standard basis under negdegrevlex");
    cmd_sb->add_option("input", files, "semigroup document(s)")->required();
    add_common(cmd_sb, sb_opts);

    CommonOpts tc_opts;
    auto* cmd_tc = app.add_subcommand("tangent-cone", "tangent cone ideal at the origin");
    cmd_tc->add_option("input", files, "semigroup document(s)")->required();
    add_common(cmd_tc, tc_opts);

    CommonOpts hil_opts;
    auto* cmd_hil = app.add_subcommand("hilbert", "Hilbert series and function of the local ring");
    cmd_hil->add_option("input", files, "semigroup document(s)")->required();
    cmd_hil->add_option("--up-to", hil_opts.up_to, "print Hilbert function values up to this k");
    add_common(cmd_hil, hil_opts);

    CommonOpts delta_opts;
    std::string delta_m;
    auto* cmd_delta = app.add_subcommand("delta", "representation extrema delta(m) and Delta(m)");
    cmd_delta->add_option("input", files, "semigroup document(s)")->required();
    cmd_delta->add_option("--m", delta_m, "the semigroup element, e.g. \"6,4\"")->required();
    add_common(cmd_delta, delta_opts);

    ExtendOpts ext_opts;
    auto* cmd_ext = app.add_subcommand("extend", "build an extension and optionally verify it");
    cmd_ext->add_option("input", files, "semigroup document")->required()->expected(1);
    cmd_ext->add_option("--l", ext_opts.ell, "the scaling factor l")->required();
    cmd_ext->add_option("--m", ext_opts.m_text, "the joined element m")->required();
    cmd_ext->add_option("--verify", ext_opts.which,
                        "run verifiers: all or a comma list of affine,bad,std,cone,hom,hf");
    cmd_ext->add_option("--chain", ext_opts.chain, "iterate nice extensions this many times");
    cmd_ext->add_option("--betti", ext_opts.betti_text,
                        "Betti numbers b1,b2,... of the base local ring (for hom)");
    cmd_ext->add_option("--tags", ext_opts.tags_text,
                        "base property tags to transfer: cm,gorenstein,stci");
    add_common(cmd_ext, ext_opts.common);

    ExtendOpts verify_opts;
    auto* cmd_verify = app.add_subcommand("verify", "run theorem verifiers for an extension");
    cmd_verify->add_option("input", files, "semigroup document")->required()->expected(1);
    cmd_verify->add_option("--l", verify_opts.ell, "the scaling factor l")->required();
    cmd_verify->add_option("--m", verify_opts.m_text, "the joined element m")->required();
    cmd_verify->add_option("--which", verify_opts.which,
                           "all (default) or a comma list of affine,bad,std,cone,hom,hf");
    cmd_verify->add_option("--chain", verify_opts.chain, "verify a chain of nice extensions");
    cmd_verify->add_option("--betti", verify_opts.betti_text,
                           "Betti numbers b1,b2,... of the base local ring (for hom)");
    cmd_verify->add_option("--tags", verify_opts.tags_text,
                           "base property tags to transfer: cm,gorenstein,stci");
    add_common(cmd_verify, verify_opts.common);

    try {
        app.parse(argc, argv);

        if (cmd_ideal->parsed())
            return drive(files, ideal_opts,
                         "ideal|" + ideal_opts.order + (projective ? "|proj" : "") +
                             (ideal_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_ideal(sg, canonical, ideal_opts, projective);
                         });
        if (cmd_gb->parsed())
            return drive(files, gb_opts,
                         "gb|" + gb_opts.order + (projective ? "|proj" : "") +
                             (gb_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_gb(sg, canonical, gb_opts, projective);
                         });
        if (cmd_sb->parsed())
            return drive(files, sb_opts,
                         std::string("stdbasis") + (sb_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_stdbasis(sg, canonical, sb_opts);
                         });
        if (cmd_tc->parsed())
            return drive(files, tc_opts,
                         std::string("tangent-cone") + (tc_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_tangent_cone(sg, canonical, tc_opts);
                         });
        if (cmd_hil->parsed())
            return drive(files, hil_opts,
                         "hilbert|" + std::to_string(hil_opts.up_to) +
                             (hil_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_hilbert(sg, canonical, hil_opts);
                         });
        if (cmd_delta->parsed())
            return drive(files, delta_opts,
                         "delta|" + delta_m + (delta_opts.json_out ? "|json" : ""),
                         [&](const AffineSemigroup& sg, const std::string& canonical) {
                             return render_delta(sg, canonical, delta_opts, delta_m);
                         });
        if (cmd_ext->parsed())
            return run_extend(ext_opts, files.at(0), false);
        if (cmd_verify->parsed())
            return run_extend(verify_opts, files.at(0), true);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
