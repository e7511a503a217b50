#include "satlen/job.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "satlen/homology.hpp"
#include "satlen/oracle.hpp"
#include "satlen/polyfit.hpp"
#include "satlen/satfn.hpp"
#include "satlen/sop.hpp"

namespace satlen {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr int kDefaultNmax = 4;

// ---------------------------------------------------------------------------
// source locations

class Source {
public:
    Source(std::string name, const std::string& text) : name_(std::move(name)), text_(text) {}

    std::string at_offset(std::size_t byte) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return name_ + ":" + std::to_string(line) + ":" + std::to_string(col);
    }

    // Position of column `column` (1-based) inside the first occurrence of
    // the string literal in the file.
    std::string locate_string(const std::string& literal, std::size_t column) const {
        std::string quoted = json(literal).dump();
        auto pos = text_.find(quoted);
        if (pos == std::string::npos) return name_;
        return at_offset(pos + column);
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
    const std::string& text_;
};

// ---------------------------------------------------------------------------
// JSON access with input errors

const json& member(const json& obj, const std::string& key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(ctx + ": missing field '" + key + "'");
    return obj.at(key);
}

template <typename T>
T as(const json& v, const std::string& ctx) {
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw InputError(ctx + ": value " + v.dump() + " has the wrong type");
    }
}

template <typename T>
std::optional<T> optional_member(const json& obj, const std::string& key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return as<T>(obj.at(key), ctx + "." + key);
}

ojson to_json(const std::vector<std::int64_t>& v) {
    ojson a = ojson::array();
    for (auto x : v) a.push_back(x);
    return a;
}

ojson to_json(const BinomialPolynomial& p) {
    ojson o;
    o["binomial_coefficients"] = to_json(p.coeffs);
    o["degree"] = p.degree();
    o["stable_from"] = p.stable_from;
    o["e0"] = p.e0();
    if (auto e1 = p.e1()) o["e1"] = *e1;
    return o;
}

ojson to_json(const Verdict& v) {
    ojson o;
    o["validator"] = v.name;
    if (!v.measured.empty()) o["measured"] = to_json(v.measured);
    if (!v.predicted.empty()) o["predicted"] = to_json(v.predicted);
    if (v.predicted_polynomial) o["predicted_polynomial"] = to_json(*v.predicted_polynomial);
    if (v.fitted) o["fitted"] = to_json(*v.fitted);
    if (v.predicted_e0) o["predicted_e0"] = *v.predicted_e0;
    if (v.measured_e0) o["measured_e0"] = *v.measured_e0;
    if (v.first_mismatch) o["first_mismatch"] = *v.first_mismatch;
    if (!v.notes.empty()) o["notes"] = v.notes;
    return o;
}

ojson to_json(const ApsopFit& f) {
    ojson o;
    o["success"] = f.success;
    if (!f.lambdas.empty()) o["lambdas"] = to_json(f.lambdas);
    ojson grid = ojson::array();
    for (const auto& t : f.fit_grid) grid.push_back(t);
    o["fit_grid"] = grid;
    o["verify_grid"] = {{"entries_from", 1}, {"entries_to", f.verify_max}, {"tuples", f.verify_grid.size()}};
    if (f.witness) {
        o["witness"] = {{"tuple", *f.witness}, {"measured", f.witness_measured}, {"predicted", f.witness_predicted}};
    }
    if (!f.diagnostic.empty()) o["diagnostic"] = f.diagnostic;
    return o;
}

ojson to_json(const IdentityCheck& c) {
    ojson o;
    o["n"] = c.n;
    o["holds"] = c.holds;
    if (!c.holds) {
        o["lhs"] = c.lhs;
        o["rhs"] = c.rhs;
    }
    return o;
}

ojson holds_list(const std::vector<IdentityCheck>& checks) {
    ojson a = ojson::array();
    for (const auto& c : checks) a.push_back(c.holds);
    return a;
}

std::optional<std::size_t> first_difference(const std::vector<std::int64_t>& expected,
                                            const std::vector<std::int64_t>& measured) {
    const std::size_t n = std::max(expected.size(), measured.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= expected.size() || i >= measured.size() || expected[i] != measured[i]) return i;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// job description independent of the coefficient field

struct Ass1Entry {
    std::vector<std::string> prime;
    std::int64_t local_h0_length = 0;
    std::optional<bool> contains_a;
};

struct Annotations {
    bool buchsbaum = false;
    bool generalized_cm = false;
    std::optional<std::vector<std::int64_t>> cohomology;
    std::optional<int> depth;
    std::optional<SimplicialComplex> complex;
    std::vector<Ass1Entry> ass1;
    std::optional<std::int64_t> epsilon_prime;
};

struct JobSpec {
    std::string name;
    std::uint64_t characteristic = 32003;
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    MonomialOrder order = MonomialOrder::grevlex();
    std::map<std::string, std::vector<std::string>> ideals;
    std::vector<std::string> ideal_order;
    std::vector<std::string> sop;
    Annotations annotations;
    json tasks = json::array();
};

Annotations read_annotations(const json& job) {
    Annotations a;
    if (!job.contains("annotations")) return a;
    const json& n = job.at("annotations");
    const std::string ctx = "annotations";
    if (!n.is_object()) throw InputError(ctx + ": expected an object");
    a.buchsbaum = optional_member<bool>(n, "buchsbaum", ctx).value_or(false);
    a.generalized_cm = optional_member<bool>(n, "generalized_cm", ctx).value_or(a.buchsbaum);
    a.cohomology = optional_member<std::vector<std::int64_t>>(n, "cohomology", ctx);
    a.depth = optional_member<int>(n, "depth", ctx);
    a.epsilon_prime = optional_member<std::int64_t>(n, "epsilon_prime", ctx);
    if (n.contains("complex")) {
        const json& c = n.at("complex");
        auto vertices = as<std::vector<std::string>>(member(c, "vertices", ctx + ".complex"), ctx + ".complex.vertices");
        auto facets =
            as<std::vector<std::vector<std::string>>>(member(c, "facets", ctx + ".complex"), ctx + ".complex.facets");
        a.complex = SimplicialComplex::from_facet_names(std::move(vertices), facets);
    }
    if (n.contains("ass1")) {
        const json& list = n.at("ass1");
        if (!list.is_array()) throw InputError(ctx + ".ass1: expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            std::string c = ctx + ".ass1[" + std::to_string(k) + "]";
            Ass1Entry e;
            e.prime = as<std::vector<std::string>>(member(list[k], "prime", c), c + ".prime");
            e.local_h0_length = as<std::int64_t>(member(list[k], "local_h0_length", c), c + ".local_h0_length");
            e.contains_a = optional_member<bool>(list[k], "contains_a", c);
            a.ass1.push_back(std::move(e));
        }
    }
    return a;
}

JobSpec read_spec(const json& job, const JobOptions& options) {
    if (!job.is_object()) throw InputError("job: top level must be an object");
    JobSpec s;
    s.name = optional_member<std::string>(job, "name", "job").value_or("job");
    for (char ch : s.name)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'))
            throw InputError("job.name: only letters, digits, '_' and '-' are allowed");
    const json& ring = member(job, "ring", "job");
    s.characteristic = optional_member<std::uint64_t>(ring, "characteristic", "ring").value_or(32003);
    if (options.characteristic) s.characteristic = *options.characteristic;
    s.variables = as<std::vector<std::string>>(member(ring, "variables", "ring"), "ring.variables");
    s.relations = optional_member<std::vector<std::string>>(ring, "relations", "ring").value_or(std::vector<std::string>{});
    std::string order = optional_member<std::string>(ring, "order", "ring").value_or("grevlex");
    if (options.order) order = *options.order;
    s.order = MonomialOrder::from_name(order);
    if (job.contains("ideals")) {
        const json& ids = job.at("ideals");
        if (!ids.is_object()) throw InputError("ideals: expected an object");
        for (auto it = ids.begin(); it != ids.end(); ++it) {
            if (it.key() == "m") throw InputError("ideals: the name 'm' is reserved for the maximal ideal");
            s.ideals[it.key()] = as<std::vector<std::string>>(it.value(), "ideals." + it.key());
            s.ideal_order.push_back(it.key());
        }
    }
    if (job.contains("sop"))
        s.sop = as<std::vector<std::string>>(member(job.at("sop"), "elements", "sop"), "sop.elements");
    s.annotations = read_annotations(job);
    if (job.contains("tasks")) {
        s.tasks = job.at("tasks");
        if (!s.tasks.is_array()) throw InputError("tasks: expected an array");
    }
    return s;
}

// ---------------------------------------------------------------------------
// h0 at another characteristic, for independence checks

template <CoefficientField K>
RingPtr<K> build_ring(const K& field, const JobSpec& spec, const Source& src) {
    std::vector<Polynomial<K>> rels;
    for (const auto& t : spec.relations) {
        try {
            rels.push_back(parse_polynomial(t, spec.variables, field, spec.order));
        } catch (const ParseError& e) {
            throw InputError(src.locate_string(t, e.column()) + ": ring relation: " + e.what());
        }
    }
    return std::make_shared<const RingPresentation<K>>(field, spec.variables, std::move(rels), spec.order);
}

struct CharacteristicRun {
    std::vector<std::int64_t> groebner;
    std::vector<std::int64_t> oracle;
};

CharacteristicRun h0_at_prime(std::uint32_t p, const JobSpec& spec, const Source& src,
                              const std::vector<std::string>& ideal_texts, int nmax, Execution exec) {
    PrimeField k(p);
    auto ring = build_ring(k, spec, src);
    IdealHandle<PrimeField> ideal(ring, ideal_texts);
    CharacteristicRun r;
    r.groebner = h0_sequence(ideal, nmax, H0Options{{}, exec}).values;
    for (int n = 0; n <= nmax; ++n) r.oracle.push_back(oracle::h0_bruteforce(ideal, n, 0, exec).value);
    return r;
}

// ---------------------------------------------------------------------------

template <CoefficientField K>
class Runner {
public:
    using Poly = Polynomial<K>;

    Runner(const JobSpec& spec, const Source& src, const JobOptions& options, K field)
        : spec_(spec), src_(src), options_(options) {
        ring_ = build_ring(field, spec, src);
        for (const auto& name : spec.ideal_order) make_ideal(spec.ideals.at(name), "ideals." + name);
        for (const auto& t : spec.sop) {
            auto p = parse(t, "sop");
            if (p.is_zero() || !p.is_homogeneous() || p.degree() < 1)
                throw InputError(src_.locate_string(t, 1) + ": sop element must be homogeneous of positive degree");
            sop_.push_back(std::move(p));
        }
    }

    void run(JobResult& result, ojson& report) {
        report["job"] = spec_.name;
        report["tool"] = "satlen";
        report["version"] = kVersion;
        ojson ring;
        ring["characteristic"] = spec_.characteristic;
        ring["order"] = spec_.order.name();
        ring["variables"] = spec_.variables;
        ojson rels = ojson::array();
        for (const auto& r : ring_->relations()) rels.push_back(ring_->format(r));
        ring["relations"] = rels;
        ring["krull_dimension"] = krull_dimension(ring_);
        report["ring"] = ring;

        // validate task shapes before running anything
        std::set<std::string> names;
        std::vector<std::string> task_names;
        for (std::size_t k = 0; k < spec_.tasks.size(); ++k) {
            const json& t = spec_.tasks[k];
            std::string ctx = "tasks[" + std::to_string(k) + "]";
            auto kind = as<std::string>(member(t, "kind", ctx), ctx + ".kind");
            if (!known_kind(kind)) throw InputError(ctx + ": unknown task kind '" + kind + "'");
            auto name = optional_member<std::string>(t, "name", ctx).value_or(kind + "_" + std::to_string(k));
            for (char ch : name)
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'))
                    throw InputError(ctx + ".name: only letters, digits, '_' and '-' are allowed");
            if (!names.insert(name).second) throw InputError(ctx + ": duplicate task name '" + name + "'");
            task_names.push_back(name);
        }

        ojson tasks = ojson::array();
        int passed = 0, failed = 0, checked = 0;
        for (std::size_t k = 0; k < spec_.tasks.size(); ++k) {
            const json& t = spec_.tasks[k];
            const std::string kind = t.at("kind").get<std::string>();
            current_ = task_names[k];
            ctx_ = "tasks[" + std::to_string(k) + "] (" + current_ + ")";
            ojson entry;
            entry["name"] = current_;
            entry["kind"] = kind;
            std::optional<bool> pass;
            auto t0 = std::chrono::steady_clock::now();
            try {
                pass = dispatch(kind, t, entry);
            } catch (const ComputationLimit& e) {
                entry["error"] = std::string("computation limit: ") + e.what();
                pass = false;
            } catch (const std::logic_error& e) {
                if (dynamic_cast<const InputError*>(&e)) throw;
                entry["error"] = std::string("internal error: ") + e.what();
                pass = false;
            }
            auto t1 = std::chrono::steady_clock::now();
            if (options_.timing) entry["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (pass) {
                ++checked;
                (*pass ? passed : failed) += 1;
                entry["pass"] = *pass;
            } else {
                entry["pass"] = nullptr;
            }
            tasks.push_back(std::move(entry));
        }
        report["tasks"] = std::move(tasks);
        report["summary"] = {{"tasks", spec_.tasks.size()}, {"checked", checked}, {"passed", passed}, {"failed", failed}};
        result.exit_code = failed > 0 ? 1 : 0;
        report["exit_code"] = result.exit_code;
        result.sequences = std::move(sequences_out_);
    }

private:
    static bool known_kind(const std::string& k) {
        static const std::set<std::string> kinds{"h0",    "rees",  "lemma35", "cor36",      "cor38",      "thm22",
                                                 "thm24", "thm39", "cor25",   "cor34",      "apsop-fit",  "d-sequence",
                                                 "prop33", "homology", "epsilon-probe", "bruteforce-crosscheck"};
        return kinds.count(k) > 0;
    }

    std::optional<bool> dispatch(const std::string& kind, const json& t, ojson& entry) {
        if (kind == "h0") return task_h0(t, entry);
        if (kind == "rees") return task_rees(t, entry);
        if (kind == "lemma35") return task_lemma35(t, entry);
        if (kind == "cor36") return task_cor36(t, entry);
        if (kind == "cor38") return task_cor38(t, entry);
        if (kind == "thm22") return task_thm22(t, entry);
        if (kind == "thm24") return task_thm24(t, entry);
        if (kind == "thm39") return task_thm39(t, entry);
        if (kind == "cor25") return task_cor25(t, entry);
        if (kind == "cor34") return task_cor34(t, entry);
        if (kind == "apsop-fit") return task_apsop(t, entry);
        if (kind == "d-sequence") return task_dseq(t, entry);
        if (kind == "prop33") return task_prop33(t, entry);
        if (kind == "homology") return task_homology(t, entry);
        if (kind == "epsilon-probe") return task_epsilon(t, entry);
        return task_crosscheck(t, entry);
    }

    // ---- inputs

    Poly parse(const std::string& text, const std::string& ctx) {
        try {
            return ring_->parse(text);
        } catch (const ParseError& e) {
            throw InputError(src_.locate_string(text, e.column()) + ": " + ctx + ": " + e.what());
        }
    }

    IdealHandle<K> make_ideal(const std::vector<std::string>& texts, const std::string& ctx) {
        std::vector<Poly> gens;
        for (const auto& t : texts) {
            auto p = parse(t, ctx);
            if (!p.is_homogeneous())
                throw InputError(src_.locate_string(t, 1) + ": " + ctx + ": generator '" + t + "' is not homogeneous");
            gens.push_back(std::move(p));
        }
        return IdealHandle<K>(ring_, std::move(gens));
    }

    int nmax(const json& t) const {
        if (options_.nmax) return *options_.nmax;
        int n = optional_member<int>(t, "nmax", ctx_).value_or(kDefaultNmax);
        if (n < 0) throw InputError(ctx_ + ": nmax must be nonnegative");
        return n;
    }

    int verify_max(const json& t) const {
        if (options_.verify_max) return *options_.verify_max;
        return optional_member<int>(t, "verify_max", ctx_).value_or(3);
    }

    const std::vector<Poly>& require_sop() const {
        if (sop_.empty()) throw InputError(ctx_ + ": this task needs a 'sop' block");
        return sop_;
    }

    int sop_length() const { return static_cast<int>(require_sop().size()); }

    std::vector<std::string> ideal_texts_from(const json& v, const std::string& ctx) const {
        if (v.is_string()) {
            auto name = v.get<std::string>();
            if (name == "m") return spec_.variables;
            auto it = spec_.ideals.find(name);
            if (it == spec_.ideals.end()) throw InputError(ctx + ": unknown ideal '" + name + "'");
            return it->second;
        }
        return as<std::vector<std::string>>(v, ctx);
    }

    // The ideal a task works on: "ideal" (name or list), "element" (principal)
    // or "i" (first i sop elements).
    std::vector<std::string> target_texts(const json& t) const {
        if (t.contains("ideal")) return ideal_texts_from(t.at("ideal"), ctx_ + ".ideal");
        if (t.contains("element")) return {as<std::string>(t.at("element"), ctx_ + ".element")};
        if (t.contains("i")) {
            int i = as<int>(t.at("i"), ctx_ + ".i");
            require_sop();
            if (i < 0 || i > static_cast<int>(spec_.sop.size())) throw InputError(ctx_ + ": i out of range");
            return {spec_.sop.begin(), spec_.sop.begin() + i};
        }
        throw InputError(ctx_ + ": give 'ideal', 'element' or 'i'");
    }

    IdealHandle<K> target_ideal(const json& t) { return make_ideal(target_texts(t), ctx_); }

    void record_sequence(const std::vector<std::int64_t>& values) { sequences_out_.emplace_back(current_, values); }

    // Sequence for validators: an earlier task's output ("from") or a fresh h0.
    std::vector<std::int64_t> sequence_for(const json& t, ojson& entry) {
        if (t.contains("from")) {
            auto from = as<std::string>(t.at("from"), ctx_ + ".from");
            auto it = sequences_.find(from);
            if (it == sequences_.end())
                throw InputError(ctx_ + ": 'from' must name an earlier sequence task, not '" + from + "'");
            entry["inputs"]["from"] = from;
            return it->second;
        }
        auto ideal = target_ideal(t);
        entry["inputs"]["ideal"] = ideal.to_string();
        entry["inputs"]["nmax"] = nmax(t);
        auto seq = h0_sequence(ideal, nmax(t), H0Options{{}, options_.execution});
        record_sequence(seq.values);
        sequences_[current_] = seq.values;
        return seq.values;
    }

    std::optional<bool> check_expect(const json& t, const std::vector<std::int64_t>& values, ojson& entry,
                                     const std::string& ideal_text) {
        auto expect = optional_member<std::vector<std::int64_t>>(t, "expect", ctx_);
        if (!expect) return std::nullopt;
        entry["expected"] = to_json(*expect);
        auto diff = first_difference(*expect, values);
        if (!diff) return true;
        ojson w;
        w["first_mismatch"] = *diff;
        w["expected"] = *diff < expect->size() ? ojson((*expect)[*diff]) : ojson(nullptr);
        w["measured"] = *diff < values.size() ? ojson(values[*diff]) : ojson(nullptr);
        w["ideal"] = ideal_text;
        entry["witness"] = w;
        return false;
    }

    static std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
        if (!a) return b;
        if (!b) return a;
        return *a && *b;
    }

    const ApsopFit& sop_fit() {
        if (!sop_fit_) sop_fit_ = fit_apsop(SopCandidate<K>{ring_, require_sop()}, 2, verify_max(json::object()), options_.execution);
        return *sop_fit_;
    }

    // ---- tasks

    std::optional<bool> task_h0(const json& t, ojson& entry) {
        auto ideal = target_ideal(t);
        const int n = nmax(t);
        H0Options opt;
        opt.execution = options_.execution;
        auto mode = optional_member<std::string>(t, "saturation", ctx_).value_or("iterated-colon");
        if (mode == "per-variable")
            opt.saturation.per_variable = true;
        else if (mode != "iterated-colon")
            throw InputError(ctx_ + ": saturation must be 'iterated-colon' or 'per-variable'");
        entry["inputs"] = {{"ideal", ideal.to_string()}, {"nmax", n}, {"saturation", mode}};
        auto seq = h0_sequence(ideal, n, opt);
        entry["outputs"]["values"] = to_json(seq.values);
        ojson idx = ojson::array();
        for (auto s : seq.stabilization) idx.push_back(s);
        entry["outputs"]["stabilization_index"] = idx;
        sequences_[current_] = seq.values;
        record_sequence(seq.values);
        std::optional<bool> pass = check_expect(t, seq.values, entry, ideal.to_string());
        if (options_.oracle || optional_member<bool>(t, "oracle", ctx_).value_or(false)) {
            std::vector<std::int64_t> brute;
            for (int k = 0; k <= n; ++k) brute.push_back(oracle::h0_bruteforce(ideal, k, 0, options_.execution).value);
            entry["outputs"]["oracle_values"] = to_json(brute);
            bool agree = brute == seq.values;
            entry["outputs"]["oracle_agrees"] = agree;
            pass = both(pass, agree);
        }
        return pass;
    }

    std::optional<bool> task_rees(const json& t, ojson& entry) {
        auto inner = make_ideal(ideal_texts_from(member(t, "inner", ctx_), ctx_ + ".inner"), ctx_);
        const json& o = member(t, "outer", ctx_);
        IdealHandle<K> outer = (o.is_string() && o.get<std::string>() == "saturation")
                                   ? saturate(inner, maximal_ideal(ring_)).ideal
                                   : make_ideal(ideal_texts_from(o, ctx_ + ".outer"), ctx_);
        const int n = nmax(t);
        entry["inputs"] = {{"inner", inner.to_string()}, {"outer", outer.to_string()}, {"nmax", n}};
        auto seq = rees_sequence(inner, outer, n, options_.execution);
        entry["outputs"]["values"] = to_json(seq.values);
        sequences_[current_] = seq.values;
        record_sequence(seq.values);
        auto pass = check_expect(t, seq.values, entry, inner.to_string());
        if (auto other = optional_member<std::string>(t, "compare_with", ctx_)) {
            auto it = sequences_.find(*other);
            if (it == sequences_.end()) throw InputError(ctx_ + ": compare_with names no earlier sequence");
            auto diff = first_difference(it->second, seq.values);
            entry["outputs"]["matches_" + *other] = !diff;
            if (diff) entry["witness"] = {{"first_mismatch", *diff}, {"compared_with", *other}};
            pass = both(pass, !diff);
        }
        return pass;
    }

    template <typename F>
    std::optional<bool> identity_suite(const json& t, ojson& entry, const std::vector<std::vector<int>>& params,
                                       const std::vector<std::string>& labels, F&& run_one) {
        const int n = nmax(t);
        entry["inputs"]["nmax"] = n;
        ojson cases = ojson::array();
        bool all = true;
        for (const auto& p : params) {
            IdentityReport rep = run_one(p, n);
            ojson c;
            for (std::size_t k = 0; k < labels.size(); ++k) c[labels[k]] = p[k];
            c["holds"] = holds_list(rep.entries);
            if (!rep.sub_entries.empty()) c["square_collapse_holds"] = holds_list(rep.sub_entries);
            cases.push_back(c);
            if (!rep.all_hold() && all) {
                all = false;
                ojson w;
                for (std::size_t k = 0; k < labels.size(); ++k) w[labels[k]] = p[k];
                for (const auto& e : rep.entries)
                    if (!e.holds) {
                        w["check"] = to_json(e);
                        break;
                    }
                for (const auto& e : rep.sub_entries)
                    if (!e.holds && !w.contains("check")) w["square_collapse"] = to_json(e);
                entry["witness"] = w;
            }
        }
        entry["outputs"]["cases"] = cases;
        return all;
    }

    std::optional<bool> task_lemma35(const json& t, ojson& entry) {
        const int d = sop_length();
        std::vector<std::vector<int>> params;
        if (t.contains("i") || t.contains("j") || t.contains("t")) {
            params.push_back({as<int>(member(t, "i", ctx_), ctx_), as<int>(member(t, "j", ctx_), ctx_),
                              as<int>(member(t, "t", ctx_), ctx_)});
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int tt = 1; tt <= d; ++tt)
                        if (tt <= i || tt > j) params.push_back({i, j, tt});
        }
        return identity_suite(t, entry, params, {"i", "j", "t"}, [&](const std::vector<int>& p, int n) {
            return check_lemma35(ring_, sop_, p[0], p[1], p[2], n);
        });
    }

    std::optional<bool> task_cor36(const json& t, ojson& entry) {
        const int d = sop_length();
        std::vector<std::vector<int>> params;
        if (t.contains("i") || t.contains("j")) {
            int i = as<int>(member(t, "i", ctx_), ctx_), j = as<int>(member(t, "j", ctx_), ctx_);
            params.push_back({i, j, cor36_t(i, j)});
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    if (cor36_t(i, j) <= d) params.push_back({i, j, cor36_t(i, j)});
        }
        return identity_suite(t, entry, params, {"i", "j", "t"}, [&](const std::vector<int>& p, int n) {
            return check_cor36(ring_, sop_, p[0], p[1], n);
        });
    }

    std::optional<bool> task_cor38(const json& t, ojson& entry) {
        if (!spec_.annotations.generalized_cm)
            throw InputError(ctx_ + ": cor38 needs the ring annotated as generalized Cohen-Macaulay");
        const int d = sop_length();
        std::vector<std::vector<int>> params;
        if (t.contains("i"))
            params.push_back({as<int>(t.at("i"), ctx_ + ".i")});
        else
            for (int i = 1; i < d; ++i) params.push_back({i});
        return identity_suite(t, entry, params, {"i"},
                              [&](const std::vector<int>& p, int n) { return check_cor38(ring_, sop_, p[0], n); });
    }

    int window(const json& t) const { return optional_member<int>(t, "window", ctx_).value_or(3); }

    std::optional<bool> task_thm22(const json& t, ojson& entry) {
        auto seq = sequence_for(t, entry);
        auto v = validate_thm22(seq, window(t));
        entry["outputs"] = to_json(v);
        return v.pass;
    }

    std::optional<bool> task_thm24(const json& t, ojson& entry) {
        auto a_text = as<std::string>(member(t, "element", ctx_), ctx_ + ".element");
        auto a = parse(a_text, ctx_ + ".element");
        auto seq = sequence_for(t, entry);
        entry["inputs"]["element"] = a_text;
        auto det = detect_eventual_polynomial(seq, window(t));
        if (!det.polynomial) {
            entry["outputs"] = {{"notes", {det.message}}};
            return false;
        }
        std::vector<Ass1Record> records;
        std::vector<std::int64_t> mults;
        ojson primes = ojson::array();
        for (const auto& e : spec_.annotations.ass1) {
            auto p = make_ideal(e.prime, "annotations.ass1.prime");
            if (krull_dimension(p) != 1)
                throw InputError("annotations.ass1: prime (" + p.to_string() + ") is not one-dimensional");
            bool contains = p.contains(a);
            if (e.contains_a && *e.contains_a != contains)
                throw InputError("annotations.ass1: contains_a disagrees with membership for (" + p.to_string() + ")");
            records.push_back({e.prime, e.local_h0_length, contains});
            ojson pj = {{"prime", p.to_string()}, {"local_h0_length", e.local_h0_length}, {"contains_a", contains}};
            if (!contains) {
                mults.push_back(param_multiplicity(ring_, p.generators(), a));
                pj["multiplicity"] = mults.back();
            }
            primes.push_back(pj);
        }
        auto v = validate_thm24(*det.polynomial, records, mults);
        entry["outputs"] = to_json(v);
        entry["outputs"]["primes"] = primes;
        return v.pass;
    }

    std::vector<std::int64_t> cohomology(ojson& entry, int d) {
        const auto& ann = spec_.annotations;
        std::optional<std::vector<std::int64_t>> from_homology;
        if (ann.buchsbaum) {
            if (auto c = complex()) from_homology = buchsbaum_cohomology_vector(*c, d, ring_->field(), true);
        }
        if (from_homology && ann.cohomology && *from_homology != *ann.cohomology)
            throw InputError("annotations.cohomology disagrees with the Stanley-Reisner computation");
        if (from_homology) {
            entry["inputs"]["cohomology_source"] = "sr-homology";
            return *from_homology;
        }
        if (ann.cohomology) {
            entry["inputs"]["cohomology_source"] = "annotation";
            return *ann.cohomology;
        }
        throw InputError(ctx_ + ": no cohomology vector (annotate it or give a Buchsbaum Stanley-Reisner ring)");
    }

    std::optional<SimplicialComplex> complex() const {
        if (spec_.annotations.complex) return spec_.annotations.complex;
        std::vector<Monomial> gens;
        for (const auto& r : ring_->relations()) {
            if (r.size() != 1) return std::nullopt;
            bool squarefree = true;
            for (std::size_t v = 0; v < ring_->nvars(); ++v) squarefree = squarefree && r.lead_monomial()[v] <= 1;
            if (!squarefree) return std::nullopt;
            gens.push_back(r.lead_monomial());
        }
        return complex_from_squarefree(gens, spec_.variables);
    }

    std::optional<bool> task_thm39(const json& t, ojson& entry) {
        if (!spec_.annotations.generalized_cm)
            throw InputError(ctx_ + ": thm39 needs the ring annotated as generalized Cohen-Macaulay");
        const int d = sop_length();
        const int i = as<int>(member(t, "i", ctx_), ctx_ + ".i");
        if (i < 0 || i >= d) throw InputError(ctx_ + ": need 0 <= i < d");
        auto h = cohomology(entry, d);
        entry["inputs"]["i"] = i;
        entry["inputs"]["d"] = d;
        entry["inputs"]["cohomology"] = to_json(h);
        auto seq = sequence_for(t, entry);
        auto v = validate_thm39(seq, h, i, d, spec_.annotations.depth, window(t));
        const auto& fit = sop_fit();
        bool standard = is_standard_sop(fit);
        entry["outputs"] = to_json(v);
        entry["outputs"]["sop_standard_on_grid"] = standard;
        if (!standard) entry["outputs"]["notes"].push_back("the sop is not standard on the verified grid");
        return v.pass && standard;
    }

    std::optional<bool> task_cor25(const json& t, ojson& entry) {
        auto a_text = as<std::string>(member(t, "element", ctx_), ctx_ + ".element");
        auto a = parse(a_text, ctx_ + ".element");
        auto kind_text = as<std::string>(member(t, "case", ctx_), ctx_ + ".case");
        Cor25Case kind;
        if (kind_text == "filter-regular")
            kind = Cor25Case::FilterRegular;
        else if (kind_text == "annihilator")
            kind = Cor25Case::Annihilator;
        else
            throw InputError(ctx_ + ": case must be 'filter-regular' or 'annihilator'");
        auto seq = sequence_for(t, entry);
        entry["inputs"]["element"] = a_text;
        entry["inputs"]["case"] = kind_text;
        auto e_prime = optional_member<std::int64_t>(t, "e_prime", ctx_);
        if (!e_prime) e_prime = spec_.annotations.epsilon_prime;
        auto v = validate_cor25(seq, kind, kind == Cor25Case::FilterRegular ? e_prime : std::nullopt, window(t));
        bool pre = true;
        if (kind == Cor25Case::FilterRegular) {
            pre = is_filter_regular(ring_, a);
            v.notes.push_back(pre ? "element is filter-regular" : "element is not filter-regular");
        }
        entry["outputs"] = to_json(v);
        return v.pass && pre;
    }

    std::optional<bool> task_cor34(const json& t, ojson& entry) {
        auto seq = sequence_for(t, entry);
        auto v = validate_cor34(seq);
        entry["outputs"] = to_json(v);
        return v.pass;
    }

    std::optional<bool> task_apsop(const json& t, ojson& entry) {
        std::vector<Poly> elems;
        if (t.contains("elements")) {
            for (const auto& s : as<std::vector<std::string>>(t.at("elements"), ctx_ + ".elements"))
                elems.push_back(parse(s, ctx_ + ".elements"));
        } else {
            elems = require_sop();
        }
        const int fit_max = optional_member<int>(t, "fit_max", ctx_).value_or(2);
        const int vmax = verify_max(t);
        entry["inputs"] = {{"fit_max", fit_max}, {"verify_max", vmax}};
        SopCandidate<K> c{ring_, elems};
        bool sop_ok = is_sop(c);
        auto fit = fit_apsop(c, fit_max, vmax, options_.execution);
        entry["outputs"] = to_json(fit);
        entry["outputs"]["is_sop"] = sop_ok;
        bool standard = is_standard_sop(fit);
        entry["outputs"]["standard"] = standard;
        if (standard) {
            entry["outputs"]["multiplicity"] = fit.lambdas.back();
            entry["outputs"]["buchsbaum_invariant"] = fit.lambdas.front();
        }
        std::optional<bool> pass = fit.success && sop_ok;
        if (auto exp = optional_member<std::vector<std::int64_t>>(t, "expect_lambdas", ctx_)) {
            entry["expected"]["lambdas"] = to_json(*exp);
            pass = *pass && fit.lambdas == *exp;
        }
        if (auto exp = optional_member<bool>(t, "expect_standard", ctx_)) {
            entry["expected"]["standard"] = *exp;
            pass = *pass && standard == *exp;
        }
        return pass;
    }

    std::optional<bool> task_dseq(const json& t, ojson& entry) {
        std::vector<Poly> elems;
        if (t.contains("elements")) {
            for (const auto& s : as<std::vector<std::string>>(t.at("elements"), ctx_ + ".elements"))
                elems.push_back(parse(s, ctx_ + ".elements"));
        } else {
            elems = require_sop();
        }
        IdealHandle<K> modulus = t.contains("modulus")
                                     ? make_ideal(ideal_texts_from(t.at("modulus"), ctx_ + ".modulus"), ctx_)
                                     : zero_ideal(ring_);
        entry["inputs"]["modulus"] = modulus.to_string();
        bool res = is_d_sequence(ring_, elems, modulus);
        entry["outputs"]["d_sequence"] = res;
        bool expect = optional_member<bool>(t, "expect", ctx_).value_or(true);
        entry["expected"] = expect;
        return res == expect;
    }

    std::optional<bool> task_prop33(const json& t, ojson& entry) {
        const int i = as<int>(member(t, "i", ctx_), ctx_ + ".i");
        const int j = as<int>(member(t, "j", ctx_), ctx_ + ".j");
        const int n = nmax(t);
        const int fit_max = optional_member<int>(t, "fit_max", ctx_).value_or(2);
        const int vmax = verify_max(t);
        entry["inputs"] = {{"i", i}, {"j", j}, {"nmax", n}, {"fit_max", fit_max}, {"verify_max", vmax}};
        auto res = check_prop33(SopCandidate<K>{ring_, require_sop()}, i, j, n, fit_max, vmax, options_.execution);
        ojson per = ojson::array();
        bool all = true;
        for (const auto& e : res) {
            ojson o = to_json(e.fit);
            o["n"] = e.n;
            per.push_back(o);
            if (!e.fit.success && all) {
                all = false;
                entry["witness"] = {{"n", e.n}, {"fit", to_json(e.fit)}};
            }
        }
        entry["outputs"]["per_n"] = per;
        return all;
    }

    std::optional<bool> task_homology(const json& t, ojson& entry) {
        auto c = complex();
        if (!c) throw InputError(ctx_ + ": no complex (annotate one or use square-free monomial relations)");
        auto betti = reduced_homology_dims(*c, ring_->field(), options_.execution);
        entry["inputs"]["facets"] = c->to_string();
        entry["outputs"]["reduced_betti"] = to_json(betti);
        std::int64_t alt = 0;
        for (std::size_t k = 0; k < betti.size(); ++k) alt += (k % 2 == 1) ? betti[k] : -betti[k];  // index k is β̃_{k-1}
        const std::int64_t chi = c->reduced_euler_characteristic();
        entry["outputs"]["euler_from_faces"] = chi;
        entry["outputs"]["euler_from_homology"] = alt;
        bool pass = chi == alt;
        if (auto primes = optional_member<std::vector<std::uint32_t>>(t, "characteristics", ctx_)) {
            ojson per = ojson::object();
            for (auto p : *primes) {
                auto b = reduced_homology_dims(*c, PrimeField(p));
                per[std::to_string(p)] = to_json(b);
                pass = pass && b == betti;
            }
            entry["outputs"]["by_characteristic"] = per;
        }
        if (spec_.annotations.buchsbaum) {
            const int d = c->dimension() + 1;
            auto h = buchsbaum_cohomology_vector(*c, d, ring_->field(), true);
            entry["outputs"]["cohomology"] = to_json(h);
            entry["outputs"]["buchsbaum_invariant"] = buchsbaum_invariant(h);
            if (optional_member<bool>(t, "check_invariant", ctx_).value_or(false)) {
                const auto& fit = sop_fit();
                bool ok = fit.success && fit.lambdas.front() == buchsbaum_invariant(h);
                entry["outputs"]["fit_lambda0"] = fit.success ? ojson(fit.lambdas.front()) : ojson(nullptr);
                entry["outputs"]["invariant_matches_fit"] = ok;
                pass = pass && ok;
            }
        }
        if (auto exp = optional_member<std::vector<std::int64_t>>(t, "expect", ctx_)) {
            entry["expected"] = to_json(*exp);
            pass = pass && *exp == betti;
        }
        return pass;
    }

    std::optional<bool> task_epsilon(const json& t, ojson& entry) {
        auto seq = sequence_for(t, entry);
        const int d = optional_member<int>(t, "d", ctx_).value_or(krull_dimension(ring_));
        entry["inputs"]["d"] = d;
        auto probe = epsilon_probe(seq, d);
        ojson vals = ojson::array();
        for (const auto& [n, r] : probe.values) vals.push_back({{"n", n}, {"value", to_string(r)}});
        entry["outputs"]["values"] = vals;
        entry["outputs"]["trend"] = probe.trend;
        if (auto exp = optional_member<std::string>(t, "expect_trend", ctx_)) {
            entry["expected"] = *exp;
            return probe.trend == *exp;
        }
        return std::nullopt;
    }

    std::optional<bool> task_crosscheck(const json& t, ojson& entry) {
        auto texts = target_texts(t);
        auto ideal = make_ideal(texts, ctx_);
        const int n = nmax(t);
        entry["inputs"] = {{"ideal", ideal.to_string()}, {"nmax", n}};
        auto m = maximal_ideal(ring_);
        ojson rows = ojson::array();
        bool all = true;
        std::vector<std::int64_t> groebner;
        for (int k = 0; k <= n; ++k) {
            auto a = power(ideal, k + 1);
            auto sat = saturate(a, m).ideal;
            auto gb = length_pair(a, sat);
            auto brute = oracle::h0_bruteforce(ideal, k, 0, options_.execution);
            auto pair = oracle::length_pair_bruteforce(a, sat, 0, options_.execution);
            bool ok = gb.is_finite() && gb.value() == brute.value && gb.value() == pair;
            groebner.push_back(gb.is_finite() ? gb.value() : -1);
            rows.push_back({{"n", k},
                            {"groebner", gb.to_string()},
                            {"h0_oracle", brute.value},
                            {"oracle_cap", brute.cap},
                            {"length_pair_oracle", pair},
                            {"agree", ok}});
            if (!ok && all) {
                all = false;
                entry["witness"] = {{"n", k}, {"ideal", ideal.to_string()}, {"saturation", sat.to_string()}};
            }
        }
        entry["outputs"]["rows"] = rows;
        if (auto primes = optional_member<std::vector<std::uint32_t>>(t, "characteristics", ctx_)) {
            ojson per = ojson::object();
            for (auto p : *primes) {
                auto r = h0_at_prime(p, spec_, src_, texts, n, options_.execution);
                bool ok = r.groebner == groebner && r.oracle == groebner;
                per[std::to_string(p)] = {{"groebner", to_json(r.groebner)}, {"oracle", to_json(r.oracle)}, {"agree", ok}};
                if (!ok && all) {
                    all = false;
                    entry["witness"] = {{"characteristic", p}, {"ideal", ideal.to_string()}};
                }
            }
            entry["outputs"]["by_characteristic"] = per;
        }
        return all;
    }

    const JobSpec& spec_;
    const Source& src_;
    const JobOptions& options_;
    RingPtr<K> ring_;
    std::vector<Poly> sop_;
    std::optional<ApsopFit> sop_fit_;
    std::map<std::string, std::vector<std::int64_t>> sequences_;
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> sequences_out_;
    std::string current_;
    std::string ctx_;
};

} // namespace

JobResult run_job_text(const std::string& text, const std::string& source_name, const JobOptions& options) {
    JobResult result;
    Source src(source_name, text);
    try {
        json job;
        try {
            job = json::parse(text);
        } catch (const json::parse_error& e) {
            std::string msg = e.what();
            auto cut = msg.find("parse error");
            throw InputError(src.at_offset(e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON: " +
                             (cut == std::string::npos ? msg : msg.substr(cut)));
        }
        JobSpec spec = read_spec(job, options);
        result.job_name = spec.name;
        ojson report;
        if (spec.characteristic == 0) {
            Runner<RationalField> r(spec, src, options, RationalField{});
            r.run(result, report);
        } else {
            if (spec.characteristic >= (1ULL << 31))
                throw InputError("ring.characteristic must be 0 or a prime below 2^31");
            Runner<PrimeField> r(spec, src, options, PrimeField(static_cast<std::uint32_t>(spec.characteristic)));
            r.run(result, report);
        }
        result.report = report.dump(2) + "\n";
    } catch (const InputError& e) {
        result.exit_code = 2;
        result.report.clear();
        result.sequences.clear();
        std::string msg = e.what();
        result.error = msg.rfind(source_name, 0) == 0 ? msg : source_name + ": " + msg;
    }
    return result;
}

JobResult run_job_file(const std::filesystem::path& path, const JobOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        JobResult r;
        r.exit_code = 2;
        r.error = path.string() + ": cannot open job file";
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_job_text(buf.str(), path.string(), options);
}

std::string sequence_csv(const std::vector<std::int64_t>& values) {
    std::string out = "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) out += std::to_string(n) + "," + std::to_string(values[n]) + "\n";
    return out;
}

std::vector<std::filesystem::path> export_results(const JobResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto write = [&](const std::filesystem::path& p, const std::string& content) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << content;
        written.push_back(p);
    };
    for (const auto& [task, values] : result.sequences)
        write(dir / (result.job_name + "_" + task + ".csv"), sequence_csv(values));
    if (!result.report.empty()) write(dir / (result.job_name + "_report.json"), result.report);
    return written;
}

} // namespace satlen
