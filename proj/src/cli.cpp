#include "biell/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "biell/certificates.hpp"
#include "biell/points.hpp"

namespace biell {
namespace cli {

namespace {

using certs::json;

struct CommonOpts {
    bool pretty = false;
    std::string out_path;
    unsigned long seed = 0;
    bool seed_given = false;
    std::string height_bound = "100";
    double precision = 1e-8;
    double timeout_factor = 10.0;
    double timeout_descent = 30.0;
    double timeout_search = 30.0;
};

class Emitter {
  public:
    Emitter(const CommonOpts& o, std::ostream& fallback) : opts_(o) {
        if (!o.out_path.empty()) {
            file_.open(o.out_path);
            if (!file_) throw ParameterViolation("cannot open --out file");
            os_ = &file_;
        } else {
            os_ = &fallback;
        }
    }
    void doc(const json& d) {
        *os_ << (opts_.pretty ? d.dump(2) : d.dump()) << "\n";
    }

  private:
    const CommonOpts& opts_;
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

class StageTimer {
  public:
    explicit StageTimer(const CommonOpts& o) : opts_(o), start_(clock::now()) {}

    long total_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   clock::now() - start_)
            .count();
    }

    // run a stage and enforce its wall-clock budget at the boundary
    template <typename F>
    auto stage(const char* name, double limit_seconds, F&& f) {
        auto t0 = clock::now();
        auto result = f();
        double secs =
            std::chrono::duration<double>(clock::now() - t0).count();
        if (secs > limit_seconds) {
            std::ostringstream os;
            os << "stage '" << name << "' exceeded its time budget ("
               << secs << " s > " << limit_seconds << " s)";
            throw BudgetExceeded(os.str());
        }
        return result;
    }

  private:
    using clock = std::chrono::steady_clock;
    const CommonOpts& opts_;
    clock::time_point start_;
};

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw ParameterViolation("not an integer: '" + s + "'");
    }
}

std::vector<Int> parse_int_list(const std::string& s, size_t expect) {
    std::vector<Int> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(parse_int(cur));
    if (out.size() != expect)
        throw ParameterViolation("expected " + std::to_string(expect) +
                                 " comma-separated integers in '" + s + "'");
    return out;
}

// ascending positive squarefree integers
std::vector<Int> squarefree_sequence(int count) {
    std::vector<Int> out;
    for (Int m = 1; static_cast<int>(out.size()) < count; ++m)
        if (ntheory::is_squarefree(m)) out.push_back(m);
    return out;
}

json inputs_echo(const std::vector<std::string>& args) {
    json j = json::array();
    for (const auto& a : args) j.push_back(a);
    return j;
}

json rigor_json(bool probable, const std::vector<std::string>& tags) {
    return json{{"probable_primes_used", probable}, {"literature_tags", tags}};
}

// ---------------------------------------------------------------- rank ----

int cmd_rank(const std::string& curve_text, const CommonOpts& opts,
             std::optional<int> hint, const std::string& hint_ref,
             const std::vector<std::string>& echo, std::ostream& out) {
    StageTimer timer(opts);
    auto [d, rhs] = parse_curve(curve_text);
    if (rhs.degree() != 3)
        throw ParameterViolation("rank: the curve must have a degree-3 "
                                 "right-hand side");
    EllipticCurveQ e = normalize(d, rhs);
    auto cert = timer.stage("descent", opts.timeout_descent, [&] {
        return descent2::rank_certificate(e, parse_int(opts.height_bound),
                                          opts.precision, hint, hint_ref);
    });
    std::vector<std::string> tags;
    if (!cert.literature_tag.empty()) tags.push_back(cert.literature_tag);
    json results{{"certificate", certs::rank_certificate_json(cert)}};
    Emitter em(opts, out);
    em.doc(certs::document(
        "rank", json{{"argv", inputs_echo(echo)}, {"curve", curve_text}},
        results, rigor_json(cert.probable_prime_used, tags), timer.total_ms()));
    return 0;
}

// -------------------------------------------------------------- family ----

struct FamilySelection {
    std::string tag;
    std::map<std::string, std::string> values;  // raw flag values
    int count = 1;
    std::string cls;  // for g2-partial enumeration
    std::string start = "2";
    std::optional<int> hint;
    std::string hint_ref;
    bool resolve = true;
};

std::vector<families::FamilyInstance> build_instances(const FamilySelection& sel,
                                                      const CommonOpts& opts) {
    families::FamilyOptions fopt;
    fopt.resolve_ranks = sel.resolve;
    fopt.search_height = parse_int(opts.height_bound);
    fopt.precision = opts.precision;
    fopt.literature_hint = sel.hint;
    fopt.literature_ref = sel.hint_ref;

    auto need = [&](const char* key) {
        auto it = sel.values.find(key);
        if (it == sel.values.end() || it->second.empty())
            throw ParameterViolation(std::string("family ") + sel.tag +
                                     ": missing --" + key);
        return it->second;
    };
    auto maybe = [&](const char* key) -> std::optional<std::string> {
        auto it = sel.values.find(key);
        if (it == sel.values.end() || it->second.empty()) return std::nullopt;
        return it->second;
    };

    std::vector<families::FamilyInstance> out;
    if (sel.tag == "g2-no2tors") {
        Int a = parse_int(need("a"));
        if (auto m = maybe("m")) {
            out.push_back(families::g2_no_two_torsion(a, parse_int(*m), fopt));
        } else {
            for (const Int& m2 : squarefree_sequence(sel.count))
                out.push_back(families::g2_no_two_torsion(a, m2, fopt));
        }
    } else if (sel.tag == "g2-partial") {
        Int d = parse_int(need("d"));
        if (auto p = maybe("p")) {
            out.push_back(families::g2_partial(d, parse_int(*p), fopt));
        } else {
            Int residue, modulus;
            if (sel.cls == "5mod12") {
                residue = 5;
                modulus = 12;
            } else if (sel.cls == "3mod4") {
                residue = 3;
                modulus = 4;
            } else {
                throw ParameterViolation(
                    "family g2-partial: --class must be 5mod12 or 3mod4");
            }
            Int from = parse_int(sel.start);
            while (static_cast<int>(out.size()) < sel.count) {
                auto ps = ntheory::primes_in_class(residue, modulus, 1, from);
                from = ps[0] + 1;
                if (ps[0] == 3 || divides(ps[0], d)) continue;
                out.push_back(families::g2_partial(d, ps[0], fopt));
            }
        }
    } else if (sel.tag == "g2-full") {
        Int d = parse_int(need("d"));
        Int k = parse_int(need("k"));
        if (auto p = maybe("p")) {
            out.push_back(families::g2_full(d, k, parse_int(*p), fopt));
        } else {
            Int from = parse_int(sel.start);
            while (static_cast<int>(out.size()) < sel.count) {
                auto ps = ntheory::primes_in_class(Int(3), Int(8), 1, from);
                from = ps[0] + 1;
                try {
                    out.push_back(families::g2_full(d, k, ps[0], fopt));
                } catch (const SingularCurve&) {
                    // degenerate parameter collision: skip this prime
                }
            }
        }
    } else if (sel.tag == "g3") {
        auto abcd = parse_int_list(need("abcd"), 4);
        if (auto D = maybe("D")) {
            out.push_back(families::g3(abcd[0], abcd[1], abcd[2], abcd[3],
                                       parse_int(*D), fopt));
        } else {
            for (const Int& D2 : squarefree_sequence(sel.count))
                out.push_back(
                    families::g3(abcd[0], abcd[1], abcd[2], abcd[3], D2, fopt));
        }
    } else {
        throw ParameterViolation("unknown family tag: " + sel.tag);
    }
    return out;
}

int cmd_family(const FamilySelection& sel, const CommonOpts& opts,
               const std::vector<std::string>& echo, std::ostream& out) {
    StageTimer timer(opts);
    auto insts = timer.stage("family", opts.timeout_descent + opts.timeout_search,
                             [&] { return build_instances(sel, opts); });
    Emitter em(opts, out);
    for (const auto& inst : insts) {
        std::vector<std::string> tags;
        if (inst.expected_rank.provenance == families::Provenance::Literature &&
            inst.expected_rank.value)
            tags.push_back("expected rank");
        em.doc(certs::document(
            "family", json{{"argv", inputs_echo(echo)}},
            json{{"instance", certs::family_instance_json(inst)}},
            rigor_json(false, tags), timer.total_ms()));
    }
    return 0;
}

// ------------------------------------------------------------- jacrank ----

// factor-level certificates with hint handling for factors without 2-torsion
struct FactorResolution {
    std::vector<std::optional<descent2::RankCertificate>> certs;
    std::vector<std::optional<int>> literature_values;  // for non-elliptic factors
};

FactorResolution resolve_factors(const families::FamilyInstance& inst,
                                 const CommonOpts& opts, std::optional<int> hint,
                                 const std::string& hint_ref,
                                 std::optional<int> c2_rank) {
    FactorResolution res;
    for (const auto& f : inst.factors) {
        if (std::holds_alternative<EllipticCurveQ>(f.model)) {
            const auto& e = std::get<EllipticCurveQ>(f.model);
            if (f.rank) {
                res.certs.push_back(f.rank);
            } else {
                std::optional<int> use_hint;
                if (integer_roots(e.rhs()).empty()) {
                    // no 2-torsion: only a literature hint can bound the rank
                    use_hint = hint;
                    if (!use_hint && inst.tag == families::FamilyTag::G2NoTwoTorsion &&
                        f.label == "fixed" && inst.expected_rank.value &&
                        inst.expected_rank.provenance ==
                            families::Provenance::Literature)
                        use_hint = inst.expected_rank.value;
                }
                res.certs.push_back(descent2::rank_certificate(
                    e, parse_int(opts.height_bound), opts.precision, use_hint,
                    hint_ref.empty() ? "published rank table" : hint_ref));
            }
            res.literature_values.emplace_back();
        } else {
            res.certs.emplace_back();
            res.literature_values.push_back(c2_rank);
        }
    }
    return res;
}

int cmd_jacrank(const FamilySelection& sel, const CommonOpts& opts,
                std::optional<int> c2_rank, const std::vector<std::string>& echo,
                std::ostream& out) {
    StageTimer timer(opts);
    FamilySelection one = sel;
    one.count = 1;
    auto insts = build_instances(one, opts);
    const auto& inst = insts.at(0);
    auto res = timer.stage("descent", opts.timeout_descent, [&] {
        return resolve_factors(inst, opts, sel.hint, sel.hint_ref, c2_rank);
    });

    int lower = 0;
    std::optional<int> upper = 0;
    bool literature = false;
    bool all_exact = true;
    std::vector<std::string> tags;
    json factors = json::array();
    for (size_t i = 0; i < inst.factors.size(); ++i) {
        json fj{{"label", inst.factors[i].label}};
        if (res.certs[i]) {
            const auto& c = *res.certs[i];
            fj["certificate"] = certs::rank_certificate_json(c);
            lower += c.rank_lower;
            if (upper) {
                if (c.rank_upper) *upper += *c.rank_upper;
                else upper.reset();
            }
            if (c.status != descent2::CertStatus::Exact) all_exact = false;
            if (c.literature_flagged) {
                literature = true;
                tags.push_back(c.literature_tag);
            }
        } else if (res.literature_values[i]) {
            int v = *res.literature_values[i];
            fj["literature_rank"] = v;
            fj["provenance"] = "literature";
            lower += v;
            if (upper) *upper += v;
            literature = true;
            tags.push_back("genus-2 factor rank supplied as literature");
        } else {
            fj["provenance"] = "unresolved";
            all_exact = false;
            upper.reset();
        }
        factors.push_back(fj);
    }

    json combined;
    bool exact = upper && *upper == lower && all_exact;
    if (exact) {
        combined["status"] = "exact";
        combined["rank"] = lower;
    } else {
        combined["status"] = "interval";
        combined["rank_interval"] =
            json::array({lower, upper ? json(*upper) : json(nullptr)});
    }
    combined["literature_flagged"] = literature;

    json results{{"instance", certs::family_instance_json(inst)},
                 {"factors", factors},
                 {"jacobian_rank", combined}};
    bool probable = false;
    for (const auto& c : res.certs)
        if (c && c->probable_prime_used) probable = true;
    Emitter em(opts, out);
    em.doc(certs::document("jacrank", json{{"argv", inputs_echo(echo)}}, results,
                           rigor_json(probable, tags), timer.total_ms()));
    return 0;
}

// -------------------------------------------------------------- points ----

int cmd_points(const FamilySelection& sel, const CommonOpts& opts,
               const std::string& bound, const std::vector<std::string>& echo,
               std::ostream& out) {
    StageTimer timer(opts);
    FamilySelection one = sel;
    one.count = 1;
    auto insts = build_instances(one, opts);
    const auto& inst = insts.at(0);
    auto res = resolve_factors(inst, opts, sel.hint, sel.hint_ref, std::nullopt);
    std::vector<descent2::RankCertificate> certs_vec;
    for (size_t i = 0; i < inst.factors.size(); ++i) {
        if (res.certs[i]) {
            certs_vec.push_back(*res.certs[i]);
        } else {
            certs_vec.emplace_back();
            certs_vec.back().status = descent2::CertStatus::Interval;
        }
    }
    auto result = timer.stage("search", opts.timeout_search, [&] {
        return points::determine_points(inst, certs_vec, parse_int(bound));
    });
    std::vector<std::string> tags;
    if (result.conditional_on_literature)
        tags.push_back("rank-0 factor is literature-tagged");
    json results{{"instance", certs::family_instance_json(inst)},
                 {"point_set", certs::point_set_json(result)}};
    Emitter em(opts, out);
    em.doc(certs::document("points", json{{"argv", inputs_echo(echo)},
                                          {"bound", bound}},
                           results, rigor_json(false, tags), timer.total_ms()));
    return 0;
}

// --------------------------------------------------------------- table ----

int cmd_table(const std::string& which, const CommonOpts& opts,
              const std::vector<std::string>& echo, std::ostream& out) {
    StageTimer timer(opts);
    json rows = json::array();
    std::vector<std::string> tags;
    if (which == "corollary22") {
        for (int r = 0; r <= 11; ++r) {
            auto row = families::corollary22_params(r);
            json j{{"rank", row.r},
                   {"a", certs::int_json(row.a)},
                   {"rank_provenance",
                    families::provenance_name(row.rank_provenance)},
                   {"note", row.note}};
            if (!row.k_factors.empty()) {
                json ks = json::array();
                for (const Int& f : row.k_factors) ks.push_back(certs::int_json(f));
                j["k_factors"] = ks;
            }
            j["desk_verified_lower_bound"] = json(nullptr);
            if (r <= 2) {
                // quick lower-bound verification on y^2 = x^3 + a^2
                auto e = curve_from_coeffs(Int(0), Int(0), row.a * row.a);
                auto pts = search_points(e, Int(300));
                auto lb = rank_lower_bound(e, pts, opts.precision);
                j["desk_verified_lower_bound"] = lb.rank;
                j["lower_bound_meets_rank"] = (lb.rank >= r);
            } else {
                tags.push_back("rank " + std::to_string(r) +
                               " row rests on published computations");
            }
            rows.push_back(j);
        }
    } else if (which == "corollary32") {
        for (int r = 0; r <= 2; ++r) {
            auto row = families::corollary32_params(r);
            rows.push_back(json{
                {"rank", row.r},
                {"a", certs::int_json(row.a)},
                {"b", certs::int_json(row.b)},
                {"c", certs::int_json(row.c)},
                {"d", certs::int_json(row.d)},
                {"square_triple_check",
                 families::square_triple_check(row.a, row.b, row.c, row.d)},
                {"rank_provenance", "literature"}});
        }
    } else {
        throw ParameterViolation("table: expected corollary22 or corollary32");
    }
    Emitter em(opts, out);
    em.doc(certs::document("table", json{{"argv", inputs_echo(echo)},
                                         {"which", which}},
                           json{{"rows", rows}}, rigor_json(false, tags),
                           timer.total_ms()));
    return 0;
}

void add_family_flags(CLI::App* cmd, FamilySelection& sel) {
    cmd->add_option("tag", sel.tag, "family tag: g2-no2tors | g2-partial | g2-full | g3")
        ->required();
    cmd->add_option("--a", sel.values["a"], "parameter a (g2-no2tors)");
    cmd->add_option("--m", sel.values["m"], "parameter m (g2-no2tors)");
    cmd->add_option("--d", sel.values["d"], "parameter d");
    cmd->add_option("--k", sel.values["k"], "parameter k (g2-full)");
    cmd->add_option("--p", sel.values["p"], "prime parameter p");
    cmd->add_option("--abcd", sel.values["abcd"], "a,b,c,d (g3)");
    cmd->add_option("--D", sel.values["D"], "twist parameter D (g3)");
}

}  // namespace

std::pair<Int, Poly> parse_curve(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&](const std::string& msg) {
        throw ParameterViolation("curve syntax: " + msg + " in '" + text + "'");
    };
    size_t ypos = s.find('y');
    if (ypos == std::string::npos) fail("missing y^2");
    Int d = 1;
    if (ypos > 0) {
        if (s[ypos - 1] != '*') fail("expected '*' before y^2");
        d = parse_int(s.substr(0, ypos - 1));
    }
    size_t pos = ypos + 1;
    if (pos < s.size() && s[pos] == '^') ++pos;
    if (pos >= s.size() || s[pos] != '2') fail("expected y^2");
    ++pos;
    if (pos >= s.size() || s[pos] != '=') fail("expected '='");
    ++pos;

    std::map<int, Int> coeffs;
    bool first = true;
    while (pos < s.size()) {
        int sgn = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sgn = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (pos < s.size() && s[pos] == '*') ++pos;
        Int coef = digits.empty() ? Int(1) : Int(digits);
        int expo = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            expo = 1;
            if (pos < s.size() && s[pos] == '^') ++pos;
            std::string ed;
            while (pos < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[pos])))
                ed += s[pos++];
            if (!ed.empty()) expo = std::stoi(ed);
        } else if (digits.empty()) {
            fail("expected a coefficient or x");
        }
        coeffs[expo] += sgn * coef;
    }
    if (coeffs.empty()) fail("empty right-hand side");
    std::vector<Rat> c(coeffs.rbegin()->first + 1, Rat(0));
    for (const auto& [e, v] : coeffs) c[e] = Rat(v);
    return {d, Poly(std::move(c))};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"bielliptic curve families over Q: Jacobian splitting, rank "
                 "certificates, and rational point determination"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_flag("--json-pretty", opts.pretty, "indent JSON output");
    app.add_option("--out", opts.out_path, "write output to a file");
    auto* seed_opt =
        app.add_option("--seed", opts.seed, "seed for factoring heuristics");
    app.add_option("-H,--height-bound", opts.height_bound,
                   "point search height bound (default 100)");
    app.add_option("--precision", opts.precision,
                   "canonical height precision (default 1e-8)");
    app.add_option("--timeout-factor", opts.timeout_factor,
                   "factoring stage budget, seconds (default 10)");
    app.add_option("--timeout-descent", opts.timeout_descent,
                   "descent stage budget, seconds (default 30)");
    app.add_option("--timeout-search", opts.timeout_search,
                   "search stage budget, seconds (default 30)");

    // rank
    auto* rank = app.add_subcommand("rank", "rank certificate for one curve");
    std::string rank_kind, rank_curve;
    rank->add_option("kind", rank_kind, "curve kind (elliptic)")->required();
    rank->add_option("curve", rank_curve, "curve, e.g. \"y2=x3+125\"")->required();
    std::optional<int> rank_hint;
    int rank_hint_value = 0;
    auto* rank_hint_opt = rank->add_option("--literature-hint", rank_hint_value,
                                           "rank upper bound from literature");
    std::string hint_ref;
    rank->add_option("--literature-ref", hint_ref, "citation for the hint");

    // family
    auto* family = app.add_subcommand("family", "construct family instances");
    FamilySelection fsel;
    add_family_flags(family, fsel);
    family->add_option("--count", fsel.count, "number of instances");
    family->add_option("--m-count", fsel.count, "number of m values (g2-no2tors)");
    family->add_option("--p-count", fsel.count, "number of primes (g2-full)");
    family->add_option("--D-count", fsel.count, "number of D values (g3)");
    family->add_option("--class", fsel.cls, "prime class: 5mod12 | 3mod4");
    family->add_option("--start", fsel.start, "enumeration start (default 2)");
    int fam_hint_value = 0;
    auto* fam_hint_opt = family->add_option("--literature-hint", fam_hint_value,
                                            "rank hint for the base factor");
    family->add_option("--literature-ref", fsel.hint_ref, "citation for the hint");
    bool no_resolve = false;
    family->add_flag("--no-resolve-ranks", no_resolve,
                     "skip factor rank certificates");

    // jacrank
    auto* jacrank = app.add_subcommand("jacrank", "Jacobian rank certificate");
    FamilySelection jsel;
    add_family_flags(jacrank, jsel);
    int jac_hint_value = 0;
    auto* jac_hint_opt = jacrank->add_option(
        "--literature-hint", jac_hint_value, "rank hint for the base factor");
    jacrank->add_option("--literature-ref", jsel.hint_ref, "citation");
    int c2_value = 0;
    auto* c2_opt = jacrank->add_option("--literature-c2-rank", c2_value,
                                       "genus-2 factor rank from literature (g3)");

    // points
    auto* pts = app.add_subcommand("points", "rational point determination");
    FamilySelection psel;
    add_family_flags(pts, psel);
    std::string bound = "100";
    pts->add_option("--bound", bound, "naive search cross-check bound");
    int pts_hint_value = 0;
    auto* pts_hint_opt = pts->add_option("--literature-hint", pts_hint_value,
                                         "rank hint for factors without 2-torsion");
    pts->add_option("--literature-ref", psel.hint_ref, "citation");

    // table
    auto* table = app.add_subcommand("table", "parameter tables");
    std::string which;
    table->add_option("which", which, "corollary22 | corollary32")->required();

    for (CLI::App* sc : {rank, family, jacrank, pts, table})
        sc->fallthrough();  // global flags may follow the subcommand

    std::vector<std::string> argv_vec = args;
    std::vector<const char*> argv;
    argv.push_back("biell");
    for (const auto& a : argv_vec) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (*seed_opt) ntheory::set_default_seed(opts.seed);

    try {
        if (*rank) {
            if (rank_kind != "elliptic")
                throw ParameterViolation("rank: only 'elliptic' curves are supported");
            if (*rank_hint_opt) rank_hint = rank_hint_value;
            return cmd_rank(rank_curve, opts, rank_hint, hint_ref, args, out);
        }
        if (*family) {
            if (*fam_hint_opt) fsel.hint = fam_hint_value;
            fsel.resolve = !no_resolve;
            return cmd_family(fsel, opts, args, out);
        }
        if (*jacrank) {
            if (*jac_hint_opt) jsel.hint = jac_hint_value;
            std::optional<int> c2;
            if (*c2_opt) c2 = c2_value;
            return cmd_jacrank(jsel, opts, c2, args, out);
        }
        if (*pts) {
            if (*pts_hint_opt) psel.hint = pts_hint_value;
            return cmd_points(psel, opts, bound, args, out);
        }
        if (*table) return cmd_table(which, opts, args, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const MapIdentityFailed& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExceeded& e) {
        err << "precision exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        // ParameterViolation, SingularCurve, and integer parse failures
        err << "parameter violation: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace biell
