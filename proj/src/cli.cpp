#include "qdn/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdn/dnumbers.hpp"
#include "qdn/enumerate.hpp"
#include "qdn/error.hpp"
#include "qdn/fusion.hpp"
#include "qdn/tables.hpp"
#include "qdn/units.hpp"

namespace qdn::cli {

namespace {

using json = nlohmann::json;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer integer_arg(const std::string& text, const std::string& name)
{
    try {
        return parse_integer(text);
    } catch (const Error&) {
        throw UsageFailure(name + ": not an integer: '" + text + "'");
    }
}

long long_arg(const std::string& text, const std::string& name)
{
    const Integer v = integer_arg(text, name);
    if (!v.fits_slong_p()) throw UsageFailure(name + ": out of range: '" + text + "'");
    return v.get_si();
}

Rational rational_arg(const std::string& text, const std::string& name)
{
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw UsageFailure(name + ": not a rational number: '" + text + "'");
    }
}

QuadField field_arg(const std::string& text) { return QuadField(long_arg(text, "N")); }

QuadInt element_arg(const QuadField& field, const std::string& p, const std::string& q)
{
    return QuadInt(field, integer_arg(p, "p"), integer_arg(q, "q"));
}

json jint(const Integer& n) { return to_string(n); }

json jquad(const QuadInt& x)
{
    return {{"N", x.field().n()},
            {"p", jint(x.p())},
            {"q", jint(x.q())},
            {"render", render(x)},
            {"approx", approx(x)}};
}

std::string delta_string(const Delta& d)
{
    std::string out;
    for (int v : d) out += static_cast<char>('0' + v);
    return out;
}

json jfactor(const CanonicalFactorization& f)
{
    return {{"N", f.field.n()},
            {"ell", jint(f.ell)},
            {"m", f.m},
            {"delta", delta_string(f.delta)},
            {"form", render(f)}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string signed_norm(int n) { return n > 0 ? "+1" : "-1"; }

// Human form of sqrt(c eps^j).
std::string part_dimension(const SimplePart& part)
{
    const std::string power = part.j == 1 ? "ε" : "ε^" + std::to_string(part.j);
    if (part.j % 2 == 0 && is_perfect_square(part.c)) {
        const Integer k = isqrt(part.c);
        const std::string half = part.j == 2 ? "ε" : "ε^" + std::to_string(part.j / 2);
        return k == 1 ? half : to_string(k) + "·" + half;
    }
    return "√(" + (part.c == 1 ? std::string() : to_string(part.c)) + power + ")";
}

class Emitter {
public:
    Emitter(bool json_mode, std::ostream& out) : json_(json_mode), out_(out) {}

    bool json_mode() const { return json_; }
    std::ostream& text() { return out_; }

    void record(const std::string& command, json payload)
    {
        const json line{{"schema_version", 1}, {"command", command}, {"payload", std::move(payload)}};
        out_ << line.dump() << "\n";
    }

private:
    bool json_;
    std::ostream& out_;
};

struct Options {
    bool json = false;
    std::uint64_t budget = 0;

    std::string n, p, q, p2, q2, m, ell, bound;
    std::string field;
    std::string dint_divides;
    std::string witness_bound;
    std::string norm = "any";
    std::string table;
    unsigned precision = 128;
    bool tsv = false;
    bool no_integers = false;
    bool refine = false;
    bool modular_filter = false;
};

void run_unit(const Options& o, Emitter& e)
{
    const FundamentalUnit eps = fundamental_unit(field_arg(o.n));
    if (e.json_mode()) {
        e.record("unit", {{"N", eps.field.n()},
                          {"t", jint(eps.t)},
                          {"u", jint(eps.u)},
                          {"norm", eps.unit_norm},
                          {"value", jquad(eps.value)}});
        return;
    }
    e.text() << "t=" << eps.t << " u=" << eps.u << " norm=" << signed_norm(eps.unit_norm) << "\n";
}

void run_kappa(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const Kappas k = kappas(field);
    if (e.json_mode()) {
        e.record("kappa", {{"N", field.n()},
                           {"kappa1", jint(k.kappa1)},
                           {"kappa2", jint(k.kappa2)},
                           {"s1", jint(k.s1)},
                           {"s2", jint(k.s2)}});
        return;
    }
    e.text() << "kappa1=" << k.kappa1 << " kappa2=" << k.kappa2 << "\n";
}

void run_generators(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const GeneratorSet gens = generator_set(field);
    json list = json::array();
    std::vector<std::pair<std::string, const Generator*>> labelled;
    for (const Generator& g : gens.generators) {
        Delta d{0, 0, 0};
        d[static_cast<int>(g.id)] = 1;
        labelled.emplace_back(render(CanonicalFactorization{field, 1, 0, d}), &g);
    }
    if (e.json_mode()) {
        for (const auto& [label, g] : labelled) {
            list.push_back({{"label", label}, {"value", jquad(g->value)}, {"norm_abs", jint(g->norm_abs)}});
        }
        json payload{{"N", field.n()}, {"case", std::string(case_name(gens.case_tag))}, {"generators", list}};
        payload["kappa1"] = gens.kappa1 ? jint(*gens.kappa1) : json(nullptr);
        payload["kappa2"] = gens.kappa2 ? jint(*gens.kappa2) : json(nullptr);
        e.record("generators", payload);
        return;
    }
    e.text() << "case=" << case_name(gens.case_tag) << "\n";
    for (const auto& [label, g] : labelled) e.text() << label << "\t" << render(g->value) << "\n";
}

void run_member(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const QuadInt x = element_arg(field, o.p, o.q);
    const bool member = is_dnumber(x);
    std::optional<int> order;
    if (member) order = dnumber_order(x);
    if (e.json_mode()) {
        e.record("member", {{"element", jquad(x)},
                            {"dnumber", member},
                            {"order", order ? json(*order) : json(nullptr)}});
        return;
    }
    e.text() << "dnumber=" << yes_no(member);
    if (order) e.text() << " order=" << *order;
    e.text() << "\n";
}

void run_factor(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const QuadInt x = element_arg(field, o.p, o.q);
    const CanonicalFactorization f = canonical_factor(x);
    if (e.json_mode()) {
        e.record("factor", {{"element", jquad(x)}, {"factorization", jfactor(f)}});
        return;
    }
    e.text() << "ell=" << f.ell << " m=" << f.m << " delta=" << delta_string(f.delta) << " form=" << render(f) << "\n";
}

void run_divides(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const QuadInt y = element_arg(field, o.p, o.q);
    const QuadInt x = element_arg(field, o.p2, o.q2);
    const DivisibilityResult r = dnumber_divides(y, x);
    if (e.json_mode()) {
        e.record("divides", {{"divisor", jquad(y)},
                             {"dividend", jquad(x)},
                             {"divides", r.divides},
                             {"step", std::string(step_name(r.step))},
                             {"quotient", r.quotient ? jquad(*r.quotient) : json(nullptr)}});
        return;
    }
    e.text() << "divides=" << yes_no(r.divides);
    if (r.quotient) {
        e.text() << " quotient=" << render(*r.quotient);
    } else {
        e.text() << " step=" << step_name(r.step);
    }
    e.text() << "\n";
}

NormFilter norm_filter(const std::string& s)
{
    if (s == "any") return NormFilter::Any;
    if (s == "minus") return NormFilter::MinusOne;
    if (s == "plus") return NormFilter::PlusOne;
    throw UsageFailure("--norm must be any, minus or plus");
}

void run_enumerate(const Options& o, Emitter& e)
{
    const Rational bound = rational_arg(o.bound, "M");
    std::vector<DPlusElement> items;
    if (!o.field.empty()) {
        const QuadField field = field_arg(o.field);
        items = enumerate_field(field, bound, o.no_integers ? IntegerPolicy::Exclude : IntegerPolicy::Include);
    } else {
        EnumerateOptions opts;
        opts.include_integers = !o.no_integers;
        opts.norm_filter = norm_filter(o.norm);
        items = enumerate_all(bound, opts);
    }
    for (const DPlusElement& x : items) {
        if (e.json_mode()) {
            e.record("enumerate", {{"element", jquad(x.value)},
                                   {"factorization", jfactor(x.factorization)},
                                   {"is_integer", x.is_integer}});
        } else if (o.tsv) {
            e.text() << to_tsv(x) << "\n";
        } else {
            const std::string where = x.is_integer ? "ℤ" : "N=" + std::to_string(x.value.field().n());
            e.text() << render(x.value) << "\t" << x.approx << "\t" << where << "\t" << render(x.factorization) << "\n";
        }
    }
}

void run_pell(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const bool negative = negative_pell_solvable(field);
    const Integer bound = o.witness_bound.empty() ? Integer(1000) : integer_arg(o.witness_bound, "--witness-bound");
    if (bound < 1) throw UsageFailure("--witness-bound must be positive");
    const auto witness = pell_witness_search(field, bound);
    if (e.json_mode()) {
        json w = nullptr;
        if (witness) w = {{"kappa", jint(witness->kappa)}, {"n", jint(witness->n)}};
        e.record("pell", {{"N", field.n()},
                          {"negative_pell_solvable", negative},
                          {"witness_bound", jint(bound)},
                          {"witness", w}});
        return;
    }
    e.text() << "negative_pell=" << yes_no(negative);
    if (witness) {
        e.text() << " witness_kappa=" << witness->kappa << " witness_n=" << witness->n;
    } else {
        e.text() << " witness=none";
    }
    e.text() << "\n";
}

void run_qint(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const QuantumInt qi = quantum_int(field, long_arg(o.m, "m"));
    if (e.json_mode()) {
        e.record("qint", {{"N", field.n()}, {"m", qi.m}, {"value", jquad(qi.value)}});
        return;
    }
    e.text() << "[" << qi.m << "]=" << render(qi.value) << "\n";
}

json jdecomposition(const Decomposition& d)
{
    json coeffs = json::object();
    for (const auto& [j, lj] : d.coeffs) coeffs[std::to_string(j)] = jint(lj);
    return {{"target", jfactor(d.target)}, {"d_int", jint(d.d_int)}, {"coeffs", coeffs}};
}

void run_decompose(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const Integer ell = integer_arg(o.ell, "ell");
    const long m = long_arg(o.m, "m");
    std::optional<Integer> constraint;
    if (!o.dint_divides.empty()) constraint = integer_arg(o.dint_divides, "--dint-divides");
    const auto solutions = decompose_global_dim(field, ell, m, constraint);
    const bool refine = o.refine || o.modular_filter;

    for (const Decomposition& d : solutions) {
        std::vector<SimpleDimProfile> profiles;
        if (refine) profiles = refine_simple_dims(d, o.modular_filter);
        if (e.json_mode()) {
            json payload = jdecomposition(d);
            if (refine) {
                json list = json::array();
                for (const SimpleDimProfile& p : profiles) {
                    json parts = json::array();
                    for (const SimplePart& part : p.parts) parts.push_back({{"c", jint(part.c)}, {"j", part.j}});
                    list.push_back(parts);
                }
                payload["profiles"] = list;
            }
            e.record("decompose", payload);
            continue;
        }
        e.text() << "d_int=" << d.d_int;
        for (const auto& [j, lj] : d.coeffs) e.text() << " l" << j << "=" << lj;
        e.text() << "\n";
        for (const SimpleDimProfile& p : profiles) {
            std::map<std::string, int> counts;
            std::vector<std::string> order;
            for (const SimplePart& part : p.parts) {
                const std::string dim = part_dimension(part);
                if (counts[dim]++ == 0) order.push_back(dim);
            }
            e.text() << "  simple:";
            for (const std::string& dim : order) e.text() << " " << counts[dim] << "×" << dim;
            e.text() << "\n";
        }
    }
    if (!e.json_mode() && solutions.empty()) e.text() << "no solutions\n";
}

void run_screen(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const QuadInt target = element_arg(field, o.p, o.q);
    const auto candidates = kronecker_screen(target, o.precision);
    if (e.json_mode()) {
        json list = json::array();
        for (const auto& c : candidates) list.push_back(c.orders);
        e.record("screen", {{"target", jquad(target)}, {"candidates", list}, {"eliminated", candidates.empty()}});
        return;
    }
    e.text() << "candidates=" << candidates.size() << (candidates.empty() ? " eliminated" : "") << "\n";
    for (const auto& c : candidates) {
        e.text() << "  1";
        for (int n : c.orders) e.text() << " + 4cos²(π/" << n << ")";
        e.text() << "\n";
    }
}

void run_table(const Options& o, Emitter& e)
{
    if (o.table == "units") {
        const auto rows = tables::unit_table();
        if (!e.json_mode()) {
            e.text() << tables::format_unit_table(rows);
            return;
        }
        for (const auto& r : rows) {
            e.record("table units", {{"N", r.n}, {"t", jint(r.t)}, {"u", jint(r.u)}, {"norm", r.norm}});
        }
    } else if (o.table == "kappa") {
        const auto rows = tables::kappa_table();
        if (!e.json_mode()) {
            e.text() << tables::format_kappa_table(rows);
            return;
        }
        for (const auto& r : rows) {
            e.record("table kappa",
                     {{"N", r.n}, {"t", jint(r.t)}, {"kappa1", jint(r.kappa1)}, {"kappa2", jint(r.kappa2)}});
        }
    } else {
        std::size_t failures = 0;
        for (const auto& row : tables::quantum_group_rows()) {
            const auto c = tables::check_quantum_group_row(row);
            if (!c.ok()) ++failures;
            if (e.json_mode()) {
                e.record("table fig3", {{"family", row.family},
                                        {"rank", row.rank},
                                        {"level", row.level},
                                        {"value", jquad(c.value)},
                                        {"factorization", jfactor(c.factor)},
                                        {"dnumber", c.is_dnumber},
                                        {"in_dplus", c.in_dplus},
                                        {"factor_matches", c.factor_matches}});
            } else {
                e.text() << row.family << "_{" << row.rank << "," << row.level << "}\tN=" << row.n << "\t"
                         << render(c.factor) << "\t" << render(c.value) << "\t" << (c.ok() ? "ok" : "MISMATCH") << "\n";
            }
        }
        if (failures) raise(ErrorKind::InternalInconsistency, std::to_string(failures) + " rows failed validation");
    }
}

void run_complex(const Options& o, Emitter& e)
{
    const QuadField field = field_arg(o.n);
    const ComplexClassification c = complex_classify(field);
    const QuadInt x = element_arg(field, o.p, o.q);
    const bool member = c.member(x);
    const bool by_trace = is_dnumber(x);
    if (member != by_trace) raise(ErrorKind::InternalInconsistency, "classification disagrees with the trace test");
    static const std::map<ComplexCase, std::string> names{
        {ComplexCase::Generic, "generic"}, {ComplexCase::Gaussian, "gaussian"}, {ComplexCase::Eisenstein, "eisenstein"}};
    if (e.json_mode()) {
        e.record("complex", {{"element", jquad(x)},
                             {"case", names.at(c.kind)},
                             {"description", c.description},
                             {"dnumber", member}});
        return;
    }
    e.text() << "case=" << names.at(c.kind) << " dnumber=" << yes_no(member) << "\n" << c.description << "\n";
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact arithmetic for d-numbers in quadratic fields", "qdn"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON records, one per line");
    app.add_option("--budget", o.budget, "Pollard-rho iteration budget for factorization")->check(CLI::PositiveNumber);

    std::map<CLI::App*, std::function<void(const Options&, Emitter&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, auto fn) {
        CLI::App* s = app.add_subcommand(name, help);
        handlers[s] = fn;
        return s;
    };
    auto with_element = [&](CLI::App* s) {
        s->add_option("N", o.n)->required();
        s->add_option("p", o.p)->required();
        s->add_option("q", o.q)->required();
    };

    sub("unit", "Fundamental unit (t + u√N)/2", run_unit)->add_option("N", o.n)->required();
    sub("kappa", "kappa1, kappa2 for a norm +1 unit", run_kappa)->add_option("N", o.n)->required();
    sub("generators", "d-number generators of the field", run_generators)->add_option("N", o.n)->required();
    with_element(sub("member", "d-number test and order for (p + q√N)/2", run_member));
    with_element(sub("factor", "Canonical factorization of (p + q√N)/2", run_factor));
    {
        CLI::App* s = sub("divides", "Does (p1 + q1√N)/2 divide (p2 + q2√N)/2", run_divides);
        s->add_option("N", o.n)->required();
        s->add_option("p1", o.p)->required();
        s->add_option("q1", o.q)->required();
        s->add_option("p2", o.p2)->required();
        s->add_option("q2", o.q2)->required();
    }
    {
        CLI::App* s = sub("enumerate", "Elements with alpha >= sigma(alpha) >= 1 up to M", run_enumerate);
        s->add_option("M", o.bound)->required();
        s->add_option("--field", o.field, "Restrict to one field");
        s->add_flag("--tsv", o.tsv, "Tab separated records");
        s->add_flag("--no-integers", o.no_integers, "Omit rational integers");
        s->add_option("--norm", o.norm, "any, minus or plus: filter fields by unit norm");
    }
    {
        CLI::App* s = sub("pell", "Negative Pell solvability and a witness search", run_pell);
        s->add_option("N", o.n)->required();
        s->add_option("--witness-bound", o.witness_bound, "Search bound for kappa and n");
    }
    {
        CLI::App* s = sub("qint", "Quantum integer [m]", run_qint);
        s->add_option("N", o.n)->required();
        s->add_option("m", o.m)->required();
    }
    {
        CLI::App* s = sub("decompose", "Solve d_int + sum l_j eps^j = ell eps^m", run_decompose);
        s->add_option("N", o.n)->required();
        s->add_option("ell", o.ell)->required();
        s->add_option("m", o.m)->required();
        s->add_option("--dint-divides", o.dint_divides, "d_int ranges over the divisors of D");
        s->add_flag("--refine", o.refine, "Split each l_j into simple dimensions");
        s->add_flag("--modular-filter", o.modular_filter, "Require target / dim^2 to be integral (implies --refine)");
    }
    {
        CLI::App* s = sub("screen", "Small-dimension screen for target (p + q√N)/2", run_screen);
        with_element(s);
        s->add_option("--precision", o.precision, "Interval precision in bits")->check(CLI::Range(16u, 1u << 16));
    }
    sub("table", "Regenerate a table", run_table)
        ->add_option("name", o.table)
        ->required()
        ->check(CLI::IsMember({"units", "kappa", "fig3"}));
    with_element(sub("complex", "d-number classification for N < 0", run_complex));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return Success;
        }
        err << "usage: " << e.what() << "\n";
        return UsageError;
    }

    // The budget is per invocation; put the previous one back on exit.
    struct BudgetScope {
        FactorBudget saved = default_budget();
        ~BudgetScope() { set_default_budget(saved); }
    } scope;
    if (o.budget) {
        FactorBudget b = scope.saved;
        b.rho_iterations = o.budget;
        set_default_budget(b);
    }

    Emitter emitter(o.json, out);
    try {
        for (CLI::App* s : app.get_subcommands()) handlers.at(s)(o, emitter);
    } catch (const UsageFailure& e) {
        err << "usage: " << e.what() << "\n";
        return UsageError;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::FactorizationLimit ? BudgetExceeded : DomainError;
    }
    return Success;
}

} // namespace qdn::cli
