#include "superalg/cli.hpp"

#include "superalg/io.hpp"
#include "superalg/sweeps.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

namespace superalg::cli {

namespace {

using io::Document;
using io::Json;

// Thrown for anything the user has to fix in the invocation or its inputs.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Style {
    bool color = false;
    bool quiet = false;
    std::string pass() const { return color ? "\033[32mPASS\033[0m" : "PASS"; }
    std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string labels_of(const GradedBasis& basis, const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ", ";
        s += idx[k] < basis.dim() ? basis.label(idx[k]) : std::to_string(idx[k]);
    }
    return s + ")";
}

std::string combination_text(const GradedBasis& basis, const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (v[i] != 1) s += to_string(v[i]) + " ";
        s += basis.label(i);
    }
    return s.empty() ? "0" : s;
}

void print_subspace(std::ostream& out, const std::string& name, const GradedBasis& basis, const Subspace& s) {
    out << name << " (dim " << s.dim() << ")\n";
    for (const auto& v : s.basis()) out << "  " << combination_text(basis, v) << "\n";
}

const BilinearForm& named_form(const Document& doc, const std::string& name) {
    auto it = doc.forms.find(name);
    if (it == doc.forms.end()) throw UsageError("no form named '" + name + "' in the document");
    return it->second;
}

const LinearMap& named_map(const io::ParamsDocument& p, const std::string& name) {
    auto it = p.maps.find(name);
    if (it == p.maps.end()) throw UsageError("parameters lack map '" + name + "'");
    return it->second;
}

const Vec& named_vector(const io::ParamsDocument& p, const std::string& name) {
    auto it = p.vectors.find(name);
    if (it == p.vectors.end()) throw UsageError("parameters lack vector '" + name + "'");
    return it->second;
}

std::optional<Vec> optional_vector(const io::ParamsDocument& p, const std::string& name) {
    auto it = p.vectors.find(name);
    return it == p.vectors.end() ? std::nullopt : std::optional<Vec>(it->second);
}

Scalar scalar_or(const io::ParamsDocument& p, const std::string& name, Scalar fallback) {
    auto it = p.scalars.find(name);
    return it == p.scalars.end() ? fallback : it->second;
}

std::optional<Scalar> optional_scalar(const io::ParamsDocument& p, const std::string& name) {
    auto it = p.scalars.find(name);
    return it == p.scalars.end() ? std::nullopt : std::optional<Scalar>(it->second);
}

Subspace named_subspace(const io::ParamsDocument& p, const std::string& name, std::size_t n) {
    auto it = p.subspaces.find(name);
    if (it == p.subspaces.end()) throw UsageError("parameters lack subspace '" + name + "'");
    return Subspace(n, it->second);
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        io::save_file(path, text);
}

// ---- verify -------------------------------------------------------------

struct Verdict {
    bool pass = true;
    std::string detail;
};

Verdict from_report(const Report& r, const GradedBasis& basis) {
    Verdict v{r.pass, r.detail};
    if (!r.pass && !r.witness.empty()) {
        std::string w = "witness " + labels_of(basis, r.witness);
        if (!r.residual.empty()) w += " gives " + combination_text(basis, r.residual);
        v.detail = v.detail.empty() ? w : v.detail + "; " + w;
    }
    return v;
}

Verdict form_verdict(const LieSuperalgebra& g, const BilinearForm& f, bool quadratic, Exec exec) {
    const FormReport r = classify_form(g, f, exec);
    const std::vector<std::pair<const char*, bool>> flags =
        quadratic ? std::vector<std::pair<const char*, bool>>{{"supersymmetric", r.supersymmetric},
                                                              {"invariant", r.invariant},
                                                              {"nondegenerate", r.nondegenerate}}
                  : std::vector<std::pair<const char*, bool>>{{"skew_supersymmetric", r.skew_supersymmetric},
                                                              {"cocycle", r.cocycle},
                                                              {"nondegenerate", r.nondegenerate}};
    for (const auto& [name, ok] : flags) {
        if (ok) continue;
        std::string detail = std::string("not ") + name;
        if (auto it = r.witnesses.find(name); it != r.witnesses.end() && !it->second.empty())
            detail += " at " + labels_of(g.basis(), it->second);
        return {false, detail};
    }
    return {};
}

Verdict run_check(const CatalogEntry& entry, const std::string& check, Exec exec) {
    const LieSuperalgebra& g = entry.value.algebra;
    const auto colon = check.find(':');
    const std::string head = check.substr(0, colon), arg = colon == std::string::npos ? "" : check.substr(colon + 1);
    if (head == "jacobi") return from_report(graded_jacobi_check(g, exec), g.basis());
    if (head == "quadratic" || head == "symplectic") {
        auto it = entry.forms.find(arg);
        if (it == entry.forms.end()) throw UsageError("no form named '" + arg + "' in the document");
        return form_verdict(g, it->second, head == "quadratic", exec);
    }
    if (head == "derivation") {
        auto it = entry.maps.find(arg);
        if (it == entry.maps.end()) throw UsageError("no map named '" + arg + "' in the document");
        return from_report(superderivation_check(g, it->second, exec), g.basis());
    }
    if (head == "center") {
        const Subspace z = center(g);
        return z.dim() > 0 ? Verdict{} : Verdict{false, "center is zero"};
    }
    if (head == "nilpotent") {
        if (is_nilpotent(g)) return {};
        const auto series = lower_central_series(g);
        return {false, "lower central series stalls at dim " + std::to_string(series.back().dim())};
    }
    try {
        return from_report(check_property(entry, check), g.basis());
    } catch (const AlgebraError& e) {
        if (e.code() == ErrorCode::BadParams) throw UsageError(e.what());
        throw;
    }
}

CatalogEntry entry_of(const Document& doc) {
    CatalogEntry e;
    e.value.algebra = doc.algebra;
    e.forms = doc.forms;
    e.maps = doc.maps;
    if (doc.metadata.contains("associative")) e.associative = io::to_entry(doc).associative;
    return e;
}

int cmd_verify(const std::string& file, const std::string& checks, bool parallel, const Style& style,
               std::ostream& out) {
    const Document doc = io::load_file(file);
    std::vector<std::string> list = split_list(checks);
    if (list.empty()) {
        if (doc.metadata.contains("expected_properties") && doc.metadata["expected_properties"].is_array())
            for (const auto& p : doc.metadata["expected_properties"]) list.push_back(p.get<std::string>());
        if (list.empty()) list.push_back("jacobi");
    }
    const CatalogEntry entry = entry_of(doc);
    std::vector<Verdict> verdicts(list.size());
    std::vector<std::string> errors(list.size());
    // Checks are independent and the library is pure, so they may run side
    // by side; output order stays the order of the list.
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < list.size(); ++i) {
        try {
            verdicts[i] = run_check(entry, list[i], parallel ? Exec::Parallel : Exec::Serial);
        } catch (const UsageError& e) {
            errors[i] = e.what();
        } catch (const AlgebraError& e) {
            verdicts[i] = {false, e.what()};
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw UsageError(e);
    bool all = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
        all = all && verdicts[i].pass;
        out << (verdicts[i].pass ? style.pass() : style.fail()) << " " << list[i];
        if (!style.quiet && !verdicts[i].pass && !verdicts[i].detail.empty()) out << ": " << verdicts[i].detail;
        out << "\n";
    }
    return all ? kPass : kCheckFailed;
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
    std::string kind, base, params, output, quadratic = "B", symplectic = "omega";
};

Json subspace_json(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& v : s.basis()) rows.push_back(io::vector_json(v));
    return rows;
}

Document extension_document(const std::string& kind, const Extension& ext, const Subspace* a, const Subspace* b) {
    Document doc;
    doc.algebra = ext.value.algebra;
    if (ext.value.quadratic) doc.forms.emplace("B", *ext.value.quadratic);
    if (ext.value.symplectic) doc.forms.emplace("omega", *ext.value.symplectic);
    Json added = Json::object();
    for (const auto& [role, index] : ext.added) added[role] = doc.algebra.basis().label(index);
    doc.metadata = {{"construction", kind}, {"added", added}};
    if (a && b) doc.metadata["manin"] = {{"a", subspace_json(*a)}, {"b", subspace_json(*b)}};
    return doc;
}

Ext1Data ext1_from(const io::ParamsDocument& p) {
    Ext1Data d;
    d.d = named_map(p, "D");
    auto mode = p.options.find("mode");
    const std::string m = mode == p.options.end() ? "double" : mode->second;
    if (m == "double")
        d.mode = Ext1Mode::Double;
    else if (m == "generalized")
        d.mode = Ext1Mode::Generalized;
    else
        throw UsageError("option mode must be 'double' or 'generalized'");
    d.b0 = optional_vector(p, "b0");
    d.x0 = optional_vector(p, "x0").value_or(zeros(d.d.dim()));
    d.k = scalar_or(p, "k", 0);
    return d;
}

GodeData gode_from(const io::ParamsDocument& p) {
    GodeData d;
    d.dbar = named_map(p, "Dbar");
    d.x0 = named_vector(p, "x0");
    d.k = scalar_or(p, "k", 0);
    d.c1 = optional_vector(p, "c1");
    d.lambda = optional_scalar(p, "lambda");
    return d;
}

Ext2Data ext2_from(const io::ParamsDocument& p) {
    Ext2Data d;
    d.d = named_map(p, "D");
    d.dbar = named_map(p, "Dbar");
    d.x0 = named_vector(p, "x0");
    d.x1 = named_vector(p, "x1");
    d.k = scalar_or(p, "k", 0);
    d.c0 = optional_vector(p, "c0");
    d.c1 = optional_vector(p, "c1");
    d.lambda = optional_scalar(p, "lambda");
    d.alpha = scalar_or(p, "alpha", 0);
    return d;
}

io::ParamsDocument params_from(const std::string& kind, const SplitResult& sp) {
    io::ParamsDocument p;
    p.kind = kind;
    if (sp.ext1) {
        const Ext1Data& d = *sp.ext1;
        p.maps.emplace("D", d.d);
        p.options["mode"] = d.mode == Ext1Mode::Double ? "double" : "generalized";
        if (d.b0) p.vectors["b0"] = *d.b0;
        p.vectors["x0"] = d.x0;
        p.scalars["k"] = d.k;
    } else if (sp.gode) {
        const GodeData& d = *sp.gode;
        p.maps.emplace("Dbar", d.dbar);
        p.vectors["x0"] = d.x0;
        if (d.c1) p.vectors["c1"] = *d.c1;
        p.scalars["k"] = d.k;
        if (d.lambda) p.scalars["lambda"] = *d.lambda;
    } else if (sp.ext2) {
        const Ext2Data& d = *sp.ext2;
        p.maps.emplace("D", d.d);
        p.maps.emplace("Dbar", d.dbar);
        p.vectors["x0"] = d.x0;
        p.vectors["x1"] = d.x1;
        if (d.c0) p.vectors["c0"] = *d.c0;
        if (d.c1) p.vectors["c1"] = *d.c1;
        p.scalars["k"] = d.k;
        if (d.lambda) p.scalars["lambda"] = *d.lambda;
        p.scalars["alpha"] = d.alpha;
    } else {
        throw AlgebraError(ErrorCode::ConditionViolated,
                           "the split is a direct sum (" + to_string(sp.kind) + "); there are no construction parameters");
    }
    return p;
}

Document construct_document(const ConstructArgs& a) {
    const Document base = io::load_file(a.base);
    const io::ParamsDocument p = io::load_params(io::read_file(a.params), base.algebra.basis());
    if (p.kind != a.kind) throw UsageError("parameters are for '" + p.kind + "', not '" + a.kind + "'");
    const LieSuperalgebra& g = base.algebra;
    if (a.kind == "trivial_double_extension") {
        auto v = p.options.find("variant");
        const std::string variant = v == p.options.end() ? "even" : v->second;
        if (variant != "even" && variant != "odd") throw UsageError("option variant must be 'even' or 'odd'");
        Extension ext = trivial_double_extension(g, variant == "odd" ? Variant::Odd : Variant::Even);
        return extension_document(a.kind, ext, nullptr, nullptr);
    }
    const BilinearForm& omega = named_form(base, a.symplectic);
    if (a.kind == "symplectic_double_extension")
        return extension_document(a.kind, symplectic_double_extension(g, omega, ext1_from(p)), nullptr, nullptr);
    const BilinearForm& b = named_form(base, a.quadratic);
    if (a.kind == "gode_1d_symplectic")
        return extension_document(a.kind, gode_1d_symplectic(g, b, omega, gode_from(p)), nullptr, nullptr);
    if (a.kind == "gde_2d_symplectic")
        return extension_document(a.kind, gde_2d_symplectic(g, b, omega, ext2_from(p)), nullptr, nullptr);
    if (a.kind == "manin_double_extension") {
        const Subspace pa = named_subspace(p, "a", g.dim()), pb = named_subspace(p, "b", g.dim());
        ManinExtension m = p.maps.count("D") ? manin_double_extension(g, b, omega, pa, pb, ext2_from(p))
                                             : manin_double_extension(g, b, omega, pa, pb, gode_from(p));
        return extension_document(a.kind, m.ext, &m.a, &m.b);
    }
    throw UsageError("unknown construction '" + a.kind + "'");
}

int cmd_fuzz(const std::string& kind, std::size_t count, std::uint64_t seed, const Style& style,
             std::ostream& out) {
    std::vector<sweeps::Op> ops;
    if (kind == "all") {
        ops = sweeps::all_ops();
    } else if (auto op = sweeps::parse_op(kind)) {
        ops.push_back(*op);
    } else {
        std::string names;
        for (auto op : sweeps::all_ops()) names += " " + sweeps::to_string(op);
        throw UsageError("--fuzz takes a sweep name:" + names + " or all");
    }
    bool all = true;
    for (auto op : ops) {
        const sweeps::Outcome r = sweeps::round_trip_sweep(op, count, seed);
        const bool ok = r.ok() && r.accepted == count;
        all = all && ok;
        out << (ok ? style.pass() : style.fail()) << " " << sweeps::to_string(op);
        if (!style.quiet) out << ": " << r.passed << "/" << r.accepted << " round trips, " << r.attempts << " draws";
        out << "\n";
        if (!style.quiet)
            for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    return all ? kPass : kCheckFailed;
}

// ---- decompose ----------------------------------------------------------

struct DecomposeArgs {
    std::string file, quadratic, symplectic, output, params_out;
};

// Coordinates of `s` inside the span of the base positions.
Subspace restrict_to(const Subspace& s, const std::vector<std::size_t>& positions) {
    const std::size_t n = s.ambient();
    std::vector<Vec> units;
    for (auto p : positions) units.push_back(unit(n, p));
    const Subspace inside = s.intersect(Subspace(n, units));
    std::vector<Vec> rows;
    for (const auto& v : inside.basis()) {
        Vec r;
        for (auto p : positions) r.push_back(v[p]);
        rows.push_back(r);
    }
    return Subspace(positions.size(), rows);
}

Subspace subspace_from(const Json& rows, std::size_t n) {
    std::vector<Vec> vs;
    if (!rows.is_array()) throw UsageError("metadata subspaces must be lists of vectors");
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != n) throw UsageError("metadata subspace vector has the wrong length");
        Vec v;
        for (const auto& x : r) {
            auto s = x.is_string() ? parse_scalar(x.get<std::string>()) : std::nullopt;
            if (!s) throw UsageError("metadata subspace entry is not a canonical rational");
            v.push_back(*s);
        }
        vs.push_back(v);
    }
    return Subspace(n, vs);
}

int cmd_decompose(const DecomposeArgs& a, const Style& style, std::ostream& out) {
    const Document doc = io::load_file(a.file);
    const LieSuperalgebra& g = doc.algebra;
    const std::size_t n = g.dim();
    const std::string sname = a.symplectic.empty() ? "omega" : a.symplectic;
    std::string qname = a.quadratic;
    if (qname.empty() && doc.forms.count("B")) qname = "B";
    const BilinearForm& omega = named_form(doc, sname);
    const BilinearForm* b = qname.empty() ? nullptr : &named_form(doc, qname);

    const Json& meta = doc.metadata;
    const bool pinned = meta.contains("construction") && meta.contains("added") && meta["added"].is_object();
    std::string kind;
    SplitResult sp;
    std::optional<std::pair<Subspace, Subspace>> base_pair;
    if (pinned) {
        kind = meta["construction"].is_string() ? meta["construction"].get<std::string>() : "";
        auto at = [&](const char* role) {
            if (!meta["added"].contains(role) || !meta["added"][role].is_string())
                throw UsageError(std::string("metadata lacks the added vector '") + role + "'");
            auto i = g.basis().index_of(meta["added"][role].get<std::string>());
            if (!i) throw UsageError(std::string("added vector '") + role + "' is not a basis label");
            return unit(n, *i);
        };
        if (kind == "symplectic_double_extension") {
            sp = split_symplectic_along(g, omega, at("e*"), at("e"));
        } else if (kind == "gode_1d_symplectic" || kind == "gde_2d_symplectic" || kind == "manin_double_extension") {
            if (!b) throw UsageError(kind + " needs a quadratic form");
            sp = meta["added"].contains("e*")
                     ? split_quadratic_symplectic_along(g, *b, omega, {at("e*")}, {at("e")})
                     : split_quadratic_symplectic_along(g, *b, omega, {at("e0*"), at("e1*")}, {at("e0"), at("e1")});
            if (kind == "manin_double_extension") {
                if (!meta.contains("manin")) throw UsageError("metadata lacks the Manin pair");
                std::vector<std::size_t> positions;
                std::set<std::size_t> added;
                for (const auto& [role, label] : meta["added"].items()) added.insert(*g.basis().index_of(label));
                for (std::size_t i = 0; i < n; ++i)
                    if (!added.count(i)) positions.push_back(i);
                base_pair.emplace(restrict_to(subspace_from(meta["manin"]["a"], n), positions),
                                  restrict_to(subspace_from(meta["manin"]["b"], n), positions));
            }
        } else {
            throw UsageError("cannot decompose a '" + kind + "' construction");
        }
    } else if (b) {
        sp = split_quadratic_symplectic(g, *b, omega);
        kind = sp.gode ? "gode_1d_symplectic" : "gde_2d_symplectic";
    } else {
        sp = split_symplectic(g, omega);
        kind = "symplectic_double_extension";
    }
    if (!round_trip_holds(g, b ? std::optional<BilinearForm>(*b) : std::nullopt, omega, sp))
        throw AlgebraError(ErrorCode::RoundTripFailed, "the recovered base does not rebuild the input");

    Document base;
    base.algebra = sp.base.algebra;
    if (b && sp.base.quadratic) base.forms.emplace(qname, *sp.base.quadratic);
    if (sp.base.symplectic) base.forms.emplace(sname, *sp.base.symplectic);
    io::ParamsDocument params = params_from(kind, sp);
    if (base_pair) {
        params.subspaces["a"] = base_pair->first.basis();
        params.subspaces["b"] = base_pair->second.basis();
    }
    if (!a.output.empty()) io::save_file(a.output, io::save(base));
    if (!a.params_out.empty()) io::save_file(a.params_out, io::save_params(params));
    out << style.pass() << " decompose " << to_string(sp.kind);
    if (!style.quiet) out << ": dim " << n << " -> " << base.algebra.dim() << " (" << kind << ")";
    out << "\n";
    if (a.output.empty() && !style.quiet) out << io::save(base);
    return kPass;
}

// ---- manin --------------------------------------------------------------

int cmd_manin_split(const std::string& file, const std::string& qname, const std::string& sname,
                    const std::string& output, const Style& style, std::ostream& out) {
    const Document doc = io::load_file(file);
    const LieSuperalgebra& g = doc.algebra;
    const BilinearForm& b = named_form(doc, qname);
    const BilinearForm& omega = named_form(doc, sname);
    const ManinSplit m = manin_split(g, b, omega);
    const bool special = special_check(g, b, omega, m.a, m.b);
    if (!style.quiet) {
        out << "spectrum of " << (omega.parity() == b.parity() ? "Delta" : "[Delta, Delta]") << ":";
        for (const auto& e : m.spectrum) out << " " << to_string(e.value) << "^" << e.multiplicity;
        out << "\n";
        print_subspace(out, "a", g.basis(), m.a);
        print_subspace(out, "b", g.basis(), m.b);
    }
    out << (special ? style.pass() : style.fail()) << " special\n";
    if (!output.empty()) {
        Document result = doc;
        result.metadata["manin"] = {{"a", subspace_json(m.a)}, {"b", subspace_json(m.b)}};
        io::save_file(output, io::save(result));
    }
    return special ? kPass : kCheckFailed;
}

int cmd_manin_check(const std::string& file, const std::string& qname, const std::string& sname,
                    const Style& style, std::ostream& out) {
    const Document doc = io::load_file(file);
    const LieSuperalgebra& g = doc.algebra;
    if (!doc.metadata.contains("manin")) throw UsageError("document metadata has no Manin pair");
    const Subspace a = subspace_from(doc.metadata["manin"]["a"], g.dim());
    const Subspace bb = subspace_from(doc.metadata["manin"]["b"], g.dim());
    const BilinearForm& b = named_form(doc, qname);
    const Verdict pair = from_report(manin_pair_report(g, b, a, bb), g.basis());
    out << (pair.pass ? style.pass() : style.fail()) << " manin_pair";
    if (!pair.pass && !style.quiet && !pair.detail.empty()) out << ": " << pair.detail;
    out << "\n";
    bool special = false;
    if (pair.pass) special = special_check(g, b, named_form(doc, sname), a, bb);
    out << (special ? style.pass() : style.fail()) << " special\n";
    return pair.pass && special ? kPass : kCheckFailed;
}

// ---- forms --------------------------------------------------------------

int cmd_forms(const std::string& file, const std::string& parity_text, bool cocycle, bool exists,
              const Style& style, std::ostream& out) {
    const Document doc = io::load_file(file);
    auto parity = parse_parity(parity_text);
    if (!parity) throw UsageError("--parity must be 'even' or 'odd'");
    const FormSpace space = invariant_form_space(doc.algebra, *parity,
                                                 cocycle ? Symmetry::SkewSupersymmetricCocycle : Symmetry::Supersymmetric);
    const std::string what = std::string(cocycle ? "skew cocycle" : "invariant supersymmetric") + " " + parity_text;
    out << what << " forms: dim " << space.dim() << "\n";
    if (!style.quiet)
        for (std::size_t k = 0; k < space.dim(); ++k)
            out << "  form " << k << ": " << to_string(space.basis_forms[k].matrix()) << "\n";
    if (!exists) return kPass;
    const NondegenerateAnswer answer = exists_nondegenerate(space);
    const bool yes = answer.verdict == superalg::Verdict::Yes;
    out << (yes ? style.pass() : style.fail()) << " exists_nondegenerate: " << to_string(answer.verdict)
        << (answer.exact ? "" : " (sampled)") << "\n";
    if (yes && answer.witness && !style.quiet) out << "  witness: " << to_string(answer.witness->matrix()) << "\n";
    return yes ? kPass : kCheckFailed;
}

// ---- catalog ------------------------------------------------------------

int cmd_catalog(const std::string& name, std::optional<int> n, const std::string& output, bool list,
                std::ostream& out) {
    if (list) {
        for (const auto& c : catalog_names()) out << c << "\n";
        return kPass;
    }
    if (name.empty()) throw UsageError("catalog needs an entry name (or --list)");
    CatalogEntry e;
    try {
        e = build_catalog(name, n);
    } catch (const AlgebraError& err) {
        if (err.code() == ErrorCode::BadParams || err.code() == ErrorCode::UnknownEntry) throw UsageError(err.what());
        throw;
    }
    Document doc = io::to_document(e);
    write_or_print(output, io::save(doc), out);
    return kPass;
}

Style style_from_env(bool terminal, bool quiet) {
    Style s;
    s.quiet = quiet;
    const char* env = std::getenv("SUPERALG_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "always")
        s.color = true;
    else if (mode == "auto")
        s.color = terminal;
    else if (mode != "never")
        throw UsageError("SUPERALG_COLOR must be auto, never or always");
    return s;
}

}  // namespace

std::vector<std::string> construction_kinds() {
    return {"trivial_double_extension", "symplectic_double_extension", "gode_1d_symplectic", "gde_2d_symplectic",
            "manin_double_extension"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal) {
    CLI::App app{"Exact computations with Lie superalgebras, their forms and double extensions", "superalg"};
    app.require_subcommand(1);
    bool quiet = false, parallel = false;
    app.add_flag("--quiet,-q", quiet, "Print only PASS/FAIL lines");
    app.add_flag("--parallel", parallel, "Run independent checks on several threads");

    std::string file, checks;
    auto* verify = app.add_subcommand("verify", "Check properties of a document");
    verify->add_option("file", file, "Document (.lsa.json)")->required();
    verify->add_option("--check", checks,
                       "Comma list: jacobi, nilpotent, center, quadratic:F, symplectic:F, derivation:M, "
                       "invertible:M, skew:M:F, associative, supercommutative (default: the document's "
                       "expected properties, else jacobi)");

    ConstructArgs ca;
    std::size_t fuzz = 0;
    std::uint64_t seed = sweeps::kDefaultSeed;
    auto* construct = app.add_subcommand("construct", "Build an extension from a base and parameters");
    construct->add_option("kind", ca.kind, "Construction name, or a sweep name with --fuzz")->required();
    construct->add_option("--base", ca.base, "Base document");
    construct->add_option("--params", ca.params, "Parameter document");
    construct->add_option("-o,--output", ca.output, "Output document (stdout when omitted)");
    construct->add_option("--quadratic", ca.quadratic, "Name of the base quadratic form")->capture_default_str();
    construct->add_option("--symplectic", ca.symplectic, "Name of the base symplectic form")->capture_default_str();
    construct->add_option("--fuzz", fuzz, "Run N random construct/split round trips instead");
    construct->add_option("--seed", seed, "Seed for --fuzz")->capture_default_str();

    DecomposeArgs da;
    auto* decompose = app.add_subcommand("decompose", "Undo one construction step");
    decompose->add_option("file", da.file, "Document to split")->required();
    decompose->add_option("--quadratic", da.quadratic, "Quadratic form name (default B when present)");
    decompose->add_option("--symplectic", da.symplectic, "Symplectic form name (default omega)");
    decompose->add_option("-o,--output", da.output, "Where to write the base document");
    decompose->add_option("--params-out", da.params_out, "Where to write the recovered parameters");

    std::string mq = "B", ms = "omega", mout;
    auto* manin = app.add_subcommand("manin", "Manin splits of quadratic symplectic algebras");
    manin->require_subcommand(1);
    auto* msplit = manin->add_subcommand("split", "Split by the spectrum of the symplectic derivation");
    msplit->add_option("file", file, "Document")->required();
    msplit->add_option("--quadratic", mq, "Quadratic form name")->capture_default_str();
    msplit->add_option("--symplectic", ms, "Symplectic form name")->capture_default_str();
    msplit->add_option("-o,--output", mout, "Write the document with the pair in its metadata");
    auto* mcheck = manin->add_subcommand("check", "Check the Manin pair stored in the metadata");
    mcheck->add_option("file", file, "Document")->required();
    mcheck->add_option("--quadratic", mq, "Quadratic form name")->capture_default_str();
    mcheck->add_option("--symplectic", ms, "Symplectic form name")->capture_default_str();

    std::string cname, cout_path;
    std::optional<int> cn;
    bool clist = false;
    auto* cat = app.add_subcommand("catalog", "Write a catalog entry");
    cat->add_option("name", cname, "Entry name");
    cat->add_option("-n", cn, "Size parameter for A_n and h_tensor_A_n");
    cat->add_option("-o,--output", cout_path, "Output document (stdout when omitted)");
    cat->add_flag("--list", clist, "List entry names");

    std::string fparity;
    bool finv = false, fcoc = false, fexists = false;
    auto* forms = app.add_subcommand("forms", "Spaces of invariant forms or scalar 2-cocycles");
    forms->add_option("file", file, "Document")->required();
    forms->add_option("--parity", fparity, "even or odd")->required();
    auto* inv_flag = forms->add_flag("--invariant", finv, "Supersymmetric invariant forms (default)");
    forms->add_flag("--cocycle", fcoc, "Skew-supersymmetric 2-cocycles")->excludes(inv_flag);
    forms->add_flag("--exists-nondegenerate", fexists, "Decide whether the space has a nondegenerate member");

    if (args.empty()) {
        err << app.help();
        return kUsage;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        const Style style = style_from_env(terminal, quiet);
        if (*verify) return cmd_verify(file, checks, parallel, style, out);
        if (*construct) {
            if (fuzz > 0) return cmd_fuzz(ca.kind, fuzz, seed, style, out);
            if (ca.base.empty() || ca.params.empty()) throw UsageError("construct needs --base and --params");
            const auto kinds = construction_kinds();
            if (std::find(kinds.begin(), kinds.end(), ca.kind) == kinds.end())
                throw UsageError("unknown construction '" + ca.kind + "'");
            write_or_print(ca.output, io::save(construct_document(ca)), out);
            return kPass;
        }
        if (*decompose) return cmd_decompose(da, style, out);
        if (*msplit) return cmd_manin_split(file, mq, ms, mout, style, out);
        if (*mcheck) return cmd_manin_check(file, mq, ms, style, out);
        if (*cat) return cmd_catalog(cname, cn, cout_path, clist, out);
        if (*forms) return cmd_forms(file, fparity, fcoc, fexists, style, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const io::DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::BadParams ? kUsage : kCheckFailed;
    }
    err << app.help();
    return kUsage;
}

}  // namespace superalg::cli
