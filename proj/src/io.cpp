#include "superalg/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace superalg::io {

DocumentError::DocumentError(ErrorCode code, std::size_t line, const std::string& reason)
    : AlgebraError(code, (line ? "line " + std::to_string(line) + ": " : std::string()) + reason),
      line_(line),
      reason_(reason) {}

namespace {

std::size_t line_at(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte; ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

// Strict reader over an already parsed document. Errors point at the first
// line containing a token that identifies the offending value.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void parse_error(const std::string& token, const std::string& reason) const {
        throw DocumentError(ErrorCode::ParseError, locate(token), reason);
    }
    [[noreturn]] void invariant(const std::string& token, const std::string& reason) const {
        throw DocumentError(ErrorCode::InvariantViolation, locate(token), reason);
    }

    std::size_t locate(const std::string& token) const {
        if (token.empty()) return 0;
        const auto p = text_.find(token);
        return p == std::string_view::npos ? 0 : line_at(text_, p);
    }

    void object(const Json& j, const std::string& where) const {
        if (!j.is_object()) parse_error(quoted(where), where + " must be an object");
    }

    void keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
              std::initializer_list<const char*> optional = {}) const {
        object(j, where);
        std::set<std::string> allowed;
        for (const char* k : required) {
            allowed.insert(k);
            if (!j.contains(k)) parse_error(quoted(where), where + " lacks \"" + k + "\"");
        }
        for (const char* k : optional) allowed.insert(k);
        for (const auto& [k, v] : j.items())
            if (!allowed.count(k)) parse_error(quoted(k), "unknown field \"" + k + "\" in " + where);
    }

    std::string string(const Json& j, const std::string& where) const {
        if (!j.is_string()) parse_error(j.dump(), where + " must be a string");
        return j.get<std::string>();
    }

    Scalar scalar(const Json& j, const std::string& where) const {
        if (!j.is_string()) parse_error(j.dump(), where + ": rationals are written as strings");
        const auto s = j.get<std::string>();
        auto v = parse_scalar(s);
        if (!v) parse_error(quoted(s), where + ": non-canonical rational \"" + s + "\"");
        return *v;
    }

    Parity parity(const Json& j, const std::string& where) const {
        auto p = parse_parity(string(j, where));
        if (!p) parse_error(j.dump(), where + " must be \"even\" or \"odd\"");
        return *p;
    }

    Vec vector(const Json& j, std::size_t n, const std::string& where) const {
        if (!j.is_array()) parse_error(quoted(where), where + " must be a list");
        if (j.size() != n)
            invariant(quoted(where), where + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
        Vec v;
        for (const auto& x : j) v.push_back(scalar(x, where));
        return v;
    }

    Matrix matrix(const Json& j, std::size_t n, const std::string& where) const {
        if (!j.is_array()) parse_error(quoted(where), where + " must be a list of rows");
        if (j.size() != n) invariant(quoted(where), where + " is not " + std::to_string(n) + " x " + std::to_string(n));
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!j[r].is_array() || j[r].size() != n)
                invariant(quoted(where), where + " is not " + std::to_string(n) + " x " + std::to_string(n));
            for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(j[r][c], where);
        }
        return m;
    }

    std::size_t label_index(const GradedBasis& basis, const Json& j, const std::string& where) const {
        const std::string label = string(j, where);
        auto i = basis.index_of(label);
        if (!i) parse_error(quoted(label), where + ": unknown label \"" + label + "\"");
        return *i;
    }

    // {label: coefficient} with nonzero canonical coefficients.
    Vec combination(const Json& j, const GradedBasis& basis, const std::string& where) const {
        object(j, where);
        if (j.empty()) parse_error(quoted(where), where + ": empty results are omitted, not written");
        Vec v = zeros(basis.dim());
        for (const auto& [label, c] : j.items()) {
            auto i = basis.index_of(label);
            if (!i) parse_error(quoted(label), where + ": unknown label \"" + label + "\"");
            v[*i] = scalar(c, where);
            if (v[*i] == 0) parse_error(quoted(label), where + ": zero coefficients are not written");
        }
        return v;
    }

    // Entries {left, right, result}; with `upper` only pairs i <= j, all in
    // increasing (i, j) order.
    std::vector<BracketEntry> products(const Json& j, const GradedBasis& basis, const std::string& where,
                                       bool upper) const {
        if (!j.is_array()) parse_error(quoted(where), where + " must be a list");
        std::vector<BracketEntry> out;
        for (const auto& e : j) {
            keys(e, where, {"left", "right", "result"});
            const std::size_t i = label_index(basis, e["left"], where), k = label_index(basis, e["right"], where);
            const std::string token = quoted(basis.label(i));
            if (upper && i > k) parse_error(token, where + ": pair (" + basis.label(i) + ", " + basis.label(k) +
                                                       ") must list the earlier basis vector first");
            if (!out.empty() && std::make_pair(out.back().i, out.back().j) >= std::make_pair(i, k))
                parse_error(token, where + ": entries out of canonical order or repeated at (" + basis.label(i) +
                                       ", " + basis.label(k) + ")");
            out.push_back({i, k, combination(e["result"], basis, where)});
        }
        return out;
    }

private:
    std::string_view text_;
};

Json basis_json(const GradedBasis& b) {
    Json out = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) out.push_back({{"label", b.label(i)}, {"parity", to_string(b.parity(i))}});
    return out;
}

Json combination_json(const Vec& v, const GradedBasis& basis) {
    Json out = Json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) out[basis.label(k)] = scalar_json(v[k]);
    return out;
}

Json product_json(const GradedBasis& basis, std::size_t i, std::size_t j, const Vec& v) {
    return {{"left", basis.label(i)}, {"right", basis.label(j)}, {"result", combination_json(v, basis)}};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw DocumentError(ErrorCode::ParseError, line_at(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
}

void check_version(const Reader& r, const Json& j) {
    const Json& v = j["format_version"];
    if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
        r.parse_error("\"format_version\"", "format_version must be " + std::to_string(kFormatVersion));
}

template <class T, class Make>
T guarded(const Reader& r, const std::string& token, Make make) {
    try {
        return make();
    } catch (const DocumentError&) {
        throw;
    } catch (const AlgebraError& e) {
        r.invariant(token, e.what());
    }
}

std::string read_file_impl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError(ErrorCode::ParseError, 0, "cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

Json scalar_json(const Scalar& x) { return to_string(x); }

Json vector_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

std::string save(const Document& doc) {
    const GradedBasis& basis = doc.algebra.basis();
    Json brackets = Json::array();
    for (const auto& e : doc.algebra.entries()) brackets.push_back(product_json(basis, e.i, e.j, e.value));
    Json forms = Json::object();
    for (const auto& [name, f] : doc.forms) forms[name] = {{"parity", to_string(f.parity())}, {"matrix", matrix_json(f.matrix())}};
    Json maps = Json::object();
    for (const auto& [name, m] : doc.maps) maps[name] = {{"degree", to_string(m.degree())}, {"matrix", matrix_json(m.matrix())}};
    Json j = {{"format_version", kFormatVersion},
              {"algebra", {{"basis", basis_json(basis)}, {"brackets", brackets}}},
              {"forms", forms},
              {"maps", maps},
              {"metadata", doc.metadata}};
    return j.dump(2) + "\n";
}

Document load(std::string_view text) {
    const Json j = parse_json(text);
    Reader r(text);
    r.keys(j, "document", {"format_version", "algebra", "forms", "maps", "metadata"});
    check_version(r, j);

    const Json& a = j["algebra"];
    r.keys(a, "algebra", {"basis", "brackets"});
    if (!a["basis"].is_array()) r.parse_error("\"basis\"", "basis must be a list");
    std::vector<std::string> labels;
    std::vector<Parity> parities;
    std::set<std::string> seen;
    for (const auto& b : a["basis"]) {
        r.keys(b, "basis entry", {"label", "parity"});
        const std::string label = r.string(b["label"], "label");
        if (label.empty()) r.parse_error("\"label\"", "labels must be nonempty");
        if (!seen.insert(label).second) r.invariant(quoted(label), "label \"" + label + "\" is repeated");
        const Parity p = r.parity(b["parity"], "parity of " + label);
        if (!parities.empty() && parities.back() == Parity::Odd && p == Parity::Even)
            r.invariant(quoted(label), "even vector \"" + label + "\" after an odd one; even block comes first");
        labels.push_back(label);
        parities.push_back(p);
    }
    const GradedBasis basis = GradedBasis::from_parities(labels, parities);
    const std::size_t n = basis.dim();
    const auto entries = r.products(a["brackets"], basis, "brackets", true);

    Document doc;
    const std::string first_pair = entries.empty() ? std::string() : quoted(basis.label(entries.front().i));
    doc.algebra = guarded<LieSuperalgebra>(r, "\"brackets\"", [&] { return LieSuperalgebra(basis, entries); });

    r.object(j["forms"], "forms");
    for (const auto& [name, f] : j["forms"].items()) {
        const std::string where = "form " + name;
        r.keys(f, where, {"parity", "matrix"});
        const Parity p = r.parity(f["parity"], where);
        Matrix m = r.matrix(f["matrix"], n, where);
        doc.forms.emplace(name, guarded<BilinearForm>(r, quoted(name), [&] { return BilinearForm(basis, m, p); }));
    }
    r.object(j["maps"], "maps");
    for (const auto& [name, f] : j["maps"].items()) {
        const std::string where = "map " + name;
        r.keys(f, where, {"degree", "matrix"});
        const Parity p = r.parity(f["degree"], where);
        Matrix m = r.matrix(f["matrix"], n, where);
        doc.maps.emplace(name, guarded<LinearMap>(r, quoted(name), [&] { return LinearMap(basis, m, p); }));
    }
    r.object(j["metadata"], "metadata");
    doc.metadata = j["metadata"];
    return doc;
}

std::string read_file(const std::filesystem::path& path) { return read_file_impl(path); }

Document load_file(const std::filesystem::path& path) { return load(read_file_impl(path)); }

void save_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::BadParams, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::BadParams, "cannot write " + path.string());
}

Document to_document(const CatalogEntry& entry) {
    Document doc;
    doc.algebra = entry.value.algebra;
    doc.forms = entry.forms;
    doc.maps = entry.maps;
    Json meta = Json::object();
    meta["catalog"] = entry.name;
    meta["expected_properties"] = entry.expected_properties;
    Json roles = Json::object();
    auto role = [&](const char* key, const auto& value, const auto& named) {
        if (!value) return;
        for (const auto& [name, x] : named)
            if (x == *value) {
                roles[key] = name;
                return;
            }
    };
    role("quadratic", entry.value.quadratic, entry.forms);
    role("symplectic", entry.value.symplectic, entry.forms);
    role("derivation", entry.value.derivation, entry.maps);
    meta["roles"] = roles;
    if (entry.associative) {
        const AssocSuperalgebra& a = *entry.associative;
        Json products = Json::array();
        for (std::size_t i = 0; i < a.basis.dim(); ++i)
            for (std::size_t j = 0; j < a.basis.dim(); ++j)
                if (!is_zero(a.mul(i, j))) products.push_back(product_json(a.basis, i, j, a.mul(i, j)));
        meta["associative"] = {{"products", products}};
    }
    if (entry.n) meta["params"] = {{"n", *entry.n}};
    doc.metadata = meta;
    return doc;
}

CatalogEntry to_entry(const Document& doc) {
    const std::string text = doc.metadata.dump(2);
    Reader r(text);
    const Json& meta = doc.metadata;
    r.keys(meta, "metadata", {"catalog", "expected_properties", "roles"}, {"associative", "params"});
    CatalogEntry e;
    e.name = r.string(meta["catalog"], "catalog");
    e.value.algebra = doc.algebra;
    e.forms = doc.forms;
    e.maps = doc.maps;
    if (!meta["expected_properties"].is_array()) r.parse_error("\"expected_properties\"", "expected_properties must be a list");
    for (const auto& p : meta["expected_properties"]) e.expected_properties.push_back(r.string(p, "property"));
    r.keys(meta["roles"], "roles", {}, {"quadratic", "symplectic", "derivation"});
    auto named = [&](const char* key, const auto& table) -> const auto& {
        const std::string name = r.string(meta["roles"][key], key);
        auto it = table.find(name);
        if (it == table.end()) r.parse_error(quoted(name), std::string(key) + " names a missing entry \"" + name + "\"");
        return it->second;
    };
    if (meta["roles"].contains("quadratic")) e.value.quadratic = named("quadratic", doc.forms);
    if (meta["roles"].contains("symplectic")) e.value.symplectic = named("symplectic", doc.forms);
    if (meta["roles"].contains("derivation")) e.value.derivation = named("derivation", doc.maps);
    if (meta.contains("params")) {
        r.keys(meta["params"], "params", {"n"});
        if (!meta["params"]["n"].is_number_integer()) r.parse_error("\"n\"", "params.n must be an integer");
        e.n = meta["params"]["n"].get<int>();
    }
    if (meta.contains("associative")) {
        r.keys(meta["associative"], "associative", {"products"});
        const GradedBasis& basis = doc.algebra.basis();
        const std::size_t n = basis.dim();
        AssocSuperalgebra a{basis, std::vector<Vec>(n * n, zeros(n))};
        for (const auto& p : r.products(meta["associative"]["products"], basis, "products", false)) a.product[p.i * n + p.j] = p.value;
        e.associative = a;
    }
    return e;
}

std::string save_params(const ParamsDocument& params) {
    Json maps = Json::object();
    for (const auto& [name, m] : params.maps) maps[name] = {{"degree", to_string(m.degree())}, {"matrix", matrix_json(m.matrix())}};
    Json vectors = Json::object();
    for (const auto& [name, v] : params.vectors) vectors[name] = vector_json(v);
    Json scalars = Json::object();
    for (const auto& [name, s] : params.scalars) scalars[name] = scalar_json(s);
    Json subspaces = Json::object();
    for (const auto& [name, vs] : params.subspaces) {
        Json rows = Json::array();
        for (const auto& v : vs) rows.push_back(vector_json(v));
        subspaces[name] = rows;
    }
    Json j = {{"format_version", kFormatVersion}, {"kind", params.kind}, {"maps", maps},         {"vectors", vectors},
              {"scalars", scalars},               {"options", params.options}, {"subspaces", subspaces}};
    return j.dump(2) + "\n";
}

ParamsDocument load_params(std::string_view text, const GradedBasis& base) {
    const Json j = parse_json(text);
    Reader r(text);
    r.keys(j, "parameters", {"format_version", "kind"}, {"maps", "vectors", "scalars", "options", "subspaces"});
    check_version(r, j);
    const std::size_t n = base.dim();
    ParamsDocument p;
    p.kind = r.string(j["kind"], "kind");
    if (j.contains("maps")) {
        r.object(j["maps"], "maps");
        for (const auto& [name, f] : j["maps"].items()) {
            const std::string where = "map " + name;
            r.keys(f, where, {"degree", "matrix"});
            const Parity d = r.parity(f["degree"], where);
            Matrix m = r.matrix(f["matrix"], n, where);
            p.maps.emplace(name, guarded<LinearMap>(r, quoted(name), [&] { return LinearMap(base, m, d); }));
        }
    }
    if (j.contains("vectors")) {
        r.object(j["vectors"], "vectors");
        for (const auto& [name, v] : j["vectors"].items()) p.vectors.emplace(name, r.vector(v, n, "vector " + name));
    }
    if (j.contains("scalars")) {
        r.object(j["scalars"], "scalars");
        for (const auto& [name, s] : j["scalars"].items()) p.scalars.emplace(name, r.scalar(s, "scalar " + name));
    }
    if (j.contains("options")) {
        r.object(j["options"], "options");
        for (const auto& [name, s] : j["options"].items()) p.options.emplace(name, r.string(s, "option " + name));
    }
    if (j.contains("subspaces")) {
        r.object(j["subspaces"], "subspaces");
        for (const auto& [name, rows] : j["subspaces"].items()) {
            if (!rows.is_array()) r.parse_error(quoted(name), "subspace " + name + " must be a list of vectors");
            std::vector<Vec> vs;
            for (const auto& v : rows) vs.push_back(r.vector(v, n, "subspace " + name));
            p.subspaces.emplace(name, vs);
        }
    }
    return p;
}

}  // namespace superalg::io
