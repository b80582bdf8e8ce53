#include "superalg/catalog.hpp"

#include "support.hpp"

namespace superalg {

using detail::require;

namespace catalog {

LieSuperalgebra L() {
    GradedBasis b({"l0", "k0", "l1", "k1"}, 2);
    return LieSuperalgebra(b, {{0, 2, {0, 0, 0, 1}}, {2, 2, {0, 1, 0, 0}}});
}

LinearMap L_D() {
    Matrix m(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 2;
    m(2, 2) = 1;
    m(3, 3) = 2;
    return LinearMap(L().basis(), m, Parity::Even);
}

LinearMap L_Delta() {
    Matrix m(4, 4);
    m(2, 0) = 1;  // l0 -> l1
    m(0, 2) = 1;  // l1 -> l0
    m(3, 1) = 2;  // k0 -> 2 k1
    m(1, 3) = 1;  // k1 -> k0
    return LinearMap(L().basis(), m, Parity::Odd);
}

LinearMap L_Dbar() {
    Matrix m(4, 4);
    m(3, 1) = 2;  // k0 -> 2 k1
    m(0, 2) = 1;  // l1 -> l0
    return LinearMap(L().basis(), m, Parity::Odd);
}

AssocSuperalgebra A(int n) {
    require(n >= 1, ErrorCode::BadParams, "A_n needs n >= 1");
    const std::size_t un = static_cast<std::size_t>(n), d = 2 * un;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
    AssocSuperalgebra a{GradedBasis(labels, un), std::vector<Vec>(d * d, zeros(d))};
    // e_i has index i - 1 and f_i index n + i - 1.
    for (std::size_t i = 1; i <= un; ++i)
        for (std::size_t j = 1; i + j <= un; ++j) {
            a.product[(i - 1) * d + (j - 1)][i + j - 1] = 1;
            a.product[(i - 1) * d + (un + j - 1)][un + i + j - 1] = 1;
            a.product[(un + j - 1) * d + (i - 1)][un + i + j - 1] = 1;
        }
    return a;
}

BilinearForm A_pairing(int n) {
    AssocSuperalgebra a = A(n);
    const std::size_t un = static_cast<std::size_t>(n);
    Matrix m(2 * un, 2 * un);
    for (std::size_t i = 1; i <= un; ++i) {
        const std::size_t j = un + 1 - i;
        m(i - 1, un + j - 1) = 1;
        m(un + j - 1, i - 1) = 1;
    }
    return BilinearForm(a.basis, m, Parity::Odd);
}

LieSuperalgebra h2() { return LieSuperalgebra(GradedBasis({"x", "y"}, 2), {{0, 1, {0, 1}}}); }

BilinearForm h2_omega() {
    Matrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = -1;
    return BilinearForm(h2().basis(), m, Parity::Even);
}

}  // namespace catalog

std::vector<std::string> catalog_names() {
    return {"m", "L", "L_odd_trivial", "L_even_trivial", "A_n", "h_tensor_A_n", "Ex5.2"};
}

namespace {

CatalogEntry entry_m() {
    CatalogEntry e;
    GradedBasis b({"e0", "e1"}, 1);
    e.value.algebra = LieSuperalgebra(b, {{0, 1, {0, 1}}});
    Matrix w(2, 2);
    w(0, 1) = 1;
    w(1, 0) = -1;
    e.value.symplectic = BilinearForm(b, w, Parity::Odd);
    e.forms.emplace("omega", *e.value.symplectic);
    e.expected_properties = {"jacobi", "symplectic:omega"};
    return e;
}

CatalogEntry entry_L() {
    CatalogEntry e;
    e.value.algebra = catalog::L();
    e.maps.emplace("D", catalog::L_D());
    e.maps.emplace("Delta", catalog::L_Delta());
    e.expected_properties = {"jacobi", "nilpotent", "derivation:D", "invertible:D", "derivation:Delta",
                             "invertible:Delta"};
    return e;
}

CatalogEntry entry_L_trivial(Variant variant) {
    CatalogEntry e;
    const LieSuperalgebra l = catalog::L();
    Extension t = trivial_double_extension(l, variant);
    e.value.algebra = t.value.algebra;
    e.value.quadratic = t.value.quadratic;
    const BilinearForm& b = *t.value.quadratic;
    LinearMap delta = lift_derivation(l, catalog::L_Delta(), variant);
    e.forms.emplace("B", b);
    e.maps.emplace("Delta", delta);
    if (variant == Variant::Odd) {
        LinearMap d = lift_derivation(l, catalog::L_D(), variant);
        e.maps.emplace("D", d);
        e.value.derivation = d;
        e.value.symplectic = form_from_derivation(t.value.algebra, b, d);
        e.forms.emplace("omega", *e.value.symplectic);
        e.forms.emplace("omega_even", form_from_derivation(t.value.algebra, b, delta));
        e.expected_properties = {"jacobi",       "nilpotent",     "quadratic:B",  "symplectic:omega",
                                 "symplectic:omega_even",         "derivation:D", "invertible:D",
                                 "skew:D:B",     "derivation:Delta", "invertible:Delta", "skew:Delta:B"};
    } else {
        e.value.derivation = delta;
        e.value.symplectic = form_from_derivation(t.value.algebra, b, delta);
        e.forms.emplace("omega", *e.value.symplectic);
        e.expected_properties = {"jacobi",           "nilpotent",        "quadratic:B", "symplectic:omega",
                                 "derivation:Delta", "invertible:Delta", "skew:Delta:B"};
    }
    return e;
}

CatalogEntry entry_A(int n) {
    CatalogEntry e;
    AssocSuperalgebra a = catalog::A(n);
    e.associative = a;
    e.value.algebra = LieSuperalgebra::abelian(a.basis);
    e.forms.emplace("B", catalog::A_pairing(n));
    e.expected_properties = {"associative", "supercommutative"};
    return e;
}

CatalogEntry entry_h_tensor(int n) {
    CatalogEntry e;
    AssocSuperalgebra a = catalog::A(n);
    Extension t = tensor_odd_symmetric(catalog::h2(), catalog::h2_omega(), a, catalog::A_pairing(n));
    e.value.algebra = t.value.algebra;
    e.value.symplectic = t.value.symplectic;
    e.forms.emplace("omega", *t.value.symplectic);
    // D(X (x) e_i) = i X (x) f_i and D(X (x) f_i) = X (x) e_i. Basis order:
    // x.e1, y.e1, x.e2, ..., then the f block in the same pattern.
    const std::size_t un = static_cast<std::size_t>(n), nh = 2, m = 2 * nh * un;
    Matrix d(m, m);
    for (std::size_t i = 1; i <= un; ++i)
        for (std::size_t s = 0; s < nh; ++s) {
            const std::size_t xe = (i - 1) * nh + s, xf = nh * un + (i - 1) * nh + s;
            d(xf, xe) = static_cast<long>(i);
            d(xe, xf) = 1;
        }
    e.maps.emplace("D", LinearMap(t.value.algebra.basis(), d, Parity::Odd));
    e.expected_properties = {"jacobi", "symplectic:omega", "derivation:D", "invertible:D"};
    return e;
}

CatalogEntry entry_ex52() {
    CatalogEntry e;
    const LieSuperalgebra l = catalog::L();
    Extension t = trivial_double_extension(l, Variant::Even);
    Ext2Data data;
    data.d = lift_derivation(l, catalog::L_D(), Variant::Even);
    data.dbar = lift_derivation(l, catalog::L_Dbar(), Variant::Even, false);
    data.x0 = zeros(t.value.algebra.dim());
    data.x1 = zeros(t.value.algebra.dim());
    Extension big = gde_2d(t.value.algebra, *t.value.quadratic, data);
    e.value = big.value;
    e.forms.emplace("B", *big.value.quadratic);
    e.expected_properties = {"jacobi", "quadratic:B"};
    return e;
}

}  // namespace

CatalogEntry build_catalog(const std::string& name, std::optional<int> n) {
    const bool sized = name == "A_n" || name == "h_tensor_A_n";
    if (sized && !n) fail(ErrorCode::BadParams, name + " needs n");
    if (!sized && n) fail(ErrorCode::BadParams, name + " takes no parameter");
    if (sized && *n < 1) fail(ErrorCode::BadParams, "n must be at least 1");
    CatalogEntry e;
    if (name == "m")
        e = entry_m();
    else if (name == "L")
        e = entry_L();
    else if (name == "L_odd_trivial")
        e = entry_L_trivial(Variant::Odd);
    else if (name == "L_even_trivial")
        e = entry_L_trivial(Variant::Even);
    else if (name == "A_n")
        e = entry_A(*n);
    else if (name == "h_tensor_A_n")
        e = entry_h_tensor(*n);
    else if (name == "Ex5.2")
        e = entry_ex52();
    else
        fail(ErrorCode::UnknownEntry, "no catalog entry named '" + name + "'");
    e.name = name;
    e.n = n;
    return e;
}

Report check_property(const CatalogEntry& entry, const std::string& property) {
    const LieSuperalgebra& g = entry.value.algebra;
    auto verdict = [](bool ok, const std::string& detail) {
        Report r;
        r.pass = ok;
        if (!ok) r.detail = detail;
        return r;
    };
    auto form = [&](const std::string& name) -> const BilinearForm& {
        auto it = entry.forms.find(name);
        if (it == entry.forms.end()) fail(ErrorCode::BadParams, "no form named '" + name + "'");
        return it->second;
    };
    auto map = [&](const std::string& name) -> const LinearMap& {
        auto it = entry.maps.find(name);
        if (it == entry.maps.end()) fail(ErrorCode::BadParams, "no map named '" + name + "'");
        return it->second;
    };
    const auto colon = property.find(':');
    const std::string head = property.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : property.substr(colon + 1);
    if (head == "jacobi") return graded_jacobi_check(g);
    if (head == "nilpotent") return verdict(is_nilpotent(g), "lower central series does not reach zero");
    if (head == "center") return verdict(center(g).dim() > 0, "center is zero");
    if (head == "quadratic") {
        FormReport r = classify_form(g, form(arg));
        return verdict(r.quadratic(), arg + " is not quadratic");
    }
    if (head == "symplectic") {
        FormReport r = classify_form(g, form(arg));
        return verdict(r.symplectic(), arg + " is not symplectic");
    }
    if (head == "derivation") return superderivation_check(g, map(arg));
    if (head == "invertible") return verdict(map(arg).invertible(), arg + " is singular");
    if (head == "skew") {
        const auto c2 = arg.find(':');
        if (c2 == std::string::npos) fail(ErrorCode::BadParams, "skew needs MAP:FORM");
        return skew_report(g, form(arg.substr(c2 + 1)), map(arg.substr(0, c2)));
    }
    if (head == "associative" || head == "supercommutative") {
        if (!entry.associative) return verdict(false, "entry has no associative product");
        return head == "associative" ? associativity_check(*entry.associative)
                                     : supercommutativity_check(*entry.associative);
    }
    fail(ErrorCode::BadParams, "unknown property '" + property + "'");
}

}  // namespace superalg
