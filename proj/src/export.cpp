#include "wha/export.hpp"

#include <sstream>

#include <json.hpp>

namespace wha {

using nlohmann::ordered_json;

namespace {

ordered_json scalar_json(const CycloScalar& c) {
    ordered_json num = ordered_json::array();
    Integer den = 1;
    const auto coeffs = c.coefficients();
    for (const auto& q : coeffs) den = lcm(den, Integer(q.get_den()));
    if (!c.is_zero())
        for (const auto& q : coeffs) num.push_back(Integer(q * den).get_str());
    return ordered_json{{"num", num}, {"den", den.get_str()}};
}

CycloScalar scalar_parse(int level, const ordered_json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InputError("scalar must be {num, den}");
    Integer den;
    if (den.set_str(j.at("den").get<std::string>(), 10) != 0 || den <= 0) throw InputError("bad scalar denominator");
    const auto& num = j.at("num");
    if (num.empty()) return CycloScalar(level, 0);
    std::vector<Rational> coeffs;
    for (const auto& x : num) {
        Integer n;
        if (n.set_str(x.get<std::string>(), 10) != 0) throw InputError("bad scalar numerator");
        Rational q(n, den);
        q.canonicalize();
        coeffs.push_back(q);
    }
    return CycloScalar::from_coefficients(level, coeffs);
}

ordered_json sparse_row(const SparseRow& row) {
    ordered_json out = ordered_json::array();
    for (const auto& [k, c] : row) out.push_back(ordered_json::array({k, scalar_json(c)}));
    return out;
}

SparseRow parse_row(int level, const ordered_json& j, std::size_t n) {
    SparseRow row;
    for (const auto& e : j) {
        auto k = e.at(0).get<Index>();
        if (k >= n) throw InputError("basis index out of range");
        row.emplace_back(k, scalar_parse(level, e.at(1)));
    }
    return row;
}

ordered_json dense(const BilinearForm& f) {
    ordered_json out = ordered_json::array();
    for (Index i = 0; i < f.dim; ++i) {
        ordered_json row = ordered_json::array();
        for (Index k = 0; k < f.dim; ++k) row.push_back(scalar_json(f.at(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

BilinearForm parse_dense(int level, const ordered_json& j, std::size_t n) {
    if (j.size() != n) throw InputError("form has wrong size");
    BilinearForm f{n, std::vector<CycloScalar>(n * n)};
    for (Index i = 0; i < n; ++i) {
        if (j.at(i).size() != n) throw InputError("form has wrong size");
        for (Index k = 0; k < n; ++k) f.at(i, k) = scalar_parse(level, j.at(i).at(k));
    }
    return f;
}

ordered_json vec(const std::vector<CycloScalar>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& c : v) out.push_back(scalar_json(c));
    return out;
}

std::vector<CycloScalar> parse_vec(int level, const ordered_json& j, std::size_t n) {
    if (j.size() != n) throw InputError("vector has wrong size");
    std::vector<CycloScalar> out;
    for (const auto& x : j) out.push_back(scalar_parse(level, x));
    return out;
}

}  // namespace

ExportSelection parse_selection(const std::string& list) {
    ExportSelection sel{false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "mu") sel.mu = true;
        else if (item == "delta") sel.delta = true;
        else if (item == "s" || item == "antipode") sel.antipode = true;
        else if (item == "forms") sel.forms = true;
        else throw InputError("unknown table: " + item);
    }
    return sel;
}

std::string scalar_to_json(const CycloScalar& c) { return scalar_json(c).dump(); }

CycloScalar scalar_from_json(int level, const std::string& text) {
    try {
        return scalar_parse(level, ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed scalar: ") + e.what());
    }
}

std::string export_tables(const StructureTables& t, const ExportSelection& sel) {
    const int r = t.level;
    ordered_json doc;
    doc["format_version"] = "1";
    doc["level"] = r;
    doc["field"] = {{"cyclotomic_index", 4 * r}, {"degree", CycloField::get(r).degree()}};
    doc["conventions"] = {{"crossing", t.conventions.crossing_name()}, {"reading", t.conventions.reading_name()}};
    ordered_json basis = ordered_json::array();
    for (const auto& b : t.basis) basis.push_back({{"j", b.j}, {"p", b.p}, {"q", b.q}, {"r", b.r}, {"s", b.s}});
    doc["basis"] = std::move(basis);

    ordered_json tables = ordered_json::object();
    const std::size_t n = t.basis.size();
    if (sel.mu && t.has_mu) {
        ordered_json mu = ordered_json::array();
        for (Index i = 0; i < n; ++i)
            for (Index k = 0; k < n; ++k) {
                const auto& row = t.mu[i * n + k];
                if (!row.empty()) mu.push_back(ordered_json::array({i, k, sparse_row(row)}));
            }
        tables["mu"] = std::move(mu);
    }
    if (sel.delta && t.has_delta) {
        ordered_json delta = ordered_json::array();
        for (Index i = 0; i < n; ++i) {
            ordered_json terms = ordered_json::array();
            for (const auto& [k, c] : t.delta[i]) terms.push_back(ordered_json::array({k[0], k[1], scalar_json(c)}));
            delta.push_back(std::move(terms));
        }
        tables["delta"] = std::move(delta);
    }
    if (sel.antipode && t.has_antipode) {
        ordered_json s = ordered_json::array();
        for (Index i = 0; i < n; ++i) s.push_back(sparse_row(t.antipode[i]));
        tables["antipode"] = std::move(s);
    }
    tables["unit"] = sparse_row(t.unit);
    tables["counit"] = vec(t.counit);
    doc["tables"] = std::move(tables);

    if (sel.forms && t.has_forms) {
        doc["forms"] = {{"r_form", dense(t.r_form)}, {"r_bar", dense(t.r_bar)}, {"q_form", dense(t.q_form)},
                        {"nu", vec(t.nu)},           {"nu_bar", vec(t.nu_bar)}, {"u", vec(t.u)},
                        {"v", vec(t.v)},             {"w", vec(t.w)}};
    }
    if (t.smatrix.rows() > 0) {
        ordered_json sm = ordered_json::array();
        for (int i = 0; i < t.smatrix.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < t.smatrix.cols(); ++k) row.push_back(scalar_json(t.smatrix.at(i, k)));
            sm.push_back(std::move(row));
        }
        doc["smatrix"] = std::move(sm);
    }
    return doc.dump(1) + "\n";
}

StructureTables import_tables(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    try {
        if (doc.at("format_version") != "1") throw InputError("unsupported format_version");
        StructureTables t;
        t.level = doc.at("level").get<int>();
        if (t.level < 2) throw InputError("level must be at least 2");
        if (doc.at("field").at("cyclotomic_index").get<int>() != 4 * t.level ||
            doc.at("field").at("degree").get<int>() != CycloField::get(t.level).degree())
            throw InputError("field does not match level");
        const auto& conv = doc.at("conventions");
        t.conventions.crossing =
            conv.at("crossing") == "negative" ? Conventions::Crossing::Negative : Conventions::Crossing::Positive;
        t.conventions.reading =
            conv.at("reading") == "inner-strand" ? Conventions::Reading::InnerStrand : Conventions::Reading::ClosingStrand;
        for (const auto& b : doc.at("basis"))
            t.basis.push_back({b.at("j").get<int>(), b.at("p").get<int>(), b.at("q").get<int>(), b.at("r").get<int>(), b.at("s").get<int>()});
        if (t.basis != enumerate_basis(t.level)) throw InputError("basis does not match the canonical order");
        const std::size_t n = t.basis.size();
        const int r = t.level;

        const auto& tables = doc.at("tables");
        if (tables.contains("mu")) {
            t.mu.assign(n * n, {});
            for (const auto& e : tables.at("mu")) {
                auto i = e.at(0).get<Index>(), k = e.at(1).get<Index>();
                if (i >= n || k >= n) throw InputError("basis index out of range");
                t.mu[i * n + k] = parse_row(r, e.at(2), n);
            }
            t.has_mu = true;
        }
        if (tables.contains("delta")) {
            if (tables.at("delta").size() != n) throw InputError("delta has wrong size");
            t.delta.resize(n);
            for (Index i = 0; i < n; ++i)
                for (const auto& e : tables.at("delta").at(i)) {
                    auto a = e.at(0).get<Index>(), b = e.at(1).get<Index>();
                    if (a >= n || b >= n) throw InputError("basis index out of range");
                    t.delta[i].push_back({{a, b}, scalar_parse(r, e.at(2))});
                }
            t.has_delta = true;
        }
        if (tables.contains("antipode")) {
            if (tables.at("antipode").size() != n) throw InputError("antipode has wrong size");
            for (Index i = 0; i < n; ++i) t.antipode.push_back(parse_row(r, tables.at("antipode").at(i), n));
            t.has_antipode = true;
        }
        t.unit = parse_row(r, tables.at("unit"), n);
        t.counit = parse_vec(r, tables.at("counit"), n);

        if (doc.contains("forms")) {
            const auto& f = doc.at("forms");
            t.r_form = parse_dense(r, f.at("r_form"), n);
            t.r_bar = parse_dense(r, f.at("r_bar"), n);
            t.q_form = parse_dense(r, f.at("q_form"), n);
            t.nu = parse_vec(r, f.at("nu"), n);
            t.nu_bar = parse_vec(r, f.at("nu_bar"), n);
            t.u = parse_vec(r, f.at("u"), n);
            t.v = parse_vec(r, f.at("v"), n);
            t.w = parse_vec(r, f.at("w"), n);
            t.has_forms = true;
        }
        if (doc.contains("smatrix")) {
            const auto& sm = doc.at("smatrix");
            const int m = static_cast<int>(sm.size());
            if (m != r - 1) throw InputError("smatrix has wrong size");
            t.smatrix = Matrix(r, m, m);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k) t.smatrix.at(i, k) = scalar_parse(r, sm.at(i).at(k));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace wha
