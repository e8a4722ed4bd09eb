#include "ndlrs/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ndlrs {

namespace {

Exponent exponent_from_array(const json& arr, int n) {
    if (!arr.is_array()) throw ParseError("expected an integer array");
    if (n >= 0 && static_cast<int>(arr.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " components, got " + std::to_string(arr.size()));
    std::vector<int> comps;
    comps.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError("exponent component must be an integer");
        comps.push_back(v.get<int>());
    }
    return Exponent(std::move(comps));
}

json exponent_to_array(const Exponent& e) {
    json arr = json::array();
    for (int i = 0; i < e.dim(); ++i) arr.push_back(e[i]);
    return arr;
}

json terms_to_json(const std::map<Exponent, Scalar>& terms) {
    json arr = json::array();
    for (const auto& [e, c] : terms) {
        json t;
        t["exp"] = exponent_to_array(e);
        t["coef"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

json poly_to_json(const Poly& f) {
    json j;
    j["terms"] = terms_to_json(f.terms());
    return j;
}

Poly poly_from_json(const json& j, int n, const FieldCtx& field) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial must be an object with a \"terms\" array");
    Poly f(n, field);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw ParseError("polynomial term needs \"exp\" and \"coef\"");
        Exponent e = exponent_from_array(t["exp"], n);
        if (!e.all_geq(0)) throw ParseError("polynomial exponent must be >= 0: " + e.str());
        if (!t["coef"].is_string()) throw ParseError("coefficient must be a string");
        if (!f.coeff(e).is_zero()) throw ParseError("duplicate exponent in polynomial: " + e.str());
        f.add_term(e, Scalar::parse(field, t["coef"].get<std::string>()));
    }
    return f;
}

json region_to_json(const Region& r) {
    json arr = json::array();
    for (const auto& ax : r.axes()) {
        json a;
        if (ax.lo)
            a["lo"] = *ax.lo;
        else
            a["lo"] = nullptr;
        a["hi"] = ax.hi;
        arr.push_back(std::move(a));
    }
    return arr;
}

json series_to_json(const Series& s) {
    json j;
    j["region"] = region_to_json(s.region());
    j["terms"] = terms_to_json(s.terms());
    return j;
}

json ann_basis_to_json(const AnnBasisResult& r) {
    json j;
    json gammas = json::array();
    for (const Poly& g : r.gammas) gammas.push_back(poly_to_json(g));
    j["gammas"] = std::move(gammas);
    j["b"] = poly_to_json(r.b);
    json kernel = json::array();
    for (const Poly& g : r.kernel) kernel.push_back(poly_to_json(g));
    j["kernel"] = std::move(kernel);
    json basis = json::array();
    for (const Poly& g : r.basis) basis.push_back(poly_to_json(g));
    j["basis"] = std::move(basis);
    j["cofinite_dim"] = cofinite_dim(r);
    return j;
}

std::optional<std::string> sequence_field_hint(const json& j) {
    if (j.is_object() && j.contains("field")) {
        if (!j["field"].is_string()) throw ParseError("\"field\" must be a string");
        return j["field"].get<std::string>();
    }
    return std::nullopt;
}

namespace {

std::vector<Scalar> values_from_json(const json& arr, const FieldCtx& field) {
    if (!arr.is_array()) throw ParseError("\"values\" must be an array of coefficient strings");
    std::vector<Scalar> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError("sequence value must be a string");
        out.push_back(Scalar::parse(field, v.get<std::string>()));
    }
    return out;
}

std::vector<Poly> axis_polys_from_json(const json& arr, const FieldCtx& field) {
    if (!arr.is_array() || arr.empty()) throw ParseError("\"axis_polys\" must be a nonempty array");
    int n = static_cast<int>(arr.size());
    std::vector<Poly> polys;
    polys.reserve(arr.size());
    for (const auto& p : arr) polys.push_back(poly_from_json(p, n, field));
    return polys;
}

}  // namespace

SequenceSpec sequence_from_json(const json& j, const FieldCtx& field) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("sequence must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "evr") {
            if (!j.contains("axis_polys") || !j.contains("init_box"))
                throw ParseError("evr sequence needs \"axis_polys\" and \"init_box\"");
            std::vector<Poly> polys = axis_polys_from_json(j["axis_polys"], field);
            const json& ib = j["init_box"];
            if (!ib.is_object() || !ib.contains("extent") || !ib.contains("values"))
                throw ParseError("\"init_box\" needs \"extent\" and \"values\"");
            Exponent extent = exponent_from_array(ib["extent"], static_cast<int>(polys.size()));
            for (std::size_t i = 0; i < polys.size(); ++i) {
                int d = polys[i].degree_in(static_cast<int>(i));
                if (extent[static_cast<int>(i)] != d - 1)
                    throw DomainError("init box extent " + extent.str() + " does not match axis degrees");
            }
            Sequence s = Sequence::evr(polys, values_from_json(ib["values"], field));
            return SequenceSpec{s, std::move(polys)};
        }
        if (kind == "window") {
            if (!j.contains("lo") || !j.contains("values"))
                throw ParseError("window sequence needs \"lo\" and \"values\"");
            Exponent lo = exponent_from_array(j["lo"], -1);
            Sequence s = Sequence::window(lo, values_from_json(j["values"], field), field);
            return SequenceSpec{s, {}};
        }
        if (kind == "rational") {
            if (!j.contains("g") || !j.contains("axis_polys"))
                throw ParseError("rational sequence needs \"g\" and \"axis_polys\"");
            std::vector<Poly> polys = axis_polys_from_json(j["axis_polys"], field);
            Poly g = poly_from_json(j["g"], static_cast<int>(polys.size()), field);
            Sequence s = Sequence::from_rational(g, polys);
            return SequenceSpec{s, std::move(polys)};
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed sequence JSON: ") + e.what());
    }
    throw ParseError("unknown sequence kind: '" + kind + "'");
}

std::vector<Poly> witness_from_json(const json& j, int n, const FieldCtx& field) {
    if (!j.is_array()) throw ParseError("witness must be a JSON array of polynomials");
    if (static_cast<int>(j.size()) != n)
        throw ParseError("witness needs " + std::to_string(n) + " polynomials, got " + std::to_string(j.size()));
    std::vector<Poly> polys;
    polys.reserve(j.size());
    for (const auto& p : j) polys.push_back(poly_from_json(p, n, field));
    return polys;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Exponent exponent_from_arg(const std::string& text, int n) {
    std::vector<int> comps;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty component in '" + text + "'");
        cur = cur.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            if (used != cur.size()) throw std::invalid_argument(cur);
            comps.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + cur + "' in '" + text + "'");
        }
    }
    if (static_cast<int>(comps.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " components in '" + text + "'");
    return Exponent(std::move(comps));
}

}  // namespace ndlrs
