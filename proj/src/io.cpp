#include "qtlift/io.hpp"

#include <map>

#include "qtlift/errors.hpp"

namespace qtlift {

using nlohmann::json;

namespace {

int parse_index(const json& v, int dim, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " index must be an integer");
    const auto i = v.get<long long>();
    if (i < 1 || i > dim) throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    return static_cast<int>(i) - 1;
}

mpz_class parse_integer(const json& v, const char* what) {
    if (v.is_number_integer()) return mpz_class(v.dump());
    if (v.is_string()) {
        const Rational q = parse_rational(v.get<std::string>());
        if (q.get_den() != 1 || v.get<std::string>().find('/') != std::string::npos)
            throw InputError(std::string(what) + " must be an integer");
        return q.get_num();
    }
    throw InputError(std::string(what) + " must be an integer or an integer string (decimals are not allowed)");
}

Rational parse_fraction(const json& num, const json& den) {
    const mpz_class n = parse_integer(num, "numerator");
    const mpz_class d = parse_integer(den, "denominator");
    if (d == 0) throw InputError("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

LieBialgebra parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    return parse_input_json(doc);
}

LieBialgebra parse_input_json(const json& doc) {
    if (!doc.is_object()) throw InputError("document must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("missing integer field 'dim'");
    const long long dim_ll = doc["dim"].get<long long>();
    if (dim_ll < 1 || dim_ll > 10) throw InputError("dim must be between 1 and 10");
    const int d = static_cast<int>(dim_ll);

    std::vector<std::string> names;
    if (doc.contains("basis")) {
        if (!doc["basis"].is_array()) throw InputError("'basis' must be a list of names");
        for (const auto& n : doc["basis"]) {
            if (!n.is_string()) throw InputError("basis names must be strings");
            names.push_back(n.get<std::string>());
        }
        if (static_cast<int>(names.size()) != d) throw InputError("basis has " + std::to_string(names.size()) + " names, expected " + std::to_string(d));
    }

    // explicitly given bracket entries, before completion
    std::map<std::tuple<int, int, int>, Rational> given;
    const json bracket = doc.value("bracket", json::array());
    if (!bracket.is_array()) throw InputError("'bracket' must be a list");
    for (const auto& e : bracket) {
        if (!e.is_array() || e.size() != 5) throw InputError("bracket entries are [i, j, k, num, den]");
        const int i = parse_index(e[0], d, "bracket"), j = parse_index(e[1], d, "bracket"), k = parse_index(e[2], d, "bracket");
        const Rational q = parse_fraction(e[3], e[4]);
        if (i == j && sgn(q) != 0) throw InputError("bracket entry [x, x] must vanish");
        auto [it, ins] = given.try_emplace({i, j, k}, q);
        if (!ins && it->second != q) throw InputError("conflicting duplicate bracket entries");
    }
    Tensor3 c(d);
    for (const auto& [key, q] : given) {
        const auto [i, j, k] = key;
        if (auto it = given.find({j, i, k}); it != given.end() && it->second != -q)
            throw InputError("bracket entries for both orientations are not antisymmetric");
        c(i, j, k) = q;
        c(j, i, k) = -q;
    }

    SquareMatrix r(d);
    std::map<std::pair<int, int>, Rational> rgiven;
    const json rdoc = doc.value("r", json::array());
    if (!rdoc.is_array()) throw InputError("'r' must be a list");
    for (const auto& e : rdoc) {
        if (!e.is_array() || e.size() != 4) throw InputError("r entries are [i, j, num, den]");
        const int i = parse_index(e[0], d, "r"), j = parse_index(e[1], d, "r");
        const Rational q = parse_fraction(e[2], e[3]);
        auto [it, ins] = rgiven.try_emplace({i, j}, q);
        if (!ins && it->second != q) throw InputError("conflicting duplicate r entries");
        r(i, j) = q;
    }
    return LieBialgebra(std::move(c), std::move(r), std::move(names));
}

json serialize_input(const LieBialgebra& lb) {
    const int d = lb.dim();
    json doc;
    doc["dim"] = d;
    doc["basis"] = lb.basis_names();
    json br = json::array();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Rational& q = lb.bracket()(i, j, k);
                if (sgn(q) == 0) continue;
                br.push_back({i + 1, j + 1, k + 1, q.get_num().get_str(), q.get_den().get_str()});
            }
    doc["bracket"] = br;
    json r = json::array();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational& q = lb.r()(i, j);
            if (sgn(q) != 0) r.push_back({i + 1, j + 1, q.get_num().get_str(), q.get_den().get_str()});
        }
    doc["r"] = r;
    return doc;
}

json element_to_json(const TruncatedElement& f) {
    json out = json::array();
    for (const auto& [m, c] : f.terms()) out.push_back({{"exponents", m.exponents(f.nvars())}, {"coeff", to_fraction_string(c)}});
    return out;
}

TruncatedElement element_from_json(const json& j, int dim, int legs, int cap) {
    if (!j.is_array()) throw InputError("element must be a list of terms");
    TruncatedElement f(dim, legs, cap);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff")) throw InputError("term needs 'exponents' and 'coeff'");
        const auto e = t["exponents"].get<std::vector<int>>();
        if (static_cast<int>(e.size()) != f.nvars()) throw InputError("exponent vector has wrong length");
        const Monomial m = Monomial::from_exponents(e);
        if (m.degree() > cap) throw InputError("term exceeds the truncation degree");
        f.add_term(m, parse_rational(t["coeff"].get<std::string>()));
    }
    return f;
}

json report_to_json(const AxiomReport& rep) {
    json out = json::object();
    for (const auto& a : rep.axioms) out[a.name] = {{"passed", a.passed()}, {"nonzero_terms", a.nonzero_terms()}};
    return out;
}

json report_to_json(const ValidationReport& rep) {
    json out = json::object();
    for (const auto& c : rep.checks) out[c.name] = {{"passed", c.passed()}, {"nonzero_terms", c.nonzero_count()}};
    return out;
}

json report_to_json(const CocycleResiduals& rep) {
    json out = json::object();
    for (const auto& [name, r] : rep.entries) out[name] = {{"passed", r.is_zero()}, {"nonzero_terms", r.size()}};
    return out;
}

} // namespace qtlift
