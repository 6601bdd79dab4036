#include "bezout/serialize.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "bezout/parse.hpp"

namespace bezout {

namespace {

const Json& field(const Json& node, const char* name) {
    if (!node.is_object() || !node.contains(name))
        throw parse_error(std::string("missing field '") + name + "'");
    return node.at(name);
}

std::size_t uint_field(const Json& node, const char* name) {
    const Json& v = field(node, name);
    if (!v.is_number_unsigned()) throw parse_error(std::string("field '") + name + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string string_value(const Json& node, const char* what) {
    if (!node.is_string()) throw parse_error(std::string(what) + " must be a string");
    return node.get<std::string>();
}

std::pair<std::size_t, std::size_t> parse_upper_key(const std::string& key, std::size_t count) {
    const auto bad = [&]() -> std::pair<std::size_t, std::size_t> {
        throw parse_error("matrix key '" + key + "' is not of the form \"(j,k)\" with 1 <= j < k <= " +
                          std::to_string(count));
    };
    if (key.size() < 5 || key.front() != '(' || key.back() != ')') return bad();
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) return bad();
    const std::string left = key.substr(1, comma - 1);
    const std::string right = key.substr(comma + 1, key.size() - comma - 2);
    const auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!all_digits(left) || !all_digits(right) || left.size() > 6 || right.size() > 6) return bad();
    const std::size_t j = std::stoul(left), k = std::stoul(right);
    if (j < 1 || k <= j || k > count) return bad();
    return {j - 1, k - 1};
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    const auto& map = p.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it) {
        Json t;
        t["exp"] = it->first.exponents();
        t["re"] = it->second.re().str();
        t["im"] = it->second.im().str();
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = p.var_count();
    out["terms"] = std::move(terms);
    return out;
}

Json tuple_to_json(const PolyTuple& t) {
    Json out = Json::array();
    for (const auto& p : t) out.push_back(poly_to_json(p));
    return out;
}

Json upper_to_json(const AntisymMatrix& m) {
    Json out = Json::object();
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t k = j + 1; k < m.size(); ++k) {
            if (m.at(j, k).is_zero()) continue;
            out["(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")"] =
                poly_to_json(m.at(j, k));
        }
    return out;
}

Json antisym_to_json(const AntisymMatrix& m) {
    Json out;
    out["N"] = m.size();
    out["upper"] = upper_to_json(m);
    return out;
}

Json certificate_to_json(const BezoutCertificate& c) {
    Json out;
    out["f"] = tuple_to_json(c.f);
    out["g"] = tuple_to_json(c.g);
    out["verified"] = c.verified;
    return out;
}

Json trace_to_json(const GlueTrace& t) {
    Json out;
    out["n"] = t.f.var_count();
    out["N"] = t.f.size();
    out["policy"] = policy_name(t.policy);
    out["f"] = tuple_to_json(t.f);
    Json schedule = Json::array();
    for (const Rational& r : t.radii) schedule.push_back(r.str());
    out["schedule"] = std::move(schedule);
    Json stages = Json::array();
    for (std::size_t k = 1; k <= t.stages.size(); ++k) {
        const GlueStage& st = t.stages[k - 1];
        Json stage;
        stage["k"] = k;
        stage["a"] = tuple_to_json(st.a);
        stage["H_upper"] = upper_to_json(st.transition);
        stage["P_upper"] = upper_to_json(st.truncation);
        stage["bound"] = st.bound.str();
        stages.push_back(std::move(stage));
    }
    out["stages"] = std::move(stages);
    out["a_final"] = tuple_to_json(t.a_final);
    Json sums = Json::array();
    for (const PolyTuple& g : t.partial_sums) sums.push_back(tuple_to_json(g));
    out["partial_sums"] = std::move(sums);
    return out;
}

Rational rational_from_json(const Json& node) {
    return Rational::parse(string_value(node, "rational"));
}

MultiPoly poly_from_json(const Json& node, std::size_t n) {
    if (node.is_string()) return parse_poly(node.get<std::string>(), n);
    if (!node.is_object()) throw parse_error("a polynomial must be an object or a string");
    const std::size_t declared = uint_field(node, "n");
    if (declared != n)
        throw dimension_mismatch("polynomial declares " + std::to_string(declared) +
                                 " variables, expected " + std::to_string(n));
    const Json& terms = field(node, "terms");
    if (!terms.is_array()) throw parse_error("field 'terms' must be an array");
    MultiPoly p(n);
    for (const Json& t : terms) {
        const Json& exp = field(t, "exp");
        if (!exp.is_array() || exp.size() != n)
            throw parse_error("term exponent list must have one entry per variable");
        std::vector<int> e;
        e.reserve(n);
        for (const Json& v : exp) {
            if (!v.is_number_integer() || v.get<long>() < 0)
                throw parse_error("term exponents must be non-negative integers");
            e.push_back(v.get<int>());
        }
        const Rational re = t.contains("re") ? Rational::parse(string_value(t.at("re"), "'re'"))
                                             : Rational(0);
        const Rational im = t.contains("im") ? Rational::parse(string_value(t.at("im"), "'im'"))
                                             : Rational(0);
        p.add_term(Monomial(std::move(e)), GaussianRational(re, im));
    }
    return p;
}

PolyTuple tuple_from_json(const Json& node, std::size_t n) {
    if (!node.is_array() || node.empty())
        throw parse_error("a polynomial tuple must be a nonempty array");
    std::vector<MultiPoly> entries;
    entries.reserve(node.size());
    for (const Json& p : node) entries.push_back(poly_from_json(p, n));
    return PolyTuple(std::move(entries));
}

AntisymMatrix upper_from_json(const Json& node, std::size_t count, std::size_t n) {
    if (!node.is_object()) throw parse_error("an upper-triangle map must be an object");
    AntisymMatrix m = AntisymMatrix::zero(count, n);
    for (const auto& [key, value] : node.items()) {
        const auto [j, k] = parse_upper_key(key, count);
        m.set_upper(j, k, poly_from_json(value, n));
    }
    return m;
}

AntisymMatrix antisym_from_json(const Json& node, std::size_t expected_count, std::size_t n) {
    if (!node.is_object()) throw parse_error("an antisymmetric matrix must be an object");
    std::size_t count = expected_count;
    if (node.contains("N")) {
        count = uint_field(node, "N");
        if (expected_count != 0 && count != expected_count)
            throw dimension_mismatch("matrix declares N=" + std::to_string(count) + ", expected " +
                                     std::to_string(expected_count));
    }
    if (count == 0) throw parse_error("matrix size is not determined");
    return upper_from_json(node.contains("upper") ? node.at("upper") : Json::object(), count, n);
}

GlueTrace trace_from_json(const Json& node) {
    const std::size_t n = uint_field(node, "n");
    const std::size_t count = uint_field(node, "N");
    if (n == 0 || count == 0) throw parse_error("trace must declare positive 'n' and 'N'");
    PolyTuple f = tuple_from_json(field(node, "f"), n);
    if (f.size() != count)
        throw dimension_mismatch("trace declares N=" + std::to_string(count) +
                                 " but f has " + std::to_string(f.size()) + " entries");

    const Json& schedule = field(node, "schedule");
    if (!schedule.is_array()) throw parse_error("field 'schedule' must be an array");
    std::vector<Rational> radii;
    radii.reserve(schedule.size());
    for (const Json& r : schedule) radii.push_back(rational_from_json(r));

    BoundPolicy policy = BoundPolicy::Sum;
    if (node.contains("policy")) policy = policy_from_name(string_value(node.at("policy"), "'policy'"));

    const Json& stages_node = field(node, "stages");
    if (!stages_node.is_array()) throw parse_error("field 'stages' must be an array");
    std::vector<GlueStage> stages;
    stages.reserve(stages_node.size());
    std::size_t k = 1;
    for (const Json& st : stages_node) {
        if (uint_field(st, "k") != k)
            throw parse_error("stages must be numbered consecutively from 1");
        stages.push_back({tuple_from_json(field(st, "a"), n),
                          upper_from_json(field(st, "H_upper"), count, n),
                          upper_from_json(field(st, "P_upper"), count, n),
                          rational_from_json(field(st, "bound"))});
        ++k;
    }

    PolyTuple a_final = tuple_from_json(field(node, "a_final"), n);

    const Json& sums_node = field(node, "partial_sums");
    if (!sums_node.is_array()) throw parse_error("field 'partial_sums' must be an array");
    std::vector<PolyTuple> sums;
    sums.reserve(sums_node.size());
    for (const Json& g : sums_node) sums.push_back(tuple_from_json(g, n));
    if (sums.size() != stages.size() + 1)
        throw parse_error("trace must record exactly one partial sum per stage plus the base");

    return GlueTrace{std::move(f),      std::move(radii),   policy,
                     std::move(stages), std::move(a_final), std::move(sums)};
}

std::size_t infer_var_count(const Json& node) {
    if (node.is_string()) return scan_variable_count(node.get<std::string>());
    if (node.is_array()) {
        std::size_t best = 0;
        for (const Json& e : node) best = std::max(best, infer_var_count(e));
        return best;
    }
    if (node.is_object() && node.contains("n") && node.at("n").is_number_unsigned())
        return node.at("n").get<std::size_t>();
    return 0;
}

const char* policy_name(BoundPolicy policy) {
    return policy == BoundPolicy::Sum ? "sum" : "sqrt";
}

BoundPolicy policy_from_name(const std::string& name) {
    if (name == "sum") return BoundPolicy::Sum;
    if (name == "sqrt") return BoundPolicy::Sqrt;
    throw parse_error("unknown bound policy '" + name + "' (expected \"sum\" or \"sqrt\")");
}

}  // namespace bezout
