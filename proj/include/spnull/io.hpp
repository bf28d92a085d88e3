#ifndef SPNULL_IO_HPP
#define SPNULL_IO_HPP

#include <spnull/bounds.hpp>
#include <spnull/certificate.hpp>
#include <spnull/core.hpp>
#include <spnull/polytope.hpp>

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spnull {

using Json = nlohmann::json;

/// Exact integers become JSON numbers up to 2^53 - 1 and decimal strings beyond.
inline Json integer_json(const Integer& v)
{
    static const Integer limit("9007199254740991", 10);
    if (abs(v) <= limit)
        return Json(v.get_si());
    return Json(v.get_str());
}

inline Json point_json(const RationalPoint& p)
{
    Json a = Json::array();
    for (const auto& c : p)
        a.push_back(c.get_str());
    return a;
}

inline Json polytope_json(const RationalPolytope& p)
{
    Json v = Json::array();
    for (const auto& pt : p.vertices())
        v.push_back(point_json(pt));
    return v;
}

inline Json polynomial_json(const SparsePolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exp = Json::array();
        for (std::int64_t x : e.coords())
            exp.push_back(x);
        terms.push_back({{"exp", exp}, {"coeff", c.get_str()}});
    }
    return terms;
}

inline Json certificate_json(const Certificate& c)
{
    Json cof = Json::array();
    for (const auto& g : c.cofactors)
        cof.push_back(polynomial_json(g));
    return {{"cofactors", cof}, {"cap_used", c.cap_used}, {"max_product_degree", c.max_product_degree}};
}

inline Json comparator_json(const Comparator& c)
{
    return {{"value", integer_json(c.value)}, {"valid", c.valid}, {"caps", c.caps}, {"note", c.note}};
}

inline Json index_list_json(const std::optional<std::vector<std::size_t>>& v)
{
    if (!v)
        return nullptr;
    return Json(*v);
}

inline Json bound_report_json(const BoundReport& r)
{
    Json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["d"] = r.d;
    j["unmixed_noether"] = integer_json(r.unmixed_noether);
    j["unmixed_nss_degree"] = integer_json(r.unmixed_nss_degree);
    j["unmixed_newton_cap"] = {{"multiplier", integer_json(r.newton_multiplier)},
                               {"polytope", r.newton_base ? polytope_json(*r.newton_base) : Json(nullptr)}};
    if (r.mixed_evaluated) {
        j["d_j"] = r.d_j;
        Json deltas = Json::array();
        for (const auto& dj : r.delta_j)
            deltas.push_back(dj ? Json(*dj) : Json(nullptr));
        j["delta_j"] = deltas;
        j["M"] = integer_json(r.M);
        Json mj = Json::array();
        for (const auto& m : r.M_j)
            mj.push_back(integer_json(m));
        j["M_j"] = mj;
        j["mixed_nss"] = integer_json(r.mixed_nss);
        j["mixed_nss_caps"] = r.mixed_nss_caps;
        if (r.argmin_is_dM)
            j["argmin_kind"] = {{"kind", "d*M"}, {"j", nullptr}};
        else
            j["argmin_kind"] = {{"kind", "d_j*delta_j*M_j"}, {"j", r.argmin_j}};
        j["subset_argmin"] = {{"nss", index_list_json(r.nss_subset)}, {"noether", index_list_json(r.noether_subset)}};
        j["noether_mixed"] = integer_json(r.noether_mixed);
    }
    Json comps = Json::object();
    for (const auto& [name, c] : r.comparators)
        comps[name] = comparator_json(c);
    j["comparators"] = comps;
    j["notes"] = r.notes;
    return j;
}

/// Canonical text form of a JSON document: sorted keys, two-space indent.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/**
 * The JSON system description: {"n", "supports", "polynomials"?, "degrees"?}.
 * Supports may be omitted when polynomials are given; they are then inferred.
 */
struct SystemFile
{
    std::size_t n = 0;
    std::vector<Support> supports;
    std::optional<std::vector<SparsePolynomial>> polynomials;
    std::optional<std::vector<std::int64_t>> degrees;

    SystemSpec spec() const
    {
        return SystemSpec(n, supports, degrees ? *degrees : std::vector<std::int64_t>{});
    }
};

namespace detail {

inline std::int64_t json_int(const Json& v, const std::string& what)
{
    if (!v.is_number_integer())
        throw InvalidInput(what + " must be an integer");
    return v.get<std::int64_t>();
}

inline ExponentVector json_exponent(const Json& v, std::size_t n, const std::string& what)
{
    if (!v.is_array())
        throw InvalidInput(what + " must be an array of integers");
    if (v.size() != n)
        throw InvalidInput(what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
    std::vector<std::int64_t> c;
    for (const auto& x : v) {
        std::int64_t k = json_int(x, what + " entry");
        if (k < 0)
            throw InvalidInput(what + " has a negative entry");
        c.push_back(k);
    }
    return ExponentVector(std::move(c));
}

} // namespace detail

inline SystemFile parse_system(const Json& doc)
{
    if (!doc.is_object())
        throw InvalidInput("system description must be a JSON object");
    static const std::set<std::string> known{"n", "supports", "polynomials", "degrees"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key))
            throw InvalidInput("unknown key '" + key + "' in system description");
    if (!doc.contains("n"))
        throw InvalidInput("missing key 'n'");
    SystemFile sf;
    const std::int64_t n = detail::json_int(doc["n"], "n");
    if (n < 1)
        throw InvalidInput("invalid dimension " + std::to_string(n));
    sf.n = static_cast<std::size_t>(n);

    if (doc.contains("polynomials")) {
        const Json& polys = doc["polynomials"];
        if (!polys.is_array() || polys.empty())
            throw InvalidInput("'polynomials' must be a nonempty array");
        std::vector<SparsePolynomial> fs;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const std::string where = "polynomial " + std::to_string(i + 1);
            const Json& p = polys[i];
            if (!p.is_object() || !p.contains("terms") || !p["terms"].is_array())
                throw InvalidInput(where + " must be an object with a 'terms' array");
            for (const auto& [key, value] : p.items())
                if (key != "terms")
                    throw InvalidInput("unknown key '" + key + "' in " + where);
            SparsePolynomial f(sf.n);
            std::set<ExponentVector> seen;
            for (const auto& t : p["terms"]) {
                if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") || t.size() != 2)
                    throw InvalidInput("each term of " + where + " must be {\"exp\": [...], \"coeff\": \"p/q\"}");
                ExponentVector e = detail::json_exponent(t["exp"], sf.n, "exponent in " + where);
                if (!t["coeff"].is_string())
                    throw InvalidInput("coefficients must be strings such as \"3/2\" (" + where + ")");
                Rational c = parse_rational(t["coeff"].get<std::string>());
                if (c == 0)
                    throw InvalidInput("zero coefficient in " + where);
                if (!seen.insert(e).second)
                    throw InvalidInput("repeated exponent " + to_string(e) + " in " + where);
                f.add_term(e, c);
            }
            if (f.is_zero())
                throw InvalidInput(where + " is zero");
            fs.push_back(std::move(f));
        }
        sf.polynomials = std::move(fs);
    }

    if (doc.contains("supports")) {
        const Json& sups = doc["supports"];
        if (!sups.is_array() || sups.empty())
            throw InvalidInput("'supports' must be a nonempty array");
        for (std::size_t i = 0; i < sups.size(); ++i) {
            const std::string where = "support " + std::to_string(i + 1);
            if (!sups[i].is_array() || sups[i].empty())
                throw InvalidInput(where + " must be a nonempty array of exponent vectors");
            std::vector<ExponentVector> pts;
            for (const auto& e : sups[i])
                pts.push_back(detail::json_exponent(e, sf.n, "exponent in " + where));
            sf.supports.emplace_back(sf.n, std::move(pts));
        }
        if (sf.polynomials) {
            if (sf.polynomials->size() != sf.supports.size())
                throw InvalidInput("there are " + std::to_string(sf.supports.size()) + " supports but " +
                                   std::to_string(sf.polynomials->size()) + " polynomials");
            for (std::size_t i = 0; i < sf.supports.size(); ++i)
                if (!((*sf.polynomials)[i].support() == sf.supports[i]))
                    throw InvalidInput("support " + std::to_string(i + 1) + " differs from the support of polynomial " +
                                       std::to_string(i + 1));
        }
    }
    else if (sf.polynomials) {
        for (const auto& f : *sf.polynomials)
            sf.supports.push_back(f.support());
    }
    else {
        throw InvalidInput("the system needs 'supports' or 'polynomials'");
    }

    if (doc.contains("degrees")) {
        const Json& degs = doc["degrees"];
        if (!degs.is_array())
            throw InvalidInput("'degrees' must be an array of integers");
        std::vector<std::int64_t> d;
        for (const auto& x : degs)
            d.push_back(detail::json_int(x, "degree"));
        sf.degrees = std::move(d);
        sf.spec(); // validates count and lower bounds
    }
    return sf;
}

inline SystemFile parse_system(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return parse_system(doc);
}

inline SystemFile parse_system(const char* text) { return parse_system(std::string(text)); }

inline Json system_json(const SystemFile& sf)
{
    Json j;
    j["n"] = sf.n;
    Json sups = Json::array();
    for (const auto& s : sf.supports) {
        Json pts = Json::array();
        for (const auto& p : s.points())
            pts.push_back(std::vector<std::int64_t>(p.coords().begin(), p.coords().end()));
        sups.push_back(pts);
    }
    j["supports"] = sups;
    if (sf.polynomials) {
        Json polys = Json::array();
        for (const auto& f : *sf.polynomials)
            polys.push_back({{"terms", polynomial_json(f)}});
        j["polynomials"] = polys;
    }
    if (sf.degrees)
        j["degrees"] = *sf.degrees;
    return j;
}

} // namespace spnull

#endif // SPNULL_IO_HPP
