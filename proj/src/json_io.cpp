#include "chern/json_io.hpp"

#include <stdexcept>

namespace chern {

namespace {

const Integer kSafe = Integer(1) << 53;

[[noreturn]] void bad(const std::string& why) { throw std::invalid_argument("json: " + why); }

Integer parse_decimal(const std::string& s) {
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) {
        bad("not a decimal integer: \"" + s + "\"");
    }
    return x;
}

long long_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        bad(std::string(what) + " must be an integer");
    }
    return j.get<long>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json to_json(const Integer& x) {
    if (abs(x) <= kSafe) {
        return Json(x.get_si());
    }
    return Json{{"format", "bigint"}, {"value", x.get_str()}};
}

Json to_json(const Rational& x) {
    if (x.is_integer()) {
        return to_json(x.num());
    }
    return Json{{"num", x.num().get_str()}, {"den", x.den().get_str()}};
}

Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) {
        a.push_back(to_json(c));
    }
    return a;
}

Json to_json(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) {
        a.push_back(to_json(x));
    }
    return a;
}

Json to_json(const BoundValue& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                return Json{{"coefficients", to_json(x)}, {"text", x.str()}};
            } else {
                return to_json(x);
            }
        },
        v);
}

Json to_json(const ChernData& c) { return to_json(c.classes()); }

Json to_json(const SplittingType& b) { return Json(b.entries()); }

Json to_json(const SheafDescriptor& d) {
    Json j;
    j["name"] = d.name;
    j["ambient_dim"] = d.ambient_dim();
    j["rank"] = d.rank();
    j["chern"] = to_json(d.chern);
    j["splitting"] = to_json(d.splitting);
    if (d.gst) {
        Json rows = Json::array();
        for (const auto& r : d.gst->rows()) {
            rows.push_back(r ? to_json(*r) : Json(nullptr));
        }
        j["gst"] = rows;
    } else {
        j["gst"] = nullptr;
    }
    Json series = Json::array();
    for (const auto& piece : d.h0_series) {
        series.push_back(Json{{"min_t", piece.min_t}, {"coefficients", to_json(piece.poly)}});
    }
    j["h0_series"] = series;
    if (d.cohomology) {
        Json h = Json::array();
        for (const auto& row : d.cohomology->h) {
            h.push_back(to_json(row));
        }
        j["cohomology"] = Json{{"kmin", d.cohomology->kmin}, {"kmax", d.cohomology->kmax}, {"h", h}};
    } else {
        j["cohomology"] = nullptr;
    }
    j["flags"] = Json{{"reflexive", d.flags.reflexive},
                      {"torsion_free", d.flags.torsion_free},
                      {"split", d.flags.split},
                      {"semistable", d.flags.semistable},
                      {"stable", d.flags.stable}};
    j["provenance"] = d.provenance;
    return j;
}

Json to_json(const std::vector<SheafDescriptor>& catalog) {
    Json a = Json::array();
    for (const auto& d : catalog) {
        a.push_back(to_json(d));
    }
    return Json{{"descriptors", a}};
}

Json to_json(const BoundReport& r) {
    return Json{{"name", r.name},
                {"bound", to_json(r.bound)},
                {"oracle", r.oracle ? to_json(*r.oracle) : Json(nullptr)},
                {"verdict", to_string(r.verdict)},
                {"note", r.note}};
}

Json to_json(const VerificationReport& r) {
    Json reports = Json::array();
    Json sharp = Json::array();
    for (const auto& b : r.reports) {
        reports.push_back(to_json(b));
        if (b.verdict == Verdict::equality) {
            sharp.push_back(b.name);
        }
    }
    return Json{{"descriptor", r.descriptor},
                {"overall", r.overall()},
                {"reports", reports},
                {"sharp", sharp}};
}

Json to_json(const CohomologyBounds& cb) {
    return Json{{"ambient_dim", cb.ambient_dim},
                {"P", to_json(cb.per_index_bounds)},
                {"Q", to_json(cb.vanishing_threshold)},
                {"C", to_json(cb.chern_bounds)}};
}

// ---------------------------------------------------------------------------

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
    }
    if (j.is_string()) {
        return parse_decimal(j.get<std::string>());
    }
    if (j.is_object() && j.value("format", "") == "bigint" && j.contains("value") &&
        j.at("value").is_string()) {
        return parse_decimal(j.at("value").get<std::string>());
    }
    bad("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_object() && j.contains("num")) {
        return Rational(integer_from_json(field(j, "num")), integer_from_json(field(j, "den")));
    }
    return Rational(integer_from_json(j));
}

Polynomial polynomial_from_json(const Json& j) {
    const Json& a = j.is_object() ? field(j, "coefficients") : j;
    if (!a.is_array()) {
        bad("polynomial must be a coefficient array");
    }
    std::vector<Rational> co;
    for (const auto& c : a) {
        co.push_back(rational_from_json(c));
    }
    return Polynomial(std::move(co));
}

SplittingType splitting_from_json(const Json& j) {
    if (!j.is_array()) {
        bad("splitting type must be an array");
    }
    std::vector<long> e;
    for (const auto& x : j) {
        e.push_back(long_from_json(x, "splitting entry"));
    }
    return SplittingType(std::move(e));
}

SheafDescriptor descriptor_from_json(const Json& j) {
    const std::string name = field(j, "name").get<std::string>();
    const int n_dim = static_cast<int>(long_from_json(field(j, "ambient_dim"), "ambient_dim"));
    const long rank = long_from_json(field(j, "rank"), "rank");
    const Json& cj = field(j, "chern");
    if (!cj.is_array()) {
        bad("chern must be an array");
    }
    std::vector<Integer> classes;
    for (const auto& x : cj) {
        classes.push_back(integer_from_json(x));
    }
    SheafDescriptor d{name, ChernData(n_dim, rank, std::move(classes)),
                      splitting_from_json(field(j, "splitting")), std::nullopt, {}, std::nullopt,
                      SheafFlags{}, j.value("provenance", std::string())};
    if (j.contains("gst") && !j.at("gst").is_null()) {
        std::vector<std::optional<SplittingType>> rows;
        for (const auto& r : j.at("gst")) {
            rows.push_back(r.is_null() ? std::nullopt : std::optional(splitting_from_json(r)));
        }
        d.gst = GstMatrix(n_dim, std::move(rows));
    }
    if (j.contains("h0_series")) {
        for (const auto& piece : j.at("h0_series")) {
            d.h0_series.push_back({long_from_json(field(piece, "min_t"), "min_t"),
                                   polynomial_from_json(field(piece, "coefficients"))});
        }
    }
    if (j.contains("cohomology") && !j.at("cohomology").is_null()) {
        const Json& c = j.at("cohomology");
        CohomologyTable t;
        t.kmin = long_from_json(field(c, "kmin"), "kmin");
        t.kmax = long_from_json(field(c, "kmax"), "kmax");
        for (const auto& row : field(c, "h")) {
            std::vector<Integer> r;
            for (const auto& x : row) {
                r.push_back(integer_from_json(x));
            }
            t.h.push_back(std::move(r));
        }
        d.cohomology = std::move(t);
    }
    if (j.contains("flags")) {
        const Json& f = j.at("flags");
        d.flags.reflexive = f.value("reflexive", false);
        d.flags.torsion_free = f.value("torsion_free", true);
        d.flags.split = f.value("split", false);
        d.flags.semistable = f.value("semistable", false);
        d.flags.stable = f.value("stable", false);
    }
    d.validate();
    return d;
}

std::vector<SheafDescriptor> catalog_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(e.what());
    }
    const Json* list = &j;
    if (j.is_object() && j.contains("descriptors")) {
        list = &j.at("descriptors");
    } else if (j.is_object()) {
        return {descriptor_from_json(j)};
    }
    if (!list->is_array()) {
        bad("catalog must be an array of descriptors");
    }
    std::vector<SheafDescriptor> out;
    for (const auto& d : *list) {
        out.push_back(descriptor_from_json(d));
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chern
