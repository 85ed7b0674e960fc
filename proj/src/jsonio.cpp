#include "homops/jsonio.hpp"

#include <limits>

#include "homops/groupexpr.hpp"

namespace homops::jsonio {

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw ValueError("integer entries must be numbers or decimal strings");
}

json group_json(const FgAbGroup& g) {
    json factors = json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(int_json(d));
    return json{{"expr", expr::render_group(g)},
                {"free_rank", g.free_rank()},
                {"invariant_factors", factors}};
}

json order_json(const Order& o) {
    if (!o.finite) return json{{"finite", false}};
    return json{{"finite", true}, {"value", int_json(o.value)}};
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& v) {
    const json* entries = &v;
    if (v.is_object()) {
        if (!v.contains("entries")) throw ValueError("matrix object needs an 'entries' array");
        entries = &v.at("entries");
    }
    if (!entries->is_array()) throw ValueError("matrix must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const json& row : *entries) {
        if (!row.is_array()) throw ValueError("matrix rows must be arrays");
        std::vector<Int> r;
        for (const json& e : row) r.push_back(int_from_json(e));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

json complex_json(const chains::ChainComplex& c) {
    json ranks = json::array();
    json boundaries = json::array();
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        ranks.push_back(c.rank(n));
        boundaries.push_back(matrix_json(c.boundary(n))["entries"]);
    }
    return json{{"min_degree", c.min_degree()}, {"ranks", ranks}, {"boundaries", boundaries}};
}

chains::ChainComplex complex_from_json(const json& v) {
    if (!v.is_object() || !v.contains("min_degree") || !v.contains("ranks") ||
        !v.contains("boundaries"))
        throw ValueError("chain complex json needs min_degree, ranks and boundaries");
    int min_degree = v.at("min_degree").get<int>();
    std::vector<std::size_t> ranks = v.at("ranks").get<std::vector<std::size_t>>();
    std::vector<IntMatrix> boundaries;
    std::size_t k = 0;
    for (const json& b : v.at("boundaries")) {
        std::vector<std::vector<Int>> rows;
        for (const json& row : b) {
            std::vector<Int> r;
            for (const json& e : row) r.push_back(int_from_json(e));
            rows.push_back(std::move(r));
        }
        IntMatrix m = IntMatrix::from_rows(rows);
        // an empty entries array cannot express its column count
        if (m.rows() == 0 && k < ranks.size()) m = IntMatrix(0, ranks[k]);
        boundaries.push_back(std::move(m));
        ++k;
    }
    return chains::ChainComplex(min_degree, std::move(ranks), std::move(boundaries));
}

json uct_json(const moore::UctSequence& seq) {
    return json{{"ext_term", group_json(seq.ext_term)},
                {"hom_term", group_json(seq.hom_term)},
                {"middle_cardinality", order_json(seq.middle_cardinality)},
                {"notes", seq.notes}};
}

json kunneth_json(const chains::KunnethReport& rep) {
    json lines = json::array();
    for (const auto& line : rep.lines)
        lines.push_back(json{{"degree", line.degree},
                             {"expected", expr::render_group(line.expected)},
                             {"computed", expr::render_group(line.computed)},
                             {"ok", line.ok}});
    return json{{"g1", expr::render_group(rep.g1)},
                {"q1", rep.q1},
                {"g2", expr::render_group(rep.g2)},
                {"q2", rep.q2},
                {"pass", rep.pass},
                {"degrees", lines}};
}

json suite_json(const verify::SuiteResult& s) {
    return json{{"suite", s.name},
                {"cases", s.cases},
                {"failures", s.failures},
                {"pass", s.pass()},
                {"seconds", s.seconds},
                {"notes", s.notes}};
}

json classification_json(const ops::ClassificationReport& rep) {
    json j{{"type",
            json{{"g1", group_json(rep.type.g1)},
                 {"g2", group_json(rep.type.g2)},
                 {"g3", group_json(rep.type.g3)},
                 {"q1", rep.type.q1},
                 {"q2", rep.type.q2},
                 {"q3", rep.type.q3}}},
           {"in_basic_range", ops::to_string(rep.in_basic_range)},
           {"degree_floor_ok", rep.degree_floor_ok},
           {"bi_additive_forced", rep.bi_additive_forced},
           {"trivially_zero", rep.trivially_zero},
           {"special_kind", ops::to_string(rep.special)}};
    if (rep.bo) j["bo"] = uct_json(rep.bo.value());
    else j["bo"] = json{{"unknown", rep.bo.reason()}};
    if (rep.special != ops::SpecialKind::None) {
        if (rep.special_count) j["special_count"] = int_json(rep.special_count.value());
        else j["special_count"] = json{{"unknown", rep.special_count.reason()}};
        if (rep.torsion_existence) j["torsion_exists"] = *rep.torsion_existence;
        if (rep.sign)
            j["switch_sign"] = json{{"exponent", rep.sign->exponent}, {"sign", rep.sign->sign}};
    }
    j["notes"] = rep.notes;
    return j;
}

}  // namespace homops::jsonio
