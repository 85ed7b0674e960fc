#include "homops/moorecalc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homops/functors.hpp"
#include "homops/groupexpr.hpp"

namespace homops::moore {

MooreExpr MooreExpr::atom(const FgAbGroup& g, int degree) {
    if (degree < 2) throw DegreeTooSmall("Moore atoms need degree >= 2");
    MooreExpr e;
    if (!g.is_trivial()) e.atoms_.push_back({g, degree});
    return e;
}

MooreExpr MooreExpr::wedge(const MooreExpr& a, const MooreExpr& b) {
    MooreExpr e;
    auto ia = a.atoms_.begin(), ib = b.atoms_.begin();
    while (ia != a.atoms_.end() || ib != b.atoms_.end()) {
        if (ib == b.atoms_.end() || (ia != a.atoms_.end() && ia->degree < ib->degree)) {
            e.atoms_.push_back(*ia++);
        } else if (ia == a.atoms_.end() || ib->degree < ia->degree) {
            e.atoms_.push_back(*ib++);
        } else {
            e.atoms_.push_back({direct_sum(ia->group, ib->group), ia->degree});
            ++ia;
            ++ib;
        }
    }
    return e;
}

MooreExpr MooreExpr::suspended(int times) const {
    MooreExpr e;
    for (const Atom& a : atoms_) e.atoms_.push_back({a.group, a.degree + times});
    return e;
}

MooreExpr smash_decompose(const MooreExpr& a, const MooreExpr& b) {
    MooreExpr out;
    for (const Atom& x : a.atoms())
        for (const Atom& y : b.atoms()) {
            if (x.group.has_2_torsion() && y.group.has_2_torsion())
                throw Unsupported2Torsion(
                    "smash decomposition is unavailable when both groups have 2-torsion (" +
                    expr::render_group(x.group) + " and " + expr::render_group(y.group) + ")");
            MooreExpr piece = MooreExpr::wedge(
                MooreExpr::atom(functors::tensor(x.group, y.group), x.degree + y.degree),
                MooreExpr::atom(functors::tor(x.group, y.group), x.degree + y.degree + 1));
            out = MooreExpr::wedge(out, piece);
        }
    return out;
}

std::string to_string(SummandClass cls) {
    switch (cls) {
        case SummandClass::Free: return "Z";
        case SummandClass::EvenCyclic: return "even";
        case SummandClass::OddCyclic: return "odd";
    }
    throw std::logic_error("unreachable summand class");
}

const StemTable& StemTable::builtin() {
    static const StemTable table = [] {
        StemTable t;
        t.insert({SummandClass::Free, 1, FgAbGroup::cyclic(2),
                  "first stable stem of the sphere"});
        t.insert({SummandClass::EvenCyclic, 1, FgAbGroup::cyclic(2),
                  "first stem of an even-order Moore space; literature value, one Z/2 per even "
                  "summand, override via a user table if a finer value is needed"});
        t.insert({SummandClass::OddCyclic, 1, FgAbGroup{},
                  "odd-order Moore spaces have trivial first stem"});
        return t;
    }();
    return table;
}

void StemTable::insert(StemEntry entry) {
    entries_[{static_cast<int>(entry.cls), entry.stem}] = std::move(entry);
}

std::optional<StemEntry> StemTable::find(SummandClass cls, int stem) const {
    auto it = entries_.find({static_cast<int>(cls), stem});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<StemEntry> StemTable::entries() const {
    std::vector<StemEntry> out;
    out.reserve(entries_.size());
    for (const auto& [key, e] : entries_) out.push_back(e);
    return out;
}

StemTable StemTable::merged_with(const StemTable& overrides) const {
    StemTable out = *this;
    for (const auto& [key, e] : overrides.entries_) out.entries_[key] = e;
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

SummandClass parse_class(const std::string& s, std::size_t line_no) {
    if (s == "Z") return SummandClass::Free;
    if (s == "even") return SummandClass::EvenCyclic;
    if (s == "odd") return SummandClass::OddCyclic;
    throw ParseError(line_no, "unknown summand class '" + s + "' (want Z, even or odd)");
}

}  // namespace

StemTable StemTable::parse(std::istream& in) {
    StemTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        // provenance is the trailing field and may contain commas
        const std::string prov_key = "provenance=";
        std::size_t prov_at = body.find(prov_key);
        std::string provenance;
        if (prov_at != std::string::npos) {
            provenance = trim(body.substr(prov_at + prov_key.size()));
            body = trim(body.substr(0, prov_at));
            if (!body.empty() && body.back() == ',') body.pop_back();
        }
        std::optional<SummandClass> cls;
        std::optional<int> stem;
        std::optional<FgAbGroup> value;
        std::stringstream fields(body);
        std::string field;
        while (std::getline(fields, field, ',')) {
            field = trim(field);
            if (field.empty()) continue;
            std::size_t eq = field.find('=');
            if (eq == std::string::npos)
                throw ParseError(line_no, "expected key=value in stem table record");
            std::string key = trim(field.substr(0, eq));
            std::string val = trim(field.substr(eq + 1));
            if (key == "class") cls = parse_class(val, line_no);
            else if (key == "stem") stem = std::stoi(val);
            else if (key == "value") value = expr::parse_group(val);
            else throw ParseError(line_no, "unknown stem table key '" + key + "'");
        }
        if (!cls || !stem || !value)
            throw ParseError(line_no, "stem table record needs class, stem and value");
        if (*stem < 1) throw ValueError("stem table entries start at stem 1 (stem 0 is the group)");
        table.insert({*cls, *stem, *value, provenance});
    }
    return table;
}

StemTable StemTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open stem table file: " + path);
    return parse(in);
}

Maybe<FgAbGroup> stem(const FgAbGroup& g, int k, int n, const StemTable& table) {
    if (n < 2) throw DegreeTooSmall("Moore space degree must be >= 2");
    if (k < 0) return FgAbGroup{};
    if (k == 0) return g;
    if (n < 3) throw DegreeTooSmall("stems above 0 need base degree >= 3");
    if (n < k + 2)
        return Maybe<FgAbGroup>::unknown("stem " + std::to_string(k) +
                                         " is only tabulated for base degree >= " +
                                         std::to_string(k + 2));
    FgAbGroup result;
    auto accumulate = [&](SummandClass cls) -> std::optional<std::string> {
        auto entry = table.find(cls, k);
        if (!entry)
            return "stem " + std::to_string(k) + " not tabulated for class " + to_string(cls);
        result = direct_sum(result, entry->value);
        return std::nullopt;
    };
    for (std::size_t i = 0; i < g.free_rank(); ++i)
        if (auto missing = accumulate(SummandClass::Free)) return Maybe<FgAbGroup>::unknown(*missing);
    for (const auto& [p, e] : g.primary_factors()) {
        SummandClass cls = (p == 2) ? SummandClass::EvenCyclic : SummandClass::OddCyclic;
        if (auto missing = accumulate(cls)) return Maybe<FgAbGroup>::unknown(*missing);
    }
    return result;
}

Maybe<FgAbGroup> wedge_homotopy_group(const MooreExpr& x, int m, const StemTable& table) {
    const auto& atoms = x.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            int bound = atoms[i].degree + atoms[j].degree - 2;
            if (m > bound)
                return Maybe<FgAbGroup>::unknown(
                    "pi_" + std::to_string(m) + " of the wedge has cross terms beyond degree " +
                    std::to_string(bound) + "; atom-wise assembly stops there");
        }
    FgAbGroup result;
    for (const Atom& a : atoms) {
        Maybe<FgAbGroup> part = stem(a.group, m - a.degree, a.degree, table);
        if (!part) return part;
        result = direct_sum(result, part.value());
    }
    return result;
}

Maybe<UctSequence> homotopy_with_coeffs(const MooreExpr& x, int n, const FgAbGroup& g,
                                        const StemTable& table) {
    Maybe<FgAbGroup> pi_n = wedge_homotopy_group(x, n, table);
    if (!pi_n) return Maybe<UctSequence>::unknown(pi_n.reason());
    Maybe<FgAbGroup> pi_n1 = wedge_homotopy_group(x, n + 1, table);
    if (!pi_n1) return Maybe<UctSequence>::unknown(pi_n1.reason());
    UctSequence seq;
    seq.ext_term = functors::ext(g, pi_n1.value());
    seq.hom_term = functors::hom(g, pi_n.value());
    seq.middle_cardinality = seq.ext_term.order() * seq.hom_term.order();
    seq.notes = "pi_" + std::to_string(n) + "(X) = " + expr::render_group(pi_n.value()) +
                ", pi_" + std::to_string(n + 1) + "(X) = " + expr::render_group(pi_n1.value());
    return seq;
}

std::string render_moore(const MooreExpr& x) {
    if (x.is_point()) return "point";
    std::string out;
    for (const Atom& a : x.atoms()) {
        if (!out.empty()) out += " | ";
        out += expr::render_group(a.group) + "@" + std::to_string(a.degree);
    }
    return out;
}

MooreExpr parse_moore(const std::string& text) {
    std::string body = trim(text);
    if (body == "point" || body == "*") return MooreExpr::point();
    MooreExpr out;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t bar = body.find('|', start);
        std::string piece =
            trim(bar == std::string::npos ? body.substr(start) : body.substr(start, bar - start));
        std::size_t at = piece.rfind('@');
        if (at == std::string::npos)
            throw ParseError(start, "Moore atom needs the form <group-expr>@<degree>");
        FgAbGroup g = expr::parse_group(piece.substr(0, at));
        int degree = 0;
        try {
            degree = std::stoi(trim(piece.substr(at + 1)));
        } catch (const std::exception&) {
            throw ParseError(start + at + 1, "bad Moore atom degree");
        }
        out = MooreExpr::wedge(out, MooreExpr::atom(g, degree));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

}  // namespace homops::moore
