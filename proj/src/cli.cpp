#include "homops/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "homops/abgroup.hpp"
#include "homops/chains.hpp"
#include "homops/functors.hpp"
#include "homops/groupexpr.hpp"
#include "homops/jsonio.hpp"
#include "homops/moorecalc.hpp"
#include "homops/opsclassify.hpp"
#include "homops/oracle.hpp"
#include "homops/pointmaps.hpp"
#include "homops/verify.hpp"

namespace homops::cli {

namespace {

using json = nlohmann::ordered_json;

using jsonio::classification_json;
using jsonio::complex_from_json;
using jsonio::complex_json;
using jsonio::group_json;
using jsonio::int_json;
using jsonio::kunneth_json;
using jsonio::matrix_from_json;
using jsonio::matrix_json;
using jsonio::order_json;
using jsonio::suite_json;
using jsonio::uct_json;

json rational_json(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json suspension_json(const maps::SuspensionPoint& p) {
    return json{{"token", p.x.token},
                {"point_basepoint", p.x.is_basepoint},
                {"coordinate", rational_json(p.u)},
                {"collapsed", p.is_base()}};
}

json product_json(const maps::ProductPoint& p) {
    return json{{"first", suspension_json(p.first)}, {"second", suspension_json(p.second)}};
}

Rational parse_rational(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ValueError("bad rational '" + s + "' (want p or p/q)");
    }
    // unreachable
}

maps::AbstractPoint parse_point(const std::string& s) {
    if (s == "*") return maps::AbstractPoint::base();
    return maps::AbstractPoint::named(s);
}

ops::OperationType parse_operation_type(const std::string& s) {
    std::size_t semi = s.find(';');
    if (semi == std::string::npos)
        throw ValueError("operation type needs the form \"G1,G2,G3;q1,q2,q3\"");
    auto split = [](const std::string& part) {
        std::vector<std::string> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    };
    std::vector<std::string> groups = split(s.substr(0, semi));
    std::vector<std::string> degrees = split(s.substr(semi + 1));
    if (groups.size() != 3 || degrees.size() != 3)
        throw ValueError("operation type needs three groups and three degrees");
    auto degree = [](const std::string& d) {
        try {
            return std::stoi(d);
        } catch (const std::exception&) {
            throw ValueError("bad degree '" + d + "'");
        }
    };
    return ops::OperationType(expr::parse_group(groups[0]), expr::parse_group(groups[1]),
                              expr::parse_group(groups[2]), degree(degrees[0]),
                              degree(degrees[1]), degree(degrees[2]));
}

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ValueError("cannot open file: " + arg.substr(1));
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValueError(std::string("bad json argument: ") + e.what());
    }
}

struct Context {
    bool json_output = false;
    bool use_oracle = false;
    std::string stem_table_path;
    json report;
    std::string text;
    int exit_code = 0;

    moore::StemTable stems = moore::StemTable::builtin();

    void load_stems() {
        if (!stem_table_path.empty())
            stems = moore::StemTable::builtin().merged_with(
                moore::StemTable::load_file(stem_table_path));
    }

    void result(json j, std::string human) {
        report = std::move(j);
        text = std::move(human);
    }

    void unknown(const std::string& reason) {
        report = json{{"unknown", {{"reason", reason}}}};
        text = "unknown: " + reason;
        exit_code = 1;
    }
};

std::string classification_text(const ops::ClassificationReport& rep);

void register_group_commands(CLI::App& app, Context& ctx) {
    CLI::App* group = app.add_subcommand("group", "canonical finitely generated abelian groups");
    group->require_subcommand(1);

    auto* canon = group->add_subcommand("canon", "parse and canonicalize a group expression");
    auto expr_arg = std::make_shared<std::string>();
    canon->add_option("expr", *expr_arg, "group expression, e.g. \"Z^2 + Z/4 + Z/6\"")->required();
    canon->callback([&ctx, expr_arg] {
        FgAbGroup g = expr::parse_group(*expr_arg);
        ctx.result(json{{"input", *expr_arg}, {"group", group_json(g)}}, expr::render_group(g));
    });

    auto* sum = group->add_subcommand("sum", "direct sum of two groups");
    auto sum_a = std::make_shared<std::string>();
    auto sum_b = std::make_shared<std::string>();
    sum->add_option("a", *sum_a)->required();
    sum->add_option("b", *sum_b)->required();
    sum->callback([&ctx, sum_a, sum_b] {
        FgAbGroup g = direct_sum(expr::parse_group(*sum_a), expr::parse_group(*sum_b));
        ctx.result(json{{"group", group_json(g)}}, expr::render_group(g));
    });

    auto* ord = group->add_subcommand("order", "order of a group");
    auto ord_arg = std::make_shared<std::string>();
    ord->add_option("expr", *ord_arg)->required();
    ord->callback([&ctx, ord_arg] {
        Order o = expr::parse_group(*ord_arg).order();
        ctx.result(json{{"order", order_json(o)}}, o.to_string());
    });

    auto* snf = group->add_subcommand("snf", "Smith normal form of an integer matrix");
    auto snf_arg = std::make_shared<std::string>();
    snf->add_option("--matrix", *snf_arg, "json rows, e.g. \"[[2,4],[6,8]]\"")->required();
    snf->callback([&ctx, snf_arg] {
        SmithResult s = smith_normal_form(matrix_from_json(load_json_arg(*snf_arg)));
        json diag = json::array();
        std::string human;
        for (const Int& d : s.diag) {
            diag.push_back(int_json(d));
            human += (human.empty() ? "" : ", ") + d.str();
        }
        ctx.result(json{{"diag", diag}, {"smith", matrix_json(s.smith)}},
                   "invariant factors: (" + human + ")");
    });

    auto* coker = group->add_subcommand("cokernel", "group presented by a relation matrix");
    auto coker_arg = std::make_shared<std::string>();
    coker->add_option("--matrix", *coker_arg, "rows are relations, columns are generators")
        ->required();
    coker->callback([&ctx, coker_arg] {
        FgAbGroup g = cokernel(matrix_from_json(load_json_arg(*coker_arg)));
        ctx.result(json{{"group", group_json(g)}}, expr::render_group(g));
    });
}

void register_functor_commands(CLI::App& app, Context& ctx) {
    CLI::App* functor = app.add_subcommand("functor", "Hom, Ext, tensor and Tor");
    functor->require_subcommand(1);
    struct Spec {
        const char* name;
        functors::FunctorKind kind;
    };
    for (Spec spec : {Spec{"tensor", functors::FunctorKind::Tensor},
                      Spec{"tor", functors::FunctorKind::Tor},
                      Spec{"hom", functors::FunctorKind::Hom},
                      Spec{"ext", functors::FunctorKind::Ext}}) {
        auto* cmd = functor->add_subcommand(spec.name, std::string(spec.name) + " of two groups");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("G", *a)->required();
        cmd->add_option("H", *b)->required();
        functors::FunctorKind kind = spec.kind;
        cmd->callback([&ctx, a, b, kind] {
            FgAbGroup g = expr::parse_group(*a);
            FgAbGroup h = expr::parse_group(*b);
            FgAbGroup value = functors::apply(kind, g, h);
            json rep{{"group", group_json(value)}};
            std::string human = expr::render_group(value);
            if (ctx.use_oracle) {
                json oracle_rep;
                bool agree = true;
                switch (kind) {
                    case functors::FunctorKind::Hom: {
                        Int count = oracle::hom_count(g, h);
                        agree = count == value.order().value;
                        oracle_rep = json{{"hom_count", int_json(count)}};
                        break;
                    }
                    case functors::FunctorKind::Ext: {
                        FgAbGroup o = oracle::ext(g, h);
                        agree = o == value;
                        oracle_rep = json{{"group", group_json(o)}};
                        break;
                    }
                    case functors::FunctorKind::Tensor: {
                        FgAbGroup o = oracle::tensor(g, h);
                        agree = o == value;
                        oracle_rep = json{{"group", group_json(o)}};
                        break;
                    }
                    case functors::FunctorKind::Tor: {
                        FgAbGroup o = oracle::tor(g, h);
                        agree = o == value;
                        oracle_rep = json{{"group", group_json(o)}};
                        break;
                    }
                }
                oracle_rep["agrees"] = agree;
                rep["oracle"] = oracle_rep;
                human += agree ? "  [oracle agrees]" : "  [ORACLE DISAGREES]";
                if (!agree) ctx.exit_code = 1;
            }
            ctx.result(std::move(rep), std::move(human));
        });
    }
}

void register_chain_commands(CLI::App& app, Context& ctx) {
    CLI::App* chain = app.add_subcommand("chain", "integer chain complexes and homology");
    chain->require_subcommand(1);

    auto* moore_cmd = chain->add_subcommand("moore", "cellular model of a Moore space");
    auto mg = std::make_shared<std::string>();
    auto mn = std::make_shared<int>(0);
    moore_cmd->add_option("--g", *mg, "group expression")->required();
    moore_cmd->add_option("--n", *mn, "degree >= 2")->required();
    moore_cmd->callback([&ctx, mg, mn] {
        chains::ChainComplex c = chains::moore_complex(expr::parse_group(*mg), *mn);
        ctx.result(json{{"complex", complex_json(c)}},
                   "chain complex on degrees [" + std::to_string(c.min_degree()) + ", " +
                       std::to_string(c.max_degree()) + "]");
    });

    auto* tensor_cmd = chain->add_subcommand("tensor", "tensor product of two complexes");
    auto ta = std::make_shared<std::string>();
    auto tb = std::make_shared<std::string>();
    tensor_cmd->add_option("--a", *ta, "complex json or @file")->required();
    tensor_cmd->add_option("--b", *tb, "complex json or @file")->required();
    tensor_cmd->callback([&ctx, ta, tb] {
        chains::ChainComplex c = chains::tensor_complex(complex_from_json(load_json_arg(*ta)),
                                                        complex_from_json(load_json_arg(*tb)));
        ctx.result(json{{"complex", complex_json(c)}},
                   "tensor complex on degrees [" + std::to_string(c.min_degree()) + ", " +
                       std::to_string(c.max_degree()) + "]");
    });

    auto* hom_cmd = chain->add_subcommand("homology", "homology groups of a complex");
    auto hc = std::make_shared<std::string>();
    auto hat = std::make_shared<int>(std::numeric_limits<int>::min());
    hom_cmd->add_option("--complex", *hc, "complex json or @file")->required();
    hom_cmd->add_option("--at", *hat, "single degree (default: every degree)");
    hom_cmd->callback([&ctx, hc, hat] {
        chains::ChainComplex c = complex_from_json(load_json_arg(*hc));
        json per_degree = json::array();
        std::string human;
        int lo = *hat == std::numeric_limits<int>::min() ? c.min_degree() : *hat;
        int hi = *hat == std::numeric_limits<int>::min() ? c.max_degree() : *hat;
        for (int n = lo; n <= hi; ++n) {
            FgAbGroup h = chains::homology(c, n);
            per_degree.push_back(json{{"degree", n}, {"group", group_json(h)}});
            human += "H_" + std::to_string(n) + " = " + expr::render_group(h) + "\n";
        }
        ctx.result(json{{"homology", per_degree}}, human);
    });

    auto* kun = chain->add_subcommand("kunneth", "chain-level product/Tor check");
    auto kg1 = std::make_shared<std::string>();
    auto kg2 = std::make_shared<std::string>();
    auto kq1 = std::make_shared<int>(0);
    auto kq2 = std::make_shared<int>(0);
    kun->add_option("--g1", *kg1)->required();
    kun->add_option("--q1", *kq1)->required();
    kun->add_option("--g2", *kg2)->required();
    kun->add_option("--q2", *kq2)->required();
    kun->callback([&ctx, kg1, kg2, kq1, kq2] {
        chains::KunnethReport rep =
            chains::kunneth_check(expr::parse_group(*kg1), *kq1, expr::parse_group(*kg2), *kq2);
        std::string human;
        for (const auto& line : rep.lines)
            human += "H_" + std::to_string(line.degree) + ": expected " +
                     expr::render_group(line.expected) + ", computed " +
                     expr::render_group(line.computed) + (line.ok ? "  ok" : "  MISMATCH") + "\n";
        human += rep.pass ? "pass" : "FAIL";
        if (!rep.pass) ctx.exit_code = 1;
        ctx.result(kunneth_json(rep), human);
    });
}

void register_moore_commands(CLI::App& app, Context& ctx) {
    CLI::App* moore_cmd = app.add_subcommand("moore", "symbolic Moore-space calculus");
    moore_cmd->require_subcommand(1);

    auto* dec = moore_cmd->add_subcommand("decompose", "smash product as a wedge");
    auto da = std::make_shared<std::string>();
    auto db = std::make_shared<std::string>();
    dec->add_option("--a", *da, "Moore expression, e.g. \"Z/3@4\"")->required();
    dec->add_option("--b", *db)->required();
    dec->callback([&ctx, da, db] {
        moore::MooreExpr result =
            moore::smash_decompose(moore::parse_moore(*da), moore::parse_moore(*db));
        ctx.result(json{{"wedge", moore::render_moore(result)}}, moore::render_moore(result));
    });

    auto* stem_cmd = moore_cmd->add_subcommand("stem", "tabulated stable stem of a Moore space");
    auto sg = std::make_shared<std::string>();
    auto sk = std::make_shared<int>(0);
    auto sn = std::make_shared<int>(0);
    stem_cmd->add_option("--g", *sg)->required();
    stem_cmd->add_option("--k", *sk, "stem index >= 0")->required();
    stem_cmd->add_option("--n", *sn, "base degree")->required();
    stem_cmd->callback([&ctx, sg, sk, sn] {
        ctx.load_stems();
        Maybe<FgAbGroup> result = moore::stem(expr::parse_group(*sg), *sk, *sn, ctx.stems);
        if (!result) {
            ctx.unknown(result.reason());
            return;
        }
        ctx.result(json{{"group", group_json(result.value())}},
                   expr::render_group(result.value()));
    });

    auto* pi = moore_cmd->add_subcommand("pi", "homotopy group with coefficients");
    auto ps = std::make_shared<std::string>();
    auto pn = std::make_shared<int>(0);
    auto pc = std::make_shared<std::string>();
    pi->add_option("--space", *ps, "wedge of Moore atoms, e.g. \"Z/3@8 | Z/3@9\"")->required();
    pi->add_option("--n", *pn)->required();
    pi->add_option("--coeff", *pc, "coefficient group")->required();
    pi->callback([&ctx, ps, pn, pc] {
        ctx.load_stems();
        Maybe<moore::UctSequence> seq = moore::homotopy_with_coeffs(
            moore::parse_moore(*ps), *pn, expr::parse_group(*pc), ctx.stems);
        if (!seq) {
            ctx.unknown(seq.reason());
            return;
        }
        const moore::UctSequence& u = seq.value();
        ctx.result(json{{"uct", uct_json(u)}},
                   "0 -> " + expr::render_group(u.ext_term) + " -> pi (cardinality " +
                       u.middle_cardinality.to_string() + ") -> " +
                       expr::render_group(u.hom_term) + " -> 0");
    });
}

void register_ops_commands(CLI::App& app, Context& ctx) {
    CLI::App* ops_cmd = app.add_subcommand("ops", "binary-operation classification");
    ops_cmd->require_subcommand(1);

    auto add_type_cmd = [&](const char* name, const char* desc, auto handler) {
        auto* cmd = ops_cmd->add_subcommand(name, desc);
        auto type_arg = std::make_shared<std::string>();
        cmd->add_option("--type", *type_arg, "\"G1,G2,G3;q1,q2,q3\"")->required();
        cmd->callback([&ctx, type_arg, handler] { handler(parse_operation_type(*type_arg)); });
    };

    add_type_cmd("classify", "full classification report", [&ctx](const ops::OperationType& t) {
        ctx.load_stems();
        ops::ClassificationReport rep = ops::classify(t, ctx.stems);
        ctx.result(classification_json(rep), classification_text(rep));
    });
    add_type_cmd("range", "basic range verdict", [&ctx](const ops::OperationType& t) {
        ops::RangeReport rep = ops::basic_range_check(t);
        ctx.result(json{{"verdict", ops::to_string(rep.verdict)},
                        {"degree_floor_ok", rep.degree_floor_ok}},
                   ops::to_string(rep.verdict));
    });
    add_type_cmd("trivial", "does every basic operation of the type vanish",
                 [&ctx](const ops::OperationType& t) {
                     bool v = ops::triviality_check(t);
                     ctx.result(json{{"trivially_zero", v}}, v ? "true" : "false");
                 });
    add_type_cmd("kind", "Whitehead/Torsion shape detection", [&ctx](const ops::OperationType& t) {
        ops::SpecialKind k = ops::special_kind(t);
        ctx.result(json{{"special_kind", ops::to_string(k)}}, ops::to_string(k));
    });
    add_type_cmd("bo", "group of basic operations", [&ctx](const ops::OperationType& t) {
        ctx.load_stems();
        Maybe<moore::UctSequence> seq = ops::bo_group(t, ctx.stems);
        if (!seq) {
            ctx.unknown(seq.reason());
            return;
        }
        ctx.result(json{{"bo", uct_json(seq.value())}},
                   "cardinality " + seq.value().middle_cardinality.to_string());
    });

    auto* cw = ops_cmd->add_subcommand("count-whitehead", "number of Whitehead products");
    auto wg1 = std::make_shared<std::string>();
    auto wg2 = std::make_shared<std::string>();
    auto wq1 = std::make_shared<int>(0);
    auto wq2 = std::make_shared<int>(0);
    cw->add_option("--g1", *wg1)->required();
    cw->add_option("--g2", *wg2)->required();
    cw->add_option("--q1", *wq1)->required();
    cw->add_option("--q2", *wq2)->required();
    cw->callback([&ctx, wg1, wg2, wq1, wq2] {
        ctx.load_stems();
        FgAbGroup g1 = expr::parse_group(*wg1);
        FgAbGroup g2 = expr::parse_group(*wg2);
        ops::OperationType type(g1, g2, functors::tensor(g1, g2), *wq1, *wq2, *wq1 + *wq2 - 1);
        Maybe<Int> count = ops::count_special_ops(type, ctx.stems);
        if (!count) {
            ctx.unknown(count.reason());
            return;
        }
        ctx.result(json{{"count", int_json(count.value())},
                        {"type", json{{"g3", group_json(type.g3)}, {"q3", type.q3}}}},
                   count.value().str());
    });

    auto* te = ops_cmd->add_subcommand("torsion-exists", "Hilton existence criterion");
    auto tm = std::make_shared<std::string>();
    auto tn = std::make_shared<std::string>();
    auto tq1 = std::make_shared<int>(0);
    auto tq2 = std::make_shared<int>(0);
    te->add_option("--m", *tm)->required();
    te->add_option("--n", *tn)->required();
    te->add_option("--q1", *tq1)->required();
    te->add_option("--q2", *tq2)->required();
    te->callback([&ctx, tm, tn, tq1, tq2] {
        bool v = ops::torsion_exists(Int(*tm), Int(*tn), *tq1, *tq2);
        ctx.result(json{{"exists", v}}, v ? "true" : "false");
    });

    auto* ee = ops_cmd->add_subcommand("ext-enumerate", "the k Ext operations");
    auto ek = std::make_shared<long long>(0);
    auto eq1 = std::make_shared<int>(0);
    auto eq2 = std::make_shared<int>(0);
    ee->add_option("--k", *ek)->required();
    ee->add_option("--q1", *eq1)->required();
    ee->add_option("--q2", *eq2)->required();
    ee->callback([&ctx, ek, eq1, eq2] {
        auto list = ops::ext_ops_enumerate(*ek, *eq1, *eq2);
        json arr = json::array();
        std::string human;
        for (const auto& d : list) {
            arr.push_back(json{{"index", d.index},
                               {"is_zero", d.is_zero},
                               {"universal_element", d.universal_element},
                               {"g3", group_json(d.g3)},
                               {"q3", d.q3}});
            human += d.universal_element + (d.is_zero ? "  (zero operation)" : "") + "\n";
        }
        ctx.result(json{{"count", list.size()}, {"operations", arr}}, human);
    });

    auto* sign = ops_cmd->add_subcommand("sign", "argument-switch sign");
    auto skind = std::make_shared<std::string>();
    auto sq1 = std::make_shared<int>(0);
    auto sq2 = std::make_shared<int>(0);
    sign->add_option("--kind", *skind, "w (Whitehead) or t (Torsion)")->required();
    sign->add_option("--q1", *sq1)->required();
    sign->add_option("--q2", *sq2)->required();
    sign->callback([&ctx, skind, sq1, sq2] {
        ops::ProductKind kind;
        if (*skind == "w" || *skind == "whitehead") kind = ops::ProductKind::Whitehead;
        else if (*skind == "t" || *skind == "torsion") kind = ops::ProductKind::Torsion;
        else throw ValueError("--kind must be w or t");
        ops::CommutativitySign s = ops::commutativity_sign(kind, *sq1, *sq2);
        ctx.result(json{{"exponent", s.exponent}, {"sign", s.sign}, {"note", s.note}},
                   (s.sign > 0 ? std::string("+1") : std::string("-1")) + " (exponent " +
                       std::to_string(s.exponent) + ")");
    });

    auto* nd = ops_cmd->add_subcommand("neisendorfer", "Moore/co-Moore degree shift");
    auto nn = std::make_shared<int>(0);
    auto ndir = std::make_shared<std::string>();
    nd->add_option("--n", *nn)->required();
    nd->add_option("--direction", *ndir, "to-co-moore or to-moore")->required();
    nd->callback([&ctx, nn, ndir] {
        ops::ShiftDirection dir;
        if (*ndir == "to-co-moore") dir = ops::ShiftDirection::ToCoMoore;
        else if (*ndir == "to-moore") dir = ops::ShiftDirection::ToMoore;
        else throw ValueError("--direction must be to-co-moore or to-moore");
        int shifted = ops::neisendorfer_shift(*nn, dir);
        ctx.result(json{{"degree", shifted}}, std::to_string(shifted));
    });
}

void register_maps_commands(CLI::App& app, Context& ctx) {
    CLI::App* maps_cmd = app.add_subcommand("maps", "exact point-formula evaluation");
    maps_cmd->require_subcommand(1);

    auto* check = maps_cmd->add_subcommand("check", "run the full identity grid");
    check->callback([&ctx] {
        std::vector<verify::SuiteResult> suites = verify::pointmap_identity_suites();
        json arr = json::array();
        std::string human;
        bool pass = true;
        for (const auto& s : suites) {
            arr.push_back(suite_json(s));
            human += (s.pass() ? "pass  " : "FAIL  ") + s.name + " (" +
                      std::to_string(s.cases) + " cases)\n";
            pass = pass && s.pass();
        }
        if (!pass) ctx.exit_code = 1;
        ctx.result(json{{"pass", pass}, {"identities", arr}}, human);
    });

    auto point_options = [](CLI::App* cmd, bool with_u, bool with_s) {
        struct Args {
            std::shared_ptr<std::string> a = std::make_shared<std::string>();
            std::shared_ptr<std::string> b = std::make_shared<std::string>();
            std::shared_ptr<std::string> t = std::make_shared<std::string>();
            std::shared_ptr<std::string> u = std::make_shared<std::string>();
            std::shared_ptr<std::string> s = std::make_shared<std::string>();
        } args;
        cmd->add_option("--a", *args.a, "token of a point of A, * for the basepoint")->required();
        cmd->add_option("--b", *args.b, "token of a point of B")->required();
        cmd->add_option("--t", *args.t, "join coordinate p/q")->required();
        if (with_u) cmd->add_option("--u", *args.u, "suspension/cone coordinate")->required();
        if (with_s) cmd->add_option("--s", *args.s, "homotopy stage")->required();
        return args;
    };

    auto* lam = maps_cmd->add_subcommand("lambda", "cone map into the product of suspensions");
    auto lam_args = point_options(lam, true, false);
    lam->callback([&ctx, lam_args] {
        maps::ProductPoint p = maps::eval_lambda(
            {parse_point(*lam_args.a), parse_point(*lam_args.b), parse_rational(*lam_args.t)},
            parse_rational(*lam_args.u));
        ctx.result(json{{"value", product_json(p)}},
                   "((a, " + std::string(rational_json(p.first.u)) + "), (b, " +
                       std::string(rational_json(p.second.u)) + "))");
    });

    auto* phi = maps_cmd->add_subcommand("phi", "homotopy stage between the two maps");
    auto phi_args = point_options(phi, true, true);
    phi->callback([&ctx, phi_args] {
        maps::ProductPoint p = maps::eval_phi(
            {{parse_point(*phi_args.a), parse_point(*phi_args.b), parse_rational(*phi_args.t)},
             parse_rational(*phi_args.u)},
            parse_rational(*phi_args.s));
        ctx.result(json{{"value", product_json(p)}}, "evaluated");
    });

    auto* sig = maps_cmd->add_subcommand("sigma", "swap homeomorphism of the double suspension");
    auto sig_args = point_options(sig, true, false);
    sig->callback([&ctx, sig_args] {
        maps::ProductPoint p = maps::eval_sigma({parse_point(*sig_args.a),
                                                 parse_point(*sig_args.b),
                                                 parse_rational(*sig_args.t),
                                                 parse_rational(*sig_args.u)});
        ctx.result(json{{"value", product_json(p)}}, "evaluated");
    });

    auto* mu = maps_cmd->add_subcommand("mu-prime", "join-to-suspended-smash collapse");
    auto mu_args = point_options(mu, false, false);
    mu->callback([&ctx, mu_args] {
        maps::SuspendedSmashPoint p = maps::eval_mu_prime(
            {parse_point(*mu_args.a), parse_point(*mu_args.b), parse_rational(*mu_args.t)});
        ctx.result(json{{"value", json{{"a", p.a.token},
                                       {"b", p.b.token},
                                       {"coordinate", rational_json(p.t)},
                                       {"collapsed", p.is_base()}}}},
                   p.is_base() ? "basepoint" : "interior point");
    });
}

void register_verify_commands(CLI::App& app, Context& ctx) {
    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-module property suites");
    verify_cmd->require_subcommand(1);
    auto* all = verify_cmd->add_subcommand("all", "run every suite and print a summary table");
    auto pairs = std::make_shared<std::size_t>(200);
    auto seed = std::make_shared<std::uint64_t>(0x5eed0000ULL);
    all->add_option("--kunneth-pairs", *pairs, "random pairs for the chain-level sweeps");
    all->add_option("--seed", *seed, "seed for the random families");
    all->callback([&ctx, pairs, seed] {
        std::vector<verify::SuiteResult> suites = verify::run_all(*pairs, *seed);
        json arr = json::array();
        std::ostringstream human;
        bool pass = true;
        for (const auto& s : suites) {
            arr.push_back(suite_json(s));
            human << (s.pass() ? "pass  " : "FAIL  ") << std::left << std::setw(44) << s.name
                  << std::right << std::setw(7) << s.cases << " cases  " << std::fixed
                  << std::setprecision(2) << s.seconds << " s\n";
            pass = pass && s.pass();
        }
        human << (pass ? "all suites passed" : "SOME SUITES FAILED");
        if (!pass) ctx.exit_code = 1;
        ctx.result(json{{"pass", pass}, {"suites", arr}}, human.str());
    });
}

std::string classification_text(const ops::ClassificationReport& rep) {
    std::ostringstream os;
    os << "type {" << expr::render_group(rep.type.g1) << ", " << expr::render_group(rep.type.g2)
       << ", " << expr::render_group(rep.type.g3) << "; " << rep.type.q1 << ", " << rep.type.q2
       << ", " << rep.type.q3 << "}\n";
    os << "basic range: " << ops::to_string(rep.in_basic_range)
       << (rep.degree_floor_ok ? "" : "  (degrees below the q1, q2 >= 3 floor)") << "\n";
    os << "bi-additivity forced: " << (rep.bi_additive_forced ? "yes" : "no") << "\n";
    os << "trivially zero: " << (rep.trivially_zero ? "yes" : "no") << "\n";
    os << "special kind: " << ops::to_string(rep.special) << "\n";
    if (rep.bo)
        os << "basic-operation group cardinality: "
           << rep.bo.value().middle_cardinality.to_string() << "\n";
    else
        os << "basic-operation group: unknown (" << rep.bo.reason() << ")\n";
    if (rep.special != ops::SpecialKind::None) {
        if (rep.special_count)
            os << "special-operation count: " << rep.special_count.value() << "\n";
        else
            os << "special-operation count: unknown (" << rep.special_count.reason() << ")\n";
        if (rep.torsion_existence)
            os << "torsion product exists: " << (*rep.torsion_existence ? "yes" : "no") << "\n";
        if (rep.sign)
            os << "switch sign: " << (rep.sign->sign > 0 ? "+1" : "-1") << " (exponent "
               << rep.sign->exponent << ")\n";
    }
    for (const std::string& note : rep.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace

const std::vector<DispatchEntry>& dispatch_table() {
    static const std::vector<DispatchEntry> table{
        {"abgroup", "smith_normal_form", "group snf"},
        {"abgroup", "cokernel", "group cokernel"},
        {"abgroup", "direct_sum", "group sum"},
        {"abgroup", "order", "group order"},
        {"functors", "tensor", "functor tensor"},
        {"functors", "tor", "functor tor"},
        {"functors", "hom", "functor hom"},
        {"functors", "ext", "functor ext"},
        {"oracle", "oracle_hom_count", "functor hom --oracle"},
        {"oracle", "oracle_ext", "functor ext --oracle"},
        {"oracle", "oracle_tensor", "functor tensor --oracle"},
        {"oracle", "oracle_tor", "functor tor --oracle"},
        {"chains", "moore_complex", "chain moore"},
        {"chains", "tensor_complex", "chain tensor"},
        {"chains", "homology", "chain homology"},
        {"chains", "kunneth_check", "chain kunneth"},
        {"moorecalc", "smash_decompose", "moore decompose"},
        {"moorecalc", "stem", "moore stem"},
        {"moorecalc", "homotopy_with_coeffs", "moore pi"},
        {"opsclassify", "basic_range_check", "ops range"},
        {"opsclassify", "triviality_check", "ops trivial"},
        {"opsclassify", "special_kind", "ops kind"},
        {"opsclassify", "bo_group", "ops bo"},
        {"opsclassify", "count_special_ops", "ops count-whitehead"},
        {"opsclassify", "torsion_exists", "ops torsion-exists"},
        {"opsclassify", "ext_ops_enumerate", "ops ext-enumerate"},
        {"opsclassify", "commutativity_sign", "ops sign"},
        {"opsclassify", "neisendorfer_shift", "ops neisendorfer"},
        {"opsclassify", "classify", "ops classify"},
        {"pointmaps", "eval_lambda", "maps lambda"},
        {"pointmaps", "eval_phi", "maps phi"},
        {"pointmaps", "eval_sigma", "maps sigma"},
        {"pointmaps", "eval_mu_prime", "maps mu-prime"},
        {"cli", "parse_group_expr", "group canon"},
        {"verify", "run_all", "verify all"},
    };
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    CLI::App app{"exact computation for homotopy groups with coefficients", "homops"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json_output, "emit a json report");
    app.add_flag("--oracle", ctx.use_oracle, "cross-check through the brute-force oracle");
    app.add_option("--stem-table", ctx.stem_table_path,
                   "extend the built-in stem table from a file");

    register_group_commands(app, ctx);
    register_functor_commands(app, ctx);
    register_chain_commands(app, ctx);
    register_moore_commands(app, ctx);
    register_ops_commands(app, ctx);
    register_maps_commands(app, ctx);
    register_verify_commands(app, ctx);

    std::vector<const char*> argv;
    argv.push_back("homops");
    for (const std::string& a : args) argv.push_back(a.c_str());

    auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
        if (ctx.json_output) {
            json rep{{"error", {{"kind", kind}, {"message", message}}}};
            out << rep.dump(2) << "\n";
        } else {
            err << "error[" << kind << "]: " << message << "\n";
        }
        return code;
    };

    // let flags like --json appear after the subcommand as well
    auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
        for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what(), 2);
    } catch (const ParseError& e) {
        return emit_error(e.kind(), e.what(), 2);
    } catch (const ValueError& e) {
        return emit_error(e.kind(), e.what(), 2);
    } catch (const Error& e) {
        return emit_error(e.kind(), e.what(), 1);
    }

    if (ctx.json_output) out << ctx.report.dump(2) << "\n";
    else if (!ctx.text.empty()) out << ctx.text << (ctx.text.back() == '\n' ? "" : "\n");
    return ctx.exit_code;
}

}  // namespace homops::cli
