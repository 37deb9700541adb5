#include "mahler/cli/run.hpp"

#include "mahler/algnum/expression.hpp"
#include "mahler/error.hpp"
#include "mahler/heights/places.hpp"
#include "mahler/metric/northcott.hpp"
#include "mahler/metric/solve.hpp"
#include "mahler/polycore/factor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

namespace mahler::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    long bits = kDefaultBits;
    long kmax = 12;
    int closure_cap = kDefaultClosureCap;
    bool emit_witness = false;
    bool human = false;
    std::string bound = "2";
};

Json measure_json(const MeasureValue& v, long bits) {
    const MeasureValue r = v.is_exact() ? v : v.refined(bits);
    Json j;
    j["value"] = r.to_string();
    j["exact"] = r.is_exact();
    j["lo"] = to_decimal(r.enclosure().lo, 15);
    j["hi"] = to_decimal(r.enclosure().hi, 15, true);
    return j;
}

Json poly_record(const std::string& text, const Options& o) {
    const IntPoly p = parse_poly(text);
    Json j;
    j["poly"] = to_string(p);
    j["degree"] = p.degree();
    Json factors = Json::array();
    for (const auto& [f, m] : factor_rational(p).factors) factors.push_back({{"factor", to_string(f)}, {"multiplicity", m}});
    j["factors"] = factors;
    j["mahler"] = measure_json(mahler_poly(p, o.bits), o.bits);
    return j;
}

Json number_head(const AlgebraicNumber& x) {
    Json j;
    j["number"] = x.to_string();
    j["minpoly"] = to_string(x.minpoly());
    j["degree"] = x.degree();
    return j;
}

Json height_record(const AlgebraicNumber& x, const Options& o) {
    Json j = number_head(x);
    j["height"] = measure_json(weil_height(x, o.bits), o.bits);
    return j;
}

Json mahler_record(const AlgebraicNumber& x, const Options& o) {
    Json j = number_head(x);
    const MeasureValue roots = mahler_roots(x, o.bits), places = mahler_places(x, o.bits);
    j["roots"] = measure_json(roots, o.bits);
    j["places"] = measure_json(places, o.bits);
    j["agree"] = roots.refined(o.bits).enclosure().intersects(places.refined(o.bits).enclosure());
    return j;
}

Json reduce_record(const std::vector<std::string>& args, const Options& o) {
    if (args.size() < 2) throw ParseError("reduce needs a target and at least one factor");
    Representation rep;
    rep.target = parse_number(args[0]).value();
    for (std::size_t i = 1; i < args.size(); ++i) rep.factors.push_back(parse_number(args[i]).value());
    if (!representation_holds(rep)) throw DomainError("the factors do not multiply to the target");
    const Reduction red = reduce_representation(rep, o.closure_cap);
    Json j;
    j["target"] = rep.target.to_string();
    j["closure_degree"] = red.field.degree();
    j["unity"] = red.unity.to_string();
    Json factors = Json::array();
    for (std::size_t n = 0; n < rep.factors.size(); ++n) {
        Json f;
        f["factor"] = rep.factors[n].to_string();
        f["reduced"] = red.reduced.factors[n].to_string();
        f["relative_degree"] = red.degrees[n];
        f["root_order"] = red.root_orders[n];
        f["power_in_field"] = red.powers[n].to_string();
        f["measure"] = mahler_roots(rep.factors[n], o.bits).to_string();
        f["reduced_measure"] = mahler_roots(red.reduced.factors[n], o.bits).to_string();
        factors.push_back(f);
    }
    j["factors"] = factors;
    j["verified"] = true;
    return j;
}

Json enumerate_record(const AlgebraicNumber& x, const Options& o) {
    Rational bound(o.bound);
    bound.canonicalize();
    const NumberField K = galois_closure(x, o.closure_cap).field;
    Json j;
    j["field_modulus"] = to_string(K.modulus());
    j["field_degree"] = K.degree();
    j["bound"] = to_string(bound);
    Json items = Json::array();
    for (const auto& e : northcott_enumerate(K, bound))
        items.push_back({{"element", e.element.value().to_string()}, {"height", e.height.to_string()}});
    j["count"] = items.size();
    j["elements"] = items;
    return j;
}

Json qof_record(const AlgebraicNumber& x, const Options& o) {
    const HeightEntry q = q_of(x, o.closure_cap);
    Json j = number_head(x);
    j["q"] = measure_json(q.height, o.bits);
    j["minimizer"] = q.element.value().to_string();
    return j;
}

void print(std::ostream& out, const Json& j, bool human) {
    if (!human) {
        out << j.dump() << '\n';
        return;
    }
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heights, Mahler measures and metric Mahler measures of algebraic numbers", "mahler"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--precision", o.bits, "enclosure width 2^-bits")->envname("MAHLER_PRECISION")->check(CLI::Range(8L, 1L << 16));
    app.add_option("--kmax", o.kmax, "largest exponent denominator in witness searches")->check(CLI::Range(1L, 60L));
    app.add_option("--closure-cap", o.closure_cap, "largest Galois closure degree")->check(CLI::Range(1, 64));
    app.add_flag("--emit-witness", o.emit_witness, "include the witness in m1/minf records");
    app.add_flag("--human", o.human, "key: value lines instead of JSON");

    std::vector<std::string> args;
    auto sub = [&](const char* name, const char* help, bool many = false) {
        CLI::App* s = app.add_subcommand(name, help);
        auto* opt = s->add_option("input", args, "expression")->required();
        if (!many) opt->expected(1);
        return s;
    };
    CLI::App* poly = sub("poly", "Mahler measure of an integer polynomial");
    CLI::App* height = sub("height", "Weil height of a number");
    CLI::App* mahler = sub("mahler", "Mahler measure of a number by roots and by places");
    CLI::App* m1 = sub("m1", "metric Mahler measure");
    sub("minf", "ultrametric Mahler measure");
    CLI::App* reduce = sub("reduce", "reduce target factor... into the radical of the closure", true);
    CLI::App* enumerate = sub("enumerate", "elements of bounded height in the closure of a number");
    enumerate->add_option("--bound", o.bound, "height bound (rational)");
    CLI::App* qof = sub("qof", "smallest height above 1 in the closure of a number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Json record;
        int code = 0;
        if (poly->parsed()) {
            record = poly_record(args[0], o);
        } else if (reduce->parsed()) {
            record = reduce_record(args, o);
        } else {
            const NumberExpr expr = parse_number(args[0]);
            const AlgebraicNumber x = expr.value();
            if (height->parsed()) {
                record = height_record(x, o);
            } else if (mahler->parsed()) {
                record = mahler_record(x, o);
            } else if (enumerate->parsed()) {
                record = enumerate_record(x, o);
            } else if (qof->parsed()) {
                record = qof_record(x, o);
            } else {
                const SolveConfig config{o.kmax, o.closure_cap, o.bits};
                const std::vector<SurdExpr>* surds = expr.is_surd_product() ? &expr.surds : nullptr;
                const SolveResult r = m1->parsed() ? m_one(x, config, surds) : m_inf(x, config, surds);
                record = Json::parse(result_json(r, o.emit_witness));
                if (!r.exact) code = r.certificate.caps_exceeded ? 3 : 4;
            }
        }
        print(out, record, o.human);
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedDegree& e) {
        err << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace mahler::cli
