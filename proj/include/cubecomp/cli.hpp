#ifndef CUBECOMP_CLI_HPP
#define CUBECOMP_CLI_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubecomp.hpp"
#include "verify.hpp"

namespace cubecomp::cli {

using Json = nlohmann::ordered_json;

inline constexpr char const * schema = "cubecomp/1";

/// Malformed command line (exit code 2).
class usage_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Result of one subcommand in both output shapes.
struct Output {
    Json json = Json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline Json num(BigInt const & x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline Json num(Rational const & q)
{
    return to_string(q);
}

inline std::string real(double x, int digits = 6)
{
    std::ostringstream o;
    o << std::fixed << std::setprecision(digits) << x;
    return o.str();
}

inline Json form_json(BQF const & f)
{
    return Json::array({num(f.a), num(f.b), num(f.c)});
}

inline Json cube_json(Cube const & A)
{
    Json j = Json::array();
    for (auto const & x : A.entries())
        j.push_back(num(x));
    return j;
}

template <class T>
Json alt_json(BasicAlt4<T> const & m)
{
    return Json::array({num(m.r), num(m.a), num(m.b), num(m.c), num(m.d), num(m.l)});
}

template <class T, std::size_t N>
Json mat_json(Mat<T, N> const & m)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < N; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < N; ++k)
            row.push_back(num(m(i, k)));
        j.push_back(row);
    }
    return j;
}

inline std::vector<std::string> strs(std::initializer_list<BigInt> xs)
{
    std::vector<std::string> out;
    for (auto const & x : xs)
        out.push_back(x.str());
    return out;
}

inline BigInt integer_arg(std::string const & s)
{
    auto v = parse_integer(s);
    if (!v)
        throw usage_error("not an integer: '" + s + "'");
    return *v;
}

inline Rational rational_arg(std::string const & s)
{
    auto v = parse_rational(s);
    if (!v)
        throw usage_error("not a rational: '" + s + "'");
    return *v;
}

inline std::uint64_t count_arg(std::string const & s)
{
    BigInt v = integer_arg(s);
    if (v < 1 || v > std::numeric_limits<std::int64_t>::max())
        throw domain_error("expected a positive integer, got " + v.str());
    return v.convert_to<std::uint64_t>();
}

inline std::vector<BigInt> integers(std::vector<std::string> const & args, std::size_t n, std::string const & what)
{
    if (args.size() != n)
        throw usage_error(what + " expects " + std::to_string(n) + " integers, got " + std::to_string(args.size()));
    std::vector<BigInt> out;
    for (auto const & s : args)
        out.push_back(integer_arg(s));
    return out;
}

inline Cube cube_arg(std::vector<std::string> const & args, std::string const & what)
{
    auto v = integers(args, 8, what);
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

inline std::string csv_field(std::string const & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// "-23" -> "m23" so numeric arguments never look like flags.
inline std::string alias_negative(std::string const & s)
{
    if (s.size() >= 2 && s[0] == '-' && std::isdigit(static_cast<unsigned char>(s[1])))
        return "m" + s.substr(1);
    return s;
}

} // namespace detail

// ---- subcommands ----

inline Output classgroup(BigInt const & D)
{
    ClassGroup G = class_group(D);
    Output o;
    o.json["D"] = detail::num(D);
    o.json["h"] = G.h();
    Json reps = Json::array();
    for (auto const & f : G.reps)
        reps.push_back(detail::form_json(f));
    o.json["reps"] = reps;
    o.json["table"] = G.table;
    o.header = {"index", "a", "b", "c"};
    for (std::size_t i = 0; i < G.h(); ++i) {
        auto r = detail::strs({G.reps[i].a, G.reps[i].b, G.reps[i].c});
        r.insert(r.begin(), std::to_string(i));
        o.rows.push_back(r);
    }
    return o;
}

inline Output heegner(BigInt const & D)
{
    Output o;
    o.json["D"] = detail::num(D);
    Json pts = Json::array();
    o.header = {"a", "b", "c", "re", "im_squared"};
    for (auto const & p : heegner_points(D)) {
        pts.push_back({{"form", detail::form_json(p.source)}, {"re", to_string(p.re)}, {"im_squared", to_string(p.im_squared)}});
        auto r = detail::strs({p.source.a, p.source.b, p.source.c});
        r.push_back(to_string(p.re));
        r.push_back(to_string(p.im_squared));
        o.rows.push_back(r);
    }
    o.json["points"] = pts;
    return o;
}

inline Output cube_forms(Cube const & A)
{
    Output o;
    o.json["cube"] = detail::cube_json(A);
    Json qs = Json::array();
    o.header = {"i", "a", "b", "c"};
    for (int i = 1; i <= 3; ++i) {
        BQF q = qform(A, i);
        qs.push_back(detail::form_json(q));
        auto r = detail::strs({q.a, q.b, q.c});
        r.insert(r.begin(), std::to_string(i));
        o.rows.push_back(r);
    }
    o.json["qforms"] = qs;
    o.json["P"] = detail::num(invariant(A));
    return o;
}

inline Output cube_frompair(BigInt const & D, BigInt const & i, BigInt const & j)
{
    auto reps = reduced_forms(D);
    auto h = static_cast<std::int64_t>(reps.size());
    if (i < 0 || i >= h || j < 0 || j >= h)
        throw domain_error("class index out of range [0, " + std::to_string(h) + ")");
    BQF const & f1 = reps[i.convert_to<std::size_t>()];
    BQF const & f2 = reps[j.convert_to<std::size_t>()];
    Cube A = cube_from_pair(f1, f2);
    Output o = cube_forms(A);
    Json j2;
    j2["D"] = detail::num(D);
    j2["f1"] = detail::form_json(f1);
    j2["f2"] = detail::form_json(f2);
    for (auto & [k, v] : o.json.items())
        j2[k] = v;
    o.json = j2;
    o.header = {"a", "b", "c", "d", "e", "f", "g", "h"};
    o.rows.clear();
    std::vector<std::string> row;
    for (auto const & x : A.entries())
        row.push_back(x.str());
    o.rows.push_back(row);
    return o;
}

inline Output cube_triplecheck(Cube const & A)
{
    bool ok = triple_law_check(A);
    Output o;
    o.json["cube"] = detail::cube_json(A);
    o.json["P"] = detail::num(invariant(A));
    o.json["triple_law"] = ok;
    o.header = {"P", "triple_law"};
    o.rows.push_back({invariant(A).str(), ok ? "true" : "false"});
    return o;
}

inline Output cube_act(Cube const & A, std::vector<BigInt> const & g)
{
    CubeTriple t{mat2(g[0], g[1], g[2], g[3]), mat2(g[4], g[5], g[6], g[7]), mat2(g[8], g[9], g[10], g[11])};
    Cube B = act(A, t);
    Output o;
    o.json["cube"] = detail::cube_json(B);
    o.json["character"] = detail::num(character(t));
    o.header = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<std::string> row;
    for (auto const & x : B.entries())
        row.push_back(x.str());
    o.rows.push_back(row);
    return o;
}

inline Output cube_orbit(Cube const & A, BigInt const & bound, std::size_t budget)
{
    OrbitResult r = orbit_reduce(A, bound, budget);
    Output o;
    o.json["conclusive"] = r.conclusive;
    o.json["states"] = r.states;
    o.json["cube"] = detail::cube_json(r.cube);
    o.header = {"conclusive", "states", "a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<std::string> row{r.conclusive ? "true" : "false", std::to_string(r.states)};
    for (auto const & x : r.cube.entries())
        row.push_back(x.str());
    o.rows.push_back(row);
    return o;
}

inline void alt_rows(Output & o, AltPair const & F)
{
    o.header = {"block", "r", "a", "b", "c", "d", "l"};
    for (int k = 0; k < 2; ++k) {
        Alt4 const & m = k == 0 ? F.first : F.second;
        auto r = detail::strs({m.r, m.a, m.b, m.c, m.d, m.l});
        r.insert(r.begin(), k == 0 ? "first" : "second");
        o.rows.push_back(r);
    }
}

inline Output fuse_cmd(Cube const & A)
{
    AltPair F = fuse(A);
    Output o;
    o.json["first"] = detail::alt_json(F.first);
    o.json["second"] = detail::alt_json(F.second);
    o.json["qform"] = detail::form_json(qform_pair(F));
    alt_rows(o, F);
    return o;
}

inline Output pfaffian_cmd(std::vector<BigInt> const & v)
{
    BigInt pf = pfaffian(Alt4{v[0], v[1], v[2], v[3], v[4], v[5]});
    Output o;
    o.json["pfaffian"] = detail::num(pf);
    o.header = {"pfaffian"};
    o.rows.push_back({pf.str()});
    return o;
}

inline Output canonw(BigInt const & D)
{
    AltPair w = canonical_w(D);
    HInvariants inv = invariants_h(w);
    Output o;
    o.json["D"] = detail::num(D);
    o.json["first"] = detail::alt_json(w.first);
    o.json["second"] = detail::alt_json(w.second);
    o.json["qform"] = detail::form_json(qform_pair(w));
    o.json["invariants"] = {{"disc", detail::num(inv.disc)}, {"p0", detail::num(inv.p0)}, {"p1", detail::num(inv.p1)}};
    alt_rows(o, w);
    return o;
}

inline Output stabcheck(BigInt const & D, Rational const & a3, Rational const & b3, BigInt const & sign)
{
    if (sign != 1 && sign != -1)
        throw domain_error("sign must be 1 or -1");
    HElement g = stabilizer_element(D, a3, b3, sign.convert_to<int>());
    bool ok = fixes(g, canonical_w(D));
    Output o;
    o.json["D"] = detail::num(D);
    o.json["a3"] = to_string(a3);
    o.json["b3"] = to_string(b3);
    o.json["sign"] = detail::num(sign);
    o.json["g1"] = detail::mat_json(g.g1);
    o.json["p"] = detail::mat_json(g.p);
    o.json["fixes"] = ok;
    o.header = {"D", "a3", "b3", "sign", "fixes"};
    o.rows.push_back({D.str(), to_string(a3), to_string(b3), sign.str(), ok ? "true" : "false"});
    return o;
}

inline Output localcount(BigInt const & D, BigInt const & p, BigInt const & k)
{
    if (k < 0 || k > 64)
        throw domain_error("k must lie in [0, 64]");
    auto kk = k.convert_to<unsigned>();
    BigInt count = local_orbit_count(D, p, kk);
    BigInt m = 4 * pow_big(p, kk);
    Output o;
    o.json["D"] = detail::num(D);
    o.json["p"] = detail::num(p);
    o.json["k"] = detail::num(k);
    o.json["modulus"] = detail::num(m);
    o.json["count"] = detail::num(count);
    o.header = {"D", "p", "k", "modulus", "count"};
    o.rows.push_back(detail::strs({D, p, k, m, count}));
    return o;
}

inline Json convention_json(CoeffConvention const & conv)
{
    return {{"weight", conv.weight == CoeffConvention::Weight::two_over_w ? "2/w" : "1/w"},
            {"include_imprimitive", conv.include_imprimitive}};
}

inline Output zeta_coeffs(std::uint64_t N, CoeffConvention const & conv)
{
    CoeffTable t = coeff_table(N, conv);
    Output o;
    o.json["N"] = N;
    o.json["convention"] = convention_json(conv);
    Json cs = Json::array();
    o.header = {"n", "c"};
    for (std::uint64_t n = 1; n <= N; ++n) {
        cs.push_back(to_string(t[n]));
        o.rows.push_back({std::to_string(n), to_string(t[n])});
    }
    o.json["coeffs"] = cs;
    o.json["partial_sum"] = to_string(partial_sum(N, conv));
    return o;
}

inline Output zeta_exponent(std::uint64_t N, CoeffConvention const & conv)
{
    double e = growth_exponent(N, conv);
    Output o;
    o.json["N"] = N;
    o.json["convention"] = convention_json(conv);
    o.json["exponent"] = detail::real(e);
    o.header = {"N", "exponent"};
    o.rows.push_back({std::to_string(N), detail::real(e)});
    return o;
}

inline Output zeta_dirichlet(double s, std::uint64_t N, CoeffConvention const & conv)
{
    DirichletValue v = dirichlet_value(s, N, conv);
    Output o;
    o.json["s"] = detail::real(s);
    o.json["N"] = N;
    o.json["convention"] = convention_json(conv);
    o.json["value"] = detail::real(v.value, 12);
    o.json["tail_bound"] = detail::real(v.tail_bound, 12);
    o.header = {"s", "N", "value", "tail_bound"};
    o.rows.push_back({detail::real(s), std::to_string(N), detail::real(v.value, 12), detail::real(v.tail_bound, 12)});
    return o;
}

inline Output verify_cmd(std::string const & which, bool & all_pass)
{
    if (which != "all")
        throw usage_error("verify expects 'all'");
    auto results = verify::run_all();
    Output o;
    Json rs = Json::array();
    std::size_t passed = 0;
    o.header = {"module", "name", "status", "detail"};
    for (auto const & r : results) {
        passed += r.pass;
        rs.push_back({{"module", r.module}, {"name", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
        o.rows.push_back({r.module, r.name, r.pass ? "PASS" : "FAIL", r.detail});
    }
    o.json["results"] = rs;
    o.json["passed"] = passed;
    o.json["failed"] = results.size() - passed;
    all_pass = passed == results.size();
    return o;
}

inline std::string const & csv_help()
{
    static std::string const text = R"(CSV columns (--format csv):
  classgroup          index,a,b,c
  heegner             a,b,c,re,im_squared
  cube qforms         i,a,b,c
  cube frompair       a,b,c,d,e,f,g,h
  cube triplecheck    P,triple_law
  cube act            a,b,c,d,e,f,g,h
  cube orbit          conclusive,states,a,b,c,d,e,f,g,h
  fuse, canonw        block,r,a,b,c,d,l
  pfaffian            pfaffian
  stabcheck           D,a3,b3,sign,fixes
  localcount          D,p,k,modulus,count
  zeta coeffs         n,c
  zeta exponent       N,exponent
  zeta dirichlet      s,N,value,tail_bound
  verify              module,name,status,detail
Negative numbers may be written -23 or m23. Rationals are p/q.
Environment: CUBECOMP_THREADS caps worker threads.)";
    return text;
}

inline void emit(Output const & o, std::string const & format, std::ostream & out)
{
    if (format == "csv") {
        for (std::size_t i = 0; i < o.header.size(); ++i)
            out << (i ? "," : "") << o.header[i];
        out << "\n";
        for (auto const & row : o.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << detail::csv_field(row[i]);
            out << "\n";
        }
        return;
    }
    Json doc;
    doc["schema"] = schema;
    for (auto & [k, v] : o.json.items())
        doc[k] = v;
    out << doc.dump() << "\n";
}

/// Runs the command line (without the program name). Returns the exit code:
/// 0 success, 1 domain error or failed verification, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream & out, std::ostream & err)
{
    for (auto & a : args)
        a = detail::alias_negative(a);

    CLI::App app{"Exact computations with binary quadratic forms, 2x2x2 cubes and pairs of alternating forms.",
                 "cubecomp"};
    app.footer(csv_help());
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> pos;
    std::string weight = "2/w";
    bool primitive_only = false;
    std::string bound = "8";
    std::size_t budget = 2'000'000;
    std::function<Output()> action;
    bool verify_pass = true;
    bool is_verify = false;

    auto leaf = [&](CLI::App * parent, std::string const & name, std::string const & desc, std::string const & argname,
                    std::function<Output()> fn) {
        CLI::App * sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option(argname, pos, "arguments")->allow_extra_args();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };

    leaf(&app, "classgroup", "Reduced forms and composition table of discriminant D", "D",
         [&] { return classgroup(detail::integers(pos, 1, "classgroup")[0]); });
    leaf(&app, "heegner", "Heegner points of a fundamental discriminant D", "D",
         [&] { return heegner(detail::integers(pos, 1, "heegner")[0]); });

    CLI::App * cube = app.add_subcommand("cube", "2x2x2 cubes");
    cube->require_subcommand(1);
    cube->fallthrough();
    leaf(cube, "qforms", "The three forms and invariant of a cube (a b c d e f g h)", "entries",
         [&] { return cube_forms(detail::cube_arg(pos, "cube qforms")); });
    leaf(cube, "frompair", "Cube from reduced classes i, j of discriminant D", "D_i_j", [&] {
        auto v = detail::integers(pos, 3, "cube frompair");
        return cube_frompair(v[0], v[1], v[2]);
    });
    leaf(cube, "triplecheck", "Check that the three classes compose to the identity", "entries",
         [&] { return cube_triplecheck(detail::cube_arg(pos, "cube triplecheck")); });
    leaf(cube, "act", "Act by (g1, g2, g3): 8 cube entries then 12 matrix entries, row-major", "entries", [&] {
        auto v = detail::integers(pos, 20, "cube act");
        Cube A{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
        return cube_act(A, std::vector<BigInt>(v.begin() + 8, v.end()));
    });
    CLI::App * orbit = leaf(cube, "orbit", "Bounded SL2^3 orbit search for the least cube", "entries", [&] {
        return cube_orbit(detail::cube_arg(pos, "cube orbit"), detail::integer_arg(bound), budget);
    });
    orbit->add_option("--bound", bound, "entry bound")->capture_default_str();
    orbit->add_option("--budget", budget, "maximum number of visited cubes")->capture_default_str();

    leaf(&app, "fuse", "Fusion of a cube into a pair of alternating forms", "entries",
         [&] { return fuse_cmd(detail::cube_arg(pos, "fuse")); });
    leaf(&app, "pfaffian", "Pfaffian ad - bc - rl of (r a b c d l)", "entries",
         [&] { return pfaffian_cmd(detail::integers(pos, 6, "pfaffian")); });
    leaf(&app, "canonw", "Orbit representative w and its invariants", "D",
         [&] { return canonw(detail::integers(pos, 1, "canonw")[0]); });
    leaf(&app, "stabcheck", "Does the stabilizer element (D, a3, b3, sign) fix w?", "D_a3_b3_sign", [&] {
        if (pos.size() != 4)
            throw usage_error("stabcheck expects D a3 b3 sign");
        return stabcheck(detail::integer_arg(pos[0]), detail::rational_arg(pos[1]), detail::rational_arg(pos[2]),
                         detail::integer_arg(pos[3]));
    });
    leaf(&app, "localcount", "Number of roots of x^2 = D mod 4 p^k", "D_p_k", [&] {
        auto v = detail::integers(pos, 3, "localcount");
        return localcount(v[0], v[1], v[2]);
    });

    CLI::App * zeta = app.add_subcommand("zeta", "Class-number Dirichlet series");
    zeta->require_subcommand(1);
    zeta->fallthrough();
    zeta->add_option("--weight", weight, "class weight")->check(CLI::IsMember({"2/w", "1/w"}))->capture_default_str();
    zeta->add_flag("--primitive-only", primitive_only, "count primitive forms only");
    auto convention = [&] {
        CoeffConvention c;
        c.weight = weight == "1/w" ? CoeffConvention::Weight::one_over_w : CoeffConvention::Weight::two_over_w;
        c.include_imprimitive = !primitive_only;
        return c;
    };
    leaf(zeta, "coeffs", "c(1..N)", "N", [&] {
        if (pos.size() != 1)
            throw usage_error("zeta coeffs expects N");
        return zeta_coeffs(detail::count_arg(pos[0]), convention());
    });
    leaf(zeta, "exponent", "Growth exponent of the partial sums up to N", "N", [&] {
        if (pos.size() != 1)
            throw usage_error("zeta exponent expects N");
        return zeta_exponent(detail::count_arg(pos[0]), convention());
    });
    leaf(zeta, "dirichlet", "Truncated series at s with tail bound: s N", "s_N", [&] {
        if (pos.size() != 2)
            throw usage_error("zeta dirichlet expects s N");
        double s = 0;
        try {
            std::size_t used = 0;
            std::string t = pos[0][0] == 'm' ? "-" + pos[0].substr(1) : pos[0];
            s = std::stod(t, &used);
            if (used != t.size())
                throw std::invalid_argument(t);
        } catch (std::exception const &) {
            throw usage_error("not a real number: '" + pos[0] + "'");
        }
        return zeta_dirichlet(s, detail::count_arg(pos[1]), convention());
    });

    leaf(&app, "verify", "Run the property suite (verify all)", "which", [&] {
        is_verify = true;
        if (pos.size() != 1)
            throw usage_error("verify expects 'all'");
        return verify_cmd(pos[0], verify_pass);
    });

    if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
        err << "error: unknown subcommand '" << args[0] << "'\n\n" << app.help();
        return 2;
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return 0;
    } catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (CLI::ParseError const & e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    if (!action) {
        err << app.help();
        return 2;
    }
    try {
        Output o = action();
        emit(o, format, out);
        if (is_verify && !verify_pass)
            return 1;
        return 0;
    } catch (usage_error const & e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

inline int run(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace cubecomp::cli

#endif // CUBECOMP_CLI_HPP
