#include "spinh/cli.hpp"
#include "spinh/clifford.hpp"
#include "spinh/error.hpp"
#include "spinh/ktheory.hpp"
#include "spinh/modules.hpp"
#include "spinh/series.hpp"
#include "spinh/steenrod.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

namespace spinh::cli {

using json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, tsv };

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw DomainError(Errc::parse_error, "not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

std::pair<long, long> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw DomainError(Errc::parse_error, "bad range '" + s + "' (expected a..b)");
    }
}

json descriptor_json(const AlgebraDescriptor& d)
{
    return {{"field", field_name(d.field)}, {"size", d.size}, {"simple", d.simple}};
}

struct Ctx {
    std::ostream& out;
    Format fmt = Format::text;
    int trunc = -1;

    void emit(const json& j) { out << j.dump(2) << "\n"; }
};

std::vector<long> parse_list(const std::string& s)
{
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        try {
            std::size_t used = 0;
            v.push_back(std::stol(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError(Errc::parse_error, "bad integer list '" + s + "'");
        }
    }
    return v;
}

std::string join_series(const std::vector<long>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Clifford, characteristic class, Steenrod and K-theory computations", "spinh"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string format = "text";
    int trunc = -1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--trunc", trunc, "Series truncation / degree cap override")->check(CLI::Range(0, 4096));

    // classify
    auto* c_classify = app.add_subcommand("classify", "Algebra classification (Cl, CCl, Clh, CClh, or Cl_{r,s})");
    int cl_n = -1, cl_r = -1, cl_s = -1;
    std::string cl_variant = "Cl";
    bool cl_quat = false;
    c_classify->add_option("--n", cl_n, "Dimension index n");
    c_classify->add_option("--variant", cl_variant, "Cl | CCl | Clh | CClh");
    c_classify->add_option("--r", cl_r, "Generators squaring to -1 (indefinite)");
    c_classify->add_option("--s", cl_s, "Generators squaring to +1 (indefinite)");
    c_classify->add_flag("--quaternionic", cl_quat, "Tensor with H (indefinite form)");

    // dims
    auto* c_dims = app.add_subcommand("dims", "Real dimensions of fundamental graded modules");
    std::string dims_range;
    std::string dims_field;
    c_dims->add_option("--n", dims_range, "n or a..b")->required();
    c_dims->add_option("--field", dims_field, "R | C | H (default: all)");

    // ngroup
    auto* c_ngroup = app.add_subcommand("ngroup", "Module Grothendieck groups N^_n(K) or N^_{r,s}(K)");
    std::string ng_range;
    int ng_r = -1, ng_s = -1;
    std::string ng_field = "R";
    c_ngroup->add_option("--n", ng_range, "n or a..b");
    c_ngroup->add_option("--r", ng_r, "bigraded r");
    c_ngroup->add_option("--s", ng_s, "bigraded s");
    c_ngroup->add_option("--field", ng_field, "R | C | H");

    // genus
    auto* c_genus = app.add_subcommand("genus", "Genus of a spin^h 4-manifold from signature and Euler characteristic");
    long g_sig = 0, g_euler = 0;
    std::string g_orient = "+";
    c_genus->add_option("--sig", g_sig, "Signature")->required();
    c_genus->add_option("--euler", g_euler, "Euler characteristic")->required();
    c_genus->add_option("--orientation", g_orient, "+ or -")->check(CLI::IsMember({"+", "-"}));

    // hp-table
    auto* c_hp = app.add_subcommand("hp-table", "HP^n pairing matrix (rows i, columns j)");
    int hp_i = 3, hp_j = 3;
    std::string hp_method = "binomial";
    c_hp->add_option("--max-i", hp_i, "Largest bundle index")->check(CLI::Range(0, 200));
    c_hp->add_option("--max-j", hp_j, "Largest manifold index")->check(CLI::Range(0, 200));
    c_hp->add_option("--method", hp_method, "binomial | residue | chebyshev")
        ->check(CLI::IsMember({"binomial", "residue", "chebyshev"}));

    // steenrod
    auto* c_st = app.add_subcommand("steenrod", "Steenrod squares over F2");
    c_st->require_subcommand(1);
    c_st->fallthrough();
    auto* c_sq = c_st->add_subcommand("sq", "Apply Sq^k to a polynomial");
    int sq_k = 0;
    std::string sq_poly;
    c_sq->add_option("--k", sq_k, "k")->required()->check(CLI::Range(0, 64));
    c_sq->add_option("--poly", sq_poly, "Polynomial, e.g. w2*w4+w3^2")->required();
    auto* c_wu = c_st->add_subcommand("wu", "Wu classes");
    int wu_max = -1;
    c_wu->add_option("--max-degree", wu_max, "Top degree")->check(CLI::Range(2, 32));
    auto* c_adem = c_st->add_subcommand("adem", "Reduce Sq^{i1}...Sq^{ik} to admissible form");
    std::string adem_seq;
    c_adem->add_option("--seq", adem_seq, "Comma separated, e.g. 2,3")->required();
    auto* c_chi = c_st->add_subcommand("chi", "Antipode of Sq^k");
    int chi_k = 0;
    c_chi->add_option("--k", chi_k, "k")->required()->check(CLI::Range(0, 64));
    auto* c_ver = c_st->add_subcommand("verify-bspinh", "Quotient and Sq1-homology series of the BSpin^h model");
    int ver_max = -1;
    c_ver->add_option("--max-degree", ver_max, "Top degree")->check(CLI::Range(2, 30));

    // ktable
    auto* c_kt = app.add_subcommand("ktable", "K-theory coefficient groups");
    std::string kt_theory = "KSp", kt_coeff = "Z", kt_range = "0..7";
    c_kt->add_option("--theory", kt_theory, "KO | KU | KSp");
    c_kt->add_option("--coeff", kt_coeff, "Z | Q | Q/Z | Z<k>");
    c_kt->add_option("--range", kt_range, "a..b");

    // zk-index
    auto* c_zk = app.add_subcommand("zk-index", "Mod-k index from integral and eta terms");
    long zk_n = 0, zk_k = 0;
    std::string zk_int, zk_eta = "0";
    c_zk->add_option("--n", zk_n, "Dimension (0 mod 4)")->required();
    c_zk->add_option("--k", zk_k, "Modulus")->required();
    c_zk->add_option("--integral", zk_int, "Integral term (rational)")->required();
    c_zk->add_option("--eta", zk_eta, "k * eta term (rational)");

    // dual
    auto* c_dual = app.add_subcommand("dual", "Pontryagin double dual of a finitely generated abelian group");
    long du_rank = 0;
    std::string du_tors;
    c_dual->add_option("--rank", du_rank, "Free rank")->check(CLI::Range(0, 2));
    c_dual->add_option("--torsion", du_tors, "Cyclic orders, e.g. 2,6");

    std::vector<std::string> argv_store{"spinh"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Ctx ctx{out};
    ctx.fmt = format == "json" ? Format::json : format == "tsv" ? Format::tsv : Format::text;
    ctx.trunc = trunc;

    try {
        if (c_classify->parsed()) {
            AlgebraDescriptor d;
            json meta;
            if (cl_r >= 0 || cl_s >= 0) {
                if (cl_r < 0 || cl_s < 0 || cl_n >= 0) {
                    err << "usage: classify takes either --n/--variant or --r/--s\n";
                    return 2;
                }
                d = classify_indefinite(cl_r, cl_s, cl_quat);
            } else {
                if (cl_n < 0) {
                    err << "usage: classify needs --n\n";
                    return 2;
                }
                d = classify(cl_n, parse_variant(cl_variant));
            }
            if (ctx.fmt == Format::json)
                ctx.emit(descriptor_json(d));
            else if (ctx.fmt == Format::tsv)
                out << "field\tsize\tsimple\n" << field_name(d.field) << "\t" << d.size << "\t"
                    << (d.simple ? "true" : "false") << "\n";
            else
                out << d.str() << "\n";
        } else if (c_dims->parsed()) {
            auto [a, b] = parse_range(dims_range);
            std::vector<Field> fields;
            if (dims_field.empty())
                fields = {Field::R, Field::C, Field::H};
            else
                fields = {parse_field(dims_field)};
            json rows = json::array();
            if (ctx.fmt == Format::tsv) {
                out << "n";
                for (Field f : fields)
                    out << "\t" << field_name(f);
                out << "\n";
            }
            for (long n = a; n <= b; ++n) {
                json row{{"n", n}};
                if (ctx.fmt == Format::tsv)
                    out << n;
                for (Field f : fields) {
                    auto d = fundamental_dimension(static_cast<int>(n), f);
                    row[field_name(f)] = d;
                    if (ctx.fmt == Format::tsv)
                        out << "\t" << d;
                    else if (ctx.fmt == Format::text) {
                        if (a == b && fields.size() == 1)
                            out << d << "\n";
                        else
                            out << "d_{" << n << "," << field_name(f) << "} = " << d << "\n";
                    }
                }
                if (ctx.fmt == Format::tsv)
                    out << "\n";
                rows.push_back(row);
            }
            if (ctx.fmt == Format::json)
                ctx.emit(json{{"dimensions", rows}});
        } else if (c_ngroup->parsed()) {
            Field f = parse_field(ng_field);
            if (ng_r >= 0 || ng_s >= 0) {
                if (ng_r < 0 || ng_s < 0 || !ng_range.empty()) {
                    err << "usage: ngroup takes either --n or --r/--s\n";
                    return 2;
                }
                AbGroupExpr g = ngroup_bigraded(ng_r, ng_s, f);
                if (ctx.fmt == Format::json)
                    ctx.emit(json{{"r", ng_r}, {"s", ng_s}, {"field", field_name(f)}, {"group", g.str()}});
                else if (ctx.fmt == Format::tsv)
                    out << "r\ts\tgroup\n" << ng_r << "\t" << ng_s << "\t" << g.str() << "\n";
                else
                    out << g.str() << "\n";
            } else {
                if (ng_range.empty()) {
                    err << "usage: ngroup needs --n or --r/--s\n";
                    return 2;
                }
                auto [a, b] = parse_range(ng_range);
                json rows = json::array();
                if (ctx.fmt == Format::tsv)
                    out << "n\tgroup\n";
                for (long n = a; n <= b; ++n) {
                    AbGroupExpr g = ngroup(static_cast<int>(n), f);
                    rows.push_back(json{{"n", n}, {"group", g.str()}});
                    if (ctx.fmt == Format::tsv)
                        out << n << "\t" << g.str() << "\n";
                    else if (ctx.fmt == Format::text)
                        out << (a == b ? "" : std::to_string(n) + "\t") << g.str() << "\n";
                }
                if (ctx.fmt == Format::json)
                    ctx.emit(json{{"field", field_name(f)}, {"groups", rows}});
            }
        } else if (c_genus->parsed()) {
            GenusResult g = genus_4manifold(g_sig, g_euler, g_orient == "+" ? 1 : -1);
            if (!g.agree())
                throw DomainError(Errc::invalid_argument, "closed form and series disagree");
            if (ctx.fmt == Format::json)
                ctx.emit(json{{"signature", g_sig}, {"euler", g_euler}, {"orientation", g_orient},
                              {"genus", g.closed_form.get_str()}, {"series_check", g.via_series.get_str()}});
            else if (ctx.fmt == Format::tsv)
                out << "signature\teuler\torientation\tgenus\n"
                    << g_sig << "\t" << g_euler << "\t" << g_orient << "\t" << g.closed_form.get_str() << "\n";
            else
                out << g.closed_form.get_str() << "\n";
        } else if (c_hp->parsed()) {
            std::vector<std::vector<std::string>> m(hp_i + 1, std::vector<std::string>(hp_j + 1));
            for (int i = 0; i <= hp_i; ++i) {
                GradedSeries theta(2, 1);
                if (hp_method == "chebyshev")
                    theta = chebyshev_theta(i, 2 * hp_j);
                for (int j = 0; j <= hp_j; ++j) {
                    Integer v;
                    if (hp_method == "binomial")
                        v = hp_pairing_binomial(i, j);
                    else if (hp_method == "residue")
                        v = hp_pairing_residue(i, j);
                    else
                        v = theta.coeff(2 * j).get_num();
                    m[i][j] = v.get_str();
                }
            }
            if (ctx.fmt == Format::json) {
                json mat = json::array();
                for (auto& row : m) {
                    json r = json::array();
                    for (auto& v : row)
                        r.push_back(std::stoll(v));
                    mat.push_back(r);
                }
                ctx.emit(json{{"method", hp_method}, {"max_i", hp_i}, {"max_j", hp_j}, {"matrix", mat}});
            } else if (ctx.fmt == Format::tsv) {
                out << "i\\j";
                for (int j = 0; j <= hp_j; ++j)
                    out << "\t" << j;
                out << "\n";
                for (int i = 0; i <= hp_i; ++i) {
                    out << i;
                    for (auto& v : m[i])
                        out << "\t" << v;
                    out << "\n";
                }
            } else {
                out << "[";
                for (int i = 0; i <= hp_i; ++i) {
                    out << (i ? ",[" : "[");
                    for (int j = 0; j <= hp_j; ++j)
                        out << (j ? "," : "") << m[i][j];
                    out << "]";
                }
                out << "]\n";
            }
        } else if (c_st->parsed()) {
            using namespace steenrod;
            if (c_sq->parsed()) {
                Poly r = sq(sq_k, parse_poly(sq_poly));
                if (ctx.fmt == Format::json)
                    ctx.emit(json{{"k", sq_k}, {"input", sq_poly}, {"result", r.str()}});
                else
                    out << r.str() << "\n";
            } else if (c_wu->parsed()) {
                int top = wu_max > 0 ? wu_max : (ctx.trunc > 0 ? ctx.trunc : 8);
                if (top < 2 || top > 32)
                    throw DomainError(Errc::degree_cap, "Wu class degree must be in 2..32");
                auto nu = wu_classes(top);
                json arr = json::array();
                for (int k = 2; k <= top; ++k) {
                    arr.push_back(json{{"degree", k}, {"class", nu[k].str()}});
                    if (ctx.fmt == Format::tsv)
                        out << "v" << k << "\t" << nu[k].str() << "\n";
                    else if (ctx.fmt == Format::text)
                        out << "v" << k << " = " << nu[k].str() << "\n";
                }
                if (ctx.fmt == Format::json)
                    ctx.emit(json{{"wu_classes", arr}});
            } else if (c_adem->parsed()) {
                std::vector<long> raw = parse_list(adem_seq);
                SqMonomial I(raw.begin(), raw.end());
                if (std::any_of(raw.begin(), raw.end(), [](long x) { return x < 0 || x > 64; }))
                    throw DomainError(Errc::invalid_argument, "squares must be in 0..64");
                SqSum s = adem_reduce(I);
                if (ctx.fmt == Format::json) {
                    json terms = json::array();
                    for (auto& J : s)
                        terms.push_back(J);
                    ctx.emit(json{{"input", raw}, {"admissible", terms}});
                } else
                    out << sq_sum_str(s) << "\n";
            } else if (c_chi->parsed()) {
                SqSum s = chi_sq(chi_k);
                if (ctx.fmt == Format::json) {
                    json terms = json::array();
                    for (auto& J : s)
                        terms.push_back(J);
                    ctx.emit(json{{"k", chi_k}, {"admissible", terms}});
                } else
                    out << sq_sum_str(s) << "\n";
            } else if (c_ver->parsed()) {
                int top = ver_max > 0 ? ver_max : (ctx.trunc > 0 ? ctx.trunc : 20);
                if (top < 2 || top > 30)
                    throw DomainError(Errc::degree_cap, "verify-bspinh degree must be in 2..30");
                PolyRing R = bso_ring(top + 1);
                GradedIdeal I(R, bspinh_relations(top + 1));
                auto q = quotient_poincare_series(I, top);
                std::vector<int> gens;
                for (int i = 2; i <= top; ++i) {
                    bool excluded = false;
                    for (int e = 4; e + 1 <= i; e *= 2)
                        excluded = excluded || i == e + 1;
                    if (!excluded)
                        gens.push_back(i);
                }
                auto expect_q = free_algebra_series(gens, top);
                auto h = sq1_homology_series(I, top);
                std::vector<int> hgens{4};
                for (int e = 4; e <= top; e *= 2)
                    hgens.push_back(e);
                for (int k = 3; 4 * k <= top; ++k)
                    if (k & (k - 1))
                        hgens.push_back(4 * k);
                auto expect_h = free_algebra_series(hgens, top);
                bool ok = q == expect_q && h == expect_h;
                if (ctx.fmt == Format::json)
                    ctx.emit(json{{"max_degree", top}, {"quotient_series", q}, {"free_subalgebra_series", expect_q},
                                  {"sq1_homology_series", h}, {"sq1_expected_series", expect_h}, {"pass", ok}});
                else if (ctx.fmt == Format::tsv) {
                    out << "degree\tquotient\tfree\tsq1\tsq1_expected\n";
                    for (int d = 0; d <= top; ++d)
                        out << d << "\t" << q[d] << "\t" << expect_q[d] << "\t" << h[d] << "\t" << expect_h[d] << "\n";
                } else {
                    out << "quotient series:     " << join_series(q) << "\n";
                    out << "free subalgebra:     " << join_series(expect_q) << "\n";
                    out << "Sq1 homology:        " << join_series(h) << "\n";
                    out << "expected ring:       " << join_series(expect_h) << "\n";
                    out << (ok ? "PASS" : "FAIL") << "\n";
                }
                if (!ok)
                    return 1;
            }
        } else if (c_kt->parsed()) {
            Theory t = parse_theory(kt_theory);
            CoefficientRing ring = CoefficientRing::parse(kt_coeff);
            auto [a, b] = parse_range(kt_range);
            if (b < a || b - a > 10000)
                throw DomainError(Errc::invalid_argument, "bad range");
            json rows = json::array();
            if (ctx.fmt == Format::tsv)
                out << "n\tgroup\tundetermined\n";
            for (long n = a; n <= b; ++n) {
                CoefficientGroup g = k_coefficients(t, n, ring);
                json row{{"n", n}, {"group", g.str()}};
                if (g.undetermined) {
                    row["sub"] = g.sub.str();
                    row["quotient"] = g.quotient.str();
                }
                row["undetermined"] = g.undetermined;
                rows.push_back(row);
                if (ctx.fmt == Format::tsv)
                    out << n << "\t" << g.str() << "\t" << (g.undetermined ? "true" : "false") << "\n";
                else if (ctx.fmt == Format::text)
                    out << n << "\t" << g.str() << "\n";
            }
            if (ctx.fmt == Format::json)
                ctx.emit(json{{"theory", theory_name(t)}, {"coefficients", ring.str()}, {"table", rows}});
        } else if (c_zk->parsed()) {
            ZkIndexInput in{zk_n, zk_k, parse_rational(zk_int), parse_rational(zk_eta)};
            long r = zk_index(in);
            if (ctx.fmt == Format::json)
                ctx.emit(json{{"n", zk_n}, {"k", zk_k}, {"epsilon", zk_n % 8 == 4 ? 1 : 2}, {"index", r}});
            else
                out << r << "\n";
        } else if (c_dual->parsed()) {
            FGAbelianGroup a = FGAbelianGroup::from_cyclic(du_rank, parse_list(du_tors));
            DualityReport rep = dual_group(a);
            if (ctx.fmt == Format::json)
                ctx.emit(json{{"group", a.str()}, {"dual", rep.dual.str()}, {"candidate_maps", rep.candidate_maps},
                              {"valid_maps", rep.valid_maps}, {"finite_verified", rep.finite_verified},
                              {"free_verified", rep.free_verified}});
            else if (ctx.fmt == Format::tsv)
                out << "group\tdual\tcandidates\tvalid\tverified\n" << a.str() << "\t" << rep.dual.str() << "\t"
                    << rep.candidate_maps << "\t" << rep.valid_maps << "\t" << (rep.pass() ? "true" : "false") << "\n";
            else
                out << rep.dual.str() << " (" << (rep.pass() ? "verified" : "NOT verified") << ", "
                    << rep.valid_maps << " of " << rep.candidate_maps << " candidate maps valid)\n";
            if (!rep.pass())
                return 1;
        }
    } catch (const DomainError& e) {
        err << "error[" << e.category() << "]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace spinh::cli
