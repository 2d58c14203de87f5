// splitlevi command-line interface.
//
// Subcommands: roots, isolated, cover, dcover, standardize,
// jordan-levis, table.  Exit codes: 0 success, 1 internal fault,
// 2 invalid arguments, 3 unsupported configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include "splitlevi/pipeline.hpp"

#include <iostream>
#include <sstream>

using namespace splitlevi;
using nlohmann::json;

namespace {

struct Options {
    std::string type;
    int rank = 0;
    int twist = 1;
    std::string p = "odd";
    std::string q_mod;
    unsigned long d = 1;
    std::string s;
    std::string w = "auto";
    std::string roots;
    std::string format = "text";
};

long parse_p(const std::string& p) {
    if (p == "odd" || p == "generic" || p == "0") return 0;
    size_t pos = 0;
    long v = std::stol(p, &pos);
    if (pos != p.size() || v < 2) throw std::invalid_argument("invalid --p: " + p);
    return v;
}

QClass parse_q_mod(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("invalid --q-mod, expected residue:modulus");
    unsigned long r = std::stoul(spec.substr(0, colon));
    unsigned long m = std::stoul(spec.substr(colon + 1));
    if (m == 0) throw std::invalid_argument("invalid --q-mod modulus");
    return {r % m, m};
}

Rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(std::stol(tok));
    return Rational(std::stol(tok.substr(0, slash)), std::stol(tok.substr(slash + 1)));
}

std::vector<std::string> split_tokens(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Vec parse_vec(const std::string& s, int rank) {
    Vec v;
    for (const auto& tok : split_tokens(s, ", ")) v.push_back(parse_rational(tok));
    if ((int)v.size() != rank) throw std::invalid_argument("--s needs exactly rank entries");
    return v;
}

RootSet parse_roots(const RootDatum& datum, const std::string& s) {
    RootSet out;
    for (const auto& tok : split_tokens(s, ", ")) {
        int r = std::stoi(tok);
        if (r < 0 || r >= datum.num_roots()) throw std::invalid_argument("root index out of range");
        out.insert(r);
    }
    return out;
}

/// The diagram permutation realizing the requested twist order.
std::vector<int> twist_perm(const RootDatum& datum, Series series, int twist) {
    int n = datum.rank();
    std::vector<int> id((size_t)n);
    for (int i = 0; i < n; ++i) id[(size_t)i] = i;
    if (twist == 1) return id;
    if (twist == 2) {
        if (series == Series::A) {
            std::vector<int> rev = id;
            std::reverse(rev.begin(), rev.end());
            return rev;
        }
        if (series == Series::D) {
            std::swap(id[(size_t)n - 2], id[(size_t)n - 1]);
            return id;
        }
        if (series == Series::E && n == 6) return {5, 1, 4, 3, 2, 0};
        throw UnsupportedError("twist 2 of this type is a Suzuki-Ree or invalid twist");
    }
    if (twist == 3 && series == Series::D && n == 4) return {2, 1, 3, 0};
    throw std::invalid_argument("invalid --twist for this type");
}

/// e_i-coordinate columns of the simple roots of B/C/D, for parsing
/// the u/p/c reflection tokens of the classical worked cases.
QMatrix classical_e_basis(Series series, int n) {
    QMatrix e(n, n);
    for (int k = 0; k < n - 1; ++k) {
        e(k, k) = 1;
        e(k + 1, k) = -1;
    }
    switch (series) {
        case Series::B:
            e(n - 1, n - 1) = 1;
            break;
        case Series::C:
            e(n - 1, n - 1) = 2;
            break;
        case Series::D:
            if (n < 2) throw std::invalid_argument("D needs rank >= 2");
            e(n - 2, n - 2) = 1;
            e(n - 1, n - 2) = -1;
            e(n - 2, n - 1) = 1;
            e(n - 1, n - 1) = 1;
            break;
        default:
            throw std::invalid_argument("u/p/c tokens require series B, C or D");
    }
    return e;
}

WeylElement parse_word(const RootDatum& datum, Series series, const std::string& spec) {
    QMatrix m = QMatrix::identity(datum.rank());
    if (spec == "1" || spec == "e" || spec.empty()) return datum.make_weyl(m);
    for (const auto& tok : split_tokens(spec, " ,")) {
        if (tok == "w0") {
            m = m * datum.longest_element().matrix;
            continue;
        }
        char kind = tok[0];
        std::string digits = tok.substr(1);
        if (kind >= '0' && kind <= '9') {
            kind = 's';
            digits = tok;
        }
        if (kind == 's') {
            int k = std::stoi(digits);
            if (k < 1 || k > datum.rank()) throw std::invalid_argument("simple index out of range");
            m = m * datum.simple_reflection_matrix(k - 1);
            continue;
        }
        // coordinate reflections u<i><j> (e_i - e_j), p<i><j> (e_i + e_j),
        // c<i> (e_i, resp. 2e_i for C)
        QMatrix e = classical_e_basis(series, datum.rank());
        std::vector<int> idx;
        for (const auto& d : split_tokens(digits, "._")) idx.push_back(std::stoi(d));
        if (idx.size() == 1 && digits.size() == 2 && digits.find('.') == std::string::npos &&
            digits.find('_') == std::string::npos) {
            idx = {digits[0] - '0', digits[1] - '0'};
        }
        Vec target((size_t)datum.rank(), Rational(0));
        auto coord = [&](int i, Rational sign) {
            if (i < 1 || i > datum.rank()) throw std::invalid_argument("coordinate out of range");
            target[(size_t)i - 1] += sign;
        };
        if (kind == 'u' && idx.size() == 2) {
            coord(idx[0], 1);
            coord(idx[1], -1);
        } else if (kind == 'p' && idx.size() == 2) {
            coord(idx[0], 1);
            coord(idx[1], 1);
        } else if (kind == 'c' && idx.size() == 1) {
            coord(idx[0], series == Series::C ? 2 : 1);
        } else {
            throw std::invalid_argument("cannot parse word token: " + tok);
        }
        // solve e * x = target for the simple-root coordinates
        QMatrix aug = e;
        QMatrix t(datum.rank(), 1);
        for (int i = 0; i < datum.rank(); ++i) t(i, 0) = target[(size_t)i];
        auto rr = rref(aug.hstack(t));
        Vec alpha((size_t)datum.rank(), Rational(0));
        for (size_t r = 0; r < rr.pivots.size(); ++r) {
            if (rr.pivots[r] == datum.rank())
                throw std::invalid_argument("token is not a root: " + tok);
            alpha[(size_t)rr.pivots[r]] = rr.reduced((int)r, datum.rank());
        }
        if (!datum.is_root(alpha)) throw std::invalid_argument("token is not a root: " + tok);
        m = m * datum.reflection_matrix(alpha);
    }
    return datum.make_weyl(m);
}

json handle_json(const SubsystemHandle& h, const TwistedElement& t, bool prefer_c) {
    RecognizedType rt = recognize_type(h, t, prefer_c);
    json j;
    j["roots"] = std::vector<int>(h.roots.begin(), h.roots.end());
    j["simples"] = h.simples;
    j["components"] = h.components;
    j["torus_rank"] = h.torus_rank;
    std::string comp;
    for (const auto& c : rt.components) {
        if (!comp.empty()) comp += ".";
        comp += c.label.str();
    }
    j["levi"] = comp;
    j["torus"] = rt.torus.phi_str();
    return j;
}

json record_json(const CuspidalLeviRecord& rec) {
    json j;
    j["levi"] = render_type(rec.levi_part);
    j["centralizer"] = render_type(rec.centralizer_part);
    j["torus"] = rec.levi_part.torus.phi_str();
    j["j_nodes"] = rec.j;
    j["w_word"] = rec.class_rep.w.word;
    j["cusp_count"] = rec.cusp_count;
    if (rec.standard_form) {
        j["standard_I"] = rec.standard_form->I;
        j["standard_z_word"] = rec.standard_form->z.word;
    }
    return j;
}

void emit(const json& j, const Options& opt, const std::string& text) {
    if (opt.format == "json") {
        json out = j;
        out["schema"] = 1;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text;
    }
}

CuspidalData& cuspidal_data() {
    static CuspidalData d(std::string(SPLITLEVI_DATA_DIR) + "/cuspidal_exceptional.txt");
    return d;
}

int run_roots(const Options& opt) {
    Series series = series_from_char(opt.type[0]);
    RootDatum datum(series, opt.rank);
    json j;
    j["type"] = opt.type;
    j["rank"] = opt.rank;
    j["num_roots"] = datum.num_roots();
    j["num_positive"] = datum.num_positive();
    std::vector<std::vector<std::string>> cartan;
    for (int i = 0; i < opt.rank; ++i) {
        std::vector<std::string> row;
        for (int k = 0; k < opt.rank; ++k) row.push_back(datum.cartan()(i, k).str());
        cartan.push_back(row);
    }
    j["cartan"] = cartan;
    std::vector<std::string> highest;
    for (const auto& c : datum.highest_root()) highest.push_back(c.str());
    j["highest_root"] = highest;
    std::ostringstream os;
    os << opt.type << opt.rank << ": " << datum.num_roots() << " roots, "
       << datum.num_positive() << " positive\nhighest root:";
    for (const auto& c : datum.highest_root()) os << " " << c.str();
    os << "\n";
    emit(j, opt, os.str());
    return 0;
}

int run_isolated(const Options& opt) {
    Series series = series_from_char(opt.type[0]);
    RootDatum datum(series, opt.rank);
    long p = parse_p(opt.p);
    bool prefer_c = series == Series::C;
    TwistedElement id = datum.untwisted(datum.identity_element());

    std::vector<json> items;
    std::ostringstream os;
    std::vector<Vec> seen;
    for (const auto& rep : isolated_reps(datum, p)) {
        bool dup = false;
        for (const auto& v : seen)
            if (same_param(v, rep.param.v)) dup = true;
        if (dup) continue;
        seen.push_back(rep.param.v);
        std::string cent = render_type(recognize_type(rep.centralizer, id, prefer_c));
        json it;
        it["node"] = rep.node;
        it["coefficient"] = rep.coefficient;
        it["order"] = rep.param.order;
        std::vector<std::string> v;
        for (const auto& c : rep.param.v) v.push_back(c.str());
        it["s"] = v;
        it["centralizer"] = cent;
        items.push_back(it);
        os << "s = (";
        for (size_t i = 0; i < rep.param.v.size(); ++i)
            os << (i ? "," : "") << rep.param.v[i].str();
        os << ") order " << rep.param.order << " centralizer " << cent << "\n";
    }
    json j;
    j["isolated"] = items;
    emit(j, opt, os.str());
    return 0;
}

int run_cover(const Options& opt, bool use_d) {
    Series series = series_from_char(opt.type[0]);
    RootDatum datum(series, opt.rank);
    std::vector<int> perm = twist_perm(datum, series, opt.twist);
    WeylElement w = parse_word(datum, series, opt.w == "auto" ? "1" : opt.w);
    TwistedElement t = datum.twisted(w, perm);
    RootSet seed = parse_roots(datum, opt.roots);
    RootSet cover = use_d ? d_split_cover_set(datum, seed, t, opt.d)
                          : split_levi_cover_set(datum, seed, t);
    SubsystemHandle h = make_handle(datum, cover);
    json j = handle_json(h, t, series == Series::C);
    std::ostringstream os;
    os << "cover of " << seed.size() << " roots: " << cover.size() << " roots, type "
       << j["levi"].get<std::string>() << " torus " << j["torus"].get<std::string>() << "\nroots:";
    for (int r : cover) os << " " << r;
    os << "\n";
    emit(j, opt, os.str());
    return 0;
}

int run_standardize(const Options& opt) {
    Series series = series_from_char(opt.type[0]);
    RootDatum datum(series, opt.rank);
    std::vector<int> perm = twist_perm(datum, series, opt.twist);
    WeylElement w = parse_word(datum, series, opt.w == "auto" ? "1" : opt.w);
    RootSet sigma = parse_roots(datum, opt.roots);
    StandardPair sp = conjugate_to_standard(datum, sigma, w, perm);
    json j;
    j["I"] = sp.I;
    j["z_word"] = sp.z.word;
    j["x_word"] = sp.x.word;
    std::ostringstream os;
    os << "I =";
    for (int i : sp.I) os << " " << i;
    os << "\nz word:";
    for (int i : sp.z.word) os << " " << i;
    os << "\nx word:";
    for (int i : sp.x.word) os << " " << i;
    os << "\n";
    emit(j, opt, os.str());
    return 0;
}

int run_jordan(const Options& opt) {
    Series series = series_from_char(opt.type[0]);
    RootDatum datum(series, opt.rank);
    std::vector<int> perm = twist_perm(datum, series, opt.twist);
    long p = parse_p(opt.p);
    bool prefer_c = series == Series::C;
    SemisimpleParam s = make_param(parse_vec(opt.s, opt.rank), p > 1 ? std::vector<long>{p}
                                                                     : std::vector<long>{});
    TwistedClassRep cls;
    if (opt.w == "auto") {
        IsolatedRep rep;
        rep.node = -1;
        rep.coefficient = (long)s.order;
        rep.param = s;
        rep.centralizer = centralizer_roots(datum, s.v);
        QClass q = opt.q_mod.empty()
                       ? QClass{s.order > 1 ? s.order - 1 : 1, s.order > 1 ? s.order : 1}
                       : parse_q_mod(opt.q_mod);
        cls = choose_coset_rep(datum, rep, perm, q);
    } else {
        cls = {s, parse_word(datum, series, opt.w), "given"};
    }
    auto recs = opt.d == 1 ? jordan_cuspidal_levis(datum, cls, perm, cuspidal_data(), prefer_c)
                           : d_jordan_cuspidal_levis(datum, cls, perm, cuspidal_data(), opt.d,
                                                     nullptr, prefer_c);
    json j;
    j["branch"] = cls.branch;
    std::vector<json> items;
    std::ostringstream os;
    os << "branch: " << cls.branch << "\n";
    for (const auto& rec : recs) {
        items.push_back(record_json(rec));
        os << render_record(rec) << "   J = {";
        for (size_t i = 0; i < rec.j.size(); ++i) os << (i ? "," : "") << rec.j[i];
        os << "} cusp_count " << rec.cusp_count << "\n";
    }
    j["records"] = items;
    emit(j, opt, os.str());
    return 0;
}

int run_table(const Options& opt) {
    Series series = series_from_char(opt.type[0]);
    long p = parse_p(opt.p);
    auto rows = classical_table(series, opt.rank, opt.twist, p, cuspidal_data());
    json j;
    std::vector<json> items;
    std::ostringstream os;
    for (const auto& r : rows) {
        json it;
        it["group"] = r.group;
        it["centralizer"] = r.centralizer;
        it["p"] = r.p_condition;
        it["levi"] = r.levi;
        it["levi_centralizer"] = r.levi_centralizer;
        it["conditions"] = r.conditions;
        it["star"] = r.star;
        items.push_back(it);
        os << r.str() << "\n";
    }
    j["rows"] = items;
    emit(j, opt, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split and d-split Levi subsystems, isolated semisimple elements, "
                 "and Jordan parameters of cuspidal pairs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool need_rank = true) {
        sub->add_option("--type", opt.type, "series A..G")->required();
        auto* r = sub->add_option("--rank", opt.rank, "rank");
        if (need_rank) r->required();
        sub->add_option("--twist", opt.twist, "twist order 1, 2 or 3");
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    auto* c_roots = add_common(app.add_subcommand("roots", "root system summary"));
    auto* c_isolated = add_common(app.add_subcommand("isolated", "isolated class representatives"));
    c_isolated->add_option("--p", opt.p, "characteristic: odd, generic or a prime");
    auto* c_cover = add_common(app.add_subcommand("cover", "smallest split Levi cover"));
    c_cover->add_option("--w", opt.w, "word: s/u/p/c tokens or w0")->required();
    c_cover->add_option("--roots", opt.roots, "root indices")->required();
    auto* c_dcover = add_common(app.add_subcommand("dcover", "smallest d-split Levi cover"));
    c_dcover->add_option("--w", opt.w, "word")->required();
    c_dcover->add_option("--roots", opt.roots, "root indices")->required();
    c_dcover->add_option("--d", opt.d, "d")->required();
    auto* c_std = add_common(app.add_subcommand("standardize", "conjugate a split Levi to standard form"));
    c_std->add_option("--w", opt.w, "word")->required();
    c_std->add_option("--roots", opt.roots, "root indices of Sigma")->required();
    auto* c_jordan = add_common(app.add_subcommand("jordan-levis", "Jordan parameters of cuspidal pairs"));
    c_jordan->add_option("--s", opt.s, "semisimple parameter, coweight coordinates")->required();
    c_jordan->add_option("--w", opt.w, "word or auto");
    c_jordan->add_option("--q-mod", opt.q_mod, "q congruence residue:modulus");
    c_jordan->add_option("--p", opt.p, "characteristic");
    c_jordan->add_option("--d", opt.d, "d-split variant");
    auto* c_table = add_common(app.add_subcommand("table", "classical isolated-elements table"));
    c_table->add_option("--p", opt.p, "odd or 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_roots->parsed()) return run_roots(opt);
        if (c_isolated->parsed()) return run_isolated(opt);
        if (c_cover->parsed()) return run_cover(opt, false);
        if (c_dcover->parsed()) return run_cover(opt, true);
        if (c_std->parsed()) return run_standardize(opt);
        if (c_jordan->parsed()) return run_jordan(opt);
        if (c_table->parsed()) return run_table(opt);
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal fault: " << e.what() << "\n";
        return 1;
    }
}
