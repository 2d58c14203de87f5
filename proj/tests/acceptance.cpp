// Acceptance criteria runner: one pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include "splitlevi/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sys/wait.h>

using namespace splitlevi;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL") << std::endl;
    if (!ok) ++g_failures;
}

const CuspidalData& data() {
    static CuspidalData d(std::string(SPLITLEVI_SOURCE_DIR) + "/data/cuspidal_exceptional.txt");
    return d;
}

RootSet all_roots(const RootDatum& datum) {
    RootSet all;
    for (int r = 0; r < datum.num_roots(); ++r) all.insert(r);
    return all;
}

RootSet random_subset(const RootDatum& datum, std::mt19937& rng) {
    RootSet s;
    int k = (int)(rng() % 4);
    for (int i = 0; i < k; ++i) s.insert((int)(rng() % (unsigned)datum.num_roots()));
    return s;
}

// Random products of permutation and sign-flip matrices: finite order,
// integral, enough variety for the projector identities.
QMatrix random_finite_order(std::mt19937& rng, int dim) {
    QMatrix m = QMatrix::identity(dim);
    std::uniform_int_distribution<int> pick(0, dim - 1), coin(0, 1);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        QMatrix f = QMatrix::identity(dim);
        if (i != j && coin(rng)) {
            f(i, i) = 0;
            f(j, j) = 0;
            f(i, j) = 1;
            f(j, i) = 1;
        } else {
            f(i, i) = -1;
        }
        m = m * f;
    }
    return m;
}

/// Longest element of the reflection subgroup W(Phi(s)), by a descent
/// walk over the simple system of the subsystem.
WeylElement subsystem_longest(const RootDatum& datum, const SubsystemHandle& h) {
    QMatrix m = QMatrix::identity(datum.rank());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int r : h.simples) {
            Vec img = datum.apply(m, datum.root(r));
            if (datum.root_index(img) < datum.num_positive()) {
                m = datum.reflection_matrix(img) * m;
                moved = true;
            }
        }
    }
    // certificate: every positive root of the subsystem goes negative
    for (int r : h.positive)
        if (datum.root_index(datum.apply(m, datum.root(r))) < datum.num_positive())
            throw std::logic_error("subsystem_longest: walk did not terminate at w0");
    return datum.make_weyl(m);
}

/// Re-derives M_J = L ∩ Φ(s) and the cover fixpoint from the record
/// fields, independently of the checks inside the pipeline.
bool recheck_records(const RootDatum& datum, const TwistedClassRep& cls,
                     const std::vector<int>& perm, bool prefer_c, int& counted) {
    TwistedElement t = datum.twisted(cls.w, perm);
    SubsystemHandle phi_s = centralizer_roots(datum, cls.param.v);
    for (const auto& rec : jordan_cuspidal_levis(datum, cls, perm, data(), prefer_c)) {
        RootSet inter;
        for (int r : rec.levi.roots)
            if (phi_s.roots.count(r)) inter.insert(r);
        if (inter != rec.m.roots) return false;
        if (split_levi_cover_set(datum, rec.levi.roots, t) != rec.levi.roots) return false;
        ++counted;
    }
    return true;
}

// -------------------------------------------------------------------

bool criterion1_e8_golden(double& seconds) {
    auto start = std::chrono::steady_clock::now();
    RootDatum e8(Series::E, 8);
    Vec v((size_t)8, Rational(0));
    v[5] = Rational(1, 3);
    SemisimpleParam s = make_param(v);
    SubsystemHandle phi_s = centralizer_roots(e8, s.v);
    // w = (longest element of the centralizer) * (longest element of W)
    WeylElement w =
        e8.make_weyl(subsystem_longest(e8, phi_s).matrix * e8.longest_element().matrix);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5, 6, 7};
    TwistedClassRep cls{s, w, "w0"};
    auto recs = jordan_cuspidal_levis(e8, cls, perm, data());

    std::multiset<std::string> got, expect = {
        "E8 | 2E6.2A2",
        "E7.P1 | 2E6.P1.P2",
        "E7.P1 | 2A5.2A2.P1",
        "D6.P1^2 | 2A5.P1^2.P2",
        "D4.P1^4 | 2A2.P1^4.P2^2",
        "A1.A1.A1.P1^5 | P1^5.P2^3",
    };
    for (const auto& r : recs) got.insert(render_record(r));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return recs.size() == 6 && got == expect && seconds < 60.0;
}

bool criterion2_table_golden() {
    std::vector<std::string> fixture;
    std::ifstream in(std::string(SPLITLEVI_SOURCE_DIR) + "/data/table1.txt");
    if (!in) return false;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') fixture.push_back(line);

    std::vector<std::string> got;
    auto emit = [&](Series s, int lo, int hi, int twist) {
        for (int n = lo; n <= hi; ++n)
            for (const auto& row : classical_table(s, n, twist, 0, data()))
                got.push_back(row.str());
    };
    emit(Series::B, 2, 6, 1);
    emit(Series::C, 2, 6, 1);
    emit(Series::D, 4, 6, 1);
    emit(Series::D, 4, 6, 2);

    bool has_star = false, has_phi4 = false;
    for (const auto& row : got) {
        if (row.find("(*)") != std::string::npos) has_star = true;
        if (row.find("P4") != std::string::npos) has_phi4 = true;
    }
    return got == fixture && has_star && has_phi4;
}

bool criterion3_cover_minimality(double& seconds) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<Series, int>> types = {{Series::A, 1}, {Series::A, 2}, {Series::A, 3},
                                                 {Series::B, 2}, {Series::C, 2}, {Series::B, 3},
                                                 {Series::C, 3}, {Series::G, 2}};
    bool ok = true;
    for (auto [series, rank] : types) {
        RootDatum datum(series, rank);
        // the fixed catalogue: identity, w0, one coordinate sign-change
        // where applicable (= reflection in the last simple root of
        // B/C), one Coxeter element
        std::vector<WeylElement> catalogue = {datum.identity_element(), datum.longest_element()};
        if (series == Series::B || series == Series::C)
            catalogue.push_back(datum.make_weyl(datum.simple_reflection_matrix(rank - 1)));
        std::vector<int> cox_word((size_t)rank);
        for (int i = 0; i < rank; ++i) cox_word[(size_t)i] = i;
        catalogue.push_back(datum.word_element(cox_word));

        // every symmetric closed subset, from masks over the positives
        std::set<RootSet> sigmas;
        unsigned p = (unsigned)datum.num_positive();
        for (unsigned mask = 0; mask < (1u << p); ++mask) {
            RootSet s;
            for (unsigned r = 0; r < p; ++r)
                if (mask & (1u << r)) s.insert((int)r);
            s = symmetrize(datum, s);
            if (is_closed(datum, s)) sigmas.insert(s);
        }

        for (const auto& w : catalogue) {
            TwistedElement t = datum.untwisted(w);
            std::set<RootSet> levis = enumerate_split_levis(datum, t);
            for (const RootSet& sigma : sigmas) {
                RootSet c = split_levi_cover_set(datum, sigma, t);
                if (!levis.count(c)) ok = false;
                if (!std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) ok = false;
                // minimum: the cover sits inside every split Levi over sigma
                for (const RootSet& l : levis)
                    if (std::includes(l.begin(), l.end(), sigma.begin(), sigma.end()) &&
                        !std::includes(l.begin(), l.end(), c.begin(), c.end()))
                        ok = false;
            }
        }
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && seconds < 300.0;
}

bool criterion4_projector_suite() {
    std::mt19937 rng(20250824);
    bool ok = true;
    // projector identities over >= 500 randomized finite-order elements
    for (int trial = 0; trial < 500; ++trial) {
        int dim = 2 + trial % 3;
        QMatrix g = random_finite_order(rng, dim);
        unsigned long n = matrix_order(g);
        auto theta = fixed_projector(g, n);
        if (theta * theta != theta) ok = false;
        if (g * theta != theta || theta * g != theta) ok = false;
        auto gc = to_cyclotomic(g, n);
        CycMatrix sum(dim, dim);
        for (unsigned long k = 0; k < n; ++k) {
            auto tz = eigen_projector(g, n, (long)k);
            if (tz * tz != tz) ok = false;
            Cyclotomic z = Cyclotomic::root_of_unity(n, (long)k);
            if (gc * tz != tz * z) ok = false;
            sum = sum + tz;
        }
        if (sum != to_cyclotomic(QMatrix::identity(dim), n)) ok = false;
    }
    // zeta-choice independence and the d = 1 <-> split equivalence on
    // random Weyl elements
    for (auto [series, rank] : std::vector<std::pair<Series, int>>{
             {Series::A, 2}, {Series::B, 2}, {Series::B, 3}}) {
        RootDatum datum(series, rank);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<int> word;
            for (int i = 0; i < (int)(rng() % 7); ++i) word.push_back((int)(rng() % (unsigned)rank));
            TwistedElement t = datum.untwisted(datum.word_element(word));
            RootSet sub = random_subset(datum, rng);
            if (d_split_cover_set(datum, sub, t, 1) != split_levi_cover_set(datum, sub, t))
                ok = false;
            for (unsigned long d = 2; d <= t.order; ++d) {
                if (t.order % d != 0) continue;
                long k2 = 1;
                for (long k = 2; k < (long)d; ++k)
                    if (std::gcd(k, (long)d) == 1) {
                        k2 = k;
                        break;
                    }
                if (k2 == 1) continue;
                if (d_split_cover_set(datum, sub, t, d, 1) !=
                    d_split_cover_set(datum, sub, t, d, k2))
                    ok = false;
            }
        }
    }
    return ok;
}

bool criterion5_isolated_counts() {
    bool ok = true;
    std::vector<std::pair<Series, int>> types;
    for (int n = 1; n <= 6; ++n) types.push_back({Series::A, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Series::B, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Series::C, n});
    for (int n = 4; n <= 6; ++n) types.push_back({Series::D, n});
    for (auto [series, rank] : types) {
        RootDatum datum(series, rank);
        for (long p : {0L, 2L}) {
            // |extended-diagram p'-nodes| from the highest-root
            // coefficients, plus the -alpha0 node
            size_t expect = 1;
            for (const auto& c : datum.highest_root()) {
                long n_alpha = (long)numerator(c).convert_to<long long>();
                if (p <= 1 || n_alpha % p != 0) ++expect;
            }
            auto reps = isolated_reps(datum, p);
            if (reps.size() != expect) ok = false;
            if (series == Series::A)
                for (const auto& rep : reps)
                    if (rep.param.order != 1) ok = false;
        }
    }
    return ok;
}

bool criterion6_structural_invariant() {
    bool ok = true;
    int counted = 0;
    // E8 records, rechecked from the record fields
    {
        RootDatum e8(Series::E, 8);
        Vec v((size_t)8, Rational(0));
        v[5] = Rational(1, 3);
        SemisimpleParam s = make_param(v);
        SubsystemHandle phi_s = centralizer_roots(e8, s.v);
        WeylElement w =
            e8.make_weyl(subsystem_longest(e8, phi_s).matrix * e8.longest_element().matrix);
        std::vector<int> perm = {0, 1, 2, 3, 4, 5, 6, 7};
        if (!recheck_records(e8, {s, w, "w0"}, perm, false, counted)) ok = false;
    }
    // classical records across representative table blocks
    for (auto [series, rank, twist] : std::vector<std::tuple<Series, int, int>>{
             {Series::B, 4, 1}, {Series::C, 4, 1}, {Series::D, 5, 1}, {Series::D, 6, 2}}) {
        RootDatum datum(series, rank);
        std::vector<int> perm((size_t)rank);
        for (int i = 0; i < rank; ++i) perm[(size_t)i] = i;
        if (twist == 2) std::swap(perm[(size_t)rank - 2], perm[(size_t)rank - 1]);
        bool prefer_c = series == Series::C;
        for (const auto& rep : isolated_reps(datum, 0))
            for (const auto& cls : component_group_orbits(datum, rep, perm, QClass{1, 2}))
                if (!recheck_records(datum, cls, perm, prefer_c, counted)) ok = false;
    }
    return ok && counted > 0;
}

bool criterion7_standardization() {
    std::mt19937 rng(777);
    bool ok = true;
    std::vector<std::pair<Series, int>> types = {
        {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
        {Series::B, 2}, {Series::B, 3}, {Series::B, 4}, {Series::C, 2},
        {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::F, 4},
        {Series::G, 2}};
    for (auto [series, rank] : types) {
        RootDatum datum(series, rank);
        std::vector<int> id((size_t)rank);
        for (int i = 0; i < rank; ++i) id[(size_t)i] = i;
        std::vector<std::vector<int>> perms = {id};
        if (series == Series::A && rank >= 2) {
            std::vector<int> rev = id;
            std::reverse(rev.begin(), rev.end());
            perms.push_back(rev);
        }
        if (series == Series::D && rank == 4) perms.push_back({2, 1, 3, 0});
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> word;
            for (int i = 0; i < (int)(rng() % 9); ++i) word.push_back((int)(rng() % (unsigned)rank));
            WeylElement w = datum.word_element(word);
            const auto& perm = perms[rng() % perms.size()];
            TwistedElement t = datum.twisted(w, perm);
            RootSet sigma = split_levi_cover_set(datum, random_subset(datum, rng), t);
            StandardPair sp = conjugate_to_standard(datum, sigma, w, perm);
            // x Sigma = Phi_I
            RootSet image, phi_i;
            for (int r : sigma)
                image.insert(datum.root_index(datum.apply(sp.x.matrix, datum.root(r))));
            for (int r = 0; r < datum.num_roots(); ++r) {
                bool supported = true;
                for (int j = 0; j < datum.rank(); ++j)
                    if (datum.root(r)[(size_t)j] != 0 &&
                        std::find(sp.I.begin(), sp.I.end(), j) == sp.I.end())
                        supported = false;
                if (supported) phi_i.insert(r);
            }
            if (image != phi_i) ok = false;
            // z in W_I
            for (int letter : sp.z.word)
                if (std::find(sp.I.begin(), sp.I.end(), letter) == sp.I.end()) ok = false;
            // conjugation identity: z phi = x (w phi) x^{-1}
            QMatrix p = datum.diagram_perm_matrix(perm);
            if (sp.z.matrix * p * sp.x.matrix != sp.x.matrix * t.matrix) ok = false;
            // Phi_I is split for the standardized twist
            TwistedElement tz = datum.twisted(sp.z, perm);
            if (split_levi_cover_set(datum, phi_i, tz) != phi_i) ok = false;
        }
    }
    return ok;
}

bool gap_cli_exit_code() {
    std::string cmd = std::string(SPLITLEVI_CLI_PATH) +
                      " jordan-levis --type E --rank 8 --s 0,0,0,0,1/5,0,0,0 --w auto"
                      " --q-mod 2:5 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 3;
}

}  // namespace

int main() {
    try {
        double s1 = 0, s3 = 0;
        report("criterion 1 (E8 golden, 6 records, < 60 s)", criterion1_e8_golden(s1));
        report("criterion 2 (Table 1 golden fixture, stars and Phi4 included)",
               criterion2_table_golden());
        report("criterion 3 (cover minimality vs brute force, rank <= 3, < 5 min)",
               criterion3_cover_minimality(s3));
        report("criterion 4 (projector suite, >= 500 random elements)",
               criterion4_projector_suite());
        report("criterion 5 (isolated counts = |extended p'-diagram|)",
               criterion5_isolated_counts());
        report("criterion 6 (M_J = L n Phi(s) and cover fixpoint on all records)",
               criterion6_structural_invariant());
        report("criterion 7 (standardization, 100 random pairs per type of rank <= 4)",
               criterion7_standardization());
        report("acknowledged gap (E8 n_alpha = 5 coset: CLI exit code 3)", gap_cli_exit_code());
    } catch (const std::exception& e) {
        std::cout << "acceptance: unexpected exception: " << e.what() << std::endl;
        return 1;
    }
    return g_failures == 0 ? 0 : 1;
}
