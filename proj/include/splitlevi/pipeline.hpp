#pragma once

#include "splitlevi/cover.hpp"
#include "splitlevi/cuspidal.hpp"
#include "splitlevi/semisimple.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace splitlevi {

/// One Jordan parameter [(s,n),(L, M = C_L°(s))] of a cuspidal pair.
struct CuspidalLeviRecord {
    TwistedClassRep class_rep;            // s and w (with the lemma branch)
    std::vector<int> j;                   // J ⊆ Δ(s), as root indices
    SubsystemHandle m;                    // M_J = Φ(s) ∩ span(J)
    SubsystemHandle levi;                 // L = smallest wφ-split Levi ⊇ M_J
    RecognizedType centralizer_part;      // type of M_J with torus polynomial
    RecognizedType levi_part;             // type of L with torus polynomial
    unsigned cusp_count = 0;
    std::optional<StandardPair> standard_form;
};

/// Renders a recognized type as "<components>.<torus>", e.g.
/// "2E6.P1.P2" or "A1.A1.A1.P1^5"; the trivial type is "1".
inline std::string render_type(const RecognizedType& t) {
    std::string out;
    for (const auto& c : t.components) {
        if (!out.empty()) out += ".";
        out += c.label.str();
    }
    if (t.torus.degree() > 0) {
        if (!out.empty()) out += ".";
        out += t.torus.phi_str();
    }
    return out.empty() ? "1" : out;
}

inline std::string render_record(const CuspidalLeviRecord& r) {
    return render_type(r.levi_part) + " | " + render_type(r.centralizer_part);
}

namespace detail {

/// Shared body of the d = 1 and general-d extraction: for each support
/// (J, count) compute the cover L of M_J, verify M_J = L ∩ Φ(s) and the
/// fixpoint property, and recognize both sides against wφ.
inline CuspidalLeviRecord make_record(const RootDatum& datum, const TwistedClassRep& cls,
                                      const SubsystemHandle& phi_s, const TwistedElement& t,
                                      const std::vector<int>& j, unsigned count,
                                      const RootSet& cover, bool prefer_c,
                                      bool with_standard_form) {
    CuspidalLeviRecord rec;
    rec.class_rep = cls;
    rec.j = j;

    RootSet m_roots;
    if (!j.empty()) {
        std::vector<Vec> cols;
        for (int r : j) cols.push_back(datum.root(r));
        QMatrix span = QMatrix::from_columns(cols, datum.rank());
        for (int r : phi_s.roots)
            if (in_column_space(span, datum.root(r))) m_roots.insert(r);
    }
    rec.m = make_handle(datum, m_roots);
    rec.levi = make_handle(datum, cover);

    // structural invariant of Prop. on centralizers: M_J = L ∩ Φ(s)
    RootSet inter;
    for (int r : cover)
        if (phi_s.roots.count(r)) inter.insert(r);
    if (inter != m_roots)
        throw std::logic_error("jordan_cuspidal_levis: M_J != L ∩ Φ(s)");

    rec.centralizer_part = recognize_type(rec.m, t, prefer_c);
    rec.levi_part = recognize_type(rec.levi, t, prefer_c);
    rec.cusp_count = count;

    // torus-degree bookkeeping: deg(torus of L) + rank(span L) = rank
    int span_rank = datum.rank() - rec.levi.torus_rank;
    if (rec.levi_part.torus.degree() + span_rank != datum.rank())
        throw std::logic_error("jordan_cuspidal_levis: torus degree bookkeeping failed");

    if (with_standard_form)
        rec.standard_form = conjugate_to_standard(datum, cover, cls.w, t.diagram_perm);
    return rec;
}

}  // namespace detail

/// The extraction procedure at d = 1: one record per cuspidal support
/// J ⊆ Δ(s), with L the smallest wφ-split Levi subsystem containing
/// M_J.  Requires (wφ)Δ(s) = Δ(s).
inline std::vector<CuspidalLeviRecord> jordan_cuspidal_levis(
    const RootDatum& datum, const TwistedClassRep& cls, const std::vector<int>& diagram_perm,
    const CuspidalData& data, bool prefer_c = false, bool with_standard_form = false) {
    TwistedElement t = datum.twisted(cls.w, diagram_perm);
    SubsystemHandle phi_s = centralizer_roots(datum, cls.param.v);
    if (!detail::stabilizes_simples(datum, phi_s, t.matrix))
        throw std::invalid_argument("jordan_cuspidal_levis: (wφ)Δ(s) != Δ(s)");

    std::vector<CuspidalLeviRecord> out;
    for (const auto& sup : cuspidal_standard_levis(phi_s, t, data, prefer_c)) {
        RootSet cover = split_levi_cover_set(datum, sup.levi.roots, t);
        if (split_levi_cover_set(datum, cover, t) != cover)
            throw std::logic_error("jordan_cuspidal_levis: cover is not a fixpoint");
        out.push_back(detail::make_record(datum, cls, phi_s, t, sup.j, sup.count, cover,
                                          prefer_c, with_standard_form));
    }
    return out;
}

/// Caller-provided d-cuspidal support: a wφ-stable J ⊆ Δ(s) with its
/// multiplicity.  d-cuspidal tables beyond d = 1 are out of scope, so
/// only the trivial supports ∅ and Δ(s) are generated by default.
struct DSupport {
    std::vector<int> j;
    unsigned count = 1;
};

inline std::vector<CuspidalLeviRecord> d_jordan_cuspidal_levis(
    const RootDatum& datum, const TwistedClassRep& cls, const std::vector<int>& diagram_perm,
    const CuspidalData& data, unsigned long d, const std::vector<DSupport>* supports = nullptr,
    bool prefer_c = false, bool with_standard_form = false) {
    if (d == 0) throw std::invalid_argument("d_jordan_cuspidal_levis: d must be positive");
    if (d == 1 && supports == nullptr)
        return jordan_cuspidal_levis(datum, cls, diagram_perm, data, prefer_c, with_standard_form);

    TwistedElement t = datum.twisted(cls.w, diagram_perm);
    SubsystemHandle phi_s = centralizer_roots(datum, cls.param.v);
    if (!detail::stabilizes_simples(datum, phi_s, t.matrix))
        throw std::invalid_argument("d_jordan_cuspidal_levis: (wφ)Δ(s) != Δ(s)");

    std::vector<DSupport> trivial;
    if (supports == nullptr) {
        trivial.push_back({{}, 1});
        if (!phi_s.simples.empty()) trivial.push_back({phi_s.simples, 1});
        supports = &trivial;
    }

    std::vector<CuspidalLeviRecord> out;
    for (const auto& sup : *supports) {
        RootSet m_seed;
        if (!sup.j.empty()) {
            std::vector<Vec> cols;
            for (int r : sup.j) cols.push_back(datum.root(r));
            QMatrix span = QMatrix::from_columns(cols, datum.rank());
            for (int r : phi_s.roots)
                if (in_column_space(span, datum.root(r))) m_seed.insert(r);
        }
        RootSet cover = d_split_cover_set(datum, m_seed, t, d);
        if (d_split_cover_set(datum, cover, t, d) != cover)
            throw std::logic_error("d_jordan_cuspidal_levis: cover is not a fixpoint");
        out.push_back(detail::make_record(datum, cls, phi_s, t, sup.j, sup.count, cover,
                                          prefer_c, with_standard_form));
    }
    std::sort(out.begin(), out.end(), [](const CuspidalLeviRecord& a, const CuspidalLeviRecord& b) {
        if (a.j.size() != b.j.size()) return a.j.size() < b.j.size();
        return a.j < b.j;
    });
    return out;
}

/// One concrete rendered row of the classical-types table.
struct TableRow {
    std::string group;             // G^F, e.g. "B3" or "2D4"
    std::string centralizer;       // C_G°(s)^{nF}
    std::string p_condition;       // "-" or "!=2"
    std::string levi;              // L^{nF}
    std::string levi_centralizer;  // C_L°(s)^{nF}
    std::string conditions;        // observed parameters, e.g. "m=2"
    bool star = false;             // centralizer class met by >= 2 orbits

    auto key() const {
        return std::tie(group, centralizer, p_condition, levi, levi_centralizer, conditions, star);
    }
    friend bool operator==(const TableRow& a, const TableRow& b) { return a.key() == b.key(); }
    friend bool operator<(const TableRow& a, const TableRow& b) { return a.key() < b.key(); }

    std::string str() const {
        std::ostringstream os;
        os << group << " | " << centralizer << (star ? " (*)" : "") << " | " << p_condition
           << " | " << levi << " | " << levi_centralizer << " | " << conditions;
        return os.str();
    }
};

/// Concrete rows of the classical table at one rank: isolated reps x
/// component-group orbits x cuspidal supports.  Orbits of the same
/// class whose rows render identically are merged and starred.
/// p = 2 restricts to the p'-part of the extended diagram; any other
/// value of p means "p odd".
inline std::vector<TableRow> classical_table(Series series, int rank, int twist, long p,
                                             const CuspidalData& data) {
    if (series != Series::B && series != Series::C && series != Series::D)
        throw std::invalid_argument("classical_table: series must be B, C or D");
    if (twist != 1 && twist != 2)
        throw std::invalid_argument("classical_table: twist must be 1 or 2");
    if (twist == 2 && series != Series::D)
        throw std::invalid_argument("classical_table: twist 2 requires series D");

    RootDatum datum(series, rank);
    std::vector<int> perm((size_t)rank);
    for (int i = 0; i < rank; ++i) perm[(size_t)i] = i;
    if (twist == 2) std::swap(perm[(size_t)rank - 2], perm[(size_t)rank - 1]);
    QClass q_class = (p == 2) ? QClass{0, 2} : QClass{1, 2};
    bool prefer_c = series == Series::C;
    std::string gstr = CartanLabel{series, rank, twist, 1}.str();

    std::vector<TableRow> rows;
    for (const auto& rep : isolated_reps(datum, p)) {
        auto orbits = component_group_orbits(datum, rep, perm, q_class);
        std::map<std::vector<TableRow>, int> blocks;
        for (const auto& cls : orbits) {
            TwistedElement t = datum.twisted(cls.w, perm);
            std::string cent = render_type(recognize_type(rep.centralizer, t, prefer_c));
            std::vector<TableRow> block;
            for (const auto& rec : jordan_cuspidal_levis(datum, cls, perm, data, prefer_c)) {
                TableRow row;
                row.group = gstr;
                row.centralizer = cent;
                row.p_condition = rep.param.order == 1 ? "-" : "!=2";
                row.levi = render_type(rec.levi_part);
                row.levi_centralizer = render_type(rec.centralizer_part);
                row.conditions = "m=" + std::to_string(datum.rank() - rec.levi.torus_rank);
                block.push_back(std::move(row));
            }
            ++blocks[block];
        }
        for (const auto& [block, norbits] : blocks)
            for (TableRow row : block) {
                row.star = norbits >= 2;
                rows.push_back(std::move(row));
            }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

}  // namespace splitlevi
