#pragma once

#include "splitlevi/subsystem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace splitlevi {

/// Square classes of Table 1's conventions: squares of numbers
/// congruent to m mod 2, minus {1}; for m = 2 the zero drops out.
inline bool in_square(long n, int m) {
    if (n < 0 || n == 1) return false;
    if (m == 2 && n == 0) return false;
    long t = 0;
    while (t * t < n) ++t;
    if (t * t != n) return false;
    return t % 2 == m % 2;
}

/// Triangular numbers k(k+1)/2.
inline bool in_triangle(long n) {
    if (n < 0) return false;
    long k = 0;
    while (k * (k + 1) / 2 < n) ++k;
    return k * (k + 1) / 2 == n;
}

inline bool in_twice_triangle(long n) { return n % 2 == 0 && in_triangle(n / 2); }

/// Cuspidal unipotent character multiplicities: arithmetic predicates
/// for the classical series, a data file for the exceptional types.
class CuspidalData {
public:
    explicit CuspidalData(const std::string& path) {
        std::ifstream in(path);
        if (!in.good()) throw std::invalid_argument("CuspidalData: cannot read " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            char series;
            int rank, twist;
            unsigned count;
            if (!(ss >> series >> rank >> twist >> count))
                throw std::invalid_argument("CuspidalData: malformed line: " + line);
            exceptional_[{series_from_char(series), rank, twist, 1}] = count;
        }
        if (exceptional_.empty()) throw std::invalid_argument("CuspidalData: empty table");
    }

    /// Number of cuspidal unipotent characters of the finite group with
    /// this label.  The field power e of X(q^e) does not matter.
    unsigned count(CartanLabel label) const {
        label.field_power = 1;
        long m = label.rank;
        switch (label.series) {
            case Series::A:
                if (label.twist_order == 1) return m == 0 ? 1 : 0;
                if (label.twist_order == 2) return in_triangle(m + 1) ? 1 : 0;
                break;
            case Series::B:
            case Series::C:
                if (label.twist_order == 2)
                    throw UnsupportedError("Suzuki-Ree type " + label.str() + " is unsupported");
                if (label.twist_order == 1) return in_twice_triangle(m) ? 1 : 0;
                break;
            case Series::D:
                if (label.twist_order == 1) return in_square(m, 0) ? 1 : 0;
                if (label.twist_order == 2) return in_square(m, 1) ? 1 : 0;
                if (label.twist_order == 3) break;  // 3D4: stored
                break;
            case Series::G:
            case Series::F:
                if (label.twist_order == 2)
                    throw UnsupportedError("Suzuki-Ree type " + label.str() + " is unsupported");
                break;
            default:
                break;
        }
        auto it = exceptional_.find(label);
        if (it == exceptional_.end())
            throw std::invalid_argument("CuspidalData: no entry for " + label.str());
        return it->second;
    }

private:
    std::map<CartanLabel, unsigned> exceptional_;
};

/// A twist-stable subset J of Delta(s) whose standard Levi M_J carries
/// cuspidal unipotent characters.
struct CuspidalSupport {
    std::vector<int> j;       // subset of the handle's simples (root indices)
    SubsystemHandle levi;     // M_J = Sigma_s intersect span(J)
    RecognizedType type;      // recognized against t
    unsigned count = 0;       // product of component multiplicities
};

/// All rho_t-stable J subseteq Delta(s) with positive cuspidal count.
inline std::vector<CuspidalSupport> cuspidal_standard_levis(const SubsystemHandle& h,
                                                            const TwistedElement& t,
                                                            const CuspidalData& data,
                                                            bool prefer_c = false) {
    const RootDatum& datum = *h.datum;
    for (int r : h.roots)
        if (!h.roots.count(t.root_perm[(size_t)r]))
            throw std::invalid_argument("cuspidal_standard_levis: Delta(s) not t-stable");

    // orbits of t on the simple system
    int k = (int)h.simples.size();
    std::vector<int> orbit_of((size_t)k, -1);
    int norbits = 0;
    for (int i = 0; i < k; ++i) {
        if (orbit_of[(size_t)i] >= 0) continue;
        int cur = i;
        while (orbit_of[(size_t)cur] < 0) {
            orbit_of[(size_t)cur] = norbits;
            int img = t.root_perm[(size_t)h.simples[(size_t)cur]];
            auto it = std::find(h.simples.begin(), h.simples.end(), img);
            if (it == h.simples.end())
                throw std::invalid_argument("cuspidal_standard_levis: simples not t-stable");
            cur = (int)(it - h.simples.begin());
        }
        ++norbits;
    }

    std::vector<CuspidalSupport> out;
    for (unsigned mask = 0; mask < (1u << norbits); ++mask) {
        std::vector<int> j;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << orbit_of[(size_t)i])) j.push_back(h.simples[(size_t)i]);

        RootSet roots;
        if (j.empty()) {
            // empty Levi: the torus, one (trivial) cuspidal character
        } else {
            std::vector<Vec> cols;
            for (int r : j) cols.push_back(datum.root(r));
            QMatrix span = QMatrix::from_columns(cols, datum.rank());
            for (int r : h.roots)
                if (in_column_space(span, datum.root(r))) roots.insert(r);
        }
        CuspidalSupport sup;
        sup.j = j;
        sup.levi = make_handle(datum, roots);
        sup.type = recognize_type(sup.levi, t, prefer_c);
        sup.count = 1;
        for (const auto& comp : sup.type.components) sup.count *= data.count(comp.label);
        if (sup.count > 0) out.push_back(std::move(sup));
    }
    std::sort(out.begin(), out.end(), [](const CuspidalSupport& a, const CuspidalSupport& b) {
        if (a.j.size() != b.j.size()) return a.j.size() < b.j.size();
        return a.j < b.j;
    });
    return out;
}

}  // namespace splitlevi
