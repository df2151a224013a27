#include "blockdeg/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::permgroup {

Perm perm_identity(unsigned degree) {
    Perm p(degree);
    for (unsigned i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
    return p;
}

bool perm_is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    internal_check(a.size() == b.size(), "perm_mul: degree mismatch");
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
}

Perm perm_pow(const Perm& a, long long e) {
    unsigned deg = static_cast<unsigned>(a.size());
    Perm base = e < 0 ? perm_inverse(a) : a;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm r = perm_identity(deg);
    while (k > 0) {
        if (k & 1) r = perm_mul(r, base);
        base = perm_mul(base, base);
        k >>= 1;
    }
    return r;
}

u64 perm_order(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    u64 ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        u64 len = 0;
        std::size_t j = i;
        do {
            seen[j] = true;
            j = a[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm perm_conj(const Perm& x, const Perm& g) {
    return perm_mul(perm_mul(perm_inverse(g), x), g);
}

std::string perm_to_cycles(const Perm& a) {
    std::ostringstream os;
    std::vector<bool> seen(a.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == i) {
            seen[i] = true;
            continue;
        }
        os << "(";
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) os << ",";
            os << (j + 1);
            first = false;
            seen[j] = true;
            j = a[j];
        } while (j != i);
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

Perm perm_from_cycles(const std::string& s, unsigned degree) {
    Perm r = perm_identity(degree);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    bool saw_cycle = false;
    while (pos < s.size()) {
        skip_ws();
        if (pos >= s.size()) break;
        require(s[pos] == '(', "cycle notation: expected '('");
        ++pos;
        std::vector<unsigned> cycle;
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            require(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])),
                    "cycle notation: expected point");
            unsigned v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            require(v >= 1 && v <= degree, "cycle notation: point out of range");
            cycle.push_back(v - 1);
            skip_ws();
            if (pos < s.size() && (s[pos] == ',' || s[pos] == ' ')) {
                if (s[pos] == ',') ++pos;
            }
        }
        saw_cycle = true;
        if (cycle.size() >= 2) {
            Perm c = perm_identity(degree);
            for (std::size_t i = 0; i < cycle.size(); ++i)
                c[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
            r = perm_mul(r, c);
        }
        skip_ws();
    }
    require(saw_cycle, "cycle notation: empty input");
    return r;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

struct StabChain {
    unsigned degree = 0;
    std::vector<unsigned> base;
    std::vector<std::vector<Perm>> gens;        // per level
    std::vector<std::vector<int>> slot;         // point -> transversal index, -1 outside orbit
    std::vector<std::vector<Perm>> transversal; // level -> coset reps u with u(base) = point
    std::vector<bool> fresh;
    mpz_class order = 1;

    void rebuild_orbit(unsigned lv) {
        auto& sl = slot[lv];
        sl.assign(degree, -1);
        auto& tr = transversal[lv];
        tr.clear();
        std::deque<unsigned> queue;
        unsigned b = base[lv];
        sl[b] = 0;
        tr.push_back(perm_identity(degree));
        queue.push_back(b);
        while (!queue.empty()) {
            unsigned pt = queue.front();
            queue.pop_front();
            for (const auto& g : gens[lv]) {
                unsigned img = g[pt];
                if (sl[img] < 0) {
                    sl[img] = static_cast<int>(tr.size());
                    tr.push_back(perm_mul(tr[sl[pt]], g));
                    queue.push_back(img);
                }
            }
        }
        fresh[lv] = true;
    }

    // strip h through levels >= from; returns the level where it sticks,
    // or base.size() if it survives everything; identity maps to (id, any)
    std::pair<Perm, unsigned> sift(Perm h, unsigned from) {
        for (unsigned lv = from; lv < base.size(); ++lv) {
            if (perm_is_identity(h)) return {h, lv};
            if (!fresh[lv]) rebuild_orbit(lv);
            unsigned img = h[base[lv]];
            if (slot[lv][img] < 0) return {h, lv};
            h = perm_mul(h, perm_inverse(transversal[lv][slot[lv][img]]));
        }
        return {h, static_cast<unsigned>(base.size())};
    }

    void new_level(const Perm& mover) {
        unsigned b = 0;
        while (b < degree && mover[b] == b) ++b;
        internal_check(b < degree, "stab chain: identity passed to new_level");
        base.push_back(b);
        gens.emplace_back();
        slot.emplace_back();
        transversal.emplace_back();
        fresh.push_back(false);
    }

    void build(const std::vector<Perm>& input) {
        for (const auto& g : input) {
            if (perm_is_identity(g)) continue;
            if (base.empty()) new_level(g);
            gens[0].push_back(g);
            fresh[0] = false;
        }
        // close each level in turn; additions only ever go deeper
        for (unsigned lv = 0; lv < base.size(); ++lv) {
            bool changed = true;
            while (changed) {
                changed = false;
                if (!fresh[lv]) rebuild_orbit(lv);
                auto tr_snapshot = transversal[lv];
                auto gen_snapshot = gens[lv];
                for (const auto& u : tr_snapshot) {
                    for (const auto& s : gen_snapshot) {
                        Perm us = perm_mul(u, s);
                        unsigned img = us[base[lv]];
                        internal_check(slot[lv][img] >= 0, "stab chain: orbit not closed");
                        Perm schreier =
                            perm_mul(us, perm_inverse(transversal[lv][slot[lv][img]]));
                        if (perm_is_identity(schreier)) continue;
                        auto [residue, drop] = sift(std::move(schreier), lv + 1);
                        if (perm_is_identity(residue)) continue;
                        if (drop == base.size()) new_level(residue);
                        for (unsigned k = lv + 1; k <= drop && k < base.size(); ++k) {
                            gens[k].push_back(residue);
                            fresh[k] = false;
                        }
                        changed = true;
                    }
                }
            }
        }
        order = 1;
        for (unsigned lv = 0; lv < base.size(); ++lv) {
            if (!fresh[lv]) rebuild_orbit(lv);
            order *= static_cast<unsigned long>(transversal[lv].size());
        }
    }
};

const StabChain& PermutationGroup::chain() const {
    if (!chain_) {
        auto c = std::make_shared<StabChain>();
        c->degree = degree;
        c->build(generators);
        chain_ = std::move(c);
    }
    return *chain_;
}

mpz_class PermutationGroup::order() const { return chain().order; }

PermutationGroup make_group(unsigned degree, std::vector<Perm> generators) {
    require(degree >= 1, "make_group: degree >= 1");
    for (const auto& g : generators) {
        require(g.size() == degree, "make_group: generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (auto v : g) {
            require(v < degree && !seen[v], "make_group: generator is not a bijection");
            seen[v] = true;
        }
    }
    PermutationGroup out;
    out.degree = degree;
    out.generators = std::move(generators);
    return out;
}

mpz_class group_order(const PermutationGroup& g) { return g.order(); }

PermutationGroup parse_group_stream(std::istream& in) {
    std::string line;
    unsigned degree = 0;
    bool have_degree = false;
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto start = line.find_first_not_of(" \t\r\n");
        if (start == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r\n");
        line = line.substr(start, end - start + 1);
        if (line.rfind("degree:", 0) == 0) {
            require(!have_degree, "group file: duplicate degree line");
            degree = static_cast<unsigned>(std::stoul(line.substr(7)));
            require(degree >= 1 && degree <= 65535, "group file: degree out of range");
            have_degree = true;
        } else if (line.rfind("gen:", 0) == 0) {
            require(have_degree, "group file: degree line must come first");
            gens.push_back(perm_from_cycles(line.substr(4), degree));
        } else {
            throw std::invalid_argument("group file: unrecognized line: " + line);
        }
    }
    require(have_degree, "group file: missing degree line");
    return make_group(degree, std::move(gens));
}

PermutationGroup parse_group_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open group file: " + path);
    return parse_group_stream(in);
}

std::string format_group(const PermutationGroup& g) {
    std::ostringstream os;
    os << "degree: " << g.degree << "\n";
    for (const auto& gen : g.generators) os << "gen: " << perm_to_cycles(gen) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

ClassData conjugacy_classes(const PermutationGroup& g, u64 bound) {
    ClassData cd;
    cd.degree = g.degree;
    mpz_class ord = g.order();
    require(ord <= static_cast<unsigned long>(bound),
            "conjugacy_classes: group order exceeds the enumeration bound");
    u64 n = ord.get_ui();

    // enumerate all elements by BFS over right multiplication
    std::unordered_map<Perm, std::uint32_t, PermHash> seen;
    seen.reserve(2 * n);
    std::deque<Perm> queue;
    Perm id = perm_identity(g.degree);
    seen.emplace(id, 0);
    queue.push_back(id);
    std::vector<Perm> all;
    all.reserve(n);
    all.push_back(id);
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : g.generators) {
            Perm y = perm_mul(x, gen);
            if (seen.emplace(y, 0).second) {
                all.push_back(y);
                queue.push_back(y);
            }
        }
    }
    internal_check(all.size() == n, "conjugacy_classes: enumeration does not match order");

    std::sort(all.begin(), all.end());
    cd.elements = std::move(all);
    cd.index_of.reserve(2 * n);
    for (std::uint32_t i = 0; i < cd.elements.size(); ++i) cd.index_of.emplace(cd.elements[i], i);
    cd.group_order = n;

    // conjugation orbits, seeded in ascending element order so each
    // representative is the least member of its class
    constexpr std::uint32_t kUnassigned = UINT32_MAX;
    cd.class_of.assign(n, kUnassigned);
    std::vector<Perm> gen_inverses;
    for (const auto& gen : g.generators) gen_inverses.push_back(perm_inverse(gen));
    for (std::uint32_t i = 0; i < n; ++i) {
        if (cd.class_of[i] != kUnassigned) continue;
        std::uint32_t cls = static_cast<std::uint32_t>(cd.sizes.size());
        cd.representative.push_back(i);
        cd.members.emplace_back();
        std::deque<std::uint32_t> orbit{i};
        cd.class_of[i] = cls;
        u64 size = 0;
        while (!orbit.empty()) {
            std::uint32_t j = orbit.front();
            orbit.pop_front();
            ++size;
            cd.members[cls].push_back(j);
            for (std::size_t t = 0; t < g.generators.size(); ++t) {
                Perm y = perm_mul(perm_mul(gen_inverses[t], cd.elements[j]), g.generators[t]);
                std::uint32_t k = cd.index_of.at(y);
                if (cd.class_of[k] == kUnassigned) {
                    cd.class_of[k] = cls;
                    orbit.push_back(k);
                }
            }
        }
        cd.sizes.push_back(size);
        cd.orders.push_back(perm_order(cd.elements[i]));
    }
    internal_check(cd.class_of_perm(id) == 0, "conjugacy_classes: identity class must be 0");
    internal_check(std::accumulate(cd.sizes.begin(), cd.sizes.end(), u64{0}) == n,
                   "conjugacy_classes: class equation failure");

    unsigned r = cd.num_classes();
    cd.inverse_map.resize(r);
    for (unsigned k = 0; k < r; ++k)
        cd.inverse_map[k] = cd.class_of_perm(perm_inverse(cd.rep(k)));

    u64 expo = exponent(cd);
    for (u64 p : numtheory::prime_divisors(expo)) {
        std::vector<std::uint32_t> pm(r);
        for (unsigned k = 0; k < r; ++k)
            pm[k] = cd.class_of_perm(perm_pow(cd.rep(k), static_cast<long long>(p)));
        cd.power_maps.emplace(p, std::move(pm));
    }
    return cd;
}

std::uint32_t ClassData::element_index(const Perm& x) const {
    auto it = index_of.find(x);
    require(it != index_of.end(), "element does not belong to the enumerated group");
    return it->second;
}

std::uint32_t ClassData::class_of_perm(const Perm& x) const { return class_of[element_index(x)]; }

std::uint32_t ClassData::power_class(unsigned k, u64 t) const {
    return class_of[element_index(perm_pow(rep(k), static_cast<long long>(t % orders[k])))];
}

u64 exponent(const ClassData& cd) {
    u64 e = 1;
    for (u64 o : cd.orders) e = std::lcm(e, o);
    return e;
}

std::vector<std::vector<u64>> class_matrix(const ClassData& cd, unsigned i) {
    unsigned r = cd.num_classes();
    require(i < r, "class_matrix: class index out of range");
    std::vector<std::vector<u64>> m(r, std::vector<u64>(r, 0));
    for (std::uint32_t idx : cd.members[i]) {
        Perm xinv = perm_inverse(cd.elements[idx]);
        for (unsigned k = 0; k < r; ++k) {
            Perm y = perm_mul(xinv, cd.rep(k));
            ++m[cd.class_of_perm(y)][k];
        }
    }
    return m;
}

std::vector<u64> class_mult_coeffs(const ClassData& cd, unsigned i, unsigned j) {
    unsigned r = cd.num_classes();
    require(i < r && j < r, "class_mult_coeffs: class index out of range");
    std::vector<u64> row(r, 0);
    for (std::uint32_t idx : cd.members[i]) {
        Perm xinv = perm_inverse(cd.elements[idx]);
        for (unsigned k = 0; k < r; ++k) {
            Perm y = perm_mul(xinv, cd.rep(k));
            if (cd.class_of_perm(y) == j) ++row[k];
        }
    }
    return row;
}

} // namespace blockdeg::permgroup
