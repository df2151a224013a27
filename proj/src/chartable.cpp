#include "blockdeg/chartable.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::chartable {

using numtheory::mulmod;
using numtheory::powmod;
using permgroup::ClassData;

namespace {

constexpr u64 kSplitSeed = 0xb10cdec1ULL;

u64 inv_mod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u64 sqrt_mod(u64 a, u64 p) {
    // Tonelli-Shanks with deterministic non-residue search; requires a QR input.
    a %= p;
    if (a == 0) return 0;
    internal_check(powmod(a, (p - 1) / 2, p) == 1, "sqrt_mod: not a quadratic residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = powmod(c, 1ULL << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// column-space basis in reduced column echelon form
struct Subspace {
    std::vector<std::vector<u64>> cols;
    std::vector<unsigned> pivots; // pivot row of each column

    unsigned dim() const { return static_cast<unsigned>(cols.size()); }
};

void insert_column(Subspace& s, std::vector<u64> v, u64 p) {
    // reduce against existing pivots
    for (unsigned i = 0; i < s.dim(); ++i) {
        u64 c = v[s.pivots[i]];
        if (c != 0)
            for (std::size_t rrow = 0; rrow < v.size(); ++rrow)
                v[rrow] = (v[rrow] + p - mulmod(c, s.cols[i][rrow], p)) % p;
    }
    unsigned piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return; // dependent
    u64 inv = inv_mod(v[piv], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    // clear the new pivot row from older columns
    for (unsigned i = 0; i < s.dim(); ++i) {
        u64 c = s.cols[i][piv];
        if (c != 0)
            for (std::size_t rrow = 0; rrow < v.size(); ++rrow)
                s.cols[i][rrow] = (s.cols[i][rrow] + p - mulmod(c, v[rrow], p)) % p;
    }
    s.cols.push_back(std::move(v));
    s.pivots.push_back(piv);
}

Subspace make_subspace(const std::vector<std::vector<u64>>& vectors, u64 p) {
    Subspace s;
    for (auto v : vectors) insert_column(s, std::move(v), p);
    return s;
}

std::vector<u64> mat_vec(const std::vector<std::vector<u64>>& m, const std::vector<u64>& v, u64 p) {
    std::size_t r = m.size();
    std::vector<u64> out(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < r; ++j) {
            acc += static_cast<unsigned __int128>(m[i][j] % p) * v[j];
            if ((j & 15) == 15) acc %= p;
        }
        out[i] = static_cast<u64>(acc % p);
    }
    return out;
}

// coordinates of w in the echelonized basis; verifies membership
std::vector<u64> coordinates(const Subspace& s, const std::vector<u64>& w, u64 p) {
    std::vector<u64> coord(s.dim());
    std::vector<u64> check(w.size(), 0);
    for (unsigned i = 0; i < s.dim(); ++i) {
        coord[i] = w[s.pivots[i]];
        if (coord[i] != 0)
            for (std::size_t rrow = 0; rrow < w.size(); ++rrow)
                check[rrow] = (check[rrow] + mulmod(coord[i], s.cols[i][rrow], p)) % p;
    }
    internal_check(check == w, "eigen split: subspace is not invariant");
    return coord;
}

// det(x I - A) via Hessenberg reduction and the principal-minor recurrence
gfp::Poly charpoly(std::vector<std::vector<u64>> h, u64 p) {
    unsigned m = static_cast<unsigned>(h.size());
    if (m == 0) return gfp::Poly{1};
    for (auto& row : h)
        for (auto& x : row) x %= p;
    // similarity transform to upper Hessenberg form
    for (unsigned col = 0; col + 2 < m; ++col) {
        unsigned piv = col + 1;
        while (piv < m && h[piv][col] == 0) ++piv;
        if (piv == m) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (unsigned i = 0; i < m; ++i) std::swap(h[i][piv], h[i][col + 1]);
        }
        u64 inv = inv_mod(h[col + 1][col], p);
        for (unsigned row = col + 2; row < m; ++row) {
            u64 f = mulmod(h[row][col], inv, p);
            if (f == 0) continue;
            for (unsigned j = 0; j < m; ++j)
                h[row][j] = (h[row][j] + p - mulmod(f, h[col + 1][j], p)) % p;
            for (unsigned i = 0; i < m; ++i)
                h[i][col + 1] = (h[i][col + 1] + mulmod(f, h[i][row], p)) % p;
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    std::vector<gfp::Poly> ps(m + 1);
    ps[0] = gfp::Poly{1};
    for (unsigned k = 1; k <= m; ++k) {
        gfp::Poly cur = gfp::poly_mul(ps[k - 1], gfp::Poly{(p - h[k - 1][k - 1]) % p, 1}, p);
        u64 subdiag = 1;
        for (unsigned i = k - 1; i >= 1; --i) {
            subdiag = mulmod(subdiag, h[i][i - 1], p); // h_{i+1,i} in 1-based terms
            if (subdiag == 0) break;
            u64 coeff = mulmod(h[i - 1][k - 1], subdiag, p);
            if (coeff == 0) continue;
            gfp::Poly term = ps[i - 1];
            for (auto& c : term) c = mulmod(c, coeff, p);
            cur = gfp::poly_sub(cur, term, p);
        }
        ps[k] = std::move(cur);
    }
    internal_check(ps[m].size() == m + 1 && ps[m].back() == 1, "charpoly: not monic");
    return ps[m];
}

// kernel basis of (A - lambda I), vectors in coordinate space
std::vector<std::vector<u64>> kernel_basis(std::vector<std::vector<u64>> w, u64 lambda, u64 p) {
    unsigned m = static_cast<unsigned>(w.size());
    for (unsigned i = 0; i < m; ++i) w[i][i] = (w[i][i] + p - lambda) % p;
    // row-reduce
    std::vector<int> pivot_col_of_row(m, -1);
    std::vector<bool> is_pivot_col(m, false);
    unsigned row = 0;
    for (unsigned col = 0; col < m && row < m; ++col) {
        unsigned piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[piv], w[row]);
        u64 inv = inv_mod(w[row][col], p);
        for (unsigned j = 0; j < m; ++j) w[row][j] = mulmod(w[row][j], inv, p);
        for (unsigned rr = 0; rr < m; ++rr) {
            if (rr == row) continue;
            u64 f = w[rr][col];
            if (f != 0)
                for (unsigned j = 0; j < m; ++j)
                    w[rr][j] = (w[rr][j] + p - mulmod(f, w[row][j], p)) % p;
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        is_pivot_col[col] = true;
        ++row;
    }
    std::vector<std::vector<u64>> out;
    for (unsigned col = 0; col < m; ++col) {
        if (is_pivot_col[col]) continue;
        std::vector<u64> v(m, 0);
        v[col] = 1;
        for (unsigned rr = 0; rr < row; ++rr) {
            int pc = pivot_col_of_row[rr];
            if (pc >= 0) v[pc] = (p - w[rr][col]) % p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

CharacterTable character_table(const permgroup::PermutationGroup& g, const CharTableOptions& opts) {
    CharacterTable t;
    auto cd_ptr = std::make_shared<ClassData>(permgroup::conjugacy_classes(g, opts.bound));
    const ClassData& cd = *cd_ptr;
    t.classes = cd_ptr;
    t.order = cd.group_order;
    t.exponent = permgroup::exponent(cd);
    const unsigned r = cd.num_classes();
    const u64 n = t.order;

    // (2) least prime l ≡ 1 (mod exponent) with l^2 > 4|G|, shifted by prime_offset
    u64 ell = 0;
    {
        u64 lower = 1;
        unsigned remaining = opts.prime_offset;
        for (;;) {
            u64 cand = numtheory::next_prime_in_progression(t.exponent, lower);
            if (static_cast<unsigned __int128>(cand) * cand > 4 * static_cast<unsigned __int128>(n)) {
                if (remaining == 0) {
                    ell = cand;
                    break;
                }
                --remaining;
            }
            lower = cand;
        }
    }
    t.dixon_prime = ell;

    // (3) all class matrices mod l
    std::vector<std::vector<std::vector<u64>>> mats(r);
    parallel_for(r, [&](std::size_t i) {
        auto mi = permgroup::class_matrix(cd, static_cast<unsigned>(i));
        for (auto& rowv : mi)
            for (auto& x : rowv) x %= ell;
        mats[i] = std::move(mi);
    });

    // (4) split F_l^r into common eigenspaces
    std::vector<Subspace> spaces;
    {
        std::vector<std::vector<u64>> full;
        for (unsigned i = 0; i < r; ++i) {
            std::vector<u64> e(r, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(make_subspace(full, ell));
    }
    auto split_with = [&](const std::vector<std::vector<u64>>& m) {
        std::vector<Subspace> next;
        for (auto& sp : spaces) {
            if (sp.dim() == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            unsigned dim = sp.dim();
            // restriction A: column j = coordinates of M * b_j
            std::vector<std::vector<u64>> a(dim, std::vector<u64>(dim));
            for (unsigned j = 0; j < dim; ++j) {
                auto w = mat_vec(m, sp.cols[j], ell);
                auto coord = coordinates(sp, w, ell);
                for (unsigned i = 0; i < dim; ++i) a[i][j] = coord[i];
            }
            auto cp = charpoly(a, ell);
            auto roots = gfp::poly_roots(cp, ell, kSplitSeed);
            if (roots.size() <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            unsigned total = 0;
            for (u64 lambda : roots) {
                auto kb = kernel_basis(a, lambda, ell);
                internal_check(!kb.empty(), "eigen split: root without eigenvector");
                std::vector<std::vector<u64>> lifted;
                for (auto& v : kb) {
                    std::vector<u64> big(r, 0);
                    for (unsigned j = 0; j < dim; ++j) {
                        if (v[j] == 0) continue;
                        for (unsigned rowi = 0; rowi < r; ++rowi)
                            big[rowi] = (big[rowi] + mulmod(v[j], sp.cols[j][rowi], ell)) % ell;
                    }
                    lifted.push_back(std::move(big));
                }
                Subspace child = make_subspace(lifted, ell);
                internal_check(child.dim() == kb.size(), "eigen split: dependent kernel lift");
                total += child.dim();
                next.push_back(std::move(child));
            }
            internal_check(total == dim, "eigen split: dimensions do not add up");
        }
        spaces = std::move(next);
    };
    auto all_split = [&] {
        return std::all_of(spaces.begin(), spaces.end(),
                           [](const Subspace& s) { return s.dim() == 1; });
    };
    for (unsigned i = 1; i < r && !all_split(); ++i) split_with(mats[i]);
    if (!all_split()) {
        // deterministic fallback: random F_l combinations of the class matrices
        SplitMix64 rng(kSplitSeed ^ 0x5eedc0deULL);
        for (unsigned attempt = 0; attempt < 64 && !all_split(); ++attempt) {
            std::vector<std::vector<u64>> m(r, std::vector<u64>(r, 0));
            for (unsigned i = 1; i < r; ++i) {
                u64 c = rng.below(ell);
                if (c == 0) continue;
                for (unsigned j = 0; j < r; ++j)
                    for (unsigned k = 0; k < r; ++k)
                        m[j][k] = (m[j][k] + mulmod(c, mats[i][j][k], ell)) % ell;
            }
            split_with(m);
        }
        internal_check(all_split(), "eigen split: could not separate central characters");
    }
    internal_check(spaces.size() == r, "eigen split: wrong number of central characters");

    // central characters mod l, normalized so omega(identity class) = 1
    std::vector<std::vector<u64>> omega(r, std::vector<u64>(r));
    for (unsigned c = 0; c < r; ++c) {
        const auto& v = spaces[c].cols[0];
        internal_check(v[0] != 0, "central character: vanishing identity coordinate");
        u64 inv = inv_mod(v[0], ell);
        for (unsigned k = 0; k < r; ++k) omega[c][k] = mulmod(v[k], inv, ell);
    }
    // eigenvalue equations M_i omega = omega_i omega, full verification
    for (unsigned c = 0; c < r; ++c) {
        for (unsigned i = 0; i < r; ++i) {
            auto w = mat_vec(mats[i], omega[c], ell);
            for (unsigned k = 0; k < r; ++k)
                internal_check(w[k] == mulmod(omega[c][i], omega[c][k], ell),
                               "central character fails its eigenvalue equation");
        }
    }

    // (5) degrees from 1/chi(1)^2 = (1/|G|) sum_k omega_k omega_{k'} / |K_k|
    std::vector<u64> degrees(r);
    for (unsigned c = 0; c < r; ++c) {
        u64 s = 0;
        for (unsigned k = 0; k < r; ++k) {
            u64 term = mulmod(omega[c][k], omega[c][cd.inverse_map[k]], ell);
            s = (s + mulmod(term, inv_mod(cd.sizes[k] % ell, ell), ell)) % ell;
        }
        internal_check(s != 0, "degree recovery: singular norm sum");
        u64 d2 = mulmod(n % ell, inv_mod(s, ell), ell);
        u64 d = sqrt_mod(d2, ell);
        d = std::min(d, ell - d);
        internal_check(d != 0 && mulmod(d, d, ell) == d2, "degree recovery: square root failure");
        internal_check(n % d == 0, "degree recovery: degree does not divide the group order");
        degrees[c] = d;
    }
    {
        unsigned __int128 sum = 0;
        for (u64 d : degrees) sum += static_cast<unsigned __int128>(d) * d;
        internal_check(sum == n, "sum of squared degrees does not match the group order");
    }

    // character values mod l
    std::vector<std::vector<u64>> xmod(r, std::vector<u64>(r));
    for (unsigned c = 0; c < r; ++c)
        for (unsigned k = 0; k < r; ++k)
            xmod[c][k] =
                mulmod(degrees[c] % ell, mulmod(omega[c][k], inv_mod(cd.sizes[k] % ell, ell), ell), ell);

    // (6) lift to cyclotomic integers by eigenvalue-multiplicity counting
    u64 primitive_root = 2;
    {
        auto qs = numtheory::prime_divisors(ell - 1);
        for (;; ++primitive_root) {
            bool ok = true;
            for (u64 q : qs)
                if (powmod(primitive_root, (ell - 1) / q, ell) == 1) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
    }
    std::vector<std::vector<std::uint32_t>> power_class_of(r);
    for (unsigned k = 0; k < r; ++k) {
        u64 o = cd.orders[k];
        power_class_of[k].resize(o);
        for (u64 tt = 0; tt < o; ++tt) power_class_of[k][tt] = cd.power_class(k, tt);
    }
    std::vector<std::vector<std::vector<long long>>> counts(
        r, std::vector<std::vector<long long>>(r));
    parallel_for(r, [&](std::size_t kk) {
        unsigned k = static_cast<unsigned>(kk);
        u64 o = cd.orders[k];
        u64 theta = powmod(primitive_root, (ell - 1) / o, ell);
        u64 theta_inv = inv_mod(theta, ell);
        u64 o_inv = inv_mod(o % ell, ell);
        std::vector<u64> inv_pow(o);
        inv_pow[0] = 1;
        for (u64 j = 1; j < o; ++j) inv_pow[j] = mulmod(inv_pow[j - 1], theta_inv, ell);
        for (unsigned c = 0; c < r; ++c) {
            std::vector<long long> m(o, 0);
            long long total = 0;
            for (u64 j = 0; j < o; ++j) {
                u64 acc = 0;
                for (u64 tt = 0; tt < o; ++tt) {
                    u64 x = xmod[c][power_class_of[k][tt]];
                    acc = (acc + mulmod(x, inv_pow[(j * tt) % o], ell)) % ell;
                }
                acc = mulmod(acc, o_inv, ell);
                internal_check(acc <= degrees[c], "value lift: multiplicity exceeds the degree");
                m[j] = static_cast<long long>(acc);
                total += m[j];
            }
            internal_check(total == static_cast<long long>(degrees[c]),
                           "value lift: multiplicities do not sum to the degree");
            counts[c][k] = std::move(m);
        }
    });

    // canonical cyclotomic values
    std::vector<std::vector<cyclo::Cyc>> values(r, std::vector<cyclo::Cyc>(r));
    for (unsigned c = 0; c < r; ++c)
        for (unsigned k = 0; k < r; ++k)
            values[c][k] = cyclo::cyc_from_root_counts(cd.orders[k], counts[c][k]);

    // canonical row order: trivial character first, then degree, then values
    std::vector<unsigned> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    auto is_trivial_row = [&](unsigned c) {
        if (degrees[c] != 1) return false;
        for (unsigned k = 0; k < r; ++k) {
            auto v = cyclo::cyc_as_int(values[c][k]);
            if (!v || *v != 1) return false;
        }
        return true;
    };
    std::sort(perm.begin(), perm.end(), [&](unsigned a, unsigned b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        bool ta = is_trivial_row(a), tb = is_trivial_row(b);
        if (ta != tb) return ta;
        for (unsigned k = 0; k < r; ++k) {
            int c = cyclo::cyc_cmp(values[a][k], values[b][k]);
            if (c != 0) return c < 0;
        }
        internal_check(a == b, "character table: duplicate rows");
        return false;
    });
    t.degrees.resize(r);
    t.values.resize(r);
    t.root_counts.resize(r);
    for (unsigned c = 0; c < r; ++c) {
        t.degrees[c] = degrees[perm[c]];
        t.values[c] = std::move(values[perm[c]]);
        t.root_counts[c] = std::move(counts[perm[c]]);
    }
    internal_check(t.degrees[0] == 1 && std::all_of(t.values[0].begin(), t.values[0].end(),
                                                    [](const cyclo::Cyc& v) {
                                                        auto x = cyclo::cyc_as_int(v);
                                                        return x && *x == 1;
                                                    }),
                   "character table: trivial row not first");

    // first column must equal the degrees
    for (unsigned c = 0; c < r; ++c) {
        auto v = cyclo::cyc_as_int(t.values[c][0]);
        internal_check(v && *v == static_cast<long long>(t.degrees[c]),
                       "character table: identity column mismatch");
    }

    // exact row orthogonality
    for (unsigned a = 0; a < r; ++a)
        for (unsigned b = a; b < r; ++b) {
            auto ip = row_inner_product(t, a, b);
            auto expect = cyclo::cyc_int(a == b ? static_cast<long long>(n) : 0);
            internal_check(cyclo::cyc_equal(ip, expect),
                           "character table: row orthogonality failure");
        }

    return t;
}

cyclo::Cyc row_inner_product(const CharacterTable& t, unsigned chi, unsigned psi) {
    const ClassData& cd = *t.classes;
    unsigned r = cd.num_classes();
    require(chi < r && psi < r, "row_inner_product: index out of range");
    u64 n_cond = t.exponent;
    // accumulate the products per element order; conj(psi) flips exponents
    std::map<u64, std::vector<long long>> per_order;
    for (unsigned k = 0; k < r; ++k) {
        u64 o = cd.orders[k];
        auto& conv = per_order.try_emplace(o, std::vector<long long>(o, 0)).first->second;
        const auto& a = t.root_counts[chi][k];
        const auto& b = t.root_counts[psi][k];
        long long w = static_cast<long long>(cd.sizes[k]);
        for (u64 i = 0; i < o; ++i) {
            if (a[i] == 0) continue;
            for (u64 j = 0; j < o; ++j) {
                if (b[j] == 0) continue;
                u64 c = (i + o - j) % o;
                conv[c] += w * a[i] * b[j];
            }
        }
    }
    std::vector<std::pair<u64, long long>> terms;
    for (auto& [o, conv] : per_order) {
        u64 step = n_cond / o;
        for (u64 c = 0; c < o; ++c)
            if (conv[c] != 0) terms.emplace_back(c * step, conv[c]);
    }
    return cyclo::Cyc{n_cond, cyclo::cyc_reduce_sparse(n_cond, terms)};
}

std::vector<u64> degree_set(const CharacterTable& t) {
    std::vector<u64> s = t.degrees;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace blockdeg::chartable
