#include "blockdeg/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::partitions {

Partition::Partition(std::vector<u64> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "partition parts must be positive");
        if (i > 0) require(parts[i - 1] >= parts[i], "partition parts must be weakly decreasing");
    }
}

u64 Partition::size() const { return std::accumulate(parts.begin(), parts.end(), u64{0}); }

Partition parse_partition(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "()" || t == "[]") return Partition{};
    if (t.front() == '(' || t.front() == '[') t = t.substr(1, t.size() - 2);
    std::vector<u64> parts;
    std::istringstream in(t);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        require(!tok.empty(), "partition: empty component");
        parts.push_back(std::stoull(tok));
    }
    return Partition(std::move(parts));
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) os << ",";
        os << p.parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(u64 n) {
    std::vector<Partition> out;
    std::vector<u64> cur;
    auto rec = [&](auto&& self, u64 rest, u64 maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(Partition{std::vector<u64>(cur)});
            return;
        }
        for (u64 k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<u64> hook_lengths(const Partition& p) {
    std::vector<u64> out;
    std::size_t rows = p.parts.size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (u64 j = 0; j < p.parts[i]; ++j) {
            u64 arm = p.parts[i] - j - 1;
            u64 leg = 0;
            for (std::size_t k = i + 1; k < rows; ++k)
                if (p.parts[k] > j) ++leg;
            out.push_back(arm + leg + 1);
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<u64> beta_set(const Partition& p, u64 beads) {
    require(beads >= p.parts.size(), "beta_set: need at least one bead per part");
    std::vector<u64> beta;
    for (u64 i = 0; i < beads; ++i) {
        u64 part = i < p.parts.size() ? p.parts[i] : 0;
        beta.push_back(part + (beads - 1 - i));
    }
    std::sort(beta.begin(), beta.end());
    return beta;
}

Partition partition_from_beta(std::vector<u64> beta) {
    std::sort(beta.begin(), beta.end());
    std::vector<u64> parts;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        u64 part = beta[i] - i;
        if (part > 0) parts.push_back(part);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

Partition e_core(const Partition& p, u64 e) {
    require(e >= 1, "e_core: e >= 1");
    u64 beads = std::max<u64>(p.parts.size(), e); // any count works; bead slides are runner-local
    auto beta = beta_set(p, beads);
    // slide every bead on its runner down as far as possible
    std::vector<std::vector<u64>> runners(e);
    for (u64 b : beta) runners[b % e].push_back(b);
    std::vector<u64> slid;
    for (u64 r = 0; r < e; ++r)
        for (std::size_t i = 0; i < runners[r].size(); ++i) slid.push_back(r + e * i);
    return partition_from_beta(std::move(slid));
}

u64 e_weight(const Partition& p, u64 e) {
    u64 diff = p.size() - e_core(p, e).size();
    internal_check(diff % e == 0, "e_weight: size difference not divisible by e");
    return diff / e;
}

BlockParamsA block_params_A(u64 n, u64 q, u64 p, int epsilon) {
    require(numtheory::is_prime(p), "block_params_A: p must be prime");
    require(q % p != 0, "block_params_A: p must not divide q");
    require(epsilon == 1 || epsilon == -1, "block_params_A: epsilon must be +-1");
    u64 base = epsilon == 1 ? q % p : (p - q % p) % p;
    u64 e = p == 2 ? 1 : numtheory::multiplicative_order(base, p);
    return BlockParamsA{e, n % e};
}

bool in_principal_block_A(const Partition& p, const BlockParamsA& bp) {
    Partition core = e_core(p, bp.e);
    if (bp.r == 0) return core.parts.empty();
    return core.parts.size() == 1 && core.parts[0] == bp.r;
}

namespace {

mpz_class pow_int(const mpz_class& b, u64 e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

} // namespace

mpz_class unipotent_degree_A(const Partition& p, u64 q, int epsilon) {
    require(q >= 2, "unipotent_degree_A: q >= 2");
    require(epsilon == 1 || epsilon == -1, "unipotent_degree_A: epsilon must be +-1");
    u64 n = p.size();
    if (n == 0) return 1;
    mpz_class x = epsilon == 1 ? mpz_class(static_cast<unsigned long>(q))
                               : mpz_class(-static_cast<long>(q));
    u64 nlam = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) nlam += i * p.parts[i];
    mpz_class num = pow_int(x, nlam);
    for (u64 i = 1; i <= n; ++i) num *= pow_int(x, i) - 1;
    mpz_class den = 1;
    for (u64 h : hook_lengths(p)) den *= pow_int(x, h) - 1;
    mpz_class deg, rem;
    mpz_tdiv_qr(deg.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    internal_check(rem == 0, "unipotent_degree_A: non-exact hook quotient");
    internal_check(deg != 0, "unipotent_degree_A: vanishing degree");
    return abs(deg);
}

SymbolC::SymbolC(std::vector<u64> t, std::vector<u64> b) : top(std::move(t)), bottom(std::move(b)) {
    for (std::size_t i = 1; i < top.size(); ++i)
        require(top[i - 1] < top[i], "symbol rows must be strictly increasing");
    for (std::size_t i = 1; i < bottom.size(); ++i)
        require(bottom[i - 1] < bottom[i], "symbol rows must be strictly increasing");
}

unsigned SymbolC::defect() const {
    auto a = top.size(), b = bottom.size();
    return static_cast<unsigned>(a > b ? a - b : b - a);
}

u64 SymbolC::rank() const {
    u64 sum = 0;
    for (u64 v : top) sum += v;
    for (u64 v : bottom) sum += v;
    u64 ab = top.size() + bottom.size();
    u64 corr = (ab >= 1) ? ((ab - 1) * (ab - 1)) / 4 : 0;
    internal_check(sum >= corr, "symbol rank underflow");
    return sum - corr;
}

SymbolC SymbolC::reduced() const {
    std::vector<u64> t = top, b = bottom;
    while (!t.empty() && !b.empty() && t.front() == 0 && b.front() == 0) {
        t.erase(t.begin());
        b.erase(b.begin());
        for (auto& v : t) --v;
        for (auto& v : b) --v;
    }
    return SymbolC(std::move(t), std::move(b));
}

mpz_class unipotent_degree_C(const SymbolC& s, u64 n, u64 q) {
    require(q >= 2, "unipotent_degree_C: q >= 2");
    require(s.defect() == 1, "unipotent_degree_C: only defect-1 symbols are supported");
    require(s.rank() == n, "unipotent_degree_C: symbol rank does not match n");
    const auto& S = s.top;
    const auto& T = s.bottom;
    mpz_class Q = static_cast<unsigned long>(q);
    u64 ab = S.size() + T.size();
    u64 m = (ab - 1) / 2;

    mpz_class num = 1;
    for (u64 i = 1; i <= n; ++i) num *= pow_int(Q, 2 * i) - 1;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) num *= pow_int(Q, S[j]) - pow_int(Q, S[i]);
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = i + 1; j < T.size(); ++j) num *= pow_int(Q, T[j]) - pow_int(Q, T[i]);
    for (u64 a : S)
        for (u64 b : T) num *= pow_int(Q, a) + pow_int(Q, b);

    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(m));
    u64 delta = 0;
    for (u64 i = 1; i <= m; ++i) delta += (2 * i - 1) * (2 * i - 2) / 2; // C(2i-1, 2)
    den *= pow_int(Q, delta);
    for (u64 a : S)
        for (u64 k = 1; k <= a; ++k) den *= pow_int(Q, 2 * k) - 1;
    for (u64 b : T)
        for (u64 k = 1; k <= b; ++k) den *= pow_int(Q, 2 * k) - 1;

    mpz_class deg, rem;
    mpz_tdiv_qr(deg.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    internal_check(rem == 0, "unipotent_degree_C: non-integral symbol degree");
    internal_check(deg > 0, "unipotent_degree_C: nonpositive symbol degree");
    return deg;
}

} // namespace blockdeg::partitions
