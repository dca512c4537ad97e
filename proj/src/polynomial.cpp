#include "polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace greend4::poly {

namespace {

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_monic(RatPoly& p) {
    trim(p);
    if (p.empty()) return;
    const Rat lead = p.back();
    for (auto& c : p) c /= lead;
}

// Remainder of a by b (b nonzero, trimmed).
RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const IntPoly& f, u64 p) {
    ModPoly out(f.size());
    const Integer mod(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer r = f[i] % mod;
        if (r < 0) r += mod;
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

ModPoly mod_remainder(ModPoly a, const ModPoly& b, u64 p) {
    const u64 inv_lead = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
        const u64 factor = mulmod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
        trim(a);
    }
    return a;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = mod_remainder(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

Integer eval(const IntPoly& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& mod) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = (acc * x + *it) % mod;
    }
    if (acc < 0) acc += mod;
    return acc;
}

}  // namespace

RatPoly charpoly(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix h = m;
    // reduce to upper Hessenberg form by similarity
    for (std::size_t col = 0; col + 2 < n; ++col) {
        const std::size_t sub = col + 1;
        std::size_t piv = n;
        for (std::size_t i = sub; i < n; ++i)
            if (sgn(h(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != sub) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(sub, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, sub));
        }
        for (std::size_t j = sub + 1; j < n; ++j) {
            if (sgn(h(j, col)) == 0) continue;
            const Rat u = h(j, col) / h(sub, col);
            for (std::size_t k = 0; k < n; ++k) h(j, k) -= u * h(sub, k);
            for (std::size_t k = 0; k < n; ++k) h(k, sub) += u * h(k, j);
        }
    }
    // p_k is the characteristic polynomial of the leading k×k block
    std::vector<RatPoly> p(n + 1);
    p[0] = {Rat(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t mm = k - 1;  // 0-based index of the new row/column
        RatPoly next(k + 1);
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            next[i + 1] += p[k - 1][i];
            next[i] -= h(mm, mm) * p[k - 1][i];
        }
        Rat t = 1;
        for (std::size_t i = 1; i <= mm; ++i) {
            t *= h(mm - i + 1, mm - i);
            if (sgn(t) == 0) break;
            const Rat coeff = t * h(mm - i, mm);
            for (std::size_t j = 0; j < p[mm - i].size(); ++j) next[j] -= coeff * p[mm - i][j];
        }
        p[k] = std::move(next);
    }
    return p[n];
}

RatPoly derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    trim(d);
    return d;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = remainder(a, b);
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

RatPoly exact_div(const RatPoly& num, const RatPoly& den) {
    RatPoly a = num;
    trim(a);
    RatPoly b = den;
    trim(b);
    if (b.empty()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.size() < b.size()) {
        if (a.empty()) return {};
        throw std::domain_error("exact_div: nonzero remainder");
    }
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        const Rat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

RatPoly squarefree_part(const RatPoly& p) {
    RatPoly g = gcd(p, derivative(p));
    RatPoly s = exact_div(p, g.empty() ? RatPoly{Rat(1)} : g);
    make_monic(s);
    return s;
}

std::vector<Integer> integer_roots(const IntPoly& input) {
    IntPoly f = input;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() <= 1) return {};
    if (f.back() != 1) throw std::invalid_argument("integer_roots: polynomial must be monic");

    std::vector<Integer> roots;
    if (f.front() == 0) {
        roots.push_back(0);
        f.erase(f.begin());
        if (f.size() <= 1) return roots;
    }

    // every integer root divides the constant term, so |root| <= |f(0)|
    const Integer bound = abs(f.front());

    IntPoly df(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);

    // a prime where f stays squarefree
    u64 p = 0;
    Integer candidate = 10007;
    for (int tries = 0; tries < 200; ++tries) {
        const u64 q = candidate.get_ui();
        const ModPoly fm = reduce(f, q);
        const ModPoly dm = reduce(df, q);
        if (fm.size() == f.size() && !dm.empty() && mod_gcd_degree(fm, dm, q) == 0) {
            p = q;
            break;
        }
        mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    }
    if (p == 0) throw std::runtime_error("integer_roots: no good prime found");

    const ModPoly fm = reduce(f, p);
    std::vector<u64> residues;
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (auto it = fm.rbegin(); it != fm.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
        if (acc == 0) residues.push_back(x);
    }

    const Integer target = 2 * bound + 1;
    for (u64 r0 : residues) {
        Integer modulus(static_cast<unsigned long>(p));
        Integer r(static_cast<unsigned long>(r0));
        while (modulus <= target) {
            const Integer next_mod = modulus * modulus;
            const Integer fv = eval_mod(f, r, next_mod);
            Integer dv = eval_mod(df, r, next_mod);
            Integer inv;
            if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), next_mod.get_mpz_t()) == 0) break;
            r = (r - fv * inv) % next_mod;
            if (r < 0) r += next_mod;
            modulus = next_mod;
        }
        Integer sym = r;
        if (sym > modulus / 2) sym -= modulus;
        if (abs(sym) <= bound && eval(f, sym) == 0) roots.push_back(sym);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rat> rational_eigenvalues(const RatMatrix& m) {
    // scale to an integer matrix: its rational eigenvalues are integers
    Integer scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    RatMatrix scaled = m * Rat(scale);
    const RatPoly sqf = squarefree_part(charpoly(scaled));
    IntPoly f;
    f.reserve(sqf.size());
    for (const auto& c : sqf) {
        if (c.get_den() != 1) throw std::logic_error("rational_eigenvalues: squarefree part is not integral");
        f.push_back(c.get_num());
    }
    std::vector<Rat> out;
    for (const auto& r : integer_roots(f)) {
        Rat q(r, scale);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

}  // namespace greend4::poly
