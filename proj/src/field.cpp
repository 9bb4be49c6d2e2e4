#include "quower/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quower {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^k with p prime, or false
bool factor_prime_power(uint32_t q, int& p, int& k) {
    if (q < 2) return false;
    for (uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = static_cast<int>(d);
            k = 0;
            while (q > 1) {
                if (q % d != 0) return false;
                q /= d;
                ++k;
            }
            return true;
        }
    }
    p = static_cast<int>(q);  // q itself prime
    k = 1;
    return true;
}

// Polynomial helpers over Z_p, coefficients constant-term first.
using Poly = std::vector<int>;

// a mod m, m monic
Poly pol_mod(Poly a, const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int& t = a[i - dm + j];
            t = (t - c * m[j]) % p;
            if (t < 0) t += p;
        }
    }
    a.resize(dm);
    return a;
}

Poly pol_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return pol_mod(std::move(r), m, p);
}

bool all_zero(const Poly& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// Enumerates monic polynomials of degree d in the order used for the modulus
// search: lower-degree coefficients are more significant. `tail` holds the
// non-leading coefficients. Returns false when the odometer wraps.
bool next_tail(Poly& tail, int p) {
    for (int i = static_cast<int>(tail.size()) - 1; i >= 0; --i) {
        if (++tail[i] < p) return true;
        tail[i] = 0;
    }
    return false;
}

bool is_irreducible(const Poly& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        Poly tail(d, 0);
        do {
            Poly div = tail;
            div.push_back(1);
            if (all_zero(pol_mod(m, div, p))) return false;
        } while (next_tail(tail, p));
    }
    return true;
}

}  // namespace

std::vector<int> FieldSpec::digits(uint32_t r) const {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = static_cast<int>(r % p);
        r /= p;
    }
    return d;
}

uint32_t FieldSpec::rank(const std::vector<int>& d) const {
    uint32_t r = 0;
    for (int i = k - 1; i >= 0; --i) r = r * p + static_cast<uint32_t>(d[i]);
    return r;
}

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
    if (k == 1) return (a * b) % q;
    Poly pa = digits(a), pb = digits(b);
    Poly r = pol_mul_mod(pa, pb, modulus, p);
    return rank(r);
}

void FieldSpec::build() {
    neg_tab_.resize(q);
    add_tab_.resize(static_cast<size_t>(q) * q);
    mul_tab_.resize(static_cast<size_t>(q) * q);
    for (uint32_t a = 0; a < q; ++a) {
        std::vector<int> da = digits(a), dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        neg_tab_[a] = rank(dn);
        for (uint32_t b = 0; b < q; ++b) {
            std::vector<int> db = digits(b), ds(k);
            for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
            add_tab_[a * q + b] = rank(ds);
            mul_tab_[a * q + b] = mul_slow(a, b);
        }
    }

    // First element of order q-1, scanning coefficient tuples (c_0,...,c_{k-1})
    // lexicographically with c_0 most significant. The scan index of rank r is
    // its digit string reversed.
    gen = 0;
    std::vector<uint32_t> order(q);
    for (uint32_t r = 0; r < q; ++r) {
        std::vector<int> d = digits(r);
        uint32_t idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * p + static_cast<uint32_t>(d[i]);
        order[idx] = r;
    }
    for (uint32_t i = 0; i < q && gen == 0; ++i) {
        uint32_t r = order[i];
        if (r == 0) continue;
        uint32_t x = r, ord = 1;
        while (x != 1) {
            x = mul(x, r);
            ++ord;
        }
        if (ord == q - 1) gen = r;
    }

    pow_tab_.resize(q - 1);
    log_tab_.assign(q, -1);
    uint32_t x = 1;
    for (uint32_t e = 0; e < q - 1; ++e) {
        pow_tab_[e] = x;
        log_tab_[x] = static_cast<int32_t>(e);
        x = mul(x, gen);
    }

    inv_tab_.resize(q);
    inv_tab_[0] = 0;  // unused
    for (uint32_t a = 1; a < q; ++a)
        inv_tab_[a] = pow_tab_[(q - 1 - dlog(a)) % (q - 1)];
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    return inv_tab_[a];
}

uint32_t FieldSpec::pow(uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("field inverse of zero");
        return e == 0 ? 1u : 0u;
    }
    long long m = q - 1;
    long long r = e % m;
    if (r < 0) r += m;
    return pow_tab_[(static_cast<uint64_t>(dlog(a)) * r) % m];
}

uint32_t FieldSpec::dlog(uint32_t a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    return static_cast<uint32_t>(log_tab_[a]);
}

bool FieldSpec::is_generator(uint32_t g) const {
    if (g == 0) return false;
    return std::gcd(dlog(g), q - 1) == 1;
}

uint32_t FieldSpec::dlog(uint32_t g, uint32_t a) const {
    if (!is_generator(g)) throw std::invalid_argument("dlog base is not a generator");
    if (a == 0) throw std::domain_error("dlog of zero");
    // a = g^e and g = gen^s with gcd(s, q-1) = 1, so e = log(a) * s^-1 mod q-1.
    uint64_t s = dlog(g), la = dlog(a), m = q - 1;
    uint64_t sinv = 1, base = s % m;
    // s^(phi(m)-1) would need phi; use extended Euclid instead.
    long long t0 = 0, t1 = 1, r0 = static_cast<long long>(m), r1 = static_cast<long long>(base);
    while (r1 != 0) {
        long long qt = r0 / r1;
        long long r2 = r0 - qt * r1, t2 = t0 - qt * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    long long ti = t0 % static_cast<long long>(m);
    if (ti < 0) ti += static_cast<long long>(m);
    sinv = static_cast<uint64_t>(ti);
    return static_cast<uint32_t>((la * sinv) % m);
}

Field field(uint32_t q) {
    static std::mutex mu;
    static std::map<uint32_t, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;

    int p = 0, k = 0;
    if (!factor_prime_power(q, p, k) || !is_prime(static_cast<uint32_t>(p)))
        throw std::domain_error("q = " + std::to_string(q) + " is not a prime power");
    if (q > 1024) throw std::domain_error("field size above 1024 not supported");

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    spec->q = q;
    if (k == 1) {
        spec->modulus = {0, 1};
    } else {
        Poly tail(k, 0);
        for (;;) {
            Poly m = tail;
            m.push_back(1);
            if (is_irreducible(m, p)) {
                spec->modulus = m;
                break;
            }
            if (!next_tail(tail, p))
                throw std::runtime_error("no irreducible modulus found");
        }
    }
    spec->build();
    cache[q] = spec;
    return spec;
}

namespace {
void check_same(FieldElement a, FieldElement b) {
    if (a.f == nullptr || a.f != b.f)
        throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.f, a.f->add(a.v, b.v)};
}
FieldElement mul(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.f, a.f->mul(a.v, b.v)};
}
FieldElement neg(FieldElement a) { return {a.f, a.f->neg(a.v)}; }
FieldElement inv(FieldElement a) { return {a.f, a.f->inv(a.v)}; }
FieldElement pow(FieldElement a, long long e) { return {a.f, a.f->pow(a.v, e)}; }
FieldElement generator(const Field& f) { return {f.get(), f->gen}; }
uint32_t dlog(const Field& f, FieldElement g, FieldElement a) {
    if (g.f != f.get() || a.f != f.get())
        throw std::invalid_argument("field elements from different fields");
    return f->dlog(g.v, a.v);
}

}  // namespace quower
