#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace quower {

// GF(p^k) with all arithmetic on element ranks r = sum c_i p^i,
// where (c_0,...,c_{k-1}) are the coefficients of the residue polynomial,
// constant term first. Rank 0 is the zero element, rank 1 is one.
//
// The modulus is the lexicographically smallest monic irreducible of degree k
// (coefficients compared constant-term first), so the representation is a
// deterministic function of q alone. Likewise the stored generator is the
// first element of multiplicative order q-1 in that same coefficient order.
class FieldSpec {
public:
    int p = 0;
    int k = 0;
    uint32_t q = 0;
    std::vector<int> modulus;  // length k+1, monic; [0,1] for prime fields
    uint32_t gen = 0;

    uint32_t add(uint32_t a, uint32_t b) const { return add_tab_[a * q + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_tab_[a * q + b]; }
    uint32_t neg(uint32_t a) const { return neg_tab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t inv(uint32_t a) const;  // domain_error on a == 0
    uint32_t pow(uint32_t a, long long e) const;

    // g^e for e in [0, q-1); table lookup
    uint32_t gen_pow(uint32_t e) const { return pow_tab_[e]; }
    // e with gen^e == a, for a != 0
    uint32_t dlog(uint32_t a) const;
    // e with g^e == a for an arbitrary generator g (checked)
    uint32_t dlog(uint32_t g, uint32_t a) const;
    bool is_generator(uint32_t g) const;

    std::vector<int> digits(uint32_t r) const;        // length k, constant first
    uint32_t rank(const std::vector<int>& d) const;   // inverse of digits

private:
    friend std::shared_ptr<const FieldSpec> field(uint32_t q);
    void build();
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    std::vector<uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_, pow_tab_;
    std::vector<int32_t> log_tab_;
};

using Field = std::shared_ptr<const FieldSpec>;

// Builds (and caches) the field with q elements.
// Throws std::domain_error if q is not a prime power >= 2.
Field field(uint32_t q);

// Convenience value type for callers that want checked arithmetic.
struct FieldElement {
    const FieldSpec* f = nullptr;
    uint32_t v = 0;

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.f == b.f && a.v == b.v;
    }
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, long long e);
FieldElement generator(const Field& f);
uint32_t dlog(const Field& f, FieldElement g, FieldElement a);

}  // namespace quower
