#pragma once

#include <cstdint>
#include <vector>

namespace langfib {

// Fixed extension tower F_p < F_{p^2} < F_{p^4} < F_{p^8} for p in {2, 3}.
// An element is a code in [0, p^8): its base-p digits are the coefficients of
// a polynomial residue mod an irreducible octic found at construction time.
// Addition is digitwise mod p. Multiplication goes through discrete-log tables
// for a generator w of F_{p^8}^x, so every nonzero element is w^k for exactly
// one k. Read-only after construction; safe to share across threads.
class BigField {
public:
    explicit BigField(int prime);

    int prime() const { return p_; }
    std::uint32_t size() const { return size_; }              // p^8
    std::uint32_t unit_order() const { return size_ - 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;                 // a != 0
    std::uint32_t pow(std::uint32_t a, long long e) const;    // 0^0 = 1
    std::uint32_t frobenius(std::uint32_t a, int e = 1) const;  // a^(p^e)

    // Discrete log base w, defined for a != 0.
    std::uint32_t dlog(std::uint32_t a) const;
    std::uint32_t from_dlog(std::uint64_t k) const;

    // Subfield F_{p^d} for d | 8: the fixed points of frobenius(., d).
    bool in_subfield(std::uint32_t a, int d) const;
    std::uint32_t subfield_order(int d) const;                // p^d
    std::uint32_t subfield_generator(int d) const;            // generates F_{p^d}^x
    std::vector<std::uint32_t> subfield_elements(int d) const;  // 0 first, then powers

private:
    int p_;
    std::uint32_t size_;
    std::vector<std::uint32_t> exp_;  // exp_[k] = w^k for k < 2(size-1), spares a mod
    std::vector<std::uint32_t> log_;
};

// View of one rung F_q = F_{p^k} of a shared tower, q = p^k, k | 8.
struct FqField {
    const BigField* tower;
    int p;
    int k;
    std::uint32_t q;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return tower->add(a, b); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return tower->sub(a, b); }
    std::uint32_t neg(std::uint32_t a) const { return tower->neg(a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tower->mul(a, b); }
    std::uint32_t inv(std::uint32_t a) const { return tower->inv(a); }
    std::uint32_t pow(std::uint32_t a, long long e) const { return tower->pow(a, e); }
    bool contains(std::uint32_t a) const { return tower->in_subfield(a, k); }
    std::uint32_t generator() const { return tower->subfield_generator(k); }
    std::vector<std::uint32_t> elements() const { return tower->subfield_elements(k); }
    // Index j with a = generator()^j; a must be a unit of this subfield.
    std::uint32_t unit_index(std::uint32_t a) const;
};

FqField subfield_view(const BigField& tower, int degree);

// Process-wide tower per characteristic, built on first use.
const BigField& tower_for_prime(int prime);

}
