#ifndef ESLAB_BITS_HPP
#define ESLAB_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eslab {

// Fixed-universe bitset; the universe size is chosen at construction and all
// binary operations assume both operands share it.
class Bits {
public:
    static constexpr std::size_t npos = ~std::size_t(0);

    Bits() = default;
    explicit Bits(std::size_t universe)
        : n_(universe), w_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    bool operator==(const Bits&) const = default;

    std::size_t find_first() const { return find_from(0); }
    std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

    template <class F>
    void for_each(F f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Lexicographic order on the ascending element sequences of two equal-size
    // sets: the set owning the smallest element of the symmetric difference
    // comes first.
    static bool set_less(const Bits& a, const Bits& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            std::uint64_t d = a.w_[k] ^ b.w_[k];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return a.w_[k] & low;
            }
        }
        return false;
    }

    struct Hash {
        std::size_t operator()(const Bits& b) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : b.w_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

private:
    std::size_t find_from(std::size_t i) const {
        if (i >= n_) return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return k * 64 + std::countr_zero(w);
            if (++k >= w_.size()) return npos;
            w = w_[k];
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace eslab

#endif
