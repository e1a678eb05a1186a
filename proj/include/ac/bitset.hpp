#ifndef AC_BITSET_HPP
#define AC_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace ac {

// Fixed-capacity dynamic bitset over vertex indices. Capacity is set at
// construction and never changes; all binary operations require equal
// capacities.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset full(std::size_t nbits)
    {
        Bitset b(nbits);
        for (auto& w : b.w_)
            w = ~0ULL;
        b.trim();
        return b;
    }

    std::size_t capacity() const { return nbits_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    void clear()
    {
        for (auto& w : w_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : w_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const
    {
        for (auto w : w_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }
    bool empty() const { return !any(); }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }
    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    std::size_t count_and(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
        return c;
    }

    // first set bit, or -1
    int first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    // first set bit strictly after `pos`, or -1
    int next(int pos) const
    {
        std::size_t i = static_cast<std::size_t>(pos + 1);
        if (i >= nbits_)
            return -1;
        std::size_t blk = i >> 6;
        std::uint64_t w = w_[blk] & (~0ULL << (i & 63));
        while (true) {
            if (w)
                return static_cast<int>(blk * 64 + __builtin_ctzll(w));
            if (++blk == w_.size())
                return -1;
            w = w_[blk];
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v))
            out.push_back(v);
        return out;
    }

    static Bitset from_vector(std::size_t nbits, const std::vector<int>& vs)
    {
        Bitset b(nbits);
        for (int v : vs)
            b.set(static_cast<std::size_t>(v));
        return b;
    }

    // Order used for deterministic tie-breaking: a < b iff the smallest
    // element of the symmetric difference belongs to a.
    static bool lex_less(const Bitset& a, const Bitset& b)
    {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t d = a.w_[i] ^ b.w_[i];
            if (d)
                return (a.w_[i] >> __builtin_ctzll(d)) & 1ULL;
        }
        return false;
    }

    // Low 64 bits; valid only when capacity() <= 64.
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

private:
    void trim()
    {
        if (nbits_ & 63)
            w_.back() &= ~0ULL >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_;
    std::vector<std::uint64_t> w_;
};

} // namespace ac

#endif
