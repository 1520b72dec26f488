#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sublat {

/// Fixed-capacity bitset over element indices, sized to its group's order.
///
/// Two member sets of the same group compare with a stable total order:
/// the set containing the smallest differing element sorts first. This is
/// the tie-break used for the canonical lattice ordering.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool operator==(const Bits& o) const { return words_ == o.words_; }

    bool contains(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

    Bits operator&(const Bits& o) const {
        Bits r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    /// True when the lowest element in the symmetric difference lies in *this.
    bool lex_less(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff != 0) {
                std::uint64_t low = diff & (~diff + 1);
                return (words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace sublat
