#pragma once

#include <cstdint>
#include <vector>

namespace cyclepack {

// Fixed-universe bitset for face sets and cycle sets. Universe size is set at
// construction; all binary operations require equal universes.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int n) : nbits_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
        return r;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Lexicographic by member list; used only for deterministic tie-breaking.
    bool lex_less(const Bitset& o) const {
        for (int i = 0; i < nbits_; ++i) {
            bool a = test(i), b = o.test(i);
            if (a != b) return a; // smaller first element wins
        }
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

  private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace cyclepack
