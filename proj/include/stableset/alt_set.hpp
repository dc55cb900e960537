#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace stableset {

using AltId = std::size_t;

/// Subset of the alternatives {0, ..., n-1}, stored as a dense bitset.
///
/// Two sets compare equal only when they share the same universe size.
/// The ordering operator compares by the binary value of the membership
/// mask (alternative 0 is the least significant bit), which is the order
/// in which brute-force enumeration visits subsets.
class AltSet {
public:
    AltSet() = default;
    explicit AltSet(std::size_t n);
    AltSet(std::size_t n, std::initializer_list<AltId> members);

    static AltSet full(std::size_t n);
    static AltSet from_mask(std::size_t n, std::uint64_t mask);
    static AltSet single(std::size_t n, AltId x);

    std::size_t universe() const { return n_; }

    bool test(AltId x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    bool contains(AltId x) const { return x < n_ && test(x); }
    void set(AltId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void reset(AltId x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
    void assign(AltId x, bool value) { value ? set(x) : reset(x); }

    std::size_t count() const;
    bool empty() const;
    bool any() const { return !empty(); }

    bool is_subset_of(const AltSet& other) const;
    bool intersects(const AltSet& other) const;

    AltSet& operator|=(const AltSet& other);
    AltSet& operator&=(const AltSet& other);
    /// Set difference.
    AltSet& operator-=(const AltSet& other);

    friend AltSet operator|(AltSet a, const AltSet& b) { return a |= b; }
    friend AltSet operator&(AltSet a, const AltSet& b) { return a &= b; }
    friend AltSet operator-(AltSet a, const AltSet& b) { return a -= b; }

    AltSet complement() const;

    /// Lowest member at or after `from`, or universe() if none.
    AltId next(AltId from) const;
    AltId first() const { return next(0); }

    std::vector<AltId> members() const;

    /// Mask of the first 64 alternatives; only meaningful when n <= 64.
    std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const AltSet& other) const = default;
    bool operator<(const AltSet& other) const;

    /// "{0,2,5}"
    std::string to_string() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(static_cast<AltId>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

private:
    void trim();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace stableset
