#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace absaf {

/// Fixed-universe bitset over dense indices 0..size()-1, stored in 64-bit words.
/// Used for argument sets and voter groups alike.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe);
    Bitset(std::size_t universe, std::initializer_list<std::size_t> members);

    static Bitset full(std::size_t universe);

    std::size_t universe() const { return universe_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear();

    std::size_t count() const;
    bool empty() const;

    bool is_subset_of(const Bitset& other) const;
    bool intersects(const Bitset& other) const;
    std::size_t intersection_count(const Bitset& other) const;

    Bitset& operator|=(const Bitset& other);
    Bitset& operator&=(const Bitset& other);
    /// Set difference.
    Bitset& operator-=(const Bitset& other);

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& other) const = default;

    /// Members in ascending order.
    std::vector<std::size_t> members() const;

    /// Index of the first member >= from, or universe() if none.
    std::size_t next(std::size_t from) const;

    std::size_t hash() const;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order over ascending member sequences; a proper prefix sorts first.
bool canonical_less(const Bitset& a, const Bitset& b);

}  // namespace absaf
