#include "absaf/bitset.hpp"

#include <bit>
#include <functional>

namespace absaf {

Bitset::Bitset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

Bitset::Bitset(std::size_t universe, std::initializer_list<std::size_t> members) : Bitset(universe) {
    for (auto m : members) set(m);
}

Bitset Bitset::full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0) b.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    return b;
}

void Bitset::clear() {
    for (auto& w : words_) w = 0;
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool Bitset::is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
}

Bitset& Bitset::operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<std::size_t> Bitset::members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Bitset::next(std::size_t from) const {
    if (from >= universe_) return universe_;
    std::size_t w = from >> 6;
    auto bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return universe_;
        bits = words_[w];
    }
}

std::size_t Bitset::hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t i = a.next(0);
    std::size_t j = b.next(0);
    while (i < a.universe() && j < b.universe()) {
        if (i != j) return i < j;
        i = a.next(i + 1);
        j = b.next(j + 1);
    }
    return i >= a.universe() && j < b.universe();
}

}  // namespace absaf
