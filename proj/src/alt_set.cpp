#include "stableset/alt_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stableset {

namespace {
std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

AltSet::AltSet(std::size_t n) : n_(n), words_(word_count(n), 0) {}

AltSet::AltSet(std::size_t n, std::initializer_list<AltId> members) : AltSet(n) {
    for (AltId x : members) {
        if (x >= n) {
            throw std::out_of_range("alternative index out of range");
        }
        set(x);
    }
}

AltSet AltSet::full(std::size_t n) {
    AltSet s(n);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

AltSet AltSet::from_mask(std::size_t n, std::uint64_t mask) {
    AltSet s(n);
    if (!s.words_.empty()) {
        s.words_[0] = mask;
        s.trim();
    }
    return s;
}

AltSet AltSet::single(std::size_t n, AltId x) {
    AltSet s(n);
    s.set(x);
    return s;
}

void AltSet::trim() {
    const std::size_t tail = n_ & 63;
    if (tail != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
}

std::size_t AltSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool AltSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool AltSet::is_subset_of(const AltSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool AltSet::intersects(const AltSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

AltSet& AltSet::operator|=(const AltSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

AltSet& AltSet::operator&=(const AltSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

AltSet& AltSet::operator-=(const AltSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

AltSet AltSet::complement() const {
    AltSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
}

AltId AltSet::next(AltId from) const {
    if (from >= n_) return n_;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return n_;
        bits = words_[w];
    }
}

std::vector<AltId> AltSet::members() const {
    std::vector<AltId> out;
    out.reserve(count());
    for_each([&](AltId x) { out.push_back(x); });
    return out;
}

bool AltSet::operator<(const AltSet& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    }
    return false;
}

std::string AltSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](AltId x) {
        if (!first) os << ',';
        os << x;
        first = false;
    });
    os << '}';
    return os.str();
}

}  // namespace stableset
