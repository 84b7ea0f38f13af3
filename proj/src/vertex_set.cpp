#include "maxminsep/vertex_set.hpp"

#include <algorithm>

namespace maxminsep {

VertexSet VertexSet::range(int n) {
    VertexSet s;
    if (n <= 0) return s;
    const auto n_words = (static_cast<std::size_t>(n) + 63) / 64;
    s.words_.assign(n_words, ~std::uint64_t{0});
    const auto tail = static_cast<unsigned>(n) % 64;
    if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

void VertexSet::insert(Vertex v) {
    const auto w = static_cast<std::size_t>(v) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
}

void VertexSet::erase(Vertex v) {
    if (!contains(v)) return;
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) % 64));
    trim();
}

std::size_t VertexSet::size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

int VertexSet::bound() const {
    if (words_.empty()) return 0;
    const auto last = words_.back();
    return static_cast<int>((words_.size() - 1) * 64 + static_cast<std::size_t>(64 - std::countl_zero(last)));
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    const auto common = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < common; ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    const auto common = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < common; ++i)
        if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    if (words_.size() > o.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    }
    out += '}';
    return out;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
    auto a = begin();
    auto b = o.begin();
    for (; a != end() && b != o.end(); ++a, ++b) {
        if (*a != *b) return *a <=> *b;
    }
    if (a == end() && b == o.end()) return std::strong_ordering::equal;
    return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

void VertexSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace maxminsep
