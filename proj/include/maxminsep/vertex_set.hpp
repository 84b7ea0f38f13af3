#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace maxminsep {

using Vertex = int;

/// Set of vertex ids backed by a word bitset. Iteration is in ascending id
/// order, so the set behaves like a sorted container. High zero words are
/// always trimmed, which keeps equality and ordering independent of the
/// capacity a set was built with.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const std::vector<std::uint64_t>* words, std::size_t word, std::uint64_t rest)
            : words_(words), word_(word), rest_(rest) {
            settle();
        }

        Vertex operator*() const {
            return static_cast<Vertex>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(rest_)));
        }
        const_iterator& operator++() {
            rest_ &= rest_ - 1;
            settle();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& o) const { return word_ == o.word_ && rest_ == o.rest_; }

    private:
        void settle() {
            while (rest_ == 0 && words_ != nullptr && word_ + 1 < words_->size()) {
                ++word_;
                rest_ = (*words_)[word_];
            }
            if (rest_ == 0 && words_ != nullptr) word_ = words_->size();
        }

        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t word_ = 0;
        std::uint64_t rest_ = 0;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }
    template <typename It>
    VertexSet(It first, It last) {
        for (; first != last; ++first) insert(*first);
    }

    /// {0, 1, ..., n-1}
    static VertexSet range(int n);
    static VertexSet from(const std::vector<Vertex>& vs) { return VertexSet(vs.begin(), vs.end()); }

    bool contains(Vertex v) const {
        const auto w = static_cast<std::size_t>(v) / 64;
        return v >= 0 && w < words_.size() && ((words_[w] >> (static_cast<unsigned>(v) % 64)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);
    void clear() { words_.clear(); }

    std::size_t size() const;
    bool empty() const { return words_.empty(); }
    /// Smallest member; undefined on an empty set.
    Vertex front() const { return *begin(); }
    /// Largest member plus one, or 0 for the empty set.
    int bound() const;

    const_iterator begin() const {
        if (words_.empty()) return end();
        return const_iterator(&words_, 0, words_[0]);
    }
    const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet with(Vertex v) const {
        auto c = *this;
        c.insert(v);
        return c;
    }
    VertexSet without(Vertex v) const {
        auto c = *this;
        c.erase(v);
        return c;
    }

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }
    /// Members rendered 1-indexed, e.g. "{1,3,4}".
    std::string to_string() const;

    bool operator==(const VertexSet& o) const = default;
    /// Lexicographic order of the sorted member lists.
    std::strong_ordering operator<=>(const VertexSet& o) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

}  // namespace maxminsep
