#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace domk {

using Vertex = int;
using Mask = std::uint64_t;

/// Growable bitset of vertex indices. Storage never carries trailing zero
/// words, so equality is structural.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }
    template <class Range>
    static VertexSet of(const Range& r) {
        VertexSet s;
        for (auto v : r) s.insert(static_cast<Vertex>(v));
        return s;
    }
    static VertexSet from_mask(Mask m) {
        VertexSet s;
        if (m) s.words_.push_back(m);
        return s;
    }
    static VertexSet range(Vertex n) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    bool contains(Vertex v) const {
        auto w = static_cast<std::size_t>(v) / 64;
        return v >= 0 && w < words_.size() && ((words_[w] >> (v % 64)) & 1u);
    }
    void insert(Vertex v) {
        auto w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= Mask{1} << (v % 64);
    }
    void erase(Vertex v) {
        auto w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) return;
        words_[w] &= ~(Mask{1} << (v % 64));
        trim();
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (Mask w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const { return words_.empty(); }
    /// Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    /// Members below 64 as a single word.
    Mask low_mask() const { return words_.empty() ? 0 : words_[0]; }
    /// Largest member plus one (0 when empty).
    Vertex bound() const {
        if (words_.empty()) return 0;
        return static_cast<Vertex>((words_.size() - 1) * 64 + 64 - std::countl_zero(words_.back()));
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        trim();
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
        trim();
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Mask other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const std::vector<Mask>* words, std::size_t w) : words_(words), w_(w) { settle(); }
        Vertex operator*() const { return static_cast<Vertex>(w_ * 64 + std::countr_zero(cur_)); }
        iterator& operator++() {
            cur_ &= cur_ - 1;
            if (!cur_) {
                ++w_;
                settle();
            }
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return w_ == o.w_ && cur_ == o.cur_; }

    private:
        void settle() {
            while (w_ < words_->size() && (*words_)[w_] == 0) ++w_;
            cur_ = w_ < words_->size() ? (*words_)[w_] : 0;
        }
        const std::vector<Mask>* words_ = nullptr;
        std::size_t w_ = 0;
        Mask cur_ = 0;
    };
    iterator begin() const { return iterator(&words_, 0); }
    iterator end() const { return iterator(&words_, words_.size()); }

private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }
    std::vector<Mask> words_;
};

/// Iterate the set bits of a single-word mask.
template <class F>
inline void for_each_bit(Mask m, F&& f) {
    while (m) {
        f(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
}

inline Mask bit(Vertex v) { return Mask{1} << v; }

}  // namespace domk
