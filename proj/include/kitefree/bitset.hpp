#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kitefree {

// Set of vertex ids over a host graph with vertices 0..n-1.
// Backed by 64-bit words; all binary operations require equal host sizes.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int host_size) : n_(host_size), w_((host_size + 63) / 64, 0) {}

    static VertexSet of(int host_size, std::initializer_list<int> vs)
    {
        VertexSet s(host_size);
        for (int v : vs)
            s.set(v);
        return s;
    }

    int host_size() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int count() const
    {
        int c = 0;
        for (uint64_t x : w_)
            c += __builtin_popcountll(x);
        return c;
    }

    bool empty() const
    {
        for (uint64_t x : w_)
            if (x)
                return false;
        return true;
    }
    bool any() const { return !empty(); }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // First member, or -1 if empty.
    int first() const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    // First member > v, or -1.
    int next(int v) const
    {
        ++v;
        if (v >= n_)
            return -1;
        size_t i = size_t(v) >> 6;
        uint64_t x = w_[i] & (~uint64_t(0) << (v & 63));
        while (true) {
            if (x)
                return int(i * 64 + __builtin_ctzll(x));
            if (++i >= w_.size())
                return -1;
            x = w_[i];
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v))
            out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace kitefree
