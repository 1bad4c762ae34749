#pragma once

// Incremental double description kernel over exact integers.
//
// A RayCone holds a polyhedral cone C = L + cone(R) where L is a linear
// subspace (lineality basis) and R the extreme rays of the pointed part,
// together with the inequality rows inserted so far and, per ray, the set of
// rows it is tight on. Every inserted row vanishes on L.

#include "lineup/detail/int_ops.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lineup::detail {

template <class Int>
class RayCone {
public:
    RayCone() = default;

    /// The whole space R^dim.
    explicit RayCone(std::size_t dim) : dim_(dim)
    {
        lineality_.assign(dim * dim, Int(0));
        for (std::size_t i = 0; i < dim; ++i)
            lineality_[i * dim + i] = Int(1);
        nlin_ = dim;
    }

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return nrays_; }
    std::size_t num_rows() const { return nrows_; }
    std::size_t lineality_dim() const { return nlin_; }

    std::span<const Int> ray(std::size_t i) const { return {rays_.data() + i * dim_, dim_}; }
    std::span<const Int> row(std::size_t i) const { return {rows_.data() + i * dim_, dim_}; }
    std::span<const Int> lineality(std::size_t i) const { return {lineality_.data() + i * dim_, dim_}; }

    bool tight(std::size_t ray_index, std::size_t row_index) const
    {
        return (inc_[ray_index * words_ + row_index / 64] >> (row_index % 64)) & 1u;
    }

    /// True when some generator is strictly positive on h (or a lineality
    /// direction is not orthogonal to h). For a full-dimensional cone this is
    /// exactly the condition for C ∩ {h >= 0} to stay full-dimensional.
    bool meets_open_halfspace(std::span<const Int> h) const
    {
        for (std::size_t i = 0; i < nlin_; ++i)
            if (sign_of(dot(h.data(), lineality_.data() + i * dim_, dim_)) != 0)
                return true;
        for (std::size_t i = 0; i < nrays_; ++i)
            if (sign_of(dot(h.data(), rays_.data() + i * dim_, dim_)) > 0)
                return true;
        return false;
    }

    /// True when h >= 0 already holds on the whole cone.
    bool implies(std::span<const Int> h) const
    {
        for (std::size_t i = 0; i < nlin_; ++i)
            if (sign_of(dot(h.data(), lineality_.data() + i * dim_, dim_)) != 0)
                return false;
        for (std::size_t i = 0; i < nrays_; ++i)
            if (sign_of(dot(h.data(), rays_.data() + i * dim_, dim_)) < 0)
                return false;
        return true;
    }

    void add_inequality(std::span<const Int> h)
    {
        const std::size_t k = nrows_;
        rows_.insert(rows_.end(), h.begin(), h.end());
        ++nrows_;
        ensure_words(nrows_);

        if (pivot_lineality(h, k))
            return;

        const std::size_t n = nrays_;
        std::vector<Int> val(n);
        std::vector<std::size_t> pos, zer, neg;
        for (std::size_t i = 0; i < n; ++i) {
            val[i] = dot(h.data(), rays_.data() + i * dim_, dim_);
            int s = sign_of(val[i]);
            (s > 0 ? pos : s == 0 ? zer : neg).push_back(i);
        }
        if (neg.empty()) {
            for (auto i : zer)
                set_bit(i, k);
            return;
        }

        const std::size_t need = dim_ >= nlin_ + 2 ? dim_ - nlin_ - 2 : 0;
        std::vector<Int> new_rays;
        std::vector<std::uint64_t> new_inc;
        std::vector<std::uint64_t> z(words_);
        std::vector<Int> buf(dim_);

        for (auto p : pos) {
            const std::uint64_t* ip = inc_.data() + p * words_;
            for (auto q : neg) {
                const std::uint64_t* iq = inc_.data() + q * words_;
                std::size_t count = 0;
                for (std::size_t w = 0; w < words_; ++w) {
                    z[w] = ip[w] & iq[w];
                    count += std::popcount(z[w]);
                }
                if (count < need)
                    continue;
                if (!adjacent(p, q, z))
                    continue;
                combine(buf.data(), val[p], rays_.data() + q * dim_, checked_neg(val[q]),
                        rays_.data() + p * dim_, dim_);
                new_rays.insert(new_rays.end(), buf.begin(), buf.end());
                z[k / 64] |= std::uint64_t(1) << (k % 64);
                new_inc.insert(new_inc.end(), z.begin(), z.end());
            }
        }

        std::vector<Int> rays;
        std::vector<std::uint64_t> inc;
        rays.reserve((pos.size() + zer.size()) * dim_ + new_rays.size());
        inc.reserve((pos.size() + zer.size()) * words_ + new_inc.size());
        for (std::size_t i = 0; i < n; ++i) {
            int s = sign_of(val[i]);
            if (s < 0)
                continue;
            rays.insert(rays.end(), rays_.begin() + i * dim_, rays_.begin() + (i + 1) * dim_);
            inc.insert(inc.end(), inc_.begin() + i * words_, inc_.begin() + (i + 1) * words_);
            if (s == 0)
                inc[inc.size() - words_ + k / 64] |= std::uint64_t(1) << (k % 64);
        }
        rays.insert(rays.end(), new_rays.begin(), new_rays.end());
        inc.insert(inc.end(), new_inc.begin(), new_inc.end());
        rays_ = std::move(rays);
        inc_ = std::move(inc);
        nrays_ = rays_.size() / std::max<std::size_t>(dim_, 1);
        if (dim_ == 0)
            nrays_ = 0;
    }

    void add_equality(std::span<const Int> h)
    {
        add_inequality(h);
        std::vector<Int> neg(h.begin(), h.end());
        for (auto& x : neg)
            x = checked_neg(x);
        add_inequality(neg);
    }

    /// Removes rows that cannot define a facet. Only valid when the cone is
    /// full-dimensional. Rows with identical tight sets are collapsed to the
    /// first one.
    void drop_nonfacet_rows()
    {
        if (nrows_ == 0)
            return;
        const std::size_t need = dim_ >= nlin_ + 1 ? dim_ - nlin_ - 1 : 0;
        const std::size_t rw = (nrays_ + 63) / 64;
        std::vector<std::uint64_t> tight_sets(nrows_ * rw, 0);
        std::vector<std::size_t> counts(nrows_, 0);
        for (std::size_t r = 0; r < nrays_; ++r)
            for (std::size_t j = 0; j < nrows_; ++j)
                if (tight(r, j)) {
                    tight_sets[j * rw + r / 64] |= std::uint64_t(1) << (r % 64);
                    ++counts[j];
                }
        std::vector<bool> keep(nrows_, true);
        for (std::size_t j = 0; j < nrows_; ++j)
            keep[j] = counts[j] >= need && counts[j] < nrays_;
        for (std::size_t j = 0; j < nrows_; ++j) {
            if (!keep[j])
                continue;
            const std::uint64_t* a = tight_sets.data() + j * rw;
            for (std::size_t i = 0; i < nrows_ && keep[j]; ++i) {
                if (i == j || !keep[i] || counts[i] < counts[j])
                    continue;
                const std::uint64_t* b = tight_sets.data() + i * rw;
                bool subset = true;
                for (std::size_t w = 0; w < rw && subset; ++w)
                    subset = (a[w] & ~b[w]) == 0;
                if (!subset)
                    continue;
                // Strictly contained, or a duplicate that appears later.
                if (counts[i] > counts[j] || i < j)
                    keep[j] = false;
            }
        }
        compact_rows(keep);
    }

private:
    bool pivot_lineality(std::span<const Int> h, std::size_t k)
    {
        std::size_t piv = nlin_;
        Int hl(0);
        for (std::size_t i = 0; i < nlin_; ++i) {
            hl = dot(h.data(), lineality_.data() + i * dim_, dim_);
            if (sign_of(hl) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nlin_)
            return false;

        const int s = sign_of(hl);
        const Int a = s > 0 ? hl : checked_neg(hl);
        const Int* l = lineality_.data() + piv * dim_;
        std::vector<Int> buf(dim_);

        std::vector<Int> lin;
        for (std::size_t i = 0; i < nlin_; ++i) {
            if (i == piv)
                continue;
            const Int* li = lineality_.data() + i * dim_;
            Int hi = dot(h.data(), li, dim_);
            if (sign_of(hi) != 0) {
                combine(buf.data(), hl, li, checked_neg(hi), l, dim_);
                lin.insert(lin.end(), buf.begin(), buf.end());
            } else {
                lin.insert(lin.end(), li, li + dim_);
            }
        }
        for (std::size_t r = 0; r < nrays_; ++r) {
            Int* ray = rays_.data() + r * dim_;
            Int hr = dot(h.data(), ray, dim_);
            if (sign_of(hr) != 0) {
                Int b = s > 0 ? checked_neg(hr) : hr;
                combine(buf.data(), a, ray, b, l, dim_);
                std::copy(buf.begin(), buf.end(), ray);
            }
            set_bit(r, k);
        }
        // The pivot direction becomes a ray, tight on every earlier row.
        std::vector<Int> fresh(l, l + dim_);
        if (s < 0)
            for (auto& x : fresh)
                x = checked_neg(x);
        make_primitive(fresh.data(), dim_);
        rays_.insert(rays_.end(), fresh.begin(), fresh.end());
        inc_.resize(inc_.size() + words_, 0);
        ++nrays_;
        for (std::size_t j = 0; j < k; ++j)
            set_bit(nrays_ - 1, j);

        lineality_ = std::move(lin);
        --nlin_;
        return true;
    }

    bool adjacent(std::size_t p, std::size_t q, const std::vector<std::uint64_t>& z) const
    {
        for (std::size_t r = 0; r < nrays_; ++r) {
            if (r == p || r == q)
                continue;
            const std::uint64_t* ir = inc_.data() + r * words_;
            bool contains = true;
            for (std::size_t w = 0; w < words_ && contains; ++w)
                contains = (z[w] & ~ir[w]) == 0;
            if (contains)
                return false;
        }
        return true;
    }

    void set_bit(std::size_t ray_index, std::size_t row_index)
    {
        inc_[ray_index * words_ + row_index / 64] |= std::uint64_t(1) << (row_index % 64);
    }

    void ensure_words(std::size_t rows)
    {
        const std::size_t need = std::max<std::size_t>(1, (rows + 63) / 64);
        if (need <= words_)
            return;
        std::vector<std::uint64_t> inc(nrays_ * need, 0);
        for (std::size_t r = 0; r < nrays_; ++r)
            for (std::size_t w = 0; w < words_; ++w)
                inc[r * need + w] = inc_[r * words_ + w];
        inc_ = std::move(inc);
        words_ = need;
    }

    void compact_rows(const std::vector<bool>& keep)
    {
        std::vector<std::size_t> kept;
        for (std::size_t j = 0; j < nrows_; ++j)
            if (keep[j])
                kept.push_back(j);
        if (kept.size() == nrows_)
            return;
        std::vector<Int> rows;
        rows.reserve(kept.size() * dim_);
        for (auto j : kept)
            rows.insert(rows.end(), rows_.begin() + j * dim_, rows_.begin() + (j + 1) * dim_);
        const std::size_t words = std::max<std::size_t>(1, (kept.size() + 63) / 64);
        std::vector<std::uint64_t> inc(nrays_ * words, 0);
        for (std::size_t r = 0; r < nrays_; ++r)
            for (std::size_t c = 0; c < kept.size(); ++c)
                if (tight(r, kept[c]))
                    inc[r * words + c / 64] |= std::uint64_t(1) << (c % 64);
        rows_ = std::move(rows);
        inc_ = std::move(inc);
        words_ = words;
        nrows_ = kept.size();
    }

    std::size_t dim_ = 0;
    std::size_t nrows_ = 0;
    std::size_t nrays_ = 0;
    std::size_t nlin_ = 0;
    std::size_t words_ = 1;
    std::vector<Int> rows_;
    std::vector<Int> rays_;
    std::vector<Int> lineality_;
    std::vector<std::uint64_t> inc_;
};

}  // namespace lineup::detail
