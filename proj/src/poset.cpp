#include "lineup/poset.hpp"

#include <stdexcept>

namespace lineup {

Poset::Poset(Kind kind, std::vector<Bitset> above, std::vector<std::size_t> sizes)
    : kind_(kind), sizes_(std::move(sizes)), above_(std::move(above))
{
    const std::size_t n = above_.size();
    lower_covers_.resize(n);
    upper_covers_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : above_[a].indices()) {
            // b covers a unless some c sits strictly between.
            bool cover = true;
            for (std::size_t c : above_[a].indices())
                if (c != b && above_[c].test(b)) {
                    cover = false;
                    break;
                }
            if (cover) {
                upper_covers_[a].push_back(b);
                lower_covers_[b].push_back(a);
            }
        }
    }
}

Poset Poset::chain_product(std::vector<std::size_t> sizes)
{
    if (sizes.empty())
        throw std::invalid_argument("chain_product: no chains");
    std::size_t n = 1;
    for (auto s : sizes) {
        if (s == 0)
            throw std::invalid_argument("chain_product: empty chain");
        n *= s;
    }
    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> t(sizes.size());
        for (std::size_t k = sizes.size(); k-- > 0;) {
            t[k] = idx % sizes[k];
            idx /= sizes[k];
        }
        return t;
    };
    std::vector<std::vector<std::size_t>> tuples(n);
    for (std::size_t i = 0; i < n; ++i)
        tuples[i] = decode(i);
    std::vector<Bitset> above(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            bool le = true;
            for (std::size_t k = 0; k < sizes.size() && le; ++k)
                le = tuples[a][k] <= tuples[b][k];
            if (le)
                above[a].set(b);
        }
    return Poset(Kind::chain_product, std::move(above), std::move(sizes));
}

Poset Poset::young(std::size_t d, std::size_t n)
{
    return chain_product(std::vector<std::size_t>(n, d + 1));
}

namespace {

std::vector<std::size_t> subset_of_mask(std::size_t mask)
{
    std::vector<std::size_t> s;
    for (std::size_t j = 0; mask >> j; ++j)
        if ((mask >> j) & 1u)
            s.push_back(j + 1);
    return s;
}

}  // namespace

bool gale_leq(const std::vector<std::size_t>& s, const std::vector<std::size_t>& t)
{
    if (s.size() > t.size())
        return false;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[s.size() - 1 - k] > t[t.size() - 1 - k])
            return false;
    return true;
}

Poset Poset::gale(std::size_t n)
{
    if (n == 0 || n > 16)
        throw std::invalid_argument("gale: N must be in 1..16");
    const std::size_t size = std::size_t(1) << n;
    std::vector<std::vector<std::size_t>> subsets(size);
    for (std::size_t m = 0; m < size; ++m)
        subsets[m] = subset_of_mask(m);
    std::vector<Bitset> above(size, Bitset(size));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (a != b && gale_leq(subsets[a], subsets[b]))
                above[a].set(b);
    return Poset(Kind::gale, std::move(above), std::vector<std::size_t>(n, 2));
}

Poset Poset::boolean(std::size_t n)
{
    if (n == 0 || n > 16)
        throw std::invalid_argument("boolean: N must be in 1..16");
    const std::size_t size = std::size_t(1) << n;
    std::vector<Bitset> above(size, Bitset(size));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (a != b && (a & b) == a)
                above[a].set(b);
    return Poset(Kind::boolean, std::move(above), std::vector<std::size_t>(n, 2));
}

Poset Poset::antichain(std::size_t n)
{
    return Poset(Kind::antichain, std::vector<Bitset>(n, Bitset(n)));
}

std::vector<std::size_t> Poset::tuple(std::size_t a) const
{
    if (kind_ == Kind::antichain)
        throw std::logic_error("tuple: antichain elements have no coordinates");
    std::vector<std::size_t> t(sizes_.size());
    for (std::size_t k = sizes_.size(); k-- > 0;) {
        if (kind_ == Kind::gale || kind_ == Kind::boolean) {
            t[k] = (a >> k) & 1u;
        } else {
            t[k] = a % sizes_[k];
            a /= sizes_[k];
        }
    }
    return t;
}

std::string Poset::element_name(std::size_t a) const
{
    std::string s;
    switch (kind_) {
    case Kind::gale:
    case Kind::boolean: {
        s = "{";
        auto sub = subset_of_mask(a);
        for (std::size_t i = 0; i < sub.size(); ++i)
            s += (i ? "," : "") + std::to_string(sub[i]);
        return s + "}";
    }
    case Kind::chain_product: {
        s = "(";
        auto t = tuple(a);
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + std::to_string(t[i]);
        return s + ")";
    }
    case Kind::antichain: return std::to_string(a);
    }
    return s;
}

UpperIdeal::UpperIdeal(std::shared_ptr<const Poset> poset)
    : poset_(std::move(poset)), members_(poset_->size()), frontier_(poset_->size())
{
    for (std::size_t e = 0; e < poset_->size(); ++e)
        if (poset_->strictly_above(e).none())
            frontier_.set(e);
}

void UpperIdeal::add_in_place(std::size_t e)
{
    if (e >= poset_->size() || !frontier_.test(e))
        throw std::invalid_argument("UpperIdeal::add: element " + std::to_string(e) + " is not addable");
    members_.set(e);
    frontier_.reset(e);
    for (std::size_t c : poset_->lower_covers(e))
        if (poset_->strictly_above(c).subset_of(members_))
            frontier_.set(c);
}

UpperIdeal UpperIdeal::add(std::size_t e) const
{
    UpperIdeal next = *this;
    next.add_in_place(e);
    return next;
}

UpperIdeal UpperIdeal::from_members(std::shared_ptr<const Poset> poset, const Bitset& members)
{
    UpperIdeal ideal(poset);
    if (members.size() != poset->size())
        throw std::invalid_argument("UpperIdeal::from_members: mask size mismatch");
    ideal.members_ = members;
    if (!ideal.is_upper_ideal())
        throw std::invalid_argument("UpperIdeal::from_members: mask is not upward closed");
    ideal.frontier_ = Bitset(poset->size());
    for (std::size_t e = 0; e < poset->size(); ++e)
        if (!members.test(e) && poset->strictly_above(e).subset_of(members))
            ideal.frontier_.set(e);
    return ideal;
}

bool UpperIdeal::is_upper_ideal() const
{
    for (std::size_t e : members_.indices())
        if (!poset_->strictly_above(e).subset_of(members_))
            return false;
    return true;
}

}  // namespace lineup
