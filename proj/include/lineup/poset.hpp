#pragma once

#include "lineup/bitset.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace lineup {

/// A finite poset used to restrict the candidates for the next position of
/// a lineup. Elements are indexed 0..size()-1; for configurations that carry
/// a poset, element i is point i.
class Poset {
public:
    enum class Kind { chain_product, gale, boolean, antichain };

    /// Product of chains with the given numbers of elements. Elements are
    /// tuples (t_1, ..., t_N) with 0 <= t_k < sizes[k], indexed
    /// lexicographically (first coordinate most significant), ordered
    /// componentwise.
    static Poset chain_product(std::vector<std::size_t> sizes);

    /// P(d, N): the product of N chains {0, ..., d}.
    static Poset young(std::size_t d, std::size_t n);

    /// The extended Gale order on all subsets of {1..N}; element index is the
    /// bitmask of the subset (bit j-1 for element j).
    static Poset gale(std::size_t n);

    /// Subsets of {1..N} under inclusion, indexed by bitmask like gale().
    static Poset boolean(std::size_t n);

    static Poset antichain(std::size_t n);

    Kind kind() const { return kind_; }
    std::size_t size() const { return above_.size(); }

    bool less(std::size_t a, std::size_t b) const { return above_[a].test(b); }
    bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
    const Bitset& strictly_above(std::size_t a) const { return above_[a]; }
    const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_covers_[a]; }
    const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }

    /// Tuple coordinates of a chain-product element.
    std::vector<std::size_t> tuple(std::size_t a) const;
    const std::vector<std::size_t>& chain_sizes() const { return sizes_; }

    std::string element_name(std::size_t a) const;

private:
    Poset(Kind kind, std::vector<Bitset> above, std::vector<std::size_t> sizes = {});

    Kind kind_;
    std::vector<std::size_t> sizes_;
    std::vector<Bitset> above_;
    std::vector<std::vector<std::size_t>> lower_covers_;
    std::vector<std::vector<std::size_t>> upper_covers_;
};

/// Extended Gale order on sorted subsets of [N]: |S| <= |T| and the k-th
/// largest element of S is at most the k-th largest of T for every k <= |S|.
bool gale_leq(const std::vector<std::size_t>& s, const std::vector<std::size_t>& t);

/// An upward-closed subset of a poset together with its frontier: the
/// elements that can be added while keeping the set upward closed.
class UpperIdeal {
public:
    UpperIdeal() = default;
    explicit UpperIdeal(std::shared_ptr<const Poset> poset);

    const Poset& poset() const { return *poset_; }
    std::shared_ptr<const Poset> poset_ptr() const { return poset_; }

    bool contains(std::size_t e) const { return members_.test(e); }
    std::size_t size() const { return members_.count(); }
    bool full() const { return size() == poset_->size(); }
    const Bitset& members() const { return members_; }

    /// Elements whose addition keeps the set an upper ideal, increasing index.
    std::vector<std::size_t> candidates() const { return frontier_.indices(); }
    bool addable(std::size_t e) const { return frontier_.test(e); }

    /// Throws std::invalid_argument when e is not a candidate.
    UpperIdeal add(std::size_t e) const;
    void add_in_place(std::size_t e);

    /// Rebuilds an ideal from a membership mask; throws if it is not upward
    /// closed.
    static UpperIdeal from_members(std::shared_ptr<const Poset> poset, const Bitset& members);

    /// Brute-force upward-closure check.
    bool is_upper_ideal() const;

private:
    std::shared_ptr<const Poset> poset_;
    Bitset members_;
    Bitset frontier_;
};

}  // namespace lineup
