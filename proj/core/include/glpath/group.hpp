#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "glpath/errors.hpp"

namespace glpath {

/// A finite group held as a dense Cayley table over element indices
/// 0..order-1. Axioms (closure, associativity, identity, inverses) are
/// validated eagerly on construction; a violation raises ValidationError
/// naming the offending elements.
///
/// Intended for small groups (order up to ~120); operations in hot loops use
/// raw element indices via mul()/inv().
class FiniteGroup {
public:
    static std::shared_ptr<const FiniteGroup> cyclic(int n);

    /// Symmetric group on m symbols, elements ordered lexicographically by
    /// one-line notation. Composition reads left to right: (p*q) applies p
    /// first, then q, matching how labels accumulate along a traversed path.
    static std::shared_ptr<const FiniteGroup> symmetric(int m);

    /// Direct product; element (a1,..,ak) is named "(n1,..,nk)". Indices are
    /// mixed-radix with the last factor fastest.
    static std::shared_ptr<const FiniteGroup>
    product(const std::vector<std::shared_ptr<const FiniteGroup>>& factors);

    /// table[i][j] must hold the index of elems[i]*elems[j].
    static std::shared_ptr<const FiniteGroup>
    from_table(const std::vector<std::string>& elems,
               const std::vector<std::vector<int>>& table);

    int order() const { return order_; }
    int identity() const { return id_; }
    bool is_identity(int a) const { return a == id_; }

    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of the named element; ValidationError if unknown.
    int elem(const std::string& name) const;
    bool has_elem(const std::string& name) const {
        return by_name_.count(name) > 0;
    }

    /// Canonical construction recipe as compact JSON, suitable for embedding
    /// in graph files ({"kind":"cyclic","n":2} etc.).
    const std::string& spec_json() const { return spec_json_; }

    /// Deterministic digest of (order, names, table); used to key type
    /// universes and catalogs.
    std::string signature() const;

private:
    FiniteGroup() = default;
    void finalize(const std::string& context); // validates axioms, fills inv_

    int order_ = 0;
    int id_ = -1;
    std::vector<int> table_; // row-major order_ x order_
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
    std::string spec_json_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Value-semantics handle for a single group element. Mixing elements of two
/// different group instances is a ValidationError.
class GroupElem {
public:
    GroupElem(GroupPtr g, int index) : g_(std::move(g)), i_(index) {
        if (!g_ || i_ < 0 || i_ >= g_->order())
            throw ValidationError("group element index out of range");
    }

    int index() const { return i_; }
    const GroupPtr& group() const { return g_; }
    const std::string& name() const { return g_->name(i_); }
    bool is_identity() const { return g_->is_identity(i_); }

    GroupElem operator*(const GroupElem& o) const {
        check_same(o);
        return GroupElem(g_, g_->mul(i_, o.i_));
    }
    GroupElem inverse() const { return GroupElem(g_, g_->inv(i_)); }

    bool operator==(const GroupElem& o) const {
        check_same(o);
        return i_ == o.i_;
    }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }

private:
    void check_same(const GroupElem& o) const {
        if (g_.get() != o.g_.get())
            throw ValidationError("group mismatch: cannot combine elements of '" +
                                  g_->spec_json() + "' and '" +
                                  o.g_->spec_json() + "'");
    }

    GroupPtr g_;
    int i_;
};

} // namespace glpath
