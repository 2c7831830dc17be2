#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grouprw/errors.hpp"

namespace grouprw {

// Index into a group's intern table. Canonical forms are interned once per
// group instance, so id equality is element equality and ids hash trivially.
// Id 0 is always the identity element.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

// A word is a sequence of generator indices (positions in Group::generators()).
using Word = std::vector<std::uint32_t>;

class Group;

// Value-semantics handle pairing an element with its owning group.
struct Element {
    std::shared_ptr<const Group> group;
    ElementId id = kIdentity;

    bool operator==(const Element& o) const { return group.get() == o.group.get() && id == o.id; }
};

// Finitely generated group with canonical element forms. All operations are
// logically const; the intern table and BFS length cache are grow-only and
// mutex-guarded, so concurrent readers see consistent state.
class Group : public std::enable_shared_from_this<Group> {
public:
    explicit Group(std::string id) : id_(std::move(id)) {}
    virtual ~Group() = default;

    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;

    const std::string& id() const { return id_; }
    ElementId identity() const { return kIdentity; }

    virtual ElementId multiply(ElementId a, ElementId b) const = 0;
    virtual ElementId inverse(ElementId a) const = 0;

    // Canonical byte encoding; unique per element, stable across processes.
    virtual std::string encode(ElementId a) const = 0;
    virtual ElementId decode(std::string_view bytes) const = 0;

    // Human-readable element forms for CLI/CSV.
    virtual std::string to_text(ElementId a) const = 0;
    virtual ElementId parse_text(std::string_view text) const = 0;

    // Symmetric generating set; construction rejects asymmetric sets.
    const std::vector<ElementId>& generators() const { return generators_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    // index of s^{-1} in generators() for each generator index
    const std::vector<std::uint32_t>& generator_inverse_index() const { return gen_inv_; }

    // A finite list of known null words (not a presentation); used by cocycle
    // consistency checks and group sanity tests.
    virtual std::vector<Word> relators() const { return {}; }

    // Catalog metadata for Theorem-B-style experiments.
    virtual bool no_infinite_virtually_abelian_quotient() const { return false; }

    // |a|_G w.r.t. the generating set. Default: grow-on-demand BFS table.
    // Subclasses with well-known closed forms override.
    virtual std::uint32_t word_length(ElementId a) const;

    // All elements with |x| <= r, sorted by (length, canonical bytes).
    // Throws BudgetExceededError (with partial count) if the ball exceeds the
    // element budget.
    std::vector<ElementId> ball(std::uint32_t r, std::size_t budget = 2'000'000) const;

    ElementId evaluate(const Word& w) const;

    std::size_t interned_count() const;

protected:
    // Subclasses call this once after interning the identity (id 0) and the
    // generator elements. Verifies symmetry.
    void set_generators(std::vector<ElementId> gens, std::vector<std::string> names);

    // Grow the BFS length table to radius r (or until budget hit).
    void grow_length_table(std::uint32_t r, std::size_t budget) const;

    mutable std::mutex mutex_;

private:
    std::string id_;
    std::vector<ElementId> generators_;
    std::vector<std::string> generator_names_;
    std::vector<std::uint32_t> gen_inv_;

    // BFS cache: lengths_[id] = |g| for every g discovered so far; frontier of
    // the last completed radius. Guarded by mutex_.
    mutable std::unordered_map<ElementId, std::uint32_t> lengths_;
    mutable std::vector<ElementId> frontier_;
    mutable std::uint32_t table_radius_ = 0;
    mutable bool table_init_ = false;

    virtual std::size_t interned_count_impl() const = 0;
};

std::shared_ptr<const Group> direct_product(std::shared_ptr<const Group> a,
                                            std::shared_ptr<const Group> b,
                                            bool box_generators = false);

struct ElementHash {
    std::size_t operator()(const Element& e) const {
        return std::hash<const void*>()(e.group.get()) ^ (std::size_t(e.id) * 0x9e3779b97f4a7c15ull);
    }
};

}  // namespace grouprw
