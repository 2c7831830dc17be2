#include "grouprw/group.hpp"

#include <algorithm>

namespace grouprw {

void Group::set_generators(std::vector<ElementId> gens, std::vector<std::string> names) {
    if (gens.size() != names.size()) throw ValidationError("generator/name count mismatch");
    // reject duplicates and the identity
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == kIdentity) throw ValidationError("identity listed as generator");
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j]) throw ValidationError("duplicate generator");
    }
    gen_inv_.assign(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ElementId inv = inverse(gens[i]);
        auto it = std::find(gens.begin(), gens.end(), inv);
        if (it == gens.end())
            throw ValidationError("generating set is not symmetric: missing inverse of " + names[i]);
        gen_inv_[i] = static_cast<std::uint32_t>(it - gens.begin());
    }
    generators_ = std::move(gens);
    generator_names_ = std::move(names);
}

void Group::grow_length_table(std::uint32_t r, std::size_t budget) const {
    // caller holds mutex_
    if (!table_init_) {
        lengths_.clear();
        lengths_[kIdentity] = 0;
        frontier_ = {kIdentity};
        table_radius_ = 0;
        table_init_ = true;
    }
    while (table_radius_ < r && !frontier_.empty()) {
        std::vector<ElementId> next;
        for (ElementId x : frontier_) {
            for (ElementId s : generators_) {
                ElementId y = multiply(x, s);
                auto [it, fresh] = lengths_.emplace(y, table_radius_ + 1);
                if (fresh) {
                    next.push_back(y);
                    if (lengths_.size() > budget)
                        throw BudgetExceededError(
                            "ball budget exceeded growing length table for " + id_, lengths_.size());
                }
            }
        }
        frontier_ = std::move(next);
        ++table_radius_;
    }
}

std::uint32_t Group::word_length(ElementId a) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_init_) {
        auto it = lengths_.find(a);
        if (it != lengths_.end()) return it->second;
    }
    // grow in steps until found or budget hit
    std::uint32_t r = std::max<std::uint32_t>(table_radius_ + 4, 8);
    constexpr std::size_t kBudget = 4'000'000;
    for (;;) {
        grow_length_table(r, kBudget);
        auto it = lengths_.find(a);
        if (it != lengths_.end()) return it->second;
        if (frontier_.empty())
            throw ValidationError("element not generated by the generating set of " + id_);
        if (lengths_.size() > kBudget / 2 || r > 1u << 20)
            throw RadiusExceededError("word length table exhausted for " + id_, table_radius_ + 1);
        r += 4;
    }
}

std::vector<ElementId> Group::ball(std::uint32_t r, std::size_t budget) const {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_length_table(r, budget);
    std::vector<std::pair<std::uint32_t, ElementId>> found;
    for (const auto& [id, len] : lengths_)
        if (len <= r) found.emplace_back(len, id);
    std::vector<std::string> enc(found.size());
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        enc[i] = encode(found[i].second);
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (found[i].first != found[j].first) return found[i].first < found[j].first;
        return enc[i] < enc[j];
    });
    std::vector<ElementId> out(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) out[i] = found[order[i]].second;
    return out;
}

ElementId Group::evaluate(const Word& w) const {
    ElementId acc = kIdentity;
    for (std::uint32_t letter : w) {
        if (letter >= generators_.size()) throw ValidationError("word letter out of range");
        acc = multiply(acc, generators_[letter]);
    }
    return acc;
}

std::size_t Group::interned_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return interned_count_impl();
}

}  // namespace grouprw
