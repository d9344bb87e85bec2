#include "orbchar/group_registry.hpp"

#include <mutex>
#include <stdexcept>

#include "orbchar/group_catalog.hpp"

namespace orbchar {

GroupRegistry& GroupRegistry::instance() {
    static GroupRegistry reg;
    return reg;
}

GroupRegistry::GroupRegistry() {
    for (const auto& g : bundled_catalog()) {
        if (g.order() == 1) continue;
        reps_.push_back(g);
        labels_.push_back(g.name());
    }
}

int GroupRegistry::canonical_id(const FiniteGroup& g, int iso_cap) {
    if (g.order() == 1) return -1;
    {
        std::shared_lock lock(mu_);
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            if (reps_[i].order() != g.order()) continue;
            if (g.order() <= iso_cap) {
                if (is_isomorphic(reps_[i], g, iso_cap)) return static_cast<int>(i);
            } else if (!g.name().empty() && labels_[i] == g.name()) {
                return static_cast<int>(i);
            }
        }
    }
    std::unique_lock lock(mu_);
    // Re-scan under the exclusive lock in case another thread inserted it.
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        if (reps_[i].order() != g.order()) continue;
        if (g.order() <= iso_cap) {
            if (is_isomorphic(reps_[i], g, iso_cap)) return static_cast<int>(i);
        } else if (!g.name().empty() && labels_[i] == g.name()) {
            return static_cast<int>(i);
        }
    }
    int id = static_cast<int>(reps_.size());
    std::string label = g.name();
    if (label.empty()) label = "ord" + std::to_string(g.order()) + "#" + std::to_string(id);
    for (const auto& existing : labels_)
        if (existing == label) {
            label += "#" + std::to_string(id);
            break;
        }
    reps_.push_back(g);
    labels_.push_back(label);
    return id;
}

std::optional<int> GroupRegistry::find_by_label(const std::string& label) const {
    std::shared_lock lock(mu_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

const FiniteGroup& GroupRegistry::representative(int id) const {
    std::shared_lock lock(mu_);
    if (id < 0 || id >= static_cast<int>(reps_.size()))
        throw std::out_of_range("registry id " + std::to_string(id));
    return reps_[static_cast<std::size_t>(id)];
}

const std::string& GroupRegistry::label(int id) const {
    std::shared_lock lock(mu_);
    if (id < 0 || id >= static_cast<int>(labels_.size()))
        throw std::out_of_range("registry id " + std::to_string(id));
    return labels_[static_cast<std::size_t>(id)];
}

int GroupRegistry::order(int id) const { return representative(id).order(); }

} // namespace orbchar
