// system.hpp — ordered bosonic mode list with per-mode Fock truncation.
// Fixes the tensor-index convention used everywhere: the first listed mode is
// the slowest (leftmost Kronecker) index. Two-mode systems are charger-first.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qho {

struct Mode {
    std::string id;
    int dim = 0;  // Fock truncation, >= 2
};

class CompositeSystem {
public:
    CompositeSystem() = default;

    explicit CompositeSystem(std::vector<Mode> modes) : modes_(std::move(modes)) {
        if (modes_.empty()) throw std::invalid_argument("CompositeSystem: no modes");
        dim_ = 1;
        for (std::size_t i = 0; i < modes_.size(); ++i) {
            if (modes_[i].dim < 2) {
                throw std::invalid_argument("CompositeSystem: mode '" + modes_[i].id +
                                            "' needs truncation dimension >= 2");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (modes_[j].id == modes_[i].id) {
                    throw std::invalid_argument("CompositeSystem: duplicate mode id '" +
                                                modes_[i].id + "'");
                }
            }
            dim_ *= modes_[i].dim;
        }
    }

    const std::vector<Mode>& modes() const { return modes_; }
    std::size_t mode_count() const { return modes_.size(); }
    int dimension() const { return dim_; }

    std::size_t mode_index(std::string_view id) const {
        for (std::size_t i = 0; i < modes_.size(); ++i) {
            if (modes_[i].id == id) return i;
        }
        throw std::invalid_argument("CompositeSystem: unknown mode id '" + std::string(id) + "'");
    }

    const Mode& mode(std::string_view id) const { return modes_[mode_index(id)]; }

private:
    std::vector<Mode> modes_;
    int dim_ = 0;
};

// Conventional two-mode layout: charger "A" first, battery "B" second.
inline CompositeSystem charger_battery(int d_charger, int d_battery) {
    return CompositeSystem({{"A", d_charger}, {"B", d_battery}});
}

inline CompositeSystem single_mode(int d, std::string id = "A") {
    return CompositeSystem({{std::move(id), d}});
}

}  // namespace qho
