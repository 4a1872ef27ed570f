// Copyright 2026 The sqgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqgame/layout.hpp"

#include <algorithm>

namespace sqgame {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> entries)
    : entries_(std::move(entries)) {
    total_ = 1;
    for (size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.label.empty())
            throw LayoutError("layout: empty subsystem label");
        if (e.dim < 1)
            throw LayoutError("layout: subsystem '" + e.label + "' has non-positive dimension");
        for (size_t j = 0; j < i; ++j) {
            if (entries_[j].label == e.label)
                throw LayoutError("layout: duplicate subsystem label '" + e.label + "'");
        }
        if (total_ > max_total_dim / e.dim)
            throw LayoutError("layout: total dimension exceeds cap of 4096");
        total_ *= e.dim;
    }
}

SubsystemLayout SubsystemLayout::single(std::string label, Index dim) {
    return SubsystemLayout({Subsystem{std::move(label), dim}});
}

bool SubsystemLayout::has(std::string_view label) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Subsystem& e) { return e.label == label; });
}

Index SubsystemLayout::position(std::string_view label) const {
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k].label == label) return static_cast<Index>(k);
    throw LayoutError("layout: unknown subsystem label '" + std::string(label) + "'");
}

std::vector<std::string> SubsystemLayout::label_list() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.label);
    return out;
}

std::vector<Index> SubsystemLayout::dim_list() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.dim);
    return out;
}

SubsystemLayout concat(const SubsystemLayout& lhs, const SubsystemLayout& rhs) {
    std::vector<Subsystem> entries = lhs.entries();
    entries.insert(entries.end(), rhs.entries().begin(), rhs.entries().end());
    return SubsystemLayout(std::move(entries));
}

} // namespace sqgame
