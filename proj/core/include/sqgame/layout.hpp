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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "sqgame/errors.hpp"

namespace sqgame {

using Index = Eigen::Index;

/// One tensor factor: a short label plus its Hilbert-space dimension.
struct Subsystem {
    std::string label;
    Index dim = 0;

    bool operator==(const Subsystem&) const = default;
};

// Canonical subsystem labels. Questions travel on A0 (to Alice) and B0 (to
// Bob); the shared state occupies A and B. The canonical four-party order is
// [A0, A, B, B0]; Alice measures jointly on (A, A0) and Bob on (B0, B).
namespace labels {
inline constexpr const char* a0 = "A0";
inline constexpr const char* a = "A";
inline constexpr const char* b = "B";
inline constexpr const char* b0 = "B0";
} // namespace labels

/// Ordered list of labeled subsystems. Labels are unique within a layout;
/// the total dimension is the product of the factor dimensions (capped at
/// 4096 -- dense desk-scale systems only).
class SubsystemLayout {
public:
    static constexpr Index max_total_dim = 4096;

    SubsystemLayout() = default;
    explicit SubsystemLayout(std::vector<Subsystem> entries);

    /// Layout with a single subsystem.
    static SubsystemLayout single(std::string label, Index dim);

    Index size() const { return static_cast<Index>(entries_.size()); }
    Index total_dim() const { return total_; }
    const Subsystem& at(Index k) const { return entries_[static_cast<size_t>(k)]; }
    const std::vector<Subsystem>& entries() const { return entries_; }

    bool has(std::string_view label) const;
    /// Position of `label`; throws LayoutError if absent.
    Index position(std::string_view label) const;
    Index dim_of(std::string_view label) const { return at(position(label)).dim; }

    std::vector<std::string> label_list() const;
    std::vector<Index> dim_list() const;

    bool operator==(const SubsystemLayout&) const = default;

private:
    std::vector<Subsystem> entries_;
    Index total_ = 1;
};

/// Concatenation; throws LayoutError on duplicate labels.
SubsystemLayout concat(const SubsystemLayout& lhs, const SubsystemLayout& rhs);

} // namespace sqgame
