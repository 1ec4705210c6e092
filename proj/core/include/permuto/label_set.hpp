#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace permuto {

// A finite nonempty set of non-negative integer labels, stored strictly
// increasing. Plays the role of the ground set on which partitions,
// lattice vectors and ring elements live.
class LabelSet {
public:
    explicit LabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        if (labels_.empty()) throw std::invalid_argument("LabelSet: empty label set");
        if (labels_.front() < 0) throw std::invalid_argument("LabelSet: negative label");
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw std::invalid_argument("LabelSet: duplicate label");
    }

    // {1, 2, ..., n}
    static LabelSet segment(int n) {
        if (n < 1) throw std::invalid_argument("LabelSet::segment: n must be >= 1");
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return LabelSet(std::move(v));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int max_label() const { return labels_.back(); }

    bool contains(int label) const {
        return std::binary_search(labels_.begin(), labels_.end(), label);
    }
    // Position of `label` in increasing order, -1 if absent.
    int position(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return -1;
        return static_cast<int>(it - labels_.begin());
    }
    bool subset_of(const LabelSet& other) const {
        return std::includes(other.labels_.begin(), other.labels_.end(),
                             labels_.begin(), labels_.end());
    }
    bool is_segment() const { return labels_.front() == 1 && labels_.back() == size(); }

    friend bool operator==(const LabelSet&, const LabelSet&) = default;
    friend auto operator<=>(const LabelSet& a, const LabelSet& b) {
        return a.labels_ <=> b.labels_;
    }

private:
    std::vector<int> labels_;
};

}  // namespace permuto
