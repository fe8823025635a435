#ifndef RSUP_INTERVAL_HPP
#define RSUP_INTERVAL_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsup {

// Finite union of disjoint open intervals in [0,infty), kept sorted.
class IntervalUnion {
public:
    using Interval = std::pair<double, double>;

    IntervalUnion() = default;

    IntervalUnion(std::initializer_list<Interval> ivs)
        : IntervalUnion(std::vector<Interval>(ivs)) {}

    explicit IntervalUnion(std::vector<Interval> ivs) : ivs_(std::move(ivs)) {
        std::sort(ivs_.begin(), ivs_.end());
        for (std::size_t i = 0; i < ivs_.size(); ++i) {
            if (!(ivs_[i].first >= 0.0) || !(ivs_[i].first < ivs_[i].second))
                throw std::invalid_argument("IntervalUnion: need 0 <= left < right");
            if (i > 0 && ivs_[i].first < ivs_[i - 1].second)
                throw std::invalid_argument("IntervalUnion: intervals must be disjoint");
        }
    }

    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }
    const Interval& operator[](std::size_t i) const { return ivs_[i]; }
    const std::vector<Interval>& intervals() const { return ivs_; }

    double sup() const { return ivs_.empty() ? 0.0 : ivs_.back().second; }

    bool contains(double t) const {
        for (const auto& [a, b] : ivs_)
            if (a < t && t < b) return true;
        return false;
    }

    IntervalUnion shifted(double r) const {
        std::vector<Interval> out;
        out.reserve(ivs_.size());
        for (const auto& [a, b] : ivs_) out.emplace_back(a + r, b + r);
        return IntervalUnion(std::move(out));
    }

    IntervalUnion scaled(double c) const {
        if (!(c > 0.0)) throw std::invalid_argument("IntervalUnion::scaled: c > 0");
        std::vector<Interval> out;
        out.reserve(ivs_.size());
        for (const auto& [a, b] : ivs_) out.emplace_back(c * a, c * b);
        return IntervalUnion(std::move(out));
    }

private:
    std::vector<Interval> ivs_;
};

} // namespace rsup

#endif
