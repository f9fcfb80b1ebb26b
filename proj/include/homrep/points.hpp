#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "homrep/errors.hpp"
#include "homrep/scalar.hpp"

namespace homrep {

// Evaluation points y_1, ..., y_n.  Distinctness is not an invariant of the
// type; routes that divide by differences call require_distinct themselves.
template <class S>
class PointList {
public:
    PointList() = default;
    explicit PointList(std::vector<S> pts) : pts_(std::move(pts)) {}

    int size() const { return static_cast<int>(pts_.size()); }
    const S& operator[](int i) const { return pts_[i]; } // 0-based
    const std::vector<S>& points() const { return pts_; }

    bool pairwise_distinct() const {
        for (size_t i = 0; i < pts_.size(); ++i)
            for (size_t j = i + 1; j < pts_.size(); ++j)
                if (pts_[i] == pts_[j]) return false;
        return true;
    }

    void require_distinct(const char* what) const {
        if (!pairwise_distinct())
            throw degenerate_input_error(std::string(what) + ": points must be pairwise distinct");
    }

    friend bool operator==(const PointList& a, const PointList& b) { return a.pts_ == b.pts_; }

private:
    std::vector<S> pts_;
};

// Smallest pairwise distance of a binary64 point list; +inf when fewer than
// two points.
inline double min_pairwise_separation(const PointList<double>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < pts.size(); ++i)
        for (int j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::fabs(pts[i] - pts[j]));
    return best;
}

} // namespace homrep
