#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace svcvv {

/// Uniformly typed sample track. Timestamps are seconds, strictly increasing.
template <typename T>
struct TimeSeries {
    std::vector<double> t;
    std::vector<T> v;

    std::size_t size() const { return t.size(); }
    bool empty() const { return t.empty(); }

    void push_back(double time, T value) {
        t.push_back(time);
        v.push_back(std::move(value));
    }

    /// Enforces the class invariant; call after bulk construction.
    void validate() const {
        if (t.size() != v.size())
            throw std::logic_error("time series: timestamp/value count mismatch");
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!(t[i] > t[i - 1]))
                throw std::runtime_error("time series: timestamps not strictly increasing");
    }
};

}  // namespace svcvv
