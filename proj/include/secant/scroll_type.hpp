#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace secant {

/// The symbolic avatar of a rational normal scroll S(a_1,...,a_n): a weakly
/// increasing multiset of nonnegative integers.  The all-zero multiset is
/// admitted as a value because the projection calculus can produce it (the
/// image degenerates to a linear space); constructors of actual
/// parametrizations reject it.
class ScrollType {
public:
    explicit ScrollType(std::vector<int> a) : a_(std::move(a)) {
        if (a_.empty()) throw std::invalid_argument("ScrollType: empty type");
        for (int v : a_)
            if (v < 0) throw std::invalid_argument("ScrollType: negative entry");
        std::sort(a_.begin(), a_.end());
    }
    ScrollType(std::initializer_list<int> a) : ScrollType(std::vector<int>(a)) {}

    const std::vector<int>& entries() const { return a_; }
    int n() const { return static_cast<int>(a_.size()); }
    int degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    /// r = a_1 + ... + a_n + n - 1
    int ambient() const { return degree() + n() - 1; }
    int min_entry() const { return a_.front(); }
    int max_entry() const { return a_.back(); }
    bool all_zero() const { return a_.back() == 0; }

    bool operator==(const ScrollType& o) const { return a_ == o.a_; }
    bool operator!=(const ScrollType& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) os << ",";
            os << a_[i];
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<int> a_;
};

} // namespace secant
