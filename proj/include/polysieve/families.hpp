#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace polysieve {

class FamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Family of q-subsets of the ground set {0, ..., n-1}. Members are stored
/// sorted; each member must consist of q distinct elements in range.
class SetFamily {
public:
    SetFamily(std::size_t ground_size, std::size_t member_size)
        : n_(ground_size), q_(member_size) {}

    SetFamily(std::size_t ground_size, std::size_t member_size,
              const std::vector<std::vector<int>>& members)
        : SetFamily(ground_size, member_size) {
        for (const auto& m : members) add_member(m);
    }

    std::size_t ground_size() const { return n_; }
    std::size_t member_size() const { return q_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<int>& member(std::size_t i) const { return sets_[i]; }
    const std::vector<std::vector<int>>& members() const { return sets_; }

    void add_member(std::vector<int> member) {
        if (member.size() != q_) throw FamilyError("member has wrong arity");
        std::sort(member.begin(), member.end());
        for (std::size_t i = 0; i < member.size(); ++i) {
            if (member[i] < 0 || static_cast<std::size_t>(member[i]) >= n_)
                throw FamilyError("member element out of range");
            if (i > 0 && member[i] == member[i - 1])
                throw FamilyError("duplicate element in member");
        }
        sets_.push_back(std::move(member));
    }

private:
    std::size_t n_;
    std::size_t q_;
    std::vector<std::vector<int>> sets_;
};

/// q-partite q-uniform family: the ground set splits into q parts of size r,
/// part j occupying global indices [j*r, (j+1)*r). Every member picks exactly
/// one element per part.
class PartiteFamily {
public:
    PartiteFamily(std::size_t dimensions, std::size_t part_size)
        : q_(dimensions), r_(part_size) {}

    PartiteFamily(std::size_t dimensions, std::size_t part_size,
                  const std::vector<std::vector<int>>& members)
        : PartiteFamily(dimensions, part_size) {
        for (const auto& m : members) add_member(m);
    }

    std::size_t dimensions() const { return q_; }
    std::size_t part_size() const { return r_; }
    std::size_t ground_size() const { return q_ * r_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<int>& member(std::size_t i) const { return sets_[i]; }
    const std::vector<std::vector<int>>& members() const { return sets_; }

    /// Coordinate of member i within part j, in [0, r).
    int coordinate(std::size_t i, std::size_t j) const {
        return sets_[i][j] - static_cast<int>(j * r_);
    }

    void add_member(std::vector<int> member) {
        if (member.size() != q_) throw FamilyError("member has wrong arity");
        std::sort(member.begin(), member.end());
        for (std::size_t j = 0; j < q_; ++j) {
            long long lo = static_cast<long long>(j) * static_cast<long long>(r_);
            if (member[j] < lo || member[j] >= lo + static_cast<long long>(r_))
                throw FamilyError("member does not pick one element per part");
        }
        sets_.push_back(std::move(member));
    }

private:
    std::size_t q_;
    std::size_t r_;
    std::vector<std::vector<int>> sets_;
};

}  // namespace polysieve
