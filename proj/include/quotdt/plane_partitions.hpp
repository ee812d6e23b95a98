#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "quotdt/bigint.hpp"

namespace quotdt {

/// A plane partition: box heights h(i,j) >= 1 over a Young-diagram base,
/// weakly decreasing along both axes. Stored as rows.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    long size() const;
    /// 0 outside the diagram.
    int height(int i, int j) const;
    std::map<std::pair<int, int>, int> heights() const;
    bool valid() const;

private:
    std::vector<std::vector<int>> rows_;
};

/// Visit every plane partition of total size exactly n (n >= 0).
void for_each_plane_partition(int n, const std::function<void(const PlanePartition&)>& fn);

/// Number of plane partitions of n, by exhaustive generation.
Bigint plane_partition_count(int n);

/// Number of r-tuples of plane partitions with total size n: the coefficient
/// of q^n in M(q)^r, produced with no series arithmetic.
Bigint colored_plane_partitions(unsigned r, int n);

} // namespace quotdt
