#include "quotdt/plane_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace quotdt {

long PlanePartition::size() const {
    long total = 0;
    for (const auto& row : rows_)
        for (int h : row) total += h;
    return total;
}

int PlanePartition::height(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(rows_.size())) return 0;
    const auto& row = rows_[static_cast<size_t>(i)];
    if (j >= static_cast<int>(row.size())) return 0;
    return row[static_cast<size_t>(j)];
}

std::map<std::pair<int, int>, int> PlanePartition::heights() const {
    std::map<std::pair<int, int>, int> out;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
        for (int j = 0; j < static_cast<int>(rows_[i].size()); ++j)
            out[{i, j}] = rows_[i][j];
    return out;
}

bool PlanePartition::valid() const {
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        if (rows_[i].empty()) return false;
        for (int j = 0; j < static_cast<int>(rows_[i].size()); ++j) {
            int h = rows_[i][j];
            if (h < 1) return false;
            if (h > height(i - 1, j) && i > 0) return false;
            if (j > 0 && h > rows_[i][j - 1]) return false;
        }
    }
    return true;
}

namespace {

using Visitor = std::function<void(const PlanePartition&)>;

void next_row(std::vector<std::vector<int>>& rows, int remaining, const Visitor& fn);

// Grow the row under construction entry by entry; a nonempty row may be
// committed at any point, after which generation moves to the next row.
void fill_row(std::vector<std::vector<int>>& rows, std::vector<int>& row, int remaining,
              const Visitor& fn) {
    if (!row.empty()) {
        rows.push_back(row);
        next_row(rows, remaining, fn);
        rows.pop_back();
    }
    if (remaining == 0) return;
    int j = static_cast<int>(row.size());
    int cap = remaining;
    if (!rows.empty()) {
        const auto& above = rows.back();
        if (j >= static_cast<int>(above.size())) return;
        cap = std::min(cap, above[static_cast<size_t>(j)]);
    }
    if (j > 0) cap = std::min(cap, row[static_cast<size_t>(j) - 1]);
    for (int v = 1; v <= cap; ++v) {
        row.push_back(v);
        fill_row(rows, row, remaining - v, fn);
        row.pop_back();
    }
}

void next_row(std::vector<std::vector<int>>& rows, int remaining, const Visitor& fn) {
    if (remaining == 0) {
        fn(PlanePartition(rows));
        return;
    }
    std::vector<int> row;
    fill_row(rows, row, remaining, fn);
}

} // namespace

void for_each_plane_partition(int n, const Visitor& fn) {
    if (n < 0) throw std::invalid_argument("for_each_plane_partition: n must be >= 0");
    std::vector<std::vector<int>> rows;
    next_row(rows, n, fn);
}

Bigint plane_partition_count(int n) {
    Bigint count = 0;
    for_each_plane_partition(n, [&](const PlanePartition&) { ++count; });
    return count;
}

Bigint colored_plane_partitions(unsigned r, int n) {
    if (r < 1) throw std::invalid_argument("colored_plane_partitions: r must be >= 1");
    if (n < 0) throw std::invalid_argument("colored_plane_partitions: n must be >= 0");
    std::vector<Bigint> single(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) single[static_cast<size_t>(k)] = plane_partition_count(k);
    // r-fold convolution of the single-color counts
    std::vector<Bigint> acc(single.size(), Bigint(0));
    acc[0] = 1;
    for (unsigned c = 0; c < r; ++c) {
        std::vector<Bigint> next(single.size(), Bigint(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (size_t j = 0; i + j < next.size(); ++j) next[i + j] += acc[i] * single[j];
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(n)];
}

} // namespace quotdt
