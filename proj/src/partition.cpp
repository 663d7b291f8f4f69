#include "uniform_kl/partition.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uniform_kl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) size_ += p;
}

std::optional<Partition> Partition::from_sequence(const std::vector<long>& seq) {
    size_t len = seq.size();
    while (len > 0 && seq[len - 1] == 0) --len;
    std::vector<int> parts;
    parts.reserve(len);
    for (size_t r = 0; r < len; ++r) {
        if (seq[r] <= 0) return std::nullopt;
        if (r > 0 && seq[r] > seq[r - 1]) return std::nullopt;
        parts.push_back(static_cast<int>(seq[r]));
    }
    return Partition(std::move(parts));
}

Partition Partition::of(const std::vector<long>& seq) {
    auto p = from_sequence(seq);
    if (!p) throw std::invalid_argument("not a partition");
    return *p;
}

std::optional<Partition> Partition::hook(long first, long ones) {
    if (ones < 0) return std::nullopt;
    std::vector<long> seq{first};
    seq.insert(seq.end(), static_cast<size_t>(ones), 1L);
    return from_sequence(seq);
}

std::optional<Partition> Partition::two_column_tail(long first, long twos) {
    if (twos < 0) return std::nullopt;
    std::vector<long> seq{first};
    seq.insert(seq.end(), static_cast<size_t>(twos), 2L);
    return from_sequence(seq);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 0; r < inner.length(); ++r)
        if (inner.row(r) > row(r)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c(static_cast<size_t>(row(0)), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < parts_.size(); ++r) os << (r ? "," : "") << parts_[r];
    os << "]";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<long> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition::of(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("SkewShape: inner not contained in outer");
}

std::vector<SkewComponent> skew_shape_components(const SkewShape& shape) {
    std::set<Cell> remaining;
    for (int r = 0; r < shape.outer().length(); ++r)
        for (int c = shape.inner().row(r); c < shape.outer().row(r); ++c) remaining.insert({r, c});

    std::vector<SkewComponent> out;
    while (!remaining.empty()) {
        SkewComponent comp;
        std::vector<Cell> stack{*remaining.begin()};
        remaining.erase(remaining.begin());
        std::set<Cell> seen;
        while (!stack.empty()) {
            Cell cell = stack.back();
            stack.pop_back();
            seen.insert(cell);
            for (Cell nb : {Cell{cell.row - 1, cell.col}, Cell{cell.row + 1, cell.col},
                            Cell{cell.row, cell.col - 1}, Cell{cell.row, cell.col + 1}}) {
                auto it = remaining.find(nb);
                if (it == remaining.end()) continue;
                remaining.erase(it);
                stack.push_back(nb);
            }
        }
        comp.cells.assign(seen.begin(), seen.end());
        comp.row_begin = comp.cells.front().row;
        comp.row_end = comp.cells.back().row;
        comp.col_begin = comp.col_end = comp.cells.front().col;
        for (const auto& c : comp.cells) {
            comp.col_begin = std::min(comp.col_begin, c.col);
            comp.col_end = std::max(comp.col_end, c.col);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace uniform_kl
