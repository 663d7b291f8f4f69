#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace uniform_kl {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from a raw sequence. Trailing zeros are dropped; any
    /// other non-positive entry or an increase yields std::nullopt, which stands
    /// for the zero representation.
    static std::optional<Partition> from_sequence(const std::vector<long>& seq);
    /// Like from_sequence but throws std::invalid_argument on invalid input.
    static Partition of(const std::vector<long>& seq);

    /// [first, 1^ones], [first, 2^twos]: the shapes used throughout; nullopt if not a partition.
    static std::optional<Partition> hook(long first, long ones);
    static std::optional<Partition> two_column_tail(long first, long twos);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// Row r length, zero past the last row.
    int row(int r) const { return r < length() ? parts_[static_cast<size_t>(r)] : 0; }
    bool empty() const { return parts_.empty(); }

    /// Cell-wise containment of Young diagrams.
    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    /// "[3,1,1]"; "[]" for the empty partition.
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<int> parts);
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
public:
    /// Throws std::invalid_argument unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

private:
    Partition outer_;
    Partition inner_;
};

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// One edge-connected component of a skew diagram.
struct SkewComponent {
    std::vector<Cell> cells;  // row-major order
    int row_begin = 0, row_end = 0;  // inclusive bounds
    int col_begin = 0, col_end = 0;
    int height() const { return row_end - row_begin + 1; }
    int width() const { return col_end - col_begin + 1; }
    bool is_rectangle() const { return static_cast<int>(cells.size()) == height() * width(); }
};

/// Connected components ordered by their first cell in row-major order.
std::vector<SkewComponent> skew_shape_components(const SkewShape& shape);

}  // namespace uniform_kl
