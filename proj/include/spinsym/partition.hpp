#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spinsym {

// A weakly decreasing sequence of positive integers. The empty sequence is
// the partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Builds a partition from arbitrary positive parts, sorting them.
    static Partition from_unsorted(std::vector<int> parts);
    // Validating constructors for the two refinements.
    static Partition strict(std::vector<int> parts);
    static Partition odd(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    // First part, or 0 for the empty partition.
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    bool is_strict() const;
    bool is_odd() const;

    // Number of parts equal to i.
    int multiplicity(int i) const;

    // Canonical table order: decreasing lexicographic. `a < b` means a comes
    // first, i.e. a is lexicographically larger.
    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

    // "4,2,1"; the empty partition renders as "".
    std::string to_string() const;
    // Parses the comma-separated text form; throws std::invalid_argument.
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

int weight(const Partition& p);
int n_stat(const Partition& p);
// prod_i i^{m_i} m_i!
mpz_class z_factor(const Partition& p);
// True iff |a| == |b| and every partial sum of a is at most that of b.
bool dominance_leq(const Partition& a, const Partition& b);
// Deletes the i-th part (1-based). Throws std::out_of_range.
Partition remove_part(const Partition& p, std::size_t i);
Partition union_sorted(const Partition& a, const Partition& b);
// Parity of |p| - l(p).
int epsilon(const Partition& p);
// (p_1 + r, p_2, ...)
Partition add_to_first(const Partition& p, int r);
// (first, p_1, p_2, ...); first must be at least p_1.
Partition prepend(int first, const Partition& p);

// Decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_strict(int n);
std::vector<Partition> enumerate_odd(int n);

// One entry per subset of positions of p whose parts sum to i, so repeated
// parts yield repeated entries.
std::vector<Partition> index_subpartitions(const Partition& p, int i);

struct HorizontalStrip {
    Partition inner;
    Partition outer;
    int a_stat = 0;
};

// Column statistic of outer/inner: columns holding a strip box whose right
// neighbour column holds none. Diagrams are unshifted.
int strip_a_stat(const Partition& inner, const Partition& outer);
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

// All strict outer with outer/inner a horizontal strip of r boxes.
std::vector<HorizontalStrip> horizontal_strips(const Partition& inner, int r);

}  // namespace spinsym
