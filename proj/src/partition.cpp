#include "spinsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spinsym {

namespace {

void check_shape(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { check_shape(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { check_shape(parts_); }

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::strict(std::vector<int> parts) {
    Partition p(std::move(parts));
    if (!p.is_strict()) {
        throw std::invalid_argument("not a strict partition: " + p.to_string());
    }
    return p;
}

Partition Partition::odd(std::vector<int> parts) {
    Partition p(std::move(parts));
    if (!p.is_odd()) {
        throw std::invalid_argument("not an odd partition: " + p.to_string());
    }
    return p;
}

bool Partition::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 1; });
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    // reversed on purpose: larger sequences sort first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trimmed(text);
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trimmed(text.substr(start, comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int n_stat(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.length(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

mpz_class z_factor(const Partition& p) {
    mpz_class z = 1;
    std::size_t i = 0;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i]) ++j;
        const auto m = static_cast<unsigned long>(j - i);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
        z *= fact * power;
        i = j;
    }
    return z;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (weight(a) != weight(b)) return false;
    int sa = 0, sb = 0;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.length() ? a[i] : 0;
        sb += i < b.length() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

Partition remove_part(const Partition& p, std::size_t i) {
    if (i < 1 || i > p.length()) {
        throw std::out_of_range("remove_part: index " + std::to_string(i) + " out of range for (" +
                                p.to_string() + ")");
    }
    std::vector<int> parts = p.parts();
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return Partition(std::move(parts));
}

Partition union_sorted(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

int epsilon(const Partition& p) {
    return (weight(p) - static_cast<int>(p.length())) % 2 == 0 ? 0 : 1;
}

Partition add_to_first(const Partition& p, int r) {
    if (p.empty()) return r > 0 ? Partition{r} : Partition{};
    std::vector<int> parts = p.parts();
    parts[0] += r;
    return Partition(std::move(parts));
}

Partition prepend(int first, const Partition& p) {
    std::vector<int> parts{first};
    parts.insert(parts.end(), p.begin(), p.end());
    return Partition(std::move(parts));
}

namespace {

// Parts bounded by max_part, emitted in decreasing
// lexicographic order.
void enumerate_rec(int remaining, int max_part, bool distinct, bool odd_only,
                   std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (odd_only && part % 2 == 0) continue;
        current.push_back(part);
        enumerate_rec(remaining - part, distinct ? part - 1 : part, distinct, odd_only, current, out);
        current.pop_back();
    }
}

std::vector<Partition> enumerate_impl(int n, bool distinct, bool odd_only) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, n, distinct, odd_only, current, out);
    return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) { return enumerate_impl(n, false, false); }
std::vector<Partition> enumerate_strict(int n) { return enumerate_impl(n, true, false); }
std::vector<Partition> enumerate_odd(int n) { return enumerate_impl(n, false, true); }

std::vector<Partition> index_subpartitions(const Partition& p, int i) {
    std::vector<Partition> out;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (remaining == 0) {
            out.emplace_back(chosen);
            return;
        }
        if (pos == p.length()) return;
        // include position pos
        if (p[pos] <= remaining) {
            chosen.push_back(p[pos]);
            rec(pos + 1, remaining - p[pos]);
            chosen.pop_back();
        }
        rec(pos + 1, remaining);
    };
    if (i < 0) return out;
    rec(0, i);
    return out;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    const std::size_t len = std::max(inner.length(), outer.length());
    auto at = [](const Partition& p, std::size_t i) { return i < p.length() ? p[i] : 0; };
    for (std::size_t i = 0; i < len; ++i) {
        if (at(outer, i) < at(inner, i)) return false;
        if (at(outer, i + 1) > at(inner, i)) return false;
    }
    return true;
}

int strip_a_stat(const Partition& inner, const Partition& outer) {
    std::set<int> columns;
    for (std::size_t i = 0; i < outer.length(); ++i) {
        const int from = i < inner.length() ? inner[i] : 0;
        for (int c = from + 1; c <= outer[i]; ++c) columns.insert(c);
    }
    int a = 0;
    for (int c : columns) {
        if (!columns.contains(c + 1)) ++a;
    }
    return a;
}

std::vector<HorizontalStrip> horizontal_strips(const Partition& inner, int r) {
    if (r < 0) throw std::invalid_argument("strip size must be non-negative");
    std::vector<HorizontalStrip> out;
    const std::size_t rows = inner.length() + 1;
    std::vector<int> outer(rows, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int remaining) {
        if (row == rows) {
            if (remaining != 0) return;
            std::vector<int> parts(outer.begin(), outer.end());
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            Partition candidate(parts);
            if (!candidate.is_strict()) return;
            out.push_back({inner, candidate, strip_a_stat(inner, candidate)});
            return;
        }
        const int lo = row < inner.length() ? inner[row] : 0;
        const int extra_cap = row == 0 ? remaining : std::min(remaining, inner[row - 1] - lo);
        for (int extra = extra_cap; extra >= 0; --extra) {
            outer[row] = lo + extra;
            rec(row + 1, remaining - extra);
        }
    };
    rec(0, r);
    return out;
}

}  // namespace spinsym
