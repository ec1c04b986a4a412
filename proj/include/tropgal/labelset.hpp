#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tropgal/error.hpp"

namespace tropgal {

// Subset of the edge-label ground set {1..m}, m <= 64, as a bitmask.
// Label l occupies bit (l-1). Comparison order = numeric order of the mask,
// which doubles as a deterministic total order on flats of equal rank.
struct LabelSet {
    std::uint64_t bits = 0;

    static constexpr int max_labels = 64;

    static LabelSet single(int label) { return LabelSet{std::uint64_t{1} << (label - 1)}; }
    static LabelSet full(int m) {
        return LabelSet{m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1};
    }
    static LabelSet from_labels(const std::vector<int>& labels) {
        LabelSet s;
        for (int l : labels) s.add(l);
        return s;
    }

    bool contains(int label) const { return bits >> (label - 1) & 1; }
    void add(int label) {
        if (label < 1 || label > max_labels)
            fail(errc::parse, "edge label " + std::to_string(label) + " outside supported range 1..64");
        bits |= std::uint64_t{1} << (label - 1);
    }
    void remove(int label) { bits &= ~(std::uint64_t{1} << (label - 1)); }

    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    int min_label() const { return std::countr_zero(bits) + 1; }

    bool subset_of(LabelSet o) const { return (bits & ~o.bits) == 0; }
    bool intersects(LabelSet o) const { return (bits & o.bits) != 0; }

    LabelSet operator|(LabelSet o) const { return LabelSet{bits | o.bits}; }
    LabelSet operator&(LabelSet o) const { return LabelSet{bits & o.bits}; }
    LabelSet operator-(LabelSet o) const { return LabelSet{bits & ~o.bits}; }
    LabelSet& operator|=(LabelSet o) { bits |= o.bits; return *this; }

    bool operator==(const LabelSet&) const = default;
    auto operator<=>(const LabelSet&) const = default;

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b;) {
            int i = std::countr_zero(b);
            out.push_back(i + 1);
            b &= b - 1;
        }
        return out;
    }

    // "1.5.12" style key fragment, unambiguous for any label size.
    std::string key() const {
        std::string out;
        for (int l : labels()) {
            if (!out.empty()) out += '.';
            out += std::to_string(l);
        }
        return out;
    }

    // "145" when all labels are single digits, "1,5,12" otherwise (display only).
    std::string pretty() const {
        auto ls = labels();
        bool wide = false;
        for (int l : ls)
            if (l > 9) wide = true;
        std::string out;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (wide && i) out += ',';
            out += std::to_string(ls[i]);
        }
        return out;
    }
};

} // namespace tropgal
