// The sixteen linear subspaces of F_2^3 under a fixed canonical indexing.
// A 3-bit vector p0p1p2 is encoded as the integer p0*4 + p1*2 + p2; a
// subspace is an 8-bit mask whose bit v is set iff vector v belongs to it.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvpk {

// Canonical member masks, in index order 0..15.
inline constexpr std::array<std::uint8_t, 16> kSubspaceMasks = {
    0x01,  //  0: {0}
    0x11,  //  1: <100>
    0x05,  //  2: <010>
    0x03,  //  3: <001>
    0x41,  //  4: <110>
    0x21,  //  5: <101>
    0x09,  //  6: <011>
    0x81,  //  7: <111>
    0x55,  //  8: <100,010>
    0x33,  //  9: <100,001>
    0x0f,  // 10: <010,001>
    0xc3,  // 11: <110,001>
    0x99,  // 12: <100,011>
    0xa5,  // 13: <101,010>
    0x69,  // 14: <110,101>
    0xff,  // 15: the full space
};

bool is_subspace_mask(std::uint8_t mask);

class Subspace3 {
public:
    static Subspace3 from_index(int index);
    // Requires a canonical subspace mask; throws otherwise.
    static Subspace3 from_mask(std::uint8_t mask);

    int index() const { return index_; }
    std::uint8_t mask() const { return mask_; }
    int dimension() const;
    bool contains(int vector_code) const { return (mask_ >> vector_code) & 1u; }

    std::vector<int> members() const;
    std::vector<std::string> member_strings() const;

    friend bool operator==(const Subspace3&, const Subspace3&) = default;

private:
    Subspace3(int index, std::uint8_t mask) : index_(index), mask_(mask) {}
    int index_;
    std::uint8_t mask_;
};

// XOR-closure of the generators (empty list gives the trivial subspace).
Subspace3 span(std::span<const int> generators);
Subspace3 span(std::initializer_list<int> generators);

// Canonical index of an explicitly listed subspace. The input must be
// XOR-closed and contain the zero vector; otherwise it is rejected.
int index_of(std::span<const int> vectors);
int index_of(std::initializer_list<int> vectors);

// Bitmask over subspace indices i whose T_i contains none of the listed
// vector codes.
std::uint16_t selector_excluding(std::initializer_list<int> vector_codes);

int vector_code(std::string_view bits);    // "110" -> 6
std::string vector_string(int code);       // 6 -> "110"

}  // namespace cvpk
