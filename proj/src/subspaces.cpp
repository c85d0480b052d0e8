#include "cvpk/subspaces.hpp"

#include <bit>
#include <stdexcept>

namespace cvpk {

bool is_subspace_mask(std::uint8_t mask) {
    if (!(mask & 1u)) return false;  // must contain the zero vector
    for (int a = 0; a < 8; ++a) {
        if (!((mask >> a) & 1u)) continue;
        for (int b = 0; b < 8; ++b)
            if (((mask >> b) & 1u) && !((mask >> (a ^ b)) & 1u)) return false;
    }
    return true;
}

Subspace3 Subspace3::from_index(int index) {
    if (index < 0 || index >= 16) throw std::invalid_argument("Subspace3: index out of range");
    return Subspace3(index, kSubspaceMasks[index]);
}

Subspace3 Subspace3::from_mask(std::uint8_t mask) {
    for (int i = 0; i < 16; ++i)
        if (kSubspaceMasks[i] == mask) return Subspace3(i, mask);
    throw std::invalid_argument("Subspace3: mask is not a subspace of F_2^3");
}

int Subspace3::dimension() const {
    return std::bit_width(unsigned(std::popcount(mask_))) - 1;
}

std::vector<int> Subspace3::members() const {
    std::vector<int> out;
    for (int v = 0; v < 8; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::vector<std::string> Subspace3::member_strings() const {
    std::vector<std::string> out;
    for (int v : members()) out.push_back(vector_string(v));
    return out;
}

Subspace3 span(std::span<const int> generators) {
    std::uint8_t mask = 0x01;
    for (int g : generators) {
        if (g < 0 || g >= 8) throw std::invalid_argument("span: vector code out of range");
        std::uint8_t next = mask;
        for (int v = 0; v < 8; ++v)
            if ((mask >> v) & 1u) next |= std::uint8_t(1u << (v ^ g));
        mask = next;
    }
    return Subspace3::from_mask(mask);
}

Subspace3 span(std::initializer_list<int> generators) {
    return span(std::span<const int>(generators.begin(), generators.size()));
}

int index_of(std::span<const int> vectors) {
    std::uint8_t mask = 0;
    for (int v : vectors) {
        if (v < 0 || v >= 8) throw std::invalid_argument("index_of: vector code out of range");
        mask |= std::uint8_t(1u << v);
    }
    if (!is_subspace_mask(mask)) throw std::invalid_argument("index_of: set is not a subspace");
    return Subspace3::from_mask(mask).index();
}

int index_of(std::initializer_list<int> vectors) {
    return index_of(std::span<const int>(vectors.begin(), vectors.size()));
}

std::uint16_t selector_excluding(std::initializer_list<int> vector_codes) {
    std::uint16_t sel = 0;
    for (int i = 0; i < 16; ++i) {
        bool keep = true;
        for (int v : vector_codes)
            if ((kSubspaceMasks[i] >> v) & 1u) { keep = false; break; }
        if (keep) sel |= std::uint16_t(1u << i);
    }
    return sel;
}

int vector_code(std::string_view bits) {
    if (bits.size() != 3) throw std::invalid_argument("vector_code: need 3 bits");
    int code = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("vector_code: expected '0'/'1'");
        code = code * 2 + (ch - '0');
    }
    return code;
}

std::string vector_string(int code) {
    if (code < 0 || code >= 8) throw std::invalid_argument("vector_string: code out of range");
    std::string s(3, '0');
    for (int k = 0; k < 3; ++k)
        if ((code >> (2 - k)) & 1) s[k] = '1';
    return s;
}

}  // namespace cvpk
