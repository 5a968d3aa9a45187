#pragma once

#include <string>
#include <vector>

#include "ug/error.hpp"

namespace ug {

// A finite commutative ring given by full operation tables.
struct TabRing {
    int size = 0;
    std::vector<int> add_;  // size*size
    std::vector<int> mul_;
    std::vector<int> neg_;
    int zero = 0;
    int one = 0;

    int add(int a, int b) const { return add_[a * size + b]; }
    int mul(int a, int b) const { return mul_[a * size + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    bool operator==(const TabRing& o) const {
        return size == o.size && zero == o.zero && one == o.one && add_ == o.add_ &&
               mul_ == o.mul_ && neg_ == o.neg_;
    }
};

// Full-enumeration validation of the commutative ring axioms; throws NotARing
// with a witness. Cubic in size, intended for hand-given tables.
void validate_ring(const TabRing& r);

TabRing ring_from_tables(const std::vector<std::vector<int>>& add,
                         const std::vector<std::vector<int>>& mul, int zero, int one);
TabRing zmod(int n);

// Parses "zmod:n".
TabRing ring_from_spec(const std::string& spec);

} // namespace ug
