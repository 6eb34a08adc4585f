#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dgv {

// Finite group given by a full multiplication table.
struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> op;  // op[a][b]
    int identity = 0;
    std::vector<int> inv;

    int size() const { return static_cast<int>(elements.size()); }
    int mul(int a, int b) const { return op[a][b]; }

    // Throws on any violated group axiom. inv is recomputed if empty.
    void validate();
    bool is_abelian() const;
    std::string to_json() const;
};

GroupTable cyclic_group(int n);
GroupTable trivial_group();
GroupTable symmetric_group_3();

// Backtracking isomorphism search on a generating set. Intended for |G| <= 64.
std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b);
bool isomorphic(const GroupTable& a, const GroupTable& b);

// Parses Z5, Z/5, z5, s3. Throws on anything else.
GroupTable parse_group(const std::string& name);

}  // namespace dgv
