#include "dgv/group.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace dgv {

void GroupTable::validate() {
    int n = size();
    if (n == 0) throw std::runtime_error("group: empty element set");
    if (static_cast<int>(op.size()) != n) throw std::runtime_error("group: op table not square");
    for (const auto& row : op) {
        if (static_cast<int>(row.size()) != n) throw std::runtime_error("group: op table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::runtime_error("group: op entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            throw std::runtime_error("group: identity not neutral at " + elements[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::runtime_error("group: associativity fails");
    if (inv.empty()) {
        inv.assign(n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (mul(a, b) == identity && mul(b, a) == identity) inv[a] = b;
    }
    for (int a = 0; a < n; ++a) {
        if (inv[a] < 0) throw std::runtime_error("group: no inverse for " + elements[a]);
        if (mul(a, inv[a]) != identity || mul(inv[a], a) != identity)
            throw std::runtime_error("group: bad inverse for " + elements[a]);
    }
}

bool GroupTable::is_abelian() const {
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string GroupTable::to_json() const {
    std::ostringstream os;
    os << "{\"elements\":[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << "\"" << elements[i] << "\"";
    os << "],\"op\":[";
    for (int a = 0; a < size(); ++a) {
        os << (a ? "," : "") << "[";
        for (int b = 0; b < size(); ++b) os << (b ? "," : "") << op[a][b];
        os << "]";
    }
    os << "],\"identity\":\"" << elements[identity] << "\",\"inv\":{";
    for (int a = 0; a < size(); ++a)
        os << (a ? "," : "") << "\"" << elements[a] << "\":\"" << elements[inv[a]] << "\"";
    os << "}}";
    return os.str();
}

GroupTable cyclic_group(int n) {
    if (n < 1) throw std::runtime_error("cyclic_group: order must be >= 1");
    GroupTable g;
    for (int i = 0; i < n; ++i) g.elements.push_back("g" + std::to_string(i));
    g.op.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.op[a][b] = (a + b) % n;
    g.identity = 0;
    g.validate();
    return g;
}

GroupTable trivial_group() { return cyclic_group(1); }

GroupTable symmetric_group_3() {
    // permutations of {0,1,2} in lexicographic one-line order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    GroupTable g;
    for (const auto& q : perms) {
        std::string name = "p";
        for (int v : q) name += std::to_string(v);
        g.elements.push_back(name);
    }
    int n = static_cast<int>(perms.size());
    g.op.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            g.op[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    g.identity = 0;
    g.validate();
    return g;
}

namespace {

// Orbit of the identity under a generating prefix; used to pick generators.
std::vector<int> closure(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(g.size(), 0);
    std::vector<int> out{g.identity};
    in[g.identity] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (int x : gens) {
            int y = g.mul(out[i], x);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    return out;
}

int element_order(const GroupTable& g, int a) {
    int x = a, n = 1;
    while (x != g.identity) {
        x = g.mul(x, a);
        ++n;
    }
    return n;
}

struct IsoSearch {
    const GroupTable& a;
    const GroupTable& b;
    std::vector<int> gens;          // generators of a
    std::vector<int> order_of_gen;  // their orders
    std::vector<int> map;           // partial map a -> b, -1 unknown

    bool complete() const {
        for (int x = 0; x < a.size(); ++x)
            if (map[x] == -1) return false;
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
        return true;
    }

    bool extend(size_t gi) {
        if (gi == gens.size()) return complete();
        int g = gens[gi];
        for (int cand = 0; cand < b.size(); ++cand) {
            if (element_order(b, cand) != order_of_gen[gi]) continue;
            std::vector<int> saved = map;
            if (assign(g, cand) && extend(gi + 1)) return true;
            map = saved;
        }
        return false;
    }

    // Propagates map[g]=h through all products with already-mapped elements.
    bool assign(int g, int h) {
        if (map[g] != -1) return map[g] == h;
        for (int x = 0; x < a.size(); ++x)
            if (x != g && map[x] == h) return false;
        map[g] = h;
        for (int x = 0; x < a.size(); ++x) {
            if (map[x] == -1) continue;
            int p1 = a.mul(x, g), p2 = a.mul(g, x);
            if (!assign(p1, b.mul(map[x], h))) return false;
            if (!assign(p2, b.mul(h, map[x]))) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch s{a, b, {}, {}, std::vector<int>(a.size(), -1)};
    // greedy generating set
    std::vector<int> have{a.identity};
    while (static_cast<int>(have.size()) < a.size()) {
        for (int x = 0; x < a.size(); ++x)
            if (std::find(have.begin(), have.end(), x) == have.end()) {
                s.gens.push_back(x);
                break;
            }
        have = closure(a, s.gens);
    }
    for (int g : s.gens) s.order_of_gen.push_back(element_order(a, g));
    s.map[a.identity] = b.identity;
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

bool isomorphic(const GroupTable& a, const GroupTable& b) {
    return find_isomorphism(a, b).has_value();
}

GroupTable parse_group(const std::string& name) {
    std::string s;
    for (char c : name)
        if (c != '/' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "s3") return symmetric_group_3();
    if (!s.empty() && s[0] == 'z') {
        int n = std::stoi(s.substr(1));
        return cyclic_group(n);
    }
    throw std::runtime_error("unknown group name: " + name);
}

}  // namespace dgv
