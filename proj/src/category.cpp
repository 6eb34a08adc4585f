#include "dgv/category.hpp"

#include <stdexcept>

namespace dgv {

void FiniteCategory::validate() const {
    for (const auto& m : mors)
        if (m.src < 0 || m.src >= n_obj() || m.tgt < 0 || m.tgt >= n_obj())
            throw std::runtime_error("category: dangling object on " + m.name);
    if (static_cast<int>(id_of_obj.size()) != n_obj())
        throw std::runtime_error("category: identity map incomplete");
    for (int a = 0; a < n_obj(); ++a) {
        int i = id_of_obj[a];
        if (src(i) != a || tgt(i) != a) throw std::runtime_error("category: bad identity");
    }
    for (int f = 0; f < n_mor(); ++f)
        for (int g = 0; g < n_mor(); ++g) {
            int c = comp[f][g];
            bool matching = src(f) == tgt(g);
            if (matching != (c >= 0))
                throw std::runtime_error("category: composition table does not match src/tgt");
            if (c >= 0 && (src(c) != src(g) || tgt(c) != tgt(f)))
                throw std::runtime_error("category: composite has wrong boundary");
        }
    for (int f = 0; f < n_mor(); ++f) {
        if (compose(f, id_of_obj[src(f)]) != f || compose(id_of_obj[tgt(f)], f) != f)
            throw std::runtime_error("category: identities not neutral");
    }
    for (int f = 0; f < n_mor(); ++f)
        for (int g = 0; g < n_mor(); ++g) {
            if (src(f) != tgt(g)) continue;
            for (int h = 0; h < n_mor(); ++h) {
                if (src(g) != tgt(h)) continue;
                if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                    throw std::runtime_error("category: associativity fails");
            }
        }
}

int FiniteCategory::inverse(int f) const {
    for (int g = 0; g < n_mor(); ++g)
        if (src(g) == tgt(f) && tgt(g) == src(f) &&
            compose(f, g) == id_of_obj[tgt(f)] && compose(g, f) == id_of_obj[src(f)])
            return g;
    return -1;
}

bool FiniteCategory::is_groupoid() const {
    for (int f = 0; f < n_mor(); ++f)
        if (inverse(f) < 0) return false;
    return true;
}

namespace {

void fill_comp(FiniteCategory& c) {
    c.comp.assign(c.n_mor(), std::vector<int>(c.n_mor(), -1));
}

}  // namespace

FiniteCategory discrete_category(const std::vector<std::string>& objects) {
    FiniteCategory c;
    c.objects = objects;
    for (int a = 0; a < c.n_obj(); ++a) {
        c.mors.push_back({"id_" + objects[a], a, a});
        c.id_of_obj.push_back(a);
    }
    fill_comp(c);
    for (int a = 0; a < c.n_obj(); ++a) c.comp[a][a] = a;
    c.validate();
    return c;
}

FiniteCategory group_as_category(const GroupTable& g) {
    FiniteCategory c;
    c.objects = {"*"};
    for (int i = 0; i < g.size(); ++i) c.mors.push_back({g.elements[i], 0, 0});
    c.id_of_obj = {g.identity};
    fill_comp(c);
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) c.comp[a][b] = g.mul(a, b);
    c.validate();
    return c;
}

FiniteCategory pair_groupoid(const std::vector<std::string>& objects) {
    FiniteCategory c;
    c.objects = objects;
    int n = c.n_obj();
    auto idx = [&](int t, int s) { return t * n + s; };  // morphism s -> t
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) c.mors.push_back({objects[t] + "<" + objects[s], s, t});
    for (int a = 0; a < n; ++a) c.id_of_obj.push_back(idx(a, a));
    fill_comp(c);
    for (int t = 0; t < n; ++t)
        for (int m = 0; m < n; ++m)
            for (int s = 0; s < n; ++s) c.comp[idx(t, m)][idx(m, s)] = idx(t, s);
    c.validate();
    return c;
}

FiniteCategory chain_category(int n) {
    FiniteCategory c;
    for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
    // arrow j -> i for i <= j
    std::vector<std::vector<int>> at(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            at[i][j] = c.n_mor();
            c.mors.push_back({std::to_string(i) + "<" + std::to_string(j), j, i});
        }
    for (int i = 0; i <= n; ++i) c.id_of_obj.push_back(at[i][i]);
    fill_comp(c);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) c.comp[at[i][j]][at[j][k]] = at[i][k];
    c.validate();
    return c;
}

}  // namespace dgv
