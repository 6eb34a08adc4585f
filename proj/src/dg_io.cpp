#include "dgv/dg_io.hpp"

#include "dgv/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace dgv {

using json = nlohmann::ordered_json;

namespace {

json edges_to_json(const std::vector<DoubleGroupoid::Edge>& es,
                   const std::vector<std::string>& objects) {
    json a = json::array();
    for (const auto& e : es)
        a.push_back({{"id", e.id}, {"src", objects[e.src]}, {"tgt", objects[e.tgt]}});
    return a;
}

json table_to_json(const std::vector<std::vector<int>>& t,
                   const std::function<std::string(int)>& name) {
    json a = json::array();
    for (size_t l = 0; l < t.size(); ++l)
        for (size_t r = 0; r < t[l].size(); ++r)
            if (t[l][r] >= 0)
                a.push_back({name(static_cast<int>(l)), name(static_cast<int>(r)), name(t[l][r])});
    return a;
}

}  // namespace

std::string dg_to_json(const DoubleGroupoid& g) {
    json j;
    j["objects"] = g.objects;
    j["hmors"] = edges_to_json(g.hmors, g.objects);
    j["vmors"] = edges_to_json(g.vmors, g.objects);
    json sq = json::array();
    for (const auto& s : g.squares)
        sq.push_back({{"id", s.id},
                      {"sh", g.vmors[s.sh].id},
                      {"th", g.vmors[s.th].id},
                      {"sv", g.hmors[s.sv].id},
                      {"tv", g.hmors[s.tv].id}});
    j["squares"] = sq;
    auto hname = [&](int f) { return g.hmors[f].id; };
    auto vname = [&](int u) { return g.vmors[u].id; };
    auto sname = [&](int a) { return g.squares[a].id; };
    j["comp_h_mor"] = table_to_json(g.comp_h_mor, hname);
    j["comp_v_mor"] = table_to_json(g.comp_v_mor, vname);
    j["comp_h_sq"] = table_to_json(g.comp_h_sq, sname);
    j["comp_v_sq"] = table_to_json(g.comp_v_sq, sname);
    json ih = json::object(), iv = json::object(), ihs = json::object(), ivs = json::object();
    for (int a = 0; a < g.n_obj(); ++a) {
        ih[g.objects[a]] = hname(g.id_h_obj[a]);
        iv[g.objects[a]] = vname(g.id_v_obj[a]);
    }
    for (int u = 0; u < g.n_v(); ++u) ihs[vname(u)] = sname(g.id_h_sq[u]);
    for (int f = 0; f < g.n_h(); ++f) ivs[hname(f)] = sname(g.id_v_sq[f]);
    j["id_h_obj"] = ih;
    j["id_v_obj"] = iv;
    j["id_h_sq"] = ihs;
    j["id_v_sq"] = ivs;
    j["flags"] = {{"double_category_ok", g.double_category_ok}};
    return j.dump(2) + "\n";
}

DoubleGroupoid dg_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
        return j[field];
    };

    DoubleGroupoid g;
    std::map<std::string, int> obj_ix, h_ix, v_ix, s_ix;
    for (const auto& o : need("objects")) {
        std::string name = o.get<std::string>();
        if (obj_ix.count(name)) throw SchemaError("duplicate object id '" + name + "'");
        obj_ix[name] = g.n_obj();
        g.objects.push_back(name);
    }
    auto read_edges = [&](const char* field, std::map<std::string, int>& ix,
                          std::vector<DoubleGroupoid::Edge>& out) {
        for (const auto& e : need(field)) {
            for (const char* k : {"id", "src", "tgt"})
                if (!e.contains(k))
                    throw SchemaError(std::string(field) + " entry missing '" + k + "'");
            std::string id = e["id"].get<std::string>();
            if (ix.count(id)) throw SchemaError("duplicate id '" + id + "' in " + field);
            auto find_obj = [&](const std::string& o) {
                auto it = obj_ix.find(o);
                if (it == obj_ix.end())
                    throw SchemaError("dangling object id '" + o + "' on " + field + " '" + id + "'");
                return it->second;
            };
            ix[id] = static_cast<int>(out.size());
            out.push_back({id, find_obj(e["src"].get<std::string>()), find_obj(e["tgt"].get<std::string>())});
        }
    };
    read_edges("hmors", h_ix, g.hmors);
    read_edges("vmors", v_ix, g.vmors);
    auto find_in = [&](std::map<std::string, int>& ix, const std::string& id, const std::string& what) {
        auto it = ix.find(id);
        if (it == ix.end()) throw SchemaError("dangling " + what + " id '" + id + "'");
        return it->second;
    };
    for (const auto& e : need("squares")) {
        for (const char* k : {"id", "sh", "th", "sv", "tv"})
            if (!e.contains(k)) throw SchemaError(std::string("squares entry missing '") + k + "'");
        std::string id = e["id"].get<std::string>();
        if (s_ix.count(id)) throw SchemaError("duplicate square id '" + id + "'");
        s_ix[id] = g.n_sq();
        g.squares.push_back({id,
                             find_in(v_ix, e["sh"].get<std::string>(), "vmor"),
                             find_in(v_ix, e["th"].get<std::string>(), "vmor"),
                             find_in(h_ix, e["sv"].get<std::string>(), "hmor"),
                             find_in(h_ix, e["tv"].get<std::string>(), "hmor")});
    }
    auto read_table = [&](const char* field, std::map<std::string, int>& ix, int n,
                          const std::string& what) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
        for (const auto& row : need(field)) {
            if (!row.is_array() || row.size() != 3)
                throw SchemaError(std::string(field) + " entries must be [left,right,result]");
            int l = find_in(ix, row[0].get<std::string>(), what);
            int r = find_in(ix, row[1].get<std::string>(), what);
            int c = find_in(ix, row[2].get<std::string>(), what);
            t[l][r] = c;
        }
        return t;
    };
    g.comp_h_mor = read_table("comp_h_mor", h_ix, g.n_h(), "hmor");
    g.comp_v_mor = read_table("comp_v_mor", v_ix, g.n_v(), "vmor");
    g.comp_h_sq = read_table("comp_h_sq", s_ix, g.n_sq(), "square");
    g.comp_v_sq = read_table("comp_v_sq", s_ix, g.n_sq(), "square");
    auto read_map = [&](const char* field, std::map<std::string, int>& dom,
                        std::map<std::string, int>& ran, int n, const std::string& what) {
        std::vector<int> m(n, -1);
        for (const auto& [k, v] : need(field).items())
            m[find_in(dom, k, what + " (domain)")] = find_in(ran, v.get<std::string>(), what);
        for (int i = 0; i < n; ++i)
            if (m[i] < 0) throw SchemaError(std::string(field) + " incomplete");
        return m;
    };
    g.id_h_obj = read_map("id_h_obj", obj_ix, h_ix, g.n_obj(), "id_h_obj");
    g.id_v_obj = read_map("id_v_obj", obj_ix, v_ix, g.n_obj(), "id_v_obj");
    g.id_h_sq = read_map("id_h_sq", v_ix, s_ix, g.n_v(), "id_h_sq");
    g.id_v_sq = read_map("id_v_sq", h_ix, s_ix, g.n_h(), "id_v_sq");
    if (j.contains("flags") && j["flags"].contains("double_category_ok"))
        g.double_category_ok = j["flags"]["double_category_ok"].get<bool>();

    // partial tables must be complete on matching pairs
    auto complete = [&](const std::vector<std::vector<int>>& t, auto src, auto tgt,
                        const std::string& field, const auto& names) {
        for (size_t l = 0; l < t.size(); ++l)
            for (size_t r = 0; r < t[l].size(); ++r)
                if (src(static_cast<int>(l)) == tgt(static_cast<int>(r)) && t[l][r] < 0)
                    throw SchemaError("partial table incomplete: " + field + " lacks (" +
                                      names(static_cast<int>(l)) + ", " + names(static_cast<int>(r)) + ")");
    };
    complete(g.comp_h_mor, [&](int f) { return g.hsrc(f); }, [&](int f) { return g.htgt(f); },
             "comp_h_mor", [&](int f) { return g.hmors[f].id; });
    complete(g.comp_v_mor, [&](int u) { return g.vsrc(u); }, [&](int u) { return g.vtgt(u); },
             "comp_v_mor", [&](int u) { return g.vmors[u].id; });
    complete(g.comp_h_sq, [&](int a) { return g.sh(a); }, [&](int a) { return g.th(a); },
             "comp_h_sq", [&](int a) { return g.squares[a].id; });
    complete(g.comp_v_sq, [&](int a) { return g.sv(a); }, [&](int a) { return g.tv(a); },
             "comp_v_sq", [&](int a) { return g.squares[a].id; });
    return g;
}

void save_dg(const DoubleGroupoid& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << dg_to_json(g);
}

DoubleGroupoid load_dg(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return dg_from_json(ss.str());
}

DoubleGroupoid load_dg_input(const std::string& spec) {
    if (spec.rfind("gen:", 0) == 0) return build_catalog(spec.substr(4));
    if (spec == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return dg_from_json(ss.str());
    }
    return load_dg(spec);
}

}  // namespace dgv
