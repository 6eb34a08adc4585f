#include "dgv/simplicial_io.hpp"

#include "dgv/dg_io.hpp"

#include <json.hpp>

namespace dgv {

using json = nlohmann::ordered_json;

std::string simplicial_to_json(SimplicialSetView& view, int max_level) {
    json j;
    json levels = json::array();
    for (int n = 0; n <= max_level; ++n) {
        json l = json::array();
        for (int x = 0; x < view.size(n); ++x) l.push_back(view.key(n, x));
        levels.push_back(l);
    }
    j["levels"] = levels;
    json d = json::array();
    for (int n = 1; n <= max_level; ++n) {
        json per_i = json::array();
        for (int i = 0; i <= n; ++i) {
            json m = json::object();
            for (int x = 0; x < view.size(n); ++x)
                m[view.key(n, x)] = view.key(n - 1, view.face(n, i, x));
            per_i.push_back(m);
        }
        d.push_back(per_i);
    }
    j["d"] = d;
    json s = json::array();
    for (int n = 0; n < max_level; ++n) {  // degeneracies that stay inside the truncation
        json per_i = json::array();
        for (int i = 0; i <= n; ++i) {
            json m = json::object();
            for (int x = 0; x < view.size(n); ++x)
                m[view.key(n, x)] = view.key(n + 1, view.degeneracy(n, i, x));
            per_i.push_back(m);
        }
        s.push_back(per_i);
    }
    j["s"] = s;
    return j.dump(2) + "\n";
}

std::shared_ptr<TabulatedView> simplicial_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* f : {"levels", "d", "s"})
        if (!j.contains(f)) throw SchemaError(std::string("missing field '") + f + "'");
    TabulatedView::Data data;
    for (const auto& l : j["levels"]) {
        std::vector<std::string> keys;
        for (const auto& k : l) keys.push_back(k.get<std::string>());
        data.levels.push_back(keys);
    }
    auto read_ops = [&](const char* field) {
        std::vector<std::vector<std::map<std::string, std::string>>> out;
        for (const auto& per_level : j[field]) {
            std::vector<std::map<std::string, std::string>> per_i;
            for (const auto& m : per_level) {
                std::map<std::string, std::string> mm;
                for (const auto& [k, v] : m.items()) mm[k] = v.get<std::string>();
                per_i.push_back(mm);
            }
            out.push_back(per_i);
        }
        return out;
    };
    data.d = read_ops("d");
    data.s = read_ops("s");
    return std::make_shared<TabulatedView>(std::move(data));
}

}  // namespace dgv

namespace dgv {

std::string bisimplicial_to_json(BisimplicialSetView& view, int P, int Q) {
    json j;
    json levels = json::array();
    for (int p = 0; p <= P; ++p) {
        json row = json::array();
        for (int q = 0; q <= Q; ++q) {
            json l = json::array();
            for (int x = 0; x < view.size(p, q); ++x) l.push_back(view.key(p, q, x));
            row.push_back(l);
        }
        levels.push_back(row);
    }
    j["levels"] = levels;
    auto slot = [](int p, int q, int i) {
        return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(i);
    };
    json dh = json::object(), sh = json::object(), dv = json::object(), sv = json::object();
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) {
            for (int i = 0; i <= p && p >= 1; ++i) {
                json m = json::object();
                for (int x = 0; x < view.size(p, q); ++x)
                    m[view.key(p, q, x)] = view.key(p - 1, q, view.face_h(p, q, i, x));
                dh[slot(p, q, i)] = m;
            }
            for (int j2 = 0; j2 <= q && q >= 1; ++j2) {
                json m = json::object();
                for (int x = 0; x < view.size(p, q); ++x)
                    m[view.key(p, q, x)] = view.key(p, q - 1, view.face_v(p, q, j2, x));
                dv[slot(p, q, j2)] = m;
            }
            if (p + 1 <= P)
                for (int i = 0; i <= p; ++i) {
                    json m = json::object();
                    for (int x = 0; x < view.size(p, q); ++x)
                        m[view.key(p, q, x)] = view.key(p + 1, q, view.deg_h(p, q, i, x));
                    sh[slot(p, q, i)] = m;
                }
            if (q + 1 <= Q)
                for (int j2 = 0; j2 <= q; ++j2) {
                    json m = json::object();
                    for (int x = 0; x < view.size(p, q); ++x)
                        m[view.key(p, q, x)] = view.key(p, q + 1, view.deg_v(p, q, j2, x));
                    sv[slot(p, q, j2)] = m;
                }
        }
    j["dh"] = dh;
    j["sh"] = sh;
    j["dv"] = dv;
    j["sv"] = sv;
    return j.dump(2) + "\n";
}

std::shared_ptr<TabulatedBisView> bisimplicial_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* f : {"levels", "dh", "sh", "dv", "sv"})
        if (!j.contains(f)) throw SchemaError(std::string("missing field '") + f + "'");
    TabulatedBisView::Data data;
    for (const auto& row : j["levels"]) {
        std::vector<std::vector<std::string>> r;
        for (const auto& l : row) {
            std::vector<std::string> keys;
            for (const auto& k : l) keys.push_back(k.get<std::string>());
            r.push_back(keys);
        }
        data.levels.push_back(r);
    }
    data.P = static_cast<int>(data.levels.size()) - 1;
    data.Q = data.levels.empty() ? -1 : static_cast<int>(data.levels[0].size()) - 1;
    auto read_ops = [&](const char* field) {
        std::map<std::string, std::map<std::string, std::string>> out;
        for (const auto& [slot, m] : j[field].items()) {
            std::map<std::string, std::string> mm;
            for (const auto& [k, v] : m.items()) mm[k] = v.get<std::string>();
            out[slot] = mm;
        }
        return out;
    };
    data.dh = read_ops("dh");
    data.sh = read_ops("sh");
    data.dv = read_ops("dv");
    data.sv = read_ops("sv");
    return std::make_shared<TabulatedBisView>(std::move(data));
}

}  // namespace dgv
