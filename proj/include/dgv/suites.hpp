#pragma once

#include "dgv/catalog.hpp"
#include "dgv/double_nerve.hpp"
#include "dgv/reflection.hpp"

#include <string>

namespace dgv {

// The full verification run behind `verify theorems`: Theorem 5.1 over the
// whole catalog, Lemma 5.2, Theorem 5.3, the Theorem 6.3 round trips, and the
// Theorem 6.5 two-type comparisons. Output is deterministic (byte-identical
// across runs for identical inputs).
struct TheoremsRun {
    struct Item {
        std::string suite, subject;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool ok() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    std::string to_text() const;
    std::string to_json() const;
};

TheoremsRun verify_theorems();

}  // namespace dgv
