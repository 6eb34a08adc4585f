#pragma once

#include "dgv/bisimplicial.hpp"
#include "dgv/simplicial.hpp"

#include <memory>
#include <string>

namespace dgv {

// {"levels":[[ids]], "d":[level][i]{id:id}, "s":[level][i]{id:id}}
// d[m] holds the faces of level m+1; s[m] the degeneracies of level m.
std::string simplicial_to_json(SimplicialSetView& view, int max_level);
std::shared_ptr<TabulatedView> simplicial_from_json(const std::string& text);

// Bisimplicial mirror: {"levels":[p][q][ids], "dh":{"p,q,i":{id:id}}, "sh","dv","sv"}.
// Degeneracies that would leave the truncation are omitted.
std::string bisimplicial_to_json(BisimplicialSetView& view, int P, int Q);
std::shared_ptr<TabulatedBisView> bisimplicial_from_json(const std::string& text);

}  // namespace dgv
