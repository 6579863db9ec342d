#pragma once

#include <json.hpp>

#include "gamesem/kam.hpp"
#include "gamesem/plays.hpp"

namespace gs {

using Json = nlohmann::json;

// {nodes:[{id, parent, foLabel:[...], atomicLabel:[{rel, args}]}]}
Json toJson(const Arena& a);
Arena arenaFromJson(const Json& j);

// {node, justifier, muLinks:[[move, slot] | null], inst:[terms]}
Json toJson(const Move& m);
Move moveFromJson(const Json& j, const Arena& a);

// {moves:[...]}
Json toJson(const Seq& s);
Seq playFromJson(const Json& j, const Arena& a);

// {arena, views:[{opponent:[nodes], player: move}]}
Json toJson(const Strategy& s);
Strategy strategyFromJson(const Json& j);

Json toJson(const UvaPosition& p);
Json toJson(const PlayCheck& c);

std::string readFile(const std::string& path);

}  // namespace gs
