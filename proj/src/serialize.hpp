#pragma once

#include <json.hpp>
#include <string>

#include "galois.hpp"
#include "induction.hpp"

namespace llc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

ParamDescriptor parse_descriptor(const std::string& text);
ParamDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const ParamDescriptor& p);

Json levi_to_json(const LeviLabel& l);
Json centralizer_to_json(const CentralizerReport& c);
Json packet_to_json(const PacketDescriptor& p);
Json reducibility_to_json(const ReducibilityReport& r);
Json infinitesimal_to_json(const std::vector<InfinitesimalEntry>& v);

// Induced representations are read with the characters of a descriptor-style label block.
InducedRep induced_from_json(const Json& j);
Json induced_to_json(const InducedRep& r);

}  // namespace llc
