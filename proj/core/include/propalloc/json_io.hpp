#pragma once

#include <string>
#include <string_view>

#include "propalloc/allocation.hpp"
#include "propalloc/instance.hpp"
#include "propalloc/scaling.hpp"
#include "propalloc/twocap.hpp"

// JSON documents. Writers emit compact JSON with keys in a fixed order.
// Readers reject unknown keys and throw ParseError (with byte offset when
// the text itself is malformed) or ValidationError.
namespace propalloc::json {

/// {"left":[{"id":..,"supply":..}],"right":[{"id":..,"capacity":..}],"edges":[[l,r],..]}
std::string write_instance(const Instance& g);
RawInstance parse_instance_document(std::string_view text);
Instance read_instance(std::string_view text);

/// {"x":[["i1","j1",0.5],..],"value":1.5}
std::string write_allocation(const Instance& g, const Allocation& x);
Allocation read_allocation(const Instance& g, std::string_view text);

/// {"ranks":{"j1":2,..},"weights":{"j1":1.0,..}}
std::string write_strategy(const Instance& g, const RankedStrategy& s);
RankedStrategy read_strategy(const Instance& g, std::string_view text);

/// Weight file: {"j1":1.0,..} or {"weights":{"j1":1.0,..},...}. Every
/// right node must be present. `ids` lists right node ids in order.
WeightVector read_weights(const std::vector<std::string>& ids, std::string_view text);

/// {"items":[{"id":..,"c":..,"v":..}],"bins":[{"id":..,"C":..,"V":..}],"edges":[[i,b],..]}
std::string write_twocap(const TwoCapInstance& g);
TwoCapInstance read_twocap(std::string_view text);

}  // namespace propalloc::json
