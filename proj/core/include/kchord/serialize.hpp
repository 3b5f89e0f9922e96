#ifndef KCHORD_SERIALIZE_HPP
#define KCHORD_SERIALIZE_HPP

#include <string>

#include "kchord/bounds.hpp"
#include "kchord/pancyclicity.hpp"
#include "kchord/relativity.hpp"
#include "kchord/search.hpp"

namespace kchord {

// JSON emitters with frozen field names. indent < 0 emits compact JSON.

std::string to_json(const VerifyReport& r, int indent = -1);
std::string to_json(const SearchOutcome& r, int indent = -1);
std::string to_json(const BoundReport& r, int indent = -1);
std::string to_json(const CrossoverResult& r, int indent = -1);
std::string to_json(const RelativityReport& r, int indent = -1);
std::string to_json(const CycleSpectrum& s, int indent = -1);
std::string to_json(const EmpiricalMax& r, int indent = -1);

}  // namespace kchord

#endif
