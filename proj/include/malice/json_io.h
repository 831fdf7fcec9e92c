// Copyright 2026 The Malice Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MALICE_JSON_IO_H_
#define MALICE_JSON_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "malice/families.h"
#include "malice/flows.h"
#include "malice/game.h"
#include "malice/model.h"
#include "malice/oracle.h"

namespace malice {

// Serializes `doc` with every floating-point number printed to 17
// significant digits, so parsing the text back reproduces each double
// bit-exactly. Object keys keep nlohmann's (sorted) order.
std::string EmitJson(const nlohmann::json& doc, int indent = 2);

// {"links": [{"a": ..., "b": ...}, ...]}. Throws kParseError on malformed
// documents; coefficient errors surface as the Validate() codes.
Instance ParseInstance(std::string_view text);
nlohmann::json InstanceToJson(const Instance& inst);

// 64-bit FNV-1a of the canonical emitted instance, as 16 hex digits.
std::string InstanceHash(const Instance& inst);

nlohmann::json FlowToJson(const Flow& flow);
// {"alpha": ..., "mal": [...], "soc": [...]}
nlohmann::json ProfileToJson(const Profile& profile);
nlohmann::json CertificateToJson(const EquilibriumCertificate& certificate);
nlohmann::json ComReportToJson(const ComReport& report);
nlohmann::json BestResponseToJson(const BestResponseResult& result);
nlohmann::json MinimaxToJson(const MinimaxReport& report);
nlohmann::json NetworkDemoToJson(const NetworkDemoReport& report);
nlohmann::json TolerancesJson();

}  // namespace malice

#endif  // MALICE_JSON_IO_H_
