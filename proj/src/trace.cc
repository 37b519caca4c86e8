//
// Copyright 2026 The NodeLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "nodeldp/trace.h"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace nodeldp {

const char* actor_role_name(ActorRole role) {
  switch (role) {
    case ActorRole::kUser: return "user";
    case ActorRole::kServer: return "server";
    case ActorRole::kKeyHolder: return "keyholder";
    case ActorRole::kPeer: return "peer";
    case ActorRole::kHarness: return "harness";
  }
  return "unknown";
}

void Trace::write_jsonl(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace: " + path);
  for (const auto& ev : events_) {
    out << "{\"event\":\"" << ev.event << "\",\"round\":" << ev.round
        << ",\"actor\":\"" << actor_role_name(ev.actor)
        << "\",\"payload_size\":" << ev.payload_size << "}\n";
  }
}

namespace {
bool private_tag(PayloadTag tag) {
  switch (tag) {
    case PayloadTag::kRawDegree:
    case PayloadTag::kRawLoss:
    case PayloadTag::kPairwiseSeed:
    case PayloadTag::kOpeKey:
    case PayloadTag::kEdgeDelete:
      return true;
    default:
      return false;
  }
}
}  // namespace

namespace {
uint64_t double_bits(double x) {
  uint64_t out;
  std::memcpy(&out, &x, sizeof(out));
  return out;
}
}  // namespace

InformationFlowReport check_server_view(const Trace& trace,
                                        bool strict_values) {
  std::unordered_set<uint64_t> secret_words;
  std::unordered_set<uint64_t> raw_values;
  for (const auto& ev : trace.events()) {
    if (ev.server_visible) continue;
    if (ev.tag == PayloadTag::kPairwiseSeed || ev.tag == PayloadTag::kOpeKey) {
      if (ev.word != 0) secret_words.insert(ev.word);
    } else if (ev.tag == PayloadTag::kRawDegree ||
               ev.tag == PayloadTag::kRawLoss) {
      raw_values.insert(double_bits(ev.num));
    }
  }

  InformationFlowReport report;
  for (const auto& ev : trace.events()) {
    if (!ev.server_visible) continue;
    if (private_tag(ev.tag)) {
      report.ok = false;
      report.violation = "server-visible event '" + ev.event +
                         "' carries a private payload tag";
      return report;
    }
    if (ev.word != 0 && secret_words.count(ev.word)) {
      report.ok = false;
      report.violation = "server-visible event '" + ev.event +
                         "' carries a secret word value";
      return report;
    }
    // Per-user published reals must not be bit-identical to any private
    // raw value; the noise makes a coincidence a probability-zero event.
    if (strict_values &&
        (ev.tag == PayloadTag::kNoisyLoss ||
         ev.tag == PayloadTag::kNoisyDegree) &&
        raw_values.count(double_bits(ev.num))) {
      report.ok = false;
      report.violation = "server-visible event '" + ev.event +
                         "' repeats a private raw value";
      return report;
    }
  }
  return report;
}

}  // namespace nodeldp
