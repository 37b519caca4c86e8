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

#ifndef NODELDP_TRACE_H_
#define NODELDP_TRACE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace nodeldp {

enum class ActorRole { kUser, kServer, kKeyHolder, kPeer, kHarness };

// Semantic class of the value carried by a trace event. Used by the
// information-flow checks: tags in the first group must never appear on
// server-visible events.
enum class PayloadTag {
  // Private to a user or the key holder.
  kRawDegree,
  kRawLoss,
  kPairwiseSeed,
  kOpeKey,
  kEdgeDelete,
  // Allowed in the server view.
  kNoisyLoss,
  kCiphertext,
  kAggregate,
  kNoisyDegree,
  kTheta,
  kNote,
};

struct TraceEvent {
  std::string event;
  int round = 0;  // candidate parameter k, or 0 outside selection
  ActorRole actor = ActorRole::kHarness;
  PayloadTag tag = PayloadTag::kNote;
  double num = 0.0;    // numeric payload, when the value is a real
  uint64_t word = 0;   // numeric payload, when the value is a residue
  int u = -1, v = -1;  // edge payload for deletion events
  bool server_visible = false;
  std::size_t payload_size = 0;
};

// Append-only event log for one protocol run.
class Trace {
 public:
  void append(TraceEvent ev) { events_.push_back(std::move(ev)); }
  const std::vector<TraceEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  // Line-delimited export carrying only (event, round, actor-role,
  // payload-size); payload values and node identities are withheld.
  void write_jsonl(const std::string& path) const;

 private:
  std::vector<TraceEvent> events_;
};

const char* actor_role_name(ActorRole role);

struct InformationFlowReport {
  bool ok = true;
  std::string violation;  // first offending event, when ok is false
};

// Checks the server's view of a run. Secrets are collected from the
// trace itself: word payloads of private pairwise-seed and key events,
// and real payloads of private raw-degree and raw-loss events. The check
// fails if a server-visible event carries a private tag, if a visible
// word equals a secret word, or (when strict_values is set) if a visible
// noisy-loss or noisy-degree payload is bit-identical to a private raw
// value. Disable strict_values for noise-free runs, where published
// values legitimately equal the raw ones.
InformationFlowReport check_server_view(const Trace& trace,
                                        bool strict_values = true);

}  // namespace nodeldp

#endif  // NODELDP_TRACE_H_
