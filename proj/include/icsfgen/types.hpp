#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icsfgen {

/// Slot labels of the policy ontology. Target and ProtectedCharacteristic are
/// distinct labels in source annotations but populate a single grammar
/// non-terminal; negative and derogatory opinions share NegativeOpinion.
enum class SlotLabel {
  Target,
  ProtectedCharacteristic,
  DehumanisingComparison,
  ThreateningSpeech,
  NegativeOpinion,
  HateEntity,
  SupportHateCrimes,
  NegativeStance,
  NonHatefulContext,
};

constexpr int kSlotLabelCount = 9;

std::string_view slot_name(SlotLabel label);
std::optional<SlotLabel> slot_from_name(std::string_view name);

/// Fine-grained post intents. The binary layer is separate (BinaryIntent).
enum class Intent {
  NotHateful,
  Dehumanisation,
  Threatening,
  Derogation,
  ProHateCrimes,
};

enum class BinaryIntent { NotHateful, Hateful };

std::string_view intent_name(Intent intent);
std::optional<Intent> intent_from_name(std::string_view name);
std::string_view binary_intent_name(BinaryIntent intent);

constexpr bool is_hateful(Intent intent) { return intent != Intent::NotHateful; }

/// A slot-labelled text fragment: a terminal symbol of the grammar.
/// `characteristic` is only ever present on Target spans and marks the span as
/// a protected target.
struct Span {
  std::string text;
  SlotLabel label = SlotLabel::Target;
  std::string source_id;
  std::optional<std::string> characteristic;

  bool is_protected_target() const {
    return label == SlotLabel::Target && characteristic.has_value();
  }
};

/// Flat multiset of spans making up one instance, pre-hierarchy.
struct SlotBag {
  std::vector<Span> spans;

  std::map<SlotLabel, int> counts() const;
  int count(SlotLabel label) const;
};

}  // namespace icsfgen
