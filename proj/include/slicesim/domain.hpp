#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "slicesim/errors.hpp"

namespace slicesim {

using UeId = std::string;
using FlowId = std::string;

// Single-Network Slice Selection Assistance Information: the (SST, SD) label
// carried by every slicing procedure. SD absence is distinct from SD=0.
struct SNssai {
  std::uint16_t sst = 0;               // slice/service type, 0..255
  std::optional<std::uint32_t> sd;     // slice differentiator, 24-bit

  bool standardized() const { return sst >= 1 && sst <= 6; }
  std::string label() const;           // "1" or "1-000002" (SD zero-padded hex-free decimal? see impl)

  auto operator<=>(const SNssai&) const = default;
};

// One row of the standardized SST table.
struct SstCatalogEntry {
  std::uint16_t sst;
  std::string_view service_type_name;
  std::string_view characteristics;
};

// Throws OutOfRangeError if sst exceeds 8 bits or sd exceeds 24 bits.
SNssai validate_snssai(long long sst, std::optional<long long> sd);

// Standardized rows exist for SST 1..6 only.
std::optional<SstCatalogEntry> lookup_sst(long long sst);

struct DataNetworkName {
  std::string name;

  auto operator<=>(const DataNetworkName&) const = default;
};

struct SubscriberProfile {
  UeId ue_id;
  std::set<SNssai> subscribed_snssais;
  std::set<DataNetworkName> allowed_dnns;
  int subscription_type = 0;  // index into tariff types
};

// Throws ValidationError on an empty subscribed set or empty ue_id/DNN names.
void validate_profile(const SubscriberProfile& profile);

enum class Transport { UDP, TCP, ANY };

std::string_view to_string(Transport t);
Transport transport_from_string(std::string_view s);

// Demand shapes. ConstantRate flows transmit from t=0 until the horizon;
// FiniteBurst flows transmit size_bytes starting at start_time_s.
struct ConstantRate {
  double rate_mbps = 0.0;
};

struct FiniteBurst {
  double size_bytes = 0.0;
  double requested_rate_mbps = 0.0;
  double start_time_s = 0.0;
};

using DemandProfile = std::variant<ConstantRate, FiniteBurst>;

struct FlowDescriptor {
  FlowId flow_id;
  UeId ue_id;
  std::string dst_address;
  Transport transport = Transport::ANY;
  std::optional<int> dst_port;
  std::optional<std::string> app_id;
  DemandProfile demand;

  bool is_burst() const { return std::holds_alternative<FiniteBurst>(demand); }
  double start_time_s() const;
};

// Throws ValidationError on non-positive rates/sizes or negative start time.
void validate_flow(const FlowDescriptor& flow);

}  // namespace slicesim
