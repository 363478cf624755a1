#include "slicesim/domain.hpp"

#include <array>

namespace slicesim {

namespace {

constexpr std::array<SstCatalogEntry, 6> kSstCatalog = {{
    {1, "eMBB", "Slice suitable for the handling of 5G enhanced Mobile Broadband."},
    {2, "URLLC", "Slice suitable for the handling of ultra-reliable low latency communications."},
    {3, "MIoT", "Slice suitable for the handling of massive IoT."},
    {4, "V2X", "Slice suitable for the handling of V2X services."},
    {5, "HMTC", "Slice suitable for the handling of High-Performance Machine-Type Communications."},
    {6, "HDLLC", "Slice suitable for the handling of High Data rate and Low Latency Communications."},
}};

}  // namespace

std::string SNssai::label() const {
  std::string s = std::to_string(sst);
  if (sd) {
    s += '-';
    s += std::to_string(*sd);
  }
  return s;
}

SNssai validate_snssai(long long sst, std::optional<long long> sd) {
  if (sst < 0 || sst > 255) {
    throw OutOfRangeError("sst must be in [0, 255], got " + std::to_string(sst));
  }
  SNssai out;
  out.sst = static_cast<std::uint16_t>(sst);
  if (sd) {
    if (*sd < 0 || *sd > 0xFFFFFF) {
      throw OutOfRangeError("sd must fit in 24 bits, got " + std::to_string(*sd));
    }
    out.sd = static_cast<std::uint32_t>(*sd);
  }
  return out;
}

std::optional<SstCatalogEntry> lookup_sst(long long sst) {
  for (const auto& entry : kSstCatalog) {
    if (entry.sst == sst) return entry;
  }
  return std::nullopt;
}

void validate_profile(const SubscriberProfile& profile) {
  if (profile.ue_id.empty()) {
    throw ValidationError("ue_id must be non-empty");
  }
  if (profile.subscribed_snssais.empty()) {
    throw ValidationError("subscribed_snssais must be non-empty for ue " + profile.ue_id);
  }
  for (const auto& dnn : profile.allowed_dnns) {
    if (dnn.name.empty()) {
      throw ValidationError("DNN name must be non-empty for ue " + profile.ue_id);
    }
  }
}

std::string_view to_string(Transport t) {
  switch (t) {
    case Transport::UDP: return "UDP";
    case Transport::TCP: return "TCP";
    case Transport::ANY: return "ANY";
  }
  return "ANY";
}

Transport transport_from_string(std::string_view s) {
  if (s == "UDP") return Transport::UDP;
  if (s == "TCP") return Transport::TCP;
  if (s == "ANY") return Transport::ANY;
  throw ValidationError("unknown transport protocol: " + std::string(s));
}

double FlowDescriptor::start_time_s() const {
  if (const auto* burst = std::get_if<FiniteBurst>(&demand)) {
    return burst->start_time_s;
  }
  return 0.0;
}

void validate_flow(const FlowDescriptor& flow) {
  if (flow.flow_id.empty()) throw ValidationError("flow_id must be non-empty");
  if (flow.ue_id.empty()) throw ValidationError("flow " + flow.flow_id + ": ue_id must be non-empty");
  if (flow.dst_port && (*flow.dst_port < 0 || *flow.dst_port > 65535)) {
    throw ValidationError("flow " + flow.flow_id + ": dst_port out of range");
  }
  if (const auto* cr = std::get_if<ConstantRate>(&flow.demand)) {
    if (!(cr->rate_mbps > 0.0)) {
      throw ValidationError("flow " + flow.flow_id + ": rate must be > 0");
    }
  } else {
    const auto& burst = std::get<FiniteBurst>(flow.demand);
    if (!(burst.size_bytes > 0.0)) {
      throw ValidationError("flow " + flow.flow_id + ": burst size must be > 0");
    }
    if (!(burst.requested_rate_mbps > 0.0)) {
      throw ValidationError("flow " + flow.flow_id + ": requested rate must be > 0");
    }
    if (burst.start_time_s < 0.0) {
      throw ValidationError("flow " + flow.flow_id + ": start_time must be >= 0");
    }
  }
}

}  // namespace slicesim
