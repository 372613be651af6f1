#include "modalwb/serialize.hpp"

#include <cstdio>

namespace modalwb {

nlohmann::json element_to_json(const Element& x) {
  if (const auto* p = std::get_if<PowersetElement>(&x)) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", static_cast<unsigned>(p->bits()));
    return buf;
  }
  if (const auto* f = std::get_if<FcSet>(&x)) {
    return {{"mode", f->is_cofinite() ? "cofinite" : "finite"}, {"set", f->points()}};
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& piece : std::get<IntervalSet>(x).parts()) {
    out.push_back({to_string(piece.lo), to_string(piece.hi)});
  }
  return out;
}

Element element_from_json(const Carrier& c, const nlohmann::json& j) {
  try {
    switch (c.kind()) {
      case CarrierKind::FinitePowerset: {
        auto text = j.get<std::string>();
        if (text.rfind("0x", 0) != 0) throw Error(ErrorKind::Parse, "expected hex bitmask");
        return mask_element(c, static_cast<Mask>(std::stoul(text.substr(2), nullptr, 16)));
      }
      case CarrierKind::FiniteCofinite: {
        auto mode = j.at("mode").get<std::string>();
        auto set = j.at("set").get<std::vector<std::uint64_t>>();
        if (mode == "finite") return FcSet::finite(std::move(set));
        if (mode == "cofinite") return FcSet::cofinite(std::move(set));
        throw Error(ErrorKind::Parse, "unknown FC mode '" + mode + "'");
      }
      case CarrierKind::RationalInterval: {
        std::vector<Interval> raw;
        for (const auto& pair : j) {
          raw.push_back({parse_rational(pair.at(0).get<std::string>()),
                         parse_rational(pair.at(1).get<std::string>())});
        }
        return IntervalSet::normalize(std::move(raw));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed element JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed element JSON: ") + e.what());
  }
  throw Error(ErrorKind::Internal, "unreachable carrier kind");
}

}  // namespace modalwb
