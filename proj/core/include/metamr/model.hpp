#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "metamr/error.hpp"

namespace metamr {

/// One attribute value: an opaque byte payload plus its declared bit size.
/// The declared size normally equals 8 * payload length, but fixtures may
/// declare sizes independently (sidecar overrides).
struct AttributeValue {
  std::string payload;
  std::uint64_t size_bits = 0;

  static AttributeValue from_string(std::string s) {
    AttributeValue v;
    v.size_bits = 8 * s.size();
    v.payload = std::move(s);
    return v;
  }
  static AttributeValue sized(std::string s, std::uint64_t bits) {
    return AttributeValue{std::move(s), bits};
  }

  // Equality is byte equality of the payload; sizes are bookkeeping.
  friend bool operator==(const AttributeValue& a, const AttributeValue& b) {
    return a.payload == b.payload;
  }
};

struct Tuple {
  std::int64_t tuple_id = 0;
  std::vector<AttributeValue> values;
};

/// Sum of the declared value sizes. In unit-cost accounting the engine
/// charges 1 per tuple instead; see CostModel.
std::uint64_t tuple_size_bits(const Tuple& t);

struct Relation {
  std::string name;
  std::vector<std::string> attributes;
  std::vector<Tuple> tuples;
  std::string home_site;

  std::size_t arity() const { return attributes.size(); }

  /// Index of an attribute; throws SchemaError for unknown names.
  std::size_t attribute_index(const std::string& attr) const;

  bool has_attribute(const std::string& attr) const;

  /// Checks attribute uniqueness, arity conformance and tuple_id uniqueness.
  void validate() const;

  /// Appends a tuple with the next dense tuple_id (0-based, file order).
  Tuple& add_tuple(std::vector<AttributeValue> values);
};

enum class SiteKind { user, compute_cluster, global_cluster };

struct Site {
  std::string site_id;
  SiteKind kind = SiteKind::user;
};

/// Identity of an original (or derived) tuple: relation, id, resident site.
struct TupleRef {
  std::string relation;
  std::int64_t tuple_id = 0;
  std::string site_id;

  friend auto operator<=>(const TupleRef&, const TupleRef&) = default;
};

}  // namespace metamr
