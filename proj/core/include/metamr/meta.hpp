#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metamr/hashing.hpp"
#include "metamr/model.hpp"

namespace metamr {

/// Comparable key bytes shipped in place of a value: either the literal
/// payload or a fixed-width digest. Composites are length-framed so that
/// concatenations of different splits never alias. Keys compare by byte
/// equality; bit_len is the wire size charged for the material.
struct KeyMaterial {
  bool digested = false;
  std::string bytes;
  std::uint64_t bit_len = 0;

  static KeyMaterial literal(const AttributeValue& v);
  static KeyMaterial digest_of(const AttributeValue& v, const HashConfig& cfg);
  static KeyMaterial concat(std::span<const KeyMaterial> parts);

  friend bool operator==(const KeyMaterial& a, const KeyMaterial& b) {
    return a.digested == b.digested && a.bytes == b.bytes;
  }
  friend bool operator<(const KeyMaterial& a, const KeyMaterial& b) {
    if (a.digested != b.digested) return a.digested < b.digested;
    return a.bytes < b.bytes;
  }
};

/// Per-attribute slot of a MetaRecord. Comparable fields carry key material
/// (literal or digest); the rest are size-only descriptors.
struct MetaField {
  std::string attr;
  bool comparable = false;
  KeyMaterial material;          // meaningful when comparable
  std::uint64_t value_bits = 0;  // declared size of the original value
};

/// The wire-level stand-in for a tuple. Base records reference one original
/// tuple; records derived by intermediate rounds reference every original in
/// their lineage. A MetaRecord never contains a non-key payload.
struct MetaRecord {
  TupleRef origin;
  std::vector<TupleRef> lineage;  // originals backing this record, sorted
  std::vector<MetaField> fields;  // record schema order

  std::vector<std::string> key_attrs;  // attrs covered by key_material
  KeyMaterial key_material;            // shuffle key for the consuming round
  std::uint64_t wire_bits = 0;         // key+carried material bits + descriptor overhead
  std::uint64_t original_bits = 0;     // original data size (capacity accounting)

  const MetaField* find_field(const std::string& attr) const;

  /// (attribute, size_bits) for every non-comparable field.
  std::vector<std::pair<std::string, std::uint64_t>> size_descriptors() const;

  /// Recomputes key_material from the named fields (which must be comparable)
  /// and refreshes wire_bits.
  void rekey(const std::vector<std::string>& attrs, std::uint32_t size_field_bits);

  void recompute_costs(std::uint32_t size_field_bits);
};

/// Builds the metadata record for one tuple: key material for key_attrs
/// (digested when a digester is given), size descriptors for the rest.
/// Each descriptor is charged size_field_bits toward wire_bits (default 0,
/// so the upload cost of a record is exactly its key size).
MetaRecord make_meta(const Tuple& t, const Relation& rel,
                     const std::vector<std::string>& key_attrs,
                     const std::optional<HashConfig>& digester = std::nullopt,
                     std::uint32_t size_field_bits = 0);

/// Extended form for cascade joins: comparable_attrs may be wider than the
/// shuffle key (carried digests are compared reduce-side in later rounds).
MetaRecord make_meta_record(const Tuple& t, const Relation& rel,
                            const std::vector<std::string>& comparable_attrs,
                            const std::vector<std::string>& key_attrs,
                            const std::optional<HashConfig>& digester,
                            std::uint32_t size_field_bits);

}  // namespace metamr
