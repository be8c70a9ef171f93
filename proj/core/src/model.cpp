#include "metamr/model.hpp"

#include <algorithm>
#include <set>

namespace metamr {

std::uint64_t tuple_size_bits(const Tuple& t) {
  std::uint64_t sum = 0;
  for (const auto& v : t.values) sum += v.size_bits;
  return sum;
}

std::size_t Relation::attribute_index(const std::string& attr) const {
  auto it = std::find(attributes.begin(), attributes.end(), attr);
  if (it == attributes.end()) {
    throw SchemaError("relation '" + name + "' has no attribute '" + attr + "'");
  }
  return static_cast<std::size_t>(it - attributes.begin());
}

bool Relation::has_attribute(const std::string& attr) const {
  return std::find(attributes.begin(), attributes.end(), attr) != attributes.end();
}

void Relation::validate() const {
  std::set<std::string> names(attributes.begin(), attributes.end());
  if (names.size() != attributes.size()) {
    throw SchemaError("relation '" + name + "' has duplicate attribute names");
  }
  std::set<std::int64_t> ids;
  for (const auto& t : tuples) {
    if (t.values.size() != attributes.size()) {
      throw SchemaError("relation '" + name + "' tuple " + std::to_string(t.tuple_id) +
                        " does not match arity " + std::to_string(attributes.size()));
    }
    if (!ids.insert(t.tuple_id).second) {
      throw SchemaError("relation '" + name + "' has duplicate tuple_id " +
                        std::to_string(t.tuple_id));
    }
  }
}

Tuple& Relation::add_tuple(std::vector<AttributeValue> values) {
  if (values.size() != attributes.size()) {
    throw SchemaError("relation '" + name + "' add_tuple arity mismatch");
  }
  Tuple t;
  t.tuple_id = static_cast<std::int64_t>(tuples.size());
  t.values = std::move(values);
  tuples.push_back(std::move(t));
  return tuples.back();
}

}  // namespace metamr
