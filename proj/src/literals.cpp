#include "framelab/literals.hpp"

#include "framelab/errors.hpp"

namespace framelab {

Json element_to_json(const Element& e) {
  if (e.layer == nullptr) fail(ErrorKind::Internal, "null element");
  const Layer& lay = *e.layer;
  if (lay.is_ground()) return ground_literals(lay.family())[e.index];
  Json arr = Json::array();
  for (int x = 0; x < lay.dom()->size(); ++x)
    arr.push_back(element_to_json(Element{lay.cod(), lay.apply(e.index, x)}));
  return arr;
}

Element element_from_json(const Layer& layer, const Json& j) {
  if (layer.is_ground()) {
    if (!j.is_string())
      fail(ErrorKind::Type, "expected a ground element literal, got " + j.dump());
    return Element{&layer, ground_index_of(layer.family(), j.get<std::string>())};
  }
  if (!j.is_array())
    fail(ErrorKind::Type, "expected a table literal (JSON array) at " + layer.type()->str() +
                              ", got " + j.dump());
  if (static_cast<int>(j.size()) != layer.dom()->size())
    fail(ErrorKind::NoSuchElement,
         "table literal has " + std::to_string(j.size()) + " entries, expected " +
             std::to_string(layer.dom()->size()) + " at " + layer.type()->str());
  std::vector<int32_t> table;
  table.reserve(j.size());
  for (const auto& cell : j) table.push_back(element_from_json(*layer.cod(), cell).index);
  return element_of_table(layer, table);
}

std::string element_text(const Element& e) {
  Json j = element_to_json(e);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace framelab
