#include "fcpi/io.hpp"

#include <json.hpp>

#include "fcpi/errors.hpp"

namespace fcpi {

namespace {

using Json = nlohmann::ordered_json;

std::string encode_signs(const SignVec& s) { return sign_vec_to_string(s); }

SignVec decode_signs(const std::string& s) {
  SignVec out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '-')
      out.push_back(-1);
    else if (c == '0')
      out.push_back(0);
    else if (c == '+')
      out.push_back(1);
    else
      throw ParseError("bad sign character in " + s);
  }
  return out;
}

Json faces_to_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const auto& f : faces) out.push_back(encode_signs(f.signs));
  return out;
}

std::vector<Face> faces_from_json(const Json& j, int codim) {
  std::vector<Face> out;
  for (const auto& v : j) out.push_back(Face{decode_signs(v.get<std::string>()), codim});
  return out;
}

const char* flat_class_name(FlatClass c) {
  switch (c) {
    case FlatClass::EpsilonPair: return "epsilon_pair";
    case FlatClass::MixedTriple: return "mixed_triple";
    case FlatClass::CoordinatePair: return "coordinate_pair";
    case FlatClass::Other: return "other";
  }
  return "other";
}

FlatClass flat_class_from_name(const std::string& s) {
  if (s == "epsilon_pair") return FlatClass::EpsilonPair;
  if (s == "mixed_triple") return FlatClass::MixedTriple;
  if (s == "coordinate_pair") return FlatClass::CoordinatePair;
  if (s == "other") return FlatClass::Other;
  throw ParseError("unknown flat class: " + s);
}

Json arrangement_to_json(const Arrangement& arr) {
  Json j;
  j["dimension"] = arr.dimension;
  j["family"] = arr.fc ? "fc" : "generic";
  Json planes = Json::array();
  for (const auto& h : arr.hyperplanes) {
    Json p;
    p["normal"] = h.normal;
    p["offset"] = h.offset;
    p["kind"] = h.kind == Hyperplane::Kind::Epsilon ? "epsilon" : "coordinate";
    p["tag"] = h.tag;
    planes.push_back(std::move(p));
  }
  j["hyperplanes"] = std::move(planes);
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement arr;
  arr.dimension = j.at("dimension").get<int>();
  arr.fc = j.at("family").get<std::string>() == "fc";
  for (const auto& p : j.at("hyperplanes")) {
    Hyperplane h;
    h.normal = p.at("normal").get<std::vector<long>>();
    h.offset = p.at("offset").get<long>();
    const auto kind = p.at("kind").get<std::string>();
    if (kind == "epsilon")
      h.kind = Hyperplane::Kind::Epsilon;
    else if (kind == "coordinate")
      h.kind = Hyperplane::Kind::Coordinate;
    else
      throw ParseError("unknown hyperplane kind: " + kind);
    h.tag = p.at("tag").get<std::vector<int>>();
    arr.hyperplanes.push_back(std::move(h));
  }
  try {
    arr.validate();
  } catch (const StructuralError& e) {
    throw ParseError(std::string("invalid arrangement: ") + e.what());
  }
  return arr;
}

Json complex_to_json(const Complex2& cx) {
  Json j;
  j["arrangement"] = arrangement_to_json(cx.arr);
  j["chambers"] = faces_to_json(cx.faces.chambers);
  j["walls"] = faces_to_json(cx.faces.walls);
  j["faces2"] = faces_to_json(cx.faces.faces2);
  Json flats = Json::array();
  for (const auto& f : cx.faces.flats) {
    Json jf;
    jf["hyperplanes"] = f.zero_hyperplanes;
    jf["class"] = flat_class_name(f.cls);
    flats.push_back(std::move(jf));
  }
  j["flats"] = std::move(flats);
  j["face2_flat"] = cx.faces.face2_flat;
  Json cells1 = Json::array();
  for (const auto& c : cx.cells1) {
    Json jc;
    jc["source"] = c.source;
    jc["wall"] = c.wall;
    jc["target"] = c.target;
    jc["hyperplane"] = c.hyperplane;
    cells1.push_back(std::move(jc));
  }
  j["cells1"] = std::move(cells1);
  Json cells2 = Json::array();
  for (const auto& c : cx.cells2) {
    Json jc;
    jc["base"] = c.base;
    jc["face2"] = c.face2;
    jc["flat"] = c.flat;
    jc["gallery1"] = c.gallery1;
    jc["gallery2"] = c.gallery2;
    jc["boundary"] = c.boundary;
    cells2.push_back(std::move(jc));
  }
  j["cells2"] = std::move(cells2);
  return j;
}

Complex2 complex_from_json(const Json& j) {
  Complex2 cx;
  cx.arr = arrangement_from_json(j.at("arrangement"));
  cx.faces.chambers = faces_from_json(j.at("chambers"), 0);
  cx.faces.walls = faces_from_json(j.at("walls"), 1);
  cx.faces.faces2 = faces_from_json(j.at("faces2"), 2);
  for (const auto& jf : j.at("flats")) {
    Flat2 f;
    f.zero_hyperplanes = jf.at("hyperplanes").get<std::vector<int>>();
    f.cls = flat_class_from_name(jf.at("class").get<std::string>());
    cx.faces.flats.push_back(std::move(f));
  }
  cx.faces.face2_flat = j.at("face2_flat").get<std::vector<int>>();
  for (const auto& jc : j.at("cells1")) {
    Cell1 c;
    c.source = jc.at("source").get<int>();
    c.wall = jc.at("wall").get<int>();
    c.target = jc.at("target").get<int>();
    c.hyperplane = jc.at("hyperplane").get<int>();
    cx.cells1.push_back(c);
  }
  for (const auto& jc : j.at("cells2")) {
    Cell2 c;
    c.base = jc.at("base").get<int>();
    c.face2 = jc.at("face2").get<int>();
    c.flat = jc.at("flat").get<int>();
    c.gallery1 = jc.at("gallery1").get<std::vector<int>>();
    c.gallery2 = jc.at("gallery2").get<std::vector<int>>();
    c.boundary = jc.at("boundary").get<std::vector<int>>();
    cx.cells2.push_back(std::move(c));
  }
  for (size_t i = 0; i < cx.faces.chambers.size(); ++i)
    cx.chamber_index[cx.faces.chambers[i].signs] = static_cast<int>(i);
  for (size_t i = 0; i < cx.faces.walls.size(); ++i)
    cx.wall_index[cx.faces.walls[i].signs] = static_cast<int>(i);
  for (size_t i = 0; i < cx.faces.faces2.size(); ++i)
    cx.face2_index[cx.faces.faces2[i].signs] = static_cast<int>(i);
  for (size_t i = 0; i < cx.cells1.size(); ++i)
    cx.cell1_index[{cx.cells1[i].source, cx.cells1[i].wall}] = static_cast<int>(i);
  return cx;
}

const char* one_cell_type_name(OneCellType t) {
  return t == OneCellType::Type1 ? "type1" : "type2";
}

const char* disc_type_name(DiscType t) {
  switch (t) {
    case DiscType::Interior: return "interior";
    case DiscType::Boundary: return "boundary";
    case DiscType::Coordinate: return "coordinate";
  }
  return "interior";
}

template <typename F>
auto wrap_parse(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string serialize_arrangement(const Arrangement& arr) {
  return arrangement_to_json(arr).dump(2) + "\n";
}

Arrangement parse_arrangement(const std::string& text) {
  return wrap_parse([&] { return arrangement_from_json(Json::parse(text)); });
}

std::string serialize_chambers(const ChambersFile& c) {
  Json j;
  j["dimension"] = c.dimension;
  j["count"] = c.chambers.size();
  j["chambers"] = faces_to_json(c.chambers);
  return j.dump(2) + "\n";
}

ChambersFile parse_chambers(const std::string& text) {
  return wrap_parse([&] {
    const Json j = Json::parse(text);
    ChambersFile c;
    c.dimension = j.at("dimension").get<int>();
    c.chambers = faces_from_json(j.at("chambers"), 0);
    if (j.at("count").get<size_t>() != c.chambers.size())
      throw ParseError("chamber count mismatch");
    return c;
  });
}

std::string serialize_complex(const Complex2& cx) { return complex_to_json(cx).dump(2) + "\n"; }

Complex2 parse_complex(const std::string& text) {
  return wrap_parse([&] { return complex_from_json(Json::parse(text)); });
}

std::string serialize_quotient(const QuotientComplex2& q) {
  Json j;
  j["complex"] = complex_to_json(q.full);
  j["group_order"] = q.group_order;
  Json cells0 = Json::array();
  for (const auto& c : q.cells0) {
    Json jc;
    jc["rep"] = c.rep;
    jc["orbit_size"] = c.orbit_size;
    cells0.push_back(std::move(jc));
  }
  j["cells0"] = std::move(cells0);
  Json cells1 = Json::array();
  for (const auto& c : q.cells1) {
    Json jc;
    jc["rep"] = c.rep;
    jc["type"] = one_cell_type_name(c.type);
    jc["source"] = c.source;
    jc["target"] = c.target;
    jc["hyperplane"] = c.hyperplane;
    jc["orbit_size"] = c.orbit_size;
    cells1.push_back(std::move(jc));
  }
  j["cells1"] = std::move(cells1);
  Json cells2 = Json::array();
  for (const auto& c : q.cells2) {
    Json jc;
    jc["rep"] = c.rep;
    jc["type"] = disc_type_name(c.type);
    jc["boundary"] = c.boundary;
    jc["orbit_size"] = c.orbit_size;
    cells2.push_back(std::move(jc));
  }
  j["cells2"] = std::move(cells2);
  j["chamber_orbit"] = q.chamber_orbit;
  j["cell1_orbit"] = q.cell1_orbit;
  j["cell2_orbit"] = q.cell2_orbit;
  return j.dump(2) + "\n";
}

QuotientComplex2 parse_quotient(const std::string& text) {
  return wrap_parse([&] {
    const Json j = Json::parse(text);
    QuotientComplex2 q;
    q.full = complex_from_json(j.at("complex"));
    q.group_order = j.at("group_order").get<int>();
    for (const auto& jc : j.at("cells0")) {
      OrbitCell0 c;
      c.rep = jc.at("rep").get<int>();
      c.orbit_size = jc.at("orbit_size").get<int>();
      q.cells0.push_back(c);
    }
    for (const auto& jc : j.at("cells1")) {
      OrbitCell1 c;
      c.rep = jc.at("rep").get<int>();
      const auto type = jc.at("type").get<std::string>();
      if (type == "type1")
        c.type = OneCellType::Type1;
      else if (type == "type2")
        c.type = OneCellType::Type2;
      else
        throw ParseError("unknown 1-cell type: " + type);
      c.source = jc.at("source").get<int>();
      c.target = jc.at("target").get<int>();
      c.hyperplane = jc.at("hyperplane").get<int>();
      c.orbit_size = jc.at("orbit_size").get<int>();
      q.cells1.push_back(c);
    }
    for (const auto& jc : j.at("cells2")) {
      OrbitCell2 c;
      c.rep = jc.at("rep").get<int>();
      const auto type = jc.at("type").get<std::string>();
      if (type == "interior")
        c.type = DiscType::Interior;
      else if (type == "boundary")
        c.type = DiscType::Boundary;
      else if (type == "coordinate")
        c.type = DiscType::Coordinate;
      else
        throw ParseError("unknown disc type: " + type);
      c.boundary = jc.at("boundary").get<std::vector<int>>();
      c.orbit_size = jc.at("orbit_size").get<int>();
      q.cells2.push_back(std::move(c));
    }
    q.chamber_orbit = j.at("chamber_orbit").get<std::vector<int>>();
    q.cell1_orbit = j.at("cell1_orbit").get<std::vector<int>>();
    q.cell2_orbit = j.at("cell2_orbit").get<std::vector<int>>();
    return q;
  });
}

}  // namespace fcpi
