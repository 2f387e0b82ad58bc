#include "qhforge/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace qhforge {

using nlohmann::ordered_json;

std::string algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["p"] = a.field().p();
  j["dim"] = a.dim();
  j["unit"] = a.unit();
  std::vector<std::array<uint64_t, 4>> entries;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.mult_entry(i, k)) entries.push_back({i, k, t.k, t.c});
  // already (i,j,k)-sorted by construction order
  j["mult"] = entries;
  ordered_json idems = ordered_json::array();
  for (const auto& e : a.idempotents()) {
    ordered_json o;
    o["label"] = e.label;
    o["vector"] = e.vec;
    idems.push_back(o);
  }
  j["idempotents"] = idems;
  if (a.grading()) j["grading"] = *a.grading();
  return j.dump();
}

Algebra algebra_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Fp F(j.at("p").get<uint32_t>());
  size_t dim = j.at("dim").get<size_t>();
  std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
  for (const auto& e : j.at("mult")) {
    size_t i = e.at(0).get<size_t>(), k = e.at(1).get<size_t>();
    uint32_t tk = e.at(2).get<uint32_t>(), c = e.at(3).get<uint32_t>();
    if (i >= dim || k >= dim || tk >= dim) throw AlgebraError("algebra_from_json: index out of range");
    mult[i][k].push_back({tk, c % F.p()});
  }
  Vec unit = j.at("unit").get<Vec>();
  std::vector<LabeledIdem> idems;
  if (j.contains("idempotents"))
    for (const auto& e : j.at("idempotents")) idems.push_back({e.at("label").get<std::string>(), e.at("vector").get<Vec>()});
  std::optional<std::vector<uint32_t>> grading;
  if (j.contains("grading")) grading = j.at("grading").get<std::vector<uint32_t>>();
  Algebra a(F, dim, std::move(mult), std::move(unit), std::move(idems), std::move(grading));
  a.validate();
  return a;
}

std::string poset_to_json(const std::vector<std::string>& labels,
                          const std::vector<std::pair<std::string, std::string>>& covers) {
  ordered_json j;
  j["labels"] = labels;
  ordered_json cv = ordered_json::array();
  for (const auto& [lo, hi] : covers) cv.push_back({lo, hi});
  j["covers"] = cv;
  return j.dump();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
  }
  std::filesystem::rename(tmp, p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace qhforge
