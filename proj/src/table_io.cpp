#include "hurwitz/table_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

std::string render_text(const AlgebraTable& t) {
  const int n = t.dim();
  std::size_t width = 0;
  for (const auto& l : t.labels()) width = std::max(width, l.size() + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) width = std::max(width, t.render_entry(i, j).size());
  }
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  std::ostringstream out;
  out << pad("*") << " |";
  for (const auto& l : t.labels()) out << ' ' << pad(l);
  out << '\n' << std::string(width + 1, '-') << '+' << std::string(static_cast<std::size_t>(n) * (width + 1), '-')
      << '\n';
  for (int i = 0; i < n; ++i) {
    out << pad(t.label(i)) << " |";
    for (int j = 0; j < n; ++j) out << ' ' << pad(t.render_entry(i, j));
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const AlgebraTable& t) {
  std::ostringstream out;
  out << '*';
  for (const auto& l : t.labels()) out << ',' << l;
  out << '\n';
  for (int i = 0; i < t.dim(); ++i) {
    out << t.label(i);
    for (int j = 0; j < t.dim(); ++j) out << ',' << t.render_entry(i, j);
    out << '\n';
  }
  return out.str();
}

nlohmann::json table_to_json(const AlgebraTable& t) {
  nlohmann::json product = nlohmann::json::array();
  for (int i = 0; i < t.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < t.dim(); ++j) {
      const TableEntry& e = t.product(i, j);
      row.push_back({{"k", e.index}, {"s", e.sign}});
    }
    product.push_back(std::move(row));
  }
  return {{"name", t.name()},
          {"dim", t.dim()},
          {"basis_labels", t.labels()},
          {"product", std::move(product)},
          {"conj", t.conj_signs()}};
}

AlgebraTable table_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("dim").get<int>();
    auto labels = j.at("basis_labels").get<std::vector<std::string>>();
    auto conj = j.at("conj").get<std::vector<int>>();
    const auto& rows = j.at("product");
    if (n <= 0 || labels.size() != static_cast<std::size_t>(n) || rows.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("table JSON: dimension mismatch");
    }
    std::vector<TableEntry> product;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("table JSON: ragged product");
      for (const auto& e : row) product.push_back({e.at("k").get<int>(), e.at("s").get<int>()});
    }
    return {j.at("name").get<std::string>(), std::move(labels), std::move(product), std::move(conj), 0};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table JSON: ") + e.what());
  }
}

nlohmann::json witness_to_json(const IsomorphismWitness& w) {
  nlohmann::json map = nlohmann::json::array();
  for (const TableEntry& m : w.map) map.push_back({m.index, m.sign});
  return {{"source", w.source->name()}, {"target", w.target->name()}, {"map", std::move(map)}};
}

}  // namespace hurwitz
