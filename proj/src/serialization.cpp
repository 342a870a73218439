#include "xebspoof/serialization.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

namespace xeb {

Json skeleton_to_json(const Skeleton &s) {
  Json perms = Json::array();
  for (const auto &p : s.perms()) {
    Json row = Json::array();
    for (int v : p)
      row.push_back(v + 1);
    perms.push_back(std::move(row));
  }
  Json j;
  j["n"] = s.n();
  j["d"] = s.depth();
  j["perms"] = std::move(perms);
  return j;
}

Skeleton skeleton_from_json(const Json &j) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const auto &perms = j.at("perms");
    if (!perms.is_array() || static_cast<int>(perms.size()) != d + 1)
      throw invalid_architecture("\"perms\" must hold d+1 permutations");
    std::vector<std::vector<int>> out;
    out.reserve(perms.size());
    for (const auto &row : perms) {
      std::vector<int> p;
      for (const auto &v : row)
        p.push_back(v.get<int>() - 1);
      out.push_back(std::move(p));
    }
    return Skeleton(n, std::move(out));
  } catch (const Json::exception &e) {
    throw std::invalid_argument(std::string("malformed skeleton JSON: ") +
                                e.what());
  }
}

Json circuit_to_json(const Circuit &c) {
  Json j = skeleton_to_json(c.skeleton);
  Json layers = Json::array();
  for (const auto &layer : c.gates) {
    Json gates = Json::array();
    for (const auto &u : layer) {
      Json entries = Json::array();
      for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col)
          entries.push_back(Json::array({u(r, col).real(), u(r, col).imag()}));
      gates.push_back(std::move(entries));
    }
    layers.push_back(std::move(gates));
  }
  j["gates"] = std::move(layers);
  return j;
}

Circuit circuit_from_json(const Json &j) {
  Skeleton s = skeleton_from_json(j);
  try {
    const auto &layers = j.at("gates");
    std::vector<std::vector<Unitary2Q>> gates;
    for (const auto &layer : layers) {
      std::vector<Unitary2Q> row;
      for (const auto &entries : layer) {
        if (entries.size() != 16)
          throw std::invalid_argument("a gate needs 16 complex entries");
        Unitary2Q u;
        for (int k = 0; k < 16; ++k)
          u(k / 4, k % 4) = Complex(entries[k].at(0).get<double>(),
                                    entries[k].at(1).get<double>());
        if (!is_unitary(u, 1e-9))
          throw std::invalid_argument("gate is not unitary");
        row.push_back(u);
      }
      gates.push_back(std::move(row));
    }
    return Circuit(std::move(s), std::move(gates));
  } catch (const Json::exception &e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") +
                                e.what());
  }
}

Json plan_to_json(const SpoofPlan &p) {
  Json j;
  j["n"] = p.n;
  j["m_requested"] = p.requested;
  j["m"] = p.m();
  j["shortfall"] = p.shortfall();
  Json selected = Json::array(), marginals = Json::array();
  for (int i : p.selected)
    selected.push_back(i + 1);
  for (const auto &q : p.marginals)
    marginals.push_back(Json::array({q[0], q[1]}));
  j["selected"] = std::move(selected);
  j["marginals"] = std::move(marginals);
  j["light_cone_sizes"] = p.cone_sizes;
  return j;
}

void write_distribution_csv(std::ostream &os, const VectorXd &q) {
  os << "bitstring,probability\n";
  os << std::setprecision(17);
  for (Eigen::Index x = 0; x < q.size(); ++x)
    os << x << ',' << q[x] << '\n';
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
}

} // namespace xeb
