#include "emtoro/snapshot.hpp"

#include <bit>
#include <fstream>

#include <json.hpp>

#include "emtoro/config.hpp"

namespace emtoro {

using nlohmann::json;

namespace {

constexpr const char* kMagic = "EMTORO-SNAP";

std::vector<std::string> component_names(Basis basis) {
  const bool sym = basis == Basis::symmetrized;
  const std::string de = sym ? "rho_e" : "q_e";
  const std::string di = sym ? "rho_i" : "q_i";
  const std::string ve = sym ? "u_e" : "v_e";
  const std::string vi = sym ? "u_i" : "v_i";
  std::vector<std::string> names{de, di};
  for (const std::string& v : {ve, vi, std::string("E"), std::string("B")}) {
    for (const char* axis : {"_x", "_y", "_z"}) names.push_back(v + axis);
  }
  return names;
}

std::uint64_t payload_checksum(const std::vector<std::vector<double>>& arrays) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& a : arrays) {
    h = fnv1a(a.data(), a.size() * sizeof(double), h);
  }
  return h;
}

static_assert(std::endian::native == std::endian::little,
              "snapshot payload is little-endian float64");

}  // namespace

Snapshot Snapshot::from_state(const State14& s, const std::string& params_hash,
                              double time) {
  Snapshot snap;
  snap.n = s.grid()->n();
  snap.basis = s.basis;
  snap.components = component_names(s.basis);
  snap.params_hash = params_hash;
  snap.time = time;
  snap.payload.reserve(14);
  snap.payload.push_back(s.rho_e.to_physical());
  snap.payload.push_back(s.rho_i.to_physical());
  for (const VectorField3* v : {&s.u_e, &s.u_i, &s.E, &s.B}) {
    for (int c = 0; c < 3; ++c) snap.payload.push_back((*v)[c].to_physical());
  }
  snap.checksum = payload_checksum(snap.payload);
  return snap;
}

State14 Snapshot::to_state(const GridPtr& grid) const {
  if (grid->n() != n) {
    throw IoError("snapshot grid " + std::to_string(n) +
                  " does not match requested grid " +
                  std::to_string(grid->n()));
  }
  if (payload.size() != 14) {
    throw IoError("expected a 14-component snapshot, got " +
                  std::to_string(payload.size()));
  }
  State14 s(grid, basis);
  s.rho_e = ScalarField::from_physical(grid, payload[0]);
  s.rho_i = ScalarField::from_physical(grid, payload[1]);
  VectorField3* vecs[4] = {&s.u_e, &s.u_i, &s.E, &s.B};
  for (int v = 0; v < 4; ++v) {
    for (int c = 0; c < 3; ++c) {
      (*vecs[v])[c] = ScalarField::from_physical(
          grid, payload[static_cast<std::size_t>(2 + 3 * v + c)]);
    }
  }
  return s;
}

void Snapshot::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  json header;
  header["version"] = version;
  header["n"] = n;
  header["basis"] = basis == Basis::symmetrized ? "symmetrized" : "original";
  header["components"] = components;
  header["params_hash"] = params_hash;
  header["time"] = time;
  header["checksum"] = checksum;
  out << kMagic << "\n" << header.dump() << "\n";
  for (const auto& a : payload) {
    out.write(reinterpret_cast<const char*>(a.data()),
              static_cast<std::streamsize>(a.size() * sizeof(double)));
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

Snapshot Snapshot::read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot '" + path + "'");
  std::string magic, header_line;
  if (!std::getline(in, magic) || magic != kMagic) {
    throw IoError("'" + path + "' is not a snapshot file");
  }
  if (!std::getline(in, header_line)) throw IoError("truncated header");
  json header;
  try {
    header = json::parse(header_line);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("bad snapshot header: ") + e.what());
  }

  Snapshot snap;
  snap.version = header.at("version").get<int>();
  if (snap.version != kSchemaVersion) {
    throw IoError("unsupported snapshot version " +
                  std::to_string(snap.version));
  }
  snap.n = header.at("n").get<int>();
  const std::string basis = header.at("basis").get<std::string>();
  snap.basis = basis == "symmetrized" ? Basis::symmetrized : Basis::original;
  snap.components = header.at("components").get<std::vector<std::string>>();
  snap.params_hash = header.at("params_hash").get<std::string>();
  snap.time = header.at("time").get<double>();
  snap.checksum = header.at("checksum").get<std::uint64_t>();

  if (snap.components.empty()) {
    throw IoError("snapshot carries no components");
  }
  const std::size_t count = static_cast<std::size_t>(snap.n) *
                            static_cast<std::size_t>(snap.n) *
                            static_cast<std::size_t>(snap.n);
  snap.payload.assign(snap.components.size(), std::vector<double>(count));
  for (auto& a : snap.payload) {
    in.read(reinterpret_cast<char*>(a.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(count * sizeof(double))) {
      throw IoError("truncated snapshot payload in '" + path + "'");
    }
  }
  if (payload_checksum(snap.payload) != snap.checksum) {
    throw IoError("snapshot checksum mismatch in '" + path + "'");
  }
  return snap;
}

void save_snapshot(const State14& s, const std::string& path,
                   const std::string& params_hash, double time) {
  Snapshot::from_state(s, params_hash, time).write(path);
}

Snapshot load_snapshot(const std::string& path) { return Snapshot::read(path); }

}  // namespace emtoro
