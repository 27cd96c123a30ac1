#include <cstdint>
#include <cstdio>
#include <fstream>

#include "mcp/constants.hpp"
#include "mcp/sweep.hpp"

namespace mcp {
namespace {

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string sci(const std::optional<double>& x) { return x ? sci(*x) : std::string(); }

std::string_view tag_name(FrequencyTag t) {
  switch (t) {
    case FrequencyTag::Imaginary: return "imaginary";
    case FrequencyTag::Static: return "static";
    case FrequencyTag::Real: return "real";
  }
  return "?";
}

void write_comments(const SweepTable& table, const SweepConfig& cfg, std::ostream& out) {
  out << "# magnetic Casimir-Polder sweep, quantity=" << to_string(table.quantity) << '\n';
  out << "# config_hash: fnv1a64:" << fnv1a_hex(cfg.canonical_json()) << '\n';
  out << "# constants: " << constants::table_version << '\n';
  out << "# mu_J_T: " << sci(cfg.atom.mu)
      << (cfg.mu_defaulted ? " (default: Bohr magneton)" : "") << '\n';
  out << "# tol: " << sci(cfg.tol) << '\n';
  if (table.quantity == Quantity::FreeEnergy && cfg.normalize) {
    out << "# normalization_F_pl_1um_0K_J: "
        << (table.normalization ? sci(*table.normalization) : std::string("unavailable")) << '\n';
  }
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_csv(const SweepTable& table, const SweepConfig& cfg, std::ostream& out) {
  write_comments(table, cfg, out);
  switch (table.quantity) {
    case Quantity::FreeEnergy:
      out << energy_csv_header << '\n';
      for (const auto& r : table.energy) {
        const bool ok = r.status == RowStatus::Ok;
        out << sci(r.L) << ',' << sci(r.T) << ',' << to_string(r.state) << ','
            << to_string(r.method) << ',' << r.material << ',' << (ok ? sci(r.F) : "") << ','
            << (ok ? sci(r.F_normalized) : "") << ',';
        if (ok) out << r.n_terms;
        out << ',' << (ok ? sci(r.est_error) : "") << ',' << to_string(r.status) << '\n';
      }
      break;
    case Quantity::Green:
      out << "L_m,T_K,material,frequency_kind,frequency_rad_s,H_xx_T2_per_J,H_zz_T2_per_J,"
             "est_error_T2_per_J,status\n";
      for (const auto& r : table.green) {
        out << sci(r.L) << ',' << sci(r.T) << ',' << r.material << ',' << tag_name(r.tag) << ','
            << sci(r.frequency) << ',' << sci(r.H_xx) << ',' << sci(r.H_zz) << ','
            << sci(r.est_error) << ',' << to_string(r.status) << '\n';
      }
      break;
    case Quantity::Polarizability:
      out << "T_K,state,n,xi_rad_s,beta_xx_J_per_T2,beta_yy_J_per_T2,beta_zz_J_per_T2\n";
      for (const auto& r : table.polarizability) {
        out << sci(r.T) << ',' << to_string(r.state) << ',' << r.n << ',' << sci(r.xi) << ','
            << sci(r.beta_xx) << ',' << sci(r.beta_yy) << ',' << sci(r.beta_zz) << '\n';
      }
      break;
  }
}

void write_csv(const SweepTable& table, const SweepConfig& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file " + path);
  write_csv(table, cfg, out);
  out.flush();
  if (!out) throw IoError("write failed for output file " + path);
}

}  // namespace mcp
