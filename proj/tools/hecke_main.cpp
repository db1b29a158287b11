// Command-line surface over the library: unitarity verdicts, string
// decompositions, region membership, table verification sweeps, and the
// rank-2 region plots.  Records go to stdout as JSON lines with a fixed key
// order (--pretty switches to key: value text); exit codes are 0 for
// success, 1 for a verification failure, 2 for a violated precondition, 3
// for unparsable input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/heckeops.hpp"
#include "hecke/ramified.hpp"
#include "hecke/regions.hpp"
#include "hecke/strings.hpp"

using json = nlohmann::ordered_json;
using namespace hecke;

namespace {

bool g_pretty = false;

void emit(const json& rec) {
  if (!g_pretty) {
    std::cout << rec.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : rec.items()) {
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  std::cout << "\n";
}

std::string group_name(CartanType type, int rank) {
  std::string name = cartan_name(type);
  if (name.size() == 1) name += std::to_string(rank);
  return name;
}

void check_dim(const RootDatum& rd, const RatVec& chi) {
  if (chi.size() != static_cast<std::size_t>(rd.ambient_dim))
    throw ParseError("chi has " + std::to_string(chi.size()) + " coordinates, expected " +
                     std::to_string(rd.ambient_dim));
}

// Descending digit label of the strings-side partition, e.g. "2211111".
std::string partition_label(const StringDecomposition& dec) {
  std::vector<int> parts = full_partition(dec);
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out += std::to_string(*it);
  return out;
}

json operator_record(const std::string& group, const RatVec& chi,
                     const UnitarityCertificate& cert) {
  json types = json::array();
  for (const TypeVerdict& t : cert.types) {
    types.push_back(json{{"name", t.name}, {"dim", t.dim}, {"positive", t.positive}});
  }
  return json{{"group", group},
              {"chi", vec_to_string(chi)},
              {"method", "operator"},
              {"hermitian", cert.hermitian},
              {"unitary", cert.unitary},
              {"detail", json{{"chi_dominant", vec_to_string(cert.chi_dominant.chi)},
                              {"irreducible", cert.irreducible},
                              {"types", types}}}};
}

json strings_record(const std::string& group, const RatVec& chi, const StringVerdict& sv) {
  json factors = json::array();
  for (std::size_t i = 0; i < sv.decomposition.nu_factors.size(); ++i) {
    factors.push_back(json{{"name", factor_name(sv.decomposition.nu_factors[i])},
                           {"ok", static_cast<bool>(sv.factor_ok[i])}});
  }
  json detail;
  if (sv.hermitian) {
    detail = json{{"orbit", render_orbit(sv.decomposition)},
                  {"nu", render_nu(sv.decomposition)},
                  {"factors", factors}};
  } else {
    detail = json::object();
  }
  return json{{"group", group},        {"chi", vec_to_string(chi)},
              {"method", "strings"},   {"hermitian", sv.hermitian},
              {"unitary", sv.unitary}, {"detail", detail}};
}

int cmd_unitary(const std::string& type_name, int rank, const std::string& chi_text,
                const std::string& method, std::size_t cap) {
  const CartanType type = cartan_from_name(type_name);
  const RatVec chi = vec_from_string(chi_text);
  const std::string group = group_name(type, rank);
  const RootDatum rd = build(type, rank);
  check_dim(rd, chi);

  bool hermitian = true;
  int mismatch = 0;
  std::optional<bool> op_verdict, str_verdict;
  if (method == "operator" || method == "both") {
    UnitarityCertificate cert = decide_unitarity_relevant(rd, Parameter{chi}, cap);
    emit(operator_record(group, chi, cert));
    hermitian = hermitian && cert.hermitian;
    op_verdict = cert.unitary;
  }
  if (method == "strings" || method == "both") {
    StringVerdict sv = unitary_via_strings(type, Parameter{chi});
    emit(strings_record(group, chi, sv));
    hermitian = hermitian && sv.hermitian;
    str_verdict = sv.unitary;
  }
  if (op_verdict && str_verdict && *op_verdict != *str_verdict) {
    std::cerr << "method disagreement: operator says " << (*op_verdict ? "yes" : "no")
              << ", strings says " << (*str_verdict ? "yes" : "no") << "\n";
    mismatch = 1;
  }
  if (!hermitian) return 2;
  return mismatch;
}

int cmd_strings(const std::string& type_name, int rank, const std::string& chi_text) {
  const CartanType type = cartan_from_name(type_name);
  const RatVec chi = vec_from_string(chi_text);
  check_dim(build(type, rank), chi);
  StringDecomposition dec = decompose(type, Parameter{chi});
  emit(json{{"group", group_name(type, rank)},
            {"chi", vec_to_string(chi)},
            {"orbit", render_orbit(dec)},
            {"nu", render_nu(dec)}});
  return 0;
}

int cmd_region(const std::string& group, const std::string& chi_text,
               const std::string& nu_text) {
  if (!chi_text.empty()) {
    const RatVec chi = vec_from_string(chi_text);
    GroupVerdict gv = group_verdict(group, chi);
    emit(json{{"group", group},
              {"chi", vec_to_string(chi)},
              {"method", "region"},
              {"orbit", gv.orbit},
              {"nu", vec_to_string(gv.nu)},
              {"matched", gv.matched},
              {"unitary", gv.unitary}});
    return 0;
  }
  const RatVec nu = vec_from_string(nu_text);
  ZeroCsResult zr = zero_cs_membership(group, nu);
  emit(json{{"group", group},
            {"nu", vec_to_string(nu)},
            {"method", "region"},
            {"matched", zr.matched},
            {"unitary", zr.unitary}});
  return 0;
}

// Odometer over grid^k, capped.
std::vector<RatVec> sample_box(const std::vector<Rat>& grid, std::size_t k,
                               std::size_t max_points) {
  std::vector<RatVec> out;
  if (k == 0) {
    out.push_back(RatVec{});
    return out;
  }
  std::vector<std::size_t> idx(k, 0);
  while (out.size() < max_points) {
    RatVec point(k);
    for (std::size_t i = 0; i < k; ++i) point[i] = grid[idx[i]];
    out.push_back(point);
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == grid.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

int cmd_verify_table(const std::string& table, double budget_seconds) {
  const RegionTable& rt = region_table(table);
  const bool classical = table.size() == 2 && (table[0] == 'A' || table[0] == 'B' ||
                                               table[0] == 'C' || table[0] == 'D');
  const bool g2 = table == "G2";
  CartanType type = CartanType::B;
  int rank = 4;
  if (classical) {
    type = cartan_from_name(table.substr(0, 1));
    rank = table[1] - '0';
  } else if (g2) {
    type = CartanType::G2;
    rank = 2;
  } else {
    type = CartanType::F4;
    rank = 4;
  }
  const RootDatum rd = build(type, rank);
  // Expected zero-orbit partition length on the dual side.
  std::size_t dual_len = 0;
  switch (type) {
    case CartanType::A: dual_len = static_cast<std::size_t>(rank) + 1; break;
    case CartanType::B: dual_len = 2 * static_cast<std::size_t>(rank); break;
    case CartanType::C: dual_len = 2 * static_cast<std::size_t>(rank) + 1; break;
    case CartanType::D: dual_len = 2 * static_cast<std::size_t>(rank); break;
    default: break;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const std::vector<Rat> grid = {Rat(0),          make_rat(1, 4), make_rat(1, 2),
                                 make_rat(3, 4),  Rat(1),         make_rat(3, 2)};
  const std::vector<Rat> grid_g2 = {Rat(0),         make_rat(1, 8), make_rat(1, 4),
                                    make_rat(1, 2), make_rat(3, 4), Rat(1)};

  long total_failures = 0;
  long rows_checked = 0, rows_skipped = 0;
  for (const TableRow& row : rt.rows) {
    if (elapsed() > budget_seconds) {
      emit(json{{"table", table}, {"orbit", row.orbit}, {"status", "skipped"}});
      ++rows_skipped;
      continue;
    }
    long points = 0, failures = 0, skipped = 0;
    const std::size_t k = row.chi_dirs.size();
    if (classical || g2) {
      for (const RatVec& nu : sample_box(classical ? grid : grid_g2, k, 400)) {
        if (elapsed() > budget_seconds) break;
        const RatVec chi = row_chi(row, nu);
        if (classical) {
          bool expect_unitary = false;
          std::string expect_orbit;
          try {
            StringVerdict sv = unitary_via_strings(type, Parameter{chi});
            if (!sv.hermitian) continue;  // A-type samples off the hermitian locus
            expect_unitary = sv.unitary;
            expect_orbit = partition_label(sv.decomposition);
          } catch (const VeryEvenOrbit&) {
            ++skipped;
            continue;
          }
          GroupVerdict gv = group_verdict(table, chi);
          ++points;
          const std::string got_orbit = gv.orbit.empty()
                                            ? std::string(dual_len, '1')
                                            : canonical_orbit_label(gv.orbit);
          if (gv.unitary != expect_unitary || got_orbit != expect_orbit) ++failures;
        } else {
          GroupVerdict gv = group_verdict(table, chi);
          UnitarityCertificate cert = decide_unitarity_relevant(rd, Parameter{chi}, 16);
          ++points;
          if (gv.unitary != cert.unitary) ++failures;
        }
      }
    } else {
      // F4: the operator is expensive; confirm one in-region sample per row
      // while the budget lasts.
      for (const RatVec& nu : sample_box(grid, k, 200)) {
        try {
          if (!table_verdict(table, row.orbit, nu)) continue;
        } catch (const PoleAtNu&) {
          continue;
        }
        const RatVec chi = row_chi(row, nu);
        UnitarityCertificate cert = decide_unitarity_relevant(rd, Parameter{chi}, 1200);
        ++points;
        if (!cert.unitary) ++failures;
        break;
      }
    }
    total_failures += failures;
    ++rows_checked;
    emit(json{{"table", table},
              {"orbit", row.orbit},
              {"points", points},
              {"skipped", skipped},
              {"failures", failures},
              {"status", failures == 0 ? "pass" : "fail"}});
  }
  emit(json{{"table", table},
            {"rows", rows_checked},
            {"rows_skipped", rows_skipped},
            {"failures", total_failures},
            {"seconds", elapsed()}});
  return total_failures == 0 ? 0 : 1;
}

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int cmd_plot(const std::string& type_name, const std::string& grid_text,
             const std::string& out_path) {
  if (type_name != "B2" && type_name != "C2")
    throw UnsupportedDatum("plot supports types B2 and C2 only");
  const CartanType type = type_name[0] == 'B' ? CartanType::B : CartanType::C;
  const Rat step = rat_from_string(grid_text);
  if (step <= 0) throw ParseError("grid step must be positive");

  const Rat vmax = make_rat(9, 4);
  const double scale = 200.0, margin = 45.0;
  const double size = 2 * margin + scale * vmax.get_d();
  auto px = [&](const Rat& v) { return margin + scale * v.get_d(); };
  auto py = [&](const Rat& v) { return size - margin - scale * v.get_d(); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_num(size)
      << "\" height=\"" << svg_num(size) << "\" viewBox=\"0 0 " << svg_num(size) << " "
      << svg_num(size) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg << "<line x1=\"" << svg_num(px(Rat(0))) << "\" y1=\"" << svg_num(py(Rat(0)))
      << "\" x2=\"" << svg_num(px(vmax)) << "\" y2=\"" << svg_num(py(Rat(0)))
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << svg_num(px(Rat(0))) << "\" y1=\"" << svg_num(py(Rat(0)))
      << "\" x2=\"" << svg_num(px(Rat(0))) << "\" y2=\"" << svg_num(py(vmax))
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << svg_num(px(vmax) - 30) << "\" y=\"" << svg_num(py(Rat(0)) + 25)
      << "\" font-size=\"14\">nu1</text>\n";
  svg << "<text x=\"" << svg_num(px(Rat(0)) - 35) << "\" y=\"" << svg_num(py(vmax) + 10)
      << "\" font-size=\"14\">nu2</text>\n";
  // unit ticks
  for (int t = 1; t <= 2; ++t) {
    svg << "<line x1=\"" << svg_num(px(Rat(t))) << "\" y1=\"" << svg_num(py(Rat(0)) - 4)
        << "\" x2=\"" << svg_num(px(Rat(t))) << "\" y2=\"" << svg_num(py(Rat(0)) + 4)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << svg_num(px(Rat(t)) - 4) << "\" y=\"" << svg_num(py(Rat(0)) + 20)
        << "\" font-size=\"12\">" << t << "</text>\n";
  }
  // fundamental alcove outline: pairing with the highest coroot at most 1.
  if (type == CartanType::C) {
    svg << "<polyline points=\"" << svg_num(px(Rat(0))) << "," << svg_num(py(Rat(0))) << " "
        << svg_num(px(Rat(1))) << "," << svg_num(py(Rat(0))) << " " << svg_num(px(Rat(1)))
        << "," << svg_num(py(Rat(1))) << " " << svg_num(px(Rat(0))) << ","
        << svg_num(py(Rat(0)))
        << "\" fill=\"none\" stroke=\"blue\" stroke-dasharray=\"4,3\"/>\n";
  } else {
    svg << "<polyline points=\"" << svg_num(px(Rat(0))) << "," << svg_num(py(Rat(0))) << " "
        << svg_num(px(Rat(1))) << "," << svg_num(py(Rat(0))) << " "
        << svg_num(px(make_rat(1, 2))) << "," << svg_num(py(make_rat(1, 2))) << " "
        << svg_num(px(Rat(0))) << "," << svg_num(py(Rat(0)))
        << "\" fill=\"none\" stroke=\"blue\" stroke-dasharray=\"4,3\"/>\n";
  }

  long total = 0, unitary_count = 0;
  for (Rat x(0); x <= vmax; x += step) {
    for (Rat y(0); y <= x; y += step) {
      StringVerdict sv = unitary_via_strings(type, Parameter{RatVec{x, y}});
      ++total;
      if (sv.unitary) {
        ++unitary_count;
        svg << "<circle cx=\"" << svg_num(px(x)) << "\" cy=\"" << svg_num(py(y))
            << "\" r=\"3\" fill=\"black\"/>\n";
      } else {
        svg << "<circle cx=\"" << svg_num(px(x)) << "\" cy=\"" << svg_num(py(y))
            << "\" r=\"2\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
      }
    }
  }
  svg << "</svg>\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << svg.str();
  out.close();
  emit(json{{"type", type_name},
            {"grid", rat_to_string(step)},
            {"out", out_path},
            {"points", total},
            {"unitary", unitary_count}});
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const NotHermitian& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unitarity tests for graded Hecke algebra parameters"};
  app.require_subcommand(1);
  long seed = 0;
  app.add_flag("--pretty", g_pretty, "key: value text instead of JSON lines");
  app.add_option("--seed", seed, "seed for sampled sweeps")->default_val(0);

  std::string u_type, u_chi, u_method = "operator";
  int u_rank = 0;
  std::size_t u_cap = 4000;
  CLI::App* unitary = app.add_subcommand("unitary", "unitarity verdict at a parameter");
  unitary->add_option("--type", u_type, "Cartan type: A B C D G2 F4")->required();
  unitary->add_option("--rank", u_rank, "rank")->required();
  unitary->add_option("--chi", u_chi, "parameter, comma-separated rationals")->required();
  unitary->add_option("--method", u_method, "operator | strings | both")
      ->check(CLI::IsMember({"operator", "strings", "both"}));
  unitary->add_option("--cap", u_cap, "Weyl group enumeration cap");

  std::string s_type, s_chi;
  int s_rank = 0;
  CLI::App* strings_cmd = app.add_subcommand("strings", "string decomposition of a parameter");
  strings_cmd->add_option("--type", s_type, "Cartan type: A B C D")->required();
  strings_cmd->add_option("--rank", s_rank, "rank")->required();
  strings_cmd->add_option("--chi", s_chi, "parameter, comma-separated rationals")->required();

  std::string r_group, r_chi, r_nu;
  CLI::App* region = app.add_subcommand("region", "region membership for a parameter");
  region->add_option("--group", r_group, "A4 B4 C4 D4 G2 F4 E6 E7 E8")->required();
  CLI::Option* opt_chi = region->add_option("--chi", r_chi, "full parameter (table lookup)");
  CLI::Option* opt_nu = region->add_option("--nu", r_nu, "deformation parameter (zero orbit)");
  opt_chi->excludes(opt_nu);

  std::string v_table;
  double v_budget = 60.0;
  CLI::App* verify = app.add_subcommand("verify-table", "re-check a printed table by sampling");
  verify->add_option("--table", v_table, "A4 B4 C4 D4 G2 F4")
      ->required()
      ->check(CLI::IsMember({"A4", "B4", "C4", "D4", "G2", "F4"}));
  verify->add_option("--budget", v_budget, "time budget in seconds");

  std::string p_type, p_grid = "1/8", p_out;
  CLI::App* plot = app.add_subcommand("plot", "SVG of the rank-2 unitary set");
  plot->add_option("--type", p_type, "B2 | C2")->required();
  plot->add_option("--grid", p_grid, "grid step, a positive rational");
  plot->add_option("--out", p_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  (void)seed;  // sweeps are grid-based; the flag is accepted for stability

  if (*unitary)
    return guarded([&] { return cmd_unitary(u_type, u_rank, u_chi, u_method, u_cap); });
  if (*strings_cmd) return guarded([&] { return cmd_strings(s_type, s_rank, s_chi); });
  if (*region) {
    if (r_chi.empty() && r_nu.empty()) {
      std::cerr << "parse error: region needs --chi or --nu\n";
      return 3;
    }
    return guarded([&] { return cmd_region(r_group, r_chi, r_nu); });
  }
  if (*verify) return guarded([&] { return cmd_verify_table(v_table, v_budget); });
  if (*plot) return guarded([&] { return cmd_plot(p_type, p_grid, p_out); });
  return 0;
}
