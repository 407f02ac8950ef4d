#include "oddwedge/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "oddwedge/dynamics.hpp"
#include "oddwedge/json_io.hpp"
#include "oddwedge/lambert.hpp"
#include "oddwedge/parse.hpp"

namespace oddwedge {

namespace {

std::string fmt(double x, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

std::string fmt_complex(cplx z, const char* spec = "%.6g") {
  if (z.imag() == 0.0) return fmt(z.real(), spec);
  if (z.real() == 0.0) return fmt(z.imag(), spec) + "i";
  return fmt(z.real(), spec) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag()), spec) + "i";
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
}

void emit(std::ostream& out, const std::string& output_path, const std::string& payload,
          std::ostream& err, int& rc) {
  if (output_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << output_path << "\n";
    rc = 2;
    return;
  }
  f << payload;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exterior-power operation on class functions of odd-order groups "
               "and the dynamics of wedge-minus-one"};
  app.require_subcommand(1);

  std::string group_name = "frobenius21";
  std::string output_path;
  std::string start_text, values_text, rect_text = "-2,2,-2,2", res_text = "100x100";
  std::string class_label = "7A", csv_path, ppm_path, method = "exp";
  bool as_json = false;
  int hk = 7, char_index = 0, dim = 0, max_steps = 500, threads = 0;
  double tol = 1e-10, bound = 1e12;

  auto add_group = [&](CLI::App* sub, const char* flag = "--group") {
    sub->add_option(flag, group_name, "group name (cN, cNxcM, frobenius21)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit JSON"); };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "write the report to a file");
  };

  CLI::App* c_group = app.add_subcommand("group", "group and conjugacy-class data");
  add_group(c_group, "--name");
  add_json(c_group);
  add_output(c_group);

  CLI::App* c_table = app.add_subcommand("table", "irreducible character table");
  add_group(c_table);
  add_json(c_table);
  add_output(c_table);

  CLI::App* c_hurwitz = app.add_subcommand("hurwitz", "H(j/k) values and coefficients as CSV");
  c_hurwitz->add_option("--k", hk, "odd modulus")->required();
  add_json(c_hurwitz);
  add_output(c_hurwitz);

  CLI::App* c_tmat = app.add_subcommand("t-matrix", "exponent operator matrix and spectrum");
  add_group(c_tmat);
  add_json(c_tmat);
  add_output(c_tmat);

  CLI::App* c_verify = app.add_subcommand("verify", "check exp(T chi) against the "
                                                    "Newton-identities wedge on all irreducibles");
  add_group(c_verify);
  add_json(c_verify);
  add_output(c_verify);

  CLI::App* c_wedge = app.add_subcommand("wedge", "apply the wedge to a class function");
  add_group(c_wedge);
  c_wedge->add_option("--char", char_index, "1-based character table row");
  c_wedge->add_option("--values", values_text, "comma-separated complex values");
  c_wedge->add_option("--method", method, "exp (default) or direct");
  c_wedge->add_option("--dim", dim, "dimension for --values with --method direct");
  add_json(c_wedge);
  add_output(c_wedge);

  CLI::App* c_iter = app.add_subcommand("iterate", "iterate wedge-minus-one from a start");
  add_group(c_iter);
  c_iter->add_option("--start", start_text, "comma-separated complex values")->required();
  c_iter->add_option("--max-steps", max_steps);
  c_iter->add_option("--tol", tol);
  c_iter->add_option("--bound", bound);
  add_json(c_iter);
  add_output(c_iter);

  CLI::App* c_fixed = app.add_subcommand("fixed-points", "closed-form fixed points on the "
                                                         "order-7 class coordinate");
  c_fixed->add_option("--class", class_label, "7A or 7B");
  add_json(c_fixed);
  add_output(c_fixed);

  CLI::App* c_basin = app.add_subcommand("basin", "basin-of-attraction scan on the order-3 "
                                                  "class coordinate");
  c_basin->add_option("--rect", rect_text, "x0,x1,y0,y1");
  c_basin->add_option("--res", res_text, "NXxNY");
  c_basin->add_option("--max-steps", max_steps);
  c_basin->add_option("--tol", tol);
  c_basin->add_option("--bound", bound);
  c_basin->add_option("--threads", threads, "0 = ODD_WEDGE_THREADS or hardware");
  c_basin->add_option("--csv", csv_path, "write x,y,label,steps CSV here ('-' for stdout)");
  c_basin->add_option("--ppm", ppm_path, "write a raw P6 image of the labels");
  add_json(c_basin);
  add_output(c_basin);

  CLI::App* c_even = app.add_subcommand("even-demo", "what goes wrong at even order");
  add_json(c_even);
  add_output(c_even);

  std::vector<const char*> argv;
  argv.push_back("odd-wedge");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  int rc = 0;
  try {
    std::ostringstream body;

    if (app.got_subcommand(c_group)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto cs = conjugacy_classes(g);
      if (as_json) {
        body << to_json(g, *cs).dump(2) << "\n";
      } else {
        body << "group " << g.name << ", order " << g.order << ", " << cs->num_classes
             << " conjugacy classes\n";
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"class", "size", "order", "representative"});
        for (int c = 0; c < cs->num_classes; ++c)
          cells.push_back({cs->labels[c], std::to_string(cs->sizes[c]),
                           std::to_string(cs->rep_orders[c]),
                           std::to_string(cs->representatives[c])});
        print_aligned(body, cells);
      }
    } else if (app.got_subcommand(c_table)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto table = character_table(g);
      if (as_json) {
        body << to_json(table).dump(2) << "\n";
      } else {
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> head = {"class"};
        std::vector<std::string> sizes = {"size"};
        for (int c = 0; c < table.cs->num_classes; ++c) {
          head.push_back(table.cs->labels[c]);
          sizes.push_back(std::to_string(table.cs->sizes[c]));
        }
        cells.push_back(head);
        cells.push_back(sizes);
        for (size_t r = 0; r < table.rows.size(); ++r) {
          std::vector<std::string> row = {"rho_" + std::to_string(r + 1)};
          for (int c = 0; c < table.cs->num_classes; ++c)
            row.push_back(fmt_complex(table.rows[r][c]));
          cells.push_back(row);
        }
        print_aligned(body, cells);
      }
    } else if (app.got_subcommand(c_hurwitz)) {
      const auto wc = wedge_coefficients(hk);
      if (as_json) {
        json j = to_json(wc);
        json hv = json::array();
        for (int j2 = 1; j2 <= hk; ++j2) hv.push_back(h_closed(j2, hk));
        j["h"] = hv;
        body << j.dump(2) << "\n";
      } else {
        body << "j,h,c\n";
        for (int j = 1; j <= hk; ++j)
          body << j << "," << fmt(h_closed(j, hk), "%.15g") << "," << fmt(wc.cj(j), "%.15g")
               << "\n";
      }
    } else if (app.got_subcommand(c_tmat)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto t = build_t(conjugacy_classes(g));
      const auto sp = t_spectrum(t);
      if (as_json) {
        json j = to_json(t);
        j["spectrum"] = to_json(sp);
        body << j.dump(2) << "\n";
      } else {
        body << "T operator on class functions of " << g.name << "\n";
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> head = {""};
        for (const auto& l : t.cs->labels) head.push_back(l);
        cells.push_back(head);
        for (Eigen::Index r = 0; r < t.m.rows(); ++r) {
          std::vector<std::string> row = {t.cs->labels[r]};
          for (Eigen::Index c = 0; c < t.m.cols(); ++c) row.push_back(fmt(t.m(r, c), "%.6f"));
          cells.push_back(row);
        }
        print_aligned(body, cells);
        body << "eigenvalues:";
        for (const auto& lam : sp.eigenvalues) body << " " << fmt_complex(lam, "%.10g");
        body << "\n";
      }
    } else if (app.got_subcommand(c_verify)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto rep = verify_adams_theorem(g);
      if (as_json) {
        body << to_json(rep).dump(2) << "\n";
      } else {
        body << "group " << rep.group << ": exponential formula vs direct wedge on "
             << rep.per_character.size() << " irreducibles, max deviation "
             << fmt(rep.max_deviation, "%.3e") << " -> " << (rep.pass ? "OK" : "FAIL") << "\n";
      }
      rc = rep.pass ? 0 : 1;
    } else if (app.got_subcommand(c_wedge)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto cs = conjugacy_classes(g);
      ClassFunction f = ClassFunction::constant(cs, 0.0);
      int f_dim = dim;
      if (!values_text.empty()) {
        f = ClassFunction(cs, parse_complex_list(values_text));
      } else if (char_index >= 1) {
        const auto table = character_table(g, cs);
        if (char_index > static_cast<int>(table.rows.size()))
          throw std::invalid_argument("--char out of range");
        f = table.rows[char_index - 1];
        if (f_dim == 0) f_dim = table.dims[char_index - 1];
      } else {
        throw std::invalid_argument("wedge: need --char or --values");
      }
      if (method != "direct" && method != "exp")
        throw std::invalid_argument("--method must be exp or direct");
      ClassFunction w = (method == "direct") ? wedge_character_direct(f, f_dim) : wedge_exp(f);
      if (as_json) {
        json j;
        j["group"] = g.name;
        j["method"] = method;
        j["input"] = to_json(f.values());
        j["wedge"] = to_json(w.values());
        body << j.dump(2) << "\n";
      } else {
        for (int c = 0; c < cs->num_classes; ++c)
          body << cs->labels[c] << ": " << fmt_complex(w[c], "%.10g") << "\n";
      }
    } else if (app.got_subcommand(c_iter)) {
      const FiniteGroup g = group_by_name(group_name);
      const auto cs = conjugacy_classes(g);
      ClassFunction f0(cs, parse_complex_list(start_text));
      IterationOptions opt{max_steps, tol, bound};
      const auto tr = iterate(f0, opt);
      if (as_json) {
        body << to_json(tr).dump(2) << "\n";
      } else {
        body << "status: ";
        switch (tr.status) {
          case IterationStatus::converged:
            body << "converged at step " << tr.step << " to";
            for (int c = 0; c < cs->num_classes; ++c) body << " " << fmt_complex((*tr.limit)[c]);
            body << "\n";
            break;
          case IterationStatus::diverged:
            body << "diverged at step " << tr.step << ", next magnitude ~ 10^"
                 << fmt(*tr.blowup_log10, "%.1f") << "\n";
            break;
          case IterationStatus::max_steps:
            body << "max_steps reached (" << tr.step << ")\n";
            break;
        }
      }
    } else if (app.got_subcommand(c_fixed)) {
      if (class_label != "7A" && class_label != "7B")
        throw std::invalid_argument("fixed-points: only the order-7 classes 7A/7B have the "
                                    "one-variable reduction");
      const auto fp = psi_fixed_points_7();
      const auto rep = classify_fixed_point(
          [](const std::vector<double>& v) { return std::vector<double>{psi7(v[0])}; },
          {fp.attractor});
      if (as_json) {
        json j = to_json(fp);
        j["attractor_report"] = to_json(rep);
        body << j.dump(2) << "\n";
      } else {
        body << "map z -> 2^(1/7 + 6z/7) - 1 on class " << class_label << "\n";
        body << "lambert argument u = " << fmt(fp.u) << "  (above -1/e = "
             << fmt(-std::exp(-1.0)) << ")\n";
        body << "fixed point " << fmt(fp.trivial) << "  derivative " << fmt(fp.derivative_trivial)
             << "  repelling (trivial character)\n";
        body << "fixed point " << fmt(fp.attractor) << "  derivative "
             << fmt(fp.derivative_attractor) << "  attracting (not a character value)\n";
      }
    } else if (app.got_subcommand(c_basin)) {
      const auto rect = parse_complex_list(rect_text);
      if (rect.size() != 4) throw std::invalid_argument("--rect needs x0,x1,y0,y1");
      int nx = 0, ny = 0;
      if (std::sscanf(res_text.c_str(), "%dx%d", &nx, &ny) != 2 || nx < 1 || ny < 1)
        throw std::invalid_argument("--res needs NXxNY");
      IterationOptions opt{max_steps, tol, bound};
      const auto grid = basin_scan(rect[0].real(), rect[1].real(), rect[2].real(),
                                   rect[3].real(), nx, ny, opt, threads);
      if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "x,y,label,steps\n";
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix)
            csv << fmt(grid.xs[ix], "%.10g") << "," << fmt(grid.ys[iy], "%.10g") << ","
                << basin_label_name(grid.at(ix, iy)) << ","
                << grid.steps[static_cast<size_t>(iy) * nx + ix] << "\n";
        if (csv_path == "-") {
          body << csv.str();
        } else {
          std::ofstream f(csv_path, std::ios::binary);
          if (!f) throw std::invalid_argument("cannot open csv file: " + csv_path);
          f << csv.str();
        }
      }
      if (!ppm_path.empty()) {
        std::ofstream f(ppm_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open ppm file: " + ppm_path);
        f << "P6\n" << nx << " " << ny << "\n255\n";
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix) {
            static const unsigned char palette[5][3] = {
                {235, 235, 235},  // trivial
                {202, 60, 60},    // character_j
                {60, 90, 202},    // character_j2
                {20, 20, 20},     // diverged
                {120, 120, 120},  // undecided
            };
            const auto* p = palette[static_cast<int>(grid.at(ix, iy))];
            f.write(reinterpret_cast<const char*>(p), 3);
          }
      }
      if (as_json) {
        body << to_json(grid).dump(2) << "\n";
      } else if (csv_path.empty()) {
        size_t counts[5] = {0, 0, 0, 0, 0};
        for (auto l : grid.labels) counts[static_cast<int>(l)]++;
        body << "basin scan " << nx << "x" << ny << " on [" << fmt(rect[0].real()) << ","
             << fmt(rect[1].real()) << "]x[" << fmt(rect[2].real()) << "," << fmt(rect[3].real())
             << "]\n";
        for (int l = 0; l < 5; ++l)
          body << basin_label_name(static_cast<BasinLabel>(l)) << ": " << counts[l] << "\n";
      }
    } else if (app.got_subcommand(c_even)) {
      const FiniteGroup c2 = cyclic_group(2);
      const auto cs = conjugacy_classes(c2);
      const auto reg = regular_character(cs);
      const auto w = wedge_character_direct(reg, 2);
      std::string refusal;
      try {
        build_t(cs);
      } catch (const std::invalid_argument& e) {
        refusal = e.what();
      }
      if (as_json) {
        json j;
        j["group"] = c2.name;
        j["regular_character"] = to_json(reg.values());
        j["wedge_of_regular"] = to_json(w.values());
        j["vanishes_at"] = cs->labels[1];
        j["extension_refused"] = refusal;
        body << j.dump(2) << "\n";
      } else {
        body << "on c2 the wedge of the regular character is (" << fmt_complex(w[0]) << ", "
             << fmt_complex(w[1]) << "): it vanishes at the involution, so it is not "
             << "invertible and the wedge cannot extend to virtual representations.\n";
        body << "exponential operator: " << (refusal.empty() ? "unexpectedly built" : refusal)
             << "\n";
      }
      if (refusal.empty()) rc = 1;
    }

    emit(out, output_path, body.str(), err, rc);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace oddwedge
