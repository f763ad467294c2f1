#include "catpark/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"
#include "catpark/generating_functions.hpp"

namespace catpark {

namespace {

std::size_t display_width(const std::string& s) {
  // Counts UTF-8 code points; every glyph used here is single-width.
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string h_combination(const std::map<unsigned, BigInt>& coeffs) {
  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += to_string(it->second) + "*";
    out += "h_" + std::to_string(it->first) + "(q, t)";
  }
  return out.empty() ? "0" : out;
}

TextTable caterpillar_table() {
  TextTable t{"Parking distributions on Cat_2(3)", {"p"}, {}, {}};
  for (const auto& p : enumerate_caterpillar_pk(2, 3)) t.rows.push_back({p.to_display()});
  t.notes.push_back(
      "erratum: the printed version of this table lists (1, 2, 3, 4, 4) twice and omits "
      "(1, 2, 2, 4, 4); the rows above are the theta images of PK(3; (1, 3, ...))");
  return t;
}

TextTable theta_table() {
  TextTable t{"theta: PK(3; (1, 3, ...)) -> PK_2(3)", {"p", "theta(p)"}, {}, {}};
  for (const auto& p : enumerate_u_pk(3, BoundFamily::canonical(2))) {
    t.rows.push_back({p.to_display(), theta(p, 2, 3).to_display()});
  }
  return t;
}

TextTable decomposition_table(int m) {
  TextTable t{"First-return decomposition of PK(3; (1, " + std::to_string(m + 1) + ", ...))", {"p"}, {}, {}};
  for (int j = 1; j <= m + 1; ++j) t.columns.push_back("p_" + std::to_string(j));
  for (const auto& p : enumerate_u_pk(3, BoundFamily::canonical(m))) {
    std::vector<std::string> row{p.to_display()};
    for (const auto& c : decompose(p, m).components) row.push_back(c.to_display());
    t.rows.push_back(std::move(row));
  }
  return t;
}

TextTable r_table() {
  TextTable t{"R_n^(m)", {"n", "m=2", "m=3", "m=4"}, {}, {}};
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int m = 2; m <= 4; ++m) row.push_back(r_poly_brute(m, n).to_string());
    t.rows.push_back(std::move(row));
  }
  return t;
}

TextTable gamma_table(int m) {
  TextTable t{"gamma_n^(" + std::to_string(m) + ")(q, t, 1, 1) / qt", {"n", "gamma/qt", "h-decomposition"}, {}, {}};
  for (std::size_t n = 1; n <= 4; ++n) {
    const MultiPoly g = gamma_poly_brute(m, n).substitute("u", 1).substitute("v", 1);
    const MultiPoly reduced = g.divide_by_monomial({1, 1});
    t.rows.push_back({std::to_string(n), reduced.to_string(), h_combination(h_decompose(g, {"q", "t"}))});
  }
  return t;
}

TextTable eta_table() {
  TextTable t{"eta on PK(3; (1, 3, ...))", {"p", "p_1", "p_2", "p_3", "eta(p)"}, {}, {}};
  for (const auto& p : enumerate_u_pk(3, BoundFamily::canonical(2))) {
    std::vector<std::string> row{p.to_display()};
    for (const auto& c : decompose(p, 2).components) row.push_back(c.to_display());
    row.push_back(eta(p, 2).to_display());
    t.rows.push_back(std::move(row));
  }
  return t;
}

TextTable tensor_table() {
  TextTable t{"B_2(4, k_0, k_1, k_2)", {"k_0", "k_1", "k_2=1", "k_2=2", "k_2=3", "k_2=4"}, {}, {}};
  const JointCountTensor tensor = joint_count_tensor(2, 4);
  for (std::uint32_t a = 1; a <= 4; ++a) {
    for (std::uint32_t b = 1; b <= 4; ++b) {
      std::vector<std::string> row{std::to_string(a), std::to_string(b)};
      for (std::uint32_t c = 1; c <= 4; ++c) row.push_back(to_string(tensor.at({a, b, c})));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json TextTable::to_json() const {
  return nlohmann::json{{"title", title}, {"columns", columns}, {"rows", rows}, {"notes", notes}};
}

std::string TextTable::render(OutputFormat format) const {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json:
      out << to_json().dump(2) << '\n';
      break;
    case OutputFormat::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
        out << '\n';
      };
      line(columns);
      for (const auto& row : rows) line(row);
      break;
    }
    case OutputFormat::text: {
      std::vector<std::size_t> width(columns.size(), 0);
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = display_width(columns[i]);
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
          width[i] = std::max(width[i], display_width(row[i]));
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) text += "  ";
          text += cells[i];
          if (i + 1 < cells.size()) text.append(width[i] - display_width(cells[i]), ' ');
        }
        out << text << '\n';
      };
      if (!title.empty()) out << title << "\n\n";
      line(columns);
      std::size_t rule = 0;
      for (std::size_t i = 0; i < width.size(); ++i) rule += width[i] + (i ? 2 : 0);
      out << std::string(rule, '-') << '\n';
      for (const auto& row : rows) line(row);
      for (const auto& note : notes) out << '\n' << note << '\n';
      break;
    }
  }
  return out.str();
}

TextTable reference_table(int id) {
  switch (id) {
    case 1: return caterpillar_table();
    case 2: return theta_table();
    case 3: return decomposition_table(2);
    case 4: return decomposition_table(3);
    case 5: return r_table();
    case 6: return gamma_table(2);
    case 7: return gamma_table(3);
    case 8: return gamma_table(4);
    case 9: return eta_table();
    case 10: return tensor_table();
    default:
      throw std::invalid_argument("unknown table id " + std::to_string(id) + "; expected 1..10");
  }
}

}  // namespace catpark
