#include "honlb/embed.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "honlb/format.hpp"

namespace honlb {

void DistanceMatrix::check() const {
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (values.rows() != n || values.cols() != n)
    throw std::invalid_argument("distance matrix shape does not match labels");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values(i, i) != 0.0)
      throw std::invalid_argument("distance matrix diagonal must be zero");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(values(i, j) >= 0.0) || !std::isfinite(values(i, j)))
        throw std::invalid_argument("distance matrix entries must be finite "
                                    "and nonnegative");
      if (std::abs(values(i, j) - values(j, i)) > 1e-12)
        throw std::invalid_argument("distance matrix is not symmetric");
    }
  }
}

Embedding2D mds_embed(const DistanceMatrix& m) {
  m.check();
  const auto n = static_cast<Eigen::Index>(m.labels.size());
  if (n < 3) throw std::invalid_argument("MDS needs at least 3 points");

  const Eigen::MatrixXd sq = m.values.array().square().matrix();
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(n, n) -
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  const Eigen::MatrixXd b = -0.5 * centering * sq * centering;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");

  Embedding2D out;
  out.labels = m.labels;
  out.coords.assign(static_cast<std::size_t>(n), {0.0, 0.0});
  // eigenvalues come back ascending
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Index col = n - 1 - axis;
    const double lambda = es.eigenvalues()(col);
    if (!(lambda > 0.0)) continue;
    Eigen::VectorXd v = es.eigenvectors().col(col);
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(v(i)) > 1e-12) {
        if (v(i) < 0) v = -v;
        break;
      }
    const double scale = std::sqrt(lambda);
    for (Eigen::Index i = 0; i < n; ++i)
      out.coords[static_cast<std::size_t>(i)][axis] = scale * v(i);
  }
  return out;
}

std::size_t linear_boundary_errors(
    const std::vector<std::array<double, 2>>& coords,
    const std::vector<std::string>& classes) {
  if (coords.size() != classes.size())
    throw std::invalid_argument("one class per point required");
  std::vector<std::string> distinct(classes);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() <= 1) return 0;
  if (distinct.size() > 2)
    throw std::invalid_argument("linear_boundary_errors takes two classes");

  const std::size_t n = coords.size();
  std::vector<int> cls(n);
  std::size_t total[2] = {0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = classes[i] == distinct[0] ? 0 : 1;
    ++total[cls[i]];
  }
  std::size_t best = std::min(total[0], total[1]);

  std::vector<std::pair<double, int>> on_line;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = coords[j][0] - coords[i][0];
      const double dy = coords[j][1] - coords[i][1];
      if (dx == 0.0 && dy == 0.0) continue;
      std::size_t pos[2] = {0, 0}, neg[2] = {0, 0};
      on_line.clear();
      for (std::size_t k = 0; k < n; ++k) {
        const double rx = coords[k][0] - coords[i][0];
        const double ry = coords[k][1] - coords[i][1];
        const double side = dx * ry - dy * rx;
        if (side > 0)
          ++pos[cls[k]];
        else if (side < 0)
          ++neg[cls[k]];
        else
          on_line.emplace_back(dx * rx + dy * ry, cls[k]);
      }
      std::sort(on_line.begin(), on_line.end());
      // Tilting the line about a point between two groups of coincident
      // projections sends the prefix to one side and the suffix to the other.
      std::size_t prefix[2] = {0, 0}, line_total[2] = {0, 0};
      for (const auto& e : on_line) ++line_total[e.second];
      auto consider = [&] {
        const std::size_t suffix[2] = {line_total[0] - prefix[0],
                                       line_total[1] - prefix[1]};
        for (int flip = 0; flip < 2; ++flip) {
          const std::size_t* a = flip ? suffix : prefix;
          const std::size_t* b = flip ? prefix : suffix;
          const std::size_t p0 = pos[0] + a[0], p1 = pos[1] + a[1];
          const std::size_t n0 = neg[0] + b[0], n1 = neg[1] + b[1];
          best = std::min({best, p1 + n0, p0 + n1});
        }
      };
      consider();
      for (std::size_t s = 0; s < on_line.size();) {
        const double t = on_line[s].first;
        for (; s < on_line.size() && on_line[s].first == t; ++s)
          ++prefix[on_line[s].second];
        consider();
      }
    }
  }
  return best;
}

std::size_t linear_boundary_errors(const Embedding2D& e) {
  return linear_boundary_errors(e.coords, e.classes);
}

std::size_t one_vs_one_linear_errors(const Embedding2D& e) {
  if (e.classes.size() != e.coords.size())
    throw std::invalid_argument("embedding has no class labels");
  std::vector<std::string> distinct(e.classes);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::size_t sum = 0;
  for (std::size_t a = 0; a < distinct.size(); ++a)
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      std::vector<std::array<double, 2>> pts;
      std::vector<std::string> cls;
      for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (e.classes[i] == distinct[a] || e.classes[i] == distinct[b]) {
          pts.push_back(e.coords[i]);
          cls.push_back(e.classes[i]);
        }
      sum += linear_boundary_errors(pts, cls);
    }
  return sum;
}

std::string class_from_label(const std::string& label) {
  return label.substr(0, label.find('_'));
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

void check_label(const std::string& s) {
  if (s.find_first_of(",\n\"") != std::string::npos)
    throw std::invalid_argument("label '" + s + "' contains a comma, quote "
                                "or newline");
}

}  // namespace

void write_matrix_csv(std::ostream& os, const DistanceMatrix& m) {
  os << "label";
  for (const auto& l : m.labels) {
    check_label(l);
    os << ',' << l;
  }
  os << '\n';
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    os << m.labels[i];
    for (std::size_t j = 0; j < m.labels.size(); ++j)
      os << ','
         << format_real(m.values(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(j)));
    os << '\n';
  }
}

DistanceMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty matrix CSV");
  auto header = split_commas(line);
  if (header.empty() || header[0] != "label")
    throw std::invalid_argument("matrix CSV must start with 'label'");
  DistanceMatrix m;
  m.labels.assign(header.begin() + 1, header.end());
  const auto n = static_cast<Eigen::Index>(m.labels.size());
  m.values = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split_commas(line);
    if (row >= n || static_cast<Eigen::Index>(f.size()) != n + 1 ||
        f[0] != m.labels[static_cast<std::size_t>(row)])
      throw std::invalid_argument("matrix CSV row " + std::to_string(row + 1) +
                                  " does not match the header");
    for (Eigen::Index j = 0; j < n; ++j)
      m.values(row, j) = parse_real(f[static_cast<std::size_t>(j) + 1]);
    ++row;
  }
  if (row != n) throw std::invalid_argument("matrix CSV has missing rows");
  m.check();
  return m;
}

void write_embedding_csv(std::ostream& os, const Embedding2D& e) {
  os << "label,class,x,y\n";
  for (std::size_t i = 0; i < e.labels.size(); ++i) {
    check_label(e.labels[i]);
    const std::string cls = e.classes.empty() ? "" : e.classes[i];
    check_label(cls);
    os << e.labels[i] << ',' << cls << ',' << format_real(e.coords[i][0])
       << ',' << format_real(e.coords[i][1]) << '\n';
  }
}

Embedding2D read_embedding_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_commas(line) !=
      std::vector<std::string>{"label", "class", "x", "y"})
    throw std::invalid_argument("embedding CSV must start with "
                                "'label,class,x,y'");
  Embedding2D e;
  bool any_class = false;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split_commas(line);
    if (f.size() != 4)
      throw std::invalid_argument("embedding CSV rows need 4 fields");
    e.labels.push_back(f[0]);
    e.classes.push_back(f[1]);
    any_class = any_class || !f[1].empty();
    e.coords.push_back({parse_real(f[2]), parse_real(f[3])});
  }
  if (!any_class) e.classes.clear();
  return e;
}

void write_embedding_svg(std::ostream& os, const Embedding2D& e) {
  constexpr double size = 600.0, margin = 40.0;
  double lo[2] = {0.0, 0.0}, hi[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    for (int a = 0; a < 2; ++a) {
      lo[a] = i ? std::min(lo[a], e.coords[i][a]) : e.coords[i][a];
      hi[a] = i ? std::max(hi[a], e.coords[i][a]) : e.coords[i][a];
    }
  const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-12});
  auto px = [&](double v) { return margin + (v - lo[0]) / span * (size - 2 * margin); };
  auto py = [&](double v) { return size - margin - (v - lo[1]) / span * (size - 2 * margin); };

  std::map<std::string, std::size_t> shape_of;
  for (const auto& c : e.classes) shape_of.emplace(c, 0);
  std::size_t next = 0;
  for (auto& [c, s] : shape_of) s = next++;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};

  auto marker = [&](double x, double y, std::size_t s) {
    const double r = 5.0;
    const char* color = colors[s % 6];
    std::ostringstream m;
    switch (s % 3) {
      case 0:
        m << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
          << "\" fill=\"none\" stroke=\"" << color << "\"/>";
        break;
      case 1:
        m << "<polygon points=\"" << x << ',' << y - r << ' ' << x + r << ','
          << y << ' ' << x << ',' << y + r << ' ' << x - r << ',' << y
          << "\" fill=\"none\" stroke=\"" << color << "\"/>";
        break;
      default:
        m << "<rect x=\"" << x - r << "\" y=\"" << y - r << "\" width=\""
          << 2 * r << "\" height=\"" << 2 * r << "\" fill=\"none\" stroke=\""
          << color << "\"/>";
    }
    return m.str();
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    const std::size_t s = e.classes.empty() ? 0 : shape_of[e.classes[i]];
    os << marker(px(e.coords[i][0]), py(e.coords[i][1]), s) << "<!-- "
       << e.labels[i] << " -->\n";
  }
  double ly = 20.0;
  for (const auto& [c, s] : shape_of) {
    os << marker(size - 110.0, ly, s) << "<text x=\"" << size - 95.0
       << "\" y=\"" << ly + 4.0 << "\" font-size=\"12\">" << c
       << "</text>\n";
    ly += 18.0;
  }
  os << "</svg>\n";
}

}  // namespace honlb
