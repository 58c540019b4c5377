#include "hombell/bell.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hombell {

BellScenario BellScenario::chsh() {
  BellScenario s;
  s.settings_a = {HomodyneSetting::all_pass(), HomodyneSetting::all_pass()};
  s.settings_b = {HomodyneSetting::all_pass(), HomodyneSetting::all_pass()};
  s.coefficients = RealMatrix(2, 2);
  s.coefficients << 1, 1, 1, -1;
  s.marginals_a = RealVector::Zero(2);
  s.marginals_b = RealVector::Zero(2);
  s.local_bound = 2.0;
  return s;
}

void BellScenario::validate() const {
  if (settings_a.empty() || settings_b.empty())
    throw std::invalid_argument("BellScenario: needs at least one setting per party");
  if (coefficients.rows() != settings_count_a() || coefficients.cols() != settings_count_b())
    throw std::invalid_argument("BellScenario: coefficient matrix shape mismatch");
  if (marginals_a.size() != settings_count_a() || marginals_b.size() != settings_count_b())
    throw std::invalid_argument("BellScenario: marginal vector shape mismatch");
  if (!coefficients.allFinite() || !marginals_a.allFinite() || !marginals_b.allFinite() ||
      !std::isfinite(local_bound))
    throw std::invalid_argument("BellScenario: coefficients must be finite");
}

ComplexMatrix assemble(const BellScenario& scenario, int dim_a, int dim_b,
                       const std::optional<LossModel>& loss) {
  scenario.validate();
  if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("assemble: dims must be >= 1");

  std::vector<ComplexMatrix> sig_a, sig_b;
  sig_a.reserve(scenario.settings_a.size());
  sig_b.reserve(scenario.settings_b.size());
  for (const auto& s : scenario.settings_a) sig_a.push_back(observable(s, dim_a, loss));
  for (const auto& s : scenario.settings_b) sig_b.push_back(observable(s, dim_b, loss));

  const ComplexMatrix id_a = ComplexMatrix::Identity(dim_a, dim_a);
  const ComplexMatrix id_b = ComplexMatrix::Identity(dim_b, dim_b);
  ComplexMatrix bell = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (int x = 0; x < scenario.settings_count_a(); ++x)
    for (int y = 0; y < scenario.settings_count_b(); ++y) {
      const double c = scenario.coefficients(x, y);
      if (c != 0.0) bell += c * tensor(sig_a[x], sig_b[y]);
    }
  for (int x = 0; x < scenario.settings_count_a(); ++x)
    if (scenario.marginals_a(x) != 0.0) bell += scenario.marginals_a(x) * tensor(sig_a[x], id_b);
  for (int y = 0; y < scenario.settings_count_b(); ++y)
    if (scenario.marginals_b(y) != 0.0) bell += scenario.marginals_b(y) * tensor(id_a, sig_b[y]);
  return bell;
}

BellScore score(const BellScenario& scenario, int dim_a, int dim_b,
                const std::optional<LossModel>& loss,
                const std::vector<ComplexVector>* subspace) {
  const ComplexMatrix bell = assemble(scenario, dim_a, dim_b, loss);
  BellScore out;
  if (subspace && !subspace->empty()) {
    const ComplexMatrix compressed = project_subspace(bell, *subspace);
    const EigenSystem es = hermitian_eigensystem(compressed);
    const Eigen::Index top = es.values.size() - 1;
    out.score = es.values(top);
    ComplexVector lifted = ComplexVector::Zero(dim_a * dim_b);
    for (size_t i = 0; i < subspace->size(); ++i)
      lifted += es.vectors(static_cast<Eigen::Index>(i), top) * (*subspace)[i];
    out.optimal_state = {dim_a, dim_b, lifted};
    out.residual = (compressed * es.vectors.col(top) - out.score * es.vectors.col(top)).norm();
  } else {
    const EigenSystem es = hermitian_eigensystem(bell);
    const Eigen::Index top = es.values.size() - 1;
    out.score = es.values(top);
    out.optimal_state = {dim_a, dim_b, es.vectors.col(top)};
    out.residual = (bell * es.vectors.col(top) - out.score * es.vectors.col(top)).norm();
  }
  return out;
}

std::vector<ComplexVector> product_subspace_basis(const std::vector<int>& indices_a,
                                                  const std::vector<int>& indices_b, int dim_a,
                                                  int dim_b) {
  std::vector<ComplexVector> basis;
  basis.reserve(indices_a.size() * indices_b.size());
  for (int ia : indices_a)
    for (int jb : indices_b) {
      if (ia < 0 || ia >= dim_a || jb < 0 || jb >= dim_b)
        throw std::invalid_argument("product_subspace_basis: index out of range");
      ComplexVector v = ComplexVector::Zero(dim_a * dim_b);
      v(ia * dim_b + jb) = 1.0;
      basis.push_back(std::move(v));
    }
  return basis;
}

std::vector<ComplexVector> energy_subspace_basis(int total_photons) {
  if (total_photons < 0) throw std::invalid_argument("energy_subspace_basis: n must be >= 0");
  const int d = total_photons + 1;
  std::vector<ComplexVector> basis;
  basis.reserve(d);
  for (int k = 0; k <= total_photons; ++k) {
    ComplexVector v = ComplexVector::Zero(d * d);
    v(k * d + (total_photons - k)) = 1.0;
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "inequality file, line " << line << ": " << what;
  throw std::runtime_error(msg.str());
}

// Next content line (skips blanks and '#' comments); returns false at EOF.
bool next_line(std::istream& in, std::string& out, int& line_no) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    out = raw;
    return true;
  }
  return false;
}

std::vector<double> parse_reals(const std::string& text, size_t expect, int line_no,
                                const std::string& what) {
  std::istringstream ss(text);
  std::vector<double> vals;
  double v;
  while (ss >> v) vals.push_back(v);
  std::string leftover;
  if (ss.fail() && !ss.eof()) parse_fail(line_no, "malformed number in " + what);
  if (vals.size() != expect)
    parse_fail(line_no, what + ": expected " + std::to_string(expect) + " values, got " +
                            std::to_string(vals.size()));
  return vals;
}

}  // namespace

BellScenario load_inequality(std::istream& in) {
  int line_no = 0;
  std::string line;

  if (!next_line(in, line, line_no)) parse_fail(line_no, "missing 'bound' line");
  std::istringstream head(line);
  std::string key;
  double bound;
  head >> key >> bound;
  if (key != "bound" || head.fail()) parse_fail(line_no, "expected 'bound <real>'");

  if (!next_line(in, line, line_no)) parse_fail(line_no, "missing 'settings' line");
  std::istringstream sett(line);
  int ma = 0, mb = 0;
  sett >> key >> ma >> mb;
  if (key != "settings" || sett.fail() || ma < 1 || mb < 1)
    parse_fail(line_no, "expected 'settings <mA> <mB>' with positive counts");

  BellScenario s;
  s.coefficients = RealMatrix::Zero(ma, mb);
  for (int x = 0; x < ma; ++x) {
    if (!next_line(in, line, line_no))
      parse_fail(line_no, "missing coefficient row " + std::to_string(x + 1));
    const auto row = parse_reals(line, static_cast<size_t>(mb), line_no,
                                 "coefficient row " + std::to_string(x + 1));
    for (int y = 0; y < mb; ++y) s.coefficients(x, y) = row[static_cast<size_t>(y)];
  }
  s.marginals_a = RealVector::Zero(ma);
  s.marginals_b = RealVector::Zero(mb);

  while (next_line(in, line, line_no)) {
    std::istringstream ss(line);
    ss >> key;
    std::string rest;
    std::getline(ss, rest);
    if (key == "marginals_A") {
      const auto vals = parse_reals(rest, static_cast<size_t>(ma), line_no, "marginals_A");
      for (int x = 0; x < ma; ++x) s.marginals_a(x) = vals[static_cast<size_t>(x)];
    } else if (key == "marginals_B") {
      const auto vals = parse_reals(rest, static_cast<size_t>(mb), line_no, "marginals_B");
      for (int y = 0; y < mb; ++y) s.marginals_b(y) = vals[static_cast<size_t>(y)];
    } else {
      parse_fail(line_no, "unexpected directive '" + key + "'");
    }
  }

  s.local_bound = bound;
  s.settings_a.assign(static_cast<size_t>(ma), HomodyneSetting::all_pass());
  s.settings_b.assign(static_cast<size_t>(mb), HomodyneSetting::all_pass());
  s.validate();
  return s;
}

BellScenario load_inequality_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open inequality file: " + path);
  return load_inequality(in);
}

void save_inequality(const BellScenario& scenario, std::ostream& out) {
  scenario.validate();
  out.precision(17);
  out << "bound " << scenario.local_bound << "\n";
  out << "settings " << scenario.settings_count_a() << " " << scenario.settings_count_b() << "\n";
  for (int x = 0; x < scenario.settings_count_a(); ++x) {
    for (int y = 0; y < scenario.settings_count_b(); ++y)
      out << (y ? " " : "") << scenario.coefficients(x, y);
    out << "\n";
  }
  if (scenario.marginals_a.cwiseAbs().maxCoeff() > 0.0) {
    out << "marginals_A";
    for (int x = 0; x < scenario.settings_count_a(); ++x) out << " " << scenario.marginals_a(x);
    out << "\n";
  }
  if (scenario.marginals_b.cwiseAbs().maxCoeff() > 0.0) {
    out << "marginals_B";
    for (int y = 0; y < scenario.settings_count_b(); ++y) out << " " << scenario.marginals_b(y);
    out << "\n";
  }
}

}  // namespace hombell
