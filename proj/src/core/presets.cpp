#include "core/presets.hpp"

#include <sstream>

namespace jbv {

const JacobiStructure& StructureBundle::require_jacobi() const {
  if (!jacobi) throw StructuralError("structure '" + name + "' carries no Jacobi pair");
  return *jacobi;
}

const OmegaPoissonStructure& StructureBundle::require_omega() const {
  if (!omega) throw StructuralError("structure '" + name + "' carries no (Q,E,Omega) data");
  return *omega;
}

const VolumeForm& StructureBundle::require_vol() const {
  if (!vol) throw StructuralError("structure '" + name + "' carries no volume form");
  return *vol;
}

StructureBundle contact_canonical(int n) {
  if (n < 1) throw StructuralError("contact_canonical: n must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  names.push_back("z");
  Chart c = Chart::make(names);
  const int m = 2 * n + 1;
  const auto qi = [&](int i) { return static_cast<uint8_t>(i); };
  const auto pi = [&](int i) { return static_cast<uint8_t>(n + i); };
  const uint8_t z = static_cast<uint8_t>(m - 1);

  Tensor Lambda(c, Kind::Multivector, 2);
  for (int i = 0; i < n; ++i) {
    Lambda.add_term({qi(i), pi(i)}, ExpPoly::constant(c, 1));
    Lambda.add_term({z, pi(i)}, ExpPoly::coordinate(c, n + i));
  }
  Tensor E = Tensor::basis(c, Kind::Multivector, {z});

  Tensor theta(c, Kind::Form, 1);
  theta.add_term({z}, ExpPoly::constant(c, 1));
  for (int i = 0; i < n; ++i) theta.add_term({qi(i)}, -ExpPoly::coordinate(c, n + i));

  Tensor dtheta = ext_d(theta);
  Tensor phi = theta;
  for (int i = 0; i < n; ++i) phi = wedge(phi, dtheta);

  StructureBundle b;
  b.kind = "jacobi";
  b.name = "contact:" + std::to_string(n);
  b.chart = c;
  b.jacobi = JacobiStructure(Lambda, E);
  if (!b.jacobi->is_valid())
    throw StructuralError("contact_canonical: structure identities failed");
  // Reeb identities pin theta against E.
  if (pairing(E, theta) != ExpPoly::constant(c, 1) || !interior(E, dtheta).is_zero())
    throw StructuralError("contact_canonical: Reeb identities failed");
  b.vol = VolumeForm(phi);
  b.named.emplace("theta", theta);
  return b;
}

StructureBundle gcs_structure(int n, const std::vector<Rational>& slopes) {
  if (n < 1) throw StructuralError("gcs_structure: n must be >= 1");
  const int m = 2 * n;
  if (static_cast<int>(slopes.size()) > m)
    throw StructuralError("gcs_structure: slope vector longer than the chart dimension");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  Chart c = Chart::make(names);

  std::vector<Rational> freq(static_cast<size_t>(m), Rational(0));
  for (size_t i = 0; i < slopes.size(); ++i) freq[i] = slopes[i];
  ExpPoly e_sigma = ExpPoly::exponential(c, freq);
  std::vector<Rational> neg = freq;
  for (auto& f : neg) f = -f;
  ExpPoly e_minus_sigma = ExpPoly::exponential(c, neg);

  Tensor omega0(c, Kind::Form, 2);
  Tensor lam(c, Kind::Multivector, 2);
  for (int i = 0; i < n; ++i) {
    auto a = static_cast<uint8_t>(2 * i);
    auto b2 = static_cast<uint8_t>(2 * i + 1);
    omega0.add_term({a, b2}, ExpPoly::constant(c, 1));
    lam.add_term({a, b2}, -e_minus_sigma);
  }
  Tensor Omega = omega0.scaled(e_sigma);

  ExpPoly sigma = ExpPoly::zero(c);
  for (int i = 0; i < m; ++i)
    sigma = sigma + ExpPoly::coordinate(c, i).scaled(freq[static_cast<size_t>(i)]);
  Tensor dsigma = ext_d(Tensor::scalar(c, Kind::Form, sigma));
  Tensor E = sharp(lam, dsigma);

  // sharp must invert flat for the conformal 2-form.
  for (int i = 0; i < m; ++i) {
    Tensor a = Tensor::basis(c, Kind::Form, {static_cast<uint8_t>(i)});
    if (flat(Omega, sharp(lam, a)) != a)
      throw StructuralError("gcs_structure: sharp is not inverse to flat");
  }

  Tensor phi = Omega;
  for (int i = 1; i < n; ++i) phi = wedge(phi, Omega);

  StructureBundle b;
  b.kind = "jacobi";
  std::ostringstream nm;
  nm << "gcs:" << n << ":";
  for (size_t i = 0; i < slopes.size(); ++i) nm << (i ? "," : "") << to_string(slopes[i]);
  b.name = nm.str();
  b.chart = c;
  b.jacobi = JacobiStructure(lam, E);
  if (!b.jacobi->is_valid())
    throw StructuralError("gcs_structure: structure identities failed");
  if (!lie_derivative(E, Omega).is_zero())
    throw StructuralError("gcs_structure: the conformal 2-form is not E-invariant");
  b.vol = VolumeForm(phi);
  b.named.emplace("Omega", Omega);
  b.functions.emplace("sigma", sigma);
  return b;
}

StructureBundle constant_poisson(const std::vector<std::vector<Rational>>& a) {
  const int m = static_cast<int>(a.size());
  if (m < 1) throw StructuralError("constant_poisson: empty matrix");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != m)
      throw StructuralError("constant_poisson: matrix must be square");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          -a[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw StructuralError("constant_poisson: matrix must be skew");

  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  Chart c = Chart::make(names);
  Tensor lam(c, Kind::Multivector, 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      lam.add_term({static_cast<uint8_t>(i), static_cast<uint8_t>(j)},
                   ExpPoly::constant(c, a[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  Tensor E = Tensor::zero(c, Kind::Multivector, 1);

  Tensor phi(c, Kind::Form, m);
  IdxTuple all;
  for (int i = 0; i < m; ++i) all.push_back(static_cast<uint8_t>(i));
  phi.add_term(all, ExpPoly::constant(c, 1));

  StructureBundle b;
  b.kind = "jacobi";
  b.name = "const";
  b.chart = c;
  b.jacobi = JacobiStructure(lam, E);
  if (!b.jacobi->is_valid())
    throw StructuralError("constant_poisson: structure identities failed");
  b.vol = VolumeForm(phi);
  return b;
}

namespace {

Rational parse_rational(const std::string& s) {
  auto pos = s.find('/');
  try {
    if (pos == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, pos)), Integer(s.substr(pos + 1)));
  } catch (const std::exception&) {
    throw StructuralError("preset: bad rational '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

StructureBundle parse_preset(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw StructuralError("preset: empty spec");
  const std::string& kind = parts[0];
  if (kind == "contact") {
    if (parts.size() != 2) throw StructuralError("preset: expected contact:n");
    return contact_canonical(std::stoi(parts[1]));
  }
  if (kind == "gcs") {
    if (parts.size() != 3) throw StructuralError("preset: expected gcs:n:slope[,slope...]");
    std::vector<Rational> slopes;
    for (const auto& s : split(parts[2], ',')) slopes.push_back(parse_rational(s));
    return gcs_structure(std::stoi(parts[1]), slopes);
  }
  if (kind == "const") {
    if (parts.size() != 2) throw StructuralError("preset: expected const:row;row;...");
    std::vector<std::vector<Rational>> mat;
    for (const auto& row : split(parts[1], ';')) {
      std::vector<Rational> r;
      for (const auto& e : split(row, ',')) r.push_back(parse_rational(e));
      mat.push_back(std::move(r));
    }
    return constant_poisson(mat);
  }
  throw StructuralError("preset: unknown preset kind '" + kind + "'");
}

} // namespace jbv
