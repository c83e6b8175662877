#pragma once

// Identity registry: every relation the library checks, with the
// specialization panel each one is verified on.
//
// Text format, one record per line ('#' starts a comment):
//   id[,alias...] | lhs | rhs | var=v1,v2;var2=w1,w2 | min_order | anchor [| tag,tag...]
// Panels are zipped: the k-th specialization binds every variable to its
// k-th value. A panel of '-' means the record has no free variables.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qmock/error.hpp"
#include "qmock/expr.hpp"

namespace qmock {

using Bindings = std::vector<std::pair<std::string, std::string>>;

struct IdentityRecord {
  std::string id;
  std::vector<std::string> aliases;
  std::string lhs;
  std::string rhs;
  std::vector<Bindings> panel;  // empty: a single unspecialized check
  long min_order = 20;
  std::string anchor;
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const {
    for (const auto& x : tags)
      if (x == t) return true;
    return false;
  }
  bool matches(const std::string& name) const {
    if (name == id) return true;
    for (const auto& a : aliases)
      if (a == name) return true;
    return false;
  }
  std::size_t pair_count() const { return panel.empty() ? 1 : panel.size(); }
};

inline std::string bindings_label(const Bindings& b) {
  if (b.empty()) return "-";
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::vector<Bindings> parse_panel(const std::string& text, const std::string& where) {
  if (text == "-" || text.empty()) return {};
  std::vector<std::pair<std::string, std::vector<std::string>>> vars;
  for (const auto& part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorKind::parse_error, where + ": panel entry '" + part + "' lacks '='");
    vars.emplace_back(trim(part.substr(0, eq)), split(part.substr(eq + 1), ','));
  }
  const std::size_t n = vars.front().second.size();
  for (const auto& v : vars)
    if (v.second.size() != n) fail(ErrorKind::parse_error, where + ": panel lists have different lengths");
  std::vector<Bindings> panel(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& v : vars) panel[k].emplace_back(v.first, v.second[k]);
  return panel;
}

}  // namespace detail

inline IdentityRecord parse_record(const std::string& line, const std::string& where = "registry") {
  auto f = detail::split(line, '|');
  if (f.size() != 6 && f.size() != 7)
    fail(ErrorKind::parse_error, where + ": expected 6 or 7 '|'-separated fields, got " + std::to_string(f.size()));
  IdentityRecord r;
  auto ids = detail::split(f[0], ',');
  r.id = ids.front();
  if (r.id.empty()) fail(ErrorKind::parse_error, where + ": empty id");
  r.aliases.assign(ids.begin() + 1, ids.end());
  r.lhs = f[1];
  r.rhs = f[2];
  parse_expression(r.lhs);
  parse_expression(r.rhs);
  r.panel = detail::parse_panel(f[3], where + " (" + r.id + ")");
  for (const auto& b : r.panel)
    for (const auto& kv : b) parse_expression(kv.second);
  try {
    r.min_order = std::stol(f[4]);
  } catch (const std::exception&) {
    fail(ErrorKind::parse_error, where + " (" + r.id + "): min_order '" + f[4] + "' is not an integer");
  }
  r.anchor = f[5];
  if (f.size() == 7 && !f[6].empty()) r.tags = detail::split(f[6], ',');
  return r;
}

inline std::vector<IdentityRecord> parse_registry(const std::string& text) {
  std::vector<IdentityRecord> out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_record(t, "line " + std::to_string(lineno)));
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[b].matches(out[a].id))
        fail(ErrorKind::parse_error, "duplicate registry id '" + out[a].id + "'");
  return out;
}

inline std::string format_record(const IdentityRecord& r) {
  std::string ids = r.id;
  for (const auto& a : r.aliases) ids += "," + a;
  std::string panel = "-";
  if (!r.panel.empty()) {
    panel.clear();
    for (std::size_t v = 0; v < r.panel.front().size(); ++v) {
      if (v) panel += ";";
      panel += r.panel.front()[v].first + "=";
      for (std::size_t k = 0; k < r.panel.size(); ++k) panel += (k ? "," : "") + r.panel[k][v].second;
    }
  }
  std::string tags;
  for (const auto& t : r.tags) tags += (tags.empty() ? "" : ",") + t;
  return ids + " | " + r.lhs + " | " + r.rhs + " | " + panel + " | " + std::to_string(r.min_order) + " | " +
         r.anchor + (tags.empty() ? "" : " | " + tags);
}

inline std::string export_registry(const std::vector<IdentityRecord>& records) {
  std::string out = "# qmock identity registry\n";
  for (const auto& r : records) out += format_record(r) + "\n";
  return out;
}

// ------------------------------------------------------------- built-in

inline const char* builtin_registry_text() {
  return R"REG(
# --- bilateral g3 and its specializations
thm2.1 | j(-x*q; 2)*g3_c(x*q, 2) + j(x*q; 2)*g3_c(-x*q, 2) | 4*J(4)^5/(J(2)^2*j(x^2*q^2; 4)) | x=2,3/2,-5,w | 30 | bilateral g3 at x*q and -x*q combine to a theta quotient | theorem,generic
thm2.1.q3 | j(-x*q^3; 6)*g3_c(x*q^3, 6) + j(x*q^3; 6)*g3_c(-x*q^3, 6) | 4*J(12)^5/(J(6)^2*j(x^2*q^6; 12)) | x=q,q^2 | 30 | g3 theta relation with q -> q^3 at x = q | theorem
cor.omega-pair | omega_c(1) + J(1)^4*J(4)^2/J(2)^6*omega_c(-q) | 4*J(1)^2*J(4)^8/J(2)^9 | - | 30 | bilateral omega at q and -q | corollary,rational
cor.rho-pair | rho_c(1) + J(2)^3*J(3)^2*J(12)/(J(1)^2*J(4)*J(6)^3)*rho_c(-q) | 4*J(3)*J(4)^2*J(12)^2/(J(1)*J(6)^3) | - | 30 | bilateral rho at q and -q | corollary,rational
cor.sigma-beta | sigma_c(1) + J(2)*J(3)^2/(q*J(1)^2*J(6))*beta_c(1) | 4*J(6)^5/(J(1)*J(2)*J(3)^2) | - | 30 | bilateral sigma against bilateral beta | corollary,rational
# --- bilateral R against bilateral g3
thm2.3 | j(x*q; 2)*R_c(x, 2) - (1 - 1/x)*q*j(x; 2)*g3_c(x*q, 2) | (1 - x)*J(1)^5/(J(2)^2*j(x; 1)) | x=2,3/2,-5,i | 30 | bilateral rank function against bilateral g3 | theorem,generic
thm2.3.limit | R(1, 1) | 1/J(1) | - | 30 | rank generating function at x = 1 | theorem,rational
cor.fc-omegac | f_c(2) - 4*q*J(1)^2*J(4)^4/J(2)^6*omega_c(-q) | J(1)^8*J(4)^2/J(2)^9 | - | 30 | bilateral f at q^2 against bilateral omega at -q | corollary,rational
cor.phic-nuc | phi_c(2) - 2*q*J(2)*J(8)^2/J(4)^3*nu_c(2) | J(1)^4*J(8)/(J(2)*J(4)^3) | - | 30 | bilateral phi against bilateral nu | corollary,rational
fact.phic-closed | phi_c(1) | J(2)^7/(J(1)^3*J(4)^3) | - | 30 | bilateral phi is a theta quotient | auxiliary,rational
fact.phic-split | phi_c(1) | phi(1) + 2*psi(1) | - | 30 | bilateral phi splits into phi and psi | auxiliary,rational
fact.nuc-closed | nu_c(1) | 2*J(4)^3/J(2)^2 | - | 30 | bilateral nu is a theta quotient | auxiliary,rational
fact.nuc-split | nu_c(1) | nu(1) + nu(-q) | - | 30 | bilateral nu splits into nu at q and -q | auxiliary,rational
cor.chic-rhoc | chi_c(2) - q*J(2)^3*J(3)*J(12)^2/(J(1)*J(4)^2*J(6)^3)*rho_c(-q) | J(1)^2*J(3)^2*J(12)/(J(4)*J(6)^3) | - | 30 | bilateral chi against bilateral rho | corollary,rational
fact.cube-root-poch | poch(-w*q, 1, 7)*poch(-q/w, 1, 7) | poch(-q^3, 3, 7)/poch(-q, 1, 7) | - | 30 | finite product over the cube roots collapses | auxiliary,rational
fact.cube-root-poch-inf | poch(-w*q, 2, inf)*poch(-q/w, 2, inf) | poch(-q^3, 6, inf)/poch(-q, 2, inf) | - | 30 | infinite product over the cube roots collapses | auxiliary,rational
# --- bilateral g3 at x and x*q
thm2.6 | x*j(x*q; 2)*g3_c(x, 2) + q/x*j(x; 2)*g3_c(x*q, 2) | J(1)^5/(J(2)^2*j(x; 1)) - J(2)*j(x; 1)/J(1) | x=2,3/2,-5,i | 30 | bilateral g3 at x and x*q | theorem,generic
def.M-g3 | M(1) | g3(-1, 1) | - | 30 | M is g3 at x = -1 | definition,rational
def.N-g3 | N(1) | q*g3(q, 6) | - | 30 | N is q*g3(q, q^6) | definition,rational
cor.Mc-omegac | M_c(2) + 2*q*J(1)^2*J(4)^4/J(2)^6*omega_c(-q) | 2*J(4)^2/J(2)^2 - J(1)^8*J(4)^2/(2*J(2)^9) | - | 30 | bilateral M against bilateral omega | corollary,rational
cor.sigmac-Nc | q^2*sigma_c(2) - J(1)*J(4)^2*J(6)^3/(J(2)^3*J(3)*J(12)^2)*N_c(-q) | J(4)*J(6)/(J(2)*J(12)) - J(1)^2*J(3)^2*J(4)/(J(2)^3*J(12)) | - | 30 | bilateral sigma against bilateral N at -q | corollary,rational
cor.betac-Nc | beta_c(2) + J(2)^2*J(3)/(J(1)*J(6)^2)*N_c(1) | J(2)*J(3)^6/(J(1)^2*J(6)^4) - J(2)/J(6) | - | 30 | bilateral beta against bilateral N | corollary,rational
appB.fc-2Mc | f_c(1) + 2*M_c(1) | 4*J(2)^2/J(1)^2 | - | 30 | bilateral f plus twice bilateral M | corollary,rational
# --- K, K1, g2, S2
thm2.9.K-K1 | x/(x - 1)*K_c(x, 1) + (1 - 1/(x*q))*K1_c(x*q, 1) | j(x*q^2; 2)/J(1) | x=2,3/2,-5,i | 30 | bilateral K against bilateral K1 | theorem,generic
thm2.9.K-g2 | J(1)*j(-x*q; 2)/(x - 1)*K_c(x, 1) + 2*q*J(4)*j(x; 2)/x*g2_c(-x*q, 2) | 2*q*J(4)^5*j(x; 2)/(x*J(2)^2*j(x^2*q^2; 4)) - J(4)^11*j(x; 2)*j(-x^2*q^2; 4)/(x^2*J(2)^4*J(8)^4*j(x^2*q^2; 4)*j(-x^2*q^4; 4)) + J(4)^5*j(x; 2)*j(-x*q; 2)/(x^2*J(8)^2*j(x*q; 2)*j(-x^2*q^4; 4)) - J(1)^5*j(-x*q; 2)/(J(2)^2*j(x; 1)) | x=2,3/2,-5,w | 30 | bilateral K against bilateral g2 | theorem,generic
thm2.9.S2-g3 | 2*x*J(4)^2*j(x*q; 2)*S2_c(x^2, 2) - q*J(2)^2*j(x^2*q^2; 4)*g3_c(x*q, 2) | x*J(4)^12*j(x*q; 2)*j(-x^2*q^2; 4)/(J(2)^4*J(8)^4*j(x^2*q^2; 4)*j(-x^2; 4)) - x*J(2)^5*j(x^2*q^2; 4)*j(-x*q; 2)^2/(2*J(4)^2*j(-x^2; 2)*j(x*q; 2)) - x*J(2)^5*j(x*q; 2)*j(x^2*q^2; 4)/(2*J(4)^2*j(-x^2; 2)) | x=2,3/2,-5,w | 30 | bilateral S2 against bilateral g3 | theorem,generic
appB.mu-R2 | mu_c(1) + R2_c(1) | 4*J(4)^2/(J(1)*J(2)) | - | 30 | bilateral mu plus bilateral R2 | corollary,rational
cor.muc-Bc | mu_c(1) + 8*q*J(4)^3/J(1)^3*B_c(1) | 8*q*J(4)^8/(J(1)^3*J(2)^4) + 2*J(4)^20/(J(1)^3*J(2)^8*J(8)^8) + J(1)^5/J(2)^4 - 2*J(1)*J(4)^10/(J(2)^6*J(8)^4) | - | 30 | bilateral mu against bilateral B | corollary,rational
cor.Phic-omegac | 16*Phi_cap_c(2) - 4*q*J(2)^5/(J(1)^2*J(4)^3)*omega_c(1) | 2*J(4)^17/(J(2)^8*J(8)^8) - J(2)^20/(J(1)^8*J(4)^11) - J(2)^8/J(4)^7 | - | 30 | bilateral Phi at q^2 against bilateral omega | corollary,rational
remark.theta-quotient | J(2)^20/(J(1)^11*J(4)^8) | 8*q*J(4)^8/(J(1)^3*J(2)^4) + 2*J(4)^20/(J(1)^3*J(2)^8*J(8)^8) + J(1)^5/J(2)^4 - 2*J(1)*J(4)^10/(J(2)^6*J(8)^4) | - | 40 | pure theta-quotient identity | remark,rational
remark.muc-Bc-quotient | mu_c(1) + 8*q*J(4)^3/J(1)^3*B_c(1) | J(2)^20/(J(1)^11*J(4)^8) | - | 30 | bilateral mu and B as a single quotient | remark,rational
remark.Phic-omegac-simplified | 16*Phi_cap_c(2) - 4*q*J(2)^5/(J(1)^2*J(4)^3)*omega_c(1) | -8*q*J(4)^5/J(2)^4 | - | 30 | bilateral Phi and omega as a single quotient | remark,rational
# --- classical against bilateral
classical.Phi-omegac | 2*J(1)^2/J(2)^2*Phi_cap(1) | q*omega_c(1) | - | 30 | Phi against bilateral omega | theorem,rational
classical.gamma-sigmac | J(2)*J(3)/(J(1)*J(6))*gamma(1) - 3*q*sigma_c(1) | J(1)^4/(J(2)^2*J(3)) | - | 30 | gamma against bilateral sigma | theorem,rational
classical.betac-phiminus | beta_c(1) - J(1)/J(3)*phi_minus(1) | q*J(1)*J(6)^6/(J(2)^2*J(3)^4) | - | 30 | bilateral beta against phi_minus | theorem,rational
classical.f-Ac | J(2)^5/(J(1)^3*J(4)^2)*f(2) + 4*A_c(-q) | J(1)^5/J(2)^4 | - | 30 | f at q^2 against bilateral A at -q | theorem,rational
classical.phi-U1c | J(4)^2/(J(1)*J(8))*phi(2) + 2*U1_c(-q) | J(1)^3/(J(2)*J(4)) | - | 30 | phi at q^2 against bilateral U1 at -q | theorem,rational
classical.muc-omega | mu_c(1) - 4*q*J(4)^2/(J(1)*J(2))*omega(-q) | J(1)^5/J(2)^4 | - | 30 | bilateral mu against omega at -q | theorem,rational
classical.U0c-nu | U0_c(-q) - 2*q*J(2)*J(8)/(J(1)*J(4))*nu(2) | J(1)^3/(J(2)*J(4)) | - | 30 | bilateral U0 at -q against nu at q^2 | theorem,rational
classical.Bc-omega | 8*q*J(4)^3/J(1)^3*B_c(1) + 4*q*J(4)^2/(J(1)*J(2))*omega(-q) | 2*J(4)^20/(J(1)^3*J(2)^8*J(8)^8) + 8*q*J(4)^8/(J(1)^3*J(2)^4) - 2*J(1)*J(4)^10/(J(2)^6*J(8)^4) | - | 30 | bilateral B against omega at -q | theorem,rational
classical.V1c-psi | 2*V1_c(1) - J(1)*J(4)/(J(2)*J(8))*psi(-q) | J(8)^9/(J(2)*J(4)^3*J(16)^4) + 2*q*J(8)^3/(J(2)*J(4)) - J(1)^2*J(8)^4/(J(2)^2*J(4)*J(16)^2) | - | 30 | bilateral V1 against psi at -q | theorem,rational
# --- catalog facts
rel.mu-R2 | mu(1) + R2(1) | 2 | - | 40 | mu plus R2 is constant | definition,rational
rel.omegac-D5 | omega_c(1) | omega(1) + J(1)^2/J(2)^2*D5(1) | - | 40 | bilateral omega through D5 | definition,rational
rel.omegac-negative-part | omega_c(1) - omega(1) | sum(n>=0; poch(q, 2, n)^2*q^(2*n)) | - | 40 | negative-index half of bilateral omega | definition,rational
rel.f0c-split | f0_c(1) | f0(1) + 2*psi0(1) | - | 40 | bilateral f0 splits into f0 and twice psi0 | definition,rational
rel.f0c-split-sum | f0_c(1) | f0(1) + 2*sum(n>=1; poch(-q, 1, n - 1)*q^(n*(n + 1)/2)) | - | 40 | negative-index half of bilateral f0 as an explicit sum | definition,rational
# --- Appell-Lerch representations
prop.g3c-m | q*g3_c(x*q, 2) | -x*j(x*q; 2)/J(2)*alm(x^2, 2, q/x) | x=2,3/2,-5,i | 30 | bilateral g3 as an Appell-Lerch sum | proposition,generic
prop.Rc-m | R_c(x, 1) | (1 - x)*j(x; 1)/J(1)*alm(x^2, 1, 1/x) | x=2,3/2,-5,i | 30 | bilateral R as an Appell-Lerch sum | proposition,generic
prop.S2c-m | 2*S2_c(x, 1) | -J(1)*j(x*q; 2)/J(2)^2*alm(x, 1, -1) - J(1)^5*j(x*q; 2)/(2*J(2)^4*j(-x; 1)) + J(2)^10*j(-x*q; 2)/(J(1)^4*J(4)^4*j(x*q; 2)*j(-x; 2)) | x=2,3/2,-5,w | 30 | bilateral S2 as an Appell-Lerch sum | proposition,generic
prop.K1c-g3 | (1 - 1/x)*K1_c(x, 1) | j(x*q; 2)/J(1)*(1 + x*g3(x, 2)) - J(1)^4/(J(2)^2*j(x; 1)) | x=2,3/2,-5,i | 30 | bilateral K1 through g3 | proposition,generic
prop.Kc-g3 | K_c(x, 1)/(1 - x) | -q*j(x; 2)/(x*J(1))*g3(x*q, 2) + J(1)^4/(J(2)^2*j(x; 1)) | x=2,3/2,-5,i | 30 | bilateral K through g3 | proposition,generic
prop.g2c-g3 | g2_c(x, 1) | -j(x; 1)/(2*J(2))*g3(-x, 1) + J(2)^10*j(-x^2; 2)/(2*x*J(1)^4*J(4)^4*j(x^2; 2)*j(-x^2*q; 2)) + J(2)^4/(J(1)^2*j(x^2; 2)) - J(2)^4*j(x; 1)/(2*x*J(4)^2*j(-x; 1)*j(-x^2*q; 2)) | x=2,3/2,-5,w | 30 | bilateral g2 through g3 | proposition,generic
prop.g3-m | g3(x, 1) | -1/x*alm(q^2/x^3, 3, x^2) - 1/x^2*alm(q/x^3, 3, x^2) | x=2,3/2,-5,i | 30 | g3 as two Appell-Lerch sums | proposition,generic
alm.z-shift | alm(x, 1, z) - alm(x, 1, y) | y*J(1)^3*j(z/y; 1)*j(x*z*y; 1)/(j(y; 1)*j(z; 1)*j(x*y; 1)*j(x*z; 1)) | x=q,2,3/2;z=2*q,-1,i;y=3*q,5*q,-q | 30 | Appell-Lerch change of z | auxiliary
alm.x-shift | alm(q*x, 1, z) | 1 - x*alm(x, 1, z) | x=3*q,2,-5;z=-1,q^(1/2),w | 30 | Appell-Lerch shift of x by q | auxiliary
# --- facts used along the way
aux.g3c-pair-m | j(-x*q; 2)*g3_c(x*q, 2) + j(x*q; 2)*g3_c(-x*q, 2) | -x*j(x*q; 2)*j(-x*q; 2)/(q*J(2))*(alm(x^2, 2, q/x) - alm(x^2, 2, -q/x)) | x=2,-5,w | 30 | g3 pair through a difference of Appell-Lerch sums | auxiliary,generic
aux.Rc-g3c-products | poch(q/x, 2, inf)*poch(x*q, 2, inf)*R_c(x, 2) - poch(1/x, 2, inf)*poch(x, 2, inf)*q*g3_c(x*q, 2) | poch(q, 2, inf)^4*poch(q^2, 2, inf)/(poch(q/x, 1, inf)*poch(x*q, 1, inf)) | x=2,-5,i | 30 | R and g3 combination in product form | auxiliary,generic
aux.g3c-x-xq-m | x*j(x*q; 2)*g3_c(x, 2) + q/x*j(x; 2)*g3_c(x*q, 2) | J(2)*j(x; 1)/J(1)*(alm(x^2, 2, q^2/x) - 1 - alm(x^2, 2, q/x)) | x=2,-5,i | 30 | g3 at x and x*q through Appell-Lerch sums | auxiliary,generic
aux.m-difference | alm(x^2, 2, q^2/x) - alm(x^2, 2, q/x) | J(1)^6/(J(2)^3*j(x; 1)^2) | x=2,-5,i | 30 | difference of two Appell-Lerch sums | auxiliary,generic
aux.m-to-minus-one | alm(x^2, 2, q/x) | alm(x^2, 2, -1) - J(2)^4*j(-x*q; 2)^2/(2*J(4)^2*j(-x^2; 2)*j(x*q; 2)^2) | x=2,-5,w | 30 | Appell-Lerch sum moved to z = -1 | auxiliary,generic
aux.omegac-m | q*omega_c(1) | -J(1)^2/J(2)^2*alm(1, 2, q) | - | 30 | bilateral omega as an Appell-Lerch sum | auxiliary,rational
aux.S2-m | S2(x, 1) | -alm(x, 2, q) | x=2,-5,i | 30 | S2 as an Appell-Lerch sum | auxiliary,generic
aux.Phi-m | alm(1, 2, q) | -2*Phi_cap(1) | - | 30 | Phi as an Appell-Lerch sum | auxiliary,rational
aux.sigmac-m | sigma_c(1) | J(2)*J(3)/(q*J(1)*J(6))*alm(q, 3, -q) | - | 30 | bilateral sigma as an Appell-Lerch sum | auxiliary,rational
aux.gamma-m | gamma(1) | 3*alm(q, 3, -q) + J(1)^5*J(6)/(J(2)^3*J(3)^2) | - | 30 | gamma as an Appell-Lerch sum | auxiliary,rational
aux.betac-m | beta_c(1) | -J(1)/J(3)*alm(q, 3, q) | - | 30 | bilateral beta as an Appell-Lerch sum | auxiliary,rational
aux.phiminus-m | phi_minus(1) | -alm(q, 3, q) - q*J(6)^6/(J(2)^2*J(3)^3) | - | 30 | phi_minus as an Appell-Lerch sum | auxiliary,rational
aux.K1c-minus-one | 2*K1_c(-1, 1) | J(2)^5/(J(1)^3*J(4)^2)*(1 - g3(-1, 2)) - J(1)^5/(2*J(2)^4) | - | 30 | bilateral K1 at x = -1 | auxiliary,rational
aux.K1c-Ac | K1_c(-1, 1) | -A_c(-q) | - | 30 | bilateral K1 at -1 is bilateral A at -q | auxiliary,rational
aux.f-g3 | f(1) | 2 - 2*g3(-1, 1) | - | 30 | f through g3 at -1 | auxiliary,rational
aux.K1c-i | (1 + i)*K1_c(i, 1) | j(i*q; 2)/J(1)*(1 + i*g3(i, 2)) - J(1)^4/(J(2)^2*j(i; 1)) | - | 30 | bilateral K1 at x = i | auxiliary
aux.K1c-U1c | K1_c(i, 1) | -U1_c(-q) | - | 30 | bilateral K1 at i is bilateral U1 at -q | auxiliary
aux.phi-g3 | phi(1) | (1 - i)*(1 + i*g3(i, 1)) | - | 30 | phi through g3 at i | auxiliary
aux.m-sign-of-z | alm(q, 3, -q) | alm(q, 3, q) + 4*q*J(6)^6/(J(2)^2*J(3)^3) | - | 30 | Appell-Lerch sum at z = -q and z = q | auxiliary,rational
aux.Phic-m | 4*Phi_cap_c(1) | -J(1)^3/J(2)^3*alm(1, 1, -1) + J(2)^17/(2*J(1)^8*J(4)^8) - J(1)^8/(4*J(2)^7) | - | 30 | bilateral Phi as an Appell-Lerch sum | auxiliary,rational
aux.fc-m | f_c(1) | 4*J(2)^2/J(1)^2*alm(1, 1, -1) | - | 30 | bilateral f as an Appell-Lerch sum | auxiliary,rational
aux.Phic-fc | 16*Phi_cap_c(1) + J(1)^5/J(2)^5*f_c(1) | 2*J(2)^17/(J(1)^8*J(4)^8) - J(1)^8/J(2)^7 | - | 30 | bilateral Phi against bilateral f | auxiliary,rational
# --- bilateral basic hypergeometric series
hyper.1psi1 | sum(n; poch(a, 1, n)/poch(b, 1, n)*z^n) | poch(q, 1, inf)*poch(b/a, 1, inf)*poch(a*z, 1, inf)*poch(q/(a*z), 1, inf)/(poch(b, 1, inf)*poch(q/a, 1, inf)*poch(z, 1, inf)*poch(b/(a*z), 1, inf)) | a=2*q^-2,q^-3,3*q^(-3/2);b=3*q,-2,1/2;z=5*q,q,q^(1/2) | 30 | one-psi-one summation | appendix
hyper.bailey | sum(n; poch(a, 1, n)*poch(b, 1, n)/(poch(c, 1, n)*poch(d, 1, n))*z^n) | poch(a*z, 1, inf)*poch(d/a, 1, inf)*poch(c/b, 1, inf)*poch(d*q/(a*b*z), 1, inf)/(poch(z, 1, inf)*poch(d, 1, inf)*poch(q/b, 1, inf)*poch(c*d/(a*b*z), 1, inf))*sum(n; poch(a, 1, n)*poch(a*b*z/d, 1, n)/(poch(a*z, 1, n)*poch(c, 1, n))*(d/a)^n) | a=2,-2;b=3,1/3;c=5*q,q^2;d=7*q,-q;z=q,2*q | 30 | two-psi-two transformation | appendix
hyper.bailey-q2 | sum(n; poch(a^2, 2, n)*poch(b^2, 2, n)/(poch(a*b*q, 2, n)*poch(-a*b*q, 2, n))*(-q^2/z)^n) | poch(-a^2*q^2/z, 2, inf)*poch(-b*q/a, 2, inf)*poch(a*q/b, 2, inf)*poch(z*q/(a*b), 2, inf)/(poch(-q^2/z, 2, inf)*poch(-a*b*q, 2, inf)*poch(q^2/b^2, 2, inf)*poch(z, 2, inf))*sum(n; poch(a^2, 2, n)*poch(a*b*q/z, 2, n)/(poch(-a^2*q^2/z, 2, n)*poch(a*b*q, 2, n))*(-b*q/a)^n) | a=2,-1/2;b=3,3;z=5*q,q | 30 | two-psi-two transformation in base q^2 | appendix
hyper.psi-theta-split | poch(z, 2, inf)*sum(n; poch(a^2, 2, n)*poch(b^2, 2, n)/(poch(a*b*q, 2, n)*poch(-a*b*q, 2, n))*(-q^2/z)^n) | poch(a^2*q^2, 4, inf)*poch(b^2*q^2, 4, inf)/(poch(a^2*b^2*q^2, 4, inf)*poch(q^2, 4, inf))*sum(n; q^(4*n^2)*(z/(a*b))^(2*n)/(poch(q^4/a^2, 4, n)*poch(q^4/b^2, 4, n))) - q^2/z*poch(a^2, 4, inf)*poch(b^2, 4, inf)/(poch(a^2*b^2*q^2, 4, inf)*poch(q^2, 4, inf))*sum(n; q^(4*n^2 - 4*n)*(z/(a*b))^(2*n)/(poch(q^2/a^2, 4, n)*poch(q^2/b^2, 4, n))) | a=2,-1/2,w;b=3,3,2;z=5*q,q,-q | 30 | two-psi-two as two theta-type sums | appendix
hyper.psi-theta-split-transformed | poch(-a^2*q^2/z, 2, inf)*poch(-b*q/a, 2, inf)*poch(a*q/b, 2, inf)*poch(z*q/(a*b), 2, inf)/(poch(-q^2/z, 2, inf)*poch(-a*b*q, 2, inf)*poch(q^2/b^2, 2, inf))*sum(n; poch(a^2, 2, n)*poch(a*b*q/z, 2, n)/(poch(-a^2*q^2/z, 2, n)*poch(a*b*q, 2, n))*(-b*q/a)^n) | poch(a^2*q^2, 4, inf)*poch(b^2*q^2, 4, inf)/(poch(a^2*b^2*q^2, 4, inf)*poch(q^2, 4, inf))*sum(n; q^(4*n^2)*(z/(a*b))^(2*n)/(poch(q^4/a^2, 4, n)*poch(q^4/b^2, 4, n))) - q^2/z*poch(a^2, 4, inf)*poch(b^2, 4, inf)/(poch(a^2*b^2*q^2, 4, inf)*poch(q^2, 4, inf))*sum(n; q^(4*n^2 - 4*n)*(z/(a*b))^(2*n)/(poch(q^2/a^2, 4, n)*poch(q^2/b^2, 4, n))) | a=2,-1/2,2;b=3,3,3;z=5*q,q,1 | 30 | transformed two-psi-two as two theta-type sums | appendix
hyper.psi-theta-split-z1 | poch(-q^2/x, 2, inf)*poch(-x*q, 2, inf)*poch(q/x, 2, inf)*poch(q, 2, inf)/(poch(-q^2, 2, inf)*poch(-q, 2, inf)*poch(q^2/x, 2, inf))*sum(n; poch(1/x, 2, n)/poch(-q^2/x, 2, n)*(-x*q)^n) | poch(q^2/x, 4, inf)*poch(x*q^2, 4, inf)/poch(q^2, 4, inf)^2*sum(n; q^(4*n^2)/(poch(x*q^4, 4, n)*poch(q^4/x, 4, n))) - q^2*poch(1/x, 4, inf)*poch(x, 4, inf)/poch(q^2, 4, inf)^2*sum(n; q^(4*n^2 - 4*n)/(poch(x*q^2, 4, n)*poch(q^2/x, 4, n))) | x=2,-5,i | 30 | one-psi-one against two theta-type sums | appendix,generic
hyper.psi-theta-split-Rc | poch(q^2, 2, inf)*poch(q^2, 4, inf)/(poch(q^2/x, 2, inf)*poch(x*q^2, 2, inf)) | poch(q^2/x, 4, inf)*poch(x*q^2, 4, inf)/poch(q^2, 4, inf)^2*R_c(x, 4) - q^2*poch(1/x, 4, inf)*poch(x, 4, inf)/poch(q^2, 4, inf)^2*g3_c(x*q^2, 4) | x=2,-5,i | 30 | product against bilateral R and g3 in base q^4 | appendix,generic
hyper.zs2 | sum(n>=0; poch(a, 1, n)*poch(1/a, 1, n)*q^(n*(n - 1)/2)*c^n/(poch(q^2, 2, n)*poch(c, 1, n))) | (poch(q*a*c, 2, inf)*poch(c/a, 2, inf) + a*poch(a*c, 2, inf)*poch(q*c/a, 2, inf))/((1 + a)*poch(c, 1, inf)) | a=2,-3,2;c=3*q,q/2,-1/3 | 30 | summation with (a, 1/a) numerator pair | appendix
hyper.sum-an | sum(n; z^n*q^(n^2/2)/poch(c, 1, n)) | poch(q, 1, inf)*poch(-z*q^(1/2), 1, inf)*poch(-q^(1/2)/z, 1, inf)/(poch(c, 1, inf)*poch(-c/(z*q^(1/2)), 1, inf)) | c=2*q^2,-q,3*q^(3/2);z=3,1/2,-2 | 30 | bilateral sum with a single denominator symbol | appendix
hyper.andrews | 1/(1 + a)*sum(n; poch(a*c*q^(n + 1), 2, inf)*poch(c*q^n/a, 2, inf)*z^n*q^(n^2/2)) + a/(1 + a)*sum(n; poch(a*c*q^n, 2, inf)*poch(c*q^(n + 1)/a, 2, inf)*z^n*q^(n^2/2)) | poch(q, 1, inf)*poch(-z*q^(1/2), 1, inf)*poch(-q^(1/2)/z, 1, inf)/poch(-c/(z*q^(1/2)), 1, inf)*sum(m>=0; poch(a, 1, m)*poch(1/a, 1, m)*(c/(z*q^(1/2)))^m/(poch(q, 1, m)*poch(-q, 1, m))) | a=2,-3,1/2;c=q^2,2*q^(3/2),q^2;z=3,-1,q^(1/2) | 30 | transformation lemma instance with infinite products in the summand | appendix
hyper.andrews-parity | poch(x*q^2, 2, inf)*poch(q^2/x, 2, inf)/(1 + x/q^(1/2))*sum(n; q^(2*n^2)/(poch(x*q^2, 2, n)*poch(q^2/x, 2, n))) - q^(1/2)*poch(x*q^3, 2, inf)*poch(q^3/x, 2, inf)/(1 + x/q^(1/2))*sum(n; q^(2*n^2 + 2*n)/(poch(x*q^3, 2, n)*poch(q^3/x, 2, n))) + x*poch(x*q, 2, inf)*poch(q^3/x, 2, inf)/(q^(1/2)*(1 + x/q^(1/2)))*sum(n; q^(2*n^2)/(poch(x*q, 2, n)*poch(q^3/x, 2, n))) - x*poch(x*q^2, 2, inf)*poch(q^4/x, 2, inf)/(1 + x/q^(1/2))*sum(n; q^(2*n^2 + 2*n)/(poch(x*q^2, 2, n)*poch(q^4/x, 2, n))) | poch(q^(1/2), 1, inf)^2*sum(m>=0; poch(x/q^(1/2), 1, m)*poch(q^(1/2)/x, 1, m)*(-q)^m/(poch(q, 1, m)*poch(-q, 1, m))) | x=2,-5,i | 30 | transformation lemma split by parity at half-integer parameters | appendix,generic
hyper.qgauss | sum(n>=0; poch(a, 1, n)*poch(b, 1, n)*(c/(a*b))^n/(poch(q, 1, n)*poch(c, 1, n))) | poch(c/a, 1, inf)*poch(c/b, 1, inf)/(poch(c, 1, inf)*poch(c/(a*b), 1, inf)) | a=2*q,-q,2*q^(-1/2);b=3*q,2,q^(1/2)/2;c=5*q^3,3*q^2,-q | 30 | q-Gauss summation | appendix
hyper.after-qgauss | q^(1/2)/x*poch(x*q^2, 2, inf)*poch(q^2/x, 2, inf)*R_c(x, 2) - q/x*poch(x*q, 2, inf)*poch(q/x, 2, inf)*g3_c(x*q, 2) + poch(x*q, 2, inf)*poch(q^3/x, 2, inf)*R_c(x/q, 2) - q^(1/2)*poch(x, 2, inf)*poch(q^2/x, 2, inf)*g3_c(x, 2) | poch(q^(1/2), 1, inf)^2*poch(q, 2, inf)^2*poch(-x*q^(1/2), 1, inf)*poch(-q^(1/2)/x, 1, inf) | x=2,-5,i | 30 | bilateral R and g3 at half-integer shifts against a product | appendix,generic
hyper.g3c-two-terms | (q^(3/2)/x*poch(x, 2, inf)*poch(x*q^2, 2, inf)*poch(1/x, 2, inf)*poch(q^2/x, 2, inf)/(poch(x*q, 2, inf)*poch(q/x, 2, inf)) - q/x*poch(x*q, 2, inf)*poch(q/x, 2, inf))*g3_c(x*q, 2) + (q*poch(x/q, 2, inf)*poch(x*q, 2, inf)*poch(q/x, 2, inf)*poch(q^3/x, 2, inf)/(poch(x, 2, inf)*poch(q^2/x, 2, inf)) - q^(1/2)*poch(x, 2, inf)*poch(q^2/x, 2, inf))*g3_c(x, 2) | poch(q^(1/2), 1, inf)^2*poch(q, 2, inf)^2*poch(-x*q^(1/2), 1, inf)*poch(-q^(1/2)/x, 1, inf) - q^(1/2)/x*poch(q, 2, inf)^4*poch(q^2, 2, inf)/(poch(x*q, 2, inf)*poch(q/x, 2, inf))^2 - poch(q, 2, inf)^4*poch(q^2, 2, inf)/(poch(x, 2, inf)*poch(q^2/x, 2, inf))^2 | x=2,-5,i | 30 | bilateral g3 at x and x*q with product coefficients | appendix,generic
hyper.theta-product | j(-a*b; 2)*j(-q*b/a; 2) - a*j(-q*a*b; 2)*j(-b/a; 2) | j(a; 1)*j(b; 1) | a=2,-q,q^(1/2);b=3,5,-2*q^(1/2) | 30 | product of two theta functions in base q^2 | appendix
hyper.theta-product-1 | q^(1/2)*poch(x, 2, inf)*poch(x*q^2, 2, inf)*poch(1/x, 2, inf)*poch(q^2/x, 2, inf) - (poch(x*q, 2, inf)*poch(q/x, 2, inf))^2 | -j(q^(1/2); 1)*j(-x*q^(1/2); 1)/J(2)^2 | x=2,-5,i | 30 | theta product at a = q^(1/2), b = -x q^(1/2) | appendix,generic
hyper.theta-product-2 | q^(1/2)*poch(x/q, 2, inf)*poch(x*q, 2, inf)*poch(q/x, 2, inf)*poch(q^3/x, 2, inf) - (poch(x, 2, inf)*poch(q^2/x, 2, inf))^2 | -j(q^(1/2); 1)*j(-q^(3/2)/x; 1)/J(2)^2 | x=2,-5,i | 30 | theta product at a = q^(1/2), b = -q^(3/2)/x | appendix,generic
hyper.theta-product-3 | q^(1/2)/x*(poch(x, 2, inf)*poch(q^2/x, 2, inf))^2 + (poch(x*q, 2, inf)*poch(q/x, 2, inf))^2 | j(q^(1/2); 1)*j(-x*q^(1/2); 1)/J(2)^2 | x=2,-5,i | 30 | theta product at a = -q^(1/2)/x, b = q^(1/2) | appendix,generic
hyper.g3c-theta-coefficients | -q/x*j(q^(1/2); 1)*j(-x*q^(1/2); 1)/(poch(x*q, 2, inf)*poch(q/x, 2, inf)*J(2)^2)*g3_c(x*q, 2) - q^(1/2)*j(q^(1/2); 1)*j(-q^(3/2)/x; 1)/(poch(x, 2, inf)*poch(q^2/x, 2, inf)*J(2)^2)*g3_c(x, 2) | poch(q^(1/2), 1, inf)^2*poch(q, 2, inf)^2*poch(-x*q^(1/2), 1, inf)*poch(-q^(1/2)/x, 1, inf) - poch(q, 2, inf)^4*j(q^(1/2); 1)*j(-x*q^(1/2); 1)/((poch(x, 1, inf)*poch(q/x, 1, inf))^2*J(2)) | x=2,-5,i | 30 | bilateral g3 at x and x*q with theta coefficients | appendix,generic
)REG";
}

inline const std::vector<IdentityRecord>& builtin_registry() {
  static const std::vector<IdentityRecord> records = parse_registry(builtin_registry_text());
  return records;
}

inline const IdentityRecord* find_record(const std::vector<IdentityRecord>& records, const std::string& name) {
  for (const auto& r : records)
    if (r.matches(name)) return &r;
  return nullptr;
}

}  // namespace qmock
