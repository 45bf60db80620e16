#include "qaw/monomial.hpp"

#include <sstream>

namespace qaw {

const char* Frame::var_name(int i) const {
  static const char* bcdef[] = {"b", "c", "d", "e", "f"};
  static const char* aw[] = {"a1", "a2", "a3", "a4", "t"};
  static const char* orbit[] = {"x1", "x2", "x3", "x4", "x5"};
  switch (kind) {
    case FrameKind::BCDEF: return bcdef[i];
    case FrameKind::AW: return aw[i];
    case FrameKind::Orbit: return orbit[i];
  }
  return "?";
}

namespace {
void append_exp(std::ostringstream& os, const char* base, int e2) {
  if (e2 == 0) return;
  os << "*" << base;
  if (e2 == 2) return;
  if (e2 % 2 == 0)
    os << "^" << (e2 / 2);
  else
    os << "^(" << e2 << "/2)";
}
}  // namespace

std::string ParamMonomial::str(const Frame& frame) const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "");
  bool wrote = false;
  if (q2 != 0 || n2 != 0) {
    os << "q^";
    bool frac = (q2 % 2) || (n2 % 2);
    os << (frac ? "((" : "(");
    if (frac) {
      os << q2;
      if (n2 > 0) os << "+" << n2 << "n";
      if (n2 < 0) os << n2 << "n";
      os << ")/2)";
    } else {
      os << q2 / 2;
      if (n2 > 0) os << "+" << n2 / 2 << "n";
      if (n2 < 0) os << n2 / 2 << "n";
      os << ")";
    }
    wrote = true;
  }
  std::ostringstream vs;
  for (int i = 0; i < frame.size(); ++i) append_exp(vs, frame.var_name(i), e2[static_cast<std::size_t>(i)]);
  std::string v = vs.str();
  if (!v.empty()) {
    os << (wrote ? v : v.substr(1));
    wrote = true;
  }
  if (!wrote) os << "1";
  return os.str();
}

void ParamMonomial::encode(std::string& out) const {
  auto put16 = [&out](std::int16_t v) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
  };
  out.push_back(static_cast<char>(sign));
  put16(q2);
  put16(n2);
  for (auto e : e2) put16(e);
}

ParamMonomial Substitution::apply(const ParamMonomial& m) const {
  ParamMonomial r;
  r.sign = m.sign;
  r.q2 = m.q2;
  r.n2 = m.n2;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = m.e2[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    const ParamMonomial& img = image[static_cast<std::size_t>(i)];
    if (e % 2 == 0) {
      r *= img.pow(e / 2);
    } else {
      // Half-integer exponent: route through the square root of the image.
      r *= img.sqrt().pow(e);
    }
  }
  return r;
}

}  // namespace qaw
