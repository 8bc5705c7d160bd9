#include "parv/rational.hpp"

#include <cctype>
#include <sstream>

namespace parv {

Scalar rational_from_string(const std::string& text) {
  if (text.empty()) throw input_error("empty rational token");
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw input_error("malformed rational '" + text + "'");
  Int n(num), d(den);
  if (d == 0) throw input_error("zero denominator in rational '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Scalar& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string decimal_approx(const Scalar& q, int digits) {
  mpf_class f(q, 128);
  std::ostringstream os;
  os.precision(digits);
  os << "~" << f;
  return os.str();
}

std::string vec_to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(v[i]);
  }
  return out + ")";
}

std::string ivec_to_string(const IVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace parv
