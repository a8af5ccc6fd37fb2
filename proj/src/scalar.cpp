#include "quivalg/scalar.hpp"

#include <stdexcept>

namespace quivalg {

std::string scalar_to_string(const Scalar& x) {
  return x.get_str();
}

Scalar scalar_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("bad rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

} // namespace quivalg
