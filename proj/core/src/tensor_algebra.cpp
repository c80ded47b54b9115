#include "fqk/tensor_algebra.hpp"

#include "fqk/error.hpp"

namespace fqk {

TensorAlgebra::TensorAlgebra(const PvSpec& spec)
    : alphabet_(generator_alphabet(spec)) {
  if (alphabet_.empty()) throw DomainError("empty generator alphabet");
  if (alphabet_.size() > 255) throw DomainError("generator alphabet too large");
}

std::vector<GeneratorWord> TensorAlgebra::words_up_to(int d) const {
  std::vector<GeneratorWord> out{{}};
  std::size_t begin = 0;
  for (int deg = 1; deg <= d; ++deg) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t g = 0; g < alphabet_.size(); ++g) {
        GeneratorWord w = out[i];
        w.push_back(static_cast<std::uint8_t>(g));
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

std::uint8_t TensorAlgebra::generator(const std::string& label) const {
  for (std::size_t g = 0; g < alphabet_.size(); ++g) {
    if (alphabet_[g].label == label) return static_cast<std::uint8_t>(g);
  }
  throw DomainError("unknown generator: " + label);
}

GeneratorWord TensorAlgebra::word(const std::vector<std::string>& labels) const {
  GeneratorWord w;
  for (const auto& l : labels) w.push_back(generator(l));
  return w;
}

TensorElement TensorAlgebra::multiply(const TensorElement& a,
                                      const TensorElement& b) const {
  TensorElement out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      GeneratorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

Integer TensorAlgebra::epsilon(const GeneratorWord& w) const {
  Integer e = 1;
  for (const auto g : w) e *= Integer(alphabet_[g].dim);
  return e;
}

Integer TensorAlgebra::epsilon(const TensorElement& x) const {
  Integer e = 0;
  for (const auto& [w, c] : x) e += c * epsilon(w);
  return e;
}

std::uint8_t TensorAlgebra::theta(std::uint8_t g) const {
  return static_cast<std::uint8_t>(alphabet_[g].conjugate);
}

TensorElement TensorAlgebra::d(const TensorPair& x) const {
  TensorElement out;
  for (const auto& [key, c] : x) {
    const auto& [w, g] = key;
    GeneratorWord wg = w;
    wg.push_back(theta(g));
    out.add(wg, c);
    out.add(w, -(c * Integer(alphabet_[g].dim)));
  }
  return out;
}

TensorPair TensorAlgebra::h1(const TensorElement& x) const {
  TensorPair out;
  for (const auto& [w, c] : x) {
    // Unrolled: h_1(g_1...g_n) = sum_i eps(g_{i+1}...g_n) g_1...g_{i-1} (x) theta(g_i)
    Integer tail = c;
    for (std::size_t i = w.size(); i-- > 0;) {
      GeneratorWord prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      out.add({std::move(prefix), theta(w[i])}, tail);
      tail *= Integer(alphabet_[w[i]].dim);
    }
  }
  return out;
}

TensorElement TensorAlgebra::h0(const Integer& n) const {
  TensorElement out;
  out.add({}, n);
  return out;
}

std::string TensorAlgebra::render(const GeneratorWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ".";
    out += alphabet_[w[i]].label;
  }
  return out;
}

namespace {

template <class Terms, class Show>
std::string render_terms(const Terms& terms, Show show) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool negative = c.sign() < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body = show(key);
    if (body == "1") {
      out += mag.to_string();
    } else {
      if (!(mag == Integer(1))) out += mag.to_string() + "*";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string TensorAlgebra::render(const TensorElement& x) const {
  return render_terms(x.terms(), [&](const GeneratorWord& w) { return render(w); });
}

std::string TensorAlgebra::render(const TensorPair& x) const {
  return render_terms(x.terms(), [&](const auto& key) {
    return render(key.first) + " (x) " + alphabet_[key.second].label;
  });
}

ResolutionVerdict tv_resolution_check(const PvSpec& spec, int max_degree) {
  if (max_degree < 1) throw DomainError("resolution check needs degree >= 1");
  const TensorAlgebra tv(spec);
  ResolutionVerdict v;
  v.max_degree = max_degree;
  auto fail = [&](std::string witness) {
    v.exact = false;
    v.witness = std::move(witness);
    return v;
  };
  for (const auto& w : tv.words_up_to(max_degree)) {
    TensorElement x;
    x.add(w, 1);
    // d h_1 (w) = w - h_0 eps (w)
    TensorElement expected = x;
    expected += tv.h0(-tv.epsilon(w));
    ++v.words;
    ++v.checks;
    if (!(tv.d(tv.h1(x)) == expected)) return fail(tv.render(w));
  }
  for (const auto& w : tv.words_up_to(max_degree - 1)) {
    for (std::size_t g = 0; g < tv.alphabet().size(); ++g) {
      TensorPair p;
      p.add({w, static_cast<std::uint8_t>(g)}, 1);
      const TensorElement dp = tv.d(p);
      ++v.pairs;
      v.checks += 2;
      if (!(tv.h1(dp) == p) || !tv.epsilon(dp).is_zero()) {
        return fail(tv.render(p));
      }
    }
  }
  return v;
}

}  // namespace fqk
