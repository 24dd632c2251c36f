#include "lexpow/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lexpow/errors.hpp"

namespace lexpow {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

long long parse_int(std::string_view text, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(Errc::malformed_input, std::string("cannot parse ") + what + ": '" +
                                    std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) break;
  }
  return parts;
}

Monomial parse_term(std::string_view term, int n) {
  if (term == "1") return Monomial::unit(n);
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (std::string_view factor : split(term, '*')) {
    if (factor.empty() || factor[0] != 'x') {
      fail(Errc::malformed_input, "bad factor '" + std::string(factor) + "'");
    }
    factor.remove_prefix(1);
    std::size_t caret = factor.find('^');
    long long var = 0;
    long long exp = 1;
    if (caret == std::string_view::npos) {
      var = parse_int(factor, "variable index");
    } else {
      var = parse_int(factor.substr(0, caret), "variable index");
      exp = parse_int(factor.substr(caret + 1), "exponent");
    }
    if (var < 1 || var > n) {
      fail(Errc::malformed_input, "variable x" + std::to_string(var) + " outside ring with n=" +
                                      std::to_string(n));
    }
    if (exp < 0) fail(Errc::malformed_input, "negative exponent");
    exps[static_cast<std::size_t>(var - 1)] += static_cast<int>(exp);
  }
  return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  const std::string flat = strip_spaces(text);
  const std::string ring_key = "ringn=";
  if (flat.rfind(ring_key, 0) != 0) {
    fail(Errc::malformed_input, "expected leading 'ring n=<int>' line");
  }
  std::size_t ideal_pos = flat.find("ideal:");
  if (ideal_pos == std::string::npos) fail(Errc::malformed_input, "expected 'ideal:' line");
  const long long n = parse_int(
      std::string_view(flat).substr(ring_key.size(), ideal_pos - ring_key.size()), "ring size");
  if (n < 0) fail(Errc::malformed_input, "negative ring size");
  std::string_view list = std::string_view(flat).substr(ideal_pos + 6);
  std::vector<Monomial> gens;
  if (!list.empty()) {
    for (std::string_view term : split(list, ',')) {
      if (term.empty()) fail(Errc::malformed_input, "empty term in generator list");
      gens.push_back(parse_term(term, static_cast<int>(n)));
    }
  }
  return normalize(std::move(gens), static_cast<int>(n));
}

std::string print_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring n=" + std::to_string(ideal.vars()) + "\nideal:";
  bool first = true;
  for (const Monomial& g : ideal.gens()) {
    out += first ? " " : ", ";
    out += g.str();
    first = false;
  }
  out += '\n';
  return out;
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::ordered_json j;
  j["n"] = ideal.vars();
  j["gens"] = nlohmann::json::array();
  for (const Monomial& g : ideal.gens()) j["gens"].push_back(g.exponents());
  return j.dump();
}

MonomialIdeal ideal_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.contains("n") || !j.contains("gens")) {
    fail(Errc::malformed_input, "bad ideal JSON");
  }
  const int n = j["n"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& entry : j["gens"]) {
    gens.push_back(Monomial(entry.get<std::vector<int>>()));
  }
  return normalize(std::move(gens), n);
}

HilbertFunction parse_hf(std::string_view values_csv, std::string_view tail_spec, int n) {
  const std::string flat = strip_spaces(values_csv);
  std::vector<long long> values;
  for (std::string_view part : split(flat, ',')) {
    values.push_back(parse_int(part, "Hilbert function value"));
  }
  Tail tail = Tail::unspecified();
  const std::string tail_flat = strip_spaces(tail_spec);
  if (tail_flat == "zero") {
    tail = Tail::zero();
  } else if (tail_flat == "open" || tail_flat.empty()) {
    tail = Tail::unspecified();
  } else if (tail_flat.rfind("const:", 0) == 0) {
    tail = Tail::constant(parse_int(std::string_view(tail_flat).substr(6), "tail constant"));
  } else {
    fail(Errc::malformed_input, "bad tail spec '" + tail_flat + "' (want zero|const:<c>|open)");
  }
  return HilbertFunction(HFConvention::of_quotient, n, std::move(values), tail);
}

std::string print_hf(const HilbertFunction& h) {
  std::string out;
  for (std::size_t j = 0; j < h.values().size(); ++j) {
    if (j) out += ',';
    out += std::to_string(h.values()[j]);
  }
  switch (h.tail().kind) {
    case Tail::Kind::zero:
      out += " tail=zero";
      break;
    case Tail::Kind::constant:
      out += " tail=const:" + std::to_string(h.tail().value);
      break;
    case Tail::Kind::unspecified:
      break;
  }
  return out;
}

DegreeSequence parse_degrees(std::string_view csv) {
  const std::string flat = strip_spaces(csv);
  std::vector<long long> entries;
  for (std::string_view part : split(flat, ',')) {
    if (part == "inf") {
      entries.push_back(DegreeSequence::kInfinity);
    } else {
      entries.push_back(parse_int(part, "degree"));
    }
  }
  return DegreeSequence(std::move(entries));
}

std::string betti_to_json(const BettiTable& table) {
  nlohmann::ordered_json j;
  switch (table.convention()) {
    case TableConvention::of_ideal:
      j["convention"] = "ideal";
      break;
    case TableConvention::of_quotient:
      j["convention"] = "quotient";
      break;
    case TableConvention::of_module:
      j["convention"] = "module";
      break;
  }
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["b"] = value;
    j["entries"].push_back(entry);
  }
  return j.dump();
}

}  // namespace lexpow
