#include "spec_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace qm::io {

namespace {

Rational rational_field(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<i64>());
  throw std::invalid_argument("rational fields are strings \"p/q\" or integers");
}

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  std::size_t used = 0;
  const double x = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad number '" + text + "'");
  return x;
}

}  // namespace

FamilySpec spec_from_json(const json& j) {
  FamilySpec spec;
  const auto& form = j.at("form");
  if (!form.is_array() || form.size() != 3) throw std::invalid_argument("form must be [a1, a2, a3]");
  spec.form = {form[0].get<i64>(), form[1].get<i64>(), form[2].get<i64>()};
  spec.s = j.at("s").get<i64>();
  for (const auto& e : j.at("jstar")) {
    const auto& a = e.at("alpha");
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("alpha must be a pair");
    spec.jstar.push_back({ShiftPair::from_alpha(rational_field(a[0]), rational_field(a[1]), spec.s),
                          rational_field(e.at("eps"))});
  }
  return spec;
}

FamilySpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read spec '" + path + "'");
  return spec_from_json(json::parse(in));
}

json spec_to_json(const FamilySpec& spec) {
  json j;
  j["form"] = {spec.form.a1, spec.form.a2, spec.form.a3};
  j["s"] = spec.s;
  j["jstar"] = json::array();
  for (const auto& w : spec.jstar)
    j["jstar"].push_back(
        {{"alpha", {to_string(w.alpha.alpha1()), to_string(w.alpha.alpha2())}}, {"eps", to_string(w.eps)}});
  return j;
}

std::complex<double> parse_tau(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  if (text.empty()) throw std::invalid_argument("empty tau");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  text.pop_back();
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t cut = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;)
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      cut = k;
      break;
    }
  auto imag_part = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s[0] == '+' ? s.substr(1) : s);
  };
  if (cut == std::string::npos) return {0.0, imag_part(text)};
  return {parse_real(text.substr(0, cut)), imag_part(text.substr(cut))};
}

std::string tau_string(std::complex<double> tau) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", tau.real(), tau.imag());
  return buf;
}

json cjson(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qm::io
