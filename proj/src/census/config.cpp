#include "vtwist/census/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "vtwist/errors.hpp"

namespace vtwist::census {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " must be an integer, got '" + v + "'");
  }
}

std::array<mpq_class, 5> parse_invariants(const std::string& v) {
  std::string s = v;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::array<mpq_class, 5> out;
  std::string tok;
  int n = 0;
  while (is >> tok) {
    if (n == 5) throw ConfigError("config: a_invariants needs exactly five entries");
    try {
      out[n] = mpq_class(tok);
      out[n].canonicalize();
    } catch (const std::exception&) {
      throw ConfigError("config: bad rational '" + tok + "' in a_invariants");
    }
    ++n;
  }
  if (n != 5) throw ConfigError("config: a_invariants needs exactly five entries");
  return out;
}

}  // namespace

elliptic::EllipticCurve CurveConfig::curve() const {
  std::array<long, 5> a{};
  for (int i = 0; i < 5; ++i) {
    if (a_invariants[i].get_den() != 1 || !a_invariants[i].get_num().fits_slong_p())
      throw ConfigError("config: a_invariants must be integers of machine size (a minimal integral model)");
    a[i] = a_invariants[i].get_num().get_si();
  }
  try {
    return elliptic::EllipticCurve(a, conductor, root_number, label);
  } catch (const SingularCurveError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

std::string CurveConfig::str() const {
  std::ostringstream os;
  os << label << " [";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a_invariants[i];
  os << "] N=" << conductor << " w=" << (root_number > 0 ? "+1" : "-1") << " digits=" << precision_digits;
  return os.str();
}

CurveConfig parse_config(std::istream& in) {
  static const std::set<std::string> known{"label", "a_invariants", "conductor", "root_number", "precision_digits"};
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!known.count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = value;
  }
  for (const char* k : {"label", "a_invariants", "conductor", "root_number"})
    if (!kv.count(k)) throw ConfigError(std::string("config: missing key '") + k + "'");
  CurveConfig c;
  c.label = kv["label"];
  c.a_invariants = parse_invariants(kv["a_invariants"]);
  long N = parse_long("conductor", kv["conductor"]);
  if (N <= 0) throw ConfigError("config: conductor must be positive");
  c.conductor = static_cast<std::uint64_t>(N);
  long w = parse_long("root_number", kv["root_number"]);
  if (w != 1 && w != -1) throw ConfigError("config: root_number must be +1 or -1");
  c.root_number = static_cast<int>(w);
  if (kv.count("precision_digits")) {
    long d = parse_long("precision_digits", kv["precision_digits"]);
    if (d < 15 || d > 500) throw ConfigError("config: precision_digits must lie in [15, 500]");
    c.precision_digits = static_cast<int>(d);
  }
  return c;
}

CurveConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parse_config(in);
}

CurveConfig builtin_config(const std::string& name) {
  std::string text;
  if (name == "37b" || name == "37B")
    text = "label = 37b\na_invariants = [0, 1, 1, -3, 1]\nconductor = 37\nroot_number = 1\n";
  else if (name == "37a" || name == "37A")
    text = "label = 37a\na_invariants = [0, 0, 1, -1, 0]\nconductor = 37\nroot_number = -1\n";
  else if (name == "11a1" || name == "11a")
    text = "label = 11a1\na_invariants = [0, -1, 1, -10, -20]\nconductor = 11\nroot_number = 1\n";
  else
    throw ConfigError("no built-in curve named '" + name + "'");
  std::istringstream is(text);
  return parse_config(is);
}

}  // namespace vtwist::census
