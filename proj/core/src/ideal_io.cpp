#include "matchpow/ideal_io.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace matchpow {

namespace {

int parse_index(std::string_view tok, const std::string& where) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError(where + ": '" + std::string(tok) + "' is not an integer");
  }
  return value;
}

SqfMonomial parse_generator(const std::vector<std::string>& toks, const std::string& where) {
  if (toks.size() == 1 && toks[0] == "()") return SqfMonomial::one();
  IndexSet s;
  for (const std::string& tok : toks) {
    const int i = parse_index(tok, where);
    if (i < 1 || i > kMaxIndex) throw InputError(where + ": variable index " + tok + " outside 1..64");
    if (s.contains(i)) throw InputError(where + ": variable " + tok + " repeated; monomials are squarefree");
    s.insert(i);
  }
  return SqfMonomial(s);
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = -1;
  int max_index = 0;
  std::vector<SqfMonomial> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> toks;
    for (std::string w; words >> w;) toks.push_back(w);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (toks[0] == "n") {
      if (toks.size() != 2 || declared >= 0 || !gens.empty()) {
        throw InputError(where + ": 'n <count>' must be the first entry and appear once");
      }
      declared = parse_index(toks[1], where);
      continue;
    }
    const SqfMonomial g = parse_generator(toks, where);
    max_index = std::max(max_index, g.support().max());
    gens.push_back(g);
  }
  const int n = declared >= 0 ? declared : max_index;
  if (max_index > n) {
    throw InputError("variable x" + std::to_string(max_index) + " exceeds declared n=" + std::to_string(n));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::string format_ideal_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n " << ideal.ambient() << '\n';
  for (SqfMonomial g : ideal.generators()) {
    if (g.is_one()) {
      out << "()\n";
      continue;
    }
    bool first = true;
    for (int i : g.support()) {
      out << (first ? "" : " ") << i;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal_compact(std::string_view text) {
  const std::string where = "ideal '" + std::string(text) + "'";
  if (!text.starts_with("n=")) throw InputError(where + ": expected 'n=<count>:'");
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError(where + ": missing ':'");
  const int n = parse_index(text.substr(2, colon - 2), where);
  std::vector<SqfMonomial> gens;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    std::vector<std::string> toks;
    if (item == "()") {
      toks.emplace_back("()");
    } else {
      while (!item.empty()) {
        const std::size_t dash = item.find('-');
        toks.emplace_back(item.substr(0, dash));
        item = dash == std::string_view::npos ? std::string_view() : item.substr(dash + 1);
      }
    }
    gens.push_back(parse_generator(toks, where));
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::string format_ideal_compact(const MonomialIdeal& ideal) {
  std::string s = "n=" + std::to_string(ideal.ambient()) + ":";
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    if (k > 0) s += ',';
    const SqfMonomial g = ideal.generators()[k];
    if (g.is_one()) {
      s += "()";
      continue;
    }
    bool first = true;
    for (int i : g.support()) {
      s += (first ? "" : "-") + std::to_string(i);
      first = false;
    }
  }
  return s;
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (SqfMonomial g : ideal.generators()) gens.push_back(g.support().to_vector());
  return nlohmann::json{{"n", ideal.ambient()}, {"generators", gens}}.dump();
}

}  // namespace matchpow
