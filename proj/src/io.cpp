#include "dgalab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dgalab/errors.hpp"

namespace dgalab {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text, bool hash_comments_anywhere) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (hash_comments_anywhere) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
    } else if (first != std::string::npos && line[first] == '#') {
      line.clear();
    }
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

int parse_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing characters");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw InputError("expected an integer, found '" + t.text + "'", line, t.column);
  }
}

// Text after "<keyword> <name> =" with its 0-based column.
std::pair<std::string, int> rhs_after_equals(const Line& line, const char* keyword) {
  auto eq = line.text.find('=');
  if (eq == std::string::npos)
    throw InputError(std::string("expected '=' in ") + keyword + " statement", line.number, 1);
  return {line.text.substr(eq + 1), static_cast<int>(eq) + 1};
}

}  // namespace

AliasTable DgaDocument::alias_table() const {
  AliasTable t;
  for (const auto& [name, e] : aliases) t.emplace(name, e);
  return t;
}

DgaDocument parse_dga(std::string_view text) {
  auto lines = split_lines(text, true);
  std::string name = "dga";
  std::vector<GeneratorSpec> gens;
  std::map<std::string, int> declared_at;
  for (const auto& line : lines) {
    auto tokens = tokenize(line.text);
    const auto& kw = tokens[0].text;
    if (kw == "dga") {
      if (tokens.size() != 2 || !valid_identifier(tokens[1].text))
        throw InputError("expected 'dga <name>'", line.number, tokens[0].column);
      name = tokens[1].text;
    } else if (kw == "generator") {
      if (tokens.size() != 3)
        throw InputError("expected 'generator <name> <degree>'", line.number, tokens[0].column);
      if (!valid_identifier(tokens[1].text))
        throw InputError("invalid generator name '" + tokens[1].text + "'", line.number, tokens[1].column);
      int degree = parse_int(tokens[2], line.number);
      if (degree < 1)
        throw InputError("generator degree must be positive", line.number, tokens[2].column);
      if (!declared_at.emplace(tokens[1].text, line.number).second)
        throw InputError("duplicate generator '" + tokens[1].text + "'", line.number, tokens[1].column);
      gens.push_back({tokens[1].text, degree});
    } else if (kw != "d" && kw != "alias" && kw != "fundamental" && kw != "basis") {
      throw InputError("unknown statement '" + kw + "'", line.number, tokens[0].column);
    }
  }
  if (gens.empty()) throw InputError("no generators declared");
  Algebra algebra(gens);

  std::vector<Element> differential(gens.size());
  std::vector<bool> has_d(gens.size(), false);
  DgaDocument doc;
  AliasTable aliases;
  for (const auto& line : lines) {
    auto tokens = tokenize(line.text);
    const auto& kw = tokens[0].text;
    if (kw == "d") {
      if (tokens.size() < 3)
        throw InputError("expected 'd <generator> = <expr>'", line.number, tokens[0].column);
      std::string gen = tokens[1].text;
      if (!gen.empty() && gen.back() == '=') gen.pop_back();
      auto idx = algebra.index_of(gen);
      if (!idx) throw InputError("unknown generator '" + gen + "'", line.number, tokens[1].column);
      if (has_d[*idx])
        throw InputError("differential of '" + gen + "' given twice", line.number, tokens[1].column);
      auto [rhs, offset] = rhs_after_equals(line, "d");
      Element e = parse_expression(algebra, rhs, aliases, line.number, offset);
      const int expected = algebra.generator(*idx).degree + 1;
      if (!e.is_zero() && e.degree() != expected) {
        std::string got = e.degree() ? "degree " + std::to_string(*e.degree()) : "mixed degrees";
        throw InputError("d(" + gen + ") must have degree " + std::to_string(expected) + ", got " + got,
                         line.number, offset + 1);
      }
      differential[*idx] = std::move(e);
      has_d[*idx] = true;
    } else if (kw == "alias") {
      if (tokens.size() < 3)
        throw InputError("expected 'alias <name> = <expr>'", line.number, tokens[0].column);
      std::string alias = tokens[1].text;
      if (!alias.empty() && alias.back() == '=') alias.pop_back();
      if (!valid_identifier(alias) || algebra.index_of(alias) || aliases.count(alias))
        throw InputError("invalid or duplicate alias name '" + alias + "'", line.number, tokens[1].column);
      auto [rhs, offset] = rhs_after_equals(line, "alias");
      Element e = parse_expression(algebra, rhs, aliases, line.number, offset);
      aliases.emplace(alias, e);
      doc.aliases.emplace_back(alias, std::move(e));
    } else if (kw == "fundamental") {
      if (doc.fundamental) throw InputError("fundamental class given twice", line.number, tokens[0].column);
      std::size_t expr_end = line.text.size();
      Q scale = 1;
      if (tokens.size() >= 4 && tokens[tokens.size() - 2].text == "scale") {
        const auto& t = tokens.back();
        try {
          scale = parse_rational(t.text);
        } catch (const std::exception&) {
          throw InputError("malformed rational '" + t.text + "'", line.number, t.column);
        }
        if (scale == 0) throw InputError("scale must be nonzero", line.number, t.column);
        expr_end = static_cast<std::size_t>(tokens[tokens.size() - 2].column - 1);
      }
      const int offset = tokens[0].column - 1 + static_cast<int>(kw.size());
      Element e = parse_expression(algebra, line.text.substr(static_cast<std::size_t>(offset),
                                                             expr_end - static_cast<std::size_t>(offset)),
                                   aliases, line.number, offset);
      if (e.is_zero() || !e.is_homogeneous())
        throw InputError("fundamental class must be a nonzero homogeneous element", line.number, offset + 1);
      doc.fundamental = FundamentalClass{std::move(e), scale};
    } else if (kw == "basis") {
      if (doc.basis) throw InputError("basis given twice", line.number, tokens[0].column);
      std::vector<Element> basis;
      std::size_t pos = static_cast<std::size_t>(tokens[0].column - 1) + kw.size();
      while (true) {
        std::size_t comma = line.text.find(',', pos);
        std::size_t end = comma == std::string::npos ? line.text.size() : comma;
        basis.push_back(parse_expression(algebra, line.text.substr(pos, end - pos), aliases, line.number,
                                         static_cast<int>(pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      doc.basis = std::move(basis);
    }
  }
  doc.dga = DgaSpec(name, std::move(algebra), std::move(differential));
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DgaDocument load_dga(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_dga(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string serialize(const DgaDocument& doc) {
  const auto& alg = doc.dga.algebra();
  std::ostringstream os;
  os << "dga " << doc.dga.name() << '\n';
  for (const auto& g : alg.generators()) os << "generator " << g.name << ' ' << g.degree << '\n';
  bool any_d = false;
  for (std::size_t g = 0; g < doc.dga.size(); ++g) {
    if (doc.dga.d(g).is_zero()) continue;
    if (!any_d) os << '\n';
    any_d = true;
    os << "d " << alg.generator(g).name << " = " << alg.format(doc.dga.d(g)) << '\n';
  }
  if (!doc.aliases.empty()) os << '\n';
  for (const auto& [name, e] : doc.aliases) os << "alias " << name << " = " << alg.format(e) << '\n';
  if (doc.fundamental || doc.basis) os << '\n';
  if (doc.fundamental) {
    os << "fundamental " << alg.format(doc.fundamental->representative);
    if (doc.fundamental->scale != 1) os << " scale " << to_string(doc.fundamental->scale);
    os << '\n';
  }
  if (doc.basis) {
    os << "basis ";
    for (std::size_t i = 0; i < doc.basis->size(); ++i)
      os << (i ? ", " : "") << alg.format((*doc.basis)[i]);
    os << '\n';
  }
  return os.str();
}

Catalog parse_catalog(std::string_view text, const std::filesystem::path& base_dir) {
  Catalog c;
  for (const auto& line : split_lines(text, false)) {
    auto tokens = tokenize(line.text);
    const auto& kw = tokens[0].text;
    auto need_entry = [&](const Token& t) {
      if (!c.find(t.text)) throw InputError("unknown entry '" + t.text + "'", line.number, t.column);
    };
    if (kw == "entry") {
      if (tokens.size() != 4 || tokens[2].text != "dim")
        throw InputError("expected 'entry <name> dim <n>'", line.number, tokens[0].column);
      if (c.find(tokens[1].text))
        throw InputError("duplicate entry '" + tokens[1].text + "'", line.number, tokens[1].column);
      CatalogEntry e;
      e.name = tokens[1].text;
      e.dimension = parse_int(tokens[3], line.number);
      e.line = line.number;
      if (e.name.find('#') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
          auto hash = e.name.find('#', start);
          e.summands.push_back(e.name.substr(start, hash - start));
          if (e.summands.back().empty())
            throw InputError("empty summand in '" + e.name + "'", line.number, tokens[1].column);
          if (hash == std::string::npos) break;
          start = hash + 1;
        }
      }
      c.entries.push_back(std::move(e));
    } else if (kw == "flag") {
      if (tokens.size() != 3) throw InputError("expected 'flag <name> <flag>'", line.number, tokens[0].column);
      need_entry(tokens[1]);
      auto f = parse_flag(tokens[2].text);
      if (!f) throw InputError("unknown flag '" + tokens[2].text + "'", line.number, tokens[2].column);
      c.flags.push_back({tokens[1].text, *f, line.number});
    } else if (kw == "model") {
      if (tokens.size() != 3) throw InputError("expected 'model <name> <path>'", line.number, tokens[0].column);
      need_entry(tokens[1]);
      std::filesystem::path p = tokens[2].text;
      if (p.is_relative()) p = base_dir / p;
      for (auto& e : c.entries)
        if (e.name == tokens[1].text) e.model = p;
    } else if (kw == "degset") {
      if (tokens.size() < 4)
        throw InputError("expected 'degset <from> <to> finite {..} | infinite'", line.number, tokens[0].column);
      need_entry(tokens[1]);
      need_entry(tokens[2]);
      CatalogDegSet d{tokens[1].text, tokens[2].text, {}, line.number};
      if (tokens[3].text == "infinite" && tokens.size() == 4) {
        d.set = DegSet::infinite();
      } else if (tokens[3].text == "finite") {
        auto open = line.text.find('{');
        auto close = line.text.find('}');
        if (open == std::string::npos || close == std::string::npos || close < open)
          throw InputError("expected a set '{a,b,...}'", line.number, tokens[3].column);
        std::set<long> values;
        std::string inner = line.text.substr(open + 1, close - open - 1);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto a = item.find_first_not_of(" \t");
          if (a == std::string::npos) continue;
          auto b = item.find_last_not_of(" \t");
          Token t{item.substr(a, b - a + 1), static_cast<int>(open) + 2};
          values.insert(parse_int(t, line.number));
        }
        d.set = DegSet::finite(std::move(values));
      } else {
        throw InputError("expected 'finite {..}' or 'infinite'", line.number, tokens[3].column);
      }
      c.degsets.push_back(std::move(d));
    } else {
      throw InputError("unknown statement '" + kw + "'", line.number, tokens[0].column);
    }
  }
  return c;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_catalog(text, path.parent_path());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dgalab
