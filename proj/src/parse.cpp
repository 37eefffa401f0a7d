#include "tgs/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tgs {

Perm parse_cycles(const std::string& text, unsigned degree) {
  std::vector<uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i)
    img[i] = static_cast<uint16_t>(i);
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    throw error("empty cycle expression");
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw error("expected '(' in cycle notation");
    ++i;
    any = true;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',')
          throw error("expected ',' between cycle points");
        ++i;
        skip_ws();
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        throw error("expected a point in cycle notation");
      unsigned long pt = std::stoul(text.substr(start, i - start));
      if (pt < 1 || pt > degree)
        throw error("cycle point out of range");
      if (used[pt - 1])
        throw error("repeated point in cycle notation");
      used[pt - 1] = 1;
      cycle.push_back(static_cast<unsigned>(pt - 1));
      skip_ws();
    }
    if (i == text.size())
      throw error("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  if (!any)
    throw error("no cycles in expression");
  return Perm(std::move(img));
}

std::string print_cycles(const Perm& g) {
  std::string out;
  std::vector<char> seen(g.degree(), 0);
  for (unsigned pt = 0; pt < g.degree(); ++pt) {
    if (seen[pt] || g[pt] == pt)
      continue;
    out += '(';
    unsigned cur = pt;
    bool first = true;
    do {
      if (!first)
        out += ',';
      first = false;
      out += std::to_string(cur + 1);
      seen[cur] = 1;
      cur = g[cur];
    } while (cur != pt);
    out += ')';
  }
  if (out.empty())
    out = "()";
  return out;
}

GroupFile parse_group_file(const std::string& contents) {
  GroupFile file;
  std::istringstream in(contents);
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos)
      continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    if (!have_degree) {
      std::istringstream ls(body);
      std::string kw;
      unsigned long long deg = 0;
      if (!(ls >> kw >> deg) || kw != "degree" || deg == 0 || deg > 65535)
        throw error("group file must start with 'degree N'");
      file.degree = static_cast<unsigned>(deg);
      have_degree = true;
      continue;
    }
    if (body.rfind("order", 0) == 0 &&
        (body.size() == 5 ||
         std::isspace(static_cast<unsigned char>(body[5])))) {
      std::istringstream ls(body);
      std::string kw;
      unsigned long long ord = 0;
      if (!(ls >> kw >> ord) || ord == 0)
        throw error("malformed order line in group file");
      file.expected_order = ord;
      continue;
    }
    file.generator_text.push_back(body);
  }
  if (!have_degree)
    throw error("group file is empty");
  return file;
}

Group group_from_file(const GroupFile& file) {
  std::vector<Perm> gens;
  for (const std::string& text : file.generator_text)
    gens.push_back(parse_cycles(text, file.degree));
  Group g(file.degree, std::move(gens));
  if (file.expected_order && g.order() != *file.expected_order)
    throw error("group order does not match the declared order");
  return g;
}

Group load_group_path(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_file(parse_group_file(buf.str()));
}

}  // namespace tgs
