#include "tgs/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "tgs/parse.hpp"

namespace tgs {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"S3", 3, 6, {"(1,2,3)", "(1,2)"}},
      {"S4", 4, 24, {"(1,2,3,4)", "(1,2)"}},
      {"A4", 4, 12, {"(1,2,3)", "(1,2)(3,4)"}},
      {"A5", 5, 60, {"(1,2,3,4,5)", "(3,4,5)"}},
      {"D8", 4, 8, {"(1,2,3,4)", "(2,4)"}},
      {"Q8", 8, 8, {"(1,3,2,4)(5,7,6,8)", "(1,5,2,6)(3,8,4,7)"}},
      {"SD16", 8, 16, {"(1,2,3,4,5,6,7,8)", "(2,4)(3,7)(6,8)"}},
      {"SL23", 8, 24, {"(1,4,7)(2,8,5)", "(1,6,2,3)(4,7,8,5)"}},
      {"PSL27", 8, 168, {"(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"}},
      {"F20", 5, 20, {"(1,2,3,4,5)", "(2,3,5,4)"}},
      {"F21", 7, 21, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}},
      {"M11", 11, 7920,
       {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}},
      {"M12", 12, 95040,
       {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
        "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"}},
      {"M22", 22, 443520,
       {"(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
        "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
        "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"}},
      {"M23", 23, 10200960,
       {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"}},
      {"J2", 100, 604800,
       {"(1,41,19,48,82,52,89,44,4,74)(2,96,16,26,11,50,80,60,88,12)"
        "(3,77,84,49,39,47,22,75,5,17)(6,79,30,66,45,56,99,98,92,7)"
        "(8,87,85,37,25,71,46,70,100,42)(9,69,23,90,62,73,68,81,63,93)"
        "(10,83,57,43,38)(13,51,72,31,97)(14,15,35,58,32,91,95,28,18,86)"
        "(20,54,40,67,36,61,24,64,21,29)(27,55,33,94,78)(34,59,65,76,53)",
        "(1,62,74,8,20,92,69)(2,96,93,3,18,38,7)(4,57,5,99,72,63,65)"
        "(6,19,75,78,22,68,85)(9,23,21,53,97,89,59)(10,88,12,34,42,61,36)"
        "(11,45,95,13,71,47,39)(14,46,17,30,37,16,64)(15,90,26,84,41,32,66)"
        "(24,87,79,25,82,55,83)(27,56,29,49,58,54,60)(28,73,67,77,50,31,91)"
        "(33,86,44,98,81,100,35)(40,51,94,80,70,43,76)"}},
  };
  return entries;
}

namespace {

std::string upper(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

}  // namespace

Group load_catalog(const std::string& name) {
  const std::string key = upper(name);
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name != key)
      continue;
    std::vector<Perm> gens;
    for (const std::string& text : e.generators)
      gens.push_back(parse_cycles(text, e.degree));
    Group g(e.degree, std::move(gens));
    if (g.order() != e.order)
      throw error("catalog entry " + e.name + " fails its order check");
    return g;
  }
  if (key.size() > 1 && key[0] == 'C' &&
      std::all_of(key.begin() + 1, key.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    unsigned long n = std::stoul(key.substr(1));
    if (n < 1 || n > 65535)
      throw error("cyclic group size out of range");
    if (n == 1)
      return Group::trivial(1);
    std::vector<uint16_t> img(n);
    for (unsigned long i = 0; i < n; ++i)
      img[i] = static_cast<uint16_t>((i + 1) % n);
    Group g(static_cast<unsigned>(n), {Perm(std::move(img))});
    if (g.order() != n)
      throw error("cyclic group fails its order check");
    return g;
  }
  throw error("unknown catalog group: " + name);
}

Group load_group(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0)
    return load_catalog(spec.substr(8));
  return load_group_path(spec);
}

}  // namespace tgs
