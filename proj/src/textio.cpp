#include "textio.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <map>

#include <json.hpp>

#include "cohomology.hpp"
#include "selftest.hpp"

namespace kani {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(uint32_t line, uint32_t col, const std::string& msg) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "parse error at line %u, column %u: ", line, col);
  fail(errc::parse, buf + msg);
}

struct Token {
  std::string text;
  uint32_t line = 1, col = 1;
  char punct = 0;  // one of {}=[], for punctuation, 0 for words
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  uint32_t line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    if (std::strchr("{}=[],", ch)) {
      out.push_back({std::string(1, ch), line, col, ch});
      ++col;
      ++i;
      continue;
    }
    if (ch == '"') {
      uint32_t l = line, c = col;
      ++i;
      ++col;
      std::string w;
      while (true) {
        if (i >= text.size() || text[i] == '\n') parse_fail(l, c, "unterminated quote");
        if (text[i] == '"') {
          ++i;
          ++col;
          break;
        }
        w += text[i];
        ++i;
        ++col;
      }
      out.push_back({w, l, c, 0});
      continue;
    }
    uint32_t l = line, c = col;
    std::string w;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           !std::strchr("{}=[],#\"", text[i])) {
      w += text[i];
      ++i;
      ++col;
    }
    out.push_back({w, l, c, 0});
  }
  return out;
}

struct Value {
  Token key;
  bool is_list = false;
  Token scalar;
  std::vector<Token> list;
};

struct Section {
  uint32_t line = 1, col = 1;
  std::map<std::string, Value> kv;
};

std::map<std::string, Section> parse_sections(const std::string& text) {
  std::vector<Token> toks = lex(text);
  std::map<std::string, Section> out;
  size_t i = 0;
  auto need = [&](const char* what) -> const Token& {
    if (i >= toks.size()) {
      uint32_t l = 1, c = 1;
      if (!toks.empty()) {
        l = toks.back().line;
        c = toks.back().col + uint32_t(toks.back().text.size());
      }
      parse_fail(l, c, std::string("expected ") + what + " before the end of the file");
    }
    return toks[i];
  };
  while (i < toks.size()) {
    const Token name = toks[i];
    if (name.punct) parse_fail(name.line, name.col, "expected a section name");
    if (name.text != "cover" && name.text != "extension" && name.text != "options")
      parse_fail(name.line, name.col, "unknown section '" + name.text + "'");
    if (out.count(name.text)) parse_fail(name.line, name.col, "duplicate section '" + name.text + "'");
    ++i;
    const Token& ob = need("'{'");
    if (ob.punct != '{') parse_fail(ob.line, ob.col, "expected '{' after '" + name.text + "'");
    ++i;
    Section sec;
    sec.line = name.line;
    sec.col = name.col;
    while (true) {
      const Token t = need("'}'");
      if (t.punct == '}') {
        ++i;
        break;
      }
      if (t.punct) parse_fail(t.line, t.col, "expected a key or '}'");
      ++i;
      const Token& eq = need("'='");
      if (eq.punct != '=') parse_fail(eq.line, eq.col, "expected '=' after '" + t.text + "'");
      ++i;
      const Token v = need("a value");
      Value val;
      val.key = t;
      if (v.punct == '[') {
        ++i;
        val.is_list = true;
        while (true) {
          const Token u = need("']'");
          if (u.punct == ']') {
            ++i;
            break;
          }
          if (u.punct == ',') {
            ++i;
            continue;
          }
          if (u.punct) parse_fail(u.line, u.col, "expected a list entry, ',' or ']'");
          val.list.push_back(u);
          ++i;
        }
      } else if (v.punct) {
        parse_fail(v.line, v.col, "expected a value after '='");
      } else {
        val.scalar = v;
        ++i;
      }
      if (!sec.kv.emplace(t.text, std::move(val)).second)
        parse_fail(t.line, t.col, "duplicate key '" + t.text + "'");
    }
    out.emplace(name.text, std::move(sec));
  }
  return out;
}

void check_keys(const Section& s, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : s.kv) {
    bool ok = false;
    for (const char* a : allowed)
      if (k == a) ok = true;
    if (!ok) parse_fail(v.key.line, v.key.col, "unknown key '" + k + "'");
  }
}

const Value* find_key(const Section& s, const std::string& k) {
  auto it = s.kv.find(k);
  return it == s.kv.end() ? nullptr : &it->second;
}

const Value& want_key(const Section& s, const char* section_name, const std::string& k) {
  const Value* v = find_key(s, k);
  if (!v)
    parse_fail(s.line, s.col, std::string("section '") + section_name + "' is missing key '" + k + "'");
  return *v;
}

const Token& scalar_of(const Value& v) {
  if (v.is_list)
    parse_fail(v.key.line, v.key.col, "key '" + v.key.text + "' takes a single value, not a list");
  return v.scalar;
}

uint64_t num_of(const Token& t, uint64_t cap) {
  if (t.text.empty()) parse_fail(t.line, t.col, "expected a number");
  uint64_t acc = 0;
  for (char ch : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      parse_fail(t.line, t.col, "expected a number, got '" + t.text + "'");
    acc = acc * 10 + uint64_t(ch - '0');
    if (acc > cap) parse_fail(t.line, t.col, "number '" + t.text + "' is out of range");
  }
  return acc;
}

uint32_t u32_of(const Token& t) { return uint32_t(num_of(t, UINT32_MAX)); }

// one generator image as a word in the base group: e, h<i>, @<element>, products with '*'
uint16_t word_of(const Token& t, const GroupPtr& h) {
  uint16_t acc = 0;
  size_t start = 0;
  const std::string& w = t.text;
  while (start <= w.size()) {
    size_t stop = w.find('*', start);
    if (stop == std::string::npos) stop = w.size();
    std::string part = w.substr(start, stop - start);
    uint16_t x;
    if (part == "e") {
      x = 0;
    } else if (part.size() >= 2 && part[0] == '@') {
      uint64_t k = 0;
      for (size_t j = 1; j < part.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(part[j])))
          parse_fail(t.line, t.col, "bad element index '" + part + "'");
        k = k * 10 + uint64_t(part[j] - '0');
      }
      if (k >= h->n) parse_fail(t.line, t.col, "element index '" + part + "' exceeds the group order");
      x = uint16_t(k);
    } else if (part.size() >= 2 && part[0] == 'h') {
      uint64_t k = 0;
      for (size_t j = 1; j < part.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(part[j])))
          parse_fail(t.line, t.col, "bad generator reference '" + part + "'");
        k = k * 10 + uint64_t(part[j] - '0');
      }
      if (k >= h->gens.size())
        parse_fail(t.line, t.col, "the base group has no generator '" + part + "'");
      x = h->gens[size_t(k)];
    } else {
      parse_fail(t.line, t.col, "bad image word '" + w + "'; use e, h<i>, @<element> and '*'");
    }
    acc = h->mulv(acc, x);
    if (stop == w.size()) break;
    start = stop + 1;
  }
  return acc;
}

GroupPtr perm_group_of(const std::string& body, const Options& opt) {
  // generator specs split on ';', each a product of cycles "(0 1 2)(3 4)"
  std::vector<std::vector<std::vector<uint16_t>>> gens_cycles;
  std::vector<std::vector<uint16_t>> cycles;
  std::vector<uint16_t> cyc;
  uint16_t maxpt = 0;
  bool open = false, any = false;
  size_t i = 0;
  auto flush_gen = [&]() {
    gens_cycles.push_back(cycles);
    cycles.clear();
  };
  while (i < body.size()) {
    char ch = body[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (ch == '(') {
      if (open) fail(errc::parse, "nested '(' in a permutation");
      open = true;
      any = true;
      cyc.clear();
      ++i;
      continue;
    }
    if (ch == ')') {
      if (!open) fail(errc::parse, "unmatched ')' in a permutation");
      open = false;
      cycles.push_back(cyc);
      ++i;
      continue;
    }
    if (ch == ';') {
      if (open) fail(errc::parse, "';' inside a cycle");
      flush_gen();
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(errc::parse, std::string("bad character '") + ch + "' in a permutation");
    if (!open) fail(errc::parse, "points must sit inside '(...)'");
    uint64_t k = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      k = k * 10 + uint64_t(body[i] - '0');
      ++i;
    }
    if (k >= 256) fail(errc::parse, "permutation point out of range");
    cyc.push_back(uint16_t(k));
    if (k > maxpt) maxpt = uint16_t(k);
  }
  if (open) fail(errc::parse, "unterminated cycle in a permutation");
  if (!any) fail(errc::parse, "no cycles in the permutation reference");
  flush_gen();
  uint16_t n = uint16_t(maxpt + 1);
  std::vector<std::vector<uint16_t>> perms;
  for (const auto& cs : gens_cycles) {
    std::vector<uint16_t> perm(n);
    std::vector<bool> moved(n, false);
    for (uint16_t j = 0; j < n; ++j) perm[j] = j;
    for (const auto& cycle : cs)
      for (size_t k = 0; k < cycle.size(); ++k) {
        uint16_t from = cycle[k], to = cycle[(k + 1) % cycle.size()];
        if (moved[from]) fail(errc::parse, "a permutation point is listed twice");
        moved[from] = true;
        perm[from] = to;
      }
    perms.push_back(perm);
  }
  GroupPtr g = from_permutations(perms);
  require(g->n <= opt.group_cap, errc::cap, "permutation group exceeds the group cap");
  return g;
}

std::string errc_name(errc c) {
  switch (c) {
    case errc::parse: return "parse";
    case errc::domain: return "domain";
    case errc::cap: return "cap";
    case errc::anomaly: return "anomaly";
    case errc::internal: return "internal";
  }
  return "internal";
}

Report error_report(const std::string& msg, const std::string& code) {
  json j;
  j["error"] = msg;
  j["code"] = code;
  return {"error: " + msg + "\n", j.dump(2) + "\n", 2};
}

template <typename Fn>
Report guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    return error_report(e.what(), errc_name(e.code()));
  } catch (const std::exception& e) {
    return error_report(e.what(), "internal");
  }
}

GModule module_from_ref(const std::string& ref, const GroupPtr& g, uint32_t p, bool allow_regular,
                        const Options& opt) {
  Field fp = FieldParams::prime(p);
  if (ref == "trivial") return GModule::trivial(g, fp);
  if (ref == "regular" && allow_regular) return regular_module(g, fp);
  if (ref.rfind("simple", 0) == 0 && ref.size() > 6) {
    uint64_t k = 0;
    for (size_t j = 6; j < ref.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(ref[j])))
        fail(errc::parse, "bad module reference '" + ref + "'");
      k = k * 10 + uint64_t(ref[j] - '0');
    }
    SimpleSet sims = simple_modules(g, fp, opt.seed);
    require(k < sims.size(), errc::domain,
            "module reference '" + ref + "' exceeds the simple count");
    return sims.simples[size_t(k)];
  }
  fail(errc::parse, "unknown module reference '" + ref + "'; use trivial" +
                        (allow_regular ? ", regular" : "") + " or simple<i>");
}

json slack_json(const std::vector<SlackRow>& rows) {
  json arr = json::array();
  for (const SlackRow& r : rows) {
    json o;
    o["index"] = r.simple_index;
    o["dim"] = r.dim_V;
    o["h1_total"] = r.h1_G;
    o["h1_base"] = r.h1_H;
    o["delta"] = r.delta;
    o["slack"] = r.slack;
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace

GroupPtr group_from_ref(const std::string& ref0, const Options& opt) {
  size_t b = ref0.find_first_not_of(" \t");
  size_t e = ref0.find_last_not_of(" \t");
  if (b == std::string::npos) fail(errc::parse, "empty group reference");
  std::string ref = ref0.substr(b, e - b + 1);
  if (ref.rfind("perm:", 0) == 0) return perm_group_of(ref.substr(5), opt);
  if (ref == "V4") return klein4();
  if (ref == "D4") return dihedral8();
  if (ref == "Q8") return quaternion8();
  if (ref == "A4") return alternating4();
  if ((ref[0] == 'C' || ref[0] == 'S') && ref.size() > 1) {
    uint64_t n = 0;
    bool digits = true;
    for (size_t j = 1; j < ref.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(ref[j]))) digits = false;
      else n = n * 10 + uint64_t(ref[j] - '0');
    }
    if (digits && n >= 1) {
      if (ref[0] == 'C') {
        require(n <= opt.group_cap, errc::cap, "cyclic group exceeds the group cap");
        return n == 1 ? trivial_group() : cyclic_group(uint32_t(n));
      }
      require(n <= 5, errc::domain, "symmetric shortcuts stop at S5");
      return n == 1 ? trivial_group() : symmetric_group(uint32_t(n));
    }
  }
  fail(errc::parse, "unknown group reference '" + ref + "'");
}

ParsedProblem parse_problem(const std::string& text, const Options& defaults) {
  auto secs = parse_sections(text);
  Options opt = defaults;
  if (auto it = secs.find("options"); it != secs.end()) {
    const Section& s = it->second;
    check_keys(s, {"seed", "field_cap", "group_cap", "closure_cap", "h1_cap", "h2_cap"});
    if (const Value* v = find_key(s, "seed")) opt.seed = num_of(scalar_of(*v), UINT64_MAX);
    if (const Value* v = find_key(s, "field_cap")) opt.field_cap = u32_of(scalar_of(*v));
    if (const Value* v = find_key(s, "group_cap")) opt.group_cap = u32_of(scalar_of(*v));
    if (const Value* v = find_key(s, "closure_cap")) opt.closure_cap = u32_of(scalar_of(*v));
    if (const Value* v = find_key(s, "h1_cap")) opt.h1_cap = u32_of(scalar_of(*v));
    if (const Value* v = find_key(s, "h2_cap")) opt.h2_cap = u32_of(scalar_of(*v));
  }

  auto itc = secs.find("cover");
  if (itc == secs.end()) parse_fail(1, 1, "missing section 'cover'");
  const Section& cs = itc->second;
  check_keys(cs, {"group", "p", "g_X", "delta"});
  const Token& gtok = scalar_of(want_key(cs, "cover", "group"));
  GroupPtr H;
  try {
    H = group_from_ref(gtok.text, opt);
  } catch (const error& err) {
    if (err.code() != errc::parse) throw;
    parse_fail(gtok.line, gtok.col, err.what());
  }
  uint32_t p = u32_of(scalar_of(want_key(cs, "cover", "p")));
  uint32_t gx = u32_of(scalar_of(want_key(cs, "cover", "g_X")));
  const Value& dv = want_key(cs, "cover", "delta");
  CoverDatum y;
  if (dv.is_list) {
    std::vector<uint32_t> table;
    for (const Token& t : dv.list) table.push_back(u32_of(t));
    y = user_cover(H, p, gx, table, opt);
  } else if (dv.scalar.text == "ordinary") {
    y = ordinary_cover(H, p, gx, opt);
  } else {
    parse_fail(dv.scalar.line, dv.scalar.col, "delta must be 'ordinary' or a bracketed table");
  }

  auto ite = secs.find("extension");
  if (ite == secs.end()) parse_fail(1, 1, "missing section 'extension'");
  const Section& es = ite->second;
  ExtensionData ext;
  if (find_key(es, "total")) {
    check_keys(es, {"total", "images"});
    const Token& ttok = scalar_of(want_key(es, "extension", "total"));
    GroupPtr G;
    try {
      G = group_from_ref(ttok.text, opt);
    } catch (const error& err) {
      if (err.code() != errc::parse) throw;
      parse_fail(ttok.line, ttok.col, err.what());
    }
    const Value& iv = want_key(es, "extension", "images");
    if (!iv.is_list) parse_fail(iv.key.line, iv.key.col, "images must be a bracketed list");
    if (iv.list.size() != G->gens.size()) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "the total group has %zu generators, got %zu images",
                    G->gens.size(), iv.list.size());
      parse_fail(iv.key.line, iv.key.col, msg);
    }
    std::vector<uint16_t> imgs;
    for (const Token& t : iv.list) imgs.push_back(word_of(t, H));
    ext = make_extension(G, H, make_hom(G, H, imgs), p);
  } else if (find_key(es, "module")) {
    check_keys(es, {"module", "cocycle"});
    const Token& mtok = scalar_of(want_key(es, "extension", "module"));
    GModule V = module_from_ref(mtok.text, H, p, false, opt);
    const Value& cv = want_key(es, "extension", "cocycle");
    TwoCocycle f;
    if (cv.is_list) {
      f.mod = V;
      size_t slots = size_t(H->n) * H->n * V.dim;
      if (cv.list.size() != slots) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "cocycle table needs %zu entries, got %zu", slots,
                      cv.list.size());
        parse_fail(cv.key.line, cv.key.col, msg);
      }
      for (const Token& t : cv.list) {
        uint32_t x = u32_of(t);
        if (x >= V.field->q) parse_fail(t.line, t.col, "cocycle entry exceeds the field size");
        f.vals.push_back(x);
      }
      require(cocycle_valid(f), errc::domain, "the table violates the cocycle identity");
    } else if (cv.scalar.text == "zero") {
      f = zero_cocycle(V);
    } else {
      parse_fail(cv.scalar.line, cv.scalar.col, "cocycle must be 'zero' or a bracketed table");
    }
    ext = extension_from_cocycle(f, opt);
  } else {
    parse_fail(es.line, es.col, "extension needs either total/images or module/cocycle");
  }

  return {make_problem(std::move(y), std::move(ext)), opt};
}

Report run_simples(const std::string& groupref, uint32_t p, const Options& opt) {
  return guarded([&]() -> Report {
    GroupPtr g = group_from_ref(groupref, opt);
    require(is_prime_u32(p), errc::domain, "p must be prime");
    SimpleSet sims = simple_modules(g, FieldParams::prime(p), opt.seed);
    char buf[128];
    std::snprintf(buf, sizeof buf, "group %s, order %u, p = %u: %u simple module%s over F_%u\n",
                  groupref.c_str(), g->n, p, sims.size(), sims.size() == 1 ? "" : "s", p);
    std::string hu = buf;
    hu += "  idx  dim  degree\n";
    json rows = json::array();
    for (uint32_t i = 0; i < sims.size(); ++i) {
      uint32_t deg = endo_dim(sims.simples[i]);
      std::snprintf(buf, sizeof buf, "  %3u  %3u  %6u\n", i, sims.simples[i].dim, deg);
      hu += buf;
      json o;
      o["index"] = i;
      o["dim"] = sims.simples[i].dim;
      o["degree"] = deg;
      rows.push_back(std::move(o));
    }
    json j;
    j["command"] = "simples";
    j["group"] = groupref;
    j["order"] = g->n;
    j["p"] = p;
    j["count"] = sims.size();
    j["simples"] = rows;
    j["seed"] = opt.seed;
    return {hu, j.dump(2) + "\n", 0};
  });
}

Report run_cohom(const std::string& groupref, uint32_t p, const std::string& moduleref,
                 const Options& opt) {
  return guarded([&]() -> Report {
    GroupPtr g = group_from_ref(groupref, opt);
    require(is_prime_u32(p), errc::domain, "p must be prime");
    GModule M = module_from_ref(moduleref, g, p, true, opt);
    uint32_t a0 = h0(M), a1 = h1(M, opt), a2 = h2(M, opt);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "group %s, order %u, p = %u, module %s, dim %u\nh0 = %u\nh1 = %u\nh2 = %u\n",
                  groupref.c_str(), g->n, p, moduleref.c_str(), M.dim, a0, a1, a2);
    json j;
    j["command"] = "cohom";
    j["group"] = groupref;
    j["order"] = g->n;
    j["p"] = p;
    j["module"] = moduleref;
    j["dim"] = M.dim;
    j["h0"] = a0;
    j["h1"] = a1;
    j["h2"] = a2;
    j["seed"] = opt.seed;
    return {buf, j.dump(2) + "\n", 0};
  });
}

namespace {

json problem_json(const EmbeddingProblem& pb) {
  json j;
  j["total_order"] = pb.extension.G->n;
  j["base_order"] = pb.cover.H->n;
  j["p"] = pb.cover.p;
  j["g_X"] = pb.cover.g_X;
  j["g_Y"] = genus_of_cover(pb.cover.g_X, pb.cover.H->n);
  j["delta"] = pb.cover.delta;
  j["delta_source"] =
      pb.cover.source == CoverSource::OrdinaryFormula ? "ordinary" : "user";
  return j;
}

std::string problem_header(const EmbeddingProblem& pb) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "problem: |G| = %u over |H| = %u, p = %u, g_X = %u, g_Y = %u, delta %s\n",
                pb.extension.G->n, pb.cover.H->n, pb.cover.p, pb.cover.g_X,
                genus_of_cover(pb.cover.g_X, pb.cover.H->n),
                pb.cover.source == CoverSource::OrdinaryFormula ? "from the ordinary formula"
                                                                : "supplied");
  return buf;
}

json trace_json(const std::vector<ReductionStep>& trace) {
  json arr = json::array();
  for (const ReductionStep& st : trace) {
    json o;
    o["kind"] = st.kind == ReductionStep::Kind::FrattiniQuotient ? "frattini" : "simple_quotient";
    o["collapsed_order"] = st.collapsed_order;
    o["child_order"] = st.child_order;
    o["child_slack"] = slack_json(st.child_slack);
    arr.push_back(std::move(o));
  }
  return arr;
}

json base_cases_json(const std::vector<BaseCase>& bs) {
  json arr = json::array();
  for (const BaseCase& b : bs) {
    json o;
    o["kernel_dim"] = b.kernel_dim;
    o["class_trivial"] = b.class_trivial;
    o["solvable"] = b.solvable;
    o["rationale"] = b.rationale;
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace

Report run_decide(const std::string& problem_text, bool with_trace, const Options& defaults) {
  return guarded([&]() -> Report {
    ParsedProblem pp = parse_problem(problem_text, defaults);
    Verdict v = decide_strong_solvability(pp.problem, pp.options);
    std::string hu = problem_header(pp.problem) + v.to_text();
    if (with_trace && !v.trace.empty()) {
      hu += "trace slack:\n";
      char buf[48];
      uint32_t step = 0;
      for (const ReductionStep& st : v.trace) {
        std::snprintf(buf, sizeof buf, "  step %u:", ++step);
        hu += buf;
        for (const SlackRow& r : st.child_slack) {
          std::snprintf(buf, sizeof buf, " %" PRId64, r.slack);
          hu += buf;
        }
        hu += "\n";
      }
    }
    json j = problem_json(pp.problem);
    j["command"] = "decide";
    j["solvable"] = v.solvable;
    j["field"] = v.field_desc;
    j["seed"] = v.seed;
    j["slack"] = slack_json(v.slack);
    j["trace"] = trace_json(v.trace);
    j["base_cases"] = base_cases_json(v.base_cases);
    j["notes"] = v.notes;
    return {hu, j.dump(2) + "\n", v.solvable ? 0 : 1};
  });
}

Report run_reduce(const std::string& problem_text, const Options& defaults) {
  return guarded([&]() -> Report {
    ParsedProblem pp = parse_problem(problem_text, defaults);
    Verdict v = decide_strong_solvability(pp.problem, pp.options);
    std::string hu = problem_header(pp.problem);
    char buf[128];
    uint32_t step = 0;
    for (const ReductionStep& st : v.trace) {
      std::snprintf(buf, sizeof buf, "step %u: %s collapse, |O| = %u, child order %u, child slack",
                    ++step,
                    st.kind == ReductionStep::Kind::FrattiniQuotient ? "Frattini" : "simple quotient",
                    st.collapsed_order, st.child_order);
      hu += buf;
      for (const SlackRow& r : st.child_slack) {
        std::snprintf(buf, sizeof buf, " %" PRId64, r.slack);
        hu += buf;
      }
      hu += "\n";
    }
    if (v.trace.empty()) hu += "no collapse steps; the problem is already a base case\n";
    for (const BaseCase& b : v.base_cases) {
      std::snprintf(buf, sizeof buf, "base case: kernel dim %u, %s class, %s\n  %s\n", b.kernel_dim,
                    b.class_trivial ? "zero" : "nonzero", b.solvable ? "solvable" : "not solvable",
                    b.rationale.c_str());
      hu += buf;
    }
    std::snprintf(buf, sizeof buf, "steps: %zu\n", v.trace.size());
    hu += buf;
    json j = problem_json(pp.problem);
    j["command"] = "reduce";
    j["solvable"] = v.solvable;
    j["field"] = v.field_desc;
    j["seed"] = v.seed;
    j["steps"] = v.trace.size();
    j["trace"] = trace_json(v.trace);
    j["base_cases"] = base_cases_json(v.base_cases);
    j["notes"] = v.notes;
    return {hu, j.dump(2) + "\n", 0};
  });
}

Report run_selftest(const Options& opt) {
  return guarded([&]() -> Report {
    std::vector<CriterionResult> rs = acceptance_battery(opt);
    json arr = json::array();
    for (const CriterionResult& r : rs) {
      json o;
      o["index"] = r.index;
      o["name"] = r.name;
      o["pass"] = r.pass;
      o["checks"] = r.checks;
      o["detail"] = r.detail;
      arr.push_back(std::move(o));
    }
    bool pass = battery_passed(rs);
    json j;
    j["command"] = "selftest";
    j["pass"] = pass;
    j["criteria"] = arr;
    j["seed"] = opt.seed;
    return {battery_to_text(rs), j.dump(2) + "\n", pass ? 0 : 1};
  });
}

}  // namespace kani
