#include "kconj/group_model.hpp"

#include <json.hpp>

#include <cctype>

#include "kconj/errors.hpp"

namespace kconj {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

const char* factor_prefix(FactorType t) {
  switch (t) {
    case FactorType::SU: return "SU";
    case FactorType::Sp: return "Sp";
    case FactorType::U: return "U";
  }
  return "?";
}

int min_n(FactorType t) { return t == FactorType::SU ? 2 : 1; }

void validate(const GroupDescriptor& desc) {
  if (desc.trivial) {
    if (!desc.factors.empty() || desc.torus_rank != 0)
      throw InvalidDescriptor("trivial flag set on a nontrivial descriptor");
    return;
  }
  if (desc.factors.empty() && desc.torus_rank == 0)
    throw InvalidDescriptor("empty group descriptor (request the trivial group explicitly)");
  if (desc.torus_rank < 0 || desc.torus_rank > kMaxTorusRank)
    throw InvalidDescriptor("torus rank " + std::to_string(desc.torus_rank) + " out of range [0, " +
                            std::to_string(kMaxTorusRank) + "]");
  long rank = desc.torus_rank;
  for (const auto& f : desc.factors) {
    if (f.n < min_n(f.type) || f.n > kMaxFactorN)
      throw InvalidDescriptor(std::string(factor_prefix(f.type)) + "(" + std::to_string(f.n) +
                              ") out of range [" + std::to_string(min_n(f.type)) + ", " +
                              std::to_string(kMaxFactorN) + "]");
    rank += f.type == FactorType::SU ? f.n - 1 : f.n;
  }
  if (rank > kMaxRank)
    throw InvalidDescriptor("total rank " + std::to_string(rank) + " exceeds " +
                            std::to_string(kMaxRank));
}

class DescriptorLexer {
 public:
  explicit DescriptorLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < text_.size() ? lower(text_[pos_]) : '\0'; }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.size() - pos_ < w.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (lower(text_[pos_ + i]) != w[i]) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    if (pos_ - start > 6) throw InvalidDescriptor("integer too large in group descriptor");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Factor parse_factor_string(std::string_view text) {
  GroupDescriptor d = parse_group_descriptor(text);
  if (d.factors.size() != 1 || d.torus_rank != 0)
    throw InvalidDescriptor("expected a single factor, got '" + std::string(text) + "'");
  return d.factors.front();
}

GroupDescriptor parse_json_descriptor(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object()) throw InvalidDescriptor("JSON group descriptor must be an object");
  GroupDescriptor d;
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) throw InvalidDescriptor("\"factors\" must be an array");
    for (const auto& f : j["factors"]) {
      if (f.is_string()) {
        d.factors.push_back(parse_factor_string(f.get<std::string>()));
      } else if (f.is_object() && f.contains("type") && f.contains("n")) {
        std::string type = f["type"].get<std::string>();
        for (auto& c : type) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        FactorType t;
        if (type == "SU")
          t = FactorType::SU;
        else if (type == "SP")
          t = FactorType::Sp;
        else if (type == "U")
          t = FactorType::U;
        else
          throw InvalidDescriptor("unknown factor type " + type);
        d.factors.push_back({t, f["n"].get<int>()});
      } else {
        throw InvalidDescriptor("factor entries must be strings like \"SU(3)\" or {type, n}");
      }
    }
  }
  if (j.contains("torus_rank")) d.torus_rank = j["torus_rank"].get<int>();
  if (j.contains("trivial")) d.trivial = j["trivial"].get<bool>();
  validate(d);
  return d;
}

}  // namespace

std::string to_string(const GroupDescriptor& desc) {
  if (desc.trivial) return "trivial";
  std::string out;
  for (const auto& f : desc.factors) {
    if (!out.empty()) out += " x ";
    out += std::string(factor_prefix(f.type)) + "(" + std::to_string(f.n) + ")";
  }
  if (desc.torus_rank > 0) {
    if (!out.empty()) out += " x ";
    out += "T^" + std::to_string(desc.torus_rank);
  }
  return out;
}

GroupDescriptor parse_group_descriptor(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_descriptor(text);

  DescriptorLexer lex(text);
  GroupDescriptor d;
  if (lex.done()) throw InvalidDescriptor("empty group descriptor");
  if (lex.accept_word("trivial") || lex.accept_word("1")) {
    if (!lex.done()) throw ParseError("unexpected input after trivial group", lex.pos());
    d.trivial = true;
    return d;
  }
  while (true) {
    lex.skip_ws();
    std::size_t at = lex.pos();
    if (lex.accept_word("su")) {
      lex.expect('(');
      d.factors.push_back({FactorType::SU, lex.integer()});
      lex.expect(')');
    } else if (lex.accept_word("sp")) {
      lex.expect('(');
      d.factors.push_back({FactorType::Sp, lex.integer()});
      lex.expect(')');
    } else if (lex.accept_word("u")) {
      lex.expect('(');
      d.factors.push_back({FactorType::U, lex.integer()});
      lex.expect(')');
    } else if (lex.accept_word("t")) {
      lex.skip_ws();
      if (lex.peek() == '^') {
        lex.expect('^');
        d.torus_rank += lex.integer();
      } else {
        d.torus_rank += 1;
      }
    } else {
      throw ParseError("expected SU(n), Sp(n), U(n) or T^k", at);
    }
    if (lex.done()) break;
    if (lex.peek() == 'x' || lex.peek() == '*') {
      lex.accept_word(lex.peek() == 'x' ? "x" : "*");
    } else {
      throw ParseError("expected 'x' or '*' between factors", lex.pos());
    }
  }
  validate(d);
  return d;
}

GroupPtr build_group(const GroupDescriptor& desc) {
  validate(desc);
  auto g = std::shared_ptr<GroupModel>(new GroupModel());
  g->descriptor_ = desc;
  int ny = 0, nt = 0;
  auto poly = [&](std::size_t fi, int k, int dim) {
    g->generators_.push_back({"y" + std::to_string(++ny), VarKind::Polynomial, fi, k, dim});
  };
  auto laurent = [&](std::size_t fi, int k) {
    g->generators_.push_back({"t" + std::to_string(++nt), VarKind::Laurent, fi, k, 1});
  };
  for (std::size_t fi = 0; fi < desc.factors.size(); ++fi) {
    const Factor& f = desc.factors[fi];
    switch (f.type) {
      case FactorType::SU:
        for (int k = 1; k < f.n; ++k) poly(fi, k, static_cast<int>(binomial(f.n, k)));
        break;
      case FactorType::Sp:
        for (int k = 1; k <= f.n; ++k)
          poly(fi, k, static_cast<int>(binomial(2 * f.n, k) - binomial(2 * f.n, k - 2)));
        break;
      case FactorType::U:
        for (int k = 1; k < f.n; ++k) poly(fi, k, static_cast<int>(binomial(f.n, k)));
        laurent(fi, f.n);
        break;
    }
  }
  for (int j = 1; j <= desc.torus_rank; ++j) laurent(desc.factors.size(), j);

  std::vector<Variable> vars, doubled;
  for (const auto& gen : g->generators_) vars.push_back({gen.name, gen.kind});
  doubled = vars;
  for (const auto& gen : g->generators_) doubled.push_back({gen.name + "'", gen.kind});
  const std::string rid = "R(" + to_string(desc) + ")";
  g->ring_ = std::make_shared<const RingModel>(rid, std::move(vars));
  g->doubled_ = std::make_shared<const RingModel>(rid + "⊗" + rid, std::move(doubled), true);
  return g;
}

GroupPtr build_group(std::string_view text) { return build_group(parse_group_descriptor(text)); }

const std::vector<GeneratorInfo>& generator_inventory(const GroupModel& g) { return g.generators(); }

std::size_t GroupModel::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw UnknownGenerator("no generator named '" + std::string(name) + "' in " + this->name());
}

bool GroupModel::operator==(const GroupModel& other) const {
  return this == &other || (descriptor_.factors == other.descriptor_.factors &&
                            descriptor_.torus_rank == other.descriptor_.torus_rank &&
                            descriptor_.trivial == other.descriptor_.trivial);
}

}  // namespace kconj
