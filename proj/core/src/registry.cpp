#include "holesat/registry.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holesat {

namespace {

VarTag make(VarKind kind, int size, std::initializer_list<int> idx) {
  VarTag t;
  t.kind = kind;
  t.size = static_cast<std::uint8_t>(size);
  t.arity = static_cast<std::uint8_t>(idx.size());
  std::size_t i = 0;
  for (int v : idx) {
    if (v < 0) throw std::invalid_argument("negative index in variable tag");
    t.idx[i++] = static_cast<std::uint32_t>(v);
  }
  return t;
}

VarTag make_set(VarKind kind, std::span<const int> x) {
  if (x.size() > 6) throw std::invalid_argument("variable tag supports at most 6 points");
  VarTag t;
  t.kind = kind;
  t.size = static_cast<std::uint8_t>(x.size());
  t.arity = static_cast<std::uint8_t>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) t.idx[i] = static_cast<std::uint32_t>(x[i]);
  return t;
}

}  // namespace

std::string_view kind_name(VarKind kind) {
  switch (kind) {
    case VarKind::Orientation: return "O";
    case VarKind::Bounding: return "E";
    case VarKind::Gon: return "G";
    case VarKind::Inside: return "I";
    case VarKind::Hole: return "H";
    case VarKind::Left: return "L";
    case VarKind::Right: return "R";
    case VarKind::Counter: return "C";
  }
  return "?";
}

VarTag VarTag::orientation(int a, int b, int c) { return make(VarKind::Orientation, 0, {a, b, c}); }
VarTag VarTag::bounding(int a, int b, int c, int d) { return make(VarKind::Bounding, 0, {a, b, c, d}); }
VarTag VarTag::gon(std::span<const int> x) { return make_set(VarKind::Gon, x); }
VarTag VarTag::inside(int i, int a, int b, int c) { return make(VarKind::Inside, 0, {i, a, b, c}); }
VarTag VarTag::hole(std::span<const int> x) { return make_set(VarKind::Hole, x); }
VarTag VarTag::left(int k, int a, int b) { return make(VarKind::Left, k, {a, b}); }
VarTag VarTag::right(int k, int a, int b) { return make(VarKind::Right, k, {a, b}); }
VarTag VarTag::counter(int i, int j) { return make(VarKind::Counter, 0, {i, j}); }

std::uint64_t VarTag::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(kind) | (static_cast<std::uint64_t>(size) << 4);
  if (kind == VarKind::Counter) {
    if (idx[0] >= (1U << 24) || idx[1] >= (1U << 24))
      throw std::out_of_range("counter coordinates too large");
    return k | (static_cast<std::uint64_t>(idx[0]) << 8) |
           (static_cast<std::uint64_t>(idx[1]) << 32);
  }
  for (std::size_t i = 0; i < arity; ++i) {
    if (idx[i] >= 255) throw std::out_of_range("point index too large for variable tag");
    k |= static_cast<std::uint64_t>(idx[i] + 1) << (8 + 8 * i);
  }
  return k;
}

std::string VarTag::to_string() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (kind == VarKind::Gon || kind == VarKind::Hole || kind == VarKind::Left ||
      kind == VarKind::Right)
    os << static_cast<int>(size);
  os << '(';
  // E(a,b;c,d) and I(i;a,b,c) separate their two argument groups.
  const std::size_t split = kind == VarKind::Bounding ? 2 : kind == VarKind::Inside ? 1 : 0;
  for (std::size_t i = 0; i < arity; ++i) {
    if (i > 0) os << (i == split ? ';' : ',');
    os << idx[i] + 1;
  }
  os << ')';
  return os.str();
}

VarTag VarTag::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')' || open == 0)
    throw std::invalid_argument("malformed variable tag: " + std::string(text));
  const char letter = text[0];
  int size = 0;
  if (open > 1) {
    auto [p, ec] = std::from_chars(text.data() + 1, text.data() + open, size);
    if (ec != std::errc() || p != text.data() + open)
      throw std::invalid_argument("malformed variable tag: " + std::string(text));
  }
  std::vector<int> values;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    int v = 0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || v < 1)
      throw std::invalid_argument("malformed variable tag: " + std::string(text));
    values.push_back(v - 1);
    body.remove_prefix(static_cast<std::size_t>(p - body.data()));
    if (!body.empty()) {
      if (body[0] != ',' && body[0] != ';')
        throw std::invalid_argument("malformed variable tag: " + std::string(text));
      body.remove_prefix(1);
    }
  }
  auto need = [&](std::size_t n) {
    if (values.size() != n) throw std::invalid_argument("wrong arity in tag: " + std::string(text));
  };
  switch (letter) {
    case 'O': need(3); return orientation(values[0], values[1], values[2]);
    case 'E': need(4); return bounding(values[0], values[1], values[2], values[3]);
    case 'I': need(4); return inside(values[0], values[1], values[2], values[3]);
    case 'G': need(static_cast<std::size_t>(size)); return gon(values);
    case 'H': need(static_cast<std::size_t>(size)); return hole(values);
    case 'L': need(2); return left(size, values[0], values[1]);
    case 'R': need(2); return right(size, values[0], values[1]);
    case 'C': need(2); return counter(values[0], values[1]);
    default: break;
  }
  throw std::invalid_argument("unknown variable family in tag: " + std::string(text));
}

int VarRegistry::add(const VarTag& tag) {
  const int id = static_cast<int>(tags_.size()) + 1;
  auto [it, inserted] = ids_.emplace(tag.key(), id);
  if (!inserted) throw std::logic_error("duplicate variable " + tag.to_string());
  tags_.push_back(tag);
  return id;
}

int VarRegistry::id(const VarTag& tag) const {
  auto it = ids_.find(tag.key());
  if (it == ids_.end()) throw std::out_of_range("unregistered variable " + tag.to_string());
  return it->second;
}

std::optional<int> VarRegistry::find(const VarTag& tag) const {
  auto it = ids_.find(tag.key());
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarRegistry::count(VarKind kind) const {
  std::size_t c = 0;
  for (const auto& t : tags_) c += t.kind == kind;
  return c;
}

std::vector<VarRegistry::Block> VarRegistry::layout() const {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    const VarKind k = tags_[i].kind;
    if (blocks.empty() || blocks.back().kind != k)
      blocks.push_back({k, static_cast<int>(i) + 1, 0});
    ++blocks.back().count;
  }
  return blocks;
}

void VarRegistry::write(std::ostream& out) const {
  for (std::size_t i = 0; i < tags_.size(); ++i) out << i + 1 << ' ' << tags_[i].to_string() << '\n';
}

VarRegistry VarRegistry::read(std::istream& in) {
  VarRegistry reg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    std::istringstream fields(line);
    int id = 0;
    std::string tag;
    if (!(fields >> id >> tag))
      throw std::runtime_error("registry line " + std::to_string(line_no) + " malformed");
    if (id != reg.size() + 1)
      throw std::runtime_error("registry line " + std::to_string(line_no) +
                               ": ids must be consecutive from 1");
    reg.add(VarTag::parse(tag));
  }
  return reg;
}

void VarRegistry::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write registry " + path.string());
  write(out);
}

VarRegistry VarRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry " + path.string());
  return read(in);
}

}  // namespace holesat
