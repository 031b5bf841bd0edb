#include "otbook/framed_link.hpp"

#include <array>
#include <cstdlib>

namespace otbook {

namespace {

constexpr std::array<std::pair<MoveKind, std::string_view>, 6> kMoveNames = {{
    {MoveKind::blow_up, "blow_up"},
    {MoveKind::blow_down, "blow_down"},
    {MoveKind::slam_dunk, "slam_dunk"},
    {MoveKind::inverse_slam_dunk, "inverse_slam_dunk"},
    {MoveKind::handle_slide, "handle_slide"},
    {MoveKind::reorient, "reorient"},
}};

}  // namespace

H1Order H1Order::from_determinant(Integer det) {
  if (det == 0) return infinite();
  return H1Order(static_cast<std::uint64_t>(det < 0 ? -static_cast<__int128>(det) : det));
}

std::string_view name(MoveKind k) {
  for (const auto& [kind, n] : kMoveNames)
    if (kind == k) return n;
  return "?";
}

MoveKind move_kind_from_name(std::string_view s) {
  for (const auto& [kind, n] : kMoveNames)
    if (n == s) return kind;
  throw LookupError("unknown move '" + std::string(s) + "'");
}

std::size_t FramedLinkDiagram::add_vertex(std::string id, Rational framing, bool is_unknot) {
  if (id.empty()) throw DomainError("vertex id must be non-empty");
  if (find(id)) throw DomainError("duplicate vertex id '" + id + "'");
  vertices_.push_back({std::move(id), framing, is_unknot});
  for (auto& row : link_) row.push_back(0);
  link_.emplace_back(vertices_.size(), 0);
  return vertices_.size() - 1;
}

void FramedLinkDiagram::remove_vertex(std::size_t v) {
  if (v >= vertices_.size()) throw LookupError("vertex index out of range");
  vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(v));
  link_.erase(link_.begin() + static_cast<std::ptrdiff_t>(v));
  for (auto& row : link_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(v));
}

void FramedLinkDiagram::set_linking(std::size_t i, std::size_t j, Integer value) {
  if (i >= size() || j >= size()) throw LookupError("vertex index out of range");
  if (i == j) throw DomainError("no self-edges: framings live on vertices");
  link_[i][j] = value;
  link_[j][i] = value;
}

void FramedLinkDiagram::set_linking(std::string_view a, std::string_view b, Integer value) {
  set_linking(index_of(a), index_of(b), value);
}

Integer FramedLinkDiagram::linking(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw LookupError("vertex index out of range");
  return i == j ? 0 : link_[i][j];
}

Integer FramedLinkDiagram::linking(std::string_view a, std::string_view b) const {
  return linking(index_of(a), index_of(b));
}

std::optional<std::size_t> FramedLinkDiagram::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t FramedLinkDiagram::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw LookupError("unknown vertex '" + std::string(id) + "'");
}

std::vector<std::size_t> FramedLinkDiagram::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != v && link_[v][j] != 0) out.push_back(j);
  return out;
}

bool FramedLinkDiagram::all_integer() const {
  for (const auto& v : vertices_)
    if (!v.framing.is_integer()) return false;
  return true;
}

std::string FramedLinkDiagram::fresh_id(std::string_view prefix) const {
  for (std::size_t n = 1;; ++n) {
    std::string id = std::string(prefix) + std::to_string(n);
    if (!find(id)) return id;
  }
}

IntMatrix FramedLinkDiagram::presentation_matrix() const {
  IntMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const Rational& f = vertices_[i].framing;
    m(i, i) = f.num();
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i) m(i, j) = checked::mul(f.den(), link_[i][j]);
  }
  return m;
}

IntMatrix FramedLinkDiagram::linking_matrix() const {
  if (!all_integer()) throw DomainError("linking matrix needs integer framings");
  return presentation_matrix();
}

FramedLinkDiagram FramedLinkDiagram::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size()) throw DomainError("permutation size mismatch");
  FramedLinkDiagram out;
  for (std::size_t i : order) {
    const Vertex& v = vertex(i);
    out.add_vertex(v.id, v.framing, v.is_unknot);
  }
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b) out.set_linking(a, b, linking(order[a], order[b]));
  out.log_ = log_;
  return out;
}

bool FramedLinkDiagram::same_graph(const FramedLinkDiagram& o) const {
  if (size() != o.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    const Vertex &x = vertices_[i], &y = o.vertices_[i];
    if (x.id != y.id || x.framing != y.framing || x.is_unknot != y.is_unknot) return false;
  }
  return link_ == o.link_;
}

H1Order h1_order(const FramedLinkDiagram& d) {
  return H1Order::from_determinant(determinant(d.presentation_matrix()));
}

std::vector<std::size_t> linear_chain(const FramedLinkDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  std::size_t edges = 0;
  std::optional<std::size_t> start;
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = d.neighbors(v);
    if (nb.size() > 2) throw NotAChain("vertex '" + d.vertex(v).id + "' has degree > 2");
    for (std::size_t w : nb)
      if (std::abs(d.linking(v, w)) != 1) throw NotAChain("chain edges must have weight +-1");
    edges += nb.size();
    if (nb.size() <= 1 && !start) start = v;
  }
  if (edges / 2 != n - 1 || !start) throw NotAChain("diagram is not a path");
  std::vector<std::size_t> order{*start};
  std::optional<std::size_t> prev;
  while (order.size() < n) {
    std::optional<std::size_t> next;
    for (std::size_t w : d.neighbors(order.back()))
      if (w != prev) next = w;
    if (!next) throw NotAChain("diagram is disconnected");
    prev = order.back();
    order.push_back(*next);
  }
  return order;
}

}  // namespace otbook
