#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otbook/linalg.hpp"
#include "otbook/rational.hpp"

namespace otbook {

// Order of H_1 of the surgered manifold. A zero presentation determinant is
// reported as infinite.
class H1Order {
 public:
  H1Order() = default;  // trivial group

  static H1Order infinite() { return H1Order(0); }
  static H1Order finite(std::uint64_t n) {
    if (n == 0) throw DomainError("finite H1 order must be positive");
    return H1Order(n);
  }
  static H1Order from_determinant(Integer det);

  bool is_infinite() const { return value_ == 0; }
  std::uint64_t value() const { return value_; }
  std::string str() const { return is_infinite() ? "INFINITE" : std::to_string(value_); }

  friend bool operator==(const H1Order&, const H1Order&) = default;

 private:
  explicit H1Order(std::uint64_t v) : value_(v) {}
  std::uint64_t value_ = 1;
};

enum class MoveKind { blow_up, blow_down, slam_dunk, inverse_slam_dunk, handle_slide, reorient };

std::string_view name(MoveKind k);
MoveKind move_kind_from_name(std::string_view s);

// Arguments of one Kirby move. Fields unused by a given kind stay empty.
struct MoveSpec {
  MoveKind kind = MoveKind::blow_up;
  std::string vertex;                    // acted-on vertex; new vertex id for blow_up (may be empty)
  std::string other;                     // slide target, or new leaf id for inverse_slam_dunk
  int sign = 0;                          // ε for blow_up, slide sign
  std::optional<Integer> split;          // forced integer part for inverse_slam_dunk
  std::map<std::string, Integer> star;   // linking of the blown-up unknot

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct MoveRecord {
  MoveSpec move;
  H1Order before;
  H1Order after;
  // Filled when the diagram has only integer framings on both sides.
  std::optional<int> signature_before;
  std::optional<int> signature_after;
};

struct Vertex {
  std::string id;
  Rational framing;
  bool is_unknot = true;
};

/// Framed link as a weighted graph: vertices carry (possibly rational)
/// framings, edges carry integer linking numbers. Value type; moves return
/// new diagrams with an extended move log.
class FramedLinkDiagram {
 public:
  std::size_t add_vertex(std::string id, Rational framing, bool is_unknot = true);
  void remove_vertex(std::size_t v);

  void set_linking(std::size_t i, std::size_t j, Integer value);
  void set_linking(std::string_view a, std::string_view b, Integer value);
  Integer linking(std::size_t i, std::size_t j) const;
  Integer linking(std::string_view a, std::string_view b) const;

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  Vertex& vertex(std::size_t i) { return vertices_.at(i); }

  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  bool all_integer() const;

  // An id not used by any vertex, of the form prefix + number.
  std::string fresh_id(std::string_view prefix) const;

  // Presentation matrix of H_1: row i is p_i on the diagonal and q_i * lk_ij
  // off it, for framing p_i / q_i in lowest terms.
  IntMatrix presentation_matrix() const;
  // Integer linking matrix (framings on the diagonal); requires all_integer().
  IntMatrix linking_matrix() const;

  // Reorders vertex storage; `order` lists the old indices in their new order.
  FramedLinkDiagram permuted(const std::vector<std::size_t>& order) const;

  const std::vector<MoveRecord>& move_log() const { return log_; }
  void append_log(MoveRecord r) { log_.push_back(std::move(r)); }
  void clear_log() { log_.clear(); }

  // Equality of the weighted graphs (ids, framings, flags, linking), ignoring the log.
  bool same_graph(const FramedLinkDiagram& o) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Integer>> link_;
  std::vector<MoveRecord> log_;
};

H1Order h1_order(const FramedLinkDiagram& d);

// Vertex indices of a linear chain (a path whose edges are all +-1), starting
// at the endpoint with the smaller storage index. Throws NotAChain otherwise.
std::vector<std::size_t> linear_chain(const FramedLinkDiagram& d);

}  // namespace otbook
