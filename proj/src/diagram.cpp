#include "mixbraid/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mixbraid/normal_form.hpp"

namespace mixbraid {

// --- text format --------------------------------------------------------------

MixedDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MixedDiagram d;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok.rfind("g=", 0) != 0)
        throw std::invalid_argument("diagram must start with g=<int>");
      d.g = std::stoi(tok.substr(2));
      have_header = true;
      continue;
    }
    if (tok == "top") {
      int c;
      while (ls >> c) d.top_moving.push_back(c);
      continue;
    }
    MorseEvent ev;
    if (tok == "cup")
      ev.kind = MorseEvent::Kind::Cup;
    else if (tok == "cap")
      ev.kind = MorseEvent::Kind::Cap;
    else if (tok == "x+") {
      ev.kind = MorseEvent::Kind::Cross;
      ev.sign = 1;
    } else if (tok == "x-") {
      ev.kind = MorseEvent::Kind::Cross;
      ev.sign = -1;
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown event '" + tok + "'");
    }
    if (!(ls >> ev.pos))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": missing position");
    d.rows.push_back(ev);
  }
  if (!have_header) throw std::invalid_argument("diagram must start with g=<int>");
  return d;
}

std::string diagram_to_string(const MixedDiagram& d) {
  std::ostringstream out;
  out << "g=" << d.g << "\n";
  if (!d.top_moving.empty()) {
    out << "top";
    for (int c : d.top_moving) out << " " << c;
    out << "\n";
  }
  for (const MorseEvent& ev : d.rows) {
    switch (ev.kind) {
      case MorseEvent::Kind::Cup: out << "cup "; break;
      case MorseEvent::Kind::Cap: out << "cap "; break;
      case MorseEvent::Kind::Cross: out << (ev.sign > 0 ? "x+ " : "x- "); break;
    }
    out << ev.pos << "\n";
  }
  return out.str();
}

// --- tracing --------------------------------------------------------------------

namespace {

struct TraceCrossing {
  int row;
  int pos;
  int sign;
  int left;
  int right;
};

struct Trace {
  int g = 0;
  std::vector<std::vector<int>> slices;  // slices[r] = ids before row r
  int nseg = 0;
  std::vector<bool> is_fixed;
  std::vector<bool> boundary;             // entered through the top boundary
  std::vector<int> birth_row, death_row;  // boundary/fixed: -1 and rows
  std::vector<int> birth_pos;
  std::vector<int> cup_partner, cap_partner;  // -1 at the boundary
  std::vector<TraceCrossing> crossings;
  std::vector<std::vector<int>> seg_cross;  // per segment, in row order
  std::vector<int> component;               // per segment, moving only (-1 fixed)
  int ncomp = 0;
  std::vector<char> flow;  // 'd' or 'u'; fixed and boundary strands are 'd'

  int slot_of(int r, int seg) const {
    const std::vector<int>& s = slices[static_cast<size_t>(r)];
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] == seg) return static_cast<int>(i) + 1;
    throw std::runtime_error("segment not present in slice");
  }
};

[[noreturn]] void trace_error(int row, const std::string& msg) {
  throw std::invalid_argument("row " + std::to_string(row) + ": " + msg);
}

Trace trace_diagram(const MixedDiagram& d) {
  if (d.g < 0) throw std::invalid_argument("genus must be nonnegative");
  Trace t;
  t.g = d.g;
  int top_width = d.g + static_cast<int>(d.top_moving.size());
  {
    int prev = 0;
    for (int c : d.top_moving) {
      if (c <= prev || c > top_width)
        throw std::invalid_argument("top boundary columns must be ascending and in range");
      prev = c;
    }
  }
  auto add_segment = [&t](bool fixed, bool boundary, int birth_row, int birth_pos) {
    t.is_fixed.push_back(fixed);
    t.boundary.push_back(boundary);
    t.birth_row.push_back(birth_row);
    t.death_row.push_back(-1);
    t.birth_pos.push_back(birth_pos);
    t.cup_partner.push_back(-1);
    t.cap_partner.push_back(-1);
    t.seg_cross.emplace_back();
    return t.nseg++;
  };
  std::vector<int> slice;
  {
    size_t next_moving = 0;
    for (int c = 1; c <= top_width; ++c) {
      bool moving = next_moving < d.top_moving.size() &&
                    d.top_moving[next_moving] == c;
      if (moving) ++next_moving;
      slice.push_back(add_segment(!moving, moving, -1, c));
    }
  }
  t.slices.push_back(slice);
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r) {
    const MorseEvent& ev = d.rows[static_cast<size_t>(r)];
    int w = static_cast<int>(slice.size());
    switch (ev.kind) {
      case MorseEvent::Kind::Cup: {
        if (ev.pos < 1 || ev.pos > w + 1) trace_error(r, "cup position out of range");
        int a = add_segment(false, false, r, ev.pos);
        int b = add_segment(false, false, r, ev.pos + 1);
        t.cup_partner[static_cast<size_t>(a)] = b;
        t.cup_partner[static_cast<size_t>(b)] = a;
        slice.insert(slice.begin() + (ev.pos - 1), {a, b});
        break;
      }
      case MorseEvent::Kind::Cap: {
        if (ev.pos < 1 || ev.pos > w - 1) trace_error(r, "cap position out of range");
        int a = slice[static_cast<size_t>(ev.pos) - 1];
        int b = slice[static_cast<size_t>(ev.pos)];
        if (t.is_fixed[static_cast<size_t>(a)] || t.is_fixed[static_cast<size_t>(b)])
          trace_error(r, "cap on a fixed strand");
        t.death_row[static_cast<size_t>(a)] = r;
        t.death_row[static_cast<size_t>(b)] = r;
        t.cap_partner[static_cast<size_t>(a)] = b;
        t.cap_partner[static_cast<size_t>(b)] = a;
        slice.erase(slice.begin() + (ev.pos - 1), slice.begin() + (ev.pos + 1));
        break;
      }
      case MorseEvent::Kind::Cross: {
        if (ev.pos < 1 || ev.pos > w - 1) trace_error(r, "crossing position out of range");
        int a = slice[static_cast<size_t>(ev.pos) - 1];
        int b = slice[static_cast<size_t>(ev.pos)];
        if (t.is_fixed[static_cast<size_t>(a)] && t.is_fixed[static_cast<size_t>(b)])
          trace_error(r, "crossing between two fixed strands");
        int ci = static_cast<int>(t.crossings.size());
        t.crossings.push_back(TraceCrossing{r, ev.pos, ev.sign, a, b});
        t.seg_cross[static_cast<size_t>(a)].push_back(ci);
        if (b != a) t.seg_cross[static_cast<size_t>(b)].push_back(ci);
        std::swap(slice[static_cast<size_t>(ev.pos) - 1], slice[static_cast<size_t>(ev.pos)]);
        break;
      }
    }
    t.slices.push_back(slice);
  }
  int rows = static_cast<int>(d.rows.size());
  // Fixed strands survive in order; surviving moving strands must have come
  // in through the top boundary and end at the matching columns.
  {
    std::vector<int> fixed_ids, bottom_moving;
    for (size_t i = 0; i < slice.size(); ++i) {
      int id = slice[i];
      t.death_row[static_cast<size_t>(id)] = rows;
      if (t.is_fixed[static_cast<size_t>(id)])
        fixed_ids.push_back(id);
      else
        bottom_moving.push_back(static_cast<int>(i) + 1);
    }
    std::vector<int> expected_fixed;
    for (int id = 0; id < t.nseg; ++id)
      if (t.is_fixed[static_cast<size_t>(id)]) expected_fixed.push_back(id);
    if (fixed_ids != expected_fixed) trace_error(rows, "fixed strands are permuted or missing");
    std::vector<int> declared = d.top_moving;
    if (static_cast<int>(bottom_moving.size()) != static_cast<int>(declared.size()))
      trace_error(rows, "moving strands do not close up");
    if (bottom_moving != declared)
      trace_error(rows, "boundary moving strands end at unmatched columns");
  }

  // Components of the moving part.
  t.component.assign(static_cast<size_t>(t.nseg), -1);
  for (int s = 0; s < t.nseg; ++s) {
    if (t.is_fixed[static_cast<size_t>(s)] || t.component[static_cast<size_t>(s)] != -1) continue;
    int c = t.ncomp++;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (t.component[static_cast<size_t>(x)] != -1) continue;
      t.component[static_cast<size_t>(x)] = c;
      for (int y : {t.cup_partner[static_cast<size_t>(x)], t.cap_partner[static_cast<size_t>(x)]})
        if (y >= 0) stack.push_back(y);
    }
  }

  // Orientation: boundary strands run downward; in each closed component the
  // left leg of its topmost (then leftmost) cup runs downward; partners
  // across a cup or cap run oppositely.
  t.flow.assign(static_cast<size_t>(t.nseg), 'd');
  std::vector<int> anchor(static_cast<size_t>(t.ncomp), -1);
  std::vector<int> top_ends(static_cast<size_t>(t.ncomp), 0);
  std::vector<int> bottom_ends(static_cast<size_t>(t.ncomp), 0);
  for (int s = 0; s < t.nseg; ++s) {
    if (t.is_fixed[static_cast<size_t>(s)]) continue;
    int c = t.component[static_cast<size_t>(s)];
    if (t.death_row[static_cast<size_t>(s)] == rows && t.cap_partner[static_cast<size_t>(s)] == -1)
      bottom_ends[static_cast<size_t>(c)] += 1;
    if (t.boundary[static_cast<size_t>(s)]) {
      top_ends[static_cast<size_t>(c)] += 1;
      anchor[static_cast<size_t>(c)] = s;
      continue;
    }
    int a = anchor[static_cast<size_t>(c)];
    if (a >= 0 && t.boundary[static_cast<size_t>(a)]) continue;
    if (a == -1 || t.birth_row[static_cast<size_t>(s)] < t.birth_row[static_cast<size_t>(a)] ||
        (t.birth_row[static_cast<size_t>(s)] == t.birth_row[static_cast<size_t>(a)] &&
         t.birth_pos[static_cast<size_t>(s)] < t.birth_pos[static_cast<size_t>(a)]))
      anchor[static_cast<size_t>(c)] = s;
  }
  for (int c = 0; c < t.ncomp; ++c) {
    if (top_ends[static_cast<size_t>(c)] + bottom_ends[static_cast<size_t>(c)] == 0) continue;
    if (top_ends[static_cast<size_t>(c)] != 1 || bottom_ends[static_cast<size_t>(c)] != 1)
      trace_error(rows, "open strand does not run from top boundary to bottom boundary");
  }
  std::vector<char> assigned(static_cast<size_t>(t.nseg), 0);
  for (int c = 0; c < t.ncomp; ++c) {
    int s0 = anchor[static_cast<size_t>(c)];
    if (s0 == -1) continue;
    t.flow[static_cast<size_t>(s0)] = 'd';
    assigned[static_cast<size_t>(s0)] = 1;
    std::vector<int> stack{s0};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {t.cup_partner[static_cast<size_t>(x)], t.cap_partner[static_cast<size_t>(x)]}) {
        if (y < 0 || assigned[static_cast<size_t>(y)]) continue;
        t.flow[static_cast<size_t>(y)] = t.flow[static_cast<size_t>(x)] == 'd' ? 'u' : 'd';
        assigned[static_cast<size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  return t;
}

// Type of one crossing as seen from one of its strands.
char crossing_type_for(const TraceCrossing& c, int seg) {
  bool left = c.left == seg;
  bool over = left ? c.sign > 0 : c.sign < 0;
  return over ? 'o' : 'u';
}

}  // namespace

ValidationReport validate(const MixedDiagram& d) {
  ValidationReport rep;
  try {
    trace_diagram(d);
  } catch (const std::invalid_argument& e) {
    rep.ok = false;
    rep.message = e.what();
    std::string s = rep.message;
    if (s.rfind("row ", 0) == 0) rep.row = std::atoi(s.c_str() + 4);
  }
  return rep;
}

// --- geometric mixed braids ------------------------------------------------------

std::string GeometricMixedBraid::serialize() const {
  std::ostringstream out;
  out << "gmb g=" << g << " n=" << n() << "\n";
  out << "word " << word_body_to_string(word) << "\n";
  out << "labels ";
  for (char c : labels) out << c;
  out << "\n";
  out << "positions";
  for (int p : positions) out << " " << p;
  out << "\n";
  return out.str();
}

GeometricMixedBraid GeometricMixedBraid::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GeometricMixedBraid b;
  int n = -1;
  bool have_header = false;
  std::vector<Generator> body;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "gmb") {
      std::string gs, ns;
      if (!(ls >> gs >> ns) || gs.rfind("g=", 0) != 0 || ns.rfind("n=", 0) != 0)
        throw std::invalid_argument("bad gmb header");
      b.g = std::stoi(gs.substr(2));
      n = std::stoi(ns.substr(2));
      have_header = true;
    } else if (tok == "word") {
      std::string rest;
      std::getline(ls, rest);
      body = parse_word_body(rest);
    } else if (tok == "labels") {
      std::string ls2;
      if (ls >> ls2)
        for (char c : ls2) b.labels.push_back(c);
    } else if (tok == "positions") {
      int p;
      while (ls >> p) b.positions.push_back(p);
    } else {
      throw std::invalid_argument("unknown gmb line: " + line);
    }
  }
  if (!have_header) throw std::invalid_argument("missing gmb header");
  if (n != static_cast<int>(b.positions.size()))
    throw std::invalid_argument("gmb position count differs from n");
  b.word = make_word(0, b.g + n, body);
  validate_geometric(b);
  return b;
}

void validate_geometric(const GeometricMixedBraid& b) {
  int n = b.n();
  int w = b.g + n;
  if (b.word.g != 0 || b.word.n != w)
    throw std::invalid_argument("gmb word must be classical on g+n strands");
  if (word_family(b.word) != Family::Neutral)
    throw std::invalid_argument("gmb word must use sigma letters only");
  if (static_cast<int>(b.labels.size()) != n)
    throw std::invalid_argument("one label per moving pair required");
  for (char c : b.labels)
    if (c != 'o' && c != 'u') throw std::invalid_argument("labels must be 'o' or 'u'");
  std::vector<bool> moving(static_cast<size_t>(w) + 1, false);
  int prev = 0;
  for (int p : b.positions) {
    if (p <= prev || p > w) throw std::invalid_argument("positions must be ascending columns");
    moving[static_cast<size_t>(p)] = true;
    prev = p;
  }
  // Fixed strands must never cross each other and must return home;
  // moving endpoints must occupy the same columns at both ends.
  std::vector<int> occupant(static_cast<size_t>(w) + 1);
  for (int p = 1; p <= w; ++p) occupant[static_cast<size_t>(p)] = p;
  for (const Generator& gen : word_units(b.word)) {
    int p = gen.index;
    int a = occupant[static_cast<size_t>(p)], c = occupant[static_cast<size_t>(p) + 1];
    if (!moving[static_cast<size_t>(a)] && !moving[static_cast<size_t>(c)])
      throw std::invalid_argument("fixed strands cross each other in gmb word");
    std::swap(occupant[static_cast<size_t>(p)], occupant[static_cast<size_t>(p) + 1]);
  }
  for (int p = 1; p <= w; ++p) {
    int s = occupant[static_cast<size_t>(p)];
    if (!moving[static_cast<size_t>(s)] && s != p)
      throw std::invalid_argument("fixed strand displaced in gmb word");
    if (moving[static_cast<size_t>(s)] != moving[static_cast<size_t>(p)])
      throw std::invalid_argument("moving endpoints do not match up by column");
  }
}

MixedDiagram close_geometric(const GeometricMixedBraid& b) {
  validate_geometric(b);
  int n = b.n();
  MixedDiagram d;
  d.g = b.g;
  // Closing arcs are parked to the right of the braid, the rightmost pair's
  // arc opening closest to the braid box.  On its way out an arc crosses,
  // with its own label, every fixed strand and every already-open leg to its
  // right.  With this layering the braiding algorithm undoes the closure
  // without ever crossing a strand that survives.
  //
  // Token simulation of the top section: -2 fixed, -1 parked arc, j >= 0 leg.
  std::vector<int> tokens;
  {
    size_t next = 0;
    for (int c = 1; c <= b.g + n; ++c) {
      if (next < b.positions.size() && b.positions[next] == c) {
        ++next;
        continue;  // legs enter the slice when their cup is emitted
      }
      tokens.push_back(-2);
    }
  }
  for (int j = n - 1; j >= 0; --j) {
    int c = b.positions[static_cast<size_t>(j)];
    // left of the cup: only the fixed strands with smaller column are present
    // (pairs with smaller column open later, arcs park on the right)
    int slot = (c - (j + 1)) + 1;
    d.rows.push_back(MorseEvent{MorseEvent::Kind::Cup, slot, 0});
    tokens.insert(tokens.begin() + (slot - 1), {j, -1});
    // carry the arc right past everything up to the parked arcs
    int at = slot + 1;
    int sgn = b.labels[static_cast<size_t>(j)] == 'o' ? 1 : -1;
    while (at <= static_cast<int>(tokens.size()) - 1 && tokens[static_cast<size_t>(at)] != -1) {
      d.rows.push_back(MorseEvent{MorseEvent::Kind::Cross, at, sgn});
      std::swap(tokens[static_cast<size_t>(at) - 1], tokens[static_cast<size_t>(at)]);
      ++at;
    }
  }
  for (const Generator& gen : word_units(b.word))
    d.rows.push_back(MorseEvent{MorseEvent::Kind::Cross, gen.index, gen.exponent});
  // Bottom section: mirror, leftmost pair closed first.
  for (int j = 0; j < n; ++j) {
    int c = b.positions[static_cast<size_t>(j)];
    int leg_slot = (c - (j + 1)) + 1;  // fixed strands left of c; smaller legs are gone
    int arc_slot = -1;
    for (size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i] == -1) {
        arc_slot = static_cast<int>(i) + 1;
        break;  // this pair's arc is the leftmost parked one
      }
    int sgn = b.labels[static_cast<size_t>(j)] == 'o' ? -1 : 1;
    for (int at = arc_slot - 1; at >= leg_slot + 1; --at) {
      d.rows.push_back(MorseEvent{MorseEvent::Kind::Cross, at, sgn});
      std::swap(tokens[static_cast<size_t>(at) - 1], tokens[static_cast<size_t>(at)]);
    }
    d.rows.push_back(MorseEvent{MorseEvent::Kind::Cap, leg_slot, 0});
    tokens.erase(tokens.begin() + (leg_slot - 1), tokens.begin() + (leg_slot + 1));
  }
  return d;
}

MixedDiagram close_algebraic(const BraidWord& u) {
  validate_word(u);
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("algebraic closure expects an a-generator word");
  GeometricMixedBraid b;
  b.g = u.g;
  b.word = embed(u);
  for (int j = 1; j <= u.n; ++j) {
    b.positions.push_back(u.g + j);
    b.labels.push_back('o');  // superfluous: the arcs cross nothing
  }
  return close_geometric(b);
}

// --- up-arcs ----------------------------------------------------------------------

namespace {

std::vector<UpArc> up_arcs_from_trace(const Trace& t) {
  std::vector<UpArc> arcs;
  for (int s = 0; s < t.nseg; ++s) {
    if (t.is_fixed[static_cast<size_t>(s)] || t.flow[static_cast<size_t>(s)] != 'u') continue;
    const std::vector<int>& cr = t.seg_cross[static_cast<size_t>(s)];
    std::vector<std::pair<int, int>> runs;  // [begin, end) of equal type
    int i = 0;
    while (i < static_cast<int>(cr.size())) {
      int j = i;
      char ty = crossing_type_for(t.crossings[static_cast<size_t>(cr[static_cast<size_t>(i)])], s);
      while (j < static_cast<int>(cr.size()) &&
             crossing_type_for(t.crossings[static_cast<size_t>(cr[static_cast<size_t>(j)])], s) == ty)
        ++j;
      runs.emplace_back(i, j);
      i = j;
    }
    if (runs.empty()) runs.emplace_back(0, 0);
    for (size_t k = 0; k < runs.size(); ++k) {
      UpArc arc;
      arc.segment = s;
      arc.cross_begin = runs[k].first;
      arc.cross_end = runs[k].second;
      arc.type = arc.cross_begin == arc.cross_end
                     ? 'f'
                     : crossing_type_for(
                           t.crossings[static_cast<size_t>(cr[static_cast<size_t>(arc.cross_begin)])], s);
      arc.top_is_cup = (k == 0);
      arc.bottom_is_cap = (k + 1 == runs.size());
      if (arc.top_is_cup) {
        arc.top_row = t.birth_row[static_cast<size_t>(s)];
        arc.top_pos = t.birth_pos[static_cast<size_t>(s)];
      } else {
        int ci = cr[static_cast<size_t>(arc.cross_begin)];
        arc.top_row = t.crossings[static_cast<size_t>(ci)].row;
        arc.top_pos = t.slot_of(arc.top_row, s);
      }
      arcs.push_back(arc);
    }
  }
  return arcs;
}

}  // namespace

std::vector<UpArc> find_up_arcs(const MixedDiagram& d) {
  return up_arcs_from_trace(trace_diagram(d));
}

// --- elimination -----------------------------------------------------------------

namespace {

// Decides whether the pulled strand passes over an existing strand.  The pull
// keeps every typed up-arc pure: it stays under o-arcs and over u-arcs.
struct OverOracle {
  const Trace* t;
  char label;

  bool n_over(int seg, int row) const {
    if (t->is_fixed[static_cast<size_t>(seg)] || t->flow[static_cast<size_t>(seg)] == 'd')
      return label == 'o';
    const std::vector<int>& cr = t->seg_cross[static_cast<size_t>(seg)];
    if (cr.empty()) return label == 'o';
    // Locate the crossing-type run of this segment that spans `row`.
    char ty = 0;
    for (size_t k = 0; k < cr.size(); ++k) {
      const TraceCrossing& c = t->crossings[static_cast<size_t>(cr[k])];
      if (c.row <= row) ty = crossing_type_for(c, seg);
      if (c.row > row && ty == 0) ty = crossing_type_for(c, seg);
    }
    if (ty == 'o') return false;  // stay under an over-arc
    if (ty == 'u') return true;
    return label == 'o';
  }

  int sign_for(bool n_is_left, bool over) const {
    if (n_is_left) return over ? 1 : -1;
    return over ? -1 : 1;
  }
};

}  // namespace

EliminationResult eliminate_up_arc(const MixedDiagram& d, const UpArc& arc, char free_label) {
  if (free_label != 'o' && free_label != 'u') throw std::invalid_argument("bad free label");
  Trace t = trace_diagram(d);
  int S = arc.segment;
  if (S < 0 || S >= t.nseg || t.is_fixed[static_cast<size_t>(S)] ||
      t.flow[static_cast<size_t>(S)] != 'u')
    throw std::invalid_argument("not an upward moving segment");
  const std::vector<int>& cr = t.seg_cross[static_cast<size_t>(S)];
  if (arc.cross_begin < 0 || arc.cross_end > static_cast<int>(cr.size()) ||
      arc.cross_begin > arc.cross_end)
    throw std::invalid_argument("bad up-arc crossing range");
  char label = arc.type == 'f' ? free_label : arc.type;
  OverOracle oracle{&t, label};

  int rows = static_cast<int>(d.rows.size());
  bool top_cup = arc.top_is_cup;
  bool bottom_cap = arc.bottom_is_cap;
  int tcut_row = top_cup ? t.birth_row[static_cast<size_t>(S)]
                         : t.crossings[static_cast<size_t>(cr[static_cast<size_t>(arc.cross_begin)])].row;
  int bcut_row = bottom_cap
                     ? t.death_row[static_cast<size_t>(S)]
                     : t.crossings[static_cast<size_t>(cr[static_cast<size_t>(arc.cross_end) - 1])].row;

  // Which crossings of S belong to the eliminated piece (dropped).
  std::vector<bool> dropped(t.crossings.size(), false);
  for (int k = arc.cross_begin; k < arc.cross_end; ++k)
    dropped[static_cast<size_t>(cr[static_cast<size_t>(k)])] = true;

  // Where the pulled line sits above the cut: b_top[r] = number of old
  // strands strictly left of it in slice r, for r in [0 .. tcut_row].
  std::vector<long long> b_top(static_cast<size_t>(tcut_row) + 1, -1);
  {
    long long b;
    if (top_cup) {
      b = d.rows[static_cast<size_t>(tcut_row)].pos - 1;
    } else {
      b = t.slot_of(tcut_row, S);  // line hugs S on the right
    }
    b_top[static_cast<size_t>(tcut_row)] = b;
    for (int r = tcut_row - 1; r >= 0; --r) {
      const MorseEvent& ev = d.rows[static_cast<size_t>(r)];
      long long below = b_top[static_cast<size_t>(r) + 1];
      long long above = below;
      switch (ev.kind) {
        case MorseEvent::Kind::Cross:
          break;  // straddles handled at emission
        case MorseEvent::Kind::Cup:
          if (below >= ev.pos + 1)
            above = below - 2;
          else if (below == ev.pos)
            above = ev.pos - 1;  // line between the newborn legs
          break;
        case MorseEvent::Kind::Cap:
          if (below >= ev.pos) above = below + 2;
          break;
      }
      b_top[static_cast<size_t>(r)] = above;
    }
  }

  // Ids born at each cup row, for slice bookkeeping.
  std::vector<std::pair<int, int>> born(static_cast<size_t>(rows), {-1, -1});
  for (int id = 0; id < t.nseg; ++id)
    if (!t.is_fixed[static_cast<size_t>(id)] && t.birth_row[static_cast<size_t>(id)] >= 0) {
      int r = t.birth_row[static_cast<size_t>(id)];
      if (t.birth_pos[static_cast<size_t>(id)] == d.rows[static_cast<size_t>(r)].pos)
        born[static_cast<size_t>(r)].first = id;
      else
        born[static_cast<size_t>(r)].second = id;
    }

  constexpr int kTop = -10;     // the pulled top strand
  constexpr int kBot = -11;     // the pulled bottom strand
  constexpr int kMarker = -12;  // the virtual line through the hole

  MixedDiagram out;
  out.g = d.g;
  {
    int new_top = static_cast<int>(b_top[0]) + 1;
    for (int c : d.top_moving) out.top_moving.push_back(c + (c >= new_top ? 1 : 0));
    out.top_moving.push_back(new_top);
    std::sort(out.top_moving.begin(), out.top_moving.end());
  }
  auto emit = [&out](MorseEvent::Kind k, int pos, int sign = 0) {
    out.rows.push_back(MorseEvent{k, pos, sign});
  };

  // The working slice: old ids plus at most one of kTop/kBot/kMarker.
  std::vector<int> ns;
  for (int id : t.slices[0]) ns.push_back(id);
  ns.insert(ns.begin() + b_top[0], kTop);

  auto index_of = [&ns](int id) {
    for (size_t i = 0; i < ns.size(); ++i)
      if (ns[i] == id) return static_cast<int>(i);
    throw std::runtime_error("elimination lost track of a strand");
  };
  auto emit_pos = [&ns](int idx0) {
    // 1-based position of a 0-based index, not counting the virtual marker
    int pos = 0;
    for (int i = 0; i <= idx0; ++i)
      if (ns[static_cast<size_t>(i)] != kMarker) ++pos;
    return pos;
  };
  // Insertion point for a cup appearing at old gap p of old slice r: right
  // after the last old strand with old slot < p (new arrivals never cross
  // the virtual line).
  auto gap_index = [&ns, &t](int r, int p) {
    const std::vector<int>& old_slice = t.slices[static_cast<size_t>(r)];
    int last = -1;
    for (int q = 0; q < p - 1 && q < static_cast<int>(old_slice.size()); ++q) {
      int id = old_slice[static_cast<size_t>(q)];
      for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == id) last = static_cast<int>(i);
    }
    return last + 1;
  };

  enum class Phase { Top, Hole, Bottom };
  Phase phase = tcut_row == 0 ? Phase::Top : Phase::Top;

  // Jog a real strand at ns index `from` until it swallows the marker.
  auto jog_to_marker = [&](int strand_id, int row) {
    int at = index_of(strand_id);
    int mk = index_of(kMarker);
    int dir = mk > at ? 1 : -1;
    while (at + dir != mk) {
      int other = ns[static_cast<size_t>(at + dir)];
      bool over = oracle.n_over(other, row);
      bool n_left = dir > 0;
      int sign = n_left ? (over ? 1 : -1) : (over ? -1 : 1);
      emit(MorseEvent::Kind::Cross, emit_pos(std::min(at, at + dir)), sign);
      std::swap(ns[static_cast<size_t>(at)], ns[static_cast<size_t>(at + dir)]);
      at += dir;
    }
    std::swap(ns[static_cast<size_t>(at)], ns[static_cast<size_t>(mk)]);
    ns.erase(ns.begin() + at);  // at now holds the marker
  };

  for (int r = 0; r < rows; ++r) {
    const MorseEvent& ev = d.rows[static_cast<size_t>(r)];
    const std::vector<int>& old_slice = t.slices[static_cast<size_t>(r)];

    // --- top cut ---------------------------------------------------------
    if (r == tcut_row && phase == Phase::Top) {
      if (top_cup) {
        int sib = born[static_cast<size_t>(r)].first == S ? born[static_cast<size_t>(r)].second
                                                          : born[static_cast<size_t>(r)].first;
        int at = index_of(kTop);
        ns[static_cast<size_t>(at)] = sib;
        ns.insert(ns.begin() + at + 1, kMarker);
        phase = Phase::Hole;
        if (r == bcut_row && !bottom_cap)
          throw std::runtime_error("degenerate up-arc cuts");
        if (r == bcut_row) {  // cannot happen: cup and cap are distinct rows
          throw std::runtime_error("degenerate up-arc cuts");
        }
        continue;  // the cup row is dropped
      }
      // interior: close the pulled strand against the upper part of S
      int at_s = index_of(S);
      int at_n = index_of(kTop);
      if (at_n != at_s + 1) throw std::runtime_error("pulled strand not adjacent to its arc");
      emit(MorseEvent::Kind::Cap, emit_pos(at_s), 0);
      ns.erase(ns.begin() + at_s, ns.begin() + at_s + 2);
      ns.insert(ns.begin() + at_s, kMarker);
      phase = Phase::Hole;
      // fall through: this row's event is the first dropped piece crossing
    }

    bool handled = false;
    if (phase == Phase::Hole) {
      // --- bottom cut, cap case: the row itself is the dropped cap --------
      if (r == bcut_row && bottom_cap) {
        int a = old_slice[static_cast<size_t>(ev.pos) - 1];
        int b = old_slice[static_cast<size_t>(ev.pos)];
        int sib = a == S ? b : a;
        jog_to_marker(sib, r);
        // rename: the sibling continues as the pulled bottom strand
        ns[static_cast<size_t>(index_of(sib))] = kBot;
        phase = Phase::Bottom;
        continue;
      }
      // --- ordinary hole row ----------------------------------------------
      switch (ev.kind) {
        case MorseEvent::Kind::Cross: {
          int a = old_slice[static_cast<size_t>(ev.pos) - 1];
          int b = old_slice[static_cast<size_t>(ev.pos)];
          if (a == S || b == S) {
            handled = true;  // dropped crossing of the eliminated piece
            break;
          }
          int ia = index_of(a), ib = index_of(b);
          if (ib == ia + 1) {
            emit(MorseEvent::Kind::Cross, emit_pos(ia), ev.sign);
            std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ib)]);
          } else if (ib == ia + 2 && ns[static_cast<size_t>(ia) + 1] == kMarker) {
            // the pair hops across the virtual line
            emit(MorseEvent::Kind::Cross, emit_pos(ia), ev.sign);
            std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ib)]);
          } else {
            throw std::runtime_error("hole crossing participants not adjacent");
          }
          handled = true;
          break;
        }
        case MorseEvent::Kind::Cup: {
          int idx = gap_index(r, ev.pos);
          int la = born[static_cast<size_t>(r)].first;
          int lb = born[static_cast<size_t>(r)].second;
          emit(MorseEvent::Kind::Cup, emit_pos(idx - 1) + 1, 0);
          ns.insert(ns.begin() + idx, {la, lb});
          handled = true;
          break;
        }
        case MorseEvent::Kind::Cap: {
          int a = old_slice[static_cast<size_t>(ev.pos) - 1];
          int b = old_slice[static_cast<size_t>(ev.pos)];
          int ia = index_of(a), ib = index_of(b);
          emit(MorseEvent::Kind::Cap, emit_pos(ia), 0);
          if (ib == ia + 1) {
            ns.erase(ns.begin() + ia, ns.begin() + ia + 2);
          } else if (ib == ia + 2 && ns[static_cast<size_t>(ia) + 1] == kMarker) {
            ns.erase(ns.begin() + ib);
            ns.erase(ns.begin() + ia);
          } else {
            throw std::runtime_error("hole cap participants not adjacent");
          }
          handled = true;
          break;
        }
      }
      // --- bottom cut, interior case --------------------------------------
      if (r == bcut_row && !bottom_cap) {
        int s_slot = t.slot_of(r + 1, S);
        int idx = gap_index(r + 1, s_slot);
        emit(MorseEvent::Kind::Cup, emit_pos(idx - 1) + 1, 0);
        ns.insert(ns.begin() + idx, {S, kBot});
        jog_to_marker(kBot, r);
        phase = Phase::Bottom;
      }
      if (handled) continue;
    }

    // --- rows with the pulled strand present ------------------------------
    int n_id = phase == Phase::Top ? kTop : kBot;
    switch (ev.kind) {
      case MorseEvent::Kind::Cross: {
        int a = old_slice[static_cast<size_t>(ev.pos) - 1];
        int b = old_slice[static_cast<size_t>(ev.pos)];
        int ia = index_of(a), ib = index_of(b);
        if (ib == ia + 1) {
          emit(MorseEvent::Kind::Cross, emit_pos(ia), ev.sign);
          std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ib)]);
        } else if (ib == ia + 2 && ns[static_cast<size_t>(ia) + 1] == n_id) {
          // expansion: both strands cross the pulled strand
          bool overA = oracle.n_over(a, r);
          bool overB = oracle.n_over(b, r);
          emit(MorseEvent::Kind::Cross, emit_pos(ia), overA ? -1 : 1);  // a x N, N right
          std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ia) + 1]);
          emit(MorseEvent::Kind::Cross, emit_pos(ia + 1), ev.sign);  // a x b
          std::swap(ns[static_cast<size_t>(ia) + 1], ns[static_cast<size_t>(ia) + 2]);
          emit(MorseEvent::Kind::Cross, emit_pos(ia), overB ? 1 : -1);  // N x b, N left
          std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ia) + 1]);
        } else {
          throw std::runtime_error("crossing participants not adjacent");
        }
        break;
      }
      case MorseEvent::Kind::Cup: {
        int la = born[static_cast<size_t>(r)].first;
        int lb = born[static_cast<size_t>(r)].second;
        if (phase == Phase::Top) {
          long long b_below = b_top[static_cast<size_t>(r) + 1];
          if (b_below == ev.pos) {
            // the pre-pass routed the line between the newborn legs
            int at_n = index_of(n_id);
            bool over = oracle.n_over(la, r);
            emit(MorseEvent::Kind::Cup, emit_pos(at_n) + 1, 0);
            ns.insert(ns.begin() + at_n + 1, {la, lb});
            emit(MorseEvent::Kind::Cross, emit_pos(at_n), over ? 1 : -1);  // N x legL, N left
            std::swap(ns[static_cast<size_t>(at_n)], ns[static_cast<size_t>(at_n) + 1]);
            break;
          }
        }
        int idx = gap_index(r, ev.pos);
        bool legs_right_of_n;
        if (phase == Phase::Top) {
          legs_right_of_n = b_top[static_cast<size_t>(r) + 1] <= ev.pos - 1;
        } else {
          legs_right_of_n = true;  // forward choice: new pairs stay right of the pull
        }
        if (legs_right_of_n && idx == index_of(n_id)) idx += 1;
        emit(MorseEvent::Kind::Cup, emit_pos(idx - 1) + 1, 0);
        ns.insert(ns.begin() + idx, {la, lb});
        break;
      }
      case MorseEvent::Kind::Cap: {
        int a = old_slice[static_cast<size_t>(ev.pos) - 1];
        int b = old_slice[static_cast<size_t>(ev.pos)];
        int ia = index_of(a), ib = index_of(b);
        if (ib == ia + 1) {
          emit(MorseEvent::Kind::Cap, emit_pos(ia), 0);
          ns.erase(ns.begin() + ia, ns.begin() + ia + 2);
        } else if (ib == ia + 2 && ns[static_cast<size_t>(ia) + 1] == n_id) {
          // slide one leg across the pulled strand, then close
          bool over = oracle.n_over(a, r);
          emit(MorseEvent::Kind::Cross, emit_pos(ia), over ? -1 : 1);  // a x N, N right
          std::swap(ns[static_cast<size_t>(ia)], ns[static_cast<size_t>(ia) + 1]);
          emit(MorseEvent::Kind::Cap, emit_pos(ia + 1), 0);
          ns.erase(ns.begin() + ia + 1, ns.begin() + ia + 3);
        } else {
          throw std::runtime_error("cap participants not adjacent");
        }
        break;
      }
    }
  }

  EliminationResult res;
  res.top_slot = static_cast<int>(b_top[0]) + 1;
  int bot = -1;
  for (size_t i = 0; i < ns.size(); ++i)
    if (ns[i] == kBot || (bottom_cap && false)) bot = static_cast<int>(i) + 1;
  if (bot == -1) throw std::runtime_error("pulled bottom strand missing");
  res.bottom_slot = bot;
  res.label = label;
  res.diagram = std::move(out);
  return res;
}

// --- braiding ----------------------------------------------------------------------

GeometricMixedBraid braid_diagram(const MixedDiagram& d) {
  if (!d.top_moving.empty())
    throw std::invalid_argument("braiding expects a closed diagram");
  MixedDiagram cur = d;
  struct Pair {
    int top, bottom;
    char label;
  };
  std::vector<Pair> pairs;
  size_t guard = 0;
  for (;;) {
    std::vector<UpArc> arcs = find_up_arcs(cur);
    if (arcs.empty()) break;
    if (++guard > 10000) throw std::runtime_error("braiding did not terminate");
    // bottom-most top vertex first, ties leftmost
    const UpArc* pick = &arcs[0];
    for (const UpArc& a : arcs)
      if (a.top_row > pick->top_row ||
          (a.top_row == pick->top_row && a.top_pos < pick->top_pos))
        pick = &a;
    size_t before = arcs.size();
    EliminationResult res = eliminate_up_arc(cur, *pick, 'o');
    cur = res.diagram;
    ValidationReport rep = validate(cur);
    if (!rep.ok) throw std::runtime_error("elimination produced invalid diagram: " + rep.message);
    if (find_up_arcs(cur).size() >= before)
      throw std::runtime_error("up-arc count did not decrease");
    for (Pair& p : pairs) {
      if (res.top_slot <= p.top) p.top += 1;
      if (res.bottom_slot <= p.bottom) p.bottom += 1;
    }
    pairs.push_back(Pair{res.top_slot, res.bottom_slot, res.label});
  }
  // Read the braid off the fully braided diagram.
  GeometricMixedBraid b;
  b.g = d.g;
  std::vector<Generator> units;
  for (const MorseEvent& ev : cur.rows) {
    if (ev.kind != MorseEvent::Kind::Cross)
      throw std::runtime_error("braided diagram still has turnbacks");
    units.push_back(Generator{Kind::Sigma, ev.pos, ev.sign});
  }
  int w = d.g + static_cast<int>(pairs.size());
  b.word = word_from_units(0, w, units);
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.top < y.top; });
  for (const Pair& p : pairs) {
    if (p.top != p.bottom)
      throw std::runtime_error("pulled strand pair ended at mismatched columns");
    b.positions.push_back(p.top);
    b.labels.push_back(p.label);
  }
  validate_geometric(b);
  return b;
}

// --- isotopy moves --------------------------------------------------------------------

namespace {

bool braid3_identity(int a, int b2, int c) {
  // sigma_1^a sigma_2^b sigma_1^c  ==  sigma_2^c sigma_1^b sigma_2^a in B_3?
  std::vector<std::pair<int, int>> lhs{{1, a}, {2, b2}, {1, c}};
  std::vector<std::pair<int, int>> rhs{{2, c}, {1, b2}, {2, a}};
  return left_normal_form(lhs, 3) == left_normal_form(rhs, 3);
}

int count_fixed(const Trace& t, int r, std::initializer_list<int> slots) {
  int k = 0;
  for (int s : slots) {
    int id = t.slices[static_cast<size_t>(r)][static_cast<size_t>(s) - 1];
    if (t.is_fixed[static_cast<size_t>(id)]) ++k;
  }
  return k;
}

}  // namespace

MixedDiagram apply_move(const MixedDiagram& d, DiagramMove move, const MoveSite& site) {
  Trace t = trace_diagram(d);
  int rows = static_cast<int>(d.rows.size());
  MixedDiagram out = d;
  auto slice_width = [&](int r) { return static_cast<int>(t.slices[static_cast<size_t>(r)].size()); };

  auto expect_cross = [&](int r) -> const MorseEvent& {
    if (r < 0 || r >= rows || d.rows[static_cast<size_t>(r)].kind != MorseEvent::Kind::Cross)
      throw std::invalid_argument("pattern mismatch: expected a crossing row");
    return d.rows[static_cast<size_t>(r)];
  };

  switch (move) {
    case DiagramMove::R2:
    case DiagramMove::Mixed: {
      if (move == DiagramMove::Mixed && site.variant == 1) {
        // R3-shaped slide across a fixed strand: same pattern as R3 below.
        MixedDiagram res = out;
        // reuse R3 handling with relaxed strand requirement
        const MorseEvent& e1 = expect_cross(site.row);
        const MorseEvent& e2 = expect_cross(site.row + 1);
        const MorseEvent& e3 = expect_cross(site.row + 2);
        int p = e1.pos, q = e2.pos;
        if (e3.pos != p || (q != p + 1 && q != p - 1))
          throw std::invalid_argument("R3 pattern mismatch");
        if (!braid3_identity(e1.sign, e2.sign, e3.sign))
          throw std::invalid_argument("crossing signs do not satisfy the braid relation");
        int lo = std::min(p, q);
        int fixed = count_fixed(t, site.row, {lo, lo + 1, lo + 2});
        if (fixed < 1) throw std::invalid_argument("mixed move needs a fixed strand");
        res.rows[static_cast<size_t>(site.row)] = MorseEvent{MorseEvent::Kind::Cross, q, e3.sign};
        res.rows[static_cast<size_t>(site.row) + 1] = MorseEvent{MorseEvent::Kind::Cross, p, e2.sign};
        res.rows[static_cast<size_t>(site.row) + 2] = MorseEvent{MorseEvent::Kind::Cross, q, e1.sign};
        return res;
      }
      // R2-shaped: insert or remove a cancelling pair at pos.
      if (site.remove) {
        const MorseEvent& e1 = expect_cross(site.row);
        const MorseEvent& e2 = expect_cross(site.row + 1);
        if (e1.pos != site.pos || e2.pos != site.pos || e1.sign != -e2.sign)
          throw std::invalid_argument("R2 removal pattern mismatch");
        int fixed = count_fixed(t, site.row, {site.pos, site.pos + 1});
        if (move == DiagramMove::R2 && fixed != 0)
          throw std::invalid_argument("R2 requires moving strands; use the mixed move");
        if (move == DiagramMove::Mixed && fixed < 1)
          throw std::invalid_argument("mixed move needs a fixed strand");
        out.rows.erase(out.rows.begin() + site.row, out.rows.begin() + site.row + 2);
        return out;
      }
      if (site.row < 0 || site.row > rows) throw std::invalid_argument("row out of range");
      if (site.pos < 1 || site.pos + 1 > slice_width(site.row))
        throw std::invalid_argument("position out of range");
      int fixed = count_fixed(t, site.row, {site.pos, site.pos + 1});
      if (move == DiagramMove::R2 && fixed != 0)
        throw std::invalid_argument("R2 requires moving strands; use the mixed move");
      if (move == DiagramMove::Mixed && fixed < 1)
        throw std::invalid_argument("mixed move needs a fixed strand");
      if (fixed == 2) throw std::invalid_argument("cannot cross two fixed strands");
      int s = site.variant == 0 ? 1 : -1;
      out.rows.insert(out.rows.begin() + site.row,
                      {MorseEvent{MorseEvent::Kind::Cross, site.pos, s},
                       MorseEvent{MorseEvent::Kind::Cross, site.pos, -s}});
      return out;
    }
    case DiagramMove::R3: {
      const MorseEvent& e1 = expect_cross(site.row);
      const MorseEvent& e2 = expect_cross(site.row + 1);
      const MorseEvent& e3 = expect_cross(site.row + 2);
      int p = e1.pos, q = e2.pos;
      if (e3.pos != p || (q != p + 1 && q != p - 1))
        throw std::invalid_argument("R3 pattern mismatch");
      if (!braid3_identity(e1.sign, e2.sign, e3.sign))
        throw std::invalid_argument("crossing signs do not satisfy the braid relation");
      int lo = std::min(p, q);
      if (count_fixed(t, site.row, {lo, lo + 1, lo + 2}) != 0)
        throw std::invalid_argument("R3 requires moving strands; use the mixed move");
      out.rows[static_cast<size_t>(site.row)] = MorseEvent{MorseEvent::Kind::Cross, q, e3.sign};
      out.rows[static_cast<size_t>(site.row) + 1] = MorseEvent{MorseEvent::Kind::Cross, p, e2.sign};
      out.rows[static_cast<size_t>(site.row) + 2] = MorseEvent{MorseEvent::Kind::Cross, q, e1.sign};
      return out;
    }
    case DiagramMove::R1: {
      int side = site.variant / 2;  // 0: kink to the right, 1: to the left
      int sgn = site.variant % 2 == 0 ? 1 : -1;
      if (site.remove) {
        if (site.row + 2 >= rows + 1) throw std::invalid_argument("row out of range");
        const MorseEvent& e1 = d.rows[static_cast<size_t>(site.row)];
        const MorseEvent& e2 = d.rows[static_cast<size_t>(site.row) + 1];
        const MorseEvent& e3 = d.rows[static_cast<size_t>(site.row) + 2];
        bool right = e1.kind == MorseEvent::Kind::Cup && e2.kind == MorseEvent::Kind::Cross &&
                     e3.kind == MorseEvent::Kind::Cap && e1.pos == site.pos + 1 &&
                     e2.pos == site.pos && e3.pos == site.pos + 1;
        bool left = e1.kind == MorseEvent::Kind::Cup && e2.kind == MorseEvent::Kind::Cross &&
                    e3.kind == MorseEvent::Kind::Cap && e1.pos == site.pos &&
                    e2.pos == site.pos + 1 && e3.pos == site.pos;
        if (!right && !left) throw std::invalid_argument("R1 removal pattern mismatch");
        out.rows.erase(out.rows.begin() + site.row, out.rows.begin() + site.row + 3);
        return out;
      }
      if (site.row < 0 || site.row > rows) throw std::invalid_argument("row out of range");
      if (site.pos < 1 || site.pos > slice_width(site.row))
        throw std::invalid_argument("position out of range");
      int id = t.slices[static_cast<size_t>(site.row)][static_cast<size_t>(site.pos) - 1];
      if (t.is_fixed[static_cast<size_t>(id)])
        throw std::invalid_argument("R1 kink must sit on a moving strand");
      std::vector<MorseEvent> kink;
      if (side == 0) {
        kink = {MorseEvent{MorseEvent::Kind::Cup, site.pos + 1, 0},
                MorseEvent{MorseEvent::Kind::Cross, site.pos, sgn},
                MorseEvent{MorseEvent::Kind::Cap, site.pos + 1, 0}};
      } else {
        kink = {MorseEvent{MorseEvent::Kind::Cup, site.pos, 0},
                MorseEvent{MorseEvent::Kind::Cross, site.pos + 1, sgn},
                MorseEvent{MorseEvent::Kind::Cap, site.pos, 0}};
      }
      out.rows.insert(out.rows.begin() + site.row, kink.begin(), kink.end());
      return out;
    }
    case DiagramMove::Planar: {
      if (site.variant == 0) {
        // Commute two adjacent rows with disjoint supports.
        if (site.row < 0 || site.row + 1 >= rows) throw std::invalid_argument("row out of range");
        MorseEvent e1 = d.rows[static_cast<size_t>(site.row)];
        MorseEvent e2 = d.rows[static_cast<size_t>(site.row) + 1];
        auto fail = [] { throw std::invalid_argument("rows do not commute"); };
        MorseEvent f1 = e2, f2 = e1;  // f1 first, then f2
        using K = MorseEvent::Kind;
        if (e1.kind == K::Cross) {
          if (e2.kind == K::Cross) {
            if (std::abs(e1.pos - e2.pos) < 2) fail();
          } else if (e2.kind == K::Cup) {
            if (e2.pos > e1.pos && e2.pos < e1.pos + 2) fail();
            if (e2.pos <= e1.pos) f2.pos += 2;
          } else {
            if (e2.pos + 1 >= e1.pos && e2.pos <= e1.pos + 1) fail();
            if (e2.pos + 1 < e1.pos) f2.pos -= 2;
          }
        } else if (e1.kind == K::Cup) {
          if (e2.kind == K::Cross) {
            if (e2.pos + 1 >= e1.pos && e2.pos <= e1.pos + 1) fail();
            if (e2.pos > e1.pos + 1) f1.pos -= 2;
          } else if (e2.kind == K::Cup) {
            if (e2.pos > e1.pos + 1)
              f1.pos -= 2;
            else if (e2.pos <= e1.pos)
              f2.pos += 2;
            else
              fail();
          } else {  // Cap
            if (e2.pos == e1.pos || e2.pos + 1 == e1.pos || e2.pos == e1.pos + 1) fail();
            if (e2.pos > e1.pos + 1) f1.pos -= 2;
            if (f1.pos + 1 < e1.pos) f2.pos -= 2;
          }
        } else {  // Cap first
          if (e2.kind == K::Cross) {
            if (e2.pos >= e1.pos) f1.pos += 2;
            if (f1.pos <= e1.pos + 1 && f1.pos + 1 >= e1.pos) fail();
          } else if (e2.kind == K::Cup) {
            if (e2.pos >= e1.pos) f1.pos += 2;
            if (f1.pos <= e1.pos) f2.pos += 2;
          } else {
            if (e2.pos >= e1.pos) f1.pos += 2;
            if (f1.pos <= e1.pos + 1 && f1.pos + 1 >= e1.pos) fail();
            if (f1.pos + 1 < e1.pos) f2.pos -= 2;
          }
        }
        out.rows[static_cast<size_t>(site.row)] = f1;
        out.rows[static_cast<size_t>(site.row) + 1] = f2;
        ValidationReport rep = validate(out);
        if (!rep.ok) throw std::invalid_argument("rows do not commute: " + rep.message);
        return out;
      }
      // Snake (zigzag) insertion/removal on a moving strand.
      if (site.remove) {
        if (site.row + 1 >= rows) throw std::invalid_argument("row out of range");
        const MorseEvent& e1 = d.rows[static_cast<size_t>(site.row)];
        const MorseEvent& e2 = d.rows[static_cast<size_t>(site.row) + 1];
        bool right = e1.kind == MorseEvent::Kind::Cup && e2.kind == MorseEvent::Kind::Cap &&
                     e1.pos == site.pos + 1 && e2.pos == site.pos;
        bool left = e1.kind == MorseEvent::Kind::Cup && e2.kind == MorseEvent::Kind::Cap &&
                    e1.pos == site.pos && e2.pos == site.pos + 1;
        if ((site.variant == 1 && !right) || (site.variant == 2 && !left))
          throw std::invalid_argument("snake removal pattern mismatch");
        out.rows.erase(out.rows.begin() + site.row, out.rows.begin() + site.row + 2);
        return out;
      }
      if (site.row < 0 || site.row > rows) throw std::invalid_argument("row out of range");
      if (site.pos < 1 || site.pos > slice_width(site.row))
        throw std::invalid_argument("position out of range");
      int id = t.slices[static_cast<size_t>(site.row)][static_cast<size_t>(site.pos) - 1];
      if (t.is_fixed[static_cast<size_t>(id)])
        throw std::invalid_argument("snake must sit on a moving strand");
      if (site.variant == 1) {
        out.rows.insert(out.rows.begin() + site.row,
                        {MorseEvent{MorseEvent::Kind::Cup, site.pos + 1, 0},
                         MorseEvent{MorseEvent::Kind::Cap, site.pos, 0}});
      } else if (site.variant == 2) {
        out.rows.insert(out.rows.begin() + site.row,
                        {MorseEvent{MorseEvent::Kind::Cup, site.pos, 0},
                         MorseEvent{MorseEvent::Kind::Cap, site.pos + 1, 0}});
      } else {
        throw std::invalid_argument("unknown planar variant");
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown move");
}

// --- closure invariants -------------------------------------------------------------

DiagramInvariants diagram_invariants(const MixedDiagram& d) {
  Trace t = trace_diagram(d);
  DiagramInvariants inv;

  // Handle index of each fixed strand, and a virtual closure pairing the
  // boundary endpoints column by column (the closing arcs wind nothing).
  std::vector<int> handle(static_cast<size_t>(t.nseg), -1);
  {
    int h = 0;
    for (int id : t.slices[0])
      if (t.is_fixed[static_cast<size_t>(id)]) handle[static_cast<size_t>(id)] = h++;
  }
  std::vector<int> comp_map(static_cast<size_t>(t.ncomp));
  for (int c = 0; c < t.ncomp; ++c) comp_map[static_cast<size_t>(c)] = c;
  std::function<int(int)> find = [&](int c) {
    while (comp_map[static_cast<size_t>(c)] != c) c = comp_map[static_cast<size_t>(c)];
    return c;
  };
  if (!d.top_moving.empty()) {
    std::vector<int> top_comp(static_cast<size_t>(t.nseg + 1), -1);
    for (size_t i = 0; i < t.slices[0].size(); ++i) {
      int id = t.slices[0][i];
      if (!t.is_fixed[static_cast<size_t>(id)])
        top_comp[i + 1] = t.component[static_cast<size_t>(id)];
    }
    const std::vector<int>& bottom = t.slices.back();
    for (size_t i = 0; i < bottom.size(); ++i) {
      int id = bottom[i];
      if (t.is_fixed[static_cast<size_t>(id)]) continue;
      int a = find(t.component[static_cast<size_t>(id)]);
      int b = find(top_comp[i + 1]);
      if (a != b) comp_map[static_cast<size_t>(a)] = b;
    }
  }
  std::vector<int> rep(static_cast<size_t>(t.ncomp), -1);
  int ncomp = 0;
  for (int c = 0; c < t.ncomp; ++c) {
    int r = find(c);
    if (rep[static_cast<size_t>(r)] == -1) rep[static_cast<size_t>(r)] = ncomp++;
  }
  inv.components = ncomp;

  std::vector<std::vector<long long>> twice(static_cast<size_t>(ncomp),
                                            std::vector<long long>(static_cast<size_t>(d.g), 0));
  auto dir2 = [&](int seg, bool left) -> std::pair<int, int> {
    bool down = t.is_fixed[static_cast<size_t>(seg)] || t.flow[static_cast<size_t>(seg)] == 'd';
    int dx = left ? 1 : -1;
    if (!down) return {-dx, -1};
    return {dx, 1};
  };
  for (const TraceCrossing& c : t.crossings) {
    int fixed_id = -1, moving_id = -1;
    bool lf = t.is_fixed[static_cast<size_t>(c.left)];
    bool rf = t.is_fixed[static_cast<size_t>(c.right)];
    if (lf && !rf) {
      fixed_id = c.left;
      moving_id = c.right;
    } else if (rf && !lf) {
      fixed_id = c.right;
      moving_id = c.left;
    } else {
      continue;
    }
    auto [ox, oy] = dir2(c.sign > 0 ? c.left : c.right, c.sign > 0);
    auto [ux, uy] = dir2(c.sign > 0 ? c.right : c.left, c.sign <= 0);
    int det = ox * uy - oy * ux;
    int eps = det > 0 ? 1 : -1;
    int comp = rep[static_cast<size_t>(find(t.component[static_cast<size_t>(moving_id)]))];
    twice[static_cast<size_t>(comp)][static_cast<size_t>(handle[static_cast<size_t>(fixed_id)])] +=
        eps;
  }
  for (auto& v : twice) {
    for (long long& x : v) {
      if (x % 2 != 0) throw std::runtime_error("odd crossing count with a fixed strand");
      x /= 2;
    }
    inv.winding_vectors.push_back(v);
  }
  std::sort(inv.winding_vectors.begin(), inv.winding_vectors.end());
  return inv;
}

}  // namespace mixbraid
