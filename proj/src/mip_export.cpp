#include "biclust/mip_export.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace biclust {

namespace {

std::string y_name(std::size_t i) { return "y" + std::to_string(i); }
std::string z_name(std::size_t j, int k) { return "z" + std::to_string(j) + "_" + std::to_string(k); }

struct ZVar {
  std::size_t col;
  int k;
};

class Builder {
 public:
  Builder(const BinaryMatrix& matrix, IntersectMode mode, const ExportOptions& opts)
      : a_(matrix), mode_(mode), opts_(opts), r_(matrix.rows()), n_(matrix.cols()) {
    if (opts.seed_row) matrix.check_row(*opts.seed_row);
    f_.resize(n_ + 1);
    for (std::size_t j = 1; j <= n_; ++j) f_[j] = matrix.column_ones(j);
    for (std::size_t i = 1; i <= r_; ++i) {
      if (!seeded() || i != *opts.seed_row) ys_.push_back(i);
    }
    for (std::size_t j = 1; j <= n_; ++j) {
      for (int k = 0; k <= 1; ++k) {
        if (!uses(k)) continue;
        if (seeded() && a_.at(*opts.seed_row, j) != (k == 1)) continue;
        zs_.push_back({j, k});
      }
    }
    m_.seed_row = opts.seed_row;
  }

  bool seeded() const { return opts_.seed_row.has_value(); }
  bool uses(int k) const {
    return mode_ == IntersectMode::ZeroOne || (k == 0) == (mode_ == IntersectMode::Zero);
  }

  // Rows holding value k in column j.
  std::size_t holders(std::size_t j, int k) const { return k == 1 ? f_[j] : r_ - f_[j]; }

  void declare() {
    for (std::size_t i : ys_) m_.variables.push_back({y_name(i), true, std::nullopt});
    for (const auto& z : zs_) {
      ModelVariable v{z_name(z.col, z.k), true, std::nullopt};
      if (opts_.preprocess) {
        if (z.k == 0 && f_[z.col] == 0) v.fixed = 0;
        if (z.k == 1 && f_[z.col] == r_) v.fixed = 0;
      }
      m_.variables.push_back(std::move(v));
    }
  }

  void fix_rows(std::size_t l1) {
    if (!opts_.preprocess || !seeded()) return;
    const std::size_t h = *opts_.seed_row;
    auto xh = a_.row_values(h);
    for (auto& var : m_.variables) {
      if (var.name[0] != 'y') continue;
      std::size_t i = std::stoul(var.name.substr(1));
      auto xi = a_.row_values(i);
      std::size_t agree = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (xh[j] != xi[j]) continue;
        if (mode_ == IntersectMode::ZeroOne || (xh[j] == 1) == (mode_ == IntersectMode::One)) ++agree;
      }
      if (agree < l1) var.fixed = 0;
    }
  }

  LinearConstraint y_sum(std::string name, Sense sense, long long rhs) const {
    LinearConstraint c{std::move(name), {}, sense, rhs};
    for (std::size_t i : ys_) c.terms.push_back({1, y_name(i)});
    return c;
  }

  void link() {
    for (const auto& z : zs_) {
      LinearConstraint lo{"lo_" + z_name(z.col, z.k), {}, Sense::GreaterEqual, 0};
      LinearConstraint hi{"hi_" + z_name(z.col, z.k), {}, Sense::LessEqual, 0};
      for (std::size_t i : ys_) {
        if (a_.at(i, z.col) != (z.k == 0)) continue;
        lo.terms.push_back({1, y_name(i)});
        hi.terms.push_back({1, y_name(i)});
      }
      long long cap = opts_.strengthen ? static_cast<long long>(holders(z.col, 1 - z.k))
                                       : static_cast<long long>(r_);
      lo.terms.push_back({-1, z_name(z.col, z.k)});
      hi.terms.push_back({-cap, z_name(z.col, z.k)});
      m_.constraints.push_back(std::move(lo));
      m_.constraints.push_back(std::move(hi));
    }
  }

  // j in N_k(S) caps |S| by the number of rows holding k there.
  void valid_inequalities() {
    if (!opts_.preprocess) return;
    const long long r = static_cast<long long>(r_);
    const long long offset = seeded() ? 1 : 0;
    if (mode_ == IntersectMode::ZeroOne && !seeded()) {
      for (std::size_t j = 1; j <= n_; ++j) {
        long long cap = static_cast<long long>(std::max(f_[j], r_ - f_[j]));
        if (cap == r) continue;
        auto c = y_sum("vi_z" + std::to_string(j), Sense::LessEqual, 2 * cap - r);
        c.terms.push_back({-(r - cap), z_name(j, 0)});
        c.terms.push_back({-(r - cap), z_name(j, 1)});
        m_.constraints.push_back(std::move(c));
      }
      return;
    }
    for (const auto& z : zs_) {
      long long cap = static_cast<long long>(holders(z.col, z.k));
      if (cap == r) continue;
      auto c = y_sum("vi_" + z_name(z.col, z.k), Sense::LessEqual, cap - offset);
      c.terms.push_back({-(r - cap), z_name(z.col, z.k)});
      m_.constraints.push_back(std::move(c));
    }
  }

  void header(const std::string& kind, const std::string& bound_text) {
    std::string tag = kind + "_v" + std::string(to_string(mode_));
    if (seeded()) tag += "_h" + std::to_string(*opts_.seed_row);
    m_.name = tag;
    m_.comments.push_back(bound_text);
    m_.comments.push_back("v = " + std::string(to_string(mode_)) + ", r = " + std::to_string(r_) +
                          ", n = " + std::to_string(n_));
    if (seeded()) {
      m_.comments.push_back("row " + std::to_string(*opts_.seed_row) +
                            " is fixed into S; y and z range over the remaining rows and its agreeing columns");
    }
    if (opts_.strengthen) m_.comments.push_back("upper linking rows use column counts instead of r");
    if (opts_.preprocess) m_.comments.push_back("forced variables fixed in Bounds; vi_* rows bound |S| per column");
    if (opts_.strengthen && opts_.preprocess) {
      m_.comments.push_back("fixings are derived first, strengthened coefficients afterwards");
    }
  }

  void objective_size() {
    m_.objective = {true, {}, 0};
    for (std::size_t i : ys_) m_.objective.terms.push_back({1, y_name(i)});
  }

  void objective_cols() {
    m_.objective = {true, {}, static_cast<long long>(zs_.size())};
    for (const auto& z : zs_) m_.objective.terms.push_back({-1, z_name(z.col, z.k)});
  }

  LinearConstraint z_sum(std::string name, long long rhs) const {
    LinearConstraint c{std::move(name), {}, Sense::LessEqual, rhs};
    for (const auto& z : zs_) c.terms.push_back({1, z_name(z.col, z.k)});
    return c;
  }

  std::size_t z_count() const { return zs_.size(); }
  IPModel& model() { return m_; }

 private:
  const BinaryMatrix& a_;
  IntersectMode mode_;
  ExportOptions opts_;
  std::size_t r_;
  std::size_t n_;
  std::vector<std::size_t> f_;
  std::vector<std::size_t> ys_;
  std::vector<ZVar> zs_;
  IPModel m_;
};

}  // namespace

IPModel build_ip1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l1,
                  const ExportOptions& opts) {
  Builder b(matrix, mode, opts);
  b.header("ip1", "max |S| subject to |N_v(S)| >= " + std::to_string(l1));
  b.declare();
  b.fix_rows(l1);
  b.objective_size();
  // sum_j (1 - z_j) >= L written as sum_j z_j <= (#z) - L
  b.model().constraints.push_back(
      b.z_sum("cl1", static_cast<long long>(b.z_count()) - static_cast<long long>(l1)));
  b.link();
  b.valid_inequalities();
  return std::move(b.model());
}

IPModel build_ip2(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l2,
                  const ExportOptions& opts) {
  if (l2 < 1 || l2 > matrix.rows()) {
    throw PreconditionError("set-size bound must lie in [1, r], got " + std::to_string(l2));
  }
  Builder b(matrix, mode, opts);
  b.header("ip2", "max |N_v(S)| subject to |S| >= " + std::to_string(l2));
  b.declare();
  b.objective_cols();
  long long rhs = static_cast<long long>(l2) - (opts.seed_row ? 1 : 0);
  b.model().constraints.push_back(b.y_sum("cl2", Sense::GreaterEqual, rhs));
  b.link();
  b.valid_inequalities();
  return std::move(b.model());
}

std::pair<IPModel, IPModel> build_biobjective(const BinaryMatrix& matrix, IntersectMode mode,
                                              const ExportOptions& opts) {
  if (opts.seed_row) throw PreconditionError("the bi-objective model has no seeded form");
  auto make = [&](bool first) {
    Builder b(matrix, mode, opts);
    b.header(first ? "bi1" : "bi2", first ? "objective 1 of 2: max |S| (pair with objective 2: max |N_v(S)|)"
                                          : "objective 2 of 2: max |N_v(S)| (pair with objective 1: max |S|)");
    b.declare();
    if (first) {
      b.objective_size();
    } else {
      b.objective_cols();
    }
    b.link();
    b.valid_inequalities();
    return std::move(b.model());
  };
  return {make(true), make(false)};
}

// ---------------------------------------------------------------------------
// LP text
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_terms(std::ostream& out, const std::vector<LinearTerm>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) out << "\n  ";
    const auto& t = terms[k];
    out << (t.coef < 0 ? " - " : " + ") << (t.coef < 0 ? -t.coef : t.coef) << ' ' << t.var;
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual: return "<=";
    case Sense::GreaterEqual: return ">=";
    case Sense::Equal: return "=";
  }
  return "?";
}

}  // namespace

void write_model(const IPModel& model, std::ostream& out) {
  out << "\\ Problem name: " << model.name << '\n';
  if (model.seed_row) out << "\\ Seed row: " << *model.seed_row << '\n';
  for (const auto& c : model.comments) out << "\\ " << c << '\n';
  out << (model.objective.maximize ? "Maximize" : "Minimize") << '\n';
  out << " obj:";
  write_terms(out, model.objective.terms);
  if (model.objective.constant != 0 || model.objective.terms.empty()) {
    long long c = model.objective.constant;
    out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
  }
  out << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out << ' ' << c.name << ':';
    write_terms(out, c.terms);
    out << ' ' << sense_text(c.sense) << ' ' << c.rhs << '\n';
  }
  bool any_bounds = std::any_of(model.variables.begin(), model.variables.end(),
                                [](const ModelVariable& v) { return v.fixed || !v.binary; });
  if (any_bounds) {
    out << "Bounds\n";
    for (const auto& v : model.variables) {
      if (v.fixed) {
        out << ' ' << v.name << " = " << *v.fixed << '\n';
      } else if (!v.binary) {
        out << ' ' << v.name << " >= 0\n";
      }
    }
  }
  out << "Binaries\n";
  std::size_t k = 0;
  for (const auto& v : model.variables) {
    if (!v.binary) continue;
    out << (k % 10 == 0 ? (k ? "\n " : " ") : " ") << v.name;
    ++k;
  }
  if (k) out << '\n';
  out << "End\n";
}

std::string model_to_string(const IPModel& model) {
  std::ostringstream os;
  write_model(model, os);
  return os.str();
}

namespace {

long long parse_int(const std::string& tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, found '" + tok + "'");
  }
  return value;
}

struct Token {
  std::string text;
  std::size_t line;
};

// Parses "[+|-] coef var" sequences until a sense token or the end.
std::vector<LinearTerm> parse_terms(const std::vector<Token>& toks, std::size_t& pos,
                                    long long* constant) {
  std::vector<LinearTerm> terms;
  while (pos < toks.size()) {
    const auto& t = toks[pos].text;
    if (t != "+" && t != "-") break;
    if (pos + 1 >= toks.size()) throw ParseError(toks[pos].line, "dangling sign");
    long long coef = parse_int(toks[pos + 1].text, toks[pos + 1].line);
    if (t == "-") coef = -coef;
    bool has_var = pos + 2 < toks.size() && toks[pos + 2].text != "+" && toks[pos + 2].text != "-" &&
                   toks[pos + 2].text != "<=" && toks[pos + 2].text != ">=" && toks[pos + 2].text != "=" &&
                   toks[pos + 2].text.back() != ':';
    if (has_var) {
      terms.push_back({coef, toks[pos + 2].text});
      pos += 3;
    } else {
      if (!constant) throw ParseError(toks[pos].line, "constant term outside the objective");
      *constant += coef;
      pos += 2;
    }
  }
  return terms;
}

}  // namespace

IPModel read_model(std::istream& in) {
  IPModel m;
  enum class Section { None, Objective, Constraints, Bounds, Binaries, Done } sec = Section::None;
  std::vector<Token> obj;
  std::vector<Token> cons;
  std::map<std::string, int> fixed;
  std::vector<std::string> continuous;
  std::vector<std::string> binaries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("\\ ", 0) == 0 || line == "\\") {
      std::string text = line.size() > 2 ? line.substr(2) : "";
      if (text.rfind("Problem name: ", 0) == 0) {
        m.name = text.substr(14);
      } else if (text.rfind("Seed row: ", 0) == 0) {
        m.seed_row = static_cast<std::size_t>(parse_int(text.substr(10), line_no));
      } else {
        m.comments.push_back(text);
      }
      continue;
    }
    if (line == "Maximize" || line == "Minimize") {
      m.objective.maximize = line == "Maximize";
      sec = Section::Objective;
      continue;
    }
    if (line == "Subject To") { sec = Section::Constraints; continue; }
    if (line == "Bounds") { sec = Section::Bounds; continue; }
    if (line == "Binaries") { sec = Section::Binaries; continue; }
    if (line == "End") { sec = Section::Done; continue; }
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    switch (sec) {
      case Section::Objective:
        for (auto& w : words) obj.push_back({w, line_no});
        break;
      case Section::Constraints:
        for (auto& w : words) cons.push_back({w, line_no});
        break;
      case Section::Bounds:
        if (words.size() != 3) throw ParseError(line_no, "unsupported bound line");
        if (words[1] == "=") {
          fixed[words[0]] = static_cast<int>(parse_int(words[2], line_no));
        } else if (words[1] == ">=" && words[2] == "0") {
          continuous.push_back(words[0]);
        } else {
          throw ParseError(line_no, "unsupported bound line");
        }
        break;
      case Section::Binaries:
        for (auto& w : words) binaries.push_back(w);
        break;
      default:
        throw ParseError(line_no, "content outside any section");
    }
  }
  if (sec != Section::Done) throw ParseError(line_no, "missing End");

  std::size_t pos = 0;
  if (obj.empty() || obj[0].text != "obj:") throw ParseError(obj.empty() ? 0 : obj[0].line, "objective must start with 'obj:'");
  pos = 1;
  m.objective.terms = parse_terms(obj, pos, &m.objective.constant);
  if (pos != obj.size()) throw ParseError(obj[pos].line, "unexpected token '" + obj[pos].text + "' in objective");

  pos = 0;
  while (pos < cons.size()) {
    const auto& head = cons[pos];
    if (head.text.size() < 2 || head.text.back() != ':') {
      throw ParseError(head.line, "constraint must start with 'name:'");
    }
    LinearConstraint c;
    c.name = head.text.substr(0, head.text.size() - 1);
    ++pos;
    c.terms = parse_terms(cons, pos, nullptr);
    if (pos + 1 >= cons.size()) throw ParseError(head.line, "constraint '" + c.name + "' lacks sense and rhs");
    const auto& s = cons[pos].text;
    if (s == "<=") c.sense = Sense::LessEqual;
    else if (s == ">=") c.sense = Sense::GreaterEqual;
    else if (s == "=") c.sense = Sense::Equal;
    else throw ParseError(cons[pos].line, "expected a sense, found '" + s + "'");
    c.rhs = parse_int(cons[pos + 1].text, cons[pos + 1].line);
    pos += 2;
    m.constraints.push_back(std::move(c));
  }

  for (const auto& name : binaries) {
    ModelVariable v{name, true, std::nullopt};
    if (auto it = fixed.find(name); it != fixed.end()) v.fixed = it->second;
    m.variables.push_back(std::move(v));
  }
  for (const auto& name : continuous) m.variables.push_back({name, false, std::nullopt});
  return m;
}

// ---------------------------------------------------------------------------
// Assignment check
// ---------------------------------------------------------------------------

bool verify_assignment(const IPModel& model, const RowSet& rows, const BinaryMatrix& matrix,
                       IntersectMode mode) {
  for (std::size_t i : rows) matrix.check_row(i);
  RowSet s(rows);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (model.seed_row && !std::binary_search(s.begin(), s.end(), *model.seed_row)) return false;

  const std::size_t n = matrix.cols();
  std::vector<char> in_n0(n + 1, 1);
  std::vector<char> in_n1(n + 1, 1);
  for (std::size_t i : s) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (matrix.at(i, j)) in_n0[j] = 0;
      else in_n1[j] = 0;
    }
  }

  std::map<std::string, long long> value;
  for (const auto& v : model.variables) {
    long long x = 0;
    if (v.name.size() > 1 && v.name[0] == 'y') {
      std::size_t i = std::stoul(v.name.substr(1));
      matrix.check_row(i);
      x = std::binary_search(s.begin(), s.end(), i) ? 1 : 0;
    } else if (v.name.size() > 3 && v.name[0] == 'z') {
      auto us = v.name.find('_');
      if (us == std::string::npos) throw PreconditionError("unrecognized variable '" + v.name + "'");
      std::size_t j = std::stoul(v.name.substr(1, us - 1));
      int k = std::stoi(v.name.substr(us + 1));
      matrix.check_col(j);
      if ((k == 0 && mode == IntersectMode::One) || (k == 1 && mode == IntersectMode::Zero)) {
        throw PreconditionError("variable '" + v.name + "' does not belong to a v = " +
                                std::string(to_string(mode)) + " model");
      }
      x = (k == 0 ? in_n0[j] : in_n1[j]) ? 0 : 1;
    } else {
      throw PreconditionError("unrecognized variable '" + v.name + "'");
    }
    if (v.fixed && *v.fixed != x) return false;
    value[v.name] = x;
  }
  for (const auto& c : model.constraints) {
    long long lhs = 0;
    for (const auto& t : c.terms) {
      auto it = value.find(t.var);
      if (it == value.end()) throw PreconditionError("constraint uses undeclared variable '" + t.var + "'");
      lhs += t.coef * it->second;
    }
    bool ok = c.sense == Sense::LessEqual ? lhs <= c.rhs : c.sense == Sense::GreaterEqual ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) return false;
  }
  return true;
}

}  // namespace biclust
