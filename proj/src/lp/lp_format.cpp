#include "qmstp/lp/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qmstp/error.hpp"

namespace qmstp::lp {

namespace {

std::string number(double v) {
  if (v == kInf) return "+inf";
  if (v == -kInf) return "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

bool valid_name(const std::string& s) {
  if (s.empty() || s.size() > 255) return false;
  const unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) || c0 == 'e' || c0 == 'E') return false;
  const std::string lower = [&] {
    std::string t = s;
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return t;
  }();
  if (lower == "inf" || lower == "infinity" || lower == "free" || lower == "st" || lower == "end" ||
      lower == "bounds" || lower == "min" || lower == "max")
    return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; });
}

template <class Items, class Get>
std::vector<std::string> names_or_generated(const Items& items, Get get, char prefix) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  bool ok = true;
  for (const auto& it : items) {
    const std::string& nm = get(it);
    if (!valid_name(nm) || !seen.insert(nm).second) {
      ok = false;
      break;
    }
    out.push_back(nm);
  }
  if (ok) return out;
  out.clear();
  for (std::size_t i = 0; i < items.size(); ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void append_terms(std::string& out, const std::vector<std::pair<double, std::string>>& terms) {
  int on_line = 0;
  bool first = true;
  for (const auto& [coef, name] : terms) {
    if (on_line == 8) {
      out += "\n   ";
      on_line = 0;
    }
    const bool neg = std::signbit(coef);
    if (first) out += neg ? " - " : " ";
    else out += neg ? " - " : " + ";
    out += number(std::abs(coef));
    out += ' ';
    out += name;
    first = false;
    ++on_line;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace

std::vector<std::string> variable_names(const LinearProgram& lp) {
  return names_or_generated(lp.variables(), [](const Variable& v) -> const std::string& { return v.name; }, 'x');
}

std::vector<std::string> row_names(const LinearProgram& lp) {
  return names_or_generated(lp.rows(), [](const Row& r) -> const std::string& { return r.name; }, 'c');
}

std::string format_model(const LinearProgram& lp) {
  const auto vn = variable_names(lp);
  const auto rn = row_names(lp);
  std::string out = "\\ qmstp LP model\n";
  out += lp.sense() == ObjectiveSense::Maximize ? "Maximize\n" : "Minimize\n";
  out += " obj:";
  // Every variable appears in the objective so that the reader recovers the
  // variable order.
  std::vector<std::pair<double, std::string>> terms;
  for (int j = 0; j < lp.num_variables(); ++j) terms.emplace_back(lp.variable(j).cost, vn[j]);
  append_terms(out, terms);
  if (lp.objective_offset() != 0.0) {
    out += std::signbit(lp.objective_offset()) ? " - " : " + ";
    out += number(std::abs(lp.objective_offset()));
  }
  out += "\nSubject To\n";
  for (int i = 0; i < lp.num_rows(); ++i) {
    const Row& r = lp.row(i);
    out += ' ';
    out += rn[i];
    out += ':';
    terms.clear();
    for (const auto& t : r.terms) terms.emplace_back(t.coef, vn[t.var]);
    if (terms.empty()) out += " 0 " + vn.front();
    append_terms(out, terms);
    out += r.sense == RowSense::LessEqual ? " <= " : r.sense == RowSense::GreaterEqual ? " >= " : " = ";
    out += number(r.rhs);
    out += '\n';
  }
  if (lp.num_variables() > 0) {
    out += "Bounds\n";
    for (int j = 0; j < lp.num_variables(); ++j) {
      const Variable& v = lp.variable(j);
      out += ' ';
      if (v.lower == -kInf && v.upper == kInf) out += vn[j] + " free";
      else if (v.lower == v.upper) out += vn[j] + " = " + number(v.lower);
      else if (v.upper == kInf) out += vn[j] + " >= " + number(v.lower);
      else out += number(v.lower) + " <= " + vn[j] + " <= " + number(v.upper);
      out += '\n';
    }
  }
  out += "End\n";
  return out;
}

void write_model(const LinearProgram& lp, const std::filesystem::path& path) { write_file(path, format_model(lp)); }

namespace {

enum class Tok { Name, Number, Op, Colon, Plus, Minus };

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  int line = 0;
};

enum class Section { None, Objective, Constraints, Bounds, End };

std::string lower(std::string_view s) {
  std::string t(s);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return t;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("LP model line " + std::to_string(line) + ": " + msg);
}

bool header(const std::string& t, Section& s, ObjectiveSense& sense) {
  if (t == "minimize" || t == "minimise" || t == "minimum" || t == "min") {
    s = Section::Objective;
    sense = ObjectiveSense::Minimize;
  } else if (t == "maximize" || t == "maximise" || t == "maximum" || t == "max") {
    s = Section::Objective;
    sense = ObjectiveSense::Maximize;
  } else if (t == "subject to" || t == "such that" || t == "st" || t == "s.t.") {
    s = Section::Constraints;
  } else if (t == "bounds" || t == "bound") {
    s = Section::Bounds;
  } else if (t == "end") {
    s = Section::End;
  } else if (t == "general" || t == "generals" || t == "gen" || t == "binary" || t == "binaries" || t == "bin") {
    throw ParseError("integer sections are not supported");
  } else {
    return false;
  }
  return true;
}

void tokenize_line(std::string_view s, int line, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", 0, line});
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", 0, line});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-", 0, line});
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '=' || s[j] == '<' || s[j] == '>')) ++j;
      std::string op(s.substr(i, j - i));
      if (op == "=<" || op == "<") op = "<=";
      else if (op == "=>" || op == ">") op = ">=";
      if (op != "<=" && op != ">=" && op != "=") fail(line, "bad operator '" + op + "'");
      out.push_back({Tok::Op, op, 0, line});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      const auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      if (ec != std::errc()) fail(line, "bad number");
      const std::size_t j = static_cast<std::size_t>(p - s.data());
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), v, line});
      i = j;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ':' && s[j] != '+' &&
             s[j] != '-' && s[j] != '<' && s[j] != '>' && s[j] != '=')
        ++j;
      const std::string name(s.substr(i, j - i));
      const std::string l = lower(name);
      if (l == "inf" || l == "infinity") out.push_back({Tok::Number, name, kInf, line});
      else out.push_back({Tok::Name, name, 0, line});
      i = j;
    }
  }
}

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) { split(text); }

  LinearProgram parse() {
    LinearProgram lp(sense_);
    std::unordered_map<std::string, int> var_index;
    auto var = [&](const std::string& name) {
      auto it = var_index.find(name);
      if (it != var_index.end()) return it->second;
      const int j = lp.add_variable(name, 0.0, kInf, 0.0);
      var_index.emplace(name, j);
      return j;
    };

    // Objective.
    {
      const auto& t = sections_[Section::Objective];
      std::size_t p = 0;
      if (t.size() >= 2 && t[0].kind == Tok::Name && t[1].kind == Tok::Colon) p = 2;
      double offset = 0.0;
      std::vector<std::pair<int, double>> terms;
      parse_expression(t, p, t.size(), var, terms, &offset);
      for (const auto& [j, c] : terms) lp.set_cost(j, lp.variable(j).cost + c);
      lp.set_objective_offset(offset);
    }
    // Constraints.
    {
      const auto& t = sections_[Section::Constraints];
      std::size_t p = 0;
      int count = 0;
      while (p < t.size()) {
        std::string name = "c" + std::to_string(count);
        if (p + 1 < t.size() && t[p].kind == Tok::Name && t[p + 1].kind == Tok::Colon) {
          name = t[p].text;
          p += 2;
        }
        std::size_t q = p;
        while (q < t.size() && t[q].kind != Tok::Op) ++q;
        if (q == t.size()) fail(t[p < t.size() ? p : t.size() - 1].line, "constraint without a relation");
        std::vector<std::pair<int, double>> terms;
        parse_expression(t, p, q, var, terms, nullptr);
        const std::string op = t[q].text;
        p = q + 1;
        const double rhs = signed_number(t, p);
        std::vector<Term> row;
        for (const auto& [j, c] : terms) row.push_back({j, c});
        lp.add_row(name, std::move(row),
                   op == "<=" ? RowSense::LessEqual : op == ">=" ? RowSense::GreaterEqual : RowSense::Equal, rhs);
        ++count;
      }
    }
    // Bounds.
    {
      const auto& t = sections_[Section::Bounds];
      std::size_t p = 0;
      while (p < t.size()) {
        if (t[p].kind == Tok::Name) {
          const int j = var(t[p].text);
          ++p;
          if (p < t.size() && t[p].kind == Tok::Name && lower(t[p].text) == "free") {
            lp.set_bounds(j, -kInf, kInf);
            ++p;
            continue;
          }
          if (p >= t.size() || t[p].kind != Tok::Op) fail(t[p - 1].line, "expected a relation in bounds");
          const std::string op = t[p++].text;
          const double v = signed_number(t, p);
          const Variable& cur = lp.variable(j);
          if (op == "<=") lp.set_bounds(j, cur.lower, v);
          else if (op == ">=") lp.set_bounds(j, v, cur.upper);
          else lp.set_bounds(j, v, v);
        } else {
          const double lo = signed_number(t, p);
          if (p >= t.size() || t[p].kind != Tok::Op) fail(t[p - 1].line, "expected a relation in bounds");
          const std::string op1 = t[p++].text;
          if (p >= t.size() || t[p].kind != Tok::Name) fail(t[p - 1].line, "expected a variable in bounds");
          const int j = var(t[p++].text);
          const Variable cur = lp.variable(j);
          if (op1 == "=") {
            lp.set_bounds(j, lo, lo);
            continue;
          }
          if (op1 == ">=") {
            lp.set_bounds(j, cur.lower, lo);
            continue;
          }
          double up = cur.upper;
          if (p < t.size() && t[p].kind == Tok::Op) {
            if (t[p].text != "<=") fail(t[p].line, "expected <= in a double bound");
            ++p;
            up = signed_number(t, p);
          }
          lp.set_bounds(j, lo, up);
        }
      }
    }
    return lp;
  }

 private:
  void split(std::string_view text) {
    Section cur = Section::None;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      ++line_no;
      start = end + 1;
      if (const auto c = line.find('\\'); c != std::string_view::npos) line = line.substr(0, c);
      std::string trimmed = lower(line);
      trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
      trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
      if (trimmed.empty()) continue;
      Section next = cur;
      if (header(trimmed, next, sense_)) {
        if (next == Section::Objective && seen_objective_) fail(line_no, "second objective section");
        if (next == Section::Objective) seen_objective_ = true;
        cur = next;
        continue;
      }
      if (cur == Section::None) fail(line_no, "text before the objective section");
      if (cur == Section::End) fail(line_no, "text after End");
      tokenize_line(line, line_no, sections_[cur]);
    }
    if (!seen_objective_) throw ParseError("LP model has no objective section");
  }

  template <class Var>
  void parse_expression(const std::vector<Token>& t, std::size_t p, std::size_t end, Var&& var,
                        std::vector<std::pair<int, double>>& terms, double* offset) {
    while (p < end) {
      double sign = 1.0;
      while (p < end && (t[p].kind == Tok::Plus || t[p].kind == Tok::Minus)) {
        if (t[p].kind == Tok::Minus) sign = -sign;
        ++p;
      }
      if (p >= end) fail(t[end - 1].line, "dangling sign");
      double coef = 1.0;
      bool have_coef = false;
      if (t[p].kind == Tok::Number) {
        coef = t[p].value;
        have_coef = true;
        ++p;
      }
      if (p < end && t[p].kind == Tok::Name) {
        terms.emplace_back(var(t[p].text), sign * coef);
        ++p;
      } else if (have_coef && offset) {
        *offset += sign * coef;
      } else {
        fail(t[std::min(p, end - 1)].line, "expected a term");
      }
    }
  }

  static double signed_number(const std::vector<Token>& t, std::size_t& p) {
    double sign = 1.0;
    while (p < t.size() && (t[p].kind == Tok::Plus || t[p].kind == Tok::Minus)) {
      if (t[p].kind == Tok::Minus) sign = -sign;
      ++p;
    }
    if (p >= t.size() || t[p].kind != Tok::Number) fail(t.empty() ? 0 : t[std::min(p, t.size() - 1)].line, "expected a number");
    return sign * t[p++].value;
  }

  ObjectiveSense sense_ = ObjectiveSense::Minimize;
  bool seen_objective_ = false;
  std::map<Section, std::vector<Token>> sections_;
};

}  // namespace

LinearProgram parse_model(std::string_view text) { return ModelParser(text).parse(); }

LinearProgram read_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

std::string format_solution(const LinearProgram& lp, const LpSolution& sol) {
  const auto vn = variable_names(lp);
  std::string out = "STATUS " + std::string(status_name(sol.status)) + "\n";
  out += "OBJECTIVE " + number(sol.objective) + "\n";
  for (int j = 0; j < lp.num_variables() && j < static_cast<int>(sol.primal.size()); ++j)
    out += vn[j] + " " + number(sol.primal[j]) + "\n";
  return out;
}

void write_solution(const LinearProgram& lp, const LpSolution& sol, const std::filesystem::path& path) {
  write_file(path, format_solution(lp, sol));
}

LpSolution parse_solution(const LinearProgram& lp, std::string_view text) {
  const auto vn = variable_names(lp);
  std::unordered_map<std::string, int> index;
  for (int j = 0; j < static_cast<int>(vn.size()); ++j) index.emplace(vn[j], j);
  LpSolution sol;
  sol.primal.assign(static_cast<std::size_t>(lp.num_variables()), 0.0);
  std::vector<char> seen(sol.primal.size(), 0);
  bool have_status = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key, value, extra;
    if (!(ls >> key)) continue;
    if (!(ls >> value) || (ls >> extra))
      throw ParseError("solution line " + std::to_string(line_no) + ": expected '<name> <value>'");
    const std::string k = lower(key);
    if (k == "status") {
      const std::string v = lower(value);
      if (v == "optimal") sol.status = Status::Optimal;
      else if (v == "infeasible") sol.status = Status::Infeasible;
      else if (v == "unbounded") sol.status = Status::Unbounded;
      else if (v == "iteration_limit") sol.status = Status::IterationLimit;
      else if (v == "time_limit") sol.status = Status::TimeLimit;
      else throw ParseError("solution line " + std::to_string(line_no) + ": unknown status '" + value + "'");
      have_status = true;
      continue;
    }
    if (k == "objective") continue;  // recomputed from the primal values
    const auto it = index.find(key);
    if (it == index.end())
      throw ParseError("solution line " + std::to_string(line_no) + ": unknown variable '" + key + "'");
    double v = 0.0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size())
      throw ParseError("solution line " + std::to_string(line_no) + ": bad value '" + value + "'");
    sol.primal[it->second] = v;
    seen[it->second] = 1;
  }
  if (!have_status) throw ParseError("solution has no STATUS line");
  if (sol.optimal() && std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ParseError("optimal solution does not list every variable");
  sol.objective = lp.objective_value(sol.primal);
  sol.primal_residual = lp.max_violation(sol.primal);
  return sol;
}

LpSolution read_solution(const LinearProgram& lp, const std::filesystem::path& path) {
  return parse_solution(lp, read_file(path));
}

}  // namespace qmstp::lp
