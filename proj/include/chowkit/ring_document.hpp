#pragma once

// Plain-text ring documents:
//
//   ring <label>
//   dimension <d>
//   variables <name>:<weight> ...
//   relation <expr>            (repeated)
//   top <expr>
//   normalization <rational>
//   cofactor <expr>            (optional)
//   tangent (<rank>, [<c1>, <c2>, ...])   (optional)
//   end

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chowkit/chow_ring.hpp"

namespace chowkit {

inline std::string export_ring(const ChowRing& R) {
  std::ostringstream out;
  out << "ring " << R.label() << '\n';
  out << "dimension " << R.dimension() << '\n';
  out << "variables";
  for (const auto& v : R.signature()->variables()) out << ' ' << v.name << ':' << v.weight;
  out << '\n';
  for (const auto& r : R.relations()) out << "relation " << r.to_string() << '\n';
  out << "top " << R.top_class().to_string() << '\n';
  out << "normalization " << to_string(R.top_value()) << '\n';
  if (R.has_cofactor()) out << "cofactor " << R.cofactor().to_string() << '\n';
  if (R.tangent()) {
    out << "tangent (" << R.tangent()->rank << ", [";
    for (std::size_t k = 1; k < R.tangent()->c.size(); ++k)
      out << (k > 1 ? ", " : "") << R.tangent()->c[k].to_string();
    out << "])\n";
  }
  out << "end\n";
  return out.str();
}

namespace detail {

inline std::string trim_copy(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] inline void doc_error(int line, const std::string& what) {
  throw DomainError("ring document line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline ChowRingPtr import_ring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  ChowRing::Spec spec;
  std::vector<std::string> relations;
  std::string top, normalization, cofactor, tangent;
  bool have_dim = false, have_end = false;

  auto parse_expr = [&](const std::string& expr, int line) {
    try {
      return parse_poly(expr, spec.sig);
    } catch (const Error& e) {
      detail::doc_error(line, e.what());
    }
  };

  std::vector<std::pair<int, std::string>> deferred_rel;
  int top_line = 0, cof_line = 0, tan_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim_copy(raw);
    if (line.empty()) continue;
    if (have_end) detail::doc_error(line_no, "content after 'end'");
    const auto sp = line.find(' ');
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : detail::trim_copy(line.substr(sp + 1));
    if (key == "ring") {
      spec.label = rest;
    } else if (key == "dimension") {
      try {
        std::size_t used = 0;
        spec.dimension = std::stoi(rest, &used);
        if (used != rest.size() || spec.dimension < 0) throw std::invalid_argument("dimension");
      } catch (const std::exception&) {
        detail::doc_error(line_no, "bad dimension '" + rest + "'");
      }
      have_dim = true;
    } else if (key == "variables") {
      std::vector<Variable> vars;
      std::istringstream vs(rest);
      std::string tok;
      while (vs >> tok) {
        const auto colon = tok.rfind(':');
        if (colon == std::string::npos) detail::doc_error(line_no, "variable '" + tok + "' lacks a weight");
        int w = 0;
        try {
          std::size_t used = 0;
          w = std::stoi(tok.substr(colon + 1), &used);
          if (used != tok.size() - colon - 1) throw std::invalid_argument("weight");
        } catch (const std::exception&) {
          detail::doc_error(line_no, "bad weight in '" + tok + "'");
        }
        vars.push_back({tok.substr(0, colon), w});
      }
      try {
        spec.sig = make_signature(vars);
      } catch (const Error& e) {
        detail::doc_error(line_no, e.what());
      }
    } else if (key == "relation") {
      deferred_rel.emplace_back(line_no, rest);
    } else if (key == "top") {
      top = rest;
      top_line = line_no;
    } else if (key == "normalization") {
      try {
        spec.top_value = parse_rational(rest);
      } catch (const std::exception&) {
        detail::doc_error(line_no, "bad normalization '" + rest + "'");
      }
    } else if (key == "cofactor") {
      cofactor = rest;
      cof_line = line_no;
    } else if (key == "tangent") {
      tangent = rest;
      tan_line = line_no;
    } else if (key == "end") {
      have_end = true;
    } else {
      detail::doc_error(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_end) detail::doc_error(line_no, "missing 'end'");
  if (!spec.sig) detail::doc_error(line_no, "missing 'variables'");
  if (!have_dim) detail::doc_error(line_no, "missing 'dimension'");
  if (top.empty()) detail::doc_error(line_no, "missing 'top'");
  for (const auto& [ln, expr] : deferred_rel) spec.relations.push_back(parse_expr(expr, ln));
  spec.top = parse_expr(top, top_line);
  if (!cofactor.empty()) spec.cofactor = parse_expr(cofactor, cof_line);
  if (!tangent.empty()) {
    // (rank, [c1, c2, ...])
    if (tangent.front() != '(' || tangent.back() != ')') detail::doc_error(tan_line, "tangent must be (rank, [...])");
    const std::string body = tangent.substr(1, tangent.size() - 2);
    const auto comma = body.find(',');
    const auto open = body.find('[');
    const auto close = body.rfind(']');
    if (comma == std::string::npos || open == std::string::npos || close == std::string::npos || open > close)
      detail::doc_error(tan_line, "tangent must be (rank, [...])");
    ChernData cd;
    try {
      cd.rank = std::stoi(detail::trim_copy(body.substr(0, comma)));
    } catch (const std::exception&) {
      detail::doc_error(tan_line, "bad tangent rank");
    }
    cd.c.push_back(Poly::constant(spec.sig, 1));
    std::string list = body.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (!detail::trim_copy(list).empty()) {
      const auto next = list.find(',', start);
      cd.c.push_back(parse_expr(detail::trim_copy(list.substr(start, next - start)), tan_line));
      if (next == std::string::npos) break;
      start = next + 1;
    }
    spec.tangent = std::move(cd);
  }
  try {
    return ChowRing::create(std::move(spec));
  } catch (const Error& e) {
    detail::doc_error(line_no, e.what());
  }
}

}  // namespace chowkit
