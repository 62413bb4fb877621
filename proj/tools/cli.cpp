#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vconc/arf.hpp"
#include "vconc/diagrams.hpp"
#include "vconc/errors.hpp"
#include "vconc/families.hpp"
#include "vconc/invariants.hpp"

namespace vconc::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kFixtureScheme = "fixture://";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

RatMatrix parse_grid(const json& grid, const char* field) {
  if (!grid.is_array()) throw InvalidArgument(std::string(field) + ": expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : grid) {
    if (!row.is_array()) throw InvalidArgument(std::string(field) + ": expected an array of rows");
    auto& r = rows.emplace_back();
    for (const auto& e : row) {
      if (e.is_string()) r.push_back(parse_rational(e.get<std::string>()));
      else if (e.is_number_integer()) r.push_back(Rational(e.get<long>()));
      else throw InvalidArgument(std::string(field) + ": entries must be integers or \"p/q\" strings");
    }
    if (r.size() != rows.front().size()) throw ValidationError(Condition::kNotSquare, std::string(field) + " has ragged rows");
  }
  if (!rows.empty() && rows.front().size() != rows.size())
    throw ValidationError(Condition::kNotSquare, std::string(field) + " is not square");
  return RatMatrix(rows);
}

json grid_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Side parse_side(const std::string& s) { return s == "minus" ? Side::kMinus : Side::kPlus; }

json poly_json(const FactoredPoly& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"factor", p.to_string()}, {"exponent", e}});
  return {{"unit", to_string(f.unit)}, {"factors", factors}, {"text", f.to_string()}};
}

json order_json(const Order& o) { return o.infinite ? json("inf") : json(o.k); }

json report_json(const InvariantReport& r) {
  json factors = json::array();
  for (const auto& f : r.factors) {
    json mu = json::object();
    for (const auto& [p, v] : f.mu) mu[p.get_str()] = v;
    factors.push_back({{"factor", f.factor.to_string()},
                       {"exponent", f.exponent},
                       {"epsilon", f.epsilon},
                       {"discriminant", f.discriminant.to_string()},
                       {"sigma", f.sigma},
                       {"mu", mu},
                       {"needs_review", f.needs_review}});
  }
  json skipped = json::array();
  for (const auto& p : r.skipped) skipped.push_back(p.to_string());
  json profile = json::array();
  for (const auto& a : r.profile) profile.push_back({{"sample", a.sample.to_string()}, {"value", a.value}});
  json t1 = nullptr;
  if (r.t_minus_one_class) {
    json bounds = json::object();
    for (const auto& p : witt_primes(*r.t_minus_one_class)) bounds[p.get_str()] = boundary_p(*r.t_minus_one_class, p).to_string();
    t1 = {{"class", r.t_minus_one_class->to_string()},
          {"signature", boundary_infinity(*r.t_minus_one_class)},
          {"boundaries", bounds}};
  }
  return {{"descriptor", r.descriptor},
          {"input_dim", r.input_dim},
          {"representative_dim", r.representative_dim},
          {"delta", poly_json(r.delta)},
          {"factors", factors},
          {"skipped", skipped},
          {"t_minus_one_class", t1},
          {"profile", profile},
          {"metabolic", r.metabolic},
          {"order", order_json(r.order)}};
}

class Emitter {
 public:
  explicit Emitter(std::ostream& out) : out_(out) {}
  void line(const std::string& s) { summary_ += s + "\n"; }
  void finish(const json& j) { out_ << summary_ << "---\n" << j.dump(2) << "\n"; }

 private:
  std::ostream& out_;
  std::string summary_;
};

std::string descriptor(const CoupleFile& f, Side side) { return f.name + " (" + to_string(side) + ")"; }

void emit_couple(Emitter& em, const std::string& name, const SeifertCouple& c, const std::string& emit_path) {
  em.line("couple " + name + ": ring " + to_string(c.ring) + ", dim " + std::to_string(c.dim()) +
          (c.admissible ? ", admissible" : ", not admissible"));
  em.line("A+ = " + c.a_plus.to_string());
  em.line("A- = " + c.a_minus.to_string());
  json doc = couple_to_json(name, c);
  if (!emit_path.empty()) {
    write_file(emit_path, doc.dump(2) + "\n");
    em.line("written to " + emit_path);
  }
  doc["dim"] = c.dim();
  doc["admissible"] = c.admissible;
  em.finish(doc);
}

}  // namespace

CoupleFile parse_couple_json(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("couple document must be an object");
  for (const char* key : {"a_plus", "a_minus"})
    if (!doc.contains(key)) throw InvalidArgument(std::string("couple document lacks '") + key + "'");
  CoupleFile f;
  f.name = doc.value("name", std::string("unnamed"));
  std::string ring = doc.value("ring", std::string("Z"));
  if (ring != "Z" && ring != "Q") throw InvalidArgument("ring must be \"Z\" or \"Q\"");
  f.couple = validate_couple(parse_grid(doc["a_plus"], "a_plus"), parse_grid(doc["a_minus"], "a_minus"),
                             ring == "Z" ? Ring::kZ : Ring::kQ);
  return f;
}

json couple_to_json(const std::string& name, const SeifertCouple& c) {
  return {{"name", name}, {"ring", to_string(c.ring)}, {"a_plus", grid_json(c.a_plus)}, {"a_minus", grid_json(c.a_minus)}};
}

CoupleFile load_couple(const std::string& source) {
  if (source.starts_with(kFixtureScheme)) {
    std::string name = source.substr(kFixtureScheme.size());
    return {name, fixture(name)};
  }
  json doc;
  try {
    doc = json::parse(read_file(source));
  } catch (const json::parse_error& e) {
    throw InvalidArgument(source + ": " + e.what());
  }
  return parse_couple_json(doc);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic concordance invariants of virtual Seifert surfaces", "vconc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, file_b, side = "plus", alex_side = "plus", emit, values, name, comp_j, comp_k;
  long m = 3, n = 7;
  int shift = 0;
  auto side_opt = [&](CLI::App* sub) {
    sub->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a couple file");
  validate->add_option("file", file)->required();
  auto* invariants = app.add_subcommand("invariants", "Full invariant report");
  invariants->add_option("file", file)->required();
  side_opt(invariants);
  auto* order_cmd = app.add_subcommand("order", "Order in the concordance group");
  order_cmd->add_option("file", file)->required();
  side_opt(order_cmd);
  auto* metabolic = app.add_subcommand("metabolic", "Metabolicity test");
  metabolic->add_option("file", file)->required();
  side_opt(metabolic);
  auto* concordant_cmd = app.add_subcommand("concordant", "Algebraic concordance of two couples");
  concordant_cmd->add_option("file_a", file)->required();
  concordant_cmd->add_option("file_b", file_b)->required();
  side_opt(concordant_cmd);
  auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of the mod 2 form");
  arf_cmd->add_option("file", file)->required();
  side_opt(arf_cmd);
  auto* sigfn = app.add_subcommand("sigfn", "Signature function on the unit circle");
  sigfn->add_option("file", file)->required();
  side_opt(sigfn);
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("file", file)->required();
  alex->add_option("--side", alex_side, "plus, minus or mixed")->check(CLI::IsMember({"plus", "minus", "mixed"}));
  auto* witt = app.add_subcommand("witt", "Witt class of a diagonal form");
  witt->add_option("values", values, "comma separated entries")->required();
  auto* kmn = app.add_subcommand("kmn", "K(m,n) family member");
  kmn->add_option("--m", m)->required();
  kmn->add_option("--n", n)->required();
  kmn->add_option("--i", shift)->default_val(0);
  kmn->add_option("--emit", emit);
  auto* fixture_cmd = app.add_subcommand("fixture", "Embedded fixture");
  fixture_cmd->add_option("name", name)->required();
  fixture_cmd->add_option("--emit", emit);
  auto* vlk_cmd = app.add_subcommand("vlk", "Virtual linking number");
  vlk_cmd->add_option("diagram", file)->required();
  vlk_cmd->add_option("j", comp_j)->required();
  vlk_cmd->add_option("k", comp_k)->required();
  auto* assemble = app.add_subcommand("assemble", "Seifert couple from a curve system");
  assemble->add_option("diagram", file)->required();
  assemble->add_option("--emit", emit);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Emitter em(out);
    if (validate->parsed()) {
      auto f = load_couple(file);
      em.line("valid: " + f.name + ", ring " + to_string(f.couple.ring) + ", dim " + std::to_string(f.couple.dim()) +
              (f.couple.admissible ? ", admissible" : ", not admissible"));
      em.finish({{"name", f.name}, {"valid", true}, {"ring", to_string(f.couple.ring)},
                 {"dim", f.couple.dim()}, {"admissible", f.couple.admissible}});
    } else if (invariants->parsed()) {
      auto f = load_couple(file);
      auto r = invariant_report(project(f.couple, parse_side(side)), descriptor(f, parse_side(side)));
      em.line(r.descriptor + ": dim " + std::to_string(r.input_dim) + ", representative dim " + std::to_string(r.representative_dim));
      em.line("Delta = " + r.delta.to_string());
      if (r.t_minus_one_class) em.line("t-1 class " + r.t_minus_one_class->to_string());
      for (const auto& fi : r.factors) {
        std::string mu;
        for (const auto& [p, v] : fi.mu) mu += " " + p.get_str() + ":" + (v > 0 ? "+" : "-");
        em.line("factor " + fi.factor.to_string() + " ^" + std::to_string(fi.exponent) + " eps " +
                std::to_string(fi.epsilon) + " disc " + fi.discriminant.to_string() + " sigma " +
                std::to_string(fi.sigma) + " mu" + mu + (fi.needs_review ? " (needs review)" : ""));
      }
      em.line(std::string("metabolic: ") + (r.metabolic ? "yes" : "no") + ", order " + r.order.to_string());
      em.finish(report_json(r));
    } else if (order_cmd->parsed()) {
      auto f = load_couple(file);
      auto a = project(f.couple, parse_side(side));
      auto o = order(a);
      em.line(descriptor(f, parse_side(side)) + ": order " + o.to_string());
      json j = {{"descriptor", descriptor(f, parse_side(side))}, {"order", order_json(o)}};
      if (auto q = order_via_quadratic_criterion(a)) j["quadratic_criterion"] = order_json(*q);
      else j["quadratic_criterion"] = "inapplicable";
      em.finish(j);
    } else if (metabolic->parsed()) {
      auto f = load_couple(file);
      bool met = is_metabolic(project(f.couple, parse_side(side)));
      em.line(descriptor(f, parse_side(side)) + (met ? ": metabolic" : ": not metabolic"));
      em.finish({{"descriptor", descriptor(f, parse_side(side))}, {"metabolic", met}});
    } else if (concordant_cmd->parsed()) {
      auto fa = load_couple(file);
      auto fb = load_couple(file_b);
      bool c = concordant(project(fa.couple, parse_side(side)), project(fb.couple, parse_side(side)));
      em.line(descriptor(fa, parse_side(side)) + (c ? " ~ " : " !~ ") + descriptor(fb, parse_side(side)));
      em.finish({{"a", descriptor(fa, parse_side(side))}, {"b", descriptor(fb, parse_side(side))}, {"concordant", c}});
    } else if (arf_cmd->parsed()) {
      auto f = load_couple(file);
      auto q = quad_form(f.couple, parse_side(side));
      bool regular = is_regular(q);
      json j = {{"descriptor", descriptor(f, parse_side(side))},
                {"polarization", grid_json(q.polarization_matrix())},
                {"regular", regular}};
      em.line("polarization " + q.polarization_matrix().to_string());
      if (!regular) throw InvalidArgument("arf: form is not regular");
      int a = arf(q);
      j["arf"] = a;
      em.line("Arf " + std::to_string(a));
      em.finish(j);
    } else if (sigfn->parsed()) {
      auto f = load_couple(file);
      auto profile = signature_profile(project(f.couple, parse_side(side)));
      json arr = json::array();
      for (const auto& v : profile) {
        em.line("sigma" + v.sample.to_string() + " = " + std::to_string(v.value));
        arr.push_back({{"sample", v.sample.to_string()}, {"value", v.value}});
      }
      em.finish({{"descriptor", descriptor(f, parse_side(side))}, {"profile", arr}});
    } else if (alex->parsed()) {
      auto f = load_couple(file);
      AlexanderSide s = alex_side == "mixed" ? AlexanderSide::kMixed
                        : alex_side == "minus" ? AlexanderSide::kMinus
                                               : AlexanderSide::kPlus;
      Poly p = alexander(f.couple, s);
      em.line(f.name + " (" + alex_side + "): " + p.to_string());
      json j = {{"name", f.name}, {"side", alex_side}, {"polynomial", p.to_string()}};
      if (!p.is_zero()) j["factored"] = poly_json(factor_q(p));
      em.finish(j);
    } else if (witt->parsed()) {
      std::vector<Rational> diag;
      std::stringstream ss(values);
      for (std::string tok; std::getline(ss, tok, ',');) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        diag.push_back(parse_rational(tok));
      }
      auto w = witt_class(diag);
      auto ord = witt_order(w);
      json bounds = json::object();
      em.line("class " + w.to_string() + ", signature " + std::to_string(boundary_infinity(w)) +
              ", order " + (ord ? std::to_string(*ord) : "inf"));
      for (const auto& p : witt_primes(w)) {
        auto b = boundary_p(w, p);
        bounds[p.get_str()] = {{"e", b.e}, {"d", b.d}, {"trivial", b.is_trivial()}};
        em.line("boundary at " + p.get_str() + ": " + b.to_string());
      }
      em.finish({{"class", w.to_string()}, {"signature", boundary_infinity(w)}, {"boundaries", bounds},
                 {"order", ord ? json(*ord) : json("inf")}, {"trivial", is_trivial_wittq(w)}});
    } else if (kmn->parsed()) {
      std::string nm = "kmn(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(shift) + ")";
      emit_couple(em, nm, kmn_couple(Integer(m), Integer(n), shift), emit);
    } else if (fixture_cmd->parsed()) {
      emit_couple(em, name, fixture(name), emit);
    } else if (vlk_cmd->parsed()) {
      auto d = parse_gauss(read_file(file));
      int v = vlk(d, comp_j, comp_k);
      em.line("vlk(" + comp_j + ", " + comp_k + ") = " + std::to_string(v));
      em.finish({{"j", comp_j}, {"k", comp_k}, {"vlk", v}});
    } else if (assemble->parsed()) {
      auto cs = parse_curve_system(read_file(file));
      emit_couple(em, file, assemble_couple(cs), emit);
    }
    return kExitOk;
  } catch (const ComputationLimit& e) {
    err << "computation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace vconc::cli
