#include "segre/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "segre/applications.hpp"
#include "segre/parser.hpp"

namespace segre {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  bool paranoid = false;
  bool json = false;
  int retries = 5;
  std::string file;
  std::string x, y, z, v, center, normal;
  int size = 0;
  int corank = 0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json class_json(const ChowClass& c) {
  json arr = json::array();
  for (int i = 0; i <= c.ambient(); ++i) arr.push_back({{"dim", i}, {"coeff", integer_json(c[i])}});
  return arr;
}

void add_trace(json& j, const SegreResult& trace) {
  json deltas = json::array();
  for (const Integer& d : trace.deltas.deltas) deltas.push_back(integer_json(d));
  j["deltas"] = deltas;
  j["prime"] = trace.prime;
  j["seeds"] = trace.seeds;
}

std::vector<Integer> parse_int_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string t = item.substr(b, e - b + 1);
    if (t.find_first_not_of("-0123456789") != std::string::npos || t.empty() || t == "-") {
      throw InputError("bad integer '" + t + "' in --normal");
    }
    out.emplace_back(t);
  }
  return out;
}

std::string polar_string(const PolarClasses& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.rho.size(); ++i) os << (i ? ", " : "") << p.rho[i];
  os << ")";
  return os.str();
}

class Session {
 public:
  explicit Session(const Options& o) : opts_(o) {
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot read '" + o.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    doc_ = parse_input(buf.str());
    std::uint64_t p = o.prime ? o.prime : doc_.prime.value_or(0);
    const FieldConfig fc = p ? FieldConfig::with_prime(p, o.seed) : FieldConfig::from_seed(o.seed);
    ring_ = doc_.ring(fc.field());
    config_.seed = o.seed;
    config_.paranoid = o.paranoid;
    config_.max_retries = o.retries;
  }

  ProjectiveScheme scheme(const std::string& name) const {
    if (doc_.find(name) == nullptr) throw InputError("no ideal named '" + name + "'");
    return doc_.scheme(name, ring_);
  }

  Polynomial hypersurface(const std::string& name) const {
    const ProjectiveScheme z = scheme(name);
    try {
      return hypersurface_equation(z);
    } catch (const std::invalid_argument&) {
      throw InputError("ideal '" + name + "' does not define a hypersurface");
    }
  }

  const SegreConfig& config() const { return config_; }
  const RingPtr& ring() const { return ring_; }

 private:
  Options opts_;
  InputDocument doc_;
  RingPtr ring_;
  SegreConfig config_;
};

void emit(std::ostream& out, const Options& o, const std::string& human, json j, const SegreResult& trace) {
  if (o.json) {
    add_trace(j, trace);
    out << j.dump() << "\n";
  } else {
    out << human << "\n";
  }
}

void dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  const Session s(o);
  SegreResult trace{ChowClass(s.ring()->nvars - 1), {}, s.ring()->field.modulus(), {}};
  if (cmd == "segre") {
    const ProjectiveScheme y = o.y.empty() ? ProjectiveScheme(s.ring(), {}) : s.scheme(o.y);
    trace = segre_class(s.scheme(o.x), y, s.config());
    emit(out, o, trace.segre_class.to_string(), {{"class", class_json(trace.segre_class)}}, trace);
  } else if (cmd == "csm" || cmd == "mather") {
    const Polynomial f = s.hypersurface(o.z);
    const ChowClass c = cmd == "csm" ? csm_hypersurface(f, s.config(), &trace) : chern_mather_hypersurface(f, s.config(), &trace);
    emit(out, o, c.to_string(), {{"class", class_json(c)}}, trace);
  } else if (cmd == "polar") {
    const PolarClasses p = polar_classes(s.scheme(o.z), s.config(), &trace);
    json arr = json::array();
    for (const Integer& r : p.rho) arr.push_back(integer_json(r));
    emit(out, o, polar_string(p), {{"polar", arr}}, trace);
  } else if (cmd == "eddegree") {
    const Integer ed = ed_degree(s.scheme(o.z), s.config(), &trace);
    emit(out, o, ed.str(), {{"value", integer_json(ed)}}, trace);
  } else if (cmd == "intersect") {
    const auto slash = o.normal.find('/');
    const std::vector<Integer> d_list = parse_int_list(o.normal.substr(0, slash));
    const std::vector<Integer> e_list = slash == std::string::npos ? std::vector<Integer>{} : parse_int_list(o.normal.substr(slash + 1));
    const ChowClass c = intersection_product(s.scheme(o.x), s.scheme(o.v), s.scheme(o.y), d_list, e_list, s.config(), &trace);
    emit(out, o, c.to_string(), {{"class", class_json(c)}}, trace);
  } else if (cmd == "tau") {
    if (s.ring()->nvars != o.size * o.size) {
      throw InputError("ring has " + std::to_string(s.ring()->nvars) + " variables, expected " + std::to_string(o.size * o.size));
    }
    const DegeneracyResult r = degeneracy_projection_degree(o.size, o.corank, s.scheme(o.center), s.config(), &trace);
    emit(out, o, "segre: " + r.segre.to_string() + "\ndegree: " + r.degree.str(),
         {{"class", class_json(r.segre)}, {"degree", integer_json(r.degree)}}, trace);
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Segre classes and characteristic classes of projective schemes"};
  app.name("segre");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "master random seed");
  app.add_option("--prime", o.prime, "prime modulus, 2^20 < p < 2^32");
  app.add_flag("--paranoid", o.paranoid, "saturate residuals by the full ideal of X");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--retries", o.retries, "attempts per residual count")->check(CLI::PositiveNumber);

  auto file_arg = [&o](CLI::App* sub) { sub->add_option("file", o.file, "input file")->required(); };
  CLI::App* segre = app.add_subcommand("segre", "pushforward of s(X, Y) to P^N");
  file_arg(segre);
  segre->add_option("--x", o.x)->required();
  segre->add_option("--y", o.y, "defaults to the whole P^N");
  for (const char* name : {"csm", "mather", "polar", "eddegree"}) {
    const std::string help = std::string(name) == "csm"      ? "Chern-Schwartz-MacPherson class of a hypersurface"
                             : std::string(name) == "mather" ? "Chern-Mather class of a hypersurface"
                             : std::string(name) == "polar"  ? "polar degrees"
                                                             : "Euclidean distance degree";
    CLI::App* sub = app.add_subcommand(name, help);
    file_arg(sub);
    sub->add_option("--z", o.z)->required();
  }
  CLI::App* inter = app.add_subcommand("intersect", "intersection product X ._Y V");
  file_arg(inter);
  inter->add_option("--x", o.x)->required();
  inter->add_option("--v", o.v)->required();
  inter->add_option("--y", o.y)->required();
  inter->add_option("--normal", o.normal, "degrees of X and Y, e.g. \"1,1,1,1/2\"")->required();
  CLI::App* tau = app.add_subcommand("tau", "degree of a projection of a degeneracy locus");
  file_arg(tau);
  tau->add_option("--size", o.size)->required()->check(CLI::PositiveNumber);
  tau->add_option("--corank", o.corank)->required()->check(CLI::PositiveNumber);
  tau->add_option("--center", o.center)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    dispatch(cmd, o, out);
    return kExitOk;
  } catch (const GenericityFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitGenericityFailure;
  } catch (const RandomizationInconsistency& e) {
    err << "error: " << e.what() << "\n";
    return kExitGenericityFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace segre
