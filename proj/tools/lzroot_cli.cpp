// Command-line front end: square-free decomposition, LMCD, isolation,
// refinement, the full pipeline, and the Chebyshev benchmark.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "lzroot/bench.hpp"
#include "lzroot/decompose.hpp"
#include "lzroot/errors.hpp"
#include "lzroot/isolate.hpp"
#include "lzroot/parse.hpp"
#include "lzroot/pipeline.hpp"
#include "lzroot/refine.hpp"

namespace {

using namespace lzroot;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

ClosedInterval parse_interval(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be '<lo>,<hi>'", 0);
  try {
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

json interval_json(const ClosedInterval& i) {
  return {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}};
}

const std::map<std::string, Method> kMethods{{"lz1", Method::lz1}, {"lz2", Method::lz2}};
const std::map<std::string, Mode> kModes{{"exact", Mode::exact}, {"interval", Mode::interval}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified real-root isolation and LZ1/LZ2 refinement"};
  app.require_subcommand(1);

  std::string poly_text, interval_text, format = "text", methods_text = "lz1,lz2";
  Method method = Method::lz2;
  Mode mode = Mode::exact;
  int L = 10, n = 0, prenarrow = 5;
  bool with_mci = false, with_trace = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_refiner = [&](CLI::App* cmd) {
    cmd->add_option("--method", method, "Refiner")->transform(CLI::CheckedTransformer(kMethods));
    cmd->add_option("--mode", mode, "Arithmetic")->transform(CLI::CheckedTransformer(kModes));
    cmd->add_option("-L", L, "Target relative width 10^-L")->check(CLI::PositiveNumber);
  };

  auto* sqfree = app.add_subcommand("sqfree", "Square-free decomposition");
  sqfree->add_option("--poly", poly_text, "Polynomial in x")->required();
  add_format(sqfree);

  auto* lmcd_cmd = app.add_subcommand("lmcd", "Local monotonic convex decomposition");
  lmcd_cmd->add_option("--poly", poly_text, "Square-free polynomial in x")->required();
  add_format(lmcd_cmd);

  auto* isolate = app.add_subcommand("isolate", "Real-root isolation");
  isolate->add_option("--poly", poly_text, "Square-free polynomial in x")->required();
  isolate->add_flag("--mci", with_mci, "Monotonic convex isolation");
  add_format(isolate);

  auto* refine_cmd = app.add_subcommand("refine", "Refine one isolating interval");
  refine_cmd->add_option("--poly", poly_text, "Polynomial in x")->required();
  refine_cmd->add_option("--interval", interval_text, "<lo>,<hi> as rationals or decimals")->required();
  add_refiner(refine_cmd);
  refine_cmd->add_flag("--trace", with_trace, "Print every enclosure");
  add_format(refine_cmd);

  auto* pipeline = app.add_subcommand("pipeline", "Isolate and refine every real root");
  pipeline->add_option("--poly", poly_text, "Polynomial in x")->required();
  add_refiner(pipeline);
  pipeline->add_option("--prenarrow", prenarrow, "Bisect to width 10^-k before refining (0: off)")
      ->check(CLI::NonNegativeNumber);
  add_format(pipeline);

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* cheb = bench->add_subcommand("chebyshev", "Refine a root of T_n");
  cheb->add_option("--n", n, "Even degree >= 2")->required();
  cheb->add_option("-L", L, "Target relative width 10^-L")->check(CLI::PositiveNumber);
  cheb->add_option("--methods", methods_text, "Comma-separated refiners");
  cheb->add_option("--mode", mode, "Arithmetic")->transform(CLI::CheckedTransformer(kModes));
  add_format(cheb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  const bool as_json = format == "json";

  try {
    if (sqfree->parsed()) {
      Poly f = parse_poly(poly_text);
      auto d = square_free_decomposition(f);
      if (as_json) {
        json factors = json::array();
        for (const auto& sf : d.factors) {
          factors.push_back({{"factor", to_string(sf.factor)}, {"multiplicity", sf.multiplicity}});
        }
        std::cout << json{{"constant", to_string(d.constant)}, {"factors", factors}}.dump(2) << "\n";
      } else {
        std::cout << "constant: " << to_string(d.constant) << "\n";
        for (const auto& sf : d.factors) {
          std::cout << "(" << to_string(sf.factor) << ")^" << sf.multiplicity << "\n";
        }
      }
    } else if (lmcd_cmd->parsed()) {
      auto d = lmcd(parse_poly(poly_text));
      if (as_json) {
        json factors = json::array();
        for (const auto& g : d.factors) factors.push_back(to_string(g));
        std::cout << json{{"constant", to_string(d.constant)}, {"factors", factors}}.dump(2) << "\n";
      } else {
        std::cout << "constant: " << to_string(d.constant) << "\n";
        for (const auto& g : d.factors) std::cout << to_string(g) << "\n";
      }
    } else if (isolate->parsed()) {
      Poly f = parse_poly(poly_text);
      Isolation iso = with_mci ? mci(f) : isolate_roots(f);
      if (as_json) {
        json out = json::array();
        for (const auto& i : iso.intervals) out.push_back(interval_json(i));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& i : iso.intervals) std::cout << to_string(i) << "\n";
      }
    } else if (refine_cmd->parsed()) {
      Poly f = parse_poly(poly_text);
      ClosedInterval start = parse_interval(interval_text);
      RefineConfig config;
      config.L = L;
      config.mode = mode;
      config.method = method;
      RefineResult r = refine(f, start, config);
      std::string decimal = shared_decimal_prefix(r.enclosure.lo, r.enclosure.hi);
      if (as_json) {
        json out{{"enclosure", interval_json(r.enclosure)},
                 {"decimal", decimal},
                 {"correct_digits", significant_digits(decimal)},
                 {"iterations", r.iterations},
                 {"precision_digits", r.precision_digits}};
        if (with_trace) {
          json trace = json::array();
          for (const auto& e : r.trace) {
            auto enc = e.enclosure();
            trace.push_back({{"iteration", e.iteration},
                             {"full", e.full},
                             {"lo", to_string(enc.lo)},
                             {"hi", to_string(enc.hi)},
                             {"correct_digits", shared_digits(enc.lo, enc.hi)}});
          }
          out["trace"] = trace;
        }
        std::cout << out.dump(2) << "\n";
      } else {
        if (with_trace) {
          for (const auto& e : r.trace) {
            auto enc = e.enclosure();
            std::cout << "iteration " << e.iteration << (e.full ? "   " : " * ") << "digits "
                      << shared_digits(enc.lo, enc.hi) << "  "
                      << shared_decimal_prefix(enc.lo, enc.hi) << "\n";
          }
        }
        std::cout << "enclosure: " << to_string(r.enclosure) << "\n"
                  << "decimal: " << decimal << "\n"
                  << "iterations: " << r.iterations << "\n";
      }
    } else if (pipeline->parsed()) {
      RefineConfig config;
      config.L = L;
      config.mode = mode;
      config.method = method;
      config.prenarrow_digits = prenarrow;
      RefineReport report = refine_pipeline(parse_poly(poly_text), config);
      std::cout << (as_json ? report_json(report) + "\n" : report_text(report));
    } else if (cheb->parsed()) {
      std::vector<Method> methods;
      std::string item;
      for (std::size_t start = 0; start <= methods_text.size();) {
        auto comma = methods_text.find(',', start);
        item = methods_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto it = kMethods.find(item);
        if (it == kMethods.end()) throw ParseError("unknown method '" + item + "'", start);
        methods.push_back(it->second);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      Mode bench_mode = cheb->count("--mode") ? mode : Mode::interval;
      auto rows = bench_chebyshev(n, L, methods, bench_mode);
      std::cout << (as_json ? bench_json(rows) + "\n" : bench_table(rows));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
