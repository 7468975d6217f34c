#pragma once

// The bpfact command-line front end. Kept in a header so the test suite can
// drive run() with in-memory streams.
//
// Exit codes: 0 ok, 1 verification mismatch or non-convergence, 2 usage.

#include <cstddef>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpfact/bpfact.hpp"
#include "bpfact/codec.hpp"

namespace bpfact::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "A:B" (inclusive); "A" alone means A:A.
inline IndexRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument(text);
      }
      return {v, v};
    }
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    const auto first = std::stoull(a, &used);
    if (used != a.size()) {
      throw std::invalid_argument(text);
    }
    const auto last = std::stoull(b, &used);
    if (used != b.size()) {
      throw std::invalid_argument(text);
    }
    if (first > last) {
      throw std::invalid_argument(text);
    }
    return {first, last};
  } catch (const std::exception&) {
    throw UsageError("invalid range '" + text + "', expected A:B with A <= B");
  }
}

namespace detail {

inline std::string join_blocks(const BPFactorization& f, const TextCodec& codec,
                               const std::string& sep) {
  std::string s;
  for (const auto& b : blocks(f)) {
    if (!s.empty()) {
      s += sep;
    }
    s += codec.decode(b);
  }
  return s;
}

inline json factorization_json(const BPFactorization& f, const TextCodec& codec) {
  json out = json::object();
  json list = json::array();
  for (const auto& b : blocks(f)) {
    list.push_back(codec.decode(b));
  }
  out["blocks"] = std::move(list);
  out["width"] = f.width;
  return out;
}

inline std::vector<std::string> read_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open input file '" + path + "'");
  }
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      words.push_back(line);
    }
  }
  return words;
}

struct FactorizeOptions {
  std::string mode = "largest";
  std::string codec = "chars";
  std::string format = "text";
  std::string separator = "ascii";
  std::string word;
  std::string input;
};

inline int factorize(const FactorizeOptions& opt, std::ostream& out) {
  std::vector<std::string> words;
  if (!opt.input.empty()) {
    words = read_words(opt.input);
  } else if (!opt.word.empty()) {
    words.push_back(opt.word);
  } else {
    throw UsageError("factorize needs a WORD or --input FILE");
  }
  const std::string sep = opt.separator == "mid-dot" ? "·" : ".";

  for (const auto& text : words) {
    TextCodec codec;
    codec.mode = opt.codec == "digits" ? TextCodec::Mode::digits : TextCodec::Mode::chars;
    const Word w = parse_word(text, codec);

    std::vector<BPFactorization> results;
    if (opt.mode == "largest") {
      results.push_back(largest_bpf(w));
    } else if (opt.mode == "smallest") {
      results.push_back(smallest_bpf(w));
    } else {
      results = all_bpfs(w);
    }

    if (opt.format == "json") {
      json record = json::object();
      record["word"] = text;
      record["kind"] = opt.mode;
      if (opt.mode == "all") {
        json list = json::array();
        for (const auto& f : results) {
          list.push_back(factorization_json(f, codec));
        }
        record["factorizations"] = std::move(list);
      } else {
        const json f = factorization_json(results.front(), codec);
        record["blocks"] = f["blocks"];
        record["width"] = f["width"];
      }
      out << record.dump() << '\n';
    } else {
      for (const auto& f : results) {
        out << join_blocks(f, codec, sep) << "  width=" << f.width << '\n';
      }
    }
  }
  return ok;
}

struct TableOptions {
  std::string kind;
  unsigned k = 2;
  std::string rows;
  std::string cols;
  std::string format = "tsv";
};

inline int table(const TableOptions& opt, std::ostream& out) {
  const IndexRange rows = parse_range(opt.rows);
  const bool unbordered = opt.kind == "unbordered";
  // Default columns cover every possibly non-zero width / border length.
  const std::size_t widest = opt.kind == "ub" ? rows.last / 2 : rows.last;
  const IndexRange cols =
      opt.cols.empty() ? IndexRange{1, std::max<std::size_t>(widest, 1)} : parse_range(opt.cols);

  CountTable t;
  if (unbordered) {
    t = unbordered_table(opt.k, rows);
  } else if (opt.kind == "ib") {
    t = ib_table(opt.k, rows, cols);
  } else {
    t = unique_border_table(opt.k, rows, cols);
  }

  std::vector<std::string> header{"n"};
  if (unbordered) {
    header.push_back("u");
  } else {
    for (std::size_t c = cols.first; c <= cols.last; ++c) {
      header.push_back("t=" + std::to_string(c));
    }
  }

  auto row_values = [&](std::size_t n) {
    std::vector<std::string> values;
    if (unbordered) {
      values.push_back(t.at(n).str());
    } else {
      for (std::size_t c = cols.first; c <= cols.last; ++c) {
        values.push_back(t.at(n, c).str());
      }
    }
    return values;
  };

  if (opt.format == "json") {
    json doc = json::object();
    doc["table"] = opt.kind;
    doc["k"] = opt.k;
    doc["rows"] = {rows.first, rows.last};
    if (!unbordered) {
      doc["cols"] = {cols.first, cols.last};
    }
    json data = json::array();
    for (std::size_t n = rows.first; n <= rows.last; ++n) {
      data.push_back({{"n", n}, {"values", row_values(n)}});
    }
    doc["data"] = std::move(data);
    out << doc.dump() << '\n';
    return ok;
  }

  const char sep = opt.format == "csv" ? ',' : '\t';
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) {
        out << sep;
      }
      out << cells[i];
    }
    out << '\n';
  };
  emit(header);
  for (std::size_t n = rows.first; n <= rows.last; ++n) {
    std::vector<std::string> cells{std::to_string(n)};
    for (auto& v : row_values(n)) {
      cells.push_back(std::move(v));
    }
    emit(cells);
  }
  return ok;
}

struct LimitOptions {
  std::string kind;
  unsigned k = 2;
  double tol = 1e-4;
  std::size_t n_cap = 400;
  unsigned digits = 4;
};

inline int limit(const LimitOptions& opt, std::ostream& out) {
  const LimitEstimate est = opt.kind == "expected"
                                ? estimate_E_limit(opt.k, opt.tol, opt.n_cap, opt.digits)
                                : estimate_P_limit(opt.k, opt.tol, opt.n_cap, opt.digits);
  json doc = json::object();
  doc["limit"] = opt.kind;
  doc["k"] = opt.k;
  doc["tol"] = opt.tol;
  doc["n_cap"] = opt.n_cap;
  doc["value"] = est.value;
  doc["n_used"] = est.n_used;
  doc["last_delta"] = est.last_delta;
  doc["converged"] = est.converged;
  out << doc.dump() << '\n';
  return est.converged ? ok : failed;
}

struct MaxWidthOptions {
  unsigned k = 2;
  std::size_t n = 0;
  bool witness = false;
  std::string format = "text";
};

inline int maxwidth(const MaxWidthOptions& opt, std::ostream& out) {
  const std::size_t f = max_smallest_width(opt.k, opt.n);
  Word w;
  std::size_t achieved = 0;
  if (opt.witness) {
    w = max_width_witness(opt.k, opt.n);
    achieved = w.empty() ? 0 : smallest_width(w);
  }
  if (opt.format == "json") {
    json doc = json::object();
    doc["k"] = opt.k;
    doc["n"] = opt.n;
    doc["f"] = f;
    if (opt.witness) {
      doc["witness"] = to_digits(w);
      doc["witness_width"] = achieved;
    }
    out << doc.dump() << '\n';
  } else {
    out << "k=" << opt.k << " n=" << opt.n << " f=" << f << '\n';
    if (opt.witness) {
      out << "witness=" << to_digits(w) << " width=" << achieved << '\n';
    }
  }
  return ok;
}

struct VerifyOptions {
  std::string subject;
  unsigned k = 2;
  std::size_t n_max = 0;
  unsigned jobs = 1;
  std::uint64_t budget = oracle::Config{}.budget;
  bool amended = false;
};

inline json report_json(const oracle::VerificationReport& r) {
  json doc = json::object();
  doc["subject"] = oracle::to_string(r.subject);
  doc["k"] = r.k;
  doc["n_max"] = r.n_max;
  doc["checks"] = r.checks;
  doc["passed"] = r.passed();
  json list = json::array();
  for (const auto& m : r.mismatches) {
    list.push_back({{"parameters", m.parameters}, {"expected", m.expected}, {"actual", m.actual}});
  }
  doc["mismatch_count"] = std::max<std::uint64_t>(r.failures, r.mismatches.size());
  doc["mismatches"] = std::move(list);
  doc["elapsed_s"] = r.elapsed.count();
  return doc;
}

inline int verify(const VerifyOptions& opt, std::ostream& out) {
  oracle::Config cfg;
  cfg.jobs = opt.jobs;
  cfg.budget = opt.budget;
  oracle::VerificationReport report;
  if (opt.subject == "ib") {
    report = oracle::verify_ib(opt.k, opt.n_max, cfg);
  } else if (opt.subject == "ub") {
    report = oracle::verify_unique_border(opt.k, opt.n_max, cfg);
  } else if (opt.subject == "maxwidth") {
    report = oracle::verify_maxwidth(opt.k, opt.n_max, cfg);
  } else if (opt.subject == "theorem5") {
    report = oracle::theorem5_sweep(opt.k, opt.n_max, cfg, opt.amended);
  } else if (opt.subject == "bpf-width") {
    report = oracle::verify_bpf_width(opt.k, opt.n_max, cfg);
  } else {
    report = oracle::verify_borders(opt.k, opt.n_max, cfg);
  }
  out << report_json(report).dump() << '\n';
  return report.passed() ? ok : failed;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block palindrome factorizations: factorize words, count, estimate limits, verify"};
  app.name("bpfact");
  app.require_subcommand(1);

  detail::FactorizeOptions fact;
  auto* fact_cmd = app.add_subcommand("factorize", "Largest, smallest or all BP-factorizations");
  fact_cmd->add_option("--mode", fact.mode)->check(CLI::IsMember({"largest", "smallest", "all"}));
  fact_cmd->add_option("--codec", fact.codec)->check(CLI::IsMember({"chars", "digits"}));
  fact_cmd->add_option("--format", fact.format)->check(CLI::IsMember({"text", "json"}));
  fact_cmd->add_option("--separator", fact.separator)->check(CLI::IsMember({"ascii", "mid-dot"}));
  auto* word_opt = fact_cmd->add_option("word", fact.word, "Word to factorize");
  auto* input_opt = fact_cmd->add_option("--input", fact.input, "File with one word per line");
  word_opt->excludes(input_opt);

  detail::TableOptions tab;
  auto* tab_cmd = app.add_subcommand("table", "Exact count tables");
  tab_cmd->add_option("kind", tab.kind)->required()->check(CLI::IsMember({"ib", "ub", "unbordered"}));
  tab_cmd->add_option("--k", tab.k)->required()->check(CLI::Range(2u, 255u));
  tab_cmd->add_option("--rows", tab.rows)->required();
  tab_cmd->add_option("--cols", tab.cols);
  tab_cmd->add_option("--format", tab.format)->check(CLI::IsMember({"tsv", "csv", "json"}));

  detail::LimitOptions lim;
  auto* lim_cmd = app.add_subcommand("limit", "Estimate lim E_{n,k} or lim P_{n,k}");
  lim_cmd->add_option("kind", lim.kind)->required()->check(CLI::IsMember({"expected", "unique-border"}));
  lim_cmd->add_option("--k", lim.k)->required()->check(CLI::PositiveNumber);
  lim_cmd->add_option("--tol", lim.tol)->required()->check(CLI::PositiveNumber);
  lim_cmd->add_option("--n-cap", lim.n_cap)->required();
  lim_cmd->add_option("--digits", lim.digits)->check(CLI::Range(0u, 60u));

  detail::MaxWidthOptions mw;
  auto* mw_cmd = app.add_subcommand("maxwidth", "Maximum smallest-BPF width f_k(n)");
  mw_cmd->add_option("--k", mw.k)->required()->check(CLI::PositiveNumber);
  mw_cmd->add_option("--n", mw.n)->required();
  mw_cmd->add_flag("--witness", mw.witness, "Also print a word attaining the maximum");
  mw_cmd->add_option("--format", mw.format)->check(CLI::IsMember({"text", "json"}));

  detail::VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check recurrences and characterizations against brute force");
  ver_cmd->add_option("subject", ver.subject)
      ->required()
      ->check(CLI::IsMember({"ib", "ub", "maxwidth", "theorem5", "borders", "bpf-width"}));
  ver_cmd->add_option("--k", ver.k)->required()->check(CLI::Range(2u, 255u));
  ver_cmd->add_option("--n-max", ver.n_max)->required();
  ver_cmd->add_option("--jobs", ver.jobs)->check(CLI::Range(1u, 256u));
  ver_cmd->add_option("--budget", ver.budget, "Maximum words per exhaustive sweep");
  ver_cmd->add_flag("--amended", ver.amended, "theorem5: use the amended characterization");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "bpfact: " << e.what() << '\n';
    return usage;
  }

  try {
    if (fact_cmd->parsed()) {
      return detail::factorize(fact, out);
    }
    if (tab_cmd->parsed()) {
      return detail::table(tab, out);
    }
    if (lim_cmd->parsed()) {
      return detail::limit(lim, out);
    }
    if (mw_cmd->parsed()) {
      return detail::maxwidth(mw, out);
    }
    return detail::verify(ver, out);
  } catch (const oracle::BudgetExceeded& e) {
    err << "bpfact: " << e.what() << " (raise --budget to allow it)\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "bpfact: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    err << "bpfact: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace bpfact::cli
