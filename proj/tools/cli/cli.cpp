#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zkfabric/circuit.hpp"
#include "zkfabric/codec.hpp"
#include "zkfabric/errors.hpp"
#include "zkfabric/garble.hpp"
#include "zkfabric/repository.hpp"
#include "zkfabric/simulation.hpp"
#include "zkfabric/syntax.hpp"

namespace zkfabric::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StatementArgs {
  std::string text;
  std::string file;
  std::size_t digest_bits = 256;

  void attach(CLI::App* cmd) {
    cmd->add_option("--statement", text, "Composite statement with [and]/[or]/[xor]/[if]/[not] markers");
    cmd->add_option("--statement-file", file, "Read the statement from a file");
    cmd->add_option("--digest-bits", digest_bits, "Clause digest width")->check(CLI::IsMember({128, 256}));
  }

  std::string resolve() const {
    if (!text.empty() && !file.empty()) throw UsageError("give either --statement or --statement-file");
    if (!file.empty()) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw UsageError("cannot read " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      auto s = ss.str();
      while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
      return s;
    }
    if (text.empty()) throw UsageError("a statement is required");
    return text;
  }
};

std::vector<bool> parse_bits(const std::string& s, const char* what) {
  std::vector<bool> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw UsageError(std::string(what) + " must be a string of 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

std::optional<std::size_t> fault_index(const std::string& spec, const std::string& name) {
  if (spec.rfind(name, 0) != 0) return std::nullopt;
  auto rest = spec.substr(name.size());
  if (rest.empty()) return 0;
  if (rest[0] != '=') return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(rest.substr(1)));
  } catch (const std::exception&) {
    throw UsageError("bad fault index in " + spec);
  }
}

void apply_fault(protocol::FaultInjection& f, const std::string& spec) {
  if (spec == "flip-aggregator") {
    f.flip_aggregator_reveal = true;
  } else if (auto i = fault_index(spec, "corrupt-table")) {
    f.corrupt_partition_table = *i;
  } else if (auto i = fault_index(spec, "forge-output")) {
    f.forge_partition_output = *i;
  } else if (auto i = fault_index(spec, "flip-reveal")) {
    f.flip_mask_reveal = *i;
  } else if (auto i = fault_index(spec, "cheat-ot")) {
    f.cheat_ot_choose = *i;
  } else {
    throw UsageError("unknown fault " + spec);
  }
}

int exit_for(protocol::Verdict v) { return v == protocol::Verdict::Accept ? kExitAccept : kExitReject; }

std::string describe(const protocol::Outcome& o) {
  std::string s(protocol::to_string(o.verdict));
  if (o.verdict == protocol::Verdict::Abort) s += " (" + o.reason + ": " + o.detail + ")";
  return s;
}

int cmd_parse(const StatementArgs& sa, std::ostream& out) {
  auto r = syntax::syn_gen(sa.resolve(), {sa.digest_bits});
  out << "clauses: " << r.statement.clauses.size() << '\n';
  for (const auto& c : r.statement.clauses) {
    out << "  v" << c.var_index << "  " << to_hex(c.digest) << "  " << c.text << '\n';
  }
  out << "operators:";
  for (const auto& op : r.statement.operators) out << ' ' << syntax::to_string(op.kind);
  out << '\n';
  out << "expression: " << r.expression.to_string() << '\n';
  out << "truth table: " << r.table.to_string() << '\n';
  return kExitAccept;
}

int cmd_minimize(const StatementArgs& sa, std::ostream& out) {
  auto r = syntax::syn_gen(sa.resolve(), {sa.digest_bits});
  const auto n = r.table.n_vars;
  auto before = circuit::compile_expression(r.expression, n);
  auto after = circuit::compile_expression(r.minimized);
  out << "truth table: " << r.table.to_string() << '\n';
  out << "sop: " << r.minimized.to_string() << '\n';
  out << "literals: " << r.minimized.to_literal_string() << '\n';
  out << "implicants: " << r.minimized.implicants.size() << '\n';
  out << "gates before: " << before.gate_count() << " (depth " << before.depth() << ")\n";
  out << "gates after: " << after.gate_count() << " (depth " << after.depth() << ")\n";
  return kExitAccept;
}

int cmd_garble(const StatementArgs& sa, const std::string& witness, std::uint64_t seed, const std::string& format,
               std::ostream& out) {
  auto r = syntax::syn_gen(sa.resolve(), {sa.digest_bits});
  auto c = circuit::compile_expression(r.minimized);
  HashDrbg rng("garble", seed);
  auto g = garble::garble_circuit(c, rng);
  if (format == "record-lines") {
    out << codec::encode_garbled(g.circuit).dump() << '\n';
  } else {
    out << c.to_netlist();
    const auto gates = c.gates();
    for (std::size_t k = 0; k < gates.size(); ++k) {
      out << "table g" << gates[k].out << ':';
      for (const auto& row : g.circuit.tables[k].rows) out << ' ' << to_hex(row);
      out << '\n';
    }
    auto commits = garble::commitments_by_color(g.output_labels());
    out << "output commitments: " << to_hex(commits[0]) << ' ' << to_hex(commits[1]) << '\n';
  }
  if (!witness.empty()) {
    auto bits = parse_bits(witness, "--witness");
    auto label = garble::evaluate_garbled(g.circuit, garble::encode_input(g.encode, bits));
    out << "output: " << (garble::decode_output(g.decode, label) ? 1 : 0) << '\n';
  }
  return kExitAccept;
}

struct SimulateArgs {
  std::string witness;
  int claim = 1;
  std::size_t verifiers = 0;
  std::string board;
  std::uint64_t seed = 0;
  std::string session;
  std::string group = "modp2048";
  std::string masks;
  std::optional<int> aggregator_bit;
  std::vector<std::string> faults;
  bool pad = false;
  bool concurrent = false;
};

int cmd_simulate(const StatementArgs& sa, const SimulateArgs& a, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  if (a.witness.empty()) throw UsageError("--witness is required");
  protocol::SessionParams params;
  params.session_id = a.session.empty() ? "session-" + std::to_string(a.seed) : a.session;
  params.digest_bits = sa.digest_bits;
  params.n_verifiers = a.verifiers;
  params.claim = a.claim == 1;
  params.pad_odd_inputs = a.pad;
  params.group = protocol::group_from_string(a.group);
  params.seed = a.seed;
  if (!a.masks.empty()) params.masks = parse_bits(a.masks, "--masks");
  if (a.aggregator_bit) params.aggregator_bit = *a.aggregator_bit == 1;
  for (const auto& f : a.faults) apply_fault(params.faults, f);

  std::optional<repository::Board> file_board;
  repository::Board memory_board;
  repository::Board* board = &memory_board;
  if (!a.board.empty()) board = &file_board.emplace(a.board);

  protocol::Simulation sim(params, sa.resolve(), parse_bits(a.witness, "--witness"), board);
  if (params.masks && params.masks->size() != sim.prover().partition_count()) {
    throw UsageError("--masks needs one bit per partition");
  }
  auto t = sim.run(a.concurrent);

  if (format == "record-lines") {
    out << t.serialize();
  } else {
    out << "session: " << t.session << '\n';
    out << "partitions: " << sim.prover().partition_count() << '\n';
    out << "records: " << t.records.size() << '\n';
    out << "verdict: " << describe(t.outcome) << '\n';
    if (t.outcome.decoded) out << "decoded: " << (*t.outcome.decoded ? 1 : 0) << '\n';
  }
  for (const auto& p : t.timings) {
    err << "timing " << std::left << std::setw(22) << p.phase << std::setw(12) << p.author << std::fixed
        << std::setprecision(3) << p.milliseconds << " ms\n";
  }
  err << "timing total " << std::fixed << std::setprecision(3) << t.total_milliseconds() << " ms\n";
  return exit_for(t.outcome.verdict);
}

std::vector<repository::Record> load(const std::string& path) {
  if (path.empty()) throw UsageError("--board is required (or set ZKFABRIC_BOARD)");
  if (!std::filesystem::exists(path)) throw UsageError("no such board " + path);
  return repository::load_board_file(path);
}

int cmd_inspect(const std::string& path, const std::string& format, std::ostream& out) {
  auto records = load(path);
  for (const auto& r : records) {
    if (format == "record-lines") {
      out << repository::encode_record(r) << '\n';
      continue;
    }
    out << '#' << r.seq << ' ' << r.session << ' ' << r.author << ' ' << repository::to_string(r.kind) << ' '
        << r.digest.substr(0, 16) << '\n';
    std::istringstream body(r.body.dump(2));
    for (std::string line; std::getline(body, line);) out << "    " << line << '\n';
  }
  return kExitAccept;
}

int cmd_verify(const std::string& path, const std::string& session, std::ostream& out) {
  auto records = load(path);
  auto sessions = session.empty() ? protocol::sessions_of(records) : std::vector<std::string>{session};
  if (sessions.empty()) throw UsageError("board has no sessions");
  int code = kExitAccept;
  for (const auto& s : sessions) {
    auto rep = protocol::replay(records, s);
    out << "session " << s << ": recorded "
        << (rep.recorded ? describe(*rep.recorded) : std::string("none")) << ", replayed " << describe(rep.replayed)
        << (rep.rederived ? "" : " [not publicly re-derivable]") << (rep.consistent ? ", ok" : ", MISMATCH") << '\n';
    if (!rep.consistent) {
      code = kExitReject;
    } else if (rep.recorded->verdict != protocol::Verdict::Accept) {
      code = kExitReject;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zkfabric: partitioned garbled-circuit verification of composite statements"};
  app.name("zkfabric");
  app.require_subcommand(1);

  std::string format = "text";
  std::string board_path;
  std::uint64_t seed = 0;
  std::string witness;
  std::string session;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "record-lines"}));
  };
  auto add_board = [&](CLI::App* cmd) {
    cmd->add_option("--board", board_path, "Board file")->envname("ZKFABRIC_BOARD");
  };

  StatementArgs parse_sa, min_sa, garble_sa, sim_sa;
  auto* parse = app.add_subcommand("parse", "Extract clauses and operators, build the expression");
  parse_sa.attach(parse);
  auto* minimize = app.add_subcommand("minimize", "Minimize to sum-of-products and compare gate counts");
  min_sa.attach(minimize);
  auto* garble_cmd = app.add_subcommand("garble", "Compile and garble the statement circuit");
  garble_sa.attach(garble_cmd);
  garble_cmd->add_option("--witness", witness, "Evaluate the garbled circuit on these bits");
  garble_cmd->add_option("--seed", seed, "Garbling seed");
  add_format(garble_cmd);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a full verification session");
  sim_sa.attach(simulate);
  simulate->add_option("--witness", sim.witness, "Witness bits, one per clause");
  simulate->add_option("--claim", sim.claim, "Claimed output bit")->check(CLI::IsMember({0, 1}));
  simulate->add_option("--verifiers", sim.verifiers, "Verifier count (0: one per partition)");
  simulate->add_option("--board", sim.board, "Append the session to this board file")->envname("ZKFABRIC_BOARD");
  simulate->add_option("--seed", sim.seed, "Seed for every role");
  simulate->add_option("--session", sim.session, "Session id (default session-<seed>)");
  simulate->add_option("--group", sim.group, "OT group")->check(CLI::IsMember({"modp2048", "toy"}));
  simulate->add_option("--masks", sim.masks, "Pin verifier mask bits");
  simulate->add_option("--aggregator-bit", sim.aggregator_bit, "Pin the aggregator bit")
      ->check(CLI::IsMember({0, 1}));
  simulate->add_option("--fault", sim.faults,
                       "Inject a fault: corrupt-table=I, forge-output=I, flip-reveal=I, cheat-ot=I, flip-aggregator");
  simulate->add_flag("--pad", sim.pad, "Pad odd input counts with two auxiliary inputs");
  simulate->add_flag("--concurrent", sim.concurrent, "Step verifiers on separate threads");
  add_format(simulate);

  auto* inspect = app.add_subcommand("inspect", "Pretty-print a board file");
  add_board(inspect);
  add_format(inspect);

  auto* verify = app.add_subcommand("verify-transcript", "Replay every session on a board and check its verdict");
  add_board(verify);
  verify->add_option("--session", session, "Only this session");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitAccept : kExitUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(parse_sa, out);
    if (minimize->parsed()) return cmd_minimize(min_sa, out);
    if (garble_cmd->parsed()) return cmd_garble(garble_sa, witness, seed, format, out);
    if (simulate->parsed()) return cmd_simulate(sim_sa, sim, format, out, err);
    if (inspect->parsed()) return cmd_inspect(board_path, format, out);
    if (verify->parsed()) return cmd_verify(board_path, session, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zkfabric::cli
