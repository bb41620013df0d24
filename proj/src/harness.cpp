#include "wellfound/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace wellfound {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string universe_label(const Universe& u) {
  return "B=" + std::to_string(u.alphabet().size()) + ",d=" + std::to_string(u.depth());
}

// Runs `body(report)` and stamps the timing before streaming.
Report timed_report(const std::string& check, const std::string& universe, const ReportSink& sink,
                    const std::function<void(Report&)>& body) {
  Report rep;
  rep.check = check;
  rep.universe = universe;
  Clock::time_point start = Clock::now();
  body(rep);
  rep.pass = rep.failures == 0;
  rep.millis = elapsed_ms(start);
  sink(rep);
  return rep;
}

void note_failure(Report& rep, const std::string& detail) {
  if (rep.failures == 0) rep.detail = detail;
  ++rep.failures;
}

std::string pred_label(const Pred& t) {
  if (t.universe().node_count() <= 64) return "T mask=" + std::to_string(t.to_mask());
  return "T with " + std::to_string(t.count()) + " members";
}

template <typename Fn>
std::size_t for_each_pred_sampled(const Universe& u, unsigned seed, std::size_t samples, Fn fn) {
  Pred scratch(u);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t r = 0; r < u.node_count(); ++r) scratch.set(r, rng() & 1u);
    fn(scratch);
  }
  return samples;
}

// Visit every predicate on the universe when feasible (<= 2^15 tables),
// otherwise `samples` uniform random tables.  The visitor receives a reusable
// Pred whose bits are refreshed per instance.
template <typename Fn>
std::size_t for_each_pred(const Universe& u, unsigned seed, std::size_t samples, Fn fn) {
  if (u.node_count() <= 15) {
    Pred scratch(u);
    std::uint64_t total = std::uint64_t{1} << u.node_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      scratch.assign_mask(mask);
      fn(scratch);
    }
    return static_cast<std::size_t>(total);
  }
  return for_each_pred_sampled(u, seed, samples, fn);
}

// Brute-force mask oracle, independent of the Pred fixpoint engines.
struct MaskOracle {
  int asize;
  int depth;
  std::size_t nodes;
  std::vector<int> length;
  std::vector<std::size_t> first_child;

  explicit MaskOracle(const Universe& u)
      : asize(u.alphabet().size()), depth(u.depth()), nodes(u.node_count()) {
    if (nodes > 22) throw SizeLimitError("mask oracle limited to 22 nodes");
    length.resize(nodes);
    first_child.resize(nodes, 0);
    for (std::size_t r = 0; r < nodes; ++r) {
      length[r] = u.length_of(r);
      if (length[r] < depth) first_child[r] = u.child(r, 0);
    }
  }

  bool spread(std::uint64_t m) const {
    if (!(m & 1)) return false;
    for (std::size_t r = 0; r < nodes; ++r) {
      if (length[r] == depth || !(m & (std::uint64_t{1} << r))) continue;
      std::uint64_t kids = ((std::uint64_t{1} << asize) - 1) << first_child[r];
      if (!(m & kids)) return false;
    }
    return true;
  }

  bool hereditary(std::uint64_t m) const {
    for (std::size_t r = 0; r < nodes; ++r) {
      if (length[r] == depth || (m & (std::uint64_t{1} << r))) continue;
      std::uint64_t kids = ((std::uint64_t{1} << asize) - 1) << first_child[r];
      if ((m & kids) == kids) return false;
    }
    return true;
  }

  bool barricaded(std::uint64_t m) const { return !hereditary(m) || (m & 1); }

  bool exists_subset_spread(std::uint64_t t) const {
    if (!(t & 1)) return false;
    std::uint64_t sub = t;
    while (true) {
      if ((sub & 1) && spread(sub)) return true;
      if (sub == 0) return false;
      sub = (sub - 1) & t;
    }
  }

  bool forall_superset_barricaded(std::uint64_t t) const {
    std::uint64_t space = nodes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nodes) - 1;
    std::uint64_t rest = space & ~t;
    std::uint64_t extra = rest;
    while (true) {
      if (!barricaded(t | extra)) return false;
      if (extra == 0) return true;
      extra = (extra - 1) & rest;
    }
  }
};

constexpr std::size_t kPredSamples = 10000;
constexpr std::size_t kInvarianceSamples = 10000;
constexpr std::size_t kWeakeningSamples = 10000;
constexpr std::size_t kCompletenessSamples = 10000;
constexpr std::size_t kProverSamples = 100000;

}  // namespace

std::vector<std::string> suite_names() {
  return {"foundedness", "dc-bi", "kl-ft", "cc-ac", "gdc-gbi", "completeness", "bpf", "all"};
}

bool run_foundedness_suite(const RunConfig& config, const ReportSink& sink) {
  Universe u(Alphabet(config.alphabet), config.depth);
  Boundary b = config.boundary;
  std::string label = universe_label(u);
  bool ok = true;

  ok &= timed_report("duality-tree-monotone", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            if (is_tree(t) != is_monotone(complement(t))) {
              note_failure(rep, pred_label(t));
            }
          });
        }).pass;

  ok &= timed_report("closure-laws", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            Pred da = down_arborify(t), um = up_monotonise(t);
            Pred ua = up_arborify(t), dm = down_monotonise(t);
            bool good = is_tree(da) && subset_of(da, t) && down_arborify(da) == da &&
                        is_monotone(um) && subset_of(t, um) && up_monotonise(um) == um &&
                        is_tree(ua) && subset_of(t, ua) && up_arborify(ua) == ua &&
                        is_monotone(dm) && subset_of(dm, t) && down_monotonise(dm) == dm &&
                        (!is_tree(t) || da == t) && (!is_monotone(t) || um == t);
            if (!good) note_failure(rep, pred_label(t));
          });
        }).pass;

  ok &= timed_report("prop-tree-unbounded", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            if (is_tree(t) && has_unbounded_paths(t) != is_staged_infinite(t)) {
              note_failure(rep, "tree, " + pred_label(t));
            }
            if (is_monotone(t) && is_uniformly_barred(t) != is_staged_barred(t)) {
              note_failure(rep, "monotone, " + pred_label(t));
            }
          });
        }).pass;

  ok &= timed_report("prop-productive-pruning-spread", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            Pred pr = pruning(t, b);
            Pred hc = hereditary_closure(t, b);
            bool good = subset_of(pr, t) && is_progressing(pr, b) && subset_of(t, hc) &&
                        is_hereditary(hc, b);
            if (is_productive(t, b) && !is_spread(pr, b)) good = false;
            if (is_inductively_barred(t, b) && !is_barricaded(hc, b)) good = false;
            if (!good) note_failure(rep, pred_label(t));
          });
        }).pass;

  ok &= timed_report("prop-spread-productive", label, sink, [&](Report& rep) {
          if (u.node_count() > 22) {
            rep.detail = "skipped: universe too large for the subset-enumeration oracle";
            return;
          }
          MaskOracle oracle(u);
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            std::uint64_t mask = t.to_mask();
            if (is_productive(t, b) != oracle.exists_subset_spread(mask)) {
              note_failure(rep, "productive side, T=" + std::to_string(mask));
            }
            if (is_inductively_barred(t, b) != oracle.forall_superset_barricaded(mask)) {
              note_failure(rep, "barricaded side, T=" + std::to_string(mask));
            }
          });
        }).pass;

  ok &= timed_report("prop-productive-unbounded", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            if (is_productive(t, b) != has_unbounded_paths(t)) {
              note_failure(rep, "productive side, " + pred_label(t));
            }
            if (is_inductively_barred(t, b) != is_uniformly_barred(t)) {
              note_failure(rep, "uniform side, " + pred_label(t));
            }
          });
        }).pass;

  ok &= timed_report("thm-converse", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            if (is_inductively_barred(t, b) && !is_barred(t)) {
              note_failure(rep, "barred side, " + pred_label(t));
            }
            if (has_infinite_branch(t) && !is_productive(t, b)) {
              note_failure(rep, "productive side, " + pred_label(t));
            }
          });
        }).pass;

  return ok;
}

bool run_klft_suite(const RunConfig& config, const ReportSink& sink) {
  Universe u(Alphabet(config.alphabet), config.depth);
  Boundary b = config.boundary;
  std::string label = universe_label(u);
  bool ok = true;

  ok &= timed_report("thm-spread-prod", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            PrincipleReport dc_spread = check_principle(Principle::DcSpread, t, b);
            PrincipleReport dc_prod = check_principle(Principle::DcProductive, t, b);
            PrincipleReport bi_barr = check_principle(Principle::BiBarricaded, t, b);
            PrincipleReport bi_ind = check_principle(Principle::BiInd, t, b);
            bool good = dc_spread.holds == dc_prod.holds && bi_barr.holds == bi_ind.holds &&
                        dc_spread.holds && dc_prod.holds && bi_barr.holds && bi_ind.holds;
            if (!good) note_failure(rep, pred_label(t));
          });
        }).pass;

  ok &= timed_report("prop-kl-ft-variants", label, sink, [&](Report& rep) {
          rep.instances = for_each_pred(u, config.seed, kPredSamples, [&](const Pred& t) {
            PrincipleReport kl_staged = check_principle(Principle::KlStaged, t, b);
            PrincipleReport kl_unb = check_principle(Principle::KlUnbounded, t, b);
            PrincipleReport ft_staged = check_principle(Principle::FtStaged, t, b);
            PrincipleReport ft_uni = check_principle(Principle::FtUniform, t, b);
            bool good = kl_staged.holds == kl_unb.holds && ft_staged.holds == ft_uni.holds &&
                        kl_staged.holds && kl_unb.holds && ft_staged.holds && ft_uni.holds;
            // arborification / monotonisation transport behind the variants
            if (has_unbounded_paths(t) != is_staged_infinite(down_arborify(t))) good = false;
            if (is_uniformly_barred(t) != is_staged_barred(up_monotonise(t))) good = false;
            if (!good) note_failure(rep, pred_label(t));
          });
        }).pass;

  return ok;
}

namespace {

// Walk R_T = "extend by one element inside B_T" from the root; transports the
// reverse direction of the serial-relation correspondence.
bool reverse_dc_construction_ok(const Pred& t, Boundary b) {
  Pred bt = pruning(t, b);
  bool productive = bt.member(std::size_t{0});
  if (!productive) return !bt.member(std::size_t{0});
  const Universe& u = t.universe();
  // seriality of R_T below the horizon
  for (std::size_t r = 0; r < u.node_count(); ++r) {
    if (!bt.member(r) || u.length_of(r) == u.depth()) continue;
    bool child = false;
    for (int a = 0; a < u.alphabet().size() && !child; ++a) child = bt.member(u.child(r, a));
    if (!child) return false;
  }
  // greedy walk; every prefix of the branch must lie in T
  std::size_t r = 0;
  if (!t.member(r)) return false;
  for (int n = 0; n < u.depth(); ++n) {
    bool stepped = false;
    for (int a = 0; a < u.alphabet().size() && !stepped; ++a) {
      std::size_t c = u.child(r, a);
      if (bt.member(c)) {
        r = c;
        stepped = true;
      }
    }
    if (!stepped || !t.member(r)) return false;
  }
  return true;
}

}  // namespace

bool run_dcbi_suite(const RunConfig& config, const ReportSink& sink) {
  Boundary b = config.boundary;
  bool ok = true;

  ok &= timed_report("thm-dc-serial", "|B|<=3,d<=3", sink, [&](Report& rep) {
          for (int bs = 1; bs <= 3; ++bs) {
            Alphabet alpha(bs);
            std::uint64_t rels = std::uint64_t{1} << (bs * bs);
            for (std::uint64_t mask = 0; mask < rels; ++mask) {
              HomRel r = HomRel::from_mask(alpha, mask);
              for (int b0 = 0; b0 < bs; ++b0) {
                for (int d = 1; d <= 3; ++d) {
                  ++rep.instances;
                  Universe u(alpha, d);
                  DcSerialReport dc = check_dc_serial(r, b0, d);
                  bool good = dc.holds;
                  if (dc.serial && !dc.alignment_productive) good = false;  // serial-productive
                  if (dc.serial && dc.branch) {
                    Pred align = alignment(r, b0, u);
                    for (int n = 0; n <= d && good; ++n) {
                      good = align.member(branch_prefix(*dc.branch, n));
                    }
                  }
                  // chaining/alignment and antichaining/blockings transport
                  if (!(chaining(r, b0, u) == down_arborify(alignment(r, b0, u)))) good = false;
                  if (!(antichaining(r, b0, u) == up_monotonise(blockings(r, b0, u)))) good = false;
                  BiLeastReport bi = check_bi_least(r, b0, d);
                  if (!bi.holds) good = false;
                  if (!good) {
                    note_failure(rep, "R mask=" + std::to_string(mask) + " |B|=" +
                                          std::to_string(bs) + " b0=" + std::to_string(b0) +
                                          " d=" + std::to_string(d));
                  }
                }
              }
            }
          }
        }).pass;

  ok &= timed_report("thm-dc-reverse", "B=2,d=2 + " + universe_label(Universe(Alphabet(config.alphabet), config.depth)),
                     sink, [&](Report& rep) {
          Universe small(Alphabet(2), 2);
          rep.instances += for_each_pred(small, config.seed, kPredSamples, [&](const Pred& t) {
            if (!reverse_dc_construction_ok(t, b)) {
              note_failure(rep, pred_label(t) + " on B=2,d=2");
            }
          });
          Universe big(Alphabet(config.alphabet), config.depth);
          rep.instances += for_each_pred(big, config.seed + 1, kPredSamples, [&](const Pred& t) {
            if (!reverse_dc_construction_ok(t, b)) {
              note_failure(rep, pred_label(t));
            }
          });
        }).pass;

  // ord / ||.|| / lift encodings and the transport lemmas behind Thm dc-bi.
  auto encoding_checks = [&](const Universe& uni, unsigned seed, Report& rep, bool sample_only) {
    auto body = [&](const Pred& t) {
      Pred tree_side = down_arborify(t);
      Pred mono_side = up_monotonise(t);
      ApproxPred lifted_tree = superset_closure(lift(tree_side));
      ApproxPred lifted_mono = up_closure(lift(mono_side));
      bool good = true;
      // ordered-stability round trips
      if (!(ordered_pred(lifted_tree, uni) == tree_side)) good = false;
      if (!(ordered_pred(lifted_mono, uni) == mono_side)) good = false;
      // approximable <-> productive, choice <-> branch (ill-founded side)
      if (is_approximable(lifted_tree) != is_productive(tree_side, Boundary::Open)) good = false;
      if (find_choice_function(lifted_tree).has_value() != has_infinite_branch(tree_side)) {
        good = false;
      }
      // inductively barred <-> inductively barred, barred <-> barred (dual side)
      if (is_inductively_barred(lifted_mono) !=
          is_inductively_barred(mono_side, Boundary::Open)) {
        good = false;
      }
      if (is_barred_approx(lifted_mono) != is_barred(mono_side)) good = false;
      if (!good) note_failure(rep, pred_label(t));
    };
    if (sample_only) {
      rep.instances += for_each_pred_sampled(uni, seed, kPredSamples, body);
    } else {
      rep.instances += for_each_pred(uni, seed, kPredSamples, body);
    }
  };

  ok &= timed_report("thm-dc-bi-encodings", "B=2,d=2 exhaustive + sampled " +
                                                universe_label(Universe(Alphabet(config.alphabet), config.depth)),
                     sink, [&](Report& rep) {
          Universe small(Alphabet(2), 2);
          encoding_checks(small, config.seed, rep, false);
          Universe big(Alphabet(config.alphabet), config.depth);
          encoding_checks(big, config.seed + 2, rep, true);
        }).pass;

  // Sequence-predicate reading of arbitrary approximation predicates.
  ok &= timed_report("approx-ordered-transport", "A=2,B=2 exhaustive", sink, [&](Report& rep) {
          Alphabet two(2);
          Universe uni(two, 2);
          for (std::uint32_t code = 0; code < (std::uint32_t{1} << 16); ++code) {
            ++rep.instances;
            std::vector<std::uint8_t> table(16, 0);
            for (int i = 0; i < 16; ++i) table[static_cast<std::size_t>(i)] = (code >> i) & 1u;
            ApproxPred raw = ApproxPred::from_mask_table(2, two, std::move(table));
            ApproxPred down = down_interior(raw);
            ApproxPred up = up_closure(raw);
            bool good = true;
            if (is_approximable(down) != is_productive(ordered_pred(down, uni), Boundary::Open)) {
              good = false;
            }
            if (find_choice_function(down).has_value() !=
                has_infinite_branch(ordered_pred(down, uni))) {
              good = false;
            }
            if (is_inductively_barred(up) !=
                is_inductively_barred(ordered_pred(up, uni), Boundary::Open)) {
              good = false;
            }
            if (is_barred_approx(up) != is_barred(ordered_pred(up, uni))) good = false;
            if (!good) note_failure(rep, "table=" + std::to_string(code));
          }
        }).pass;

  return ok;
}

bool run_ccac_suite(const RunConfig& config, const ReportSink& sink) {
  (void)config;  // the relation spaces here are pinned by the theorems
  bool ok = true;

  ok &= timed_report("thm-cc", "|B|<=3,d<=3", sink, [&](Report& rep) {
          for (int bs = 1; bs <= 3; ++bs) {
            Alphabet alpha(bs);
            for (int d = 1; d <= 3; ++d) {
              Universe u(alpha, d);
              std::uint64_t rels = std::uint64_t{1} << (d * bs);
              for (std::uint64_t mask = 0; mask < rels; ++mask) {
                ++rep.instances;
                HetRel r = HetRel::from_mask(d, alpha, mask);
                Pred pos = seq_pos_alignment(r, u);
                Pred neg = seq_neg_alignment(r, u);
                CcReport cc = check_cc(r, d);
                WbiReport wbi = check_wbi(r, d);
                bool good = cc.holds && wbi.holds;
                if (is_left_total_below(r, d) != is_productive(pos)) good = false;
                if (cc.choice.has_value() != has_infinite_branch(pos)) good = false;
                if (cc.choice) {
                  // choice <-> branch transport: the choice read as a branch
                  Branch alpha_branch(*cc.choice);
                  for (int n = 0; n <= d && good; ++n) {
                    good = pos.member(branch_prefix(alpha_branch, n));
                  }
                }
                if (wbi.barred != is_barred(neg)) good = false;
                if (!good) {
                  note_failure(rep, "R mask=" + std::to_string(mask) + " |B|=" +
                                        std::to_string(bs) + " d=" + std::to_string(d));
                }
              }
            }
          }
        }).pass;

  ok &= timed_report("thm-ac", "|A|<=3,|B|<=3", sink, [&](Report& rep) {
          for (int as = 1; as <= 3; ++as) {
            for (int bs = 1; bs <= 3; ++bs) {
              Alphabet alpha(bs);
              std::uint64_t rels = std::uint64_t{1} << (as * bs);
              for (std::uint64_t mask = 0; mask < rels; ++mask) {
                ++rep.instances;
                HetRel r = HetRel::from_mask(as, alpha, mask);
                ApproxPred pos = relation_alignment_pos(r);
                bool good = true;
                if (is_left_total(r) != is_approximable(pos)) good = false;
                auto choice = find_choice_function(pos);
                if (is_left_total(r) != choice.has_value()) good = false;
                if (choice) {
                  for (int a = 0; a < as && good; ++a) {
                    good = r.at(a, (*choice)[static_cast<std::size_t>(a)]);
                  }
                }
                // AC solutions and GDC choice functions are the same maps
                std::vector<int> probe(static_cast<std::size_t>(as), 0);
                while (true) {
                  bool ac_ok = true;
                  for (int a = 0; a < as && ac_ok; ++a) {
                    ac_ok = r.at(a, probe[static_cast<std::size_t>(a)]);
                  }
                  if (ac_ok != choice_function_valid(pos, probe)) good = false;
                  std::size_t i = 0;
                  while (i < probe.size() && ++probe[i] == bs) probe[i++] = 0;
                  if (i == probe.size()) break;
                }
                if (!good) {
                  note_failure(rep, "R mask=" + std::to_string(mask) + " |A|=" +
                                        std::to_string(as) + " |B|=" + std::to_string(bs));
                }
              }
            }
          }
        }).pass;

  return ok;
}

bool run_gdcgbi_suite(const RunConfig& config, const ReportSink& sink) {
  bool ok = true;

  ok &= timed_report("gdc-gbi-finite-instances", "|A|<=2,|B|<=2 exhaustive", sink,
                     [&](Report& rep) {
          for (int as = 1; as <= 2; ++as) {
            for (int bs = 1; bs <= 2; ++bs) {
              Alphabet alpha(bs);
              int bits = as * bs;
              std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << bits);
              for (std::uint64_t code = 0; code < tables; ++code) {
                ++rep.instances;
                std::vector<std::uint8_t> table(std::size_t{1} << bits, 0);
                for (std::size_t i = 0; i < table.size(); ++i) table[i] = (code >> i) & 1u;
                ApproxPred t = ApproxPred::from_mask_table(as, alpha, std::move(table));
                GdcReport gdc = check_gdc(t);
                GbiReport gbi = check_gbi(t);
                bool good = gdc.holds && gbi.holds;
                if (gdc.choice && !choice_function_valid(t, *gdc.choice)) good = false;
                if (gbi.inductively_barred) {
                  auto deriv = bar_derivation_from(t, Approx());
                  if (!deriv || !recheck_bar_derivation(t, Approx(), *deriv)) good = false;
                }
                if (!good) {
                  note_failure(rep, "table=" + std::to_string(code) + " |A|=" +
                                        std::to_string(as) + " |B|=" + std::to_string(bs));
                }
              }
            }
          }
        }).pass;

  ok &= timed_report("approx-equivalence-invariance", "random v, |A|=3,|B|=2", sink,
                     [&](Report& rep) {
          std::mt19937_64 rng(config.seed);
          Alphabet two(2);
          std::vector<std::uint8_t> table(std::size_t{1} << 6);
          for (auto& x : table) x = rng() & 1u;
          ApproxPred t = ApproxPred::from_mask_table(3, two, table);
          rep.instances = kInvarianceSamples;
          for (std::size_t i = 0; i < kInvarianceSamples; ++i) {
            // random raw sequence, then a permuted/duplicated equivalent
            std::vector<std::pair<int, int>> pairs;
            std::size_t len = rng() % 5;
            for (std::size_t j = 0; j < len; ++j) {
              pairs.emplace_back(static_cast<int>(rng() % 3), static_cast<int>(rng() % 2));
            }
            Approx v(pairs);
            std::vector<std::pair<int, int>> shuffled = pairs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (!pairs.empty()) shuffled.push_back(pairs[rng() % pairs.size()]);
            Approx w(shuffled);
            bool good = equivalent(v, w) && t.member(v) == t.member(w) &&
                        approximable_from(t, v) == approximable_from(t, w) &&
                        inductively_barred_from(t, v) == inductively_barred_from(t, w);
            if (!good) note_failure(rep, "v=" + v.to_string() + " w=" + w.to_string());
          }
        }).pass;

  ok &= timed_report("pigeonhole", "(2,1) (3,2) (4,3)", sink, [&](Report& rep) {
          for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
            ++rep.instances;
            PigeonholeReport ph = pigeonhole_demo(m, n);
            if (ph.max_stage != n || ph.has_choice_function || ph.approximable) {
              note_failure(rep, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
          }
        }).pass;

  return ok;
}

namespace {

ClauseTheory random_theory(std::mt19937_64& rng, int atoms, int max_clauses) {
  std::uniform_int_distribution<int> clause_count(0, max_clauses);
  std::vector<Sequent> clauses;
  int n = clause_count(rng);
  AtomSet mask = (AtomSet{1} << atoms) - 1u;
  for (int i = 0; i < n; ++i) {
    Sequent s;
    s.gamma = static_cast<AtomSet>(rng()) & mask;
    s.delta = static_cast<AtomSet>(rng()) & mask;
    clauses.push_back(s);
  }
  return ClauseTheory(atoms, std::move(clauses));
}

bool brute_force_has_model(const ClauseTheory& t) {
  for (AtomSet bits = 0; bits <= t.atom_mask(); ++bits) {
    if (satisfies(Valuation{bits, t.atom_count()}, t)) return true;
    if (t.atom_mask() == 0) break;
  }
  return false;
}

}  // namespace

bool run_completeness_suite(const RunConfig& config, const ReportSink& sink) {
  bool ok = true;

  ok &= timed_report("thm-compl-exhaustive", "|A|<=2, all theories", sink, [&](Report& rep) {
          for (int atoms = 0; atoms <= 2; ++atoms) {
            // every subset of the 4^atoms sequent shapes
            std::size_t shapes = std::size_t{1} << (2 * atoms);
            std::uint64_t theories = std::uint64_t{1} << shapes;
            for (std::uint64_t code = 0; code < theories; ++code) {
              ++rep.instances;
              std::vector<Sequent> clauses;
              for (std::size_t i = 0; i < shapes; ++i) {
                if (!(code & (std::uint64_t{1} << i))) continue;
                AtomSet gamma = 0, delta = 0;
                for (int a = 0; a < atoms; ++a) {
                  int v = static_cast<int>((i >> (2 * a)) & 3u);
                  if (v & 1) gamma |= AtomSet{1} << a;
                  if (v & 2) delta |= AtomSet{1} << a;
                }
                clauses.push_back(Sequent{gamma, delta});
              }
              ClauseTheory t(atoms, std::move(clauses));
              if (!check_completeness(t).holds) {
                note_failure(rep, "atoms=" + std::to_string(atoms) + " code=" + std::to_string(code));
              }
            }
          }
        }).pass;

  ok &= timed_report("thm-compl-sampled", "|A| in {3,4}, 10^4 theories", sink, [&](Report& rep) {
          std::mt19937_64 rng(config.seed);
          rep.instances = kCompletenessSamples;
          for (std::size_t i = 0; i < kCompletenessSamples; ++i) {
            int atoms = 3 + static_cast<int>(rng() % 2);
            ClauseTheory t = random_theory(rng, atoms, 6);
            if (!check_completeness(t).holds) {
              note_failure(rep, "sample " + std::to_string(i));
            }
          }
        }).pass;

  ok &= timed_report("prover-vs-enumeration", "|A|<=3, clauses<=4, 10^5 samples", sink,
                     [&](Report& rep) {
          std::mt19937_64 rng(config.seed + 7);
          rep.instances = kProverSamples;
          SplitHeuristic h = config.split;
          for (std::size_t i = 0; i < kProverSamples; ++i) {
            int atoms = 1 + static_cast<int>(rng() % 3);
            ClauseTheory t = random_theory(rng, atoms, 4);
            bool inconsistent = derivable(t, Sequent{}, h);
            bool good = inconsistent != brute_force_has_model(t);
            if (derivable(t, Sequent{}, SplitHeuristic::MostFrequent) != inconsistent) good = false;
            if (derivable(t, Sequent{}, SplitHeuristic::UnitPropagation) != inconsistent) {
              good = false;
            }
            if (positively_disprovable(t, Sequent{}) == inconsistent) good = false;
            if (inconsistent) {
              auto d = derive(t, Sequent{}, h);
              if (!d || !recheck_derivation(t, Sequent{}, *d)) good = false;
            } else {
              auto m = find_model(t);
              if (!m || !satisfies(*m, t)) good = false;
              if (positively_falsifies(*m, t)) good = false;
            }
            if (!good) note_failure(rep, "sample " + std::to_string(i));
          }
        }).pass;

  ok &= timed_report("weakening-admissible", "10^4 samples", sink, [&](Report& rep) {
          std::mt19937_64 rng(config.seed + 13);
          rep.instances = kWeakeningSamples;
          for (std::size_t i = 0; i < kWeakeningSamples; ++i) {
            int atoms = 2 + static_cast<int>(rng() % 3);
            ClauseTheory t = random_theory(rng, atoms, 5);
            Sequent s;
            s.gamma = static_cast<AtomSet>(rng()) & t.atom_mask();
            s.delta = static_cast<AtomSet>(rng()) & t.atom_mask();
            Sequent w;
            w.gamma = s.gamma | (static_cast<AtomSet>(rng()) & t.atom_mask());
            w.delta = s.delta | (static_cast<AtomSet>(rng()) & t.atom_mask());
            if (derivable(t, s) && !derivable(t, w)) {
              note_failure(rep, "sample " + std::to_string(i));
            }
          }
        }).pass;

  return ok;
}

bool run_bpf_suite(const RunConfig& config, const ReportSink& sink) {
  bool ok = true;

  ok &= timed_report("thm-bpf-exhaustive", "|A|<=2, all theories", sink, [&](Report& rep) {
          for (int atoms = 1; atoms <= 2; ++atoms) {
            std::size_t shapes = std::size_t{1} << (2 * atoms);
            std::uint64_t theories = std::uint64_t{1} << shapes;
            for (std::uint64_t code = 0; code < theories; ++code) {
              ++rep.instances;
              std::vector<Sequent> clauses;
              for (std::size_t i = 0; i < shapes; ++i) {
                if (!(code & (std::uint64_t{1} << i))) continue;
                AtomSet gamma = 0, delta = 0;
                for (int a = 0; a < atoms; ++a) {
                  int v = static_cast<int>((i >> (2 * a)) & 3u);
                  if (v & 1) gamma |= AtomSet{1} << a;
                  if (v & 2) delta |= AtomSet{1} << a;
                }
                clauses.push_back(Sequent{gamma, delta});
              }
              ClauseTheory t(atoms, std::move(clauses));
              if (!check_bpf(t).holds) {
                note_failure(rep, "atoms=" + std::to_string(atoms) + " code=" + std::to_string(code));
              }
            }
          }
        }).pass;

  ok &= timed_report("thm-bpf-sampled", "|A|=3, 200 theories", sink, [&](Report& rep) {
          std::mt19937_64 rng(config.seed + 21);
          rep.instances = 200;
          for (int i = 0; i < 200; ++i) {
            ClauseTheory t = random_theory(rng, 3, 5);
            if (!check_bpf(t).holds) note_failure(rep, "sample " + std::to_string(i));
          }
        }).pass;

  return ok;
}

bool run_suite(const std::string& suite, const RunConfig& config, const ReportSink& sink) {
  if (suite == "foundedness") return run_foundedness_suite(config, sink);
  if (suite == "dc-bi") return run_dcbi_suite(config, sink);
  if (suite == "kl-ft") return run_klft_suite(config, sink);
  if (suite == "cc-ac") return run_ccac_suite(config, sink);
  if (suite == "gdc-gbi") return run_gdcgbi_suite(config, sink);
  if (suite == "completeness") return run_completeness_suite(config, sink);
  if (suite == "bpf") return run_bpf_suite(config, sink);
  if (suite == "all") {
    bool ok = true;
    ok &= run_foundedness_suite(config, sink);
    ok &= run_klft_suite(config, sink);
    ok &= run_dcbi_suite(config, sink);
    ok &= run_ccac_suite(config, sink);
    ok &= run_gdcgbi_suite(config, sink);
    ok &= run_completeness_suite(config, sink);
    ok &= run_bpf_suite(config, sink);
    return ok;
  }
  throw UnknownNameError("unknown suite: " + suite);
}

}  // namespace wellfound
