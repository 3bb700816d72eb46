#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "owf/coinduction.hpp"
#include "owf/doubling.hpp"
#include "owf/errors.hpp"
#include "owf/pipeline.hpp"
#include "owf/ow_tower.hpp"
#include "owf_cli/commands.hpp"

namespace owf::cli {

namespace {

Pattern random_bits(std::mt19937_64& rng, const SupportPtr& support) {
  std::vector<Symbol> values(support->size());
  for (auto& v : values) v = static_cast<Symbol>(rng() & 1U);
  return Pattern(Alphabet::bits(), support, std::move(values));
}

Pattern random_symbols(std::mt19937_64& rng, Alphabet alphabet, const SupportPtr& support) {
  std::vector<Symbol> values(support->size());
  for (auto& v : values) v = static_cast<Symbol>(rng() % alphabet.size());
  return Pattern(alphabet, support, std::move(values));
}

Pattern bits_from_mask(const SupportPtr& support, std::uint64_t bits) {
  std::vector<Symbol> values(support->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = (bits >> i) & 1U;
  return Pattern(Alphabet::bits(), support, std::move(values));
}

json size_table(const std::map<std::uint64_t, std::uint64_t>& sizes) {
  json out = json::object();
  for (const auto& [size, count] : sizes) out[std::to_string(size)] = count;
  return out;
}

json words_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

int positive(std::optional<int> value, int fallback, const char* flag, int min, int max) {
  const int v = value.value_or(fallback);
  if (v < min || v > max) {
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(min) + ", " + std::to_string(max) +
                     "], got " + std::to_string(v));
  }
  return v;
}

// Cells both states determine agree; returns the number compared.
std::optional<std::size_t> overlap(const Pattern& x, const Pattern& y) {
  std::size_t common = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = y.find(x.cell(i));
    if (!v) continue;
    if (*v != x.value(i)) return std::nullopt;
    ++common;
  }
  return common;
}

std::optional<std::size_t> states_agree(const PipelineState& lhs, const PipelineState& rhs) {
  if (!(lhs.z == rhs.z) || lhs.levels.size() != rhs.levels.size()) return std::nullopt;
  std::size_t compared = 0;
  for (std::size_t m = 0; m < lhs.levels.size(); ++m) {
    const auto c = overlap(lhs.levels[m], rhs.levels[m]);
    if (!c) return std::nullopt;
    compared += *c;
  }
  for (const auto& [n, w] : lhs.kernel) {
    auto it = rhs.kernel.find(n);
    if (it == rhs.kernel.end()) continue;
    const auto c = overlap(w, it->second);
    if (!c) return std::nullopt;
    compared += *c;
  }
  return compared;
}

Report ow_fibers(Report report, const Options& options) {
  const int radius = positive(options.radius, 2, "--radius", 1, 2);
  std::optional<FiberCensus> census;
  report.run("pair fibers on ball(" + std::to_string(radius) + ")", [&](json& d) {
    census = ow_fiber_census(radius);
    d["inputs"] = census->inputs;
    d["pair_cells"] = census->pair_cells;
    d["targets"] = census->pair_targets;
    d["attained"] = census->pair_attained;
    d["fiber_sizes"] = size_table(census->pair_fiber_sizes);
    return census->pairs_surjective() && census->pairs_uniform();
  });
  report.run("edge fibers on ball(" + std::to_string(radius) + ")", [&](json& d) {
    d["edge_cells"] = census->edge_cells;
    d["attained"] = census->edge_attained;
    d["fiber_sizes"] = size_table(census->edge_fiber_sizes);
    return census->edge_fiber_sizes.size() == 1 && census->edge_fiber_sizes.begin()->first == 2;
  });
  return report;
}

Report ow_equivariance(Report report, const Options& options) {
  const int radius = positive(options.radius, 3, "--radius", 2, 8);
  const int depth = positive(options.depth, 2, "--depth", 0, 4);
  const int levels = positive(options.levels, 2, "--levels", 1, 8);
  const std::uint64_t samples = options.samples.value_or(1000);
  const std::vector<Word> shifts = ball(depth);

  auto exhaustive = [&](bool tower) {
    return [&, tower](json& d) {
      const SupportPtr window = Support::ball(2);
      std::uint64_t compared = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << window->size()); ++bits) {
        const Pattern x = bits_from_mask(window, bits);
        if (tower) {
          const TowerOutput y = tower_map(x, levels);
          for (const Word& f : shifts) {
            if (!(tower_map(shift(f, x), levels) == shift(f, y))) {
              d["counterexample"] = {{"f", f.to_string()}, {"x", pattern_to_json(x)}};
              return false;
            }
            ++compared;
          }
        } else {
          const OwImage y = ow_components(x);
          for (const Word& f : shifts) {
            const OwImage moved = ow_components(shift(f, x));
            if (!(moved.p == shift(f, y.p)) || !(moved.q == shift(f, y.q))) {
              d["counterexample"] = {{"f", f.to_string()}, {"x", pattern_to_json(x)}};
              return false;
            }
            ++compared;
          }
        }
      }
      d["patterns"] = std::uint64_t{1} << window->size();
      d["shifts"] = shifts.size();
      d["comparisons"] = compared;
      return true;
    };
  };
  auto randomized = [&](bool tower) {
    return [&, tower](json& d) {
      std::mt19937_64 rng(options.seed);
      const SupportPtr window = Support::ball(radius);
      std::uint64_t compared = 0;
      for (std::uint64_t s = 0; s < samples; ++s) {
        const Pattern x = random_bits(rng, window);
        for (const Word& f : shifts) {
          const bool ok = tower ? tower_map(shift(f, x), levels) == shift(f, tower_map(x, levels))
                                : [&] {
                                    const OwImage a = ow_components(shift(f, x));
                                    const OwImage b = ow_components(x);
                                    return a.p == shift(f, b.p) && a.q == shift(f, b.q);
                                  }();
          if (!ok) {
            d["counterexample"] = {{"f", f.to_string()}, {"sample", s}};
            return false;
          }
          ++compared;
        }
      }
      d["patterns"] = samples;
      d["shifts"] = shifts.size();
      d["comparisons"] = compared;
      return true;
    };
  };
  report.run("ow_map, all patterns on ball(2)", exhaustive(false));
  report.run("tower_map L=" + std::to_string(levels) + ", all patterns on ball(2)", exhaustive(true));
  report.run("ow_map, random patterns on ball(" + std::to_string(radius) + ")", randomized(false));
  report.run("tower_map L=" + std::to_string(levels) + ", random patterns on ball(" + std::to_string(radius) + ")",
             randomized(true));
  return report;
}

Report cocycles(Report report, const LoadedConfig& config, const Options& options) {
  const int depth = positive(options.depth, 2, "--depth", 0, 3);
  const int levels = positive(options.levels, 2, "--levels", 1, 4);
  const int radius = positive(options.radius, 4, "--radius", levels + 1, 6);
  const std::size_t count = options.count.value_or(8);
  const std::uint64_t windows = options.samples.value_or(10);
  const Coinduction co{config.coinduction};
  const ZPoint z = co.base_point();
  const std::vector<Word> words = ball(depth);

  report.run("beta0", [&](json& d) {
    std::mt19937_64 rng(options.seed);
    std::uint64_t checked = 0;
    for (std::uint64_t s = 0; s < windows; ++s) {
      const TowerOutput y = tower_map(random_bits(rng, Support::ball(radius)), levels);
      for (const Word& f1 : words) {
        const AffineWindowMap first = beta0(f1, y);
        const TowerOutput moved = shift(f1, y);
        for (const Word& f2 : words) {
          if (!(beta0(f2 * f1, y) == compose(beta0(f2, moved), first))) {
            d["counterexample"] = {{"f1", f1.to_string()}, {"f2", f2.to_string()}, {"window", s}};
            return false;
          }
          ++checked;
        }
      }
    }
    d["identities"] = checked;
    return true;
  });

  for (const bool is_delta : {true, false}) {
    report.run(is_delta ? "delta" : "gamma", [&](json& d) {
      std::uint64_t checked = 0;
      for (const Word& g : words) {
        const ZPoint gz = co.act(g, z);
        for (const Word& h : words) {
          for (std::size_t n = 0; n < count; ++n) {
            const auto first = co.step(g, n, z);
            const auto second = co.step(h, first.k, gz);
            const auto both = co.step(h * g, n, z);
            const bool ok = is_delta ? both.k == second.k : both.u == second.u * first.u;
            if (!ok) {
              d["counterexample"] = {{"g", g.to_string()}, {"h", h.to_string()}, {"n", n}};
              return false;
            }
            ++checked;
          }
        }
      }
      d["identities"] = checked;
      return true;
    });
  }

  report.run("key_beta", [&](json& d) {
    std::mt19937_64 rng(options.seed ^ 0x6b65795f62657461ULL);
    const std::vector<Word> small = ball(std::min(depth, 1));
    const Pattern x = random_bits(rng, coordinate_window(co, radius - 1, count, z));
    const PipelineState state = key_pipeline(co, x, z, levels);
    std::map<std::size_t, SupportPtr> window_of;
    for (const auto& [n, w] : state.kernel) window_of.emplace(n, w.support_ptr());
    std::uint64_t checked = 0;
    for (const Word& g : small) {
      const AffineFamilyMap first = key_beta(co, g, state.levels, z, window_of);
      const LevelPatterns moved = group_shift(co.group(), g, state.levels);
      std::map<std::size_t, SupportPtr> moved_windows;
      for (const auto& [n, entry] : first.maps) moved_windows.emplace(n, entry.second.codomain());
      for (const Word& h : small) {
        const AffineFamilyMap second = key_beta(co, h, moved, co.act(g, z), moved_windows);
        if (!(compose(second, first) == key_beta(co, h * g, state.levels, z, window_of))) {
          d["counterexample"] = {{"g", g.to_string()}, {"h", h.to_string()}};
          return false;
        }
        ++checked;
      }
    }
    d["identities"] = checked;
    d["coordinates"] = window_of.size();
    return true;
  });
  return report;
}

Report transversal_suite(Report report, const LoadedConfig& config, const Options& options) {
  const std::size_t count = options.count.value_or(12);
  const int depth = positive(options.depth, 3, "--depth", 0, 5);
  if (count < 1) throw UsageError("--count must be positive");
  const Coinduction co{config.coinduction};
  const ZPoint z = co.base_point();
  std::vector<Word> c;

  report.run("c(0) = 1", [&](json& d) {
    c = co.transversal(count, z);
    d["c"] = words_json(c);
    return c.front() == co.group().identity();
  });
  report.run("entries in distinct orbits", [&](json& d) {
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j, ++pairs) {
        if (co.solve(c[j], c[i], z)) {
          d["counterexample"] = {{"i", i}, {"j", j}};
          return false;
        }
      }
    }
    d["pairs"] = pairs;
    return true;
  });
  report.run("greedy in the enumeration", [&](json& d) {
    const std::uint64_t last = co.group().index_of(c.back());
    for (std::uint64_t i = 0; i <= last; ++i) {
      const Word g = co.group().enumerate(i);
      const std::size_t k = co.psi_inverse(g, z).second;
      if (k >= c.size() || co.group().index_of(c[k]) > i) {
        d["counterexample"] = g.to_string();
        return false;
      }
    }
    d["elements"] = last + 1;
    return true;
  });
  const std::vector<Word> fs = ball(depth);
  report.run("psi injective", [&](json& d) {
    std::unordered_set<Word, WordHash> seen;
    for (const Word& f : fs) {
      for (std::size_t n = 0; n < 8; ++n) {
        if (!seen.insert(co.psi(f, n, z)).second) {
          d["collision"] = {{"f", f.to_string()}, {"n", n}};
          return false;
        }
      }
    }
    d["values"] = seen.size();
    return true;
  });
  report.run("psi round trip", [&](json& d) {
    std::uint64_t checked = 0;
    for (const Word& f : fs) {
      for (std::size_t n = 0; n < 8; ++n, ++checked) {
        const auto [f2, n2] = co.psi_inverse(co.psi(f, n, z), z);
        if (!(f2 == f) || n2 != n) {
          d["counterexample"] = {{"f", f.to_string()}, {"n", n}};
          return false;
        }
      }
    }
    d["checked"] = checked;
    return true;
  });
  report.run("psi(f, 0) = alpha(iota(f)^-1)^-1", [&](json& d) {
    const GroupOracle& g = co.group();
    for (const Word& f : fs) {
      if (!g.equal(co.psi(f, 0, z), g.invert(co.alpha(config.coinduction.iota.apply(f).inverse(), z)))) {
        d["counterexample"] = f.to_string();
        return false;
      }
    }
    d["checked"] = fs.size();
    return true;
  });
  report.run("conjugation identity", [&](json& d) {
    const GroupOracle& grp = co.group();
    std::uint64_t checked = 0;
    for (const Word& g : ball(1)) {
      const ZPoint gz = co.act(g, z);
      const Word g_inv = grp.invert(g);
      for (const Word& f : ball(std::min(depth, 2))) {
        for (std::size_t n = 0; n < 6; ++n, ++checked) {
          const auto [k, u] = co.step(g_inv, n, gz);
          if (!grp.equal(grp.multiply(g_inv, co.psi(f, n, gz)), co.psi(u * f, k, z))) {
            d["counterexample"] = {{"g", g.to_string()}, {"f", f.to_string()}, {"n", n}};
            return false;
          }
        }
      }
    }
    d["checked"] = checked;
    return true;
  });
  return report;
}

Report pipeline(Report report, const LoadedConfig& config, const Options& options) {
  const int radius = positive(options.radius, 5, "--radius", 2, 7);
  const int levels = positive(options.levels, 2, "--levels", 1, radius - 1);
  const std::uint64_t samples = options.samples.value_or(1000);
  const Coinduction co{config.coinduction};
  const ZPoint z = co.base_point();
  const SupportPtr window = Support::ball(radius);

  report.run("round trip", [&](json& d) {
    std::mt19937_64 rng(options.seed);
    std::uint64_t bits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Pattern x = random_bits(rng, window);
      const PipelineState state = key_pipeline(co, x, z, levels);
      for (const auto& [n, k] : state.kernel) {
        if (!KernelWindow::is_kernel(k, levels)) {
          d["counterexample"] = {{"sample", s}, {"coordinate", n}, {"reason", "not a kernel window"}};
          return false;
        }
      }
      if (!(key_pipeline_inverse(co, state) == x)) {
        d["counterexample"] = {{"sample", s}};
        return false;
      }
      bits += x.size();
    }
    d["windows"] = samples;
    d["bits"] = bits;
    return true;
  });
  report.run("equivariance, g in ball(1)", [&](json& d) {
    std::mt19937_64 rng(options.seed ^ 0x65717569ULL);
    const std::uint64_t spots = std::min<std::uint64_t>(samples, 10);
    std::uint64_t cells = 0;
    for (std::uint64_t s = 0; s < spots; ++s) {
      const Pattern x = random_bits(rng, window);
      const PipelineState state = key_pipeline(co, x, z, levels);
      for (const Word& g : ball(1)) {
        const PipelineState lhs = act_on_state(co, g, state);
        const Pattern gx = group_shift(co.group(), g, x);
        const auto compared = states_agree(lhs, key_pipeline(co, gx, co.act(g, z), levels));
        if (!compared || !(key_pipeline_inverse(co, lhs) == gx)) {
          d["counterexample"] = {{"sample", s}, {"g", g.to_string()}};
          return false;
        }
        cells += *compared;
      }
    }
    d["windows"] = spots;
    d["cells_compared"] = cells;
    return true;
  });
  for (int m = 0; m < levels; ++m) {
    report.run("certificate for (1, " + std::to_string(m) + ")", [&, m](json& d) {
      const PiCertificate cert = key_pi_certificate(co, co.group().identity(), m, z);
      std::vector<Word> expected;
      for (const Word& f : tower_dependency(m)) expected.push_back(co.psi(f, 0, z));
      std::sort(expected.begin(), expected.end());
      d["cells"] = words_json(cert.cells);
      if (cert.n != 0 || !cert.f.empty() || cert.cells != expected) return false;
      for (const Word& cell : cert.cells) {
        if (!window->contains(cell)) {
          d["reason"] = "certificate leaves the window";
          return false;
        }
      }
      std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(m));
      const std::uint64_t trials = std::min<std::uint64_t>(samples, 50);
      const Word one = co.group().identity();
      for (std::uint64_t s = 0; s < trials; ++s) {
        const Pattern x = random_bits(rng, window);
        const Symbol before = key_pi(co, x, z, levels)[static_cast<std::size_t>(m)].at(one);
        Pattern outside = x;
        for (std::size_t i = 0; i < outside.size(); ++i) {
          if (!std::binary_search(cert.cells.begin(), cert.cells.end(), outside.cell(i))) {
            outside.set_value(i, static_cast<Symbol>(rng() & 1U));
          }
        }
        if (key_pi(co, outside, z, levels)[static_cast<std::size_t>(m)].at(one) != before) {
          d["reason"] = "output moved when only uncertified cells changed";
          return false;
        }
        for (const Word& cell : cert.cells) {
          Pattern flipped = x;
          flipped.set(cell, 1 - x.at(cell));
          if (key_pi(co, flipped, z, levels)[static_cast<std::size_t>(m)].at(one) == before) {
            d["reason"] = "certified cell " + cell.to_string() + " does not matter";
            return false;
          }
        }
      }
      d["perturbation_trials"] = trials;
      return true;
    });
  }
  return report;
}

Report doubling(Report report, const LoadedConfig& config, const Options& options) {
  const int depth = positive(options.depth, 3, "--depth", 1, 6);
  const std::uint64_t samples = options.samples.value_or(1000);
  DoublingConfig dc = config.doubling.value_or(DoublingConfig{});
  const SupportPtr support = Support::make(required_cells(dc, depth + 1));
  Pattern x = Pattern::zeros(dc.alphabet(), Support::empty());
  json witness;
  if (config.doubling) {
    x = encoding_pattern(dc, support);
    witness = {{"pattern", "encoding"},
               {"action", dc.action == DoublingConfig::Action::left_translation ? "left-translation" : "table"}};
  } else {
    x = twisted_pattern(support, options.seed);
    witness = {{"pattern", "twisted"}, {"seed", options.seed}};
    const ZChecks plain = z_checks(dc, encoding_pattern(dc, support), depth);
    witness["left_translation_encoding"] = {{"z0", plain.z0}, {"z2", plain.z2}, {"note", plain.note}};
  }
  witness["cells"] = support->size();

  std::optional<ZChecks> checks;
  report.run("z0", [&](json& d) {
    checks = z_checks(dc, x, depth);
    d = witness;
    d["preimages_a"] = checks->preimages_a;
    d["preimages_b"] = checks->preimages_b;
    return checks->z0;
  });
  report.run("z2 to depth " + std::to_string(depth), [&](json& d) {
    d["words_checked"] = checks->words_checked;
    if (checks->fixing_word) d["fixing_word"] = checks->fixing_word->to_string();
    if (!checks->note.empty()) d["note"] = checks->note;
    return checks->z2;
  });
  report.run("z1 on every covered translate", [&](json& d) {
    const Z1Certificate cert = z1_certificate(dc, x);
    d["translates_checked"] = cert.translates_checked;
    d["failures"] = words_json(cert.failures);
    return cert.passed() && cert.translates_checked > 0;
  });
  report.run("local z0 count = preimage search", [&](json& d) {
    std::mt19937_64 rng(options.seed);
    const SupportPtr small = Support::make(required_cells(dc, 2));
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Pattern y = random_symbols(rng, dc.alphabet(), small);
      for (Move m : {Move::a, Move::b}) {
        if (preimage_count(dc, m, y) != preimage_count_by_search(dc, m, y)) {
          d["counterexample"] = pattern_to_json(y);
          return false;
        }
      }
    }
    d["patterns"] = samples;
    return true;
  });
  report.run("T-moves are shifts by S", [&](json& d) {
    std::mt19937_64 rng(options.seed ^ 0x54ULL);
    const SupportPtr small = Support::make(required_cells(dc, 2));
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Pattern y = random_symbols(rng, dc.alphabet(), small);
      for (Move m : {Move::a, Move::b}) {
        const Pattern moved = t_map(dc, m, y);
        const bool in_s = std::any_of(dc.S.begin(), dc.S.end(), [&](const Word& s) { return moved == shift(s, y); });
        if (!in_s) {
          d["counterexample"] = pattern_to_json(y);
          return false;
        }
      }
    }
    d["patterns"] = samples;
    return true;
  });
  return report;
}

Report kernel_checks(Report report, const Options& options, int default_radius, bool brute, bool list) {
  const int radius = positive(options.radius, default_radius, "--radius", 0, max_exhaustive_radius());
  const int levels = positive(options.levels, 2, "--levels", 1, 16);
  const KernelGroup group = kernel_group(radius, levels);
  const std::vector<KernelWindow> elements = group.elements();
  std::set<std::vector<Symbol>> members;
  for (const KernelWindow& k : elements) members.insert(k.pattern().values());

  report.run("count", [&](json& d) {
    d["radius"] = radius;
    d["levels"] = levels;
    d["dimension"] = group.dimension();
    d["count"] = elements.size();
    if (list && elements.size() <= 256) {
      json rows = json::array();
      for (const auto& values : members) {
        std::string row;
        for (Symbol v : values) row.push_back(static_cast<char>('0' + v));
        rows.push_back(row);
      }
      d["cells"] = words_json(group.window()->cells());
      d["elements"] = std::move(rows);
    }
    return members.size() == elements.size() && elements.size() == (std::size_t{1} << group.dimension());
  });
  if (brute) {
    const SupportPtr window = group.window();
    if (window->size() > 20) {
      report.skip("count by exhaustive search", "window has " + std::to_string(window->size()) + " cells");
    } else {
      report.run("count by exhaustive search", [&](json& d) {
        std::uint64_t count = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << window->size()); ++bits) {
          const TowerOutput y = tower_map(bits_from_mask(window, bits), levels);
          if (std::all_of(y.levels.begin(), y.levels.end(), [](const Pattern& p) { return p.all_equal(0); })) ++count;
        }
        d["count"] = count;
        return count == elements.size();
      });
    }
  }
  report.run("closed under xor", [&](json& d) {
    for (const KernelWindow& k : elements) {
      for (std::size_t i = 0; i < group.dimension(); ++i) {
        if (!members.contains((k.pattern() ^ group.basis_pattern(i)).values())) return false;
      }
    }
    d["generators"] = group.dimension();
    return true;
  });
  report.run("contains zero and all-ones", [&](json&) {
    const std::size_t cells = group.window()->size();
    return members.contains(std::vector<Symbol>(cells, 0)) && members.contains(std::vector<Symbol>(cells, 1));
  });
  if (brute) {
    report.run("shift invariance, |f| <= 1", [&](json& d) {
      std::uint64_t checked = 0;
      for (const KernelWindow& k : elements) {
        for (const Word& f : ball(1)) {
          if (!KernelWindow::is_kernel(shift(f, k.pattern()), levels)) return false;
          ++checked;
        }
      }
      d["checked"] = checked;
      return true;
    });
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ow-fibers", "ow-equivariance", "cocycles", "transversal",
                                              "pipeline",  "doubling",        "kernel-group"};
  return names;
}

Report verify(const std::string& suite, const LoadedConfig& config, const Options& options) {
  Report report;
  report.command = "verify " + suite;
  report.config_digest = config_digest(config.canonical);
  report.seed = options.seed;
  if (suite == "ow-fibers") return ow_fibers(std::move(report), options);
  if (suite == "ow-equivariance") return ow_equivariance(std::move(report), options);
  if (suite == "cocycles") return cocycles(std::move(report), config, options);
  if (suite == "transversal") return transversal_suite(std::move(report), config, options);
  if (suite == "pipeline") return pipeline(std::move(report), config, options);
  if (suite == "doubling") return doubling(std::move(report), config, options);
  if (suite == "kernel-group") return kernel_checks(std::move(report), options, 2, true, false);
  throw UsageError("unknown suite '" + suite + "'");
}

Report kernel(const LoadedConfig& config, const Options& options) {
  Report report;
  report.command = "kernel";
  report.config_digest = config_digest(config.canonical);
  return kernel_checks(std::move(report), options, 1, false, true);
}

json dump(const std::string& table, const LoadedConfig& config, const Options& options) {
  const Coinduction co{config.coinduction};
  const ZPoint z = co.base_point();
  json out = json::array();
  if (table == "transversal") {
    for (const Word& c : co.transversal(options.count.value_or(12), z)) out.push_back(c.to_string());
    return out;
  }
  if (table != "delta" && table != "gamma") throw UsageError("unknown table '" + table + "'");
  const int radius = positive(options.radius, 1, "--radius", 0, 4);
  const std::size_t count = options.count.value_or(8);
  for (const Word& g : ball(radius)) {
    for (std::size_t n = 0; n < count; ++n) {
      const auto step = co.step(g, n, z);
      if (table == "delta") {
        out.push_back({{"g", g.to_string()}, {"n", n}, {"k", step.k}});
      } else {
        out.push_back({{"g", g.to_string()}, {"n", n}, {"u", step.u.to_string()}});
      }
    }
  }
  return out;
}

}  // namespace owf::cli
