//! Self-checking verification suites behind `homlab verify`.
//!
//! Each suite evaluates a list of named claims on deterministic corpora and
//! reports, per claim, how many instances were checked and how many violated
//! it. A suite that runs out of wall-clock budget stops early and marks the
//! report incomplete.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, dense_g0_sequence, random_graph, random_label_table, random_regular_colored, raw_graphs};
use crate::error::{Error, Result};
use crate::games::{derived_coloring, game_winner, solve_game, verify_strategy, GameSpec, Player};
use crate::graph::{
    categorical_product, g0_truncation, h_delta, named_graph, tree_ball, FiniteGraph, NamedGraph, Target,
};
use crate::homgraph::{analyze, build_hom_approx};
use crate::solve::{
    chromatic_number, delta_star, edge_grabbing_from_orientation, check_anti_game, find_hom, hedetniemi_gap,
    sinkless_orientation, theta_hom, verify_hom, DeltaStarWitness,
};

/// The PRNG used by every randomized corpus.
pub const PRNG: &str = "ChaCha8 (rand_chacha), seeded with seed_from_u64";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Prop53,
    Sandwich,
    Homgraph,
    Games,
    Orientation,
    Hedetniemi,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "prop53",
        "sandwich",
        "homgraph",
        "games",
        "orientation",
        "hedetniemi",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "prop53" => Suite::Prop53,
            "sandwich" => Suite::Sandwich,
            "homgraph" => Suite::Homgraph,
            "games" => Suite::Games,
            "orientation" => Suite::Orientation,
            "hedetniemi" => Suite::Hedetniemi,
            "all" => Suite::All,
            _ => return Err(Error::Precondition(format!("unknown suite `{s}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Prop53,
            Suite::Sandwich,
            Suite::Homgraph,
            Suite::Games,
            Suite::Orientation,
            Suite::Hedetniemi,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// Corpus sizes and the wall-clock cap.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    #[default]
    Small,
    Medium,
    Large,
}

impl FromStr for Budget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Budget::Small),
            "medium" => Ok(Budget::Medium),
            "large" => Ok(Budget::Large),
            _ => Err(Error::Precondition(format!("unknown budget `{s}`"))),
        }
    }
}

impl Budget {
    pub fn wall_limit(self) -> Duration {
        Duration::from_secs(match self {
            Budget::Small => 60,
            Budget::Medium => 600,
            Budget::Large => 3600,
        })
    }

    fn pick<T>(self, small: T, medium: T, large: T) -> T {
        match self {
            Budget::Small => small,
            Budget::Medium => medium,
            Budget::Large => large,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// `None` runs each suite's default range of `Δ`.
    pub delta: Option<usize>,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            delta: None,
            seed: 0,
            budget: Budget::Small,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub checked: usize,
    pub violations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
}

impl Claim {
    fn new(id: &str, statement: impl Into<String>) -> Self {
        Claim {
            id: id.to_string(),
            statement: statement.into(),
            checked: 0,
            violations: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.checked > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub prng: String,
    pub claims: Vec<Claim>,
    pub incomplete: bool,
    pub passed: bool,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} seed {} budget {:?} delta {}",
            self.suite,
            self.config.seed,
            self.config.budget,
            self.config.delta.map_or("default".to_string(), |d| d.to_string())
        )?;
        writeln!(f, "prng {}", self.prng)?;
        for c in &self.claims {
            writeln!(
                f,
                "{} {} ({} checked, {} violations): {}",
                if c.passed() { "PASS" } else { "FAIL" },
                c.id,
                c.checked,
                c.violations,
                c.statement
            )?;
            if let Some(v) = &c.first_violation {
                writeln!(f, "  first violation: {v}")?;
            }
        }
        if self.incomplete {
            writeln!(f, "INCOMPLETE: wall-clock budget exhausted")?;
        }
        writeln!(f, "{}", if self.passed { "ALL PASS" } else { "FAILED" })
    }
}

struct Clock {
    deadline: Instant,
    expired: bool,
}

impl Clock {
    fn out(&mut self) -> bool {
        self.expired |= Instant::now() > self.deadline;
        self.expired
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<Report> {
    let mut clock = Clock {
        deadline: Instant::now() + config.budget.wall_limit(),
        expired: false,
    };
    let mut claims = Vec::new();
    let parts = match suite {
        Suite::All => vec![
            Suite::Prop53,
            Suite::Sandwich,
            Suite::Homgraph,
            Suite::Games,
            Suite::Orientation,
            Suite::Hedetniemi,
        ],
        s => vec![s],
    };
    for part in parts {
        if clock.out() {
            break;
        }
        let mut new = match part {
            Suite::Prop53 => prop53(config, &mut clock)?,
            Suite::Sandwich => sandwich(config, &mut clock)?,
            Suite::Homgraph => homgraph(config, &mut clock)?,
            Suite::Games => games(config, &mut clock)?,
            Suite::Orientation => orientation(config, &mut clock)?,
            Suite::Hedetniemi => hedetniemi(config, &mut clock)?,
            Suite::All => unreachable!(),
        };
        claims.append(&mut new);
    }
    let incomplete = clock.expired;
    let passed = !incomplete && claims.iter().all(Claim::passed);
    Ok(Report {
        suite,
        config: config.clone(),
        prng: PRNG.to_string(),
        claims,
        incomplete,
        passed,
    })
}

fn deltas(config: &VerifyConfig, default: &[usize]) -> Vec<usize> {
    config.delta.map_or_else(|| default.to_vec(), |d| vec![d])
}

fn prop53(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut chi = Claim::new("hdelta-chromatic-number", "chi(H_delta) = 2*delta - 2");
    let mut witness = Claim::new(
        "hdelta-canonical-witness",
        "R0 = V0 + dagger, R1 = V1 + dagger is a delta-(*) witness for H_delta",
    );
    let mut equiv = Claim::new(
        "delta-star-iff-hom-to-hdelta",
        "a small graph has delta-(*) iff it maps homomorphically into H_delta",
    );
    let mut theta = Claim::new(
        "theta-is-a-homomorphism",
        "the map built from a delta-(*) witness is a homomorphism into H_delta",
    );
    let mut named = Claim::new(
        "chvatal-grotzsch-3-star",
        "the Chvatal and Grotzsch graphs satisfy 3-(*)",
    );
    let max_n = config.budget.pick(5, 6, 6);
    for delta in deltas(config, &[3, 4, 5]) {
        let h = h_delta(delta)?;
        let c = chromatic_number(&h.graph)?;
        chi.record(c.num_colors == 2 * delta - 2, || {
            format!("delta {delta}: chi = {}", c.num_colors)
        });
        let (r0, r1) = h.canonical_r0_r1();
        let ok = DeltaStarWitness::from_sets(&h.graph, delta, &r0, &r1)
            .and_then(|w| w.verify(&h.graph, delta))
            .is_ok();
        witness.record(ok, || format!("delta {delta}: canonical witness rejected"));
        for n in 1..=max_n {
            for g in raw_graphs(n) {
                if clock.out() {
                    return Ok(vec![chi, witness, equiv, theta, named]);
                }
                let w = delta_star(&g, delta)?;
                let hom = find_hom(&g, &h.graph);
                equiv.record(w.is_some() == hom.is_some(), || {
                    format!("delta {delta}: {g:?}: delta-star {} hom {}", w.is_some(), hom.is_some())
                });
                if let Some(w) = w {
                    let ok = theta_hom(&g, &w, delta).is_ok_and(|t| verify_hom(&g, &h.graph, &t.map));
                    theta.record(ok, || format!("delta {delta}: {g:?}"));
                }
            }
        }
    }
    let h3 = h_delta(3)?;
    for name in [NamedGraph::Chvatal, NamedGraph::Grotzsch] {
        let g = named_graph(name)?;
        let ok = match delta_star(&g, 3)? {
            Some(w) => theta_hom(&g, &w, 3).is_ok_and(|t| verify_hom(&g, &h3.graph, &t.map)),
            None => false,
        };
        named.record(ok, || format!("{name}: no verified 3-(*) witness"));
    }
    Ok(vec![chi, witness, equiv, theta, named])
}

fn sandwich(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut lower = Claim::new(
        "chi-le-delta-implies-delta-star",
        "chi(H) <= delta implies delta-(*)",
    );
    let mut upper = Claim::new(
        "delta-star-implies-chi-le-2delta-2",
        "delta-(*) implies chi(H) <= 2*delta - 2",
    );
    let count = config.budget.pick(50, 200, 1000);
    for delta in deltas(config, &[3, 4]) {
        let mut rng = corpus::rng(config.seed ^ (delta as u64) << 32);
        for k in 0..count {
            if clock.out() {
                return Ok(vec![lower, upper]);
            }
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(n, p, &mut rng);
            let chi = chromatic_number(&g)?.num_colors;
            let star = delta_star(&g, delta)?.is_some();
            if chi <= delta {
                lower.record(star, || format!("delta {delta} graph {k}: chi {chi} without delta-(*)"));
            }
            if star {
                upper.record(chi <= 2 * delta - 2, || {
                    format!("delta {delta} graph {k}: delta-(*) with chi {chi}")
                });
            }
        }
    }
    Ok(vec![lower, upper])
}

fn homgraph(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut cycles = Claim::new(
        "label-preserving-no-short-cycles",
        "the depth-2 label-preserving approximation over an acyclic target has no cycle of length <= 4",
    );
    let mut edges = Claim::new(
        "root-map-edge-preserving",
        "adjacent homomorphisms have adjacent root images",
    );
    let mut inj = Claim::new(
        "root-map-injective-per-component",
        "on each component of the label-preserving approximation the root map is injective",
    );
    let mut hom_inj = Claim::new(
        "ball-homs-injective",
        "label-preserving ball homomorphisms into an acyclic target are injective",
    );
    let mut shift = Claim::new(
        "shift-unique",
        "every homomorphism has at most one neighbor per generator",
    );
    let count = config.budget.pick(10, 20, 40);
    for delta in deltas(config, &[3]) {
        let mut rng = corpus::rng(config.seed ^ 0x6730 ^ (delta as u64) << 32);
        for k in 0..count {
            if clock.out() {
                return Ok(vec![cycles, edges, inj, hom_inj, shift]);
            }
            let depth = rng.gen_range(delta..=8.max(delta));
            let seq = dense_g0_sequence(delta, depth, &mut rng);
            let g = g0_truncation(delta, depth, &seq)?;
            let a = build_hom_approx(delta, 2, Target::Labeled(&g.graph), true)?;
            let r = analyze(&a);
            let tag = || format!("delta {delta} target {k} (g0 depth {depth})");
            cycles.record(r.shortest_cycle.is_none_or(|c| c > 4), tag);
            edges.record(r.root_map_edge_preserving, tag);
            inj.record(r.root_injective_per_component, tag);
            hom_inj.record(r.all_homs_injective, tag);
            let branching = r.branching_vertices;
            shift.record(branching == 0, || format!("{}: {branching} branching vertices", tag()));
        }
    }
    Ok(vec![cycles, edges, inj, hom_inj, shift])
}

/// Graphs on `1..=3` vertices without isolated vertices (raw enumeration).
fn small_game_targets() -> Vec<FiniteGraph> {
    (1..=3)
        .flat_map(raw_graphs)
        .filter(|g| (0..g.vertex_count()).all(|v| g.degree(v) > 0))
        .collect()
}

fn games(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut some_bob = Claim::new(
        "bob-wins-some-index",
        "for codomain-delta labelings every root has an index i where Bob wins G(x, i)",
    );
    let mut mono = Claim::new(
        "payoff-monotonicity",
        "if Alice wins G(x, i, R') and R is a subset of R' then Alice wins G(x, i, R)",
    );
    let mut sound = Claim::new(
        "strategy-soundness",
        "extracted strategies win against every opposing play",
    );
    let tables = config.budget.pick(10, 100, 200);
    let max_depth = config.budget.pick(1, 2, 2);
    for delta in deltas(config, &[3]) {
        let mut rng = corpus::rng(config.seed ^ 0x9a3e ^ (delta as u64) << 32);
        for target in small_game_targets() {
            let t = Target::Plain(&target);
            for depth in 1..=max_depth {
                let ball = tree_ball(delta, depth)?;
                for k in 0..tables {
                    if clock.out() {
                        return Ok(vec![some_bob, mono, sound]);
                    }
                    let table = random_label_table(&ball, t, delta, &mut rng);
                    let d = derived_coloring(t, delta, depth, &table)?;
                    some_bob.record(d.iter().all(Option::is_some), || {
                        format!("delta {delta} {target:?} depth {depth} table {k}: {d:?}")
                    });
                    for x in 0..target.vertex_count() {
                        for i in 1..=delta {
                            let mut alice = BTreeSet::new();
                            for mask in 0u32..1 << delta {
                                let payoff = crate::games::mask_to_set(mask);
                                let spec = GameSpec {
                                    target: t,
                                    delta,
                                    x,
                                    i,
                                    payoff: &payoff,
                                    depth,
                                    labeling: &table,
                                };
                                if game_winner(&spec)? == Player::Alice {
                                    alice.insert(mask);
                                }
                            }
                            for &big in &alice {
                                for small in 0u32..1 << delta {
                                    if small & big == small {
                                        mono.record(alice.contains(&small), || {
                                            format!("table {k} x {x} i {i}: R {small:b} within R' {big:b}")
                                        });
                                    }
                                }
                            }
                            let payoff = BTreeSet::from([i]);
                            let spec = GameSpec {
                                target: t,
                                delta,
                                x,
                                i,
                                payoff: &payoff,
                                depth,
                                labeling: &table,
                            };
                            let out = solve_game(&spec)?;
                            sound.record(verify_strategy(&spec, &out.strategy)?, || {
                                format!("table {k} x {x} i {i}")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(vec![some_bob, mono, sound])
}

fn orientation(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut sinkless = Claim::new(
        "sinkless-orientation-exists",
        "every regular properly edge-colored graph has a sinkless orientation",
    );
    let mut grab = Claim::new(
        "edge-grabbing-is-anti-game",
        "edge grabbing from a sinkless orientation is an anti-game labeling",
    );
    let count = config.budget.pick(50, 200, 1000);
    for delta in deltas(config, &[3]) {
        let mut rng = corpus::rng(config.seed ^ 0x5111 ^ (delta as u64) << 32);
        for k in 0..count {
            if clock.out() {
                return Ok(vec![sinkless, grab]);
            }
            let lo = (delta + 1).div_ceil(2);
            let n = 2 * rng.gen_range(lo..=10);
            let Some(g) = random_regular_colored(n, delta, &mut rng) else {
                continue;
            };
            let o = sinkless_orientation(g.graph());
            sinkless.record(o.is_some(), || format!("graph {k} on {n} vertices"));
            if let Some(o) = o {
                let ok = edge_grabbing_from_orientation(&g, &o).is_ok_and(|l| check_anti_game(&g, &l.labels));
                grab.record(ok, || format!("graph {k} on {n} vertices"));
            }
        }
    }
    Ok(vec![sinkless, grab])
}

fn hedetniemi(config: &VerifyConfig, clock: &mut Clock) -> Result<Vec<Claim>> {
    let mut bound = Claim::new(
        "product-chromatic-bound",
        "chi(G x H) <= min(chi(G), chi(H))",
    );
    let count = config.budget.pick(30, 100, 400);
    let mut rng = corpus::rng(config.seed ^ 0x4ed7);
    for k in 0..count {
        if clock.out() {
            return Ok(vec![bound]);
        }
        let g = random_graph(rng.gen_range(1..=8), rng.gen_range(0.2..0.9), &mut rng);
        let h = random_graph(rng.gen_range(1..=8), rng.gen_range(0.2..0.9), &mut rng);
        let gap = hedetniemi_gap(&g, &h)?;
        bound.record(gap.chi_product <= gap.chi_g.min(gap.chi_h), || {
            format!("pair {k}: {gap:?}")
        });
        debug_assert_eq!(
            categorical_product(&g, &h).vertex_count(),
            g.vertex_count() * h.vertex_count()
        );
    }
    Ok(vec![bound])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig {
            delta: Some(3),
            seed: 1,
            budget: Budget::Small,
        };
        for suite in [Suite::Sandwich, Suite::Orientation, Suite::Hedetniemi] {
            let r = run_suite(suite, &cfg).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn homgraph_suite_reports_every_claim() {
        let r = run_suite(Suite::Homgraph, &VerifyConfig::default()).unwrap();
        assert_eq!(r.claims.len(), 5);
        assert!(r.claims.iter().all(|c| c.checked == 10));
        let edges = r.claims.iter().find(|c| c.id == "root-map-edge-preserving").unwrap();
        assert!(edges.passed());
    }

    #[test]
    fn names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("medium".parse::<Budget>().unwrap(), Budget::Medium);
    }
}
