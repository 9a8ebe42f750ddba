//! Finite-depth games `𝔾(x, i, R)` on ball homomorphisms.
//!
//! Two players build a homomorphism from the radius-`d` tree ball into a
//! target, rooted at `x`, one level per round. In round `k` Alice first labels
//! the level-`k` words that start with `α_i`, then Bob labels the rest of level
//! `k`. Alice wins iff the caller's labeling of the finished homomorphism lies
//! outside `R`. The plain game `𝔾(x, i)` is `R = {i}`.
//!
//! Positions are image vectors indexed like [`TreeBall`] with `usize::MAX`
//! for unlabeled vertices. A position determines the move history, so it is
//! its own canonical form.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{tree_ball, Target, TargetGraph, TreeBall};
use crate::homgraph::{enumerate_ball_homs, BallHom};
use crate::io::GraphJson;

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

/// A coloring `c` of depth-`d` ball homomorphisms. `None` marks a
/// homomorphism the labeling does not cover.
pub trait Labeling: Sync {
    fn label(&self, h: &[usize]) -> Option<usize>;
}

/// A labeling given as an explicit table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelTable {
    pub table: HashMap<BallHom, usize>,
}

impl Labeling for LabelTable {
    fn label(&self, h: &[usize]) -> Option<usize> {
        self.table.get(h).copied()
    }
}

impl LabelTable {
    /// Tabulates `f` on every homomorphism of `ball` into `target`.
    pub fn tabulate(ball: &TreeBall, target: Target, f: impl Fn(&[usize]) -> usize) -> Self {
        let table = enumerate_ball_homs(ball, target, None)
            .into_iter()
            .map(|h| {
                let c = f(&h);
                (h, c)
            })
            .collect();
        LabelTable { table }
    }
}

/// A labeling given by a closure.
pub struct FnLabeling<F>(pub F);

impl<F: Fn(&[usize]) -> usize + Sync> Labeling for FnLabeling<F> {
    fn label(&self, h: &[usize]) -> Option<usize> {
        Some((self.0)(h))
    }
}

/// One game `𝔾(x, i, R)`.
#[derive(Clone, Copy)]
pub struct GameSpec<'a> {
    pub target: Target<'a>,
    pub delta: usize,
    pub x: usize,
    pub i: usize,
    pub payoff: &'a BTreeSet<usize>,
    pub depth: usize,
    pub labeling: &'a dyn Labeling,
}

impl fmt::Debug for GameSpec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameSpec")
            .field("delta", &self.delta)
            .field("x", &self.x)
            .field("i", &self.i)
            .field("payoff", &self.payoff)
            .field("depth", &self.depth)
            .finish_non_exhaustive()
    }
}

/// A winning or candidate strategy: the mover's images for its next vertex
/// list, keyed by position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "StrategyFile", from = "StrategyFile")]
pub struct Strategy {
    pub player: Player,
    pub table: BTreeMap<Vec<usize>, Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct StrategyFile {
    player: Player,
    entries: Vec<StrategyEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct StrategyEntry {
    position: Vec<Option<usize>>,
    #[serde(rename = "move")]
    mv: Vec<usize>,
}

impl From<Strategy> for StrategyFile {
    fn from(s: Strategy) -> Self {
        StrategyFile {
            player: s.player,
            entries: s
                .table
                .into_iter()
                .map(|(pos, mv)| StrategyEntry {
                    position: pos.into_iter().map(|y| (y != UNSET).then_some(y)).collect(),
                    mv,
                })
                .collect(),
        }
    }
}

impl From<StrategyFile> for Strategy {
    fn from(f: StrategyFile) -> Self {
        Strategy {
            player: f.player,
            table: f
                .entries
                .into_iter()
                .map(|e| (e.position.into_iter().map(|y| y.unwrap_or(UNSET)).collect(), e.mv))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOutcome {
    pub winner: Player,
    pub strategy: Strategy,
}

/// The move structure of one game, shared by the solver and replayers.
pub struct Game<'a> {
    spec: GameSpec<'a>,
    ball: TreeBall,
    turns: Vec<Vec<usize>>,
}

impl<'a> Game<'a> {
    pub fn new(spec: GameSpec<'a>) -> Result<Self> {
        let n = spec.target.vertex_count();
        if spec.x >= n {
            return Err(Error::VertexOutOfRange { vertex: spec.x, n });
        }
        if !(1..=spec.delta).contains(&spec.i) {
            return Err(Error::LabelOutOfRange {
                label: spec.i,
                delta: spec.delta,
            });
        }
        if spec.depth == 0 {
            return Err(Error::Precondition("game depth must be at least 1".into()));
        }
        spec.target.check_delta(spec.delta)?;
        let ball = tree_ball(spec.delta, spec.depth)?;
        let mut turns = Vec::with_capacity(2 * spec.depth);
        for k in 1..=spec.depth {
            let (alice, bob): (Vec<usize>, Vec<usize>) =
                ball.level(k).partition(|&v| ball.first_letter(v) == Some(spec.i));
            turns.push(alice);
            turns.push(bob);
        }
        let game = Game { spec, ball, turns };
        game.check_live()?;
        Ok(game)
    }

    pub fn spec(&self) -> &GameSpec<'a> {
        &self.spec
    }

    pub fn ball(&self) -> &TreeBall {
        &self.ball
    }

    pub fn turn_count(&self) -> usize {
        self.turns.len()
    }

    pub fn turn_vertices(&self, t: usize) -> &[usize] {
        &self.turns[t]
    }

    pub fn mover(t: usize) -> Player {
        if t.is_multiple_of(2) {
            Player::Alice
        } else {
            Player::Bob
        }
    }

    pub fn start(&self) -> Vec<usize> {
        let mut pos = vec![UNSET; self.ball.len()];
        pos[0] = self.spec.x;
        pos
    }

    /// The number of completed turns in `pos`.
    pub fn turn_of(&self, pos: &[usize]) -> usize {
        self.turns
            .iter()
            .position(|vs| vs.iter().any(|&v| pos[v] == UNSET))
            .unwrap_or(self.turns.len())
    }

    /// Every reachable tree vertex must be able to continue along each
    /// generator other than the one it came in on.
    fn check_live(&self) -> Result<()> {
        let t = self.spec.target;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([(self.spec.x, 0usize, 0usize, 0usize)]);
        while let Some((y, incoming, level, v)) = queue.pop_front() {
            if level == self.spec.depth || !seen.insert((y, incoming, level)) {
                continue;
            }
            for a in (1..=self.spec.delta).filter(|&a| a != incoming) {
                let cands = t.candidates(y, a);
                let child = self.ball.child(v, a).expect("child inside ball");
                if cands.is_empty() {
                    return Err(Error::DeadPosition {
                        word: self.ball.word_string(child),
                        parent_image: y,
                    });
                }
                for z in cands {
                    queue.push_back((z, a, level + 1, child));
                }
            }
        }
        Ok(())
    }

    /// Legal moves at turn `t`, in lexicographic order.
    pub fn moves(&self, pos: &[usize], t: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &v in &self.turns[t] {
            let p = self.ball.parent(v).unwrap();
            let cands = self
                .spec
                .target
                .candidates(pos[p], self.ball.last_letter(v).unwrap());
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    cands.iter().map(move |y| {
                        let mut m = prefix.clone();
                        m.push(y);
                        m
                    })
                })
                .collect();
        }
        out
    }

    pub fn is_legal(&self, pos: &[usize], t: usize, mv: &[usize]) -> bool {
        let vs = &self.turns[t];
        mv.len() == vs.len()
            && vs.iter().zip(mv).all(|(&v, &y)| {
                let p = self.ball.parent(v).unwrap();
                y < self.spec.target.vertex_count()
                    && self
                        .spec
                        .target
                        .candidates(pos[p], self.ball.last_letter(v).unwrap())
                        .contains(y)
            })
    }

    pub fn apply(&self, pos: &[usize], t: usize, mv: &[usize]) -> Vec<usize> {
        let mut next = pos.to_vec();
        for (&v, &y) in self.turns[t].iter().zip(mv) {
            next[v] = y;
        }
        next
    }

    /// The labeling of a finished homomorphism.
    pub fn color(&self, h: &[usize]) -> Result<usize> {
        self.spec
            .labeling
            .label(h)
            .ok_or_else(|| Error::LabelingNotTotal(h.to_vec()))
    }

    pub fn alice_wins_final(&self, h: &[usize]) -> Result<bool> {
        Ok(!self.spec.payoff.contains(&self.color(h)?))
    }

    fn value(&self, pos: &[usize], t: usize, memo: &mut HashMap<Vec<usize>, bool>) -> Result<bool> {
        if t == self.turns.len() {
            return self.alice_wins_final(pos);
        }
        let cache = t + 1 < self.turns.len();
        if cache {
            if let Some(&v) = memo.get(pos) {
                return Ok(v);
            }
        }
        let want = Game::mover(t) == Player::Alice;
        let mut result = !want;
        for mv in self.moves(pos, t) {
            if self.value(&self.apply(pos, t, &mv), t + 1, memo)? == want {
                result = want;
                break;
            }
        }
        if cache {
            memo.insert(pos.to_vec(), result);
        }
        Ok(result)
    }

    pub fn winner(&self) -> Result<Player> {
        let mut memo = HashMap::new();
        Ok(if self.value(&self.start(), 0, &mut memo)? {
            Player::Alice
        } else {
            Player::Bob
        })
    }

    pub fn solve(&self) -> Result<GameOutcome> {
        let mut memo = HashMap::new();
        let start = self.start();
        let winner = if self.value(&start, 0, &mut memo)? {
            Player::Alice
        } else {
            Player::Bob
        };
        let mut table = BTreeMap::new();
        self.extract(&start, 0, winner, &mut memo, &mut table)?;
        Ok(GameOutcome {
            winner,
            strategy: Strategy {
                player: winner,
                table,
            },
        })
    }

    fn extract(
        &self,
        pos: &[usize],
        t: usize,
        winner: Player,
        memo: &mut HashMap<Vec<usize>, bool>,
        table: &mut BTreeMap<Vec<usize>, Vec<usize>>,
    ) -> Result<()> {
        if t == self.turns.len() {
            return Ok(());
        }
        let alice_target = winner == Player::Alice;
        if Game::mover(t) == winner {
            for mv in self.moves(pos, t) {
                let next = self.apply(pos, t, &mv);
                if self.value(&next, t + 1, memo)? == alice_target {
                    table.insert(pos.to_vec(), mv);
                    return self.extract(&next, t + 1, winner, memo, table);
                }
            }
            unreachable!("winner has a winning move");
        }
        for mv in self.moves(pos, t) {
            self.extract(&self.apply(pos, t, &mv), t + 1, winner, memo, table)?;
        }
        Ok(())
    }

    /// Whether `strategy` wins against every opposing sequence of moves.
    /// Missing or illegal entries count as a loss.
    pub fn verify_strategy(&self, strategy: &Strategy) -> Result<bool> {
        self.replay(&self.start(), 0, strategy)
    }

    fn replay(&self, pos: &[usize], t: usize, s: &Strategy) -> Result<bool> {
        if t == self.turns.len() {
            return Ok(self.alice_wins_final(pos)? == (s.player == Player::Alice));
        }
        if Game::mover(t) == s.player {
            match s.table.get(pos) {
                Some(mv) if self.is_legal(pos, t, mv) => self.replay(&self.apply(pos, t, mv), t + 1, s),
                _ => Ok(false),
            }
        } else {
            for mv in self.moves(pos, t) {
                if !self.replay(&self.apply(pos, t, &mv), t + 1, s)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }

    /// The strategy that always plays the first legal move.
    pub fn naive_strategy(&self, player: Player) -> Strategy {
        let mut table = BTreeMap::new();
        self.naive_fill(&self.start(), 0, player, &mut table);
        Strategy { player, table }
    }

    fn naive_fill(&self, pos: &[usize], t: usize, player: Player, table: &mut BTreeMap<Vec<usize>, Vec<usize>>) {
        if t == self.turns.len() {
            return;
        }
        let moves = self.moves(pos, t);
        if Game::mover(t) == player {
            let mv = moves.into_iter().next().expect("live game has a move");
            let next = self.apply(pos, t, &mv);
            table.insert(pos.to_vec(), mv);
            self.naive_fill(&next, t + 1, player, table);
        } else {
            for mv in moves {
                self.naive_fill(&self.apply(pos, t, &mv), t + 1, player, table);
            }
        }
    }

    /// Plays two strategies against each other and records every move.
    pub fn play(&self, alice: &Strategy, bob: &Strategy) -> Result<Trace> {
        let mut pos = self.start();
        let mut steps = Vec::with_capacity(self.turns.len());
        for t in 0..self.turns.len() {
            let mover = Game::mover(t);
            let s = if mover == Player::Alice { alice } else { bob };
            let mv = s
                .table
                .get(&pos)
                .filter(|mv| self.is_legal(&pos, t, mv))
                .ok_or_else(|| Error::StrategyFailed {
                    index: t,
                    reason: format!("{mover} has no legal entry for the position"),
                })?
                .clone();
            steps.push(TraceStep {
                round: t / 2 + 1,
                mover,
                vertices: self.turns[t].iter().map(|&v| self.ball.word_string(v)).collect(),
                images: mv.clone(),
            });
            pos = self.apply(&pos, t, &mv);
        }
        let color = self.color(&pos)?;
        Ok(Trace {
            steps,
            color,
            winner: if self.spec.payoff.contains(&color) {
                Player::Bob
            } else {
                Player::Alice
            },
            hom: pos,
        })
    }
}

pub fn solve_game(spec: &GameSpec) -> Result<GameOutcome> {
    Game::new(*spec)?.solve()
}

/// The winner only; cheaper than [`solve_game`].
pub fn game_winner(spec: &GameSpec) -> Result<Player> {
    Game::new(*spec)?.winner()
}

pub fn verify_strategy(spec: &GameSpec, strategy: &Strategy) -> Result<bool> {
    Game::new(*spec)?.verify_strategy(strategy)
}

pub fn naive_strategy(spec: &GameSpec, player: Player) -> Result<Strategy> {
    Ok(Game::new(*spec)?.naive_strategy(player))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub round: usize,
    pub mover: Player,
    pub vertices: Vec<String>,
    pub images: Vec<usize>,
}

/// A complete play, for replay and debugging.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    pub hom: Vec<usize>,
    pub color: usize,
    pub winner: Player,
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let pairs: Vec<String> = s
                .vertices
                .iter()
                .zip(&s.images)
                .map(|(w, y)| format!("{w}->{y}"))
                .collect();
            writeln!(f, "round {} {}: {}", s.round, s.mover, pairs.join(" "))?;
        }
        writeln!(f, "color {} winner {}", self.color, self.winner)
    }
}

/// Composes Alice-winning strategies for `𝔾(x, 1, R_1) .. 𝔾(x, Δ, R_Δ)` into
/// one homomorphism `h` with `c(h) ∉ R_i` for every `i`.
///
/// `specs[k]` must be the game for generator `k + 1`. Each strategy plays the
/// `α_i` side of the shared ball; the other players' moves are exactly what
/// the opponent in game `i` sees.
pub fn stitch_alice(specs: &[GameSpec], strategies: &[Strategy]) -> Result<BallHom> {
    let first = specs
        .first()
        .ok_or_else(|| Error::Precondition("no games to stitch".into()))?;
    let delta = first.delta;
    if specs.len() != delta || strategies.len() != delta {
        return Err(Error::Precondition(format!(
            "stitching needs exactly {delta} games and strategies"
        )));
    }
    let games = specs
        .iter()
        .enumerate()
        .map(|(k, s)| {
            if s.i != k + 1 || s.x != first.x || s.depth != first.depth || s.delta != delta {
                return Err(Error::Precondition(format!(
                    "game {k} must use generator {} with the shared root and depth",
                    k + 1
                )));
            }
            Game::new(*s)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(k) = strategies.iter().position(|s| s.player != Player::Alice) {
        return Err(Error::StrategyFailed {
            index: k + 1,
            reason: "not an Alice strategy".into(),
        });
    }
    let mut h = games[0].start();
    for round in 0..first.depth {
        let t = 2 * round;
        let mut next = h.clone();
        for (k, (g, s)) in games.iter().zip(strategies).enumerate() {
            let mv = s
                .table
                .get(&h)
                .filter(|mv| g.is_legal(&h, t, mv))
                .ok_or_else(|| Error::StrategyFailed {
                    index: k + 1,
                    reason: format!("no legal move in round {}", round + 1),
                })?;
            next = g.apply(&next, t, mv);
        }
        h = next;
    }
    for (k, g) in games.iter().enumerate() {
        if !g.alice_wins_final(&h)? {
            return Err(Error::StrategyFailed {
                index: k + 1,
                reason: format!("stitched homomorphism has color {} in the payoff set", g.color(&h)?),
            });
        }
    }
    Ok(h)
}

/// Plays Bob's winning strategies for `𝔾(x, i, R_A)` and `𝔾(x', i, R_B)`
/// against each other, treating each Bob's moves as the other game's Alice
/// moves shifted by `α_i`. Returns `(h, h')` with `h'(w) = h(α_i w)` wherever
/// both sides are defined and `c(h) ∈ R_A`, `c(h') ∈ R_B`.
pub fn bob_vs_bob(
    spec_a: &GameSpec,
    spec_b: &GameSpec,
    strategy_a: &Strategy,
    strategy_b: &Strategy,
) -> Result<(BallHom, BallHom)> {
    if spec_a.i != spec_b.i || spec_a.depth != spec_b.depth || spec_a.delta != spec_b.delta {
        return Err(Error::Precondition(
            "cross-play needs games with the same generator, depth and Δ".into(),
        ));
    }
    let i = spec_a.i;
    if !spec_a.target.has_edge_labeled(spec_a.x, spec_b.x, i) {
        return Err(Error::Precondition(format!(
            "roots {} and {} are not joined by an α_{i} edge",
            spec_a.x, spec_b.x
        )));
    }
    for (k, s) in [strategy_a, strategy_b].iter().enumerate() {
        if s.player != Player::Bob {
            return Err(Error::StrategyFailed {
                index: k,
                reason: "not a Bob strategy".into(),
            });
        }
    }
    let ga = Game::new(*spec_a)?;
    let gb = Game::new(*spec_b)?;
    let ball = ga.ball();
    let mut h = ga.start();
    let mut hp = gb.start();
    for round in 0..spec_a.depth {
        let t = 2 * round;
        // Alice's α_i side of one ball is the other ball one level down
        let alice_a: Vec<usize> = ga.turns[t]
            .iter()
            .map(|&v| hp[ball.left_mul(i, v).unwrap()])
            .collect();
        let alice_b: Vec<usize> = gb.turns[t]
            .iter()
            .map(|&v| h[ball.left_mul(i, v).unwrap()])
            .collect();
        for (k, (g, pos, mv)) in [(&ga, &h, &alice_a), (&gb, &hp, &alice_b)].into_iter().enumerate() {
            if !g.is_legal(pos, t, mv) {
                return Err(Error::StrategyFailed {
                    index: 1 - k,
                    reason: format!("shifted move is illegal in round {}", round + 1),
                });
            }
        }
        h = ga.apply(&h, t, &alice_a);
        hp = gb.apply(&hp, t, &alice_b);
        for (k, (g, s, pos)) in [(&ga, strategy_a, &mut h), (&gb, strategy_b, &mut hp)]
            .into_iter()
            .enumerate()
        {
            let mv = s
                .table
                .get(pos.as_slice())
                .filter(|mv| g.is_legal(pos, t + 1, mv))
                .ok_or_else(|| Error::StrategyFailed {
                    index: k,
                    reason: format!("no legal Bob move in round {}", round + 1),
                })?
                .clone();
            *pos = g.apply(pos, t + 1, &mv);
        }
    }
    for (k, (g, hom)) in [(&ga, &h), (&gb, &hp)].into_iter().enumerate() {
        if g.alice_wins_final(hom)? {
            return Err(Error::StrategyFailed {
                index: k,
                reason: format!("cross-play ends with color {} outside the payoff set", g.color(hom)?),
            });
        }
    }
    for (w, &y) in hp.iter().enumerate() {
        if let Some(s) = ball.left_mul(i, w) {
            assert_eq!(y, h[s], "cross-play must be shift compatible");
        }
    }
    Ok((h, hp))
}

/// For each target vertex, the least `i` such that Bob wins `𝔾(x, i)`.
pub fn derived_coloring(
    target: Target,
    delta: usize,
    depth: usize,
    labeling: &dyn Labeling,
) -> Result<Vec<Option<usize>>> {
    (0..target.vertex_count())
        .into_par_iter()
        .map(|x| {
            for i in 1..=delta {
                let payoff = BTreeSet::from([i]);
                let spec = GameSpec {
                    target,
                    delta,
                    x,
                    i,
                    payoff: &payoff,
                    depth,
                    labeling,
                };
                if game_winner(&spec)? == Player::Bob {
                    return Ok(Some(i));
                }
            }
            Ok(None)
        })
        .collect()
}

/// For each target vertex, the pairs `(i, R)` (with `R` a bitmask over colors
/// `1..=codomain`, bit `c - 1` for color `c`) such that Alice wins `𝔾(x, i, R)`.
pub fn alice_win_profile(
    target: Target,
    delta: usize,
    depth: usize,
    labeling: &dyn Labeling,
    codomain: usize,
) -> Result<Vec<BTreeSet<(usize, u32)>>> {
    if codomain > 16 {
        return Err(Error::SizeGuard {
            what: "payoff powerset",
            size: codomain as u128,
            limit: 16,
        });
    }
    (0..target.vertex_count())
        .into_par_iter()
        .map(|x| {
            let mut wins = BTreeSet::new();
            for i in 1..=delta {
                for mask in 0u32..(1 << codomain) {
                    let payoff = mask_to_set(mask);
                    let spec = GameSpec {
                        target,
                        delta,
                        x,
                        i,
                        payoff: &payoff,
                        depth,
                        labeling,
                    };
                    if game_winner(&spec)? == Player::Alice {
                        wins.insert((i, mask));
                    }
                }
            }
            Ok(wins)
        })
        .collect()
}

pub fn mask_to_set(mask: u32) -> BTreeSet<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// A self-contained game description for files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameFile {
    pub target: GraphJson,
    pub delta: usize,
    pub x: usize,
    pub i: usize,
    pub payoff: BTreeSet<usize>,
    pub depth: usize,
    /// `(homomorphism, color)` pairs.
    pub labeling: Vec<(Vec<usize>, usize)>,
}

impl GameFile {
    pub fn target_graph(&self) -> Result<TargetGraph> {
        if self.target.is_labeled() {
            Ok(TargetGraph::Labeled(self.target.to_labeled()?))
        } else {
            Ok(TargetGraph::Plain(self.target.to_plain()?))
        }
    }

    pub fn label_table(&self) -> LabelTable {
        LabelTable {
            table: self.labeling.iter().cloned().collect(),
        }
    }

    pub fn spec<'a>(&'a self, target: &'a TargetGraph, table: &'a LabelTable) -> GameSpec<'a> {
        GameSpec {
            target: target.as_target(),
            delta: self.delta,
            x: self.x,
            i: self.i,
            payoff: &self.payoff,
            depth: self.depth,
            labeling: table,
        }
    }
}
