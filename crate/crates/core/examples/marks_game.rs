//! Solves finite Marks games on a small target, prints one play, and stitches
//! Alice's strategies for all generators into a single homomorphism.
//!
//! cargo run --example marks_game -- 11

use std::collections::BTreeSet;

use homlab::corpus::{random_label_table, rng};
use homlab::games::{derived_coloring, naive_strategy, LabelTable, solve_game, stitch_alice, Game, GameSpec, Player};
use homlab::graph::{complete_graph, tree_ball, Target};

fn main() -> homlab::Result<()> {
    let seed = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(11);
    let (delta, depth) = (3, 2);
    let k3 = complete_graph(3);
    let target = Target::Plain(&k3);
    let ball = tree_ball(delta, depth)?;
    let table = random_label_table(&ball, target, delta, &mut rng(seed));
    println!("{} labeled homomorphisms of the radius-{depth} ball into K3", table.table.len());

    // every root has a generator where Bob forces c(h) = i
    println!("least Bob-winning generator per root: {:?}", derived_coloring(target, delta, depth, &table)?);

    let payoff = BTreeSet::from([1]);
    let spec = GameSpec {
        target,
        delta,
        x: 0,
        i: 1,
        payoff: &payoff,
        depth,
        labeling: &table,
    };
    let out = solve_game(&spec)?;
    println!("G(0, 1, {{1}}): {} wins with {} strategy entries", out.winner, out.strategy.table.len());
    let other = naive_strategy(&spec, out.winner.opponent())?;
    let (alice, bob) = match out.winner {
        Player::Alice => (&out.strategy, &other),
        Player::Bob => (&other, &out.strategy),
    };
    print!("{}", Game::new(spec)?.play(alice, bob)?);

    // c(h) = 1 + number of distinct images of the root's neighbors; ask for
    // the largest set Alice can avoid in each game and stitch the strategies
    let wide = LabelTable::tabulate(&ball, target, |h| {
        1 + ball.level(1).map(|v| h[v]).collect::<BTreeSet<_>>().len()
    });
    let spec = GameSpec { labeling: &wide, ..spec };
    let sets: Vec<BTreeSet<usize>> = (1..=delta)
        .map(|i| {
            (0u32..1 << 4)
                .map(homlab::games::mask_to_set)
                .filter(|r| {
                    let s = GameSpec { i, payoff: r, ..spec };
                    solve_game(&s).is_ok_and(|o| o.winner == Player::Alice)
                })
                .max_by_key(BTreeSet::len)
                .unwrap_or_default()
        })
        .collect();
    let specs: Vec<GameSpec> = (1..=delta).map(|i| GameSpec { i, payoff: &sets[i - 1], ..spec }).collect();
    let strategies = specs
        .iter()
        .map(|s| solve_game(s).map(|o| o.strategy))
        .collect::<homlab::Result<Vec<_>>>()?;
    let h = stitch_alice(&specs, &strategies)?;
    println!("avoided sets {sets:?}; stitched h = {h:?} with color {}", wide.table[&h]);
    Ok(())
}
