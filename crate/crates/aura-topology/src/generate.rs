//! Seeded random generation of spaces, maps, and refinements.
//!
//! Every case is a pure function of `(seed, case index)`: each index gets
//! its own ChaCha stream, so cases can be regenerated or checked in any
//! order. A space is built by sampling a small subbasis, closing it into a
//! topology, then picking each aura uniformly among the opens containing
//! its point.

use crate::point_set::PointSet;
use crate::scope::{AuraSpace, ScopeFunction};
use crate::morphism::SpaceMap;
use crate::topology::Topology;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Distinct stream families so that the space, map, refinement, and
/// partition corpora never share randomness.
#[derive(Debug, Clone, Copy)]
enum StreamKind {
    Space = 0,
    Map = 1,
    Refinement = 2,
    Partition = 3,
}

fn rng_for(seed: u64, kind: StreamKind, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((kind as u64) << 48) | case);
    rng
}

fn point_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| char::from(b'a' + i as u8).to_string())
        .collect()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> PointSet {
    PointSet::from_bits(n, rng.gen::<u64>() & ((1u64 << n) - 1))
}

fn random_space_with(rng: &mut ChaCha8Rng, max_n: usize) -> AuraSpace {
    let n = rng.gen_range(2..=max_n);
    let subbasis_len = rng.gen_range(0..=n);
    let subbasis: Vec<PointSet> = (0..subbasis_len).map(|_| random_subset(rng, n)).collect();
    let topology = Topology::from_subbasis(n, &subbasis)
        .expect("small subbasis closure cannot overflow")
        .with_labels(point_labels(n));
    let opens = topology.opens().expect("generated topologies are enumerable");
    let auras: Vec<PointSet> = (0..n)
        .map(|x| {
            let candidates: Vec<&PointSet> = opens.iter().filter(|o| o.contains(x)).collect();
            candidates[rng.gen_range(0..candidates.len())].clone()
        })
        .collect();
    AuraSpace::new(topology, ScopeFunction::new(auras))
        .expect("auras drawn from the topology are valid")
}

/// The `case`-th random aura space for a seed, with 2 to `max_n` points.
pub fn space(seed: u64, case: u64, max_n: usize) -> AuraSpace {
    assert!((2..=16).contains(&max_n));
    let mut rng = rng_for(seed, StreamKind::Space, case);
    random_space_with(&mut rng, max_n)
}

/// A space whose auras are the blocks of a random partition: the scope is
/// symmetric and transitive by construction.
pub fn partition_space(seed: u64, case: u64, max_n: usize) -> AuraSpace {
    assert!((2..=16).contains(&max_n));
    let mut rng = rng_for(seed, StreamKind::Partition, case);
    let n = rng.gen_range(2..=max_n);
    // Random block assignment; block count between 1 and n.
    let block_count = rng.gen_range(1..=n);
    let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..block_count)).collect();
    let blocks: Vec<PointSet> = (0..block_count)
        .map(|b| {
            PointSet::from_indices(
                n,
                assignment
                    .iter()
                    .enumerate()
                    .filter(|(_, &blk)| blk == b)
                    .map(|(i, _)| i),
            )
        })
        .filter(|b| !b.is_empty())
        .collect();
    let topology = Topology::from_subbasis(n, &blocks)
        .expect("block subbasis closure cannot overflow")
        .with_labels(point_labels(n));
    let auras: Vec<PointSet> = (0..n)
        .map(|x| {
            blocks
                .iter()
                .find(|b| b.contains(x))
                .expect("blocks cover the universe")
                .clone()
        })
        .collect();
    AuraSpace::new(topology, ScopeFunction::new(auras))
        .expect("partition blocks are open by construction")
}

/// A composable triple `f: X → Y`, `g: Y → Z` of random maps. Every fourth
/// case uses a partition space as `X`, so transitive sources occur often;
/// every seventh case makes `f` an identity-like collapse to salt the
/// corpus with continuous maps.
pub fn map_pair(seed: u64, case: u64, max_n: usize) -> (SpaceMap, SpaceMap) {
    let mut rng = rng_for(seed, StreamKind::Map, case);
    let source = if case % 4 == 3 {
        partition_space(seed, u64::MAX - case, max_n)
    } else {
        random_space_with(&mut rng, max_n)
    };
    let middle = random_space_with(&mut rng, max_n);
    let sink = random_space_with(&mut rng, max_n);

    let f_mapping = random_mapping(&mut rng, &source, &middle, case % 7 == 0);
    let g_mapping = random_mapping(&mut rng, &middle, &sink, case % 5 == 0);
    (
        SpaceMap::new(source.clone(), middle.clone(), f_mapping),
        SpaceMap::new(middle, sink, g_mapping),
    )
}

fn random_mapping(
    rng: &mut ChaCha8Rng,
    source: &AuraSpace,
    target: &AuraSpace,
    constant: bool,
) -> Vec<usize> {
    let m = target.universe_size();
    if constant {
        let c = rng.gen_range(0..m);
        vec![c; source.universe_size()]
    } else {
        (0..source.universe_size()).map(|_| rng.gen_range(0..m)).collect()
    }
}

/// A space and a pointwise refinement of it: each aura is shrunk to a
/// uniformly chosen open subset still containing its point.
pub fn refinement_pair(seed: u64, case: u64, max_n: usize) -> (AuraSpace, AuraSpace) {
    let mut rng = rng_for(seed, StreamKind::Refinement, case);
    let coarse = random_space_with(&mut rng, max_n);
    let opens = coarse
        .topology()
        .opens()
        .expect("generated topologies are enumerable");
    let auras: Vec<PointSet> = (0..coarse.universe_size())
        .map(|x| {
            let candidates: Vec<&PointSet> = opens
                .iter()
                .filter(|o| o.contains(x) && o.is_subset_of(coarse.aura(x)))
                .collect();
            candidates[rng.gen_range(0..candidates.len())].clone()
        })
        .collect();
    let fine = coarse
        .with_scope(ScopeFunction::new(auras))
        .expect("open subsets containing their point form a valid scope");
    (coarse, fine)
}
