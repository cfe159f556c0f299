//! Seeded property suite over generated spaces, maps, and refinements.
//!
//! Every law the operators are supposed to satisfy is encoded as a check
//! over a deterministic corpus derived from one seed. The suite powers both
//! the `fuzz` command and the acceptance tests: a law that fails reports
//! the first offending case together with the space that witnessed it.
//!
//! Subsets are tabulated as bitmasks per space, so the all-subsets and
//! all-pairs quantifiers cost table lookups rather than operator calls.

use crate::classes::{classify_set, ClassName};
use crate::generate;
use crate::morphism::{compose, SpaceMap};
use crate::point_set::PointSet;
use crate::rough::{approximate, is_refinement, pawlak_approximate, refinement_report, PartitionOracle, Ratio};
use crate::scope::{AuraSpace, ScopeProfile};
use crate::separation::{separation_profile, t1_via_singletons};
use crate::spread::{apply_quarantine, spread_step, spread_trace};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sizes of the three corpora plus the master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub space_cases: u64,
    pub map_cases: u64,
    pub refinement_cases: u64,
    pub max_n: usize,
}

impl SuiteConfig {
    /// The standard shape: `cases` spaces plus two-fifths as many map and
    /// refinement cases each.
    pub fn standard(seed: u64, cases: u64, max_n: usize) -> SuiteConfig {
        assert!((2..=8).contains(&max_n), "max_n must lie in 2..=8");
        assert!(cases >= 1, "at least one case is required");
        SuiteConfig {
            seed,
            space_cases: cases,
            map_cases: cases * 2 / 5,
            refinement_cases: cases * 2 / 5,
            max_n,
        }
    }
}

/// The first case that broke a law.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub case: u64,
    pub detail: String,
    /// The space that witnessed the failure (the source space for map
    /// properties, the coarse space for refinement properties).
    pub space: AuraSpace,
}

/// Result of running one law over its corpus.
#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Per-space tables of every operator over all subset bitmasks.
struct Ctx<'a> {
    space: &'a AuraSpace,
    n: usize,
    full: u64,
    /// Aura closure, aura interior, iterated-closure fixpoint.
    cl: Vec<u64>,
    int: Vec<u64>,
    icl: Vec<u64>,
    /// Classical closure and interior.
    tcl: Vec<u64>,
    tint: Vec<u64>,
    aopen: Vec<bool>,
    topen: Vec<bool>,
    profile: ScopeProfile,
}

#[inline]
fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

impl<'a> Ctx<'a> {
    fn build(space: &'a AuraSpace) -> Ctx<'a> {
        let n = space.universe_size();
        assert!(n <= 8, "property tables are sized for at most 8 points");
        let size = 1usize << n;
        let mut cl = Vec::with_capacity(size);
        let mut int = Vec::with_capacity(size);
        let mut icl = Vec::with_capacity(size);
        let mut tcl = Vec::with_capacity(size);
        let mut tint = Vec::with_capacity(size);
        let mut aopen = Vec::with_capacity(size);
        let mut topen = Vec::with_capacity(size);
        for m in 0..size as u64 {
            let s = PointSet::from_bits(n, m);
            cl.push(space.aura_closure(&s).bits());
            int.push(space.aura_interior(&s).bits());
            icl.push(space.infinity_closure(&s).bits());
            tcl.push(space.topology().closure(&s).bits());
            tint.push(space.topology().interior(&s).bits());
            aopen.push(space.is_aura_open(&s));
            topen.push(space.topology().is_open(&s));
        }
        Ctx {
            space,
            n,
            full: (1u64 << n) - 1,
            cl,
            int,
            icl,
            tcl,
            tint,
            aopen,
            topen,
            profile: space.scope_profile(),
        }
    }

    fn set(&self, m: u64) -> PointSet {
        PointSet::from_bits(self.n, m)
    }

    fn masks(&self) -> impl Iterator<Item = u64> {
        0..(1u64 << self.n)
    }

    fn comp(&self, m: u64) -> u64 {
        !m & self.full
    }

    fn a_semi(&self, m: u64) -> bool {
        subset(m, self.cl[self.tint[m as usize] as usize])
    }

    fn a_pre(&self, m: u64) -> bool {
        subset(m, self.tint[self.cl[m as usize] as usize])
    }

    fn a_alpha(&self, m: u64) -> bool {
        subset(m, self.tint[self.cl[self.tint[m as usize] as usize] as usize])
    }

    fn a_beta(&self, m: u64) -> bool {
        subset(m, self.cl[self.tint[self.cl[m as usize] as usize] as usize])
    }

    fn a_b(&self, m: u64) -> bool {
        subset(
            m,
            self.cl[self.tint[m as usize] as usize] | self.tint[self.cl[m as usize] as usize],
        )
    }
}

type SpaceCheck = fn(&Ctx, &mut ChaCha8Rng) -> Result<(), String>;
type MapCheck = fn(&SpaceMap, &SpaceMap) -> Result<(), String>;
type PairCheck = fn(&AuraSpace, &AuraSpace) -> Result<(), String>;

const SPACE_PROPERTIES: &[(&str, SpaceCheck)] = &[
    ("cech_closure_axioms", check_cech_axioms),
    ("aura_interior_laws", check_interior_laws),
    ("kuratowski_completion", check_kuratowski_completion),
    ("topology_chain", check_topology_chain),
    ("stabilization_bound", check_stabilization_bound),
    ("cover_base", check_cover_base),
    ("special_aura_laws", check_special_aura_laws),
    ("transitive_laws", check_transitive_laws),
    ("class_hierarchy", check_class_hierarchy),
    ("semi_open_unions", check_semi_open_unions),
    ("alpha_decomposition", check_alpha_decomposition),
    ("separation_hierarchy", check_separation_hierarchy),
    ("t1_singleton_characterization", check_t1_characterization),
    ("rough_approximation_laws", check_rough_laws),
    ("pawlak_reduction", check_pawlak_reduction),
    ("spread_laws", check_spread_laws),
    ("quarantine_containment", check_quarantine_containment),
    ("classical_operator_laws", check_classical_laws),
];

const MAP_PROPERTIES: &[(&str, MapCheck)] = &[
    ("continuity_hierarchy", check_continuity_hierarchy),
    ("continuity_composition", check_continuity_composition),
    ("semi_continuity_closed_sets", check_semi_continuity_closed_sets),
    ("transitive_map_decomposition", check_transitive_map_decomposition),
];

const REFINEMENT_PROPERTIES: &[(&str, PairCheck)] = &[
    ("refinement_monotonicity", check_refinement_monotonicity),
];

/// Runs every law over the corpora drawn from the seed. Outcomes appear in
/// a fixed order; each failing law carries its first counterexample.
pub fn run_suite(config: &SuiteConfig) -> Vec<PropertyOutcome> {
    let mut outcomes: Vec<PropertyOutcome> = SPACE_PROPERTIES
        .iter()
        .map(|&(name, _)| PropertyOutcome {
            name,
            cases: 0,
            counterexample: None,
        })
        .collect();

    // Random spaces first, then partition spaces: the latter guarantee the
    // transitive/symmetric-conditioned laws actually fire.
    let corpus = (0..config.space_cases)
        .map(|c| (c, generate::space(config.seed, c, config.max_n)))
        .chain(
            (0..config.space_cases)
                .map(|c| (config.space_cases + c, generate::partition_space(config.seed, c, config.max_n))),
        );

    for (case, space) in corpus {
        let ctx = Ctx::build(&space);
        let mut aux = ChaCha8Rng::seed_from_u64(config.seed);
        aux.set_stream((4u64 << 48) | case);
        for (k, (_, check)) in SPACE_PROPERTIES.iter().enumerate() {
            let outcome = &mut outcomes[k];
            if outcome.counterexample.is_some() {
                continue;
            }
            outcome.cases += 1;
            if let Err(detail) = check(&ctx, &mut aux) {
                outcome.counterexample = Some(Counterexample {
                    case,
                    detail,
                    space: space.clone(),
                });
            }
        }
    }

    let map_base = outcomes.len();
    outcomes.extend(MAP_PROPERTIES.iter().map(|&(name, _)| PropertyOutcome {
        name,
        cases: 0,
        counterexample: None,
    }));
    for case in 0..config.map_cases {
        let (f, g) = generate::map_pair(config.seed, case, config.max_n);
        for (k, (_, check)) in MAP_PROPERTIES.iter().enumerate() {
            let outcome = &mut outcomes[map_base + k];
            if outcome.counterexample.is_some() {
                continue;
            }
            outcome.cases += 1;
            if let Err(detail) = check(&f, &g) {
                outcome.counterexample = Some(Counterexample {
                    case,
                    detail,
                    space: f.source().clone(),
                });
            }
        }
    }

    let pair_base = outcomes.len();
    outcomes.extend(REFINEMENT_PROPERTIES.iter().map(|&(name, _)| PropertyOutcome {
        name,
        cases: 0,
        counterexample: None,
    }));
    for case in 0..config.refinement_cases {
        let (coarse, fine) = generate::refinement_pair(config.seed, case, config.max_n);
        for (k, (_, check)) in REFINEMENT_PROPERTIES.iter().enumerate() {
            let outcome = &mut outcomes[pair_base + k];
            if outcome.counterexample.is_some() {
                continue;
            }
            outcome.cases += 1;
            if let Err(detail) = check(&coarse, &fine) {
                outcome.counterexample = Some(Counterexample {
                    case,
                    detail,
                    space: coarse.clone(),
                });
            }
        }
    }

    outcomes
}

fn check_cech_axioms(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if ctx.cl[0] != 0 {
        return Err("closure of the empty set is nonempty".into());
    }
    for a in ctx.masks() {
        if !subset(a, ctx.cl[a as usize]) {
            return Err(format!("{} is not contained in its aura closure", ctx.set(a)));
        }
        if !subset(ctx.tcl[a as usize], ctx.cl[a as usize]) {
            return Err(format!(
                "topological closure of {} escapes the aura closure",
                ctx.set(a)
            ));
        }
        for b in ctx.masks() {
            if ctx.cl[(a | b) as usize] != ctx.cl[a as usize] | ctx.cl[b as usize] {
                return Err(format!(
                    "aura closure is not additive on {} and {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
            if subset(a, b) && !subset(ctx.cl[a as usize], ctx.cl[b as usize]) {
                return Err(format!(
                    "aura closure is not monotone on {} within {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
        }
    }
    Ok(())
}

fn check_interior_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if ctx.int[ctx.full as usize] != ctx.full {
        return Err("aura interior of the universe is not the universe".into());
    }
    for a in ctx.masks() {
        let ia = ctx.int[a as usize];
        if !subset(ia, a) {
            return Err(format!("aura interior of {} escapes the set", ctx.set(a)));
        }
        if !subset(ia, ctx.tint[a as usize]) {
            return Err(format!(
                "aura interior of {} escapes the topological interior",
                ctx.set(a)
            ));
        }
        if ia != a & !ctx.cl[ctx.comp(a) as usize] {
            return Err(format!(
                "interior/closure duality fails on {}",
                ctx.set(a)
            ));
        }
        for b in ctx.masks() {
            if ctx.int[(a & b) as usize] != ctx.int[a as usize] & ctx.int[b as usize] {
                return Err(format!(
                    "aura interior does not distribute over {} and {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
            if subset(a, b) && !subset(ia, ctx.int[b as usize]) {
                return Err(format!(
                    "aura interior is not monotone on {} within {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
        }
    }
    Ok(())
}

fn check_kuratowski_completion(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if ctx.icl[0] != 0 {
        return Err("stabilized closure of the empty set is nonempty".into());
    }
    for a in ctx.masks() {
        let ia = ctx.icl[a as usize];
        if !subset(a, ia) {
            return Err(format!("{} escapes its stabilized closure", ctx.set(a)));
        }
        if ctx.icl[ia as usize] != ia {
            return Err(format!("stabilized closure is not idempotent on {}", ctx.set(a)));
        }
        for b in ctx.masks() {
            if ctx.icl[(a | b) as usize] != ia | ctx.icl[b as usize] {
                return Err(format!(
                    "stabilized closure is not additive on {} and {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
        }
    }
    Ok(())
}

fn check_topology_chain(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        let inf_open = ctx.icl[ctx.comp(m) as usize] == ctx.comp(m);
        if inf_open && !ctx.aopen[m as usize] {
            return Err(format!(
                "{} is open for the stabilized closure but not aura-open",
                ctx.set(m)
            ));
        }
        if ctx.aopen[m as usize] && !ctx.topen[m as usize] {
            return Err(format!("{} is aura-open but not open", ctx.set(m)));
        }
    }
    let aura_topology = ctx
        .space
        .aura_topology()
        .map_err(|e| format!("aura topology enumeration failed: {e}"))?;
    if !aura_topology.is_valid() {
        return Err("the aura-open family violates the topology axioms".into());
    }
    let inf_topology = ctx
        .space
        .infinity_topology()
        .map_err(|e| format!("stabilized topology enumeration failed: {e}"))?;
    if !inf_topology.is_valid() {
        return Err("the stabilized-open family violates the topology axioms".into());
    }
    Ok(())
}

fn check_stabilization_bound(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        let trace = ctx.space.closure_trace(&ctx.set(m));
        if trace.stabilized_at > ctx.n {
            return Err(format!(
                "closure trace of {} took {} steps on {} points",
                ctx.set(m),
                trace.stabilized_at,
                ctx.n
            ));
        }
        for pair in trace.stages.windows(2) {
            if !pair[0].is_subset_of(&pair[1]) {
                return Err(format!("closure trace of {} is not increasing", ctx.set(m)));
            }
        }
        if trace.reach().bits() != ctx.icl[m as usize] {
            return Err(format!(
                "trace fixpoint of {} disagrees with the stabilized closure",
                ctx.set(m)
            ));
        }
    }
    Ok(())
}

fn check_cover_base(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        if !ctx.aopen[m as usize] {
            continue;
        }
        let mut union = 0u64;
        for x in ctx.set(m).iter() {
            union |= ctx.space.aura(x).bits();
        }
        if union != m {
            return Err(format!(
                "aura-open {} is not the union of its members' auras",
                ctx.set(m)
            ));
        }
    }
    Ok(())
}

fn check_special_aura_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    let profile = ctx.profile;
    if profile.discrete && !(profile.transitive && profile.symmetric) {
        return Err("a discrete scope must be transitive and symmetric".into());
    }
    if profile.trivial {
        for m in ctx.masks().skip(1) {
            if ctx.cl[m as usize] != ctx.full {
                return Err(format!(
                    "trivial scope: closure of nonempty {} is not the universe",
                    ctx.set(m)
                ));
            }
        }
        let opens: Vec<u64> = ctx.masks().filter(|&m| ctx.aopen[m as usize]).collect();
        if opens != vec![0, ctx.full] {
            return Err("trivial scope: aura topology is not indiscrete".into());
        }
    }
    if profile.discrete {
        for m in ctx.masks() {
            if ctx.cl[m as usize] != m {
                return Err(format!(
                    "discrete scope: closure of {} moved the set",
                    ctx.set(m)
                ));
            }
            if !ctx.aopen[m as usize] {
                return Err(format!("discrete scope: {} is not aura-open", ctx.set(m)));
            }
        }
    }
    if profile.symmetric {
        for x in 0..ctx.n {
            for y in 0..ctx.n {
                let x_sees_y = ctx.cl[(1 << y) as usize] & (1 << x) != 0;
                let y_sees_x = ctx.cl[(1 << x) as usize] & (1 << y) != 0;
                if x_sees_y != y_sees_x {
                    return Err(format!(
                        "symmetric scope: singleton closures disagree on points {x} and {y}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_transitive_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if !ctx.profile.transitive {
        return Ok(());
    }
    for m in ctx.masks() {
        let c = ctx.cl[m as usize];
        if ctx.cl[c as usize] != c {
            return Err(format!(
                "transitive scope: aura closure is not idempotent on {}",
                ctx.set(m)
            ));
        }
    }
    for x in 0..ctx.n {
        if !ctx.aopen[ctx.space.aura(x).bits() as usize] {
            return Err(format!("transitive scope: aura of point {x} is not aura-open"));
        }
    }
    Ok(())
}

fn check_class_hierarchy(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        let profile = classify_set(ctx.space, &ctx.set(m));
        // The classifier and the table formulas must agree flag by flag.
        let table = [
            (profile.a_semi_open, ctx.a_semi(m), ClassName::ASemiOpen),
            (profile.a_pre_open, ctx.a_pre(m), ClassName::APreOpen),
            (profile.a_alpha_open, ctx.a_alpha(m), ClassName::AAlphaOpen),
            (profile.a_beta_open, ctx.a_beta(m), ClassName::ABetaOpen),
            (profile.a_b_open, ctx.a_b(m), ClassName::ABOpen),
        ];
        for (flag, expected, name) in table {
            if flag != expected {
                return Err(format!(
                    "classifier disagrees with the operator tables for {name} on {}",
                    ctx.set(m)
                ));
            }
        }
        let implications = [
            (profile.open, profile.a_alpha_open, "open sets are aura-alpha-open"),
            (profile.a_alpha_open, profile.a_semi_open, "aura-alpha-open sets are aura-semi-open"),
            (profile.a_alpha_open, profile.a_pre_open, "aura-alpha-open sets are aura-pre-open"),
            (profile.a_semi_open, profile.a_b_open, "aura-semi-open sets are aura-b-open"),
            (profile.a_pre_open, profile.a_b_open, "aura-pre-open sets are aura-b-open"),
            (profile.a_b_open, profile.a_beta_open, "aura-b-open sets are aura-beta-open"),
            (profile.semi_open, profile.a_semi_open, "semi-open sets are aura-semi-open"),
            (profile.pre_open, profile.a_pre_open, "pre-open sets are aura-pre-open"),
            (profile.alpha_open, profile.a_alpha_open, "alpha-open sets are aura-alpha-open"),
            (profile.beta_open, profile.a_beta_open, "beta-open sets are aura-beta-open"),
            (profile.a_open, profile.open, "aura-open sets are open"),
        ];
        for (premise, conclusion, law) in implications {
            if premise && !conclusion {
                return Err(format!("{law}: violated by {}", ctx.set(m)));
            }
        }
    }
    Ok(())
}

fn check_semi_open_unions(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let semi: Vec<u64> = ctx.masks().filter(|&m| ctx.a_semi(m)).collect();
    for &a in &semi {
        for &b in &semi {
            if !ctx.a_semi(a | b) {
                return Err(format!(
                    "union of aura-semi-open {} and {} is not aura-semi-open",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
        }
    }
    // One random k-fold union.
    let k = rng.gen_range(0..=semi.len());
    let mut union = 0u64;
    for _ in 0..k {
        union |= semi[rng.gen_range(0..semi.len())];
    }
    if !ctx.a_semi(union) {
        return Err(format!(
            "a {k}-fold union of aura-semi-open sets is not aura-semi-open"
        ));
    }
    Ok(())
}

fn check_alpha_decomposition(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        if ctx.a_alpha(m) && !(ctx.a_semi(m) && ctx.a_pre(m)) {
            return Err(format!(
                "aura-alpha-open {} is not both aura-semi-open and aura-pre-open",
                ctx.set(m)
            ));
        }
        if ctx.profile.transitive && ctx.a_semi(m) && ctx.a_pre(m) && !ctx.a_alpha(m) {
            return Err(format!(
                "transitive scope: {} is aura-semi-open and aura-pre-open but not aura-alpha-open",
                ctx.set(m)
            ));
        }
    }
    Ok(())
}

fn check_separation_hierarchy(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    let profile = separation_profile(ctx.space).map_err(|e| e.to_string())?;
    if profile.a_t2 && !profile.a_t1 {
        return Err("aura-T2 without aura-T1".into());
    }
    if profile.a_t1 && !profile.a_t0 {
        return Err("aura-T1 without aura-T0".into());
    }
    for (flag, witness) in [
        (profile.a_t0, profile.a_t0_witness.is_some()),
        (profile.a_t1, profile.a_t1_witness.is_some()),
        (profile.a_t2, profile.a_t2_witness.is_some()),
        (profile.a_regular, profile.a_regular_witness.is_some()),
    ] {
        if flag == witness {
            return Err("separation witnesses must accompany exactly the failing axioms".into());
        }
    }
    Ok(())
}

fn check_t1_characterization(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    let profile = separation_profile(ctx.space).map_err(|e| e.to_string())?;
    let (by_singletons, _) = t1_via_singletons(ctx.space).map_err(|e| e.to_string())?;
    if by_singletons != profile.a_t1 {
        return Err(format!(
            "singleton characterization gives {by_singletons} but the search gives {}",
            profile.a_t1
        ));
    }
    Ok(())
}

fn check_rough_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for a in ctx.masks() {
        let lower = ctx.int[a as usize];
        let upper = ctx.cl[a as usize];
        if !subset(lower, a) || !subset(a, upper) {
            return Err(format!("approximations of {} do not bracket it", ctx.set(a)));
        }
        // Duality between the approximations.
        if ctx.int[ctx.comp(a) as usize] != ctx.comp(upper) {
            return Err(format!("lower/upper duality fails on {}", ctx.set(a)));
        }
        if ctx.cl[ctx.comp(a) as usize] != ctx.comp(lower) {
            return Err(format!("upper/lower duality fails on {}", ctx.set(a)));
        }
        // One-sided iteration.
        if !subset(ctx.int[lower as usize], lower) {
            return Err(format!("iterated lower approximation grew on {}", ctx.set(a)));
        }
        if !subset(upper, ctx.cl[upper as usize]) {
            return Err(format!("iterated upper approximation shrank on {}", ctx.set(a)));
        }
        let report = approximate(ctx.space, &ctx.set(a));
        if report.boundary != report.upper.difference(&report.lower) {
            return Err(format!("boundary is not upper minus lower on {}", ctx.set(a)));
        }
        if report.definable != (report.lower == report.upper) {
            return Err(format!("definability flag wrong on {}", ctx.set(a)));
        }
        if report.definable != (report.accuracy == Ratio::one()) {
            return Err(format!("accuracy 1 must coincide with definability on {}", ctx.set(a)));
        }
    }
    if ctx.int[0] != 0 || ctx.cl[0] != 0 || ctx.int[ctx.full as usize] != ctx.full || ctx.cl[ctx.full as usize] != ctx.full {
        return Err("empty set or universe is not a fixpoint of the approximations".into());
    }
    Ok(())
}

fn check_pawlak_reduction(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if !(ctx.profile.symmetric && ctx.profile.transitive) {
        return Ok(());
    }
    let mut blocks: Vec<PointSet> = (0..ctx.n).map(|x| ctx.space.aura(x).clone()).collect();
    blocks.sort();
    blocks.dedup();
    let partition = PartitionOracle::new(ctx.n, blocks).map_err(|e| {
        format!("symmetric+transitive auras failed to form a partition: {e}")
    })?;
    for m in ctx.masks() {
        let set = ctx.set(m);
        let via_aura = approximate(ctx.space, &set);
        let via_blocks = pawlak_approximate(&partition, &set);
        if via_aura.lower != via_blocks.lower || via_aura.upper != via_blocks.upper {
            return Err(format!(
                "partition reduction disagrees with the aura approximation on {set}"
            ));
        }
    }
    Ok(())
}

fn check_spread_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    for m in ctx.masks() {
        let set = ctx.set(m);
        let stepped = spread_step(ctx.space, &set);
        let s = stepped.bits();
        if !subset(m, s) {
            return Err(format!("{set} escapes its own spread step"));
        }
        if !subset(s, ctx.cl[s as usize]) {
            return Err(format!("spread of {set} escapes its aura closure"));
        }
        if ctx.profile.transitive && !ctx.aopen[s as usize] {
            return Err(format!("transitive scope: spread of {set} is not aura-open"));
        }
        let trace = spread_trace(ctx.space, &set);
        if trace.stabilized_at > ctx.n {
            return Err(format!("spread from {set} took more steps than points"));
        }
        if spread_step(ctx.space, &trace.reach) != trace.reach {
            return Err(format!("spread reach of {set} is not a fixpoint"));
        }
        for pair in trace.stages.windows(2) {
            if !pair[0].is_subset_of(&pair[1]) {
                return Err(format!("spread trace of {set} is not increasing"));
            }
        }
    }
    if ctx.profile.transitive {
        for x in 0..ctx.n {
            let reach = spread_trace(ctx.space, &PointSet::singleton(ctx.n, x)).reach;
            if !ctx.aopen[reach.bits() as usize] {
                return Err(format!(
                    "transitive scope: reach of point {x} is not aura-open"
                ));
            }
        }
    }
    Ok(())
}

fn check_quarantine_containment(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    let quarantinable: Vec<usize> = (0..ctx.n)
        .filter(|&x| ctx.space.topology().is_open(&PointSet::singleton(ctx.n, x)))
        .collect();
    if quarantinable.is_empty() {
        return Ok(());
    }
    // Quarantine each point alone, then all of them together.
    let mut plans: Vec<PointSet> = quarantinable
        .iter()
        .map(|&x| PointSet::singleton(ctx.n, x))
        .collect();
    plans.push(PointSet::from_indices(ctx.n, quarantinable.iter().copied()));
    for q in plans {
        let restricted = apply_quarantine(ctx.space, &q).map_err(|e| e.to_string())?;
        if !is_refinement(ctx.space, &restricted).map_err(|e| e.to_string())? {
            return Err(format!("quarantining {q} did not refine the scope"));
        }
        for x in 0..ctx.n {
            let seed = PointSet::singleton(ctx.n, x);
            let before = spread_trace(ctx.space, &seed).reach;
            let after = spread_trace(&restricted, &seed).reach;
            if !after.is_subset_of(&before) {
                return Err(format!(
                    "quarantining {q} enlarged the reach from point {x}"
                ));
            }
        }
    }
    Ok(())
}

fn check_classical_laws(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<(), String> {
    if !ctx.space.topology().is_valid() {
        return Err("generated topology violates the axioms".into());
    }
    let closed = ctx
        .space
        .topology()
        .closed_sets()
        .map_err(|e| e.to_string())?;
    for a in ctx.masks() {
        let ti = ctx.tint[a as usize];
        let tc = ctx.tcl[a as usize];
        if !subset(ti, a) || !subset(a, tc) {
            return Err(format!("interior/closure do not bracket {}", ctx.set(a)));
        }
        if ctx.tint[ti as usize] != ti || ctx.tcl[tc as usize] != tc {
            return Err(format!("interior or closure is not idempotent on {}", ctx.set(a)));
        }
        if tc != ctx.comp(ctx.tint[ctx.comp(a) as usize]) {
            return Err(format!("classical duality fails on {}", ctx.set(a)));
        }
        // Independent oracle: closure is the smallest closed superset.
        let set = ctx.set(a);
        let smallest = closed
            .iter()
            .filter(|c| set.is_subset_of(c))
            .min_by_key(|c| c.len())
            .expect("the universe is closed");
        if smallest.bits() != tc {
            return Err(format!(
                "closure of {} is not the smallest closed superset",
                ctx.set(a)
            ));
        }
        for b in ctx.masks() {
            if ctx.tint[(a & b) as usize] != ctx.tint[a as usize] & ctx.tint[b as usize] {
                return Err(format!(
                    "interior does not distribute over {} and {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
            if ctx.tcl[(a | b) as usize] != ctx.tcl[a as usize] | ctx.tcl[b as usize] {
                return Err(format!(
                    "closure does not distribute over {} and {}",
                    ctx.set(a),
                    ctx.set(b)
                ));
            }
        }
    }
    Ok(())
}

fn check_continuity_hierarchy(f: &SpaceMap, g: &SpaceMap) -> Result<(), String> {
    for map in [f, g] {
        let p = map.continuity_profile().map_err(|e| e.to_string())?;
        if p.continuous && !p.a_alpha {
            return Err("continuous map is not aura-alpha-continuous".into());
        }
        if p.a_alpha && !(p.a_semi && p.a_pre) {
            return Err("aura-alpha-continuous map is not semi- and pre-continuous".into());
        }
        if (p.a_semi || p.a_pre) && !p.a_beta {
            return Err("semi- or pre-continuous map is not aura-beta-continuous".into());
        }
    }
    Ok(())
}

fn check_continuity_composition(f: &SpaceMap, g: &SpaceMap) -> Result<(), String> {
    let pf = f.continuity_profile().map_err(|e| e.to_string())?;
    let pg = g.continuity_profile().map_err(|e| e.to_string())?;
    let composed = compose(f, g).map_err(|e| e.to_string())?;
    let pc = composed.continuity_profile().map_err(|e| e.to_string())?;
    if pf.a_continuous && pg.a_continuous && !pc.a_continuous {
        return Err("composition of aura-continuous maps is not aura-continuous".into());
    }
    if pf.a_semi && pg.continuous && !pc.a_semi {
        return Err(
            "aura-semi-continuous followed by continuous is not aura-semi-continuous".into(),
        );
    }
    Ok(())
}

fn check_semi_continuity_closed_sets(f: &SpaceMap, _: &SpaceMap) -> Result<(), String> {
    let profile = f.continuity_profile().map_err(|e| e.to_string())?;
    let closed = f
        .target()
        .topology()
        .closed_sets()
        .map_err(|e| e.to_string())?;
    let via_closed = closed.iter().all(|c| {
        let preimage_complement = f.preimage(c).complement();
        classify_set(f.source(), &preimage_complement).a_semi_open
    });
    if profile.a_semi != via_closed {
        return Err(format!(
            "closed-set characterization gives {via_closed} but the profile gives {}",
            profile.a_semi
        ));
    }
    Ok(())
}

fn check_transitive_map_decomposition(f: &SpaceMap, _: &SpaceMap) -> Result<(), String> {
    if !f.source().scope_profile().transitive {
        return Ok(());
    }
    let p = f.continuity_profile().map_err(|e| e.to_string())?;
    if p.a_alpha != (p.a_semi && p.a_pre) {
        return Err(format!(
            "transitive source: alpha-continuity is {} but semi+pre is {}",
            p.a_alpha,
            p.a_semi && p.a_pre
        ));
    }
    Ok(())
}

fn check_refinement_monotonicity(coarse: &AuraSpace, fine: &AuraSpace) -> Result<(), String> {
    if !is_refinement(coarse, fine).map_err(|e| e.to_string())? {
        return Err("generated pair is not a refinement".into());
    }
    let n = coarse.universe_size();
    for m in 0..(1u64 << n) {
        let set = PointSet::from_bits(n, m);
        let report = refinement_report(coarse, fine, &set).map_err(|e| e.to_string())?;
        if !report.lower_grows {
            return Err(format!("lower approximation of {set} shrank under refinement"));
        }
        if !report.upper_shrinks {
            return Err(format!("upper approximation of {set} grew under refinement"));
        }
        if !report.boundary_shrinks {
            return Err(format!("boundary of {set} grew under refinement"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let outcomes = run_suite(&SuiteConfig::standard(7, 40, 5));
        for outcome in &outcomes {
            assert!(
                outcome.passed(),
                "{} failed at case {:?}: {:?}",
                outcome.name,
                outcome.counterexample.as_ref().map(|c| c.case),
                outcome.counterexample.as_ref().map(|c| &c.detail)
            );
            assert!(outcome.cases > 0, "{} ran no cases", outcome.name);
        }
        assert_eq!(
            outcomes.len(),
            SPACE_PROPERTIES.len() + MAP_PROPERTIES.len() + REFINEMENT_PROPERTIES.len()
        );
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_suite(&SuiteConfig::standard(42, 10, 4));
        let b = run_suite(&SuiteConfig::standard(42, 10, 4));
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.cases, y.cases);
            assert_eq!(x.passed(), y.passed());
        }
    }
}
