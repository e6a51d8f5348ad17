//! Seeded randomized law harness.
//!
//! One executable check per equational law the tower promises: the matrix
//! category's biproduct equations and induced addition, divide-and-conquer
//! multiplication against the direct product, the interchange law, both
//! distributivity laws, the distributor and local biproduct equations, the
//! weak biproduct conditions, the mediator round trip, and the equivalence
//! zigzags. Generation is fully deterministic: every case derives its own
//! seed from the configured base seed, the law name and the case index, so
//! any failure replays in isolation.
//!
//! The suite must be able to fail. [`Mutation`] selects a deliberately
//! corrupted composition variant; with [`Mutation::KronFlip`] enabled the
//! interchange law reports counterexamples.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::biproduct::{
    canonical_equiv, check_biproduct_conditions, check_equiv_projection, check_zigzags,
    make_witness, mediator_gamma, monic_mediator, product_mediator, reconstruct_gamma, sigma_rows,
    sigma_rows_direct, theta_p_expansion, universal_condition_rhs, Cone,
};
use crate::cli::format::{DocBuilder, Value};
use crate::error::Result;
use crate::matcat::{self, MatMor, MatObj};
use crate::twovect::{
    add_two, associator, distributor, hcompose1, hcompose2, id_two, inverse, local_inj,
    local_proj, oplus_one, vcompose2, whisker_left, zero_one, zero_two, OneMor, SpaceDecomp,
    TwoMor,
};
use crate::{Mat, Rat, Side};

/// Bounds and determinism knobs for the harness.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LawConfig {
    pub seed: u64,
    pub cases_per_law: usize,
    pub max_object: usize,
    pub max_components: usize,
    pub max_dim: usize,
    pub scalar_bound: i64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            seed: 42,
            cases_per_law: 200,
            max_object: 3,
            max_components: 3,
            max_dim: 3,
            scalar_bound: 9,
        }
    }
}

/// Deliberate corruption fixtures, to prove the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Horizontal composition variant whose row layout uses the flipped
    /// Kronecker factor order on the target side. A uniform flip of both
    /// sides would just be the mirrored convention and every law would
    /// still hold; flipping one side is observable, and the interchange
    /// law catches it.
    KronFlip,
}

impl Mutation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::KronFlip => "kron-flip",
        }
    }
}

impl std::str::FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "none" => Ok(Mutation::None),
            "kron-flip" => Ok(Mutation::KronFlip),
            other => Err(format!("unknown mutation fixture `{other}`")),
        }
    }
}

/// One failing case, with enough data to replay it.
#[derive(Debug, Clone)]
pub struct LawFailure {
    pub case: usize,
    pub seed: u64,
    pub message: String,
    /// The offending inputs, serialized in the CLI document format.
    pub counterexample: String,
}

/// Result of running one law.
#[derive(Debug, Clone)]
pub struct LawOutcome {
    pub name: &'static str,
    /// The equation or property checked, in plain notation.
    pub statement: &'static str,
    pub cases: usize,
    pub failures: Vec<LawFailure>,
    pub millis: u128,
}

/// The full suite outcome.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub config: LawConfig,
    pub mutation: Mutation,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn total_failures(&self) -> usize {
        self.laws.iter().map(|l| l.failures.len()).sum()
    }

    /// Line-oriented rendering. The body is byte-deterministic for a given
    /// configuration; timing lines are appended only when requested and are
    /// excluded from that guarantee.
    pub fn render(&self, with_timing: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite seed={} cases={} max-object={} max-components={} max-dim={} scalar-bound={} mutation={}\n",
            self.config.seed,
            self.config.cases_per_law,
            self.config.max_object,
            self.config.max_components,
            self.config.max_dim,
            self.config.scalar_bound,
            self.mutation.as_str(),
        ));
        for law in &self.laws {
            out.push_str(&format!(
                "law {:<28} cases={:<4} failures={:<3} {}\n",
                law.name,
                law.cases,
                law.failures.len(),
                law.statement
            ));
            for f in &law.failures {
                out.push_str(&format!(
                    "  failure case={} seed={} {}\n",
                    f.case, f.seed, f.message
                ));
                if !f.counterexample.is_empty() {
                    out.push_str("  begin counterexample\n");
                    for line in f.counterexample.lines() {
                        out.push_str("  ");
                        out.push_str(line);
                        out.push('\n');
                    }
                    out.push_str("  end counterexample\n");
                }
            }
        }
        out.push_str(&format!(
            "total laws={} failures={}\n",
            self.laws.len(),
            self.total_failures()
        ));
        if with_timing {
            for law in &self.laws {
                out.push_str(&format!("time {} {}ms\n", law.name, law.millis));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// deterministic generation

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Derives the per-case seed from the base seed, the law name and the case
/// index; failures report it for isolated replay.
pub fn case_seed(base: u64, law: &str, case: usize) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in law.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    mix(base ^ h ^ (case as u64).wrapping_mul(0x9e3779b97f4a7c15))
}

/// Exact rational with numerator and denominator drawn from
/// `[-bound, bound]`, denominator nonzero; canonical by construction.
pub fn gen_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let n = rng.gen_range(-bound..=bound);
    let d = loop {
        let d = rng.gen_range(-bound..=bound);
        if d != 0 {
            break d;
        }
    };
    Rat::new(n.into(), d.into())
}

fn gen_decomp(rng: &mut ChaCha8Rng, cfg: &LawConfig) -> SpaceDecomp {
    let count = rng.gen_range(0..=cfg.max_components);
    SpaceDecomp::new((0..count).map(|_| rng.gen_range(0..=cfg.max_dim)).collect())
}

/// Uniform random 1-morphism within the configured bounds.
pub fn gen_one_mor(rng: &mut ChaCha8Rng, cfg: &LawConfig, src: usize, tgt: usize) -> OneMor {
    OneMor::from_fn(src, tgt, |_, _| gen_decomp(rng, cfg))
}

/// Uniform random 2-morphism between two parallel 1-morphisms.
pub fn gen_two_mor(rng: &mut ChaCha8Rng, cfg: &LawConfig, f: &OneMor, g: &OneMor) -> TwoMor {
    TwoMor::from_fn(f.clone(), g.clone(), |k, j| {
        Mat::from_fn(g.entry(k, j).total(), f.entry(k, j).total(), |_, _| {
            gen_rational(rng, cfg.scalar_bound)
        })
    })
    .expect("generated shapes agree")
}

fn gen_mat_mor(rng: &mut ChaCha8Rng, cfg: &LawConfig, src: usize, tgt: usize) -> MatMor<Rat> {
    MatMor::new(
        MatObj(src),
        MatObj(tgt),
        Mat::from_fn(tgt, src, |_, _| gen_rational(rng, cfg.scalar_bound)),
    )
    .expect("matrix carries the morphism")
}

// ---------------------------------------------------------------------------
// the mutation fixture

/// Horizontal composition with an optional corruption fixture applied.
pub fn hcompose2_under(mutation: Mutation, xi: &TwoMor, theta: &TwoMor) -> Result<TwoMor> {
    let composed = hcompose2(xi, theta)?;
    match mutation {
        Mutation::None => Ok(composed),
        Mutation::KronFlip => Ok(flip_target_layout(&composed, xi, theta)),
    }
}

/// Rewrites each entry with its row blocks placed in the flipped tensor
/// order (inner factor outermost) while columns keep the standard layout.
fn flip_target_layout(composed: &TwoMor, xi: &TwoMor, theta: &TwoMor) -> TwoMor {
    let mut entries = Vec::with_capacity(composed.entries().len());
    for m in 0..composed.src().tgt() {
        for j in 0..composed.src().src() {
            let e = composed.entry(m, j);
            let mut map = vec![0usize; e.rows()];
            let mut seg_off = 0;
            for k in 0..xi.src().src() {
                let xr = xi.tgt().entry(m, k).components();
                let tr = theta.tgt().entry(k, j).components();
                let mut normal_off = vec![0usize; xr.len() * tr.len()];
                let mut acc = 0;
                for (c, &xd) in xr.iter().enumerate() {
                    for (d, &td) in tr.iter().enumerate() {
                        normal_off[c * tr.len() + d] = acc;
                        acc += xd * td;
                    }
                }
                let seg_total = acc;
                let mut flipped_off = vec![0usize; xr.len() * tr.len()];
                acc = 0;
                for (d, &td) in tr.iter().enumerate() {
                    for (c, &xd) in xr.iter().enumerate() {
                        flipped_off[c * tr.len() + d] = acc;
                        acc += xd * td;
                    }
                }
                for c in 0..xr.len() {
                    for d in 0..tr.len() {
                        for r in 0..xr[c] * tr[d] {
                            map[seg_off + normal_off[c * tr.len() + d] + r] =
                                seg_off + flipped_off[c * tr.len() + d] + r;
                        }
                    }
                }
                seg_off += seg_total;
            }
            let mut out = Mat::zero(e.rows(), e.cols());
            for r in 0..e.rows() {
                for c in 0..e.cols() {
                    out[(map[r], c)] = e[(r, c)].clone();
                }
            }
            entries.push(out);
        }
    }
    TwoMor::new(composed.src().clone(), composed.tgt().clone(), entries)
        .expect("row permutation preserves shapes")
}

// ---------------------------------------------------------------------------
// suite plumbing

struct Ctx<'a> {
    cfg: &'a LawConfig,
    mutation: Mutation,
}

impl Ctx<'_> {
    fn rng(&self, law: &str, case: usize) -> (u64, ChaCha8Rng) {
        let seed = case_seed(self.cfg.seed, law, case);
        (seed, ChaCha8Rng::seed_from_u64(seed))
    }

    fn obj(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(1..=self.cfg.max_object.max(1))
    }
}

fn two_mor_doc(items: &[(&str, &TwoMor)]) -> String {
    let mut b = DocBuilder::new();
    for (name, t) in items {
        b.add_two_mor(name, t);
    }
    b.render()
}

fn mat_doc(items: &[(&str, &MatMor<Rat>)]) -> String {
    let mut b = DocBuilder::new();
    for (name, m) in items {
        b.add_value(name, &Value::Matrix((*m).clone()));
    }
    b.render()
}

type LawFn = for<'a, 'b> fn(&'a Ctx<'b>, &'a mut Vec<LawFailure>) -> usize;

const LAWS: &[(&str, &str, LawFn)] = &[
    (
        "matk-biproduct-axioms",
        "p.i = id, cross projections vanish, i_a p_a + i_b p_b = id (n, m <= 6)",
        law_matk_biproduct,
    ),
    (
        "matk-addition-via-biproduct",
        "codiag . (f (+) g) . diag = entrywise f + g, commutative and associative",
        law_matk_addition,
    ),
    (
        "matk-canonical-iso",
        "p_k . r . i_j = delta(k, j) and r is invertible (n, m <= 4)",
        law_matk_canonical,
    ),
    (
        "dnc-mul-equals-mat-mul",
        "biproduct-partitioned multiplication equals the direct product",
        law_dnc_mul,
    ),
    (
        "interchange",
        "(b2 . a2) o (b1 . a1) = (b2 o b1) . (a2 o a1) for horizontal o, vertical .",
        law_interchange,
    ),
    (
        "distributivity-horizontal",
        "g o (a + b) = g o a + g o b and (a + b) o g = a o g + b o g",
        law_distributivity_horizontal,
    ),
    (
        "distributivity-vertical",
        "a . (b + c) = a . b + a . c and (b + c) . a = b . a + c . a",
        law_distributivity_vertical,
    ),
    (
        "local-biproduct-axioms",
        "pi.nu = id, cross terms vanish, nu_1 pi_1 + nu_2 pi_2 = id on f (+) g",
        law_local_biproduct,
    ),
    (
        "distributor-iso",
        "f(g (+) h) ~ fg (+) fh: both composites are identities, pi/nu equations hold",
        law_distributor,
    ),
    (
        "associator-naturality",
        "re-bracketing squares commute against horizontal composites",
        law_associator_naturality,
    ),
    (
        "zero-constancy",
        "whiskering by zero 1-morphisms and composing with zero 2-morphisms is zero",
        law_zero_constancy,
    ),
    (
        "two-biproduct-conditions",
        "weak biproduct witness passes its defining conditions (n, m <= 4)",
        law_two_biproduct,
    ),
    (
        "sigma-rows",
        "row 2-morphisms (theta p | 0) match the direct whisker route (n, m <= 3)",
        law_sigma_rows,
    ),
    (
        "mediator-round-trip",
        "mediators satisfy the universal condition; reconstruction fixes them",
        law_mediator,
    ),
    (
        "canonical-equivalence",
        "zigzag identities for r and r' = i_a p_a (+) i_b p_b (n, m <= 3)",
        law_canonical_equiv,
    ),
];

/// Runs the whole suite with no mutation fixture.
pub fn run_suite(cfg: &LawConfig) -> LawReport {
    run_suite_with(cfg, Mutation::None)
}

/// Runs a single law by its report name; `None` when the name is unknown.
pub fn run_law(name: &str, cfg: &LawConfig, mutation: Mutation) -> Option<LawOutcome> {
    let ctx = Ctx { cfg, mutation };
    LAWS.iter()
        .find(|(n, _, _)| *n == name)
        .map(|(n, statement, f)| {
            let start = Instant::now();
            let mut failures = Vec::new();
            let cases = if cfg.cases_per_law == 0 {
                0
            } else {
                f(&ctx, &mut failures)
            };
            LawOutcome {
                name: n,
                statement,
                cases,
                failures,
                millis: start.elapsed().as_millis(),
            }
        })
}

/// Runs the whole suite, optionally with a corruption fixture enabled.
/// With `cases_per_law = 0` every law reports zero cases and zero failures.
pub fn run_suite_with(cfg: &LawConfig, mutation: Mutation) -> LawReport {
    let ctx = Ctx { cfg, mutation };
    let mut laws = Vec::with_capacity(LAWS.len());
    for (name, statement, f) in LAWS {
        let start = Instant::now();
        let mut failures = Vec::new();
        let cases = if cfg.cases_per_law == 0 {
            0
        } else {
            f(&ctx, &mut failures)
        };
        laws.push(LawOutcome {
            name,
            statement,
            cases,
            failures,
            millis: start.elapsed().as_millis(),
        });
    }
    LawReport {
        config: cfg.clone(),
        mutation,
        laws,
    }
}

fn push_failure(
    failures: &mut Vec<LawFailure>,
    case: usize,
    seed: u64,
    message: impl Into<String>,
    counterexample: String,
) {
    failures.push(LawFailure {
        case,
        seed,
        message: message.into(),
        counterexample,
    });
}

// ---------------------------------------------------------------------------
// matrix category laws

fn law_matk_biproduct(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let mut cases = 0;
    for n in 0..=6usize {
        for m in 0..=6usize {
            cases += 1;
            let (n_o, m_o) = (MatObj(n), MatObj(m));
            let pa: MatMor<Rat> = matcat::proj(n_o, m_o, Side::First);
            let pb: MatMor<Rat> = matcat::proj(n_o, m_o, Side::Second);
            let ia: MatMor<Rat> = matcat::inj(n_o, m_o, Side::First);
            let ib: MatMor<Rat> = matcat::inj(n_o, m_o, Side::Second);
            let ok = matcat::compose(&pa, &ia).unwrap() == MatMor::identity(n_o)
                && matcat::compose(&pb, &ib).unwrap() == MatMor::identity(m_o)
                && matcat::compose(&pa, &ib).unwrap() == MatMor::zero(m_o, n_o)
                && matcat::compose(&pb, &ia).unwrap() == MatMor::zero(n_o, m_o)
                && matcat::add_via_biproduct(
                    &matcat::compose(&ia, &pa).unwrap(),
                    &matcat::compose(&ib, &pb).unwrap(),
                )
                .unwrap()
                    == MatMor::identity(MatObj(n + m));
            if !ok {
                push_failure(
                    failures,
                    cases,
                    ctx.cfg.seed,
                    format!("axioms fail at ({n}, {m})"),
                    String::new(),
                );
            }
        }
    }
    cases
}

fn law_matk_addition(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("matk-addition-via-biproduct", case);
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let f = gen_mat_mor(&mut rng, ctx.cfg, cols, rows);
        let g = gen_mat_mor(&mut rng, ctx.cfg, cols, rows);
        let h = gen_mat_mor(&mut rng, ctx.cfg, cols, rows);
        let via = matcat::add_via_biproduct(&f, &g).unwrap();
        let entrywise = f.mat().mat_add(g.mat()).unwrap();
        let commuted = matcat::add_via_biproduct(&g, &f).unwrap();
        let assoc_l = matcat::add_via_biproduct(&via, &h).unwrap();
        let assoc_r =
            matcat::add_via_biproduct(&f, &matcat::add_via_biproduct(&g, &h).unwrap()).unwrap();
        if via.mat() != &entrywise || via != commuted || assoc_l != assoc_r {
            push_failure(
                failures,
                case,
                seed,
                "biproduct addition disagrees with entrywise addition",
                mat_doc(&[("f", &f), ("g", &g), ("h", &h)]),
            );
        }
    }
    cases
}

fn law_matk_canonical(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let mut cases = 0;
    for n in 0..=4usize {
        for m in 0..=4usize {
            cases += 1;
            let r: MatMor<Rat> = matcat::canonical_r(MatObj(n), MatObj(m));
            let mut ok = matcat::inverse(&r).is_some();
            for side_k in [Side::First, Side::Second] {
                for side_j in [Side::First, Side::Second] {
                    let p: MatMor<Rat> = matcat::proj(MatObj(n), MatObj(m), side_k);
                    let i: MatMor<Rat> = matcat::inj(MatObj(n), MatObj(m), side_j);
                    let picked = matcat::compose(&matcat::compose(&p, &r).unwrap(), &i).unwrap();
                    let expect = if side_k == side_j {
                        MatMor::identity(picked.src())
                    } else {
                        MatMor::zero(picked.src(), picked.tgt())
                    };
                    ok &= picked == expect;
                }
            }
            if !ok {
                push_failure(
                    failures,
                    cases,
                    ctx.cfg.seed,
                    format!("canonical morphism fails at ({n}, {m})"),
                    String::new(),
                );
            }
        }
    }
    cases
}

fn law_dnc_mul(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law.min(60);
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("dnc-mul-equals-mat-mul", case);
        // odd split shapes show up naturally in this range
        let z = rng.gen_range(1..=10);
        let y = rng.gen_range(1..=10);
        let x = rng.gen_range(1..=10);
        let threshold = rng.gen_range(1..=4);
        let a = gen_mat_mor(&mut rng, ctx.cfg, y, z);
        let b = gen_mat_mor(&mut rng, ctx.cfg, x, y);
        let dnc = matcat::dnc_mul(&a, &b, threshold).unwrap();
        let direct = matcat::compose(&a, &b).unwrap();
        if dnc != direct {
            push_failure(
                failures,
                case,
                seed,
                format!("split product differs at {z}x{y} . {y}x{x}, threshold {threshold}"),
                mat_doc(&[("a", &a), ("b", &b)]),
            );
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// two-level laws

fn law_interchange(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("interchange", case);
        let (a, b, c) = (ctx.obj(&mut rng), ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let h = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let k = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let l = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let m = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let alpha = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let beta = gen_two_mor(&mut rng, ctx.cfg, &g, &h);
        let alpha2 = gen_two_mor(&mut rng, ctx.cfg, &k, &l);
        let beta2 = gen_two_mor(&mut rng, ctx.cfg, &l, &m);
        let run = || -> Result<bool> {
            let lhs = hcompose2_under(
                ctx.mutation,
                &vcompose2(&beta2, &alpha2)?,
                &vcompose2(&beta, &alpha)?,
            )?;
            let rhs = vcompose2(
                &hcompose2_under(ctx.mutation, &beta2, &beta)?,
                &hcompose2_under(ctx.mutation, &alpha2, &alpha)?,
            )?;
            Ok(lhs == rhs)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => push_failure(
                failures,
                case,
                seed,
                "interchange of horizontal and vertical composition fails",
                two_mor_doc(&[
                    ("alpha", &alpha),
                    ("beta", &beta),
                    ("alpha2", &alpha2),
                    ("beta2", &beta2),
                ]),
            ),
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_distributivity_horizontal(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("distributivity-horizontal", case);
        let (a, b, c) = (ctx.obj(&mut rng), ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let k = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let l = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let alpha = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let beta = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let gamma = gen_two_mor(&mut rng, ctx.cfg, &k, &l);
        let delta = gen_two_mor(&mut rng, ctx.cfg, &k, &l);
        let run = || -> Result<bool> {
            let outer = hcompose2_under(ctx.mutation, &gamma, &add_two(&alpha, &beta)?)?
                == add_two(
                    &hcompose2_under(ctx.mutation, &gamma, &alpha)?,
                    &hcompose2_under(ctx.mutation, &gamma, &beta)?,
                )?;
            let inner = hcompose2_under(ctx.mutation, &add_two(&gamma, &delta)?, &alpha)?
                == add_two(
                    &hcompose2_under(ctx.mutation, &gamma, &alpha)?,
                    &hcompose2_under(ctx.mutation, &delta, &alpha)?,
                )?;
            Ok(outer && inner)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => push_failure(
                failures,
                case,
                seed,
                "horizontal composition does not distribute over addition",
                two_mor_doc(&[("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)]),
            ),
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_distributivity_vertical(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("distributivity-vertical", case);
        let (a, b) = (ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let h = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let beta = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let gamma = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let alpha = gen_two_mor(&mut rng, ctx.cfg, &g, &h);
        let pre = gen_two_mor(&mut rng, ctx.cfg, &h, &f);
        let run = || -> Result<bool> {
            let post_side = vcompose2(&alpha, &add_two(&beta, &gamma)?)?
                == add_two(&vcompose2(&alpha, &beta)?, &vcompose2(&alpha, &gamma)?)?;
            let pre_side = vcompose2(&add_two(&beta, &gamma)?, &pre)?
                == add_two(&vcompose2(&beta, &pre)?, &vcompose2(&gamma, &pre)?)?;
            Ok(post_side && pre_side)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => push_failure(
                failures,
                case,
                seed,
                "vertical composition does not distribute over addition",
                two_mor_doc(&[("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)]),
            ),
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_local_biproduct(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("local-biproduct-axioms", case);
        let (a, b) = (ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let run = || -> Result<bool> {
            let sum = oplus_one(&f, &g)?;
            let p1 = local_proj(&f, &g, Side::First)?;
            let p2 = local_proj(&f, &g, Side::Second)?;
            let n1 = local_inj(&f, &g, Side::First)?;
            let n2 = local_inj(&f, &g, Side::Second)?;
            Ok(vcompose2(&p1, &n1)? == id_two(&f)
                && vcompose2(&p2, &n2)? == id_two(&g)
                && vcompose2(&p1, &n2)?.is_zero()
                && vcompose2(&p2, &n1)?.is_zero()
                && add_two(&vcompose2(&n1, &p1)?, &vcompose2(&n2, &p2)?)? == id_two(&sum))
        };
        match run() {
            Ok(true) => {}
            Ok(false) => {
                push_failure(failures, case, seed, "local biproduct equations fail", String::new())
            }
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_distributor(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law.min(100);
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("distributor-iso", case);
        let (a, b, c) = (ctx.obj(&mut rng), ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let h = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let run = || -> Result<bool> {
            let (alpha, alpha_inv) = distributor(&f, &g, &h)?;
            let fg = hcompose1(&f, &g)?;
            let fh = hcompose1(&f, &h)?;
            let fgh = hcompose1(&f, &oplus_one(&g, &h)?)?;
            let isos = vcompose2(&alpha, &alpha_inv)? == id_two(&oplus_one(&fg, &fh)?)
                && vcompose2(&alpha_inv, &alpha)? == id_two(&fgh);
            let pi_g = local_proj(&g, &h, Side::First)?;
            let pi_h = local_proj(&g, &h, Side::Second)?;
            let projections = vcompose2(&whisker_left(&f, &pi_g)?, &alpha_inv)?
                == local_proj(&fg, &fh, Side::First)?
                && vcompose2(&whisker_left(&f, &pi_h)?, &alpha_inv)?
                    == local_proj(&fg, &fh, Side::Second)?;
            let nu_g = local_inj(&g, &h, Side::First)?;
            let nu_h = local_inj(&g, &h, Side::Second)?;
            let injections = vcompose2(&alpha, &whisker_left(&f, &nu_g)?)?
                == local_inj(&fg, &fh, Side::First)?
                && vcompose2(&alpha, &whisker_left(&f, &nu_h)?)?
                    == local_inj(&fg, &fh, Side::Second)?;
            Ok(isos && projections && injections)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => {
                push_failure(failures, case, seed, "distributor equations fail", String::new())
            }
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_associator_naturality(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law.min(100);
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("associator-naturality", case);
        let (a, b, c, d) = (
            ctx.obj(&mut rng),
            ctx.obj(&mut rng),
            ctx.obj(&mut rng),
            ctx.obj(&mut rng),
        );
        let e1 = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let e2 = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let f1 = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let f2 = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let r1 = gen_one_mor(&mut rng, ctx.cfg, c, d);
        let r2 = gen_one_mor(&mut rng, ctx.cfg, c, d);
        let eps = gen_two_mor(&mut rng, ctx.cfg, &e1, &e2);
        let phi = gen_two_mor(&mut rng, ctx.cfg, &f1, &f2);
        let rho = gen_two_mor(&mut rng, ctx.cfg, &r1, &r2);
        let run = || -> Result<bool> {
            let lhs = vcompose2(
                &associator(&r2, &f2, &e2)?,
                &hcompose2(&hcompose2(&rho, &phi)?, &eps)?,
            )?;
            let rhs = vcompose2(
                &hcompose2(&rho, &hcompose2(&phi, &eps)?)?,
                &associator(&r1, &f1, &e1)?,
            )?;
            Ok(lhs == rhs)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => push_failure(
                failures,
                case,
                seed,
                "associator naturality square does not commute",
                two_mor_doc(&[("eps", &eps), ("phi", &phi), ("rho", &rho)]),
            ),
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_zero_constancy(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law;
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("zero-constancy", case);
        let (a, b, c) = (ctx.obj(&mut rng), ctx.obj(&mut rng), ctx.obj(&mut rng));
        let f = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let g = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let w = gen_one_mor(&mut rng, ctx.cfg, b, c);
        let h = gen_one_mor(&mut rng, ctx.cfg, a, b);
        let t = gen_two_mor(&mut rng, ctx.cfg, &f, &g);
        let run = || -> Result<bool> {
            // whisker by the zero 1-morphism: everything collapses to dim 0
            let by_zero = whisker_left(&zero_one(b, c), &t)?;
            let collapsed =
                by_zero.src().is_zero_dim() && by_zero.tgt().is_zero_dim() && by_zero.is_zero();
            // whisker of a zero 2-morphism stays zero
            let zw = whisker_left(&w, &zero_two(&f, &g)?)?;
            // vertical composition with a zero 2-morphism is zero
            let vz = vcompose2(&zero_two(&g, &h)?, &t)?;
            Ok(collapsed && zw.is_zero() && vz.is_zero())
        };
        match run() {
            Ok(true) => {}
            Ok(false) => push_failure(
                failures,
                case,
                seed,
                "a zero composite has a nonzero entry",
                two_mor_doc(&[("t", &t)]),
            ),
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_two_biproduct(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let mut cases = 0;
    for n in 0..=4usize {
        for m in 0..=4usize {
            cases += 1;
            let w = make_witness(n, m);
            let report = check_biproduct_conditions(&w);
            if !report.passed() {
                let detail: Vec<String> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| {
                        format!(
                            "{}{}",
                            c.name,
                            c.detail
                                .as_deref()
                                .map(|d| format!(" ({d})"))
                                .unwrap_or_default()
                        )
                    })
                    .collect();
                push_failure(
                    failures,
                    cases,
                    ctx.cfg.seed,
                    format!("({n}, {m}): {}", detail.join("; ")),
                    String::new(),
                );
            }
        }
    }
    cases
}

fn law_sigma_rows(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let mut cases = 0;
    for n in 1..=3usize {
        for m in 1..=3usize {
            cases += 1;
            let w = make_witness(n, m);
            let run = || -> Result<bool> {
                let (sa, sb) = sigma_rows(&w)?;
                let (da, db) = sigma_rows_direct(&w)?;
                Ok(sa == da && sb == db)
            };
            match run() {
                Ok(true) => {}
                Ok(false) => push_failure(
                    failures,
                    cases,
                    ctx.cfg.seed,
                    format!("row 2-morphisms disagree at ({n}, {m})"),
                    String::new(),
                ),
                Err(e) => {
                    push_failure(failures, cases, ctx.cfg.seed, e.to_string(), String::new())
                }
            }
        }
    }
    cases
}

fn law_mediator(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let cases = ctx.cfg.cases_per_law.min(100);
    // tighter bounds here: the round trip inverts generated 2-morphisms
    let small = LawConfig {
        max_components: 2,
        max_dim: 2,
        ..ctx.cfg.clone()
    };
    for case in 0..cases {
        let (seed, mut rng) = ctx.rng("mediator-round-trip", case);
        let (n, m, x) = (
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
        );
        let w = make_witness(n, m);
        let mut run = || -> Result<bool> {
            let cone = Cone::new(
                gen_one_mor(&mut rng, &small, x, n),
                gen_one_mor(&mut rng, &small, x, m),
            )?;
            let cone2 = Cone::new(
                gen_one_mor(&mut rng, &small, x, n),
                gen_one_mor(&mut rng, &small, x, m),
            )?;
            let med = product_mediator(&w, &cone)?;
            let med2 = product_mediator(&w, &cone2)?;
            let sigma_a = gen_two_mor(&mut rng, &small, &cone.f, &cone2.f);
            let sigma_b = gen_two_mor(&mut rng, &small, &cone.g, &cone2.g);
            let gamma = mediator_gamma(&w, &cone, &cone2, &sigma_a, &sigma_b)?;
            let cond_a = whisker_left(&w.p_a, &gamma)?
                == universal_condition_rhs(&med, &med2, &sigma_a, Side::First)?;
            let cond_b = whisker_left(&w.p_b, &gamma)?
                == universal_condition_rhs(&med, &med2, &sigma_b, Side::Second)?;
            let fixed = reconstruct_gamma(&w, &gamma)? == gamma;
            let (lhs, rhs) = theta_p_expansion(&w, &cone)?;
            let expansion = lhs == rhs;
            // uniqueness surrogate: any 2-morphism with gamma's projected
            // values is gamma, because projections read off row bands
            let unique = if inverse(&sigma_a).is_ok() && inverse(&sigma_b).is_ok() {
                let va = whisker_left(&w.p_a, &gamma)?;
                let vb = whisker_left(&w.p_b, &gamma)?;
                monic_mediator(&w, &med.b, &med2.b, &va, &vb)? == gamma
            } else {
                true
            };
            Ok(cond_a && cond_b && fixed && expansion && unique)
        };
        match run() {
            Ok(true) => {}
            Ok(false) => {
                push_failure(failures, case, seed, "mediator round trip fails", String::new())
            }
            Err(e) => push_failure(failures, case, seed, e.to_string(), String::new()),
        }
    }
    cases
}

fn law_canonical_equiv(ctx: &Ctx, failures: &mut Vec<LawFailure>) -> usize {
    let mut cases = 0;
    for n in 0..=3usize {
        for m in 0..=3usize {
            cases += 1;
            let run = || -> Result<bool> {
                let ew = canonical_equiv(n, m)?;
                let zig = check_zigzags(&ew)?;
                let proj = if n >= 1 && m >= 1 {
                    check_equiv_projection(&make_witness(n, m), &ew)?
                } else {
                    true
                };
                Ok(zig && proj)
            };
            match run() {
                Ok(true) => {}
                Ok(false) => push_failure(
                    failures,
                    cases,
                    ctx.cfg.seed,
                    format!("equivalence identities fail at ({n}, {m})"),
                    String::new(),
                ),
                Err(e) => {
                    push_failure(failures, cases, ctx.cfg.seed, e.to_string(), String::new())
                }
            }
        }
    }
    cases
}
