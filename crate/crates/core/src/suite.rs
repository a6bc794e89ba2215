//! The verification suite: named checks, each producing one record of
//! measured values and a pass/fail verdict.
//!
//! | id | what it checks |
//! |---|---|
//! | `tightness` | `gamma(C_p x C_p) = p + 1` for `p` in 2, 3, 5 |
//! | `permut-sweep` | `2 gamma(H) <= n + 2` for every noncyclic `H <= sym(n)`, `3 <= n <= 6` |
//! | `bounds` | the bounds report on every catalog group of order at most 500 |
//! | `soluble` | soluble noncyclic groups with cyclic abelianization have `gamma = 2` |
//! | `named-values` | `gamma` of symmetric, alternating and small almost simple groups |
//! | `almost-transitive` | the three affine examples are irreducible, almost transitive, `gamma = 2` |
//! | `wreath-cover` | sampled conjugators in `alt(5) wr C_7` |
//! | `gamma-squared` | orders outside `alt(6)^2` in its index-4 extension, and its 2-class cover |
//! | `sl2-wreath` | the `SL(2,32)^5` extension: quotient, Sylow 5-subgroup, sampled orders |
//! | `oracle` | `sigma` and `gamma` against brute force on catalog groups of order at most 60 |
//! | `coset-conditions` | the four coset conditions agree on every instance |
//! | `conjugate-meet` | `H N = G` with `H` proper: conjugates of `H ∩ N` miss part of `N` |
//! | `minimal-normal-meet` | `H N_1 = H N_2 = G` for distinct minimal normal `N_i` forces `H ∩ N_i = 1` |
//! | `monolithic` | `gamma = 2` with no proper quotient of `gamma = 2` forces one minimal normal subgroup |
//! | `scorza` | `sigma = 3` exactly when there are three subgroups of index 2 |
//! | `trivial-bounds` | `sigma >= 3`, `gamma >= 2`, and no proper subgroup's conjugates cover |
//!
//! The first eleven are the acceptance criteria; see [`CRITERIA`].

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog, catalog_up_to, CatalogEntry};
use crate::config::Caps;
use crate::constructions::affine::{affine_group, AffineAction, SemilinearMap};
use crate::constructions::examples::{
    self, example3_fixed_points, gamma_squared_example, sl2_wreath_example,
};
use crate::constructions::lemma::{classify_intersection_type, lemma_prev_check, IntersectionType};
use crate::constructions::named::{alt, elem_abelian_p2, m10, pgammal_2_9, psl2, sym};
use crate::constructions::wreath::{
    decompose, wreath_cover_conjugator, wreath_cyclic, wreath_element,
};
use crate::cover::{
    check_bounds_in, classes_meeting, gamma, gamma_in, gamma_lower_bound, gamma_with_candidates,
    sigma_in, Value,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldMatrix};
use crate::group::PermGroup;
use crate::lattice::{all_subgroups, SubgroupLattice};
use crate::oracle::{gamma_oracle, sigma_oracle};
use crate::perm::{parse_perm_list, Perm};
use crate::structure::{
    abelianization_is_cyclic, conjugacy_classes, intersection, is_cyclic, is_soluble,
    minimal_normal_subgroups, quotient_group, sylow_subgroup,
};

/// Checks that make up the acceptance criteria, in criterion order.
pub const CRITERIA: &[&str] = &[
    "tightness",
    "permut-sweep",
    "bounds",
    "soluble",
    "named-values",
    "almost-transitive",
    "wreath-cover",
    "gamma-squared",
    "sl2-wreath",
    "oracle",
    "coset-conditions",
];

/// Every check, in run order.
pub const CHECKS: &[&str] = &[
    "tightness",
    "permut-sweep",
    "bounds",
    "soluble",
    "named-values",
    "almost-transitive",
    "wreath-cover",
    "gamma-squared",
    "sl2-wreath",
    "oracle",
    "coset-conditions",
    "conjugate-meet",
    "minimal-normal-meet",
    "monolithic",
    "scorza",
    "trivial-bounds",
];

/// Lattice cap used for `sym(7)`, whose `gamma > 2` needs every maximal subgroup.
pub const SYM7_LATTICE_CAP: u64 = 5040;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub caps: Caps,
    pub seed: u64,
    pub wreath_samples: u64,
    pub sl2_samples: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            caps: Caps::default(),
            seed: examples::DEFAULT_SEED,
            wreath_samples: 1000,
            sl2_samples: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub passed: bool,
    /// measured values, in a fixed order
    pub values: Vec<(String, String)>,
    pub failures: Vec<String>,
}

fn token(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join("_")
}

impl CheckResult {
    fn new(id: &'static str) -> Self {
        CheckResult {
            id,
            passed: true,
            values: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn value(&mut self, key: impl Into<String>, v: impl ToString) {
        self.values.push((key.into(), v.to_string()));
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            self.failures.push(what());
        }
    }

    fn fail_with(id: &'static str, e: &Error) -> Self {
        let mut r = CheckResult::new(id);
        r.require(false, || format!("error: {e}"));
        r
    }

    /// `check=<id> pass=<bool> key=value .. failures=<n> [first_failure=..]`,
    /// with whitespace inside values replaced by `_`.
    pub fn record(&self) -> String {
        let mut out = format!("check={} pass={}", self.id, self.passed);
        for (k, v) in &self.values {
            out.push_str(&format!(" {}={}", token(k), token(v)));
        }
        out.push_str(&format!(" failures={}", self.failures.len()));
        if let Some(f) = self.failures.first() {
            out.push_str(&format!(" first_failure={}", token(f)));
        }
        out
    }
}

/// Runs one check. Errors inside a check become failures of that check.
pub fn run_check(id: &str, cfg: &SuiteConfig) -> Result<CheckResult> {
    let id: &'static str = CHECKS
        .iter()
        .find(|&&c| c == id)
        .ok_or_else(|| Error::UnsupportedParams(format!("unknown check '{id}'")))?;
    let run = match id {
        "tightness" => tightness(cfg),
        "permut-sweep" => permut_sweep(cfg),
        "bounds" => bounds(cfg),
        "soluble" => soluble(cfg),
        "named-values" => named_values(cfg),
        "almost-transitive" => almost_transitive(cfg),
        "wreath-cover" => wreath_cover(cfg),
        "gamma-squared" => gamma_squared(cfg),
        "sl2-wreath" => sl2_wreath(cfg),
        "oracle" => oracle(cfg),
        "coset-conditions" => coset_conditions(cfg),
        "conjugate-meet" => conjugate_meet(cfg),
        "minimal-normal-meet" => minimal_normal_meet(cfg),
        "monolithic" => monolithic(cfg),
        "scorza" => scorza(cfg),
        "trivial-bounds" => trivial_bounds(cfg),
        _ => unreachable!("listed in CHECKS"),
    };
    Ok(run.unwrap_or_else(|e| CheckResult::fail_with(id, &e)))
}

/// Runs the selected checks (all when `only` is empty), in [`CHECKS`] order.
pub fn run_suite(cfg: &SuiteConfig, only: &[String]) -> Result<Vec<CheckResult>> {
    for o in only {
        if !CHECKS.contains(&o.as_str()) {
            return Err(Error::UnsupportedParams(format!("unknown check '{o}'")));
        }
    }
    CHECKS
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o == *c))
        .map(|c| run_check(c, cfg))
        .collect()
}

fn tightness(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("tightness");
    for p in [2usize, 3, 5] {
        let g = gamma(&elem_abelian_p2(p)?, &cfg.caps)?;
        r.value(format!("gamma_p{p}"), g.value);
        r.require(g.value == Value::Finite(p as u64 + 1), || {
            format!("gamma(C{p} x C{p}) = {}", g.value)
        });
    }
    Ok(r)
}

fn permut_sweep(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("permut-sweep");
    for n in 3..=6usize {
        let lattice = all_subgroups(&sym(n)?, &cfg.caps)?;
        let mut checked = 0;
        let mut worst = 0u64;
        for rep in lattice.class_reps() {
            let h = lattice.perm_group(rep)?;
            if is_cyclic(&h) {
                continue;
            }
            checked += 1;
            let g = gamma(&h, &cfg.caps)?.value;
            let ok = matches!(g, Value::Finite(v) if 2 * v <= n as u64 + 2);
            if let Value::Finite(v) = g {
                worst = worst.max(v);
            }
            r.require(ok, || {
                format!("sym({n}) subgroup of order {} has gamma {g}", h.order())
            });
        }
        r.value(format!("subgroups_{n}"), lattice.len());
        r.value(format!("noncyclic_classes_{n}"), checked);
        r.value(format!("max_gamma_{n}"), worst);
    }
    Ok(r)
}

/// Catalog groups of order at most `max` that fit the lattice cap.
fn lattice_catalog(max: u128, caps: &Caps) -> Result<(Vec<CatalogEntry>, usize)> {
    let all = catalog_up_to(max, caps)?;
    let total = all.len();
    let fit: Vec<CatalogEntry> = all
        .into_iter()
        .filter(|e| e.order() <= caps.lattice as u128)
        .collect();
    let skipped = total - fit.len();
    Ok((fit, skipped))
}

fn bounds(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("bounds");
    let (entries, skipped) = lattice_catalog(500, &cfg.caps)?;
    let mut equality_cases = 0;
    for e in &entries {
        let lattice = all_subgroups(&e.group, &cfg.caps)?;
        let classes = conjugacy_classes(&e.group, &cfg.caps)?;
        let b = check_bounds_in(&lattice, &classes, &cfg.caps)?;
        if b.basso_equality.is_some() {
            equality_cases += 1;
        }
        r.require(b.all_ok(), || format!("{}: {b:?}", e.label()));
    }
    r.value("groups", entries.len());
    r.value("skipped_cap", skipped);
    r.value("equality_cases", equality_cases);
    Ok(r)
}

fn soluble(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("soluble");
    let (entries, skipped) = lattice_catalog(500, &cfg.caps)?;
    let mut hits = 0;
    for e in &entries {
        let g = &e.group;
        if is_cyclic(g) || !is_soluble(g)? || !abelianization_is_cyclic(g)? {
            continue;
        }
        hits += 1;
        let v = gamma(g, &cfg.caps)?.value;
        r.require(v == Value::Finite(2), || {
            format!("{}: gamma = {v}", e.label())
        });
    }
    r.value("groups", hits);
    r.value("skipped_cap", skipped);
    Ok(r)
}

/// A normal covering number found either exactly or between a lower bound
/// and the best cover among documented candidate subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGamma {
    pub lower: Value,
    pub upper: Value,
    /// `lattice` or `candidates`
    pub method: &'static str,
}

impl NamedGamma {
    pub fn exact(&self) -> Option<Value> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

fn group_on(degree: usize, gens: &str) -> Result<PermGroup> {
    PermGroup::from_generators(degree, parse_perm_list(gens, degree)?)
}

/// Candidate subgroups of `alt(7)` and `alt(8)`: point stabilizers,
/// intransitive and imprimitive maximal subgroups intersected with the
/// alternating group, and the two classes of `PSL(2,7)` in `alt(7)` or
/// `AGL(3,2)` in `alt(8)`.
pub fn alt_candidates(n: usize, caps: &Caps) -> Result<Vec<PermGroup>> {
    let a = alt(n)?;
    let mut out = vec![a.pointwise_stabilizer(&[n - 1])?];
    let (sub_gens, extra): (&[&str], Vec<PermGroup>) = match n {
        7 => {
            let l = group_on(7, "(1,2,3,4,5,6,7),(2,3)(4,7)")?;
            let t = Perm::parse("(1,2)", 7)?;
            let gens = l.generators().iter().map(|g| g.conjugate_by(&t)).collect();
            let l2 = PermGroup::from_generators(7, gens)?;
            (
                &["(1,2),(1,2,3,4,5),(6,7)", "(1,2),(1,2,3,4),(5,6),(5,6,7)"],
                vec![l, l2],
            )
        }
        8 => {
            let field = Field::new(2)?;
            let mut k_gens = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut m = FieldMatrix::identity(3);
                        m.entries[i * 3 + j] = 1;
                        k_gens.push(SemilinearMap::linear(m));
                    }
                }
            }
            let agl = affine_group(
                &AffineAction {
                    field,
                    dim: 3,
                    k_gens,
                },
                caps,
            )?
            .group;
            let t = Perm::parse("(1,2)", 8)?;
            let gens = agl
                .generators()
                .iter()
                .map(|g| g.conjugate_by(&t))
                .collect();
            let agl2 = PermGroup::from_generators(8, gens)?;
            (
                &[
                    "(1,2),(1,2,3,4,5,6),(7,8)",
                    "(1,2),(1,2,3,4,5),(6,7),(6,7,8)",
                    "(1,2),(1,2,3,4),(5,6),(5,6,7,8),(1,5)(2,6)(3,7)(4,8)",
                    "(1,2),(1,3)(2,4),(1,3,5,7)(2,4,6,8),(1,3)(2,4)(5,7)(6,8)",
                ],
                vec![agl, agl2],
            )
        }
        _ => {
            return Err(Error::UnsupportedParams(format!(
                "no candidates for alt({n})"
            )))
        }
    };
    for s in sub_gens {
        out.push(intersection(&group_on(n, s)?, &a, caps)?);
    }
    out.extend(extra);
    Ok(out)
}

/// `gamma` of `alt(n)`: exact when the lattice fits, otherwise bracketed by
/// the trivial lower bound and the best candidate cover.
pub fn alt_gamma(n: usize, caps: &Caps) -> Result<NamedGamma> {
    let g = alt(n)?;
    if g.order() <= caps.lattice as u128 {
        let v = gamma(&g, caps)?.value;
        return Ok(NamedGamma {
            lower: v,
            upper: v,
            method: "lattice",
        });
    }
    let cert = gamma_with_candidates(&g, &alt_candidates(n, caps)?, caps)?;
    Ok(NamedGamma {
        lower: gamma_lower_bound(&g),
        upper: cert.value,
        method: "candidates",
    })
}

fn named_values(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("named-values");
    let caps = &cfg.caps;
    for n in 3..=6 {
        let v = gamma(&sym(n)?, caps)?.value;
        r.value(format!("gamma_sym{n}"), v);
        r.require(v == Value::Finite(2), || format!("gamma(sym({n})) = {v}"));
    }
    let s7_caps = caps.with_lattice(caps.lattice.max(SYM7_LATTICE_CAP));
    let v = gamma(&sym(7)?, &s7_caps)?.value;
    r.value("gamma_sym7", v);
    r.require(v > Value::Finite(2), || format!("gamma(sym(7)) = {v}"));
    for n in 4..=8 {
        let ng = alt_gamma(n, caps)?;
        r.value(format!("alt{n}_lower"), ng.lower);
        r.value(format!("alt{n}_upper"), ng.upper);
        r.value(format!("alt{n}_method"), ng.method);
        if let (Value::Finite(lo), Value::Finite(up)) = (ng.lower, ng.upper) {
            r.value(format!("alt{n}_gap"), up - lo);
        }
        r.require(ng.exact() == Some(Value::Finite(2)), || {
            format!("gamma(alt({n})) in [{}, {}]", ng.lower, ng.upper)
        });
    }
    let named: [(&str, PermGroup, u64); 4] = [
        ("m10", m10()?, 2),
        ("pgammal_2_9", pgammal_2_9()?, 3),
        ("psl2_7", psl2(7)?, 2),
        ("psl2_11", psl2(11)?, 2),
    ];
    for (name, g, want) in named {
        let v = gamma(&g, caps)?.value;
        r.value(format!("gamma_{name}"), v);
        r.require(v == Value::Finite(want), || format!("gamma({name}) = {v}"));
    }
    Ok(r)
}

fn almost_transitive(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("almost-transitive");
    let caps = &cfg.caps;
    let cases = [
        ("example1", examples::example1(caps)?),
        ("example2_3_7", examples::example2(3, 7, caps)?),
        ("example3_7", examples::example3(7, caps)?),
    ];
    for (name, ex) in &cases {
        let irr = ex.irreducible(caps)?;
        let at = ex.almost_transitive(caps)?;
        let cover = ex.two_class_cover(caps)?;
        r.value(format!("{name}_k"), ex.k.order());
        r.value(format!("{name}_irreducible"), irr);
        r.value(format!("{name}_almost_transitive"), at);
        r.value(format!("{name}_gamma"), cover.value);
        r.require(irr && at, || {
            format!("{name}: irreducible {irr}, almost transitive {at}")
        });
        r.require(cover.verified && cover.value == Value::Finite(2), || {
            format!("{name}: two-class cover gives {}", cover.value)
        });
    }
    // the next admissible field, checked on K alone
    let ex11 = examples::example3(11, caps)?;
    let at11 = ex11.almost_transitive(caps)?;
    r.value("example3_11_k", ex11.k.order());
    r.value("example3_11_almost_transitive", at11);
    r.require(at11, || {
        "example3 with q = 11 is not almost transitive".into()
    });
    let fp = example3_fixed_points(7)?;
    r.value("example3_7_fixed_tuples", fp.with_fixed_point);
    r.require(fp.fixed_forces_trivial_a && fp.a_meets_b_trivially, || {
        format!("example3 fixed points: {fp:?}")
    });
    Ok(r)
}

fn wreath_cover(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("wreath-cover");
    let w = wreath_cyclic(&alt(5)?, 7, &cfg.caps)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut in_m, mut verified) = (0u64, 0u64);
    for i in 0..cfg.wreath_samples {
        let g = w.group.random_element(&mut rng);
        if w.base.contains_unchecked(&g) {
            in_m += 1;
            continue;
        }
        match wreath_cover_conjugator(&w, &g) {
            Ok((s, x)) => {
                let (_, blocks) = decompose(&g, w.p)?;
                let conj = wreath_element(&x, &(0..w.p).collect::<Vec<_>>());
                let ok = w.diagonal_element(&s, blocks[0]).conjugate_by(&conj) == g
                    && w.s.contains_unchecked(&s)
                    && x.iter().all(|xi| w.s.contains_unchecked(xi));
                if ok {
                    verified += 1;
                }
                r.require(ok, || format!("sample {i}: conjugator does not verify"));
            }
            Err(e) => r.require(false, || format!("sample {i}: {e}")),
        }
    }
    r.value("seed", cfg.seed);
    r.value("samples", cfg.wreath_samples);
    r.value("in_base", in_m);
    r.value("verified", verified);
    Ok(r)
}

fn gamma_squared(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("gamma-squared");
    let ex = gamma_squared_example()?;
    let hist = ex.order_histogram(&cfg.caps)?;
    let total = hist.total();
    r.value("order", ex.group.order());
    r.value("scanned", hist.elements());
    for (o, c) in &total {
        r.value(format!("order_{o}"), c);
    }
    r.require(hist.elements() == 388_800, || {
        format!("scanned {} elements", hist.elements())
    });
    r.require(hist.divides_16(), || format!("orders outside M: {total:?}"));
    r.require(hist.cases_hold(), || "per-coset order cases fail".into());
    let cover = ex.cover(&cfg.caps)?;
    let lower = gamma_lower_bound(&ex.group);
    r.value("gamma_upper", cover.value);
    r.value("gamma_lower", lower);
    r.require(
        cover.verified && cover.value == Value::Finite(2) && lower == Value::Finite(2),
        || format!("gamma in [{lower}, {}]", cover.value),
    );
    let n = ex.sylow2_normalizer(&cfg.caps)?;
    let kind = classify_intersection_type(&ex.group, &ex.components, &n, &cfg.caps)?;
    let label = match &kind {
        IntersectionType::ProductType { t_order } => format!("product:{t_order}"),
        IntersectionType::DiagonalType { partition } => format!("diagonal:{}", partition.len()),
        IntersectionType::TrivialIntersection => "trivial".into(),
    };
    r.value("sylow2_normalizer_type", label);
    r.require(matches!(kind, IntersectionType::ProductType { .. }), || {
        format!("Sylow 2-normalizer meets M as {kind:?}")
    });
    Ok(r)
}

fn sl2_wreath(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("sl2-wreath");
    let ex = sl2_wreath_example(5)?;
    let rep = ex.verify(cfg.sl2_samples, cfg.seed, &cfg.caps)?;
    r.value("degree", ex.group.degree());
    r.value("m_order", ex.m.order());
    r.value("quotient_order", rep.quotient_order);
    r.value("quotient_cyclic", rep.quotient_cyclic);
    r.value("sylow_order", rep.sylow_order);
    r.value("x_order", rep.x_order);
    r.value("seed", rep.samples.seed);
    r.value("samples", rep.samples.samples);
    r.value("outside_m", rep.samples.outside_m);
    r.value("divisible", rep.samples.divisible);
    r.require(rep.ok(5), || format!("{rep:?}"));
    Ok(r)
}

fn oracle(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("oracle");
    let entries = catalog_up_to(60, &cfg.caps)?;
    for e in &entries {
        let lattice = all_subgroups(&e.group, &cfg.caps)?;
        let classes = conjugacy_classes(&e.group, &cfg.caps)?;
        let s = sigma_in(&lattice)?.value;
        let g = gamma_in(&lattice, &classes)?.value;
        let so = sigma_oracle(&e.group, &cfg.caps)?;
        let go = gamma_oracle(&e.group, &cfg.caps)?;
        r.require(s == so && g == go, || {
            format!("{}: solver ({s}, {g}) oracle ({so}, {go})", e.label())
        });
    }
    r.value("groups", entries.len());
    Ok(r)
}

/// What an instance of the coset conditions is expected to give.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// all four conditions hold
    Holds,
    /// all four conditions fail
    Fails,
    /// the four conditions must agree; no independent value
    Agree,
    /// the hypotheses do not hold and the check must refuse the input
    Rejected,
}

/// A named `(G, H, K)` instance of the coset conditions.
pub struct CosetInstance {
    pub name: &'static str,
    pub g: PermGroup,
    pub h: PermGroup,
    pub k: PermGroup,
    pub expect: Expect,
}

fn with_gen(h: &PermGroup, extra: Perm) -> Result<PermGroup> {
    let mut gens = h.generators().to_vec();
    gens.push(extra);
    PermGroup::from_generators(h.degree(), gens)
}

pub fn coset_instances(caps: &Caps) -> Result<Vec<CosetInstance>> {
    use crate::constructions::named::{m10_outer, pgl2};
    use crate::structure::normalizer;
    use Expect::*;
    let inst = |name, g: &PermGroup, h: &PermGroup, k: PermGroup, expect| CosetInstance {
        name,
        g: g.clone(),
        h: h.clone(),
        k,
        expect,
    };
    let mut out = Vec::new();

    let s4 = sym(4)?;
    let s3 = s4.pointwise_stabilizer(&[3])?;
    out.push(inst("sym4_a4_s3", &s4, &alt(4)?, s3.clone(), Fails));
    out.push(inst(
        "sym4_d8_s3",
        &s4,
        &group_on(4, "(1,2,3,4),(1,3)")?,
        s3.clone(),
        Holds,
    ));
    out.push(inst(
        "sym4_s3_d8",
        &s4,
        &s3,
        group_on(4, "(1,2,3,4),(1,3)")?,
        Rejected,
    ));

    let m = m10()?;
    let a6 = psl2(9)?;
    let n5 = normalizer(&m, &sylow_subgroup(&m, 5, caps)?, caps)?;
    let n3 = normalizer(&m, &sylow_subgroup(&m, 3, caps)?, caps)?;
    out.push(inst(
        "m10_a6_sylow2",
        &m,
        &a6,
        sylow_subgroup(&m, 2, caps)?,
        Holds,
    ));
    out.push(inst("m10_a6_n5", &m, &a6, n5, Agree));
    out.push(inst("m10_a6_n3", &m, &a6, n3, Agree));

    let s5 = sym(5)?;
    out.push(inst(
        "sym5_a5_s4",
        &s5,
        &alt(5)?,
        s5.pointwise_stabilizer(&[4])?,
        Agree,
    ));
    out.push(inst(
        "sym5_a5_s3xs2",
        &s5,
        &alt(5)?,
        group_on(5, "(1,2),(1,2,3),(4,5)")?,
        Agree,
    ));

    let pgl = pgl2(7)?;
    out.push(inst(
        "pgl2_7_psl_sylow2",
        &pgl,
        &psl2(7)?,
        sylow_subgroup(&pgl, 2, caps)?,
        Agree,
    ));

    let s6 = sym(6)?;
    out.push(inst(
        "sym6_a6_s5",
        &s6,
        &alt(6)?,
        s6.pointwise_stabilizer(&[5])?,
        Agree,
    ));
    out.push(inst(
        "sym6_a6_s4xs2",
        &s6,
        &alt(6)?,
        group_on(6, "(1,2),(1,2,3,4),(5,6)")?,
        Agree,
    ));
    out.push(inst(
        "sym6_a6_sylow2",
        &s6,
        &alt(6)?,
        sylow_subgroup(&s6, 2, caps)?,
        Rejected,
    ));

    let aut = pgammal_2_9()?;
    let m10_in_aut = with_gen(&a6, m10_outer())?;
    out.push(inst(
        "pgammal_2_9_m10_sylow2",
        &aut,
        &m10_in_aut,
        sylow_subgroup(&aut, 2, caps)?,
        Agree,
    ));

    let ex = examples::example1(caps)?;
    let g = ex.group(caps)?;
    let mut mt = g.m.clone();
    for t in ex.t.generators() {
        mt = with_gen(&mt, t.clone())?;
    }
    out.push(inst("example1_mt_k", &g.group, &mt, ex.k.clone(), Holds));
    Ok(out)
}

fn coset_conditions(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("coset-conditions");
    let (mut agree, mut diverge, mut rejected) = (0, 0, 0);
    for inst in coset_instances(&cfg.caps)? {
        let got = lemma_prev_check(&inst.g, &inst.h, &inst.k, &cfg.caps);
        let shown = match &got {
            Ok(rep) => rep.cond1.to_string(),
            Err(Error::HypothesisFailed(_)) => "rejected".to_string(),
            Err(Error::EquivalenceViolation(_)) => "diverge".to_string(),
            Err(_) => "error".to_string(),
        };
        r.value(inst.name, &shown);
        match (&got, inst.expect) {
            (Ok(rep), Expect::Holds | Expect::Fails | Expect::Agree) => {
                agree += 1;
                let want = match inst.expect {
                    Expect::Holds => Some(true),
                    Expect::Fails => Some(false),
                    _ => None,
                };
                r.require(want.map_or(true, |w| w == rep.cond1), || {
                    format!(
                        "{}: conditions are {}, expected {:?}",
                        inst.name, rep.cond1, inst.expect
                    )
                });
            }
            (Err(Error::HypothesisFailed(_)), Expect::Rejected) => rejected += 1,
            (Err(Error::EquivalenceViolation(msg)), _) => {
                diverge += 1;
                r.require(false, || format!("{}: {msg}", inst.name));
            }
            (other, want) => r.require(false, || {
                format!("{}: got {other:?}, expected {want:?}", inst.name)
            }),
        }
    }
    r.value("agree", agree);
    r.value("diverge", diverge);
    r.value("rejected", rejected);
    Ok(r)
}

/// Indices of normal subgroups in a lattice.
fn normal_indices(l: &SubgroupLattice) -> Vec<usize> {
    l.classes()
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect()
}

fn meet_order(l: &SubgroupLattice, a: usize, b: usize) -> usize {
    let mut x = l.bits(a).clone();
    x.intersect_with(l.bits(b));
    x.count_ones(..)
}

fn conjugate_meet(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("conjugate-meet");
    let (entries, _) = lattice_catalog(200, &cfg.caps)?;
    let mut pairs = 0;
    for e in &entries {
        let l = all_subgroups(&e.group, &cfg.caps)?;
        let n = l.table().len();
        let normals = normal_indices(&l);
        for h in l.class_reps() {
            if l.order(h) == n {
                continue;
            }
            for &nn in &normals {
                let meet = meet_order(&l, h, nn);
                if l.order(h) * l.order(nn) / meet != n {
                    continue;
                }
                pairs += 1;
                let mut x = l.bits(h).clone();
                x.intersect_with(l.bits(nn));
                let elems: Vec<_> = x.ones().map(|i| i as u16).collect();
                let union = l.table().conjugate_closure(&elems);
                r.require(union.count_ones(..) < l.order(nn), || {
                    format!("{}: subgroup {h} with normal {nn}", e.label())
                });
            }
        }
    }
    r.value("groups", entries.len());
    r.value("pairs", pairs);
    Ok(r)
}

/// Nontrivial normal subgroups containing no other nontrivial normal subgroup.
fn minimal_normal_indices(l: &SubgroupLattice) -> Vec<usize> {
    let normals: Vec<usize> = normal_indices(l)
        .into_iter()
        .filter(|&i| l.order(i) > 1)
        .collect();
    normals
        .iter()
        .copied()
        .filter(|&a| {
            !normals
                .iter()
                .any(|&b| l.order(b) < l.order(a) && l.bits(b).is_subset(l.bits(a)))
        })
        .collect()
}

fn minimal_normal_meet(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("minimal-normal-meet");
    let (entries, _) = lattice_catalog(200, &cfg.caps)?;
    let mut triples = 0;
    for e in &entries {
        let l = all_subgroups(&e.group, &cfg.caps)?;
        let n = l.table().len();
        let mins = minimal_normal_indices(&l);
        for h in l.class_reps() {
            if l.order(h) == n {
                continue;
            }
            for (i, &n1) in mins.iter().enumerate() {
                for &n2 in &mins[i + 1..] {
                    let m1 = meet_order(&l, h, n1);
                    let m2 = meet_order(&l, h, n2);
                    let full = |nn: usize, m: usize| l.order(h) * l.order(nn) / m == n;
                    if !(full(n1, m1) && full(n2, m2)) {
                        continue;
                    }
                    triples += 1;
                    r.require(m1 == 1 && m2 == 1, || {
                        format!("{}: H = {h} meets minimal normals in {m1}, {m2}", e.label())
                    });
                }
            }
        }
    }
    r.value("groups", entries.len());
    r.value("triples", triples);
    Ok(r)
}

fn monolithic(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("monolithic");
    let (entries, _) = lattice_catalog(u128::MAX, &cfg.caps)?;
    let mut hits = 0;
    for e in &entries {
        let g = &e.group;
        let l = all_subgroups(g, &cfg.caps)?;
        let classes = conjugacy_classes(g, &cfg.caps)?;
        if gamma_in(&l, &classes)?.value != Value::Finite(2) {
            continue;
        }
        let mut minimal_two = false;
        for nn in normal_indices(&l) {
            if l.order(nn) == 1 || l.order(nn) == l.table().len() {
                continue;
            }
            let q = quotient_group(g, &l.perm_group(nn)?, &cfg.caps)?;
            if gamma(&q.group, &cfg.caps)?.value <= Value::Finite(2) {
                minimal_two = true;
                break;
            }
        }
        if minimal_two {
            continue;
        }
        hits += 1;
        let mins = minimal_normal_subgroups(g, &cfg.caps)?;
        r.require(mins.len() == 1, || {
            format!("{}: {} minimal normal subgroups", e.label(), mins.len())
        });
        if mins.len() != 1 {
            continue;
        }
        // a cover by two maximal classes has one member above the socle,
        // unless the group is almost simple
        let soc = &mins[0];
        let almost_simple = !soc.is_abelian()
            && minimal_normal_subgroups(soc, &cfg.caps)?
                .first()
                .is_some_and(|x| x.order() == soc.order());
        let reps: Vec<usize> = l
            .maximal_classes()
            .iter()
            .map(|&c| l.classes()[c][0])
            .collect();
        let hit: Vec<FixedBitSet> = reps
            .iter()
            .map(|&i| classes_meeting(g, &classes, &l.perm_group(i)?))
            .collect::<Result<_>>()?;
        for a in 0..reps.len() {
            for b in a..reps.len() {
                let mut u = hit[a].clone();
                u.union_with(&hit[b]);
                if u.count_ones(..) != classes.len() {
                    continue;
                }
                let above = |i: usize| -> Result<bool> { Ok(l.perm_group(i)?.contains_group(soc)) };
                let ok = almost_simple || above(reps[a])? || above(reps[b])?;
                r.require(ok, || format!("{}: cover by classes {a}, {b}", e.label()));
            }
        }
    }
    r.value("groups", hits);
    Ok(r)
}

fn scorza(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("scorza");
    let (entries, _) = lattice_catalog(u128::MAX, &cfg.caps)?;
    let mut three = 0;
    for e in &entries {
        let l = all_subgroups(&e.group, &cfg.caps)?;
        let n = l.table().len();
        let s = sigma_in(&l)?.value;
        let index2 = (0..l.len()).filter(|&i| 2 * l.order(i) == n).count();
        r.require((s == Value::Finite(3)) == (index2 >= 3), || {
            format!(
                "{}: sigma {s} with {index2} subgroups of index 2",
                e.label()
            )
        });
        if s != Value::Finite(3) {
            continue;
        }
        three += 1;
        let mut minimal_three = true;
        for nn in normal_indices(&l) {
            if l.order(nn) == 1 || l.order(nn) == n {
                continue;
            }
            let q = quotient_group(&e.group, &l.perm_group(nn)?, &cfg.caps)?;
            let ql = all_subgroups(&q.group, &cfg.caps)?;
            if sigma_in(&ql)?.value == Value::Finite(3) {
                minimal_three = false;
                break;
            }
        }
        if minimal_three {
            r.require(n == 4 && !is_cyclic(&e.group), || {
                format!("{}: sigma 3 with no proper quotient of sigma 3", e.label())
            });
        }
    }
    r.value("groups", entries.len());
    r.value("sigma_three", three);
    Ok(r)
}

fn trivial_bounds(cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut r = CheckResult::new("trivial-bounds");
    let (entries, _) = lattice_catalog(u128::MAX, &cfg.caps)?;
    for e in &entries {
        let l = all_subgroups(&e.group, &cfg.caps)?;
        let classes = conjugacy_classes(&e.group, &cfg.caps)?;
        let n = l.table().len();
        if !is_cyclic(&e.group) {
            let s = sigma_in(&l)?.value;
            let g = gamma_in(&l, &classes)?.value;
            r.require(s >= Value::Finite(3) && g >= Value::Finite(2), || {
                format!("{}: sigma {s}, gamma {g}", e.label())
            });
        }
        for h in l.class_reps() {
            if l.order(h) == n {
                continue;
            }
            let union = l.table().conjugate_closure(l.elems(h));
            r.require(union.count_ones(..) < n, || {
                format!("{}: conjugates of subgroup {h} cover", e.label())
            });
        }
    }
    r.value("groups", entries.len());
    Ok(r)
}

/// Every catalog entry, for callers that sweep their own properties.
pub fn full_catalog(caps: &Caps) -> Result<Vec<CatalogEntry>> {
    catalog(caps)
}
