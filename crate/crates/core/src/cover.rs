//! Covering numbers with certificates.
//!
//! `sigma` solves set cover with the maximal subgroups as sets and the
//! maximal cyclic subgroups as points. `gamma` solves set cover with the
//! classes of maximal subgroups as sets and the nonidentity element classes
//! as points: the union of the conjugates of a subgroup is a union of element
//! classes, and it contains a class iff the subgroup meets that class.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{subgroup_ranks_in, PermGroup};
use crate::lattice::{all_subgroups, min_proper_index, mu, SubgroupLattice};
use crate::perm::Perm;
use crate::setcover::SetCover;
use crate::structure::{
    conjugacy_classes, derived_subgroup, is_cyclic, is_prime, quotient_group, ClassTable, Subgroup,
};

/// A covering number; cyclic groups have no cover and get `Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(u64),
    Inf,
}

impl Value {
    pub fn finite(self) -> Option<u64> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        self == Value::Inf
    }

    pub fn plus(self, k: u64) -> Value {
        match self {
            Value::Finite(v) => Value::Finite(v + k),
            Value::Inf => Value::Inf,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Value {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Value::Inf);
        }
        s.parse::<u64>()
            .map(Value::Finite)
            .map_err(|_| Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected an integer or \"inf\", found {s:?}"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Sigma,
    Gamma,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Sigma => "sigma",
            CoverKind::Gamma => "gamma",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CoverCertificate {
    pub kind: CoverKind,
    pub value: Value,
    /// Lattice subgroup indices (sigma), lattice class indices (gamma) or
    /// candidate indices (gamma from candidates).
    pub chosen: Vec<usize>,
    /// Generators of each chosen subgroup or class representative.
    pub generators: Vec<Vec<Perm>>,
    pub verified: bool,
    /// Set when minimality holds only within a supplied candidate list.
    pub upper_bound_only: bool,
}

impl CoverCertificate {
    fn infinite(kind: CoverKind) -> Self {
        CoverCertificate {
            kind,
            value: Value::Inf,
            chosen: Vec::new(),
            generators: Vec::new(),
            verified: true,
            upper_bound_only: false,
        }
    }
}

fn check_proper(group: &PermGroup, subs: &[Subgroup]) -> Result<()> {
    for h in subs {
        if !group.contains_group(&h.group) {
            return Err(Error::NotSubgroup);
        }
        if h.order() >= group.order() {
            return Err(Error::NotProper);
        }
    }
    Ok(())
}

/// Whether the subgroups' union is the whole group.
pub fn verify_cover(group: &PermGroup, subs: &[Subgroup], caps: &Caps) -> Result<bool> {
    check_proper(group, subs)?;
    for g in group.elements(caps)? {
        if !subs.iter().any(|h| h.contains(&g)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Element classes of the parent meeting `sub`, by streaming the ranks of `sub`.
pub fn classes_meeting(
    group: &PermGroup,
    classes: &ClassTable,
    sub: &PermGroup,
) -> Result<FixedBitSet> {
    let outer = group.codec()?;
    let inner = sub.codec()?;
    let mut out = FixedBitSet::with_capacity(classes.len());
    for r in subgroup_ranks_in(&outer, &inner) {
        out.insert(classes.class_of_rank(r));
    }
    Ok(out)
}

/// Whether every element lies in a conjugate of one of the subgroups.
pub fn verify_normal_cover(group: &PermGroup, reps: &[Subgroup], caps: &Caps) -> Result<bool> {
    check_proper(group, reps)?;
    let classes = conjugacy_classes(group, caps)?;
    let mut hit = FixedBitSet::with_capacity(classes.len());
    for h in reps {
        hit.union_with(&classes_meeting(group, &classes, &h.group)?);
    }
    Ok(hit.count_ones(..) == classes.len())
}

/// Exact covering number.
pub fn sigma(group: &PermGroup, caps: &Caps) -> Result<CoverCertificate> {
    if is_cyclic(group) {
        return Ok(CoverCertificate::infinite(CoverKind::Sigma));
    }
    let lattice = all_subgroups(group, caps)?;
    sigma_in(&lattice)
}

/// Exact covering number from a prebuilt lattice.
pub fn sigma_in(lattice: &SubgroupLattice) -> Result<CoverCertificate> {
    if is_cyclic(lattice.group()) {
        return Ok(CoverCertificate::infinite(CoverKind::Sigma));
    }
    let points = lattice.maximal_cyclic();
    let maximals = lattice.maximal_indices();
    let sets: Vec<FixedBitSet> = maximals
        .iter()
        .map(|&m| {
            let mut s = FixedBitSet::with_capacity(points.len());
            for (u, &c) in points.iter().enumerate() {
                if lattice.bits(c).is_subset(lattice.bits(m)) {
                    s.insert(u);
                }
            }
            s
        })
        .collect();
    let instance = SetCover::new(points.len(), sets);
    let picked = instance
        .solve()
        .ok_or_else(|| Error::Internal("noncyclic group without a cover".into()))?;
    let chosen: Vec<usize> = picked.iter().map(|&i| maximals[i]).collect();

    let mut union = lattice.table().empty_set();
    for &i in &chosen {
        union.union_with(lattice.bits(i));
    }
    let verified = union.count_ones(..) == lattice.table().len()
        && chosen
            .iter()
            .all(|&i| lattice.order(i) < lattice.table().len());
    if !verified {
        return Err(Error::Internal("sigma certificate failed to verify".into()));
    }
    let generators = chosen
        .iter()
        .map(|&i| lattice.table().perms(lattice.gens(i)))
        .collect();
    Ok(CoverCertificate {
        kind: CoverKind::Sigma,
        value: Value::Finite(chosen.len() as u64),
        chosen,
        generators,
        verified,
        upper_bound_only: false,
    })
}

/// Exact normal covering number.
pub fn gamma(group: &PermGroup, caps: &Caps) -> Result<CoverCertificate> {
    if is_cyclic(group) {
        return Ok(CoverCertificate::infinite(CoverKind::Gamma));
    }
    let lattice = all_subgroups(group, caps)?;
    let classes = conjugacy_classes(group, caps)?;
    gamma_in(&lattice, &classes)
}

/// Element classes meeting each maximal-subgroup class representative.
fn class_sets(
    lattice: &SubgroupLattice,
    classes: &ClassTable,
    class_ids: &[usize],
) -> Vec<FixedBitSet> {
    class_ids
        .iter()
        .map(|&c| {
            let rep = lattice.classes()[c][0];
            let mut s = FixedBitSet::with_capacity(classes.len());
            for &e in lattice.elems(rep) {
                s.insert(classes.class_of_rank(e as u64));
            }
            s
        })
        .collect()
}

/// Drops the identity class (class 0) and renumbers the rest from 0.
fn without_identity(sets: &[FixedBitSet], n: usize) -> Vec<FixedBitSet> {
    sets.iter()
        .map(|s| {
            let mut t = FixedBitSet::with_capacity(n.saturating_sub(1));
            for c in s.ones().filter(|&c| c > 0) {
                t.insert(c - 1);
            }
            t
        })
        .collect()
}

/// Exact normal covering number from a prebuilt lattice and class table.
pub fn gamma_in(lattice: &SubgroupLattice, classes: &ClassTable) -> Result<CoverCertificate> {
    if is_cyclic(lattice.group()) {
        return Ok(CoverCertificate::infinite(CoverKind::Gamma));
    }
    let candidates = lattice.maximal_classes();
    let full = class_sets(lattice, classes, &candidates);
    let instance = SetCover::new(classes.len() - 1, without_identity(&full, classes.len()));
    let picked = instance
        .solve()
        .ok_or_else(|| Error::Internal("noncyclic group without a normal cover".into()))?;
    let chosen: Vec<usize> = picked.iter().map(|&i| candidates[i]).collect();

    let mut hit = FixedBitSet::with_capacity(classes.len());
    for &i in &picked {
        hit.union_with(&full[i]);
    }
    if hit.count_ones(..) != classes.len() {
        return Err(Error::Internal("gamma certificate failed to verify".into()));
    }
    let generators = chosen
        .iter()
        .map(|&c| lattice.table().perms(lattice.gens(lattice.classes()[c][0])))
        .collect();
    Ok(CoverCertificate {
        kind: CoverKind::Gamma,
        value: Value::Finite(chosen.len() as u64),
        chosen,
        generators,
        verified: true,
        upper_bound_only: false,
    })
}

/// Smallest normal cover using only conjugates of the given subgroups.
pub fn gamma_with_candidates(
    group: &PermGroup,
    candidates: &[PermGroup],
    caps: &Caps,
) -> Result<CoverCertificate> {
    let subs: Vec<Subgroup> = candidates.iter().cloned().map(Subgroup::new).collect();
    check_proper(group, &subs)?;
    let classes = conjugacy_classes(group, caps)?;
    gamma_with_candidates_in(group, &classes, candidates)
}

/// As [`gamma_with_candidates`], with a prebuilt class table.
pub fn gamma_with_candidates_in(
    group: &PermGroup,
    classes: &ClassTable,
    candidates: &[PermGroup],
) -> Result<CoverCertificate> {
    let subs: Vec<Subgroup> = candidates.iter().cloned().map(Subgroup::new).collect();
    check_proper(group, &subs)?;
    let full: Vec<FixedBitSet> = candidates
        .iter()
        .map(|h| classes_meeting(group, classes, h))
        .collect::<Result<_>>()?;
    let instance = SetCover::new(classes.len() - 1, without_identity(&full, classes.len()));
    let picked = instance.solve().ok_or(Error::NoCover)?;
    let mut hit = FixedBitSet::with_capacity(classes.len());
    for &i in &picked {
        hit.union_with(&full[i]);
    }
    if hit.count_ones(..) != classes.len() {
        return Err(Error::Internal(
            "candidate certificate failed to verify".into(),
        ));
    }
    let generators = picked
        .iter()
        .map(|&i| candidates[i].generators().to_vec())
        .collect();
    Ok(CoverCertificate {
        kind: CoverKind::Gamma,
        value: Value::Finite(picked.len() as u64),
        chosen: picked,
        generators,
        verified: true,
        upper_bound_only: true,
    })
}

/// Lower bound for the normal covering number that needs no search.
pub fn gamma_lower_bound(group: &PermGroup) -> Value {
    if is_cyclic(group) {
        Value::Inf
    } else {
        Value::Finite(2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub sigma: Value,
    pub gamma: Value,
    pub mu: Value,
    pub m: Value,
    pub degree: usize,
    /// `sigma >= mu + 1`
    pub cohn_ok: bool,
    /// `gamma <= mu + 1`
    pub basso_ok: bool,
    /// When `gamma = mu + 1`: `mu` prime, at least two normal maximal
    /// subgroups of index `mu`, and `gamma(G) = gamma(G/G')`.
    pub basso_equality: Option<bool>,
    /// `2 gamma <= degree + 2`
    pub permut_ok: bool,
    pub gamma_le_sigma: bool,
    /// When `sigma = gamma`: `sigma - 1` prime and some minimal cover uses
    /// only normal subgroups of index `sigma - 1`.
    pub sigma_eq_gamma: Option<bool>,
    /// `gamma(G) <= gamma(G/N)` for every proper nontrivial normal `N`.
    pub quotients_ok: bool,
}

impl BoundsReport {
    pub fn all_ok(&self) -> bool {
        self.cohn_ok
            && self.basso_ok
            && self.basso_equality != Some(false)
            && self.permut_ok
            && self.gamma_le_sigma
            && self.sigma_eq_gamma != Some(false)
            && self.quotients_ok
    }
}

/// Indices of normal maximal subgroups of the given index.
fn normal_maximals_of_index(lattice: &SubgroupLattice, index: u64) -> Vec<usize> {
    let n = lattice.table().len() as u64;
    lattice
        .maximal_indices()
        .into_iter()
        .filter(|&i| {
            lattice.classes()[lattice.class_of(i)].len() == 1
                && n / lattice.order(i) as u64 == index
        })
        .collect()
}

/// Computes every covering invariant and checks the known bounds.
pub fn check_bounds(group: &PermGroup, caps: &Caps) -> Result<BoundsReport> {
    let lattice = all_subgroups(group, caps)?;
    let classes = conjugacy_classes(group, caps)?;
    check_bounds_in(&lattice, &classes, caps)
}

pub fn check_bounds_in(
    lattice: &SubgroupLattice,
    classes: &ClassTable,
    caps: &Caps,
) -> Result<BoundsReport> {
    let group = lattice.group();
    let s = sigma_in(lattice)?.value;
    let g = gamma_in(lattice, classes)?.value;
    let mu_v = mu(lattice);
    let m = min_proper_index(lattice);
    let degree = group.degree();
    let cyclic = is_cyclic(group);

    let cohn_ok = cyclic || s >= mu_v.plus(1);
    let basso_ok = cyclic || g <= mu_v.plus(1);
    let basso_equality = match (g, mu_v) {
        (Value::Finite(gv), Value::Finite(mv)) if !cyclic && gv == mv + 1 => {
            let normals = normal_maximals_of_index(lattice, mv);
            let derived = derived_subgroup(group)?;
            let q = quotient_group(group, &derived, caps)?;
            let gq = gamma(&q.group, caps)?.value;
            Some(is_prime(mv) && normals.len() >= 2 && gq == g)
        }
        _ => None,
    };
    let permut_ok = match g {
        Value::Finite(gv) => 2 * gv <= degree as u64 + 2,
        Value::Inf => cyclic,
    };
    let gamma_le_sigma = g <= s;
    let sigma_eq_gamma = match s {
        Value::Finite(sv) if g == s => {
            let p = sv - 1;
            let ok = is_prime(p) && {
                let normals = normal_maximals_of_index(lattice, p);
                let sets: Vec<FixedBitSet> =
                    normals.iter().map(|&i| lattice.bits(i).clone()).collect();
                let instance = SetCover::new(lattice.table().len(), sets);
                instance.solve().is_some_and(|c| c.len() as u64 == sv)
            };
            Some(ok)
        }
        _ => None,
    };

    let mut quotients_ok = true;
    if !cyclic {
        let n = lattice.table().len();
        for (c, members) in lattice.classes().iter().enumerate() {
            let i = members[0];
            if members.len() != 1 || lattice.order(i) == 1 || lattice.order(i) == n {
                continue;
            }
            debug_assert_eq!(lattice.class_of(i), c);
            let normal = lattice.perm_group(i)?;
            let q = quotient_group(group, &normal, caps)?;
            let gq = gamma(&q.group, caps)?.value;
            if g > gq {
                quotients_ok = false;
            }
        }
    }

    Ok(BoundsReport {
        sigma: s,
        gamma: g,
        mu: mu_v,
        m,
        degree,
        cohn_ok,
        basso_ok,
        basso_equality,
        permut_ok,
        gamma_le_sigma,
        sigma_eq_gamma,
        quotients_ok,
    })
}
