//! Coset conditions for covers by two maximal subgroups, and the shape of a
//! maximal subgroup's intersection with a nonabelian socle.

use fixedbitset::FixedBitSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::{intersect_with_kernel, minimal_normal_subgroups, quotient_group, socle};
use crate::table::{Elem, GroupTable};

/// The four conditions for `G`, `H >= M = soc(G)`, `K` with `KM = G`, and `R = K ∩ M`:
///
/// 1. the conjugates of `H` and `K` cover `G`;
/// 2. `gM` lies in the union of the `M`-conjugates of `K` for every `g`
///    outside the `K`-conjugates of `H`;
/// 3. `gM` is the union of the `M`-conjugates of `gR` for every `g` in `K`
///    outside the conjugates of `H`;
/// 4. for `g` in `K` outside the `K`-conjugates of `H` and `m` in `M`,
///    `m` lies in `R` exactly when `(gR)^m = gR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaPrevReport {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    /// An element where a condition fails, with the offending `m` for condition 4.
    pub witness: Option<(Perm, Option<Perm>)>,
}

impl LemmaPrevReport {
    pub fn consistent(&self) -> bool {
        self.cond1 == self.cond2 && self.cond2 == self.cond3 && self.cond3 == self.cond4
    }
}

fn bits_of(t: &GroupTable, sub: &PermGroup, caps: &Caps) -> Result<(FixedBitSet, Vec<Elem>)> {
    let mut bits = t.empty_set();
    let mut elems = Vec::new();
    for g in sub.elements(caps)? {
        let e = t.index_of(&g).ok_or(Error::NotSubgroup)?;
        bits.insert(e as usize);
        elems.push(e);
    }
    Ok((bits, elems))
}

/// Union of the conjugates `X^c` for `c` in `conj_by`.
fn conj_union(t: &GroupTable, x: &[Elem], conj_by: &[Elem]) -> FixedBitSet {
    let mut out = t.empty_set();
    for &c in conj_by {
        let ci = t.inv(c);
        for &e in x {
            out.insert(t.mul(t.mul(ci, e), c) as usize);
        }
    }
    out
}

/// Whether `sub` is a maximal subgroup of the group tabulated in `t`:
/// every right coset other than `sub` itself generates `t` together with `sub`.
fn is_maximal_in(
    t: &GroupTable,
    group: &PermGroup,
    sub: &PermGroup,
    sub_el: &[Elem],
) -> Result<bool> {
    if sub_el.len() == t.len() {
        return Ok(false);
    }
    let mut seen = t.empty_set();
    for &e in sub_el {
        seen.insert(e as usize);
    }
    for x in 0..t.len() as Elem {
        if seen.contains(x as usize) {
            continue;
        }
        for &e in sub_el {
            seen.insert(t.mul(e, x) as usize);
        }
        let mut gens = sub.generators().to_vec();
        gens.push(t.element(x).clone());
        if PermGroup::from_generators(group.degree(), gens)?.order() != group.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates each condition independently and reports a witness for the first failure.
pub fn lemma_prev_check(
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    caps: &Caps,
) -> Result<LemmaPrevReport> {
    let m = socle(g, caps)?;
    if !h.contains_group(&m) {
        return Err(Error::HypothesisFailed(
            "the socle is not contained in H".into(),
        ));
    }
    if minimal_normal_subgroups(g, caps)?.len() != 1 {
        return Err(Error::HypothesisFailed("G is not monolithic".into()));
    }
    let t = GroupTable::new(g, caps)?;
    let all: Vec<Elem> = (0..t.len() as Elem).collect();
    let (_, h_el) = bits_of(&t, h, caps)?;
    let (_, k_el) = bits_of(&t, k, caps)?;
    if !is_maximal_in(&t, g, h, &h_el)? {
        return Err(Error::HypothesisFailed("H is not maximal".into()));
    }
    if !is_maximal_in(&t, g, k, &k_el)? {
        return Err(Error::HypothesisFailed("K is not maximal".into()));
    }
    let (m_bits, m_el) = bits_of(&t, &m, caps)?;
    let r_el: Vec<Elem> = k_el
        .iter()
        .copied()
        .filter(|&e| m_bits.contains(e as usize))
        .collect();
    if k_el.len() * m_el.len() / r_el.len() != t.len() {
        return Err(Error::HypothesisFailed("KM is not G".into()));
    }

    let h_all = conj_union(&t, &h_el, &all);
    let h_by_k = conj_union(&t, &h_el, &k_el);
    let k_all = conj_union(&t, &k_el, &all);
    let k_by_m = conj_union(&t, &k_el, &m_el);
    let mut witness: Option<(Perm, Option<Perm>)> = None;
    let note = |w: &mut Option<(Perm, Option<Perm>)>, x: Elem, y: Option<Elem>| {
        if w.is_none() {
            *w = Some((t.element(x).clone(), y.map(|y| t.element(y).clone())));
        }
    };

    // (1)
    let mut cond1 = true;
    for x in 0..t.len() {
        if !h_all.contains(x) && !k_all.contains(x) {
            cond1 = false;
            note(&mut witness, x as Elem, None);
            break;
        }
    }

    // (2)
    let mut cond2 = true;
    'outer2: for x in 0..t.len() as Elem {
        if h_by_k.contains(x as usize) {
            continue;
        }
        for &mm in &m_el {
            if !k_by_m.contains(t.mul(x, mm) as usize) {
                cond2 = false;
                note(&mut witness, x, Some(mm));
                break 'outer2;
            }
        }
    }

    // (3)
    let mut cond3 = true;
    for &x in &k_el {
        if h_all.contains(x as usize) {
            continue;
        }
        let coset: Vec<Elem> = m_el.iter().map(|&mm| t.mul(x, mm)).collect();
        let xr: Vec<Elem> = r_el.iter().map(|&r| t.mul(x, r)).collect();
        let union = conj_union(&t, &xr, &m_el);
        let mut coset_bits = t.empty_set();
        for &c in &coset {
            coset_bits.insert(c as usize);
        }
        if union != coset_bits {
            cond3 = false;
            note(&mut witness, x, None);
            break;
        }
    }

    // (4)
    let mut cond4 = true;
    let mut r_bits = t.empty_set();
    for &r in &r_el {
        r_bits.insert(r as usize);
    }
    'outer4: for &x in &k_el {
        if h_by_k.contains(x as usize) {
            continue;
        }
        let mut xr_bits = t.empty_set();
        let xr: Vec<Elem> = r_el.iter().map(|&r| t.mul(x, r)).collect();
        for &e in &xr {
            xr_bits.insert(e as usize);
        }
        for &mm in &m_el {
            let (conj_bits, _) = t.conj_set(&xr, mm);
            let stable = conj_bits == xr_bits;
            if stable != r_bits.contains(mm as usize) {
                cond4 = false;
                note(&mut witness, x, Some(mm));
                break 'outer4;
            }
        }
    }

    let report = LemmaPrevReport {
        cond1,
        cond2,
        cond3,
        cond4,
        witness,
    };
    if !report.consistent() {
        return Err(Error::EquivalenceViolation(format!(
            "conditions evaluate to {cond1}, {cond2}, {cond3}, {cond4}"
        )));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionType {
    /// Every component projection is the same proper nontrivial order.
    ProductType {
        t_order: u128,
    },
    /// Every projection is onto; components are grouped into diagonal blocks.
    DiagonalType {
        partition: Vec<Vec<usize>>,
    },
    TrivialIntersection,
}

fn support(s: &PermGroup) -> Vec<usize> {
    (0..s.degree())
        .filter(|&pt| s.generators().iter().any(|g| g.apply(pt) != pt))
        .collect()
}

fn projection(r: &PermGroup, points: &[usize]) -> Result<PermGroup> {
    let gens = r
        .strong_generators()
        .iter()
        .map(|g| {
            g.restrict(points).ok_or_else(|| {
                Error::HypothesisFailed("projection support is not invariant".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(points.len(), gens)
}

/// Shape of `X ∩ M` where `M = S_1 x .. x S_r` is given by its components,
/// each acting on its own support, and `XM = G`.
pub fn classify_intersection_type(
    g: &PermGroup,
    components: &[PermGroup],
    x: &PermGroup,
    caps: &Caps,
) -> Result<IntersectionType> {
    let degree = g.degree();
    let m_gens: Vec<Perm> = components
        .iter()
        .flat_map(|c| c.generators().to_vec())
        .collect();
    let m = PermGroup::from_generators(degree, m_gens)?;
    let q = quotient_group(g, &m, caps)?;
    let r = intersect_with_kernel(x, &q)?;
    if x.order() * m.order() / r.order() != g.order() {
        return Err(Error::HypothesisFailed("XM is not G".into()));
    }
    if r.is_trivial() {
        return Ok(IntersectionType::TrivialIntersection);
    }
    let supports: Vec<Vec<usize>> = components.iter().map(support).collect();
    let projections: Vec<u128> = supports
        .iter()
        .map(|s| projection(&r, s).map(|p| p.order()))
        .collect::<Result<_>>()?;
    let full: Vec<bool> = projections
        .iter()
        .zip(components)
        .map(|(&o, c)| o == c.order())
        .collect();
    if full.iter().all(|&f| f) {
        let n = components.len();
        let mut block_of: Vec<Option<usize>> = vec![None; n];
        let mut partition: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if block_of[i].is_some() {
                continue;
            }
            let b = partition.len();
            block_of[i] = Some(b);
            let mut block = vec![i];
            for j in i + 1..n {
                if block_of[j].is_some() {
                    continue;
                }
                let mut pts = supports[i].clone();
                pts.extend(&supports[j]);
                let pij = projection(&r, &pts)?;
                if pij.order() == components[i].order() {
                    block_of[j] = Some(b);
                    block.push(j);
                }
            }
            partition.push(block);
        }
        return Ok(IntersectionType::DiagonalType { partition });
    }
    let proper_nontrivial = projections
        .iter()
        .zip(components)
        .all(|(&o, c)| o > 1 && o < c.order());
    if proper_nontrivial && projections.iter().all(|&o| o == projections[0]) {
        return Ok(IntersectionType::ProductType {
            t_order: projections[0],
        });
    }
    Err(Error::HypothesisFailed(format!(
        "component projections of orders {projections:?} fit neither type"
    )))
}
