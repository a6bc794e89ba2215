//! Concrete groups with two-class normal covers: three affine groups with an
//! almost-transitive point stabilizer, the index-four extension of
//! `alt(6) x alt(6)`, and a wreath-type extension of `SL(2, 2^p)^p`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Caps;
use crate::cover::{gamma_with_candidates, CoverCertificate};
use crate::error::{Error, Result};
use crate::field::{prime_power, Fe, Field, FieldMatrix};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::{is_cyclic, is_prime, normalizer, quotient_group, sylow_subgroup, Quotient};

use super::affine::{
    affine_group, almost_transitive_check, is_irreducible, k_star, AffineAction, AffineGroup,
    SemilinearMap,
};
use super::named::{m10_outer, psl2, ProjectiveLine};
use super::wreath::{in_block, wreath_element};

/// Default seed for sampled verifications.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Largest module for which the full affine group is built. Its first
/// stabilizer-chain level stores one permutation per module vector.
pub const MAX_AFFINE_GROUP_DEGREE: usize = 4096;

/// Workers used by sampled verifications. Fixed so reports do not depend on the host.
const SAMPLE_WORKERS: u64 = 4;

/// An affine group `M ⋊ K` together with the subgroup `T` of `K` whose
/// conjugates should contain every element of `K` with a nonzero fixed vector.
#[derive(Clone, Debug)]
pub struct AffineExample {
    pub action: AffineAction,
    /// `K` acting on the module, fixing point 0
    pub k: PermGroup,
    pub t: PermGroup,
}

impl AffineExample {
    fn new(action: AffineAction, t_gens: &[SemilinearMap], caps: &Caps) -> Result<Self> {
        caps.check_degree(action.module_size().min(usize::MAX as u128) as usize)?;
        let degree = action.module_size() as usize;
        let k_perms = action
            .k_gens
            .iter()
            .map(|m| action.map_perm(m))
            .collect::<Result<Vec<_>>>()?;
        let t_perms = t_gens
            .iter()
            .map(|m| action.map_perm(m))
            .collect::<Result<Vec<_>>>()?;
        let k = PermGroup::from_generators(degree, k_perms)?;
        let t = PermGroup::from_generators(degree, t_perms)?;
        Ok(AffineExample { action, k, t })
    }

    pub fn degree(&self) -> usize {
        self.action.module_size() as usize
    }

    pub fn group(&self, caps: &Caps) -> Result<AffineGroup> {
        if self.degree() > MAX_AFFINE_GROUP_DEGREE {
            return Err(Error::CapExceeded {
                what: "affine group degree",
                size: self.degree() as u128,
                cap: MAX_AFFINE_GROUP_DEGREE as u128,
            });
        }
        affine_group(&self.action, caps)
    }

    pub fn irreducible(&self, caps: &Caps) -> Result<bool> {
        is_irreducible(&self.action, caps)
    }

    pub fn k_star(&self, caps: &Caps) -> Result<Vec<Perm>> {
        k_star(&self.k, 0, caps)
    }

    pub fn almost_transitive(&self, caps: &Caps) -> Result<bool> {
        almost_transitive_check(&self.k, &self.t, 0, caps)
    }

    /// Normal cover of `M ⋊ K` by the classes of `K` and `M ⋊ T`.
    pub fn two_class_cover(&self, caps: &Caps) -> Result<CoverCertificate> {
        let g = self.group(caps)?;
        let mut mt_gens = self.action.translation_basis();
        mt_gens.extend(self.t.generators().iter().cloned());
        let mt = PermGroup::from_generators(self.degree(), mt_gens)?;
        gamma_with_candidates(&g.group, &[self.k.clone(), mt], caps)
    }
}

/// `GF(16)` with `K = Q ⋊ <x -> x^2>`, `Q` of order 5, and `T` a Sylow
/// 2-subgroup of `K`.
pub fn example1(caps: &Caps) -> Result<AffineExample> {
    let field = Field::new(16)?;
    let q_gen = field.exp(3);
    let action = AffineAction {
        field,
        dim: 1,
        k_gens: vec![
            SemilinearMap::linear(FieldMatrix::diagonal(&[q_gen])),
            SemilinearMap {
                matrix: FieldMatrix::identity(1),
                frobenius: 1,
            },
        ],
    };
    let mut ex = AffineExample::new(action, &[], caps)?;
    ex.t = sylow_subgroup(&ex.k, 2, caps)?;
    Ok(ex)
}

/// The subgroup `Q` of order 5 in Example 1's `K`.
pub fn example1_q(ex: &AffineExample) -> Result<PermGroup> {
    let g = ex
        .action
        .map_perm(&SemilinearMap::linear(FieldMatrix::diagonal(&[ex
            .action
            .field
            .exp(3)])))?;
    PermGroup::from_generators(ex.degree(), vec![g])
}

/// `GF(q)^p` with `K = {(x^{a_1}, .., x^{a_p}) c^i : sum a_j = i mod p}`,
/// where `x` has order `p` and `c` cycles the coordinates; `T` is the part
/// of `K` with `i = 0`.
pub fn example2(p: u32, q: u32, caps: &Caps) -> Result<AffineExample> {
    if p <= 2 || !is_prime(p as u64) || !is_prime(q as u64) || (q - 1) % p != 0 {
        return Err(Error::UnsupportedParams(format!(
            "need primes p > 2 and q with p | q - 1, got p = {p}, q = {q}"
        )));
    }
    let degree = (q as u128).checked_pow(p).unwrap_or(u128::MAX);
    caps.check_degree(degree.min(usize::MAX as u128) as usize)?;
    let field = Field::new(q)?;
    let n = p as usize;
    let x = field.exp(((q - 1) / p) as u64);
    let x_inv = field.inv(x);
    let mut t_gens = Vec::new();
    for j in 0..n - 1 {
        let mut d = vec![1 as Fe; n];
        d[j] = x;
        d[j + 1] = x_inv;
        t_gens.push(SemilinearMap::linear(FieldMatrix::diagonal(&d)));
    }
    let mut d = vec![1 as Fe; n];
    d[0] = x;
    let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let twisted = FieldMatrix::diagonal(&d).mul(&FieldMatrix::permutation(&shift), &field);
    let mut k_gens = t_gens.clone();
    k_gens.push(SemilinearMap::linear(twisted));
    let action = AffineAction {
        field,
        dim: n,
        k_gens,
    };
    AffineExample::new(action, &t_gens, caps)
}

/// Parameters of Example 3 over `GF(q^2)`.
struct Example3Params {
    field: Field,
    /// generator of `A`, order `(q - 1) / 2`
    a: Fe,
    /// generator of `B`, order `q + 1`
    b: Fe,
    /// `x -> x^q` as a power of `x -> x^p`
    frob: u32,
}

fn example3_params(q: u32) -> Result<Example3Params> {
    if q % 4 != 3 || q == 3 || prime_power(q).is_none() {
        return Err(Error::UnsupportedParams(format!(
            "need a prime power q = 3 mod 4 other than 3, got {q}"
        )));
    }
    let (_, f) = prime_power(q).expect("checked above");
    let q2 = q
        .checked_mul(q)
        .ok_or_else(|| Error::UnsupportedParams(format!("q = {q}")))?;
    let field = Field::new(q2)?;
    let a = field.exp(2 * (q as u64 + 1));
    let b = field.exp(q as u64 - 1);
    Ok(Example3Params {
        field,
        a,
        b,
        frob: f,
    })
}

/// `GF(q^2)^2` with `K = {(1,2)^r s^t (a b_1, a b_2)}` for `a` in `A`,
/// `b_i` in `B`, `s` the map `x -> x^q`; `T` is the part with `a = 1`.
pub fn example3(q: u32, caps: &Caps) -> Result<AffineExample> {
    let ps = example3_params(q)?;
    let degree = (q as u128).pow(4);
    caps.check_degree(degree.min(usize::MAX as u128) as usize)?;
    let swap = SemilinearMap::linear(FieldMatrix::permutation(&[1, 0]));
    let frob = SemilinearMap {
        matrix: FieldMatrix::identity(2),
        frobenius: ps.frob,
    };
    let t_gens = vec![
        SemilinearMap::linear(FieldMatrix::diagonal(&[ps.b, 1])),
        SemilinearMap::linear(FieldMatrix::diagonal(&[1, ps.b])),
        frob,
        swap,
    ];
    let mut k_gens = vec![SemilinearMap::linear(FieldMatrix::diagonal(&[ps.a, ps.a]))];
    k_gens.extend(t_gens.iter().cloned());
    let action = AffineAction {
        field: ps.field,
        dim: 2,
        k_gens,
    };
    AffineExample::new(action, &t_gens, caps)
}

/// Outcome of enumerating every parameter tuple `(r, t, a, b_1, b_2)` of
/// Example 3 and testing each element for a nonzero fixed vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointAnalysis {
    pub tuples: usize,
    pub with_fixed_point: usize,
    /// every tuple with a nonzero fixed vector has `a = 1`
    pub fixed_forces_trivial_a: bool,
    /// tuples with `r = 0` and a nonzero fixed vector, all of which have `a = 1`
    pub r0_with_fixed_point: usize,
    pub a_meets_b_trivially: bool,
}

pub fn example3_fixed_points(q: u32) -> Result<FixedPointAnalysis> {
    let ps = example3_params(q)?;
    let f = &ps.field;
    let a_elems: Vec<Fe> = (0..(q as u64 - 1) / 2).map(|i| f.pow(ps.a, i)).collect();
    let b_elems: Vec<Fe> = (0..q as u64 + 1).map(|i| f.pow(ps.b, i)).collect();
    let a_meets_b_trivially = a_elems
        .iter()
        .filter(|x| b_elems.contains(x))
        .all(|&x| x == 1);
    let n = f.order();
    let mut out = FixedPointAnalysis {
        tuples: 0,
        with_fixed_point: 0,
        fixed_forces_trivial_a: true,
        r0_with_fixed_point: 0,
        a_meets_b_trivially,
    };
    for r in 0..2 {
        for t in 0..2u32 {
            for &a in &a_elems {
                for &b1 in &b_elems {
                    for &b2 in &b_elems {
                        out.tuples += 1;
                        let (c1, c2) = (f.mul(a, b1), f.mul(a, b2));
                        let fixes = (0..n).any(|f1| {
                            (0..n).any(|f2| {
                                if f1 == 0 && f2 == 0 {
                                    return false;
                                }
                                let (u1, u2) = if r == 0 { (f1, f2) } else { (f2, f1) };
                                let u1 = f.mul(f.frobenius(u1, ps.frob * t), c1);
                                let u2 = f.mul(f.frobenius(u2, ps.frob * t), c2);
                                (u1, u2) == (f1, f2)
                            })
                        });
                        if fixes {
                            out.with_fixed_point += 1;
                            if r == 0 {
                                out.r0_with_fixed_point += 1;
                            }
                            if a != 1 {
                                out.fixed_forces_trivial_a = false;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `alt(6)` as `psl2(9)` on block `i` of two.
fn a6_on_block(i: usize) -> Result<Vec<Perm>> {
    Ok(psl2(9)?
        .generators()
        .iter()
        .map(|s| in_block(s, i, 2))
        .collect())
}

/// `(g, 1) e` on 20 points, with `g = m10_outer()` and `e` swapping the blocks.
pub fn gamma_squared_generator() -> Perm {
    wreath_element(&[m10_outer(), Perm::identity(10)], &[1, 0])
}

#[derive(Clone, Debug)]
pub struct GammaSquaredExample {
    /// `(alt(6) x alt(6)) <(g, 1) e>`
    pub group: PermGroup,
    /// `alt(6) x alt(6)`
    pub m: PermGroup,
    /// the two direct factors
    pub components: Vec<PermGroup>,
    pub generator: Perm,
}

pub fn gamma_squared_example() -> Result<GammaSquaredExample> {
    let c0 = PermGroup::from_generators(20, a6_on_block(0)?)?;
    let c1 = PermGroup::from_generators(20, a6_on_block(1)?)?;
    let mut m_gens = a6_on_block(0)?;
    m_gens.extend(a6_on_block(1)?);
    let m = PermGroup::from_generators(20, m_gens.clone())?;
    let generator = gamma_squared_generator();
    m_gens.push(generator.clone());
    let group = PermGroup::from_generators(20, m_gens)?;
    Ok(GammaSquaredExample {
        group,
        m,
        components: vec![c0, c1],
        generator,
    })
}

/// Element orders over each nontrivial coset `x^i M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderHistogram {
    /// `per_coset[i - 1]` counts orders over `x^i M`
    pub per_coset: Vec<BTreeMap<u64, u64>>,
}

impl OrderHistogram {
    pub fn total(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for h in &self.per_coset {
            for (&k, &v) in h {
                *out.entry(k).or_insert(0) += v;
            }
        }
        out
    }

    pub fn elements(&self) -> u64 {
        self.per_coset.iter().flat_map(|h| h.values()).sum()
    }

    /// Block-swapping cosets have orders 8 or 16, the middle coset orders dividing 8.
    pub fn cases_hold(&self) -> bool {
        self.per_coset.iter().enumerate().all(|(i, h)| {
            h.keys().all(|&o| {
                if i % 2 == 0 {
                    o == 8 || o == 16
                } else {
                    8 % o == 0
                }
            })
        })
    }

    pub fn divides_16(&self) -> bool {
        self.total().keys().all(|&o| 16 % o == 0)
    }
}

impl GammaSquaredExample {
    /// Scans every element outside `M` and records its order.
    pub fn order_histogram(&self, caps: &Caps) -> Result<OrderHistogram> {
        let index = (self.group.order() / self.m.order()) as usize;
        caps.check_enumeration(self.group.order() - self.m.order())?;
        let mut per_coset = Vec::with_capacity(index - 1);
        let mut shift = self.generator.clone();
        for _ in 1..index {
            let mut h = BTreeMap::new();
            for s in self.m.elements(caps)? {
                *h.entry(shift.then(&s).order()).or_insert(0) += 1;
            }
            per_coset.push(h);
            shift = shift.then(&self.generator);
        }
        Ok(OrderHistogram { per_coset })
    }

    /// Normal cover by the classes of `M` and of a Sylow 2-subgroup.
    pub fn cover(&self, caps: &Caps) -> Result<CoverCertificate> {
        let p = sylow_subgroup(&self.group, 2, caps)?;
        gamma_with_candidates(&self.group, &[self.m.clone(), p], caps)
    }

    /// The normalizer of a Sylow 2-subgroup.
    pub fn sylow2_normalizer(&self, caps: &Caps) -> Result<PermGroup> {
        let p = sylow_subgroup(&self.group, 2, caps)?;
        normalizer(&self.group, &p, caps)
    }
}

#[derive(Clone, Debug)]
pub struct Sl2WreathExample {
    pub p: usize,
    /// `S^p <x>`
    pub group: PermGroup,
    /// `S^p`
    pub m: PermGroup,
    /// `x = (phi, 1, .., 1) c`
    pub x: Perm,
}

/// `SL(2, 2^p)^p <(phi, 1, .., 1) c>` on `p (2^p + 1)` points, `phi` the
/// Frobenius map and `c` the block cycle.
pub fn sl2_wreath_example(p: usize) -> Result<Sl2WreathExample> {
    if p != 5 && p != 7 {
        return Err(Error::UnsupportedParams(format!(
            "p must be 5 or 7, got {p}"
        )));
    }
    let q = 1u32 << p;
    let field = Field::new(q)?;
    let line = ProjectiveLine { field: &field };
    let s = psl2(q)?;
    let d = line.degree();
    let mut m_gens = Vec::new();
    for i in 0..p {
        m_gens.extend(s.generators().iter().map(|g| in_block(g, i, p)));
    }
    let m = PermGroup::from_generators(p * d, m_gens.clone())?;
    let mut comps = vec![Perm::identity(d); p];
    comps[0] = line.frobenius(1);
    let x = wreath_element(&comps, &(0..p).map(|i| (i + 1) % p).collect::<Vec<_>>());
    m_gens.push(x.clone());
    let group = PermGroup::from_generators(p * d, m_gens)?;
    Ok(Sl2WreathExample { p, group, m, x })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub seed: u64,
    pub samples: u64,
    pub outside_m: u64,
    /// sampled elements outside `M` whose order is divisible by `p`
    pub divisible: u64,
}

impl SampleReport {
    pub fn all_divisible(&self) -> bool {
        self.divisible == self.outside_m
    }
}

#[derive(Clone, Debug)]
pub struct Sl2WreathReport {
    pub quotient_order: u128,
    pub quotient_cyclic: bool,
    /// the `p`-part of `|G|`
    pub sylow_order: u128,
    pub x_order: u64,
    pub samples: SampleReport,
}

impl Sl2WreathReport {
    pub fn ok(&self, p: usize) -> bool {
        let p2 = (p * p) as u128;
        self.quotient_order == p2
            && self.quotient_cyclic
            && self.sylow_order == p2
            && self.x_order as u128 == p2
            && self.samples.all_divisible()
    }
}

impl Sl2WreathExample {
    pub fn quotient(&self, caps: &Caps) -> Result<Quotient> {
        quotient_group(&self.group, &self.m, caps)
    }

    /// Draws `samples` uniform elements and checks that those outside `M`
    /// have order divisible by `p`. Work is split over a fixed number of
    /// workers, worker `w` seeded with `seed + w`.
    pub fn sample(&self, samples: u64, seed: u64) -> SampleReport {
        let p = self.p as u64;
        let per = samples.div_ceil(SAMPLE_WORKERS);
        let counts: Vec<(u64, u64)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..SAMPLE_WORKERS)
                .map(|w| {
                    let n = per.min(samples.saturating_sub(w * per));
                    scope.spawn(move || {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(w));
                        let (mut outside, mut div) = (0, 0);
                        for _ in 0..n {
                            let g = self.group.random_element(&mut rng);
                            if !self.m.contains_unchecked(&g) {
                                outside += 1;
                                if g.order() % p == 0 {
                                    div += 1;
                                }
                            }
                        }
                        (outside, div)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sampling worker"))
                .collect()
        });
        SampleReport {
            seed,
            samples,
            outside_m: counts.iter().map(|c| c.0).sum(),
            divisible: counts.iter().map(|c| c.1).sum(),
        }
    }

    pub fn verify(&self, samples: u64, seed: u64, caps: &Caps) -> Result<Sl2WreathReport> {
        let quotient = self.quotient(caps)?;
        let p = self.p as u128;
        let mut sylow_order = 1u128;
        let mut n = self.group.order();
        while n % p == 0 {
            n /= p;
            sylow_order *= p;
        }
        Ok(Sl2WreathReport {
            quotient_order: quotient.group.order(),
            quotient_cyclic: is_cyclic(&quotient.group),
            sylow_order,
            x_order: self.x.order(),
            samples: self.sample(samples, seed),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn example1_structure() {
        let ex = example1(&caps()).unwrap();
        assert_eq!(ex.k.order(), 20);
        assert_eq!(ex.t.order(), 4);
        assert_eq!(ex.group(&caps()).unwrap().group.order(), 320);
        assert!(ex.irreducible(&caps()).unwrap());
        let q = example1_q(&ex).unwrap();
        let star = ex.k_star(&caps()).unwrap();
        assert_eq!(star.len(), 15);
        assert!(star.iter().all(|g| !q.contains_unchecked(g)));
        assert!(ex.almost_transitive(&caps()).unwrap());
    }

    #[test]
    fn example2_structure() {
        let ex = example2(3, 7, &caps()).unwrap();
        assert_eq!((ex.k.order(), ex.t.order(), ex.degree()), (27, 9, 343));
        assert!(ex.irreducible(&caps()).unwrap());
        assert!(ex.almost_transitive(&caps()).unwrap());
        assert!(example2(2, 7, &caps()).is_err());
        assert!(example2(3, 11, &caps()).is_err());
    }

    #[test]
    fn example3_fixed_points_q7() {
        let fp = example3_fixed_points(7).unwrap();
        assert_eq!(fp.tuples, 768);
        assert!(fp.fixed_forces_trivial_a && fp.a_meets_b_trivially);
        assert!(fp.r0_with_fixed_point > 0);
        assert!(example3_fixed_points(5).is_err());
        assert!(example3_fixed_points(3).is_err());
    }

    #[test]
    fn gamma_squared_shape() {
        let ex = gamma_squared_example().unwrap();
        assert_eq!(ex.group.order(), 518_400);
        assert_eq!(ex.m.order(), 129_600);
        assert!(!ex.m.contains_unchecked(&ex.generator));
    }
}
