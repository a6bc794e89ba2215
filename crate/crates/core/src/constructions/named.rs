//! Named permutation groups.
//!
//! | family | degree | generators |
//! |---|---|---|
//! | `cyclic(n)` | n | `(1,..,n)` |
//! | `elem_abelian_p2(p)` | 2p | `(1,..,p)`, `(p+1,..,2p)` |
//! | `dihedral(n)`, order 2n | n | rotation `i -> i+1`, reflection `i -> -i` |
//! | `sym(n)` | n | `(1,2)`, `(1,..,n)` |
//! | `alt(n)` | n | `(1,2,k)` for `3 <= k <= n` |
//! | `psl2(q)` | q+1 | `z -> z+1`, `z -> w^2 z` (`w z` for even q), `z -> -1/z` |
//! | `pgl2(q)` | q+1 | `z -> z+1`, `z -> w z`, `z -> -1/z` |
//! | `m10` | 10 | `psl2(9)` and `z -> w z^3` |
//! | `pgammal_2_9` | 10 | `psl2(9)`, `z -> w z`, `z -> z^3` |
//! | `quaternion8` | 8 | regular action of `i` and `j` |
//! | `sl2(q)`, `gl2(q)` | q^2-1 | on nonzero row vectors: `[[1,1],[0,1]]`, `[[1,0],[1,1]]`, `diag(w, 1/w)` (and `diag(w, 1)` for GL) |
//! | `agl1(q)` | q | `x -> x+1`, `x -> w x` |
//! | `agl2(q)` | q^2 | translations and the `gl2(q)` generators |
//! | `direct([G_1, ..])` | sum of degrees | each factor on its own points |
//!
//! Projective points are numbered by field element, with infinity last; `w`
//! is the primitive element used by [`Field`].

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldMatrix};
use crate::group::PermGroup;
use crate::perm::Perm;

use super::affine::{affine_group, AffineAction, SemilinearMap};

/// Largest field allowed for the projective line families.
pub const MAX_PROJECTIVE_Q: u32 = 1024;

fn group(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
    PermGroup::from_generators(degree, gens)
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let c: Vec<usize> = points.into_iter().collect();
    Perm::from_cycles(degree, &[c]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::UnsupportedParams("cyclic(0)".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    group(n, vec![cycle(n, 0..n)])
}

/// `C_p x C_p` generated by two disjoint `p`-cycles.
pub fn elem_abelian_p2(p: usize) -> Result<PermGroup> {
    if !crate::structure::is_prime(p as u64) {
        return Err(Error::UnsupportedParams(format!("{p} is not prime")));
    }
    let n = 2 * p;
    group(n, vec![cycle(n, 0..p), cycle(n, p..n)])
}

pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::UnsupportedParams(format!(
            "dihedral({n}) needs n >= 3"
        )));
    }
    let rot: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    let refl: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    group(n, vec![Perm::from_images(rot)?, Perm::from_images(refl)?])
}

pub fn sym(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::UnsupportedParams("sym(0)".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    if n == 2 {
        return group(2, vec![cycle(2, 0..2)]);
    }
    group(n, vec![cycle(n, 0..2), cycle(n, 0..n)])
}

pub fn alt(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::UnsupportedParams("alt(0)".into()));
    }
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    group(n, (2..n).map(|k| cycle(n, [0, 1, k])).collect())
}

/// The points of the projective line over `field`: elements, then infinity.
pub struct ProjectiveLine<'a> {
    pub field: &'a Field,
}

impl<'a> ProjectiveLine<'a> {
    pub fn infinity(&self) -> usize {
        self.field.order() as usize
    }

    pub fn degree(&self) -> usize {
        self.field.order() as usize + 1
    }

    /// `z -> (a z + b) / (c z + d)`.
    pub fn mobius(&self, a: Fe, b: Fe, c: Fe, d: Fe) -> Perm {
        let f = self.field;
        let inf = self.infinity();
        let images: Vec<u32> = (0..self.degree())
            .map(|z| {
                let img = if z == inf {
                    if c == 0 {
                        inf
                    } else {
                        f.div(a, c) as usize
                    }
                } else {
                    let z = z as Fe;
                    let num = f.add(f.mul(a, z), b);
                    let den = f.add(f.mul(c, z), d);
                    if den == 0 {
                        inf
                    } else {
                        f.div(num, den) as usize
                    }
                };
                img as u32
            })
            .collect();
        Perm::from_images(images).expect("invertible Mobius map")
    }

    /// `z -> z^(p^e)`, fixing infinity.
    pub fn frobenius(&self, e: u32) -> Perm {
        let f = self.field;
        let inf = self.infinity();
        let images: Vec<u32> = (0..self.degree())
            .map(|z| {
                if z == inf {
                    inf as u32
                } else {
                    f.frobenius(z as Fe, e)
                }
            })
            .collect();
        Perm::from_images(images).expect("field automorphism")
    }

    pub fn translation(&self) -> Perm {
        self.mobius(1, 1, 0, 1)
    }

    pub fn scaling(&self, k: Fe) -> Perm {
        self.mobius(k, 0, 0, 1)
    }

    pub fn inversion(&self) -> Perm {
        self.mobius(0, self.field.neg(1), 1, 0)
    }
}

fn projective_field(q: u32) -> Result<Field> {
    if q > MAX_PROJECTIVE_Q {
        return Err(Error::UnsupportedParams(format!(
            "q = {q} exceeds {MAX_PROJECTIVE_Q}"
        )));
    }
    Field::new(q)
}

fn psl2_gens(line: &ProjectiveLine<'_>) -> Vec<Perm> {
    let f = line.field;
    let w = f.primitive();
    let s = if f.characteristic() == 2 {
        w
    } else {
        f.mul(w, w)
    };
    vec![line.translation(), line.scaling(s), line.inversion()]
}

pub fn psl2(q: u32) -> Result<PermGroup> {
    let field = projective_field(q)?;
    let line = ProjectiveLine { field: &field };
    group(line.degree(), psl2_gens(&line))
}

pub fn pgl2(q: u32) -> Result<PermGroup> {
    let field = projective_field(q)?;
    let line = ProjectiveLine { field: &field };
    let w = field.primitive();
    group(
        line.degree(),
        vec![line.translation(), line.scaling(w), line.inversion()],
    )
}

/// `PSL(2,q)` extended by the Frobenius map `z -> z^p`.
pub fn psigmal2(q: u32) -> Result<PermGroup> {
    let field = projective_field(q)?;
    let line = ProjectiveLine { field: &field };
    let mut gens = psl2_gens(&line);
    gens.push(line.frobenius(1));
    group(line.degree(), gens)
}

/// The element `z -> w z^3` of `M10` outside `psl2(9)`.
pub fn m10_outer() -> Perm {
    let field = Field::new(9).expect("GF(9)");
    let line = ProjectiveLine { field: &field };
    line.frobenius(1).then(&line.scaling(field.primitive()))
}

pub fn m10() -> Result<PermGroup> {
    let field = Field::new(9)?;
    let line = ProjectiveLine { field: &field };
    let mut gens = psl2_gens(&line);
    gens.push(m10_outer());
    group(10, gens)
}

/// The automorphism group of `alt(6)` as `PGammaL(2,9)` on 10 points.
pub fn pgammal_2_9() -> Result<PermGroup> {
    let field = Field::new(9)?;
    let line = ProjectiveLine { field: &field };
    let mut gens = psl2_gens(&line);
    gens.push(line.scaling(field.primitive()));
    gens.push(line.frobenius(1));
    group(10, gens)
}

/// The quaternion group in its regular representation.
pub fn quaternion8() -> Result<PermGroup> {
    let i = Perm::parse("(1,2,3,4)(5,6,7,8)", 8)?;
    let j = Perm::parse("(1,5,3,7)(2,8,4,6)", 8)?;
    group(8, vec![i, j])
}

fn linear_gens(field: &Field, general: bool) -> Vec<SemilinearMap> {
    let w = field.primitive();
    let mut gens = vec![
        FieldMatrix::from_rows(&[vec![1, 1], vec![0, 1]]),
        FieldMatrix::from_rows(&[vec![1, 0], vec![1, 1]]),
        FieldMatrix::diagonal(&[w, field.inv(w)]),
    ];
    if general {
        gens.push(FieldMatrix::diagonal(&[w, 1]));
    }
    gens.into_iter().map(SemilinearMap::linear).collect()
}

fn linear_on_vectors(q: u32, general: bool) -> Result<PermGroup> {
    let field = Field::new(q)?;
    if q as u64 * q as u64 > MAX_PROJECTIVE_Q as u64 {
        return Err(Error::UnsupportedParams(format!(
            "q^2 = {} exceeds {MAX_PROJECTIVE_Q}",
            q * q
        )));
    }
    let action = AffineAction {
        k_gens: linear_gens(&field, general),
        field,
        dim: 2,
    };
    let nonzero: Vec<usize> = (1..action.module_size() as usize).collect();
    let gens = action
        .k_gens
        .iter()
        .map(|m| {
            action
                .map_perm(m)
                .map(|p| p.restrict(&nonzero).expect("linear maps fix 0"))
        })
        .collect::<Result<Vec<_>>>()?;
    group(nonzero.len(), gens)
}

pub fn sl2(q: u32) -> Result<PermGroup> {
    linear_on_vectors(q, false)
}

pub fn gl2(q: u32) -> Result<PermGroup> {
    linear_on_vectors(q, true)
}

pub fn agl1(q: u32) -> Result<PermGroup> {
    let field = projective_field(q)?;
    let w = field.primitive();
    let action = AffineAction {
        field,
        dim: 1,
        k_gens: vec![SemilinearMap::linear(FieldMatrix::diagonal(&[w]))],
    };
    Ok(affine_group(&action, &Caps::default())?.group)
}

pub fn agl2(q: u32) -> Result<PermGroup> {
    let field = Field::new(q)?;
    if q as u64 * q as u64 > MAX_PROJECTIVE_Q as u64 {
        return Err(Error::UnsupportedParams(format!(
            "q^2 = {} exceeds {MAX_PROJECTIVE_Q}",
            q * q
        )));
    }
    let action = AffineAction {
        k_gens: linear_gens(&field, true),
        field,
        dim: 2,
    };
    Ok(affine_group(&action, &Caps::default())?.group)
}

/// The direct product acting on the disjoint union of the factors' points.
pub fn direct(factors: &[PermGroup]) -> Result<PermGroup> {
    if factors.is_empty() {
        return Err(Error::UnsupportedParams("empty direct product".into()));
    }
    let degree: usize = factors.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        gens.extend(f.generators().iter().map(|g| g.shifted(offset, degree)));
        offset += f.degree();
    }
    group(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_cyclic;

    #[test]
    fn orders() {
        assert_eq!(cyclic(6).unwrap().order(), 6);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let e = elem_abelian_p2(5).unwrap();
        assert_eq!((e.order(), e.degree()), (25, 10));
        assert!(!is_cyclic(&e));
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(sym(5).unwrap().order(), 120);
        assert_eq!(alt(6).unwrap().order(), 360);
        assert_eq!(sym(2).unwrap().order(), 2);
        assert_eq!(alt(2).unwrap().order(), 1);
        for (q, o) in [
            (4, 60),
            (5, 60),
            (7, 168),
            (8, 504),
            (9, 360),
            (11, 660),
            (32, 32736),
        ] {
            assert_eq!(psl2(q).unwrap().order(), o, "psl2({q})");
        }
        for (q, o) in [(5, 120), (7, 336), (9, 720), (4, 60)] {
            assert_eq!(pgl2(q).unwrap().order(), o, "pgl2({q})");
        }
        assert_eq!(psigmal2(32).unwrap().order(), 32736 * 5);
        assert_eq!(m10().unwrap().order(), 720);
        assert_eq!(pgammal_2_9().unwrap().order(), 1440);
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        assert_eq!(sl2(3).unwrap().order(), 24);
        assert_eq!(sl2(5).unwrap().order(), 120);
        assert_eq!(gl2(3).unwrap().order(), 48);
        assert_eq!(sl2(4).unwrap().order(), 60);
        assert_eq!(agl1(8).unwrap().order(), 56);
        assert_eq!(agl1(13).unwrap().order(), 156);
        assert_eq!(agl2(3).unwrap().order(), 432);
        let d = direct(&[sym(3).unwrap(), cyclic(2).unwrap()]).unwrap();
        assert_eq!((d.order(), d.degree()), (12, 5));
        assert!(psl2(6).is_err());
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn m10_is_not_pgl() {
        // M10 and PGL(2,9) are the two non-isomorphic extensions of A6 other
        // than S6; M10 has no elements of order 10 but PGL(2,9) does
        let m = m10().unwrap();
        let p = pgl2(9).unwrap();
        let caps = crate::config::Caps::default();
        assert!(m.elements(&caps).unwrap().all(|g| g.order() != 10));
        assert!(p.elements(&caps).unwrap().any(|g| g.order() == 10));
        assert!(!psl2(9).unwrap().contains_unchecked(&m10_outer()));
    }
}
