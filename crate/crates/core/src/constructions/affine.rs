//! Affine groups `M ⋊ K` with `M = F^n` and `K` acting semilinearly.
//!
//! A vector `(v_0, .., v_{n-1})` over `F = GF(q)` is the point
//! `v_0 + v_1 q + .. + v_{n-1} q^{n-1}`, so the zero vector is point 0. A
//! semilinear map `(A, e)` sends `v` to `phi^e(v) A`, where `phi` is the
//! Frobenius map `x -> x^p` applied coordinatewise.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldMatrix};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure::conjugacy_classes;

#[derive(Clone, Debug)]
pub struct SemilinearMap {
    pub matrix: FieldMatrix,
    pub frobenius: u32,
}

impl SemilinearMap {
    pub fn linear(matrix: FieldMatrix) -> Self {
        SemilinearMap {
            matrix,
            frobenius: 0,
        }
    }

    pub fn apply(&self, v: &[Fe], field: &Field) -> Vec<Fe> {
        let w: Vec<Fe> = v
            .iter()
            .map(|&x| field.frobenius(x, self.frobenius))
            .collect();
        self.matrix.apply(&w, field)
    }
}

#[derive(Clone, Debug)]
pub struct AffineAction {
    pub field: Field,
    pub dim: usize,
    pub k_gens: Vec<SemilinearMap>,
}

impl AffineAction {
    pub fn module_size(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim as u32)
    }

    pub fn point(&self, v: &[Fe]) -> usize {
        let q = self.field.order() as usize;
        v.iter().rev().fold(0, |acc, &x| acc * q + x as usize)
    }

    pub fn vector(&self, point: usize) -> Vec<Fe> {
        let q = self.field.order() as usize;
        let mut x = point;
        (0..self.dim)
            .map(|_| {
                let c = (x % q) as Fe;
                x /= q;
                c
            })
            .collect()
    }

    /// The permutation of the module induced by a semilinear map.
    pub fn map_perm(&self, map: &SemilinearMap) -> Result<Perm> {
        let n = self.module_size() as usize;
        let images: Vec<u32> = (0..n)
            .map(|pt| self.point(&map.apply(&self.vector(pt), &self.field)) as u32)
            .collect();
        Perm::from_images(images)
    }

    /// Translation by a vector.
    pub fn translation(&self, t: &[Fe]) -> Perm {
        let n = self.module_size() as usize;
        let images: Vec<u32> = (0..n)
            .map(|pt| {
                let v = self.vector(pt);
                let w: Vec<Fe> = v
                    .iter()
                    .zip(t)
                    .map(|(&a, &b)| self.field.add(a, b))
                    .collect();
                self.point(&w) as u32
            })
            .collect();
        Perm::from_images(images).expect("translation is a bijection")
    }

    /// Translations by an `F_p`-basis of the module.
    pub fn translation_basis(&self) -> Vec<Perm> {
        let p = self.field.characteristic();
        let f = self.field.degree();
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..f {
                let mut t = vec![0; self.dim];
                t[i] = p.pow(j);
                out.push(self.translation(&t));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub group: PermGroup,
    /// the stabilizer of the zero vector
    pub k: PermGroup,
    /// the translations
    pub m: PermGroup,
}

/// `M ⋊ K` acting on the module.
pub fn affine_group(action: &AffineAction, caps: &Caps) -> Result<AffineGroup> {
    let size = action.module_size();
    caps.check_degree(size.min(usize::MAX as u128) as usize)?;
    let degree = size as usize;
    let k_perms = action
        .k_gens
        .iter()
        .map(|m| action.map_perm(m))
        .collect::<Result<Vec<_>>>()?;
    let t_perms = action.translation_basis();
    let k = PermGroup::from_generators(degree, k_perms.clone())?;
    let m = PermGroup::from_generators(degree, t_perms.clone())?;
    let mut gens = t_perms;
    gens.extend(k_perms);
    let group = PermGroup::from_generators(degree, gens)?;
    Ok(AffineGroup { group, k, m })
}

/// Rank over the prime field of a list of module vectors.
fn prime_rank(action: &AffineAction, vectors: &[Vec<Fe>]) -> usize {
    let p = action.field.characteristic() as i64;
    let mut rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .flat_map(|&x| action.field.to_prime_coords(x))
                .map(|c| c as i64)
                .collect()
        })
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let inv = |a: i64| -> i64 { (1..p).find(|b| (a * b).rem_euclid(p) == 1).expect("unit") };
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let iv = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = (*x * iv).rem_euclid(p);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                for j in 0..cols {
                    rows[r][j] = (rows[r][j] - factor * rows[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether the module has no proper nonzero `K`-invariant `F_p`-subspace:
/// the span of the `K`-orbit of every nonzero vector must be everything.
pub fn is_irreducible(action: &AffineAction, caps: &Caps) -> Result<bool> {
    let size = action.module_size();
    caps.check_degree(size as usize)?;
    let degree = size as usize;
    let k_perms = action
        .k_gens
        .iter()
        .map(|m| action.map_perm(m))
        .collect::<Result<Vec<_>>>()?;
    let k = PermGroup::from_generators(degree, k_perms)?;
    let full = action.dim * action.field.degree() as usize;
    let mut seen = vec![false; degree];
    for v in 1..degree {
        if seen[v] {
            continue;
        }
        let orbit = k.orbit(v);
        for &o in &orbit {
            seen[o] = true;
        }
        let vectors: Vec<Vec<Fe>> = orbit.iter().map(|&o| action.vector(o)).collect();
        if prime_rank(action, &vectors) < full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonidentity elements of `k` fixing some point other than `zero`.
pub fn k_star(k: &PermGroup, zero: usize, caps: &Caps) -> Result<Vec<Perm>> {
    Ok(k.elements(caps)?
        .filter(|g| !g.is_identity() && (0..g.degree()).any(|pt| pt != zero && g.apply(pt) == pt))
        .collect())
}

/// Whether every element of `k` with a nonzero fixed vector is conjugate in
/// `k` into `t`, for a proper subgroup `t`.
pub fn almost_transitive_check(
    k: &PermGroup,
    t: &PermGroup,
    zero: usize,
    caps: &Caps,
) -> Result<bool> {
    if !k.contains_group(t) {
        return Err(Error::NotSubgroup);
    }
    if t.order() >= k.order() {
        return Err(Error::NotProper);
    }
    let classes = conjugacy_classes(k, caps)?;
    let hit = crate::cover::classes_meeting(k, &classes, t)?;
    let codec = k.codec()?;
    let mut buf = vec![0u32; codec.base_len()];
    for g in k_star(k, zero, caps)? {
        let r = codec.rank_of_member(&g, &mut buf);
        if !hit.contains(classes.class_of_rank(r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn trivial_k_gives_regular_translations() {
        let action = AffineAction {
            field: Field::new(5).unwrap(),
            dim: 2,
            k_gens: vec![],
        };
        let g = affine_group(&action, &caps()).unwrap();
        assert_eq!(g.group.order(), 25);
        assert!(g.k.is_trivial());
        // regular: only the identity fixes a point
        assert!(g
            .group
            .elements(&caps())
            .unwrap()
            .all(|x| x.is_identity() || (0..25).all(|p| x.apply(p) != p)));
        assert!(!is_irreducible(&action, &caps()).unwrap());
    }

    #[test]
    fn singer_cycle_is_irreducible_and_fixed_point_free() {
        let field = Field::new(8).unwrap();
        let w = field.primitive();
        let action = AffineAction {
            field,
            dim: 1,
            k_gens: vec![SemilinearMap::linear(FieldMatrix::diagonal(&[w]))],
        };
        assert!(is_irreducible(&action, &caps()).unwrap());
        let g = affine_group(&action, &caps()).unwrap();
        assert_eq!(g.group.order(), 56);
        // Frobenius complement: K* is empty so any proper T works
        assert!(k_star(&g.k, 0, &caps()).unwrap().is_empty());
        let t = PermGroup::trivial(8);
        assert!(almost_transitive_check(&g.k, &t, 0, &caps()).unwrap());
    }

    #[test]
    fn diagonal_matrices_are_reducible() {
        let field = Field::new(7).unwrap();
        let w = field.primitive();
        let action = AffineAction {
            field,
            dim: 2,
            k_gens: vec![SemilinearMap::linear(FieldMatrix::diagonal(&[w, 1]))],
        };
        assert!(!is_irreducible(&action, &caps()).unwrap());
    }
}
