//! Permutation groups with a deterministic Schreier–Sims stabilizer chain.
//!
//! Every element of a group has a unique factorisation `u_{k-1} * .. * u_0`
//! (apply `u_{k-1}` first) with `u_l` taken from the stored transversal of
//! level `l`. The tuple of transversal indices, read in mixed radix with
//! level 0 most significant, is the element's *rank*. Ranks give a perfect
//! hash of the group onto `0..order`, and [`PermGroup::elements`] enumerates
//! in rank order.

use rand::Rng;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::Perm;

const NONE: u32 = u32::MAX;

#[derive(Clone)]
struct Level {
    base_point: usize,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// point -> index into `orbit`, or `NONE`
    pos: Vec<u32>,
    reps: Vec<Perm>,
    inv_reps: Vec<Perm>,
    orbit_done: Vec<usize>,
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base_point] = 0;
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point as u32],
            pos,
            reps: vec![Perm::identity(degree)],
            inv_reps: vec![Perm::identity(degree)],
            orbit_done: Vec::new(),
            checked: Vec::new(),
        }
    }

    fn add_gen(&mut self, g: Perm) {
        self.gens.push(g);
        self.orbit_done.push(0);
        self.checked.push(0);
        self.extend_orbit();
    }

    fn extend_orbit(&mut self) {
        loop {
            let mut progressed = false;
            for gi in 0..self.gens.len() {
                while self.orbit_done[gi] < self.orbit.len() {
                    let idx = self.orbit_done[gi];
                    let pt = self.orbit[idx] as usize;
                    let img = self.gens[gi].apply(pt);
                    if self.pos[img] == NONE {
                        self.pos[img] = self.orbit.len() as u32;
                        self.orbit.push(img as u32);
                        let rep = self.reps[idx].then(&self.gens[gi]);
                        self.inv_reps.push(rep.inverse());
                        self.reps.push(rep);
                    }
                    self.orbit_done[gi] += 1;
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
    order: u128,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: 1,
        }
    }

    /// Builds the stabilizer chain. Base points are the smallest moved points,
    /// taken in generator order, so the result depends only on `gens`.
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators: gens,
            levels: Vec::new(),
            order: 1,
        };
        group.schreier_sims(&[]);
        Ok(group)
    }

    /// Like [`PermGroup::from_generators`], but the base starts with `prefix`.
    pub fn with_base_prefix(degree: usize, gens: Vec<Perm>, prefix: &[usize]) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators: gens,
            levels: Vec::new(),
            order: 1,
        };
        group.schreier_sims(prefix);
        Ok(group)
    }

    /// Subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let rebuilt = PermGroup::with_base_prefix(self.degree, self.generators.clone(), points)?;
        Ok(rebuilt.chain_tail(points.len()))
    }

    /// The stabilizer of the first `l` base points, reusing the stored chain.
    fn chain_tail(&self, l: usize) -> PermGroup {
        if l >= self.levels.len() {
            return PermGroup::trivial(self.degree);
        }
        let levels: Vec<Level> = self.levels[l..].to_vec();
        let order = levels.iter().map(|lv| lv.orbit.len() as u128).product();
        PermGroup {
            degree: self.degree,
            generators: levels[0].gens.clone(),
            levels,
            order,
        }
    }

    /// Convenience constructor that infers the degree from the first generator.
    pub fn new(gens: Vec<Perm>) -> Result<Self> {
        let degree = gens
            .first()
            .map(Perm::degree)
            .ok_or_else(|| Error::InvalidPermutation("empty generator list".into()))?;
        PermGroup::from_generators(degree, gens)
    }

    fn schreier_sims(&mut self, prefix: &[usize]) {
        let degree = self.degree;
        let mut nontrivial: Vec<Perm> = Vec::new();
        for g in &self.generators {
            if !g.is_identity() && !nontrivial.contains(g) {
                nontrivial.push(g.clone());
            }
        }
        let mut levels: Vec<Level> = prefix.iter().map(|&b| Level::new(degree, b)).collect();
        for g in &nontrivial {
            if levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.smallest_moved_point().expect("nontrivial");
                levels.push(Level::new(degree, b));
            }
        }
        for g in &nontrivial {
            for l in 0..levels.len() {
                let fixes_prefix = levels[..l]
                    .iter()
                    .all(|lv| g.apply(lv.base_point) == lv.base_point);
                if fixes_prefix {
                    levels[l].gens.push(g.clone());
                    levels[l].orbit_done.push(0);
                    levels[l].checked.push(0);
                }
            }
        }
        for level in levels.iter_mut() {
            level.extend_orbit();
        }

        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match next_nontrivial_schreier(&mut levels, li) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == levels.len() {
                        let b = h.smallest_moved_point().expect("nontrivial residue");
                        levels.push(Level::new(degree, b));
                    }
                    for level in levels.iter_mut().take(j + 1).skip(li + 1) {
                        level.add_gen(h.clone());
                    }
                    i = j as isize;
                }
            }
        }

        for level in levels.iter_mut() {
            level.orbit_done = Vec::new();
            level.checked = Vec::new();
        }
        self.order = levels.iter().map(|l| l.orbit.len() as u128).product();
        self.levels = levels;
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn base_len(&self) -> usize {
        self.levels.len()
    }

    /// Orbit lengths along the stabilizer chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Sifts `g` from `start`; returns the residue and the level where sifting stopped.
    fn strip(&self, g: &Perm, start: usize) -> (Perm, usize) {
        strip_levels(&self.levels, g, start)
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.contains_unchecked(g))
    }

    /// Membership with an early exit at the first base point whose image leaves the orbit.
    pub fn contains_unchecked(&self, g: &Perm) -> bool {
        let (h, level) = self.strip(g, 0);
        level == self.levels.len() && h.is_identity()
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains_unchecked(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.contains_group(other)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Orbit of a point, in breadth-first order from the generators.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            i += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let mut o = self.orbit(p);
                for &q in &o {
                    seen[q] = true;
                }
                o.sort_unstable();
                out.push(o);
            }
        }
        out
    }

    // ----- ranks -----

    fn strides(&self) -> Vec<u128> {
        let k = self.levels.len();
        let mut strides = vec![1u128; k];
        for l in (0..k.saturating_sub(1)).rev() {
            strides[l] = strides[l + 1] * self.levels[l + 1].orbit.len() as u128;
        }
        strides
    }

    fn digits_of_rank(&self, rank: u128) -> Vec<usize> {
        let mut digits = vec![0usize; self.levels.len()];
        let mut r = rank;
        for l in (0..self.levels.len()).rev() {
            let n = self.levels[l].orbit.len() as u128;
            digits[l] = (r % n) as usize;
            r /= n;
        }
        digits
    }

    fn perm_of_digits(&self, digits: &[usize]) -> Perm {
        let mut x = self.identity();
        for l in (0..self.levels.len()).rev() {
            x = x.then(&self.levels[l].reps[digits[l]]);
        }
        x
    }

    /// The element of the given rank.
    pub fn unrank(&self, rank: u128) -> Perm {
        assert!(rank < self.order, "rank out of range");
        self.perm_of_digits(&self.digits_of_rank(rank))
    }

    /// Rank of `g`, or `None` when `g` is not in the group.
    pub fn rank(&self, g: &Perm) -> Option<u128> {
        let strides = self.strides();
        let mut h = g.clone();
        let mut rank = 0u128;
        for (l, level) in self.levels.iter().enumerate() {
            let p = level.pos[h.apply(level.base_point)];
            if p == NONE {
                return None;
            }
            rank += p as u128 * strides[l];
            h = h.then(&level.inv_reps[p as usize]);
        }
        h.is_identity().then_some(rank)
    }

    /// Enumerates the group in rank order.
    pub fn elements(&self, caps: &Caps) -> Result<Elements<'_>> {
        caps.check_enumeration(self.order)?;
        Ok(Elements::new(self))
    }

    /// Product of uniformly chosen transversal elements: uniform on the group.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let digits: Vec<usize> = self
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        self.perm_of_digits(&digits)
    }

    /// Rank-level view used by the conjugacy, table and streaming code.
    pub fn codec(&self) -> Result<Codec<'_>> {
        if self.order > u64::MAX as u128 {
            return Err(Error::CapExceeded {
                what: "rank codec",
                size: self.order,
                cap: u64::MAX as u128,
            });
        }
        Ok(Codec::new(self))
    }

    /// Group generated by `self` and extra elements.
    pub fn with_generators(&self, extra: &[Perm]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        PermGroup::from_generators(self.degree, gens)
    }
}

fn strip_levels(levels: &[Level], g: &Perm, start: usize) -> (Perm, usize) {
    let mut h = g.clone();
    for (l, level) in levels.iter().enumerate().skip(start) {
        let p = level.pos[h.apply(level.base_point)];
        if p == NONE {
            return (h, l);
        }
        h = h.then(&level.inv_reps[p as usize]);
    }
    (h, levels.len())
}

/// Finds the next unchecked Schreier generator at level `i` that does not sift to the identity.
fn next_nontrivial_schreier(levels: &mut [Level], i: usize) -> Option<(Perm, usize)> {
    let n_gens = levels[i].gens.len();
    for gi in 0..n_gens {
        while levels[i].checked[gi] < levels[i].orbit.len() {
            let level = &levels[i];
            let idx = level.checked[gi];
            let pt = level.orbit[idx] as usize;
            let s = &level.gens[gi];
            let img = s.apply(pt);
            let schreier = level.reps[idx]
                .then(s)
                .then(&level.inv_reps[level.pos[img] as usize]);
            levels[i].checked[gi] += 1;
            if schreier.is_identity() {
                continue;
            }
            let (h, j) = strip_levels(levels, &schreier, i + 1);
            if j < levels.len() || !h.is_identity() {
                return Some((h, j));
            }
        }
    }
    None
}

/// Iterator over a group's elements in rank order.
pub struct Elements<'a> {
    group: &'a PermGroup,
    digits: Vec<usize>,
    /// partial[l] = u_l * u_{l-1} * .. * u_0 with u_l applied first
    partial: Vec<Perm>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let k = group.levels.len();
        let partial = (0..k).map(|_| group.identity()).collect();
        Elements {
            group,
            digits: vec![0; k],
            partial,
            done: false,
        }
    }

    fn refresh(&mut self, from: usize) {
        let levels = &self.group.levels;
        for l in from..levels.len() {
            let rep = &levels[l].reps[self.digits[l]];
            self.partial[l] = if l == 0 {
                rep.clone()
            } else {
                rep.then(&self.partial[l - 1])
            };
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        let k = self.group.levels.len();
        if k == 0 {
            self.done = true;
            return Some(self.group.identity());
        }
        let out = self.partial[k - 1].clone();
        // advance mixed-radix counter, last level fastest
        let mut l = k;
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.digits[l] += 1;
            if self.digits[l] < self.group.levels[l].orbit.len() {
                self.refresh(l);
                break;
            }
            self.digits[l] = 0;
        }
        Some(out)
    }
}

/// Rank arithmetic without materialising permutations.
///
/// Conjugating or multiplying ranks costs `O(k^2)` table lookups for a base of
/// length `k`, independent of the degree.
pub struct Codec<'a> {
    group: &'a PermGroup,
    strides: Vec<u64>,
    radices: Vec<u64>,
}

impl<'a> Codec<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let strides = group.strides().into_iter().map(|s| s as u64).collect();
        let radices = group.levels.iter().map(|l| l.orbit.len() as u64).collect();
        Codec {
            group,
            strides,
            radices,
        }
    }

    pub fn group(&self) -> &'a PermGroup {
        self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order as u64
    }

    pub fn base_len(&self) -> usize {
        self.radices.len()
    }

    #[inline]
    pub fn digits(&self, rank: u64, out: &mut [u32]) {
        let mut r = rank;
        for l in (0..self.radices.len()).rev() {
            out[l] = (r % self.radices[l]) as u32;
            r /= self.radices[l];
        }
    }

    /// Image of `point` under the element with the given digits.
    #[inline]
    pub fn eval(&self, digits: &[u32], point: usize) -> usize {
        let levels = &self.group.levels;
        let mut p = point;
        for l in (0..levels.len()).rev() {
            p = levels[l].reps[digits[l] as usize].apply(p);
        }
        p
    }

    /// Rank of the group element with the given base images. The caller guarantees membership.
    #[inline]
    pub fn rank_from_base_images(&self, images: &mut [u32]) -> u64 {
        let levels = &self.group.levels;
        let mut rank = 0u64;
        for l in 0..levels.len() {
            let p = levels[l].pos[images[l] as usize];
            debug_assert!(p != NONE, "element outside the group");
            rank += p as u64 * self.strides[l];
            let inv = &levels[l].inv_reps[p as usize];
            for img in images.iter_mut().skip(l + 1) {
                *img = inv.apply(*img as usize) as u32;
            }
        }
        rank
    }

    /// Base images of a permutation known to lie in the group.
    #[inline]
    pub fn rank_of_member(&self, g: &Perm, buf: &mut [u32]) -> u64 {
        for (l, level) in self.group.levels.iter().enumerate() {
            buf[l] = g.apply(level.base_point) as u32;
        }
        self.rank_from_base_images(buf)
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.group.base()
    }

    pub fn unrank(&self, rank: u64) -> Perm {
        self.group.unrank(rank as u128)
    }
}

/// Reusable scratch space for rank arithmetic against a fixed set of actors.
pub struct RankOps<'a> {
    codec: &'a Codec<'a>,
    base: Vec<usize>,
    digits: Vec<u32>,
    images: Vec<u32>,
}

impl<'a> RankOps<'a> {
    pub fn new(codec: &'a Codec<'a>) -> Self {
        let k = codec.base_len();
        RankOps {
            codec,
            base: codec.base_points(),
            digits: vec![0; k],
            images: vec![0; k],
        }
    }

    /// Rank of `x^g = g^-1 x g` given `g` and its inverse.
    #[inline]
    pub fn conjugate(&mut self, rank: u64, g: &Perm, g_inv: &Perm) -> u64 {
        self.codec.digits(rank, &mut self.digits);
        for l in 0..self.base.len() {
            let p = g_inv.apply(self.base[l]);
            let q = self.codec.eval(&self.digits, p);
            self.images[l] = g.apply(q) as u32;
        }
        self.codec.rank_from_base_images(&mut self.images)
    }

    /// Rank of `x * s` (apply `x`, then `s`).
    #[inline]
    pub fn right_multiply(&mut self, rank: u64, s: &Perm) -> u64 {
        self.codec.digits(rank, &mut self.digits);
        for l in 0..self.base.len() {
            let q = self.codec.eval(&self.digits, self.base[l]);
            self.images[l] = s.apply(q) as u32;
        }
        self.codec.rank_from_base_images(&mut self.images)
    }

    #[inline]
    pub fn rank_of_member(&mut self, g: &Perm) -> u64 {
        self.codec.rank_of_member(g, &mut self.images)
    }
}

/// Streams the ranks in `outer` of the elements of a subgroup `inner`, without
/// materialising the subgroup's permutations.
pub fn subgroup_ranks_in(outer: &Codec<'_>, inner: &Codec<'_>) -> Vec<u64> {
    let base = outer.base_points();
    let k_in = inner.base_len();
    let mut digits = vec![0u32; k_in];
    let mut images = vec![0u32; base.len()];
    let mut out = Vec::with_capacity(inner.order() as usize);
    for r in 0..inner.order() {
        inner.digits(r, &mut digits);
        for (l, &b) in base.iter().enumerate() {
            images[l] = inner.eval(&digits, b) as u32;
        }
        out.push(outer.rank_from_base_images(&mut images));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm_list;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn group(gens: &str, degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, parse_perm_list(gens, degree).unwrap()).unwrap()
    }

    /// Breadth-first closure under right multiplication by generators.
    fn closure(g: &PermGroup) -> HashSet<Perm> {
        let mut seen = HashSet::new();
        let id = g.identity();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in g.generators() {
                let y = x.then(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    #[test]
    fn sym3_order() {
        assert_eq!(group("(1,2),(1,2,3)", 3).order(), 6);
    }

    #[test]
    fn alt5_order_matches_closure() {
        let g = group("(1,2,3,4,5),(3,4,5)", 5);
        assert_eq!(g.order(), 60);
        assert_eq!(closure(&g).len(), 60);
    }

    #[test]
    fn klein_order() {
        assert_eq!(group("(1,2)(3,4),(1,3)(2,4)", 4).order(), 4);
    }

    #[test]
    fn membership() {
        let a4 = group("(1,2,3),(2,3,4)", 4);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&Perm::parse("(1,2)", 4).unwrap()).unwrap());
        assert!(a4.contains(&Perm::parse("(1,2,3)", 4).unwrap()).unwrap());
        let s3 = group("(1,2),(1,2,3)", 3);
        assert!(s3.contains(&Perm::parse("(1,3)", 3).unwrap()).unwrap());
        assert!(s3.contains(&Perm::identity(4)).is_err());
    }

    #[test]
    fn elements_are_distinct_members() {
        let caps = Caps::default();
        for (gens, deg, order) in [
            ("(1,2),(1,2,3)", 3, 6usize),
            ("(1,2)(3,4),(1,3)(2,4)", 4, 4),
            ("(1,2,3),(1,2,3,4,5,6)", 6, 720),
            ("(1,2,3),(2,3,4,5,6)", 6, 360),
        ] {
            let g = group(gens, deg);
            let elems: Vec<Perm> = g.elements(&caps).unwrap().collect();
            assert_eq!(elems.len(), order);
            let set: HashSet<_> = elems.iter().cloned().collect();
            assert_eq!(set.len(), order);
            for (r, e) in elems.iter().enumerate() {
                assert!(g.contains_unchecked(e));
                assert_eq!(g.rank(e), Some(r as u128));
                assert_eq!(&g.unrank(r as u128), e);
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let g = group("(1,2),(1,2,3,4,5,6)", 6);
        let caps = Caps::default().with_enumeration(100);
        match g.elements(&caps) {
            Err(Error::CapExceeded { size, .. }) => assert_eq!(size, 720),
            _ => panic!("expected cap error"),
        }
    }

    #[test]
    fn random_element_is_reproducible_and_uniform() {
        let s3 = group("(1,2),(1,2,3)", 3);
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(s3.random_element(&mut a), s3.random_element(&mut b));

        let triv = PermGroup::trivial(4);
        assert!(triv.random_element(&mut a).is_identity());

        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut counts: HashMap<Perm, usize> = HashMap::new();
        for _ in 0..6000 {
            *counts.entry(s3.random_element(&mut rng)).or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        // binomial sd = sqrt(6000 * 1/6 * 5/6) ~ 28.9
        for &c in counts.values() {
            assert!((c as f64 - 1000.0).abs() < 5.0 * 28.87, "count {}", c);
        }
    }

    #[test]
    fn codec_conjugation_and_multiplication() {
        let g = group("(1,2,3),(1,2,3,4,5,6)", 6);
        let codec = g.codec().unwrap();
        let mut ops = RankOps::new(&codec);
        let s = &g.generators()[1];
        let s_inv = s.inverse();
        for r in (0..720u64).step_by(7) {
            let x = g.unrank(r as u128);
            let c = ops.conjugate(r, s, &s_inv);
            assert_eq!(g.unrank(c as u128), x.conjugate_by(s));
            let m = ops.right_multiply(r, s);
            assert_eq!(g.unrank(m as u128), x.then(s));
        }
    }

    #[test]
    fn subgroup_ranks() {
        let g = group("(1,2),(1,2,3,4)", 4);
        let h = group("(1,2,3)", 4);
        let gc = g.codec().unwrap();
        let hc = h.codec().unwrap();
        let ranks = subgroup_ranks_in(&gc, &hc);
        let mut expect: Vec<u64> = h
            .elements(&Caps::default())
            .unwrap()
            .map(|e| g.rank(&e).unwrap() as u64)
            .collect();
        let mut got = ranks.clone();
        got.sort_unstable();
        expect.sort_unstable();
        assert_eq!(got, expect);
    }

    #[test]
    fn pointwise_stabilizer_of_points() {
        let s5 = group("(1,2),(1,2,3,4,5)", 5);
        let stab = s5.pointwise_stabilizer(&[4, 3]).unwrap();
        assert_eq!(stab.order(), 6);
        for g in stab.generators() {
            assert_eq!(g.apply(4), 4);
            assert_eq!(g.apply(3), 3);
        }
        let all = s5.pointwise_stabilizer(&[0, 1, 2, 3, 4]).unwrap();
        assert!(all.is_trivial());
    }

    #[test]
    fn large_order_fits_u128() {
        // S_30 has order 30! ~ 2.65e32
        let mut gens = Vec::new();
        gens.push(Perm::from_cycles(30, &[vec![0, 1]]).unwrap());
        gens.push(Perm::from_cycles(30, &[(0..30).collect()]).unwrap());
        let g = PermGroup::from_generators(30, gens).unwrap();
        let fact: u128 = (1..=30u128).product();
        assert_eq!(g.order(), fact);
    }
}
