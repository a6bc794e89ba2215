//! Structural invariants: conjugacy classes, derived series, normal closures,
//! socle, quotients and Sylow subgroups.

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{PermGroup, RankOps};
use crate::perm::Perm;

/// A subgroup of some parent group, optionally with its element set as a
/// bitset over the parent's rank order.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: PermGroup,
    pub bits: Option<FixedBitSet>,
}

impl Subgroup {
    pub fn new(group: PermGroup) -> Self {
        Subgroup { group, bits: None }
    }

    pub fn with_bits(group: PermGroup, bits: FixedBitSet) -> Self {
        Subgroup {
            group,
            bits: Some(bits),
        }
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn generators(&self) -> &[Perm] {
        self.group.generators()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.group.contains_unchecked(g)
    }
}

/// Element conjugacy classes. `class_of` is indexed by the group's element rank.
#[derive(Clone, Debug)]
pub struct ClassTable {
    reps: Vec<Perm>,
    rep_ranks: Vec<u64>,
    sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    class_of: Vec<u32>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    pub fn rep_ranks(&self) -> &[u64] {
        &self.rep_ranks
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Element order of each class.
    pub fn orders(&self) -> &[u64] {
        &self.rep_orders
    }

    pub fn class_of_rank(&self, rank: u64) -> usize {
        self.class_of[rank as usize] as usize
    }

    pub fn class_index(&self) -> &[u32] {
        &self.class_of
    }
}

/// Orbits of `group` acting on itself by conjugation. Classes are numbered in
/// order of their smallest-rank member, so the identity is class 0.
pub fn conjugacy_classes(group: &PermGroup, caps: &Caps) -> Result<ClassTable> {
    caps.check_enumeration(group.order())?;
    let codec = group.codec()?;
    let mut ops = RankOps::new(&codec);
    let actors: Vec<(Perm, Perm)> = group
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let n = codec.order() as usize;
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut rep_ranks = Vec::new();
    let mut sizes = Vec::new();
    let mut rep_orders = Vec::new();
    let mut queue: Vec<u64> = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        class_of[start] = id;
        queue.clear();
        queue.push(start as u64);
        let mut head = 0;
        while head < queue.len() {
            let r = queue[head];
            head += 1;
            for (g, gi) in &actors {
                let c = ops.conjugate(r, g, gi);
                if class_of[c as usize] == u32::MAX {
                    class_of[c as usize] = id;
                    queue.push(c);
                }
            }
        }
        let rep = codec.unrank(start as u64);
        rep_orders.push(rep.order());
        reps.push(rep);
        rep_ranks.push(start as u64);
        sizes.push(queue.len() as u64);
    }
    Ok(ClassTable {
        reps,
        rep_ranks,
        sizes,
        rep_orders,
        class_of,
    })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> u32 {
    prime_divisors(n as u128).len() as u32
}

/// Number of conjugacy classes whose elements have prime order.
pub fn prime_order_class_count(classes: &ClassTable) -> usize {
    classes.orders().iter().filter(|&&o| is_prime(o)).count()
}

/// Smallest normal subgroup of `group` containing `elems`.
pub fn normal_closure(group: &PermGroup, elems: &[Perm]) -> Result<PermGroup> {
    let degree = group.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut current = PermGroup::trivial(degree);
    let mut pending: Vec<Perm> = elems.iter().filter(|g| !g.is_identity()).cloned().collect();
    while !pending.is_empty() {
        let fresh: Vec<Perm> = pending
            .drain(..)
            .filter(|x| !current.contains_unchecked(x))
            .collect();
        if fresh.is_empty() {
            break;
        }
        let mut added = Vec::new();
        for x in fresh {
            if !added.iter().any(|y: &Perm| *y == x) {
                added.push(x);
            }
        }
        gens.extend(added.iter().cloned());
        current = PermGroup::from_generators(degree, gens.clone())?;
        for x in &added {
            for g in group.generators() {
                let c = x.conjugate_by(g);
                if !current.contains_unchecked(&c) {
                    pending.push(c);
                }
            }
        }
    }
    Ok(current)
}

/// Whether every generator of `sub` is fixed by conjugation into `sub`.
pub fn is_normal(group: &PermGroup, sub: &PermGroup) -> bool {
    sub.generators().iter().all(|h| {
        group
            .generators()
            .iter()
            .all(|g| sub.contains_unchecked(&h.conjugate_by(g)))
    })
}

fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

pub fn derived_subgroup(group: &PermGroup) -> Result<PermGroup> {
    let gens = group.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = commutator(a, b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(group, &comms)
}

/// Derived series from `group` down to its terminal member.
pub fn derived_series(group: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_trivial() {
            return Ok(series);
        }
        let next = derived_subgroup(last)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_soluble(group: &PermGroup) -> Result<bool> {
    let series = derived_series(group)?;
    Ok(series.last().expect("nonempty").is_trivial())
}

pub fn is_cyclic(group: &PermGroup) -> bool {
    if !group.is_abelian() {
        return false;
    }
    let exponent = group
        .generators()
        .iter()
        .fold(1u128, |acc, g| acc.lcm(&(g.order() as u128)));
    exponent == group.order()
}

/// Least `k >= 1` with `g^k` in `sub`.
pub fn order_modulo(g: &Perm, sub: &PermGroup) -> u64 {
    let mut x = g.clone();
    let mut k = 1;
    while !sub.contains_unchecked(&x) {
        x = x.then(g);
        k += 1;
    }
    k
}

/// `G/G'` is abelian, so it is cyclic iff its exponent equals its order.
pub fn abelianization_is_cyclic(group: &PermGroup) -> Result<bool> {
    let derived = derived_subgroup(group)?;
    let index = group.order() / derived.order();
    let exponent = group.generators().iter().fold(1u128, |acc, g| {
        acc.lcm(&(order_modulo(g, &derived) as u128))
    });
    Ok(exponent == index)
}

/// Minimal normal subgroups, ordered by order and then by discovery.
pub fn minimal_normal_subgroups(group: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    if group.is_trivial() {
        return Ok(Vec::new());
    }
    let classes = conjugacy_classes(group, caps)?;
    let mut closures: Vec<PermGroup> = Vec::new();
    for (rep, &o) in classes.reps().iter().zip(classes.orders()) {
        if !is_prime(o) {
            continue;
        }
        let n = normal_closure(group, std::slice::from_ref(rep))?;
        if !closures.iter().any(|c| c.same_group(&n)) {
            closures.push(n);
        }
    }
    let mut minimal: Vec<PermGroup> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && n.contains_group(m))
        })
        .cloned()
        .collect();
    minimal.sort_by_key(|n| n.order());
    Ok(minimal)
}

pub fn socle(group: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let gens: Vec<Perm> = minimal_normal_subgroups(group, caps)?
        .iter()
        .flat_map(|n| n.generators().to_vec())
        .collect();
    PermGroup::from_generators(group.degree(), gens)
}

/// The action of a group on the right cosets of a normal subgroup.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    pub kernel: PermGroup,
    /// coset representatives; coset `i` is `kernel * reps[i]`
    pub reps: Vec<Perm>,
}

impl Quotient {
    /// Index of the coset containing `g`.
    pub fn coset_of(&self, g: &Perm) -> usize {
        self.reps
            .iter()
            .position(|r| self.kernel.contains_unchecked(&g.then(&r.inverse())))
            .expect("element of the parent group")
    }

    /// Image of an element of the parent group in the quotient.
    pub fn image(&self, g: &Perm) -> Perm {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.then(g)) as u32)
            .collect();
        Perm::from_images(images).expect("coset action is a bijection")
    }
}

/// `G/N` as a permutation group on the right cosets of `N`.
pub fn quotient_group(group: &PermGroup, normal: &PermGroup, caps: &Caps) -> Result<Quotient> {
    if !group.contains_group(normal) {
        return Err(Error::NotSubgroup);
    }
    if !is_normal(group, normal) {
        return Err(Error::NotNormal);
    }
    let index = group.order() / normal.order();
    caps.check_enumeration(index)?;
    caps.check_degree(index as usize)?;
    let gens: Vec<Perm> = group.generators().to_vec();
    let mut reps = vec![group.identity()];
    let mut action: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        let t = reps[head].clone();
        head += 1;
        for (gi, s) in gens.iter().enumerate() {
            let y = t.then(s);
            let j = match reps
                .iter()
                .position(|r| normal.contains_unchecked(&y.then(&r.inverse())))
            {
                Some(j) => j,
                None => {
                    reps.push(y);
                    reps.len() - 1
                }
            };
            action[gi].push(j as u32);
        }
    }
    debug_assert_eq!(reps.len() as u128, index);
    let qgens = action
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<_>>>()?;
    let q = PermGroup::from_generators(reps.len(), qgens)?;
    Ok(Quotient {
        group: q,
        kernel: normal.clone(),
        reps,
    })
}

fn normalizes(g: &Perm, sub: &PermGroup) -> bool {
    sub.generators()
        .iter()
        .all(|h| sub.contains_unchecked(&h.conjugate_by(g)))
}

/// A Sylow `p`-subgroup, grown one factor `p` at a time: the first element `g`
/// (in rank order) that normalizes the current `P` and has order divisible by
/// `p` modulo `P` contributes `g^(k/p)`, where `k` is that order.
pub fn sylow_subgroup(group: &PermGroup, p: u64, caps: &Caps) -> Result<PermGroup> {
    if !is_prime(p) || group.order() % p as u128 != 0 {
        return Err(Error::PNotDividing(p));
    }
    let mut target = 1u128;
    let mut n = group.order();
    while n % p as u128 == 0 {
        n /= p as u128;
        target *= p as u128;
    }
    let mut current = PermGroup::trivial(group.degree());
    let mut gens: Vec<Perm> = Vec::new();
    while current.order() < target {
        let mut found = None;
        for g in group.elements(caps)? {
            if current.contains_unchecked(&g) || !normalizes(&g, &current) {
                continue;
            }
            let k = order_modulo(&g, &current);
            if k % p == 0 {
                found = Some(g.pow(k / p));
                break;
            }
        }
        let y = found.ok_or_else(|| Error::Internal("Sylow growth stalled".into()))?;
        gens.push(y);
        current = PermGroup::from_generators(group.degree(), gens.clone())?;
    }
    Ok(current)
}

/// Elements of `group` normalizing `sub`, by filtering the enumeration.
pub fn normalizer(group: &PermGroup, sub: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let mut current = sub.clone();
    let mut gens: Vec<Perm> = sub.generators().to_vec();
    let target_check = |g: &Perm| normalizes(g, sub);
    for g in group.elements(caps)? {
        if current.contains_unchecked(&g) {
            continue;
        }
        if target_check(&g) {
            gens.push(g);
            current = PermGroup::from_generators(group.degree(), gens.clone())?;
        }
    }
    Ok(current)
}

/// Intersection of two subgroups by enumerating the smaller one.
pub fn intersection(a: &PermGroup, b: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let (small, large) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let mut current = PermGroup::trivial(a.degree());
    let mut gens = Vec::new();
    for g in small.elements(caps)? {
        if large.contains_unchecked(&g) && !current.contains_unchecked(&g) {
            gens.push(g);
            current = PermGroup::from_generators(a.degree(), gens.clone())?;
        }
    }
    Ok(current)
}

/// `sub ∩ N` for `N` normal in the parent of `quotient`, as the kernel of the
/// action of `sub` on the cosets of `N`. Needs no enumeration of `sub`.
pub fn intersect_with_kernel(sub: &PermGroup, quotient: &Quotient) -> Result<PermGroup> {
    let index = quotient.reps.len();
    let degree = sub.degree();
    let total = index + degree;
    let combined: Vec<Perm> = sub
        .generators()
        .iter()
        .map(|g| {
            let top = quotient.image(g);
            let mut images: Vec<u32> = top.images().to_vec();
            images.extend(g.images().iter().map(|&x| x + index as u32));
            Perm::from_images(images).expect("disjoint union of bijections")
        })
        .collect();
    let prefix: Vec<usize> = (0..index).collect();
    let big = PermGroup::from_generators(total, combined)?;
    let kernel = big.pointwise_stabilizer(&prefix)?;
    let bottom: Vec<usize> = (index..total).collect();
    let gens = kernel
        .strong_generators()
        .iter()
        .map(|k| {
            k.restrict(&bottom)
                .expect("kernel preserves the lower block")
        })
        .collect();
    PermGroup::from_generators(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm_list;
    use std::collections::HashSet;

    fn group(gens: &str, degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, parse_perm_list(gens, degree).unwrap()).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let mut t: Vec<u32> = (0..n as u32).collect();
        t.swap(0, 1);
        PermGroup::from_generators(
            n,
            vec![
                Perm::from_images(t).unwrap(),
                Perm::from_images(cycle).unwrap(),
            ],
        )
        .unwrap()
    }

    fn alt(n: usize) -> PermGroup {
        let gens: Vec<Perm> = (2..n)
            .map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::from_generators(n, gens).unwrap()
    }

    fn klein() -> PermGroup {
        group("(1,2),(3,4)", 4)
    }

    #[test]
    fn class_examples() {
        let s3 = conjugacy_classes(&sym(3), &caps()).unwrap();
        let mut sizes = s3.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(prime_order_class_count(&s3), 2);
        let k = conjugacy_classes(&klein(), &caps()).unwrap();
        assert_eq!(k.len(), 4);
        assert_eq!(prime_order_class_count(&k), 3);
        let a5 = conjugacy_classes(&alt(5), &caps()).unwrap();
        assert_eq!(a5.len(), 5);
        assert_eq!(a5.sizes().iter().sum::<u64>(), 60);
    }

    #[test]
    fn alt6_prime_classes_match_enumeration() {
        let a6 = alt(6);
        let table = conjugacy_classes(&a6, &caps()).unwrap();
        // oracle: group prime-order elements into full conjugation orbits
        let elems: Vec<Perm> = a6.elements(&caps()).unwrap().collect();
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut count = 0;
        for x in &elems {
            if !is_prime(x.order()) || seen.contains(x) {
                continue;
            }
            count += 1;
            for g in &elems {
                seen.insert(x.conjugate_by(g));
            }
        }
        assert_eq!(prime_order_class_count(&table), count);
        assert_eq!(count, 5);
    }

    #[test]
    fn derived_and_soluble() {
        let s3 = sym(3);
        let d = derived_subgroup(&s3).unwrap();
        assert_eq!(d.order(), 3);
        assert!(is_soluble(&s3).unwrap());
        assert!(abelianization_is_cyclic(&s3).unwrap());
        let a5 = alt(5);
        assert_eq!(derived_subgroup(&a5).unwrap().order(), 60);
        assert!(!is_soluble(&a5).unwrap());
        assert!(!abelianization_is_cyclic(&klein()).unwrap());
        assert!(is_soluble(&sym(4)).unwrap());
        assert!(is_cyclic(&group("(1,2,3)(4,5)", 5)));
        assert!(!is_cyclic(&klein()));
        assert!(is_cyclic(&PermGroup::trivial(3)));
    }

    #[test]
    fn closures() {
        let c = normal_closure(&sym(3), &[Perm::parse("(1,2,3)", 3).unwrap()]).unwrap();
        assert_eq!(c.order(), 3);
        let c = normal_closure(&alt(5), &[Perm::parse("(1,2,3)", 5).unwrap()]).unwrap();
        assert_eq!(c.order(), 60);
        let c = normal_closure(&klein(), &[Perm::parse("(1,2)", 4).unwrap()]).unwrap();
        assert_eq!(c.order(), 2);
        assert!(is_normal(&sym(3), &alt(3)));
        assert!(!is_normal(&sym(3), &group("(1,2)", 3)));
    }

    #[test]
    fn minimal_normals_and_socle() {
        let m = minimal_normal_subgroups(&sym(3), &caps()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 3);
        let m = minimal_normal_subgroups(&klein(), &caps()).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(socle(&klein(), &caps()).unwrap().order(), 4);
        let s4 = sym(4);
        let m = minimal_normal_subgroups(&s4, &caps()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        // oracle: scan normal closures of every element
        let mut normals: Vec<PermGroup> = Vec::new();
        for x in s4.elements(&caps()).unwrap() {
            let n = normal_closure(&s4, &[x]).unwrap();
            if !n.is_trivial() && !normals.iter().any(|y| y.same_group(&n)) {
                normals.push(n);
            }
        }
        let min: Vec<_> = normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| m.order() < n.order() && n.contains_group(m))
            })
            .collect();
        assert_eq!(min.len(), 1);
        assert!(min[0].same_group(&m[0]));
    }

    #[test]
    fn quotients() {
        let q = quotient_group(&sym(3), &alt(3), &caps()).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.group.degree(), 2);
        let c2 = group("(1,2)", 4);
        let q = quotient_group(&klein(), &c2, &caps()).unwrap();
        assert_eq!(q.group.order(), 2);
        let v4 = group("(1,2)(3,4),(1,3)(2,4)", 4);
        let q = quotient_group(&sym(4), &v4, &caps()).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert_eq!(
            quotient_group(&sym(3), &group("(1,2)", 3), &caps()).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn sylows() {
        assert_eq!(sylow_subgroup(&sym(3), 3, &caps()).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&sym(4), 2, &caps()).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&sym(6), 2, &caps()).unwrap().order(), 16);
        assert_eq!(sylow_subgroup(&sym(6), 3, &caps()).unwrap().order(), 9);
        assert_eq!(
            sylow_subgroup(&sym(4), 5, &caps()).unwrap_err(),
            Error::PNotDividing(5)
        );
    }

    #[test]
    fn normalizers() {
        let s3 = sym(3);
        let c2 = group("(1,2)", 3);
        assert_eq!(normalizer(&s3, &c2, &caps()).unwrap().order(), 2);
        assert_eq!(normalizer(&s3, &alt(3), &caps()).unwrap().order(), 6);
        let p = sylow_subgroup(&sym(4), 2, &caps()).unwrap();
        assert_eq!(normalizer(&sym(4), &p, &caps()).unwrap().order(), 8);
    }

    #[test]
    fn kernel_intersection_matches_enumeration() {
        let s5 = sym(5);
        let a5 = alt(5);
        let q = quotient_group(&s5, &a5, &caps()).unwrap();
        let x = group("(1,2),(1,2,3,4)", 5);
        let k = intersect_with_kernel(&x, &q).unwrap();
        let e = intersection(&x, &a5, &caps()).unwrap();
        assert_eq!(k.order(), 12);
        assert!(k.same_group(&e));
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(1), 0);
        assert_eq!(omega(12), 2);
        assert_eq!(omega(30), 3);
    }
}
