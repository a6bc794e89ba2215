//! Brute-force reference values of `sigma` and `gamma` for tiny groups.
//!
//! Nothing here shares code with the lattice or set-cover machinery: the
//! multiplication table comes from composing permutations, subgroups are
//! found by closing under products until nothing changes, and covers are
//! found by trying every subset in order of size.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::config::Caps;
use crate::cover::Value;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Largest group order the oracle accepts.
pub const MAX_ORACLE_ORDER: u128 = 64;

/// Largest group order [`sigma_all_subgroups_oracle`] accepts.
pub const MAX_ALL_SUBGROUPS_ORDER: u128 = 100;

struct Naive {
    n: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Naive {
    fn new(group: &PermGroup, caps: &Caps) -> Result<Self> {
        Naive::with_cap(group, caps, MAX_ORACLE_ORDER)
    }

    fn with_cap(group: &PermGroup, caps: &Caps, cap: u128) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::CapExceeded {
                what: "oracle group order",
                size: group.order(),
                cap,
            });
        }
        let elems: Vec<Perm> = group.elements(caps)?.collect();
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elems.len();
        let mul: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let id = index[&group.identity()];
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == id).expect("inverse"))
            .collect();
        Ok(Naive { n, mul, inv })
    }

    /// Smallest subset containing `seed` closed under products.
    fn close(&self, seed: &FixedBitSet) -> FixedBitSet {
        let mut set = seed.clone();
        loop {
            let members: Vec<usize> = set.ones().collect();
            let mut grew = false;
            for &a in &members {
                for &b in &members {
                    let c = self.mul[a][b];
                    if !set.contains(c) {
                        set.insert(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    fn all_subgroups(&self) -> Vec<FixedBitSet> {
        let mut trivial = FixedBitSet::with_capacity(self.n);
        trivial.insert(self.mul[0][self.inv[0]]);
        let trivial = self.close(&trivial);
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut queue = vec![trivial.clone()];
        seen.insert(trivial);
        while let Some(h) = queue.pop() {
            for x in 0..self.n {
                if h.contains(x) {
                    continue;
                }
                let mut seed = h.clone();
                seed.insert(x);
                let k = self.close(&seed);
                if seen.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn maximal(&self) -> Vec<FixedBitSet> {
        let proper: Vec<FixedBitSet> = self
            .all_subgroups()
            .into_iter()
            .filter(|h| h.count_ones(..) < self.n)
            .collect();
        let mut out: Vec<FixedBitSet> = proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.count_ones(..) > h.count_ones(..) && h.is_subset(k))
            })
            .cloned()
            .collect();
        out.sort_by_key(|h| h.ones().collect::<Vec<_>>());
        out
    }

    fn conjugate(&self, h: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.n);
        for x in h.ones() {
            out.insert(self.mul[self.mul[self.inv[g]][x]][g]);
        }
        out
    }
}

/// Least `k` such that some `k` of the sets have union of size `n`.
fn least_cover(n: usize, sets: &[FixedBitSet]) -> Value {
    for k in 1..=sets.len() {
        for combo in sets.iter().combinations(k) {
            let mut u = FixedBitSet::with_capacity(n);
            for s in combo {
                u.union_with(s);
            }
            if u.count_ones(..) == n {
                return Value::Finite(k as u64);
            }
        }
    }
    Value::Inf
}

/// `sigma(G)` by trying every set of maximal subgroups.
pub fn sigma_oracle(group: &PermGroup, caps: &Caps) -> Result<Value> {
    let t = Naive::new(group, caps)?;
    if t.n == 1 {
        return Ok(Value::Inf);
    }
    Ok(least_cover(t.n, &t.maximal()))
}

/// `sigma(G)` with every proper subgroup allowed as a cover member, not
/// only maximal ones. Returns `None` when some cover size to be tried has
/// more than `budget` subsets.
pub fn sigma_all_subgroups_oracle(
    group: &PermGroup,
    caps: &Caps,
    budget: u64,
) -> Result<Option<Value>> {
    let t = Naive::with_cap(group, caps, MAX_ALL_SUBGROUPS_ORDER)?;
    if t.n == 1 {
        return Ok(Some(Value::Inf));
    }
    let proper: Vec<FixedBitSet> = t
        .all_subgroups()
        .into_iter()
        .filter(|h| h.count_ones(..) < t.n)
        .collect();
    let mut subsets: u64 = 1;
    for k in 1..=proper.len() {
        subsets = subsets.saturating_mul((proper.len() + 1 - k) as u64) / k as u64;
        if subsets > budget {
            return Ok(None);
        }
        for combo in proper.iter().combinations(k) {
            let mut u = FixedBitSet::with_capacity(t.n);
            for s in combo {
                u.union_with(s);
            }
            if u.count_ones(..) == t.n {
                return Ok(Some(Value::Finite(k as u64)));
            }
        }
    }
    Ok(Some(Value::Inf))
}

/// `gamma(G)` by trying every set of conjugacy classes of maximal subgroups.
pub fn gamma_oracle(group: &PermGroup, caps: &Caps) -> Result<Value> {
    let t = Naive::new(group, caps)?;
    if t.n == 1 {
        return Ok(Value::Inf);
    }
    let mut unions: Vec<FixedBitSet> = Vec::new();
    let mut done: HashSet<FixedBitSet> = HashSet::new();
    for h in t.maximal() {
        if done.contains(&h) {
            continue;
        }
        let mut u = FixedBitSet::with_capacity(t.n);
        for g in 0..t.n {
            let c = t.conjugate(&h, g);
            u.union_with(&c);
            done.insert(c);
        }
        unions.push(u);
    }
    Ok(least_cover(t.n, &unions))
}

/// Number of subgroups, found by brute-force closure.
pub fn subgroup_count_oracle(group: &PermGroup, caps: &Caps) -> Result<usize> {
    Ok(Naive::new(group, caps)?.all_subgroups().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::{alt, cyclic, elem_abelian_p2, sym};

    #[test]
    fn classical_values() {
        let caps = Caps::default();
        assert_eq!(
            sigma_oracle(&sym(3).unwrap(), &caps).unwrap(),
            Value::Finite(4)
        );
        assert_eq!(
            gamma_oracle(&sym(3).unwrap(), &caps).unwrap(),
            Value::Finite(2)
        );
        assert_eq!(
            sigma_oracle(&alt(5).unwrap(), &caps).unwrap(),
            Value::Finite(10)
        );
        assert_eq!(
            sigma_oracle(&cyclic(6).unwrap(), &caps).unwrap(),
            Value::Inf
        );
        assert_eq!(
            gamma_oracle(&elem_abelian_p2(3).unwrap(), &caps).unwrap(),
            Value::Finite(4)
        );
        assert_eq!(subgroup_count_oracle(&sym(4).unwrap(), &caps).unwrap(), 30);
        assert!(sigma_oracle(&sym(5).unwrap(), &caps).is_err());
        let all = sigma_all_subgroups_oracle(&sym(4).unwrap(), &caps, 1_000_000).unwrap();
        assert_eq!(all, Some(Value::Finite(4)));
        assert_eq!(
            sigma_all_subgroups_oracle(&cyclic(6).unwrap(), &caps, 1_000_000).unwrap(),
            Some(Value::Inf)
        );
    }
}
