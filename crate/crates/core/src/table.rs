//! Cayley tables for groups small enough to enumerate completely.

use fixedbitset::FixedBitSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{PermGroup, RankOps};
use crate::perm::Perm;

/// Element indices are ranks in the group's stabilizer chain; index 0 is the identity.
pub type Elem = u16;

pub const MAX_TABLE_ORDER: u64 = u16::MAX as u64;

pub struct GroupTable {
    group: PermGroup,
    n: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    orders: Vec<u32>,
    gens: Vec<Elem>,
    elements: Vec<Perm>,
}

impl GroupTable {
    pub fn new(group: &PermGroup, caps: &Caps) -> Result<Self> {
        caps.check_enumeration(group.order())?;
        if group.order() > MAX_TABLE_ORDER as u128 {
            return Err(Error::CapExceeded {
                what: "multiplication table",
                size: group.order(),
                cap: MAX_TABLE_ORDER as u128,
            });
        }
        let n = group.order() as usize;
        let codec = group.codec()?;
        let mut ops = RankOps::new(&codec);
        let gen_perms: Vec<Perm> = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();

        // right multiplication by each generator
        let rmul: Vec<Vec<Elem>> = gen_perms
            .iter()
            .map(|s| {
                (0..n as u64)
                    .map(|r| ops.right_multiply(r, s) as Elem)
                    .collect()
            })
            .collect();

        // spanning tree of the Cayley graph: element j = parent[j] * gen[via[j]]
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0usize; n];
        let mut bfs = Vec::with_capacity(n);
        parent[0] = 0;
        bfs.push(0usize);
        let mut head = 0;
        while head < bfs.len() {
            let x = bfs[head];
            head += 1;
            for (gi, table) in rmul.iter().enumerate() {
                let y = table[x] as usize;
                if parent[y] == u32::MAX {
                    parent[y] = x as u32;
                    via[y] = gi;
                    bfs.push(y);
                }
            }
        }
        if bfs.len() != n {
            return Err(Error::Internal("Cayley graph is not connected".into()));
        }

        let mut mul = vec![0 as Elem; n * n];
        for i in 0..n {
            mul[i * n] = i as Elem;
        }
        for &j in bfs.iter().skip(1) {
            let k = parent[j] as usize;
            let table = &rmul[via[j]];
            for i in 0..n {
                mul[i * n + j] = table[mul[i * n + k] as usize];
            }
        }

        let mut inv = vec![0 as Elem; n];
        for i in 0..n {
            let row = &mul[i * n..(i + 1) * n];
            inv[i] = row.iter().position(|&e| e == 0).expect("group table") as Elem;
        }

        let orders: Vec<u32> = (0..n)
            .map(|i| {
                let mut x = i;
                let mut k = 1u32;
                while x != 0 {
                    x = mul[x * n + i] as usize;
                    k += 1;
                }
                k
            })
            .collect();

        let gens = gen_perms
            .iter()
            .map(|g| ops.rank_of_member(g) as Elem)
            .collect();
        let elements = (0..n as u64).map(|r| codec.unrank(r)).collect();

        Ok(GroupTable {
            group: group.clone(),
            n,
            mul,
            inv,
            orders,
            gens,
            elements,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn order_of(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn element(&self, a: Elem) -> &Perm {
        &self.elements[a as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<Elem> {
        self.group.rank(p).map(|r| r as Elem)
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> (FixedBitSet, Vec<Elem>) {
        let mut bits = self.empty_set();
        bits.insert(0);
        let elems = vec![0 as Elem];
        let mut acc_gens: Vec<Elem> = Vec::new();
        let mut cur = (bits, elems);
        for &g in gens {
            if !cur.0.contains(g as usize) {
                cur = self.join(&cur.0, &cur.1, &acc_gens, g);
            }
            acc_gens.push(g);
        }
        cur
    }

    /// `<A, x>` by Dimino's coset extension. `a_gens` must generate `A`.
    pub fn join(
        &self,
        a_bits: &FixedBitSet,
        a_elems: &[Elem],
        a_gens: &[Elem],
        x: Elem,
    ) -> (FixedBitSet, Vec<Elem>) {
        let mut bits = a_bits.clone();
        let mut elems = a_elems.to_vec();
        if bits.contains(x as usize) {
            return (bits, elems);
        }
        let mut gens: Vec<Elem> = a_gens.to_vec();
        gens.push(x);
        let mut reps: Vec<Elem> = vec![0];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &g in &gens {
                let e = self.mul(r, g);
                if !bits.contains(e as usize) {
                    for &a in a_elems {
                        let y = self.mul(a, e);
                        bits.insert(y as usize);
                        elems.push(y);
                    }
                    reps.push(e);
                }
            }
        }
        (bits, elems)
    }

    /// Image of an element set under conjugation by `g`.
    pub fn conj_set(&self, elems: &[Elem], g: Elem) -> (FixedBitSet, Vec<Elem>) {
        let gi = self.inv(g);
        let mut bits = self.empty_set();
        let mut out = Vec::with_capacity(elems.len());
        for &e in elems {
            let y = self.mul(self.mul(gi, e), g);
            bits.insert(y as usize);
            out.push(y);
        }
        (bits, out)
    }

    /// Union of all conjugates of an element set.
    pub fn conjugate_closure(&self, elems: &[Elem]) -> FixedBitSet {
        let mut out = self.empty_set();
        for g in 0..self.n as Elem {
            let gi = self.inv(g);
            for &e in elems {
                out.insert(self.mul(self.mul(gi, e), g) as usize);
            }
        }
        out
    }

    pub fn bits_to_elems(bits: &FixedBitSet) -> Vec<Elem> {
        bits.ones().map(|i| i as Elem).collect()
    }

    /// Permutations of an element set.
    pub fn perms(&self, elems: &[Elem]) -> Vec<Perm> {
        elems.iter().map(|&e| self.element(e).clone()).collect()
    }

    /// A small generating set of the subgroup with the given elements, greedily chosen.
    pub fn generating_set(&self, elems: &[Elem]) -> Vec<Elem> {
        let mut sorted: Vec<Elem> = elems.to_vec();
        // prefer elements of large order
        sorted.sort_by_key(|&e| (std::cmp::Reverse(self.order_of(e)), e));
        let target = elems.len();
        let mut gens = Vec::new();
        let mut cur_bits = self.empty_set();
        cur_bits.insert(0);
        let mut cur_elems = vec![0 as Elem];
        for e in sorted {
            if cur_elems.len() == target {
                break;
            }
            if !cur_bits.contains(e as usize) {
                let (b, el) = self.join(&cur_bits, &cur_elems, &gens, e);
                cur_bits = b;
                cur_elems = el;
                gens.push(e);
            }
        }
        gens
    }

    /// Subgroup with the given elements as a permutation group.
    pub fn subgroup_perm_group(&self, elems: &[Elem]) -> Result<PermGroup> {
        let gens = self.generating_set(elems);
        let perms = self.perms(&gens);
        PermGroup::from_generators(self.group.degree(), perms)
    }
}
