//! Complete subgroup lattices of small groups.
//!
//! Subgroups are identified by their element bitsets over the group's rank
//! order. Enumeration seeds with the trivial subgroup and, for each class
//! representative `A` found so far, forms every join `<A, x>`; each new
//! subgroup brings in its whole conjugacy class at once.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::config::Caps;
use crate::cover::Value;
use crate::error::Result;
use crate::group::PermGroup;
use crate::structure::Subgroup;
use crate::table::{Elem, GroupTable};

#[derive(Clone, Debug)]
struct Node {
    bits: FixedBitSet,
    elems: Vec<Elem>,
    gens: Vec<Elem>,
    class: usize,
}

pub struct SubgroupLattice {
    table: GroupTable,
    nodes: Vec<Node>,
    classes: Vec<Vec<usize>>,
    maximal: FixedBitSet,
    /// cyclic[e] = index of the subgroup generated by element `e`
    cyclic: Vec<usize>,
}

impl SubgroupLattice {
    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn group(&self) -> &PermGroup {
        self.table.group()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn order(&self, i: usize) -> usize {
        self.nodes[i].elems.len()
    }

    pub fn bits(&self, i: usize) -> &FixedBitSet {
        &self.nodes[i].bits
    }

    /// Elements in increasing index order.
    pub fn elems(&self, i: usize) -> &[Elem] {
        &self.nodes[i].elems
    }

    pub fn gens(&self, i: usize) -> &[Elem] {
        &self.nodes[i].gens
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.nodes[i].class
    }

    /// Subgroup conjugacy classes, each listed in increasing subgroup index.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal.contains(i)
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        self.maximal.ones().collect()
    }

    /// Classes of maximal subgroups, as class indices.
    pub fn maximal_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.maximal.contains(self.classes[c][0]))
            .collect()
    }

    /// Index of the cyclic subgroup generated by element `e`.
    pub fn cyclic_of(&self, e: Elem) -> usize {
        self.cyclic[e as usize]
    }

    /// Indices of the cyclic subgroups not properly contained in another cyclic subgroup.
    pub fn maximal_cyclic(&self) -> Vec<usize> {
        let mut cyc: Vec<usize> = self.cyclic.clone();
        cyc.sort_unstable();
        cyc.dedup();
        cyc.iter()
            .copied()
            .filter(|&c| {
                !cyc.iter().any(|&d| {
                    d != c
                        && self.order(d) > self.order(c)
                        && self.nodes[c].bits.is_subset(&self.nodes[d].bits)
                })
            })
            .collect()
    }

    pub fn index_of_bits(&self, bits: &FixedBitSet) -> Option<usize> {
        self.nodes.iter().position(|n| &n.bits == bits)
    }

    pub fn perm_group(&self, i: usize) -> Result<PermGroup> {
        let perms = self.table.perms(&self.nodes[i].gens);
        PermGroup::from_generators(self.group().degree(), perms)
    }

    pub fn subgroup(&self, i: usize) -> Result<Subgroup> {
        Ok(Subgroup::with_bits(
            self.perm_group(i)?,
            self.nodes[i].bits.clone(),
        ))
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }
}

/// Every subgroup of `group`.
pub fn all_subgroups(group: &PermGroup, caps: &Caps) -> Result<SubgroupLattice> {
    caps.check_lattice(group.order())?;
    let table = GroupTable::new(group, caps)?;
    let n = table.len();
    let gens_g: Vec<Elem> = table.generators().to_vec();

    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();

    // cyclic subgroups, one generator each
    let mut cyclic_gens: Vec<Elem> = Vec::new();
    let mut cyclic_bits: Vec<FixedBitSet> = Vec::new();
    {
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        for e in 0..n as Elem {
            let (bits, _) = table.closure(&[e]);
            if seen.insert(bits.clone(), ()).is_none() {
                cyclic_gens.push(e);
                cyclic_bits.push(bits);
            }
        }
    }

    let add_class = |bits: FixedBitSet,
                     elems: Vec<Elem>,
                     gens: Vec<Elem>,
                     nodes: &mut Vec<Node>,
                     classes: &mut Vec<Vec<usize>>,
                     index: &mut HashMap<FixedBitSet, usize>|
     -> usize {
        let class = classes.len();
        let first = nodes.len();
        index.insert(bits.clone(), first);
        nodes.push(Node {
            bits,
            elems,
            gens,
            class,
        });
        let mut members = vec![first];
        let mut head = 0;
        while head < members.len() {
            let cur = members[head];
            head += 1;
            for &g in &gens_g {
                let (b, e) = table.conj_set(&nodes[cur].elems, g);
                if index.contains_key(&b) {
                    continue;
                }
                let gi = table.inv(g);
                let gens = nodes[cur]
                    .gens
                    .iter()
                    .map(|&x| table.mul(table.mul(gi, x), g))
                    .collect();
                let id = nodes.len();
                index.insert(b.clone(), id);
                nodes.push(Node {
                    bits: b,
                    elems: e,
                    gens,
                    class,
                });
                members.push(id);
            }
        }
        classes.push(members);
        first
    };

    let (tb, te) = table.closure(&[]);
    add_class(tb, te, Vec::new(), &mut nodes, &mut classes, &mut index);

    let mut maximal_reps: Vec<usize> = Vec::new();
    let mut c = 0;
    while c < classes.len() {
        let rep = classes[c][0];
        let is_proper = nodes[rep].elems.len() < n;
        let mut all_joins_top = is_proper;
        for (ci, &x) in cyclic_gens.iter().enumerate() {
            if cyclic_bits[ci].is_subset(&nodes[rep].bits) {
                continue;
            }
            let (bits, elems) =
                table.join(&nodes[rep].bits, &nodes[rep].elems, &nodes[rep].gens, x);
            if elems.len() < n {
                all_joins_top = false;
            }
            if index.contains_key(&bits) {
                continue;
            }
            let mut gens = nodes[rep].gens.clone();
            gens.push(x);
            add_class(bits, elems, gens, &mut nodes, &mut classes, &mut index);
        }
        if all_joins_top {
            maximal_reps.push(c);
        }
        c += 1;
    }

    // canonical order: by order, then by sorted element list
    for node in nodes.iter_mut() {
        node.elems.sort_unstable();
    }
    let mut perm: Vec<usize> = (0..nodes.len()).collect();
    perm.sort_by(|&a, &b| {
        nodes[a]
            .elems
            .len()
            .cmp(&nodes[b].elems.len())
            .then_with(|| nodes[a].elems.cmp(&nodes[b].elems))
    });
    let mut new_index = vec![0; nodes.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_index[old] = new;
    }
    let mut class_order: Vec<usize> = (0..classes.len()).collect();
    let class_min = |c: usize| {
        classes[c]
            .iter()
            .map(|&i| new_index[i])
            .min()
            .expect("nonempty")
    };
    class_order.sort_by_key(|&c| class_min(c));
    let mut new_class = vec![0; classes.len()];
    for (new, &old) in class_order.iter().enumerate() {
        new_class[old] = new;
    }
    let mut sorted_nodes: Vec<Node> = perm.iter().map(|&old| nodes[old].clone()).collect();
    for node in sorted_nodes.iter_mut() {
        node.class = new_class[node.class];
    }
    let mut sorted_classes: Vec<Vec<usize>> = class_order
        .iter()
        .map(|&old| {
            let mut m: Vec<usize> = classes[old].iter().map(|&i| new_index[i]).collect();
            m.sort_unstable();
            m
        })
        .collect();
    for m in sorted_classes.iter_mut() {
        m.sort_unstable();
    }
    let mut maximal = FixedBitSet::with_capacity(sorted_nodes.len());
    for &c in &maximal_reps {
        for &i in &classes[c] {
            maximal.insert(new_index[i]);
        }
    }
    let cyclic = (0..n as Elem)
        .map(|e| {
            let (bits, _) = table.closure(&[e]);
            new_index[index[&bits]]
        })
        .collect();

    Ok(SubgroupLattice {
        table,
        nodes: sorted_nodes,
        classes: sorted_classes,
        maximal,
        cyclic,
    })
}

/// The maximal subgroups of `group`, in lattice order.
pub fn maximal_subgroups(group: &PermGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    let lattice = all_subgroups(group, caps)?;
    lattice
        .maximal_indices()
        .into_iter()
        .map(|i| lattice.subgroup(i))
        .collect()
}

pub use crate::structure::normalizer;

/// Smallest index of a proper subgroup; infinite for the trivial group.
pub fn min_proper_index(lattice: &SubgroupLattice) -> Value {
    let n = lattice.table().len();
    lattice
        .maximal_indices()
        .into_iter()
        .map(|i| (n / lattice.order(i)) as u64)
        .min()
        .map_or(Value::Inf, Value::Finite)
}

/// Least `k` such that at least two maximal subgroups have index `k`.
pub fn mu(lattice: &SubgroupLattice) -> Value {
    let n = lattice.table().len();
    let mut counts: HashMap<u64, usize> = HashMap::new();
    for i in lattice.maximal_indices() {
        *counts.entry((n / lattice.order(i)) as u64).or_default() += 1;
    }
    counts
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .map(|(k, _)| k)
        .min()
        .map_or(Value::Inf, Value::Finite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm_list;
    use std::collections::HashSet;

    fn group(gens: &str, degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, parse_perm_list(gens, degree).unwrap()).unwrap()
    }

    fn lattice(g: &PermGroup) -> SubgroupLattice {
        all_subgroups(g, &Caps::default()).unwrap()
    }

    /// Fixpoint of pairwise joins over all elements, in reverse element order.
    fn oracle_count(t: &GroupTable) -> usize {
        let mut found: HashSet<FixedBitSet> = HashSet::new();
        let mut frontier: Vec<(FixedBitSet, Vec<Elem>)> = Vec::new();
        let start = t.closure(&[]);
        found.insert(start.0.clone());
        frontier.push((start.0, start.1));
        while let Some((bits, elems)) = frontier.pop() {
            for x in (0..t.len() as Elem).rev() {
                if bits.contains(x as usize) {
                    continue;
                }
                let mut gens = t.generating_set(&elems);
                gens.push(x);
                let (b, e) = t.closure(&gens);
                if found.insert(b.clone()) {
                    frontier.push((b, e));
                }
            }
        }
        found.len()
    }

    #[test]
    fn counts() {
        let s3 = lattice(&group("(1,2),(1,2,3)", 3));
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.classes().len(), 4);
        let k = lattice(&group("(1,2),(3,4)", 4));
        assert_eq!(k.len(), 5);
        let s4 = group("(1,2),(1,2,3,4)", 4);
        let l = lattice(&s4);
        assert_eq!(l.len(), 30);
        assert_eq!(l.classes().len(), 11);
        assert_eq!(oracle_count(l.table()), 30);
        let a5 = lattice(&group("(1,2,3),(1,2,3,4,5)", 5));
        assert_eq!(a5.len(), 59);
    }

    #[test]
    fn maximals_and_indices() {
        let s3 = lattice(&group("(1,2),(1,2,3)", 3));
        assert_eq!(s3.maximal_indices().len(), 4);
        assert_eq!(min_proper_index(&s3), Value::Finite(2));
        assert_eq!(mu(&s3), Value::Finite(3));
        let k = lattice(&group("(1,2),(3,4)", 4));
        assert_eq!(k.maximal_indices().len(), 3);
        assert_eq!(mu(&k), Value::Finite(2));
        let a4 = lattice(&group("(1,2,3),(2,3,4)", 4));
        let mut orders: Vec<usize> = a4.maximal_indices().iter().map(|&i| a4.order(i)).collect();
        orders.sort();
        assert_eq!(orders, vec![3, 3, 3, 3, 4]);
        let c4 = lattice(&group("(1,2,3,4)", 4));
        assert_eq!(mu(&c4), Value::Inf);
        let c5 = lattice(&group("(1,2,3,4,5)", 5));
        assert_eq!(min_proper_index(&c5), Value::Finite(5));
        let a5 = lattice(&group("(1,2,3),(1,2,3,4,5)", 5));
        assert_eq!(min_proper_index(&a5), Value::Finite(5));
        let triv = lattice(&PermGroup::trivial(3));
        assert_eq!(min_proper_index(&triv), Value::Inf);
    }

    #[test]
    fn lattice_invariants() {
        let s4 = group("(1,2),(1,2,3,4)", 4);
        let l = lattice(&s4);
        let n = l.table().len();
        for i in 0..l.len() {
            assert_eq!(n % l.order(i), 0);
            assert_eq!(l.bits(i).count_ones(..), l.order(i));
            for &g in l.table().generators() {
                let (b, _) = l.table().conj_set(l.elems(i), g);
                let j = l.index_of_bits(&b).unwrap();
                assert_eq!(l.class_of(j), l.class_of(i));
            }
            // maximal iff proper and not inside another proper subgroup
            let proper = l.order(i) < n;
            let inside = (0..l.len()).any(|j| {
                j != i
                    && l.order(j) < n
                    && l.order(j) > l.order(i)
                    && l.bits(i).is_subset(l.bits(j))
            });
            assert_eq!(l.is_maximal(i), proper && !inside);
            // union of conjugates of a proper subgroup is proper
            if proper {
                let u = l.table().conjugate_closure(l.elems(i));
                assert!(u.count_ones(..) < n);
            }
        }
        assert_eq!(l.order(l.top()), n);
    }

    #[test]
    fn sylow_normalizer() {
        let s4 = group("(1,2),(1,2,3,4)", 4);
        let d8 = group("(1,2,3,4),(1,3)", 4);
        let nz = normalizer(&s4, &d8, &Caps::default()).unwrap();
        assert_eq!(nz.order(), 8);
    }
}
