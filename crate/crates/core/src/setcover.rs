//! Exact minimum set cover by branch and bound.

use fixedbitset::FixedBitSet;

/// Sets over the universe `0..universe`.
#[derive(Clone, Debug)]
pub struct SetCover {
    universe: usize,
    sets: Vec<FixedBitSet>,
    /// containing[e] = indices of the sets that contain `e`
    containing: Vec<Vec<usize>>,
}

impl SetCover {
    pub fn new(universe: usize, sets: Vec<FixedBitSet>) -> Self {
        let mut containing = vec![Vec::new(); universe];
        for (i, s) in sets.iter().enumerate() {
            for e in s.ones() {
                if e < universe {
                    containing[e].push(i);
                }
            }
        }
        SetCover {
            universe,
            sets,
            containing,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[FixedBitSet] {
        &self.sets
    }

    fn full(&self) -> FixedBitSet {
        let mut u = FixedBitSet::with_capacity(self.universe);
        u.insert_range(..);
        u
    }

    pub fn is_feasible(&self) -> bool {
        self.containing.iter().all(|c| !c.is_empty())
    }

    /// Whether the chosen sets cover the universe.
    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut u = FixedBitSet::with_capacity(self.universe);
        for &i in chosen {
            u.union_with(&self.sets[i]);
        }
        u.count_ones(..self.universe) == self.universe
    }

    fn marginal(&self, set: usize, uncovered: &FixedBitSet) -> usize {
        self.sets[set].intersection(uncovered).count()
    }

    /// Repeatedly takes the set covering most uncovered points, lowest index on ties.
    pub fn greedy(&self) -> Option<Vec<usize>> {
        if !self.is_feasible() {
            return None;
        }
        let mut uncovered = self.full();
        let mut chosen = Vec::new();
        while uncovered.count_ones(..) > 0 {
            let (best, gain) = (0..self.sets.len())
                .map(|i| (i, self.marginal(i, &uncovered)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if gain == 0 {
                return None;
            }
            chosen.push(best);
            uncovered.difference_with(&self.sets[best]);
        }
        Some(chosen)
    }

    /// A minimum cover as increasing set indices, or `None` if no cover exists.
    pub fn solve(&self) -> Option<Vec<usize>> {
        let mut best = self.greedy()?;
        if best.len() > 1 {
            let mut excluded = FixedBitSet::with_capacity(self.sets.len());
            let mut chosen = Vec::new();
            self.branch(&self.full(), &mut chosen, &mut excluded, &mut best);
        }
        best.sort_unstable();
        Some(best)
    }

    fn branch(
        &self,
        uncovered: &FixedBitSet,
        chosen: &mut Vec<usize>,
        excluded: &mut FixedBitSet,
        best: &mut Vec<usize>,
    ) {
        let remaining = uncovered.count_ones(..);
        if remaining == 0 {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= best.len() {
            return;
        }
        let max_gain = (0..self.sets.len())
            .filter(|&i| !excluded.contains(i))
            .map(|i| self.marginal(i, uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = remaining.div_ceil(max_gain);
        if chosen.len() + lower >= best.len() {
            return;
        }
        // the uncovered point with the fewest available sets
        let mut pivot = None;
        let mut pivot_count = usize::MAX;
        for e in uncovered.ones() {
            let c = self.containing[e]
                .iter()
                .filter(|&&i| !excluded.contains(i))
                .count();
            if c < pivot_count {
                pivot_count = c;
                pivot = Some(e);
                if c <= 1 {
                    break;
                }
            }
        }
        let Some(pivot) = pivot else { return };
        if pivot_count == 0 {
            return;
        }
        let mut candidates: Vec<(usize, usize)> = self.containing[pivot]
            .iter()
            .filter(|&&i| !excluded.contains(i))
            .map(|&i| (i, self.marginal(i, uncovered)))
            .collect();
        candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut newly_excluded = Vec::new();
        for (i, _) in candidates {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[i]);
            chosen.push(i);
            self.branch(&next, chosen, excluded, best);
            chosen.pop();
            excluded.insert(i);
            newly_excluded.push(i);
            if chosen.len() + 1 >= best.len() {
                break;
            }
        }
        for i in newly_excluded {
            excluded.set(i, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn set(universe: usize, elems: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(universe);
        for &e in elems {
            s.insert(e);
        }
        s
    }

    fn exhaustive(sc: &SetCover) -> Option<usize> {
        (0..=sc.sets().len()).find(|&k| (0..sc.sets().len()).combinations(k).any(|c| sc.covers(&c)))
    }

    #[test]
    fn small_instances() {
        let sc = SetCover::new(
            4,
            vec![
                set(4, &[0, 1]),
                set(4, &[2, 3]),
                set(4, &[0, 2]),
                set(4, &[1, 3]),
            ],
        );
        let sol = sc.solve().unwrap();
        assert_eq!(sol.len(), 2);
        assert!(sc.covers(&sol));
        let sc = SetCover::new(3, vec![set(3, &[0, 1])]);
        assert!(sc.solve().is_none());
        let sc = SetCover::new(0, vec![]);
        assert_eq!(sc.solve().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn greedy_is_not_optimal_here() {
        // greedy takes the big middle set first and needs three
        let u = 6;
        let sc = SetCover::new(
            u,
            vec![
                set(u, &[0, 1, 2]),
                set(u, &[3, 4, 5]),
                set(u, &[1, 2, 3, 4]),
            ],
        );
        assert_eq!(sc.greedy().unwrap().len(), 3);
        assert_eq!(sc.solve().unwrap(), vec![0, 1]);
    }

    proptest! {
        #[test]
        fn matches_exhaustive(
            universe in 1usize..12,
            raw in prop::collection::vec(prop::collection::vec(0usize..12, 1..6), 1..9),
        ) {
            let sets: Vec<FixedBitSet> = raw
                .iter()
                .map(|s| set(universe, &s.iter().map(|e| e % universe).collect::<Vec<_>>()))
                .collect();
            let sc = SetCover::new(universe, sets);
            match sc.solve() {
                Some(sol) => {
                    prop_assert!(sc.covers(&sol));
                    prop_assert_eq!(Some(sol.len()), exhaustive(&sc));
                }
                None => prop_assert_eq!(exhaustive(&sc), None),
            }
        }
    }
}
