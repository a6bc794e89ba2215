//! Permutations on `0..degree` with 1-based cycle notation at the text boundary.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, checking it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image array {:?} is not a bijection",
                    images
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {}",
                        p + 1,
                        degree
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated in cycle list",
                        p + 1
                    )));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation over 1-based points, e.g. `"(1,2)(3,4,5)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Perm::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition: apply `self`, then `other`.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Perm { images: out }
    }

    pub fn pow(&self, exp: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// Nontrivial cycles as 0-based point lists, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Least `k >= 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 0
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Perm { images }
    }

    /// Places `self` on the points `offset..offset+deg(self)` of a permutation of `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Perm { images }
    }

    /// Restriction to a set of points the permutation leaves invariant, relabelled `0..len`.
    pub fn restrict(&self, points: &[usize]) -> Option<Perm> {
        let mut pos = vec![u32::MAX; self.degree()];
        for (k, &p) in points.iter().enumerate() {
            pos[p] = k as u32;
        }
        let images: Option<Vec<u32>> = points
            .iter()
            .map(|&p| {
                let q = pos[self.apply(p)];
                (q != u32::MAX).then_some(q)
            })
            .collect();
        images.map(|images| Perm { images })
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation over 1-based points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses `"()"` or one or more `(a,b,..)` cycles into 0-based point lists.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let err = |col: usize, msg: &str| Error::Parse {
        line: 1,
        column: col + 1,
        message: msg.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty permutation"));
    }
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (col, c) = chars[i];
        if c != '(' {
            return Err(err(col, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        let mut number = String::new();
        let mut closed = false;
        while i < chars.len() {
            let (col, c) = chars[i];
            i += 1;
            match c {
                '0'..='9' => number.push(c),
                ',' | ')' => {
                    if number.is_empty() {
                        if c == ')' && cycle.is_empty() {
                            closed = true;
                            break;
                        }
                        return Err(err(col, "expected a point number"));
                    }
                    let p: usize = number.parse().map_err(|_| err(col, "bad number"))?;
                    if p == 0 {
                        return Err(err(col, "points are 1-based"));
                    }
                    cycle.push(p - 1);
                    number.clear();
                    if c == ')' {
                        closed = true;
                        break;
                    }
                }
                _ => return Err(err(col, "unexpected character")),
            }
        }
        if !closed {
            return Err(err(text.len(), "unterminated cycle"));
        }
        match cycle.len() {
            0 if chars.len() == 2 => {}
            0 => return Err(err(col, "empty cycle inside a product")),
            1 => return Err(err(col, "a cycle needs at least two points")),
            _ => cycles.push(cycle),
        }
    }
    Ok(cycles)
}

/// Splits a top-level comma separated list of permutations, e.g. `"(1,2),(1,2,3)"`.
pub fn parse_perm_list(text: &str, degree: usize) -> Result<Vec<Perm>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(Perm::parse(&text[start..i], degree).map_err(|e| e.offset(start))?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if text[start..].trim().is_empty() && !out.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: start + 1,
            message: "trailing comma".into(),
        });
    }
    out.push(Perm::parse(&text[start..], degree).map_err(|e| e.offset(start))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_three_cycle() {
        let p = Perm::parse("(1,2,3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_identity() {
        let p = Perm::parse("()", 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn parse_double_transposition() {
        let p = Perm::parse("(1,2)(3,4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2, 4]);
        let q = Perm::parse(" ( 1 , 2 ) ( 3,4 ) ", 5).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse("(1,2", 3).is_err());
        assert!(Perm::parse("(1,2)(2,3)", 3).is_err());
        assert!(Perm::parse("(1,4)", 3).is_err());
        assert!(Perm::parse("(1)", 3).is_err());
        assert!(Perm::parse("1,2", 3).is_err());
        assert!(Perm::parse("(0,1)", 3).is_err());
        assert!(Perm::parse("(1,a)", 3).is_err());
        match Perm::parse("(1,2)x", 3) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn orders_and_inverse() {
        assert_eq!(Perm::parse("(1,2,3)", 3).unwrap().order(), 3);
        assert_eq!(Perm::parse("(1,2)(3,4,5)", 5).unwrap().order(), 6);
        let p = Perm::parse("(1,2,3)", 3).unwrap();
        assert_eq!(p.inverse(), Perm::parse("(1,3,2)", 3).unwrap());
        assert_eq!(p.inverse().to_string(), "(1,3,2)");
    }

    #[test]
    fn compose_applies_left_first() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.compose(&b).unwrap().apply(0), 2);
        assert!(a.compose(&Perm::identity(4)).is_err());
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = Perm::parse("(1,2,3)(4,5)", 6).unwrap();
        let g = Perm::parse("(1,6,2)(3,4)", 6).unwrap();
        let direct = &(&g.inverse() * &x) * &g;
        assert_eq!(x.conjugate_by(&g), direct);
    }

    #[test]
    fn perm_list() {
        let gens = parse_perm_list("(1,2),(1,2,3)", 3).unwrap();
        assert_eq!(gens.len(), 2);
        let gens = parse_perm_list("(1,2)(3,4), (1,3)(2,4)", 4).unwrap();
        assert_eq!(gens[1].to_string(), "(1,3)(2,4)");
        assert!(parse_perm_list("(1,2),", 3).is_err());
    }
}
