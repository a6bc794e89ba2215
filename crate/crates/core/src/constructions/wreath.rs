//! Imprimitive wreath products and the conjugator cascades that build
//! covers inside them.
//!
//! With `d` points per block, the point `(i, a)` is `i * d + a`. The element
//! `(t_1, .., t_k) pi` sends `(i, a)` to `(pi(i), a^{t_i})`: each block is
//! moved by its own component first, then blocks are permuted.

use num_integer::Integer;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Builds `(t_0, .., t_{k-1}) pi` on `k * d` points.
pub fn wreath_element(components: &[Perm], blocks: &[usize]) -> Perm {
    let k = components.len();
    assert_eq!(blocks.len(), k, "one block image per component");
    let d = components.first().map_or(0, Perm::degree);
    let mut images = vec![0u32; k * d];
    for (i, t) in components.iter().enumerate() {
        for a in 0..d {
            images[i * d + a] = (blocks[i] * d + t.apply(a)) as u32;
        }
    }
    Perm::from_images(images).expect("wreath element is a bijection")
}

/// Splits a block-preserving permutation into components and block images.
pub fn decompose(g: &Perm, k: usize) -> Result<(Vec<Perm>, Vec<usize>)> {
    let d = g.degree() / k;
    if d * k != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: k * d,
            found: g.degree(),
        });
    }
    let mut comps = Vec::with_capacity(k);
    let mut blocks = Vec::with_capacity(k);
    for i in 0..k {
        let j = g.apply(i * d) / d;
        let mut images = Vec::with_capacity(d);
        for a in 0..d {
            let img = g.apply(i * d + a);
            if img / d != j {
                return Err(Error::HypothesisFailed(
                    "element does not preserve the blocks".into(),
                ));
            }
            images.push((img - j * d) as u32);
        }
        comps.push(Perm::from_images(images)?);
        blocks.push(j);
    }
    Ok((comps, blocks))
}

/// `s` acting on block `i` only.
pub fn in_block(s: &Perm, i: usize, k: usize) -> Perm {
    let d = s.degree();
    let comps: Vec<Perm> = (0..k)
        .map(|j| if j == i { s.clone() } else { Perm::identity(d) })
        .collect();
    wreath_element(&comps, &(0..k).collect::<Vec<_>>())
}

/// The block rotation `(i, a) -> (i + 1, a)`.
pub fn block_cycle(d: usize, k: usize) -> Perm {
    let comps = vec![Perm::identity(d); k];
    wreath_element(&comps, &(0..k).map(|i| (i + 1) % k).collect::<Vec<_>>())
}

#[derive(Clone, Debug)]
pub struct Wreath {
    pub group: PermGroup,
    /// the base group `S^p`
    pub base: PermGroup,
    /// `{(s, .., s) sigma^i}`
    pub diagonal: PermGroup,
    pub s: PermGroup,
    pub p: usize,
}

impl Wreath {
    pub fn block_size(&self) -> usize {
        self.s.degree()
    }

    /// The element `(s, .., s) sigma^j`.
    pub fn diagonal_element(&self, s: &Perm, j: usize) -> Perm {
        let p = self.p;
        wreath_element(
            &vec![s.clone(); p],
            &(0..p).map(|i| (i + j) % p).collect::<Vec<_>>(),
        )
    }
}

/// `S wr C_p` for a prime `p` not dividing `|S|`.
pub fn wreath_cyclic(s: &PermGroup, p: usize, caps: &Caps) -> Result<Wreath> {
    if !crate::structure::is_prime(p as u64) {
        return Err(Error::UnsupportedParams(format!("{p} is not prime")));
    }
    if s.order() % p as u128 == 0 {
        return Err(Error::PDividesOrder(p as u64));
    }
    let d = s.degree();
    caps.check_degree(d * p)?;
    let sigma = block_cycle(d, p);
    let base_gens: Vec<Perm> = (0..p)
        .flat_map(|i| s.generators().iter().map(move |g| in_block(g, i, p)))
        .collect();
    let base = PermGroup::from_generators(d * p, base_gens)?;
    let mut gens: Vec<Perm> = s.generators().iter().map(|g| in_block(g, 0, p)).collect();
    gens.push(sigma.clone());
    let group = PermGroup::from_generators(d * p, gens)?;
    let mut diag_gens: Vec<Perm> = s
        .generators()
        .iter()
        .map(|g| wreath_element(&vec![g.clone(); p], &(0..p).collect::<Vec<_>>()))
        .collect();
    diag_gens.push(sigma);
    let diagonal = PermGroup::from_generators(d * p, diag_gens)?;
    Ok(Wreath {
        group,
        base,
        diagonal,
        s: s.clone(),
        p,
    })
}

/// Solves `((s, .., s) sigma^j)^x = g` for `g = (t_1, .., t_p) sigma^j`, `j != 0`.
///
/// Along the block orbit `i_0 = 0, i_1 = j, i_2 = 2j, ..` the cascade is
/// `x_{i_0} = 1` and `x_{i_{k+1}} = s^-1 x_{i_k} t_{i_k}`; it closes up
/// exactly when `s^p = t_{i_0} t_{i_1} .. t_{i_{p-1}}`, which the `e`-th
/// power of that product satisfies for `e p = 1` modulo its order.
pub fn wreath_cover_conjugator(w: &Wreath, g: &Perm) -> Result<(Perm, Vec<Perm>)> {
    let p = w.p;
    let (t, blocks) = decompose(g, p)?;
    let j = blocks[0];
    if j == 0 {
        return Err(Error::InBaseGroup);
    }
    if (0..p).any(|i| blocks[i] != (i + j) % p) {
        return Err(Error::HypothesisFailed(
            "block action is not a power of sigma".into(),
        ));
    }
    let d = w.block_size();
    let orbit: Vec<usize> = (0..p).map(|k| (k * j) % p).collect();
    let product = orbit
        .iter()
        .fold(Perm::identity(d), |acc, &i| acc.then(&t[i]));
    let ord = product.order();
    let e = if ord == 1 {
        1
    } else {
        let inv = (p as i64).extended_gcd(&(ord as i64));
        inv.x.rem_euclid(ord as i64) as u64
    };
    let s = product.pow(e);
    let s_inv = s.inverse();
    let mut x = vec![Perm::identity(d); p];
    for k in 0..p - 1 {
        let cur = orbit[k];
        x[orbit[k + 1]] = s_inv.then(&x[cur]).then(&t[cur]);
    }
    let conj = wreath_element(&x, &(0..p).collect::<Vec<_>>());
    let h = w.diagonal_element(&s, j);
    if h.conjugate_by(&conj) != *g {
        return Err(Error::Internal(
            "conjugator cascade failed to verify".into(),
        ));
    }
    Ok((s, x))
}

/// Finds `a_2, .., a_t` in `S` with
/// `x_1 a_{d(1)}^-1, a_{d(1)} x_{d(1)} a_{d^2(1)}^-1, .., a_{d^{t-1}(1)} x_{d^{t-1}(1)}`
/// all in `M`, where `d = delta` is a `t`-cycle, and checks that
/// `g = (x_1, .., x_t) delta` normalizes `M x M^{a_2} x .. x M^{a_t}`.
///
/// Returned vector index `i` holds `a_{i+2}` (coordinates are 0-based inside).
pub fn prop_ell_conjugators(
    x_group: &PermGroup,
    s: &PermGroup,
    m: &PermGroup,
    xs: &[Perm],
    delta: &[usize],
    caps: &Caps,
) -> Result<Vec<Perm>> {
    let t = xs.len();
    if delta.len() != t {
        return Err(Error::HypothesisFailed(
            "delta must act on the t coordinates".into(),
        ));
    }
    if !xs.iter().all(|x| x_group.contains_unchecked(x)) {
        return Err(Error::NotSubgroup);
    }
    // the delta-orbit of coordinate 0
    let mut orbit = vec![0usize];
    while orbit.len() < t {
        let next = delta[*orbit.last().expect("nonempty")];
        if next == 0 {
            break;
        }
        orbit.push(next);
    }
    if orbit.len() != t || delta[orbit[t - 1]] != 0 {
        return Err(Error::HypothesisFailed("delta is not a t-cycle".into()));
    }
    let d = x_group.degree();
    let y = orbit
        .iter()
        .fold(Perm::identity(d), |acc, &i| acc.then(&xs[i]));
    if !m.contains_unchecked(&y) {
        return Err(Error::HypothesisFailed("cycle product is not in M".into()));
    }
    let m_elems: Vec<Perm> = m.elements(caps)?.collect();
    let mut a = vec![Perm::identity(d); t];
    for k in 0..t - 1 {
        let cur = orbit[k];
        let c = a[cur].then(&xs[cur]);
        // a_next in S ∩ M c
        let next = m_elems
            .iter()
            .map(|mm| mm.then(&c))
            .find(|cand| s.contains_unchecked(cand))
            .ok_or_else(|| Error::HypothesisFailed("a coset of M misses S".into()))?;
        a[orbit[k + 1]] = next;
    }
    for k in 0..t {
        let cur = orbit[k];
        let nxt = orbit[(k + 1) % t];
        let cond = a[cur].then(&xs[cur]).then(&a[nxt].inverse());
        if !m.contains_unchecked(&cond) {
            return Err(Error::Internal("cascade condition failed".into()));
        }
    }
    // g normalizes the product of the conjugates
    let g = wreath_element(xs, delta);
    let prod_gens: Vec<Perm> = (0..t)
        .flat_map(|i| {
            let ai = a[i].clone();
            m.generators()
                .iter()
                .map(move |h| in_block(&h.conjugate_by(&ai), i, t))
                .collect::<Vec<_>>()
        })
        .collect();
    let prod = PermGroup::from_generators(d * t, prod_gens.clone())?;
    if !prod_gens
        .iter()
        .all(|h| prod.contains_unchecked(&h.conjugate_by(&g)))
    {
        return Err(Error::Internal("g does not normalize the product".into()));
    }
    Ok(a[1..].to_vec())
}
