//! Permutations of `{0..n-1}` acting on the right.
//!
//! `p.then(&q)` is the permutation "apply `p`, then `q`", written `pq` in
//! the usual right-action notation, so `i^(pq) = (i^p)^q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{input, Error, Result};

pub type Point = u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as Point).collect() }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return input("a permutation needs degree at least 1");
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return input(format!("image list {images:?} is not a bijection of 0..{n}"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<Point>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<Point>]) -> Result<Self> {
        let mut images: Vec<Point> = (0..n as Point).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return input(format!("point out of range in cycle {cycle:?} for degree {n}"));
                }
                if touched[a as usize] {
                    return input(format!("point {a} appears twice in cycle notation"));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as Point == x)
    }

    /// `self` followed by `other`. Panics when the degrees differ; use
    /// [`Permutation::compose`] for a checked version.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degrees");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as Point;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `c^-1 self c`: the image of `self` under relabelling points by `c`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[c.images[i] as usize] = c.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least 2, each starting at its least point,
    /// listed by least point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as Point];
            seen[start] = true;
            let mut x = self.images[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of all cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i as Point == x).count()
    }

    /// 0 for even, 1 for odd: the number of even-length cycles mod 2.
    pub fn parity(&self) -> u8 {
        let moved_minus_cycles: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        (moved_minus_cycles % 2) as u8
    }

    pub fn cycle_census(&self) -> CycleCensus {
        let mut entries = BTreeMap::new();
        for len in self.cycle_type() {
            *entries.entry(len).or_insert(0) += len;
        }
        CycleCensus { entries }
    }

    /// Fixed-point counts of every power `self^k` for `k` dividing the order.
    pub fn fixpoint_table(&self) -> BTreeMap<u64, u64> {
        let f = self.order();
        divisors(f).into_iter().map(|k| (k, self.pow(k as i64).fixed_points() as u64)).collect()
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<Point> {
        self.images.iter().enumerate().find(|(i, &x)| *i as Point != x).map(|(i, _)| i as Point)
    }

    /// Parses either cycle notation `(0 1)(2 3 4)` or an image list `[1,0,2]`.
    /// Cycle notation needs the degree; the image list carries its own.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']'));
            let Some(inner) = inner else { return input(format!("unterminated image list: {t}")) };
            let images = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<Point>().map_err(|_| Error::Input(format!("bad point {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let p = Self::from_images(images)?;
            if let Some(n) = degree {
                if n != p.degree() {
                    return Err(Error::DegreeMismatch { expected: n, found: p.degree() });
                }
            }
            return Ok(p);
        }
        let Some(n) = degree else { return input("cycle notation needs an explicit degree") };
        if t == "()" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else { return input(format!("bad cycle notation: {t}")) };
            let Some(close) = body.find(')') else { return input(format!("unterminated cycle: {t}")) };
            let cycle = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<Point>().map_err(|_| Error::Input(format!("bad point {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn to_image_string(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.to_cycle_string(), self.degree())
    }
}

/// Points of a permutation grouped by the length of the cycle they lie on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCensus {
    /// cycle length `e` -> number of points on cycles of length `e`
    pub entries: BTreeMap<usize, usize>,
}

impl CycleCensus {
    pub fn points_on(&self, e: usize) -> usize {
        self.entries.get(&e).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Parity read off the census: one transposition fewer than points per cycle.
    pub fn parity(&self) -> u8 {
        let even_cycles: usize = self.entries.iter().filter(|(e, _)| *e % 2 == 0).map(|(e, pts)| pts / e).sum();
        (even_cycles % 2) as u8
    }
}

/// Parity from fixed-point counts of powers, by Möbius inversion.
///
/// `fix[k]` is the number of fixed points of `s^k`; `f` is the order of `s`.
/// Only the keys the formula actually reads are required.
pub fn parity_from_fixpoints(fix: &BTreeMap<u64, u64>, f: u64) -> Result<u8> {
    if f == 0 {
        return input("order must be positive");
    }
    let get = |k: u64| -> Result<i64> {
        fix.get(&k).map(|&v| v as i64).ok_or_else(|| Error::Input(format!("missing Fix(s^{k}) for divisor {k} of {f}")))
    };
    let mut total: i64 = 0;
    for e in divisors(f).into_iter().filter(|e| e % 2 == 0) {
        let mut points_on_e: i64 = 0;
        for d in divisors(e).into_iter().filter(|d| d % 2 == 1) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            points_on_e += mu * (get(e / d)? - get(e / (2 * d))?);
        }
        if points_on_e % e as i64 != 0 || points_on_e < 0 {
            return Err(Error::Internal(format!(
                "{points_on_e} points on cycles of length {e} is not a multiple of {e}; fixed-point data inconsistent"
            )));
        }
        total += points_on_e / e as i64;
    }
    Ok((total % 2) as u8)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn parity_basics() {
        assert_eq!(Permutation::identity(5).parity(), 0);
        assert_eq!(cyc(4, "(0 1)").parity(), 1);
        assert_eq!(cyc(7, "(0 1 2 3 4 5 6)").parity(), 0);
    }

    #[test]
    fn census_examples() {
        let c = Permutation::identity(3).cycle_census();
        assert_eq!(c.entries, BTreeMap::from([(1, 3)]));
        let c = cyc(6, "(0 1)(2 3 4)").cycle_census();
        assert_eq!(c.entries, BTreeMap::from([(1, 1), (2, 2), (3, 3)]));
        assert_eq!(cyc(4, "(0 1 2 3)").cycle_census().entries, BTreeMap::from([(4, 4)]));
    }

    #[test]
    fn fixpoint_formula_examples() {
        assert_eq!(parity_from_fixpoints(&BTreeMap::new(), 1).unwrap(), 0);
        let t = BTreeMap::from([(1, 2), (2, 4)]);
        assert_eq!(parity_from_fixpoints(&t, 2).unwrap(), cyc(4, "(0 1)").parity());
        let t = BTreeMap::from([(1, 0), (2, 0), (4, 4)]);
        assert_eq!(parity_from_fixpoints(&t, 4).unwrap(), 1);
        assert_eq!(cyc(4, "(0 1 2 3)").parity(), 1);
    }

    #[test]
    fn fixpoint_formula_errors() {
        let t = BTreeMap::from([(1, 2)]);
        assert!(matches!(parity_from_fixpoints(&t, 2), Err(Error::Input(_))));
        // 3 points on 2-cycles cannot happen
        let t = BTreeMap::from([(1, 1), (2, 4)]);
        assert!(matches!(parity_from_fixpoints(&t, 2), Err(Error::Internal(_))));
    }

    #[test]
    fn text_round_trip() {
        let p = cyc(6, "(0 1)(2 3 4)");
        assert_eq!(p.to_cycle_string(), "(0 1)(2 3 4)");
        assert_eq!(p.to_image_string(), "[1,0,3,4,2,5]");
        assert_eq!(Permutation::parse("[1,0,3,4,2,5]", None).unwrap(), p);
        assert!(Permutation::parse("[1,1,0]", None).is_err());
        assert!(Permutation::parse("(0 1)(1 2)", Some(3)).is_err());
    }

    #[test]
    fn composition_is_right_action() {
        let p = cyc(3, "(0 1)");
        let q = cyc(3, "(1 2)");
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.then(&q).apply(0), 2);
        assert!(p.compose(&Permutation::identity(4)).is_err());
        assert_eq!(p.conjugate_by(&q), cyc(3, "(0 2)"));
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n).prop_flat_map(|n| {
            Just((0..n as Point).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn fixpoint_parity_matches(p in perm_strategy(30)) {
            let f = p.order();
            prop_assert_eq!(parity_from_fixpoints(&p.fixpoint_table(), f).unwrap(), p.parity());
        }

        #[test]
        fn census_sums_to_degree(p in perm_strategy(30)) {
            let c = p.cycle_census();
            prop_assert_eq!(c.total(), p.degree());
            prop_assert_eq!(c.parity(), p.parity());
            for e in c.entries.keys() {
                prop_assert_eq!(p.order() % *e as u64, 0);
            }
        }

        #[test]
        fn parity_is_homomorphism((p, q) in (1usize..20).prop_flat_map(|n| {
            let base: Vec<Point> = (0..n as Point).collect();
            (Just(base.clone()).prop_shuffle(), Just(base).prop_shuffle())
        })) {
            let p = Permutation::from_images(p).unwrap();
            let q = Permutation::from_images(q).unwrap();
            prop_assert_eq!(p.then(&q).parity(), p.parity() ^ q.parity());
            prop_assert!(p.then(&p.inverse()).is_identity());
        }
    }
}
