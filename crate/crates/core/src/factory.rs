//! Named groups and actions as explicit permutation groups.
//!
//! Every builder returns a [`Construction`], which pairs the generated group
//! with a description of what its points are and, where a closed formula is
//! known, the expected order. The order is checked when the construction is
//! made, so a wrong generator set fails loudly instead of producing a
//! plausible-looking group.

use std::collections::HashMap;
use std::fs;

use serde::Deserialize;

use crate::action;
use crate::error::{input, Error, Result};
use crate::gf::{prime_power, Field};
use crate::group::{factorial, Group};
use crate::perm::{Permutation, Point};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub order: Option<u128>,
    /// Predicted transitivity profile (degree of transitivity, degree of primitivity).
    pub profile: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub group: Group,
    pub name: String,
    /// What the point indices encode.
    pub labeling: String,
    pub expected: Expected,
}

impl Construction {
    pub fn new(group: Group, name: impl Into<String>, labeling: impl Into<String>, order: Option<u128>) -> Result<Self> {
        let name = name.into();
        if let Some(o) = order {
            if group.order() != o {
                return Err(Error::Internal(format!("{name}: generated order {} but expected {o}", group.order())));
            }
        }
        Ok(Construction {
            group: group.with_name(name.clone()),
            name,
            labeling: labeling.into(),
            expected: Expected { order, profile: None },
        })
    }

    fn with_profile(mut self, profile: (usize, usize)) -> Self {
        self.expected.profile = Some(profile);
        self
    }
}

// ---------------------------------------------------------------------------
// symmetric, alternating, cyclic

pub fn cycle(n: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n as Point).map(|i| (i + 1) % n as Point).collect())
}

pub fn cyclic(n: usize) -> Group {
    Group::generate(n, vec![cycle(n)]).expect("positive degree").with_name(format!("C{n}"))
}

pub fn sym(n: usize) -> Group {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("valid"));
        gens.push(cycle(n));
    }
    Group::generate(n, gens).expect("positive degree").with_name(format!("S{n}"))
}

pub fn alt(n: usize) -> Group {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1, 2]]).expect("valid"));
        if n > 3 {
            let long: Vec<Point> = if n % 2 == 1 { (0..n as Point).collect() } else { (1..n as Point).collect() };
            gens.push(Permutation::from_cycles(n, &[long]).expect("valid"));
        }
    }
    Group::generate(n, gens).expect("positive degree").with_name(format!("A{n}"))
}

// ---------------------------------------------------------------------------
// vector spaces over GF(q)

/// `GF(q)^n` with vectors numbered by their base-`q` digits, coordinate 0
/// least significant.
struct VecSpace {
    k: Field,
    n: usize,
    size: usize,
}

impl VecSpace {
    fn new(k: Field, n: usize, budget: usize) -> Result<Self> {
        let size = (k.q() as usize).checked_pow(n as u32).filter(|&s| s <= budget);
        let Some(size) = size else { return Err(Error::Budget(format!("vector space GF({})^{n} too large", k.q()))) };
        Ok(VecSpace { k, n, size })
    }

    fn coords(&self, mut x: usize) -> Vec<u32> {
        let q = self.k.q() as usize;
        (0..self.n)
            .map(|_| {
                let c = (x % q) as u32;
                x /= q;
                c
            })
            .collect()
    }

    fn index(&self, v: &[u32]) -> usize {
        let q = self.k.q() as usize;
        v.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
    }

    /// Row vector times matrix.
    fn apply(&self, v: &[u32], m: &[Vec<u32>]) -> Vec<u32> {
        (0..self.n)
            .map(|j| (0..self.n).fold(0, |acc, i| self.k.add(acc, self.k.mul(v[i], m[i][j]))))
            .collect()
    }

    fn identity_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| (0..self.n).map(|j| u32::from(i == j)).collect()).collect()
    }

    /// `x_j += a x_i`.
    fn transvection(&self, i: usize, j: usize, a: u32) -> Vec<Vec<u32>> {
        let mut m = self.identity_matrix();
        m[i][j] = a;
        m
    }

    fn diag_first(&self, a: u32) -> Vec<Vec<u32>> {
        let mut m = self.identity_matrix();
        m[0][0] = a;
        m
    }
}

fn perm_from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Permutation> {
    Permutation::from_images((0..n).map(|x| f(x) as Point).collect())
}

/// Order of `GL(n, q)`.
fn gl_order(n: u32, q: u128) -> u128 {
    let qn = q.pow(n);
    (0..n).map(|i| qn - q.pow(i)).product()
}

pub fn agl(n: usize, q: u64) -> Result<Construction> {
    if n == 0 {
        return input("AGL needs dimension at least 1");
    }
    let k = Field::of_order(q)?;
    let u = k.primitive();
    let vs = VecSpace::new(k, n, 1 << 22)?;
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        gens.push(perm_from_fn(vs.size, |x| {
            let v = vs.coords(x);
            let w: Vec<u32> = v.iter().zip(&e).map(|(&a, &b)| vs.k.add(a, b)).collect();
            vs.index(&w)
        })?);
    }
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(vs.transvection(i, j, 1));
            }
        }
    }
    mats.push(vs.diag_first(u));
    for m in &mats {
        gens.push(perm_from_fn(vs.size, |x| vs.index(&vs.apply(&vs.coords(x), m)))?);
    }
    let group = Group::generate(vs.size, gens)?;
    let order = (q as u128).pow(n as u32) * gl_order(n as u32, q as u128);
    Construction::new(group, format!("AGL({n},{q})"), "vectors of GF(q)^n, base-q digits, coordinate 0 least significant", Some(order))
}

// ---------------------------------------------------------------------------
// projective groups

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Psl,
    Pgl,
    Psigmal,
    Pgammal,
}

impl Flavor {
    pub fn parse(s: &str) -> Result<Flavor> {
        match s.to_ascii_uppercase().as_str() {
            "PSL" => Ok(Flavor::Psl),
            "PGL" => Ok(Flavor::Pgl),
            "PSIGMAL" | "PSSL" | "PΣL" => Ok(Flavor::Psigmal),
            "PGAMMAL" | "PGGL" | "PΓL" => Ok(Flavor::Pgammal),
            other => input(format!("unknown projective flavor {other:?}")),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Flavor::Psl => "PSL",
            Flavor::Pgl => "PGL",
            Flavor::Psigmal => "PSigmaL",
            Flavor::Pgammal => "PGammaL",
        }
    }
}

/// The generating permutations of the projective groups on `PG_d(q)`.
#[derive(Clone, Debug)]
pub struct ProjectiveParts {
    pub d: usize,
    pub q: u64,
    pub p: u32,
    pub f: u32,
    pub degree: usize,
    /// Transvection images generating PSL.
    pub psl: Vec<Permutation>,
    /// `G_1(u)`: `e_0 -> u e_0`, other basis vectors fixed.
    pub g1u: Permutation,
    /// The Frobenius map applied to homogeneous coordinates.
    pub frob: Permutation,
}

pub fn projective_parts(d: usize, q: u64) -> Result<ProjectiveParts> {
    if d < 2 {
        return input("projective groups need d >= 2");
    }
    let k = Field::of_order(q)?;
    let (p, f) = (k.p(), k.f());
    let u = k.primitive();
    let vs = VecSpace::new(k, d, 1 << 22)?;
    // canonical representatives: last nonzero coordinate equal to 1
    let mut points = Vec::new();
    let mut lookup = vec![u32::MAX; vs.size];
    for x in 1..vs.size {
        let v = vs.coords(x);
        if v.iter().rev().find(|&&c| c != 0) == Some(&1) {
            lookup[x] = points.len() as u32;
            points.push(v);
        }
    }
    let normalize = |v: &[u32]| -> u32 {
        let last = *v.iter().rev().find(|&&c| c != 0).expect("nonzero vector");
        let s = vs.k.inv(last);
        let w: Vec<u32> = v.iter().map(|&c| vs.k.mul(c, s)).collect();
        lookup[vs.index(&w)]
    };
    let n = points.len();
    let linear = |m: &Vec<Vec<u32>>| perm_from_fn(n, |i| normalize(&vs.apply(&points[i], m)) as usize);
    let mut psl = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            for e in 0..f as u64 {
                psl.push(linear(&vs.transvection(i, j, vs.k.exp(e)))?);
            }
        }
    }
    let g1u = linear(&vs.diag_first(u))?;
    let frob = perm_from_fn(n, |i| {
        let w: Vec<u32> = points[i].iter().map(|&c| vs.k.frobenius(c)).collect();
        normalize(&w) as usize
    })?;
    Ok(ProjectiveParts { d, q, p, f, degree: n, psl, g1u, frob })
}

pub fn projective_order(d: usize, q: u64, flavor: Flavor) -> u128 {
    let (_, f) = prime_power(q).expect("prime power");
    let q = q as u128;
    let pgl = gl_order(d as u32, q) / (q - 1);
    let psl = pgl / crate::perm::gcd(d as u64, q as u64 - 1) as u128;
    match flavor {
        Flavor::Psl => psl,
        Flavor::Pgl => pgl,
        Flavor::Psigmal => psl * f as u128,
        Flavor::Pgammal => pgl * f as u128,
    }
}

pub fn projective(d: usize, q: u64, flavor: Flavor) -> Result<Construction> {
    let parts = projective_parts(d, q)?;
    let mut gens = parts.psl.clone();
    if matches!(flavor, Flavor::Pgl | Flavor::Pgammal) {
        gens.push(parts.g1u.clone());
    }
    if matches!(flavor, Flavor::Psigmal | Flavor::Pgammal) {
        gens.push(parts.frob.clone());
    }
    let group = Group::generate(parts.degree, gens)?;
    let c = Construction::new(
        group,
        format!("{}({d},{q})", flavor.label()),
        "projective points of GF(q)^d with last nonzero coordinate 1, sorted by vector index",
        Some(projective_order(d, q, flavor)),
    )?;
    Ok(if d == 2 && flavor == Flavor::Pgl { c.with_profile((3, 2)) } else { c })
}

// ---------------------------------------------------------------------------
// Suzuki groups

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuzukiAction {
    Ovoid,
    Pairs,
}

type Mat4 = [[u32; 4]; 4];

pub fn suzuki(q: u64, action_kind: SuzukiAction) -> Result<Construction> {
    let Some((2, f)) = prime_power(q) else { return input(format!("Sz(q) needs q a power of 2, got {q}")) };
    if f % 2 == 0 || f < 3 {
        return input(format!("Sz(q) needs q = 2^(2a+1) >= 8, got {q}"));
    }
    let a = (f - 1) / 2;
    let k = Field::new(2, f)?;
    let qn = q as usize;
    let theta = |x: u32| k.pow(x, 1u64 << (a + 1));
    // theta^-1 by inverting the permutation of the field
    let mut theta_inv = vec![0u32; qn];
    for x in 0..q as u32 {
        theta_inv[theta(x) as usize] = x;
    }
    let ovoid_vec = |x: u32, y: u32| -> [u32; 4] {
        let xt = theta(x);
        let c2 = k.add(k.mul(x, xt), y);
        let c3 = k.add(k.add(k.mul(k.mul(x, x), xt), k.mul(x, y)), theta(y));
        [1, x, c2, c3]
    };
    let qa_b = |x: u32, y: u32| -> Mat4 {
        let v = ovoid_vec(x, y);
        [[1, 0, 0, 0], [x, 1, 0, 0], [v[2], theta(x), 1, 0], [v[3], y, x, 1]]
    };
    let u = k.primitive();
    let s2 = theta_inv[u as usize];
    let s1 = k.mul(u, s2);
    let diag: Mat4 = [[s1, 0, 0, 0], [0, s2, 0, 0], [0, 0, k.inv(s2), 0], [0, 0, 0, k.inv(s1)]];
    let tau: Mat4 = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]];

    // ovoid points: (x, y) -> x + q*y, and infinity -> q^2
    let npts = qn * qn + 1;
    let mut vecs = Vec::with_capacity(npts);
    for y in 0..q as u32 {
        for x in 0..q as u32 {
            vecs.push(ovoid_vec(x, y));
        }
    }
    vecs.push([0, 0, 0, 1]);
    let lookup: HashMap<[u32; 4], u32> = vecs.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let act = |m: &Mat4| -> Result<Permutation> {
        let mut images = Vec::with_capacity(npts);
        for v in &vecs {
            let mut w = [0u32; 4];
            for (i, wi) in w.iter_mut().enumerate() {
                *wi = (0..4).fold(0, |acc, j| k.add(acc, k.mul(m[i][j], v[j])));
            }
            let lead = *w.iter().find(|&&c| c != 0).expect("invertible matrix");
            let s = k.inv(lead);
            for c in w.iter_mut() {
                *c = k.mul(*c, s);
            }
            match lookup.get(&w) {
                Some(&j) => images.push(j),
                None => return Err(Error::Internal("Suzuki generator does not preserve the ovoid".into())),
            }
        }
        Permutation::from_images(images)
    };
    let gens = vec![act(&qa_b(1, 0))?, act(&qa_b(0, 1))?, act(&diag)?, act(&tau)?];
    let order = (q as u128).pow(2) * (q as u128 - 1) * ((q as u128).pow(2) + 1);
    let ovoid = Group::generate(npts, gens)?;
    match action_kind {
        SuzukiAction::Ovoid => Ok(Construction::new(
            ovoid,
            format!("Sz({q})"),
            "Suzuki ovoid: point x + q*y is [1, x, x^(1+t) + y, x^(2+t) + xy + y^t], infinity is q^2",
            Some(order),
        )?
        .with_profile((2, 1))),
        SuzukiAction::Pairs => {
            let (pairs, index) = two_subsets(npts);
            let gens = ovoid
                .generators()
                .iter()
                .map(|g| induced_on_pairs(g, &pairs, &index))
                .collect::<Result<Vec<_>>>()?;
            let group = Group::generate(pairs.len(), gens)?;
            Construction::new(group, format!("Sz({q}) on pairs"), "2-subsets of the ovoid in lexicographic order", Some(order))
        }
    }
}

/// All 2-subsets `{i < j}` of `0..n` in lexicographic order with a lookup table.
pub fn two_subsets(n: usize) -> (Vec<(Point, Point)>, Vec<u32>) {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    let mut index = vec![u32::MAX; n * n];
    for i in 0..n {
        for j in i + 1..n {
            index[i * n + j] = pairs.len() as u32;
            index[j * n + i] = pairs.len() as u32;
            pairs.push((i as Point, j as Point));
        }
    }
    (pairs, index)
}

pub fn induced_on_pairs(g: &Permutation, pairs: &[(Point, Point)], index: &[u32]) -> Result<Permutation> {
    let n = g.degree();
    Permutation::from_images(
        pairs
            .iter()
            .map(|&(i, j)| index[g.apply(i) as usize * n + g.apply(j) as usize])
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// wreath products

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathMode {
    Imprimitive,
    Product,
}

/// `a` acting in coordinate `i` of the imprimitive action on `m*l` points,
/// where point `(x, i)` is `i*m + x`.
pub fn imprimitive_base(a: &Permutation, i: usize, l: usize) -> Permutation {
    let m = a.degree();
    let mut images: Vec<Point> = (0..(m * l) as Point).collect();
    for x in 0..m {
        images[i * m + x] = (i * m) as Point + a.apply(x as Point);
    }
    Permutation::from_images_unchecked(images)
}

/// `(x, i) -> (x, i^beta)`.
pub fn imprimitive_top(beta: &Permutation, m: usize) -> Permutation {
    let l = beta.degree();
    Permutation::from_images_unchecked(
        (0..m * l).map(|pt| (beta.apply((pt / m) as Point) as usize * m + pt % m) as Point).collect(),
    )
}

/// `a` acting on digit `i` of base-`m` tuples of length `l`.
pub fn product_base(a: &Permutation, i: usize, l: usize) -> Permutation {
    let m = a.degree();
    let size = m.pow(l as u32);
    let place = m.pow(i as u32);
    Permutation::from_images_unchecked(
        (0..size)
            .map(|pt| {
                let d = (pt / place) % m;
                (pt - d * place + a.apply(d as Point) as usize * place) as Point
            })
            .collect(),
    )
}

/// Moves digit `j` to position `j^beta`.
pub fn product_top(beta: &Permutation, m: usize) -> Permutation {
    let l = beta.degree();
    let size = m.pow(l as u32);
    let places: Vec<usize> = (0..l).map(|j| m.pow(j as u32)).collect();
    Permutation::from_images_unchecked(
        (0..size)
            .map(|pt| {
                let mut out = 0;
                for j in 0..l {
                    let d = (pt / places[j]) % m;
                    out += d * places[beta.apply(j as Point) as usize];
                }
                out as Point
            })
            .collect(),
    )
}

/// Base element `(a_0, ..., a_{l-1})` followed by the top element `beta`
/// in the product action.
pub fn product_element(base: &[Permutation], beta: &Permutation) -> Permutation {
    let l = base.len();
    let mut g = Permutation::identity(base[0].degree().pow(l as u32));
    for (i, a) in base.iter().enumerate() {
        if !a.is_identity() {
            g = g.then(&product_base(a, i, l));
        }
    }
    g.then(&product_top(beta, base[0].degree()))
}

pub fn wreath(a: &Group, b: &Group, mode: WreathMode) -> Result<Construction> {
    let (m, l) = (a.degree(), b.degree());
    if m < 2 || l < 2 {
        return input(format!("wreath product needs degrees at least 2, got {m} and {l}"));
    }
    let mut gens = Vec::new();
    let an = a.name().unwrap_or("A").to_string();
    let bn = b.name().unwrap_or("B").to_string();
    let (degree, labeling) = match mode {
        WreathMode::Imprimitive => {
            for i in 0..l {
                gens.extend(a.generators().iter().map(|g| imprimitive_base(g, i, l)));
            }
            gens.extend(b.generators().iter().map(|g| imprimitive_top(g, m)));
            (m * l, "point (x, i) is i*m + x: x inside the i-th cell".to_string())
        }
        WreathMode::Product => {
            let size = m.checked_pow(l as u32).filter(|&s| s <= 1 << 20);
            let Some(size) = size else { return Err(Error::Budget(format!("product action of degree {m}^{l} too large"))) };
            for i in 0..l {
                gens.extend(a.generators().iter().map(|g| product_base(g, i, l)));
            }
            gens.extend(b.generators().iter().map(|g| product_top(g, m)));
            (size, "base-m tuples of length l, coordinate 0 least significant".to_string())
        }
    };
    let order = a.order().checked_pow(l as u32).and_then(|x| x.checked_mul(b.order()));
    let group = Group::generate(degree, gens)?;
    let tag = if mode == WreathMode::Imprimitive { "imp" } else { "prod" };
    Construction::new(group, format!("{an} wr {bn} ({tag})"), labeling, order)
}

// ---------------------------------------------------------------------------
// small abstract groups: multiplication tables and automorphisms

/// A small group with its elements listed in sorted order and a full
/// multiplication table.
#[derive(Clone, Debug)]
pub struct Cayley {
    pub elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Vec<u32>,
    pub identity: u32,
}

impl Cayley {
    pub fn new(g: &Group, budget: u128) -> Result<Cayley> {
        if g.order() > budget {
            return Err(Error::Budget(format!("group of order {} exceeds the table budget {budget}", g.order())));
        }
        let elems = g.sorted_elements();
        let index: HashMap<Permutation, u32> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&elems[i].then(&elems[j])];
            }
        }
        let identity = index[&Permutation::identity(g.degree())];
        Ok(Cayley { elems, index, table, identity })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elems.len() + b as usize]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn inv(&self, a: u32) -> u32 {
        (0..self.len() as u32).find(|&b| self.mul(a, b) == self.identity).expect("group element has an inverse")
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Closure of a set of element indices under multiplication.
    pub fn closure(&self, gens: &[u32]) -> Vec<bool> {
        let mut inside = vec![false; self.len()];
        inside[self.identity as usize] = true;
        let mut list = vec![self.identity];
        let mut k = 0;
        while k < list.len() {
            for &g in gens {
                let y = self.mul(list[k], g);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        inside
    }

    /// A short generating set, chosen greedily by decreasing element order.
    pub fn generating_set(&self) -> Vec<u32> {
        let mut by_order: Vec<u32> = (0..self.len() as u32).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut inside = self.closure(&gens);
        for a in by_order {
            if inside.iter().all(|&b| b) {
                break;
            }
            if !inside[a as usize] {
                gens.push(a);
                inside = self.closure(&gens);
            }
        }
        gens
    }

    /// Right multiplication `x -> x g` as a permutation of element indices.
    pub fn right_regular(&self, g: u32) -> Permutation {
        Permutation::from_images_unchecked((0..self.len() as u32).map(|x| self.mul(x, g)).collect())
    }
}

/// Extends `gens[i] -> images[i]` to a map on all elements, or `None` when
/// it is not a well-defined injective homomorphism.
fn extend_hom(src: &Cayley, dst: &Cayley, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let mut phi = vec![u32::MAX; src.len()];
    let mut used = vec![false; dst.len()];
    phi[src.identity as usize] = dst.identity;
    used[dst.identity as usize] = true;
    let mut queue = vec![src.identity];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (&g, &t) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let v = dst.mul(phi[x as usize], t);
            if phi[y as usize] == u32::MAX {
                if used[v as usize] {
                    return None;
                }
                used[v as usize] = true;
                phi[y as usize] = v;
                queue.push(y);
            } else if phi[y as usize] != v {
                return None;
            }
        }
        k += 1;
    }
    Some(phi)
}

/// All isomorphisms `src -> dst` (as index maps), or only the first one.
pub fn isomorphisms(src: &Cayley, dst: &Cayley, first_only: bool, cap: u64) -> Result<Vec<Vec<u32>>> {
    if src.len() != dst.len() {
        return Ok(Vec::new());
    }
    let gens = src.generating_set();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let o = src.element_order(g);
            (0..dst.len() as u32).filter(|&t| dst.element_order(t) == o).collect()
        })
        .collect();
    let total = candidates.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::Budget(format!("isomorphism search over more than {cap} generator images")));
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<u32> = choice.iter().zip(&candidates).map(|(&c, cand)| cand[c]).collect();
        if let Some(phi) = extend_hom(src, dst, &gens, &images) {
            if phi.iter().all(|&v| v != u32::MAX) {
                out.push(phi);
                if first_only {
                    break;
                }
            }
        }
        for i in (0..choice.len()).rev() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    Ok(out)
}

/// `Aut G` as a permutation group on the element indices of `c`.
pub fn automorphism_group(c: &Cayley, cap: u64) -> Result<Group> {
    let n = c.len();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = Group::trivial(n);
    for phi in isomorphisms(c, c, false, cap)? {
        let p = Permutation::from_images_unchecked(phi);
        if !current.has(&p) {
            gens.push(p);
            current = Group::generate(n, gens.clone())?;
        }
    }
    Ok(current)
}

pub fn holomorph(g: &Group, budget: u128) -> Result<Construction> {
    let c = Cayley::new(g, budget)?;
    let aut = automorphism_group(&c, 2_000_000)?;
    let mut gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| c.right_regular(c.index_of(s).expect("generator is an element")))
        .collect();
    gens.extend(aut.generators().iter().cloned());
    let order = c.len() as u128 * aut.order();
    let group = Group::generate(c.len(), gens)?;
    let name = format!("Hol({})", g.name().unwrap_or("G"));
    Construction::new(group, name, "elements of G in sorted image-list order", Some(order))
}

/// Normal closure of `gens` in `g`.
pub fn normal_closure(g: &Group, gens: &[Permutation]) -> Group {
    let mut current = Group::generate(g.degree(), gens.to_vec()).expect("same degree");
    loop {
        let extra: Vec<Permutation> = current
            .generators()
            .iter()
            .flat_map(|n| g.generators().iter().map(move |s| n.conjugate_by(s)))
            .filter(|x| !current.has(x))
            .collect();
        if extra.is_empty() {
            return current;
        }
        let mut all = current.generators().to_vec();
        all.push(extra[0].clone());
        current = Group::generate(g.degree(), all).expect("same degree");
    }
}

/// True when `t` is non-abelian and every nontrivial element has normal
/// closure `t`.
pub fn is_nonabelian_simple(t: &Group) -> bool {
    let gens = t.generators();
    let abelian = gens.iter().all(|a| gens.iter().all(|b| a.then(b) == b.then(a)));
    if abelian || t.is_trivial() {
        return false;
    }
    let mut ok = true;
    t.for_each_element(|x| {
        if ok && !x.is_identity() && normal_closure(t, std::slice::from_ref(x)).order() != t.order() {
            ok = false;
        }
    });
    ok
}

// ---------------------------------------------------------------------------
// diagonal type

/// `GHol(T^l, Δ)` acting on the right cosets of the diagonal, with the
/// quotient map onto `S_l × Out T` and the lift of its subgroups.
#[derive(Clone, Debug)]
pub struct DiagonalGhol {
    pub construction: Construction,
    t: Cayley,
    l: usize,
    /// Aut T on element indices of `t`.
    aut: Group,
    /// One automorphism per outer class; class 0 is inner.
    outer_reps: Vec<Permutation>,
    inner: Group,
    /// Right translation by each generator of T in each coordinate.
    translations: Vec<Permutation>,
}

impl DiagonalGhol {
    fn point_index(&self, tuple: &[u32]) -> usize {
        // tuple normalized so that tuple[0] is the identity
        let n = self.t.len();
        tuple[1..].iter().rev().fold(0, |acc, &x| acc * n + x as usize)
    }

    fn point_tuple(&self, mut idx: usize) -> Vec<u32> {
        let n = self.t.len();
        let mut v = vec![self.t.identity];
        for _ in 1..self.l {
            v.push((idx % n) as u32);
            idx /= n;
        }
        v
    }

    fn normalized(&self, tuple: &[u32]) -> usize {
        let h = self.t.inv(tuple[0]);
        let norm: Vec<u32> = tuple.iter().map(|&x| self.t.mul(h, x)).collect();
        self.point_index(&norm)
    }

    fn tuple_map(&self, f: impl Fn(&[u32]) -> Vec<u32>) -> Permutation {
        let deg = self.construction.group.degree();
        Permutation::from_images_unchecked((0..deg).map(|i| self.normalized(&f(&self.point_tuple(i))) as Point).collect())
    }

    /// The permutation induced by the coordinate permutation `sigma`
    /// followed by the automorphism `alpha` applied in every coordinate.
    fn top_perm(&self, sigma: &Permutation, alpha: &Permutation) -> Permutation {
        self.tuple_map(|v| {
            let mut w = vec![0; self.l];
            for (j, &x) in v.iter().enumerate() {
                w[sigma.apply(j as Point) as usize] = alpha.apply(x);
            }
            w
        })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn out_order(&self) -> usize {
        self.outer_reps.len()
    }

    /// The image of `x` in `S_l × Out T`: a coordinate permutation and an
    /// outer class index.
    pub fn down(&self, x: &Permutation) -> Result<(Permutation, usize)> {
        let g = &self.construction.group;
        if !g.contains(x)? {
            return input("element is not in GHol");
        }
        // strip the translation part: make the element fix the diagonal point 0
        let target = self.point_tuple(x.apply(0) as usize);
        let inv_target: Vec<u32> = target.iter().map(|&t| self.t.inv(t)).collect();
        let strip = self.tuple_map(|v| v.iter().zip(&inv_target).map(|(&a, &b)| self.t.mul(a, b)).collect());
        let y = x.then(&strip);
        let syms = crate::factory::sym(self.l);
        let mut found = None;
        self.aut.for_each_element(|alpha| {
            if found.is_some() {
                return;
            }
            syms.for_each_element(|sigma| {
                if found.is_none() && self.top_perm(sigma, alpha) == y {
                    found = Some((sigma.clone(), alpha.clone()));
                }
            });
        });
        let (sigma, alpha) = found.ok_or_else(|| Error::Internal("stabilizer element not matched".into()))?;
        let class = self
            .outer_reps
            .iter()
            .position(|r| self.inner.has(&alpha.then(&r.inverse())))
            .ok_or_else(|| Error::Internal("automorphism outside all outer classes".into()))?;
        Ok((sigma, class))
    }

    /// `↑P` for `P ≤ S_l × Out T` given by generators.
    pub fn lift(&self, p_gens: &[(Permutation, usize)]) -> Result<Group> {
        let mut gens = self.translations.clone();
        for (sigma, class) in p_gens {
            if sigma.degree() != self.l || *class >= self.outer_reps.len() {
                return input("quotient generator out of range");
            }
            gens.push(self.top_perm(sigma, &self.outer_reps[*class]));
        }
        Group::generate(self.construction.group.degree(), gens)
    }
}

pub fn diagonal_ghol(t: &Group, l: usize, point_budget: usize) -> Result<DiagonalGhol> {
    if l < 2 {
        return input("diagonal type needs l >= 2");
    }
    if !is_nonabelian_simple(t) {
        return input("T must be non-abelian simple");
    }
    let degree = (t.order() as usize).checked_pow(l as u32 - 1).filter(|&d| d <= point_budget);
    let Some(degree) = degree else { return Err(Error::Budget(format!("|T|^(l-1) exceeds {point_budget} points"))) };
    let c = Cayley::new(t, point_budget as u128)?;
    let aut = automorphism_group(&c, 2_000_000)?;
    let inner_gens: Vec<Permutation> = c
        .generating_set()
        .iter()
        .map(|&g| {
            let gi = c.inv(g);
            Permutation::from_images_unchecked((0..c.len() as u32).map(|x| c.mul(c.mul(gi, x), g)).collect())
        })
        .collect();
    let inner = Group::generate(c.len(), inner_gens)?;
    let mut outer_reps: Vec<Permutation> = vec![Permutation::identity(c.len())];
    aut.for_each_element(|a| {
        if outer_reps.iter().all(|r| !inner.has(&a.then(&r.inverse()))) {
            outer_reps.push(a.clone());
        }
    });
    let mut gh = DiagonalGhol {
        construction: Construction::new(Group::trivial(degree), "placeholder", "", None)?,
        t: c,
        l,
        aut,
        outer_reps,
        inner,
        translations: Vec::new(),
    };
    let tgens = gh.t.generating_set();
    for j in 0..l {
        for &g in &tgens {
            gh.translations.push(gh.tuple_map(|v| {
                let mut w = v.to_vec();
                w[j] = gh.t.mul(w[j], g);
                w
            }));
        }
    }
    let mut gens = gh.translations.clone();
    let syms = sym(l);
    let id_aut = Permutation::identity(gh.t.len());
    for s in syms.generators() {
        gens.push(gh.top_perm(s, &id_aut));
    }
    for a in gh.aut.generators() {
        gens.push(gh.top_perm(&Permutation::identity(l), a));
    }
    let group = Group::generate(degree, gens)?;
    let order = t.order().pow(l as u32) * factorial(l) * gh.outer_reps.len() as u128;
    let tname = t.name().unwrap_or("T");
    gh.construction = Construction::new(
        group,
        format!("GHol({tname}^{l}, diag)"),
        "cosets of the diagonal, labelled by tuples (1, t_2, ..., t_l) with t_j in sorted element order, t_2 least significant",
        Some(order),
    )?;
    Ok(gh)
}

// ---------------------------------------------------------------------------
// blow-ups

/// Data needed to describe subgroups of `(A/M) wr S_l` for a primitive `A`
/// with socle `M`.
#[derive(Clone, Debug)]
pub struct BlowUpBase {
    pub a: Group,
    pub socle: Group,
    /// `A/M` acting regularly on the cosets of `M`.
    pub quotient: Group,
    coset_reps: Vec<Permutation>,
}

/// The socle of a primitive group: the smallest normal closure of a
/// nontrivial element, checked to be transitive.
pub fn socle(a: &Group) -> Result<Group> {
    let mut best: Option<Group> = None;
    a.for_each_element(|x| {
        if x.is_identity() {
            return;
        }
        let n = normal_closure(a, std::slice::from_ref(x));
        if best.as_ref().is_none_or(|b| n.order() < b.order()) {
            best = Some(n);
        }
    });
    let m = best.ok_or_else(|| Error::Input("trivial group has no socle".into()))?;
    if !m.is_transitive() {
        return input("socle is not transitive: the group is not primitive");
    }
    Ok(m)
}

pub fn blow_up_base(a: &Group) -> Result<BlowUpBase> {
    let m = socle(a)?;
    let (quotient, _, coset_reps) = a.coset_action_with_reps(&m)?;
    Ok(BlowUpBase { a: a.clone(), socle: m, quotient, coset_reps })
}

/// `A↑P` in the product action on `m^l` points. `P` is given by generators
/// in the imprimitive action of `(A/M) wr S_l` on `|A/M| * l` points, with
/// `A/M` acting as [`BlowUpBase::quotient`].
pub fn blow_up(base: &BlowUpBase, l: usize, p_gens: &[Permutation]) -> Result<Construction> {
    let k = base.quotient.degree();
    let m = base.a.degree();
    for g in p_gens {
        if g.degree() != k * l {
            return Err(Error::DegreeMismatch { expected: k * l, found: g.degree() });
        }
    }
    let p = Group::generate(k * l, p_gens.to_vec())?;
    // largeness: transitive top, full projection of a coordinate stabilizer
    let tops: Vec<Permutation> = p_gens
        .iter()
        .map(|g| Permutation::from_images((0..l).map(|i| g.apply((i * k) as Point) / k as Point).collect()))
        .collect::<Result<_>>()?;
    let top = Group::generate(l, tops.clone())?;
    if !top.is_transitive() {
        return input("P is not large: its top action is not transitive");
    }
    let block0: Vec<Point> = (0..k as Point).collect();
    let stab = p.set_stabilizer(&block0);
    if stab.restrict(&block0)?.order() != base.quotient.order() {
        return input("P is not large: a coordinate projection is not onto A/M");
    }
    let mut gens = Vec::new();
    for i in 0..l {
        gens.extend(base.socle.generators().iter().map(|g| product_base(g, i, l)));
    }
    for (g, beta) in p_gens.iter().zip(&tops) {
        let mut coords = Vec::with_capacity(l);
        for i in 0..l {
            let c = g.apply((i * k) as Point) as usize % k;
            let rep = &base.coset_reps[c];
            // the block action must be the regular action of the chosen coset
            let q_img = base.quotient.generators().is_empty() || {
                let qa = quotient_image(base, rep);
                (0..k).all(|x| g.apply((i * k + x) as Point) as usize % k == qa.apply(x as Point) as usize)
            };
            if !q_img {
                return input("P is not contained in (A/M) wr S_l");
            }
            coords.push(rep.clone());
        }
        gens.push(product_element(&coords, beta));
    }
    let group = Group::generate(m.pow(l as u32), gens)?;
    let order = base.socle.order().pow(l as u32) * p.order();
    let name = format!("{}^({l}) blow-up", base.a.name().unwrap_or("A"));
    Construction::new(group, name, "base-m tuples of length l, coordinate 0 least significant", Some(order))
}

/// Image of an element of A in the regular action of A/M on cosets.
fn quotient_image(base: &BlowUpBase, a: &Permutation) -> Permutation {
    let k = base.quotient.degree();
    Permutation::from_images_unchecked(
        (0..k)
            .map(|c| {
                let y = base.coset_reps[c].then(a);
                base.coset_reps
                    .iter()
                    .position(|r| base.socle.has(&y.then(&r.inverse())))
                    .expect("cosets cover A") as Point
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// catalogue

struct Preset {
    name: &'static str,
    degree: usize,
    order: u128,
    /// Generators in cycle notation on 1-based points.
    gens: &'static [&'static str],
}

const M11_GENS: [&str; 2] = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"];

const PRESETS: &[Preset] = &[
    Preset { name: "M11/11", degree: 11, order: 7920, gens: &M11_GENS },
    Preset {
        name: "M11/12",
        degree: 12,
        order: 7920,
        // M11 acting on the cosets of a PSL(2,11) subgroup
        gens: &["(2,3,4,6,9,12,5,7,11,8,10)", "(1,2)(3,5,8,4)(6,10)(7,9,11,12)"],
    },
    Preset {
        name: "M12/12",
        degree: 12,
        order: 95040,
        gens: &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"],
    },
    Preset {
        name: "M23/23",
        degree: 23,
        order: 10200960,
        gens: &[
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
        ],
    },
    Preset {
        name: "M24/24",
        degree: 24,
        order: 244823040,
        gens: &[
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
            "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)",
        ],
    },
];

fn parse_one_based(s: &str, degree: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    for part in s.split(')') {
        let part = part.trim().trim_start_matches('(');
        if part.is_empty() {
            continue;
        }
        let cyc = part
            .split(',')
            .map(|x| x.trim().parse::<Point>().map(|v| v - 1).map_err(|_| Error::Input(format!("bad point {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cyc);
    }
    Permutation::from_cycles(degree, &cycles)
}

pub fn atlas_names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.name).collect()
}

pub fn atlas(name: &str) -> Result<Construction> {
    let Some(preset) = PRESETS.iter().find(|p| p.name.eq_ignore_ascii_case(name)) else {
        return input(format!("unknown catalogue group {name:?}; known: {}", atlas_names().join(", ")));
    };
    let gens = preset.gens.iter().map(|g| parse_one_based(g, preset.degree)).collect::<Result<Vec<_>>>()?;
    let group = Group::generate(preset.degree, gens)?;
    Construction::new(group, preset.name, "catalogue presentation, points 1..n shifted to 0..n-1", Some(preset.order))
}

// ---------------------------------------------------------------------------
// associativity of wreath products

/// `[[S_a wr S_b] wr S_c]` and `[S_a wr [S_b wr S_c]]` in product action,
/// with the relabelling `psi` taking the first onto the second.
///
/// When `relabel` is set the inner `S_b wr S_c` has its `b*c` points
/// numbered column-first (`(i, k) -> i*c + k`) instead of the default
/// `k*b + i`, which makes `psi` a nontrivial permutation.
pub fn assoc_rewreath(a: usize, b: usize, c: usize, relabel: bool, point_budget: usize) -> Result<(Construction, Construction, Permutation)> {
    if a < 2 || b < 2 || c < 2 {
        return input("a, b and c must all exceed 1");
    }
    let size = a.checked_pow((b * c) as u32).filter(|&s| s <= point_budget);
    let Some(size) = size else { return Err(Error::Budget(format!("{a}^({b}*{c}) exceeds the point budget"))) };
    let inner_left = wreath(&sym(a), &sym(b), WreathMode::Product)?;
    let left = wreath(&inner_left.group, &sym(c), WreathMode::Product)?;
    let mut bc = wreath(&sym(b), &sym(c), WreathMode::Imprimitive)?;
    // zeta(i, k): position of coordinate i of block k in the inner labelling
    let zeta = |i: usize, k: usize| if relabel { i * c + k } else { k * b + i };
    if relabel {
        let lambda = Permutation::from_images((0..b * c).map(|pt| zeta(pt % b, pt / b) as Point).collect())?;
        bc.group = bc.group.conjugate(&lambda).with_name("S_b wr S_c (relabelled)");
    }
    let right = wreath(&sym(a), &bc.group, WreathMode::Product)?;
    // left point: digit x_{ik} has weight a^(i + b k); right point: weight a^zeta(i,k)
    let psi = perm_from_fn(size, |pt| {
        let mut out = 0;
        for k in 0..c {
            for i in 0..b {
                let d = (pt / a.pow((i + b * k) as u32)) % a;
                out += d * a.pow(zeta(i, k) as u32);
            }
        }
        out
    })?;
    Ok((left, right, psi))
}

// ---------------------------------------------------------------------------
// text specifications

#[derive(Deserialize)]
struct GroupRecord {
    degree: usize,
    generators: Vec<Vec<Point>>,
    name: Option<String>,
}

/// Parses a JSON group record `{"degree": n, "generators": [[...]], "name": ...}`.
pub fn from_json(text: &str) -> Result<Construction> {
    let rec: GroupRecord = serde_json::from_str(text).map_err(|e| Error::Input(format!("bad group record: {e}")))?;
    let gens = rec.generators.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>()?;
    let group = Group::generate(rec.degree, gens)?;
    Construction::new(group, rec.name.unwrap_or_else(|| "custom".into()), "as given", None)
}

fn nums(s: &str) -> Result<Vec<u64>> {
    s.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| Error::Input(format!("expected a number, got {x:?}")))).collect()
}

fn exactly<const N: usize>(s: &str, what: &str) -> Result<[u64; N]> {
    let v = nums(s)?;
    v.try_into().map_err(|_| Error::Input(format!("{what} expects {N} numbers")))
}

/// Builds a group from the command-line grammar, e.g. `sym:5`, `agl:3,2`,
/// `proj:2,7,PGL`, `sz:8`, `wr:sym:3/sym:2/product`, `atlas:M11/11`,
/// `young:7,3+4`, `eqpart:8,2`, a JSON record, or `@file` holding one.
pub fn parse_spec(spec: &str) -> Result<Construction> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
        return from_json(&text);
    }
    if spec.starts_with('{') {
        return from_json(spec);
    }
    let Some((kind, rest)) = spec.split_once(':') else { return input(format!("group spec {spec:?} has no kind prefix")) };
    match kind {
        "sym" => {
            let [n] = exactly(rest, "sym")?;
            let n = n as usize;
            Construction::new(sym(n), format!("S{n}"), "natural action", Some(factorial(n)))
        }
        "alt" => {
            let [n] = exactly(rest, "alt")?;
            let n = n as usize;
            Construction::new(alt(n), format!("A{n}"), "natural action", Some((factorial(n) / 2).max(1)))
        }
        "cyc" => {
            let [n] = exactly(rest, "cyc")?;
            Construction::new(cyclic(n as usize), format!("C{n}"), "natural action", Some(n as u128))
        }
        "agl" => {
            let [n, q] = exactly(rest, "agl")?;
            agl(n as usize, q)
        }
        "proj" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                return input("proj expects d,q,flavor");
            }
            let [d, q] = exactly(&parts[..2].join(","), "proj")?;
            projective(d as usize, q, Flavor::parse(parts[2].trim())?)
        }
        "sz" => {
            let (q, mode) = match rest.split_once(',') {
                Some((q, "pairs")) => (q, SuzukiAction::Pairs),
                Some((q, "ovoid")) => (q, SuzukiAction::Ovoid),
                Some(_) => return input("sz expects q or q,pairs"),
                None => (rest, SuzukiAction::Ovoid),
            };
            let [q] = exactly(q, "sz")?;
            suzuki(q, mode)
        }
        "wr" => {
            let Some((groups, mode)) = rest.rsplit_once('/') else { return input("wr expects inner/outer/mode") };
            let mode = match mode {
                "imprimitive" | "imp" => WreathMode::Imprimitive,
                "product" | "prod" => WreathMode::Product,
                other => return input(format!("unknown wreath mode {other:?}")),
            };
            for (i, _) in groups.match_indices('/') {
                if let (Ok(a), Ok(b)) = (parse_spec(&groups[..i]), parse_spec(&groups[i + 1..])) {
                    return wreath(&a.group, &b.group, mode);
                }
            }
            input(format!("cannot split {groups:?} into two group specs"))
        }
        "hol" => holomorph(&parse_spec(rest)?.group, 60),
        "ghol" => {
            let Some((t, l)) = rest.rsplit_once(',') else { return input("ghol expects T,l") };
            let [l] = exactly(l, "ghol")?;
            Ok(diagonal_ghol(&parse_spec(t)?.group, l as usize, 10_000)?.construction)
        }
        "atlas" => atlas(rest),
        "young" => {
            let Some((n, parts)) = rest.split_once(',') else { return input("young expects n,p1+p2+...") };
            let [n] = exactly(n, "young")?;
            let parts = parts
                .split('+')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad part {x:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let g = action::young_stabilizer(n as usize, &parts)?;
            let order = parts.iter().map(|&p| factorial(p)).product();
            Construction::new(g, format!("Young({n};{})", rest.split_once(',').unwrap().1), "natural action", Some(order))
        }
        "eqpart" | "eqpart-even" => {
            let [n, m] = exactly(rest, kind)?;
            let (n, m) = (n as usize, m as usize);
            if m == 0 || n % m != 0 {
                return input(format!("cell size {m} does not divide {n}"));
            }
            let z = action::Equipartition::consecutive(n, m)?;
            let g = action::equipartition_stabilizer(n, &z)?;
            if kind == "eqpart" {
                Construction::new(g, format!("S_Z({n},{m})"), "cells are consecutive blocks of size m", None)
            } else {
                Construction::new(g.even_part(), format!("S_Z({n},{m})^e"), "cells are consecutive blocks of size m", None)
            }
        }
        other => input(format!("unknown group kind {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_alternating() {
        for n in 1..8 {
            assert_eq!(sym(n).order(), factorial(n));
            assert_eq!(alt(n).order(), (factorial(n) / 2).max(1));
            assert!(alt(n).is_even());
        }
    }

    #[test]
    fn affine_groups() {
        let a32 = agl(3, 2).unwrap();
        assert_eq!((a32.group.degree(), a32.group.order()), (8, 1344));
        let a15 = agl(1, 5).unwrap();
        assert_eq!(a15.group.order(), 20);
        assert!(!a15.group.is_even());
        let a22 = agl(2, 2).unwrap().group;
        assert!(a22.is_perm_isomorphic(&sym(4), 12).unwrap().is_some());
        assert_eq!(agl(2, 4).unwrap().group.order(), 16 * 180);
        assert!(agl(1, 6).is_err());
    }

    #[test]
    fn projective_orders() {
        for (d, q) in [(2u64, 4u64), (2, 7), (2, 8), (2, 9), (3, 2), (3, 3), (3, 4), (4, 2)] {
            for flavor in [Flavor::Psl, Flavor::Pgl, Flavor::Psigmal, Flavor::Pgammal] {
                let c = projective(d as usize, q, flavor).unwrap();
                assert_eq!(c.group.order(), projective_order(d as usize, q, flavor), "{}", c.name);
            }
        }
        assert_eq!(projective(2, 7, Flavor::Pgl).unwrap().group.degree(), 8);
        assert_eq!(projective(3, 2, Flavor::Psl).unwrap().group.order(), 168);
    }

    #[test]
    fn suzuki_eight() {
        let sz = suzuki(8, SuzukiAction::Ovoid).unwrap();
        assert_eq!((sz.group.degree(), sz.group.order()), (65, 29120));
        let stab = sz.group.point_stabilizer(64).unwrap();
        assert_eq!(stab.order(), 448);
        assert!(suzuki(4, SuzukiAction::Ovoid).is_err());
        assert!(suzuki(16, SuzukiAction::Ovoid).is_err());
    }

    #[test]
    fn wreaths() {
        let w = wreath(&sym(2), &sym(3), WreathMode::Imprimitive).unwrap();
        assert_eq!((w.group.degree(), w.group.order()), (6, 48));
        let w = wreath(&sym(5), &sym(2), WreathMode::Product).unwrap();
        assert_eq!((w.group.degree(), w.group.order()), (25, 28800));
        let top = product_top(&Permutation::parse("(0 1)", Some(2)).unwrap(), 3);
        assert_eq!(top.parity(), 1);
        assert!(wreath(&sym(1), &sym(3), WreathMode::Imprimitive).is_err());
    }

    #[test]
    fn holomorphs() {
        assert_eq!(holomorph(&cyclic(5), 60).unwrap().group.order(), 20);
        let v4 = Group::generate(4, vec![Permutation::parse("(0 1)(2 3)", Some(4)).unwrap(), Permutation::parse("(0 2)(1 3)", Some(4)).unwrap()]).unwrap();
        let h = holomorph(&v4, 60).unwrap();
        assert_eq!((h.group.degree(), h.group.order()), (4, 24));
        let s3 = Cayley::new(&sym(3), 60).unwrap();
        let regular = Group::generate(6, sym(3).generators().iter().map(|g| s3.right_regular(s3.index_of(g).unwrap())).collect()).unwrap();
        let h = holomorph(&regular, 60).unwrap();
        assert_eq!((h.group.degree(), h.group.order()), (6, 36));
        assert!(matches!(holomorph(&sym(5), 60), Err(Error::Budget(_))));
    }

    #[test]
    fn diagonal_type_a5() {
        let gh = diagonal_ghol(&alt(5), 2, 10_000).unwrap();
        assert_eq!((gh.construction.group.degree(), gh.construction.group.order()), (60, 14400));
        assert_eq!(gh.out_order(), 2);
        let swap = Permutation::parse("(0 1)", Some(2)).unwrap();
        let up_sym = gh.lift(&[(swap.clone(), 0)]).unwrap();
        assert_eq!(up_sym.order(), 7200);
        assert_eq!(gh.lift(&[]).unwrap().order(), 3600);
        for g in gh.construction.group.generators() {
            gh.down(g).unwrap();
        }
        let (sigma, class) = gh.down(&up_sym.generators().last().unwrap().clone()).unwrap();
        assert_eq!((sigma, class), (swap, 0));
        assert!(diagonal_ghol(&sym(3), 2, 10_000).is_err());
    }

    #[test]
    fn blow_ups() {
        let base = blow_up_base(&sym(5)).unwrap();
        assert_eq!(base.socle.order(), 60);
        let q = &base.quotient;
        let whole = wreath(q, &sym(2), WreathMode::Imprimitive).unwrap();
        let full = blow_up(&base, 2, whole.group.generators()).unwrap();
        assert_eq!(full.group.order(), 28800);
        let base5 = blow_up_base(&alt(5)).unwrap();
        let swap = Permutation::parse("(0 1)", Some(2)).unwrap();
        assert_eq!(blow_up(&base5, 2, &[swap]).unwrap().group.order(), 7200);
        let bottom_only = imprimitive_base(&q.generators()[0], 0, 2);
        let err = blow_up(&base, 2, &[bottom_only]).unwrap_err();
        assert!(err.to_string().contains("not large"));
    }

    #[test]
    fn catalogue() {
        for name in atlas_names() {
            atlas(name).unwrap();
        }
        assert!(atlas("M22/22").is_err());
        let m11 = atlas("M11/12").unwrap().group;
        assert_eq!((m11.degree(), m11.order()), (12, 7920));
        assert_eq!(action::transitivity_profile(&m11).0, 3);
    }

    #[test]
    fn rewreathing() {
        for relabel in [false, true] {
            let (l, r, psi) = assoc_rewreath(2, 2, 2, relabel, 1 << 16).unwrap();
            assert!(l.group.conjugate(&psi).same_subgroup(&r.group));
            assert_eq!(psi.is_identity(), !relabel);
        }
    }

    #[test]
    fn specs() {
        assert_eq!(parse_spec("sym:4").unwrap().group.order(), 24);
        assert_eq!(parse_spec("proj:2,7,PGL").unwrap().group.order(), 336);
        assert_eq!(parse_spec("wr:sym:3/sym:2/product").unwrap().group.degree(), 9);
        assert_eq!(parse_spec("wr:atlas:M11/11/sym:2/imp").unwrap().group.degree(), 22);
        assert_eq!(parse_spec("young:7,3+4").unwrap().group.order(), 144);
        assert_eq!(parse_spec("eqpart-even:8,2").unwrap().group.order(), 192);
        assert_eq!(parse_spec(r#"{"degree":3,"generators":[[1,2,0]]}"#).unwrap().group.order(), 3);
        assert!(parse_spec("foo:3").is_err());
        assert!(parse_spec("sym").is_err());
    }
}
