//! Subgroups of a direct product `L x R`.
//!
//! The product acts on the disjoint union of the two point sets, left
//! points first, so every subgroup is an ordinary [`Group`]. A subgroup is
//! described by its Goursat datum: the projections `C`, `D`, the kernels
//! `A = H ∩ L`, `B = H ∩ R`, and the isomorphism `C/A -> D/B` it induces.
//!
//! Notation in this module follows the usual one for an inclusion
//! `G_phi <= G_psi` with `phi: A/𝒜 -> B/ℬ` and `psi: C/𝒞 -> D/𝒟`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::factory::{isomorphisms, Cayley};
use crate::group::Group;
use crate::lattice::{
    classify_poset, interval_from_nodes, is_maximal_in, is_normalized_by, maximal_subgroups, normal_subgroups,
    overgroups, Shape, DEFAULT_ELEMENT_BUDGET,
};
use crate::perm::{Permutation, Point};

/// Largest factor order handled by the enumeration-based helpers.
pub const FACTOR_BUDGET: u128 = 400;

#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub left: Group,
    pub right: Group,
    pub whole: Group,
}

impl DirectProduct {
    pub fn new(left: &Group, right: &Group) -> DirectProduct {
        let mut gens: Vec<Permutation> = left.generators().iter().map(|g| embed_pair(Some(g), None, left.degree(), right.degree())).collect();
        gens.extend(right.generators().iter().map(|g| embed_pair(None, Some(g), left.degree(), right.degree())));
        let whole = Group::generate(left.degree() + right.degree(), gens).expect("consistent degrees");
        DirectProduct { left: left.clone(), right: right.clone(), whole }
    }

    pub fn nl(&self) -> usize {
        self.left.degree()
    }

    pub fn nr(&self) -> usize {
        self.right.degree()
    }

    pub fn pair(&self, l: Option<&Permutation>, r: Option<&Permutation>) -> Permutation {
        embed_pair(l, r, self.nl(), self.nr())
    }

    /// `X x 1`.
    pub fn left_copy(&self, x: &Group) -> Group {
        let gens = x.generators().iter().map(|g| self.pair(Some(g), None)).collect();
        Group::generate(self.whole.degree(), gens).expect("consistent degrees")
    }

    /// `1 x Y`.
    pub fn right_copy(&self, y: &Group) -> Group {
        let gens = y.generators().iter().map(|g| self.pair(None, Some(g))).collect();
        Group::generate(self.whole.degree(), gens).expect("consistent degrees")
    }

    pub fn cartesian(&self, x: &Group, y: &Group) -> Group {
        self.left_copy(x).join(&self.right_copy(y))
    }

    /// `{(x, x)}` for `x` in `X`, when both factors have the same degree.
    pub fn diagonal(&self, x: &Group) -> Result<Group> {
        if self.nl() != self.nr() {
            return input("a diagonal needs factors of equal degree");
        }
        let gens = x.generators().iter().map(|g| self.pair(Some(g), Some(g))).collect();
        Group::generate(self.whole.degree(), gens)
    }

    fn split(&self, g: &Permutation) -> (Permutation, Permutation) {
        let nl = self.nl();
        let im = g.images();
        let l = Permutation::from_images(im[..nl].to_vec()).expect("left block is invariant");
        let r = Permutation::from_images(im[nl..].iter().map(|&x| x - nl as Point).collect()).expect("right block is invariant");
        (l, r)
    }

    fn left_points(&self) -> Vec<Point> {
        (0..self.nl() as Point).collect()
    }

    fn right_points(&self) -> Vec<Point> {
        (self.nl() as Point..(self.nl() + self.nr()) as Point).collect()
    }

    /// The projection `H λ`.
    pub fn lambda(&self, h: &Group) -> Group {
        h.restrict(&self.left_points()).expect("left points are invariant")
    }

    /// The projection `H ρ`.
    pub fn rho(&self, h: &Group) -> Group {
        h.restrict(&self.right_points()).expect("right points are invariant")
    }

    /// `H ∩ L`, as a subgroup of `L`.
    pub fn left_kernel(&self, h: &Group) -> Group {
        let k = h.pointwise_stabilizer(&self.right_points());
        self.lambda(&k)
    }

    /// `H ∩ R`, as a subgroup of `R`.
    pub fn right_kernel(&self, h: &Group) -> Group {
        let k = h.pointwise_stabilizer(&self.left_points());
        self.rho(&k)
    }
}

fn embed_pair(l: Option<&Permutation>, r: Option<&Permutation>, nl: usize, nr: usize) -> Permutation {
    let mut images: Vec<Point> = (0..(nl + nr) as Point).collect();
    if let Some(l) = l {
        images[..nl].copy_from_slice(l.images());
    }
    if let Some(r) = r {
        for (i, &x) in r.images().iter().enumerate() {
            images[nl + i] = x + nl as Point;
        }
    }
    Permutation::from_images(images).expect("disjoint blocks")
}

/// Goursat datum of a subgroup of `L x R`. The isomorphism is recorded by
/// pairs `(c, d)` whose classes correspond; together with the two kernels
/// they generate the subgroup.
#[derive(Clone, Debug)]
pub struct GoursatDatum {
    pub c: Group,
    pub a_ker: Group,
    pub d: Group,
    pub b_ker: Group,
    pub alpha: Vec<(Permutation, Permutation)>,
}

impl GoursatDatum {
    /// Cartesian datum `C x D`.
    pub fn cartesian(c: &Group, d: &Group) -> GoursatDatum {
        let mut alpha: Vec<(Permutation, Permutation)> =
            c.generators().iter().map(|g| (g.clone(), Permutation::identity(d.degree()))).collect();
        alpha.extend(d.generators().iter().map(|g| (Permutation::identity(c.degree()), g.clone())));
        GoursatDatum { c: c.clone(), a_ker: c.clone(), d: d.clone(), b_ker: d.clone(), alpha }
    }
}

pub fn goursat_build(p: &DirectProduct, datum: &GoursatDatum) -> Result<Group> {
    let GoursatDatum { c, a_ker, d, b_ker, alpha } = datum;
    if !c.is_subgroup_of(&p.left) || !d.is_subgroup_of(&p.right) {
        return input("the datum's projections are not subgroups of the factors");
    }
    if !a_ker.is_subgroup_of(c) || !is_normalized_by(a_ker, c) {
        return input("the left kernel is not normal in the left projection");
    }
    if !b_ker.is_subgroup_of(d) || !is_normalized_by(b_ker, d) {
        return input("the right kernel is not normal in the right projection");
    }
    if c.order() / a_ker.order() != d.order() / b_ker.order() {
        return input("the two quotients have different orders");
    }
    let mut gens: Vec<Permutation> = alpha.iter().map(|(x, y)| p.pair(Some(x), Some(y))).collect();
    gens.extend(a_ker.generators().iter().map(|x| p.pair(Some(x), None)));
    gens.extend(b_ker.generators().iter().map(|y| p.pair(None, Some(y))));
    let h = Group::generate(p.whole.degree(), gens)?;
    let ok = h.order() == c.order() * b_ker.order()
        && p.lambda(&h).same_subgroup(c)
        && p.rho(&h).same_subgroup(d)
        && p.left_kernel(&h).same_subgroup(a_ker)
        && p.right_kernel(&h).same_subgroup(b_ker);
    if !ok {
        return input("the pairs do not define an isomorphism of the two quotients");
    }
    Ok(h)
}

pub fn goursat_decompose(p: &DirectProduct, h: &Group) -> Result<GoursatDatum> {
    if !h.is_subgroup_of(&p.whole) {
        return input("the group is not a subgroup of the product");
    }
    Ok(GoursatDatum {
        c: p.lambda(h),
        a_ker: p.left_kernel(h),
        d: p.rho(h),
        b_ker: p.right_kernel(h),
        alpha: h.generators().iter().map(|g| p.split(g)).collect(),
    })
}

/// `X/N` realized on the cosets of `N`, with the image of every element.
struct QuotientMap {
    label: HashMap<Permutation, u32>,
    reps: Vec<Permutation>,
    group: Group,
}

impl QuotientMap {
    fn new(x: &Group, n: &Group) -> QuotientMap {
        let n_elems = n.elements();
        let mut label: HashMap<Permutation, u32> = HashMap::new();
        let mut reps = Vec::new();
        for e in x.elements() {
            if label.contains_key(&e) {
                continue;
            }
            let k = reps.len() as u32;
            for m in &n_elems {
                label.insert(m.then(&e), k);
            }
            reps.push(e);
        }
        let gens = x.generators().iter().map(|s| Self::act(&label, &reps, s)).collect();
        let group = Group::generate(reps.len(), gens).expect("coset count is positive");
        QuotientMap { label, reps, group }
    }

    fn act(label: &HashMap<Permutation, u32>, reps: &[Permutation], y: &Permutation) -> Permutation {
        Permutation::from_images(reps.iter().map(|r| label[&r.then(y)]).collect()).expect("action on cosets")
    }

    fn image(&self, y: &Permutation) -> Permutation {
        Self::act(&self.label, &self.reps, y)
    }
}

/// Every maximal subgroup of `L x R`: `T x R`, `L x T` for maximal `T`,
/// and `G_phi` for isomorphisms `phi` between simple quotients.
pub fn product_maximals(p: &DirectProduct) -> Result<Vec<Group>> {
    let (l, r) = (&p.left, &p.right);
    let mut out: Vec<Group> = Vec::new();
    for t in maximal_subgroups(l, FACTOR_BUDGET)? {
        out.push(p.cartesian(&t, r));
    }
    for t in maximal_subgroups(r, FACTOR_BUDGET)? {
        out.push(p.cartesian(l, &t));
    }
    let max_normal = |g: &Group| -> Result<Vec<Group>> {
        let normals = normal_subgroups(g, FACTOR_BUDGET)?;
        let proper: Vec<&Group> = normals.iter().filter(|x| x.order() < g.order()).collect();
        Ok(proper
            .iter()
            .filter(|x| !proper.iter().any(|y| y.order() > x.order() && x.is_subgroup_of(y)))
            .map(|x| (*x).clone())
            .collect())
    };
    let r_elems = r.elements();
    for a in max_normal(l)? {
        let ql = QuotientMap::new(l, &a);
        let cl = Cayley::new(&ql.group, FACTOR_BUDGET)?;
        for b in max_normal(r)? {
            if l.order() / a.order() != r.order() / b.order() {
                continue;
            }
            let qr = QuotientMap::new(r, &b);
            let cr = Cayley::new(&qr.group, FACTOR_BUDGET)?;
            let mut lift: HashMap<u32, Permutation> = HashMap::new();
            for y in &r_elems {
                let k = cr.index_of(&qr.image(y)).expect("quotient element");
                lift.entry(k).or_insert_with(|| y.clone());
            }
            for phi in isomorphisms(&cl, &cr, false, 1 << 24)? {
                let alpha = l
                    .generators()
                    .iter()
                    .map(|s| {
                        let k = cl.index_of(&ql.image(s)).expect("quotient element");
                        (s.clone(), lift[&phi[k as usize]].clone())
                    })
                    .collect();
                let datum = GoursatDatum { c: l.clone(), a_ker: a.clone(), d: r.clone(), b_ker: b.clone(), alpha };
                out.push(goursat_build(p, &datum)?);
            }
        }
    }
    Ok(out)
}

/// Maximal subgroups of the product found by brute force, for comparison
/// with [`product_maximals`].
pub fn oracle_maximals(p: &DirectProduct) -> Result<Vec<Group>> {
    maximal_subgroups(&p.whole, FACTOR_BUDGET * FACTOR_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MaximalCase {
    A,
    B,
    C,
    D,
}

struct Pair {
    gi: Group,
    go: Group,
    a: Group,
    a_ker: Group,
    b: Group,
    b_ker: Group,
    c: Group,
    c_ker: Group,
    d: Group,
    d_ker: Group,
}

impl Pair {
    fn new(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<Pair> {
        if !inner.is_subgroup_of(outer) || !outer.is_subgroup_of(&p.whole) {
            return input("the inner group must lie in the outer group inside the product");
        }
        Ok(Pair {
            gi: inner.clone(),
            go: outer.clone(),
            a: p.lambda(inner),
            a_ker: p.left_kernel(inner),
            b: p.rho(inner),
            b_ker: p.right_kernel(inner),
            c: p.lambda(outer),
            c_ker: p.left_kernel(outer),
            d: p.rho(outer),
            d_ker: p.right_kernel(outer),
        })
    }
}

/// Maximality of `inner` in `outer` decided from the Goursat data alone,
/// with the clause that applies.
pub fn goursat_is_maximal(p: &DirectProduct, inner: &GoursatDatum, outer: &GoursatDatum) -> Result<Option<MaximalCase>> {
    let gi = goursat_build(p, inner)?;
    let go = goursat_build(p, outer)?;
    maximal_case(p, &gi, &go)
}

pub fn maximal_case(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<Option<MaximalCase>> {
    let s = Pair::new(p, inner, outer)?;
    if s.gi.order() == s.go.order() {
        return Ok(None);
    }
    if s.b_ker.order() == s.d_ker.order() && is_maximal_in(&s.a, &s.c)? {
        return Ok(Some(if s.c_ker.is_subgroup_of(&s.a) { MaximalCase::A } else { MaximalCase::B }));
    }
    if s.a_ker.order() == s.c_ker.order() && !s.d_ker.is_subgroup_of(&s.b) && is_maximal_in(&s.b, &s.d)? {
        return Ok(Some(MaximalCase::C));
    }
    if s.a.order() == s.c.order() && s.a_ker.order() < s.c_ker.order() {
        let lifted = p.left_copy(&s.c_ker).join(&s.gi);
        if lifted.order() == s.go.order() {
            let between = overgroups(&s.a_ker, &s.c_ker, DEFAULT_ELEMENT_BUDGET)?;
            let invariant = between.iter().filter(|x| is_normalized_by(x, &s.a)).count();
            if invariant == 2 {
                return Ok(Some(MaximalCase::D));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IntervalType {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "2L")]
    TwoL,
    #[serde(rename = "2R")]
    TwoR,
    #[serde(rename = "3A")]
    ThreeA,
    #[serde(rename = "3B")]
    ThreeB,
    #[serde(rename = "4L")]
    FourL,
    #[serde(rename = "4R")]
    FourR,
    #[serde(rename = "composed")]
    Composed,
}

impl IntervalType {
    pub fn label(self) -> &'static str {
        match self {
            IntervalType::Trivial => "trivial",
            IntervalType::TwoL => "2L",
            IntervalType::TwoR => "2R",
            IntervalType::ThreeA => "3A",
            IntervalType::ThreeB => "3B",
            IntervalType::FourL => "4L",
            IntervalType::FourR => "4R",
            IntervalType::Composed => "composed",
        }
    }
}

/// Sections `(kernel, support)` of one side of an inclusion.
#[derive(Clone, Debug, Serialize)]
pub struct SkeletonOrders {
    pub l: usize,
    pub r: usize,
    /// Index pairs of coinciding left markers, in the order
    /// `(𝒜, A), (A, A), (𝒞, A𝒞), (C, C)`.
    pub left_coincide: Vec<(usize, usize)>,
}

fn skeleton_side(a: &Group, a_ker: &Group, c: &Group, c_ker: &Group) -> (usize, Vec<(usize, usize)>) {
    let ac = a.join(c_ker);
    let marks = [(a_ker.clone(), a.clone()), (a.clone(), a.clone()), (c_ker.clone(), ac), (c.clone(), c.clone())];
    let same = |i: usize, j: usize| marks[i].0.same_subgroup(&marks[j].0) && marks[i].1.same_subgroup(&marks[j].1);
    let mut coincide = Vec::new();
    let mut distinct = 0;
    for i in 0..4 {
        if !(0..i).any(|j| same(i, j)) {
            distinct += 1;
        }
        for j in i + 1..4 {
            if same(i, j) {
                coincide.push((i, j));
            }
        }
    }
    (distinct, coincide)
}

pub fn skeleton_orders(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<SkeletonOrders> {
    let s = Pair::new(p, inner, outer)?;
    let (l, left_coincide) = skeleton_side(&s.a, &s.a_ker, &s.c, &s.c_ker);
    let (r, _) = skeleton_side(&s.b, &s.b_ker, &s.d, &s.d_ker);
    Ok(SkeletonOrders { l, r, left_coincide })
}

/// Elementary type of `[inner ÷ outer]` read off the skeleton orders.
pub fn interval_type(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<IntervalType> {
    let s = Pair::new(p, inner, outer)?;
    if s.gi.order() == s.go.order() {
        return Ok(IntervalType::Trivial);
    }
    let sk = skeleton_orders(p, inner, outer)?;
    Ok(match (sk.l, sk.r) {
        (2, 1) => IntervalType::TwoL,
        (1, 2) => IntervalType::TwoR,
        (4, 2) => IntervalType::FourL,
        (2, 4) => IntervalType::FourR,
        (l, r) if l == r && (l == 2 || l == 3) => {
            let a_is_c = s.a.order() == s.c.order();
            if a_is_c && s.a_ker.order() < s.c_ker.order() {
                IntervalType::ThreeA
            } else if !a_is_c && s.a_ker.same_subgroup(&s.c_ker) && s.c_ker.is_subgroup_of(&s.a) {
                IntervalType::ThreeB
            } else {
                IntervalType::Composed
            }
        }
        _ => IntervalType::Composed,
    })
}

/// The four-step factorization of an inclusion: the intermediate groups
/// `X0 = inner <= X1 <= X2 <= X3 <= X4 = outer` and the type of each step.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub steps: Vec<Group>,
    pub types: Vec<IntervalType>,
}

impl Decomposition {
    /// Whether each step is trivial or of the type its position allows.
    pub fn conforms(&self) -> bool {
        use IntervalType::*;
        let allowed: [&[IntervalType]; 4] = [&[ThreeA], &[TwoL, FourL], &[TwoR, FourR], &[ThreeB]];
        self.types.iter().zip(allowed).all(|(t, ok)| *t == Trivial || ok.contains(t))
    }
}

pub fn decompose_inclusion(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<Decomposition> {
    let s = Pair::new(p, inner, outer)?;
    let meet = |x: &Group, y: &Group| -> Result<Group> { intersection(x, y) };
    let x1 = s.gi.join(&p.left_copy(&meet(&s.a, &s.c_ker)?)).join(&p.right_copy(&meet(&s.b, &s.d_ker)?));
    let x2 = x1.join(&p.left_copy(&s.c_ker));
    let x3 = x2.join(&p.right_copy(&s.d_ker));
    let steps = vec![s.gi.clone(), x1, x2, x3, s.go.clone()];
    for w in steps.windows(2) {
        if !w[0].is_subgroup_of(&w[1]) {
            return Err(Error::Internal("factorization steps are not nested".into()));
        }
    }
    let types = steps.windows(2).map(|w| interval_type(p, &w[0], &w[1])).collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { steps, types })
}

/// `X ∩ Y` for small groups, by filtering the smaller one.
pub fn intersection(x: &Group, y: &Group) -> Result<Group> {
    let (small, big) = if x.order() <= y.order() { (x, y) } else { (y, x) };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = Group::trivial(x.degree());
    small.for_each_element(|g| {
        if big.has(g) && !current.has(g) {
            gens.push(g.clone());
            current = Group::generate(x.degree(), gens.clone()).expect("same degree");
        }
    });
    Ok(current)
}

#[derive(Clone, Debug, Serialize)]
pub struct ShortcutReport {
    pub has_shortcut: bool,
    pub shortcut_tags: Vec<String>,
    pub is_novelty: bool,
    /// Sizes of the images under the two projections and the two kernel maps.
    pub image_sizes: [usize; 4],
    pub shape: Shape,
}

pub fn shortcut_novelty(p: &DirectProduct, inner: &Group, outer: &Group) -> Result<ShortcutReport> {
    let nodes = overgroups(inner, outer, DEFAULT_ELEMENT_BUDGET)?;
    let iv = interval_from_nodes(nodes);
    let poset = iv.poset();
    let n = iv.nodes.len();
    let mut tags = Vec::new();
    for m in 1..n.saturating_sub(1) {
        let below = (1..n - 1).all(|k| k == m || !(poset.leq(k, m)));
        let above = (1..n - 1).all(|k| k == m || !(poset.leq(m, k)));
        if below && above {
            let t1 = interval_type(p, &iv.nodes[0], &iv.nodes[m])?;
            let t2 = interval_type(p, &iv.nodes[m], &iv.nodes[n - 1])?;
            let tag = format!("{}-{}", t1.label(), t2.label());
            if !tags.contains(&tag) {
                tags.push(tag);
            }
        }
    }
    let count_distinct = |groups: Vec<Group>| {
        let mut reps: Vec<Group> = Vec::new();
        for g in groups {
            if !reps.iter().any(|r| r.same_subgroup(&g)) {
                reps.push(g);
            }
        }
        reps.len()
    };
    let image_sizes = [
        count_distinct(iv.nodes.iter().map(|k| p.lambda(k)).collect()),
        count_distinct(iv.nodes.iter().map(|k| p.left_kernel(k)).collect()),
        count_distinct(iv.nodes.iter().map(|k| p.rho(k)).collect()),
        count_distinct(iv.nodes.iter().map(|k| p.right_kernel(k)).collect()),
    ];
    Ok(ShortcutReport {
        has_shortcut: !tags.is_empty(),
        shortcut_tags: tags,
        is_novelty: image_sizes.iter().all(|&s| s > 1),
        image_sizes,
        shape: classify_poset(&poset),
    })
}

/// The interval `[Δ_A ÷ (𝒞 x 1) Δ_C]` for `C = AGL(1, q)`, `A` a point
/// stabilizer and `𝒞` the translations, inside `C x C`.
pub fn affine_line_shortcut(q: u64) -> Result<(DirectProduct, Group, Group)> {
    let c = crate::factory::agl(1, q)?.group;
    let a = c.point_stabilizer(0)?;
    let translations = crate::factory::socle(&c)?;
    let p = DirectProduct::new(&c, &c);
    let bottom = p.diagonal(&a)?;
    let top = p.left_copy(&translations).join(&p.diagonal(&c)?);
    Ok((p, bottom, top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{alt, cyclic, sym};
    use crate::lattice::{all_subgroups, interval};

    fn s3s3() -> DirectProduct {
        DirectProduct::new(&sym(3), &sym(3))
    }

    #[test]
    fn build_examples() {
        let p = s3s3();
        let s3 = sym(3);
        let diag = GoursatDatum {
            c: s3.clone(),
            a_ker: Group::trivial(3),
            d: s3.clone(),
            b_ker: Group::trivial(3),
            alpha: s3.generators().iter().map(|g| (g.clone(), g.clone())).collect(),
        };
        assert_eq!(goursat_build(&p, &diag).unwrap().order(), 6);
        let a3 = alt(3);
        let t = Permutation::parse("(0,1)", Some(3)).unwrap();
        let even = GoursatDatum { c: s3.clone(), a_ker: a3.clone(), d: s3.clone(), b_ker: a3.clone(), alpha: vec![(t.clone(), t)] };
        let e = goursat_build(&p, &even).unwrap();
        assert_eq!(e.order(), 18);
        assert!(e.same_subgroup(&p.whole.even_part()));
        let cart = goursat_build(&p, &GoursatDatum::cartesian(&a3, &s3)).unwrap();
        assert_eq!(cart.order(), 18);
    }

    #[test]
    fn build_rejects_non_homomorphisms() {
        let p = s3s3();
        let s3 = sym(3);
        let t = Permutation::parse("(0,1)", Some(3)).unwrap();
        let c3 = Permutation::parse("(0,1,2)", Some(3)).unwrap();
        let bad = GoursatDatum {
            c: s3.clone(),
            a_ker: Group::trivial(3),
            d: s3.clone(),
            b_ker: Group::trivial(3),
            alpha: vec![(t.clone(), c3.clone()), (c3, t)],
        };
        assert!(goursat_build(&p, &bad).is_err());
    }

    #[test]
    fn round_trip_over_all_subgroups() {
        let p = s3s3();
        for h in all_subgroups(&p.whole, 400).unwrap() {
            let d = goursat_decompose(&p, &h).unwrap();
            assert!(goursat_build(&p, &d).unwrap().same_subgroup(&h));
        }
    }

    #[test]
    fn maximals_agree_with_oracle() {
        for (l, r, expect) in [(sym(3), sym(3), Some(9)), (sym(4), sym(3), None), (cyclic(5), cyclic(7), Some(2))] {
            let p = DirectProduct::new(&l, &r);
            let ours = product_maximals(&p).unwrap();
            let oracle = oracle_maximals(&p).unwrap();
            assert_eq!(ours.len(), oracle.len());
            assert!(ours.iter().all(|x| oracle.iter().any(|y| y.same_subgroup(x))));
            if let Some(n) = expect {
                assert_eq!(ours.len(), n);
            }
        }
    }

    #[test]
    fn maximality_cases() {
        let p = s3s3();
        let s3 = sym(3);
        let a3 = alt(3);
        let d_s3 = p.diagonal(&s3).unwrap();
        let d_a3 = p.diagonal(&a3).unwrap();
        let even = p.whole.even_part();
        assert!(maximal_case(&p, &d_a3, &d_s3).unwrap().is_some());
        assert_eq!(maximal_case(&p, &d_s3, &even).unwrap(), Some(MaximalCase::D));
        assert_eq!(maximal_case(&p, &d_s3, &p.whole).unwrap(), None);
    }

    fn check_coverings(p: &DirectProduct) {
        let iv = interval(&Group::trivial(p.whole.degree()), &p.whole).unwrap();
        let poset = iv.poset();
        let covers: std::collections::HashSet<(usize, usize)> = iv.hasse.iter().copied().collect();
        for i in 0..iv.nodes.len() {
            for j in 0..iv.nodes.len() {
                if i == j || !poset.leq(i, j) {
                    continue;
                }
                let m = maximal_case(p, &iv.nodes[i], &iv.nodes[j]).unwrap().is_some();
                assert_eq!(m, covers.contains(&(i, j)), "{i} -> {j}");
                if m {
                    let t = interval_type(p, &iv.nodes[i], &iv.nodes[j]).unwrap();
                    assert_ne!(t, IntervalType::Composed);
                }
            }
        }
    }

    #[test]
    fn covering_agreement_in_s3_s3() {
        check_coverings(&s3s3());
    }

    #[test]
    fn covering_agreement_in_s3_s4() {
        check_coverings(&DirectProduct::new(&sym(3), &sym(4)));
    }

    #[test]
    fn interval_types() {
        let p = s3s3();
        let s3 = sym(3);
        let a3 = alt(3);
        assert_eq!(interval_type(&p, &p.cartesian(&a3, &s3), &p.whole).unwrap(), IntervalType::TwoL);
        let d_s3 = p.diagonal(&s3).unwrap();
        assert_eq!(interval_type(&p, &d_s3, &p.whole.even_part()).unwrap(), IntervalType::ThreeA);
        let sk = skeleton_orders(&p, &d_s3, &p.whole.even_part()).unwrap();
        assert_eq!((sk.l, sk.r), (3, 3));
    }

    #[test]
    fn four_l_witness() {
        // A = C3 inside C = S3, gamma with kernel A3: A A3 = S3, so the
        // inclusion G_{chi psi} <= G_psi for psi the identity of S3/A3 is 4L.
        let p = s3s3();
        let s3 = sym(3);
        let a3 = alt(3);
        let t = Permutation::parse("(0,1)", Some(3)).unwrap();
        let c2 = Group::generate(3, vec![t.clone()]).unwrap();
        let outer = goursat_build(&p, &GoursatDatum { c: s3.clone(), a_ker: a3.clone(), d: s3.clone(), b_ker: a3.clone(), alpha: vec![(t.clone(), t.clone())] }).unwrap();
        let inner = goursat_build(&p, &GoursatDatum { c: c2, a_ker: Group::trivial(3), d: s3, b_ker: a3, alpha: vec![(t.clone(), t)] }).unwrap();
        assert_eq!(interval_type(&p, &inner, &outer).unwrap(), IntervalType::FourL);
    }

    #[test]
    fn decompositions_conform() {
        let p = s3s3();
        let all = all_subgroups(&p.whole, 400).unwrap();
        for x in &all {
            for y in &all {
                if x.is_subgroup_of(y) {
                    let d = decompose_inclusion(&p, x, y).unwrap();
                    assert!(d.conforms(), "{:?}", d.types);
                }
            }
        }
    }

    #[test]
    fn affine_line_examples() {
        for (q, r) in [(3, 4), (4, 5)] {
            let (p, bottom, top) = affine_line_shortcut(q).unwrap();
            let rep = shortcut_novelty(&p, &bottom, &top).unwrap();
            assert_eq!(rep.shape, Shape::Mr(r));
            assert!(rep.is_novelty);
            assert!(rep.shortcut_tags.iter().any(|t| t == "3B-3A"));
        }
    }

    #[test]
    fn cartesian_shortcut_is_not_novel() {
        let p = s3s3();
        let bottom = p.right_copy(&sym(3));
        let rep = shortcut_novelty(&p, &bottom, &p.whole).unwrap();
        assert!(rep.has_shortcut);
        assert!(rep.shortcut_tags.iter().all(|t| t == "2L-2L"));
        assert!(!rep.is_novelty);
    }
}
