//! Intervals in subgroup lattices.
//!
//! Overgroups of `H` inside `G` are found exhaustively by walking the
//! elements of `G` in rank order. Each unmarked `g` yields the cyclic
//! extension `<H, g>`; the double cosets `H g^j H` for `j` prime to the order
//! of `g` generate the same extension and are marked so that they are never
//! revisited. Every overgroup is a join of cyclic extensions, so closing the
//! extensions under joins gives the whole interval.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{gcd, Permutation, Point};

/// Default cap on `|G|` for the element walk.
pub const DEFAULT_ELEMENT_BUDGET: u128 = 42_000_000;

/// Default cap on the number of conjugates enumerated by [`hm`].
pub const DEFAULT_CONJUGATE_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", content = "r")]
pub enum Shape {
    Mr(usize),
    #[serde(rename = "chain")]
    Chain(usize),
    #[serde(rename = "general")]
    General,
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Mr(r) => write!(f, "M{r}"),
            Shape::Chain(k) => write!(f, "chain({k})"),
            Shape::General => write!(f, "general"),
        }
    }
}

/// A finite bounded poset given by its order relation; node 0 is the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(leq: Vec<Vec<bool>>) -> Poset {
        Poset { leq }
    }

    /// Chain with `k` covering steps.
    pub fn chain(k: usize) -> Poset {
        let n = k + 1;
        Poset { leq: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect() }
    }

    /// The lattice `M_r`.
    pub fn mr(r: usize) -> Poset {
        let n = r + 2;
        let leq = (0..n)
            .map(|i| (0..n).map(|j| i == j || i == 0 || j == n - 1).collect())
            .collect();
        Poset { leq }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Covering pairs `(i, j)` with `i < j` in the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `P` stacked below `Q`, the top of `P` glued to the bottom of `Q`.
    /// Both are assumed bounded with the bottom first and the top last.
    pub fn vertical_sum(&self, upper: &Poset) -> Poset {
        let (a, b) = (self.len(), upper.len());
        let n = a + b - 1;
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = match (i < a, j < a) {
                    (true, true) => self.leq[i][j],
                    (true, false) => true,
                    (false, true) => false,
                    (false, false) => upper.leq[i - a + 1][j - a + 1],
                };
            }
        }
        Poset { leq }
    }

    fn rank_profile(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .map(|i| {
                let below = (0..self.len()).filter(|&k| self.leq[k][i]).count();
                let above = (0..self.len()).filter(|&k| self.leq[i][k]).count();
                (below, above)
            })
            .collect()
    }
}

/// Poset isomorphism by backtracking, pairing nodes with equal
/// (down-set, up-set) sizes.
pub fn posets_isomorphic(a: &Poset, b: &Poset) -> Result<bool> {
    if a.len() > 64 || b.len() > 64 {
        return Err(Error::Budget("poset isomorphism is limited to 64 nodes".into()));
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    let (pa, pb) = (a.rank_profile(), b.rank_profile());
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    fn extend(a: &Poset, b: &Poset, pa: &[(usize, usize)], pb: &[(usize, usize)], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || pa[i] != pb[j] {
                continue;
            }
            let ok = map.iter().enumerate().all(|(k, &mk)| a.leq[k][i] == b.leq[mk][j] && a.leq[i][k] == b.leq[j][mk]);
            if ok {
                map.push(j);
                used[j] = true;
                if extend(a, b, pa, pb, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    Ok(extend(a, b, &pa, &pb, &mut Vec::new(), &mut vec![false; b.len()]))
}

/// Shape of a bounded poset.
pub fn classify_poset(p: &Poset) -> Shape {
    let n = p.len();
    match n {
        0 => return Shape::General,
        1 => return Shape::Chain(0),
        2 => return Shape::Chain(1),
        _ => {}
    }
    let total = (0..n).all(|i| (0..n).all(|j| p.leq[i][j] || p.leq[j][i]));
    if total {
        return Shape::Chain(n - 1);
    }
    let middle_antichain = (1..n - 1).all(|i| (1..n - 1).all(|j| i == j || !p.leq[i][j]));
    if middle_antichain && n >= 4 {
        return Shape::Mr(n - 2);
    }
    Shape::General
}

#[derive(Clone, Debug)]
pub struct Interval {
    pub bottom: Group,
    pub top: Group,
    /// All intermediate subgroups, bottom first and top last.
    pub nodes: Vec<Group>,
    /// Covering pairs as indices into `nodes`, smaller group first.
    pub hasse: Vec<(usize, usize)>,
    pub shape: Shape,
}

impl Interval {
    pub fn poset(&self) -> Poset {
        let n = self.nodes.len();
        let leq = (0..n)
            .map(|i| (0..n).map(|j| i == j || self.nodes[i].is_subgroup_of(&self.nodes[j])).collect())
            .collect();
        Poset { leq }
    }

    /// Nodes strictly between the bottom and the top.
    pub fn middle(&self) -> &[Group] {
        if self.nodes.len() < 2 {
            return &[];
        }
        &self.nodes[1..self.nodes.len() - 1]
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for (i, g) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"order={}\"];\n", g.order()));
        }
        for (a, b) in &self.hasse {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = group_json(g);
                v["index"] = json!(i);
                v
            })
            .collect();
        json!({
            "bottom": group_json(&self.bottom),
            "top": group_json(&self.top),
            "shape": self.shape,
            "nodes": nodes,
            "hasse": self.hasse,
        })
    }
}

pub fn group_json(g: &Group) -> Value {
    let orbit_sizes: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_cycle_string()).collect();
    json!({
        "degree": g.degree(),
        "order": g.order().to_string(),
        "orbit_sizes": orbit_sizes,
        "generators": gens,
    })
}

struct Catalogue {
    groups: Vec<Group>,
    buckets: BTreeMap<(u128, Vec<Vec<Point>>), Vec<usize>>,
}

impl Catalogue {
    fn new() -> Self {
        Catalogue { groups: Vec::new(), buckets: BTreeMap::new() }
    }

    /// Index of `g`, inserting it if new; the flag says whether it was new.
    fn insert(&mut self, g: Group) -> (usize, bool) {
        let key = (g.order(), g.orbits());
        let bucket = self.buckets.entry(key).or_default();
        // equal orders make one-way generator membership sufficient
        if let Some(&i) = bucket.iter().find(|&&i| g.is_subgroup_of(&self.groups[i])) {
            return (i, false);
        }
        bucket.push(self.groups.len());
        self.groups.push(g);
        (self.groups.len() - 1, true)
    }
}

struct RankSet {
    bits: Vec<u64>,
}

impl RankSet {
    fn new(n: u64) -> Self {
        RankSet { bits: vec![0; (n as usize).div_ceil(64)] }
    }

    fn get(&self, r: u64) -> bool {
        self.bits[(r / 64) as usize] >> (r % 64) & 1 == 1
    }

    /// Sets the bit and reports whether it was clear.
    fn set(&mut self, r: u64) -> bool {
        let w = &mut self.bits[(r / 64) as usize];
        let m = 1u64 << (r % 64);
        let fresh = *w & m == 0;
        *w |= m;
        fresh
    }
}

/// Marks the double coset `H x H` by breadth-first search, unless it is
/// already marked.
fn mark_double_coset(g: &Group, h_gens: &[Permutation], x: Permutation, seen: &mut RankSet, buf: &mut Vec<Point>) {
    let r = g.rank(&x).expect("element of the ambient group");
    if !seen.set(r) {
        return;
    }
    let mut queue = vec![x];
    while let Some(y) = queue.pop() {
        for s in h_gens {
            for z in [s.then(&y), y.then(s)] {
                buf.clear();
                buf.extend_from_slice(z.images());
                let rz = g.rank_images(buf).expect("element of the ambient group");
                if seen.set(rz) {
                    queue.push(z);
                }
            }
        }
    }
}

/// All `K` with `H <= K <= G`, bottom first, sorted by order, then orbit
/// structure, then order of discovery.
pub fn overgroups(h: &Group, g: &Group, element_budget: u128) -> Result<Vec<Group>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Input("the bottom group is not contained in the top group".into()));
    }
    if g.order() > element_budget {
        return Err(Error::Budget(format!(
            "top group order {} exceeds the element budget {element_budget}",
            g.order()
        )));
    }
    let h_gens: Vec<Permutation> = h.generators().to_vec();
    let mut seen = RankSet::new(g.order() as u64);
    let mut buf = Vec::with_capacity(g.degree());
    mark_double_coset(g, &h_gens, Permutation::identity(g.degree()), &mut seen, &mut buf);

    let mut cat = Catalogue::new();
    cat.insert(h.clone());
    // each cyclic extension with one element generating it over H
    let mut extensions: Vec<(usize, Permutation)> = Vec::new();
    let mut rank = 0u64;
    g.for_each_element(|x| {
        let r = rank;
        rank += 1;
        if seen.get(r) {
            return;
        }
        let mut gens = h_gens.clone();
        gens.push(x.clone());
        let k = Group::generate(g.degree(), gens).expect("same degree");
        let (idx, fresh) = cat.insert(k);
        if fresh {
            extensions.push((idx, x.clone()));
        }
        let ord = x.order();
        for j in 1..=ord {
            if gcd(j, ord) == 1 {
                mark_double_coset(g, &h_gens, x.pow(j as i64), &mut seen, &mut buf);
            }
        }
    });

    // join closure against the cyclic extensions
    let mut work: Vec<usize> = extensions.iter().map(|e| e.0).collect();
    while let Some(i) = work.pop() {
        for (_, x) in &extensions {
            if cat.groups[i].has(x) {
                continue;
            }
            let mut gens = cat.groups[i].generators().to_vec();
            gens.push(x.clone());
            let k = Group::generate(g.degree(), gens).expect("same degree");
            let (idx, fresh) = cat.insert(k);
            if fresh {
                work.push(idx);
            }
        }
    }

    let mut keyed: Vec<(u128, Vec<usize>, usize, Group)> = cat
        .groups
        .into_iter()
        .enumerate()
        .map(|(i, k)| {
            let sig: Vec<usize> = k.orbits().iter().map(Vec::len).collect();
            (k.order(), sig, i, k)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
    Ok(keyed.into_iter().map(|t| t.3).collect())
}

/// Whether every generator of `g` normalizes `x`.
pub fn is_normalized_by(x: &Group, g: &Group) -> bool {
    g.generators().iter().all(|s| x.generators().iter().all(|t| x.has(&t.conjugate_by(s))))
}

/// Normal subgroups of a small group, sorted by order.
pub fn normal_subgroups(g: &Group, max_order: u128) -> Result<Vec<Group>> {
    Ok(all_subgroups(g, max_order)?.into_iter().filter(|x| is_normalized_by(x, g)).collect())
}

/// Maximal subgroups of a small group.
pub fn maximal_subgroups(g: &Group, max_order: u128) -> Result<Vec<Group>> {
    let all = all_subgroups(g, max_order)?;
    let proper: Vec<&Group> = all.iter().filter(|x| x.order() < g.order()).collect();
    Ok(proper
        .iter()
        .filter(|x| !proper.iter().any(|y| y.order() > x.order() && x.is_subgroup_of(y)))
        .map(|x| (*x).clone())
        .collect())
}

/// Whether `h` is a maximal subgroup of `g`.
pub fn is_maximal_in(h: &Group, g: &Group) -> Result<bool> {
    if h.order() == g.order() || !h.is_subgroup_of(g) {
        return Ok(false);
    }
    Ok(overgroups(h, g, DEFAULT_ELEMENT_BUDGET)?.len() == 2)
}

/// Every subgroup of a small group.
pub fn all_subgroups(g: &Group, max_order: u128) -> Result<Vec<Group>> {
    if g.order() > max_order {
        return Err(Error::Budget(format!("group order {} exceeds {max_order}", g.order())));
    }
    overgroups(&Group::trivial(g.degree()), g, max_order)
}

pub fn interval(h: &Group, g: &Group) -> Result<Interval> {
    interval_with_budget(h, g, DEFAULT_ELEMENT_BUDGET)
}

pub fn interval_with_budget(h: &Group, g: &Group, element_budget: u128) -> Result<Interval> {
    let nodes = overgroups(h, g, element_budget)?;
    Ok(interval_from_nodes(nodes))
}

/// Builds an interval from a node list sorted by order, bottom first.
pub fn interval_from_nodes(nodes: Vec<Group>) -> Interval {
    let poset = Poset {
        leq: (0..nodes.len())
            .map(|i| (0..nodes.len()).map(|j| i == j || nodes[i].is_subgroup_of(&nodes[j])).collect())
            .collect(),
    };
    let hasse = poset.covers();
    let shape = classify_poset(&poset);
    Interval {
        bottom: nodes[0].clone(),
        top: nodes[nodes.len() - 1].clone(),
        nodes,
        hasse,
        shape,
    }
}

pub fn classify(i: &Interval) -> Shape {
    classify_poset(&i.poset())
}

#[derive(Clone, Debug)]
pub struct SecondMaximal {
    pub holds: bool,
    pub reason: &'static str,
    /// The maximal overgroups of `H` inside `U`.
    pub witnesses: Vec<Group>,
}

pub fn is_second_maximal(h: &Group, u: &Group) -> Result<SecondMaximal> {
    let iv = interval(h, u)?;
    let witnesses = iv.middle().to_vec();
    let (holds, reason) = match iv.shape {
        Shape::Chain(0) => (false, "equal"),
        Shape::Chain(1) => (false, "maximal"),
        Shape::Chain(2) | Shape::Mr(_) => (true, "second maximal"),
        _ => (false, "not second maximal"),
    };
    Ok(SecondMaximal { holds, reason, witnesses })
}

/// The conjugates of `k` under `ambient`, by breadth-first search over the
/// ambient generators.
pub fn conjugates(k: &Group, ambient: &Group, budget: usize) -> Result<Vec<Group>> {
    if k.degree() != ambient.degree() {
        return Err(Error::Input(format!(
            "degree {} does not match the ambient degree {}",
            k.degree(),
            ambient.degree()
        )));
    }
    let mut cat = Catalogue::new();
    cat.insert(k.clone());
    let mut i = 0;
    while i < cat.groups.len() {
        for s in ambient.generators() {
            let c = cat.groups[i].conjugate(s);
            cat.insert(c);
            if cat.groups.len() > budget {
                return Err(Error::Budget(format!("more than {budget} conjugates")));
            }
        }
        i += 1;
    }
    Ok(cat.groups)
}

/// Number of ambient-conjugates of `k` that contain `l` or lie in `l`.
pub fn hm(k: &Group, l: &Group, ambient: &Group) -> Result<usize> {
    hm_with_budget(k, l, ambient, DEFAULT_CONJUGATE_BUDGET)
}

pub fn hm_with_budget(k: &Group, l: &Group, ambient: &Group, budget: usize) -> Result<usize> {
    let conj = conjugates(k, ambient, budget)?;
    Ok(conj.iter().filter(|x| l.is_subgroup_of(x) || x.is_subgroup_of(l)).count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalffyReport {
    pub index_n_k: usize,
    pub index_n_l: usize,
    pub hm_k_l: usize,
    pub hm_l_k: usize,
    pub holds: bool,
}

/// Checks `|G:N(L)| hm(K,L) = |G:N(K)| hm(L,K)`, reading each normalizer
/// index off the size of the conjugacy class.
pub fn palffy_check(k: &Group, l: &Group, ambient: &Group) -> Result<PalffyReport> {
    let ck = conjugates(k, ambient, DEFAULT_CONJUGATE_BUDGET)?;
    let cl = conjugates(l, ambient, DEFAULT_CONJUGATE_BUDGET)?;
    let related = |x: &Group, y: &Group| y.is_subgroup_of(x) || x.is_subgroup_of(y);
    let hm_k_l = ck.iter().filter(|x| related(x, l)).count();
    let hm_l_k = cl.iter().filter(|x| related(x, k)).count();
    let holds = cl.len() * hm_k_l == ck.len() * hm_l_k;
    Ok(PalffyReport { index_n_k: ck.len(), index_n_l: cl.len(), hm_k_l, hm_l_k, holds })
}

/// `hm(G, H) = |N(H):H| hm(H, G) / (|N(G):G| |G:H|)`: the number of
/// conjugates of `G` containing `H` within one ambient class.
pub fn palffy_count_overgroups(
    g_order: u128,
    h_order: u128,
    n_h_index: u128,
    n_g_index: u128,
    hm_h_g: u128,
) -> Result<u128> {
    if h_order == 0 || !g_order.is_multiple_of(h_order) {
        return Err(Error::Input("|H| must divide |G|".into()));
    }
    let num = n_h_index * hm_h_g;
    let den = n_g_index * (g_order / h_order);
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::Internal(format!("overgroup count {num}/{den} is not an integer")));
    }
    Ok(num / den)
}

/// Exponent of `p` in `n!`, as `(n - s_p(n)) / (p - 1)` with `s_p` the
/// base-`p` digit sum.
pub fn p_part_factorial(p: u64, n: u64) -> u64 {
    let (mut m, mut s) = (n, 0);
    while m > 0 {
        s += m % p;
        m /= p;
    }
    (n - s) / (p - 1)
}

pub fn lattice_isomorphic(a: &Interval, b: &Interval) -> Result<bool> {
    posets_isomorphic(&a.poset(), &b.poset())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{alt, cyclic, sym};

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    fn klein() -> Group {
        Group::generate(4, vec![perm(4, "(0,1)(2,3)"), perm(4, "(0,2)(1,3)")]).unwrap()
    }

    #[test]
    fn klein_in_s4() {
        let iv = interval(&klein(), &sym(4)).unwrap();
        let orders: Vec<u128> = iv.nodes.iter().map(Group::order).collect();
        assert_eq!(orders, vec![4, 8, 8, 8, 12, 24]);
        assert_eq!(iv.shape, Shape::Mr(4));
        assert_eq!(iv.hasse.len(), 8);
    }

    #[test]
    fn klein_in_a4_is_maximal() {
        let sm = is_second_maximal(&klein(), &alt(4)).unwrap();
        assert!(!sm.holds);
        assert_eq!(sm.reason, "maximal");
        let same = is_second_maximal(&alt(4), &alt(4)).unwrap();
        assert!(!same.holds);
    }

    #[test]
    fn point_stabilizer_of_s5_is_maximal() {
        let s5 = sym(5);
        let h = s5.point_stabilizer(4).unwrap();
        let groups = overgroups(&h, &s5, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(groups.len(), 2);
    }

    #[test]
    fn subgroup_counts() {
        // S3: 6 subgroups; S4: 30; C12: 6; A5: 59
        assert_eq!(all_subgroups(&sym(3), 400).unwrap().len(), 6);
        assert_eq!(all_subgroups(&sym(4), 400).unwrap().len(), 30);
        assert_eq!(all_subgroups(&cyclic(12), 400).unwrap().len(), 6);
        assert_eq!(all_subgroups(&alt(5), 400).unwrap().len(), 59);
    }

    #[test]
    fn brute_force_oracle_for_overgroups() {
        // overgroups of each subgroup of S4 agree with filtering all subgroups
        let s4 = sym(4);
        let all = all_subgroups(&s4, 400).unwrap();
        for h in all.iter().step_by(3) {
            let direct = overgroups(h, &s4, DEFAULT_ELEMENT_BUDGET).unwrap();
            let filtered = all.iter().filter(|k| h.is_subgroup_of(k)).count();
            assert_eq!(direct.len(), filtered);
        }
    }

    #[test]
    fn hm_examples() {
        let s4 = sym(4);
        let t = Group::generate(4, vec![perm(4, "(0,1)")]).unwrap();
        let s3 = Group::generate(4, vec![perm(4, "(0,1)"), perm(4, "(0,1,2)")]).unwrap();
        assert_eq!(hm(&t, &s3, &s4).unwrap(), 3);
        assert_eq!(hm(&s3, &t, &s4).unwrap(), 2);
        assert_eq!(hm(&s4, &t, &s4).unwrap(), 1);
        let rep = palffy_check(&t, &s3, &s4).unwrap();
        assert_eq!((rep.index_n_k, rep.index_n_l), (6, 4));
        assert!(rep.holds);
        let small = Group::generate(3, vec![perm(3, "(0,1)")]).unwrap();
        assert!(matches!(palffy_check(&small, &s3, &s4), Err(Error::Input(_))));
    }

    #[test]
    fn palffy_count_errors_on_fractions() {
        assert_eq!(palffy_count_overgroups(5616, 39, 2, 1, 144).unwrap(), 2);
        assert!(palffy_count_overgroups(5616, 39, 1, 1, 100).is_err());
    }

    #[test]
    fn factorial_p_parts() {
        assert_eq!(p_part_factorial(2, 8), 7);
        assert_eq!(p_part_factorial(3, 9), 4);
        assert_eq!(p_part_factorial(5, 0), 0);
        for n in 0..60u64 {
            let legendre: u64 = (1..8).map(|i| n / 2u64.pow(i)).sum();
            assert_eq!(p_part_factorial(2, n), legendre);
        }
    }

    #[test]
    fn poset_shapes_and_isomorphism() {
        assert_eq!(classify_poset(&Poset::mr(3)), Shape::Mr(3));
        assert_eq!(classify_poset(&Poset::chain(2)), Shape::Chain(2));
        assert!(posets_isomorphic(&Poset::mr(3), &Poset::mr(3)).unwrap());
        assert!(!posets_isomorphic(&Poset::chain(2), &Poset::chain(3)).unwrap());
        let stacked = Poset::chain(1).vertical_sum(&Poset::chain(1));
        assert!(posets_isomorphic(&stacked, &Poset::chain(2)).unwrap());
        let m2_on_c1 = Poset::mr(2).vertical_sum(&Poset::chain(1));
        assert_eq!(m2_on_c1.len(), 5);
        assert_eq!(classify_poset(&m2_on_c1), Shape::General);
    }

    #[test]
    fn dot_output() {
        let iv = interval(&klein(), &alt(4)).unwrap();
        let dot = iv.to_dot();
        assert!(dot.starts_with("digraph {"));
        assert!(dot.contains("n0 [label=\"order=4\"];"));
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(iv.to_json()["shape"]["tag"], "chain");
    }
}
