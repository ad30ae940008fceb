//! Permutation groups backed by a stabilizer chain.
//!
//! The chain is built by a deterministic Schreier–Sims: base points are
//! the first points moved by the residues that need them, transversals are
//! stored explicitly, and orbits grow by breadth-first extension so that
//! coset representatives never change once assigned. The mixed-radix index
//! of the chain doubles as an element ranking, which is what the lattice
//! code uses for its bitsets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{input, Error, Result};
use crate::perm::{Permutation, Point};

const NONE: u32 = u32::MAX;

#[derive(Clone)]
struct Level {
    base: Point,
    gens: Vec<Permutation>,
    orbit: Vec<Point>,
    pos: Vec<u32>,
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
    /// checked[s][k]: Schreier generator for orbit point k and generator s sifts.
    checked: Vec<Vec<bool>>,
}

impl Level {
    fn new(degree: usize, base: Point) -> Level {
        let mut pos = vec![NONE; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            reps: vec![Permutation::identity(degree)],
            inv_reps: vec![Permutation::identity(degree)],
            checked: Vec::new(),
        }
    }

    /// Adds a generator and extends the orbit breadth-first. Existing
    /// representatives are kept, so earlier sifting results stay valid.
    fn add_gen(&mut self, s: Permutation) {
        self.gens.push(s);
        self.checked.push(Vec::new());
        let new_idx = self.gens.len() - 1;
        let old_len = self.orbit.len();
        // new generator on old points
        for k in 0..old_len {
            let y = self.gens[new_idx].apply(self.orbit[k]);
            if self.pos[y as usize] == NONE {
                let rep = self.reps[k].then(&self.gens[new_idx]);
                self.push_point(y, rep);
            }
        }
        // all generators on new points
        let mut k = old_len;
        while k < self.orbit.len() {
            for si in 0..self.gens.len() {
                let y = self.gens[si].apply(self.orbit[k]);
                if self.pos[y as usize] == NONE {
                    let rep = self.reps[k].then(&self.gens[si]);
                    self.push_point(y, rep);
                }
            }
            k += 1;
        }
    }

    fn push_point(&mut self, y: Point, rep: Permutation) {
        self.pos[y as usize] = self.orbit.len() as u32;
        self.orbit.push(y);
        self.inv_reps.push(rep.inverse());
        self.reps.push(rep);
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Runs Schreier–Sims. `base_prefix` points are used as the first base
    /// points (in order) even when their basic orbits are trivial.
    fn build(degree: usize, gens: &[Permutation], base_prefix: &[Point]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(degree, b));
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.first_moved().expect("non-identity moves a point");
                chain.levels.push(Level::new(degree, b));
            }
            // g goes into every level whose earlier base points it fixes
            for i in 0..chain.levels.len() {
                let fixes_prefix = chain.levels[..i].iter().all(|l| g.apply(l.base) == l.base);
                if !fixes_prefix {
                    break;
                }
                chain.levels[i].add_gen(g.clone());
            }
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.find_unsifted(li) {
                None => i -= 1,
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let b = residue.first_moved().expect("residue is not the identity");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for l in li + 1..=j {
                        self.levels[l].add_gen(residue.clone());
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// First Schreier generator at level `li` that does not sift through
    /// the levels below, with the residue and the level where sifting stopped.
    fn find_unsifted(&mut self, li: usize) -> Option<(Permutation, usize)> {
        let ngens = self.levels[li].gens.len();
        for s in 0..ngens {
            let mut k = 0;
            while k < self.levels[li].orbit.len() {
                let len = self.levels[li].orbit.len();
                if self.levels[li].checked[s].len() < len {
                    self.levels[li].checked[s].resize(len, false);
                }
                if !self.levels[li].checked[s][k] {
                    let level = &self.levels[li];
                    let x = level.orbit[k];
                    let y = level.gens[s].apply(x);
                    let h = level.reps[k].then(&level.gens[s]).then(&level.inv_reps[level.pos[y as usize] as usize]);
                    if !h.is_identity() {
                        let (residue, j) = self.sift_from(h, li + 1);
                        if !residue.is_identity() {
                            return Some((residue, j));
                        }
                    }
                    self.levels[li].checked[s][k] = true;
                }
                k += 1;
            }
        }
        None
    }

    fn sift_from(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let beta = h.apply(level.base);
            let p = level.pos[beta as usize];
            if p == NONE {
                return (h, l);
            }
            if p != 0 {
                h = h.then(&level.inv_reps[p as usize]);
            }
        }
        (h, self.levels.len())
    }

    fn contains(&self, g: &Permutation) -> bool {
        let (r, _) = self.sift_from(g.clone(), 0);
        r.is_identity()
    }

    fn order(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Arc<StabChain>,
    order: u128,
    name: Option<String>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, degree {}, order {})", self.name.as_deref().unwrap_or("?"), self.degree, self.order)
    }
}

impl Group {
    /// Builds the group generated by `gens`; an empty list gives the trivial group.
    pub fn generate(degree: usize, gens: Vec<Permutation>) -> Result<Group> {
        Self::generate_with_base(degree, gens, &[])
    }

    /// Like [`Group::generate`] but with a prescribed base prefix.
    pub fn generate_with_base(degree: usize, gens: Vec<Permutation>, base_prefix: &[Point]) -> Result<Group> {
        if degree == 0 {
            return input("degree must be at least 1");
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        if let Some(&b) = base_prefix.iter().find(|&&b| b as usize >= degree) {
            return input(format!("base point {b} out of range for degree {degree}"));
        }
        let mut gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut seen = BTreeSet::new();
        gens.retain(|g| seen.insert(g.clone()));
        let chain = StabChain::build(degree, &gens, base_prefix);
        let order = chain
            .order()
            .ok_or_else(|| Error::Budget(format!("group order overflows 128 bits (degree {degree})")))?;
        Ok(Group { degree, gens, chain: Arc::new(chain), order, name: None })
    }

    pub fn trivial(degree: usize) -> Group {
        Self::generate(degree, Vec::new()).expect("trivial group of positive degree")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<Point> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths along the chain.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the `i`-th chain stabilizer (fixing the first `i` base points).
    pub fn strong_generators_at(&self, i: usize) -> Vec<Permutation> {
        self.chain.levels.get(i).map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        Ok(self.chain.contains(g))
    }

    /// Membership for callers that already know the degrees agree.
    pub fn has(&self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        self.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && other.order.is_multiple_of(self.order) && self.gens.iter().all(|g| other.has(g))
    }

    /// Equality of element sets. Groups of order at most 10^4 compare their
    /// sorted element lists; larger ones compare order, orbits and mutual
    /// generator membership.
    pub fn same_subgroup(&self, other: &Group) -> bool {
        if self.degree != other.degree || self.order != other.order {
            return false;
        }
        if self.order <= 10_000 {
            return self.sorted_elements() == other.sorted_elements();
        }
        self.orbits() == other.orbits() && self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    pub fn sorted_elements(&self) -> Vec<Permutation> {
        let mut v = self.elements();
        v.sort();
        v
    }

    /// All elements in rank order. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order.min(1 << 24) as usize);
        self.for_each_element(|g| out.push(g.clone()));
        out
    }

    /// Rank of a member in `0..order`, or `None` for non-members.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut buf: Vec<Point> = g.images().to_vec();
        self.rank_images(&mut buf)
    }

    /// Rank computation that consumes a scratch copy of the image list.
    pub fn rank_images(&self, buf: &mut [Point]) -> Option<u64> {
        let mut rank: u64 = 0;
        let mut radix: u64 = 1;
        for level in &self.chain.levels {
            let beta = buf[level.base as usize];
            let p = level.pos[beta as usize];
            if p == NONE {
                return None;
            }
            if p != 0 {
                let inv = level.inv_reps[p as usize].images();
                for x in buf.iter_mut() {
                    *x = inv[*x as usize];
                }
            }
            rank += p as u64 * radix;
            radix *= level.orbit.len() as u64;
        }
        if buf.iter().enumerate().all(|(i, &x)| i as Point == x) {
            Some(rank)
        } else {
            None
        }
    }

    /// The element of a given rank; inverse of [`Group::rank`].
    pub fn element(&self, mut rank: u64) -> Permutation {
        let mut digits = Vec::with_capacity(self.chain.levels.len());
        for level in &self.chain.levels {
            let s = level.orbit.len() as u64;
            digits.push((rank % s) as usize);
            rank /= s;
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &d) in self.chain.levels.iter().zip(&digits).rev() {
            if d != 0 {
                g = g.then(&level.reps[d]);
            }
        }
        g
    }

    /// Visits every element once, in increasing rank.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let levels = &self.chain.levels;
        if levels.is_empty() {
            f(&Permutation::identity(self.degree));
            return;
        }
        fn rec(levels: &[Level], depth: usize, acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            let level = &levels[depth];
            for rep in &level.reps {
                let next = acc.then(rep);
                if depth == 0 {
                    f(&next);
                } else {
                    rec(levels, depth - 1, &next, f);
                }
            }
        }
        rec(levels, levels.len() - 1, &Permutation::identity(self.degree), &mut f);
    }

    pub fn orbit(&self, x: Point) -> Vec<Point> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![x];
        seen[x as usize] = true;
        let mut k = 0;
        while k < out.len() {
            for g in &self.gens {
                let y = g.apply(out[k]);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Orbit partition with each orbit sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x as Point);
                for &y in &o {
                    seen[y as usize] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    pub fn is_even(&self) -> bool {
        self.gens.iter().all(|g| g.parity() == 0)
    }

    /// Stabilizer of a single point.
    pub fn point_stabilizer(&self, w: Point) -> Result<Group> {
        if w as usize >= self.degree {
            return input(format!("point {w} out of range for degree {}", self.degree));
        }
        Ok(self.pointwise_stabilizer(&[w]))
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[Point]) -> Group {
        let rebased = StabChain::build(self.degree, &self.gens, points);
        let gens = rebased.levels.get(points.len()).map(|l| l.gens.clone()).unwrap_or_default();
        Group::generate(self.degree, gens).expect("stabilizer generators have the group degree")
    }

    /// Stabilizer of the set `points` (as a set), by orbit-stabilizer search
    /// over the group's elements. Intended for small groups.
    pub fn set_stabilizer(&self, points: &[Point]) -> Group {
        let mut mask = vec![false; self.degree];
        for &p in points {
            mask[p as usize] = true;
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = Group::trivial(self.degree);
        self.for_each_element(|g| {
            if points.iter().all(|&p| mask[g.apply(p) as usize]) && !current.has(g) {
                gens.push(g.clone());
                current = Group::generate(self.degree, gens.clone()).expect("same degree");
            }
        });
        current
    }

    /// `G ∩ Alt(n)`.
    pub fn even_part(&self) -> Group {
        let Some(t) = self.gens.iter().find(|g| g.parity() == 1) else {
            return self.clone();
        };
        // Schreier generators for the transversal {1, t}
        let t_inv = t.inverse();
        let mut gens = Vec::new();
        for s in &self.gens {
            if s.parity() == 0 {
                gens.push(s.clone());
                gens.push(t.then(s).then(&t_inv));
            } else {
                gens.push(s.then(&t_inv));
                gens.push(t.then(s));
            }
        }
        let name = self.name.as_ref().map(|n| format!("{n}^e"));
        let mut g = Group::generate(self.degree, gens).expect("same degree");
        g.name = name;
        g
    }

    /// Relabels points: the group `c^-1 G c`.
    pub fn conjugate(&self, c: &Permutation) -> Group {
        let gens = self.gens.iter().map(|g| g.conjugate_by(c)).collect();
        Group::generate(self.degree, gens).expect("same degree")
    }

    /// Subgroup generated by `self` and `extra`.
    pub fn join(&self, other: &Group) -> Group {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().filter(|g| !self.has(g)).cloned());
        Group::generate(self.degree, gens).expect("same degree")
    }

    /// Action on an invariant point set, relabelled to `0..points.len()` in
    /// the order given.
    pub fn restrict(&self, points: &[Point]) -> Result<Group> {
        let mut index = vec![NONE; self.degree];
        for (i, &p) in points.iter().enumerate() {
            index[p as usize] = i as u32;
        }
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut images = Vec::with_capacity(points.len());
            for &p in points {
                let j = index[g.apply(p) as usize];
                if j == NONE {
                    return input("point set is not invariant under the group");
                }
                images.push(j);
            }
            gens.push(Permutation::from_images(images)?);
        }
        Group::generate(points.len(), gens)
    }

    /// Canonical representative of the right coset `H x` of `self = H`,
    /// given as the lexicographically least image list in the coset.
    /// `self` must have been built by [`Group::with_full_base`].
    fn canonical_coset_images(&self, x: &Permutation) -> Vec<Point> {
        let mut cur: Vec<Point> = x.images().to_vec();
        for level in &self.chain.levels {
            let mut best = 0usize;
            let mut best_img = cur[level.orbit[0] as usize];
            for (k, &beta) in level.orbit.iter().enumerate().skip(1) {
                let img = cur[beta as usize];
                if img < best_img {
                    best = k;
                    best_img = img;
                }
            }
            if best != 0 {
                let rep = level.reps[best].images();
                cur = rep.iter().map(|&y| cur[y as usize]).collect();
            }
        }
        cur
    }

    /// Same group with a chain whose base is `0, 1, ..., n-1`.
    fn with_full_base(&self) -> Group {
        let base: Vec<Point> = (0..self.degree as Point).collect();
        Group::generate_with_base(self.degree, self.gens.clone(), &base).expect("same degree")
    }

    /// Action of `self` on the right cosets of `h`, with the coset of the
    /// identity numbered 0. The flag is true when the action is faithful.
    pub fn coset_action(&self, h: &Group) -> Result<(Group, bool)> {
        self.coset_action_with_reps(h).map(|(g, faithful, _)| (g, faithful))
    }

    /// [`Group::coset_action`] together with a representative `r_i` of each
    /// coset `H r_i`, indexed like the points of the image.
    pub fn coset_action_with_reps(&self, h: &Group) -> Result<(Group, bool, Vec<Permutation>)> {
        if !h.is_subgroup_of(self) {
            return input("coset action needs a subgroup");
        }
        let index = (self.order / h.order) as usize;
        let hb = h.with_full_base();
        let mut reps: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut lookup: HashMap<Vec<Point>, u32> = HashMap::new();
        lookup.insert(hb.canonical_coset_images(&reps[0]), 0);
        let mut images: Vec<Vec<Point>> = vec![Vec::with_capacity(index); self.gens.len()];
        let mut k = 0;
        while k < reps.len() {
            for (si, s) in self.gens.iter().enumerate() {
                let y = reps[k].then(s);
                let key = hb.canonical_coset_images(&y);
                let next = lookup.len() as u32;
                let id = *lookup.entry(key).or_insert_with(|| {
                    reps.push(y);
                    next
                });
                images[si].push(id);
            }
            k += 1;
        }
        if reps.len() != index {
            return Err(Error::Internal(format!("found {} cosets, expected {index}", reps.len())));
        }
        let gens = images.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>()?;
        let image = Group::generate(index, gens)?;
        let faithful = image.order == self.order;
        Ok((image, faithful, reps))
    }

    /// `N_A(G)` for an ambient group `A`, by running over A's elements.
    pub fn normalizer_in(&self, ambient: &Group, element_budget: u128) -> Result<Group> {
        if ambient.order > element_budget {
            return Err(Error::Budget(format!("ambient order {} exceeds element budget {element_budget}", ambient.order)));
        }
        let mut found: Vec<Permutation> = self.gens.iter().filter(|g| ambient.has(g)).cloned().collect();
        let mut current = Group::generate(self.degree, found.clone())?;
        ambient.for_each_element(|c| {
            if !current.has(c) && self.gens.iter().all(|g| self.has(&g.conjugate_by(c))) {
                found.push(c.clone());
                current = Group::generate(self.degree, found.clone()).expect("same degree");
            }
        });
        Ok(current)
    }

    /// `N_{Sym(n)}(G)`, exact up to degree `budget`.
    pub fn normalizer_in_sym(&self, budget: usize) -> Result<Group> {
        let n = self.degree;
        if n > budget {
            return Err(Error::Budget(format!("degree {n} exceeds normalizer budget {budget}")));
        }
        let full = factorial(n);
        if self.order == full || self.order * 2 == full {
            return Ok(crate::factory::sym(n));
        }
        if n < 9 {
            return self.normalizer_in(&crate::factory::sym(n), u128::MAX);
        }
        let conjugators = conjugator_search(self, self, CONJUGATOR_BUDGET, false)?;
        let mut gens: Vec<Permutation> = self.gens.clone();
        let mut current = self.clone();
        for c in conjugators {
            if !current.has(&c) {
                gens.push(c);
                current = Group::generate(n, gens.clone())?;
            }
        }
        Ok(current)
    }

    /// A permutation `c` with `G^c = H`, if one exists.
    pub fn is_perm_isomorphic(&self, h: &Group, budget: usize) -> Result<Option<Permutation>> {
        if self.degree != h.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: h.degree });
        }
        if self.degree > budget {
            return Err(Error::Budget(format!("degree {} exceeds search budget {budget}", self.degree)));
        }
        if self.order != h.order {
            return Ok(None);
        }
        Ok(conjugator_search(self, h, CONJUGATOR_BUDGET, true)?.into_iter().next())
    }
}

const CONJUGATOR_BUDGET: u128 = 200_000_000;

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Permutations `c` with `G^c ≤ H` (equivalently `= H` when orders agree).
///
/// A fixed element `x` of G must be sent to an element of H with the same
/// cycle type, and each such target pins `c` down to a coset of the
/// centralizer of `x` in the symmetric group. `x` is chosen to minimise the
/// number of resulting candidates.
fn conjugator_search(g: &Group, h: &Group, budget: u128, first_only: bool) -> Result<Vec<Permutation>> {
    let n = g.degree;
    if g.order > 20_000_000 || h.order > 20_000_000 {
        return Err(Error::Budget("conjugator search needs to enumerate groups above 2e7 elements".into()));
    }
    let mut g_types: HashMap<Vec<usize>, (u128, Permutation)> = HashMap::new();
    g.for_each_element(|x| {
        let e = g_types.entry(x.cycle_type()).or_insert((0, x.clone()));
        e.0 += 1;
    });
    let mut h_by_type: HashMap<Vec<usize>, Vec<Permutation>> = HashMap::new();
    let mut h_counts: HashMap<Vec<usize>, u128> = HashMap::new();
    h.for_each_element(|x| {
        *h_counts.entry(x.cycle_type()).or_insert(0) += 1;
    });
    let mut best: Option<(u128, Vec<usize>)> = None;
    for ty in g_types.keys() {
        if ty.iter().all(|&l| l == 1) {
            continue;
        }
        let targets = h_counts.get(ty).copied().unwrap_or(0);
        if targets == 0 {
            return Ok(Vec::new());
        }
        let cost = targets * centralizer_order(ty);
        let better = match &best {
            None => true,
            Some((c, t)) => cost < *c || (cost == *c && ty < t),
        };
        if better {
            best = Some((cost, ty.clone()));
        }
    }
    let Some((cost, ty)) = best else {
        // trivial groups
        return Ok(vec![Permutation::identity(n)]);
    };
    if cost > budget {
        return Err(Error::Budget(format!("conjugator search would test {cost} candidates")));
    }
    h.for_each_element(|x| {
        if x.cycle_type() == ty {
            h_by_type.entry(ty.clone()).or_default().push(x.clone());
        }
    });
    let x = g_types[&ty].1.clone();
    let mut out = Vec::new();
    for t in &h_by_type[&ty] {
        let mut stop = false;
        for_each_conjugator(&x, t, &mut |c| {
            if g.gens.iter().all(|s| h.has(&s.conjugate_by(c))) {
                out.push(c.clone());
                if first_only {
                    stop = true;
                }
            }
            stop
        });
        if stop {
            break;
        }
    }
    Ok(out)
}

fn centralizer_order(cycle_type: &[usize]) -> u128 {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &l in cycle_type {
        *counts.entry(l).or_insert(0) += 1;
    }
    counts.iter().map(|(&l, &m)| factorial(m) * (l as u128).pow(m as u32)).product()
}

/// Calls `f` on every `c` with `x^c = t`; stops early when `f` returns true.
fn for_each_conjugator(x: &Permutation, t: &Permutation, f: &mut dyn FnMut(&Permutation) -> bool) {
    let n = x.degree();
    let full_cycles = |p: &Permutation| -> HashMap<usize, Vec<Vec<Point>>> {
        let mut by_len: HashMap<usize, Vec<Vec<Point>>> = HashMap::new();
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s as Point];
            seen[s] = true;
            let mut y = p.apply(s as Point);
            while y as usize != s {
                seen[y as usize] = true;
                c.push(y);
                y = p.apply(y);
            }
            by_len.entry(c.len()).or_default().push(c);
        }
        by_len
    };
    let xc = full_cycles(x);
    let tc = full_cycles(t);
    let mut lens: Vec<usize> = xc.keys().copied().collect();
    lens.sort_unstable();
    // flatten: list of (x-cycle, candidate t-cycles of the same length)
    let mut slots: Vec<(Vec<Point>, usize)> = Vec::new();
    for &l in &lens {
        for c in &xc[&l] {
            slots.push((c.clone(), l));
        }
    }
    let mut used: HashMap<usize, Vec<bool>> = lens.iter().map(|&l| (l, vec![false; tc[&l].len()])).collect();
    let mut images = vec![0 as Point; n];

    fn rec(
        k: usize,
        slots: &[(Vec<Point>, usize)],
        tc: &HashMap<usize, Vec<Vec<Point>>>,
        used: &mut HashMap<usize, Vec<bool>>,
        images: &mut Vec<Point>,
        f: &mut dyn FnMut(&Permutation) -> bool,
    ) -> bool {
        if k == slots.len() {
            return f(&Permutation::from_images_unchecked(images.clone()));
        }
        let (cyc, l) = &slots[k];
        let targets = &tc[l];
        for ti in 0..targets.len() {
            if used[l][ti] {
                continue;
            }
            used.get_mut(l).unwrap()[ti] = true;
            let rotations = if *l == 1 { 1 } else { *l };
            for r in 0..rotations {
                for (j, &a) in cyc.iter().enumerate() {
                    images[a as usize] = targets[ti][(j + r) % l];
                }
                if rec(k + 1, slots, tc, used, images, f) {
                    return true;
                }
            }
            used.get_mut(l).unwrap()[ti] = false;
        }
        false
    }
    rec(0, &slots, &tc, &mut used, &mut images, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory;
    use proptest::prelude::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn generate_small() {
        let s3 = Group::generate(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(Group::generate(5, vec![]).unwrap().order(), 1);
        assert!(Group::generate(3, vec![p(4, "(0 1)")]).is_err());
    }

    #[test]
    fn psl32_from_two_generators() {
        // 7-cycle and an order-3 element of PSL(3,2) in its action on the Fano plane
        let g = Group::generate(7, vec![p(7, "(0 1 2 3 4 5 6)"), p(7, "(1 2 5)(3 6 4)")]).unwrap();
        assert_eq!(g.order(), 168);
        let fano = factory::projective(3, 2, factory::Flavor::Psl).unwrap().group;
        assert_eq!(fano.order(), 168);
    }

    #[test]
    fn order_and_membership() {
        assert_eq!(factory::alt(6).order(), 360);
        assert!(!factory::alt(4).contains(&p(4, "(0 1)")).unwrap());
        assert!(factory::alt(4).contains(&p(5, "(0 1)")).is_err());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(factory::sym(5).point_stabilizer(0).unwrap().order(), 24);
        let fano = factory::projective(3, 2, factory::Flavor::Psl).unwrap().group;
        for w in 0..7 {
            assert_eq!(fano.point_stabilizer(w).unwrap().order(), 24);
        }
        assert!(factory::sym(3).point_stabilizer(3).is_err());
    }

    #[test]
    fn even_parts() {
        assert!(factory::sym(5).even_part().same_subgroup(&factory::alt(5)));
        assert!(factory::alt(7).even_part().same_subgroup(&factory::alt(7)));
        assert_eq!(factory::agl(1, 5).unwrap().group.even_part().order(), 10);
    }

    #[test]
    fn rank_round_trip() {
        let g = factory::sym(5);
        for r in [0u64, 1, 17, 64, 119] {
            assert_eq!(g.rank(&g.element(r)), Some(r));
        }
        let mut seen = [false; 120];
        let mut next = 0;
        g.for_each_element(|x| {
            let r = g.rank(x).unwrap() as usize;
            assert_eq!(r, next);
            seen[r] = true;
            next += 1;
        });
        assert!(seen.iter().all(|&b| b));
        assert_eq!(factory::alt(5).rank(&p(5, "(0 1)")), None);
    }

    #[test]
    fn coset_actions() {
        let s4 = factory::sym(4);
        let (img, faithful) = s4.coset_action(&s4.point_stabilizer(0).unwrap()).unwrap();
        assert_eq!(img.degree(), 4);
        assert!(faithful);
        assert!(img.same_subgroup(&factory::sym(4)));
        let m24 = factory::atlas("M24/24").unwrap().group;
        let (img, faithful) = m24.coset_action(&m24.point_stabilizer(0).unwrap()).unwrap();
        assert_eq!((img.degree(), faithful), (24, true));
    }

    #[test]
    fn normalizers() {
        assert!(factory::alt(5).normalizer_in_sym(12).unwrap().same_subgroup(&factory::sym(5)));
        let c11 = Group::generate(11, vec![factory::cycle(11)]).unwrap();
        let n = c11.normalizer_in_sym(12).unwrap();
        assert_eq!(n.order(), 110);
        assert!(n.same_subgroup(&factory::agl(1, 11).unwrap().group));
        let psl25 = factory::projective(2, 5, factory::Flavor::Psl).unwrap().group;
        let n = psl25.normalizer_in_sym(12).unwrap();
        assert_eq!(n.order(), 120);
        assert!(n.same_subgroup(&factory::projective(2, 5, factory::Flavor::Pgl).unwrap().group));
        assert!(matches!(factory::sym(13).normalizer_in_sym(12), Err(Error::Budget(_))));
    }

    #[test]
    fn perm_isomorphism() {
        let s3 = factory::sym(3);
        let c = s3.is_perm_isomorphic(&s3, 12).unwrap().unwrap();
        assert!(s3.conjugate(&c).same_subgroup(&s3));
        let s4 = factory::sym(4);
        let a = s4.point_stabilizer(0).unwrap();
        let b = s4.point_stabilizer(1).unwrap();
        let c = a.is_perm_isomorphic(&b, 12).unwrap().unwrap();
        assert!(a.conjugate(&c).same_subgroup(&b));
        assert_eq!(c, p(4, "(0 1)"));
        // PSL(2,7) on 7 points twisted by an odd relabelling lies in the other A7-class
        let fano = factory::projective(3, 2, factory::Flavor::Psl).unwrap().group;
        let twisted = fano.conjugate(&p(7, "(0 1)"));
        let c = fano.is_perm_isomorphic(&twisted, 12).unwrap().unwrap();
        assert!(fano.conjugate(&c).same_subgroup(&twisted));
        assert_eq!(fano.is_perm_isomorphic(&factory::alt(7), 12).unwrap(), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lagrange_and_orbit_stabilizer(n in 3usize..8, a in 0u64..5040, b in 0u64..5040) {
            let s = factory::sym(n);
            let x = s.element(a % s.order() as u64);
            let y = s.element(b % s.order() as u64);
            let g = Group::generate(n, vec![x, y]).unwrap();
            for orbit in g.orbits() {
                let st = g.point_stabilizer(orbit[0]).unwrap();
                prop_assert_eq!(g.order() % st.order(), 0);
                prop_assert_eq!(st.order() * orbit.len() as u128, g.order());
            }
            let e = g.even_part();
            prop_assert!(g.order() == e.order() || g.order() == 2 * e.order());
            prop_assert!(e.even_part().same_subgroup(&e));
            for gen in g.generators() {
                prop_assert!(g.has(gen));
            }
        }
    }
}
