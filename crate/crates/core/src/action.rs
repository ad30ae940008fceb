//! Orbits, blocks and imprimitivity systems, degrees of transitivity and
//! primitivity, and stabilizers of partitions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{input, Result};
use crate::group::Group;
use crate::perm::{Permutation, Point};

/// A partition of `0..n` into `l` cells of common size `m`. Cells are sorted
/// and listed by least element, which makes equality structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Equipartition {
    cells: Vec<Vec<Point>>,
}

impl Equipartition {
    pub fn new(n: usize, cells: Vec<Vec<Point>>) -> Result<Self> {
        let mut cells: Vec<Vec<Point>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        let Some(m) = cells.first().map(Vec::len) else { return input("an equipartition needs at least one cell") };
        if m == 0 || cells.iter().any(|c| c.len() != m) {
            return input("cells of an equipartition must be nonempty and of equal size");
        }
        let mut seen = vec![false; n];
        for &x in cells.iter().flatten() {
            if x as usize >= n || seen[x as usize] {
                return input(format!("point {x} is out of range or repeated"));
            }
            seen[x as usize] = true;
        }
        if seen.iter().any(|&s| !s) {
            return input("cells do not cover every point");
        }
        Ok(Equipartition { cells })
    }

    /// Cells `{0..m}, {m..2m}, ...`.
    pub fn consecutive(n: usize, m: usize) -> Result<Self> {
        if m == 0 || !n.is_multiple_of(m) {
            return input(format!("cell size {m} does not divide {n}"));
        }
        Self::new(n, (0..n / m).map(|i| ((i * m) as Point..((i + 1) * m) as Point).collect()).collect())
    }

    pub fn cells(&self) -> &[Vec<Point>] {
        &self.cells
    }

    pub fn degree(&self) -> usize {
        self.cells.len() * self.cells[0].len()
    }

    pub fn cell_size(&self) -> usize {
        self.cells[0].len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.cell_size() == 1 || self.num_cells() == 1
    }

    /// Index of the cell containing each point.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; self.degree()];
        for (i, c) in self.cells.iter().enumerate() {
            for &x in c {
                lab[x as usize] = i;
            }
        }
        lab
    }

    /// Whether `g` maps cells to cells.
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        let lab = self.labels();
        self.cells.iter().all(|c| {
            let target = lab[g.apply(c[0]) as usize];
            c.iter().all(|&x| lab[g.apply(x) as usize] == target)
        })
    }
}

pub fn orbits(g: &Group) -> Vec<Vec<Point>> {
    g.orbits()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merges the classes; keeps the smaller root so roots stay canonical.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The finest block system in which `a` and `b` share a block, as a list
/// of classes.
fn minimal_block_system(g: &Group, a: Point, b: Point) -> Vec<Vec<Point>> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    uf.union(a as usize, b as usize);
    let mut queue = vec![(a as usize, b as usize)];
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (xs, ys) = (s.apply(x as Point) as usize, s.apply(y as Point) as usize);
            if uf.union(xs, ys) {
                queue.push((xs, ys));
            }
        }
    }
    let mut classes: Vec<Vec<Point>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = uf.find(x);
        classes[r].push(x as Point);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// Smallest block containing `a` and `b`.
pub fn minimal_block(g: &Group, a: Point, b: Point) -> Result<Vec<Point>> {
    let n = g.degree();
    if a as usize >= n || b as usize >= n || a == b {
        return input("minimal_block needs two distinct points in range");
    }
    if !g.is_transitive() {
        return input("minimal_block needs a transitive group");
    }
    let sys = minimal_block_system(g, a, b);
    Ok(sys.into_iter().find(|c| c.contains(&a)).expect("a lies in some class"))
}

fn join_partitions(n: usize, x: &Equipartition, y: &Equipartition) -> Vec<Vec<Point>> {
    let mut uf = UnionFind::new(n);
    for c in x.cells().iter().chain(y.cells()) {
        for w in c.windows(2) {
            uf.union(w[0] as usize, w[1] as usize);
        }
    }
    let mut classes: Vec<Vec<Point>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = uf.find(p);
        classes[r].push(p as Point);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// All nontrivial invariant equipartitions of a transitive group, sorted.
pub fn imprimitivity_systems(g: &Group) -> Result<Vec<Equipartition>> {
    let n = g.degree();
    if !g.is_transitive() {
        return input("imprimitivity systems need a transitive group");
    }
    let mut found: BTreeSet<Equipartition> = BTreeSet::new();
    for b in 1..n as Point {
        let sys = minimal_block_system(g, 0, b);
        if sys.len() > 1 {
            found.insert(Equipartition::new(n, sys)?);
        }
    }
    let mut frontier: Vec<Equipartition> = found.iter().cloned().collect();
    let minimal: Vec<Equipartition> = frontier.clone();
    while let Some(x) = frontier.pop() {
        for y in &minimal {
            let joined = join_partitions(n, &x, y);
            if joined.len() > 1 {
                let e = Equipartition::new(n, joined)?;
                if found.insert(e.clone()) {
                    frontier.push(e);
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

pub fn is_primitive(g: &Group) -> bool {
    g.is_transitive() && (1..g.degree() as Point).all(|b| minimal_block_system(g, 0, b).len() == 1)
}

/// `(t, p)`: the degrees of transitivity and of primitivity.
pub fn transitivity_profile(g: &Group) -> (usize, usize) {
    let n = g.degree();
    let mut removed: Vec<Point> = Vec::new();
    let mut t = 0;
    let mut p = 0;
    let mut prim_alive = true;
    let mut current = g.clone();
    loop {
        let rest: Vec<Point> = (0..n as Point).filter(|x| !removed.contains(x)).collect();
        if rest.is_empty() {
            break;
        }
        let restricted = current.restrict(&rest).expect("remaining points are invariant");
        if !restricted.is_transitive() {
            break;
        }
        t += 1;
        if prim_alive && is_primitive(&restricted) {
            p += 1;
        } else {
            prim_alive = false;
        }
        removed.push(rest[0]);
        current = g.pointwise_stabilizer(&removed);
    }
    (t, p)
}

/// Full stabilizer of an equipartition in `Sym(n)`.
pub fn equipartition_stabilizer(n: usize, z: &Equipartition) -> Result<Group> {
    if z.degree() != n {
        return input(format!("partition covers {} points, expected {n}", z.degree()));
    }
    let cells = z.cells();
    let (m, l) = (z.cell_size(), z.num_cells());
    let mut gens = Vec::new();
    if m >= 2 {
        let c = &cells[0];
        gens.push(Permutation::from_cycles(n, &[vec![c[0], c[1]]])?);
        gens.push(Permutation::from_cycles(n, std::slice::from_ref(c))?);
    }
    if l >= 2 {
        let cell_perm = |order: &[usize]| -> Result<Permutation> {
            let mut images: Vec<Point> = (0..n as Point).collect();
            for (i, &j) in order.iter().enumerate() {
                for k in 0..m {
                    images[cells[i][k] as usize] = cells[j][k];
                }
            }
            Permutation::from_images(images)
        };
        let mut swap: Vec<usize> = (0..l).collect();
        swap.swap(0, 1);
        gens.push(cell_perm(&swap)?);
        let shift: Vec<usize> = (0..l).map(|i| (i + 1) % l).collect();
        gens.push(cell_perm(&shift)?);
    }
    Group::generate(n, gens)
}

/// `S_{p_1} × S_{p_2} × ...` on consecutive ranges.
pub fn young_stabilizer(n: usize, parts: &[usize]) -> Result<Group> {
    if parts.iter().sum::<usize>() != n || parts.contains(&0) {
        return input(format!("parts {parts:?} do not form a partition of {n}"));
    }
    let mut gens = Vec::new();
    let mut start = 0;
    for &k in parts {
        if k >= 2 {
            let s = start as Point;
            gens.push(Permutation::from_cycles(n, &[vec![s, s + 1]])?);
            gens.push(Permutation::from_cycles(n, &[(s..s + k as Point).collect()])?);
        }
        start += k;
    }
    Group::generate(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{self, agl, alt, cyclic, sym, wreath, WreathMode};
    use crate::group::factorial;

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&sym(5)).len(), 1);
        let y = young_stabilizer(7, &[3, 4]).unwrap();
        let sizes: Vec<usize> = orbits(&y).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        let sizes: Vec<usize> = orbits(&cyclic(6).even_part()).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3]);
    }

    #[test]
    fn blocks() {
        assert_eq!(minimal_block(&alt(5), 0, 3).unwrap().len(), 5);
        let w = wreath(&sym(2), &sym(3), WreathMode::Imprimitive).unwrap().group;
        assert_eq!(minimal_block(&w, 2, 3).unwrap(), vec![2, 3]);
        assert_eq!(minimal_block(&cyclic(6), 0, 3).unwrap(), vec![0, 3]);
        assert!(minimal_block(&young_stabilizer(4, &[2, 2]).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn systems() {
        let klein = wreath(&sym(2), &sym(2), WreathMode::Imprimitive).unwrap().group.even_part();
        assert_eq!(klein.order(), 4);
        assert_eq!(imprimitivity_systems(&klein).unwrap().len(), 3);
        let az = wreath(&sym(2), &sym(3), WreathMode::Imprimitive).unwrap().group.even_part();
        assert_eq!(imprimitivity_systems(&az).unwrap().len(), 1);
        assert!(imprimitivity_systems(&alt(6)).unwrap().is_empty());
        assert_eq!(imprimitivity_systems(&cyclic(12)).unwrap().len(), 4);
    }

    #[test]
    fn profiles() {
        assert_eq!(transitivity_profile(&sym(2)), (2, 2));
        assert_eq!(transitivity_profile(&sym(5)), (5, 5));
        assert_eq!(transitivity_profile(&alt(5)), (3, 3));
        assert_eq!(transitivity_profile(&agl(1, 8).unwrap().group), (2, 2));
        assert_eq!(transitivity_profile(&agl(2, 3).unwrap().group), (2, 1));
        assert_eq!(transitivity_profile(&agl(3, 2).unwrap().group), (3, 2));
        assert_eq!(transitivity_profile(&young_stabilizer(4, &[2, 2]).unwrap()), (0, 0));
        assert_eq!(transitivity_profile(&cyclic(4)), (1, 0));
        let pgl27 = factory::projective(2, 7, factory::Flavor::Pgl).unwrap().group;
        assert_eq!(transitivity_profile(&pgl27), (3, 2));
    }

    #[test]
    fn partition_stabilizers() {
        let z = Equipartition::consecutive(6, 2).unwrap();
        assert_eq!(equipartition_stabilizer(6, &z).unwrap().order(), 48);
        let z8 = Equipartition::consecutive(8, 2).unwrap();
        let s = equipartition_stabilizer(8, &z8).unwrap();
        assert_eq!((s.order(), s.even_part().order()), (384, 192));
        let z4 = Equipartition::consecutive(4, 2).unwrap();
        assert_eq!(equipartition_stabilizer(4, &z4).unwrap().order(), 8);
        let scattered = Equipartition::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        let g = equipartition_stabilizer(6, &scattered).unwrap();
        assert_eq!(g.order(), 48);
        assert!(g.generators().iter().all(|x| scattered.is_preserved_by(x)));
        assert!(Equipartition::new(4, vec![vec![0, 1], vec![2]]).is_err());
    }

    #[test]
    fn young() {
        assert_eq!(young_stabilizer(7, &[3, 4]).unwrap().order(), 144);
        assert_eq!(young_stabilizer(5, &[1, 4]).unwrap().order(), 24);
        let y = young_stabilizer(6, &[2, 2, 2]).unwrap();
        let s = equipartition_stabilizer(6, &Equipartition::consecutive(6, 2).unwrap()).unwrap();
        assert_eq!(y.order(), 8);
        assert!(y.is_subgroup_of(&s) && y.order() < s.order());
        assert!(young_stabilizer(5, &[2, 2]).is_err());
        assert_eq!(young_stabilizer(4, &[4]).unwrap().order(), factorial(4));
    }

    #[test]
    fn invariant_blocks() {
        let w = wreath(&sym(3), &sym(2), WreathMode::Imprimitive).unwrap().group;
        for sys in imprimitivity_systems(&w).unwrap() {
            assert!(w.generators().iter().all(|g| sys.is_preserved_by(g)));
        }
    }
}
