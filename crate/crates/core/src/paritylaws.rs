//! Closed-form parity predictions. Nothing here builds a group: the
//! functions are plain arithmetic so that they can serve as independent
//! oracles for the constructions in [`crate::factory`].
//!
//! Bits follow [`crate::perm::Permutation::parity`]: 0 is even, 1 is odd.

use serde::Serialize;

use crate::error::{input, Result};
use crate::gf::{is_prime, prime_power};
use crate::lattice::p_part_factorial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityPrediction {
    pub value: u8,
    pub law: &'static str,
    pub parameters: Vec<(String, u64)>,
}

impl ParityPrediction {
    fn new(value: u8, law: &'static str, parameters: &[(&str, u64)]) -> Self {
        ParityPrediction { value, law, parameters: parameters.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
    }
}

/// Parity of `s` acting diagonally on `X^l`, `|X| = n`.
pub fn diagonal_parity_law(n: u64, l: u64, par_s: u8) -> Result<ParityPrediction> {
    if l < 2 {
        return input("the diagonal law needs l >= 2");
    }
    let v = ((l % 2) * (n % 2) * par_s as u64 % 2) as u8;
    Ok(ParityPrediction::new(v, "diagonal", &[("n", n), ("l", l), ("par_s", par_s as u64)]))
}

/// `C(a, b) mod 2` from the 2-adic valuations of the factorials.
pub fn binomial_parity(a: u64, b: u64) -> u8 {
    if b > a {
        return 0;
    }
    let v = p_part_factorial(2, a) - p_part_factorial(2, b) - p_part_factorial(2, a - b);
    u8::from(v == 0)
}

/// Parity of `s` acting on the `l`-subsets of an `n`-set.
pub fn powerset_parity_law(n: u64, l: u64, par_s: u8) -> Result<ParityPrediction> {
    if l == 0 || l >= n {
        return input(format!("subset size {l} must lie strictly between 0 and {n}"));
    }
    let v = binomial_parity(n - 2, l - 1) & par_s;
    Ok(ParityPrediction::new(v, "powerset", &[("n", n), ("l", l), ("par_s", par_s as u64)]))
}

/// Whether `a -> a^p` is an even permutation of `GF(p^f)`.
pub fn frobenius_even(p: u64, f: u64) -> bool {
    let q4 = p == 2 && f == 2;
    let bad = f.is_multiple_of(2) && p % 4 == 3;
    !(q4 || bad)
}

/// Whether `AGL(n, q)` consists of even permutations.
pub fn affine_even(n: u64, q: u64) -> bool {
    let exception = q == 2 && (n == 1 || n == 2);
    q.is_multiple_of(2) != exception
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveWhich {
    /// The group `PGL_d(q)` as a whole (1 when it contains odd elements).
    PglGroup,
    /// The generator `G_1(u)` alone.
    G1u,
    /// `PG_d(q, alpha)` for a field automorphism of the given parity.
    FieldAut { alpha_parity: u8 },
}

pub fn projective_parity(d: u64, q: u64, which: ProjectiveWhich) -> Result<ParityPrediction> {
    if d < 2 {
        return input("projective parity needs d >= 2");
    }
    if prime_power(q).is_none() {
        return input(format!("{q} is not a prime power"));
    }
    let params = [("d", d), ("q", q)];
    Ok(match which {
        ProjectiveWhich::PglGroup => {
            let dq = (d + 1) * q;
            let even = dq.is_multiple_of(2) && dq > 6;
            ParityPrediction::new(u8::from(!even), "projective-pgl", &params)
        }
        ProjectiveWhich::G1u => {
            let v = if q.is_multiple_of(2) { 0 } else { ((1 + d) % 2) as u8 };
            ParityPrediction::new(v, "projective-g1u", &params)
        }
        ProjectiveWhich::FieldAut { alpha_parity } => {
            // (d+1)(d-2)/2 is an integer; only its parity times q's matters
            let t = (d + 1) * (d - 2) / 2;
            let factor = (1 + (q % 2) * (t % 2)) % 2;
            let v = (factor * alpha_parity as u64 % 2) as u8;
            ParityPrediction::new(v, "projective-field-aut", &[("d", d), ("q", q), ("par_alpha", alpha_parity as u64)])
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathElement {
    Top { par_beta: u8 },
    Base { par_a: u8 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathKind {
    Imprimitive,
    Product,
}

pub fn wreath_parity_law(m: u64, l: u64, element: WreathElement, kind: WreathKind) -> Result<ParityPrediction> {
    if m < 2 || l < 2 {
        return input("wreath parity needs m, l >= 2");
    }
    let v = match (kind, element) {
        (WreathKind::Imprimitive, WreathElement::Top { par_beta }) => (m % 2) as u8 & par_beta,
        (WreathKind::Imprimitive, WreathElement::Base { par_a }) => par_a,
        (WreathKind::Product, WreathElement::Top { par_beta }) => {
            // m^(l-1) (m-1) is even, so halving it mod 2 needs it mod 4
            let x = pow_mod(m, l - 1, 4) * ((m - 1) % 4) % 4;
            ((x / 2) as u8) & par_beta
        }
        (WreathKind::Product, WreathElement::Base { par_a }) => (pow_mod(m, l - 1, 2) as u8) & par_a,
    };
    let (law, e) = match element {
        WreathElement::Top { par_beta } => ("wreath-top", par_beta),
        WreathElement::Base { par_a } => ("wreath-base", par_a),
    };
    Ok(ParityPrediction::new(v, law, &[("m", m), ("l", l), ("par", e as u64)]))
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1 % m, |acc, _| acc * (b % m) % m)
}

/// Generator recipes for subgroups of `PΓL_d(q)` between PSL and PΓL.
/// `g` is `G_1(u)` and `pi` is `PG_d(q, π)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EvenPartRecipe {
    /// `<PSL, g>`
    Pgl,
    /// `<PSL, g, pi>`
    Pgammal,
    /// `<PSL, pi>`
    Psigmal,
    /// `<PSL, g, pi^2>`
    PglPi2,
    /// `<PSL, pi^2, g pi>`
    PslPi2GPi,
    /// `<PSL, g^2, pi>`
    PslG2Pi,
    /// `<PSL, g^2, pi^2, g pi>`
    PslG2Pi2GPi,
}

/// Closed-form table row for the even part of `PΓL_d(p^f)`, for `(d, p^f)`
/// other than `(2, 2)` and `(2, 3)`. Some rows are known to be wrong; see
/// [`crate::verify::known_table_row_defect`].
pub fn even_part_table_row(p: u64, f: u64, d: u64) -> EvenPartRecipe {
    use EvenPartRecipe::*;
    if p == 2 {
        return Pgl;
    }
    let odd_d = d % 2 == 1;
    if p % 4 == 1 || f % 2 == 1 {
        return if odd_d { Pgl } else { Psigmal };
    }
    match d % 4 {
        0 => Psigmal,
        1 => Pgl,
        2 => PslPi2GPi,
        _ => PglPi2,
    }
}

/// Even part of `PΓL_d(p^f)` derived from the parities of `G_1(u)` and of
/// the Frobenius map. Assumes PSL is even, which holds outside `(2, 2)`.
pub fn even_part_from_laws(p: u64, f: u64, d: u64) -> Result<EvenPartRecipe> {
    use EvenPartRecipe::*;
    if !is_prime(p) || f == 0 {
        return input(format!("{p}^{f} is not a prime power"));
    }
    let q = p.pow(f as u32);
    let g = projective_parity(d, q, ProjectiveWhich::G1u)?.value;
    let alpha = u8::from(!frobenius_even(p, f));
    let pi = projective_parity(d, q, ProjectiveWhich::FieldAut { alpha_parity: alpha })?.value;
    Ok(match (g, pi) {
        (0, 0) => Pgammal,
        (0, _) => PglPi2,
        (_, 0) => PslG2Pi,
        _ => PslG2Pi2GPi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_parity_law(3, 2, 1).unwrap().value, 0);
        assert_eq!(diagonal_parity_law(3, 3, 1).unwrap().value, 1);
        assert_eq!(diagonal_parity_law(7, 5, 0).unwrap().value, 0);
        assert!(diagonal_parity_law(3, 1, 1).is_err());
    }

    #[test]
    fn powerset_examples() {
        assert_eq!(powerset_parity_law(4, 2, 1).unwrap().value, 0);
        assert_eq!(powerset_parity_law(5, 2, 1).unwrap().value, 1);
        for n in 2..9 {
            assert_eq!(powerset_parity_law(n, 1, 1).unwrap().value, 1);
        }
        assert!(powerset_parity_law(4, 4, 1).is_err());
    }

    #[test]
    fn binomials_against_pascal() {
        let mut row = vec![1u64];
        for a in 0..40u64 {
            for (b, &c) in row.iter().enumerate() {
                assert_eq!(binomial_parity(a, b as u64), (c % 2) as u8, "C({a},{b})");
            }
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = (row[i - 1] + row[i]) % 1024;
            }
            row = next;
        }
    }

    #[test]
    fn frobenius_and_affine() {
        assert!(!frobenius_even(2, 2));
        assert!(!frobenius_even(7, 2));
        assert!(frobenius_even(5, 2));
        assert!(affine_even(3, 2));
        assert!(!affine_even(1, 2));
        assert!(!affine_even(2, 3));
    }

    #[test]
    fn projective_examples() {
        assert_eq!(projective_parity(2, 5, ProjectiveWhich::PglGroup).unwrap().value, 1);
        assert_eq!(projective_parity(3, 2, ProjectiveWhich::PglGroup).unwrap().value, 0);
        let fa = projective_parity(3, 9, ProjectiveWhich::FieldAut { alpha_parity: 1 }).unwrap();
        assert_eq!(fa.value, 1);
    }

    #[test]
    fn wreath_examples() {
        let top = |m, l, kind| wreath_parity_law(m, l, WreathElement::Top { par_beta: 1 }, kind).unwrap().value;
        assert_eq!(top(3, 2, WreathKind::Imprimitive), 1);
        assert_eq!(top(3, 2, WreathKind::Product), 1);
        let base = wreath_parity_law(2, 3, WreathElement::Base { par_a: 1 }, WreathKind::Product).unwrap();
        assert_eq!(base.value, 0);
    }

    #[test]
    fn table_rows() {
        assert_eq!(even_part_table_row(3, 2, 2), EvenPartRecipe::PslPi2GPi);
        assert_eq!(even_part_from_laws(3, 2, 2).unwrap(), EvenPartRecipe::PslG2Pi2GPi);
        assert_eq!(even_part_from_laws(2, 3, 2).unwrap(), EvenPartRecipe::Pgammal);
        assert_eq!(even_part_from_laws(2, 2, 3).unwrap(), EvenPartRecipe::PglPi2);
    }
}
