//! Abelianization of a finitely presented group via Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::GroupPresentation;
use super::snf::smith_normal_form;

/// Invariant factors of the abelianization: torsion factors greater than 1
/// in divisibility order, followed by one zero per free `Z` summand. The
/// trivial group is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub factors: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of `Z` summands.
    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|f| f.is_zero()).count()
    }

    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().filter(|f| !f.is_zero())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self.torsion().map(|t| format!("Z/{t}")).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Computes the abelianization of a presentation.
///
/// The relation matrix has one row per relator and one column per generator
/// holding exponent sums; invariant factors come from its Smith normal form.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let gens = p.generators();
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(p.relators().len());
    for rel in p.relators() {
        let sums = rel.exponent_sums();
        mat.push(gens.iter().map(|g| sums.get(g).cloned().unwrap_or_else(BigInt::zero)).collect());
    }
    if mat.is_empty() {
        // No relators: free abelianization of full rank.
        return AbelianInvariants { factors: vec![BigInt::zero(); gens.len()] };
    }
    let diag = smith_normal_form(&mat);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let mut factors: Vec<BigInt> =
        diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    factors.extend(std::iter::repeat_with(BigInt::zero).take(gens.len() - nonzero));
    AbelianInvariants { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> GroupPresentation {
        GroupPresentation::parse(text).unwrap()
    }

    #[test]
    fn cyclic_group() {
        let inv = abelianization(&pres("gens: a\nrel: a^6"));
        assert_eq!(inv.factors, vec![BigInt::from(6)]);
        assert_eq!(inv.to_string(), "Z/6");
    }

    #[test]
    fn free_group_abelianizes_to_free_abelian() {
        let inv = abelianization(&pres("gens: a b"));
        assert_eq!(inv.factors, vec![BigInt::zero(), BigInt::zero()]);
        assert_eq!(inv.free_rank(), 2);
        assert_eq!(inv.to_string(), "Z^2");
    }

    #[test]
    fn torsion_and_free_part_mix() {
        let inv = abelianization(&pres("gens: a b c\nrel: a^2\nrel: b^4"));
        assert_eq!(inv.factors, vec![BigInt::from(2), BigInt::from(4), BigInt::zero()]);
        assert_eq!(inv.to_string(), "Z/2 + Z/4 + Z");
    }

    #[test]
    fn surface_relator_kills_nothing() {
        let inv = abelianization(&pres("gens: a b\nrel: a b a^-1 b^-1"));
        assert_eq!(inv.free_rank(), 2);
        assert!(inv.torsion().next().is_none());
    }

    #[test]
    fn trivializing_relators() {
        let inv = abelianization(&pres("gens: a b\nrel: a b^-2\nrel: b a^-2"));
        // a = b^2, b = a^2 abelianized gives Z/3.
        assert_eq!(inv.factors, vec![BigInt::from(3)]);
    }
}
