//! Builtin presentations and word catalogs used by the block library and
//! the recipe evaluator.

use std::fmt::Write as _;

use super::presentation::GroupPresentation;
use super::word::Word;
use super::Error;

fn pres(text: &str) -> GroupPresentation {
    GroupPresentation::parse(text).expect("builtin presentation parses")
}

fn w(text: &str) -> Word {
    Word::parse(text).expect("builtin word parses")
}

fn comm(x: &Word, y: &Word) -> Word {
    x.commutator(y)
}

/// Z/n as a one-generator presentation.
pub fn cyclic(n: u64) -> GroupPresentation {
    pres(&format!("gens: a\nrel: a^{n}"))
}

pub fn klein_four() -> GroupPresentation {
    pres("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b")
}

pub fn symmetric_3() -> GroupPresentation {
    pres("gens: a b\nrel: a^3\nrel: b^2\nrel: a b a b")
}

pub fn quaternion_8() -> GroupPresentation {
    pres("gens: a b\nrel: a^4\nrel: b^2 a^-2\nrel: b^-1 a b a")
}

pub fn alternating_4() -> GroupPresentation {
    pres("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b a b")
}

/// Fundamental group of the closed orientable genus `g` surface.
pub fn surface_group(g: u64) -> GroupPresentation {
    let mut gens = String::from("gens:");
    for i in 1..=g {
        let _ = write!(gens, " a{i} b{i}");
    }
    let mut relator = Word::identity();
    for i in 1..=g {
        relator = relator.concat(&comm(&Word::gen(format!("a{i}")), &Word::gen(format!("b{i}"))));
    }
    let p = pres(&gens);
    let mut p = p;
    if g > 0 {
        p.push_relator(relator).expect("relator is supported");
    }
    p
}

/// Z^k presented by commuting generators.
pub fn free_abelian(k: u64) -> GroupPresentation {
    let gens: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            relators.push(comm(&Word::gen(gens[i].clone()), &Word::gen(gens[j].clone())));
        }
    }
    GroupPresentation::new(gens, relators).expect("builtin presentation is valid")
}

/// Fundamental group of the torus-surgered product of a genus 2 and a
/// genus `n` surface, with multiplicity `m` on the final surgery. Its
/// abelianization is trivial for every `n >= 2` and `m >= 1`.
pub fn yn_presentation(n: u64, m: i64) -> Result<GroupPresentation, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("yn needs n >= 2".to_string()));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("yn needs m >= 1".to_string()));
    }
    let mut gens: Vec<String> = ["a1", "a2", "b1", "b2"].map(String::from).to_vec();
    for i in 1..=n {
        gens.push(format!("c{i}"));
    }
    for i in 1..=n {
        gens.push(format!("d{i}"));
    }
    let g = |name: &str| Word::gen(name.to_string());
    let (a1, a2, b1, b2) = (g("a1"), g("a2"), g("b1"), g("b2"));
    let (c1, c2, d1, d2) = (g("c1"), g("c2"), g("d1"), g("d2"));
    let mut relators = vec![
        comm(&b1.inverse(), &d1.inverse()).concat(&a1.inverse()),
        comm(&a1.inverse(), &d1).concat(&b1.inverse()),
        comm(&b2.inverse(), &d2.inverse()).concat(&a2.inverse()),
        comm(&a2.inverse(), &d2).concat(&b2.inverse()),
        comm(&d1.inverse(), &b2.inverse()).concat(&c1.inverse()),
        comm(&c1.inverse(), &b2).concat(&d1.inverse()),
        comm(&d2.inverse(), &b1.inverse()).concat(&c2.inverse()),
        comm(&c2.inverse(), &b1).pow(m).concat(&d2.inverse()),
        comm(&a1, &c1),
        comm(&a1, &c2),
        comm(&a1, &d2),
        comm(&b1, &c1),
        comm(&a2, &c1),
        comm(&a2, &c2),
        comm(&a2, &d1),
        comm(&b2, &c2),
        comm(&a1, &b1).concat(&comm(&a2, &b2)),
    ];
    let mut product = Word::identity();
    for j in 1..=n {
        product = product.concat(&comm(&g(&format!("c{j}")), &g(&format!("d{j}"))));
    }
    relators.push(product);
    for j in 3..=n {
        let (cj, dj) = (g(&format!("c{j}")), g(&format!("d{j}")));
        relators.push(comm(&a1.inverse(), &dj.inverse()).concat(&cj.inverse()));
        relators.push(comm(&a2.inverse(), &cj.inverse()).concat(&dj.inverse()));
        relators.push(comm(&b1, &cj));
        relators.push(comm(&b2, &dj));
    }
    GroupPresentation::new(gens, relators)
}

/// Fundamental group of the torus-surgered product of a genus `n` surface
/// and a torus, with multiplicity `m` on the final surgery. Its
/// abelianization is Z^2 for every `n >= 2` and `m >= 1`.
pub fn yn1_presentation(n: u64, m: i64) -> Result<GroupPresentation, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("yn1 needs n >= 2".to_string()));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("yn1 needs m >= 1".to_string()));
    }
    let mut gens: Vec<String> = Vec::new();
    for i in 1..=n {
        gens.push(format!("a{i}"));
    }
    for i in 1..=n {
        gens.push(format!("b{i}"));
    }
    gens.push("c".to_string());
    gens.push("d".to_string());
    let g = |name: String| Word::gen(name);
    let (c, d) = (g("c".to_string()), g("d".to_string()));
    let bn = g(format!("b{n}"));
    let mut relators = Vec::new();
    for i in 1..n {
        let (ai, bi) = (g(format!("a{i}")), g(format!("b{i}")));
        relators.push(comm(&bi.inverse(), &d.inverse()).concat(&ai.inverse()));
        relators.push(comm(&ai.inverse(), &d).concat(&bi.inverse()));
    }
    relators.push(comm(&d.inverse(), &bn.inverse()).concat(&c.inverse()));
    relators.push(comm(&c.inverse(), &bn).pow(-m).concat(&d.inverse()));
    for i in 1..=n {
        relators.push(comm(&g(format!("a{i}")), &c));
    }
    for i in 1..n {
        relators.push(comm(&g(format!("b{i}")), &c));
    }
    relators.push(comm(&g(format!("a{n}")), &d));
    let mut product = Word::identity();
    for i in 1..=n {
        product = product.concat(&comm(&g(format!("a{i}")), &g(format!("b{i}"))));
    }
    relators.push(product);
    relators.push(comm(&c, &d));
    GroupPresentation::new(gens, relators)
}

/// Resolves a presentation reference of the form `t4`, `surface(g)`,
/// `yn(n,m)`, or `yn1(n,m)`.
pub fn resolve_ref(text: &str) -> Result<GroupPresentation, Error> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("unknown presentation ref `{text}`"));
    let (name, args) = match text.split_once('(') {
        None => (text, Vec::new()),
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let args: Vec<i64> = inner
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            (name, args)
        }
    };
    match (name, args.as_slice()) {
        ("t4", []) => Ok(free_abelian(4)),
        ("surface", [g]) if *g >= 0 => Ok(surface_group(*g as u64)),
        ("yn", [n, m]) if *n >= 0 => yn_presentation(*n as u64, *m),
        ("yn1", [n, m]) if *n >= 0 => yn1_presentation(*n as u64, *m),
        _ => Err(bad()),
    }
}

/// Named generator words for the fundamental group of an immersed totally
/// geodesic genus 4 curve in a complex ball quotient, over the four
/// ambient lattice generators `a1 a2 a3 j`. Entries `p1` through `p8`
/// generate; `pi1` and `pi2` are the two branch words whose quotient
/// `pi1 pi2^-1` enters the subgroup alongside them.
pub fn ball_quotient_words() -> Vec<(String, Word)> {
    let entries = [
        ("p1", "a2^3 a1^-1 a3^-1 j^8 a2^-2 a1^-1 j^4"),
        ("p2", "a3^3 a1 a3^2 a2 a1 j^4 a3^-1 j^8 a3^-2 a1^-1 a3^-3"),
        ("p3", "j^8 a1^-1 a3^-3 a2^2 j^4 a3^-2 a1^-1 a3^-3"),
        ("p4", "j^8 a2 a1 a2^-2 a1^-1 j^4 a3^3 a1^2 a2^-1"),
        ("p5", "a3^3 a1 a3^2 j^4 a1^-1 j^8 a3^2 a1 a2^-3"),
        ("p6", "a3^3 a1 a2 a1 a3 a2^-3"),
        ("p7", "a3^3 a1 j^8 a1 a2^-2 a1^-1 a3^2 j^4"),
        ("p8", "j^4 a3^-2 j^8 a2 a1 a2 a1 a2^-2"),
        ("pi1", "a3^3 a1 a2^-1"),
        ("pi2", "a2 a1^-2 a3^-1 a1 a3^-1 a1^-1 a2^-2"),
    ];
    entries.map(|(name, text)| (name.to_string(), w(text))).to_vec()
}

/// The single defining relation of the normalized genus 4 curve, as a word
/// in the letters `p1` through `p8`. Its exponent sums all vanish and its
/// letter length is 16, the length of a genus 4 surface relation.
pub fn ball_quotient_relation() -> Word {
    w("p5^-1 p2^-1 p5 p1 p3 p8^-1 p4 p1^-1 p7^-1 p6^-1 p7 p2 p3^-1 p8 p4^-1 p6")
}

/// Small groups with known order and quotient tag, for exercising coset
/// enumeration end to end: (presentation, order, tag).
pub fn known_order_cases() -> Vec<(GroupPresentation, usize, &'static str)> {
    vec![
        (cyclic(3), 3, "Z3"),
        (cyclic(4), 4, "Z4"),
        (klein_four(), 4, "Z2xZ2"),
        (symmetric_3(), 6, "S3"),
        (quaternion_8(), 8, "Q8"),
        (alternating_4(), 12, "A4"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::abelian::abelianization;
    use crate::group::word::commutator_pattern_check;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn surgered_product_presentations_abelianize() {
        for n in 2..=4 {
            for m in [1, 2, 5] {
                let p = yn_presentation(n, m).unwrap();
                assert!(abelianization(&p).is_trivial(), "n={n} m={m}");
                let p1 = yn1_presentation(n, m).unwrap();
                let inv = abelianization(&p1);
                assert_eq!(inv.free_rank(), 2, "n={n} m={m}");
                assert!(inv.torsion().next().is_none(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(yn_presentation(1, 1).is_err());
        assert!(yn_presentation(2, 0).is_err());
        assert!(yn1_presentation(1, 1).is_err());
    }

    #[test]
    fn surface_group_abelianization_is_even_free() {
        let inv = abelianization(&surface_group(4));
        assert_eq!(inv.free_rank(), 8);
        assert!(inv.torsion().next().is_none());
    }

    #[test]
    fn free_abelian_rank() {
        assert_eq!(abelianization(&free_abelian(4)).free_rank(), 4);
    }

    #[test]
    fn resolve_ref_grammar() {
        assert_eq!(resolve_ref("t4").unwrap(), free_abelian(4));
        assert_eq!(resolve_ref("surface(2)").unwrap(), surface_group(2));
        assert_eq!(resolve_ref("yn(2, 1)").unwrap(), yn_presentation(2, 1).unwrap());
        assert_eq!(resolve_ref("yn1(3,2)").unwrap(), yn1_presentation(3, 2).unwrap());
        assert!(resolve_ref("mystery(1)").is_err());
        assert!(resolve_ref("yn(2").is_err());
        assert!(resolve_ref("yn(a,b)").is_err());
    }

    #[test]
    fn ball_quotient_relation_is_homologically_trivial() {
        let rel = ball_quotient_relation();
        assert_eq!(rel.len_letters(), BigInt::from(16));
        assert!(rel.exponent_sums().is_empty());
        assert!(commutator_pattern_check(&rel, 4, false));
        // The relation is not literally a product of four commutators.
        assert!(!commutator_pattern_check(&rel, 4, true));
    }

    #[test]
    fn ball_quotient_expansion_stays_homologically_trivial() {
        let words = ball_quotient_words();
        let lookup = |name: &str| {
            words.iter().find(|(n, _)| n == name).map(|(_, w)| w.clone())
        };
        let expanded = ball_quotient_relation().substitute(lookup).unwrap();
        assert!(expanded.exponent_sums().is_empty());
        assert!(!expanded.is_identity());
    }

    #[test]
    fn ball_quotient_words_are_reduced_and_named() {
        let words = ball_quotient_words();
        assert_eq!(words.len(), 10);
        for (name, word) in &words {
            assert!(!word.is_identity(), "{name}");
            for syl in word.syllables() {
                assert!(["a1", "a2", "a3", "j"].contains(&syl.gen.as_str()), "{name}");
                assert!(!syl.exp.is_zero());
            }
        }
    }
}
