//! Freely reduced words over named generators, run-length encoded with
//! arbitrary-precision exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Error;

/// One maximal run `gen^exp` in a word. `exp` is never zero in a stored word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: String,
    pub exp: BigInt,
}

impl Syllable {
    pub fn new(gen: impl Into<String>, exp: impl Into<BigInt>) -> Self {
        Syllable { gen: gen.into(), exp: exp.into() }
    }
}

/// A freely reduced word. Adjacent syllables always have distinct generators
/// and no syllable has exponent zero; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Freely reduces a syllable sequence: merges adjacent runs of the same
/// generator and drops runs whose exponents cancel.
pub fn free_reduce(syllables: impl IntoIterator<Item = Syllable>) -> Word {
    let mut stack: Vec<Syllable> = Vec::new();
    for syl in syllables {
        if syl.exp.is_zero() {
            continue;
        }
        match stack.last_mut() {
            Some(top) if top.gen == syl.gen => {
                top.exp += syl.exp;
                if top.exp.is_zero() {
                    stack.pop();
                }
            }
            _ => stack.push(syl),
        }
    }
    Word { syllables: stack }
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// A single generator to the first power.
    pub fn gen(name: impl Into<String>) -> Self {
        Word::gen_pow(name, 1)
    }

    /// A single generator to an arbitrary power.
    pub fn gen_pow(name: impl Into<String>, exp: impl Into<BigInt>) -> Self {
        free_reduce([Syllable::new(name, exp)])
    }

    pub fn from_syllables(syllables: impl IntoIterator<Item = Syllable>) -> Self {
        free_reduce(syllables)
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Word length counted in single letters: the sum of |exponent|.
    pub fn len_letters(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exp.abs()).sum()
    }

    /// Total exponent of each generator appearing in the word.
    pub fn exponent_sums(&self) -> BTreeMap<String, BigInt> {
        let mut sums: BTreeMap<String, BigInt> = BTreeMap::new();
        for syl in &self.syllables {
            let entry = sums.entry(syl.gen.clone()).or_insert_with(BigInt::zero);
            *entry += &syl.exp;
        }
        sums.retain(|_, v| !v.is_zero());
        sums
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.syllables.iter().chain(other.syllables.iter()).cloned())
    }

    /// The inverse word: syllables reversed with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.gen.clone(), -&s.exp))
                .collect(),
        }
    }

    /// Integer power by repeated concatenation. Single-syllable words take a
    /// shortcut through exponent multiplication.
    pub fn pow(&self, n: i64) -> Word {
        if n == 0 || self.is_identity() {
            return Word::identity();
        }
        if self.syllables.len() == 1 {
            let s = &self.syllables[0];
            return Word::gen_pow(s.gen.clone(), &s.exp * BigInt::from(n));
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The commutator `self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse()).concat(&other.inverse())
    }

    /// Rewrites each generator through `lookup` and reduces the result.
    /// Returns `None` when a generator is missing from the dictionary or an
    /// exponent does not fit a machine integer.
    pub fn substitute<F>(&self, mut lookup: F) -> Option<Word>
    where
        F: FnMut(&str) -> Option<Word>,
    {
        let mut out = Word::identity();
        for syl in &self.syllables {
            let image = lookup(&syl.gen)?;
            let exp: i64 = (&syl.exp).try_into().ok()?;
            out = out.concat(&image.pow(exp));
        }
        Some(out)
    }

    /// Expands the word into single letters `(generator, is_positive)`.
    /// Returns `None` when the expansion would exceed `cap` letters.
    pub fn letters(&self, cap: usize) -> Option<Vec<(&str, bool)>> {
        if self.len_letters() > BigInt::from(cap) {
            return None;
        }
        let mut out = Vec::new();
        for syl in &self.syllables {
            let count = syl.exp.abs().try_into().ok()?;
            let positive = syl.exp.is_positive();
            for _ in 0usize..count {
                out.push((syl.gen.as_str(), positive));
            }
        }
        Some(out)
    }

    /// Parses whitespace-separated syllables: `a`, `a^3`, `a^-2`, or the
    /// lone token `1` for the identity.
    pub fn parse(text: &str) -> Result<Word, Error> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(Word::identity());
        }
        let mut syllables = Vec::new();
        for tok in tokens {
            let (name, exp) = match tok.split_once('^') {
                None => (tok, BigInt::from(1)),
                Some((name, exp_text)) => {
                    let exp = exp_text
                        .parse::<BigInt>()
                        .map_err(|_| Error::WordSyntax(format!("bad exponent in `{tok}`")))?;
                    (name, exp)
                }
            };
            if !is_generator_name(name) {
                return Err(Error::WordSyntax(format!("bad generator name in `{tok}`")));
            }
            syllables.push(Syllable::new(name, exp));
        }
        Ok(free_reduce(syllables))
    }
}

fn is_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for syl in &self.syllables {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if syl.exp == BigInt::from(1) {
                write!(f, "{}", syl.gen)?;
            } else {
                write!(f, "{}^{}", syl.gen, syl.exp)?;
            }
        }
        Ok(())
    }
}

/// Checks whether `w` has the exponent profile of a product of `genus`
/// commutators: every generator has exponent sum zero. With
/// `require_literal`, additionally demands the literal reduced shape
/// `[x1,y1] [x2,y2] ...` up to cyclic rotation: exactly `4 * genus`
/// letters forming blocks `x y x^-1 y^-1` with `x != y`.
pub fn commutator_pattern_check(w: &Word, genus: u64, require_literal: bool) -> bool {
    if !w.exponent_sums().is_empty() {
        return false;
    }
    if !require_literal {
        return true;
    }
    let Ok(expect) = usize::try_from(4 * genus) else {
        return false;
    };
    if expect == 0 {
        return w.is_identity();
    }
    let Some(letters) = w.letters(10_000) else {
        return false;
    };
    if letters.len() != expect {
        return false;
    }
    'rotation: for shift in 0..letters.len() {
        for block in 0..(expect / 4) {
            let at = |i: usize| letters[(shift + block * 4 + i) % letters.len()];
            let (x, xs) = at(0);
            let (y, ys) = at(1);
            let (xi, xis) = at(2);
            let (yi, yis) = at(3);
            let ok = x == xi && y == yi && x != y && xs && ys && !xis && !yis;
            if !ok {
                continue 'rotation;
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    #[test]
    fn reduction_merges_and_cancels() {
        assert_eq!(w("a a a"), w("a^3"));
        assert_eq!(w("a b b^-1 a^-1"), Word::identity());
        assert_eq!(w("a^2 a^-1 b"), w("a b"));
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(Word::parse("a^").is_err());
        assert!(Word::parse("3a").is_err());
        assert!(Word::parse("a^b").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["1", "a", "a^-2 b c^5", "x_1 x_2^-1"] {
            let word = w(text);
            assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
        }
    }

    #[test]
    fn inverse_cancels() {
        let word = w("a^3 b^-2 c");
        assert!(word.concat(&word.inverse()).is_identity());
        assert!(word.inverse().concat(&word).is_identity());
    }

    #[test]
    fn pow_matches_repeated_concat() {
        let word = w("a b^-1");
        let mut acc = Word::identity();
        for _ in 0..4 {
            acc = acc.concat(&word);
        }
        assert_eq!(word.pow(4), acc);
        assert_eq!(word.pow(-4), acc.inverse());
        assert_eq!(w("a^2").pow(3), w("a^6"));
    }

    #[test]
    fn exponent_sums_ignore_order() {
        let sums = w("a b a^-3 b^2").exponent_sums();
        assert_eq!(sums["a"], BigInt::from(-2));
        assert_eq!(sums["b"], BigInt::from(3));
        assert!(w("a b a^-1 b^-1").exponent_sums().is_empty());
    }

    #[test]
    fn commutator_pattern_literal() {
        assert!(commutator_pattern_check(&w("a b a^-1 b^-1"), 1, true));
        assert!(commutator_pattern_check(&w("a b a^-1 b^-1 c d c^-1 d^-1"), 2, true));
        // Cyclic rotation of a commutator still matches.
        assert!(commutator_pattern_check(&w("b a^-1 b^-1 a"), 1, true));
        assert!(!commutator_pattern_check(&w("a b a^-1 b^-1"), 2, true));
        assert!(!commutator_pattern_check(&w("a^2 b^-2"), 1, true));
        assert!(!commutator_pattern_check(&w("a a a^-1 a^-1"), 1, true));
    }

    #[test]
    fn commutator_pattern_exponent_only() {
        assert!(commutator_pattern_check(&w("a^2 b a^-2 b^-1"), 1, false));
        assert!(!commutator_pattern_check(&w("a^2 b"), 1, false));
    }

    /// Oracle: free reduction over single letters as a stack of
    /// (generator, sign) pairs.
    fn naive_reduce(letters: &[(String, bool)]) -> Vec<(String, bool)> {
        let mut stack: Vec<(String, bool)> = Vec::new();
        for (g, s) in letters {
            match stack.last() {
                Some((tg, ts)) if tg == g && ts != s => {
                    stack.pop();
                }
                _ => stack.push((g.clone(), *s)),
            }
        }
        stack
    }

    fn letter_strategy() -> impl Strategy<Value = (String, bool)> {
        ("[abc]".prop_map(String::from), any::<bool>())
    }

    proptest! {
        #[test]
        fn reduction_matches_letter_oracle(letters in prop::collection::vec(letter_strategy(), 0..40)) {
            let word = free_reduce(letters.iter().map(|(g, s)| {
                Syllable::new(g.clone(), if *s { 1 } else { -1 })
            }));
            let expect = naive_reduce(&letters);
            let got = word.letters(1_000).unwrap();
            let got: Vec<(String, bool)> = got.into_iter().map(|(g, s)| (g.to_string(), s)).collect();
            prop_assert_eq!(got, expect);
        }

        #[test]
        fn concat_is_associative(
            a in prop::collection::vec(letter_strategy(), 0..12),
            b in prop::collection::vec(letter_strategy(), 0..12),
            c in prop::collection::vec(letter_strategy(), 0..12),
        ) {
            let mk = |ls: &[(String, bool)]| {
                free_reduce(ls.iter().map(|(g, s)| Syllable::new(g.clone(), if *s { 1 } else { -1 })))
            };
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        }
    }
}
