//! Todd-Coxeter coset enumeration, HLT strategy with row filling and
//! union-find coincidence handling.

use std::collections::VecDeque;

use num_traits::{Signed, ToPrimitive};

use super::presentation::GroupPresentation;
use super::word::Word;
use super::Error;

/// Default ceiling on the number of cosets defined during enumeration.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// Cap on the letter length of a single traced word.
const MAX_WORD_LETTERS: usize = 1 << 20;

/// Outcome of a coset enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableStatus {
    /// Finished table: one row per coset, columns alternating generator
    /// action and inverse action, cosets numbered canonically by breadth
    /// first search from coset 0.
    Complete { rows: Vec<Vec<u32>> },
    /// The enumeration stopped after defining `bound` cosets without
    /// closing; the subgroup index stays undetermined.
    Overflowed { bound: usize },
}

/// A coset table for a subgroup of a finitely presented group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    status: TableStatus,
}

impl CosetTable {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn status(&self) -> &TableStatus {
        &self.status
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.status, TableStatus::Complete { .. })
    }

    /// Subgroup index when the enumeration completed.
    pub fn index(&self) -> Option<usize> {
        match &self.status {
            TableStatus::Complete { rows } => Some(rows.len()),
            TableStatus::Overflowed { .. } => None,
        }
    }

    /// Table rows of a complete enumeration.
    pub fn rows(&self) -> Option<&[Vec<u32>]> {
        match &self.status {
            TableStatus::Complete { rows } => Some(rows),
            TableStatus::Overflowed { .. } => None,
        }
    }

    /// Right action of generator `i` on cosets, as an image vector.
    pub fn generator_permutation(&self, i: usize) -> Option<Vec<u32>> {
        self.rows().map(|rows| rows.iter().map(|r| r[2 * i]).collect())
    }

    /// Traces a word from a coset through a complete table.
    pub fn trace(&self, start: u32, word: &Word) -> Option<u32> {
        let rows = self.rows()?;
        let cols = to_columns(word, &self.generators).ok()?;
        let mut x = start;
        for c in cols {
            x = rows[x as usize][c];
        }
        Some(x)
    }
}

/// Flattens a word into table column indices: generator `i` acts through
/// column `2i`, its inverse through column `2i + 1`.
fn to_columns(word: &Word, gens: &[String]) -> Result<Vec<usize>, Error> {
    let mut out = Vec::new();
    for syl in word.syllables() {
        let gi = gens
            .iter()
            .position(|g| *g == syl.gen)
            .ok_or_else(|| Error::UnknownGenerator(syl.gen.clone()))?;
        let count = syl.exp.abs().to_usize().ok_or(Error::ExponentOverflow)?;
        if out.len() + count > MAX_WORD_LETTERS {
            return Err(Error::ExponentOverflow);
        }
        let col = if syl.exp.is_positive() { 2 * gi } else { 2 * gi + 1 };
        out.extend(std::iter::repeat(col).take(count));
    }
    Ok(out)
}

struct Enumerator {
    /// Row per defined coset; dead rows are drained by coincidence merges.
    table: Vec<Vec<Option<u32>>>,
    /// Union-find parents; the representative of a class is its minimum,
    /// so coset 0 always survives merging.
    parent: Vec<u32>,
    pending: VecDeque<(u32, u32)>,
    live: usize,
    ncols: usize,
    max: usize,
    hit_bound: bool,
}

impl Enumerator {
    fn rep(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.table.len() >= self.max {
            self.hit_bound = true;
            return None;
        }
        let id = self.table.len() as u32;
        self.table.push(vec![None; self.ncols]);
        self.parent.push(id);
        self.live += 1;
        Some(id)
    }

    /// Records `a * col = b` plus the inverse entry. A conflicting existing
    /// entry becomes a pending coincidence instead of an overwrite.
    fn deduce(&mut self, a: u32, c: usize, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        match self.table[a as usize][c] {
            Some(e) => {
                let e = self.rep(e);
                if e != b {
                    self.pending.push_back((e, b));
                }
                return;
            }
            None => self.table[a as usize][c] = Some(b),
        }
        match self.table[b as usize][c ^ 1] {
            Some(f) => {
                let f = self.rep(f);
                if f != a {
                    self.pending.push_back((f, a));
                }
            }
            None => self.table[b as usize][c ^ 1] = Some(a),
        }
    }

    /// Merges pending coincident cosets, transplanting the dead row's
    /// entries and queueing any conflicts they reveal.
    fn process(&mut self) {
        while let Some((x, y)) = self.pending.pop_front() {
            let x = self.rep(x);
            let y = self.rep(y);
            if x == y {
                continue;
            }
            let (keep, kill) = if x < y { (x, y) } else { (y, x) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            for c in 0..self.ncols {
                if let Some(d) = self.table[kill as usize][c].take() {
                    self.deduce(keep, c, d);
                }
            }
        }
    }

    /// Traces `word` from `start` until the cycle closes, filling a single
    /// gap by deduction and longer gaps by defining new cosets.
    fn scan_and_fill(&mut self, start: u32, word: &[usize]) {
        loop {
            if self.hit_bound {
                return;
            }
            let start = self.rep(start);
            let mut f = start;
            let mut i = 0;
            while i < word.len() {
                match self.table[f as usize][word[i]] {
                    Some(n) => {
                        f = self.rep(n);
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == word.len() {
                if f != start {
                    self.pending.push_back((f, start));
                    self.process();
                }
                return;
            }
            let mut b = start;
            let mut j = word.len();
            while j > i {
                match self.table[b as usize][word[j - 1] ^ 1] {
                    Some(n) => {
                        b = self.rep(n);
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                if f != b {
                    self.pending.push_back((f, b));
                    self.process();
                }
                return;
            }
            if j == i + 1 {
                self.deduce(f, word[i], b);
                self.process();
                return;
            }
            match self.new_coset() {
                // A fresh coset cannot conflict, so no processing is due.
                Some(n) => self.deduce(f, word[i], n),
                None => return,
            }
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgens` inside the
/// presented group, defining at most `max_cosets` cosets.
///
/// Overflow is a first-class outcome, not an error; errors are reserved for
/// invalid input (a zero bound, unknown generators, untraceable exponents).
pub fn coset_enumeration(
    p: &GroupPresentation,
    subgens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, Error> {
    if max_cosets == 0 {
        return Err(Error::ZeroBound);
    }
    let gens = p.generators();
    let relators: Vec<Vec<usize>> =
        p.relators().iter().map(|w| to_columns(w, gens)).collect::<Result<_, _>>()?;
    let subgen_cols: Vec<Vec<usize>> =
        subgens.iter().map(|w| to_columns(w, gens)).collect::<Result<_, _>>()?;

    let mut en = Enumerator {
        table: Vec::new(),
        parent: Vec::new(),
        pending: VecDeque::new(),
        live: 0,
        ncols: gens.len() * 2,
        max: max_cosets,
        hit_bound: false,
    };
    en.new_coset().expect("bound is at least 1");

    for w in &subgen_cols {
        en.scan_and_fill(0, w);
    }
    let mut alpha: u32 = 0;
    while (alpha as usize) < en.table.len() && !en.hit_bound {
        if en.rep(alpha) != alpha {
            alpha += 1;
            continue;
        }
        for r in &relators {
            en.scan_and_fill(alpha, r);
            if en.hit_bound || en.rep(alpha) != alpha {
                break;
            }
        }
        if en.hit_bound || en.rep(alpha) != alpha {
            alpha += 1;
            continue;
        }
        for c in 0..en.ncols {
            if en.table[alpha as usize][c].is_none() {
                match en.new_coset() {
                    Some(n) => en.deduce(alpha, c, n),
                    None => break,
                }
            }
        }
        alpha += 1;
    }

    if en.hit_bound {
        return Ok(CosetTable {
            generators: gens.to_vec(),
            status: TableStatus::Overflowed { bound: max_cosets },
        });
    }

    // Resolve every union-find pointer so lookups below are pure.
    for x in 0..en.table.len() {
        let r = en.rep(x as u32);
        en.parent[x] = r;
    }

    // Canonical numbering: breadth first search from coset 0, columns in
    // declaration order. This makes the table independent of definition
    // history.
    let ncols = en.ncols;
    let mut map: Vec<Option<u32>> = vec![None; en.table.len()];
    let mut order: Vec<u32> = vec![0];
    map[0] = Some(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head] as usize;
        head += 1;
        for c in 0..ncols {
            let raw = en.table[x][c].expect("closed table has no gaps");
            let y = en.parent[raw as usize] as usize;
            if map[y].is_none() {
                map[y] = Some(order.len() as u32);
                order.push(y as u32);
            }
        }
    }
    debug_assert_eq!(order.len(), en.live, "every live coset is reachable");
    let rows: Vec<Vec<u32>> = order
        .iter()
        .map(|&x| {
            (0..ncols)
                .map(|c| {
                    let raw = en.table[x as usize][c].expect("closed table has no gaps");
                    map[en.parent[raw as usize] as usize].expect("reachable")
                })
                .collect()
        })
        .collect();
    Ok(CosetTable { generators: gens.to_vec(), status: TableStatus::Complete { rows } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> GroupPresentation {
        GroupPresentation::parse(text).unwrap()
    }

    fn enumerate(p: &GroupPresentation, subgens: &[&str]) -> CosetTable {
        let subgens: Vec<Word> = subgens.iter().map(|w| Word::parse(w).unwrap()).collect();
        coset_enumeration(p, &subgens, DEFAULT_MAX_COSETS).unwrap()
    }

    #[test]
    fn cyclic_six_has_order_six() {
        let t = enumerate(&pres("gens: a\nrel: a^6"), &[]);
        assert_eq!(t.index(), Some(6));
    }

    #[test]
    fn symmetric_three_subgroup_index() {
        let p = pres("gens: a b\nrel: a^3\nrel: b^2\nrel: a b a b");
        assert_eq!(enumerate(&p, &["b"]).index(), Some(3));
        assert_eq!(enumerate(&p, &["a"]).index(), Some(2));
        assert_eq!(enumerate(&p, &[]).index(), Some(6));
    }

    #[test]
    fn quaternion_order_eight() {
        let p = pres("gens: a b\nrel: a^4\nrel: b^2 a^-2\nrel: b^-1 a b a");
        assert_eq!(enumerate(&p, &[]).index(), Some(8));
    }

    #[test]
    fn klein_four_over_generator() {
        let p = pres("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b");
        assert_eq!(enumerate(&p, &["a"]).index(), Some(2));
    }

    #[test]
    fn free_group_overflows() {
        let p = pres("gens: a b");
        let t = coset_enumeration(&p, &[], 100).unwrap();
        assert_eq!(*t.status(), TableStatus::Overflowed { bound: 100 });
        assert_eq!(t.index(), None);
    }

    #[test]
    fn zero_bound_is_rejected() {
        let p = pres("gens: a\nrel: a^2");
        assert_eq!(coset_enumeration(&p, &[], 0), Err(Error::ZeroBound));
    }

    #[test]
    fn relators_close_on_every_coset() {
        let p = pres("gens: a b\nrel: a^3\nrel: b^2\nrel: a b a b");
        let t = enumerate(&p, &[]);
        let n = t.index().unwrap() as u32;
        for rel in p.relators() {
            for start in 0..n {
                assert_eq!(t.trace(start, rel), Some(start));
            }
        }
    }

    #[test]
    fn subgroup_generators_fix_coset_zero() {
        let p = pres("gens: a b\nrel: a^3\nrel: b^2\nrel: a b a b");
        let t = enumerate(&p, &["a b"]);
        assert_eq!(t.trace(0, &Word::parse("a b").unwrap()), Some(0));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let p = pres("gens: a b\nrel: a^4\nrel: b^2 a^-2\nrel: b^-1 a b a");
        assert_eq!(enumerate(&p, &[]), enumerate(&p, &[]));
    }

    #[test]
    fn no_generators_gives_trivial_table() {
        let t = enumerate(&pres("gens:"), &[]);
        assert_eq!(t.index(), Some(1));
    }
}
