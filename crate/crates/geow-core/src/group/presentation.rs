//! Finitely presented groups and their text format.

use std::collections::BTreeSet;
use std::fmt;

use super::word::Word;
use super::Error;

/// A finite presentation: ordered generators and a list of relators, each a
/// freely reduced word over the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    /// Validates that generator names are unique and every relator is
    /// supported on the generators.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        for rel in &relators {
            check_support(rel, &seen)?;
        }
        Ok(GroupPresentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Appends a relator, validating its support.
    pub fn push_relator(&mut self, rel: Word) -> Result<(), Error> {
        let seen: BTreeSet<String> = self.generators.iter().cloned().collect();
        check_support(&rel, &seen)?;
        self.relators.push(rel);
        Ok(())
    }

    /// Parses the presentation text format: a `gens:` line of generator
    /// names followed by one `rel:` line per relator. Blank lines are
    /// skipped.
    ///
    /// ```text
    /// gens: a b
    /// rel: a^3
    /// rel: b^2
    /// rel: a b a b
    /// ```
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if generators.is_some() {
                    return Err(Error::PresentationSyntax {
                        line: lineno,
                        msg: "second gens: line".to_string(),
                    });
                }
                generators = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                if generators.is_none() {
                    return Err(Error::PresentationSyntax {
                        line: lineno,
                        msg: "rel: before gens:".to_string(),
                    });
                }
                let word = Word::parse(rest).map_err(|e| Error::PresentationSyntax {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                relators.push(word);
            } else {
                return Err(Error::PresentationSyntax {
                    line: lineno,
                    msg: "expected gens: or rel:".to_string(),
                });
            }
        }
        let generators = generators.ok_or(Error::PresentationSyntax {
            line: 0,
            msg: "missing gens: line".to_string(),
        })?;
        GroupPresentation::new(generators, relators)
    }
}

fn check_support(rel: &Word, gens: &BTreeSet<String>) -> Result<(), Error> {
    for syl in rel.syllables() {
        if !gens.contains(&syl.gen) {
            return Err(Error::UnknownGenerator(syl.gen.clone()));
        }
    }
    Ok(())
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for rel in &self.relators {
            writeln!(f, "rel: {rel}")?;
        }
        Ok(())
    }
}

/// Parses a file of words, one per line, blank lines skipped. Used for
/// subgroup generator lists.
pub fn parse_words(text: &str) -> Result<Vec<Word>, Error> {
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let word = Word::parse(line).map_err(|e| Error::PresentationSyntax {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        words.push(word);
    }
    Ok(words)
}
