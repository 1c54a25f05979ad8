//! Combinatorial point-line incidence structures.

use std::collections::{BTreeMap, BTreeSet};

use super::CoverError;

/// Named points and lines with an incidence relation.
///
/// Purely combinatorial: no coordinates are stored and realizability over any
/// field is not checked. The only structural constraint is that two lines
/// share at most one point, so that all crossings are simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    points: Vec<String>,
    lines: Vec<String>,
    point_index: BTreeMap<String, usize>,
    line_index: BTreeMap<String, usize>,
    /// (point index, line index) pairs.
    incidence: BTreeSet<(usize, usize)>,
}

impl Arrangement {
    /// Builds an arrangement from name lists and (point, line) incidences.
    pub fn new<P, L>(points: P, lines: L, on: &[(&str, &str)]) -> Result<Self, CoverError>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let lines: Vec<String> = lines.into_iter().map(Into::into).collect();
        let mut point_index = BTreeMap::new();
        let mut line_index = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p.clone()) {
                return Err(CoverError::DuplicateName(p.clone()));
            }
            point_index.insert(p.clone(), i);
        }
        for (j, l) in lines.iter().enumerate() {
            if !seen.insert(l.clone()) {
                return Err(CoverError::DuplicateName(l.clone()));
            }
            line_index.insert(l.clone(), j);
        }
        let mut incidence = BTreeSet::new();
        for (p, l) in on {
            let pi = *point_index
                .get(*p)
                .ok_or_else(|| CoverError::UnknownPoint((*p).to_string()))?;
            let lj = *line_index
                .get(*l)
                .ok_or_else(|| CoverError::UnknownLine((*l).to_string()))?;
            incidence.insert((pi, lj));
        }
        let arr = Arrangement {
            points,
            lines,
            point_index,
            line_index,
            incidence,
        };
        arr.check_simple_crossings()?;
        Ok(arr)
    }

    /// Two lines sharing two or more points would cross non-transversally.
    fn check_simple_crossings(&self) -> Result<(), CoverError> {
        for a in 0..self.lines.len() {
            for b in (a + 1)..self.lines.len() {
                let shared = self
                    .points_on(a)
                    .iter()
                    .filter(|p| self.incident(**p, b))
                    .count();
                if shared > 1 {
                    return Err(CoverError::LinesShareTwoPoints(
                        self.lines[a].clone(),
                        self.lines[b].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Nine points and twelve lines, each line through three points, each
    /// point on four lines. The twelve triples split into four families each
    /// of which partitions the nine points.
    pub fn hesse() -> Arrangement {
        let points: Vec<String> = (1..=9).map(|i| format!("p{i}")).collect();
        let lines: Vec<String> = (1..=12).map(|j| format!("l{j}")).collect();
        const TRIPLES: [[usize; 3]; 12] = [
            [1, 4, 7],
            [2, 5, 8],
            [3, 6, 9],
            [1, 2, 3],
            [4, 5, 6],
            [7, 8, 9],
            [1, 5, 9],
            [3, 5, 7],
            [2, 6, 7],
            [1, 6, 8],
            [2, 4, 9],
            [3, 4, 8],
        ];
        let mut on = Vec::new();
        let mut names = Vec::new();
        for (j, t) in TRIPLES.iter().enumerate() {
            for p in t {
                names.push((format!("p{p}"), format!("l{}", j + 1)));
            }
        }
        for (p, l) in &names {
            on.push((p.as_str(), l.as_str()));
        }
        Arrangement::new(points, lines, &on).expect("builtin incidence table is consistent")
    }

    /// Parses `point NAME`, `line NAME`, and `on POINT LINE...` records, one
    /// per text line. Blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, CoverError> {
        let mut points = Vec::new();
        let mut lines = Vec::new();
        let mut on: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let mut words = raw.split_whitespace();
            let Some(keyword) = words.next() else {
                continue;
            };
            match keyword {
                "point" => match (words.next(), words.next()) {
                    (Some(name), None) => points.push(name.to_string()),
                    _ => {
                        return Err(CoverError::Parse {
                            line: lineno,
                            msg: "expected `point NAME`".into(),
                        })
                    }
                },
                "line" => match (words.next(), words.next()) {
                    (Some(name), None) => lines.push(name.to_string()),
                    _ => {
                        return Err(CoverError::Parse {
                            line: lineno,
                            msg: "expected `line NAME`".into(),
                        })
                    }
                },
                "on" => {
                    let Some(point) = words.next() else {
                        return Err(CoverError::Parse {
                            line: lineno,
                            msg: "expected `on POINT LINE...`".into(),
                        });
                    };
                    let mut any = false;
                    for l in words {
                        on.push((point.to_string(), l.to_string()));
                        any = true;
                    }
                    if !any {
                        return Err(CoverError::Parse {
                            line: lineno,
                            msg: "expected at least one line after the point".into(),
                        });
                    }
                }
                other => {
                    return Err(CoverError::Parse {
                        line: lineno,
                        msg: format!("unknown record `{other}`"),
                    })
                }
            }
        }
        let pairs: Vec<(&str, &str)> = on.iter().map(|(p, l)| (p.as_str(), l.as_str())).collect();
        Arrangement::new(points, lines, &pairs)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.point_index.get(name).copied()
    }

    pub fn line_index(&self, name: &str) -> Option<usize> {
        self.line_index.get(name).copied()
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.incidence.contains(&(point, line))
    }

    /// Indices of the lines through a point.
    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|l| self.incident(point, *l))
            .collect()
    }

    /// Indices of the points on a line.
    pub fn points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|p| self.incident(*p, line))
            .collect()
    }

    /// Number of lines through a point.
    pub fn multiplicity(&self, point: usize) -> usize {
        self.lines_through(point).len()
    }

    /// Total number of incidences.
    pub fn incidence_count(&self) -> usize {
        self.incidence.len()
    }

    /// Line pairs sharing no point; after blowing up all points these are
    /// exactly the double points that remain on the proper transforms.
    pub fn residual_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..self.lines.len() {
            let on_a = self.points_on(a);
            for b in (a + 1)..self.lines.len() {
                if !on_a.iter().any(|p| self.incident(*p, b)) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}
